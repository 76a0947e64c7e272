#ifndef ITERROOT_POLY_HPP
#define ITERROOT_POLY_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace iterroot {

using Complex = std::complex<double>;

// Complex polynomial, coefficients low degree first. Trailing exact zeros
// are dropped; the zero polynomial is rejected.
class ComplexPolynomial {
public:
    explicit ComplexPolynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back() == Complex(0.0, 0.0)) c_.pop_back();
        if (c_.empty()) throw std::invalid_argument("zero polynomial");
    }

    // z^d
    static ComplexPolynomial monomial(std::size_t d, Complex scale = 1.0) {
        std::vector<Complex> c(d + 1, 0.0);
        c[d] = scale;
        return ComplexPolynomial(std::move(c));
    }

    // may be zero, for use in arithmetic
    static ComplexPolynomial constant(Complex v) { return ComplexPolynomial(std::vector<Complex>{v}, true); }

    std::size_t degree() const { return c_.size() - 1; }
    const std::vector<Complex>& coefficients() const { return c_; }
    Complex coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Complex(0.0); }
    Complex leading() const { return c_.back(); }

    Complex operator()(Complex z) const {
        Complex acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    ComplexPolynomial derivative() const {
        if (c_.size() == 1) return constant(0.0);
        std::vector<Complex> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
        return ComplexPolynomial(std::move(d), true);
    }

    // sum |a_k| |z|^k, the natural scale of rounding error in p(z)
    double magnitude_at(Complex z) const {
        double acc = 0.0;
        const double r = std::abs(z);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * r + std::abs(*it);
        return acc;
    }

    bool is_zero() const { return c_.size() == 1 && c_[0] == Complex(0.0); }

    friend ComplexPolynomial operator-(ComplexPolynomial p, Complex v) {
        p.c_[0] -= v;
        return ComplexPolynomial(std::move(p.c_), true);
    }
    friend ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b) {
        std::vector<Complex> c(std::max(a.c_.size(), b.c_.size()), 0.0);
        for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
        return ComplexPolynomial(std::move(c), true);
    }
    friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
        std::vector<Complex> c(a.c_.size() + b.c_.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return ComplexPolynomial(std::move(c), true);
    }

    // p(q(z))
    ComplexPolynomial compose(const ComplexPolynomial& q) const {
        ComplexPolynomial acc(std::vector<Complex>{c_.back()}, true);
        for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * q + ComplexPolynomial({c_[k]}, true);
        return acc;
    }

private:
    // Internal constructor that tolerates the zero polynomial.
    ComplexPolynomial(std::vector<Complex> coeffs, bool) : c_(std::move(coeffs)) {
        while (c_.size() > 1 && c_.back() == Complex(0.0, 0.0)) c_.pop_back();
        if (c_.empty()) c_.push_back(0.0);
    }

    std::vector<Complex> c_;
};

// All complex roots with multiplicity, as eigenvalues of the companion matrix.
inline std::vector<Complex> polynomial_roots(const ComplexPolynomial& p) {
    const auto d = p.degree();
    if (d == 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 1; i < d; ++i)
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < d; ++i)
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) = -p.coefficient(i) / p.leading();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("companion eigenvalue solve failed");
    std::vector<Complex> roots;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) roots.push_back(solver.eigenvalues()(i));
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

struct RootCluster {
    Complex center;
    std::size_t multiplicity;
};

inline constexpr double fixed_point_cluster_tolerance = 1e-7;
inline constexpr double coefficient_match_tolerance = 1e-9;

namespace detail {

// Relative residual bound for accepting a centroid as a root of multiplicity m.
inline constexpr double multiplicity_residual = 1e-10;

inline bool is_multiple_root(const ComplexPolynomial& p, Complex c, std::size_t m) {
    auto q = p;
    for (std::size_t j = 0; j < m; ++j) {
        if (std::abs(q(c)) > multiplicity_residual * std::max(q.magnitude_at(c), 1e-300)) return false;
        q = q.derivative();
    }
    return true;
}

inline std::vector<std::vector<Complex>> single_linkage(const std::vector<Complex>& pts, double radius) {
    const auto n = pts.size();
    std::vector<std::size_t> comp(n);
    for (std::size_t i = 0; i < n; ++i) comp[i] = i;
    // n <= degree, so quadratic relabelling is fine
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(pts[i] - pts[j]) <= radius && comp[i] != comp[j]) {
                const auto from = comp[j], to = comp[i];
                for (auto& c : comp)
                    if (c == from) c = to;
            }
    std::vector<std::vector<Complex>> out;
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < n; ++i) {
        auto it = std::find(ids.begin(), ids.end(), comp[i]);
        if (it == ids.end()) {
            ids.push_back(comp[i]);
            out.push_back({});
            it = ids.end() - 1;
        }
        out[static_cast<std::size_t>(it - ids.begin())].push_back(pts[i]);
    }
    return out;
}

inline void cluster_into(const ComplexPolynomial& p, const std::vector<Complex>& pts, double radius,
                         double tol, std::vector<RootCluster>& out) {
    for (const auto& group : single_linkage(pts, radius)) {
        Complex c = 0.0;
        for (auto z : group) c += z;
        c /= static_cast<double>(group.size());
        if (group.size() == 1 || is_multiple_root(p, c, group.size()) || radius <= tol) {
            out.push_back({c, group.size()});
            continue;
        }
        cluster_into(p, group, std::max(radius / 10.0, tol), tol, out);
    }
}

} // namespace detail

// Distinct roots of p. Eigenvalues near a root of multiplicity m spread by
// about eps^(1/m), so groups are first formed at coarse radii and kept whole
// only when their centroid is numerically an m-fold root; otherwise they are
// split at finer radii down to the absolute tolerance `tol`.
inline std::vector<RootCluster> distinct_roots(const ComplexPolynomial& p,
                                               double tol = fixed_point_cluster_tolerance) {
    const auto roots = polynomial_roots(p);
    double scale = 1.0;
    for (auto r : roots) scale = std::max(scale, std::abs(r));
    std::vector<RootCluster> out;
    detail::cluster_into(p, roots, 0.1 * scale, tol, out);
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        return a.center.real() != b.center.real() ? a.center.real() < b.center.real()
                                                  : a.center.imag() < b.center.imag();
    });
    return out;
}

inline std::vector<RootCluster> fixed_points(const ComplexPolynomial& f) {
    return distinct_roots(f + ComplexPolynomial({0.0, -1.0}));
}

namespace detail {
inline bool same_polynomial(const ComplexPolynomial& p, const ComplexPolynomial& q, double tol);
} // namespace detail

// A fixed point c is isolated iff c is its own only preimage, i.e.
// f(z) - c = a (z - c)^d. This is checked on coefficients: the roots of
// f(z) - c near a d-fold root spread by eps^(1/d) and are useless here.
inline std::size_t count_non_isolated_fixed_points(const ComplexPolynomial& f,
                                                   double tol = coefficient_match_tolerance) {
    std::size_t count = 0;
    const auto d = f.degree();
    for (const auto& fp : fixed_points(f)) {
        const auto isolated_form = ComplexPolynomial::monomial(d, f.leading()).compose(ComplexPolynomial({-fp.center, 1.0}));
        if (!detail::same_polynomial(f - fp.center, isolated_form, tol)) ++count;
    }
    return count;
}

namespace detail {

inline bool close(Complex a, Complex b, double scale, double tol) {
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), scale});
}

inline bool same_polynomial(const ComplexPolynomial& p, const ComplexPolynomial& q, double tol) {
    const auto d = std::max(p.degree(), q.degree());
    const double scale = std::abs(p.leading());
    for (std::size_t k = 0; k <= d; ++k)
        if (!close(p.coefficient(k), q.coefficient(k), scale, tol)) return false;
    return true;
}

} // namespace detail

struct ShiftedMonomial {
    Complex alpha;
    Complex beta;
};

// Matches f = alpha (z - beta)^d + beta coefficient by coefficient.
inline std::optional<ShiftedMonomial> match_shifted_monomial(const ComplexPolynomial& f,
                                                            double tol = coefficient_match_tolerance) {
    const auto d = f.degree();
    if (d < 2) return std::nullopt;
    const Complex alpha = f.leading();
    const Complex beta = -f.coefficient(d - 1) / (static_cast<double>(d) * alpha);
    const auto shifted = ComplexPolynomial::monomial(d, alpha).compose(ComplexPolynomial({-beta, 1.0}));
    const auto expected = shifted + ComplexPolynomial::constant(beta);
    if (!detail::same_polynomial(f, expected, tol)) return std::nullopt;
    return ShiftedMonomial{alpha, beta};
}

// Whether the cubic f equals h o p o h^{-1} for p(z) = z^3 - z^2 + z and some
// h(z) = alpha z + beta. The leading coefficient fixes alpha up to sign and
// the z^2 coefficient then fixes beta.
inline bool is_conjugate_to_special_cubic(const ComplexPolynomial& f, double tol = coefficient_match_tolerance) {
    if (f.degree() != 3) return false;
    const ComplexPolynomial p({0.0, 1.0, -1.0, 1.0});
    const Complex root = std::sqrt(f.leading());
    for (Complex alpha : {1.0 / root, -1.0 / root}) {
        const Complex beta = -(f.coefficient(2) + 1.0 / alpha) * alpha * alpha / 3.0;
        // h^{-1}(w) = (w - beta) / alpha
        const ComplexPolynomial hinv({-beta / alpha, 1.0 / alpha});
        auto conj = p.compose(hinv);
        conj = conj * ComplexPolynomial::constant(alpha) + ComplexPolynomial::constant(beta);
        if (detail::same_polynomial(f, conj, tol)) return true;
    }
    return false;
}

// ---- exact number-theoretic rules ----

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

// d^p != d (mod p^2) for every prime p <= d
inline bool solar_criterion(std::uint64_t d) {
    using boost::multiprecision::cpp_int;
    if (d < 2) throw std::invalid_argument("solar criterion needs d >= 2");
    for (auto p : primes_up_to(d)) {
        const cpp_int mod = cpp_int(p) * p;
        const cpp_int lhs = boost::multiprecision::powm(cpp_int(d), cpp_int(p), mod);
        if (lhs == cpp_int(d) % mod) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> first_solar(std::size_t count) {
    if (count == 0) throw std::invalid_argument("count must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; out.size() < count; ++d)
        if (solar_criterion(d)) out.push_back(d);
    return out;
}

// ---- advice ----

struct ExcludedOrders {
    enum class Kind { All, Above, PrimesAbove, Exactly };
    Kind kind = Kind::All;
    std::uint64_t value = 0;

    bool contains(std::uint64_t n) const {
        if (n < 2) return false;
        switch (kind) {
        case Kind::All: return true;
        case Kind::Above: return n > value;
        case Kind::PrimesAbove: return n > value && is_prime(n);
        case Kind::Exactly: return n == value;
        }
        return false;
    }

    std::string describe() const {
        switch (kind) {
        case Kind::All: return "all n >= 2";
        case Kind::Above: return "n > " + std::to_string(value);
        case Kind::PrimesAbove: return "prime n > " + std::to_string(value);
        case Kind::Exactly: return "n = " + std::to_string(value);
        }
        return "?";
    }
};

enum class PolyRule { Quadratic, Solar, RiceDegree, PrimeOrder, CubicSpecial, ShiftedMonomialPrime };

inline std::string_view poly_rule_name(PolyRule r) {
    switch (r) {
    case PolyRule::Quadratic: return "quadratic";
    case PolyRule::Solar: return "solar";
    case PolyRule::RiceDegree: return "rice-degree";
    case PolyRule::PrimeOrder: return "prime-order";
    case PolyRule::CubicSpecial: return "cubic-special";
    case PolyRule::ShiftedMonomialPrime: return "shifted-monomial-prime";
    }
    return "?";
}

inline std::string_view poly_rule_citation(PolyRule r) {
    switch (r) {
    case PolyRule::Quadratic: return "complex quadratics have no iterative roots of any order (Rice; Choczewski)";
    case PolyRule::Solar: return "z^d has no iterative roots if d^p != d mod p^2 for all primes p <= d (Solar)";
    case PolyRule::RiceDegree: return "degree-d polynomials have no iterative roots of order n > d(d-1) (Rice)";
    case PolyRule::PrimeOrder: return "degree-d polynomials have no iterative roots of prime order n > d (Choczewski)";
    case PolyRule::CubicSpecial:
        return "cubics with < 3 distinct fixed points, not conjugate to z^3 - z^2 + z, have no iterative roots (Choczewski)";
    case PolyRule::ShiftedMonomialPrime:
        return "alpha (z - beta)^d + beta with d prime has no iterative roots of order d (non-isolated fixed points)";
    }
    return "?";
}

struct PolyFinding {
    PolyRule rule;
    bool hypotheses_hold = false;  // rule preconditions on the polynomial
    bool applicable = false;       // hypotheses hold and the queried order is excluded
    ExcludedOrders excluded;
    std::optional<double> tolerance;  // numeric rules only
    std::string note;
};

// The advice speaks about f and equally about its pullback multifunction.
// It only ever asserts nonexistence.
struct PolyAdvice {
    std::uint64_t order;
    std::size_t degree;
    std::vector<PolyFinding> findings;  // one entry per rule, fixed order

    std::vector<PolyFinding> fired() const {
        std::vector<PolyFinding> out;
        for (const auto& f : findings)
            if (f.applicable) out.push_back(f);
        return out;
    }
    const PolyFinding& finding(PolyRule r) const {
        for (const auto& f : findings)
            if (f.rule == r) return f;
        throw std::out_of_range("rule not evaluated");
    }
};

inline bool is_exact_monomial(const ComplexPolynomial& f) {
    if (f.leading() != Complex(1.0, 0.0)) return false;
    for (std::size_t k = 0; k < f.degree(); ++k)
        if (f.coefficient(k) != Complex(0.0, 0.0)) return false;
    return true;
}

inline PolyAdvice advise(const ComplexPolynomial& f, std::uint64_t n) {
    const auto d = f.degree();
    if (d < 2) throw std::invalid_argument("polynomial degree must be at least 2");
    if (n < 2) throw std::invalid_argument("root order must be at least 2");
    PolyAdvice advice{n, d, {}};
    auto add = [&](PolyRule r, bool hyp, ExcludedOrders ex, std::optional<double> tol, std::string note) {
        advice.findings.push_back({r, hyp, hyp && ex.contains(n), ex, tol, std::move(note)});
    };
    using K = ExcludedOrders::Kind;

    add(PolyRule::Quadratic, d == 2, {K::All, 0}, std::nullopt, "");

    const bool monomial = is_exact_monomial(f);
    add(PolyRule::Solar, monomial && solar_criterion(d), {K::All, 0}, std::nullopt,
        monomial ? (solar_criterion(d) ? "criterion holds" : "criterion fails") : "not z^d");

    add(PolyRule::RiceDegree, true, {K::Above, static_cast<std::uint64_t>(d * (d - 1))}, std::nullopt, "");
    add(PolyRule::PrimeOrder, true, {K::PrimesAbove, d}, std::nullopt, "");

    if (d == 3) {
        const auto fps = fixed_points(f);
        const bool conj = is_conjugate_to_special_cubic(f);
        add(PolyRule::CubicSpecial, fps.size() < 3 && !conj, {K::All, 0}, coefficient_match_tolerance,
            std::to_string(fps.size()) + " distinct fixed points (clustered at 1e-7)" +
                (conj ? ", conjugate to z^3 - z^2 + z" : ""));
    } else {
        add(PolyRule::CubicSpecial, false, {K::All, 0}, coefficient_match_tolerance, "degree is not 3");
    }

    const auto shifted = match_shifted_monomial(f);
    std::string note = shifted ? "matches alpha (z - beta)^d + beta" : "not of the form alpha (z - beta)^d + beta";
    if (shifted && !is_prime(d)) note += "; degree not prime";
    add(PolyRule::ShiftedMonomialPrime, shifted && is_prime(d), {K::Exactly, d}, coefficient_match_tolerance, note);
    return advice;
}

// ---- text input ----

// "re", "imi", "re+imi" or "re-imi"; a bare "i" means 1i.
inline Complex parse_complex(std::string_view s) {
    auto bad = [&] { return std::invalid_argument("invalid complex number '" + std::string(s) + "'"); };
    auto parse_real = [&](std::string_view t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        if (t.front() == '+') t.remove_prefix(1);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || ptr != t.data() + t.size()) throw bad();
        return v;
    };
    if (s.empty()) throw bad();
    if (s.back() != 'i') {
        if (s.front() == '+') s.remove_prefix(1);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) throw bad();
        return {v, 0.0};
    }
    const auto body = s.substr(0, s.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;)
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    if (split == std::string_view::npos) return {0.0, parse_real(body)};
    const auto re = body.substr(0, split);
    if (re.empty()) throw bad();
    return {parse_real(re), parse_real(body.substr(split))};
}

inline ComplexPolynomial parse_coefficients(std::string_view list) {
    std::vector<Complex> c;
    std::size_t pos = 0;
    while (true) {
        const auto comma = list.find(',', pos);
        c.push_back(parse_complex(list.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return ComplexPolynomial(std::move(c));
}

} // namespace iterroot

#endif
