#ifndef ITERROOT_CRITERIA_HPP
#define ITERROOT_CRITERIA_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iterroot/multifunction.hpp"
#include "iterroot/paths.hpp"

namespace iterroot {

// Finite nonexistence certificates for iterative roots of multifunctions.
//
// All four rules share one shape: a point x0 that is not a member of its own
// image, a "large" count Q measured at x0 and a "small" per-point bound N
// elsewhere. If Q > M*N^3 then no iterative root of any order n >= 2 exists
// in the bounded class (out-degree <= M for the forward rules, in-degree <= M
// for the inverse rules). If F itself lies in that class and also satisfies
// the complementary coverage condition, no root exists at all.
//
// Only sufficient conditions: a certificate that does not fire proves nothing.

enum class Rule { ForwardPaths, ForwardPoints, InversePaths, InversePoints };

enum class Conclusion { NoRootsInClass, NoRootsAtAll, NotApplicable };

enum class RootClass {
    OutDegreeAtMost,  // #G(x) <= M for every x
    InDegreeAtMost,   // #G^{-1}({x}) <= M for every x
};

inline constexpr Rule all_rules[] = {Rule::ForwardPaths, Rule::ForwardPoints, Rule::InversePaths,
                                     Rule::InversePoints};

inline std::string_view rule_name(Rule r) {
    switch (r) {
    case Rule::ForwardPaths: return "forward-paths";
    case Rule::ForwardPoints: return "forward-points";
    case Rule::InversePaths: return "inverse-paths";
    case Rule::InversePoints: return "inverse-points";
    }
    return "?";
}

inline Rule parse_rule(std::string_view s) {
    for (auto r : all_rules)
        if (rule_name(r) == s) return r;
    throw std::invalid_argument("unknown rule '" + std::string(s) + "'");
}

inline std::string_view rule_citation(Rule r) {
    switch (r) {
    case Rule::ForwardPaths:
        return "No-root theorem, large-vs-small finite sets: #P(X,x0;2) > M*N^3, #P(X,x;1) <= N";
    case Rule::ForwardPoints:
        return "No-root corollary (point form): #F^-2({x0}) > M*N^3, #F^-1({x}) <= N";
    case Rule::InversePaths:
        return "Inverse no-root corollary (path form): #P(x0,X;2) > M*N^3, #P(x,X;1) <= N";
    case Rule::InversePoints:
        return "Inverse no-root corollary (point form): #F^2(x0) > M*N^3, #F(x) <= N";
    }
    return "?";
}

inline std::string_view conclusion_name(Conclusion c) {
    switch (c) {
    case Conclusion::NoRootsInClass: return "no-roots-in-class";
    case Conclusion::NoRootsAtAll: return "no-roots-at-all";
    case Conclusion::NotApplicable: return "not-applicable";
    }
    return "?";
}

inline std::string_view root_class_name(RootClass c) {
    return c == RootClass::OutDegreeAtMost ? "max-out-degree" : "max-in-degree";
}

inline bool is_inverse(Rule r) { return r == Rule::InversePaths || r == Rule::InversePoints; }

// For the forward rules "totality" is Dom(F) = X and the extra condition is
// Im(F) = X; the inverse rules swap the two.
struct HypothesisChecklist {
    bool totality = false;
    bool x0_not_fixed = false;
    bool q_exceeds_mn3 = false;
    bool n_bound_holds = false;
    bool class_membership = false;
    bool surjectivity_or_totality_extra = false;

    bool base() const { return totality && x0_not_fixed && q_exceeds_mn3 && n_bound_holds; }
    bool extra() const { return class_membership && surjectivity_or_totality_extra; }

    friend bool operator==(const HypothesisChecklist&, const HypothesisChecklist&) = default;
};

struct Certificate {
    Rule rule;
    std::size_t x0;
    std::uint64_t m;
    std::uint64_t n;
    BigCount measured_q;
    BigCount measured_n_max;
    HypothesisChecklist checklist;
    Conclusion conclusion;

    bool fires() const { return conclusion != Conclusion::NotApplicable; }

    RootClass root_class() const {
        return is_inverse(rule) ? RootClass::InDegreeAtMost : RootClass::OutDegreeAtMost;
    }

    BigCount bound() const {
        BigCount nn = n;
        return BigCount(m) * nn * nn * nn;
    }

    // Every hypothesis that does not hold, in checklist order.
    std::vector<std::string> failed_hypotheses() const {
        std::vector<std::string> out;
        if (!checklist.totality) out.emplace_back("totality");
        if (!checklist.x0_not_fixed) out.emplace_back("x0_not_fixed");
        if (!checklist.q_exceeds_mn3) out.emplace_back("Q_exceeds_MN3");
        if (!checklist.n_bound_holds) out.emplace_back("N_bound_holds");
        if (!checklist.class_membership) out.emplace_back("class_membership");
        if (!checklist.surjectivity_or_totality_extra)
            out.emplace_back("surjectivity_or_totality_extra");
        return out;
    }

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

namespace detail {

// Quantities shared by every (rule, x0) pair on one multifunction.
struct CriteriaData {
    explicit CriteriaData(const Multifunction& f)
        : size(f.size()), total(f.is_total()), onto(f.is_onto()), in_deg(f.in_degrees()),
          out_deg(size), self_member(size), q(4, std::vector<BigCount>(size, 0)) {
        for (std::size_t x = 0; x < size; ++x) {
            out_deg[x] = f.out_degree(x);
            self_member[x] = f(x).contains(x);
        }
        const auto a2 = path_matrix(f, 2);
        const auto f2 = iterate(f, 2);
        for (std::size_t x = 0; x < size; ++x) {
            q[0][x] = a2.column_sum(x);
            q[2][x] = a2.row_sum(x);
            q[3][x] = f2(x).size();
            for (auto y : f2(x)) q[1][y] += 1;  // x in F^-2({y})
        }
    }

    std::size_t size;
    bool total;
    bool onto;
    std::vector<std::size_t> in_deg;
    std::vector<std::size_t> out_deg;
    std::vector<bool> self_member;
    std::vector<std::vector<BigCount>> q;  // indexed by Rule

    const std::vector<std::size_t>& bound_degrees(Rule r) const {
        return is_inverse(r) ? out_deg : in_deg;
    }
    const std::vector<std::size_t>& class_degrees(Rule r) const {
        return is_inverse(r) ? in_deg : out_deg;
    }

    std::size_t n_max(Rule r, std::size_t x0) const {
        const auto& deg = bound_degrees(r);
        std::size_t best = 0;
        for (std::size_t x = 0; x < size; ++x)
            if (x != x0) best = std::max(best, deg[x]);
        return best;
    }

    Certificate check(Rule r, std::size_t x0, std::uint64_t m, std::uint64_t n) const {
        if (x0 >= size) throw std::out_of_range("x0 out of range");
        if (m == 0 || n == 0) throw std::invalid_argument("M and N must be positive");
        const auto& cls = class_degrees(r);
        const std::size_t nmax = n_max(r, x0);

        Certificate c{r, x0, m, n, q[static_cast<std::size_t>(r)][x0], nmax, {}, Conclusion::NotApplicable};
        c.checklist.totality = is_inverse(r) ? onto : total;
        c.checklist.x0_not_fixed = !self_member[x0];
        c.checklist.q_exceeds_mn3 = c.measured_q > c.bound();
        c.checklist.n_bound_holds = nmax <= n;
        c.checklist.class_membership =
            std::all_of(cls.begin(), cls.end(), [m](std::size_t d) { return d <= m; });
        c.checklist.surjectivity_or_totality_extra = is_inverse(r) ? total : onto;

        if (c.checklist.base())
            c.conclusion = c.checklist.extra() ? Conclusion::NoRootsAtAll : Conclusion::NoRootsInClass;
        return c;
    }
};

} // namespace detail

inline Certificate check(const Multifunction& f, Rule rule, std::size_t x0, std::uint64_t m,
                         std::uint64_t n) {
    if (x0 >= f.size()) throw std::out_of_range("x0 out of range");
    if (m == 0 || n == 0) throw std::invalid_argument("M and N must be positive");
    return detail::CriteriaData(f).check(rule, x0, m, n);
}

// Q = #P_F(X, x0; 2), per-point bound #P_F(X, x; 1) <= N
inline Certificate check_forward_paths(const Multifunction& f, std::size_t x0, std::uint64_t m,
                                       std::uint64_t n) {
    return check(f, Rule::ForwardPaths, x0, m, n);
}

// Q = #F^-2({x0}), per-point bound #F^-1({x}) <= N
inline Certificate check_forward_points(const Multifunction& f, std::size_t x0, std::uint64_t m,
                                        std::uint64_t n) {
    return check(f, Rule::ForwardPoints, x0, m, n);
}

// Q = #P_F(x0, X; 2), per-point bound #P_F(x, X; 1) <= N
inline Certificate check_inverse_paths(const Multifunction& f, std::size_t x0, std::uint64_t m,
                                       std::uint64_t n) {
    return check(f, Rule::InversePaths, x0, m, n);
}

// Q = #F^2(x0), per-point bound #F(x) <= N
inline Certificate check_inverse_points(const Multifunction& f, std::size_t x0, std::uint64_t m,
                                        std::uint64_t n) {
    return check(f, Rule::InversePoints, x0, m, n);
}

// Smallest admissible N for (rule, x0): the largest relevant 1-count away
// from x0, but at least 1.
inline std::uint64_t minimal_n(const Multifunction& f, Rule rule, std::size_t x0) {
    if (x0 >= f.size()) throw std::out_of_range("x0 out of range");
    return std::max<std::uint64_t>(1, detail::CriteriaData(f).n_max(rule, x0));
}

// Every firing certificate over all rules and witnesses x0, with N chosen
// minimal per witness. Ordered by rule, then x0.
inline std::vector<Certificate> scan(const Multifunction& f, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("M must be positive");
    const detail::CriteriaData data(f);
    std::vector<Certificate> out;
    for (auto r : all_rules)
        for (std::size_t x0 = 0; x0 < f.size(); ++x0) {
            const std::uint64_t n = std::max<std::size_t>(1, data.n_max(r, x0));
            auto c = data.check(r, x0, m, n);
            if (c.fires()) out.push_back(std::move(c));
        }
    return out;
}

} // namespace iterroot

#endif
