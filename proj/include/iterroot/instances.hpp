#ifndef ITERROOT_INSTANCES_HPP
#define ITERROOT_INSTANCES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "iterroot/multifunction.hpp"

namespace iterroot {

// Finite versions of the worked examples and seeded random generators.
//
// Label scheme: x0, x1, ... for forward chain points; xm<i>_<j> stands for
// the j-th point at depth -i of a backward chain (x_{-i}^{(j)}).

namespace instances {

// Bit-for-bit reproducible randomness: mt19937_64 is fully specified by the
// standard; the distributions are not, so bounded draws are done here.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("empty range");
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    // uniform in [0, 1)
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

namespace detail {

class Builder {
public:
    std::size_t add(std::string label) {
        labels_.push_back(std::move(label));
        return labels_.size() - 1;
    }
    void edge(std::size_t x, std::size_t y) { edges_.emplace_back(x, y); }
    Multifunction build() const { return Multifunction::from_edges(GroundSet(labels_), edges_); }

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

inline std::string back_label(std::size_t depth, std::size_t branch) {
    return "xm" + std::to_string(depth) + "_" + std::to_string(branch);
}

} // namespace detail

// F1 truncated at depth D >= 3. Forward chain x0 -> x1 -> ... -> xD; four
// points feeding x0; two set-value points at depth -2 and two backward
// chains to depth -D. The chain end xD is closed into the tail of backward
// chain 1, which keeps every in-degree outside x0 at most 1 and x0's
// 2-path count at 4; the tail of chain 2 stays without a preimage.
inline Multifunction f1(std::size_t depth = 3) {
    if (depth < 3) throw std::invalid_argument("f1 needs depth >= 3");
    detail::Builder b;
    std::vector<std::size_t> fwd;
    for (std::size_t i = 0; i <= depth; ++i) fwd.push_back(b.add("x" + std::to_string(i)));
    std::vector<std::size_t> m1;
    for (std::size_t j = 1; j <= 4; ++j) m1.push_back(b.add(detail::back_label(1, j)));
    // back[i][j]: depth i+2, branch j+1
    std::vector<std::vector<std::size_t>> back;
    for (std::size_t i = 2; i <= depth; ++i)
        back.push_back({b.add(detail::back_label(i, 1)), b.add(detail::back_label(i, 2))});

    for (std::size_t i = 0; i < depth; ++i) b.edge(fwd[i], fwd[i + 1]);
    for (auto p : m1) b.edge(p, fwd[0]);
    b.edge(back[0][0], m1[0]);
    b.edge(back[0][0], m1[1]);
    b.edge(back[0][1], m1[2]);
    b.edge(back[0][1], m1[3]);
    for (std::size_t i = 1; i < back.size(); ++i)
        for (std::size_t j = 0; j < 2; ++j) b.edge(back[i][j], back[i - 1][j]);
    b.edge(fwd[depth], back.back()[0]);
    return b.build();
}

// F2 truncated at depth D >= 2. x0 maps onto two forward chains of length D;
// three points feed x0 from three backward chains of depth D. The forward
// chain ends are closed onto the three backward tails (chain 1 end onto
// tails 1 and 2, chain 2 end onto tail 3), so Dom = Im = X and every image
// has at most 2 points.
inline Multifunction f2(std::size_t depth = 2) {
    if (depth < 2) throw std::invalid_argument("f2 needs depth >= 2");
    detail::Builder b;
    const auto x0 = b.add("x0");
    std::vector<std::vector<std::size_t>> fwd;  // fwd[i][j]: x_{i+1}^{(j+1)}
    for (std::size_t i = 1; i <= depth; ++i)
        fwd.push_back({b.add("x" + std::to_string(i) + "_1"), b.add("x" + std::to_string(i) + "_2")});
    std::vector<std::vector<std::size_t>> back;  // back[i][j]: x_{-(i+1)}^{(j+1)}
    for (std::size_t i = 1; i <= depth; ++i)
        back.push_back({b.add(detail::back_label(i, 1)), b.add(detail::back_label(i, 2)),
                        b.add(detail::back_label(i, 3))});

    b.edge(x0, fwd[0][0]);
    b.edge(x0, fwd[0][1]);
    for (std::size_t i = 0; i + 1 < depth; ++i)
        for (std::size_t j = 0; j < 2; ++j) b.edge(fwd[i][j], fwd[i + 1][j]);
    for (auto p : back[0]) b.edge(p, x0);
    for (std::size_t i = 1; i < depth; ++i)
        for (std::size_t j = 0; j < 3; ++j) b.edge(back[i][j], back[i - 1][j]);
    b.edge(fwd.back()[0], back.back()[0]);
    b.edge(fwd.back()[0], back.back()[1]);
    b.edge(fwd.back()[1], back.back()[2]);
    return b.build();
}

// The 20-point pair with g^4 = f: points x1..x4, y<j>_<i>, z<j>_<i>.
inline GroundSet tails20_ground() {
    std::vector<std::string> labels;
    for (int j = 1; j <= 4; ++j) labels.push_back("x" + std::to_string(j));
    for (const char* p : {"y", "z"})
        for (int j = 1; j <= 4; ++j)
            for (int i = 1; i <= 2; ++i)
                labels.push_back(p + std::to_string(j) + "_" + std::to_string(i));
    return GroundSet(std::move(labels));
}

namespace detail {
inline std::size_t fx(int j) { return static_cast<std::size_t>(j - 1); }
inline std::size_t fy(int j, int i) { return static_cast<std::size_t>(4 + (j - 1) * 2 + (i - 1)); }
inline std::size_t fz(int j, int i) { return static_cast<std::size_t>(12 + (j - 1) * 2 + (i - 1)); }
} // namespace detail

inline SingleMap tails20_f() {
    using namespace detail;
    std::vector<std::size_t> img(20);
    for (int j = 1; j <= 4; ++j) {
        img[fx(j)] = fx(j);
        for (int i = 1; i <= 2; ++i) {
            img[fy(j, i)] = fx(j);
            img[fz(j, i)] = fy(j, i);
        }
    }
    return {tails20_ground(), std::move(img)};
}

inline SingleMap tails20_g() {
    using namespace detail;
    std::vector<std::size_t> img(20);
    for (int j = 1; j <= 4; ++j) {
        img[fx(j)] = fx(j % 4 + 1);
        for (int i = 1; i <= 2; ++i) {
            img[fy(j, i)] = j <= 3 ? fy(j + 1, i) : fx(1);
            img[fz(j, i)] = j <= 3 ? fz(j + 1, i) : fy(1, i);
        }
    }
    return {tails20_ground(), std::move(img)};
}

enum class CyclicVariant { Add, Multiply };

// x -> x + e (mod q) or x -> e * x (mod q) on points labelled 0..q-1.
inline SingleMap cyclic_power(std::size_t modulus, std::size_t exponent,
                              CyclicVariant variant = CyclicVariant::Add) {
    if (modulus == 0) throw std::invalid_argument("modulus must be positive");
    std::vector<std::string> labels;
    std::vector<std::size_t> img(modulus);
    for (std::size_t x = 0; x < modulus; ++x) {
        labels.push_back(std::to_string(x));
        img[x] = variant == CyclicVariant::Add ? (x + exponent) % modulus : (x * exponent) % modulus;
    }
    return {GroundSet(std::move(labels)), std::move(img)};
}

// Exactly min(round(density * size^2), size * max_out) edges, drawn
// uniformly over point pairs subject to out-degree <= max_out.
inline Multifunction random_multifunction(std::size_t size, std::size_t max_out, double density,
                                          std::uint64_t seed) {
    if (size == 0) throw std::invalid_argument("size must be positive");
    if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
    max_out = std::min(max_out, size);
    const auto want = std::min<std::size_t>(
        static_cast<std::size_t>(std::llround(density * static_cast<double>(size * size))), size * max_out);
    SeededRng rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y) pairs.emplace_back(x, y);
    rng.shuffle(pairs);
    std::vector<std::size_t> deg(size, 0);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto [x, y] : pairs) {
        if (edges.size() == want) break;
        if (deg[x] == max_out) continue;
        ++deg[x];
        edges.emplace_back(x, y);
    }
    return Multifunction::from_edges(GroundSet::indexed(size), edges);
}

// Uniform total map, or a uniform permutation when surjective.
inline SingleMap random_map(std::size_t size, std::uint64_t seed, bool surjective = false) {
    if (size == 0) throw std::invalid_argument("size must be positive");
    SeededRng rng(seed);
    std::vector<std::size_t> img(size);
    if (surjective) {
        for (std::size_t i = 0; i < size; ++i) img[i] = i;
        rng.shuffle(img);
    } else {
        for (auto& y : img) y = rng.below(size);
    }
    return {GroundSet::indexed(size), std::move(img)};
}

// Named-instance front end used by the CLI.
struct InstanceSpec {
    std::string name;
    std::optional<std::size_t> depth;
    std::optional<std::size_t> modulus;
    std::optional<std::size_t> exponent;
    std::optional<std::string> variant;  // "add" | "mul"
    std::optional<std::size_t> size;
    std::optional<std::size_t> max_out_degree;
    std::optional<double> density;
    std::optional<std::uint64_t> seed;
    bool surjective = false;
};

using Instance = std::variant<Multifunction, SingleMap>;

inline Instance build(const InstanceSpec& spec) {
    constexpr std::size_t max_size = 64;
    auto size_of = [&] {
        const auto s = spec.size.value_or(5);
        if (s == 0 || s > max_size) throw std::invalid_argument("size must lie in [1, 64]");
        return s;
    };
    constexpr std::size_t max_depth = 1000;
    if ((spec.name == "f1" || spec.name == "f2") && spec.depth.value_or(0) > max_depth)
        throw std::invalid_argument("depth must not exceed 1000");
    if (spec.name == "f1") return f1(spec.depth.value_or(3));
    if (spec.name == "f2") return f2(spec.depth.value_or(2));
    if (spec.name == "tails20-f") return tails20_f();
    if (spec.name == "tails20-g") return tails20_g();
    if (spec.name == "cyclic-power") {
        const auto v = spec.variant.value_or("add");
        if (v != "add" && v != "mul") throw std::invalid_argument("variant must be add or mul");
        const auto q = spec.modulus.value_or(8);
        if (q == 0 || q > max_size) throw std::invalid_argument("modulus must lie in [1, 64]");
        return cyclic_power(q, spec.exponent.value_or(1), v == "add" ? CyclicVariant::Add : CyclicVariant::Multiply);
    }
    if (spec.name == "random-mf") {
        const auto s = size_of();
        return random_multifunction(s, spec.max_out_degree.value_or(s), spec.density.value_or(0.3),
                                    spec.seed.value_or(0));
    }
    if (spec.name == "random-map") return random_map(size_of(), spec.seed.value_or(0), spec.surjective);
    throw std::invalid_argument("unknown instance '" + spec.name + "'");
}

} // namespace instances
} // namespace iterroot

#endif
