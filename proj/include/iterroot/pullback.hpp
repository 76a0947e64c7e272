#ifndef ITERROOT_PULLBACK_HPP
#define ITERROOT_PULLBACK_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iterroot/multifunction.hpp"

namespace iterroot {

// Pullback multifunctions x -> f^{-1}({x}) of single-valued maps.

enum class PullbackCondition { Disjointness, Surjectivity, Totality };

inline std::string_view condition_name(PullbackCondition c) {
    switch (c) {
    case PullbackCondition::Disjointness: return "disjointness";
    case PullbackCondition::Surjectivity: return "surjectivity";
    case PullbackCondition::Totality: return "totality";
    }
    return "?";
}

struct PullbackWitness {
    bool is_pullback = false;
    std::optional<SingleMap> witness_map;
    std::vector<PullbackCondition> failed_conditions;
};

inline Multifunction pullback_of(const SingleMap& f) {
    std::vector<PointSet> images(f.size(), PointSet(f.size()));
    for (std::size_t y = 0; y < f.size(); ++y) images[f(y)].insert(y);
    return {f.ground(), std::move(images)};
}

inline bool has_disjoint_values(const Multifunction& f) {
    PointSet seen(f.size());
    for (const auto& img : f.images()) {
        if (img.intersects(seen)) return false;
        seen |= img;
    }
    return true;
}

// F is a pullback iff Dom(F) = X, its values are pairwise disjoint and
// Im(F) = X. The witness is f(x) = y iff x in F(y). All failing conditions
// are reported.
inline PullbackWitness is_pullback(const Multifunction& f) {
    PullbackWitness w;
    if (!has_disjoint_values(f)) w.failed_conditions.push_back(PullbackCondition::Disjointness);
    if (!f.is_onto()) w.failed_conditions.push_back(PullbackCondition::Surjectivity);
    if (!f.is_total()) w.failed_conditions.push_back(PullbackCondition::Totality);
    if (!w.failed_conditions.empty()) return w;

    std::vector<std::size_t> img(f.size());
    for (std::size_t y = 0; y < f.size(); ++y)
        for (auto x : f(y)) img[x] = y;
    w.is_pullback = true;
    w.witness_map.emplace(f.ground(), std::move(img));
    return w;
}

// Outcome of checking a factorisation F = G1 o G2 of a pullback F.
struct DecompositionReport {
    bool applicable = false;
    std::vector<std::string> inapplicable_reasons;
    bool g1_onto = false;            // Im(G1) = X
    bool g2_disjoint = false;        // G2 has pairwise disjoint values
    std::optional<bool> root_is_pullback;  // set when checking an n-th root G

    bool conclusions_hold() const {
        return applicable && g1_onto && g2_disjoint && root_is_pullback.value_or(true);
    }
};

inline DecompositionReport decomposition_check(const Multifunction& f, const Multifunction& g1,
                                               const Multifunction& g2) {
    DecompositionReport r;
    if (!(f.ground() == g1.ground()) || !(f.ground() == g2.ground()))
        throw std::invalid_argument("ground set mismatch");
    if (!(compose(g1, g2) == f)) r.inapplicable_reasons.emplace_back("G1 o G2 != F");
    if (!f.is_total()) r.inapplicable_reasons.emplace_back("Dom(F) != X");
    if (!g1.is_total()) r.inapplicable_reasons.emplace_back("Dom(G1) != X");
    if (!g2.is_total()) r.inapplicable_reasons.emplace_back("Dom(G2) != X");
    if (!is_pullback(f).is_pullback) r.inapplicable_reasons.emplace_back("F is not a pullback");
    r.applicable = r.inapplicable_reasons.empty();
    if (!r.applicable) return r;
    r.g1_onto = g1.is_onto();
    r.g2_disjoint = has_disjoint_values(g2);
    return r;
}

// Checks an n-th root G of a pullback F via both factorisations
// G o G^{n-1} and G^{n-1} o G, and whether G is itself a pullback.
inline DecompositionReport decomposition_check_root(const Multifunction& f, const Multifunction& g,
                                                    std::size_t n) {
    if (n < 2) throw std::invalid_argument("root order must be at least 2");
    const auto gn1 = iterate(g, n - 1);
    auto r = decomposition_check(f, g, gn1);
    if (!r.applicable) return r;
    const auto swapped = decomposition_check(f, gn1, g);
    r.g1_onto = r.g1_onto && swapped.g1_onto;
    r.g2_disjoint = r.g2_disjoint && swapped.g2_disjoint;
    r.root_is_pullback = is_pullback(g).is_pullback;
    return r;
}

struct TransferReport {
    bool applicable = false;
    bool map_root = false;       // g^n = f
    bool pullback_root = false;  // G^n = F for G, F the pullbacks of g, f
    bool agree() const { return map_root == pullback_root; }
};

inline TransferReport transfer_root(const SingleMap& f, const SingleMap& g, std::size_t n) {
    if (!(f.ground() == g.ground())) throw std::invalid_argument("ground set mismatch");
    if (n < 2) throw std::invalid_argument("root order must be at least 2");
    TransferReport r;
    if (!f.is_onto()) return r;
    r.applicable = true;
    r.map_root = iterate(g, n) == f;
    r.pullback_root = iterate(pullback_of(g), n) == pullback_of(f);
    return r;
}

} // namespace iterroot

#endif
