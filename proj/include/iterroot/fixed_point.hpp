#ifndef ITERROOT_FIXED_POINT_HPP
#define ITERROOT_FIXED_POINT_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "iterroot/multifunction.hpp"

namespace iterroot {

struct FixedPointInfo {
    std::size_t point;
    bool isolated;
    PointSet tail;                         // f^{-1}({x}) \ {x}
    std::vector<bool> tail_has_preimage;   // parallel to tail.to_vector()
};

struct FixedPointProfile {
    std::vector<FixedPointInfo> fixed_points;
    // # of the union of tails over non-isolated fixed points
    std::size_t tail_union_size = 0;

    std::vector<std::size_t> non_isolated() const {
        std::vector<std::size_t> out;
        for (const auto& fp : fixed_points)
            if (!fp.isolated) out.push_back(fp.point);
        return out;
    }
};

// Orders n excluded as root orders: n > lower_bound and, when
// forbidden_divisor_max = k is present, no m in [2, k] divides n.
struct OrderExclusion {
    std::size_t lower_bound = 0;
    std::optional<std::size_t> forbidden_divisor_max;
    std::string source;

    bool excludes(std::size_t n) const {
        if (n <= lower_bound) return false;
        if (forbidden_divisor_max)
            for (std::size_t m = 2; m <= *forbidden_divisor_max; ++m)
                if (n % m == 0) return false;
        return true;
    }

    friend bool operator==(const OrderExclusion&, const OrderExclusion&) = default;
};

inline FixedPointProfile fixed_point_profile(const SingleMap& f) {
    FixedPointProfile p;
    std::vector<bool> has_preimage(f.size(), false);
    for (std::size_t x = 0; x < f.size(); ++x) has_preimage[f(x)] = true;

    PointSet tails(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (f(x) != x) continue;
        auto tail = f.preimage(x);
        tail.erase(x);
        FixedPointInfo info{x, tail.empty(), tail, {}};
        for (auto y : tail) info.tail_has_preimage.push_back(has_preimage[y]);
        if (!info.isolated) tails |= tail;
        p.fixed_points.push_back(std::move(info));
    }
    p.tail_union_size = tails.size();
    return p;
}

// A non-isolated fixed point with some tail point that has a preimage rules
// out every order n > L, where L counts all tail points of non-isolated
// fixed points.
inline std::optional<OrderExclusion> rice_exclusion(const SingleMap& f) {
    const auto p = fixed_point_profile(f);
    const bool applies = std::any_of(p.fixed_points.begin(), p.fixed_points.end(), [](const auto& fp) {
        return !fp.isolated && std::find(fp.tail_has_preimage.begin(), fp.tail_has_preimage.end(),
                                         true) != fp.tail_has_preimage.end();
    });
    if (!applies) return std::nullopt;
    return OrderExclusion{p.tail_union_size, std::nullopt, "rice-lemma"};
}

// With exactly k >= 2 non-isolated fixed points, each of whose tail points
// has a preimage, and l the largest tail, no root of order n exists when
// n > l and no m in [2, k] divides n.
inline std::optional<OrderExclusion> non_isolated_exclusion(const SingleMap& f) {
    const auto p = fixed_point_profile(f);
    std::size_t k = 0;
    std::size_t l = 0;
    for (const auto& fp : p.fixed_points) {
        if (fp.isolated) continue;
        ++k;
        l = std::max(l, fp.tail.size());
        for (bool b : fp.tail_has_preimage)
            if (!b) return std::nullopt;
    }
    if (k < 2) return std::nullopt;
    return OrderExclusion{l, k, "non-isolated-fixed-points"};
}

} // namespace iterroot

#endif
