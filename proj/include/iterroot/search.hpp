#ifndef ITERROOT_SEARCH_HPP
#define ITERROOT_SEARCH_HPP

#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "iterroot/multifunction.hpp"

namespace iterroot {

// Exact search for n-th iterative roots G^n = F on small ground sets.
//
// Candidates are ordered point by point in index order; the image sets of a
// point are ordered by size, then by the unsigned value of their bitset
// (bit i = point i). The first root found in this order is returned, so the
// witness is the canonically least one.

struct RootConstraint {
    enum class Kind { Unconstrained, MaxOutDegree, MaxInDegree };

    Kind kind = Kind::Unconstrained;
    std::size_t bound = 0;
    bool require_total_domain = false;

    static RootConstraint unconstrained(bool total = false) { return {Kind::Unconstrained, 0, total}; }
    static RootConstraint max_out(std::size_t m, bool total = false) { return {Kind::MaxOutDegree, m, total}; }
    static RootConstraint max_in(std::size_t m, bool total = false) { return {Kind::MaxInDegree, m, total}; }

    bool admits(const Multifunction& g) const {
        if (require_total_domain && !g.is_total()) return false;
        if (kind == Kind::MaxOutDegree)
            for (std::size_t x = 0; x < g.size(); ++x)
                if (g.out_degree(x) > bound) return false;
        if (kind == Kind::MaxInDegree)
            for (auto d : g.in_degrees())
                if (d > bound) return false;
        return true;
    }

    std::string describe() const {
        std::string s = kind == Kind::Unconstrained ? "unconstrained"
                        : kind == Kind::MaxOutDegree ? "max-out-degree " + std::to_string(bound)
                                                     : "max-in-degree " + std::to_string(bound);
        if (require_total_domain) s += ", total";
        return s;
    }

    friend bool operator==(const RootConstraint&, const RootConstraint&) = default;
};

// Ground-size caps per candidate class.
struct SearchLimits {
    std::size_t unconstrained_points = 5;
    std::size_t degree_two_points = 6;  // MaxOutDegree / MaxInDegree with bound <= 2
    std::size_t single_exhaustive_points = 8;
    std::size_t single_backtracking_points = 64;
};

struct SearchOptions {
    // false: plain enumeration of the candidate space, verified at the leaves
    bool propagate = true;
    // any root commutes with F, since F o G = G^{n+1} = G o F
    bool commutation_filter = true;
    SearchLimits limits;
};

template <class Root>
struct SearchResult {
    struct Witness {
        Root root;
    };
    struct ExhaustedNone {
        std::uint64_t nodes_explored;
    };
    struct BudgetExceeded {
        std::uint64_t budget;
    };

    std::size_t order;
    RootConstraint constraint;
    std::variant<Witness, ExhaustedNone, BudgetExceeded> outcome;
    std::chrono::nanoseconds elapsed{0};

    bool found() const { return std::holds_alternative<Witness>(outcome); }
    bool exhausted() const { return std::holds_alternative<ExhaustedNone>(outcome); }
    bool budget_exceeded() const { return std::holds_alternative<BudgetExceeded>(outcome); }
    const Root& witness() const { return std::get<Witness>(outcome).root; }
    std::uint64_t nodes_explored() const { return std::get<ExhaustedNone>(outcome).nodes_explored; }
};

using MultiSearchResult = SearchResult<Multifunction>;
using SingleSearchResult = SearchResult<SingleMap>;

namespace detail {

using Mask = std::uint64_t;

// Scatter the low bits of `bits` onto the positions listed in `slots`.
inline Mask deposit(unsigned __int128 bits, const std::vector<int>& slots) {
    Mask out = 0;
    for (std::size_t i = 0; bits; ++i, bits >>= 1)
        if (bits & 1) out |= Mask{1} << slots[i];
    return out;
}

// Calls fn(S) for every S with lo <= S <= up and kmin <= |S| <= kmax, by
// size then by value. Stops early when fn returns true.
template <class Fn>
bool for_each_between(Mask lo, Mask up, std::size_t kmin, std::size_t kmax, Fn&& fn) {
    const Mask free = up & ~lo;
    std::vector<int> slots;
    for (Mask m = free; m; m &= m - 1) slots.push_back(std::countr_zero(m));
    const std::size_t fixed = static_cast<std::size_t>(std::popcount(lo));
    const std::size_t nfree = slots.size();
    const unsigned __int128 limit = static_cast<unsigned __int128>(1) << nfree;
    for (std::size_t k = kmin; k <= kmax; ++k) {
        if (k < fixed) continue;
        const std::size_t extra = k - fixed;
        if (extra > nfree) break;
        if (extra == 0) {
            if (fn(lo)) return true;
            continue;
        }
        unsigned __int128 c = (static_cast<unsigned __int128>(1) << extra) - 1;
        while (c < limit) {
            if (fn(lo | deposit(c, slots))) return true;
            // next integer with the same popcount
            const unsigned __int128 low = c & (~c + 1);
            const unsigned __int128 ripple = c + low;
            c = ripple | (((c ^ ripple) >> 2) / low);
        }
    }
    return false;
}

class RootSearch {
public:
    struct Config {
        std::size_t points;
        std::vector<Mask> target;  // F
        std::size_t order;
        std::size_t min_out;
        std::size_t max_out;
        std::size_t max_in;
        bool propagate;
        bool commute;
        std::uint64_t budget;
    };

    enum class Status { Found, Exhausted, Budget };

    explicit RootSearch(Config cfg) : cfg_(std::move(cfg)) {
        all_ = cfg_.points == 64 ? ~Mask{0} : (Mask{1} << cfg_.points) - 1;
    }

    Status run() {
        std::vector<Mask> lo(cfg_.points, 0), up(cfg_.points, all_);
        nodes_ = 0;
        budget_hit_ = false;
        if (dfs(lo, up)) return Status::Found;
        return budget_hit_ ? Status::Budget : Status::Exhausted;
    }

    const std::vector<Mask>& solution() const { return solution_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    static std::size_t pc(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

    template <class Fn>
    static void for_bits(Mask m, Fn&& fn) {
        for (; m; m &= m - 1) fn(static_cast<std::size_t>(std::countr_zero(m)));
    }

    static Mask image(const std::vector<Mask>& g, Mask a) {
        Mask out = 0;
        for_bits(a, [&](std::size_t y) { out |= g[y]; });
        return out;
    }

    bool verify(const std::vector<Mask>& g) const {
        const auto s = cfg_.points;
        for (std::size_t x = 0; x < s; ++x) {
            Mask cur = Mask{1} << x;
            for (std::size_t i = 0; i < cfg_.order; ++i) cur = image(g, cur);
            if (cur != cfg_.target[x]) return false;
            if (pc(g[x]) < cfg_.min_out || pc(g[x]) > cfg_.max_out) return false;
        }
        if (cfg_.max_in < s)
            for (std::size_t y = 0; y < s; ++y) {
                std::size_t cnt = 0;
                for (std::size_t x = 0; x < s; ++x) cnt += (g[x] >> y) & 1;
                if (cnt > cfg_.max_in) return false;
            }
        return true;
    }

    // Narrows lo/up to a fixpoint of sound deductions. False on conflict.
    bool propagate(std::vector<Mask>& lo, std::vector<Mask>& up) const {
        const auto s = cfg_.points;
        const auto n = cfg_.order;
        const auto& F = cfg_.target;
        std::vector<std::vector<Mask>> reach_lo(n + 1, std::vector<Mask>(s));
        std::vector<std::vector<Mask>> reach_up(n + 1, std::vector<Mask>(s));
        std::vector<Mask> bad(n);

        bool changed = true;
        while (changed) {
            changed = false;
            auto narrow_up = [&](std::size_t x, Mask keep) {
                if (up[x] & ~keep) {
                    up[x] &= keep;
                    changed = true;
                }
            };
            auto widen_lo = [&](std::size_t x, Mask add) {
                if (add & ~lo[x]) {
                    lo[x] |= add;
                    changed = true;
                }
            };

            // image sizes
            for (std::size_t x = 0; x < s; ++x) {
                if (lo[x] & ~up[x]) return false;
                const auto nlo = pc(lo[x]), nup = pc(up[x]);
                if (nlo > cfg_.max_out || nup < cfg_.min_out) return false;
                if (nlo == cfg_.max_out) narrow_up(x, lo[x]);
                if (nup == cfg_.min_out) widen_lo(x, up[x]);
            }

            // in-degrees
            if (cfg_.max_in < s) {
                for (std::size_t y = 0; y < s; ++y) {
                    const Mask bit = Mask{1} << y;
                    std::size_t cnt = 0;
                    for (std::size_t x = 0; x < s; ++x) cnt += (lo[x] & bit) ? 1 : 0;
                    if (cnt > cfg_.max_in) return false;
                    if (cnt == cfg_.max_in)
                        for (std::size_t x = 0; x < s; ++x)
                            if (!(lo[x] & bit)) narrow_up(x, ~bit);
                }
            }

            // G^n = F. reach_lo[t][z]: points certainly reached from z in t
            // steps; reach_up[t][z]: points possibly reached.
            for (std::size_t z = 0; z < s; ++z) {
                reach_lo[0][z] = reach_up[0][z] = Mask{1} << z;
            }
            for (std::size_t t = 1; t <= n; ++t)
                for (std::size_t z = 0; z < s; ++z) {
                    reach_lo[t][z] = image(lo, reach_lo[t - 1][z]);
                    reach_up[t][z] = image(up, reach_up[t - 1][z]);
                }
            for (std::size_t x = 0; x < s; ++x) {
                const Mask fx = F[x];
                if (reach_lo[n][x] & ~fx) return false;
                if (fx & ~reach_up[n][x]) return false;

                // A point y reached certainly in j steps from x may only map to
                // points z whose certain (n-1-j)-step reach stays inside F(x).
                for (std::size_t t = 0; t < n; ++t) {
                    Mask b = 0;
                    for (std::size_t z = 0; z < s; ++z)
                        if (reach_lo[t][z] & ~fx) b |= Mask{1} << z;
                    bad[t] = b;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Mask b = bad[n - 1 - j];
                    if (!b) continue;
                    for_bits(reach_lo[j][x], [&](std::size_t y) { narrow_up(y, ~b); });
                }

                // Each w in F(x) needs a last step y -> w with y possibly in
                // G^{n-1}(x); a unique such y is forced.
                const Mask missing = fx & ~reach_lo[n][x];
                const Mask pre = reach_up[n - 1][x];
                bool dead = false;
                for_bits(missing, [&](std::size_t w) {
                    if (dead) return;
                    Mask cand = 0;
                    for_bits(pre, [&](std::size_t y) {
                        if ((up[y] >> w) & 1) cand |= Mask{1} << y;
                    });
                    if (!cand) {
                        dead = true;
                        return;
                    }
                    if (pc(cand) != 1) return;
                    const auto y = static_cast<std::size_t>(std::countr_zero(cand));
                    if (reach_lo[n - 1][x] & cand) widen_lo(y, Mask{1} << w);
                    else if (n == 2) widen_lo(x, cand);
                });
                if (dead) return false;
            }

            // G(F(x)) = F(G(x))
            if (cfg_.commute) {
                for (std::size_t x = 0; x < s; ++x) {
                    const Mask fx = F[x];
                    const Mask lhs_lo = image(lo, fx), lhs_up = image(up, fx);
                    const Mask rhs_lo = image(F, lo[x]), rhs_up = image(F, up[x]);
                    if (lhs_lo & ~rhs_up) return false;
                    if (rhs_lo & ~lhs_up) return false;
                    for_bits(fx, [&](std::size_t z) { narrow_up(z, rhs_up); });
                    for_bits(up[x] & ~lo[x], [&](std::size_t y) {
                        if (F[y] & ~lhs_up) narrow_up(x, ~(Mask{1} << y));
                    });
                    for_bits(rhs_lo & ~lhs_lo, [&](std::size_t w) {
                        Mask cand = 0;
                        for_bits(fx, [&](std::size_t z) {
                            if ((up[z] >> w) & 1) cand |= Mask{1} << z;
                        });
                        if (pc(cand) == 1) widen_lo(static_cast<std::size_t>(std::countr_zero(cand)), Mask{1} << w);
                    });
                    for_bits(lhs_lo & ~rhs_lo, [&](std::size_t w) {
                        Mask cand = 0;
                        for_bits(up[x], [&](std::size_t y) {
                            if ((F[y] >> w) & 1) cand |= Mask{1} << y;
                        });
                        if (pc(cand) == 1) widen_lo(x, cand);
                    });
                }
            }
        }
        return true;
    }

    bool dfs(std::vector<Mask>& lo, std::vector<Mask>& up) {
        if (cfg_.propagate && !propagate(lo, up)) return false;

        std::size_t x = 0;
        while (x < cfg_.points && lo[x] == up[x]) ++x;
        if (x == cfg_.points) {
            if (!verify(lo)) return false;
            solution_ = lo;
            return true;
        }

        return for_each_between(lo[x], up[x], cfg_.min_out, cfg_.max_out, [&](Mask cand) {
            if (nodes_ >= cfg_.budget) {
                budget_hit_ = true;
                return true;
            }
            ++nodes_;
            auto lo2 = lo, up2 = up;
            lo2[x] = up2[x] = cand;
            return dfs(lo2, up2) || budget_hit_;
        }) && !budget_hit_;
    }

    Config cfg_;
    Mask all_ = 0;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
    std::vector<Mask> solution_;
};

inline std::vector<Mask> to_masks(const Multifunction& f) {
    std::vector<Mask> out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) out[x] = f(x).low_mask();
    return out;
}

template <class Root, class Convert>
SearchResult<Root> run_search(RootSearch::Config cfg, RootConstraint constraint, Convert&& convert) {
    const auto start = std::chrono::steady_clock::now();
    const auto order = cfg.order;
    const auto budget = cfg.budget;
    RootSearch search(std::move(cfg));
    const auto status = search.run();
    const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    using R = SearchResult<Root>;
    switch (status) {
    case RootSearch::Status::Found:
        return R{order, constraint, typename R::Witness{convert(search.solution())}, elapsed};
    case RootSearch::Status::Exhausted:
        return R{order, constraint, typename R::ExhaustedNone{search.nodes()}, elapsed};
    case RootSearch::Status::Budget:
    default:
        return R{order, constraint, typename R::BudgetExceeded{budget}, elapsed};
    }
}

} // namespace detail

inline std::size_t search_point_cap(const RootConstraint& c, const SearchLimits& limits) {
    if (c.kind != RootConstraint::Kind::Unconstrained && c.bound <= 2) return limits.degree_two_points;
    return limits.unconstrained_points;
}

inline MultiSearchResult find_multi_root(const Multifunction& f, std::size_t n, RootConstraint c,
                                         std::uint64_t budget, const SearchOptions& options = {}) {
    if (n < 2) throw std::invalid_argument("root order must be at least 2");
    if (budget == 0) throw std::invalid_argument("search budget must be positive");
    const auto cap = std::min<std::size_t>(64, search_point_cap(c, options.limits));
    if (f.size() > cap)
        throw std::invalid_argument("ground set of " + std::to_string(f.size()) +
                                    " points exceeds the search cap of " + std::to_string(cap) +
                                    " for class " + c.describe());
    const auto s = f.size();
    detail::RootSearch::Config cfg{
        s,
        detail::to_masks(f),
        n,
        c.require_total_domain ? std::size_t{1} : std::size_t{0},
        c.kind == RootConstraint::Kind::MaxOutDegree ? c.bound : s,
        c.kind == RootConstraint::Kind::MaxInDegree ? c.bound : s,
        options.propagate,
        options.propagate && options.commutation_filter,
        budget,
    };
    return detail::run_search<Multifunction>(std::move(cfg), c, [&](const std::vector<detail::Mask>& g) {
        std::vector<PointSet> images;
        images.reserve(s);
        for (auto m : g) images.push_back(PointSet::from_mask(s, m));
        return Multifunction(f.ground(), std::move(images));
    });
}

inline SingleSearchResult find_single_root(const SingleMap& f, std::size_t n, std::uint64_t budget,
                                           const SearchOptions& options = {}) {
    if (n < 2) throw std::invalid_argument("root order must be at least 2");
    if (budget == 0) throw std::invalid_argument("search budget must be positive");
    const auto cap = std::min<std::size_t>(64, options.propagate ? options.limits.single_backtracking_points
                                                                 : options.limits.single_exhaustive_points);
    if (f.size() > cap)
        throw std::invalid_argument("ground set of " + std::to_string(f.size()) +
                                    " points exceeds the single-map search cap of " + std::to_string(cap));
    const auto s = f.size();
    detail::RootSearch::Config cfg{
        s,     detail::to_masks(f.to_multifunction()),
        n,     1,
        1,     s,
        options.propagate,
        options.propagate && options.commutation_filter,
        budget,
    };
    return detail::run_search<SingleMap>(std::move(cfg), RootConstraint::unconstrained(true),
                                         [&](const std::vector<detail::Mask>& g) {
                                             std::vector<std::size_t> img(s);
                                             for (std::size_t x = 0; x < s; ++x)
                                                 img[x] = static_cast<std::size_t>(std::countr_zero(g[x]));
                                             return SingleMap(f.ground(), std::move(img));
                                         });
}

} // namespace iterroot

#endif
