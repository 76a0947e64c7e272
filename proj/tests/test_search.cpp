#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "iterroot/instances.hpp"
#include "iterroot/pullback.hpp"
#include "iterroot/search.hpp"
#include "support/oracles.hpp"

using namespace iterroot;

namespace {

std::vector<Multifunction> all_on(std::size_t s) {
    std::vector<Multifunction> out;
    oracle::for_each_multifunction(GroundSet::indexed(s), [&](const Multifunction& g) { out.push_back(g); });
    return out;
}

// Canonical candidate order: point 0 first; per point by size, then bitset value.
bool canonical_less(const Multifunction& a, const Multifunction& b) {
    for (std::size_t x = 0; x < a.size(); ++x) {
        const auto ma = a(x).to_vector(), mb = b(x).to_vector();
        std::uint64_t va = 0, vb = 0;
        for (auto y : ma) va |= std::uint64_t{1} << y;
        for (auto y : mb) vb |= std::uint64_t{1} << y;
        if (ma.size() != mb.size()) return ma.size() < mb.size();
        if (va != vb) return va < vb;
    }
    return false;
}

} // namespace

TEST(MultiSearch, IdentitySquareRoot) {
    auto id = Multifunction::identity(GroundSet::indexed(4));
    auto r = find_multi_root(id, 2, RootConstraint::unconstrained(), 1000);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.witness(), id);
}

TEST(MultiSearch, F1HasNoDegreeTwoRoot) {
    SearchOptions o;
    o.limits.degree_two_points = 12;
    auto r = find_multi_root(instances::f1(), 2, RootConstraint::max_out(2), 10'000'000, o);
    EXPECT_TRUE(r.exhausted());
    EXPECT_THROW(find_multi_root(instances::f1(), 2, RootConstraint::max_out(2), 100), std::invalid_argument);
}

TEST(MultiSearch, TranslationPullback) {
    auto F = pullback_of(instances::cyclic_power(8, 2));
    SearchOptions o;
    o.limits.unconstrained_points = 8;
    auto r = find_multi_root(F, 2, RootConstraint::unconstrained(), 10'000'000, o);
    ASSERT_TRUE(r.found());
    EXPECT_TRUE(oracle::is_root(r.witness(), F, 2));
}

TEST(MultiSearch, CanonicalWitnessOnThreePoints) {
    auto all = all_on(3);
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    for (std::size_t n : {2, 3}) {
        for (std::size_t i = 0; i < all.size(); i += 3) {
            const auto& f = all[i];
            std::optional<Multifunction> least;
            for (const auto& g : sorted)
                if (oracle::is_root(g, f, n)) {
                    least = g;
                    break;
                }
            auto r = find_multi_root(f, n, RootConstraint::unconstrained(), 1'000'000);
            ASSERT_EQ(r.found(), least.has_value());
            if (least) EXPECT_EQ(r.witness(), *least);
        }
    }
}

TEST(MultiSearch, ConstrainedClassesMatchBruteForce) {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const std::size_t s = 3 + seed % 2;
        auto f = instances::random_multifunction(s, 2, 0.3, seed);
        for (std::size_t m : {1, 2}) {
            const std::size_t n = 2 + seed % 2;
            const bool total = seed % 5 == 0;
            auto out = find_multi_root(f, n, RootConstraint::max_out(m, total), 1'000'000);
            auto in = find_multi_root(f, n, RootConstraint::max_in(m, total), 1'000'000);
            EXPECT_EQ(out.found(), oracle::brute_multi_root(f, n, m, s, total)) << seed;
            EXPECT_EQ(in.found(), oracle::brute_multi_root(f, n, s, m, total)) << seed;
            if (out.found()) EXPECT_TRUE(RootConstraint::max_out(m, total).admits(out.witness()));
            if (in.found()) EXPECT_TRUE(RootConstraint::max_in(m, total).admits(in.witness()));
        }
    }
}

TEST(MultiSearch, NaiveAndPropagatingAgree) {
    SearchOptions naive;
    naive.propagate = false;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto f = instances::random_multifunction(3, 3, 0.35, seed);
        for (auto c : {RootConstraint::unconstrained(), RootConstraint::max_out(1), RootConstraint::max_in(2, true)}) {
            auto a = find_multi_root(f, 2, c, 10'000'000);
            auto b = find_multi_root(f, 2, c, 10'000'000, naive);
            ASSERT_EQ(a.found(), b.found());
            if (a.found()) EXPECT_EQ(a.witness(), b.witness());
        }
    }
}

TEST(MultiSearch, BudgetExceededIsDistinct) {
    auto f = instances::random_multifunction(5, 5, 0.4, 3);
    SearchOptions naive;
    naive.propagate = false;
    auto r = find_multi_root(f, 3, RootConstraint::unconstrained(), 5, naive);
    EXPECT_TRUE(r.budget_exceeded());
    EXPECT_FALSE(r.exhausted());
    EXPECT_FALSE(r.found());
}

TEST(MultiSearch, RejectsBadArguments) {
    auto f = Multifunction::identity(GroundSet::indexed(3));
    EXPECT_THROW(find_multi_root(f, 1, RootConstraint::unconstrained(), 10), std::invalid_argument);
    EXPECT_THROW(find_multi_root(f, 2, RootConstraint::unconstrained(), 0), std::invalid_argument);
    EXPECT_THROW(find_multi_root(Multifunction::identity(GroundSet::indexed(6)), 2, RootConstraint::unconstrained(), 10),
                 std::invalid_argument);
}

TEST(SingleSearch, Tails20) {
    auto f = instances::tails20_f();
    auto r = find_single_root(f, 4, 10'000'000);
    ASSERT_TRUE(r.found());
    EXPECT_TRUE(oracle::is_root(r.witness(), f, 4));
}

TEST(SingleSearch, FourCycleHasNoSquareRoot) {
    SingleMap cycle(GroundSet::indexed(4), {1, 2, 3, 0});
    auto r = find_single_root(cycle, 2, 1'000'000);
    EXPECT_TRUE(r.exhausted());
    EXPECT_FALSE(oracle::brute_single_root(cycle, 2).has_value());
}

TEST(SingleSearch, IdentityCubeRoot) {
    auto id = SingleMap::identity(GroundSet::indexed(5));
    auto r = find_single_root(id, 3, 1000);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.witness(), id);
}

TEST(SingleSearch, MatchesBruteForce) {
    SearchOptions naive;
    naive.propagate = false;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto f = instances::random_map(1 + seed % 5, seed, seed % 4 == 0);
        for (std::size_t n : {2, 3}) {
            auto brute = oracle::brute_single_root(f, n);
            auto r = find_single_root(f, n, 10'000'000);
            ASSERT_EQ(r.found(), brute.has_value()) << seed;
            if (r.found()) EXPECT_TRUE(oracle::is_root(r.witness(), f, n));
            if (f.size() <= 4) EXPECT_EQ(find_single_root(f, n, 10'000'000, naive).found(), brute.has_value());
        }
    }
}

TEST(SingleSearch, NaiveCap) {
    SearchOptions naive;
    naive.propagate = false;
    auto id = SingleMap::identity(GroundSet::indexed(9));
    EXPECT_THROW(find_single_root(id, 2, 100, naive), std::invalid_argument);
    EXPECT_NO_THROW(find_single_root(id, 2, 100));
}
