#include <gtest/gtest.h>

#include "iterroot/instances.hpp"
#include "iterroot/multifunction.hpp"
#include "support/oracles.hpp"

using namespace iterroot;

namespace {

PointSet set_of(std::size_t n, std::initializer_list<std::size_t> xs) {
    return PointSet::from_indices(n, std::vector<std::size_t>(xs));
}

Multifunction random_mf(std::size_t size, std::uint64_t seed, double density = 0.35) {
    return instances::random_multifunction(size, size, density, seed);
}

} // namespace

TEST(PointSet, BasicOperations) {
    PointSet a(70);
    a.insert(0);
    a.insert(65);
    EXPECT_EQ(a.size(), 2u);
    EXPECT_TRUE(a.contains(65));
    EXPECT_FALSE(a.contains(64));
    auto b = set_of(70, {65, 3});
    EXPECT_EQ((a | b).size(), 3u);
    EXPECT_EQ((a & b).to_vector(), std::vector<std::size_t>{65});
    EXPECT_EQ((a - b).to_vector(), std::vector<std::size_t>{0});
    EXPECT_EQ(a.complement().size(), 68u);
    EXPECT_TRUE((a & b).is_subset_of(a));
    EXPECT_THROW(a.insert(70), std::out_of_range);
    EXPECT_THROW(a | PointSet(5), std::invalid_argument);
    EXPECT_TRUE(PointSet::full(70).is_full());
}

TEST(PointSet, IterationIsAscending) {
    auto s = set_of(130, {129, 5, 64, 0});
    EXPECT_EQ(s.to_vector(), (std::vector<std::size_t>{0, 5, 64, 129}));
}

TEST(GroundSet, RejectsBadLabels) {
    EXPECT_THROW(GroundSet(std::vector<std::string>{}), std::invalid_argument);
    EXPECT_THROW(GroundSet({"a", "a"}), std::invalid_argument);
    EXPECT_THROW(GroundSet({"a b"}), std::invalid_argument);
    EXPECT_THROW(GroundSet({"->"}), std::invalid_argument);
    EXPECT_THROW(GroundSet({"a,b"}), std::invalid_argument);
    GroundSet g({"a", "b"});
    EXPECT_EQ(g.index_of("b"), 1u);
    EXPECT_FALSE(g.find("c").has_value());
    EXPECT_EQ(GroundSet::indexed(3).label(2), "p2");
}

TEST(Multifunction, ComposeUnionsImages) {
    GroundSet g({"a", "b", "c", "d", "e"});
    auto G = Multifunction::from_edges(g, {{0, 1}, {0, 2}});
    auto F = Multifunction::from_edges(g, {{1, 3}, {2, 3}, {2, 4}});
    EXPECT_EQ(compose(F, G)(0), set_of(5, {3, 4}));
    EXPECT_TRUE(compose(F, G)(1).empty());  // G(b) is empty
    EXPECT_EQ(compose(Multifunction::identity(g), F), F);
    EXPECT_THROW(compose(F, Multifunction::identity(GroundSet::indexed(5))), std::invalid_argument);
}

TEST(Multifunction, IterateSemigroup) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto f = random_mf(4, seed);
        EXPECT_EQ(iterate(f, 0), Multifunction::identity(f.ground()));
        EXPECT_EQ(compose(iterate(f, 2), iterate(f, 3)), iterate(f, 5));
    }
}

TEST(Multifunction, ComposeIsAssociative) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto f = random_mf(5, seed), g = random_mf(5, seed + 100), h = random_mf(5, seed + 200);
        EXPECT_EQ(compose(f, compose(g, h)), compose(compose(f, g), h));
    }
}

TEST(Multifunction, ImageOfSet) {
    auto f = Multifunction::from_edges(GroundSet({"a", "b", "c"}), {{0, 1}, {1, 1}, {1, 2}});
    EXPECT_TRUE(f.image(PointSet(3)).empty());
    EXPECT_EQ(f.image(set_of(3, {0, 1})), set_of(3, {1, 2}));
    auto f1 = instances::f1();
    PointSet scanned(f1.size());
    for (std::size_t x = 0; x < f1.size(); ++x) scanned |= f1(x);
    EXPECT_EQ(image(f1, PointSet::full(f1.size())), scanned);
}

TEST(Multifunction, InverseImage) {
    auto f1 = instances::f1();
    const auto& g = f1.ground();
    auto pre = inverse_image(f1, set_of(f1.size(), {g.index_of("x0")}), 2);
    EXPECT_EQ(pre, set_of(f1.size(), {g.index_of("xm2_1"), g.index_of("xm2_2")}));
    EXPECT_EQ(inverse_image(f1, PointSet::full(f1.size()), 1), f1.domain());
    EXPECT_THROW(inverse_image(f1, pre, 0), std::invalid_argument);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto f = random_mf(5, seed, 0.25);
        auto target = set_of(5, {seed % 5});
        EXPECT_EQ(inverse_image(f, target, 3).to_vector(), oracle::inverse_image(f, target, 3));
    }
}

TEST(Multifunction, Invert) {
    auto f1 = instances::f1();
    EXPECT_EQ(invert(f1).out_degree(f1.ground().index_of("x0")), 4u);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto f = random_mf(5, seed), g = random_mf(5, seed + 50);
        EXPECT_EQ(invert(invert(f)), f);
        EXPECT_EQ(invert(compose(f, g)), compose(invert(g), invert(f)));
    }
}

TEST(Multifunction, Profile) {
    auto f2 = instances::f2();
    auto p2 = profile(f2);
    EXPECT_EQ(p2.set_value_points, set_of(f2.size(), {f2.ground().index_of("x0"), f2.ground().index_of("x2_1")}));
    auto id = profile(Multifunction::identity(GroundSet::indexed(4)));
    EXPECT_TRUE(id.set_value_points.empty());
    EXPECT_TRUE(id.domain.is_full());
    EXPECT_TRUE(id.image.is_full());

    auto f1 = instances::f1();
    auto p1 = profile(f1);
    EXPECT_EQ(p1.set_value_points,
              set_of(f1.size(), {f1.ground().index_of("xm2_1"), f1.ground().index_of("xm2_2")}));
    EXPECT_EQ(p1.max_out_degree, 2u);
    EXPECT_EQ(p1.max_in_degree, 4u);
}

TEST(Multifunction, Equality) {
    auto f = random_mf(5, 3);
    EXPECT_TRUE(equals(f, f));
    auto images = f.images();
    for (auto& img : images)
        if (!img.empty()) {
            img.erase(img.to_vector().front());
            break;
        }
    EXPECT_FALSE(equals(f, Multifunction(f.ground(), images)));
    EXPECT_TRUE(equals(iterate(instances::tails20_g().to_multifunction(), 4), instances::tails20_f().to_multifunction()));
}

TEST(SingleMap, RoundTripAndIterate) {
    auto f = instances::random_map(6, 11);
    EXPECT_EQ(SingleMap::from_multifunction(f.to_multifunction()), f);
    EXPECT_EQ(iterate(f, 3).to_multifunction(), iterate(f.to_multifunction(), 3));
    EXPECT_THROW(SingleMap::from_multifunction(instances::f1()), std::invalid_argument);
}
