#ifndef ITERROOT_MULTIFUNCTION_HPP
#define ITERROOT_MULTIFUNCTION_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "iterroot/ground_set.hpp"
#include "iterroot/point_set.hpp"

namespace iterroot {

// A multifunction F : X -> 2^X on a finite ground set, i.e. the directed
// graph with an edge x -> y for every y in F(x). Images may be empty.
class Multifunction {
public:
    Multifunction(GroundSet ground, std::vector<PointSet> images)
        : ground_(std::move(ground)), images_(std::move(images)) {
        if (images_.size() != ground_.size())
            throw std::invalid_argument("one image set per point required");
        for (const auto& s : images_)
            if (s.universe() != ground_.size())
                throw std::invalid_argument("image set over the wrong universe");
    }

    // Every point maps to the empty set.
    static Multifunction empty(GroundSet ground) {
        std::vector<PointSet> images(ground.size(), PointSet(ground.size()));
        return {std::move(ground), std::move(images)};
    }

    static Multifunction identity(GroundSet ground) {
        std::vector<PointSet> images;
        images.reserve(ground.size());
        for (std::size_t x = 0; x < ground.size(); ++x) images.push_back(PointSet(ground.size(), {x}));
        return {std::move(ground), std::move(images)};
    }

    static Multifunction from_edges(GroundSet ground,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
        auto f = empty(std::move(ground));
        for (auto [x, y] : edges) f.images_.at(x).insert(y);
        return f;
    }

    const GroundSet& ground() const { return ground_; }
    std::size_t size() const { return ground_.size(); }

    const PointSet& operator()(std::size_t x) const { return images_.at(x); }
    const std::vector<PointSet>& images() const { return images_; }

    std::size_t out_degree(std::size_t x) const { return images_.at(x).size(); }

    std::vector<std::size_t> in_degrees() const {
        std::vector<std::size_t> deg(size(), 0);
        for (const auto& img : images_)
            for (auto y : img) ++deg[y];
        return deg;
    }

    std::size_t edge_count() const {
        std::size_t n = 0;
        for (const auto& img : images_) n += img.size();
        return n;
    }

    // F(A) = union of F(x) over x in A
    PointSet image(const PointSet& a) const {
        if (a.universe() != size()) throw std::out_of_range("point set over the wrong universe");
        PointSet out(size());
        for (auto x : a) out |= images_[x];
        return out;
    }

    PointSet domain() const {
        PointSet d(size());
        for (std::size_t x = 0; x < size(); ++x)
            if (!images_[x].empty()) d.insert(x);
        return d;
    }

    // Im(F) = F(X)
    PointSet range() const { return image(PointSet::full(size())); }

    bool is_total() const { return domain().is_full(); }
    bool is_onto() const { return range().is_full(); }

    friend bool operator==(const Multifunction& a, const Multifunction& b) {
        return a.ground_ == b.ground_ && a.images_ == b.images_;
    }

private:
    GroundSet ground_;
    std::vector<PointSet> images_;
};

// A total single-valued map f : X -> X.
class SingleMap {
public:
    SingleMap(GroundSet ground, std::vector<std::size_t> image)
        : ground_(std::move(ground)), image_(std::move(image)) {
        if (image_.size() != ground_.size()) throw std::invalid_argument("map must be total");
        for (auto y : image_)
            if (y >= ground_.size()) throw std::invalid_argument("map image index out of range");
    }

    static SingleMap identity(GroundSet ground) {
        std::vector<std::size_t> img(ground.size());
        for (std::size_t i = 0; i < img.size(); ++i) img[i] = i;
        return {std::move(ground), std::move(img)};
    }

    const GroundSet& ground() const { return ground_; }
    std::size_t size() const { return ground_.size(); }
    std::size_t operator()(std::size_t x) const { return image_.at(x); }
    const std::vector<std::size_t>& values() const { return image_; }

    // f^{-1}({y})
    PointSet preimage(std::size_t y) const {
        PointSet out(size());
        for (std::size_t x = 0; x < size(); ++x)
            if (image_[x] == y) out.insert(x);
        return out;
    }

    bool is_onto() const {
        std::vector<bool> hit(size(), false);
        for (auto y : image_) hit[y] = true;
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }

    // x -> {f(x)}
    Multifunction to_multifunction() const {
        std::vector<PointSet> images;
        images.reserve(size());
        for (auto y : image_) images.push_back(PointSet(size(), {y}));
        return {ground_, std::move(images)};
    }

    // Fails unless every image is a singleton.
    static SingleMap from_multifunction(const Multifunction& f) {
        std::vector<std::size_t> img(f.size());
        for (std::size_t x = 0; x < f.size(); ++x) {
            if (f(x).size() != 1)
                throw std::invalid_argument("point '" + f.ground().label(x) +
                                            "' does not have exactly one image");
            img[x] = *f(x).begin();
        }
        return {f.ground(), std::move(img)};
    }

    friend bool operator==(const SingleMap& a, const SingleMap& b) {
        return a.ground_ == b.ground_ && a.image_ == b.image_;
    }

private:
    GroundSet ground_;
    std::vector<std::size_t> image_;
};

// (F o G)(x) = F(G(x))
inline Multifunction compose(const Multifunction& f, const Multifunction& g) {
    if (!(f.ground() == g.ground())) throw std::invalid_argument("ground set mismatch in compose");
    std::vector<PointSet> images;
    images.reserve(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) images.push_back(f.image(g(x)));
    return {g.ground(), std::move(images)};
}

// F^0 = id, F^n = F o F^{n-1}
inline Multifunction iterate(const Multifunction& f, std::size_t n) {
    auto result = Multifunction::identity(f.ground());
    for (std::size_t i = 0; i < n; ++i) result = compose(f, result);
    return result;
}

inline PointSet image(const Multifunction& f, const PointSet& a) { return f.image(a); }

// F^{-k}(A) = { x : F^k(x) meets A }, k >= 1
inline PointSet inverse_image(const Multifunction& f, const PointSet& a, std::size_t k) {
    if (k == 0) throw std::invalid_argument("inverse image order must be at least 1");
    if (a.universe() != f.size()) throw std::out_of_range("point set over the wrong universe");
    auto fk = iterate(f, k);
    PointSet out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x)
        if (fk(x).intersects(a)) out.insert(x);
    return out;
}

// x in F^{-1}(y) iff y in F(x)
inline Multifunction invert(const Multifunction& f) {
    auto out = std::vector<PointSet>(f.size(), PointSet(f.size()));
    for (std::size_t x = 0; x < f.size(); ++x)
        for (auto y : f(x)) out[y].insert(x);
    return {f.ground(), std::move(out)};
}

inline bool equals(const Multifunction& f, const Multifunction& g) { return f == g; }

struct StructuralProfile {
    PointSet domain;
    PointSet image;
    PointSet set_value_points;  // #F(x) >= 2
    PointSet self_members;      // x in F(x)
    std::size_t max_out_degree = 0;
    std::size_t max_in_degree = 0;
};

inline StructuralProfile profile(const Multifunction& f) {
    StructuralProfile p{f.domain(), f.range(), PointSet(f.size()), PointSet(f.size()), 0, 0};
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (f(x).size() >= 2) p.set_value_points.insert(x);
        if (f(x).contains(x)) p.self_members.insert(x);
        p.max_out_degree = std::max(p.max_out_degree, f.out_degree(x));
    }
    for (auto d : f.in_degrees()) p.max_in_degree = std::max(p.max_in_degree, d);
    return p;
}

// (f o g)(x) = f(g(x))
inline SingleMap compose(const SingleMap& f, const SingleMap& g) {
    if (!(f.ground() == g.ground())) throw std::invalid_argument("ground set mismatch in compose");
    std::vector<std::size_t> img(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) img[x] = f(g(x));
    return {g.ground(), std::move(img)};
}

inline SingleMap iterate(const SingleMap& f, std::size_t n) {
    std::vector<std::size_t> img(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
        std::size_t y = x;
        for (std::size_t i = 0; i < n; ++i) y = f(y);
        img[x] = y;
    }
    return {f.ground(), std::move(img)};
}

} // namespace iterroot

#endif
