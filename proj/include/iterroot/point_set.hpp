#ifndef ITERROOT_POINT_SET_HPP
#define ITERROOT_POINT_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace iterroot {

// A subset of {0, ..., universe-1}, stored as a packed bitset.
class PointSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = std::size_t;
        using difference_type = std::ptrdiff_t;
        using pointer = const std::size_t*;
        using reference = std::size_t;

        const_iterator() = default;

        std::size_t operator*() const { return pos_; }
        const_iterator& operator++() {
            pos_ = set_->next_from(pos_ + 1);
            return *this;
        }
        const_iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) {
            return a.pos_ == b.pos_;
        }

    private:
        friend class PointSet;
        const_iterator(const PointSet* set, std::size_t pos) : set_(set), pos_(pos) {}
        const PointSet* set_ = nullptr;
        std::size_t pos_ = 0;
    };

    PointSet() = default;
    explicit PointSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    PointSet(std::size_t universe, std::initializer_list<std::size_t> points)
        : PointSet(universe) {
        for (auto p : points) insert(p);
    }

    static PointSet full(std::size_t universe) {
        PointSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static PointSet from_indices(std::size_t universe, const std::vector<std::size_t>& points) {
        PointSet s(universe);
        for (auto p : points) s.insert(p);
        return s;
    }

    // Low 64 points only; used by the search engine, which caps grounds at 64.
    static PointSet from_mask(std::size_t universe, std::uint64_t mask) {
        PointSet s(universe);
        if (!s.words_.empty()) {
            s.words_[0] = mask;
            s.trim();
        }
        return s;
    }

    std::uint64_t low_mask() const { return words_.empty() ? 0 : words_[0]; }

    std::size_t universe() const { return universe_; }

    bool contains(std::size_t i) const {
        return i < universe_ && ((words_[i / 64] >> (i % 64)) & 1u);
    }

    void insert(std::size_t i) {
        check(i);
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }

    void erase(std::size_t i) {
        check(i);
        words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_full() const { return size() == universe_; }

    PointSet& operator|=(const PointSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    PointSet& operator&=(const PointSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // set difference
    PointSet& operator-=(const PointSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
    friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
    friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

    PointSet complement() const { return full(universe_) - *this; }

    bool is_subset_of(const PointSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const PointSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    friend bool operator==(const PointSet& a, const PointSet& b) = default;

    std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

    const_iterator begin() const { return {this, next_from(0)}; }
    const_iterator end() const { return {this, universe_}; }

private:
    std::size_t next_from(std::size_t i) const {
        while (i < universe_) {
            std::uint64_t w = words_[i / 64] >> (i % 64);
            if (w) return i + static_cast<std::size_t>(std::countr_zero(w));
            i = (i / 64 + 1) * 64;
        }
        return universe_;
    }

    void trim() {
        if (universe_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    void check(std::size_t i) const {
        if (i >= universe_) throw std::out_of_range("point index out of range");
    }

    void same_universe(const PointSet& o) const {
        if (o.universe_ != universe_)
            throw std::invalid_argument("point sets over different universes");
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace iterroot

#endif
