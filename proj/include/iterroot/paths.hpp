#ifndef ITERROOT_PATHS_HPP
#define ITERROOT_PATHS_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "iterroot/multifunction.hpp"

namespace iterroot {

using BigCount = boost::multiprecision::cpp_int;

// entries(x, y) = number of k-paths (walks, edges may repeat) from x to y in
// the graph of F. For k = 0 this is the identity matrix.
class PathCountMatrix {
public:
    PathCountMatrix(GroundSet ground, std::size_t k, std::vector<BigCount> entries)
        : ground_(std::move(ground)), k_(k), entries_(std::move(entries)) {
        if (entries_.size() != ground_.size() * ground_.size())
            throw std::invalid_argument("path matrix has the wrong number of entries");
    }

    static PathCountMatrix identity(const GroundSet& ground) {
        const auto n = ground.size();
        std::vector<BigCount> e(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
        return {ground, 0, std::move(e)};
    }

    static PathCountMatrix adjacency(const Multifunction& f) {
        const auto n = f.size();
        std::vector<BigCount> e(n * n, 0);
        for (std::size_t x = 0; x < n; ++x)
            for (auto y : f(x)) e[x * n + y] = 1;
        return {f.ground(), 1, std::move(e)};
    }

    const GroundSet& ground() const { return ground_; }
    std::size_t size() const { return ground_.size(); }
    std::size_t length() const { return k_; }

    const BigCount& at(std::size_t x, std::size_t y) const { return entries_.at(x * size() + y); }

    // #P(x, X; k)
    BigCount row_sum(std::size_t x) const {
        BigCount s = 0;
        for (std::size_t y = 0; y < size(); ++y) s += at(x, y);
        return s;
    }

    // #P(X, y; k)
    BigCount column_sum(std::size_t y) const {
        BigCount s = 0;
        for (std::size_t x = 0; x < size(); ++x) s += at(x, y);
        return s;
    }

    // #P(A, B; k)
    BigCount sum(const PointSet& from, const PointSet& to) const {
        BigCount s = 0;
        for (auto x : from)
            for (auto y : to) s += at(x, y);
        return s;
    }

    // Path concatenation: a-paths followed by b-paths are (a+b)-paths.
    friend PathCountMatrix operator*(const PathCountMatrix& a, const PathCountMatrix& b) {
        if (!(a.ground_ == b.ground_)) throw std::invalid_argument("ground set mismatch");
        const auto n = a.size();
        std::vector<BigCount> e(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t m = 0; m < n; ++m) {
                const auto& aim = a.entries_[i * n + m];
                if (aim.is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const auto& bmj = b.entries_[m * n + j];
                    if (!bmj.is_zero()) e[i * n + j] += aim * bmj;
                }
            }
        return {a.ground_, a.k_ + b.k_, std::move(e)};
    }

    friend bool operator==(const PathCountMatrix& a, const PathCountMatrix& b) {
        return a.k_ == b.k_ && a.ground_ == b.ground_ && a.entries_ == b.entries_;
    }

private:
    GroundSet ground_;
    std::size_t k_;
    std::vector<BigCount> entries_;
};

// k-th power of the 0/1 adjacency matrix; repeated squaring above k = 4.
inline PathCountMatrix path_matrix(const Multifunction& f, std::size_t k) {
    auto result = PathCountMatrix::identity(f.ground());
    const auto adj = PathCountMatrix::adjacency(f);
    if (k <= 4) {
        for (std::size_t i = 0; i < k; ++i) result = result * adj;
        return result;
    }
    auto base = adj;
    for (std::size_t e = k; e > 0; e >>= 1) {
        if (e & 1) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

// #P_F(from, to; k), k >= 1
inline BigCount count_paths(const Multifunction& f, const PointSet& from, const PointSet& to,
                            std::size_t k) {
    if (k == 0) throw std::invalid_argument("path length must be at least 1");
    if (from.universe() != f.size() || to.universe() != f.size())
        throw std::out_of_range("point set over the wrong universe");
    return path_matrix(f, k).sum(from, to);
}

} // namespace iterroot

#endif
