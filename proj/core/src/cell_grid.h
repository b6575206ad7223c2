#ifndef DIRSET_SRC_CELL_GRID_H_
#define DIRSET_SRC_CELL_GRID_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "dirset/error.h"

namespace dirset::internal {

// Uniform grid over [0, 1]^dim with cubic cells of side `cell`, bucketing a
// fixed point set. Any stored point within distance `cell` of a query lies
// in one of the 3^dim cells around the query's cell.
class CellGrid {
 public:
  CellGrid(std::span<const double> points, std::size_t dim, double cell)
      : dim_(dim), cell_(cell * (1.0 + 1e-9)) {
    // The slack keeps pairs at distance exactly `cell` in adjacent cells
    // despite rounding in v / cell.
    if (!(cell > 0.0)) throw ConfigError("grid cell size must be positive");
    if (dim > 16) throw ConfigError("grid supports at most 16 dimensions");
    per_dim_ = static_cast<std::uint64_t>(std::floor(1.0 / cell_)) + 1;
    long double total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= static_cast<long double>(per_dim_);
    if (total > 9.0e18L) throw ConfigError("epsilon too small for a grid in this dimension");
    cell_count_ = static_cast<std::uint64_t>(total);
    dense_ = cell_count_ <= (std::uint64_t{1} << 22);

    const std::size_t n = dim == 0 ? 0 : points.size() / dim;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed(n);
    for (std::size_t i = 0; i < n; ++i)
      keyed[i] = {Key(points.subspan(i * dim, dim)), static_cast<std::uint32_t>(i)};
    std::sort(keyed.begin(), keyed.end());
    order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) order_[i] = keyed[i].second;
    if (dense_) {
      start_.assign(cell_count_ + 1, 0);
      for (const auto& [key, idx] : keyed) ++start_[key + 1];
      for (std::uint64_t c = 0; c < cell_count_; ++c) start_[c + 1] += start_[c];
    } else {
      for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && keyed[j].first == keyed[i].first) ++j;
        sparse_[keyed[i].first] = {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
        i = j;
      }
    }
  }

  std::uint64_t cell_count() const { return cell_count_; }

  std::uint64_t Coord(double v) const {
    const double c = std::floor(v / cell_);
    if (c <= 0.0) return 0;
    return std::min<std::uint64_t>(static_cast<std::uint64_t>(c), per_dim_ - 1);
  }

  std::uint64_t Key(std::span<const double> x) const {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < dim_; ++i) key = key * per_dim_ + Coord(x[i]);
    return key;
  }

  // Indices of stored points in cell `key`.
  std::span<const std::uint32_t> Bucket(std::uint64_t key) const {
    if (dense_) return std::span<const std::uint32_t>(order_).subspan(start_[key], start_[key + 1] - start_[key]);
    auto it = sparse_.find(key);
    if (it == sparse_.end()) return {};
    return std::span<const std::uint32_t>(order_).subspan(it->second.first, it->second.second - it->second.first);
  }

  // Calls fn(key) for the 3^dim cells around x (fewer at the borders),
  // own cell first. Stops early when fn returns true; returns whether it did.
  template <typename Fn>
  bool ForEachNeighborCell(std::span<const double> x, Fn&& fn) const {
    std::uint64_t base[16];
    for (std::size_t i = 0; i < dim_; ++i) base[i] = Coord(x[i]);
    if (fn(Key(x))) return true;
    int offset[16];
    for (std::size_t i = 0; i < dim_; ++i) offset[i] = -1;
    while (true) {
      bool own = true, valid = true;
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < dim_; ++i) {
        own = own && offset[i] == 0;
        const auto c = static_cast<std::int64_t>(base[i]) + offset[i];
        if (c < 0 || c >= static_cast<std::int64_t>(per_dim_)) valid = false;
        key = key * per_dim_ + static_cast<std::uint64_t>(std::max<std::int64_t>(c, 0));
      }
      if (valid && !own && fn(key)) return true;
      std::size_t i = 0;
      while (i < dim_ && offset[i] == 1) offset[i++] = -1;
      if (i == dim_) return false;
      ++offset[i];
    }
  }

 private:
  std::size_t dim_;
  double cell_;
  std::uint64_t per_dim_ = 1;
  std::uint64_t cell_count_ = 1;
  bool dense_ = true;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint64_t> start_;
  std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> sparse_;
};

}  // namespace dirset::internal

#endif  // DIRSET_SRC_CELL_GRID_H_
