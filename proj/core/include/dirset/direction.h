#ifndef DIRSET_DIRECTION_H_
#define DIRSET_DIRECTION_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dirset/geometry.h"
#include "dirset/intsets.h"

namespace dirset {

// Largest tuple length supported by the direction engine.
inline constexpr std::size_t kMaxDirectionDim = 8;

// Canonical integer representative of the direction of a non-negative
// integer tuple: the tuple divided by the gcd of its coordinates. Two
// tuples have the same normalized image iff their primitive directions
// are equal.
class PrimitiveDirection {
 public:
  // Reduces by the gcd. Throws DomainError for an all-zero tuple.
  static PrimitiveDirection FromTuple(std::span<const std::uint64_t> tuple);

  std::span<const std::uint64_t> coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  std::uint64_t operator[](std::size_t i) const { return coords_[i]; }

  DirectionPoint ToPoint(NormKind kind = NormKind::kEuclidean) const;
  std::string ToString() const;

  friend bool operator==(const PrimitiveDirection&, const PrimitiveDirection&) = default;
  friend auto operator<=>(const PrimitiveDirection&, const PrimitiveDirection&) = default;

 private:
  explicit PrimitiveDirection(std::vector<std::uint64_t> coords) : coords_(std::move(coords)) {}

  std::vector<std::uint64_t> coords_;
};

// Divides `tuple` in place by the gcd of its entries; returns false when
// every entry is zero.
bool ReduceToPrimitive(std::span<std::uint64_t> tuple);

struct SampledMode {
  std::uint64_t seed = 0;
  std::uint64_t count = 0;  // number of tuples drawn (with replacement)
};

struct TruncationOptions {
  // Exhaustive mode refuses products of set sizes above this.
  std::uint64_t tuple_budget = 100'000'000;
  unsigned workers = 0;
};

// Finite truncation of the (distinct) generalized direction set of
// (U_1, ..., U_k): the primitive directions of admissible tuples with every
// coordinate <= bound. Rows are stored flat, sorted lexicographically and
// duplicate-free.
class DirectionSetTruncation {
 public:
  DirectionSetTruncation(std::size_t dim, std::vector<std::uint64_t> sorted_rows,
                         std::uint64_t bound, bool distinct,
                         std::optional<SampledMode> sampled);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : rows_.size() / dim_; }
  bool empty() const { return rows_.empty(); }
  std::uint64_t bound() const { return bound_; }
  bool distinct() const { return distinct_; }
  bool exhaustive() const { return !sampled_.has_value(); }
  const std::optional<SampledMode>& sampled() const { return sampled_; }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return std::span<const std::uint64_t>(rows_).subspan(i * dim_, dim_);
  }
  PrimitiveDirection at(std::size_t i) const { return PrimitiveDirection::FromTuple(row(i)); }
  std::vector<PrimitiveDirection> Points() const;
  bool Contains(std::span<const std::uint64_t> primitive) const;

  // Float images under `kind`, flat, dim() values per point.
  std::vector<double> Images(NormKind kind = NormKind::kEuclidean) const;

  // Set descriptors and non-fatal warnings gathered while building.
  std::vector<std::string> specs;
  std::vector<std::string> warnings;

 private:
  std::size_t dim_;
  std::vector<std::uint64_t> rows_;
  std::uint64_t bound_;
  bool distinct_;
  std::optional<SampledMode> sampled_;
};

// Builds the truncation. Exhaustive mode (sampled == nullopt) enumerates the
// full product of U_i cap [1, bound] and throws ResourceError when its size
// exceeds options.tuple_budget. Sampled mode draws tuples uniformly with a
// counter-based generator keyed on the seed, so the result is independent
// of the worker count. Throws ConfigError for k < 2, k > kMaxDirectionDim
// or a set with no elements <= bound.
DirectionSetTruncation BuildTruncation(std::span<const IntegerSetSpec> specs, std::uint64_t bound,
                                       bool distinct, std::optional<SampledMode> sampled = {},
                                       const TruncationOptions& options = {});

// Same, over already enumerated sets (each ascending, all <= bound).
DirectionSetTruncation BuildTruncationFromValues(std::span<const std::vector<std::uint64_t>> sets,
                                                 std::uint64_t bound, bool distinct,
                                                 std::optional<SampledMode> sampled = {},
                                                 const TruncationOptions& options = {});

// Visits every admissible tuple of the product of `sets` (values, not
// indices), distributing the outermost coordinate over workers. The
// callback receives the worker index and the tuple; it must be safe to call
// concurrently from different workers.
void ForEachTuple(std::span<const std::vector<std::uint64_t>> sets, bool distinct, unsigned workers,
                  const std::function<void(unsigned, std::span<const std::uint64_t>)>& visit);

// Naive reference: nested loops, std::gcd reduction and a std::set. Throws
// ResourceError when the product of set sizes exceeds 10^6.
std::vector<PrimitiveDirection> OracleTruncation(std::span<const IntegerSetSpec> specs,
                                                 std::uint64_t bound, bool distinct);

inline constexpr std::uint64_t kOracleTupleBudget = 1'000'000;

// One line per direction, coordinates separated by spaces, in the
// truncation's lexicographic order.
void WriteTruncation(std::ostream& out, const DirectionSetTruncation& truncation);

enum class WitnessStrategy { kScaledInterval, kBracketing };

std::string_view ToString(WitnessStrategy strategy);

struct WitnessResult {
  std::optional<std::vector<std::uint64_t>> tuple;
  std::optional<WitnessStrategy> strategy;
  std::vector<std::uint64_t> scales;  // every scale tried, ascending
  std::vector<double> target;         // sphere point aimed at inside the box

  bool found() const { return tuple.has_value(); }
};

// Searches for u_i in U_i cap [1, search_bound] with rho(u) strictly inside
// the box. A target point x on the sphere inside the box is fixed first; for
// scales s = 1, 2, 4, ... <= search_bound each coordinate is looked up
// around s * x_i. If every coordinate has an element in the scaled inner
// interval the tuple is tried directly, otherwise all combinations of the
// elements bracketing s * x_i are tried, best match first. Not finding a
// tuple is a normal result. Throws ConfigError if the box does not meet
// the sphere or its dimension differs from the number of sets.
WitnessResult WitnessInBox(std::span<const IntegerSetSpec> specs, const OpenBox& box,
                           std::uint64_t search_bound, NormKind kind = NormKind::kEuclidean);

}  // namespace dirset

#endif  // DIRSET_DIRECTION_H_
