#ifndef DIRSET_GEOMETRY_H_
#define DIRSET_GEOMETRY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace dirset {

enum class NormKind { kEuclidean, kL1 };

std::string_view ToString(NormKind kind);
NormKind ParseNormKind(std::string_view text);

// Absolute tolerance for the unit-norm invariant.
inline constexpr double kUnitNormTolerance = 1e-12;

double Norm(std::span<const double> x, NormKind kind);

// A point of the non-negative unit-sphere octant: k >= 2 coordinates in
// [0, 1], unit norm, at least one coordinate positive.
class DirectionPoint {
 public:
  // Validates the invariants; throws DomainError on violation.
  DirectionPoint(std::vector<double> coords, NormKind kind = NormKind::kEuclidean);

  std::span<const double> coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::size_t dim() const { return coords_.size(); }
  NormKind norm_kind() const { return kind_; }

  friend bool operator==(const DirectionPoint&, const DirectionPoint&) = default;

 private:
  std::vector<double> coords_;
  NormKind kind_;
};

// Non-empty set of coordinate indices of a k-tuple. Indices are 0-based.
class IndexSubset {
 public:
  IndexSubset(std::vector<std::size_t> indices, std::size_t dim);

  static IndexSubset Full(std::size_t dim);

  std::span<const std::size_t> indices() const { return indices_; }
  std::size_t dim() const { return dim_; }
  bool Contains(std::size_t i) const;
  // True when x has a non-zero coordinate at some index of the subset.
  bool Meets(std::span<const double> x) const;

  // Every non-empty subset of {0, ..., dim-1}, ordered by bitmask.
  static std::vector<IndexSubset> AllNonEmpty(std::size_t dim);

 private:
  std::vector<std::size_t> indices_;  // sorted, unique
  std::size_t dim_;
};

// Bijection on {0, ..., k-1}. Applied to a tuple x it yields y with
// y[i] = x[images[i]].
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation Identity(std::size_t dim);

  std::span<const std::size_t> images() const { return images_; }
  std::size_t dim() const { return images_.size(); }
  bool IsIdentity() const;
  Permutation Inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

// Open axis-aligned box prod (lower_i, upper_i) with 0 <= lower_i < upper_i.
class OpenBox {
 public:
  explicit OpenBox(std::vector<std::pair<double, double>> intervals);

  std::size_t dim() const { return intervals_.size(); }
  std::span<const std::pair<double, double>> intervals() const { return intervals_; }
  bool ContainsStrictly(std::span<const double> x) const;
  // True when the box intersects the unit sphere of `kind`. Because the
  // box is convex and the norm is monotone in every coordinate on the
  // octant, this holds iff |lower| < 1 < |upper|.
  bool MeetsSphere(NormKind kind) const;

 private:
  std::vector<std::pair<double, double>> intervals_;
};

// x / |x| for a non-negative tuple with a positive coordinate.
DirectionPoint Rho(std::span<const double> x, NormKind kind = NormKind::kEuclidean);
DirectionPoint Rho(std::span<const std::uint64_t> x, NormKind kind = NormKind::kEuclidean);

// Zeroes the coordinates outside `subset` and renormalizes.
DirectionPoint RhoProjection(const DirectionPoint& x, const IndexSubset& subset);

DirectionPoint Permute(const DirectionPoint& x, const Permutation& p);

// Euclidean distance between the coordinate tuples.
double Distance(const DirectionPoint& x, const DirectionPoint& y);
double Distance(std::span<const double> x, std::span<const double> y);

enum class ProbeScheme { kGrid, kRandom };

struct ProbeOptions {
  ProbeScheme scheme = ProbeScheme::kGrid;
  std::uint64_t seed = 0;  // kRandom only
  NormKind norm = NormKind::kEuclidean;
};

// Deterministic probe points on the octant.
//  - grid, k = 2: `resolution` equally spaced angles in [0, pi/2].
//  - grid, k >= 3: every non-negative integer k-tuple summing to
//    `resolution`, normalized.
//  - random: `resolution` points drawn from the uniform distribution on the
//    octant of the Euclidean sphere (then renormalized under `norm`).
// Throws ConfigError when resolution < 2 or k < 2.
std::vector<DirectionPoint> ProbeGrid(std::size_t k, std::size_t resolution,
                                      const ProbeOptions& options = {});

// True when some coordinate of x is within epsilon of zero, i.e. x lies
// within epsilon of a coordinate hyperplane.
bool IsAxisAdjacent(std::span<const double> x, double epsilon);

}  // namespace dirset

#endif  // DIRSET_GEOMETRY_H_
