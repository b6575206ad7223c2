#include "dirset/geometry.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "dirset/error.h"

namespace dirset {

std::string_view ToString(NormKind kind) {
  return kind == NormKind::kEuclidean ? "euclidean" : "l1";
}

NormKind ParseNormKind(std::string_view text) {
  if (text == "euclidean" || text == "l2") return NormKind::kEuclidean;
  if (text == "l1") return NormKind::kL1;
  throw ConfigError("unknown norm '" + std::string(text) + "' (expected euclidean or l1)");
}

double Norm(std::span<const double> x, NormKind kind) {
  double acc = 0.0;
  if (kind == NormKind::kL1) {
    for (double v : x) acc += std::abs(v);
    return acc;
  }
  // Scaled accumulation keeps huge integer tuples from overflowing.
  double scale = 0.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  for (double v : x) {
    const double r = v / scale;
    acc += r * r;
  }
  return scale * std::sqrt(acc);
}

DirectionPoint::DirectionPoint(std::vector<double> coords, NormKind kind)
    : coords_(std::move(coords)), kind_(kind) {
  if (coords_.size() < 2) throw DomainError("direction needs at least 2 coordinates");
  bool positive = false;
  for (double v : coords_) {
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError("direction coordinate outside [0, 1]");
    positive = positive || v > 0.0;
  }
  if (!positive) throw DomainError("direction with all coordinates zero");
  if (std::abs(Norm(coords_, kind_) - 1.0) > kUnitNormTolerance)
    throw DomainError("direction is not of unit norm");
}

IndexSubset::IndexSubset(std::vector<std::size_t> indices, std::size_t dim)
    : indices_(std::move(indices)), dim_(dim) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (indices_.empty()) throw DomainError("index subset must be non-empty");
  if (indices_.back() >= dim_) throw DomainError("index subset entry out of range");
}

IndexSubset IndexSubset::Full(std::size_t dim) {
  std::vector<std::size_t> all(dim);
  for (std::size_t i = 0; i < dim; ++i) all[i] = i;
  return IndexSubset(std::move(all), dim);
}

bool IndexSubset::Contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

bool IndexSubset::Meets(std::span<const double> x) const {
  for (std::size_t i : indices_)
    if (i < x.size() && x[i] != 0.0) return true;
  return false;
}

std::vector<IndexSubset> IndexSubset::AllNonEmpty(std::size_t dim) {
  std::vector<IndexSubset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << dim); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < dim; ++i)
      if (mask >> i & 1) idx.push_back(i);
    out.emplace_back(std::move(idx), dim);
  }
  return out;
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) throw DomainError("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::Identity(std::size_t dim) {
  std::vector<std::size_t> images(dim);
  for (std::size_t i = 0; i < dim; ++i) images[i] = i;
  return Permutation(std::move(images));
}

bool Permutation::IsIdentity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::Inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

OpenBox::OpenBox(std::vector<std::pair<double, double>> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.size() < 2) throw ConfigError("box needs at least 2 intervals");
  for (const auto& [lo, hi] : intervals_)
    if (!(lo >= 0.0 && lo < hi)) throw ConfigError("box interval must satisfy 0 <= a < b");
}

bool OpenBox::ContainsStrictly(std::span<const double> x) const {
  if (x.size() != intervals_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] > intervals_[i].first && x[i] < intervals_[i].second)) return false;
  return true;
}

bool OpenBox::MeetsSphere(NormKind kind) const {
  std::vector<double> lower, upper;
  for (const auto& [lo, hi] : intervals_) {
    lower.push_back(lo);
    upper.push_back(hi);
  }
  return Norm(lower, kind) < 1.0 && Norm(upper, kind) > 1.0;
}

DirectionPoint Rho(std::span<const double> x, NormKind kind) {
  if (x.size() < 2) throw DomainError("rho needs at least 2 coordinates");
  for (double v : x)
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("rho of a tuple with a negative coordinate");
  const double scale = *std::max_element(x.begin(), x.end());
  if (scale == 0.0) throw DomainError("rho of the zero vector");
  // Normalizing x / max(x) makes integer rescalings give bit-identical output.
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] / scale;
  const double n = Norm(out, kind);
  for (double& v : out) v = std::min(1.0, v / n);
  return DirectionPoint(std::move(out), kind);
}

DirectionPoint Rho(std::span<const std::uint64_t> x, NormKind kind) {
  std::vector<double> d(x.begin(), x.end());
  return Rho(d, kind);
}

DirectionPoint RhoProjection(const DirectionPoint& x, const IndexSubset& subset) {
  if (subset.dim() != x.dim()) throw DomainError("index subset dimension mismatch");
  if (!subset.Meets(x.coords())) throw DomainError("index subset does not meet the point");
  std::vector<double> y(x.dim(), 0.0);
  for (std::size_t i : subset.indices()) y[i] = x[i];
  if (subset.indices().size() == x.dim()) return x;
  return Rho(y, x.norm_kind());
}

DirectionPoint Permute(const DirectionPoint& x, const Permutation& p) {
  if (p.dim() != x.dim()) throw DomainError("permutation dimension mismatch");
  std::vector<double> y(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) y[i] = x[p.images()[i]];
  return DirectionPoint(std::move(y), x.norm_kind());
}

double Distance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("distance between points of different dimension");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

double Distance(const DirectionPoint& x, const DirectionPoint& y) {
  if (x.norm_kind() != y.norm_kind()) throw DomainError("distance between points of different norms");
  return Distance(x.coords(), y.coords());
}

namespace {

void SimplexLattice(std::size_t k, std::size_t total, std::vector<std::size_t>& tuple,
                    std::size_t pos, NormKind norm, std::vector<DirectionPoint>& out) {
  if (pos + 1 == k) {
    tuple[pos] = total;
    std::vector<double> x(tuple.begin(), tuple.end());
    out.push_back(Rho(x, norm));
    return;
  }
  // Descending first coordinate so the axis point (total, 0, ...) comes first.
  for (std::size_t v = total + 1; v-- > 0;) {
    tuple[pos] = v;
    SimplexLattice(k, total - v, tuple, pos + 1, norm, out);
  }
}

}  // namespace

std::vector<DirectionPoint> ProbeGrid(std::size_t k, std::size_t resolution, const ProbeOptions& options) {
  if (k < 2) throw ConfigError("probe grid needs k >= 2");
  if (resolution < 2) throw ConfigError("probe resolution must be >= 2");
  std::vector<DirectionPoint> out;
  if (options.scheme == ProbeScheme::kRandom) {
    std::mt19937_64 gen(options.seed);
    // Box-Muller on raw engine output; std distributions are not
    // reproducible across standard libraries.
    auto uniform = [&gen] { return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53; };
    out.reserve(resolution);
    while (out.size() < resolution) {
      std::vector<double> x(k);
      for (std::size_t i = 0; i < k; ++i) {
        const double u1 = uniform(), u2 = uniform();
        x[i] = std::abs(std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2));
      }
      if (Norm(x, NormKind::kEuclidean) == 0.0) continue;
      out.push_back(Rho(x, options.norm));
    }
    return out;
  }
  if (k == 2) {
    out.reserve(resolution);
    for (std::size_t j = 0; j < resolution; ++j) {
      if (j == 0) {
        out.push_back(Rho(std::vector<double>{1.0, 0.0}, options.norm));
      } else if (j + 1 == resolution) {
        out.push_back(Rho(std::vector<double>{0.0, 1.0}, options.norm));
      } else {
        const double theta = static_cast<double>(j) * std::numbers::pi / (2.0 * static_cast<double>(resolution - 1));
        out.push_back(Rho(std::vector<double>{std::cos(theta), std::sin(theta)}, options.norm));
      }
    }
    return out;
  }
  std::vector<std::size_t> tuple(k);
  SimplexLattice(k, resolution, tuple, 0, options.norm, out);
  return out;
}

bool IsAxisAdjacent(std::span<const double> x, double epsilon) {
  for (double v : x)
    if (v <= epsilon) return true;
  return false;
}

}  // namespace dirset
