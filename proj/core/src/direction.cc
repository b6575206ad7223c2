#include "dirset/direction.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <ostream>

#include "dirset/error.h"
#include "dirset/parallel.h"
#include "dirset/report.h"

namespace dirset {

bool ReduceToPrimitive(std::span<std::uint64_t> tuple) {
  std::uint64_t g = 0;
  for (std::uint64_t v : tuple) g = std::gcd(g, v);
  if (g == 0) return false;
  if (g > 1)
    for (auto& v : tuple) v /= g;
  return true;
}

PrimitiveDirection PrimitiveDirection::FromTuple(std::span<const std::uint64_t> tuple) {
  std::vector<std::uint64_t> coords(tuple.begin(), tuple.end());
  if (!ReduceToPrimitive(coords)) throw DomainError("primitive direction of the zero tuple");
  return PrimitiveDirection(std::move(coords));
}

DirectionPoint PrimitiveDirection::ToPoint(NormKind kind) const { return Rho(coords_, kind); }

std::string PrimitiveDirection::ToString() const { return JoinSpace(coords_); }

DirectionSetTruncation::DirectionSetTruncation(std::size_t dim, std::vector<std::uint64_t> sorted_rows,
                                               std::uint64_t bound, bool distinct,
                                               std::optional<SampledMode> sampled)
    : dim_(dim), rows_(std::move(sorted_rows)), bound_(bound), distinct_(distinct), sampled_(sampled) {
  if (dim_ < 2) throw ConfigError("direction sets need k >= 2");
  if (rows_.size() % dim_ != 0) throw ConfigError("truncation rows do not match the dimension");
}

std::vector<PrimitiveDirection> DirectionSetTruncation::Points() const {
  std::vector<PrimitiveDirection> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
  return out;
}

bool DirectionSetTruncation::Contains(std::span<const std::uint64_t> primitive) const {
  if (primitive.size() != dim_) return false;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const auto r = row(mid);
    if (std::lexicographical_compare(r.begin(), r.end(), primitive.begin(), primitive.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < size() && std::equal(primitive.begin(), primitive.end(), row(lo).begin());
}

std::vector<double> DirectionSetTruncation::Images(NormKind kind) const {
  std::vector<double> out(rows_.size());
  std::vector<double> x(dim_);
  for (std::size_t i = 0; i < size(); ++i) {
    const auto r = row(i);
    for (std::size_t j = 0; j < dim_; ++j) x[j] = static_cast<double>(r[j]);
    const DirectionPoint p = Rho(x, kind);
    std::copy(p.coords().begin(), p.coords().end(), out.begin() + static_cast<std::ptrdiff_t>(i * dim_));
  }
  return out;
}

namespace {

bool PairwiseDistinct(std::span<const std::uint64_t> t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i] == t[j]) return false;
  return true;
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform index in [0, n) for draw `counter` of the stream keyed by `seed`.
std::uint64_t DrawIndex(std::uint64_t seed, std::uint64_t counter, std::uint64_t n) {
  const std::uint64_t h = SplitMix64(SplitMix64(seed) ^ SplitMix64(counter * 0xD1B54A32D192ED03ULL + 1));
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(h) * n) >> 64);
}

template <std::size_t K>
using Row = std::array<std::uint64_t, K>;

template <std::size_t K>
void SortUniqueRows(std::vector<Row<K>>& rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

template <std::size_t K>
std::vector<std::uint64_t> MergeAndFlatten(std::vector<std::vector<Row<K>>>& parts) {
  std::size_t total = 0;
  for (auto& p : parts) {
    SortUniqueRows(p);
    total += p.size();
  }
  std::vector<Row<K>> all;
  if (parts.size() == 1) {
    all = std::move(parts.front());
  } else {
    all.reserve(total);
    for (auto& p : parts) {
      all.insert(all.end(), p.begin(), p.end());
      std::vector<Row<K>>().swap(p);
    }
    SortUniqueRows(all);
  }
  std::vector<std::uint64_t> flat;
  flat.reserve(all.size() * K);
  for (const auto& r : all) flat.insert(flat.end(), r.begin(), r.end());
  return flat;
}

template <std::size_t K>
std::vector<std::uint64_t> CollectExhaustive(std::span<const std::vector<std::uint64_t>> sets, bool distinct,
                                             unsigned workers) {
  workers = ResolveWorkers(workers);
  std::vector<std::vector<Row<K>>> parts(workers);
  ParallelChunks(sets[0].size(), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& out = parts[w];
    std::array<std::size_t, K> idx{};
    Row<K> t{};
    for (std::size_t i0 = begin; i0 < end; ++i0) {
      idx.fill(0);
      idx[0] = i0;
      while (true) {
        for (std::size_t j = 0; j < K; ++j) t[j] = sets[j][idx[j]];
        if (!distinct || PairwiseDistinct(t)) {
          ReduceToPrimitive(t);
          out.push_back(t);
        }
        std::size_t j = K - 1;
        while (j > 0 && ++idx[j] == sets[j].size()) idx[j--] = 0;
        if (j == 0) break;
      }
    }
  });
  return MergeAndFlatten<K>(parts);
}

template <std::size_t K>
std::vector<std::uint64_t> CollectSampled(std::span<const std::vector<std::uint64_t>> sets, bool distinct,
                                          const SampledMode& mode, unsigned workers) {
  workers = ResolveWorkers(workers);
  std::vector<std::vector<Row<K>>> parts(workers);
  ParallelChunks(mode.count, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& out = parts[w];
    out.reserve(end - begin);
    Row<K> t{};
    for (std::uint64_t s = begin; s < end; ++s) {
      for (std::size_t j = 0; j < K; ++j) t[j] = sets[j][DrawIndex(mode.seed, s * K + j, sets[j].size())];
      if (distinct && !PairwiseDistinct(t)) continue;
      ReduceToPrimitive(t);
      out.push_back(t);
    }
  });
  return MergeAndFlatten<K>(parts);
}

template <std::size_t K>
std::vector<std::uint64_t> Collect(std::span<const std::vector<std::uint64_t>> sets, bool distinct,
                                   const std::optional<SampledMode>& sampled, unsigned workers) {
  return sampled ? CollectSampled<K>(sets, distinct, *sampled, workers)
                 : CollectExhaustive<K>(sets, distinct, workers);
}

template <std::size_t... Ks>
std::vector<std::uint64_t> Dispatch(std::index_sequence<Ks...>, std::size_t k,
                                    std::span<const std::vector<std::uint64_t>> sets, bool distinct,
                                    const std::optional<SampledMode>& sampled, unsigned workers) {
  std::vector<std::uint64_t> out;
  const bool matched = ((k == Ks + 2 ? (out = Collect<Ks + 2>(sets, distinct, sampled, workers), true) : false) || ...);
  if (!matched) throw ConfigError("unsupported dimension");
  return out;
}

std::uint64_t ProductSize(std::span<const std::vector<std::uint64_t>> sets) {
  unsigned __int128 total = 1;
  for (const auto& s : sets) {
    total *= s.size();
    if (total > (static_cast<unsigned __int128>(1) << 100)) break;
  }
  return total > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                            : static_cast<std::uint64_t>(total);
}

}  // namespace

DirectionSetTruncation BuildTruncationFromValues(std::span<const std::vector<std::uint64_t>> sets,
                                                 std::uint64_t bound, bool distinct,
                                                 std::optional<SampledMode> sampled,
                                                 const TruncationOptions& options) {
  const std::size_t k = sets.size();
  if (k < 2) throw ConfigError("direction sets need k >= 2 sets");
  if (k > kMaxDirectionDim)
    throw ConfigError("direction sets support k <= " + std::to_string(kMaxDirectionDim));
  for (std::size_t i = 0; i < k; ++i)
    if (sets[i].empty())
      throw ConfigError("set " + std::to_string(i + 1) + " has no elements <= " + std::to_string(bound));

  std::vector<std::string> warnings;
  if (distinct) {
    bool all_equal = true;
    for (std::size_t i = 1; i < k; ++i) all_equal = all_equal && sets[i] == sets[0];
    if (all_equal && sets[0].size() < k)
      warnings.push_back("distinct tuples requested but each set has fewer than k = " + std::to_string(k) +
                         " elements <= bound; the |U_i| >= k hypothesis is unavailable");
  }
  if (!sampled) {
    const std::uint64_t product = ProductSize(sets);
    if (product > options.tuple_budget)
      throw ResourceError("exhaustive enumeration needs " + std::to_string(product) +
                          " tuples, above the budget of " + std::to_string(options.tuple_budget) +
                          "; use sampled mode (--sampled N --seed S)");
  } else if (sampled->count == 0) {
    throw ConfigError("sampled mode needs a positive tuple count");
  }
  auto rows = Dispatch(std::make_index_sequence<kMaxDirectionDim - 1>{}, k, sets, distinct, sampled,
                       options.workers);
  DirectionSetTruncation t(k, std::move(rows), bound, distinct, sampled);
  t.warnings = std::move(warnings);
  return t;
}

DirectionSetTruncation BuildTruncation(std::span<const IntegerSetSpec> specs, std::uint64_t bound,
                                       bool distinct, std::optional<SampledMode> sampled,
                                       const TruncationOptions& options) {
  if (specs.size() < 2) throw ConfigError("direction sets need k >= 2 sets");
  if (specs.size() > kMaxDirectionDim)
    throw ConfigError("direction sets support k <= " + std::to_string(kMaxDirectionDim));
  std::vector<std::vector<std::uint64_t>> sets;
  sets.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    std::size_t same = i;
    for (std::size_t j = 0; j < i; ++j)
      if (specs[j] == specs[i]) {
        same = j;
        break;
      }
    sets.push_back(same == i ? Enumerate(specs[i], bound) : sets[same]);
  }
  auto t = BuildTruncationFromValues(sets, bound, distinct, sampled, options);
  for (const auto& s : specs) t.specs.push_back(FormatSetSpec(s));
  return t;
}

void ForEachTuple(std::span<const std::vector<std::uint64_t>> sets, bool distinct, unsigned workers,
                  const std::function<void(unsigned, std::span<const std::uint64_t>)>& visit) {
  const std::size_t k = sets.size();
  if (k == 0) return;
  for (const auto& s : sets)
    if (s.empty()) return;
  ParallelChunks(sets[0].size(), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    std::vector<std::size_t> idx(k);
    std::vector<std::uint64_t> t(k);
    for (std::size_t i0 = begin; i0 < end; ++i0) {
      std::fill(idx.begin(), idx.end(), 0);
      idx[0] = i0;
      while (true) {
        for (std::size_t j = 0; j < k; ++j) t[j] = sets[j][idx[j]];
        if (!distinct || PairwiseDistinct(t)) visit(w, t);
        std::size_t j = k - 1;
        while (j > 0 && ++idx[j] == sets[j].size()) idx[j--] = 0;
        if (j == 0) break;
      }
    }
  });
}

void WriteTruncation(std::ostream& out, const DirectionSetTruncation& truncation) {
  for (std::size_t i = 0; i < truncation.size(); ++i) out << JoinSpace(truncation.row(i)) << '\n';
}

std::string_view ToString(WitnessStrategy strategy) {
  return strategy == WitnessStrategy::kScaledInterval ? "scaled-interval" : "bracketing";
}

namespace {

// Point on the segment from the lower to the upper corner of the box with
// unit norm; strictly inside the box.
std::vector<double> SphereTarget(const OpenBox& box, NormKind kind) {
  std::vector<double> lower, upper, x(box.dim());
  for (const auto& [a, b] : box.intervals()) {
    lower.push_back(a);
    upper.push_back(b);
  }
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = lower[i] + mid * (upper[i] - lower[i]);
    (Norm(x, kind) < 1.0 ? lo : hi) = mid;
  }
  const double t = 0.5 * (lo + hi);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = lower[i] + t * (upper[i] - lower[i]);
  return x;
}

}  // namespace

WitnessResult WitnessInBox(std::span<const IntegerSetSpec> specs, const OpenBox& box,
                           std::uint64_t search_bound, NormKind kind) {
  const std::size_t k = specs.size();
  if (k < 2) throw ConfigError("witness search needs k >= 2 sets");
  if (box.dim() != k)
    throw ConfigError("box has " + std::to_string(box.dim()) + " intervals but there are " +
                      std::to_string(k) + " sets");
  if (!box.MeetsSphere(kind)) throw ConfigError("box does not meet the unit sphere");
  if (search_bound == 0) throw ConfigError("search bound must be >= 1");

  WitnessResult result;
  result.target = SphereTarget(box, kind);
  const auto& x = result.target;
  std::vector<double> radius(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto [a, b] = box.intervals()[i];
    radius[i] = std::min(x[i] - a, b - x[i]);
  }

  std::vector<std::vector<std::uint64_t>> sets;
  for (const auto& s : specs) {
    sets.push_back(Enumerate(s, search_bound));
    if (sets.back().empty()) return result;
  }

  std::vector<double> image(k);
  auto inside = [&](std::span<const std::uint64_t> tuple) {
    const DirectionPoint p = Rho(tuple, kind);
    std::copy(p.coords().begin(), p.coords().end(), image.begin());
    return box.ContainsStrictly(image);
  };

  for (std::uint64_t scale = 1; scale <= search_bound; scale *= 2) {
    result.scales.push_back(scale);
    const double s = static_cast<double>(scale);
    std::vector<std::vector<std::uint64_t>> brackets(k);
    std::vector<std::uint64_t> direct(k);
    bool all_direct = true;
    for (std::size_t i = 0; i < k; ++i) {
      const double target = s * x[i];
      const auto& set = sets[i];
      auto it = std::upper_bound(set.begin(), set.end(), target,
                                 [](double t, std::uint64_t v) { return t < static_cast<double>(v); });
      if (it != set.begin()) brackets[i].push_back(*std::prev(it));
      if (it != set.end()) brackets[i].push_back(*it);
      // Element nearest the target, if it lies in the scaled inner interval.
      std::optional<std::uint64_t> best;
      for (std::uint64_t v : brackets[i])
        if (!best || std::abs(static_cast<double>(v) - target) < std::abs(static_cast<double>(*best) - target))
          best = v;
      const double lo = s * (x[i] - radius[i]), hi = s * (x[i] + radius[i]);
      if (best && static_cast<double>(*best) > lo && static_cast<double>(*best) <= hi)
        direct[i] = *best;
      else
        all_direct = false;
    }
    if (all_direct && inside(direct)) {
      result.tuple = direct;
      result.strategy = WitnessStrategy::kScaledInterval;
      return result;
    }
    // Try every combination of bracketing elements, keep the closest hit.
    std::vector<std::size_t> pick(k, 0);
    std::vector<std::uint64_t> tuple(k);
    std::optional<std::vector<std::uint64_t>> best;
    double best_distance = 0.0;
    bool any_empty = false;
    for (const auto& b : brackets) any_empty = any_empty || b.empty();
    while (!any_empty) {
      for (std::size_t i = 0; i < k; ++i) tuple[i] = brackets[i][pick[i]];
      if (inside(tuple)) {
        const double d = Distance(std::span<const double>(image), std::span<const double>(x));
        if (!best || d < best_distance || (d == best_distance && tuple < *best)) {
          best = tuple;
          best_distance = d;
        }
      }
      std::size_t i = 0;
      while (i < k && ++pick[i] == brackets[i].size()) pick[i++] = 0;
      if (i == k) break;
    }
    if (best) {
      result.tuple = std::move(best);
      result.strategy = WitnessStrategy::kBracketing;
      return result;
    }
    if (scale > search_bound / 2) break;
  }
  return result;
}

}  // namespace dirset
