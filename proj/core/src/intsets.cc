#include "dirset/intsets.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "dirset/arith.h"
#include "dirset/error.h"

namespace dirset {
namespace {

using i128 = __int128;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void SortUnique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// ---- BlockUnion -----------------------------------------------------------

Rational MinLeft(const BlockUnion& b) {
  Rational m = b.segments.front().first;
  for (const auto& s : b.segments) m = std::min(m, s.first);
  return m;
}

std::vector<std::uint64_t> EnumerateBlocks(const BlockUnion& b, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  const Rational amin = MinLeft(b);
  const auto x = static_cast<std::int64_t>(std::min<std::uint64_t>(bound, std::numeric_limits<std::int64_t>::max() / 4));
  for (std::int64_t scale = 1;; scale *= static_cast<std::int64_t>(b.q)) {
    if (CeilTimes(amin, scale) > x) break;
    for (const auto& [lo, hi] : b.segments) {
      const std::int64_t first = std::max<std::int64_t>(1, CeilTimes(lo, scale));
      const std::int64_t last = std::min<std::int64_t>(x, CeilTimes(hi, scale) - 1);
      for (std::int64_t n = first; n <= last; ++n) out.push_back(static_cast<std::uint64_t>(n));
    }
    if (scale > x / static_cast<std::int64_t>(b.q)) break;
  }
  SortUnique(out);
  return out;
}

bool BlocksContain(const BlockUnion& b, std::uint64_t n) {
  const Rational amin = MinLeft(b);
  const auto nn = static_cast<std::int64_t>(n);
  for (std::int64_t scale = 1;; scale *= static_cast<std::int64_t>(b.q)) {
    if (CeilTimes(amin, scale) > nn) return false;
    for (const auto& [lo, hi] : b.segments) {
      // lo * scale <= n < hi * scale
      if (CompareFractions(lo.num(), lo.den(), nn, scale) != std::strong_ordering::greater &&
          CompareFractions(nn, scale, hi.num(), hi.den()) == std::strong_ordering::less)
        return true;
    }
    if (scale > nn / static_cast<std::int64_t>(b.q)) return false;
  }
}

// ---- PolynomialImage ------------------------------------------------------

constexpr std::uint64_t kLatticeBudget = 1'000'000'000;

std::uint64_t LatticeSize(const PolynomialImage& p) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < p.f.arity(); ++i) {
    if (total > kLatticeBudget / p.lattice_bound) return kLatticeBudget + 1;
    total *= p.lattice_bound;
  }
  return total;
}

template <typename Fn>
void ForEachLatticeValue(const PolynomialImage& p, Fn&& fn) {
  if (LatticeSize(p) > kLatticeBudget)
    throw ResourceError("lattice box {1.." + std::to_string(p.lattice_bound) + "}^" +
                        std::to_string(p.f.arity()) + " exceeds " + std::to_string(kLatticeBudget) + " points");
  std::vector<std::int64_t> point(p.f.arity(), 1);
  const auto limit = static_cast<std::int64_t>(p.lattice_bound);
  while (true) {
    if (auto v = p.f.Evaluate(point); v && *v >= 1) {
      if (!fn(static_cast<std::uint64_t>(*v))) return;
    }
    std::size_t i = 0;
    while (i < point.size() && point[i] == limit) point[i++] = 1;
    if (i == point.size()) return;
    ++point[i];
  }
}

// Beyond this argument the diagonal polynomial is strictly increasing:
// a Cauchy bound on the real roots of its derivative.
std::int64_t MonotoneFrom(std::span<const std::int64_t> g) {
  const std::size_t d = g.size() - 1;
  if (d <= 1) return 1;
  const double lead = static_cast<double>(d) * static_cast<double>(g[d]);
  double worst = 0.0;
  for (std::size_t i = 1; i < d; ++i)
    worst = std::max(worst, std::abs(static_cast<double>(i) * static_cast<double>(g[i])) / lead);
  return static_cast<std::int64_t>(std::ceil(1.0 + worst)) + 1;
}

std::vector<std::int64_t> CheckedDiagonal(const PolynomialImage& p) {
  const std::vector<std::int64_t> g = p.f.Diagonal();
  if (p.f.LeadingCoefficientSum() <= 0)
    throw ConfigError("polynomial '" + p.f.ToString() + "': the coefficients of its degree-" +
                      std::to_string(p.f.TotalDegree()) +
                      " terms sum to a non-positive value, so the diagonal g(n) = f(n,...,n) is not "
                      "eventually increasing and the denseness criterion does not apply");
  if (p.f.TotalDegree() == 0)
    throw ConfigError("polynomial '" + p.f.ToString() + "' is constant; its image is a single value");
  return g;
}

// Positive diagonal values g(n) <= bound, n >= 1.
void AppendDiagonal(const PolynomialImage& p, std::uint64_t bound, std::vector<std::uint64_t>& out) {
  const std::vector<std::int64_t> g = CheckedDiagonal(p);
  const std::int64_t from = MonotoneFrom(g);
  for (std::int64_t n = 1;; ++n) {
    const auto v = EvaluateUnivariate(g, n);
    if (!v) break;  // past any bound we can represent
    if (*v >= 1 && static_cast<std::uint64_t>(*v) <= bound) out.push_back(static_cast<std::uint64_t>(*v));
    if (n >= from && *v > 0 && static_cast<std::uint64_t>(*v) > bound) break;
  }
}

std::vector<std::uint64_t> EnumeratePolynomial(const PolynomialImage& p, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  ForEachLatticeValue(p, [&](std::uint64_t v) {
    if (v <= bound) out.push_back(v);
    return true;
  });
  if (p.diagonal_augment) AppendDiagonal(p, bound, out);
  SortUnique(out);
  return out;
}

bool PolynomialContains(const PolynomialImage& p, std::uint64_t n) {
  bool found = false;
  ForEachLatticeValue(p, [&](std::uint64_t v) {
    found = v == n;
    return !found;
  });
  if (found || !p.diagonal_augment) return found;
  std::vector<std::uint64_t> diag;
  AppendDiagonal(p, n, diag);
  return std::find(diag.begin(), diag.end(), n) != diag.end();
}

// ---- Powers ---------------------------------------------------------------

// m^r if it is <= limit, else nullopt.
std::optional<std::uint64_t> PowAtMost(std::uint64_t m, unsigned r, std::uint64_t limit) {
  i128 acc = 1;
  for (unsigned i = 0; i < r; ++i) {
    acc *= m;
    if (acc > limit) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<std::uint64_t> EnumeratePerfectPowers(const PerfectPowers& p, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (unsigned r = p.min_exponent; r < 64; ++r) {
    if (!PowAtMost(2, r, bound)) break;
    for (std::uint64_t m = 2;; ++m) {
      const auto v = PowAtMost(m, r, bound);
      if (!v) break;
      out.push_back(*v);
    }
  }
  SortUnique(out);
  return out;
}

bool IsPerfectPower(const PerfectPowers& p, std::uint64_t n) {
  if (n < 4) return false;
  for (unsigned r = p.min_exponent; r < 64; ++r) {
    if (!PowAtMost(2, r, n)) break;
    auto root = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / r)));
    for (std::uint64_t m = root > 2 ? root - 1 : 2; m <= root + 1; ++m) {
      const auto v = PowAtMost(m, r, n);
      if (v && *v == n) return true;
    }
  }
  return false;
}

std::vector<std::uint64_t> EnumerateTwoThree(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t base : {2, 3})
    for (std::uint64_t v = base * base; v <= bound; v *= base) {
      out.push_back(v);
      if (v > bound / base) break;
    }
  SortUnique(out);
  return out;
}

bool TwoThreeContains(std::uint64_t n) {
  for (std::uint64_t base : {2, 3}) {
    if (n < base * base) continue;
    std::uint64_t v = n;
    while (v % base == 0) v /= base;
    if (v == 1) return true;
  }
  return false;
}

// ---- Weighted sets --------------------------------------------------------

std::vector<std::uint64_t> EnumerateWeightedOmega(std::uint64_t bound) {
  if (bound < 2) return {};
  const SieveTable table = Sieve(SieveKind::kOmega, bound);
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= bound; ++k) {
    const std::uint64_t w = table[k];
    if (w <= bound / k) out.push_back(k * w);
  }
  SortUnique(out);
  return out;
}

std::vector<std::uint64_t> EnumerateWeightedTotient(std::uint64_t bound) {
  // phi(k) >= sqrt(k / 2), so k phi(k) <= bound forces k <= (sqrt(2) bound)^(2/3).
  const double cap = std::pow(std::sqrt(2.0) * static_cast<double>(bound), 2.0 / 3.0);
  const std::uint64_t kmax = std::min<std::uint64_t>(bound, static_cast<std::uint64_t>(cap) + 2);
  if (kmax == 0) return {};
  const SieveTable table = Sieve(SieveKind::kTotient, kmax);
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    const std::uint64_t phi = table[k];
    if (phi <= bound / k) out.push_back(k * phi);
  }
  SortUnique(out);
  return out;
}

bool WeightedOmegaContains(std::uint64_t n) {
  for (std::uint64_t w = 1; w <= 16 && w <= n; ++w)
    if (n % w == 0 && Omega(n / w) == w) return true;
  return false;
}

void Divisors(const std::vector<std::pair<std::uint64_t, unsigned>>& factors, std::size_t i,
              std::uint64_t acc, std::vector<std::uint64_t>& out) {
  if (i == factors.size()) {
    out.push_back(acc);
    return;
  }
  std::uint64_t pk = 1;
  for (unsigned e = 0; e <= factors[i].second; ++e) {
    Divisors(factors, i + 1, acc * pk, out);
    pk *= factors[i].first;
  }
}

bool WeightedTotientContains(std::uint64_t n) {
  std::vector<std::uint64_t> divisors;
  Divisors(Factorize(n), 0, 1, divisors);
  for (std::uint64_t k : divisors) {
    // phi(k) <= k, so only k with k^2 >= n can work.
    if (static_cast<i128>(k) * k < n) continue;
    if (static_cast<i128>(k) * Totient(k) == n) return true;
  }
  return false;
}

}  // namespace

void Validate(const IntegerSetSpec& spec) {
  std::visit(Overloaded{
                 [](const BlockUnion& b) {
                   if (b.q < 2) throw ConfigError("block union needs q >= 2");
                   if (b.segments.empty()) throw ConfigError("block union needs at least one segment");
                   for (const auto& [lo, hi] : b.segments) {
                     if (lo <= Rational(0)) throw ConfigError("block segment start must be positive");
                     if (!(lo < hi))
                       throw ConfigError("block segment (" + lo.ToString() + ", " + hi.ToString() +
                                         ") needs a < b");
                   }
                 },
                 [](const PrimesInAP& p) {
                   if (p.m == 0) throw ConfigError("primes-in-AP modulus must be >= 1");
                   if (std::gcd(p.a % p.m, p.m) != 1)
                     throw ConfigError("primes-in-AP needs gcd(a, m) = 1");
                 },
                 [](const PolynomialImage& p) {
                   if (p.lattice_bound < 1) throw ConfigError("polynomial lattice bound L must be >= 1");
                 },
                 [](const PerfectPowers& p) {
                   if (p.min_exponent < 3) throw ConfigError("perfect powers need min_exponent >= 3");
                 },
                 [](const WeightedByOmega&) {},
                 [](const WeightedByTotient&) {},
                 [](const TwoThreePowers&) {},
                 [](const Explicit& e) {
                   for (std::size_t i = 0; i < e.values.size(); ++i) {
                     if (e.values[i] == 0) throw ConfigError("explicit set values must be positive");
                     if (i && e.values[i] <= e.values[i - 1])
                       throw ConfigError("explicit set values must be strictly ascending");
                   }
                 },
             },
             spec);
}

std::vector<std::uint64_t> Enumerate(const IntegerSetSpec& spec, std::uint64_t bound) {
  Validate(spec);
  if (bound == 0) throw ConfigError("enumeration bound must be >= 1");
  return std::visit(
      Overloaded{
          [&](const BlockUnion& b) { return EnumerateBlocks(b, bound); },
          [&](const PrimesInAP& p) { return PrimesInAp(p.m, p.a, bound); },
          [&](const PolynomialImage& p) { return EnumeratePolynomial(p, bound); },
          [&](const PerfectPowers& p) { return EnumeratePerfectPowers(p, bound); },
          [&](const WeightedByOmega&) { return EnumerateWeightedOmega(bound); },
          [&](const WeightedByTotient&) { return EnumerateWeightedTotient(bound); },
          [&](const TwoThreePowers&) { return EnumerateTwoThree(bound); },
          [&](const Explicit& e) {
            return std::vector<std::uint64_t>(e.values.begin(),
                                              std::upper_bound(e.values.begin(), e.values.end(), bound));
          },
      },
      spec);
}

bool Contains(const IntegerSetSpec& spec, std::uint64_t n) {
  if (n == 0) return false;
  return std::visit(Overloaded{
                        [&](const BlockUnion& b) { return BlocksContain(b, n); },
                        [&](const PrimesInAP& p) { return IsPrime(n) && n % p.m == p.a % p.m; },
                        [&](const PolynomialImage& p) { return PolynomialContains(p, n); },
                        [&](const PerfectPowers& p) { return IsPerfectPower(p, n); },
                        [&](const WeightedByOmega&) { return WeightedOmegaContains(n); },
                        [&](const WeightedByTotient&) { return WeightedTotientContains(n); },
                        [&](const TwoThreePowers&) { return TwoThreeContains(n); },
                        [&](const Explicit& e) {
                          return std::binary_search(e.values.begin(), e.values.end(), n);
                        },
                    },
                    spec);
}

std::vector<std::string> EnumerationNotes(const IntegerSetSpec& spec, std::uint64_t bound,
                                          std::size_t element_count) {
  std::vector<std::string> notes;
  if (const auto* p = std::get_if<PolynomialImage>(&spec)) {
    notes.push_back("lattice box {1.." + std::to_string(p->lattice_bound) + "}^" +
                    std::to_string(p->f.arity()) +
                    (p->diagonal_augment ? " plus the diagonal g(n) = f(n,...,n)" : "") +
                    "; values outside the box are not searched");
    if (element_count == 0)
      notes.push_back("polynomial image has no positive values <= " + std::to_string(bound) +
                      " in the searched region");
  } else if (const auto* e = std::get_if<Explicit>(&spec); e && !e->source.empty()) {
    notes.push_back("loaded from " + e->source);
  }
  if (element_count == 0 && notes.size() < 2)
    notes.push_back("no elements <= " + std::to_string(bound));
  return notes;
}

std::vector<std::uint64_t> DiagonalSequence(const PolynomialImage& spec, std::size_t count) {
  const std::vector<std::int64_t> g = CheckedDiagonal(spec);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::int64_t n = 1; out.size() < count; ++n) {
    const auto v = EvaluateUnivariate(g, n);
    if (!v) throw ResourceError("diagonal sequence overflows 64-bit integers after " +
                                std::to_string(out.size()) + " terms");
    if (*v >= 1 && (out.empty() || static_cast<std::uint64_t>(*v) > out.back()))
      out.push_back(static_cast<std::uint64_t>(*v));
  }
  return out;
}

Explicit ParseExplicit(std::string_view text) {
  Explicit e;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    std::uint64_t v = 0;
    for (char c : line) {
      if (c < '0' || c > '9') throw ParseError("expected a positive integer, got '" + std::string(line) + "'", line_no);
      if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) throw ParseError("integer too large", line_no);
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (v == 0) throw ParseError("values must be positive", line_no);
    if (!e.values.empty() && v == e.values.back())
      throw ParseError("duplicate value " + std::to_string(v), line_no);
    if (!e.values.empty() && v < e.values.back())
      throw ParseError("value " + std::to_string(v) + " is not ascending", line_no);
    e.values.push_back(v);
  }
  return e;
}

Explicit LoadExplicit(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open set file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Explicit e = ParseExplicit(buf.str());
  e.source = path.string();
  return e;
}

}  // namespace dirset
