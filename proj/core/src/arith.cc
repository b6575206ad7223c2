#include "dirset/arith.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dirset/error.h"
#include "dirset/parallel.h"

namespace dirset {

std::string_view ToString(SieveKind kind) {
  switch (kind) {
    case SieveKind::kOmega: return "omega";
    case SieveKind::kTotient: return "totient";
    case SieveKind::kPrimes: return "primes";
  }
  return "?";
}

SieveKind ParseSieveKind(std::string_view text) {
  if (text == "omega") return SieveKind::kOmega;
  if (text == "totient" || text == "phi") return SieveKind::kTotient;
  if (text == "primes") return SieveKind::kPrimes;
  throw ConfigError("unknown sieve kind '" + std::string(text) + "' (expected omega, totient or primes)");
}

SieveTable::SieveTable(SieveKind kind, std::uint64_t bound, std::vector<std::uint64_t> values)
    : kind_(kind), bound_(bound), values_(std::move(values)) {
  if (values_.size() != bound_ + 1) throw ConfigError("sieve table size does not match its bound");
}

SieveTable Sieve(SieveKind kind, std::uint64_t bound, const SieveOptions& options) {
  if (bound == 0) throw ConfigError("sieve bound must be >= 1");
  const std::uint64_t bytes = (bound + 1) * (sizeof(std::uint64_t) + 1);
  if (bound > kSegmentedThreshold || bytes > options.memory_budget_bytes)
    throw ResourceError("sieve bound " + std::to_string(bound) +
                        " exceeds the in-memory budget; use the segmented mode");

  std::vector<std::uint64_t> values(bound + 1, 0);
  std::vector<char> composite(bound + 1, 0);
  std::vector<std::uint64_t> primes;
  if (kind == SieveKind::kTotient) values[1] = 1;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      values[i] = kind == SieveKind::kTotient ? i - 1 : 1;
    }
    for (std::uint64_t p : primes) {
      const std::uint64_t ip = i * p;
      if (ip > bound) break;
      composite[ip] = 1;
      if (i % p == 0) {
        if (kind == SieveKind::kOmega) values[ip] = values[i];
        if (kind == SieveKind::kTotient) values[ip] = values[i] * p;
        break;
      }
      if (kind == SieveKind::kOmega) values[ip] = values[i] + 1;
      if (kind == SieveKind::kTotient) values[ip] = values[i] * (p - 1);
    }
  }
  return SieveTable(kind, bound, std::move(values));
}

namespace {

std::vector<std::uint64_t> SmallPrimes(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<char> composite(bound + 1, 0);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = 1;
  }
  return primes;
}

std::uint64_t ISqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void SieveSegment(SieveKind kind, std::uint64_t lo, std::uint64_t hi,
                  std::span<const std::uint64_t> base_primes, std::vector<std::uint64_t>& values,
                  std::vector<std::uint64_t>& rest) {
  const std::uint64_t len = hi - lo + 1;
  values.assign(len, 0);
  if (kind == SieveKind::kPrimes) {
    std::fill(values.begin(), values.end(), 1);
    for (std::uint64_t p : base_primes) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t m = start; m <= hi; m += p) values[m - lo] = 0;
    }
    if (lo <= 1) values[1 - lo] = 0;
    return;
  }
  rest.resize(len);
  for (std::uint64_t i = 0; i < len; ++i) {
    rest[i] = lo + i;
    values[i] = kind == SieveKind::kTotient ? lo + i : 0;
  }
  for (std::uint64_t p : base_primes) {
    if (p * p > hi) break;
    for (std::uint64_t m = (lo + p - 1) / p * p; m <= hi; m += p) {
      const std::uint64_t i = m - lo;
      if (kind == SieveKind::kOmega) ++values[i];
      else values[i] = values[i] / p * (p - 1);
      while (rest[i] % p == 0) rest[i] /= p;
    }
  }
  for (std::uint64_t i = 0; i < len; ++i) {
    if (rest[i] <= 1) continue;
    if (kind == SieveKind::kOmega) ++values[i];
    else values[i] = values[i] / rest[i] * (rest[i] - 1);
  }
}

}  // namespace

void ForEachSegment(SieveKind kind, std::uint64_t bound, std::uint64_t segment_size,
                    const SegmentVisitor& visit, unsigned workers) {
  if (bound == 0) throw ConfigError("sieve bound must be >= 1");
  if (segment_size == 0) throw ConfigError("segment size must be >= 1");
  const std::vector<std::uint64_t> base = SmallPrimes(ISqrt(bound) + 1);
  const std::uint64_t segment_count = (bound + segment_size - 1) / segment_size;
  const unsigned batch = ResolveWorkers(workers);
  std::vector<std::vector<std::uint64_t>> values(batch), rest(batch);
  for (std::uint64_t first_segment = 0; first_segment < segment_count; first_segment += batch) {
    const std::uint64_t in_batch = std::min<std::uint64_t>(batch, segment_count - first_segment);
    ParallelChunks(in_batch, batch, [&](unsigned, std::size_t begin, std::size_t end) {
      for (std::size_t s = begin; s < end; ++s) {
        const std::uint64_t lo = 1 + (first_segment + s) * segment_size;
        const std::uint64_t hi = std::min(bound, lo + segment_size - 1);
        SieveSegment(kind, lo, hi, base, values[s], rest[s]);
      }
    });
    for (std::uint64_t s = 0; s < in_batch; ++s)
      visit(1 + (first_segment + s) * segment_size, values[s]);
  }
}

std::vector<std::uint64_t> PrimesUpTo(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  if (bound <= (std::uint64_t{1} << 24)) return SmallPrimes(bound);
  ForEachSegment(SieveKind::kPrimes, bound, std::uint64_t{1} << 20,
                 [&](std::uint64_t first, std::span<const std::uint64_t> values) {
                   for (std::size_t i = 0; i < values.size(); ++i)
                     if (values[i]) out.push_back(first + i);
                 });
  return out;
}

std::vector<std::uint64_t> PrimesInAp(std::uint64_t m, std::uint64_t a, std::uint64_t bound) {
  if (m == 0) throw ConfigError("primes-in-AP modulus must be >= 1");
  const std::uint64_t residue = a % m;
  if (std::gcd(residue, m) != 1)
    throw ConfigError("primes-in-AP needs gcd(a, m) = 1; got a = " + std::to_string(a) +
                      ", m = " + std::to_string(m));
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : PrimesUpTo(bound))
    if (p % m == residue) out.push_back(p);
  return out;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t PowMod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> Factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t Omega(std::uint64_t n) { return Factorize(n).size(); }

std::uint64_t Totient(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t phi = n;
  for (auto [p, e] : Factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

namespace {

double ReferenceRatio(SieveKind kind, std::uint64_t x, std::uint64_t count) {
  const double xd = static_cast<double>(x);
  if (kind == SieveKind::kTotient) return static_cast<double>(count) / std::sqrt(xd);
  if (x < 3) return 0.0;  // log log X is not positive yet
  return static_cast<double>(count) * std::log(std::log(xd)) / xd;
}

}  // namespace

std::vector<CountCheckpoint> RepresentableCount(const SieveTable& table,
                                                std::span<const std::uint64_t> checkpoints) {
  if (table.kind() == SieveKind::kPrimes)
    throw ConfigError("representable count needs an omega or totient table");
  if (checkpoints.empty()) return {};
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) || checkpoints.front() == 0)
    throw ConfigError("checkpoints must be positive and ascending");
  const std::uint64_t x_max = checkpoints.back();
  if (table.bound() < x_max)
    throw ConfigError("sieve bound " + std::to_string(table.bound()) + " is below X = " +
                      std::to_string(x_max));

  std::vector<char> hit(x_max + 1, 0);
  for (std::uint64_t k = 1; k <= x_max; ++k) {
    const std::uint64_t f = table[k];
    if (f == 0) continue;  // k = 1 for omega gives n = 0, which is not counted
    if (f > x_max / k) continue;
    hit[k * f] = 1;
  }
  std::vector<CountCheckpoint> out;
  std::uint64_t count = 0;
  std::uint64_t n = 0;
  for (std::uint64_t x : checkpoints) {
    for (; n < x; ++n) count += hit[n + 1];
    out.push_back({x, count, ReferenceRatio(table.kind(), x, count)});
  }
  return out;
}

std::vector<CountCheckpoint> RepresentableCount(const SieveTable& table, std::uint64_t x_max) {
  if (x_max == 0) throw ConfigError("X must be >= 1");
  std::vector<std::uint64_t> checkpoints;
  for (std::uint64_t p = 10; p < x_max; p *= 10) checkpoints.push_back(p);
  checkpoints.push_back(x_max);
  return RepresentableCount(table, checkpoints);
}

}  // namespace dirset
