// Reference implementation of the direction-set truncation. It shares no
// code with the engine beyond set enumeration and is only meant as ground
// truth for tests.

#include <algorithm>
#include <numeric>
#include <set>

#include "dirset/direction.h"
#include "dirset/error.h"

namespace dirset {
namespace {

void Recurse(const std::vector<std::vector<std::uint64_t>>& sets, bool distinct, std::vector<std::uint64_t>& tuple,
             std::set<std::vector<std::uint64_t>>& out) {
  const std::size_t pos = tuple.size();
  if (pos == sets.size()) {
    std::uint64_t g = 0;
    for (auto v : tuple) g = std::gcd(g, v);
    std::vector<std::uint64_t> reduced;
    for (auto v : tuple) reduced.push_back(v / g);
    out.insert(reduced);
    return;
  }
  for (std::uint64_t v : sets[pos]) {
    if (distinct && std::find(tuple.begin(), tuple.end(), v) != tuple.end()) continue;
    tuple.push_back(v);
    Recurse(sets, distinct, tuple, out);
    tuple.pop_back();
  }
}

}  // namespace

std::vector<PrimitiveDirection> OracleTruncation(std::span<const IntegerSetSpec> specs, std::uint64_t bound,
                                                 bool distinct) {
  if (specs.size() < 2) throw ConfigError("direction sets need k >= 2 sets");
  std::vector<std::vector<std::uint64_t>> sets;
  double product = 1.0;
  for (const auto& s : specs) {
    sets.push_back(Enumerate(s, bound));
    product *= static_cast<double>(sets.back().size());
  }
  if (product > static_cast<double>(kOracleTupleBudget))
    throw ResourceError("oracle enumeration limited to " + std::to_string(kOracleTupleBudget) + " tuples");
  std::set<std::vector<std::uint64_t>> found;
  std::vector<std::uint64_t> tuple;
  Recurse(sets, distinct, tuple, found);
  std::vector<PrimitiveDirection> out;
  for (const auto& t : found) out.push_back(PrimitiveDirection::FromTuple(t));
  return out;
}

}  // namespace dirset
