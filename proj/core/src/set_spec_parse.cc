#include <charconv>
#include <string>
#include <vector>

#include "dirset/error.h"
#include "dirset/intsets.h"

namespace dirset {
namespace {

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t p = text.find(sep, start);
    out.push_back(text.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t ParseUint(std::string_view text, std::string_view what) {
  text = Trim(text);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ConfigError("set descriptor: invalid " + std::string(what) + " '" + std::string(text) + "'");
  return v;
}

// "key=value" -> value, or nullopt when the field is not of that key.
std::optional<std::string_view> Option(std::string_view field, std::string_view key) {
  field = Trim(field);
  if (field.size() > key.size() && field.substr(0, key.size()) == key && field[key.size()] == '=')
    return field.substr(key.size() + 1);
  return std::nullopt;
}

[[noreturn]] void Unknown(std::string_view text, const std::string& why) {
  throw ConfigError("set descriptor '" + std::string(text) + "': " + why);
}

}  // namespace

IntegerSetSpec ParseSetSpec(std::string_view text) {
  text = Trim(text);
  const std::size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
  const std::vector<std::string_view> fields =
      colon == std::string_view::npos ? std::vector<std::string_view>{} : Split(rest, ':');

  IntegerSetSpec spec;
  if (name == "naturals") {
    spec = BlockUnion{2, {{Rational(1), Rational(2)}}};
  } else if (name == "blocks") {
    BlockUnion b;
    bool have_segments = false;
    for (auto f : fields) {
      if (auto q = Option(f, "q")) {
        b.q = ParseUint(*q, "q");
      } else {
        for (auto seg : Split(f, ',')) {
          const auto parts = Split(Trim(seg), '-');
          if (parts.size() != 2) Unknown(text, "segments look like 1-2 or 3/2-5/2");
          b.segments.emplace_back(Rational::Parse(parts[0]), Rational::Parse(parts[1]));
        }
        have_segments = true;
      }
    }
    if (!have_segments) Unknown(text, "missing segment list");
    spec = std::move(b);
  } else if (name == "primes") {
    if (!fields.empty()) Unknown(text, "'primes' takes no options; use primes-ap:m=..:a=..");
    spec = PrimesInAP{1, 0};
  } else if (name == "primes-ap") {
    PrimesInAP p{0, 0};
    bool have_m = false, have_a = false;
    for (auto f : fields) {
      if (auto m = Option(f, "m")) { p.m = ParseUint(*m, "m"); have_m = true; }
      else if (auto a = Option(f, "a")) { p.a = ParseUint(*a, "a"); have_a = true; }
      else Unknown(text, "unknown option '" + std::string(f) + "'");
    }
    if (!have_m || !have_a) Unknown(text, "primes-ap needs m= and a=");
    spec = p;
  } else if (name == "poly") {
    std::optional<std::uint64_t> lattice;
    std::optional<std::size_t> arity;
    bool diag = false;
    std::optional<std::string_view> body;
    for (auto f : fields) {
      if (auto l = Option(f, "L")) lattice = ParseUint(*l, "L");
      else if (auto m = Option(f, "m")) arity = ParseUint(*m, "m");
      else if (Trim(f) == "diag") diag = true;
      else if (!body) body = f;
      else Unknown(text, "unexpected field '" + std::string(f) + "'");
    }
    if (!lattice) Unknown(text, "poly needs L=<lattice bound>");
    if (!body) Unknown(text, "poly needs a polynomial such as x1^2+x2^2");
    spec = PolynomialImage{Polynomial::Parse(*body, arity), *lattice, diag};
  } else if (name == "perfect-powers") {
    PerfectPowers p;
    for (auto f : fields) {
      if (auto r = Option(f, "r")) p.min_exponent = static_cast<unsigned>(ParseUint(*r, "r"));
      else Unknown(text, "unknown option '" + std::string(f) + "'");
    }
    spec = p;
  } else if (name == "n-omega") {
    spec = WeightedByOmega{};
  } else if (name == "n-phi") {
    spec = WeightedByTotient{};
  } else if (name == "two-three-powers") {
    spec = TwoThreePowers{};
  } else if (name == "explicit") {
    Explicit e;
    if (!Trim(rest).empty())
      for (auto v : Split(rest, ',')) e.values.push_back(ParseUint(v, "value"));
    spec = std::move(e);
  } else if (name == "file") {
    if (Trim(rest).empty()) Unknown(text, "file: needs a path");
    spec = LoadExplicit(std::string(Trim(rest)));
  } else {
    Unknown(text, "unknown set family '" + std::string(name) + "'");
  }
  Validate(spec);
  return spec;
}

std::string FormatSetSpec(const IntegerSetSpec& spec) {
  if (const auto* b = std::get_if<BlockUnion>(&spec)) {
    if (b->q == 2 && b->segments.size() == 1 && b->segments[0] == std::make_pair(Rational(1), Rational(2)))
      return "naturals";
    std::string out = "blocks:q=" + std::to_string(b->q) + ":";
    for (std::size_t i = 0; i < b->segments.size(); ++i) {
      if (i) out += ",";
      out += b->segments[i].first.ToString() + "-" + b->segments[i].second.ToString();
    }
    return out;
  }
  if (const auto* p = std::get_if<PrimesInAP>(&spec)) {
    if (p->m == 1) return "primes";
    return "primes-ap:m=" + std::to_string(p->m) + ":a=" + std::to_string(p->a);
  }
  if (const auto* p = std::get_if<PolynomialImage>(&spec)) {
    return "poly:L=" + std::to_string(p->lattice_bound) + ":m=" + std::to_string(p->f.arity()) + ":" +
           p->f.ToString() + (p->diagonal_augment ? ":diag" : "");
  }
  if (const auto* p = std::get_if<PerfectPowers>(&spec))
    return "perfect-powers:r=" + std::to_string(p->min_exponent);
  if (std::holds_alternative<WeightedByOmega>(spec)) return "n-omega";
  if (std::holds_alternative<WeightedByTotient>(spec)) return "n-phi";
  if (std::holds_alternative<TwoThreePowers>(spec)) return "two-three-powers";
  const auto& e = std::get<Explicit>(spec);
  if (!e.source.empty()) return "file:" + e.source;
  std::string out = "explicit:";
  for (std::size_t i = 0; i < e.values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e.values[i]);
  }
  return out;
}

}  // namespace dirset
