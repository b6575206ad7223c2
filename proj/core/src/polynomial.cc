#include "dirset/polynomial.h"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

#include "dirset/error.h"

namespace dirset {
namespace {

using i128 = __int128;
constexpr i128 kLimit = static_cast<i128>(1) << 100;

bool CheckedMul(i128& acc, i128 factor) {
  const i128 mag_a = acc < 0 ? -acc : acc;
  const i128 mag_b = factor < 0 ? -factor : factor;
  if (mag_a != 0 && mag_b > kLimit / mag_a) return false;
  acc *= factor;
  return true;
}

bool FitsInt64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Monomial> ParseTerms(std::size_t& max_var) {
    std::vector<Monomial> terms;
    SkipSpace();
    if (AtEnd()) throw ParseError("empty polynomial", 0);
    bool first = true;
    while (!AtEnd()) {
      int sign = 1;
      if (Peek() == '+' || Peek() == '-') {
        sign = Peek() == '-' ? -1 : 1;
        ++pos_;
        SkipSpace();
      } else if (!first) {
        Fail("expected '+' or '-'");
      }
      terms.push_back(ParseTerm(sign, max_var));
      first = false;
      SkipSpace();
    }
    return terms;
  }

 private:
  Monomial ParseTerm(int sign, std::size_t& max_var) {
    i128 coefficient = sign;
    std::map<std::size_t, unsigned> powers;
    while (true) {
      SkipSpace();
      if (AtEnd()) Fail("unexpected end of polynomial");
      if (std::isdigit(static_cast<unsigned char>(Peek()))) {
        if (!CheckedMul(coefficient, ParseNumber())) Fail("coefficient overflow");
      } else if (Peek() == 'x' || Peek() == 'X') {
        ++pos_;
        const auto index = static_cast<std::size_t>(ParseNumber());
        if (index == 0) Fail("variables are numbered from x1");
        unsigned exponent = 1;
        SkipSpace();
        if (!AtEnd() && Peek() == '^') {
          ++pos_;
          SkipSpace();
          exponent = static_cast<unsigned>(ParseNumber());
        }
        powers[index - 1] += exponent;
        max_var = std::max(max_var, index);
      } else {
        Fail(std::string("unexpected character '") + Peek() + "'");
      }
      SkipSpace();
      if (!AtEnd() && Peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!FitsInt64(coefficient)) Fail("coefficient overflow");
    Monomial m;
    m.coefficient = static_cast<std::int64_t>(coefficient);
    for (auto [var, e] : powers) {
      if (m.exponents.size() <= var) m.exponents.resize(var + 1, 0);
      m.exponents[var] = e;
    }
    return m;
  }

  std::int64_t ParseNumber() {
    SkipSpace();
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (!AtEnd() && std::isdigit(static_cast<unsigned char>(Peek()))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) Fail("number too large");
      v = v * 10 + (Peek() - '0');
      ++pos_;
    }
    if (pos_ == start) Fail("expected a number");
    return v;
  }

  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(Peek()))) ++pos_;
  }
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }
  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at offset " +
                         std::to_string(pos_),
                     0);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

unsigned Monomial::Degree() const {
  unsigned d = 0;
  for (unsigned e : exponents) d += e;
  return d;
}

Polynomial::Polynomial(std::size_t arity, std::vector<Monomial> terms) : arity_(arity) {
  if (arity_ == 0) throw ConfigError("polynomial arity must be >= 1");
  std::map<std::vector<unsigned>, i128> merged;
  for (auto& t : terms) {
    if (t.exponents.size() > arity_) {
      for (std::size_t i = arity_; i < t.exponents.size(); ++i)
        if (t.exponents[i] != 0) throw ConfigError("monomial uses a variable beyond the arity");
    }
    t.exponents.resize(arity_, 0);
    merged[t.exponents] += t.coefficient;
  }
  for (auto& [exps, c] : merged) {
    if (c == 0) continue;
    if (!FitsInt64(c)) throw ConfigError("polynomial coefficient overflow");
    terms_.push_back({static_cast<std::int64_t>(c), exps});
  }
  // Highest total degree first; ties in descending exponent order.
  std::sort(terms_.begin(), terms_.end(), [](const Monomial& a, const Monomial& b) {
    if (a.Degree() != b.Degree()) return a.Degree() > b.Degree();
    return a.exponents > b.exponents;
  });
}

Polynomial Polynomial::Parse(std::string_view text, std::optional<std::size_t> arity) {
  std::size_t max_var = 0;
  Parser parser(text);
  auto terms = parser.ParseTerms(max_var);
  const std::size_t m = arity.value_or(std::max<std::size_t>(max_var, 1));
  if (max_var > m) throw ConfigError("polynomial uses x" + std::to_string(max_var) + " but arity is " + std::to_string(m));
  return Polynomial(m, std::move(terms));
}

unsigned Polynomial::TotalDegree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.Degree());
  return d;
}

std::int64_t Polynomial::LeadingCoefficientSum() const {
  const unsigned d = TotalDegree();
  i128 sum = 0;
  for (const auto& t : terms_)
    if (t.Degree() == d) sum += t.coefficient;
  if (!FitsInt64(sum)) throw ConfigError("leading coefficient sum overflow");
  return static_cast<std::int64_t>(sum);
}

std::optional<std::int64_t> Polynomial::Evaluate(std::span<const std::int64_t> point) const {
  if (point.size() != arity_) throw ConfigError("polynomial evaluated at a point of wrong arity");
  i128 total = 0;
  for (const auto& t : terms_) {
    i128 v = t.coefficient;
    for (std::size_t i = 0; i < arity_; ++i)
      for (unsigned e = 0; e < t.exponents[i]; ++e)
        if (!CheckedMul(v, point[i])) return std::nullopt;
    total += v;
    if (total > kLimit || total < -kLimit) return std::nullopt;
  }
  if (!FitsInt64(total)) return std::nullopt;
  return static_cast<std::int64_t>(total);
}

std::vector<std::int64_t> Polynomial::Diagonal() const {
  std::vector<i128> coeffs(TotalDegree() + 1, 0);
  for (const auto& t : terms_) coeffs[t.Degree()] += t.coefficient;
  std::vector<std::int64_t> out;
  for (i128 c : coeffs) {
    if (!FitsInt64(c)) throw ConfigError("diagonal coefficient overflow");
    out.push_back(static_cast<std::int64_t>(c));
  }
  return out;
}

std::string Polynomial::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    std::int64_t c = t.coefficient;
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    std::string factors;
    for (std::size_t v = 0; v < t.exponents.size(); ++v) {
      if (t.exponents[v] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "x" + std::to_string(v + 1);
      if (t.exponents[v] > 1) factors += "^" + std::to_string(t.exponents[v]);
    }
    if (factors.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += factors;
    }
  }
  return out.empty() ? "0" : out;
}

std::optional<std::int64_t> EvaluateUnivariate(std::span<const std::int64_t> coefficients, std::int64_t n) {
  i128 acc = 0;
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    if (!CheckedMul(acc, n)) return std::nullopt;
    acc += coefficients[i];
    if (acc > kLimit || acc < -kLimit) return std::nullopt;
  }
  if (!FitsInt64(acc)) return std::nullopt;
  return static_cast<std::int64_t>(acc);
}

}  // namespace dirset
