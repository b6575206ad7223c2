#include "dirset/rational.h"

#include <charconv>
#include <limits>
#include <numeric>

#include "dirset/error.h"

namespace dirset {
namespace {

using i128 = __int128;

i128 Gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational Make(i128 num, i128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = Gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
  if (num > kMax || num < -kMax || den > kMax)
    throw ResourceError("rational overflow beyond 64-bit range");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::int64_t ParseInt(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw ConfigError("invalid rational '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational Rational::Parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (const auto slash = text.find('/'); slash != std::string_view::npos)
    return Rational(ParseInt(text.substr(0, slash), text), ParseInt(text.substr(slash + 1), text));
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    if (frac_part.size() > 17 || frac_part.empty()) throw ConfigError("invalid rational '" + std::string(text) + "'");
    const bool negative = !int_part.empty() && int_part.front() == '-';
    const std::int64_t whole = (int_part.empty() || int_part == "-") ? 0 : ParseInt(int_part, text);
    const std::int64_t frac = ParseInt(frac_part, text);
    if (frac < 0) throw ConfigError("invalid rational '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const i128 magnitude = static_cast<i128>(whole < 0 ? -whole : whole) * scale + frac;
    return Make(negative ? -magnitude : magnitude, scale);
  }
  return Rational(ParseInt(text, text));
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
              static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Make(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
              static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Make(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("division by zero rational");
  return Make(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return CompareFractions(a.num_, a.den_, b.num_, b.den_);
}

std::int64_t FloorTimes(const Rational& r, std::int64_t n) {
  const i128 p = static_cast<i128>(r.num()) * n;
  i128 q = p / r.den();
  if (p % r.den() != 0 && p < 0) --q;
  return static_cast<std::int64_t>(q);
}

std::int64_t CeilTimes(const Rational& r, std::int64_t n) {
  const i128 p = static_cast<i128>(r.num()) * n;
  i128 q = p / r.den();
  if (p % r.den() != 0 && p > 0) ++q;
  return static_cast<std::int64_t>(q);
}

}  // namespace dirset
