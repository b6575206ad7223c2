#ifndef DIRSET_RATIONAL_H_
#define DIRSET_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dirset {

// Exact rational number with 64-bit numerator and positive denominator,
// always stored in lowest terms. Intermediate products use 128-bit
// arithmetic; a result that does not fit back into 64 bits throws
// ResourceError.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  // Accepts "p", "p/q" or a plain decimal such as "2.45".
  static Rational Parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double ToDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  // "p/q", or "p" when the denominator is one.
  std::string ToString() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Compares a/b with c/d for positive b, d without overflow.
inline std::strong_ordering CompareFractions(std::int64_t a, std::int64_t b,
                                             std::int64_t c, std::int64_t d) {
  const __int128 lhs = static_cast<__int128>(a) * d;
  const __int128 rhs = static_cast<__int128>(c) * b;
  return lhs < rhs ? std::strong_ordering::less
                   : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// floor(r * n) for non-negative n.
std::int64_t FloorTimes(const Rational& r, std::int64_t n);
// ceil(r * n) for non-negative n.
std::int64_t CeilTimes(const Rational& r, std::int64_t n);

}  // namespace dirset

#endif  // DIRSET_RATIONAL_H_
