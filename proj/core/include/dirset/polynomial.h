#ifndef DIRSET_POLYNOMIAL_H_
#define DIRSET_POLYNOMIAL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dirset {

struct Monomial {
  std::int64_t coefficient = 0;
  std::vector<unsigned> exponents;  // one per variable

  unsigned Degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Integer polynomial in `arity` variables x1..xm. Like terms are merged and
// zero terms dropped on construction.
class Polynomial {
 public:
  Polynomial(std::size_t arity, std::vector<Monomial> terms);

  // Parses expressions such as "x1^2 + x2^2", "x1*x2 - 5", "-3*x1^2*x2 + 7".
  // The arity is the largest variable index seen unless `arity` is given.
  static Polynomial Parse(std::string_view text, std::optional<std::size_t> arity = std::nullopt);

  std::size_t arity() const { return arity_; }
  std::span<const Monomial> terms() const { return terms_; }
  unsigned TotalDegree() const;
  // Sum of the coefficients of the terms of maximal total degree.
  std::int64_t LeadingCoefficientSum() const;

  // Exact value, or nullopt if it does not fit in int64.
  std::optional<std::int64_t> Evaluate(std::span<const std::int64_t> point) const;

  // Coefficients of g(n) = f(n, ..., n), lowest degree first.
  std::vector<std::int64_t> Diagonal() const;

  std::string ToString() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t arity_;
  std::vector<Monomial> terms_;
};

// Evaluates a univariate polynomial given lowest-degree-first coefficients;
// nullopt on int64 overflow.
std::optional<std::int64_t> EvaluateUnivariate(std::span<const std::int64_t> coefficients,
                                               std::int64_t n);

}  // namespace dirset

#endif  // DIRSET_POLYNOMIAL_H_
