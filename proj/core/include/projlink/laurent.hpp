#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace projlink {

/// Exact one-variable Laurent polynomial with integer coefficients.
class LaurentPolynomial {
 public:
  using Coefficient = std::int64_t;

  LaurentPolynomial() = default;
  static LaurentPolynomial constant(Coefficient c);
  static LaurentPolynomial monomial(Coefficient c, int exponent);

  /// exponent -> nonzero coefficient
  const std::map<int, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(int exponent) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a *= b;
  }
  LaurentPolynomial pow(int n) const;

  /// Substitutes the variable by its inverse.
  LaurentPolynomial invert_variable() const;

  /// e.g. "-A^4 - A^-4"
  std::string to_string(const std::string& var = "A") const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void add_term(int exponent, Coefficient c);
  std::map<int, Coefficient> terms_;
};

}  // namespace projlink
