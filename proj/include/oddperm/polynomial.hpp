#ifndef ODDPERM_POLYNOMIAL_HPP
#define ODDPERM_POLYNOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace oddperm {

/// Univariate polynomial with exact 64-bit integer coefficients; index is
/// degree. Arithmetic throws std::overflow_error instead of wrapping. The
/// highest stored coefficient is nonzero; the zero polynomial stores nothing.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> coeffs);
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);

  static IntPolynomial constant(std::int64_t c) { return IntPolynomial({c}); }
  static IntPolynomial monomial(int degree, std::int64_t c = 1);
  /// 1 + t + ... + t^{terms-1}.
  static IntPolynomial geometric(int terms);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int d) const {
    return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[d] : 0;
  }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }

  /// Terms of degree <= max_degree.
  IntPolynomial truncated(int max_degree) const;
  /// t^d f(1/t) for d >= degree().
  IntPolynomial reflected(int d) const;
  IntPolynomial shifted(int by) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  IntPolynomial operator-() const;
  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);

  /// Adds a*b into *this without a temporary.
  void add_product(const IntPolynomial& a, const IntPolynomial& b);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "1+3t+5t^2", "-1+q", "0".
  std::string to_string(char var = 't') const;

 private:
  void normalize();
  std::vector<std::int64_t> coeffs_;
};

/// True iff the coefficient sequence is its own reverse. Throws on zero.
bool is_palindromic(const IntPolynomial& f);

/// ∏ (1 + t + ... + t^{len-1}).
IntPolynomial expand_factors(std::span<const int> lengths);

}  // namespace oddperm

#endif  // ODDPERM_POLYNOMIAL_HPP
