#include "oddperm/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddperm {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

}  // namespace

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coeffs)
    : coeffs_(coeffs) {
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial IntPolynomial::monomial(int degree, std::int64_t c) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::geometric(int terms) {
  if (terms < 1) throw std::invalid_argument("geometric factor needs >= 1 term");
  return IntPolynomial(std::vector<std::int64_t>(terms, 1));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::truncated(int max_degree) const {
  if (max_degree < 0) return {};
  std::vector<std::int64_t> v(
      coeffs_.begin(),
      coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), max_degree + 1));
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reflected(int d) const {
  if (is_zero()) return {};
  if (d < degree())
    throw std::invalid_argument("reflection degree below polynomial degree");
  std::vector<std::int64_t> v(d + 1, 0);
  for (int i = 0; i <= degree(); ++i) v[d - i] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shifted(int by) const {
  if (is_zero()) return {};
  if (by < 0) throw std::invalid_argument("negative shift");
  std::vector<std::int64_t> v(by, 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  return *this += -o;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = checked_mul(c, -1);
  return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  r.add_product(a, b);
  return r;
}

void IntPolynomial::add_product(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return;
  const std::size_t need = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (coeffs_.size() < need) coeffs_.resize(need, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      coeffs_[i + j] =
          checked_add(coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  }
  normalize();
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int d = 0; d <= degree(); ++d) {
    const std::int64_t c = coeffs_[d];
    if (c == 0) continue;
    if (c < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    const std::int64_t mag = c < 0 ? -c : c;
    if (d == 0 || mag != 1) s += std::to_string(mag);
    if (d >= 1) s += var;
    if (d >= 2) s += '^' + std::to_string(d);
  }
  return s;
}

bool is_palindromic(const IntPolynomial& f) {
  if (f.is_zero())
    throw std::invalid_argument("palindromicity of the zero polynomial");
  auto c = f.coeffs();
  return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

IntPolynomial expand_factors(std::span<const int> lengths) {
  IntPolynomial product = IntPolynomial::constant(1);
  for (int len : lengths) product = product * IntPolynomial::geometric(len);
  return product;
}

}  // namespace oddperm
