#include "irrcert/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace irrcert {

namespace {
const Int kZero = 0;
}

Polynomial::Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Int c) {
  return Polynomial{{std::move(c)}};
}

Polynomial Polynomial::monomial(Int c, std::size_t k) {
  std::vector<Int> v(k + 1, Int(0));
  v[k] = std::move(c);
  return Polynomial{std::move(v)};
}

Polynomial Polynomial::linear_root(const Int& r) {
  return Polynomial{{-r, Int(1)}};
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t Polynomial::degree_checked() const {
  if (coeffs_.empty())
    throw std::domain_error("degree undefined for the zero polynomial");
  return coeffs_.size() - 1;
}

const Int& Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Int& Polynomial::leading() const {
  if (coeffs_.empty())
    throw std::domain_error("leading coefficient undefined for the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
  return Polynomial{std::move(out)};
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
  return Polynomial{std::move(out)};
}

Polynomial Polynomial::operator-() const {
  std::vector<Int> out(coeffs_);
  for (auto& c : out) c = -c;
  return Polynomial{std::move(out)};
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return zero();
  std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return Polynomial{std::move(out)};
}

Rat Polynomial::eval(const Rat& t) const {
  Rat acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * t + Rat(coeffs_[i]);
    acc.canonicalize();
  }
  return acc;
}

Int Polynomial::eval_int(const Int& t) const {
  Int acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

Int Polynomial::content() const {
  if (coeffs_.empty())
    throw std::domain_error("content undefined for the zero polynomial");
  Int g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  Int g = content();
  std::vector<Int> out(coeffs_);
  for (auto& c : out) c /= g;
  return Polynomial{std::move(out)};
}

Polynomial Polynomial::translate(const Int& c) const {
  // Horner over Z[x]: f(x-c) = (...((a_n)(x-c) + a_{n-1})(x-c) + ...) + a_0.
  Polynomial shift{{-c, Int(1)}};
  Polynomial acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * shift + constant(coeffs_[i]);
  return acc;
}

Polynomial Polynomial::reverse() const {
  if (coeffs_.empty())
    throw std::domain_error("reverse undefined for the zero polynomial");
  std::vector<Int> out(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial{std::move(out)};
}

Polynomial Polynomial::scale_arg(const Int& d) const {
  if (d < 1) throw std::invalid_argument("scale_arg requires d >= 1");
  std::vector<Int> out(coeffs_);
  Int power = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] *= power;
    power *= d;
  }
  return Polynomial{std::move(out)};
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) return zero();
  std::size_t n = degree_checked();
  std::size_t m = divisor.degree_checked();
  if (n < m) return std::nullopt;
  // Long division from the top; every quotient coefficient must come out
  // exact over Z, otherwise the divisor does not divide *this.
  std::vector<Int> rem(coeffs_);
  std::vector<Int> quot(n - m + 1, Int(0));
  const Int& lead = divisor.leading();
  for (std::size_t i = n - m + 1; i-- > 0;) {
    Int& top = rem[i + m];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Int q = top / lead;
    for (std::size_t j = 0; j <= m; ++j) rem[i + j] -= q * divisor.coeff(j);
    quot[i] = std::move(q);
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return Polynomial{std::move(quot)};
}

}  // namespace irrcert
