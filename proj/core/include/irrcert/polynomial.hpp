#ifndef IRRCERT_POLYNOMIAL_HPP
#define IRRCERT_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace irrcert {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense univariate polynomial over Z, coefficients ascending by degree.
///
/// The representation is canonical: no stored trailing zero coefficients,
/// and the zero polynomial is the empty coefficient vector. Two equal
/// polynomials therefore compare equal coefficient-by-coefficient.
/// All operations are exact; there is no fixed-width arithmetic anywhere.
class Polynomial {
 public:
  Polynomial() = default;

  /// From ascending coefficients; trailing zeros are trimmed.
  explicit Polynomial(std::vector<Int> coeffs);

  static Polynomial zero() { return Polynomial{}; }
  static Polynomial constant(Int c);
  /// c * x^k
  static Polynomial monomial(Int c, std::size_t k);
  /// x - r
  static Polynomial linear_root(const Int& r);

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of the polynomial; nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;

  /// Degree, throwing std::domain_error on the zero polynomial.
  std::size_t degree_checked() const;

  /// Coefficient of x^i (zero beyond the stored range).
  const Int& coeff(std::size_t i) const;

  /// Leading coefficient; throws on the zero polynomial.
  const Int& leading() const;

  const std::vector<Int>& coeffs() const { return coeffs_; }

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator-() const;

  /// Exact product; coefficient t is the convolution sum over b_i c_{t-i}.
  Polynomial operator*(const Polynomial& rhs) const;

  bool operator==(const Polynomial& rhs) const = default;

  /// Exact evaluation at a rational point (Horner).
  Rat eval(const Rat& t) const;
  Int eval_int(const Int& t) const;

  /// gcd of all coefficients, positive; throws on the zero polynomial.
  Int content() const;

  bool is_primitive() const { return content() == 1; }

  /// f / content(f), sign of the leading coefficient preserved.
  Polynomial primitive_part() const;

  /// g(x) = f(x - c), computed exactly by Horner shifting.
  Polynomial translate(const Int& c) const;

  /// Coefficient sequence reversed relative to the degree: x^n f(1/x).
  /// Involutive exactly when f(0) != 0. Throws on the zero polynomial.
  Polynomial reverse() const;

  /// f(d*x): coefficient i becomes a_i * d^i. Requires d >= 1.
  Polynomial scale_arg(const Int& d) const;

  /// Exact quotient if divisor divides *this in Z[x], nullopt otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

}  // namespace irrcert

#endif
