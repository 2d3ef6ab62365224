#ifndef IRRCERT_FAMILIES_HPP
#define IRRCERT_FAMILIES_HPP

#include "irrcert/criteria.hpp"
#include "irrcert/polynomial.hpp"

namespace irrcert::families {

enum class Family { X, Y };

/// Parameters for the two generated families. Constraints: p prime,
/// k >= 1, gcd(k, j) = 1; X needs n >= j + 1 (nonempty trailing block),
/// Y needs j <= n and 1 <= m < p.
struct FamilyParams {
  Family family;
  Int p;
  unsigned k = 1;
  unsigned j = 1;
  unsigned n = 1;
  unsigned m = 1;  // Y only
};

/// Degree-n polynomial
///   p^{k+1}(1 + x + ... + x^{j-1}) + (p^k - 1) x^j
///     + p^{k-1} x^{j+1}(1 + x + ... + x^{n-j-1}).
/// Throws std::invalid_argument naming the violated constraint.
Polynomial gen_x(const FamilyParams& params);

/// Checks the exact identity for (x - 1) * gen_x(params) against
///   -p^{k+1} + (p^{k+1}-p^k+1) x^j + (p^k-p^{k-1}-1) x^{j+1}
///     + p^{k-1} x^{n+1},
/// both sides expanded independently.
bool x_times_xminus1_identity(const FamilyParams& params);

/// Degree-n polynomial
///   p^k(n + x + ... + x^{n-j-1}) + m x^{n-j}
///     + p^k x^{n-j+1}(1 + ... + x^{j-1}).
/// The constant term is p^k * n, literally as printed.
Polynomial gen_y(const FamilyParams& params);

/// Generates the family member and runs its designated criterion at
/// d = 1: the low-coefficient criterion for X (with exponent witness
/// k + 1, the exact valuation of the constant term p^{k+1}), the
/// leading-coefficient criterion for Y (exponent k).
criteria::CriterionOutcome family_selftest(const FamilyParams& params);

}  // namespace irrcert::families

#endif
