#include "irrcert/families.hpp"

#include <stdexcept>

#include "irrcert/numtheory.hpp"

namespace irrcert::families {

namespace nt = numtheory;

namespace {

Int pow_int(const Int& p, unsigned e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), e);
  return out;
}

void validate_common(const FamilyParams& params) {
  if (!nt::is_prime(params.p))
    throw std::invalid_argument("family: p must be prime");
  if (params.k < 1) throw std::invalid_argument("family: k >= 1 required");
  if (params.j < 1) throw std::invalid_argument("family: j >= 1 required");
  if (nt::gcd(Int(params.k), Int(params.j)) != 1)
    throw std::invalid_argument("family: gcd(k, j) = 1 required");
}

}  // namespace

Polynomial gen_x(const FamilyParams& params) {
  validate_common(params);
  if (params.n < params.j + 1)
    throw std::invalid_argument("family X: n >= j + 1 required");

  const Int pk = pow_int(params.p, params.k);
  std::vector<Int> c(params.n + 1, Int(0));
  for (unsigned i = 0; i < params.j; ++i) c[i] = pk * params.p;
  c[params.j] = pk - 1;
  for (unsigned i = params.j + 1; i <= params.n; ++i) c[i] = pk / params.p;
  return Polynomial{std::move(c)};
}

bool x_times_xminus1_identity(const FamilyParams& params) {
  Polynomial lhs = Polynomial{{Int(-1), Int(1)}} * gen_x(params);

  const Int pk = pow_int(params.p, params.k);
  const Int pk1 = pk * params.p;
  const Int pkm1 = pk / params.p;
  std::vector<Int> rhs(params.n + 2, Int(0));
  rhs[0] = -pk1;
  rhs[params.j] += pk1 - pk + 1;
  rhs[params.j + 1] += pk - pkm1 - 1;
  rhs[params.n + 1] += pkm1;
  return lhs == Polynomial{std::move(rhs)};
}

Polynomial gen_y(const FamilyParams& params) {
  validate_common(params);
  if (params.j > params.n)
    throw std::invalid_argument("family Y: j <= n required");
  if (params.m < 1 || Int(params.m) >= params.p)
    throw std::invalid_argument("family Y: 1 <= m < p required");

  const Int pk = pow_int(params.p, params.k);
  std::vector<Int> c(params.n + 1, Int(0));
  c[0] = pk * params.n;  // constant term n p^k, literally
  for (unsigned i = 1; i + params.j + 1 <= params.n; ++i) c[i] = pk;
  c[params.n - params.j] += params.m;
  for (unsigned i = params.n - params.j + 1; i <= params.n; ++i) c[i] = pk;
  return Polynomial{std::move(c)};
}

criteria::CriterionOutcome family_selftest(const FamilyParams& params) {
  if (params.family == Family::X) {
    Polynomial f = gen_x(params);
    // Constant term p^{k+1}, so the exponent witness is k + 1.
    return criteria::check_theorem_1(f, params.p, params.k + 1, Int(1), params.j);
  }
  Polynomial f = gen_y(params);
  return criteria::check_theorem_2(f, params.p, params.k, Int(1), params.j);
}

}  // namespace irrcert::families
