#ifndef IRRCERT_ORACLE_HPP
#define IRRCERT_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "irrcert/polynomial.hpp"

namespace irrcert::oracle {

/// A complete splitting over Z: unit * product(factors) == input exactly.
/// Factors are normalized to positive leading coefficient and sorted by
/// degree, then lexicographically by coefficients; the unit integer
/// carries the sign and the content.
struct FactorizationWitness {
  Int unit;
  std::vector<Polynomial> factors;

  Polynomial refold() const;
};

struct KroneckerResult {
  bool irreducible_by_exhaustion;
  FactorizationWitness witness;  // meaningful when a factor was found
};

inline constexpr std::size_t kDefaultMaxDegree = 6;

/// Exact factorization over Z by Kronecker interpolation: sample at small
/// integers, enumerate signed divisor tuples of the sample values,
/// interpolate candidates, keep exact divisors, recurse on cofactors.
/// Exponential, but fully auditable at desk scale.
///
/// Returns either a complete factorization into oracle-irreducible
/// factors or irreducibility-by-exhaustion. Throws
/// numtheory::BoundExceeded when deg f exceeds max_degree.
KroneckerResult kronecker_factor(const Polynomial& f,
                                 std::size_t max_degree = kDefaultMaxDegree);

enum class Lemma1Result { NotApplicable, ApplicableHolds, ApplicableViolated };

/// Checks the factor-coefficient divisibility claim on a concrete product
/// f = f1 * f2: when p^k | a_0..a_{j-1}, p^{k+1} !| a_0, gcd(k,j) = 1,
/// j <= deg f, p | b_0 and p | c_0 all hold, the conclusion is p | a_j.
/// ApplicableViolated would falsify the claim and must never occur.
Lemma1Result lemma1_check(const Polynomial& f1, const Polynomial& f2,
                          const Int& p, unsigned k, unsigned j);

struct Lemma1FuzzReport {
  std::uint64_t trials;
  std::uint64_t applicable;
  std::uint64_t holds;
  std::uint64_t violated;
};

/// Randomized search for counterexamples to the divisibility claim:
/// generates factor pairs with p | b_0 and p | c_0 shaped so that the
/// hypotheses hold often, and tallies lemma1_check outcomes.
Lemma1FuzzReport lemma1_fuzz(std::uint64_t trials, std::uint64_t seed);

}  // namespace irrcert::oracle

#endif
