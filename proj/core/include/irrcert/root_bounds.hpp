#ifndef IRRCERT_ROOT_BOUNDS_HPP
#define IRRCERT_ROOT_BOUNDS_HPP

#include <string>

#include "irrcert/polynomial.hpp"

namespace irrcert::root_bounds {

enum class Method { Dominance, SchurCohn };
enum class Verdict { CertifiedOutside, NotAllOutside, Inconclusive };

const char* to_string(Method m);
const char* to_string(Verdict v);

/// Evidence about the zeros of f relative to the closed disk |z| <= d.
/// CertifiedOutside is only ever produced by exact integer arithmetic.
struct RootBoundProof {
  Int radius;
  Method method;
  Verdict verdict;
  std::string detail;
};

/// Sufficient coefficient test: |a_0| > |a_1| d + ... + |a_n| d^n forces
/// every zero strictly outside radius d. Returns CertifiedOutside or
/// Inconclusive, never NotAllOutside. Requires d >= 1 and deg f >= 1.
RootBoundProof dominance_outside(const Polynomial& f, const Int& d);

/// Complete exact decision: all zeros of f strictly outside the closed
/// disk of radius d, via the Schur-Cohn reduction on reverse(f(d x)).
/// Requires d >= 1 and deg f >= 1. A zero constant term short-circuits
/// to NotAllOutside.
RootBoundProof schur_cohn_outside(const Polynomial& f, const Int& d);

/// Non-certified numeric estimate of min |theta| over the zeros of f,
/// by Durand-Kerner iteration. Diagnostic only; never feeds certificates.
/// Requires f(0) != 0 and deg f >= 1. Throws on non-convergence.
double min_modulus_estimate(const Polynomial& f);

}  // namespace irrcert::root_bounds

#endif
