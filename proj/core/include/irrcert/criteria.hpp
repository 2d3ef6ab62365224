#ifndef IRRCERT_CRITERIA_HPP
#define IRRCERT_CRITERIA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irrcert/oracle.hpp"
#include "irrcert/polynomial.hpp"
#include "irrcert/root_bounds.hpp"

namespace irrcert::criteria {

enum class Theorem { A, T1, T2, B };

const char* to_string(Theorem t);

/// A successful irreducibility proof: the theorem applied, its witnesses,
/// the root-bound proof used (when one is needed), and the full list of
/// verified hypotheses. Certificates are replayable: re-running the named
/// check with the stored witnesses reproduces the verdict.
struct Certificate {
  Theorem theorem;
  Int p;
  unsigned k = 1;                    // 1 for Theorem A
  std::optional<Int> d;              // absent for Theorem B
  std::optional<unsigned> j;         // absent for Theorem A
  std::optional<root_bounds::RootBoundProof> root_proof;  // absent for B
  std::vector<std::pair<std::string, std::string>> hypothesis_trace;
};

struct CriterionOutcome {
  enum class Kind { Irreducible, Reducible, Inconclusive };

  Kind kind;
  std::optional<Certificate> certificate;                  // Irreducible
  std::optional<oracle::FactorizationWitness> witness;     // Reducible
  std::string reason;                                      // Inconclusive

  bool irreducible() const { return kind == Kind::Irreducible; }
  bool reducible() const { return kind == Kind::Reducible; }
  bool inconclusive() const { return kind == Kind::Inconclusive; }
};

const char* to_string(CriterionOutcome::Kind k);

/// |f(0)| = p d with p !| d, plus a root proof outside radius d.
CriterionOutcome check_theorem_a(const Polynomial& f, const Int& p, const Int& d);

/// Primitive f with |a_0| = p^k d exactly (p !| d), gcd(k,j) = 1, the
/// p^k-divisibility run over a_0..a_{j-1}, p !| a_j when k > 1, and a
/// root proof outside radius d. When strict_remark is set, the trace
/// additionally records whether gcd(k, j!) = 1 holds; the verdict is
/// unchanged.
CriterionOutcome check_theorem_1(const Polynomial& f, const Int& p, unsigned k,
                                 const Int& d, unsigned j,
                                 bool strict_remark = false);

/// The mirror criterion on the leading coefficients, with the extra
/// smallest-prime-divisor condition |a_0 / q| <= |a_n|.
CriterionOutcome check_theorem_2(const Polynomial& f, const Int& p, unsigned k,
                                 const Int& d, unsigned j,
                                 bool strict_remark = false);

/// No root condition: primitive f, gcd(k,n) = 1, p^k | a_0..a_{n-1},
/// p !| a_n, p^{k+1} !| a_0. k = 1 is classical Eisenstein.
CriterionOutcome check_theorem_b(const Polynomial& f, const Int& p, unsigned k);

struct SearchOptions {
  std::size_t max_oracle_degree = oracle::kDefaultMaxDegree;
  bool use_oracle = true;
  bool strict_remark = false;
};

/// Deterministic witness search: candidate (p, k, d) from the prime
/// factorization of a_0 (resp. a_n), theorem order B, 1, 2, A, then
/// ascending p, then ascending j; first Irreducible wins. Falls back to
/// the factorization oracle within its degree bound.
CriterionOutcome auto_search(const Polynomial& f, const SearchOptions& options = {});

/// Re-runs the check named by the certificate with its stored witnesses.
CriterionOutcome replay(const Polynomial& f, const Certificate& cert);

}  // namespace irrcert::criteria

#endif
