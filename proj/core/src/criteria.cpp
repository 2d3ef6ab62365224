#include "irrcert/criteria.hpp"

#include <sstream>
#include <stdexcept>

#include "irrcert/numtheory.hpp"

namespace irrcert::criteria {

namespace nt = numtheory;
namespace rb = root_bounds;

const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::A: return "A";
    case Theorem::T1: return "1";
    case Theorem::T2: return "2";
    default: return "B";
  }
}

const char* to_string(CriterionOutcome::Kind k) {
  switch (k) {
    case CriterionOutcome::Kind::Irreducible: return "irreducible";
    case CriterionOutcome::Kind::Reducible: return "reducible";
    default: return "inconclusive";
  }
}

namespace {

using Trace = std::vector<std::pair<std::string, std::string>>;

CriterionOutcome inconclusive(std::string reason) {
  return {CriterionOutcome::Kind::Inconclusive, std::nullopt, std::nullopt,
          std::move(reason)};
}

CriterionOutcome failed(const std::string& label, const std::string& value) {
  return inconclusive("hypothesis failed: " + label + " (" + value + ")");
}

CriterionOutcome certified(Certificate cert) {
  return {CriterionOutcome::Kind::Irreducible, std::move(cert), std::nullopt, ""};
}

Int pow_int(const Int& p, unsigned e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), e);
  return out;
}

bool divides(const Int& a, const Int& b) {
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

std::string str(const Int& v) { return v.get_str(); }

void require_prime(const Int& p) {
  if (!nt::is_prime(p)) throw std::invalid_argument("p must be prime");
}

void require_nonconstant(const Polynomial& f) {
  if (f.is_zero() || f.degree_checked() < 1)
    throw std::invalid_argument("deg f >= 1 required");
}

// Cheap sufficient test first, complete decision second; the certificate
// records whichever produced the verdict.
rb::RootBoundProof prove_outside(const Polynomial& f, const Int& d) {
  rb::RootBoundProof proof = rb::dominance_outside(f, d);
  if (proof.verdict == rb::Verdict::CertifiedOutside) return proof;
  return rb::schur_cohn_outside(f, d);
}

// Records the Remark's stronger condition gcd(k, j!) = 1 in the trace
// without changing the verdict (it implies gcd(k,j) = 1).
void record_remark(Trace& trace, unsigned k, unsigned j) {
  bool strict = true;
  for (unsigned i = 2; i <= j && strict; ++i)
    if (nt::gcd(Int(k), Int(i)) != 1) strict = false;
  trace.emplace_back("remark: gcd(k, j!) = 1",
                     strict ? "holds" : "does not hold");
}

}  // namespace

CriterionOutcome check_theorem_a(const Polynomial& f, const Int& p, const Int& d) {
  require_nonconstant(f);
  require_prime(p);
  if (d < 1) throw std::invalid_argument("d >= 1 required");

  const Int a0 = f.coeff(0);
  if (a0 == 0) return inconclusive("zero constant term");

  Trace trace;
  if (abs(a0) != p * d)
    return failed("f(0) = +-p d", "|f(0)| = " + str(abs(a0)) + ", p d = " + str(p * d));
  if (divides(p, d))
    return failed("p does not divide d", "p = " + str(p) + " divides d = " + str(d));
  trace.emplace_back("f(0) = +-p d",
                     "|f(0)| = " + str(abs(a0)) + " = " + str(p) + " * " + str(d));

  rb::RootBoundProof proof = prove_outside(f, d);
  if (proof.verdict != rb::Verdict::CertifiedOutside)
    return failed("all zeros outside radius d",
                  std::string(rb::to_string(proof.method)) + ": " +
                      rb::to_string(proof.verdict));
  trace.emplace_back("all zeros outside radius d",
                     std::string(rb::to_string(proof.method)) + ": " + proof.detail);

  Certificate cert{Theorem::A, p, 1, d, std::nullopt, proof, std::move(trace)};
  return certified(std::move(cert));
}

CriterionOutcome check_theorem_1(const Polynomial& f, const Int& p, unsigned k,
                                 const Int& d, unsigned j, bool strict_remark) {
  require_nonconstant(f);
  require_prime(p);
  if (k < 1) throw std::invalid_argument("k >= 1 required");
  if (d < 1) throw std::invalid_argument("d >= 1 required");
  std::size_t n = f.degree_checked();
  if (j < 1 || j > n) throw std::invalid_argument("1 <= j <= deg f required");

  Trace trace;
  if (!f.is_primitive())
    return failed("f primitive", "content = " + str(f.content()));
  trace.emplace_back("f primitive", "content = 1");

  const Int a0 = f.coeff(0);
  const Int pk = pow_int(p, k);
  if (abs(a0) != pk * d || divides(p, d))
    return failed("a_0 = +-p^k d with p !| d",
                  "|a_0| = " + str(abs(a0)) + ", p^k d = " + str(pk * d) +
                      ", d = " + str(d));
  trace.emplace_back("a_0 = +-p^k d with p !| d",
                     "|a_0| = " + str(abs(a0)) + " = " + str(p) + "^" +
                         std::to_string(k) + " * " + str(d));

  if (nt::gcd(Int(k), Int(j)) != 1)
    return failed("gcd(k, j) = 1", "gcd(" + std::to_string(k) + ", " +
                                       std::to_string(j) + ") != 1");
  trace.emplace_back("gcd(k, j) = 1",
                     "k = " + std::to_string(k) + ", j = " + std::to_string(j));
  if (strict_remark) record_remark(trace, k, j);

  for (unsigned i = 0; i < j; ++i)
    if (!divides(pk, f.coeff(i)))
      return failed("p^k | a_0..a_{j-1}",
                    "p^k !| a_" + std::to_string(i) + " = " + str(f.coeff(i)));
  trace.emplace_back("p^k | a_0..a_{j-1}",
                     str(pk) + " divides a_0..a_" + std::to_string(j - 1));

  if (k > 1) {
    if (divides(p, f.coeff(j)))
      return failed("k > 1 implies p !| a_j",
                    "p | a_" + std::to_string(j) + " = " + str(f.coeff(j)));
    trace.emplace_back("k > 1 implies p !| a_j",
                       "a_" + std::to_string(j) + " = " + str(f.coeff(j)));
  }

  rb::RootBoundProof proof = prove_outside(f, d);
  if (proof.verdict != rb::Verdict::CertifiedOutside)
    return failed("all zeros outside radius d",
                  std::string(rb::to_string(proof.method)) + ": " +
                      rb::to_string(proof.verdict));
  trace.emplace_back("all zeros outside radius d",
                     std::string(rb::to_string(proof.method)) + ": " + proof.detail);

  Certificate cert{Theorem::T1, p, k, d, j, proof, std::move(trace)};
  return certified(std::move(cert));
}

CriterionOutcome check_theorem_2(const Polynomial& f, const Int& p, unsigned k,
                                 const Int& d, unsigned j, bool strict_remark) {
  require_nonconstant(f);
  require_prime(p);
  if (k < 1) throw std::invalid_argument("k >= 1 required");
  if (d < 1) throw std::invalid_argument("d >= 1 required");
  std::size_t n = f.degree_checked();
  if (j < 1 || j > n) throw std::invalid_argument("1 <= j <= deg f required");

  const Int a0 = f.coeff(0);
  if (abs(a0) <= 1) return inconclusive("smallest prime divisor undefined");

  Trace trace;
  if (!f.is_primitive())
    return failed("f primitive", "content = " + str(f.content()));
  trace.emplace_back("f primitive", "content = 1");

  const Int an = f.leading();
  const Int pk = pow_int(p, k);
  if (abs(an) != pk * d || divides(p, d))
    return failed("a_n = +-p^k d with p !| d",
                  "|a_n| = " + str(abs(an)) + ", p^k d = " + str(pk * d) +
                      ", d = " + str(d));
  trace.emplace_back("a_n = +-p^k d with p !| d",
                     "|a_n| = " + str(abs(an)) + " = " + str(p) + "^" +
                         std::to_string(k) + " * " + str(d));

  if (nt::gcd(Int(k), Int(j)) != 1)
    return failed("gcd(k, j) = 1", "gcd(" + std::to_string(k) + ", " +
                                       std::to_string(j) + ") != 1");
  trace.emplace_back("gcd(k, j) = 1",
                     "k = " + std::to_string(k) + ", j = " + std::to_string(j));
  if (strict_remark) record_remark(trace, k, j);

  for (std::size_t i = n - j + 1; i <= n; ++i)
    if (!divides(pk, f.coeff(i)))
      return failed("p^k | a_{n-j+1}..a_n",
                    "p^k !| a_" + std::to_string(i) + " = " + str(f.coeff(i)));
  trace.emplace_back("p^k | a_{n-j+1}..a_n",
                     str(pk) + " divides a_" + std::to_string(n - j + 1) + "..a_" +
                         std::to_string(n));

  if (k > 1) {
    if (divides(p, f.coeff(n - j)))
      return failed("k > 1 implies p !| a_{n-j}",
                    "p | a_" + std::to_string(n - j) + " = " + str(f.coeff(n - j)));
    trace.emplace_back("k > 1 implies p !| a_{n-j}",
                       "a_" + std::to_string(n - j) + " = " + str(f.coeff(n - j)));
  }

  const Int q = nt::smallest_prime_divisor(a0);
  if (abs(a0) / q > abs(an))
    return failed("|a_0 / q| <= |a_n|", "q = " + str(q) + ", |a_0/q| = " +
                                            str(abs(a0) / q) + " > |a_n| = " +
                                            str(abs(an)));
  trace.emplace_back("|a_0 / q| <= |a_n|",
                     "q = " + str(q) + ", |a_0/q| = " + str(abs(a0) / q) +
                         " <= " + str(abs(an)));

  rb::RootBoundProof proof = prove_outside(f, d);
  if (proof.verdict != rb::Verdict::CertifiedOutside)
    return failed("all zeros outside radius d",
                  std::string(rb::to_string(proof.method)) + ": " +
                      rb::to_string(proof.verdict));
  trace.emplace_back("all zeros outside radius d",
                     std::string(rb::to_string(proof.method)) + ": " + proof.detail);

  Certificate cert{Theorem::T2, p, k, d, j, proof, std::move(trace)};
  return certified(std::move(cert));
}

CriterionOutcome check_theorem_b(const Polynomial& f, const Int& p, unsigned k) {
  require_nonconstant(f);
  require_prime(p);
  if (k < 1) throw std::invalid_argument("k >= 1 required");
  std::size_t n = f.degree_checked();

  Trace trace;
  if (!f.is_primitive())
    return failed("f primitive", "content = " + str(f.content()));
  trace.emplace_back("f primitive", "content = 1");

  if (nt::gcd(Int(k), Int(n)) != 1)
    return failed("gcd(k, n) = 1", "gcd(" + std::to_string(k) + ", " +
                                       std::to_string(n) + ") != 1");
  trace.emplace_back("gcd(k, n) = 1",
                     "k = " + std::to_string(k) + ", n = " + std::to_string(n));

  const Int pk = pow_int(p, k);
  for (std::size_t i = 0; i < n; ++i)
    if (!divides(pk, f.coeff(i)))
      return failed("p^k | a_0..a_{n-1}",
                    "p^k !| a_" + std::to_string(i) + " = " + str(f.coeff(i)));
  trace.emplace_back("p^k | a_0..a_{n-1}",
                     str(pk) + " divides a_0..a_" + std::to_string(n - 1));

  if (divides(p, f.leading()))
    return failed("p !| a_n", "p | a_n = " + str(f.leading()));
  trace.emplace_back("p !| a_n", "a_n = " + str(f.leading()));

  if (divides(pk * p, f.coeff(0)))
    return failed("p^{k+1} !| a_0", "p^{k+1} | a_0 = " + str(f.coeff(0)));
  trace.emplace_back("p^{k+1} !| a_0", "a_0 = " + str(f.coeff(0)));

  Certificate cert{Theorem::B, p, k, std::nullopt, std::nullopt, std::nullopt,
                   std::move(trace)};
  return certified(std::move(cert));
}

CriterionOutcome auto_search(const Polynomial& f, const SearchOptions& options) {
  require_nonconstant(f);

  Int content = f.content();
  if (content != 1)
    return inconclusive("input not primitive: content = " + str(content));

  const Int a0 = f.coeff(0);
  const Int an = f.leading();
  std::size_t n = f.degree_checked();

  try {
    nt::PrimeFactorization tail_primes =
        abs(a0) > 1 ? nt::factorize(a0) : nt::PrimeFactorization{};
    nt::PrimeFactorization lead_primes =
        abs(an) > 1 ? nt::factorize(an) : nt::PrimeFactorization{};

    for (const auto& [p, k] : tail_primes.factors) {
      auto r = check_theorem_b(f, p, k);
      if (r.irreducible()) return r;
    }
    for (const auto& [p, k] : tail_primes.factors) {
      Int d = abs(a0) / pow_int(p, k);
      for (unsigned j = 1; j <= n; ++j) {
        if (nt::gcd(Int(k), Int(j)) != 1) continue;
        auto r = check_theorem_1(f, p, k, d, j, options.strict_remark);
        if (r.irreducible()) return r;
      }
    }
    for (const auto& [p, k] : lead_primes.factors) {
      Int d = abs(an) / pow_int(p, k);
      for (unsigned j = 1; j <= n; ++j) {
        if (nt::gcd(Int(k), Int(j)) != 1) continue;
        auto r = check_theorem_2(f, p, k, d, j, options.strict_remark);
        if (r.irreducible()) return r;
      }
    }
    for (const auto& [p, k] : tail_primes.factors) {
      if (k != 1) continue;
      auto r = check_theorem_a(f, p, abs(a0) / p);
      if (r.irreducible()) return r;
    }

    if (options.use_oracle && n <= options.max_oracle_degree) {
      auto result = oracle::kronecker_factor(f, options.max_oracle_degree);
      if (!result.irreducible_by_exhaustion)
        return {CriterionOutcome::Kind::Reducible, std::nullopt,
                std::move(result.witness), ""};
      return inconclusive("no criterion applied; irreducible by oracle exhaustion");
    }
  } catch (const nt::BoundExceeded&) {
    return inconclusive("witness search bound exceeded");
  }
  return inconclusive("no criterion applied");
}

CriterionOutcome replay(const Polynomial& f, const Certificate& cert) {
  switch (cert.theorem) {
    case Theorem::A:
      return check_theorem_a(f, cert.p, cert.d.value());
    case Theorem::T1:
      return check_theorem_1(f, cert.p, cert.k, cert.d.value(), cert.j.value());
    case Theorem::T2:
      return check_theorem_2(f, cert.p, cert.k, cert.d.value(), cert.j.value());
    default:
      return check_theorem_b(f, cert.p, cert.k);
  }
}

}  // namespace irrcert::criteria
