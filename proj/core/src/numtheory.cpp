#include "irrcert/numtheory.hpp"

namespace irrcert::numtheory {

namespace {

// Base set deterministic for all n < 3,317,044,064,679,887,385,961,981.
constexpr unsigned kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

Int mr_validity_bound() {
  Int b("3317044064679887385961981");
  return b;
}

bool miller_rabin_composite(const Int& n, const Int& base) {
  // n odd, n > 3, 1 < base < n-1 assumed by the caller.
  Int d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
  Int x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

Int PrimeFactorization::refold() const {
  Int out = 1;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    out *= pe;
  }
  return out;
}

Int default_factor_bound() {
  Int b = 1;
  b <<= 63;
  return b;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned p : kMrBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n >= mr_validity_bound())
    throw BoundExceeded("primality bound exceeded");
  for (unsigned b : kMrBases)
    if (miller_rabin_composite(n, Int(b))) return false;
  return true;
}

PrimeFactorization factorize(const Int& n, const Int& bound) {
  if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
  Int m = abs(n);
  if (m > bound) throw BoundExceeded("factorization bound exceeded");

  PrimeFactorization out;
  auto strip = [&](const Int& p) {
    if (m % p != 0) return;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.factors.emplace_back(p, e);
  };

  strip(2);
  strip(3);
  // Re-test the cofactor for primality only after it shrinks; a prime
  // cofactor ends the scan immediately.
  bool cofactor_prime = m > 1 && is_prime(m);
  for (Int c = 5; !cofactor_prime && m > 1 && c * c <= m; c += 6) {
    bool hit = m % c == 0 || m % (c + 2) == 0;
    strip(c);
    strip(c + 2);
    if (hit && m > 1) cofactor_prime = is_prime(m);
  }
  if (m > 1) out.factors.emplace_back(m, 1);
  return out;
}

unsigned p_valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("p_valuation: valuation infinite for n = 0");
  if (!is_prime(p)) throw std::invalid_argument("p_valuation: p must be prime");
  Int rest;
  return static_cast<unsigned>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Int smallest_prime_divisor(const Int& n) {
  Int m = abs(n);
  if (m < 2) throw std::invalid_argument("smallest_prime_divisor: |n| >= 2 required");
  if (m % 2 == 0) return 2;
  if (m % 3 == 0) return 3;
  for (Int c = 5; c * c <= m; c += 6) {
    if (m % c == 0) return c;
    if (m % (c + 2) == 0) return c + 2;
  }
  return m;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace irrcert::numtheory
