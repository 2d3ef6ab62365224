#ifndef IRRCERT_NUMTHEORY_HPP
#define IRRCERT_NUMTHEORY_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "irrcert/polynomial.hpp"

namespace irrcert::numtheory {

/// Thrown when an input exceeds the configured factorization bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Prime-power decomposition of |n|; primes strictly increasing.
struct PrimeFactorization {
  std::vector<std::pair<Int, unsigned>> factors;

  Int refold() const;  // product of p^e
};

/// Default cap on |n| for factorize(): 2^63.
Int default_factor_bound();

/// Deterministic primality (trial division plus Miller-Rabin with a base
/// set proven exact below 3.3 * 10^24). Throws BoundExceeded above that.
bool is_prime(const Int& n);

/// Complete factorization of |n| by trial division, with an early exit
/// once the remaining cofactor is prime. n must be nonzero and |n| within
/// the bound.
PrimeFactorization factorize(const Int& n, const Int& bound = default_factor_bound());

/// Largest e with p^e | n. n nonzero, p prime.
unsigned p_valuation(const Int& n, const Int& p);

/// Least prime dividing |n|; requires |n| >= 2.
Int smallest_prime_divisor(const Int& n);

Int gcd(const Int& a, const Int& b);

}  // namespace irrcert::numtheory

#endif
