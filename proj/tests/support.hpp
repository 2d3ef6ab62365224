#ifndef IRRCERT_TESTS_SUPPORT_HPP
#define IRRCERT_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include "irrcert/polynomial.hpp"

namespace irrcert::testsupport {

// Ascending coefficients: P({4, 1, 1}) is 4 + x + x^2.
inline Polynomial P(std::initializer_list<long> ascending) {
  std::vector<Int> c;
  for (long v : ascending) c.emplace_back(v);
  return Polynomial{std::move(c)};
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  long range(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng);
  }
};

inline Polynomial random_poly(Rng& rng, std::size_t max_deg, long cmax) {
  std::size_t deg = static_cast<std::size_t>(rng.range(1, static_cast<long>(max_deg)));
  std::vector<Int> c(deg + 1);
  for (std::size_t i = 0; i < deg; ++i) c[i] = rng.range(-cmax, cmax);
  do {
    c[deg] = rng.range(-cmax, cmax);
  } while (c[deg] == 0);
  return Polynomial{std::move(c)};
}

inline Polynomial random_primitive(Rng& rng, std::size_t max_deg, long cmax) {
  for (;;) {
    Polynomial f = random_poly(rng, max_deg, cmax);
    if (f.content() == 1) return f;
  }
}

// Monic product of (x - r) over the given integer roots.
inline Polynomial from_roots(const std::vector<long>& roots) {
  Polynomial acc = Polynomial::constant(1);
  for (long r : roots) acc = acc * Polynomial::linear_root(Int(r));
  return acc;
}

// Classical Eisenstein at p, coded independently of the criteria module:
// primitive f, p | a_i for all i < n, p !| a_n, p^2 !| a_0.
inline bool classical_eisenstein(const Polynomial& f, const Int& p) {
  if (f.is_zero() || f.degree_checked() < 1) return false;
  if (f.content() != 1) return false;
  std::size_t n = f.degree_checked();
  for (std::size_t i = 0; i < n; ++i)
    if (f.coeff(i) % p != 0) return false;
  if (f.leading() % p == 0) return false;
  if (f.coeff(0) % (p * p) == 0) return false;
  return true;
}

}  // namespace irrcert::testsupport

#endif
