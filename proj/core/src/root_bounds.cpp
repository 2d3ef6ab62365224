#include "irrcert/root_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace irrcert::root_bounds {

const char* to_string(Method m) {
  return m == Method::Dominance ? "dominance" : "schur-cohn";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedOutside: return "CertifiedOutside";
    case Verdict::NotAllOutside: return "NotAllOutside";
    default: return "Inconclusive";
  }
}

RootBoundProof dominance_outside(const Polynomial& f, const Int& d) {
  if (d < 1) throw std::invalid_argument("dominance_outside: d >= 1 required");
  if (f.is_zero() || f.degree_checked() < 1)
    throw std::invalid_argument("dominance_outside: deg f >= 1 required");

  Int lhs = abs(f.coeff(0));
  Int rhs = 0;
  Int power = 1;
  for (std::size_t i = 1; i <= f.degree_checked(); ++i) {
    power *= d;
    rhs += abs(f.coeff(i)) * power;
  }
  std::ostringstream trace;
  trace << "|a_0| = " << lhs << (lhs > rhs ? " > " : " <= ")
        << "sum |a_i| d^i = " << rhs;
  return {d, Method::Dominance,
          lhs > rhs ? Verdict::CertifiedOutside : Verdict::Inconclusive,
          trace.str()};
}

RootBoundProof schur_cohn_outside(const Polynomial& f, const Int& d) {
  if (d < 1) throw std::invalid_argument("schur_cohn_outside: d >= 1 required");
  if (f.is_zero()) throw std::invalid_argument("schur_cohn_outside: zero polynomial");
  if (f.degree_checked() < 1)
    throw std::invalid_argument("schur_cohn_outside: deg f >= 1 required");
  if (f.coeff(0) == 0)
    return {d, Method::SchurCohn, Verdict::NotAllOutside, "zero at the origin"};

  // Zeros of g = reverse(f(d x)) are d/theta; all theta strictly outside
  // the closed disk of radius d iff g is Schur stable (all zeros in the
  // open unit disk). The reduction g -> (lead(g) g - g(0) reverse(g))/x
  // preserves stability while |g(0)| < |lead(g)|; |g(0)| >= |lead(g)|
  // pins a zero of g on or outside the unit circle.
  Polynomial g = f.scale_arg(d).reverse();
  unsigned depth = 0;
  while (g.degree_checked() >= 1) {
    const Int a0 = g.coeff(0);
    const Int an = g.leading();
    int cmp = mpz_cmpabs(a0.get_mpz_t(), an.get_mpz_t());
    if (cmp >= 0) {
      std::ostringstream trace;
      trace << "reduction depth " << depth << ": |g(0)| = " << abs(a0)
            << (cmp == 0 ? " = " : " > ") << "|lead(g)| = " << abs(an);
      return {d, Method::SchurCohn, Verdict::NotAllOutside, trace.str()};
    }
    std::size_t n = g.degree_checked();
    std::vector<Int> next(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
      next[i] = an * g.coeff(i + 1) - a0 * g.coeff(n - 1 - i);
    g = Polynomial{std::move(next)};
    if (g.is_zero())
      return {d, Method::SchurCohn, Verdict::Inconclusive,
              "reduction collapsed to zero"};
    ++depth;
  }
  std::ostringstream trace;
  trace << "reduction chain strict through depth " << depth;
  return {d, Method::SchurCohn, Verdict::CertifiedOutside, trace.str()};
}

double min_modulus_estimate(const Polynomial& f) {
  if (f.is_zero() || f.degree_checked() < 1)
    throw std::invalid_argument("min_modulus_estimate: deg f >= 1 required");
  if (f.coeff(0) == 0)
    throw std::invalid_argument("min_modulus_estimate: f(0) != 0 required");

  std::size_t n = f.degree_checked();
  std::vector<std::complex<double>> c(n + 1);
  double lead = f.leading().get_d();
  double scale = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    c[i] = f.coeff(i).get_d() / lead;
    scale = std::max(scale, std::abs(c[i]));
  }

  auto horner = [&](std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = n + 1; i-- > 0;) acc = acc * z + c[i];
    return acc;
  };

  std::vector<std::complex<double>> roots(n);
  std::complex<double> seed(0.4, 0.9);
  roots[0] = seed;
  for (std::size_t i = 1; i < n; ++i) roots[i] = roots[i - 1] * seed;

  constexpr int kMaxIter = 2000;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    double shift = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> denom = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      std::complex<double> delta = horner(roots[i]) / denom;
      roots[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-13) {
      double best = std::abs(roots[0]);
      for (const auto& r : roots) best = std::min(best, std::abs(r));
      return best;
    }
  }
  throw std::runtime_error("min_modulus_estimate: estimate unavailable");
}

}  // namespace irrcert::root_bounds
