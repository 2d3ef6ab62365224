#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "irrcert/root_bounds.hpp"
#include "support.hpp"

using namespace irrcert;
namespace rb = root_bounds;
using rb::Verdict;
using testsupport::P;
using testsupport::Rng;

TEST_CASE("dominance examples") {
  CHECK(rb::dominance_outside(P({7, 2, 1}), 1).verdict == Verdict::CertifiedOutside);
  CHECK(rb::dominance_outside(P({6, 1, 1}), 2).verdict == Verdict::Inconclusive);  // 6 > 6 fails
  CHECK(rb::dominance_outside(P({0, 1}), 1).verdict == Verdict::Inconclusive);
  CHECK_THROWS_AS(rb::dominance_outside(P({1, 1}), 0), std::invalid_argument);
}

TEST_CASE("schur-cohn examples") {
  CHECK(rb::schur_cohn_outside(P({6, 1, 1}), 2).verdict == Verdict::CertifiedOutside);
  CHECK(rb::schur_cohn_outside(P({4, 1, 1}), 1).verdict == Verdict::CertifiedOutside);
  CHECK(rb::schur_cohn_outside(P({2, 3, 1}), 1).verdict == Verdict::NotAllOutside);  // zero at -1
  CHECK(rb::schur_cohn_outside(P({0, 1}), 1).verdict == Verdict::NotAllOutside);
  CHECK_THROWS_AS(rb::schur_cohn_outside(Polynomial::zero(), 1), std::invalid_argument);
  CHECK_THROWS_AS(rb::schur_cohn_outside(P({1, 1}), 0), std::invalid_argument);
}

TEST_CASE("min_modulus_estimate examples") {
  CHECK(std::abs(rb::min_modulus_estimate(P({6, 1, 1})) - std::sqrt(6.0)) < 1e-6);
  CHECK(std::abs(rb::min_modulus_estimate(P({15, -8, 1})) - 3.0) < 1e-6);
  CHECK(std::abs(rb::min_modulus_estimate(P({4, 1, 1})) - 2.0) < 1e-6);
}

TEST_CASE("schur-cohn is exact on products of known integer roots") {
  Rng rng(42);
  for (int iter = 0; iter < 400; ++iter) {
    std::vector<long> roots;
    long nroots = rng.range(1, 4);
    long min_abs = 1000;
    for (long i = 0; i < nroots; ++i) {
      long r;
      do {
        r = rng.range(-8, 8);
      } while (r == 0);
      roots.push_back(r);
      min_abs = std::min(min_abs, std::labs(r));
    }
    Polynomial f = testsupport::from_roots(roots);
    for (Int d = 1; d <= 9; ++d) {
      auto proof = rb::schur_cohn_outside(f, d);
      Verdict expected =
          (min_abs > d) ? Verdict::CertifiedOutside : Verdict::NotAllOutside;
      CHECK(proof.verdict == expected);
    }
  }
}

TEST_CASE("schur-cohn monotone in d; dominance implies schur-cohn") {
  Rng rng(4242);
  for (int iter = 0; iter < 400; ++iter) {
    Polynomial f = testsupport::random_poly(rng, 5, 30);
    if (f.degree_checked() < 1) continue;
    bool prev_outside = true;
    for (Int d = 1; d <= 4; ++d) {
      auto schur = rb::schur_cohn_outside(f, d);
      auto dom = rb::dominance_outside(f, d);
      if (dom.verdict == Verdict::CertifiedOutside)
        CHECK(schur.verdict == Verdict::CertifiedOutside);
      // Once not all zeros clear radius d, larger radii cannot clear either.
      bool outside = schur.verdict == Verdict::CertifiedOutside;
      if (!prev_outside) CHECK(!outside);
      prev_outside = outside;

      // Spot-check against the numeric estimate when it converges cleanly.
      if (f.coeff(0) != 0) {
        try {
          double est = rb::min_modulus_estimate(f);
          double dd = d.get_d();
          if (est > dd + 1e-6) CHECK(outside);
          if (est < dd - 1e-6) CHECK(!outside);
        } catch (const std::runtime_error&) {
          // diagnostic estimator may fail to converge; nothing to compare
        }
      }
    }
  }
}
