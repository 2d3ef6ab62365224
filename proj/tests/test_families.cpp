#include <doctest.h>

#include <numeric>

#include "irrcert/families.hpp"
#include "irrcert/oracle.hpp"
#include "support.hpp"

using namespace irrcert;
namespace fam = families;
using fam::Family;
using fam::FamilyParams;
using testsupport::P;

TEST_CASE("gen_x examples") {
  CHECK(fam::gen_x({Family::X, 2, 1, 1, 2}) == P({4, 1, 1}));
  CHECK(fam::gen_x({Family::X, 3, 2, 1, 3}) == P({27, 8, 3, 3}));
  CHECK_THROWS_AS(fam::gen_x({Family::X, 2, 1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(fam::gen_x({Family::X, 4, 1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(fam::gen_x({Family::X, 2, 2, 4, 5}), std::invalid_argument);  // gcd(k,j)=2
}

TEST_CASE("(x-1) * X identity") {
  CHECK(fam::x_times_xminus1_identity({Family::X, 2, 1, 1, 2}));
  CHECK(fam::x_times_xminus1_identity({Family::X, 3, 2, 1, 3}));
  CHECK(fam::x_times_xminus1_identity({Family::X, 5, 3, 2, 7}));
  for (long p : {2L, 3L, 5L, 7L})
    for (unsigned k = 1; k <= 4; ++k)
      for (unsigned j = 1; j <= 4; ++j) {
        if (std::gcd(k, j) != 1) continue;
        for (unsigned n = j + 1; n <= j + 4; ++n)
          CHECK(fam::x_times_xminus1_identity({Family::X, p, k, j, n}));
      }
}

TEST_CASE("gen_y examples") {
  CHECK(fam::gen_y({Family::Y, 3, 1, 1, 2, 2}) == P({6, 2, 3}));
  CHECK(fam::gen_y({Family::Y, 5, 1, 2, 3, 4}) == P({15, 4, 5, 5}));
  CHECK_THROWS_AS(fam::gen_y({Family::Y, 3, 1, 1, 2, 5}), std::invalid_argument);  // m >= p
  CHECK_THROWS_AS(fam::gen_y({Family::Y, 3, 1, 4, 3, 1}), std::invalid_argument);  // j > n
}

TEST_CASE("family_selftest examples") {
  CHECK(fam::family_selftest({Family::X, 2, 1, 1, 2}).irreducible());
  CHECK(fam::family_selftest({Family::Y, 3, 1, 1, 2, 2}).irreducible());

  auto x313 = fam::family_selftest({Family::X, 3, 2, 1, 3});
  CHECK(x313.irreducible());
  auto cross = oracle::kronecker_factor(fam::gen_x({Family::X, 3, 2, 1, 3}));
  CHECK(cross.irreducible_by_exhaustion);
}

TEST_CASE("Y family self-certifies when the constant term cooperates") {
  // The constant term is p^k * n, so the smallest-prime-divisor hypothesis
  // |a_0 / q| <= |a_n| holds exactly when n is a prime <= p. The j = n
  // overlap folds m into the constant term and breaks it again, so the
  // reliably certifying sub-grid is j < n with prime n <= p.
  for (long p : {3L, 5L, 7L})
    for (unsigned k = 1; k <= 3; ++k)
      for (unsigned n : {2u, 3u, 5u, 7u}) {
        if (static_cast<long>(n) > p) continue;
        for (unsigned j = 1; j < n; ++j) {
          if (std::gcd(k, j) != 1) continue;
          for (unsigned m = 1; m < 3; ++m) {
            FamilyParams params{Family::Y, p, k, j, n, m};
            auto verdict = fam::family_selftest(params);
            CAPTURE(p);
            CAPTURE(k);
            CAPTURE(j);
            CAPTURE(n);
            CAPTURE(m);
            CHECK(verdict.irreducible());
          }
        }
      }
}

TEST_CASE("Y family with composite n documents the failed hypothesis") {
  // n = 4 makes a_0 = 4 p^k with smallest prime divisor 2, and
  // |a_0 / 2| = 2 p^k > p^k = |a_n|.
  auto verdict = fam::family_selftest({Family::Y, 3, 1, 1, 4, 2});
  CHECK(verdict.inconclusive());
  CHECK(verdict.reason.find("|a_0 / q| <= |a_n|") != std::string::npos);
}

TEST_CASE("X family self-certifies where the shifted-exponent constraint holds") {
  // The constant term of X is p^{k+1}, so the certifying exponent is k+1 and
  // the coprimality that actually matters is gcd(k+1, j) = 1. Points where
  // that fails, and the two genuinely reducible small instances at p=2, k=1,
  // j=3, are exercised separately below.
  for (long p : {2L, 3L, 5L})
    for (unsigned k = 1; k <= 3; ++k)
      for (unsigned j = 1; j <= 3; ++j) {
        if (std::gcd(k, j) != 1) continue;
        if (std::gcd(k + 1, j) != 1) continue;
        for (unsigned n = j + 1; n <= j + 3; ++n) {
          if (p == 2 && k == 1 && j == 3) continue;
          FamilyParams params{Family::X, p, k, j, n};
          auto verdict = fam::family_selftest(params);
          CAPTURE(p);
          CAPTURE(k);
          CAPTURE(j);
          CAPTURE(n);
          CHECK(verdict.irreducible());
        }
      }
}

TEST_CASE("small X instances outside that constraint are genuinely reducible") {
  // k=1, j=2: gcd(k,j)=1 but gcd(k+1,j)=2, and the polynomial really factors.
  Polynomial f = fam::gen_x({Family::X, 2, 1, 2, 3});
  CHECK(f == P({4, 4, 1, 1}));
  auto r = oracle::kronecker_factor(f);
  CHECK(!r.irreducible_by_exhaustion);
  REQUIRE(r.witness.factors.size() == 2);
  CHECK(r.witness.factors[0] == P({1, 1}));
  CHECK(r.witness.factors[1] == P({4, 0, 1}));

  // p=2, k=1, j=3: a zero lands on the unit circle and x^2+x+1 divides.
  Polynomial g = fam::gen_x({Family::X, 2, 1, 3, 5});
  auto s = oracle::kronecker_factor(g);
  CHECK(!s.irreducible_by_exhaustion);
  bool has_cyclotomic = false;
  for (const auto& factor : s.witness.factors)
    if (factor == P({1, 1, 1})) has_cyclotomic = true;
  CHECK(has_cyclotomic);
}
