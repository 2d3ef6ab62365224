#include <doctest.h>

#include "irrcert/poly_text.hpp"
#include "support.hpp"

using namespace irrcert;
using testsupport::P;
using testsupport::Rng;

TEST_CASE("parse examples") {
  CHECK(parse_poly("x^2 + x + 4") == P({4, 1, 1}));
  CHECK(parse_poly("-3") == P({-3}));
  CHECK(parse_poly("2x^3 - x + x") == P({0, 0, 0, 2}));
  CHECK(parse_poly("2*x^3") == P({0, 0, 0, 2}));
  CHECK(parse_poly("x") == P({0, 1}));
  CHECK(parse_poly("-x^2") == P({0, 0, -1}));
  CHECK(parse_poly("0") == Polynomial::zero());
  CHECK(parse_poly("x - x") == Polynomial::zero());
  CHECK(parse_poly("1 + 2x + x^2 - 1") == P({0, 2, 1}));
  CHECK(parse_poly("  x^2+x+4  ") == P({4, 1, 1}));
  CHECK(parse_poly("- -x") == P({0, 1}));
  CHECK(parse_poly("123456789012345678901234567890") ==
        Polynomial{{Int("123456789012345678901234567890")}});
}

TEST_CASE("parse errors carry a position") {
  for (const char* bad : {"", "x^", "x^-2", "2 +", "y + 1", "x**2", "3..5"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_poly(bad), ParseError);
  }
  try {
    parse_poly("x + @");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("render examples") {
  CHECK(render_poly(P({4, 1, 1})) == "x^2 + x + 4");
  CHECK(render_poly(Polynomial::zero()) == "0");
  CHECK(render_poly(P({-3})) == "-3");
  CHECK(render_poly(P({0, -1})) == "-x");
  CHECK(render_poly(P({6, 2, 3})) == "3x^2 + 2x + 6");
  CHECK(render_poly(P({0, 0, 2})) == "2x^2");
  CHECK(render_poly(P({1, -1, 1})) == "x^2 - x + 1");
}

TEST_CASE("render then parse round-trips") {
  Rng rng(777);
  for (int iter = 0; iter < 500; ++iter) {
    Polynomial f = testsupport::random_poly(rng, 8, 1000);
    CHECK(parse_poly(render_poly(f)) == f);
  }
  CHECK(parse_poly(render_poly(Polynomial::zero())) == Polynomial::zero());
}
