#include "irrcert/poly_text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace irrcert {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos), pos);
  }
};

Int parse_integer(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
    ++c.pos;
  if (c.pos == start) c.fail("expected digit");
  return Int(c.s.substr(start, c.pos - start));
}

// term := [int] ['*'] ['x' ['^' int]]  with at least one of the parts
void parse_term(Cursor& c, int sign, std::vector<Int>& acc) {
  Int coef = 1;
  bool have_coef = false;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    coef = parse_integer(c);
    have_coef = true;
  }
  if (!c.done() && c.peek() == '*') {
    if (!have_coef) c.fail("unexpected '*'");
    ++c.pos;
  }

  std::size_t power = 0;
  if (!c.done() && c.peek() == 'x') {
    ++c.pos;
    power = 1;
    if (!c.done() && c.peek() == '^') {
      ++c.pos;
      Int e = parse_integer(c);
      if (!e.fits_ulong_p()) c.fail("exponent too large");
      power = e.get_ui();
    }
  } else if (!have_coef) {
    c.fail("expected term");
  }

  if (acc.size() < power + 1) acc.resize(power + 1, Int(0));
  acc[power] += sign * coef;
}

}  // namespace

Polynomial parse_poly(const std::string& text) {
  Cursor c{text};
  if (c.done()) c.fail("empty input");

  std::vector<Int> acc;
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = ch == '-' ? -1 : 1;
      ++c.pos;
    } else if (!first) {
      c.fail("expected '+' or '-'");
    }
    // Allow a chain of unary signs after the separator.
    while (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
      if (c.peek() == '-') sign = -sign;
      ++c.pos;
    }
    if (c.done()) c.fail("expected term");
    parse_term(c, sign, acc);
    first = false;
  }
  return Polynomial{std::move(acc)};
}

std::string render_poly(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool leading = true;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const Int& c = f.coeff(i);
    if (c == 0) continue;
    Int a = abs(c);
    if (leading) {
      if (c < 0) out << "-";
      leading = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str();
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace irrcert
