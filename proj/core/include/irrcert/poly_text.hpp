#ifndef IRRCERT_POLY_TEXT_HPP
#define IRRCERT_POLY_TEXT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "irrcert/polynomial.hpp"

namespace irrcert {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses ASCII polynomial text in the variable x: integer coefficients
/// of unbounded size, terms in any order, `^` powers, optional `*`,
/// unary minus. Duplicate-degree terms are summed. Throws ParseError
/// with the offending position.
Polynomial parse_poly(const std::string& text);

/// Renders in descending degree, e.g. "x^2 + x + 4"; parses back to an
/// equal polynomial.
std::string render_poly(const Polynomial& f);

}  // namespace irrcert

#endif
