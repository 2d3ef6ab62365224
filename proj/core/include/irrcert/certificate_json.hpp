#ifndef IRRCERT_CERTIFICATE_JSON_HPP
#define IRRCERT_CERTIFICATE_JSON_HPP

#include <string>

#include "irrcert/criteria.hpp"
#include "irrcert/polynomial.hpp"

namespace irrcert {

inline constexpr const char* kToolVersion = "irrcert 1.0.0";

/// One JSON document per invocation, UTF-8, newline-terminated, with a
/// fixed field set and deterministic serialization: the same input and
/// options always produce byte-identical output.
///
/// Schema: {input, primitive_part, content, outcome, reason, theorem,
/// witnesses{p,k,d,j}, root_proof{method,radius,verdict}, factors[],
/// hypothesis_trace[], tool_version}. Fields that do not apply are null
/// (or empty arrays).
std::string certificate_document(const std::string& input, const Polynomial& f,
                                 const criteria::CriterionOutcome& outcome);

}  // namespace irrcert

#endif
