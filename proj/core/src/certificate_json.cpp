#include "irrcert/certificate_json.hpp"

#include <json.hpp>

#include "irrcert/poly_text.hpp"

namespace irrcert {

using ordered_json = nlohmann::ordered_json;

std::string certificate_document(const std::string& input, const Polynomial& f,
                                 const criteria::CriterionOutcome& outcome) {
  ordered_json doc;
  doc["input"] = input;
  doc["primitive_part"] = render_poly(f.is_zero() ? f : f.primitive_part());
  doc["content"] = f.is_zero() ? "0" : f.content().get_str();
  doc["outcome"] = criteria::to_string(outcome.kind);
  doc["reason"] = outcome.reason.empty() ? ordered_json() : ordered_json(outcome.reason);

  if (outcome.certificate) {
    const auto& cert = *outcome.certificate;
    doc["theorem"] = criteria::to_string(cert.theorem);
    ordered_json witnesses;
    witnesses["p"] = cert.p.get_str();
    witnesses["k"] = cert.k;
    witnesses["d"] = cert.d ? ordered_json(cert.d->get_str()) : ordered_json();
    witnesses["j"] = cert.j ? ordered_json(*cert.j) : ordered_json();
    doc["witnesses"] = witnesses;
    if (cert.root_proof) {
      ordered_json proof;
      proof["method"] = root_bounds::to_string(cert.root_proof->method);
      proof["radius"] = cert.root_proof->radius.get_str();
      proof["verdict"] = root_bounds::to_string(cert.root_proof->verdict);
      doc["root_proof"] = proof;
    } else {
      doc["root_proof"] = nullptr;
    }
  } else {
    doc["theorem"] = nullptr;
    doc["witnesses"] = nullptr;
    doc["root_proof"] = nullptr;
  }

  doc["factors"] = ordered_json::array();
  if (outcome.witness) {
    if (outcome.witness->unit != 1)
      doc["factors"].push_back(outcome.witness->unit.get_str());
    for (const auto& g : outcome.witness->factors)
      doc["factors"].push_back(render_poly(g));
  }

  doc["hypothesis_trace"] = ordered_json::array();
  if (outcome.certificate) {
    for (const auto& [label, value] : outcome.certificate->hypothesis_trace) {
      ordered_json entry;
      entry["hypothesis"] = label;
      entry["value"] = value;
      doc["hypothesis_trace"].push_back(entry);
    }
  }

  doc["tool_version"] = kToolVersion;
  return doc.dump(2) + "\n";
}

}  // namespace irrcert
