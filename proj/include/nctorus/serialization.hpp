#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nctorus/covering.hpp"
#include "nctorus/direct_sum.hpp"
#include "nctorus/galois.hpp"
#include "nctorus/path_lift.hpp"

namespace nctorus {

using json = nlohmann::json;

// Structured forms. Scalars are arrays of {"r": "a/b", "c": "p/q", "d": int}
// terms in canonical order; rationals travel as strings.

json to_json(const PhaseScalar& a);
PhaseScalar scalar_from_json(const json& j);

json to_json(const ThetaContext& ctx);
ThetaContext context_from_json(const json& j);

json to_json(const TorusElement& a);
TorusElement element_from_json(const json& j);

json to_json(const CoveringDescriptor& d);
CoveringDescriptor descriptor_from_json(const json& j);

/// One header record followed by one record per block, in block order.
std::vector<json> certificate_records(const CanCertificate& cert);
CanCertificate certificate_from_records(const std::vector<json>& records);

std::string render_text(const CanCertificate& cert);
std::string render_text(const CoveringDescriptor& d);
std::string render_text(const DecompositionReport& report);

}  // namespace nctorus
