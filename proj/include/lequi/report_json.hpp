#pragma once

#include "lequi/verify.hpp"

#include <json.hpp>

namespace lequi {

using Json = nlohmann::ordered_json;

Json to_json(const DiscrepancyRecord& d);
Json to_json(const VerificationReport& r);
Json to_json(const LemmaAuditReport& r);

}  // namespace lequi
