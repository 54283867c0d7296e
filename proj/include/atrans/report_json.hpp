#pragma once

#include <json.hpp>

#include "atrans/search.hpp"
#include "atrans/verify.hpp"

namespace atrans {

// Stable machine-readable forms. Timing fields are deliberately left out so
// repeated runs produce identical bytes.
nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const VerificationReport& r);
CheckResult check_from_json(const nlohmann::json& j);
VerificationReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SearchReport& r);

} // namespace atrans
