#pragma once

#include <json.hpp>

#include "relnum/decide.hpp"
#include "relnum/identity_suite.hpp"

namespace relnum {

nlohmann::json to_json(const VerifyReport& rep);
VerifyReport verify_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MkLadder& ladder);
MkLadder mk_ladder_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DecisionReport& rep);
DecisionReport decision_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IdentitySuiteReport& rep);

nlohmann::json to_json(const RelationWord& word);

bool operator==(const MkLevel& a, const MkLevel& b);
bool operator==(const MkLadder& a, const MkLadder& b);
bool operator==(const VerifyReport& a, const VerifyReport& b);
bool operator==(const DecisionReport& a, const DecisionReport& b);

} // namespace relnum
