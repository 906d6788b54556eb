#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cmult/class_record.hpp"
#include "cmult/family.hpp"
#include "cmult/group_oracle.hpp"
#include "cmult/number_theory.hpp"

namespace cmult {

/// Insertion-ordered so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";

/// {"command", "params", "payload", "schema_version"}
Json make_envelope(std::string_view command, Json params, Json payload);

std::string decimal(const mpz_class& v);

Json to_json(const MultiplicityReport& report);
Json to_json(const FamilyMember& member);
Json to_json(const FamilyVerification& verification);
Json to_json(const PowerConjugacy& pc);
Json to_json(const Thresholds& t);

std::string csv_escape(std::string_view field);
std::string csv_row(const std::vector<std::string>& fields);

/// Parts joined by single spaces, e.g. "18 10 9 1".
std::string join_parts(const Partition& lambda);
std::string join_decimals(const std::vector<mpz_class>& values, char sep);

}  // namespace cmult
