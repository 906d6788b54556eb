#include "cmult/report_io.hpp"

namespace cmult {

Json make_envelope(std::string_view command, Json params, Json payload) {
  Json env = Json::object();
  env["command"] = std::string(command);
  env["params"] = std::move(params);
  env["payload"] = std::move(payload);
  env["schema_version"] = std::string(kSchemaVersion);
  return env;
}

std::string decimal(const mpz_class& v) { return v.get_str(10); }

Json to_json(const MultiplicityReport& report) {
  Json j = Json::object();
  j["group"] = report.group.to_string();
  j["group_order"] = decimal(report.total_mass());
  j["class_count"] = report.class_count();
  j["max_multiplicity"] = report.max_multiplicity;
  Json argmax = Json::array();
  for (const auto& s : report.argmax_sizes) argmax.push_back(decimal(s));
  j["argmax_sizes"] = std::move(argmax);
  Json hist = Json::array();
  for (const auto& [size, count] : report.histogram) {
    Json row = Json::object();
    row["size"] = decimal(size);
    row["count"] = count;
    hist.push_back(std::move(row));
  }
  j["histogram"] = std::move(hist);
  return j;
}

Json to_json(const FamilyMember& member) {
  Json j = Json::object();
  j["word"] = member.word_string();
  Json parts = Json::array();
  for (Part p : member.partition.parts()) parts.push_back(p);
  j["partition"] = std::move(parts);
  j["size"] = member.partition.size();
  j["sign"] = sign(member.partition) == Parity::Even ? "even" : "odd";
  j["centralizer"] = decimal(member.certified_centralizer);
  return j;
}

Json to_json(const FamilyVerification& verification) {
  Json j = Json::object();
  j["passed"] = verification.all_passed();
  j["check_count"] = verification.checks.size();
  j["failure_count"] = verification.failure_count();
  Json failures = Json::array();
  for (const auto& c : verification.checks) {
    if (c.passed) continue;
    Json f = Json::object();
    f["member"] = c.member ? Json(*c.member) : Json(nullptr);
    f["check"] = c.name;
    f["detail"] = c.detail;
    failures.push_back(std::move(f));
  }
  j["failures"] = std::move(failures);
  return j;
}

Json to_json(const PowerConjugacy& pc) {
  Json j = Json::object();
  j["order"] = pc.order;
  j["conj_power_count"] = pc.conj_power_count;
  j["equal_size_class_lower_bound"] = pc.equal_size_class_lower_bound;
  return j;
}

Json to_json(const Thresholds& t) {
  Json j = Json::object();
  j["min_even_n"] = decimal(t.min_even_n);
  j["min_odd_n"] = decimal(t.min_odd_n);
  j["all_n"] = decimal(t.all_n());
  return j;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(fields[i]);
  }
  return line;
}

std::string join_parts(const Partition& lambda) {
  std::string out;
  for (Part p : lambda.parts()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p);
  }
  return out;
}

std::string join_decimals(const std::vector<mpz_class>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += decimal(values[i]);
  }
  return out;
}

}  // namespace cmult
