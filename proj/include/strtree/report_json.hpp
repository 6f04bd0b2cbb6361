#pragma once

// JSON form of a VerificationReport:
// {"suite","bound","cases","failures":[{"law","witness"}],"elapsed_ms"}
// plus "details" when the suite records any.

#include <json.hpp>

#include "strtree/report.hpp"

namespace strtree {

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["bound"] = r.bound;
  j["cases"] = r.cases;
  auto fs = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [k, v] : f.witness) w[k] = v;
    fs.push_back({{"law", f.law}, {"witness", std::move(w)}});
  }
  j["failures"] = std::move(fs);
  j["elapsed_ms"] = r.elapsed.count();
  if (!r.details.empty()) {
    nlohmann::ordered_json d = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.details) d[k] = v;
    j["details"] = std::move(d);
  }
  return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r(j.at("suite").get<std::string>(), j.at("bound").get<std::size_t>());
  r.cases = j.at("cases").get<std::size_t>();
  for (const auto& f : j.at("failures")) {
    r.fail(f.at("law").get<std::string>(), f.at("witness").get<std::map<std::string, std::string>>());
  }
  r.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<long long>());
  if (j.contains("details")) {
    for (const auto& [k, v] : j.at("details").items()) r.details.emplace_back(k, v.get<std::vector<long long>>());
  }
  return r;
}

}  // namespace strtree
