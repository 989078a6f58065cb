#include "bsdh/json_io.hpp"

#include "bsdh/errors.hpp"

namespace bsdh {
namespace {

std::vector<std::int64_t> int64_array(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw json_shape_error("expected an integer array under \"" + key + "\"");
  std::vector<std::int64_t> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number_integer()) throw json_shape_error("\"" + key + "\" entries must be integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

}  // namespace

RootSystem root_system_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw json_shape_error("root system fragment must be a JSON object");
  const bool has_type = j.contains("type");
  const bool has_cartan = j.contains("cartan");
  if (has_type == has_cartan)
    throw json_shape_error("root system fragment needs exactly one of \"type\" and \"cartan\"");
  if (has_type) {
    const auto& t = j.at("type");
    if (!t.is_object() || !t.contains("family") || !t.contains("rank"))
      throw json_shape_error("\"type\" must be an object with \"family\" and \"rank\"");
    if (!t.at("family").is_string() || t.at("family").get<std::string>().size() != 1)
      throw json_shape_error("\"family\" must be a one-letter string");
    if (!t.at("rank").is_number_integer()) throw json_shape_error("\"rank\" must be an integer");
    return RootSystem::named(t.at("family").get<std::string>()[0], t.at("rank").get<int>());
  }
  if (!j.at("cartan").is_array()) throw json_shape_error("\"cartan\" must be an array of rows");
  CartanMatrix c;
  for (const auto& row : j.at("cartan")) {
    if (!row.is_array()) throw json_shape_error("\"cartan\" rows must be arrays");
    std::vector<std::int64_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw json_shape_error("\"cartan\" entries must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    c.push_back(std::move(r));
  }
  return RootSystem::from_cartan(std::move(c));
}

std::vector<int> word_letters_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("word") || !j.at("word").is_array())
    throw json_shape_error("word fragment must be an object with a \"word\" array");
  std::vector<int> letters;
  for (const auto& v : j.at("word")) {
    if (!v.is_number_integer()) throw json_shape_error("\"word\" entries must be integers");
    letters.push_back(v.get<int>());
  }
  return letters;
}

DivisorClass divisor_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("divisor") || !j.at("divisor").is_object())
    throw json_shape_error("divisor fragment must be an object with a \"divisor\" object");
  const auto& d = j.at("divisor");
  if (!d.contains("basis") || !d.at("basis").is_string())
    throw json_shape_error("\"divisor\" needs a \"basis\" string");
  const std::string basis = d.at("basis").get<std::string>();
  if (basis == "LT") return DivisorClass::lauritzen_thomsen(int64_array(d, "coeffs"));
  if (basis == "boundary")
    return DivisorClass::boundary(int64_array(d, "schubert"), int64_array(d, "nonschubert"));
  throw json_shape_error("\"basis\" must be \"LT\" or \"boundary\", got \"" + basis + "\"");
}

nlohmann::ordered_json report_to_json(const VerifyReport& report) {
  nlohmann::ordered_json out;
  out["fixed_points"] = report.fixed_points;
  out["curves"] = report.curves;
  nlohmann::ordered_json clauses = nlohmann::ordered_json::array();
  for (const ClauseResult& clause : report.clauses) {
    nlohmann::ordered_json c;
    c["name"] = clause.name;
    c["pass"] = clause.pass;
    if (!clause.pass) c["witness"] = clause.witness;
    clauses.push_back(std::move(c));
  }
  out["clauses"] = std::move(clauses);
  return out;
}

}  // namespace bsdh
