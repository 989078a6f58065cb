#include <string>
#include <vector>

#include <json.hpp>

#include "bsdh/enumerate.hpp"
#include "bsdh/errors.hpp"
#include "bsdh/json_io.hpp"
#include <doctest.h>
#include "test_helpers.hpp"

using namespace bsdh;
using nlohmann::json;

TEST_CASE("root system from a named type") {
  auto rs = root_system_from_json(json::parse(R"({"type": {"family": "G", "rank": 2}})"));
  CHECK(rs.rank() == 2);
  CHECK(rs.pairing(2, 1) == -3);
}

TEST_CASE("root system from an explicit Cartan matrix") {
  auto rs = root_system_from_json(json::parse(R"({"cartan": [[2,-1],[-1,2]]})"));
  CHECK(rs.rank() == 2);
  CHECK(rs.finite_type());
}

TEST_CASE("root system shape errors") {
  CHECK_THROWS_AS(root_system_from_json(json::parse("{}")), json_shape_error);
  CHECK_THROWS_AS(root_system_from_json(json::parse(
                      R"({"type": {"family": "A", "rank": 2}, "cartan": [[2]]})")),
                  json_shape_error);
  CHECK_THROWS_AS(root_system_from_json(json::parse(R"({"type": "A2"})")), json_shape_error);
  CHECK_THROWS_AS(root_system_from_json(json::parse(R"({"type": {"family": "A"}})")),
                  json_shape_error);
  CHECK_THROWS_AS(root_system_from_json(json::parse(R"({"cartan": 5})")), json_shape_error);
  CHECK_THROWS_AS(root_system_from_json(json::parse(R"({"cartan": [[2,"x"],[-1,2]]})")),
                  json_shape_error);
  // Well-shaped but invalid values defer to the library validator.
  CHECK_THROWS_AS(root_system_from_json(json::parse(R"({"cartan": [[2,-1],[0,2]]})")),
                  validation_error);
}

TEST_CASE("word letters") {
  CHECK(word_letters_from_json(json::parse(R"({"word": [1,2,1]})")) ==
        std::vector<int>{1, 2, 1});
  CHECK_THROWS_AS(word_letters_from_json(json::parse(R"({"word": "121"})")), json_shape_error);
  CHECK_THROWS_AS(word_letters_from_json(json::parse("{}")), json_shape_error);
  CHECK_THROWS_AS(word_letters_from_json(json::parse(R"({"word": [1,2.5]})")), json_shape_error);
}

TEST_CASE("divisors in both bases") {
  auto lt = divisor_from_json(json::parse(R"({"divisor": {"basis": "LT", "coeffs": [3,2,1]}})"));
  CHECK(lt.basis() == DivisorClass::Basis::lt);
  CHECK(lt.lt_coeffs() == std::vector<std::int64_t>{3, 2, 1});

  auto bd = divisor_from_json(json::parse(
      R"({"divisor": {"basis": "boundary", "schubert": [1,0,-1], "nonschubert": [0,2,0]}})"));
  CHECK_FALSE(bd.basis() == DivisorClass::Basis::lt);
  CHECK(bd.schubert_coeffs() == std::vector<std::int64_t>{1, 0, -1});
  CHECK(bd.nonschubert_coeffs() == std::vector<std::int64_t>{0, 2, 0});
}

TEST_CASE("divisor shape errors") {
  CHECK_THROWS_AS(divisor_from_json(json::parse(R"({"divisor": {"coeffs": [1]}})")),
                  json_shape_error);
  CHECK_THROWS_AS(divisor_from_json(json::parse(R"({"divisor": {"basis": "weights"}})")),
                  json_shape_error);
  CHECK_THROWS_AS(divisor_from_json(json::parse(R"({"divisor": {"basis": "LT"}})")),
                  json_shape_error);
  CHECK_THROWS_AS(
      divisor_from_json(json::parse(R"({"divisor": {"basis": "boundary", "schubert": [1]}})")),
      json_shape_error);
  CHECK_THROWS_AS(divisor_from_json(json::parse(R"({"basis": "LT", "coeffs": [1]})")),
                  json_shape_error);
}

TEST_CASE("report serialization is deterministic") {
  auto w = bsdh::testing::make_word('A', 2, {1, 2, 1});
  auto report = verify_report(w);
  auto j = report_to_json(report);

  CHECK(j["fixed_points"] == 8);
  CHECK(j["curves"] == 12);
  REQUIRE(j["clauses"].is_array());
  REQUIRE(j["clauses"].size() == 5);
  CHECK(j["clauses"][0]["name"] == "fixed_point_count");
  CHECK(j["clauses"][0]["pass"] == true);
  // Witness appears only on failure.
  CHECK_FALSE(j["clauses"][0].contains("witness"));

  std::string once = j.dump();
  std::string twice = report_to_json(verify_report(w)).dump();
  CHECK(once == twice);
  // Key order is fixed by construction, not alphabetical.
  CHECK(once.find("\"fixed_points\"") < once.find("\"curves\""));
  CHECK(once.find("\"curves\"") < once.find("\"clauses\""));
}
