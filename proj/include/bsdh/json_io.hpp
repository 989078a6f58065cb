#pragma once

// JSON fragments for the CLI.  Input shapes:
//
//   root system   {"type": {"family": "A", "rank": 3}}  or
//                 {"cartan": [[2,-1],[-1,2]]}           (exactly one key)
//   word          {"word": [1,2,1]}
//   divisor       {"divisor": {"basis": "LT", "coeffs": [...]}}  or
//                 {"divisor": {"basis": "boundary",
//                              "schubert": [...], "nonschubert": [...]}}
//
// Shape errors (wrong/missing keys, wrong JSON types) throw
// json_shape_error; value errors defer to the library validators.
// Serializers use nlohmann::ordered_json so repeated runs are byte
// identical.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bsdh/enumerate.hpp"
#include "bsdh/intersect.hpp"
#include "bsdh/root_system.hpp"
#include "bsdh/word.hpp"

namespace bsdh {

class json_shape_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RootSystem root_system_from_json(const nlohmann::json& j);
std::vector<int> word_letters_from_json(const nlohmann::json& j);
DivisorClass divisor_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const VerifyReport& report);

}  // namespace bsdh
