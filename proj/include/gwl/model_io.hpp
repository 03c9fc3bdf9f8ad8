#pragma once

#include "gwl/filtration.hpp"
#include "gwl/lambda_ring.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace gwl {

/// Malformed model document; the message names the offending key.
class ModelParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integers that fit in int64 become JSON numbers, others decimal strings.
nlohmann::json int_to_json(const Int& x);
Int int_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json model_to_json(const RingModel& m);
/// Structural parse only; run validate_model separately.
RingModel model_from_json(const nlohmann::json& doc);

RingModel read_model_file(const std::string& path);
void write_model_file(const RingModel& m, const std::string& path);

/// "2*a + a^2 - 1", or "0".
std::string format_element(const GroupPresentation& pres, const GroupElement& x);
/// "Z/2 + Z", or "0" for the trivial group.
std::string format_invariants(const IntVector& inv);

nlohmann::json filtration_to_json(const std::string& model_name, const FiltrationResult& f);

}  // namespace gwl
