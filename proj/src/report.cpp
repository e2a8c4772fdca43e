#include "cs/report.hpp"

#include "json.hpp"

namespace cs {

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["trials"] = trials;
  j["seed"] = seed;
  j["tolerance"] = tolerance;
  j["max_residual"] = max_residual;
  j["passed"] = passed;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    nlohmann::ordered_json entry;
    entry["input"] = v.input;
    entry["residual"] = v.residual;
    arr.push_back(std::move(entry));
  }
  j["violations"] = std::move(arr);
  return j.dump();
}

}  // namespace cs
