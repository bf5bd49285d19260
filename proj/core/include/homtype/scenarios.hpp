#ifndef HOMTYPE_SCENARIOS_HPP
#define HOMTYPE_SCENARIOS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homtype/conditions.hpp"
#include "homtype/ms.hpp"

namespace homtype {

/// One pre-registered check inside a scenario.
struct Expectation {
  std::string description;
  bool pass = false;
  std::string detail; // measured numbers, formatted deterministically
};

/// Structured result of a named reproduction run. Everything is deterministic
/// for fixed parameters: two runs emit byte-identical reports.
struct ScenarioReport {
  std::string name;
  std::string claim; // the behavior this scenario reproduces
  std::map<std::string, std::string> parameters;
  std::vector<std::pair<std::string, double>> measurements;
  std::vector<Expectation> expectations;
  std::vector<MSScanResult> scans;
  std::vector<ConditionReport> conditions;

  bool overall() const {
    for (const auto& e : expectations)
      if (!e.pass) return false;
    return !expectations.empty();
  }
};

using ParamMap = std::map<std::string, std::string>;

const std::vector<std::string>& scenario_names();
ScenarioReport run_scenario(const std::string& name, const ParamMap& overrides = {});

// Deterministic generators shared by scenarios and tests.
FinitePointSpace random_bounded_space(int n, std::uint64_t seed);
StepFunction1D random_step_function(std::uint64_t seed, double span = 8.0);
std::vector<double> random_values(std::size_t n, std::uint64_t seed,
                                  double lo = -1.0, double hi = 1.0);

} // namespace homtype

#endif
