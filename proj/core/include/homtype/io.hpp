#ifndef HOMTYPE_IO_HPP
#define HOMTYPE_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "homtype/conditions.hpp"
#include "homtype/ms.hpp"
#include "homtype/norms.hpp"
#include "homtype/scenarios.hpp"
#include "homtype/space.hpp"

namespace homtype {

/// "1.5", "log2:1024", "log10:-3", "loge:2.5" -> extended-range value.
LogReal parse_extended_real(const std::string& text);

using LoadedSpace = std::variant<FinitePointSpace, IntervalDomain1D>;

/// {"type":"finite","masses":[...],"distances":[[...]],"k0":?,"log_scale":?}
/// or {"type":"intervals","intervals":[[a,b],...],"whole_line":bool}.
LoadedSpace parse_space(const std::string& json_text);
LoadedSpace load_space(const std::string& path);

/// {"breakpoints":[...],"values":[...]} (values = breakpoints + 1).
StepFunction1D parse_step_function(const std::string& json_text);
StepFunction1D load_step_function(const std::string& path);

/// {"values":[...]} with optional "log_scale" (values given as log2).
std::vector<double> parse_point_values(const std::string& json_text);
std::vector<double> load_point_values(const std::string& path);

/// Tagged-union NormSpec mirror, e.g. {"type":"lp","p":2,"weight":[...]},
/// {"type":"lorentz","r":2,"tau":1}, {"type":"orlicz","phi":{"preset":
/// "power","p":2}}, {"type":"variable_lp","exponents":[...]},
/// {"type":"morrey","p":1,"phi":{"preset":"measure_power","p":1}},
/// {"type":"orlicz_morrey","phi":...,"varphi":...},
/// {"type":"quotient","inner":{...}}.
NormSpec parse_norm_spec(const std::string& json_text);
NormSpec load_norm_spec(const std::string& path);

std::string to_json(const ConditionReport& report);
std::string to_json(const MSScanResult& scan);
std::string to_json(const ScenarioReport& report);
std::string to_csv(const MSScanResult& scan); // columns: s,F,ratio,trend
std::string to_csv(const ConditionReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace homtype

#endif
