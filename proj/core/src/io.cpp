#include "homtype/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace homtype {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

double num(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw ParseError(std::string("missing numeric field '") + key + "'");
  return j[key].get<double>();
}

std::vector<double> num_array(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw ParseError("expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json log_value(const LogReal& v) {
  json j;
  j["log10"] = v.is_zero() ? nullptr : json(v.ln_abs() / std::log(10.0));
  const double d = v.value();
  if (std::isfinite(d)) j["value"] = d;
  return j;
}

} // namespace

LogReal parse_extended_real(const std::string& text) {
  auto parse_tail = [&](std::size_t prefix_len) {
    try {
      return std::stod(text.substr(prefix_len));
    } catch (const std::exception&) {
      throw ParseError("bad numeric literal '" + text + "'");
    }
  };
  if (text.rfind("log2:", 0) == 0) return LogReal::from_log2(parse_tail(5));
  if (text.rfind("log10:", 0) == 0) return LogReal::from_log10(parse_tail(6));
  if (text.rfind("loge:", 0) == 0) return LogReal::from_ln(parse_tail(5));
  return LogReal::from_value(parse_tail(0));
}

LoadedSpace parse_space(const std::string& json_text) {
  const json j = parse(json_text);
  const std::string type = j.value("type", "");
  if (type == "finite") {
    if (!j.contains("masses") || !j.contains("distances"))
      throw ParseError("finite space needs 'masses' and 'distances'");
    const bool log_scale = j.value("log_scale", false);
    std::vector<LogReal> masses;
    for (double m : num_array(j["masses"]))
      masses.push_back(log_scale ? LogReal::from_log2(m) : LogReal::from_value(m));
    const std::size_t n = masses.size();
    std::vector<LogReal> dist;
    dist.reserve(n * n);
    if (!j["distances"].is_array() || j["distances"].size() != n)
      throw ParseError("distance table must be square");
    for (const auto& row : j["distances"]) {
      const auto r = num_array(row);
      if (r.size() != n) throw ParseError("distance table must be square");
      for (std::size_t c = 0; c < n; ++c) {
        const double v = r[c];
        dist.push_back(log_scale ? LogReal::from_log2(v) : LogReal::from_value(v));
      }
    }
    if (log_scale) // a log2 of 0 encodes distance 0 on the diagonal
      for (std::size_t i = 0; i < n; ++i) dist[i * n + i] = LogReal();
    std::optional<double> k0;
    if (j.contains("k0")) k0 = num(j, "k0");
    try {
      return build_finite_space_log(std::move(dist), std::move(masses), k0);
    } catch (const ParseError&) {
      throw;
    }
  }
  if (type == "intervals") {
    IntervalDomain1D d;
    d.whole_line = j.value("whole_line", false);
    if (j.contains("intervals"))
      for (const auto& iv : j["intervals"]) {
        const auto ab = num_array(iv);
        if (ab.size() != 2) throw ParseError("interval needs [a,b]");
        d.intervals.emplace_back(ab[0], ab[1]);
      }
    d.validate();
    return d;
  }
  throw ParseError("space 'type' must be 'finite' or 'intervals'");
}

LoadedSpace load_space(const std::string& path) {
  return parse_space(read_file(path));
}

StepFunction1D parse_step_function(const std::string& json_text) {
  const json j = parse(json_text);
  if (!j.contains("breakpoints") || !j.contains("values"))
    throw ParseError("step function needs 'breakpoints' and 'values'");
  StepFunction1D f{num_array(j["breakpoints"]), num_array(j["values"])};
  try {
    f.validate();
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return f;
}

StepFunction1D load_step_function(const std::string& path) {
  return parse_step_function(read_file(path));
}

std::vector<double> parse_point_values(const std::string& json_text) {
  const json j = parse(json_text);
  if (!j.contains("values")) throw ParseError("expected {\"values\":[...]}");
  auto v = num_array(j["values"]);
  if (j.value("log_scale", false))
    for (double& x : v) x = std::exp2(x);
  return v;
}

std::vector<double> load_point_values(const std::string& path) {
  return parse_point_values(read_file(path));
}

namespace {

OrliczFunctionSpec parse_orlicz(const json& j) {
  const std::string preset = j.value("preset", "");
  if (preset == "power") return OrliczFunctionSpec::power(num(j, "p"));
  if (preset == "exp_minus_one") return OrliczFunctionSpec::exp_minus_one();
  throw ParseError("orlicz preset must be 'power' or 'exp_minus_one'");
}

PhiFunctionSpec parse_phi(const json& j) {
  const std::string preset = j.value("preset", "");
  if (preset == "power") return PhiFunctionSpec::power(num(j, "lambda"), num(j, "p"));
  if (preset == "measure_power") return PhiFunctionSpec::measure_power(num(j, "p"));
  throw ParseError("phi preset must be 'power' or 'measure_power'");
}

NormSpec parse_spec_json(const json& j) {
  const std::string type = j.value("type", "");
  std::optional<std::vector<double>> weight;
  if (j.contains("weight")) weight = num_array(j["weight"]);
  if (type == "lp") {
    if (j.value("p", json()) == "inf" || j.value("sup", false))
      return NormSpec::sup();
    return NormSpec::lp(num(j, "p"), std::move(weight));
  }
  if (type == "sup") return NormSpec::sup();
  if (type == "lorentz")
    return NormSpec::lorentz(num(j, "r"), num(j, "tau"), std::move(weight));
  if (type == "orlicz")
    return NormSpec::orlicz(parse_orlicz(j.at("phi")), std::move(weight));
  if (type == "variable_lp")
    return NormSpec::variable_lp(num_array(j.at("exponents")));
  if (type == "morrey")
    return NormSpec::morrey(num(j, "p"), parse_phi(j.at("phi")));
  if (type == "orlicz_morrey")
    return NormSpec::orlicz_morrey(parse_orlicz(j.at("phi")),
                                   parse_phi(j.at("varphi")));
  if (type == "quotient") {
    if (!j.contains("inner")) throw ParseError("quotient needs 'inner'");
    return NormSpec::quotient(parse_spec_json(j["inner"]));
  }
  throw ParseError("unknown norm spec type '" + type + "'");
}

} // namespace

NormSpec parse_norm_spec(const std::string& json_text) {
  try {
    return parse_spec_json(parse(json_text));
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

NormSpec load_norm_spec(const std::string& path) {
  return parse_norm_spec(read_file(path));
}

// ---------------------------------------------------------------------------
// emission

std::string to_json(const ConditionReport& report) {
  json j;
  j["condition"] = to_string(report.condition);
  j["verdict"] = to_string(report.verdict);
  j["window_inf"] = report.window_inf;
  j["threshold"] = report.threshold;
  j["base_point"] = report.base_point;
  if (report.lambda > 0.0) j["lambda"] = report.lambda;
  if (report.condition == ConditionKind::Doubling) {
    j["l_mu_estimate"] = report.l_mu_estimate;
    j["upper_dimension"] = report.upper_dimension;
  }
  j["window"] = {log_value(report.window.first), log_value(report.window.second)};
  json ratios = json::array();
  for (const auto& [r, q] : report.ratios) {
    json row;
    row["radius"] = log_value(r);
    row["ratio"] = q;
    ratios.push_back(row);
  }
  j["ratios"] = std::move(ratios);
  return j.dump(2);
}

std::string to_json(const MSScanResult& scan) {
  json j;
  j["q"] = scan.q;
  j["grid"] = scan.grid;
  j["values"] = scan.values;
  j["reference_norm"] = scan.reference_norm;
  j["ratio_bracket"] = {scan.ratio_bracket.first, scan.ratio_bracket.second};
  j["trend"] = to_string(scan.trend);
  if (scan.extrapolation) {
    j["extrapolation"] = {{"limit", scan.extrapolation->limit},
                          {"spread", scan.extrapolation->spread},
                          {"reliable", scan.extrapolation->reliable}};
  }
  return j.dump(2);
}

std::string to_json(const ScenarioReport& report) {
  json j;
  j["name"] = report.name;
  j["claim"] = report.claim;
  j["overall"] = report.overall() ? "pass" : "fail";
  j["parameters"] = report.parameters;
  json meas = json::array();
  for (const auto& [k, v] : report.measurements)
    meas.push_back({{"name", k}, {"value", v}});
  j["measurements"] = std::move(meas);
  json exps = json::array();
  for (const auto& e : report.expectations) {
    json row;
    row["description"] = e.description;
    row["outcome"] = e.pass ? "pass" : "fail";
    if (!e.detail.empty()) row["detail"] = e.detail;
    exps.push_back(row);
  }
  j["expectations"] = std::move(exps);
  json scans = json::array();
  for (const auto& s : report.scans) scans.push_back(json::parse(to_json(s)));
  j["scans"] = std::move(scans);
  json conds = json::array();
  for (const auto& c : report.conditions) conds.push_back(json::parse(to_json(c)));
  j["conditions"] = std::move(conds);
  return j.dump(2);
}

std::string to_csv(const MSScanResult& scan) {
  std::string out = "s,F,ratio,trend\n";
  for (std::size_t i = 0; i < scan.grid.size(); ++i) {
    const double ratio = scan.reference_norm > 0.0
                             ? scan.values[i] / scan.reference_norm
                             : std::numeric_limits<double>::quiet_NaN();
    out += fmt17(scan.grid[i]);
    out += ',';
    out += fmt17(scan.values[i]);
    out += ',';
    out += fmt17(ratio);
    out += ',';
    out += to_string(scan.trend);
    out += '\n';
  }
  return out;
}

std::string to_csv(const ConditionReport& report) {
  std::string out = "radius_log10,ratio,verdict\n";
  for (const auto& [r, q] : report.ratios) {
    out += fmt17(r.ln_abs() / std::log(10.0));
    out += ',';
    out += fmt17(q);
    out += ',';
    out += to_string(report.verdict);
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

} // namespace homtype
