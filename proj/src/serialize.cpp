#include "queenpoly/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace queenpoly {

std::string schema_tag(const std::string& command) {
  return "queenpoly." + command + "/" + std::to_string(kSchemaVersion);
}

std::vector<std::string> coefficient_strings(const IntPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

std::vector<std::string> coefficient_strings(const RatPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

nlohmann::json poly_to_json(const IntPoly& p) { return coefficient_strings(p); }

nlohmann::json poly_to_json(const RatPoly& p) { return coefficient_strings(p); }

IntPoly int_poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Integer> c;
  for (const auto& e : j) {
    if (!e.is_string()) throw std::invalid_argument("coefficients must be decimal strings");
    Integer v;
    if (v.set_str(e.get<std::string>(), 10) != 0)
      throw std::invalid_argument("bad integer coefficient: " + e.get<std::string>());
    c.push_back(std::move(v));
  }
  return IntPoly(std::move(c));
}

RatPoly rat_poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Rational> c;
  for (const auto& e : j) {
    if (!e.is_string()) throw std::invalid_argument("coefficients must be strings");
    c.push_back(parse_rational(e.get<std::string>()));
  }
  return RatPoly(std::move(c));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  out += "\r\n";
  return out;
}

nlohmann::json to_json(const LocusReport& r) {
  nlohmann::json j;
  j["family"] = r.family;
  j["alpha"] = r.alpha.get_str();
  j["m"] = r.m;
  j["degree"] = r.degree;
  j["roots_in_interval"] = r.roots_in_interval;
  j["roots_elsewhere"] = r.roots_elsewhere;
  j["endpoint_nonzero"] = r.endpoint_nonzero;
  if (r.crossing_count >= 0) {
    j["crossings"] = r.crossing_count;
    j["delta_arg_f"] = r.delta_arg_f;
  }
  j["pass"] = {{"degree_bound", r.pass_degree_bound}, {"location", r.pass_location}, {"all", r.pass()}};
  return j;
}

nlohmann::json to_json(const CrossingReport& r) {
  nlohmann::json j;
  j["m"] = r.m;
  j["count"] = r.count;
  j["delta_arg_f"] = r.delta_arg_f;
  j["samples"] = r.samples;
  j["signs_agree"] = r.signs_agree;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : r.crossings) cs.push_back({{"z", c.z}, {"re_sign", c.re_sign}, {"exact_sign", c.exact_sign}});
  j["crossings"] = cs;
  return j;
}

nlohmann::json to_json(const RootQuartet& q) {
  auto cx = [](std::complex<double> c) { return nlohmann::json::array({c.real(), c.imag()}); };
  return {{"z", q.z},         {"t1", cx(q.t1)},   {"t2", cx(q.t2)},   {"t3", cx(q.t3)},
          {"t4", cx(q.t4)},   {"r", q.r},         {"theta", q.theta}, {"rho", q.rho},
          {"phi", q.phi},     {"residual", q.residual}};
}

}  // namespace queenpoly
