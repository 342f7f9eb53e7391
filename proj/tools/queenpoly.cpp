// queenpoly command-line interface.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "queenpoly/genfun.hpp"
#include "queenpoly/locus.hpp"
#include "queenpoly/quartic.hpp"
#include "queenpoly/serialize.hpp"
#include "queenpoly/tables.hpp"

using namespace queenpoly;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "csv";
  std::string out;
  std::string precision = "double";
  bool timing = false;

  long m_max = -1;
  std::vector<std::string> alphas;
  std::string kind = "queen";
  std::vector<double> zs;
  double z_min = -1e8;
  double z_max = -2.25 - 1e-6;
  std::size_t grid_budget = SweepOptions{}.budget;
  bool sweep = false;
};

Precision precision_of(const Config& c) { return c.precision == "high" ? Precision::High : Precision::Double; }

std::size_t m_max_or(const Config& c, std::size_t fallback) {
  return c.m_max < 0 ? fallback : static_cast<std::size_t>(c.m_max);
}

void require_in_range(double z, const char* what) {
  if (!(z < kCriticalZ - kGuardBand)) throw UsageError(std::string(what) + " must be below -9/4");
}

std::vector<Rational> parse_alphas(const std::vector<std::string>& text, std::vector<Rational> fallback) {
  if (text.empty()) return fallback;
  std::vector<Rational> out;
  for (const auto& s : text) {
    Rational a;
    try {
      a = parse_rational(s);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (sgn(a) <= 0) throw UsageError("--alpha must be positive: " + s);
    out.push_back(a);
  }
  return out;
}

// Output document under construction. CSV starts with a schema record, JSON
// carries the schema under "schema".
class Output {
 public:
  Output(const Config& c, const std::string& command) : csv_(c.format == "csv"), tag_(schema_tag(command)) {
    doc_["schema"] = tag_;
    if (csv_) csv_text_ += csv_row({"schema", tag_});
  }

  bool csv() const { return csv_; }
  void row(const std::vector<std::string>& fields) { csv_text_ += csv_row(fields); }
  json& doc() { return doc_; }

  std::string text() const { return csv_ ? csv_text_ : doc_.dump(2) + "\n"; }

 private:
  bool csv_;
  std::string tag_;
  std::string csv_text_;
  json doc_;
};

std::vector<std::string> concat(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

int run_tables(const Config& c, Output& out) {
  const std::size_t n = m_max_or(c, 10);
  const TableKind kind = c.kind == "rook" ? TableKind::Rook : TableKind::Queen;
  const PolyTable t = build_table(kind, n, n);
  if (out.csv()) out.row({"kind", "m", "n", "polynomial", "coefficients"});
  json rows = json::array();
  for (std::size_t m = 0; m <= n; ++m)
    for (std::size_t k = 0; k <= n; ++k) {
      const IntPoly& p = t.at(static_cast<long>(m), static_cast<long>(k));
      if (out.csv())
        out.row(concat({to_string(kind), std::to_string(m), std::to_string(k), to_string(p)}, coefficient_strings(p)));
      else
        rows.push_back({{"m", m}, {"n", k}, {"coefficients", poly_to_json(p)}});
    }
  out.doc()["kind"] = to_string(kind);
  out.doc()["entries"] = rows;
  return kExitPass;
}

int run_pseq(const Config& c, Output& out) {
  const auto seq = pseq(m_max_or(c, 10));
  if (out.csv()) out.row({"m", "degree", "polynomial", "coefficients"});
  json rows = json::array();
  for (std::size_t m = 0; m < seq.size(); ++m) {
    if (out.csv())
      out.row(concat({std::to_string(m), std::to_string(seq[m].degree()), to_string(seq[m])},
                     coefficient_strings(seq[m])));
    else
      rows.push_back({{"m", m}, {"degree", seq[m].degree()}, {"coefficients", poly_to_json(seq[m])}});
  }
  out.doc()["sequence"] = rows;
  return kExitPass;
}

int run_alpha(const Config& c, Output& out) {
  const auto alphas = parse_alphas(c.alphas, {Rational(1, 2)});
  const std::size_t m_max = m_max_or(c, 10);
  if (out.csv()) out.row({"alpha", "m", "degree", "polynomial", "coefficients"});
  json series = json::array();
  for (const auto& a : alphas) {
    const AlphaSeries s = alpha_coeffs(a, m_max);
    json rows = json::array();
    for (std::size_t m = 0; m < s.coeffs.size(); ++m) {
      const RatPoly& p = s.coeffs[m];
      if (out.csv())
        out.row(concat({a.get_str(), std::to_string(m), std::to_string(p.degree()), to_string(p)},
                       coefficient_strings(p)));
      else
        rows.push_back({{"m", m}, {"degree", p.degree()}, {"coefficients", poly_to_json(p)}});
    }
    series.push_back({{"alpha", a.get_str()}, {"coefficients", rows}});
  }
  out.doc()["series"] = series;
  return kExitPass;
}

int run_roots(const Config& c, Output& out) {
  if (c.zs.empty()) throw UsageError("roots needs at least one --z");
  for (double z : c.zs) require_in_range(z, "--z");
  if (out.csv())
    out.row({"z", "re_t1", "im_t1", "re_t3", "im_t3", "r", "theta", "rho", "phi", "residual"});
  json rows = json::array();
  for (double z : c.zs) {
    const RootQuartet q = solve_quartet(z, precision_of(c));
    if (out.csv())
      out.row({format_double(z), format_double(q.t1.real()), format_double(q.t1.imag()),
               format_double(q.t3.real()), format_double(q.t3.imag()), format_double(q.r),
               format_double(q.theta), format_double(q.rho), format_double(q.phi), format_double(q.residual)});
    else
      rows.push_back(to_json(q));
  }
  out.doc()["quartets"] = rows;
  return kExitPass;
}

std::vector<CurveSample> sweep_for(const Config& c) {
  require_in_range(c.z_min, "--z-min");
  require_in_range(c.z_max, "--z-max");
  if (!(c.z_min < c.z_max)) throw UsageError("--z-min must be below --z-max");
  SweepOptions opts;
  opts.budget = c.grid_budget;
  opts.precision = precision_of(c);
  return track_curve(c.z_min, c.z_max, opts);
}

int run_curve(const Config& c, Output& out) {
  const auto sweep = sweep_for(c);
  if (out.csv()) out.row({"z", "re_t1", "im_t1", "theta", "phi", "abs_t1", "abs_t3"});
  json rows = json::array();
  for (const auto& s : sweep) {
    const RootQuartet& q = s.quartet;
    if (out.csv())
      out.row({format_double(s.z), format_double(q.t1.real()), format_double(q.t1.imag()), format_double(q.theta),
               format_double(q.phi), format_double(q.r), format_double(q.rho)});
    else
      rows.push_back({{"z", s.z}, {"t1", {q.t1.real(), q.t1.imag()}}, {"theta", q.theta}, {"phi", q.phi},
                      {"abs_t1", q.r}, {"abs_t3", q.rho}});
  }
  out.doc()["samples"] = rows;
  return kExitPass;
}

void emit_reports(Output& out, const std::vector<LocusReport>& reports, json& failures) {
  if (out.csv())
    out.row({"family", "alpha", "m", "degree", "roots_in_interval", "roots_elsewhere", "endpoint_nonzero",
             "crossings", "delta_arg_f", "pass_degree_bound", "pass_location", "pass"});
  json rows = json::array();
  int passed = 0;
  for (const auto& r : reports) {
    if (r.pass()) ++passed;
    else failures.push_back(to_json(r));
    if (out.csv()) {
      auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
      out.row({r.family, r.alpha.get_str(), std::to_string(r.m), std::to_string(r.degree),
               std::to_string(r.roots_in_interval), std::to_string(r.roots_elsewhere), flag(r.endpoint_nonzero),
               r.crossing_count >= 0 ? std::to_string(r.crossing_count) : "",
               r.crossing_count >= 0 ? format_double(r.delta_arg_f) : "",
               flag(r.pass_degree_bound), flag(r.pass_location), flag(r.pass())});
    }
    rows.push_back(to_json(r));
  }
  out.doc()["reports"] = rows;
  out.doc()["summary"] = {{"passed", passed}, {"total", reports.size()}};
}

int finish(Output& out, const std::string& suite, const json& failures) {
  if (failures.empty()) return kExitPass;
  json record = {{"schema", schema_tag("failure")}, {"suite", suite}, {"failures", failures}};
  out.doc()["failure"] = record;
  std::cerr << record.dump() << "\n";
  return kExitFail;
}

int run_verify(const Config& c, Output& out) {
  std::vector<LocusReport> reports = certify_pseq_zeros(m_max_or(c, 100));
  if (c.sweep) {
    const auto sweep = sweep_for(c);
    for (auto& r : reports) {
      const CrossingReport cr = crossing_count(r.m, sweep, c.grid_budget);
      r.crossing_count = cr.count;
      r.delta_arg_f = cr.delta_arg_f;
      if (cr.count != r.roots_in_interval || !cr.signs_agree) r.pass_location = false;
    }
  }
  json failures = json::array();
  emit_reports(out, reports, failures);
  return finish(out, "verify", failures);
}

int run_conjecture(const Config& c, Output& out) {
  const auto alphas = parse_alphas(c.alphas, {Rational(1, 4), Rational(1, 2), Rational(2), Rational(3)});
  json failures = json::array();
  emit_reports(out, conjecture_scan(alphas, m_max_or(c, 40)), failures);
  return finish(out, "conjecture", failures);
}

int run_rook_check(const Config& c, Output& out) {
  json failures = json::array();
  emit_reports(out, rook_zero_check(m_max_or(c, 20)), failures);
  return finish(out, "rook-check", failures);
}

void write_output(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot open --out file: " + c.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rook and queen polynomial tables, the sequence P_m(z), and zero-location checks"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "Output file (default: stdout)");
    sub->add_flag("--timing", cfg.timing, "Include wall-clock time in JSON output");
  };
  auto m_max = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("--m-max", cfg.m_max, help)->check(CLI::NonNegativeNumber);
  };
  auto precision = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "Root-finding precision")
        ->check(CLI::IsMember({"double", "high"}));
  };
  auto z_range = [&](CLI::App* sub) {
    sub->add_option("--z-min", cfg.z_min, "Most negative z of the sweep");
    sub->add_option("--z-max", cfg.z_max, "Sweep end closest to -9/4");
    sub->add_option("--grid-budget", cfg.grid_budget, "Maximum number of sweep samples")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* tables = app.add_subcommand("tables", "Rook or queen polynomial table P_{m,n}(z)");
  common(tables);
  m_max(tables, "Largest m and n (default 10)");
  tables->add_option("--kind", cfg.kind, "Table kind")->check(CLI::IsMember({"rook", "queen"}));

  CLI::App* pseq_cmd = app.add_subcommand("pseq", "Sequence P_0..P_M from its recurrence");
  common(pseq_cmd);
  m_max(pseq_cmd, "Largest m (default 10)");

  CLI::App* alpha = app.add_subcommand("alpha", "Coefficients of D^(-alpha)");
  common(alpha);
  m_max(alpha, "Largest m (default 10)");
  alpha->add_option("--alpha", cfg.alphas, "Exponent as p/q, repeatable (default 1/2)");

  CLI::App* roots = app.add_subcommand("roots", "Roots of D(t, z) at given z");
  common(roots);
  precision(roots);
  roots->add_option("--z", cfg.zs, "z below -9/4, repeatable")->required();

  CLI::App* curve = app.add_subcommand("curve", "Samples of the curve t1(z)");
  common(curve);
  precision(curve);
  z_range(curve);

  CLI::App* verify = app.add_subcommand("verify", "Certify the zeros of P_m lie in (-inf, -9/4)");
  common(verify);
  m_max(verify, "Largest m (default 100)");
  precision(verify);
  z_range(verify);
  verify->add_flag("--sweep", cfg.sweep, "Also count crossings along a sweep of t1(z)");

  CLI::App* conj = app.add_subcommand("conjecture", "Certify zero locations for D^(-alpha) coefficients");
  common(conj);
  m_max(conj, "Largest m (default 40)");
  conj->add_option("--alpha", cfg.alphas, "Exponent as p/q, repeatable (default 1/4 1/2 2 3)");

  CLI::App* rook = app.add_subcommand("rook-check", "Certify the zeros of P_{m,m} lie in (-inf, -4]");
  common(rook);
  m_max(rook, "Largest m (default 20)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    Output out(cfg, name);
    int status = kExitPass;
    if (sub == tables) status = run_tables(cfg, out);
    else if (sub == pseq_cmd) status = run_pseq(cfg, out);
    else if (sub == alpha) status = run_alpha(cfg, out);
    else if (sub == roots) status = run_roots(cfg, out);
    else if (sub == curve) status = run_curve(cfg, out);
    else if (sub == verify) status = run_verify(cfg, out);
    else if (sub == conj) status = run_conjecture(cfg, out);
    else if (sub == rook) status = run_rook_check(cfg, out);
    if (cfg.timing && !out.csv())
      out.doc()["timing_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_output(cfg, out.text());
    return status;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    json record = {{"schema", schema_tag("failure")}, {"suite", name}, {"error", e.what()}};
    std::cerr << record.dump() << "\n";
    return kExitFail;
  }
}
