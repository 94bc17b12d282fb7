// Batch front end: correction tables, ns-series reports, oracle
// comparisons, and the noncommutativity bound, emitted as CSV or JSON.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nchydro/bounds.hpp"
#include "nchydro/corrections.hpp"
#include "nchydro/errors.hpp"
#include "nchydro/nc_model.hpp"
#include "nchydro/ns_series.hpp"
#include "nchydro/operator_oracle.hpp"
#include "nchydro/serialize.hpp"
#include "nchydro/verify.hpp"

namespace {

using nchydro::ConstantsTable;
using nchydro::DomainError;

constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::vector<int> n;
  std::vector<int> l;         // empty: all valid l per n
  std::vector<double> beta{0.0};
  int K = 200;
  int grid_n = 2000;
  std::optional<double> alpha;
  std::optional<double> t;
  double rel_uncertainty = 4.5e-15;
  double frequency_hz = 2466061413187018.0;
  bool oracle = false;
  bool effective = false;
  bool monte_carlo = false;   // verify: add the statistical moment cross-check
  std::string out;            // empty: stdout
  std::string format = "csv"; // csv | json
  std::string constants_path;
  std::string report_path;    // ns: full per-term series report
  std::uint64_t seed = 12345;
  int csv_precision = 15;
};

std::string fmt_g(double x, int digits) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

// "3..5" or "2,4,6" or "3"
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  const auto range = text.find("..");
  if (range != std::string::npos) {
    const int a = std::stoi(text.substr(0, range));
    const int b = std::stoi(text.substr(range + 2));
    if (b < a) throw DomainError("range '" + text + "' is descending");
    for (int v = a; v <= b; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

void validate(const RunConfig& cfg) {
  for (int n : cfg.n)
    if (n < 1) throw DomainError("config: n must be >= 1");
  for (int l : cfg.l)
    if (l < 0) throw DomainError("config: l must be >= 0");
  for (double b : cfg.beta)
    if (b < 0.0) throw DomainError("config: beta must be >= 0");
  if (cfg.K < 10) throw DomainError("config: K must be >= 10");
  if (cfg.grid_n < 100) throw DomainError("config: grid_n must be >= 100");
  if (cfg.alpha && *cfg.alpha < 0.0) throw DomainError("config: alpha must be >= 0");
  if (cfg.t && *cfg.t < 0.0) throw DomainError("config: t must be >= 0");
  if (cfg.alpha && cfg.t) throw DomainError("config: give either alpha or t, not both");
  if (!(cfg.rel_uncertainty > 0.0))
    throw DomainError("config: rel_uncertainty must be > 0");
  if (cfg.format != "csv" && cfg.format != "json")
    throw DomainError("config: format must be csv or json");
  if (cfg.csv_precision < 1 || cfg.csv_precision > 17)
    throw DomainError("config: csv_precision must be in [1, 17]");
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw DomainError("config: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    // message carries line/column from the parser
    throw DomainError(std::string("config: ") + e.what());
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "n") cfg.n = value.get<std::vector<int>>();
    else if (key == "l") cfg.l = value.get<std::vector<int>>();
    else if (key == "beta") cfg.beta = value.get<std::vector<double>>();
    else if (key == "K") cfg.K = value.get<int>();
    else if (key == "grid_n") cfg.grid_n = value.get<int>();
    else if (key == "alpha") cfg.alpha = value.get<double>();
    else if (key == "t") cfg.t = value.get<double>();
    else if (key == "rel_uncertainty") cfg.rel_uncertainty = value.get<double>();
    else if (key == "frequency_hz") cfg.frequency_hz = value.get<double>();
    else if (key == "oracle") cfg.oracle = value.get<bool>();
    else if (key == "effective") cfg.effective = value.get<bool>();
    else if (key == "mc") cfg.monte_carlo = value.get<bool>();
    else if (key == "out") cfg.out = value.get<std::string>();
    else if (key == "format") cfg.format = value.get<std::string>();
    else if (key == "constants") cfg.constants_path = value.get<std::string>();
    else if (key == "report") cfg.report_path = value.get<std::string>();
    else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
    else if (key == "csv_precision") cfg.csv_precision = value.get<int>();
    else throw DomainError("config: unknown key '" + key + "'");
  }
}

ConstantsTable constants_for(const RunConfig& cfg) {
  if (cfg.constants_path.empty()) return ConstantsTable::codata2018();
  return ConstantsTable::from_json_file(cfg.constants_path);
}

nchydro::nc::NcParameters nc_params_for(const RunConfig& cfg) {
  const ConstantsTable c = constants_for(cfg);
  if (cfg.t) return nchydro::nc::NcParameters::from_t(*cfg.t, c);
  if (cfg.alpha) return nchydro::nc::NcParameters::from_alpha(*cfg.alpha, c);
  return nchydro::nc::NcParameters::from_t(0.0, c);
}

// Minimal JSON emitter with pinned numeric precision (15 significant digits).
class JsonWriter {
 public:
  void begin_object() { token("{"); pushed_ = true; }
  void end_object() { out_ += "}"; pushed_ = false; }
  void begin_array(const std::string& key) { token(quote(key) + ":["); pushed_ = true; }
  void end_array() { out_ += "]"; pushed_ = false; }
  void object_in_array() { token("{"); pushed_ = true; }
  void kv(const std::string& key, double v) { token(quote(key) + ":" + number(v)); }
  void kv(const std::string& key, int v) { token(quote(key) + ":" + std::to_string(v)); }
  void kv(const std::string& key, bool v) { token(quote(key) + ":" + (v ? "true" : "false")); }
  void kv(const std::string& key, const std::string& v) { token(quote(key) + ":" + quote(v)); }
  void kv_raw(const std::string& key, const std::string& json) { token(quote(key) + ":" + json); }
  const std::string& str() const { return out_; }

 private:
  static std::string quote(const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  }
  static std::string number(double v) {
    if (!std::isfinite(v)) return "null";
    return fmt_g(v, 15);
  }
  void token(const std::string& t) {
    if (!pushed_ && !out_.empty() && out_.back() != '{' && out_.back() != '[') out_ += ",";
    out_ += t;
    pushed_ = false;
  }
  std::string out_;
  bool pushed_ = false;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw DomainError("cannot open output file '" + cfg.out + "'");
  f << text;
}

// ---------------------------------------------------------------------------
// levels

int run_levels(RunConfig cfg) {
  if (cfg.n.empty()) cfg.n = {2, 3, 4, 5};
  validate(cfg);
  const auto params = nc_params_for(cfg);
  const double t2 = params.t2;

  struct Row {
    int n, l;
    bool divergent;
    double bracket, closed, assembled, effective, at_t2;
    bool agree;
  };
  std::vector<Row> rows;
  for (int n : cfg.n) {
    std::vector<int> ls = cfg.l;
    if (ls.empty())
      for (int l = 0; l <= n - 1; ++l) ls.push_back(l);
    for (int l : ls) {
      if (l > n - 1) continue;
      Row row{n, l, false, 0, 0, 0, 0, 0, false};
      if (l <= 1) {
        row.divergent = true;
      } else {
        const nchydro::hydrogen::QuantumState state(n, l, 0);
        const auto closed = nchydro::corrections::delta_e1_closed(state);
        const auto assembled = nchydro::corrections::delta_e1_assembled(state);
        row.bracket = nchydro::corrections::bracket(n, l);
        row.closed = closed.value;
        row.assembled = assembled.value;
        row.at_t2 = closed.value * t2;
        const double scale = std::abs(closed.value);
        row.agree = std::abs(closed.value - assembled.value) <= 1e-10 * scale;
        if (cfg.effective) {
          row.effective = nchydro::corrections::delta_e1_effective(state).value;
          row.agree = row.agree && std::abs(closed.value - row.effective) <= 1e-8 * scale;
        }
      }
      rows.push_back(row);
    }
  }

  std::string text;
  if (cfg.format == "csv") {
    const int p = cfg.csv_precision;
    text = "n,l,status,bracket,de1_per_t2_closed,de1_per_t2_assembled";
    if (cfg.effective) text += ",de1_per_t2_effective";
    text += ",de1_hartree,agreement\n";
    for (const Row& r : rows) {
      std::vector<std::string> fields{std::to_string(r.n), std::to_string(r.l)};
      if (r.divergent) {
        fields.push_back("divergent");
        fields.insert(fields.end(), cfg.effective ? 6 : 5, "");
      } else {
        fields.push_back("ok");
        fields.push_back(fmt_g(r.bracket, p));
        fields.push_back(fmt_g(r.closed, p));
        fields.push_back(fmt_g(r.assembled, p));
        if (cfg.effective) fields.push_back(fmt_g(r.effective, p));
        fields.push_back(fmt_g(r.at_t2, p));
        fields.push_back(r.agree ? "true" : "false");
      }
      for (size_t i = 0; i < fields.size(); ++i)
        text += (i ? "," : "") + fields[i];
      text += "\n";
    }
  } else {
    JsonWriter w;
    w.begin_object();
    w.kv("schema_version", kSchemaVersion);
    w.kv("command", std::string("levels"));
    w.kv("t2", t2);
    w.kv_raw("params", nchydro::nc_parameters_json(params));
    w.begin_array("rows");
    for (const Row& r : rows) {
      w.object_in_array();
      w.kv("n", r.n);
      w.kv("l", r.l);
      w.kv("status", std::string(r.divergent ? "divergent" : "ok"));
      if (!r.divergent) {
        w.kv("bracket", r.bracket);
        w.kv("de1_per_t2_closed", r.closed);
        w.kv("de1_per_t2_assembled", r.assembled);
        if (cfg.effective) w.kv("de1_per_t2_effective", r.effective);
        w.kv("de1_hartree", r.at_t2);
        w.kv("agreement", r.agree);
      }
      w.end_object();
    }
    w.end_array();
    w.end_object();
    text = w.str() + "\n";
  }
  emit(cfg, text);
  return 0;
}

// ---------------------------------------------------------------------------
// ns

int run_ns(RunConfig cfg) {
  if (cfg.n.empty()) cfg.n = {1};
  validate(cfg);
  if (!cfg.report_path.empty() && cfg.n.size() * cfg.beta.size() != 1)
    throw DomainError("--report needs exactly one (n, beta) combination");

  struct Row {
    int n;
    double beta, s, err;
    bool consistent;
    bool has_oracle = false;
    double oracle_value = 0, oracle_err = 0;
    bool oracle_agrees = false;
    double de_per_t;
  };
  nchydro::oracle::OracleWorkspace workspace;
  std::vector<Row> rows;
  for (int n : cfg.n) {
    for (double beta : cfg.beta) {
      Row row{};
      row.n = n;
      row.beta = beta;
      const auto report = nchydro::ns_series::s_ns(beta, n, cfg.K);
      if (!cfg.report_path.empty()) {
        const bool csv = cfg.report_path.size() > 4 &&
                         cfg.report_path.substr(cfg.report_path.size() - 4) == ".csv";
        std::ofstream f(cfg.report_path, std::ios::binary);
        if (!f) throw DomainError("cannot open report file '" + cfg.report_path + "'");
        f << (csv ? nchydro::series_report_csv(report, cfg.csv_precision)
                  : nchydro::series_report_json(report) + "\n");
      }
      row.s = report.value;
      row.err = report.error;
      row.consistent = report.consistent;
      const double n5 = std::pow(static_cast<double>(n), 5);
      row.de_per_t = report.value / (std::sqrt(6.0) * n5);
      if (cfg.oracle && beta > 0.0) {
        const double rho_max = nchydro::oracle::recommended_rho_max(beta, n);
        const auto orc =
            workspace.s_ns(beta, n, nchydro::oracle::RadialGrid(rho_max, cfg.grid_n));
        row.has_oracle = true;
        row.oracle_value = orc.value;
        row.oracle_err = orc.error;
        row.oracle_agrees =
            std::abs(orc.value - report.value) <= orc.error + report.error + 1e-9;
      }
      rows.push_back(row);
    }
  }

  std::string text;
  if (cfg.format == "csv") {
    const int p = cfg.csv_precision;
    text = "n,beta,s_ns,s_err,consistent";
    if (cfg.oracle) text += ",oracle_value,oracle_err,oracle_agrees";
    text += ",de_ns_per_t\n";
    for (const Row& r : rows) {
      text += std::to_string(r.n) + "," + fmt_g(r.beta, p) + "," + fmt_g(r.s, p) + "," +
              fmt_g(r.err, p) + "," + (r.consistent ? "true" : "false");
      if (cfg.oracle) {
        if (r.has_oracle)
          text += "," + fmt_g(r.oracle_value, p) + "," + fmt_g(r.oracle_err, p) + "," +
                  (r.oracle_agrees ? std::string("true") : "false");
        else
          text += ",,,";
      }
      text += "," + fmt_g(r.de_per_t, p) + "\n";
    }
  } else {
    JsonWriter w;
    w.begin_object();
    w.kv("schema_version", kSchemaVersion);
    w.kv("command", std::string("ns"));
    w.kv("K", cfg.K);
    w.begin_array("rows");
    for (const Row& r : rows) {
      w.object_in_array();
      w.kv("n", r.n);
      w.kv("beta", r.beta);
      w.kv("s_ns", r.s);
      w.kv("s_err", r.err);
      w.kv("consistent", r.consistent);
      if (r.has_oracle) {
        w.kv("oracle_value", r.oracle_value);
        w.kv("oracle_err", r.oracle_err);
        w.kv("oracle_agrees", r.oracle_agrees);
      }
      w.kv("de_ns_per_t", r.de_per_t);
      w.end_object();
    }
    w.end_array();
    w.end_object();
    text = w.str() + "\n";
  }
  emit(cfg, text);
  return 0;
}

// ---------------------------------------------------------------------------
// bound

int run_bound(const RunConfig& cfg) {
  validate(cfg);
  nchydro::bounds::ExperimentInput input;
  input.rel_uncertainty = cfg.rel_uncertainty;
  input.frequency_hz = cfg.frequency_hz;
  const auto b = nchydro::bounds::bound_from_uncertainty(input, constants_for(cfg));

  JsonWriter w;
  w.begin_object();
  w.kv("schema_version", kSchemaVersion);
  w.kv("command", std::string("bound"));
  w.kv("t_bound", b.t_bound);
  w.kv("hbar_sqrt_theta2_bound_m2", b.hbar_sqrt_theta2_bound_m2);
  w.kv("alpha_bound", b.alpha_bound);
  w.kv("bohr_radius_m", b.bohr_radius_m);
  w.kv("planck_length_m", b.planck_length_m);
  w.kv("rel_uncertainty", b.rel_uncertainty);
  w.kv("frequency_hz", b.frequency_hz);
  w.kv("source", b.source);
  w.end_object();
  const std::string text = w.str() + "\n";

  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    emit(cfg, text);
    std::printf("t <= %.3e\n", b.t_bound);
    std::printf("hbar sqrt(<theta^2>) <= %.2e m^2\n", b.hbar_sqrt_theta2_bound_m2);
    std::printf("alpha <= %.2e\n", b.alpha_bound);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const RunConfig& cfg) {
  validate(cfg);
  nchydro::verify::Options options;
  options.K = cfg.K;
  options.grid_points = cfg.grid_n;
  options.seed = cfg.seed;
  options.with_monte_carlo = cfg.monte_carlo;
  options.constants = constants_for(cfg);
  const auto results = nchydro::verify::run_all(options);
  for (const auto& r : results)
    std::printf("%s %s: %s [%.1fs]\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str(), r.seconds);

  if (!cfg.out.empty()) {
    JsonWriter w;
    w.begin_object();
    w.kv("schema_version", kSchemaVersion);
    w.kv("command", std::string("verify"));
    w.kv("passed", nchydro::verify::all_passed(results));
    w.begin_array("checks");
    for (const auto& r : results) {
      w.object_in_array();
      w.kv("name", r.name);
      w.kv("passed", r.passed);
      w.kv("detail", r.detail);
      w.kv("seconds", r.seconds);
      w.end_object();
    }
    w.end_array();
    w.end_object();
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw DomainError("cannot open output file '" + cfg.out + "'");
    f << w.str() << "\n";
  }
  return nchydro::verify::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hydrogen level shifts in rotationally invariant noncommutative space"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path, n_arg, l_arg, beta_arg;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--K", cfg.K, "series truncation index");
    cmd->add_option("--grid-n", cfg.grid_n, "operator-oracle grid points");
    cmd->add_option("--alpha", cfg.alpha, "noncommutativity constant alpha");
    cmd->add_option("--t", cfg.t, "dimensionless strength t");
    cmd->add_option("--seed", cfg.seed, "random seed (Monte Carlo paths)");
    cmd->add_option("--out", cfg.out, "output path (default stdout)");
    cmd->add_option("--format", cfg.format, "csv or json");
    cmd->add_option("--precision", cfg.csv_precision, "CSV significant digits");
    cmd->add_option("--constants", cfg.constants_path, "constants JSON table");
  };

  CLI::App* levels = app.add_subcommand("levels", "first-order level corrections (l >= 2)");
  add_common(levels);
  levels->add_option("--n", n_arg, "principal quantum numbers, e.g. 3..5 or 3,4");
  levels->add_option("--l", l_arg, "orbital quantum numbers");
  levels->add_flag("--effective", cfg.effective, "include the effective-Hamiltonian route");

  CLI::App* ns = app.add_subcommand("ns", "s-level series S_ns(beta) and shifts");
  add_common(ns);
  ns->add_option("--n", n_arg, "principal quantum numbers");
  ns->add_option("--beta", beta_arg, "beta values, comma separated");
  ns->add_flag("--oracle", cfg.oracle, "add grid-oracle comparison columns");
  ns->add_option("--report", cfg.report_path,
                 "write the full per-term series report (.csv or .json)");

  CLI::App* bound = app.add_subcommand("bound", "upper bound from 1s-2s uncertainty");
  add_common(bound);
  bound->add_option("--rel-uncertainty", cfg.rel_uncertainty, "relative 1s-2s uncertainty");
  bound->add_option("--frequency", cfg.frequency_hz, "1s-2s frequency in Hz");

  CLI::App* verify = app.add_subcommand("verify", "run the oracle/invariant suite");
  add_common(verify);
  verify->add_flag("--mc", cfg.monte_carlo, "add the seeded Monte Carlo moment cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    // Config file first, then explicitly given flags override it.
    if (!config_path.empty()) {
      CLI::App* active = app.get_subcommands().front();
      RunConfig merged;
      load_config_file(config_path, merged);
      auto prefer_flag = [&](const std::string& name, auto RunConfig::* member) {
        const CLI::Option* opt = active->get_option_no_throw(name);
        if (opt != nullptr && opt->count() > 0) merged.*member = cfg.*member;
      };
      prefer_flag("--K", &RunConfig::K);
      prefer_flag("--grid-n", &RunConfig::grid_n);
      prefer_flag("--alpha", &RunConfig::alpha);
      prefer_flag("--t", &RunConfig::t);
      prefer_flag("--rel-uncertainty", &RunConfig::rel_uncertainty);
      prefer_flag("--frequency", &RunConfig::frequency_hz);
      prefer_flag("--oracle", &RunConfig::oracle);
      prefer_flag("--effective", &RunConfig::effective);
      prefer_flag("--mc", &RunConfig::monte_carlo);
      prefer_flag("--report", &RunConfig::report_path);
      prefer_flag("--out", &RunConfig::out);
      prefer_flag("--format", &RunConfig::format);
      prefer_flag("--constants", &RunConfig::constants_path);
      prefer_flag("--seed", &RunConfig::seed);
      prefer_flag("--precision", &RunConfig::csv_precision);
      cfg = merged;
    }
    if (!n_arg.empty()) cfg.n = parse_int_list(n_arg);
    if (!l_arg.empty()) cfg.l = parse_int_list(l_arg);
    if (!beta_arg.empty()) cfg.beta = parse_double_list(beta_arg);

    if (levels->parsed()) return run_levels(cfg);
    if (ns->parsed()) return run_ns(cfg);
    if (bound->parsed()) return run_bound(cfg);
    if (verify->parsed()) return run_verify(cfg);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad numeric argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
