// rindler-kit: command-line front end over the accelerated-detector library.
//
//   spectrum  thermal occupation across a wedge-frequency grid, analytic and
//             packet-smeared, with the fitted temperature slope
//   response  absorbed power of a polarizable detector, per route
//   force     drag force on the detector, quadrature vs closed form
//   verify    the full cross-validation suite plus the discrepancy report
//   sweep     bulk deterministic CSV over a catalog of kernels
//
// Exit codes: 0 ok, 1 verification failure, 2 configuration error,
// 3 numerical failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rindler/detector.hpp"
#include "rindler/errors.hpp"
#include "rindler/modes.hpp"
#include "rindler/numerics.hpp"
#include "rindler/output.hpp"
#include "rindler/spacetime.hpp"
#include "rindler/verify.hpp"

namespace {

using rindler::ConfigError;
using rindler::Error;
using rindler::ErrorClass;
using rindler::SizeCapExceeded;
using rindler::detector::CouplingParams;
using rindler::detector::ResponseKernel;
using rindler::output::format_number;
using rindler::output::Table;

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Every field has a default; a config-file value overrides the default and
// a command-line flag overrides both.
struct RunConfig {
  std::vector<double> a;
  std::string kernel = "powerexp:1,1,1";
  double q = 1.0;
  std::string vacuum = "inertial";
  std::string route = "all";
  std::string out;
  std::string format = "csv";
  double tol = 0.0;  // 0 = library default quadrature tolerances
  bool kernel_set = false;  // --kernel given by flag or config file
  bool strict = false;
  std::string filter;
  std::uint64_t seed = 1729;
  bool skip_existing = false;
  double nu_min = 0.05;
  double nu_max = 2.0;
  int nu_points = 25;
  std::string config_path;
};

// ---------------------------------------------------------------------------
// Config-file plumbing. The file is flat key=value text whose keys are the
// long option names without dashes; precedence is defaults < file < flags.

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double_value(const std::string& s, const std::string& key) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) {
    throw ConfigError("value for '" + key + "' is not a number: '" + s + "'");
  }
  return v;
}

int parse_int_value(const std::string& s, const std::string& key) {
  const double v = parse_double_value(s, key);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) {
    throw ConfigError("value for '" + key + "' is not an integer: '" + s +
                      "'");
  }
  return i;
}

std::uint64_t parse_uint64_value(const std::string& s,
                                 const std::string& key) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) {
    throw ConfigError("value for '" + key +
                      "' is not a non-negative integer: '" + s + "'");
  }
  return v;
}

bool parse_bool_value(const std::string& s, const std::string& key) {
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off") return false;
  throw ConfigError("value for '" + key + "' is not a boolean: '" + s + "'");
}

std::vector<double> parse_list_value(const std::string& s,
                                     const std::string& key) {
  std::string spaced = s;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream is(spaced);
  std::vector<double> out;
  std::string tok;
  while (is >> tok) out.push_back(parse_double_value(tok, key));
  if (out.empty()) throw ConfigError("value for '" + key + "' is empty");
  return out;
}

// One registered option: the CLI11 handle (to detect a flag on the command
// line) and the parser that applies a config-file string to the same field.
struct KeyEntry {
  CLI::Option* opt = nullptr;
  std::function<void(const std::string&)> apply;
};
using KeyMap = std::map<std::string, KeyEntry>;

std::vector<std::pair<std::string, std::string>> load_config_file(
    const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        " has no '=': " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        " has an empty key");
    }
    out.emplace_back(key, value);
  }
  return out;
}

void apply_config_file(const KeyMap& keys, const std::string& path) {
  for (const auto& [k, v] : load_config_file(path)) {
    const auto it = keys.find(k);
    if (it == keys.end()) throw ConfigError("unknown config key: " + k);
    if (it->second.opt->count() > 0) continue;  // the flag wins
    it->second.apply(v);
  }
}

// ---------------------------------------------------------------------------
// Kernel grammar: powerexp:alpha0,p,tau0 | dampedosc:kappa,Omega,gamma |
// tabulated:<path to two-column tau/alpha text>.

rindler::detector::TabulatedKernel load_tabulated(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open tabulated kernel file: " + path);
  rindler::detector::TabulatedKernel tab;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream is(line);
    double tau = 0.0, alpha = 0.0;
    std::string extra;
    if (!(is >> tau >> alpha) || (is >> extra)) {
      throw ConfigError("tabulated kernel line " + std::to_string(lineno) +
                        " is not 'tau alpha': " + line);
    }
    tab.tau.push_back(tau);
    tab.alpha.push_back(alpha);
  }
  return tab;
}

ResponseKernel parse_kernel_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw ConfigError("kernel spec needs 'family:params': " + spec);
  }
  const std::string family = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  ResponseKernel k;
  if (family == "powerexp" || family == "dampedosc") {
    const auto p = parse_list_value(rest, "kernel");
    if (p.size() != 3) {
      throw ConfigError("kernel family '" + family +
                        "' needs exactly 3 parameters: " + spec);
    }
    if (family == "powerexp") {
      k = rindler::detector::PowerExpKernel{p[0], p[1], p[2]};
    } else {
      k = rindler::detector::DampedOscillatorKernel{p[0], p[1], p[2]};
    }
  } else if (family == "tabulated") {
    k = load_tabulated(rest);
  } else {
    throw ConfigError("unknown kernel family: " + family);
  }
  rindler::detector::validate_kernel(k);
  return k;
}

// ---------------------------------------------------------------------------
// Shared output plumbing.

std::string join_numbers(const std::vector<double>& v) {
  std::string out;
  for (double x : v) {
    if (!out.empty()) out += ',';
    out += format_number(x);
  }
  return out;
}

void emit_table(const Table& t, const RunConfig& cfg) {
  const std::string body = cfg.format == "json" ? rindler::output::to_json(t)
                                                : rindler::output::to_csv(t);
  if (cfg.out.empty()) {
    std::fputs(body.c_str(), stdout);
  } else {
    rindler::output::write_file(cfg.out, body);
  }
}

int finish_rows_command(const Table& t, const RunConfig& cfg) {
  emit_table(t, cfg);
  if (!cfg.strict) return 0;
  for (const auto& r : t.rows) {
    if (r.status != "ok") return 3;
  }
  return 0;
}

// Per-row error policy: numerical failures become error-status rows;
// configuration mistakes abort the command.
template <typename Fn>
std::string guard_row(const Fn& fill) {
  try {
    fill();
    return "ok";
  } catch (const Error& e) {
    if (e.error_class() == ErrorClass::Config) throw;
    return "error:" + e.kind();
  }
}

std::vector<double> accelerations_or(const RunConfig& cfg,
                                     std::initializer_list<double> dflt) {
  std::vector<double> as = cfg.a.empty() ? std::vector<double>(dflt) : cfg.a;
  for (double a : as) {
    if (!std::isfinite(a) || a < 0.0) {
      throw ConfigError("acceleration values must be finite and >= 0");
    }
  }
  return as;
}

// ---------------------------------------------------------------------------
// spectrum

int cmd_spectrum(const RunConfig& cfg) {
  namespace modes = rindler::modes;
  if (cfg.nu_points < 2) {
    throw ConfigError("spectrum grid needs at least 2 points");
  }
  if (!(cfg.nu_min > 0.0) || !(cfg.nu_max > cfg.nu_min)) {
    throw ConfigError("spectrum grid needs 0 < nu-min < nu-max");
  }
  const auto as = accelerations_or(cfg, {1.0});
  for (double a : as) {
    if (a == 0.0) throw ConfigError("spectrum needs a > 0");
  }

  std::vector<double> grid(cfg.nu_points);
  for (int j = 0; j < cfg.nu_points; ++j) {
    grid[j] = cfg.nu_min +
              (cfg.nu_max - cfg.nu_min) * j / (cfg.nu_points - 1);
  }

  // ln(1 + 1/n) is exactly linear in nu for a thermal spectrum; the fitted
  // slope is the inverse temperature in the wedge-frequency variable.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double nu : grid) {
    const double y = std::log1p(1.0 / modes::occupation_spectrum(nu));
    sx += nu;
    sy += y;
    sxx += nu * nu;
    sxy += nu * y;
  }
  const double n = static_cast<double>(grid.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

  const double omega_cut = std::exp(600.0);
  Table t;
  t.config = {{"command", "spectrum"},
              {"a", join_numbers(as)},
              {"nu-min", format_number(cfg.nu_min)},
              {"nu-max", format_number(cfg.nu_max)},
              {"nu-points", std::to_string(cfg.nu_points)},
              {"packet-width-rule", "max(nu/8, 0.012) capped at nu/3.5"},
              {"omega-cut", "exp(600)"},
              {"fitted-slope-nu", format_number(slope)}};
  if (as.size() == 1) {
    t.config.emplace_back("fitted-temperature",
                          format_number(as[0] / slope));
  }
  // ratio_to_mean divides the packet expectation by the analytic spectrum
  // averaged under the same window, so it isolates coefficient correctness
  // from the finite-bandwidth bias visible in n_smeared vs n_analytic.
  t.columns = {"a", "nu", "omega", "n_analytic", "n_smeared",
               "ratio_to_mean"};

  for (double a : as) {
    const rindler::spacetime::WorldlineParams p{a};
    for (double nu : grid) {
      const double n_an = modes::occupation_spectrum(nu);
      double n_sm = kNaN, ratio = kNaN;
      const std::string status = guard_row([&] {
        double sigma = std::max(nu / 8.0, 0.012);
        if (sigma > nu / 3.5) sigma = nu / 3.5;
        const modes::WavePacket packet(nu, sigma);
        const auto sm = modes::smeared_number_expectation(
            packet, p, omega_cut,
            rindler::modes::BogolyubovVariant::Canonical);
        n_sm = sm.value;
        ratio = sm.ratio_to_mean;
      });
      t.rows.push_back({{a, nu, nu * a, n_an, n_sm, ratio}, status, {}});
    }
  }
  return finish_rows_command(t, cfg);
}

// ---------------------------------------------------------------------------
// response

int cmd_response(const RunConfig& cfg) {
  namespace det = rindler::detector;
  const ResponseKernel k = parse_kernel_spec(cfg.kernel);
  const auto as = accelerations_or(cfg, {0.5, 1.0, 2.0});

  std::vector<std::string> routes;
  if (cfg.route == "all") {
    routes = {"time", "series", "spectral", "general"};
  } else {
    routes = {cfg.route};
  }

  Table t;
  t.config = {{"command", "response"},
              {"kernel", cfg.kernel},
              {"q", format_number(cfg.q)},
              {"vacuum", cfg.vacuum},
              {"route", cfg.route},
              {"a", join_numbers(as)}};
  t.label_columns = {"route"};
  t.columns = {"a", "qdot", "error", "discrepancy_factor"};

  for (double a : as) {
    const CouplingParams c{cfg.q, a};
    // The co-accelerated vacuum and the a = 0 limit are both stationary
    // situations measured by the wedge formula.
    if (cfg.vacuum == "rindler" || a == 0.0) {
      det::ObservableResult r;
      const std::string status =
          guard_row([&] { r = det::qdot_rindler(k, c); });
      t.rows.push_back({{a, status == "ok" ? r.value : kNaN,
                         status == "ok" ? r.error_estimate : kNaN,
                         status == "ok" ? r.discrepancy_factor : kNaN},
                        status,
                        {"rindler"}});
      continue;
    }
    for (const auto& route : routes) {
      det::ObservableResult r;
      const std::string status = guard_row([&] {
        if (route == "time") {
          r = det::qdot_inertial_time(k, c);
        } else if (route == "series") {
          r = det::qdot_inertial_series(k, c);
        } else if (route == "spectral") {
          r = det::qdot_inertial_spectral_fitted(k, c);
        } else {
          r = det::qdot_general(k, c);
        }
      });
      t.rows.push_back({{a, status == "ok" ? r.value : kNaN,
                         status == "ok" ? r.error_estimate : kNaN,
                         status == "ok" ? r.discrepancy_factor : kNaN},
                        status,
                        {route}});
    }
  }
  return finish_rows_command(t, cfg);
}

// ---------------------------------------------------------------------------
// force

int cmd_force(const RunConfig& cfg) {
  namespace det = rindler::detector;
  const ResponseKernel k = parse_kernel_spec(cfg.kernel);
  const auto as = accelerations_or(cfg, {0.5, 1.0, 2.0});

  Table t;
  t.config = {{"command", "force"},
              {"kernel", cfg.kernel},
              {"q", format_number(cfg.q)},
              {"vacuum", cfg.vacuum},
              {"a", join_numbers(as)}};
  t.columns = {"a", "force", "force_closed", "residual"};

  for (double a : as) {
    const CouplingParams c{cfg.q, a};
    double f = kNaN, fc = kNaN, res = kNaN;
    const std::string status = guard_row([&] {
      if (cfg.vacuum == "rindler") {
        f = det::force_rindler(k, c).value;
        fc = 0.0;
      } else {
        f = det::force_inertial(k, c).value;
        fc = det::force_inertial_closed(k, c);
      }
      res = std::abs(f - fc);
    });
    t.rows.push_back({{a, f, fc, res}, status, {}});
  }
  return finish_rows_command(t, cfg);
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const RunConfig& cfg) {
  namespace verify = rindler::verify;
  const auto report = verify::run_checks(cfg.filter, cfg.seed);
  if (report.checks.empty()) {
    throw ConfigError("no verification checks match filter '" + cfg.filter +
                      "'");
  }

  std::printf("== cross-validation checks ==\n");
  int failed = 0;
  for (const auto& c : report.checks) {
    if (!c.passed) ++failed;
    std::printf("[%s] %-26s measured %.3g (bound %.3g)\n        %s\n",
                c.passed ? "PASS" : "FAIL", c.name.c_str(), c.measured,
                c.threshold, c.detail.c_str());
  }
  if (cfg.filter.empty()) {
    std::printf("\n== discrepancy report ==\n");
    for (const auto& d : verify::discrepancy_report()) {
      std::printf("* %s (measured factor %.10g)\n", d.name.c_str(),
                  d.measured_factor);
      std::printf("    published:   %s\n", d.published.c_str());
      std::printf("    implemented: %s\n", d.implemented.c_str());
      std::printf("    note:        %s\n", d.note.c_str());
    }
  }
  std::printf("\n== summary: %zu/%zu checks passed ==\n",
              report.checks.size() - failed, report.checks.size());

  if (!cfg.out.empty()) {
    Table t;
    t.config = {{"command", "verify"},
                {"seed", std::to_string(cfg.seed)},
                {"filter", cfg.filter}};
    t.label_columns = {"check"};
    t.columns = {"measured", "threshold"};
    for (const auto& c : report.checks) {
      t.rows.push_back(
          {{c.measured, c.threshold}, c.passed ? "pass" : "fail", {c.name}});
    }
    emit_table(t, cfg);
  }
  return report.all_passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepObservable {
  const char* name;
  std::function<rindler::detector::ObservableResult(const ResponseKernel&,
                                                    const CouplingParams&)>
      eval;
};

const std::vector<SweepObservable>& sweep_observables() {
  namespace det = rindler::detector;
  // Alphabetical, to keep the row order lexicographic in all parameters.
  static const std::vector<SweepObservable> obs = {
      {"force_inertial", [](const ResponseKernel& k, const CouplingParams& c) {
         return det::force_inertial(k, c);
       }},
      {"qdot_general", [](const ResponseKernel& k, const CouplingParams& c) {
         return det::qdot_general(k, c);
       }},
      {"qdot_rindler", [](const ResponseKernel& k, const CouplingParams& c) {
         return det::qdot_rindler(k, c);
       }},
      {"qdot_spectral", [](const ResponseKernel& k, const CouplingParams& c) {
         return det::qdot_inertial_spectral(k, c, kPi);
       }},
      {"qdot_time", [](const ResponseKernel& k, const CouplingParams& c) {
         return det::qdot_inertial_time(k, c);
       }},
  };
  return obs;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& body) {
  const std::string tmp = path + ".tmp";
  rindler::output::write_file(tmp, body);
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw ConfigError("cannot move " + tmp + " into place");
  }
}

int cmd_sweep(const RunConfig& cfg) {
  if (cfg.format != "csv") {
    throw ConfigError("sweep emits CSV only; drop --format " + cfg.format);
  }
  std::vector<double> as =
      accelerations_or(cfg, {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0,
                             2.25, 2.5});
  for (double a : as) {
    if (a == 0.0) throw ConfigError("sweep needs a > 0");
  }
  std::sort(as.begin(), as.end());
  as.erase(std::unique(as.begin(), as.end()), as.end());

  // Kernel catalog, lexicographic by spec string.
  std::vector<std::string> specs;
  if (cfg.kernel_set) {
    specs = {cfg.kernel};
  } else {
    specs = {"dampedosc:1,2,0.5", "dampedosc:2,1,1", "powerexp:1,1,1",
             "powerexp:1,2,0.7"};
  }
  std::vector<ResponseKernel> kernels;
  kernels.reserve(specs.size());
  for (const auto& s : specs) kernels.push_back(parse_kernel_spec(s));

  const auto& obs = sweep_observables();
  const std::size_t n_rows = as.size() * specs.size() * obs.size();
  if (n_rows > 100000) {
    throw SizeCapExceeded("sweep would produce " + std::to_string(n_rows) +
                          " rows; the cap is 100000");
  }

  const std::string out_dir = cfg.out.empty() ? "sweep_out" : cfg.out;
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw ConfigError("cannot create output directory " + out_dir + ": " +
                      ec.message());
  }

  const std::vector<std::string> label_cols = {"kernel", "observable"};
  const std::vector<std::string> num_cols = {"a", "value", "error"};

  auto chunk_path = [&](std::size_t i, std::size_t j) {
    return out_dir + "/chunk_a" + std::to_string(i) + "_k" +
           std::to_string(j) + ".csv";
  };

  // One chunk per (kernel, acceleration): compute its rows and write the
  // file atomically so an interrupted run never leaves a partial chunk.
  auto run_chunk = [&](std::size_t i, std::size_t j) {
    const std::string path = chunk_path(i, j);
    if (cfg.skip_existing && std::filesystem::exists(path)) return;
    Table t;
    t.label_columns = label_cols;
    t.columns = num_cols;
    const CouplingParams c{cfg.q, as[i]};
    for (const auto& o : obs) {
      rindler::detector::ObservableResult r;
      const std::string status =
          guard_row([&] { r = o.eval(kernels[j], c); });
      t.rows.push_back({{as[i], status == "ok" ? r.value : kNaN,
                         status == "ok" ? r.error_estimate : kNaN},
                        status,
                        {specs[j], o.name}});
    }
    write_file_atomic(path, rindler::output::to_csv(t));
  };

  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t j = 0; j < specs.size(); ++j) {
    for (std::size_t i = 0; i < as.size(); ++i) jobs.emplace_back(i, j);
  }
  const std::size_t batch =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < jobs.size(); start += batch) {
    std::vector<std::future<void>> fs;
    const std::size_t end = std::min(jobs.size(), start + batch);
    for (std::size_t x = start; x < end; ++x) {
      fs.push_back(std::async(std::launch::async, run_chunk, jobs[x].first,
                              jobs[x].second));
    }
    for (auto& f : fs) f.get();
  }

  // Deterministic merge: header block, then chunk bodies in kernel-major,
  // acceleration-minor order; rows inside a chunk are observable-sorted, so
  // the full file is lexicographic in (kernel, a, observable).
  Table header;
  header.config = {{"command", "sweep"},
                   {"q", format_number(cfg.q)},
                   {"a", join_numbers(as)},
                   {"kernels", [&] {
                      std::string s;
                      for (const auto& sp : specs) {
                        if (!s.empty()) s += ';';
                        s += sp;
                      }
                      return s;
                    }()},
                   {"observables", [&] {
                      std::string s;
                      for (const auto& o : obs) {
                        if (!s.empty()) s += ';';
                        s += o.name;
                      }
                      return s;
                    }()},
                   {"rows", std::to_string(n_rows)}};
  header.label_columns = label_cols;
  header.columns = num_cols;
  std::string merged = rindler::output::to_csv(header);

  bool any_error = false;
  for (std::size_t j = 0; j < specs.size(); ++j) {
    for (std::size_t i = 0; i < as.size(); ++i) {
      const std::string body = read_file(chunk_path(i, j));
      const auto nl = body.find('\n');
      if (nl == std::string::npos) {
        throw ConfigError("chunk file is truncated: " + chunk_path(i, j));
      }
      const std::string rows = body.substr(nl + 1);
      if (rows.find(",error:") != std::string::npos) any_error = true;
      merged += rows;
    }
  }
  write_file_atomic(out_dir + "/sweep.csv", merged);
  std::printf("wrote %s/sweep.csv (%zu rows)\n", out_dir.c_str(), n_rows);
  return cfg.strict && any_error ? 3 : 0;
}

// ---------------------------------------------------------------------------
// Wiring.

void validate_choices(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json") {
    throw ConfigError("--format must be csv or json");
  }
  if (cfg.vacuum != "inertial" && cfg.vacuum != "rindler") {
    throw ConfigError("--vacuum must be inertial or rindler");
  }
  if (cfg.route != "all" && cfg.route != "time" && cfg.route != "series" &&
      cfg.route != "spectral" && cfg.route != "general") {
    throw ConfigError("--route must be time, series, spectral, general, "
                      "or all");
  }
  if (!std::isfinite(cfg.q)) throw ConfigError("--q must be finite");
  if (cfg.tol != 0.0 && (!(cfg.tol >= 1e-14) || !(cfg.tol <= 1e-1))) {
    throw ConfigError("--tol must lie in [1e-14, 0.1]");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"accelerated-detector toolkit: spectra, detector response, "
               "vacuum friction, and the cross-validation suite"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::map<const CLI::App*, KeyMap> registries;

  auto add = [&](CLI::App* cmd, CLI::Option* opt, const std::string& key,
                 std::function<void(const std::string&)> apply) {
    registries[cmd][key] = KeyEntry{opt, std::move(apply)};
  };
  auto common_options = [&](CLI::App* cmd) {
    cmd->add_option("--config", cfg.config_path,
                    "flat key=value file; flags override its values");
    add(cmd,
        cmd->add_option("--out", cfg.out, "output path (default: stdout)"),
        "out", [&](const std::string& v) { cfg.out = v; });
    add(cmd,
        cmd->add_option("--format", cfg.format, "csv or json")
            ->capture_default_str(),
        "format", [&](const std::string& v) { cfg.format = v; });
    add(cmd,
        cmd->add_option("--tol", cfg.tol,
                        "relative quadrature tolerance override"),
        "tol",
        [&](const std::string& v) { cfg.tol = parse_double_value(v, "tol"); });
    add(cmd,
        cmd->add_flag("--strict", cfg.strict,
                      "error-status rows fail the run (exit 3)"),
        "strict",
        [&](const std::string& v) { cfg.strict = parse_bool_value(v, "strict"); });
  };
  auto a_option = [&](CLI::App* cmd, const char* help) {
    add(cmd, cmd->add_option("--a", cfg.a, help)->delimiter(','), "a",
        [&](const std::string& v) { cfg.a = parse_list_value(v, "a"); });
  };
  auto kernel_options = [&](CLI::App* cmd) {
    add(cmd,
        cmd->add_option("--kernel", cfg.kernel,
                        "powerexp:a0,p,tau0 | dampedosc:kappa,Omega,gamma | "
                        "tabulated:path")
            ->capture_default_str(),
        "kernel", [&](const std::string& v) {
          cfg.kernel = v;
          cfg.kernel_set = true;
        });
    add(cmd,
        cmd->add_option("--q", cfg.q, "coupling strength")
            ->capture_default_str(),
        "q", [&](const std::string& v) { cfg.q = parse_double_value(v, "q"); });
    add(cmd,
        cmd->add_option("--vacuum", cfg.vacuum, "inertial or rindler")
            ->capture_default_str(),
        "vacuum", [&](const std::string& v) { cfg.vacuum = v; });
  };

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "thermal occupation over a wedge-frequency grid");
  common_options(spectrum);
  a_option(spectrum, "acceleration values (default 1)");
  add(spectrum,
      spectrum->add_option("--nu-min", cfg.nu_min)->capture_default_str(),
      "nu-min",
      [&](const std::string& v) { cfg.nu_min = parse_double_value(v, "nu-min"); });
  add(spectrum,
      spectrum->add_option("--nu-max", cfg.nu_max)->capture_default_str(),
      "nu-max",
      [&](const std::string& v) { cfg.nu_max = parse_double_value(v, "nu-max"); });
  add(spectrum,
      spectrum->add_option("--nu-points", cfg.nu_points)
          ->capture_default_str(),
      "nu-points",
      [&](const std::string& v) { cfg.nu_points = parse_int_value(v, "nu-points"); });

  CLI::App* response = app.add_subcommand(
      "response", "absorbed power of the detector, one row per (a, route)");
  common_options(response);
  a_option(response, "acceleration values (default 0.5,1,2)");
  kernel_options(response);
  add(response,
      response->add_option("--route", cfg.route,
                           "time | series | spectral | general | all")
          ->capture_default_str(),
      "route", [&](const std::string& v) { cfg.route = v; });

  CLI::App* force = app.add_subcommand(
      "force", "drag force on the detector, quadrature vs closed form");
  common_options(force);
  a_option(force, "acceleration values (default 0.5,1,2)");
  kernel_options(force);

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-validation suite and discrepancy report");
  common_options(verify);
  add(verify,
      verify->add_option("--filter", cfg.filter,
                         "run only checks whose name contains this"),
      "filter", [&](const std::string& v) { cfg.filter = v; });
  add(verify,
      verify->add_option("--seed", cfg.seed, "seed for sampled checks")
          ->capture_default_str(),
      "seed",
      [&](const std::string& v) { cfg.seed = parse_uint64_value(v, "seed"); });

  CLI::App* sweep = app.add_subcommand(
      "sweep", "bulk deterministic CSV over the kernel catalog");
  common_options(sweep);
  a_option(sweep, "acceleration values (default 0.25..2.5)");
  kernel_options(sweep);
  add(sweep,
      sweep->add_flag("--skip-existing", cfg.skip_existing,
                      "reuse chunk files already present (resume)"),
      "skip-existing",
      [&](const std::string& v) {
        cfg.skip_existing = parse_bool_value(v, "skip-existing");
      });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* active = app.get_subcommands().front();
  {
    const auto& reg = registries[active];
    const auto it = reg.find("kernel");
    if (it != reg.end() && it->second.opt->count() > 0) {
      cfg.kernel_set = true;
    }
  }
  if (!cfg.config_path.empty()) {
    apply_config_file(registries[active], cfg.config_path);
  }
  validate_choices(cfg);
  if (cfg.tol != 0.0) {
    rindler::numerics::set_quadrature_tolerance_scale(
        cfg.tol / rindler::numerics::QuadratureConfig{}.rel_tol);
  }

  const std::string name = active->get_name();
  if (name == "spectrum") return cmd_spectrum(cfg);
  if (name == "response") return cmd_response(cfg);
  if (name == "force") return cmd_force(cfg);
  if (name == "verify") return cmd_verify(cfg);
  return cmd_sweep(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.error_class() == ErrorClass::Config ? 2 : 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
