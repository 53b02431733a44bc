// End-to-end tests of the rindler-kit binary: exit codes, output formats,
// config-file precedence, determinism, and sweep resume. Each case shells
// out to the real executable (path injected via RINDLER_KIT_BIN).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("rindler-kit-test-" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CmdResult run_kit(const std::string& args) {
  static int counter = 0;
  const fs::path cap = work_dir() / ("cap" + std::to_string(counter++));
  const std::string cmd =
      std::string(RINDLER_KIT_BIN) + " " + args + " > " + cap.string() +
      " 2>&1";
  const int rc = std::system(cmd.c_str());
  CmdResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream f(cap);
  std::ostringstream os;
  os << f.rdbuf();
  r.output = os.str();
  return r;
}

void write_text(const fs::path& p, const std::string& body) {
  std::ofstream f(p);
  f << body;
}

std::string read_text(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

// Rows below the comment block and the column-header line. Only safe for
// tables whose label fields contain no commas.
std::vector<std::vector<std::string>> data_rows(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  bool seen_header = false;
  for (const auto& line : split_lines(csv)) {
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      seen_header = true;
      continue;
    }
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

std::string header_value(const std::string& csv, const std::string& key) {
  const std::string prefix = "# " + key + " = ";
  for (const auto& line : split_lines(csv)) {
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  }
  return "";
}

const char* kRampBody = "0 10\n1 0\n";

}  // namespace

TEST_CASE("usage and configuration mistakes exit with code 2") {
  CHECK(run_kit("--help").exit_code == 0);
  CHECK(run_kit("--help").output.find("spectrum") != std::string::npos);
  CHECK(run_kit("").exit_code == 2);                      // missing subcommand
  CHECK(run_kit("response --no-such-flag").exit_code == 2);
  CHECK(run_kit("response --kernel nope:1").exit_code == 2);
  CHECK(run_kit("response --kernel powerexp:1,1").exit_code == 2);
  CHECK(run_kit("response --a -1").exit_code == 2);
  CHECK(run_kit("response --tol 1e-20").exit_code == 2);
  CHECK(run_kit("response --format yaml").exit_code == 2);
  CHECK(run_kit("response --route sideways").exit_code == 2);
  CHECK(run_kit("spectrum --nu-points 1").exit_code == 2);
  CHECK(run_kit("spectrum --nu-min 2 --nu-max 1").exit_code == 2);
  CHECK(run_kit("response --config /no/such/file.conf").exit_code == 2);
  CHECK(run_kit("response --kernel tabulated:/no/such/table").exit_code == 2);

  const fs::path bad = work_dir() / "bad.conf";
  write_text(bad, "qq = 1\n");
  CHECK(run_kit("response --config " + bad.string()).exit_code == 2);
  write_text(bad, "just words\n");
  CHECK(run_kit("response --config " + bad.string()).exit_code == 2);
}

TEST_CASE("response routes agree on the smooth reference kernel") {
  const fs::path out = work_dir() / "response.csv";
  const auto r = run_kit("response --a 1 --out " + out.string());
  REQUIRE(r.exit_code == 0);
  const auto rows = data_rows(read_text(out));
  REQUIRE(rows.size() == 4);
  const std::vector<std::string> order = {"time", "series", "spectral",
                                          "general"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i][0] == order[i]);
    CHECK(rows[i].back() == "ok");
    CHECK(std::stod(rows[i][2]) ==
          doctest::Approx(0.364443832506404).epsilon(1e-9));
  }
}

TEST_CASE("zero acceleration and the co-accelerated vacuum use the wedge "
          "formula") {
  const fs::path out = work_dir() / "wedge.csv";
  REQUIRE(run_kit("response --a 0 --out " + out.string()).exit_code == 0);
  auto rows = data_rows(read_text(out));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0][0] == "rindler");
  CHECK(rows[0].back() == "ok");
  CHECK(std::stod(rows[0][2]) ==
        doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-9));

  REQUIRE(run_kit("response --vacuum rindler --a 1 --out " + out.string())
              .exit_code == 0);
  rows = data_rows(read_text(out));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0][0] == "rindler");
  CHECK(std::stod(rows[0][2]) ==
        doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-9));
}

TEST_CASE("config file values sit between defaults and flags") {
  const fs::path conf = work_dir() / "layered.conf";
  write_text(conf,
             "# layered config\n"
             "a = 2\n"
             "q = 2\n"
             "route = time\n");
  const fs::path out = work_dir() / "layered.csv";
  const auto r = run_kit("response --config " + conf.string() + " --q 4" +
                         " --out " + out.string());
  REQUIRE(r.exit_code == 0);
  const std::string csv = read_text(out);
  CHECK(header_value(csv, "q") == "4");        // flag beats file
  CHECK(header_value(csv, "a") == "2");        // file beats default
  CHECK(header_value(csv, "route") == "time");
  const auto rows = data_rows(csv);
  REQUIRE(rows.size() == 1);
  CHECK(std::stod(rows[0][2]) ==
        doctest::Approx(4 * 0.467088277214).epsilon(1e-9));

  // Booleans from the file work too: strict=1 escalates an error row.
  const fs::path ramp = work_dir() / "ramp.txt";
  write_text(ramp, kRampBody);
  const fs::path strict_conf = work_dir() / "strict.conf";
  write_text(strict_conf, "strict = true\nroute = series\n");
  const auto s = run_kit("response --config " + strict_conf.string() +
                         " --kernel tabulated:" + ramp.string() + " --a 1");
  CHECK(s.exit_code == 3);
}

TEST_CASE("numerical failures become error rows, strict escalates to exit 3") {
  const fs::path ramp = work_dir() / "ramp2.txt";
  write_text(ramp, kRampBody);
  const fs::path out = work_dir() / "err.csv";
  const std::string base = "response --kernel tabulated:" + ramp.string() +
                           " --route series --a 1";
  const auto soft = run_kit(base + " --out " + out.string());
  CHECK(soft.exit_code == 0);
  const auto rows = data_rows(read_text(out));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].back() == "error:SeriesNotConverged");
  CHECK(rows[0][2] == "nan");
  CHECK(run_kit(base + " --strict").exit_code == 3);
}

TEST_CASE("json output parses and mirrors the csv rows") {
  const fs::path out = work_dir() / "resp.json";
  REQUIRE(run_kit("response --a 1 --format json --out " + out.string())
              .exit_code == 0);
  const auto doc = nlohmann::json::parse(read_text(out));
  CHECK(doc.at("config").at("q") == "1");
  REQUIRE(doc.at("rows").size() == 4);
  CHECK(doc["rows"][0].at("route") == "time");
  CHECK(doc["rows"][3].at("route") == "general");
  for (const auto& row : doc["rows"]) {
    CHECK(row.at("status") == "ok");
    CHECK(row.at("qdot").get<double>() ==
          doctest::Approx(0.364443832506404).epsilon(1e-9));
  }

  // NaN values in error rows must serialize as null, keeping the JSON valid.
  const fs::path ramp = work_dir() / "ramp3.txt";
  write_text(ramp, kRampBody);
  REQUIRE(run_kit("response --kernel tabulated:" + ramp.string() +
                  " --route series --a 1 --format json --out " + out.string())
              .exit_code == 0);
  const auto err = nlohmann::json::parse(read_text(out));
  CHECK(err["rows"][0].at("qdot").is_null());
  CHECK(err["rows"][0].at("status") == "error:SeriesNotConverged");
}

TEST_CASE("identical invocations produce identical bytes") {
  const fs::path o1 = work_dir() / "det1.csv";
  const fs::path o2 = work_dir() / "det2.csv";
  const std::string args = "response --a 0.5,1,2 --kernel dampedosc:1,2,0.5";
  REQUIRE(run_kit(args + " --out " + o1.string()).exit_code == 0);
  REQUIRE(run_kit(args + " --out " + o2.string()).exit_code == 0);
  CHECK(read_text(o1) == read_text(o2));

  const std::string spec_args = "spectrum --nu-points 4 --nu-min 0.4 "
                                "--nu-max 1.2";
  REQUIRE(run_kit(spec_args + " --out " + o1.string()).exit_code == 0);
  REQUIRE(run_kit(spec_args + " --out " + o2.string()).exit_code == 0);
  CHECK(read_text(o1) == read_text(o2));
}

TEST_CASE("spectrum certifies the thermal ratio and the fitted temperature") {
  const fs::path out = work_dir() / "spec.csv";
  REQUIRE(run_kit("spectrum --a 0.7 --nu-points 5 --nu-min 0.4 --nu-max 1.2 "
                  "--out " + out.string())
              .exit_code == 0);
  const std::string csv = read_text(out);
  const auto rows = data_rows(csv);
  REQUIRE(rows.size() == 5);
  for (const auto& row : rows) {
    CHECK(row.back() == "ok");
    CHECK(std::stod(row[5]) == doctest::Approx(1.0).epsilon(1e-6));
    // omega = nu * a
    CHECK(std::stod(row[2]) ==
          doctest::Approx(std::stod(row[1]) * 0.7).epsilon(1e-12));
  }
  const double temp = std::stod(header_value(csv, "fitted-temperature"));
  CHECK(temp == doctest::Approx(0.7 / (2 * std::numbers::pi)).epsilon(1e-10));
}

TEST_CASE("force reports quadrature against the closed form") {
  const fs::path out = work_dir() / "force.csv";
  char qarg[32];
  std::snprintf(qarg, sizeof qarg, "%.17g", std::numbers::pi);
  REQUIRE(run_kit("force --kernel dampedosc:1,2,0.5 --q " +
                  std::string(qarg) + " --a 2 --out " + out.string())
              .exit_code == 0);
  auto rows = data_rows(read_text(out));
  REQUIRE(rows.size() == 1);
  CHECK(std::stod(rows[0][1]) ==
        doctest::Approx(-16.0 / 17.0).epsilon(1e-9));
  CHECK(std::stod(rows[0][3]) < 1e-8);  // residual vs closed form

  REQUIRE(run_kit("force --vacuum rindler --a 1 --out " + out.string())
              .exit_code == 0);
  rows = data_rows(read_text(out));
  CHECK(std::stod(rows[0][1]) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("tolerance override is honored by the quadrature layer") {
  const fs::path out = work_dir() / "tol.csv";
  REQUIRE(run_kit("response --route time --a 1 --tol 1e-3 --out " +
                  out.string())
              .exit_code == 0);
  const auto loose = data_rows(read_text(out));
  CHECK(std::stod(loose[0][2]) ==
        doctest::Approx(0.364443832506404).epsilon(1e-3));
  REQUIRE(run_kit("response --route time --a 1 --tol 1e-12 --out " +
                  out.string())
              .exit_code == 0);
  const auto tight = data_rows(read_text(out));
  CHECK(std::stod(tight[0][2]) ==
        doctest::Approx(0.364443832506404).epsilon(1e-11));
}

TEST_CASE("verify exits by outcome and writes a result table") {
  const auto one = run_kit("verify --filter gamma");
  CHECK(one.exit_code == 0);
  CHECK(one.output.find("[PASS] gamma_identity") != std::string::npos);
  CHECK(one.output.find("discrepancy report") == std::string::npos);
  CHECK(run_kit("verify --filter nosuchcheck").exit_code == 2);

  const fs::path out = work_dir() / "verify.csv";
  const auto full = run_kit("verify --out " + out.string());
  CHECK(full.exit_code == 0);
  CHECK(full.output.find("discrepancy report") != std::string::npos);
  CHECK(full.output.find("13/13 checks passed") != std::string::npos);
  const auto rows = data_rows(read_text(out));
  CHECK(rows.size() == 13);
  for (const auto& row : rows) CHECK(row.back() == "pass");
}

TEST_CASE("sweep writes a deterministic resumable csv") {
  const fs::path d1 = work_dir() / "sweep1";
  const fs::path d2 = work_dir() / "sweep2";
  const std::string args = "sweep --a 0.5,1 --kernel dampedosc:1,2,0.5";
  REQUIRE(run_kit(args + " --out " + d1.string()).exit_code == 0);
  REQUIRE(run_kit(args + " --out " + d2.string()).exit_code == 0);

  const std::string merged = read_text(d1 / "sweep.csv");
  CHECK(merged == read_text(d2 / "sweep.csv"));
  CHECK(header_value(merged, "rows") == "10");
  const auto rows = data_rows(merged);
  REQUIRE(rows.size() == 10);
  for (const auto& row : rows) CHECK(row.back() == "ok");

  // Resume: drop the merged file and one chunk, rerun with --skip-existing,
  // and get byte-identical output while reusing the surviving chunks.
  fs::remove(d2 / "sweep.csv");
  fs::remove(d2 / "chunk_a1_k0.csv");
  REQUIRE(run_kit(args + " --skip-existing --out " + d2.string()).exit_code ==
          0);
  CHECK(merged == read_text(d2 / "sweep.csv"));

  CHECK(run_kit(args + " --format json --out " + d1.string()).exit_code == 2);

  // An explicitly given kernel always means that single kernel, even when
  // it spells out the default; the catalog runs only when the flag is
  // absent.
  const fs::path d3 = work_dir() / "sweep3";
  REQUIRE(run_kit("sweep --a 0.5 --kernel powerexp:1,1,1 --out " +
                  d3.string())
              .exit_code == 0);
  CHECK(header_value(read_text(d3 / "sweep.csv"), "rows") == "5");
  const fs::path d4 = work_dir() / "sweep4";
  REQUIRE(run_kit("sweep --a 0.5 --out " + d4.string()).exit_code == 0);
  CHECK(header_value(read_text(d4 / "sweep.csv"), "rows") == "20");
}

TEST_CASE("tabulated kernel files accept comments and comma separators") {
  const fs::path tab = work_dir() / "table.csv";
  write_text(tab,
             "# tau, alpha\n"
             "0, 0\n"
             "0.5, 0.8\n"
             "1, 1\n"
             "2, 0.3\n"
             "4, 0\n");
  const fs::path out = work_dir() / "tab.csv";
  REQUIRE(run_kit("response --kernel tabulated:" + tab.string() +
                  " --route time --a 0.7 --out " + out.string())
              .exit_code == 0);
  const auto rows = data_rows(read_text(out));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].back() == "ok");
  CHECK(std::stod(rows[0][2]) ==
        doctest::Approx(0.666627775842934).epsilon(1e-9));

  write_text(tab, "0 0 extra\n1 1\n");
  CHECK(run_kit("response --kernel tabulated:" + tab.string()).exit_code ==
        2);
}
