// Integration tests that drive the real dkpo binary. The path to the
// binary is the last command-line argument (set by CMake).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dkpo/spectrum.hpp"
#include "dkpo/thermodynamics.hpp"
#include "dkpo/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string g_cli;
fs::path g_dir;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const fs::path out = g_dir / "stdout.txt";
  const fs::path err = g_dir / "stderr.txt";
  const std::string cmd = env_prefix + "\"" + g_cli + "\" " + args + " > \"" +
                          out.string() + "\" 2> \"" + err.string() + "\"";
  const int rc = std::system(cmd.c_str());
  return RunResult{WEXITSTATUS(rc), slurp(out), slurp(err)};
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("algebra-check passes for both shipped representations") {
  const auto r = run("algebra-check --sector both --perturb");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("27/27") != std::string::npos);
  CHECK(r.out.find("12/12 detected") != std::string::npos);
  CHECK(r.out.find("24/24 detected") != std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("spectrum CSV carries the versioned header and correct values") {
  const fs::path f = g_dir / "grid.csv";
  const auto r = run("spectrum --sector vector --i 1 --delta 0.5 --n-max 3 --l-max 3 --out \"" +
                     f.string() + "\"");
  REQUIRE(r.exit_code == 0);

  const std::string text = slurp(f);
  CHECK(text.rfind(dkpo::kCsvHeader, 0) == 0);
  CHECK(text.find("\r") == std::string::npos);  // LF endings only

  const auto rows = read_csv(f);
  REQUIRE(rows.size() == 17);  // header + 4*4
  CHECK(rows[0] == std::vector<std::string>{"n", "l", "i", "epsilon"});
  // i=1, delta=0.5, n=0: eps = 2 for every l
  CHECK(rows[1] == std::vector<std::string>{"0", "0", "1", "2"});
  CHECK(rows[4] == std::vector<std::string>{"0", "3", "1", "2"});
}

TEST_CASE("identical flags produce byte-identical outputs") {
  const fs::path f1 = g_dir / "det1.csv";
  const fs::path f2 = g_dir / "det2.csv";
  const std::string flags = "spectrum --sector scalar --i 0 --delta 0.5 --n-max 10 "
                            "--l-max 10 --out ";
  REQUIRE(run(flags + "\"" + f1.string() + "\"").exit_code == 0);
  REQUIRE(run(flags + "\"" + f2.string() + "\"").exit_code == 0);
  CHECK(slurp(f1) == slurp(f2));
  CHECK(!slurp(f1).empty());
}

TEST_CASE("spectrum JSON round-trips the in-memory values exactly") {
  const fs::path f = g_dir / "grid.json";
  REQUIRE(run("spectrum --sector vector --i 2 --delta 0.5 --n-max 2 --l-max 2 "
              "--format json --out \"" + f.string() + "\"").exit_code == 0);
  const json doc = json::parse(slurp(f));
  CHECK(doc["version"] == dkpo::kVersion);
  REQUIRE(doc["rows"].size() == 9);

  dkpo::OscillatorConfig cfg{1.0, 1.0, 0.5};
  for (const auto& row : doc["rows"]) {
    const double want = dkpo::vector_energy(cfg, row["n"], row["l"], 2,
                                            dkpo::Branch::Plus).value;
    CHECK(row["epsilon"].get<double>() == want);  // exact round trip
  }
}

TEST_CASE("pdf output and normalization flag") {
  const fs::path f = g_dir / "pdf.csv";
  REQUIRE(run("pdf --n 1 --l 1 --i 2 --delta 0.5 --xi-max 4 --samples 81 --out \"" +
              f.string() + "\"").exit_code == 0);
  const auto rows = read_csv(f);
  REQUIRE(rows.size() == 82);
  CHECK(rows[0] == std::vector<std::string>{"xi", "rho"});
  CHECK(std::stod(rows[1][0]) == 0.0);
  CHECK(std::stod(rows[81][0]) == 4.0);
  CHECK(std::stod(rows[1][1]) == 0.0);  // l != 0 vanishes at the origin

  const fs::path fn = g_dir / "pdf_norm.csv";
  REQUIRE(run("pdf --n 1 --l 1 --i 2 --delta 0.5 --xi-max 4 --samples 81 --normalized "
              "--out \"" + fn.string() + "\"").exit_code == 0);
  const auto nrows = read_csv(fn);
  // normalization rescales the density
  CHECK(std::stod(nrows[40][1]) != std::stod(rows[40][1]));
}

TEST_CASE("thermo JSON: asymptotic additivity and closed-form round trip") {
  auto r = run("thermo --gamma 0.01 --delta 0 --method asymptotic");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["U_over_kT"].get<double>() == 8.0);
  CHECK(doc["C_over_kB"].get<double>() == 8.0);
  CHECK(doc["U_over_kT_parts"][0].get<double>() == 4.0);
  CHECK(doc["method"] == "asymptotic");

  r = run("thermo --gamma 0.05 --delta 0.3 --method closed");
  REQUIRE(r.exit_code == 0);
  doc = json::parse(r.out);
  const auto want = dkpo::potentials(dkpo::ThermoConfig{0.05, 0.3},
                                     dkpo::ThermoMethod::ClosedForm);
  CHECK(doc["Z"].get<double>() == want.Z);
  CHECK(doc["U_over_kT"].get<double>() == want.U_over_kT);
  CHECK(doc["S_over_kB"].get<double>() == want.S_over_kB);
  CHECK(doc["C_over_kB"].get<double>() == want.C_over_kB);

  // exact method works through the CLI at moderate gamma
  r = run("thermo --gamma 0.5 --delta 0.3 --method exact");
  REQUIRE(r.exit_code == 0);
  doc = json::parse(r.out);
  CHECK(doc["method"] == "exact-sum");
  CHECK(doc["Z"].get<double>() > 0.0);
}

TEST_CASE("pdf JSON carries the state metadata") {
  const fs::path f = g_dir / "pdf.json";
  REQUIRE(run("pdf --n 1 --l 2 --i 1 --delta 0.5 --xi-max 3 --samples 31 --format json "
              "--out \"" + f.string() + "\"").exit_code == 0);
  const json doc = json::parse(slurp(f));
  CHECK(doc["alpha"].get<double>() == 1.5);
  CHECK(doc["norm"].get<double>() == 1.0);
  REQUIRE(doc["rows"].size() == 31);
  CHECK(doc["rows"][0]["rho"].get<double>() == 0.0);
}

TEST_CASE("thermo --out writes the JSON to a file") {
  const fs::path f = g_dir / "thermo.json";
  const auto r = run("thermo --gamma 0.05 --delta 0 --method closed --out \"" +
                     f.string() + "\"");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(slurp(f));
  CHECK(doc["gamma"].get<double>() == 0.05);
}

TEST_CASE("--lz-signed changes only the negative-l scalar rows") {
  const fs::path fa = g_dir / "absl.csv";
  const fs::path fb = g_dir / "signed.csv";
  const std::string common =
      "spectrum --sector scalar --i 0 --delta 0.5 --n-max 1 --l-max 2 --out ";
  REQUIRE(run(common + "\"" + fa.string() + "\"").exit_code == 0);
  REQUIRE(run(common + "\"" + fb.string() + "\" --lz-signed").exit_code == 0);
  const auto ra = read_csv(fa);
  const auto rb = read_csv(fb);
  // emitted grid has l >= 0 where the two conventions coincide
  for (size_t i = 1; i < ra.size(); ++i) CHECK(ra[i][3] == rb[i][3]);
  // at l = -2 the conventions genuinely differ
  dkpo::OscillatorConfig cfg{1.0, 1.0, 0.5};
  CHECK(dkpo::scalar_energy(cfg, 0, -2, dkpo::Branch::Plus, dkpo::LzCoupling::AbsL).value !=
        dkpo::scalar_energy(cfg, 0, -2, dkpo::Branch::Plus, dkpo::LzCoupling::Signed).value);
}

TEST_CASE("thermo-scan flags the divergent interval") {
  const fs::path f = g_dir / "scan.csv";
  REQUIRE(run("thermo-scan --gamma 0.05 --delta-min 0 --delta-max 1.5 --steps 7 --out \"" +
              f.string() + "\"").exit_code == 0);
  const auto rows = read_csv(f);
  REQUIRE(rows.size() == 8);
  double prev = -1.0;
  for (size_t i = 1; i < rows.size(); ++i) {
    const double d = std::stod(rows[i][0]);
    CHECK(d > prev);
    prev = d;
    const bool divergent = rows[i][6] == "1";
    CHECK(divergent == (d >= 1.0));
    if (divergent) CHECK(rows[i][1] == "nan");
  }
}

TEST_CASE("z-compare stays within the recorded bound") {
  const fs::path f = g_dir / "cmp.csv";
  REQUIRE(run("z-compare --gamma-list 0.05,0.03 --delta-list 0,0.3 --out \"" +
              f.string() + "\"").exit_code == 0);
  const auto rows = read_csv(f);
  REQUIRE(rows.size() == 5);
  for (size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][4]) < 0.05);
}

TEST_CASE("fig subcommand enforces figure conventions") {
  REQUIRE(run("fig F2 --out-dir \"" + g_dir.string() + "\" --samples 50").exit_code == 0);
  CHECK(fs::exists(g_dir / "fig2_n0.csv"));
  CHECK(fs::exists(g_dir / "fig2_n2.csv"));

  const auto bad = run("fig F3 --delta 0.3 --out-dir \"" + g_dir.string() + "\"");
  CHECK(bad.exit_code == 1);
  CHECK(bad.err.find("error[domain]") != std::string::npos);
  CHECK(bad.err.find("omega = 2*omega_tilde") != std::string::npos);
}

TEST_CASE("error reporting and exit codes") {
  const auto usage = run("no-such-subcommand");
  CHECK(usage.exit_code == 2);
  CHECK(usage.err.find("error[usage]") != std::string::npos);

  const auto missing = run("spectrum --sector vector");
  CHECK(missing.exit_code == 2);

  const auto dom = run("thermo --gamma -1 --delta 0");
  CHECK(dom.exit_code == 1);
  CHECK(dom.err.find("error[domain]") != std::string::npos);

  const auto div = run("thermo --gamma 0.05 --delta 1.0 --method closed");
  CHECK(div.exit_code == 1);
  CHECK(div.err.find("error[divergence]") != std::string::npos);
}

TEST_CASE("DKPO_PRECISION trims serialized digits") {
  const fs::path f = g_dir / "prec.csv";
  REQUIRE(run("pdf --n 0 --l 0 --i 0 --delta 0.5 --xi-max 1 --samples 3 --out \"" +
              f.string() + "\"", "DKPO_PRECISION=4 ").exit_code == 0);
  const auto rows = read_csv(f);
  REQUIRE(rows.size() == 4);
  // rho(0.5) = exp(-alpha/4) with alpha = sqrt(1.25): full value 0.75615530...
  CHECK(rows[2][1] == "0.7562");
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  int args = argc;
  if (argc > 1 && argv[argc - 1][0] != '-') {
    g_cli = argv[argc - 1];
    --args;
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: test_cli [doctest options] <path-to-dkpo>\n");
    return 1;
  }
  g_dir = fs::temp_directory_path() / ("dkpo_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(g_dir);
  ctx.applyCommandLine(args, argv);
  const int rc = ctx.run();
  fs::remove_all(g_dir);
  return rc;
}
