// dkpo-lab command-line tool: algebra checks, spectra, eigenfunction
// densities and vectorial-sector thermodynamics of the (2+1)-d DKP
// oscillator in a uniform magnetic field. Emits CSV/JSON data only; no
// plotting. Every run is deterministic: identical flags give byte-identical
// output files.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dkpo/algebra.hpp"
#include "dkpo/eigenfunctions.hpp"
#include "dkpo/errors.hpp"
#include "dkpo/serialize.hpp"
#include "dkpo/spectrum.hpp"
#include "dkpo/thermodynamics.hpp"
#include "dkpo/version.hpp"

namespace {

using nlohmann::json;

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "plus") return 1;
  if (s == "-" || s == "-1" || s == "minus") return -1;
  throw CLI::ValidationError("--sign-field", "expected + or -");
}

double effective_delta(double delta, const std::string& sign_field) {
  if (sign_field.empty()) return delta;
  if (delta < 0.0)
    throw dkpo::domain_error("--delta must be >= 0 when --sign-field is given", delta);
  return parse_sign(sign_field) * delta;
}

std::string fmt(double x) { return dkpo::format_double(x); }

// ---------------------------------------------------------------- algebra

int run_algebra_check(const std::string& sector, bool perturb) {
  bool all_ok = true;
  std::vector<dkpo::Sector> sectors;
  if (sector == "scalar" || sector == "both") sectors.push_back(dkpo::Sector::Scalar);
  if (sector == "vector" || sector == "both") sectors.push_back(dkpo::Sector::Vector);

  std::printf("%-8s %-9s %-9s %-16s %-14s\n", "sector", "triples", "failures",
              "eta0-involution", "eta0-commutes");
  for (const auto s : sectors) {
    const auto rep = dkpo::build_representation(s);
    const auto report = dkpo::check_algebra(rep);
    const auto eta = dkpo::build_eta0(rep);
    const auto id = dkpo::IntMat::identity(rep.dim);
    const bool invol = (eta.matrix * eta.matrix == id);
    const bool commutes = (eta.matrix * rep.beta[0] == rep.beta[0] * eta.matrix);
    const bool ok = report.passed() && invol && commutes;
    all_ok = all_ok && ok;
    std::printf("%-8s %2d/27     %-9zu %-16s %-14s\n", dkpo::sector_name(s),
                report.triples_checked, report.failures.size(), invol ? "ok" : "FAIL",
                commutes ? "ok" : "FAIL");
    for (const auto& f : report.failures)
      std::printf("  violated triple (mu,lambda,nu)=(%d,%d,%d)\n", f.mu, f.lambda, f.nu);
  }

  if (perturb) {
    for (const auto s : sectors) {
      const auto rep = dkpo::build_representation(s);
      int total = 0, detected = 0;
      for (int b = 0; b < 3; ++b)
        for (int i = 0; i < rep.dim; ++i)
          for (int j = 0; j < rep.dim; ++j) {
            const std::int64_t v = rep.beta[b](i, j);
            if (v == 0) continue;
            for (const std::int64_t nv : {-v, std::int64_t{0}}) {
              ++total;
              if (!dkpo::check_algebra(dkpo::perturb_entry(rep, b, i, j, nv)).passed())
                ++detected;
            }
          }
      const bool ok = (detected == total);
      all_ok = all_ok && ok;
      std::printf("perturbations %s: %d/%d detected%s\n", dkpo::sector_name(s), detected,
                  total, ok ? "" : "  FAIL");
    }
  }

  std::printf("%s\n", all_ok ? "all checks passed" : "CHECKS FAILED");
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  std::string sector = "vector";
  int i = 1;
  int n_max = 100, l_max = 100;
  double delta = 0.5;
  std::string sign_field;
  std::string branch = "+";
  bool lz_signed = false;
  std::string out;
  std::string format = "csv";
};

double spectrum_value(const SpectrumArgs& a, const dkpo::OscillatorConfig& cfg, int n,
                      int l) {
  const auto br = (a.branch == "-") ? dkpo::Branch::Minus : dkpo::Branch::Plus;
  const auto lz = a.lz_signed ? dkpo::LzCoupling::Signed : dkpo::LzCoupling::AbsL;
  if (a.sector == "scalar") return dkpo::scalar_energy(cfg, n, l, br, lz).value;
  if (a.i == 0) return dkpo::scalar_b_component_energy(cfg, n, l, br, lz).value;
  return dkpo::vector_energy(cfg, n, l, a.i, br).value;
}

int run_spectrum(const SpectrumArgs& a) {
  if (a.sector == "scalar" && a.i != 0)
    throw dkpo::domain_error("the scalar sector has only the i = 0 component", a.i);
  // Energies in units of mc^2 with hbar*omega/mc^2 = 1.
  dkpo::OscillatorConfig cfg{1.0, 1.0, effective_delta(a.delta, a.sign_field)};
  cfg.validate();

  if (a.format == "json") {
    json rows = json::array();
    for (int n = 0; n <= a.n_max; ++n)
      for (int l = 0; l <= a.l_max; ++l)
        rows.push_back({{"n", n}, {"l", l}, {"i", a.i},
                        {"epsilon", spectrum_value(a, cfg, n, l)}});
    json doc = {{"version", dkpo::kVersion},
                {"sector", a.sector},
                {"i", a.i},
                {"delta", cfg.delta},
                {"branch", a.branch},
                {"rows", rows}};
    dkpo::write_file(a.out, doc.dump(2) + "\n");
  } else {
    dkpo::CsvWriter csv(a.out);
    csv.comment("spectrum sector=" + a.sector + " i=" + std::to_string(a.i) +
                " delta=" + fmt(cfg.delta) + " branch=" + a.branch +
                (a.lz_signed ? " lz=signed" : " lz=absl"));
    csv.header({"n", "l", "i", "epsilon"});
    for (int n = 0; n <= a.n_max; ++n)
      for (int l = 0; l <= a.l_max; ++l)
        csv.row({std::to_string(n), std::to_string(l), std::to_string(a.i),
                 fmt(spectrum_value(a, cfg, n, l))});
    csv.close();
  }
  std::printf("wrote %s\n", a.out.c_str());
  return 0;
}

// ---------------------------------------------------------------- pdf

struct PdfArgs {
  int n = 0, l = 1, i = 1;
  double delta = 0.5;
  std::string sign_field;
  std::string mode = "squared";
  double xi_max = 5.0;
  int samples = 400;
  bool normalized = false;
  std::string out;
  std::string format = "csv";
};

int run_pdf(const PdfArgs& a) {
  const double d = effective_delta(a.delta, a.sign_field);
  dkpo::RadialState st{dkpo::alpha_for(a.i, d), a.n, a.l, a.i, 1.0};
  if (a.normalized) st = dkpo::normalize(st);
  const auto mode = (a.mode == "compact") ? dkpo::PdfMode::Compact
                                          : dkpo::PdfMode::SquaredModulus;
  if (a.samples < 2) throw dkpo::domain_error("need at least 2 samples", a.samples);

  std::vector<std::pair<double, double>> rows;
  rows.reserve(a.samples);
  for (int j = 0; j < a.samples; ++j) {
    const double xi = a.xi_max * j / (a.samples - 1);
    rows.emplace_back(xi, dkpo::pdf(st, xi, mode));
  }

  if (a.format == "json") {
    json jr = json::array();
    for (const auto& [xi, rho] : rows) jr.push_back({{"xi", xi}, {"rho", rho}});
    json doc = {{"version", dkpo::kVersion}, {"n", a.n},       {"l", a.l},
                {"i", a.i},                  {"delta", d},     {"alpha", st.alpha},
                {"mode", a.mode},            {"norm", st.norm}, {"rows", jr}};
    dkpo::write_file(a.out, doc.dump(2) + "\n");
  } else {
    dkpo::CsvWriter csv(a.out);
    csv.comment("pdf n=" + std::to_string(a.n) + " l=" + std::to_string(a.l) +
                " i=" + std::to_string(a.i) + " alpha=" + fmt(st.alpha) +
                " mode=" + a.mode + " norm=" + fmt(st.norm));
    csv.header({"xi", "rho"});
    for (const auto& [xi, rho] : rows) csv.row({fmt(xi), fmt(rho)});
    csv.close();
  }
  std::printf("wrote %s\n", a.out.c_str());
  return 0;
}

// ---------------------------------------------------------------- thermo

json thermo_point_json(const dkpo::ThermoPoint& p) {
  return json{{"gamma", p.gamma},           {"delta", p.delta},
              {"Z", p.Z},                   {"lnZ", p.lnZ},
              {"U_mc2", p.U_mc2},           {"U_over_kT", p.U_over_kT},
              {"F_mc2", p.F_mc2},           {"F_over_kT", p.F_over_kT},
              {"S_over_kB", p.S_over_kB},   {"C_over_kB", p.C_over_kB},
              {"method", dkpo::thermo_method_name(p.method)}};
}

int run_thermo(double gamma, double delta, const std::string& method,
               const std::string& out) {
  const dkpo::ThermoConfig cfg{gamma, delta};
  json doc;
  if (method == "asymptotic") {
    const auto a = dkpo::asymptotic_potentials(cfg);
    doc = thermo_point_json(a.total);
    doc["U_over_kT_parts"] = {a.U_over_kT_part[0], a.U_over_kT_part[1]};
    doc["F_over_kT_parts"] = {a.F_over_kT_part[0], a.F_over_kT_part[1]};
    doc["S_over_kB_parts"] = {a.S_over_kB_part[0], a.S_over_kB_part[1]};
    doc["C_over_kB_parts"] = {a.C_over_kB_part[0], a.C_over_kB_part[1]};
  } else {
    const auto m = (method == "exact") ? dkpo::ThermoMethod::ExactSum
                                       : dkpo::ThermoMethod::ClosedForm;
    doc = thermo_point_json(dkpo::potentials(cfg, m));
  }
  const std::string text = doc.dump(2) + "\n";
  if (out.empty())
    std::fputs(text.c_str(), stdout);
  else {
    dkpo::write_file(out, text);
    std::printf("wrote %s\n", out.c_str());
  }
  return 0;
}

int run_thermo_scan(double gamma, double dmin, double dmax, int steps,
                    const std::string& out) {
  if (steps < 1) throw dkpo::domain_error("need at least 1 step", steps);
  std::vector<double> deltas;
  for (int j = 0; j < steps; ++j)
    deltas.push_back(steps == 1 ? dmin : dmin + (dmax - dmin) * j / (steps - 1.0));
  const auto rows = dkpo::scan_delta(gamma, deltas);

  dkpo::CsvWriter csv(out);
  csv.comment("thermo-scan gamma=" + fmt(gamma));
  csv.header({"delta", "Z", "U_over_kT", "S_over_kB", "C_over_kB", "method", "divergent"});
  for (const auto& r : rows) {
    if (r.divergent)
      csv.row({fmt(r.delta), "nan", "nan", "nan", "nan",
               dkpo::thermo_method_name(r.point.method), "1"});
    else
      csv.row({fmt(r.delta), fmt(r.point.Z), fmt(r.point.U_over_kT),
               fmt(r.point.S_over_kB), fmt(r.point.C_over_kB),
               dkpo::thermo_method_name(r.point.method), "0"});
  }
  csv.close();
  std::printf("wrote %s\n", out.c_str());
  return 0;
}

int run_z_compare(const std::vector<double>& gammas, const std::vector<double>& deltas,
                  const std::string& out) {
  dkpo::CsvWriter csv(out);
  csv.comment("exact truncated sums vs closed form; engineering agreement bound "
              "rel_err <= 0.05, shrinking with gamma");
  csv.header({"gamma", "delta", "Z_exact", "Z_closed", "rel_err"});
  for (const double d : deltas)
    for (const double g : gammas) {
      const dkpo::ThermoConfig cfg{g, d};
      const auto sums = dkpo::exact_partition_sum(cfg);
      const double zc = dkpo::closed_form_z(cfg);
      csv.row({fmt(g), fmt(d), fmt(sums.z), fmt(zc),
               fmt(std::abs(sums.z - zc) / sums.z)});
    }
  csv.close();
  std::printf("wrote %s\n", out.c_str());
  return 0;
}

// ---------------------------------------------------------------- fig

struct FigArgs {
  std::string figure;
  std::string out_dir = ".";
  double delta = 0.5;
  std::string sign_field;
  double gamma = 0.05;
  double delta_min = 0.0, delta_max = 2.0;
  int steps = 81;
  int samples = 400;
  double xi_max = 5.0;
};

void require_analysis_convention(double delta) {
  if (std::abs(delta - 0.5) > 1e-12)
    throw dkpo::domain_error(
        "figure convention violated: omega = 2*omega_tilde requires delta = 0.5", delta);
}

int run_fig(const FigArgs& a) {
  const std::string dir = a.out_dir.empty() ? "." : a.out_dir;
  if (a.figure == "F2") {
    require_analysis_convention(a.delta);
    const double d = effective_delta(a.delta, a.sign_field);
    for (int n = 0; n <= 2; ++n) {
      dkpo::CsvWriter csv(dir + "/fig2_n" + std::to_string(n) + ".csv");
      csv.comment("probability distributions, l=1, n=" + std::to_string(n) +
                  ", delta=" + fmt(d));
      csv.header({"xi", "rho0", "rho1", "rho2"});
      dkpo::RadialState s0{dkpo::alpha_for(0, d), n, 1, 0, 1.0};
      dkpo::RadialState s1{dkpo::alpha_for(1, d), n, 1, 1, 1.0};
      dkpo::RadialState s2{dkpo::alpha_for(2, d), n, 1, 2, 1.0};
      for (int j = 0; j < a.samples; ++j) {
        const double xi = a.xi_max * j / (a.samples - 1);
        csv.row({fmt(xi), fmt(dkpo::pdf(s0, xi)), fmt(dkpo::pdf(s1, xi)),
                 fmt(dkpo::pdf(s2, xi))});
      }
      csv.close();
      std::printf("wrote %s/fig2_n%d.csv\n", dir.c_str(), n);
    }
    return 0;
  }
  if (a.figure == "F3") {
    require_analysis_convention(a.delta);
    const int sign = a.sign_field.empty() ? 1 : parse_sign(a.sign_field);
    for (const int i : {1, 0, 2}) {
      dkpo::CsvWriter csv(dir + "/fig3_i" + std::to_string(i) + ".csv");
      csv.comment("splitting energy levels, i=" + std::to_string(i) +
                  ", sign_field=" + std::to_string(sign));
      csv.header({"n", "l", "epsilon"});
      for (int n = 0; n <= 100; ++n)
        for (int l = 0; l <= 100; ++l)
          csv.row({std::to_string(n), std::to_string(l),
                   fmt(dkpo::dimensionless_energy(n, l, i, sign))});
      csv.close();
      std::printf("wrote %s/fig3_i%d.csv\n", dir.c_str(), i);
    }
    return 0;
  }
  if (a.figure == "F4") {
    std::vector<double> deltas;
    for (int j = 0; j < a.steps; ++j)
      deltas.push_back(a.steps == 1 ? a.delta_min
                                    : a.delta_min +
                                          (a.delta_max - a.delta_min) * j / (a.steps - 1.0));
    const auto rows = dkpo::scan_delta(a.gamma, deltas);
    dkpo::CsvWriter csv(dir + "/fig4.csv");
    csv.comment("vectorial-sector potentials vs delta, gamma=" + fmt(a.gamma));
    csv.header({"delta", "U_over_kT", "S_over_kB", "C_over_kB", "U_asym_over_kT",
                "S_asym_over_kB", "C_asym_over_kB", "divergent"});
    for (const auto& r : rows) {
      std::string ua = "nan", sa = "nan", ca = "nan";
      if (r.delta < 1.0) {
        const auto asym = dkpo::asymptotic_potentials(dkpo::ThermoConfig{a.gamma, r.delta});
        ua = fmt(asym.total.U_over_kT);
        sa = fmt(asym.total.S_over_kB);
        ca = fmt(asym.total.C_over_kB);
      }
      if (r.divergent)
        csv.row({fmt(r.delta), "nan", "nan", "nan", ua, sa, ca, "1"});
      else
        csv.row({fmt(r.delta), fmt(r.point.U_over_kT), fmt(r.point.S_over_kB),
                 fmt(r.point.C_over_kB), ua, sa, ca, "0"});
    }
    csv.close();
    std::printf("wrote %s/fig4.csv\n", dir.c_str());
    return 0;
  }
  throw dkpo::domain_error("unknown figure " + a.figure + " (expected F2, F3 or F4)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dkpo-lab: (2+1)-d DKP oscillator in a magnetic field"};
  app.require_subcommand(1);
  app.set_version_flag("--version", dkpo::kVersion);

  // algebra-check
  std::string ac_sector = "both";
  bool ac_perturb = false;
  auto* ac = app.add_subcommand("algebra-check", "verify the trilinear beta-matrix algebra");
  ac->add_option("--sector", ac_sector)->check(CLI::IsMember({"scalar", "vector", "both"}));
  ac->add_flag("--perturb", ac_perturb, "also verify single-entry perturbations are caught");

  // spectrum
  SpectrumArgs sp;
  auto* spc = app.add_subcommand("spectrum", "energy grid over (n, l)");
  spc->add_option("--sector", sp.sector)->check(CLI::IsMember({"scalar", "vector"}));
  spc->add_option("--i", sp.i, "component: 0 (spin-0 slot), 1, 2")->check(CLI::Range(0, 2));
  spc->add_option("--n-max", sp.n_max)->check(CLI::NonNegativeNumber);
  spc->add_option("--l-max", sp.l_max)->check(CLI::NonNegativeNumber);
  spc->add_option("--delta", sp.delta, "field ratio omega_tilde/omega");
  spc->add_option("--sign-field", sp.sign_field, "+ or -");
  spc->add_option("--branch", sp.branch)->check(CLI::IsMember({"+", "-"}));
  spc->add_flag("--lz-signed", sp.lz_signed, "use l*omega_tilde instead of |l|*omega_tilde");
  spc->add_option("--out", sp.out)->required();
  spc->add_option("--format", sp.format)->check(CLI::IsMember({"csv", "json"}));

  // pdf
  PdfArgs pa;
  auto* pdfc = app.add_subcommand("pdf", "radial probability distribution rho(xi)");
  pdfc->add_option("--n", pa.n)->check(CLI::NonNegativeNumber);
  pdfc->add_option("--l", pa.l);
  pdfc->add_option("--i", pa.i)->check(CLI::Range(0, 2));
  pdfc->add_option("--delta", pa.delta);
  pdfc->add_option("--sign-field", pa.sign_field);
  pdfc->add_option("--mode", pa.mode)->check(CLI::IsMember({"squared", "compact"}));
  pdfc->add_option("--xi-max", pa.xi_max)->check(CLI::PositiveNumber);
  pdfc->add_option("--samples", pa.samples)->check(CLI::PositiveNumber);
  pdfc->add_flag("--normalized", pa.normalized, "normalize to unit total probability");
  pdfc->add_option("--out", pa.out)->required();
  pdfc->add_option("--format", pa.format)->check(CLI::IsMember({"csv", "json"}));

  // thermo
  double th_gamma = 0.05, th_delta = 0.0;
  std::string th_method = "closed", th_out;
  auto* th = app.add_subcommand("thermo", "single thermodynamic point as JSON");
  th->add_option("--gamma", th_gamma)->required();
  th->add_option("--delta", th_delta)->required();
  th->add_option("--method", th_method)->check(CLI::IsMember({"closed", "exact", "asymptotic"}));
  th->add_option("--out", th_out, "write JSON here instead of stdout");

  // thermo-scan
  double ts_gamma = 0.05, ts_dmin = 0.0, ts_dmax = 2.0;
  int ts_steps = 81;
  std::string ts_out;
  auto* ts = app.add_subcommand("thermo-scan", "potentials over a delta grid");
  ts->add_option("--gamma", ts_gamma)->required();
  ts->add_option("--delta-min", ts_dmin);
  ts->add_option("--delta-max", ts_dmax);
  ts->add_option("--steps", ts_steps)->check(CLI::PositiveNumber);
  ts->add_option("--out", ts_out)->required();

  // z-compare
  std::vector<double> zc_gammas{0.01, 0.03, 0.05}, zc_deltas{0.0, 0.3, 0.6};
  std::string zc_out;
  auto* zc = app.add_subcommand("z-compare", "exact sums vs closed form");
  zc->add_option("--gamma-list", zc_gammas)->delimiter(',');
  zc->add_option("--delta-list", zc_deltas)->delimiter(',');
  zc->add_option("--out", zc_out)->required();

  // fig
  FigArgs fa;
  auto* fg = app.add_subcommand("fig", "reproduce figure data sets");
  fg->add_option("figure", fa.figure, "F2, F3 or F4")->required();
  fg->add_option("--out-dir", fa.out_dir);
  fg->add_option("--delta", fa.delta, "F2/F3 convention check (must stay 0.5)");
  fg->add_option("--sign-field", fa.sign_field);
  fg->add_option("--gamma", fa.gamma, "F4 inverse temperature")->check(CLI::PositiveNumber);
  fg->add_option("--delta-min", fa.delta_min);
  fg->add_option("--delta-max", fa.delta_max);
  fg->add_option("--steps", fa.steps)->check(CLI::PositiveNumber);
  fg->add_option("--samples", fa.samples)->check(CLI::PositiveNumber);
  fg->add_option("--xi-max", fa.xi_max)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error[usage]: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*ac) return run_algebra_check(ac_sector, ac_perturb);
    if (*spc) return run_spectrum(sp);
    if (*pdfc) return run_pdf(pa);
    if (*th) return run_thermo(th_gamma, th_delta, th_method, th_out);
    if (*ts) return run_thermo_scan(ts_gamma, ts_dmin, ts_dmax, ts_steps, ts_out);
    if (*zc) return run_z_compare(zc_gammas, zc_deltas, zc_out);
    if (*fg) return run_fig(fa);
  } catch (const dkpo::error& e) {
    std::cerr << "error[" << e.category() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
