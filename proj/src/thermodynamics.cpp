#include "dkpo/thermodynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <string>

namespace dkpo {

const char* thermo_method_name(ThermoMethod m) {
  switch (m) {
    case ThermoMethod::ExactSum: return "exact-sum";
    case ThermoMethod::ClosedForm: return "closed-form";
    case ThermoMethod::Asymptotic: return "asymptotic";
  }
  return "?";
}

double level_value_1(std::int64_t n, double delta) {
  if (n < 0) throw domain_error("level index must be >= 0", static_cast<double>(n));
  const double rad = 2.0 * (1.0 + delta) * static_cast<double>(n) + 2.0 + delta;
  if (rad < 0.0) throw domain_error("y_1: negative radicand", rad);
  return std::sqrt(rad);
}

double level_value_2(std::int64_t k, double delta) {
  if (k < 0) throw domain_error("level index must be >= 0", static_cast<double>(k));
  const double rad = 2.0 * (1.0 - delta) * static_cast<double>(k) + delta;
  if (rad < 0.0) throw domain_error("y_2: negative radicand", rad);
  return std::sqrt(rad);
}

namespace {

/// int_N^inf (x + c) exp(-gamma sqrt(a x + b)) dx, exact via u = sqrt(ax+b).
/// Majorizes the dropped tail of the sum once the summand is decreasing.
double tail_integral(double n0, double c, double a, double b, double gamma) {
  const double u0 = std::sqrt(a * n0 + b);
  const double g = gamma;
  const double cubic = u0 * u0 * u0 / g + 3.0 * u0 * u0 / (g * g) + 6.0 * u0 / (g * g * g) +
                       6.0 / (g * g * g * g);
  const double linear = u0 / g + 1.0 / (g * g);
  return (2.0 / (a * a)) * std::exp(-g * u0) * (cubic + (c * a - b) * linear);
}

struct SumOutcome {
  double value;
  std::int64_t terms;
  double tail_bound;
};

/// 2 sum_{n>=0} (n + c) exp(-gamma sqrt(a n + b)) with compensated
/// accumulation. c = 0 gives the Omega = 2n factor, c = 1 the 2(n+1) one.
SumOutcome partition_factor(double c, double a, double b, double gamma,
                            const SumControl& ctl) {
  double sum = 0.0, comp = 0.0;
  double prev_term = -1.0;
  bool past_peak = false;
  // ln f(x) = ln(x+c) - gamma sqrt(ax+b) peaks near x = 4/(gamma^2 a).
  const double n_peak = 4.0 / (gamma * gamma * a);

  for (std::int64_t n = 0;; ++n) {
    if (n > ctl.hard_cap)
      throw numerical_error("partition sum did not converge within " +
                                std::to_string(ctl.hard_cap) + " terms; partial value " +
                                std::to_string(sum),
                            sum);
    const double x = static_cast<double>(n);
    const double term = 2.0 * (x + c) * std::exp(-gamma * std::sqrt(a * x + b));
    // Kahan step.
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;

    if (term < prev_term || (n > 0 && x > n_peak)) past_peak = true;
    prev_term = term;

    if (past_peak) {
      // Deep-suppression regime: once the terms underflow the sum is done.
      if (term == 0.0) return SumOutcome{sum, n + 1, 2.0 * tail_integral(x, c, a, b, gamma)};
      if (sum > 0.0 && term <= ctl.term_rel_cutoff * sum) {
        const double tail = 2.0 * tail_integral(x, c, a, b, gamma);
        if (tail <= ctl.tail_rel_bound * sum) return SumOutcome{sum, n + 1, tail};
      }
    }
  }
}

}  // namespace

PartitionSums exact_partition_sum(const ThermoConfig& cfg, const SumControl& ctl) {
  cfg.validate();
  if (cfg.delta >= 1.0)
    throw domain_error("exact partition sum requires delta < 1 "
                       "(y_2 levels become complex otherwise)", cfg.delta);

  const SumOutcome s1 =
      partition_factor(0.0, 2.0 * (1.0 + cfg.delta), 2.0 + cfg.delta, cfg.gamma, ctl);
  const SumOutcome s2 =
      partition_factor(1.0, 2.0 * (1.0 - cfg.delta), cfg.delta, cfg.gamma, ctl);

  PartitionSums out;
  out.z1 = s1.value;
  out.z2 = s2.value;
  out.z = s1.value * s2.value;
  out.terms1 = s1.terms;
  out.terms2 = s2.terms;
  out.tail_bound1 = s1.tail_bound;
  out.tail_bound2 = s2.tail_bound;
  return out;
}

double closed_form_z1(const ThermoConfig& cfg) {
  cfg.validate_closed_form();
  const double g = cfg.gamma, d = cfg.delta;
  const double rb = std::sqrt(2.0 + d);
  return 2.0 * std::exp(-g * rb) * ((2.0 + d) * g * g + 3.0 * rb * g + 3.0) /
         ((1.0 + d) * (1.0 + d) * g * g * g * g);
}

double closed_form_z2(const ThermoConfig& cfg) {
  cfg.validate_closed_form();
  const double g = cfg.gamma, d = cfg.delta;
  const double rd = std::sqrt(d);
  // The (1-d) g^2 and 2 d g^2 terms stay separate on purpose.
  return std::exp(-g * rd) *
         (rd * g * ((1.0 - d) * g * g + 6.0) + (1.0 - d) * g * g + 2.0 * d * g * g + 6.0) /
         ((1.0 - d) * (1.0 - d) * g * g * g * g);
}

double closed_form_z(const ThermoConfig& cfg) {
  return closed_form_z1(cfg) * closed_form_z2(cfg);
}

double closed_form_ln_z(const ThermoConfig& cfg) {
  cfg.validate_closed_form();
  const double g = cfg.gamma, d = cfg.delta;
  const double rb = std::sqrt(2.0 + d);
  const double rd = std::sqrt(d);
  const double ln1 = std::log(2.0) - g * rb +
                     std::log((2.0 + d) * g * g + 3.0 * rb * g + 3.0) -
                     2.0 * std::log1p(d) - 4.0 * std::log(g);
  const double ln2 =
      -g * rd +
      std::log(rd * g * ((1.0 - d) * g * g + 6.0) + (1.0 - d) * g * g + 2.0 * d * g * g + 6.0) -
      2.0 * std::log1p(-d) - 4.0 * std::log(g);
  return ln1 + ln2;
}

namespace {

struct DerivativeLadder {
  double d_h, d_h2, d_h4;  // estimates at steps h, h/2, h/4
};

double richardson_or_throw(const DerivativeLadder& lad, const char* what) {
  const double e1 = std::abs(lad.d_h2 - lad.d_h);
  const double e2 = std::abs(lad.d_h4 - lad.d_h2);
  const double scale = std::max(1.0, std::abs(lad.d_h4));
  if (e2 > e1 && e2 > 1e-9 * scale)
    throw numerical_error(std::string(what) + ": non-monotone derivative refinement", e2);
  return (4.0 * lad.d_h4 - lad.d_h2) / 3.0;
}

DerivativeLadder first_derivative(const std::function<double(double)>& f, double x,
                                  double h) {
  auto central = [&](double step) { return (f(x + step) - f(x - step)) / (2.0 * step); };
  return DerivativeLadder{central(h), central(0.5 * h), central(0.25 * h)};
}

DerivativeLadder second_derivative(const std::function<double(double)>& f, double x,
                                   double h, double f0) {
  auto central = [&](double step) {
    return (f(x + step) - 2.0 * f0 + f(x - step)) / (step * step);
  };
  return DerivativeLadder{central(h), central(0.5 * h), central(0.25 * h)};
}

}  // namespace

ThermoPoint potentials(const ThermoConfig& cfg, ThermoMethod method) {
  cfg.validate();
  if (method == ThermoMethod::Asymptotic)
    throw domain_error("use asymptotic_potentials for the asymptotic method");

  std::function<double(double)> eval;
  if (method == ThermoMethod::ClosedForm) {
    eval = [&cfg](double g) { return closed_form_ln_z(ThermoConfig{g, cfg.delta}); };
  } else {
    eval = [&cfg](double g) {
      const PartitionSums s = exact_partition_sum(ThermoConfig{g, cfg.delta});
      if (!(s.z1 > 0.0) || !(s.z2 > 0.0))
        throw numerical_error("partition sum underflows at gamma = " + std::to_string(g),
                              0.0);
      return std::log(s.z1) + std::log(s.z2);
    };
  }
  // The U and S ladders share evaluation points; cache them.
  auto cache = std::make_shared<std::map<double, double>>();
  std::function<double(double)> ln_z = [eval, cache](double g) {
    const auto it = cache->find(g);
    if (it != cache->end()) return it->second;
    const double v = eval(g);
    cache->emplace(g, v);
    return v;
  };

  const double g = cfg.gamma;
  const double lz = ln_z(g);
  // The exact sums carry ~1e-12 relative truncation noise, so their
  // difference quotients need larger steps to stay truncation-dominated.
  const double step_scale = (method == ThermoMethod::ClosedForm) ? 1.0 : 10.0;
  const double h1 = g * 1e-4 * step_scale;
  const double h2 = g * 1e-3 * step_scale;

  const double dlnz = richardson_or_throw(first_derivative(ln_z, g, h1), "d lnZ/d gamma");
  const double d2lnz =
      richardson_or_throw(second_derivative(ln_z, g, h2, lz), "d^2 lnZ/d gamma^2");

  // Entropy from its own finite difference of F, so the thermodynamic
  // identity S = gamma (U - F)/mc^2 stays a genuine cross-check.
  auto f_mc2 = [&ln_z](double gg) { return -ln_z(gg) / gg; };
  const double dF = richardson_or_throw(first_derivative(f_mc2, g, h1), "dF/d gamma");

  ThermoPoint p;
  p.gamma = g;
  p.delta = cfg.delta;
  p.lnZ = lz;
  p.Z = (method == ThermoMethod::ClosedForm) ? closed_form_z(cfg) : std::exp(lz);
  p.U_mc2 = -dlnz;
  p.U_over_kT = -g * dlnz;
  p.F_mc2 = -lz / g;
  p.F_over_kT = -lz;
  p.S_over_kB = g * g * dF;
  p.C_over_kB = g * g * d2lnz;
  p.method = method;
  return p;
}

AsymptoticThermo asymptotic_potentials(const ThermoConfig& cfg) {
  cfg.validate();
  if (cfg.delta >= 1.0)
    throw divergence_error("asymptotic potentials diverge for delta >= 1", 2);

  const double g = cfg.gamma, d = cfg.delta;
  // Per-component logs from z_i ~ 6/((1 + s_i delta)^2 gamma^4):
  // F_i = -4 k_B T ln(k_B T/(mc^2 (1 + s_i delta)^{1/2})), which is what
  // makes F_1 + F_2 reproduce the total with its (1-delta^2)^{1/4} factor.
  const double log_t = -std::log(g);
  const double l1 = log_t - 0.5 * std::log1p(d);
  const double l2 = log_t - 0.5 * std::log1p(-d);

  AsymptoticThermo a;
  a.U_over_kT_part[0] = 4.0;
  a.U_over_kT_part[1] = 4.0;
  a.F_over_kT_part[0] = -4.0 * l1;
  a.F_over_kT_part[1] = -4.0 * l2;
  a.S_over_kB_part[0] = 4.0 * (l1 + 1.0);
  a.S_over_kB_part[1] = 4.0 * (l2 + 1.0);
  a.C_over_kB_part[0] = 4.0;
  a.C_over_kB_part[1] = 4.0;

  ThermoPoint& p = a.total;
  p.gamma = g;
  p.delta = d;
  // Leading-order partition function 36/((1-d^2)^2 g^8); the asymptotic
  // potentials drop its additive ln 36 constant.
  p.lnZ = std::log(36.0) - 2.0 * std::log1p(-d * d) - 8.0 * std::log(g);
  p.Z = std::exp(p.lnZ);
  p.U_over_kT = 8.0;
  p.U_mc2 = 8.0 / g;
  p.F_over_kT = a.F_over_kT_part[0] + a.F_over_kT_part[1];
  p.F_mc2 = p.F_over_kT / g;
  p.S_over_kB = a.S_over_kB_part[0] + a.S_over_kB_part[1];
  p.C_over_kB = 8.0;
  p.method = ThermoMethod::Asymptotic;
  return a;
}

std::vector<ScanRow> scan_delta(double gamma, std::vector<double> deltas) {
  std::sort(deltas.begin(), deltas.end());
  std::vector<ScanRow> rows;
  rows.reserve(deltas.size());
  for (double d : deltas) {
    ScanRow row;
    row.delta = d;
    if (d >= 1.0) {
      // Complex-valued regime: flagged, never evaluated.
      row.divergent = true;
      row.divergent_component = 2;
      row.point.gamma = gamma;
      row.point.delta = d;
      row.point.method = ThermoMethod::ClosedForm;
    } else {
      row.point = potentials(ThermoConfig{gamma, d}, ThermoMethod::ClosedForm);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dkpo
