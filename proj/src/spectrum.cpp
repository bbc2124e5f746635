#include "dkpo/spectrum.hpp"

#include <cmath>
#include <string>

namespace dkpo {

namespace {

double sqrt_or_throw(double radicand, const char* what) {
  if (radicand < 0.0)
    throw domain_error(std::string(what) + ": negative radicand", radicand);
  return std::sqrt(radicand);
}

double branch_sign(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

/// Radicand of the scalar closed form, with omega_sign = -1 selecting the
/// omega -> -omega exchange used by the vector sector's b component.
double scalar_radicand(const OscillatorConfig& cfg, int n, int l, LzCoupling lz,
                       double omega_sign) {
  const double x = cfg.hbar_omega;
  const double la = std::abs(static_cast<double>(l));
  const double lterm = (lz == LzCoupling::AbsL) ? la : static_cast<double>(l);
  const double w0_over_w = std::sqrt(1.0 + cfg.delta * cfg.delta);
  // Grouped so the zero-field ground state cancels exactly: at delta = 0,
  // n = l = 0 the bracket is 2 - 2 = 0 and E = mc^2 bit-exactly.
  return 1.0 + x * (w0_over_w * (4.0 * n + 2.0 * (la + 1.0)) -
                    2.0 * (lterm * cfg.delta + omega_sign));
}

}  // namespace

SplitFrequencies split_frequencies(const OscillatorConfig& cfg) {
  cfg.validate();
  const double w = cfg.hbar_omega;
  const double wt = cfg.omega_tilde();
  return SplitFrequencies{std::sqrt(w * w + wt * wt), w + wt, w - wt,
                          FrequencyUnit::AbsoluteEnergy};
}

EnergyLevel scalar_energy(const OscillatorConfig& cfg, int n, int l, Branch branch,
                          LzCoupling lz) {
  cfg.validate();
  if (n < 0) throw domain_error("radial quantum number must be >= 0", n);
  const double rad = scalar_radicand(cfg, n, l, lz, +1.0);
  return EnergyLevel{branch_sign(branch) * sqrt_or_throw(rad, "scalar_energy"),
                     branch, QuantumNumbers{n, l, 0}, 0};
}

EnergyLevel scalar_b_component_energy(const OscillatorConfig& cfg, int n, int l,
                                      Branch branch, LzCoupling lz) {
  cfg.validate();
  if (n < 0) throw domain_error("radial quantum number must be >= 0", n);
  const double rad = scalar_radicand(cfg, n, l, lz, -1.0);
  return EnergyLevel{branch_sign(branch) * sqrt_or_throw(rad, "scalar_b_component_energy"),
                     branch, QuantumNumbers{n, l, 0}, 0};
}

EnergyLevel vector_energy(const OscillatorConfig& cfg, int n, int l, int i, Branch branch) {
  cfg.validate();
  if (n < 0) throw domain_error("radial quantum number must be >= 0", n);
  if (i != 1 && i != 2) throw domain_error("vector component index must be 1 or 2", i);

  const int s_nominal = QuantumNumbers::spin_of(i);
  const int s = s_nominal * cfg.field_sign();  // spin that enters the level structure
  const double hw_i = cfg.hbar_omega * (1.0 + s_nominal * cfg.delta);
  const double la = std::abs(static_cast<double>(l));
  const double rad = 1.0 + hw_i * (4.0 * n + 2.0 * la * (1.0 - s) + 2.0 * s);
  return EnergyLevel{branch_sign(branch) * sqrt_or_throw(rad, "vector_energy"),
                     branch, QuantumNumbers{n, l, i}, i};
}

double dimensionless_energy(int n, int l, int i, int sign_field) {
  if (n < 0) throw domain_error("radial quantum number must be >= 0", n);
  if (i < 0 || i > 2) throw domain_error("spin index must be 0, 1 or 2", i);
  if (sign_field != 1 && sign_field != -1)
    throw domain_error("sign_field must be +1 or -1", sign_field);

  const int s_nominal = QuantumNumbers::spin_of(i);
  const int s = s_nominal * sign_field;
  const double alpha = (i == 0) ? 0.5 * std::sqrt(5.0)
                                : 1.0 + 0.5 * s_nominal * sign_field;
  const double la = std::abs(static_cast<double>(l));
  const double kron = (i == 0) ? 1.0 : 0.0;
  const double rad = 1.0 - (la * sign_field + 2.0) * kron +
                     alpha * (4.0 * n + 2.0 * la * (1.0 - s) + 2.0 * (s + kron));
  return sqrt_or_throw(rad, "dimensionless_energy");
}

Slope degeneracy_slope(int i, const OscillatorConfig& cfg) {
  cfg.validate();
  switch (i) {
    case 0:
      return Slope::finite(-2.0 / (1.0 - cfg.delta / std::sqrt(1.0 + cfg.delta * cfg.delta)));
    case 1:
      if (1.0 + cfg.delta == 0.0)
        throw domain_error("degeneracy slope undefined: omega_1 = 0", cfg.delta);
      return Slope::inf();
    case 2:
      if (1.0 - cfg.delta == 0.0)
        throw domain_error("degeneracy slope undefined: omega_2 = 0", cfg.delta);
      return Slope::finite(-1.0);
  }
  throw domain_error("spin index must be 0, 1 or 2", i);
}

const char* special_case_name(SpecialCase c) {
  switch (c) {
    case SpecialCase::D1Zero: return "d1=0";
    case SpecialCase::D2Zero: return "d2=0";
    case SpecialCase::D1EqICD2: return "d1=i*d2";
    case SpecialCase::D1EqMinusICD2: return "d1=-i*d2";
    case SpecialCase::OmegaTildeEqOmega: return "omega_tilde=omega";
    case SpecialCase::OmegaTildeEqMinusOmega: return "omega_tilde=-omega";
  }
  return "?";
}

CaseSummary classify_special_case(const OscillatorConfig& cfg, SpecialCase constraint) {
  cfg.validate();
  const double x = cfg.hbar_omega;
  const double w0 = x * std::sqrt(1.0 + cfg.delta * cfg.delta);
  const double w1 = x * (1.0 + cfg.delta);
  const double w2 = x * (1.0 - cfg.delta);

  auto require_delta = [&](double want) {
    if (std::abs(cfg.delta - want) > 1e-12)
      throw invalid_case_error(std::string("case ") + special_case_name(constraint) +
                               " requires delta = " + std::to_string(want) +
                               ", got " + std::to_string(cfg.delta));
  };

  switch (constraint) {
    case SpecialCase::D1Zero:
    case SpecialCase::D2Zero:
      // phi_1 = -+ phi_2; both behave as a scalar DKPO at omega_0.
      return CaseSummary{constraint, w0, {1, 2}, std::nullopt, false, std::nullopt,
                         "both components map onto the scalar problem at omega_0"};
    case SpecialCase::D1EqICD2:
      return CaseSummary{constraint, w2, {2}, -1, false, std::nullopt,
                         "phi_1 vanishes; field-free oscillator at reduced omega_2, S_z = -1"};
    case SpecialCase::D1EqMinusICD2:
      return CaseSummary{constraint, w1, {1}, +1, false, std::nullopt,
                         "phi_2 vanishes; field-free oscillator at increased omega_1, S_z = +1"};
    case SpecialCase::OmegaTildeEqOmega:
      require_delta(1.0);
      return CaseSummary{constraint, 2.0 * x, {1}, +1, true, 2,
                         "phi_1 oscillates at 2*omega with S_z = +1; phi_2 is a free particle"};
    case SpecialCase::OmegaTildeEqMinusOmega:
      require_delta(-1.0);
      return CaseSummary{constraint, 2.0 * x, {2}, -1, true, 1,
                         "phi_2 oscillates at 2*omega with S_z = -1; phi_1 is a free particle"};
  }
  throw invalid_case_error("unknown special case");
}

double nonrelativistic_energy(const EnergyLevel& level, const OscillatorConfig& cfg) {
  cfg.validate();
  if (level.branch != Branch::Plus)
    throw domain_error("non-relativistic limit defined for the positive branch only");
  const double e = level.value;  // E / mc^2
  return cfg.mass_energy * 0.5 * (e * e - 1.0);
}

}  // namespace dkpo
