#include "dkpo/algebra.hpp"

#include <sstream>

namespace dkpo {

std::string IntMat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "\n";
  }
  return os.str();
}

const char* sector_name(Sector s) {
  return s == Sector::Scalar ? "scalar" : "vector";
}

namespace {

IntMat from_entries(int dim, std::initializer_list<std::array<std::int64_t, 3>> entries) {
  IntMat m(dim);
  for (const auto& e : entries) m(static_cast<int>(e[0]), static_cast<int>(e[1])) = e[2];
  return m;
}

}  // namespace

BetaRepresentation build_representation(Sector sector) {
  BetaRepresentation rep;
  rep.sector = sector;
  if (sector == Sector::Scalar) {
    rep.dim = 4;
    rep.beta[0] = from_entries(4, {{0, 3, 1}, {3, 0, 1}});
    rep.beta[1] = from_entries(4, {{1, 3, 1}, {3, 1, -1}});
    rep.beta[2] = from_entries(4, {{2, 3, 1}, {3, 2, -1}});
  } else {
    rep.dim = 6;
    rep.beta[0] = from_entries(6, {{0, 3, -1}, {1, 4, -1}, {3, 0, -1}, {4, 1, -1}});
    rep.beta[1] = from_entries(6, {{0, 5, 1}, {2, 4, 1}, {4, 2, -1}, {5, 0, -1}});
    rep.beta[2] = from_entries(6, {{1, 5, 1}, {2, 3, -1}, {3, 2, 1}, {5, 1, -1}});
  }
  return rep;
}

AlgebraReport check_algebra(const BetaRepresentation& rep) {
  for (const auto& b : rep.beta)
    if (b.dim() != rep.dim)
      throw structural_error("beta matrix dimension " + std::to_string(b.dim()) +
                             " does not match representation dimension " +
                             std::to_string(rep.dim));

  AlgebraReport report;
  for (int mu = 0; mu < 3; ++mu)
    for (int lam = 0; lam < 3; ++lam)
      for (int nu = 0; nu < 3; ++nu) {
        ++report.triples_checked;
        const IntMat lhs = rep.beta[mu] * rep.beta[lam] * rep.beta[nu] +
                           rep.beta[nu] * rep.beta[lam] * rep.beta[mu];
        // Diagonal metric: g^{lam nu} = metric[lam] when lam == nu, else 0.
        const std::int64_t g_ln = (lam == nu) ? rep.metric[lam] : 0;
        const std::int64_t g_lm = (lam == mu) ? rep.metric[lam] : 0;
        const IntMat rhs = g_ln * rep.beta[mu] + g_lm * rep.beta[nu];
        const IntMat diff = lhs - rhs;
        if (!diff.is_zero()) report.failures.push_back({mu, lam, nu, diff});
      }
  return report;
}

Eta0 build_eta0(const BetaRepresentation& rep) {
  const IntMat sq = rep.beta[0] * rep.beta[0];
  return Eta0{2 * sq - IntMat::identity(rep.dim)};
}

BetaRepresentation perturb_entry(const BetaRepresentation& rep, int which_beta,
                                 int i, int j, std::int64_t new_value) {
  if (which_beta < 0 || which_beta > 2 || i < 0 || i >= rep.dim || j < 0 || j >= rep.dim)
    throw structural_error("perturb_entry: index out of range");
  BetaRepresentation out = rep;
  out.beta[which_beta](i, j) = new_value;
  return out;
}

}  // namespace dkpo
