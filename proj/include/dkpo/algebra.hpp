#ifndef DKPO_ALGEBRA_HPP
#define DKPO_ALGEBRA_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dkpo/intmat.hpp"

namespace dkpo {

enum class Sector { Scalar, Vector };

const char* sector_name(Sector s);

/// The three beta matrices of one DKP sector with the (2+1)-d Lorentz
/// metric diag(+1,-1,-1). Entries are exact integers in {-1,0,+1}.
struct BetaRepresentation {
  Sector sector = Sector::Scalar;
  std::array<IntMat, 3> beta;          // beta^0, beta^1, beta^2
  int dim = 0;                         // 4 (scalar) or 6 (vector)
  std::array<std::int64_t, 3> metric = {1, -1, -1};
};

/// eta^0 = 2 (beta^0)^2 - 1, the matrix entering the oscillator coupling.
struct Eta0 {
  IntMat matrix;
};

/// One violated index triple of the trilinear algebra.
struct AlgebraFailure {
  int mu, lambda, nu;
  IntMat difference;  // L - R
};

struct AlgebraReport {
  int triples_checked = 0;
  std::vector<AlgebraFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Build the 4x4 scalar or 6x6 vector representation.
BetaRepresentation build_representation(Sector sector);

/// Check beta^mu beta^lam beta^nu + beta^nu beta^lam beta^mu
///   = beta^mu g^{lam nu} + beta^nu g^{lam mu}
/// over all 27 index triples, in exact integer arithmetic.
AlgebraReport check_algebra(const BetaRepresentation& rep);

Eta0 build_eta0(const BetaRepresentation& rep);

/// Copy of `rep` with one entry replaced; used by perturbation tests and
/// the CLI's --perturb mode.
BetaRepresentation perturb_entry(const BetaRepresentation& rep, int which_beta,
                                 int i, int j, std::int64_t new_value);

}  // namespace dkpo

#endif
