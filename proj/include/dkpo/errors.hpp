#ifndef DKPO_ERRORS_HPP
#define DKPO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dkpo {

/// Base class for all dkpo errors. category() feeds the CLI's
/// "error[category]:" prefix.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
  virtual const char* category() const noexcept { return "error"; }
};

/// A formula was evaluated outside its mathematical domain
/// (negative radicand, invalid parameter range, ...).
class domain_error : public error {
 public:
  explicit domain_error(const std::string& msg, double offending_value = 0.0)
      : error(msg), value(offending_value) {}
  const char* category() const noexcept override { return "domain"; }
  double value;  // e.g. the negative radicand
};

/// Closed-form partition function evaluated at or past its pole.
class divergence_error : public domain_error {
 public:
  divergence_error(const std::string& msg, int pole_order_)
      : domain_error(msg), pole_order(pole_order_) {}
  const char* category() const noexcept override { return "divergence"; }
  int pole_order;
};

/// Quadrature, series or derivative estimation failed to converge.
class numerical_error : public error {
 public:
  explicit numerical_error(const std::string& msg, double achieved_tol = 0.0)
      : error(msg), achieved(achieved_tol) {}
  const char* category() const noexcept override { return "numerical"; }
  double achieved;
};

/// Special-case classifier: requested constraint incompatible with config.
class invalid_case_error : public error {
 public:
  using error::error;
  const char* category() const noexcept override { return "invalid-case"; }
};

/// Malformed value objects (dimension mismatch among beta matrices, ...).
class structural_error : public error {
 public:
  using error::error;
  const char* category() const noexcept override { return "structural"; }
};

}  // namespace dkpo

#endif
