#ifndef DKPO_INTMAT_HPP
#define DKPO_INTMAT_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "dkpo/errors.hpp"

namespace dkpo {

/// Dense square matrix with exact 64-bit integer entries. The algebra
/// module is integer-only so that the DKP identities are checked with
/// zero tolerance; no floating point enters here.
class IntMat {
 public:
  IntMat() = default;
  explicit IntMat(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, 0) {}

  static IntMat identity(int dim) {
    IntMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  int dim() const { return dim_; }

  std::int64_t& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
  std::int64_t operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

  friend IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.dim_ != y.dim_)
      throw structural_error("IntMat product: dimension mismatch " +
                             std::to_string(x.dim_) + " vs " + std::to_string(y.dim_));
    IntMat r(x.dim_);
    for (int i = 0; i < x.dim_; ++i)
      for (int k = 0; k < x.dim_; ++k) {
        const std::int64_t xik = x(i, k);
        if (xik == 0) continue;
        for (int j = 0; j < x.dim_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  friend IntMat operator+(const IntMat& x, const IntMat& y) {
    IntMat r = x;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
  }

  friend IntMat operator-(const IntMat& x, const IntMat& y) {
    IntMat r = x;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
    return r;
  }

  friend IntMat operator*(std::int64_t c, const IntMat& x) {
    IntMat r = x;
    for (auto& v : r.a_) v *= c;
    return r;
  }

  friend bool operator==(const IntMat& x, const IntMat& y) {
    return x.dim_ == y.dim_ && x.a_ == y.a_;
  }

  IntMat transposed() const {
    IntMat r(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (auto v : a_)
      if (v != 0) return false;
    return true;
  }

  int nonzero_count() const {
    int n = 0;
    for (auto v : a_) n += (v != 0);
    return n;
  }

  std::string to_string() const;

 private:
  int dim_ = 0;
  std::vector<std::int64_t> a_;
};

}  // namespace dkpo

#endif
