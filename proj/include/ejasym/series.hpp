// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "ejasym/errors.hpp"

namespace ejasym {

// Dense truncated power series over an exact field F (used with mpq_class).
// All operations are coefficientwise-exact and truncate at the stored order.
template <class F>
class FormalSeries {
 public:
  explicit FormalSeries(std::size_t order) : c_(order) {}
  explicit FormalSeries(std::vector<F> coeffs) : c_(std::move(coeffs)) {}

  static FormalSeries one(std::size_t order) {
    FormalSeries s(order);
    if (order > 0) s.c_[0] = 1;
    return s;
  }

  std::size_t order() const { return c_.size(); }
  const F& operator[](std::size_t i) const { return c_[i]; }
  F& operator[](std::size_t i) { return c_[i]; }
  const std::vector<F>& coeffs() const { return c_; }

  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.order(); ++i)
      for (std::size_t j = 0; i + j < r.order(); ++j)
        r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
  }
  FormalSeries scaled(const F& s) const {
    FormalSeries r(order());
    for (std::size_t i = 0; i < order(); ++i) r.c_[i] = c_[i] * s;
    return r;
  }

  // 1/this; requires a unit constant term.
  FormalSeries reciprocal() const {
    if (c_.empty() || c_[0] == 0)
      throw InvalidInput("series reciprocal needs nonzero constant term");
    FormalSeries r(order());
    r.c_[0] = F(1) / c_[0];
    for (std::size_t n = 1; n < order(); ++n) {
      F acc(0);
      for (std::size_t m = 1; m <= n; ++m) acc += c_[m] * r.c_[n - m];
      r.c_[n] = -acc / c_[0];
    }
    return r;
  }

  // exp(this); requires zero constant term.
  FormalSeries exponential() const {
    if (!c_.empty() && c_[0] != 0)
      throw InvalidInput("series exponential needs zero constant term");
    FormalSeries r(order());
    if (order() == 0) return r;
    r.c_[0] = 1;
    for (std::size_t n = 1; n < order(); ++n) {
      F acc(0);
      for (std::size_t m = 1; m <= n; ++m)
        acc += F(static_cast<long>(m)) * c_[m] * r.c_[n - m];
      r.c_[n] = acc / F(static_cast<long>(n));
    }
    return r;
  }

  // log(this); requires unit constant term.
  FormalSeries logarithm() const {
    if (c_.empty() || c_[0] != 1)
      throw InvalidInput("series logarithm needs unit constant term");
    FormalSeries r(order());
    for (std::size_t n = 1; n < order(); ++n) {
      F acc(0);
      for (std::size_t m = 1; m < n; ++m)
        acc += F(static_cast<long>(m)) * r.c_[m] * c_[n - m];
      r.c_[n] = c_[n] - acc / F(static_cast<long>(n));
    }
    return r;
  }

  // this(lambda * x): substitute a scalar multiple of the variable.
  FormalSeries compose_scalar(const F& lambda) const {
    FormalSeries r(order());
    F p(1);
    for (std::size_t i = 0; i < order(); ++i) {
      r.c_[i] = c_[i] * p;
      p *= lambda;
    }
    return r;
  }

 private:
  std::vector<F> c_;
};

}  // namespace ejasym
