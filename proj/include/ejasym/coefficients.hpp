// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "ejasym/errors.hpp"
#include "ejasym/rational.hpp"
#include "ejasym/series.hpp"

namespace ejasym {

using QSeries = FormalSeries<mpq_class>;

namespace detail {

inline void require_exponential_p(const mpq_class& p) {
  if (p <= 1)
    throw InvalidInput("coefficient generator requires p > 1, got " +
                       p.get_str());
}

// Series in xi = 1/(kappa s) of
//   log e(beta s; g) = (beta s + g - 1/2) log(1 + g/(beta s)) - g.
// With u = g kappa / beta the constant term cancels and the xi^n
// coefficient (n >= 1) is (-1)^{n+1} u^n [ (g - 1/2)/n - (beta/kappa) u/(n+1) ].
inline QSeries e_log_series(const mpq_class& beta, const mpq_class& g,
                            const mpq_class& kappa, std::size_t order) {
  QSeries s(order);
  mpq_class u = g * kappa / beta;
  mpq_class upow = 1;
  mpq_class bk = beta / kappa;
  mpq_class gh = g - mpq_class(1, 2);
  for (std::size_t n = 1; n < order; ++n) {
    upow *= u;
    mpq_class t = gh / mpq_class(static_cast<long>(n)) -
                  bk * u / mpq_class(static_cast<long>(n + 1));
    if (n % 2 == 0) t = -t;
    s[n] = upow * t;
  }
  return s;
}

// Divergent scaled-gamma series Gamma*(z) ~ sum_k (-1)^k gamma_k z^{-k}
// evaluated on a series argument inv = 1/z (inv has zero constant term).
inline QSeries gstar_series(const QSeries& inv) {
  std::size_t order = inv.order();
  QSeries acc = QSeries::one(order);
  QSeries invpow = QSeries::one(order);
  auto gammas = stirling_coefficients(order);
  for (std::size_t k = 1; k < order; ++k) {
    invpow = invpow * inv;
    acc = acc + invpow.scaled(k % 2 == 0 ? gammas[k] : mpq_class(-gammas[k]));
  }
  return acc;
}

// Geometric series c0 * xi * 1/(1 + c1 xi).
inline QSeries scaled_geometric(const mpq_class& c0, const mpq_class& c1,
                                std::size_t order) {
  QSeries s(order);
  mpq_class t = c0;
  for (std::size_t n = 1; n < order; ++n) {
    s[n] = t;
    t *= -c1;
  }
  return s;
}

}  // namespace detail

// Elementary-factor part R(s) = e(ps; alpha) / [e(s; 1) e(kappa s; theta)]
// as a series in xi = 1/(kappa s), with alpha = 1 - w, theta = 1/2 - w.
inline QSeries series_R(const mpq_class& p, const mpq_class& w,
                        std::size_t order) {
  detail::require_exponential_p(p);
  mpq_class kappa = p - 1;
  mpq_class alpha = 1 - w;
  mpq_class theta = mpq_class(1, 2) - w;
  QSeries ex = detail::e_log_series(p, alpha, kappa, order) -
               detail::e_log_series(1, 1, kappa, order) -
               detail::e_log_series(kappa, theta, kappa, order);
  return ex.exponential();
}

// Scaled-gamma part G(s) = Gamma*(alpha + ps) / [Gamma*(1+s) Gamma*(kappa s
// + theta)] as a series in xi.
inline QSeries series_G(const mpq_class& p, const mpq_class& w,
                        std::size_t order) {
  detail::require_exponential_p(p);
  mpq_class kappa = p - 1;
  mpq_class alpha = 1 - w;
  mpq_class theta = mpq_class(1, 2) - w;
  QSeries inv_num =
      detail::scaled_geometric(kappa / p, alpha * kappa / p, order);
  QSeries inv_d1 = detail::scaled_geometric(kappa, kappa, order);
  QSeries inv_d2 = detail::scaled_geometric(1, theta, order);
  QSeries g_num = detail::gstar_series(inv_num);
  QSeries g_den = detail::gstar_series(inv_d1) * detail::gstar_series(inv_d2);
  return g_num * g_den.reciprocal();
}

// Expansion coefficients c_0..c_{M-1} (c_0 = 1): solve
// R(s) G(s) = sum_j c_j / (1 - kappa s - theta)_j by matching powers of xi.
// The inverse Pochhammer basis expands as
// 1/(1 - kappa s - theta)_j = (-xi)^j prod_{i<j} (1 - (1/2 + w + i) xi)^{-1}.
inline std::vector<mpq_class> expansion_coefficients(const mpq_class& p,
                                                     const mpq_class& w,
                                                     std::size_t M) {
  detail::require_exponential_p(p);
  if (M == 0) return {};
  QSeries lhs = series_R(p, w, M) * series_G(p, w, M);
  std::vector<QSeries> basis;
  basis.reserve(M);
  QSeries dinv = QSeries::one(M);
  for (std::size_t j = 0; j < M; ++j) {
    if (j > 0) {
      mpq_class root = mpq_class(1, 2) + w + static_cast<long>(j - 1);
      // multiply dinv by the geometric series of 1/(1 - root xi)
      QSeries geo(M);
      mpq_class t = 1;
      for (std::size_t n = 0; n < M; ++n) {
        geo[n] = t;
        t *= root;
      }
      dinv = dinv * geo;
    }
    // shift by xi^j and apply sign (-1)^j
    QSeries bj(M);
    for (std::size_t n = j; n < M; ++n)
      bj[n] = (j % 2 == 0) ? dinv[n - j] : mpq_class(-dinv[n - j]);
    basis.push_back(bj);
  }
  std::vector<mpq_class> c(M);
  for (std::size_t n = 0; n < M; ++n) {
    mpq_class acc = lhs[n];
    for (std::size_t j = 0; j < n; ++j) acc -= c[j] * basis[j][n];
    c[n] = (n % 2 == 0) ? acc : mpq_class(-acc);
  }
  return c;
}

// p = 2 closed form c_j = (w)_{2j} / (4^j j!).
inline std::vector<mpq_class> closed_form_p2(const mpq_class& w,
                                             std::size_t M) {
  std::vector<mpq_class> c(M);
  mpq_class num = 1;
  mpz_class denom = 1;
  for (std::size_t j = 0; j < M; ++j) {
    c[j] = num / mpq_class(denom);
    num *= (w + static_cast<long>(2 * j)) * (w + static_cast<long>(2 * j + 1));
    denom *= 4 * static_cast<long>(j + 1);
  }
  return c;
}

// Low-order coefficients in closed polynomial form (any p > 1, any w).
inline mpq_class c1_polynomial(const mpq_class& p, const mpq_class& w) {
  mpq_class num = 2 - 5 * p + 2 * p * p - 12 * w + 12 * p * w + 12 * w * w;
  return num / (24 * p);
}

inline mpq_class c2_polynomial(const mpq_class& p, const mpq_class& w) {
  mpq_class p2 = p * p, p3 = p2 * p, p4 = p2 * p2;
  mpq_class w2 = w * w, w3 = w2 * w, w4 = w2 * w2;
  mpq_class num = 4 + 28 * p - 87 * p2 + 28 * p3 + 4 * p4 + 48 * w -
                  216 * p * w + 24 * p2 * w + 144 * p3 * w - 96 * w2 -
                  120 * p * w2 + 480 * p2 * w2 - 96 * w3 + 480 * p * w3 +
                  144 * w4;
  return num / (1152 * p2);
}

// Process-wide coefficient cache; p = 2 takes the closed form.
inline std::vector<mpq_class> cached_coefficients(const mpq_class& p,
                                                  const mpq_class& w,
                                                  std::size_t M) {
  static std::mutex mu;
  static std::map<std::pair<mpq_class, mpq_class>, std::vector<mpq_class>>
      cache;
  std::lock_guard lk(mu);
  auto& entry = cache[{p, w}];
  if (entry.size() < M)
    entry = (p == 2) ? closed_form_p2(w, M) : expansion_coefficients(p, w, M);
  return {entry.begin(), entry.begin() + M};
}

}  // namespace ejasym
