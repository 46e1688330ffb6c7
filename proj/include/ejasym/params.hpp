// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <vector>

#include "ejasym/errors.hpp"
#include "ejasym/precision.hpp"
#include "ejasym/special.hpp"

namespace ejasym {

// Small-a behaviour class of the series for given (p, w).
enum class RegimeKind {
  Convergent,     // 0 < p < 1: algebraic expansion converges for all a
  BoundaryP1,     // p = 1: algebraic expansion converges for |a| < 2 pi
  AlgebraicOnly,  // p > 1, no exponential expansion implemented
  EvenEven,       // p, w even integers >= 2: exponential expansions available
};

struct Regime {
  RegimeKind kind;
  // w = p M + 1 for integer M >= 0 merges a Gamma pole with the zeta pole;
  // the leading term then carries log(a) and digamma corrections.
  bool has_double_pole = false;
  long double_pole_M = 0;
};

inline Regime classify(const mpq_class& p, const mpq_class& w) {
  if (p <= 0) throw InvalidInput("p must be positive, got " + p.get_str());
  Regime r{};
  if (p < 1) {
    r.kind = RegimeKind::Convergent;
  } else if (p == 1) {
    r.kind = RegimeKind::BoundaryP1;
  } else {
    bool even_p = p.get_den() == 1 && p >= 2 && mpz_even_p(p.get_num_mpz_t());
    bool even_w = w.get_den() == 1 && w >= 2 && mpz_even_p(w.get_num_mpz_t());
    r.kind = (even_p && even_w) ? RegimeKind::EvenEven
                                : RegimeKind::AlgebraicOnly;
  }
  if (w >= 1) {
    mpq_class M = (w - 1) / p;
    if (M.get_den() == 1) {
      r.has_double_pole = true;
      r.double_pole_M = M.get_num().get_si();
    }
  }
  return r;
}

// Quantities entering the exponentially small expansions (p > 1). Exact
// rationals wherever the defining expressions are rational; X and chi follow
// the principal branch for complex a.
struct DerivedParams {
  mpq_class p, w;
  mpq_class kappa;  // p - 1
  mpq_class q;      // p / kappa (conjugate exponent: 1/p + 1/q = 1)
  mpq_class s0;     // (w - 1) / p
  mpq_class theta;  // 1/2 - w
  long K = 0;       // algebraic k-sum runs k = 0..K, K = floor(w/p)
  long N = 0;       // number of oscillatory expansions (nearest int to p/4)
  long p_star = 2;  // 4N + 2
  bool hat = false; // p == p_star: extra non-oscillatory expansion
  long m = 0;       // w/2 when w is a positive even integer, else 0
  BigReal h;        // p^{-p}
  BigReal A;        // sqrt(2 pi) kappa^{1/2 - theta} p^{theta}
  BigComplex a;
  BigComplex chi;   // (2 pi)^p / a
  BigComplex X;     // kappa (h chi)^{1/kappa}
  std::vector<mpq_class> psi;  // psi[r] = (p/2 - 2r - 1)/kappa; psi[N] = 0

  // lambda_j = 1 + (w + p (j - 1/2)) / kappa
  mpq_class lambda(long j) const {
    return 1 + (w + p * (mpq_class(2 * j - 1, 2))) / kappa;
  }
};

inline void require_sector(const BigComplex& a) {
  if (a.is_zero() || a.real().sgn() <= 0)
    throw SectorError("a must satisfy Re(a) > 0 (|arg a| < pi/2)");
}

inline DerivedParams derive(const mpq_class& p, const mpq_class& w,
                            const BigComplex& a, const PrecisionCtx& ctx) {
  if (p <= 1)
    throw InvalidInput("derived parameters require p > 1, got " + p.get_str());
  require_sector(a);
  const mpfr_prec_t prec = ctx.bits();
  DerivedParams d;
  d.p = p;
  d.w = w;
  d.kappa = p - 1;
  d.q = p / d.kappa;
  d.s0 = (w - 1) / p;
  d.theta = mpq_class(1, 2) - w;
  mpq_class kq = w / p;
  d.K = detail::floor_q(kq).get_si();
  // nearest integer to p/4, half-integers rounding down: ceil((p-2)/4)
  mpz_class Nz;
  mpq_class pm2 = (p - 2) / 4;
  mpz_cdiv_q(Nz.get_mpz_t(), pm2.get_num_mpz_t(), pm2.get_den_mpz_t());
  d.N = std::max(0L, Nz.get_si());
  d.p_star = 4 * d.N + 2;
  d.hat = (p == d.p_star);
  if (w.get_den() == 1 && w >= 2 && mpz_even_p(w.get_num_mpz_t()))
    d.m = w.get_num().get_si() / 2;
  BigReal pr(p, prec);
  d.h = pow(pr, BigReal(-p, prec));
  BigReal two_pi = const_pi(prec) * 2;
  d.A = sqrt(two_pi) * pow(BigReal(d.kappa, prec),
                           BigReal(mpq_class(1, 2) - d.theta, prec)) *
        pow(pr, BigReal(d.theta, prec));
  d.a = a;
  BigComplex two_pi_p(pow(two_pi, BigReal(p, prec)), BigReal(prec));
  d.chi = two_pi_p / a;
  d.X = pow(BigComplex(d.h) * d.chi, BigReal(1 / d.kappa, prec)) *
        BigReal(d.kappa, prec);
  d.psi.resize(d.N + 1);
  for (long r = 0; r < d.N; ++r)
    d.psi[r] = (p / 2 - 2 * r - 1) / d.kappa;
  d.psi[d.N] = 0;
  return d;
}

}  // namespace ejasym
