// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "ejasym/coefficients.hpp"
#include "ejasym/errors.hpp"
#include "ejasym/params.hpp"
#include "ejasym/precision.hpp"
#include "ejasym/special.hpp"

namespace ejasym {

struct ExpTerm {
  long index;  // k for algebraic terms (-1 = leading gamma/log term),
               // j for expansion terms, n for the real-variable resummation
  BigComplex value;
};

struct SeriesBlock {
  std::vector<ExpTerm> terms;
  BigComplex total;
  BigReal remainder_estimate;  // magnitude of the first omitted nonzero term
};

struct ExponentialBlock {
  long r = 0;
  bool hat = false;
  long j0 = -1;  // last included coefficient index
  std::vector<ExpTerm> terms;
  BigComplex total;
  BigReal remainder_estimate;
  bool dropped = false;  // excluded from the assembled total
};

namespace detail {

inline BigComplex int_pow(const BigComplex& z, long k, mpfr_prec_t prec) {
  BigComplex r(BigReal(1L, prec), BigReal(prec));
  for (long i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace detail

// Leading term of the algebraic expansion: (1/p) Gamma((1-w)/p) a^{(w-1)/p},
// replaced by its merged gamma/zeta-pole value
//   ((-a)^M / M!) [euler_const + psi(M+1)/p - log(a)/p]
// when w = pM + 1 puts the Gamma pole on a zeta pole.
inline BigComplex j_term(const mpq_class& p, const mpq_class& w,
                         const BigComplex& a, const PrecisionCtx& ctx) {
  if (p <= 0) throw InvalidInput("p must be positive");
  require_sector(a);
  const mpfr_prec_t prec = ctx.bits();
  Regime reg = classify(p, w);
  if (reg.has_double_pole) {
    long M = reg.double_pole_M;
    BigReal invp = BigReal(1L, prec) / BigReal(p, prec);
    BigReal re_part = euler_const(ctx) + digamma(mpq_class(M + 1), ctx) * invp;
    BigComplex base = BigComplex(re_part, BigReal(prec)) -
                      log(a) * invp;
    BigComplex coef = detail::int_pow(-a, M, prec) /
                      BigReal(mpq_class(factorial_z(M)), prec);
    return coef * base;
  }
  BigReal g = gamma_fn((1 - w) / p, ctx);
  BigReal s0(mpq_class((w - 1) / p), prec);
  return pow(a, s0) * (g / BigReal(p, prec));
}

namespace detail {

// k-th algebraic term (-1)^k zeta(w - kp) a^k / k!.
inline BigComplex algebraic_term(const mpq_class& p, const mpq_class& w,
                                 const BigComplex& apow_k, long k,
                                 const PrecisionCtx& ctx) {
  BigReal z = riemann_zeta(w - k * p, ctx);
  BigComplex t = apow_k * (z / BigReal(mpq_class(factorial_z(k)), ctx.bits()));
  return (k % 2 == 0) ? t : -t;
}

// First nonzero omitted-term magnitude, scanning a few k past the cut.
inline BigReal omitted_magnitude(const mpq_class& p, const mpq_class& w,
                                 const BigComplex& a, long from_k,
                                 long skip_k, const PrecisionCtx& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  BigReal absa = abs(a);
  for (long k = from_k; k < from_k + 16; ++k) {
    if (k == skip_k) continue;
    mpq_class s = w - k * p;
    if (s == 1) continue;
    BigReal z = riemann_zeta(s, ctx);
    if (z.is_zero()) continue;
    return abs(z) * pow(absa, k) / BigReal(mpq_class(factorial_z(k)), prec);
  }
  return BigReal(prec);  // all scanned terms vanish
}

}  // namespace detail

// Algebraic part of the small-a expansion:
//   J + sum_k' (-1)^k zeta(w - kp) a^k / k!
// (prime: the k hitting the merged pole is absorbed into J). Convergent for
// 0 < p < 1; convergent for p = 1 when |a| < 2 pi; truncated asymptotic
// otherwise. `max_terms` overrides the k-sum cutoff when positive.
inline SeriesBlock algebraic_part(const mpq_class& p, const mpq_class& w,
                                  const BigComplex& a, const PrecisionCtx& ctx,
                                  long max_terms = -1) {
  Regime reg = classify(p, w);
  require_sector(a);
  const mpfr_prec_t prec = ctx.bits();
  long skip_k = reg.has_double_pole ? reg.double_pole_M : -1;

  SeriesBlock blk;
  BigComplex J = j_term(p, w, a, ctx);
  blk.terms.push_back({-1, J});
  blk.total = J;
  blk.remainder_estimate = BigReal(prec);

  BigComplex apow(BigReal(1L, prec), BigReal(prec));
  if (reg.kind == RegimeKind::Convergent || reg.kind == RegimeKind::BoundaryP1) {
    if (reg.kind == RegimeKind::BoundaryP1) {
      BigReal two_pi = const_pi(prec) * 2;
      if (abs(a) >= two_pi)
        throw ConvergenceError("p = 1 expansion requires |a| < 2 pi");
    }
    BigReal floor = pow10(-(ctx.total_digits() + 2), prec);
    long cap = max_terms > 0 ? max_terms : 200000;
    int consecutive = 0;
    for (long k = 0; k < cap; ++k) {
      if (k != skip_k) {
        BigComplex t = detail::algebraic_term(p, w, apow, k, ctx);
        blk.terms.push_back({k, t});
        blk.total += t;
        BigReal scale = max(BigReal(1L, prec), abs(blk.total));
        if (abs(t) < floor * scale) {
          if (++consecutive >= 4 && k >= 4) {
            blk.remainder_estimate =
                detail::omitted_magnitude(p, w, a, k + 1, skip_k, ctx);
            return blk;
          }
        } else {
          consecutive = 0;
        }
      }
      apow = apow * a;
    }
    throw ConvergenceError("algebraic k-sum did not reach tolerance");
  }

  long cut;
  if (max_terms > 0) {
    cut = max_terms;
  } else if (reg.kind == RegimeKind::EvenEven) {
    mpq_class kq = w / p;
    cut = detail::floor_q(kq).get_si() + 1;  // k = 0..K
  } else {
    // smallest integer exceeding s0 + 3/2 keeps the remainder o(a^{s0})
    mpq_class t = (w - 1) / p + mpq_class(3, 2);
    cut = detail::floor_q(t).get_si() + 1;
    if (cut < 1) cut = 1;
  }
  for (long k = 0; k < cut; ++k) {
    if (k != skip_k) {
      BigComplex t = detail::algebraic_term(p, w, apow, k, ctx);
      blk.terms.push_back({k, t});
      blk.total += t;
    }
    apow = apow * a;
  }
  if (reg.kind != RegimeKind::EvenEven)
    blk.remainder_estimate = detail::omitted_magnitude(p, w, a, cut, skip_k, ctx);
  return blk;
}

// Algebraic expansion of S_p(a; -w) for w >= 0 (negative-order series):
//   (1/p) Gamma((1+w)/p) a^{-(1+w)/p} + sum_{k<n_terms} (-1)^k zeta(-w-kp) a^k/k!
inline SeriesBlock negative_w_expansion(const mpq_class& p, const mpq_class& w,
                                        const BigComplex& a, long n_terms,
                                        const PrecisionCtx& ctx) {
  if (p < 1) throw InvalidInput("negative-order expansion requires p >= 1");
  if (w < 0) throw InvalidInput("negative-order expansion takes w >= 0");
  require_sector(a);
  const mpfr_prec_t prec = ctx.bits();
  SeriesBlock blk;
  BigReal g = gamma_fn((1 + w) / p, ctx);
  BigComplex lead =
      pow(a, BigReal(mpq_class(-(1 + w) / p), prec)) * (g / BigReal(p, prec));
  blk.terms.push_back({-1, lead});
  blk.total = lead;
  BigComplex apow(BigReal(1L, prec), BigReal(prec));
  for (long k = 0; k < n_terms; ++k) {
    BigComplex t = detail::algebraic_term(p, -w, apow, k, ctx);
    blk.terms.push_back({k, t});
    blk.total += t;
    apow = apow * a;
  }
  blk.remainder_estimate =
      detail::omitted_magnitude(p, -w, a, n_terms, -1, ctx);
  return blk;
}

// Normalized remainder series S^_q(z; lambda) = sum_{n>=1} e^{-z(n^q-1)} n^{-lambda},
// Re z > 0, q > 1. The n = 1 term is exactly 1; the factor e^{-z} common to
// all terms of S_q is kept outside so that only O(1) quantities are summed.
inline BigComplex s_q_hat(const mpq_class& q, const BigComplex& z,
                          const mpq_class& lam, const PrecisionCtx& ctx,
                          long n_max = -1) {
  if (q <= 1) throw InvalidInput("s_q_hat requires q > 1");
  if (z.real().sgn() <= 0)
    throw SectorError("s_q_hat requires Re(z) > 0");
  const mpfr_prec_t prec = ctx.bits();
  BigReal x = z.real();
  BigReal qr(q, prec), lamr(lam, prec);
  BigComplex acc(BigReal(1L, prec), BigReal(prec));
  BigReal target = pow10(-(ctx.total_digits() + 2), prec);
  BigReal one(1L, prec);
  for (long n = 2; n < 100000; ++n) {
    if (n_max > 0 && n > n_max) return acc;
    BigReal np = pow(BigReal(n, prec), qr);
    BigComplex t = exp(z * (one - np)) * pow(BigReal(n, prec), -lamr);
    acc += t;
    if (n_max > 0) continue;
    // certified tail: per-step decay ratio is monotone for q > 1
    BigReal g1 = pow(BigReal(n + 1, prec), qr);
    BigReal g2 = pow(BigReal(n + 2, prec), qr);
    BigReal rho = exp(-x * (g2 - g1));
    if (lam < 0)
      rho *= pow(BigReal(n + 2, prec) / BigReal(n + 1, prec), -lamr);
    if (rho < one) {
      BigReal next_mag = exp(-x * (g1 - one)) * pow(BigReal(n + 1, prec), -lamr);
      BigReal tail = next_mag / (one - rho);
      if (tail <= target * max(one, abs(acc))) return acc;
    }
  }
  throw ConvergenceError("s_q_hat did not reach tolerance");
}

// One exponentially small expansion E_r (oscillatory pair of rotated
// arguments X e^{-+ i pi psi_r}) or E^_N (hat = true: single argument X),
// truncated after j_cut coefficient terms. `cs` may be any coefficient
// table; pass the generated table for the standard expansions or a custom
// override (e.g. {1}) to realize theta-function identities.
inline ExponentialBlock exponential_block(const DerivedParams& d,
                                          const std::vector<mpq_class>& cs,
                                          long r, bool hat, long j_cut,
                                          long n_max, const PrecisionCtx& ctx) {
  if (!hat && (r < 0 || r >= d.N))
    throw InvalidInput("expansion index r out of range");
  if (j_cut < 1) throw InvalidInput("expansion truncation must be >= 1");
  if (static_cast<std::size_t>(j_cut) > cs.size())
    throw InvalidInput("coefficient table shorter than truncation");
  const mpfr_prec_t prec = ctx.bits();
  ExponentialBlock blk;
  blk.r = r;
  blk.hat = hat;
  blk.j0 = j_cut - 1;

  BigReal two_pi = const_pi(prec) * 2;
  BigReal pref = pow(two_pi, BigReal(d.w, prec)) * d.A /
                 (two_pi * BigReal(d.kappa, prec));
  if (d.m % 2 == 1) pref = -pref;

  mpq_class psi = hat ? mpq_class(0) : d.psi[r];
  BigComplex rot(cos_pi(psi, prec), sin_pi(psi, prec));
  BigComplex zm = d.X * rot.conj();  // X e^{-i pi psi}
  BigComplex zp = d.X * rot;         // X e^{+i pi psi}
  bool fold_conjugate = !hat && d.X.is_real() && d.a.is_real();

  BigComplex em = exp(-zm), ep = exp(-zp);
  BigReal theta_r(d.theta, prec);
  for (long j = 0; j < j_cut; ++j) {
    mpq_class lam = d.lambda(j);
    BigReal cj(cs[j], prec);
    BigReal e = theta_r - j;
    BigComplex v;
    if (hat) {
      v = pow(d.X, e) * em * s_q_hat(d.q, zm, lam, ctx, n_max);
    } else if (fold_conjugate) {
      BigComplex b = pow(zm, e) * em * s_q_hat(d.q, zm, lam, ctx, n_max);
      v = BigComplex(b.real() * 2, BigReal(prec));
    } else {
      v = pow(zm, e) * em * s_q_hat(d.q, zm, lam, ctx, n_max) +
          pow(zp, e) * ep * s_q_hat(d.q, zp, lam, ctx, n_max);
    }
    BigComplex val = v * (pref * cj);
    if (j % 2 == 1) val = -val;
    blk.terms.push_back({j, val});
    blk.total += val;
  }
  // order estimate for the first omitted term
  BigReal cnext(cs[static_cast<std::size_t>(j_cut) < cs.size()
                       ? j_cut
                       : cs.size() - 1],
                prec);
  BigReal decay = hat ? exp(-d.X.real())
                      : exp(-min(zm.real(), zp.real())) * 2;
  blk.remainder_estimate = abs(pref) * abs(cnext) *
                           pow(abs(d.X), theta_r - j_cut) * decay;
  return blk;
}

// All exponentially small expansions of the even/even case at truncation M:
// E_0..E_{N-1} plus, when p = 4N + 2, the non-oscillatory E^_N.
inline std::vector<ExponentialBlock> rotated_exponential(
    const mpq_class& p, const mpq_class& w, const BigComplex& a, long M,
    const PrecisionCtx& ctx, long n_max = -1) {
  Regime reg = classify(p, w);
  if (reg.kind != RegimeKind::EvenEven)
    throw RegimeError("exponential expansions need even integers p, w >= 2");
  DerivedParams d = derive(p, w, a, ctx);
  std::vector<mpq_class> cs =
      cached_coefficients(p, w, static_cast<std::size_t>(M) + 1);
  std::vector<ExponentialBlock> blocks;
  for (long r = 0; r < d.N; ++r)
    blocks.push_back(exponential_block(d, cs, r, false, M, n_max, ctx));
  if (d.hat)
    blocks.push_back(exponential_block(d, cs, d.N, true, M, n_max, ctx));
  return blocks;
}

// Real-variable form of the same expansions (a > 0): each block is summed
// over n with cosine-folded phases,
//   E_r = pref sum_n n^{w-1} X_n^theta e^{-X_n cos(pi psi_r)} Upsilon_{n,r},
//   Upsilon_{n,r} = sum_{j<M} (-1)^j c_j X_n^{-j}
//                   cos[X_n sin(pi psi_r) + pi (j - theta) psi_r],
// with pref = (-1)^m (2 pi)^w A/(pi kappa), halved for the hat block.
// Terms are indexed by n.
inline std::vector<ExponentialBlock> folded_exponential(
    const mpq_class& p, const mpq_class& w, const BigReal& a, long M,
    long n_max, const PrecisionCtx& ctx) {
  Regime reg = classify(p, w);
  if (reg.kind != RegimeKind::EvenEven)
    throw RegimeError("exponential expansions need even integers p, w >= 2");
  if (a.sgn() <= 0) throw SectorError("real-variable form requires a > 0");
  const mpfr_prec_t prec = ctx.bits();
  DerivedParams d = derive(p, w, BigComplex(a), ctx);
  std::vector<mpq_class> cs =
      cached_coefficients(p, w, static_cast<std::size_t>(M) + 1);
  BigReal X = d.X.real();
  BigReal two_pi = const_pi(prec) * 2;
  BigReal pi = const_pi(prec);
  BigReal csum(prec);
  for (long j = 0; j < M; ++j) csum += abs(BigReal(cs[j], prec));
  BigReal target = pow10(-(ctx.total_digits() + 2), prec);
  BigReal one(1L, prec);

  std::vector<ExponentialBlock> blocks;
  long count = d.N + (d.hat ? 1 : 0);
  for (long idx = 0; idx < count; ++idx) {
    bool hat = (idx == d.N);
    mpq_class psi = hat ? mpq_class(0) : d.psi[idx];
    BigReal pref = pow(two_pi, BigReal(d.w, prec)) * d.A /
                   (pi * BigReal(d.kappa, prec));
    if (hat) pref /= 2;
    if (d.m % 2 == 1) pref = -pref;
    BigReal sinp = sin_pi(psi, prec);
    BigReal cosp = cos_pi(psi, prec);
    ExponentialBlock blk;
    blk.r = idx;
    blk.hat = hat;
    blk.j0 = M - 1;
    for (long n = 1; n < 100000; ++n) {
      BigReal Xn = X * pow(BigReal(n, prec), BigReal(d.q, prec));
      BigReal ups(prec);
      for (long j = 0; j < M; ++j) {
        BigReal phase = Xn * sinp + pi * BigReal((j - d.theta) * psi, prec);
        BigReal t = BigReal(cs[j], prec) * pow(Xn, -j) * cos(phase);
        ups += (j % 2 == 0) ? t : -t;
      }
      BigReal factor = pref * pow(BigReal(n, prec), BigReal(w - 1, prec)) *
                       pow(Xn, BigReal(d.theta, prec)) * exp(-Xn * cosp);
      BigReal term = factor * ups;
      blk.terms.push_back({n, BigComplex(term, BigReal(prec))});
      blk.total += BigComplex(term, BigReal(prec));
      if (n_max > 0 && n >= n_max) break;
      if (n_max <= 0) {
        BigReal envelope = abs(factor) * csum;
        if (envelope < target * max(one, abs(blk.total))) break;
      }
    }
    BigReal cnext(cs[static_cast<std::size_t>(M) < cs.size() ? M : cs.size() - 1],
                  prec);
    blk.remainder_estimate = abs(pref) * abs(cnext) *
                             pow(X, BigReal(d.theta, prec) - M) * exp(-X * cosp);
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

// Minimum over j < j_cut of the single-rotation term magnitude
//   |pref c_j z^{theta-j} e^{-z} S^_q(z; lambda_j)|,  z = X e^{-i pi psi_r},
// i.e. the optimal-truncation error scale of one expansion before the
// conjugate pair is folded.
inline BigReal min_branch_magnitude(const DerivedParams& d,
                                    const std::vector<mpq_class>& cs, long r,
                                    bool hat, long j_cut,
                                    const PrecisionCtx& ctx) {
  if (j_cut < 1 || static_cast<std::size_t>(j_cut) > cs.size())
    throw InvalidInput("truncation out of range");
  const mpfr_prec_t prec = ctx.bits();
  BigReal two_pi = const_pi(prec) * 2;
  BigReal pref = abs(pow(two_pi, BigReal(d.w, prec)) * d.A /
                     (two_pi * BigReal(d.kappa, prec)));
  mpq_class psi = hat ? mpq_class(0) : d.psi[r];
  BigComplex rot(cos_pi(psi, prec), sin_pi(psi, prec));
  BigComplex zm = d.X * rot.conj();
  BigReal theta_r(d.theta, prec);
  BigReal best(prec);
  for (long j = 0; j < j_cut; ++j) {
    BigReal m = pref * abs(BigReal(cs[j], prec)) *
                abs(pow(zm, theta_r - j) * exp(-zm) *
                    s_q_hat(d.q, zm, d.lambda(j), ctx));
    if (j == 0 || m < best) best = m;
  }
  return best;
}

// Deterministic truncation index: the coefficient envelope
// m_j = |c_j| |X|^{theta - j} decreases to a first local minimum at j_env
// (ties resolved toward smaller j); the returned index is j_env - 1, the
// last term kept strictly before the minimum. Throws NoMinimumError when the
// envelope is still decreasing at M_max.
inline long optimal_truncation(const mpq_class& p, const mpq_class& w,
                               const BigComplex& a, long r,
                               const PrecisionCtx& ctx, long M_max = 400) {
  (void)r;  // the envelope metric is shared by all expansions
  Regime reg = classify(p, w);
  if (reg.kind != RegimeKind::EvenEven)
    throw RegimeError("optimal truncation applies to even/even expansions");
  DerivedParams d = derive(p, w, a, ctx);
  BigReal absX = abs(d.X);
  BigReal theta_r(d.theta, BigReal::kMinPrec);
  long M = 48;
  for (;;) {
    if (M > M_max + 2) M = M_max + 2;
    std::vector<mpq_class> cs = cached_coefficients(p, w, M);
    BigReal prev = abs(BigReal(cs[0], BigReal::kMinPrec)) * pow(absX, theta_r);
    for (long j = 1; j < M; ++j) {
      BigReal mj =
          abs(BigReal(cs[j], BigReal::kMinPrec)) * pow(absX, theta_r - j);
      if (mj >= prev) {
        long j_env = j - 1;
        return j_env > 0 ? j_env - 1 : 0;
      }
      prev = mj;
    }
    if (M >= M_max + 2)
      throw NoMinimumError("coefficient envelope still decreasing", M_max);
    M *= 2;
  }
}

struct EvalOptions {
  long M = -1;                       // per-expansion truncation; -1 = optimal
  bool include_exponentials = true;
  long n_max = -1;                   // inner n-sum cap; -1 = tolerance-driven
};

struct EvalResult {
  Regime regime;
  SeriesBlock algebraic;
  std::vector<ExponentialBlock> exponential;
  BigComplex exponential_total;
  BigComplex total;
  BigReal remainder_estimate;
};

// Full small-a evaluation: algebraic part plus, in the even/even regime,
// the optimally truncated exponential expansions. Expansions whose leading
// term is already below the smallest retained term of the dominant
// expansion are dropped (they cannot improve the optimal-truncation error).
inline EvalResult evaluate(const mpq_class& p, const mpq_class& w,
                           const BigComplex& a, const PrecisionCtx& ctx,
                           const EvalOptions& opts = {}) {
  const mpfr_prec_t prec = ctx.bits();
  EvalResult res;
  res.regime = classify(p, w);
  res.algebraic = algebraic_part(p, w, a, ctx);
  res.exponential_total = BigComplex(prec);
  res.remainder_estimate = res.algebraic.remainder_estimate;
  if (res.regime.kind == RegimeKind::EvenEven && opts.include_exponentials) {
    long j_cut;
    if (opts.M > 0) {
      j_cut = opts.M;
    } else {
      try {
        j_cut = optimal_truncation(p, w, a, 0, ctx) + 1;
      } catch (const NoMinimumError& e) {
        j_cut = e.cap;
      }
    }
    res.exponential = rotated_exponential(p, w, a, j_cut, ctx, opts.n_max);
    // single-branch envelope floor of the dominant expansion; folded term
    // values can dip below it through cancellation and would over-retain
    const auto& b0 = res.exponential[0];
    DerivedParams d = derive(p, w, a, ctx);
    auto cs = cached_coefficients(p, w, b0.terms.size() + 1);
    BigReal min_e0 = min_branch_magnitude(
        d, cs, 0, b0.hat, static_cast<long>(b0.terms.size()), ctx);
    BigReal rem = max(min_e0, res.exponential[0].remainder_estimate);
    for (std::size_t i = 1; i < res.exponential.size(); ++i) {
      auto& blk = res.exponential[i];
      if (abs(blk.terms[0].value) < min_e0) {
        blk.dropped = true;
        rem = max(rem, abs(blk.terms[0].value));
      } else {
        rem = max(rem, blk.remainder_estimate);
      }
    }
    for (const auto& blk : res.exponential)
      if (!blk.dropped) res.exponential_total += blk.total;
    res.remainder_estimate = max(res.remainder_estimate, rem);
  }
  res.total = res.algebraic.total + res.exponential_total;
  return res;
}

}  // namespace ejasym
