// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace ejasym {

inline mpz_class factorial_z(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline mpz_class binomial_z(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Rising factorial (x)_n = x (x+1) ... (x+n-1), exact.
inline mpq_class pochhammer(const mpq_class& x, unsigned long n) {
  mpq_class r = 1;
  mpq_class f = x;
  for (unsigned long i = 0; i < n; ++i) {
    r *= f;
    f += 1;
  }
  return r;
}

namespace detail {

// Lazily extended exact-rational sequence shared across threads. Readers
// take a shared lock; the first caller to need index i extends the backing
// vector under an exclusive lock.
class RationalSeq {
 public:
  using Extend = std::function<void(std::vector<mpq_class>&, std::size_t)>;

  explicit RationalSeq(Extend extend) : extend_(std::move(extend)) {}

  mpq_class at(std::size_t i) {
    {
      std::shared_lock lk(mu_);
      if (i < v_.size()) return v_[i];
    }
    std::unique_lock lk(mu_);
    if (i >= v_.size()) extend_(v_, i + 1);
    return v_[i];
  }

  std::vector<mpq_class> prefix(std::size_t n) {
    {
      std::shared_lock lk(mu_);
      if (n <= v_.size()) return {v_.begin(), v_.begin() + n};
    }
    std::unique_lock lk(mu_);
    if (n > v_.size()) extend_(v_, n);
    return {v_.begin(), v_.begin() + n};
  }

 private:
  mutable std::shared_mutex mu_;
  std::vector<mpq_class> v_;
  Extend extend_;
};

inline RationalSeq& bernoulli_seq() {
  static RationalSeq seq([](std::vector<mpq_class>& v, std::size_t need) {
    if (v.empty()) v.push_back(1);
    while (v.size() < need) {
      // B_n = -1/(n+1) * sum_{k<n} C(n+1, k) B_k  (convention B_1 = -1/2)
      unsigned long n = static_cast<unsigned long>(v.size());
      mpq_class s = 0;
      for (unsigned long k = 0; k < n; ++k)
        s += mpq_class(binomial_z(n + 1, k)) * v[k];
      v.push_back(-s / mpq_class(n + 1));
    }
  });
  return seq;
}

inline RationalSeq& stirling_seq() {
  static RationalSeq seq([](std::vector<mpq_class>& v, std::size_t need) {
    // Gamma*(z) = Gamma(z) / (sqrt(2 pi) z^{z-1/2} e^{-z})
    //           ~ sum_k (-1)^k gamma_k z^{-k}.
    // With t = 1/z, log Gamma*(z) = L(t) = sum_{k>=1} b_k t^{2k-1},
    // b_k = B_{2k} / ((2k)(2k-1)); exponentiate the series exactly:
    // g_0 = 1, n g_n = sum odd m<=n of m l_m g_{n-m}; gamma_n = (-1)^n g_n.
    if (v.empty()) v.push_back(1);
    while (v.size() < need) {
      std::size_t n = v.size();
      mpq_class acc = 0;
      for (std::size_t m = 1; m <= n; m += 2) {
        unsigned long k2 = static_cast<unsigned long>(m + 1);  // m = 2k-1
        mpq_class lm = bernoulli_seq().at(k2) /
                       mpq_class(static_cast<long>(k2 * (k2 - 1)));
        // stored values are gamma_j = (-1)^j g_j; recover g_{n-m}
        mpq_class gprev = ((n - m) % 2 == 1) ? mpq_class(-v[n - m]) : v[n - m];
        acc += mpq_class(static_cast<long>(m)) * lm * gprev;
      }
      mpq_class gn = acc / mpq_class(static_cast<long>(n));
      v.push_back(n % 2 == 1 ? mpq_class(-gn) : gn);
    }
  });
  return seq;
}

}  // namespace detail

// Bernoulli number B_n with B_1 = -1/2.
inline mpq_class bernoulli(unsigned long n) {
  return detail::bernoulli_seq().at(n);
}

// First `count` coefficients gamma_k of the scaled-gamma divergent series
// Gamma*(z) ~ sum_k (-1)^k gamma_k z^{-k}:
// 1, -1/12, 1/288, 139/51840, -571/2488320, ...
inline std::vector<mpq_class> stirling_coefficients(std::size_t count) {
  return detail::stirling_seq().prefix(count);
}

}  // namespace ejasym
