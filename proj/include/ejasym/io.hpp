// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "ejasym/errors.hpp"
#include "ejasym/precision.hpp"

namespace ejasym {

namespace detail {

inline mpz_class parse_integer(const std::string& s) {
  if (s.empty()) throw InvalidInput("empty integer literal");
  try {
    return mpz_class(s, 10);
  } catch (const std::invalid_argument&) {
    throw InvalidInput("not an integer: '" + s + "'");
  }
}

}  // namespace detail

// Exact rational from a decimal literal ("0.05", "5e-2", "-3.25e+1") or an
// explicit fraction ("3/4", "-7/2").
inline mpq_class parse_rational(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InvalidInput("empty number literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class num = detail::parse_integer(s.substr(0, slash));
    mpz_class den = detail::parse_integer(s.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + input + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  long exp10 = 0;
  std::string mant = s;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    std::string es = s.substr(e + 1);
    if (es.empty() || es == "+" || es == "-")
      throw InvalidInput("malformed exponent in '" + input + "'");
    try {
      exp10 = std::stol(es);
    } catch (...) {
      throw InvalidInput("malformed exponent in '" + input + "'");
    }
    mant = s.substr(0, e);
  }
  bool neg = false;
  std::size_t i = 0;
  if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) {
    neg = mant[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_len = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < mant.size(); ++i) {
    char c = mant[i];
    if (c == '.') {
      if (seen_dot) throw InvalidInput("malformed number '" + input + "'");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else {
      throw InvalidInput("malformed number '" + input + "'");
    }
  }
  if (!seen_digit) throw InvalidInput("malformed number '" + input + "'");
  mpz_class n(digits.empty() ? "0" : digits, 10);
  if (neg) n = -n;
  mpq_class q(n);
  long net = exp10 - frac_len;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10u,
                static_cast<unsigned long>(net < 0 ? -net : net));
  if (net >= 0)
    q *= mpq_class(scale);
  else
    q /= mpq_class(scale);
  q.canonicalize();
  return q;
}

// Complex literal "re+imi" with exact rational parts: "1+0.8i", "2-i",
// "0.3", "1e-3+2i", "-i".
inline BigComplex parse_complex(const std::string& input, mpfr_prec_t prec) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InvalidInput("empty complex literal");
  auto ipos = s.find('i');
  if (ipos == std::string::npos)
    return BigComplex(BigReal(parse_rational(s), prec), BigReal(prec));
  if (ipos != s.size() - 1)
    throw InvalidInput("'i' must terminate the literal: '" + input + "'");
  std::string body = s.substr(0, s.size() - 1);
  // split at the last +/- that is not leading and not an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re_str, im_str;
  if (split == std::string::npos) {
    re_str = "0";
    im_str = body;
  } else {
    re_str = body.substr(0, split);
    im_str = body.substr(split);
  }
  if (im_str.empty() || im_str == "+")
    im_str = "1";
  else if (im_str == "-")
    im_str = "-1";
  return BigComplex(BigReal(parse_rational(re_str), prec),
                    BigReal(parse_rational(im_str), prec));
}

// mantissa(exponent) notation: 14931.98 at 7 digits -> "1.493198(4)",
// 1.486e-86 at 4 digits -> "1.486(-86)".
inline std::string format_xy(const BigReal& x, int significant) {
  if (x.is_zero()) {
    std::string m = "0";
    if (significant > 1) m += "." + std::string(significant - 1, '0');
    return m + "(0)";
  }
  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(significant),
                           x.mp(), MPFR_RNDN);
  std::string d(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!d.empty() && d[0] == '-') {
    sign = "-";
    d = d.substr(1);
  }
  std::string m = d.substr(0, 1);
  if (d.size() > 1) m += "." + d.substr(1);
  return sign + m + "(" + std::to_string(static_cast<long>(e - 1)) + ")";
}

// Inverse of format_xy: "1.486(-86)" -> BigReal.
inline BigReal parse_xy(const std::string& s, mpfr_prec_t prec) {
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw InvalidInput("not mantissa(exponent) notation: '" + s + "'");
  std::string mant = s.substr(0, open);
  std::string ex = s.substr(open + 1, s.size() - open - 2);
  return BigReal(mant + "e" + ex, prec);
}

// Agreement to k significant figures: |x - ref| <= 0.5 * 10^{1-k} * |ref|.
inline bool agree_sig(const BigReal& x, const BigReal& ref, int k) {
  if (ref.is_zero()) return x.is_zero();
  mpfr_prec_t prec = std::max(x.prec(), ref.prec());
  BigReal tol = pow10(1 - k, prec) * abs(ref) / 2;
  return abs(x - ref) <= tol;
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string join_csv(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

}  // namespace ejasym
