// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ejasym {

// Base class for every error thrown by this library.
class EjasymError : public std::runtime_error {
 public:
  explicit EjasymError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or out-of-domain arguments (p <= 0, bad flag values, ...).
class InvalidInput : public EjasymError {
 public:
  using EjasymError::EjasymError;
};

// Argument lies outside the half-plane Re(a) > 0 where the series converges.
class SectorError : public EjasymError {
 public:
  using EjasymError::EjasymError;
};

// Evaluation of gamma/digamma/zeta at a pole of the function.
class PoleError : public EjasymError {
 public:
  using EjasymError::EjasymError;
};

// Operation requested for a (p, w) class it is not defined for.
class RegimeError : public EjasymError {
 public:
  using EjasymError::EjasymError;
};

// A series that should converge failed to reach the requested tolerance.
class ConvergenceError : public EjasymError {
 public:
  using EjasymError::EjasymError;
};

// Divergent-tail truncation scan found no local minimum up to the cap.
// `cap` reports the largest index that was examined.
class NoMinimumError : public EjasymError {
 public:
  NoMinimumError(const std::string& msg, long cap_index)
      : EjasymError(msg), cap(cap_index) {}
  long cap;
};

// Certified summation exceeded its term budget before meeting tolerance.
class BudgetError : public EjasymError {
 public:
  BudgetError(const std::string& msg, long long used)
      : EjasymError(msg), terms_used(used) {}
  long long terms_used;
};

}  // namespace ejasym
