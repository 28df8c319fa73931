#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace povmkit {

using Complex = std::complex<double>;

/// Numerical knobs shared across the library. Defaults get one order looser
/// per composition level of floating-point error; all of them can be
/// overridden per call or through the CLI flags / environment.
struct Tolerances {
  double eig = 1e-10;          ///< hermiticity gate + reconstruction bound for eigensolves
  double psd = 1e-9;           ///< PSD slack: min eigenvalue >= -psd
  double rank = 1e-8;          ///< relative singular-value cutoff for numerical rank
  double pinv = 1e-10;         ///< relative singular-value cutoff for pseudoinverses
  double validate = 1e-8;      ///< completeness / idempotence / marginal residual bound
  double range = 1e-9;         ///< range dedup and membership matching (max-norm)
  double solve = 1e-9;         ///< certificate residual target for solvers
  double lp_feasible = 1e-8;   ///< phase-1 optimum threshold declaring LP feasibility
  double dykstra_gap = 1e-6;   ///< converged inter-set distance that flags infeasibility
  double proportional = 1e-9;  ///< relative Cauchy-Schwarz defect for proportional effects
  int dykstra_max_iters = 100000;
  int range_cap = 20;          ///< max outcome count for 2^N subset enumeration
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimMismatch : public Error {
 public:
  using Error::Error;
};

class NonHermitian : public Error {
 public:
  using Error::Error;
};

class NotRankOne : public Error {
 public:
  using Error::Error;
};

class TooManyOutcomes : public Error {
 public:
  using Error::Error;
};

class BasisNotOrthonormal : public Error {
 public:
  using Error::Error;
};

class BadPartition : public Error {
 public:
  using Error::Error;
};

/// Sub-effect decomposition asked for an E with E_i <= M_i violated at `index`.
class NotBelowBound : public Error {
 public:
  NotBelowBound(int index, const std::string& what) : Error(what), index(index) {}
  int index;
};

/// Rank-1 kernel extraction found a grid cell that is not proportional to its
/// row effect; signals a wrong first marginal or numerical corruption.
class NotProportional : public Error {
 public:
  NotProportional(int row, int col, const std::string& what)
      : Error(what), row(row), col(col) {}
  int row;
  int col;
};

class RangeNotIncluded : public Error {
 public:
  using Error::Error;
};

class OverlapNotNull : public Error {
 public:
  using Error::Error;
};

class InvalidKernel : public Error {
 public:
  using Error::Error;
};

class UnknownFixture : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace povmkit
