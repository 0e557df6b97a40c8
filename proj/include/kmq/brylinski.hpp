#pragma once

// Brylinski filtrations of weight spaces of L(lambda) for A1^(1):
//
//   eF^i = { v : e^(i+1) v = 0 },       e = E + F z
//   sF^i = { v : x^(i+1) v = 0 for all x in s ∩ n },  s ∩ n = span{ e z^k : k >= 0 }
//
// The generators e z^k commute, so by polarization sF^i is the common kernel
// of all products of i + 1 of them.

#include "kmq/qanalog.hpp"
#include "kmq/qpolynomial.hpp"
#include "kmq/verma.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kmq {

/// Weight of the A1^(1) triple (alpha, h, n): alpha H* + h c* + n d*.
Weight affine_a1_weight(const Rational& alpha, const Rational& h, const Rational& n);

struct PrincipalElements {
  LoopElement e;
  std::vector<LoopElement> heisenberg;  // heisenberg[k] = e z^k
};

/// e and the first `count` generators of the positive principal Heisenberg.
PrincipalElements principal_elements(const AffineAlgebra& g, int count);

struct FiltrationProfile {
  std::vector<std::pair<int, Eigen::Index>> jumps;  // (i, dim gr^i), nonzero only
  QPolynomial poincare;
  std::vector<MatrixQ> levels;  // levels[i]: columns span F^i in L_mu coordinates
  Eigen::Index dim = 0;

  /// Basis of F^i; the whole space once i passes the last level.
  MatrixQ level(int i) const;
  bool contains(int i, const VectorQ& v) const;
};

FiltrationProfile brylinski_e(HighestWeightModule& l, const RootVector& beta);
FiltrationProfile brylinski_s(HighestWeightModule& l, const RootVector& beta);
FiltrationProfile brylinski_e(const Weight& lambda, const Weight& mu);
FiltrationProfile brylinski_s(const Weight& lambda, const Weight& mu);

/// Everything the filtration checks need for one weight pair.
struct BrylinskiReport {
  Weight lambda;
  Weight mu;
  Eigen::Index dim = 0;
  BigInt freudenthal;
  QPolynomial e_poincare;
  QPolynomial s_poincare;
  QPolynomial m;
  bool theorem_applies = false;  // mu is a weight of L(lambda)
  bool theorem_holds = false;    // sP = m
  bool oracle_agrees = false;    // m(1) = Freudenthal dimension
  bool s_inside_e = false;       // sF^i inside eF^i for every i
  bool exhaustive = false;       // both graded dimensions sum to dim
  bool gram_symmetric = false;
  bool gram_psd = false;

  bool ok() const {
    return (theorem_holds || !theorem_applies) && oracle_agrees && s_inside_e && exhaustive && gram_symmetric && gram_psd;
  }
};

BrylinskiReport brylinski_report(HighestWeightModule& l, const Weight& mu);
BrylinskiReport brylinski_report(const Weight& lambda, const Weight& mu);

/// Grid of dominant pairs on A1^(1): lambda = (alpha, h, 0) with level
/// h <= max_level, and dominant mu = lambda - k0 alpha_0 - k1 alpha_1 with
/// delta-coefficient k0 <= max_depth.
struct Grid {
  int max_level = 3;
  int max_depth = 3;
};

std::vector<std::pair<Weight, Weight>> grid_pairs(const Grid& grid);
/// Reports for every grid pair, grouped by lambda so modules are shared.
std::vector<BrylinskiReport> verify_grid(const Grid& grid);

/// The vector w = (F z^-1)(E z^-1) v in L(c*).
struct Counterexample {
  bool e_squared_kills = false;   // e^2 w = 0
  Rational ez_e_coefficient;      // (e z) e w = coefficient * v
  bool in_e_filtration = false;   // w in eF^1
  bool in_s_filtration = false;   // w in sF^1
};

Counterexample counterexample();

}  // namespace kmq
