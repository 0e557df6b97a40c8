#pragma once

// The semi-infinite cocycle on a principally graded affine algebra,
//
//   gamma(x, y) = sum_{0 <= n < k} tr_{g_n}(ad x ad y),   deg x = k = -deg y,
//
// and a direct check of its relation to the contravariant form on root spaces.

#include "kmq/loop_algebra.hpp"

#include <string>
#include <vector>

namespace kmq {

struct GradedPiece {
  int degree = 0;
  std::vector<Generator> basis;  // g_0 also carries c and d
};

GradedPiece graded_basis(const AffineAlgebra& g, int degree);

/// Throws DegreeMismatch for inhomogeneous arguments or negative deg x; zero
/// when the degrees do not cancel.
Rational cocycle(const AffineAlgebra& g, const LoopElement& x, const LoopElement& y);

/// {x, y} = -<x, conj(y)>.
Rational hermitian_form(const AffineAlgebra& g, const LoopElement& x, const LoopElement& y);

struct KahlerRow {
  std::string x;
  std::string y;
  RootVector root;
  int degree = 0;
  Rational lhs;  // -gamma(x, conj y)
  Rational rhs;  // 2 <rho, alpha> {x, y}
  bool holds() const { return lhs == rhs; }
};

struct KahlerReport {
  std::vector<KahlerRow> rows;
  bool all_hold() const;
};

/// Every pair (x, y) of basis vectors from the same positive root space of
/// principal degree in [1, depth].
KahlerReport kahler_check(const AffineAlgebra& g, int depth);

}  // namespace kmq
