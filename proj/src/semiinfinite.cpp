#include "kmq/semiinfinite.hpp"

#include "kmq/errors.hpp"

#include <map>

namespace kmq {

GradedPiece graded_basis(const AffineAlgebra& g, int degree) {
  if (degree < 0) throw InputError("graded piece degree must be non-negative");
  return GradedPiece{degree, g.graded_generators(degree)};
}

Rational cocycle(const AffineAlgebra& g, const LoopElement& x, const LoopElement& y) {
  const auto dx = g.homogeneous_degree(x);
  const auto dy = g.homogeneous_degree(y);
  if (!dx || !dy) throw DegreeMismatch("cocycle arguments must be homogeneous in the principal grading");
  if (*dx < 0) throw DegreeMismatch("cocycle needs deg x >= 0, got " + std::to_string(*dx));
  if (*dx + *dy != 0) return 0;

  Rational sum = 0;
  for (int n = 0; n < *dx; ++n) {
    for (const Generator& b : graded_basis(g, n).basis) {
      const LoopElement image = g.bracket(x, g.bracket(y, LoopElement(b)));
      sum += image.coeff(b);
    }
  }
  return sum;
}

Rational hermitian_form(const AffineAlgebra& g, const LoopElement& x, const LoopElement& y) {
  return -g.form(x, g.conj(y));
}

bool KahlerReport::all_hold() const {
  for (const auto& r : rows) {
    if (!r.holds()) return false;
  }
  return true;
}

KahlerReport kahler_check(const AffineAlgebra& g, int depth) {
  if (depth < 1) throw InputError("kahler-check depth must be at least 1");
  const GCM& a = g.gcm();
  const Weight r = rho(a);
  KahlerReport report;
  for (int k = 1; k <= depth; ++k) {
    std::map<RootVector, std::vector<Generator>> spaces;
    for (const Generator& x : g.graded_generators(k)) spaces[g.root(x)].push_back(x);
    for (const auto& [alpha, basis] : spaces) {
      const Rational scale = 2 * bilinear(r, alpha, a);
      for (const Generator& x : basis) {
        for (const Generator& y : basis) {
          const LoopElement ex(x);
          const LoopElement ey(y);
          KahlerRow row;
          row.x = g.label(x);
          row.y = g.label(y);
          row.root = alpha;
          row.degree = k;
          row.lhs = -cocycle(g, ex, g.conj(ey));
          row.rhs = scale * hermitian_form(g, ex, ey);
          report.rows.push_back(std::move(row));
        }
      }
    }
  }
  return report;
}

}  // namespace kmq
