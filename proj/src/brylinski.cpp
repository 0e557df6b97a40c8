#include "kmq/brylinski.hpp"

#include "kmq/errors.hpp"

#include <algorithm>

namespace kmq {

namespace {

using GradedMap = HighestWeightModule::GradedMap;

AffineAlgebra& a1() {
  static AffineAlgebra g(1);
  return g;
}

// Columns span { v in the source : every block of `m` kills v } inside the
// subspace spanned by the columns of `within`.
MatrixQ restrict_kernel(const GradedMap& m, const MatrixQ& within) {
  if (within.cols() == 0) return within;
  Eigen::Index rows = 0;
  for (const auto& [beta, block] : m) rows += block.rows();
  if (rows == 0) return within;
  MatrixQ stacked(rows, within.cols());
  Eigen::Index r = 0;
  for (const auto& [beta, block] : m) {
    stacked.middleRows(r, block.rows()) = block * within;
    r += block.rows();
  }
  const MatrixQ ker = linalg::kernel<Rational>(stacked);
  return within * ker;
}

void finish(FiltrationProfile& p) {
  Eigen::Index previous = 0;
  for (std::size_t i = 0; i < p.levels.size(); ++i) {
    const Eigen::Index d = p.levels[i].cols();
    if (d < previous) throw InternalInconsistency("filtration is not increasing");
    if (d > previous) {
      p.jumps.emplace_back(static_cast<int>(i), d - previous);
      p.poincare.add_term(static_cast<int>(i), BigInt(d - previous));
    }
    previous = d;
  }
  if (previous != p.dim) throw InternalInconsistency("filtration does not exhaust the weight space");
}

GradedMap identity_map(HighestWeightModule& l, const RootVector& beta) {
  const Eigen::Index d = l.dim(beta);
  GradedMap m;
  if (d > 0) m.emplace(beta, MatrixQ::Identity(d, d));
  return m;
}

// Largest k for which e z^k has a component root below beta.
int heisenberg_bound(const RootVector& beta) {
  return std::max(std::min(beta[0], beta[1] - 1), std::min(beta[0] - 1, beta[1]));
}

}  // namespace

Weight affine_a1_weight(const Rational& alpha, const Rational& h, const Rational& n) {
  VectorQ coroot(2);
  coroot << h - alpha, alpha;
  VectorQ scaling(1);
  scaling << n;
  return Weight(coroot, scaling);
}

PrincipalElements principal_elements(const AffineAlgebra& g, int count) {
  if (g.finite().rank() != 1) throw InputError("principal elements are provided for A1^(1) only");
  PrincipalElements p;
  p.e = LoopElement(g.loop("E", 0)) + LoopElement(g.loop("F", 1));
  for (int k = 0; k < count; ++k) {
    p.heisenberg.push_back(LoopElement(g.loop("E", k)) + LoopElement(g.loop("F", k + 1)));
  }
  return p;
}

MatrixQ FiltrationProfile::level(int i) const {
  if (i < 0) return MatrixQ(dim, 0);
  if (static_cast<std::size_t>(i) < levels.size()) return levels[static_cast<std::size_t>(i)];
  return MatrixQ::Identity(dim, dim);
}

bool FiltrationProfile::contains(int i, const VectorQ& v) const {
  return linalg::spans<Rational>(level(i), MatrixQ(v));
}

FiltrationProfile brylinski_e(HighestWeightModule& l, const RootVector& beta) {
  const auto p = principal_elements(l.algebra(), 0);
  FiltrationProfile out;
  out.dim = l.dim(beta);
  GradedMap power = identity_map(l, beta);
  const MatrixQ all = MatrixQ::Identity(out.dim, out.dim);
  while (out.dim > 0) {
    power = l.act(p.e, power);
    out.levels.push_back(restrict_kernel(power, all));
    if (out.levels.back().cols() == out.dim) break;
  }
  finish(out);
  return out;
}

FiltrationProfile brylinski_s(HighestWeightModule& l, const RootVector& beta) {
  const int bound = heisenberg_bound(beta);
  const auto p = principal_elements(l.algebra(), std::max(bound + 2, 1));
  FiltrationProfile out;
  out.dim = l.dim(beta);
  if (out.dim == 0) {
    finish(out);
    return out;
  }
  const GradedMap start = identity_map(l, beta);
  if (!l.act(p.heisenberg[static_cast<std::size_t>(bound + 1)], start).empty()) {
    throw InternalInconsistency("Heisenberg generator beyond the polarization bound acts nontrivially");
  }

  // Products g_k1 ... g_kn with k1 <= ... <= kn, keyed by the largest index.
  std::vector<std::pair<int, GradedMap>> products;
  for (int k = 0; k <= bound; ++k) {
    GradedMap m = l.act(p.heisenberg[static_cast<std::size_t>(k)], start);
    if (!m.empty()) products.emplace_back(k, std::move(m));
  }
  const MatrixQ all = MatrixQ::Identity(out.dim, out.dim);
  for (;;) {
    MatrixQ ker = all;
    for (const auto& [k, m] : products) ker = restrict_kernel(m, ker);
    out.levels.push_back(std::move(ker));
    if (out.levels.back().cols() == out.dim) break;
    std::vector<std::pair<int, GradedMap>> next;
    for (const auto& [k, m] : products) {
      for (int j = k; j <= bound; ++j) {
        GradedMap n = l.act(p.heisenberg[static_cast<std::size_t>(j)], m);
        if (!n.empty()) next.emplace_back(j, std::move(n));
      }
    }
    products = std::move(next);
  }
  finish(out);
  return out;
}

FiltrationProfile brylinski_e(const Weight& lambda, const Weight& mu) {
  HighestWeightModule l(a1(), lambda);
  return brylinski_e(l, depth_below(lambda, mu, a1().gcm()));
}

FiltrationProfile brylinski_s(const Weight& lambda, const Weight& mu) {
  HighestWeightModule l(a1(), lambda);
  return brylinski_s(l, depth_below(lambda, mu, a1().gcm()));
}

BrylinskiReport brylinski_report(HighestWeightModule& l, const Weight& mu) {
  const GCM& a = l.algebra().gcm();
  BrylinskiReport r;
  r.lambda = l.highest_weight();
  r.mu = mu;
  const RootVector beta = depth_below(r.lambda, mu, a);
  const PositiveRootTable table = positive_roots_with_mult(a, beta);
  r.m = q_multiplicity(r.lambda, mu, a, &table);
  r.freudenthal = freudenthal_dim(r.lambda, mu, a, &table);
  r.dim = l.dim(beta);

  const FiltrationProfile e = brylinski_e(l, beta);
  const FiltrationProfile s = brylinski_s(l, beta);
  r.e_poincare = e.poincare;
  r.s_poincare = s.poincare;
  r.theorem_applies = r.dim > 0;
  r.theorem_holds = r.s_poincare == r.m;
  r.oracle_agrees = r.m.at_one() == r.freudenthal && BigInt(r.dim) == r.freudenthal;
  r.exhaustive = e.poincare.at_one() == r.dim && s.poincare.at_one() == r.dim;
  r.s_inside_e = true;
  const auto top = static_cast<int>(std::max(e.levels.size(), s.levels.size()));
  for (int i = 0; i < top && r.s_inside_e; ++i) {
    r.s_inside_e = linalg::spans<Rational>(e.level(i), s.level(i));
  }
  const WeightSlice slice = l.slice(beta);
  r.gram_symmetric = slice.symmetric;
  r.gram_psd = slice.positive_semidefinite;
  return r;
}

BrylinskiReport brylinski_report(const Weight& lambda, const Weight& mu) {
  HighestWeightModule l(a1(), lambda);
  return brylinski_report(l, mu);
}

std::vector<std::pair<Weight, Weight>> grid_pairs(const Grid& grid) {
  const GCM& a = a1().gcm();
  std::vector<std::pair<Weight, Weight>> out;
  for (int h = 0; h <= grid.max_level; ++h) {
    for (int alpha = 0; alpha <= h; ++alpha) {
      const Weight lambda = affine_a1_weight(alpha, h, 0);
      for (int k0 = 0; k0 <= grid.max_depth; ++k0) {
        for (int k1 = 0; k1 <= k0 + h; ++k1) {
          const Weight mu = lambda - root_weight(a, RootVector{k0, k1});
          if (mu.is_dominant()) out.emplace_back(lambda, mu);
        }
      }
    }
  }
  return out;
}

std::vector<BrylinskiReport> verify_grid(const Grid& grid) {
  std::vector<BrylinskiReport> out;
  std::optional<HighestWeightModule> module;
  for (const auto& [lambda, mu] : grid_pairs(grid)) {
    if (!module || !(module->highest_weight() == lambda)) module.emplace(a1(), lambda);
    out.push_back(brylinski_report(*module, mu));
  }
  return out;
}

Counterexample counterexample() {
  const AffineAlgebra& g = a1();
  HighestWeightModule l(g, affine_a1_weight(0, 1, 0));
  const auto p = principal_elements(g, 2);

  ModuleVector v;
  v.emplace(Monomial{}, 1);
  const ModuleVector w =
      l.verma().act(LoopElement(g.loop("F", -1)), l.verma().act(LoopElement(g.loop("E", -1)), v));
  const RootVector beta{2, 2};
  const VectorQ coords = l.project(beta, w);

  Counterexample c;
  GradedMap start;
  start.emplace(beta, MatrixQ(coords));
  const GradedMap ew = l.act(p.e, start);
  c.e_squared_kills = l.act(p.e, ew).empty();
  const GradedMap top = l.act(p.heisenberg[1], ew);
  const RootVector zero = RootVector::zero(2);
  const auto it = top.find(zero);
  c.ez_e_coefficient = it == top.end() ? Rational(0) : it->second(0, 0);
  c.in_e_filtration = brylinski_e(l, beta).contains(1, coords);
  c.in_s_filtration = brylinski_s(l, beta).contains(1, coords);
  return c;
}

}  // namespace kmq
