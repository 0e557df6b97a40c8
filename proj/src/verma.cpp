#include "kmq/verma.hpp"

#include "kmq/errors.hpp"

#include <algorithm>

namespace kmq {

namespace {

void accumulate(ModuleVector& out, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = out.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

void enumerate(const std::vector<Generator>& gens, const std::vector<RootVector>& weights,
               std::size_t start, const RootVector& remaining, Monomial& prefix,
               std::vector<Monomial>& out) {
  if (remaining.is_zero()) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t k = start; k < gens.size(); ++k) {
    if (!weights[k].below(remaining)) continue;
    prefix.push_back(gens[k]);
    enumerate(gens, weights, k, remaining - weights[k], prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::string monomial_str(const AffineAlgebra& g, const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += " ";
    std::string l = g.label(m[i]);
    if (j - i > 1) l = "(" + l + ")^" + std::to_string(j - i);
    out += l;
    i = j;
  }
  return out;
}

RootVector depth_below(const Weight& lambda, const Weight& mu, const GCM& a) {
  const auto beta = root_difference(lambda, mu, a);
  if (!beta || !beta->is_nonnegative()) {
    throw InputError("mu " + mu.str() + " is not below lambda " + lambda.str() + " in the Q+ order");
  }
  return *beta;
}

// ---------------------------------------------------------------- Verma

VermaModule::VermaModule(AffineAlgebra g, Weight lambda)
    : g_(std::move(g)), lambda_(std::move(lambda)), dual_labels_(dual_kac_labels(g_.gcm())) {
  if (lambda_.coroot_values.size() != g_.gcm().rank() ||
      lambda_.scaling_values.size() != g_.gcm().corank()) {
    throw DimensionMismatch("highest weight shape does not match the affine algebra");
  }
}

RootVector VermaModule::depth(const Monomial& m) const {
  RootVector beta = RootVector::zero(g_.gcm().rank());
  for (const auto& x : m) beta -= g_.root(x);
  return beta;
}

Weight VermaModule::weight(const RootVector& beta) const {
  return lambda_ - root_weight(g_.gcm(), beta);
}

Rational VermaModule::cartan_value(const Generator& h, const RootVector& beta) const {
  const Weight nu = weight(beta);
  if (h.basis == Generator::kDerivation) return nu.scaling_values(0);
  if (h.basis == Generator::kCentral) {
    Rational sum = 0;
    for (Eigen::Index i = 0; i < nu.coroot_values.size(); ++i) sum += dual_labels_(i) * nu.coroot_values(i);
    return sum;
  }
  const auto& info = g_.finite().basis[static_cast<std::size_t>(h.basis)];
  if (info.part != Part::cartan || h.loop != 0) throw InternalInconsistency("not a Cartan generator");
  return nu.coroot_values(info.cartan_index + 1);
}

std::vector<Generator> VermaModule::lowering_generators(const RootVector& beta) const {
  std::vector<Generator> out;
  for (int b = 0; b < g_.finite().dim(); ++b) {
    for (int m = -beta[0]; m <= 0; ++m) {
      const Generator x = g_.loop(b, m);
      if (g_.part(x) != Part::lowering) continue;
      if ((-g_.root(x)).below(beta)) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VermaModule::Space& VermaModule::space(const RootVector& beta) {
  auto it = spaces_.find(beta);
  if (it != spaces_.end()) return it->second;
  if (beta.size() != g_.gcm().rank() || !beta.is_nonnegative()) {
    throw InputError("depth " + beta.str() + " is not in Q+");
  }
  Space s;
  const auto gens = lowering_generators(beta);
  std::vector<RootVector> weights;
  for (const auto& x : gens) weights.push_back(-g_.root(x));
  Monomial prefix;
  enumerate(gens, weights, 0, beta, prefix, s.basis);
  for (std::size_t i = 0; i < s.basis.size(); ++i) s.index.emplace(s.basis[i], static_cast<Eigen::Index>(i));
  return spaces_.emplace(beta, std::move(s)).first->second;
}

const std::vector<Monomial>& VermaModule::basis(const RootVector& beta) { return space(beta).basis; }

Eigen::Index VermaModule::index(const RootVector& beta, const Monomial& m) {
  const Space& s = space(beta);
  const auto it = s.index.find(m);
  if (it == s.index.end()) {
    throw InternalInconsistency("monomial " + monomial_str(g_, m) + " is not in M_" + beta.str());
  }
  return it->second;
}

const ModuleVector& VermaModule::apply(const Generator& x, const Monomial& m) {
  auto key = std::make_pair(x, m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  ModuleVector out;
  const Part p = g_.part(x);
  if (p == Part::cartan) {
    accumulate(out, m, cartan_value(x, depth(m)));
  } else if (p == Part::lowering && (m.empty() || !(m.front() < x))) {
    Monomial n;
    n.reserve(m.size() + 1);
    n.push_back(x);
    n.insert(n.end(), m.begin(), m.end());
    out.emplace(std::move(n), 1);
  } else if (!m.empty()) {
    // x y r = y (x r) + [x, y] r
    const Generator y = m.front();
    const Monomial rest(m.begin() + 1, m.end());
    const ModuleVector& xr = apply(x, rest);
    for (const auto& [mono, c] : xr) {
      for (const auto& [n, cc] : apply(y, mono)) accumulate(out, n, c * cc);
    }
    const LoopElement xy = g_.bracket(x, y);
    for (const auto& [z, c] : xy.terms()) {
      for (const auto& [n, cc] : apply(z, rest)) accumulate(out, n, c * cc);
    }
  }
#ifndef NDEBUG
  const RootVector target = depth(m) - g_.root(x);
  for (const auto& [n, c] : out) {
    if (depth(n) != target) throw InternalInconsistency("straightening left the weight space " + target.str());
  }
#endif
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

ModuleVector VermaModule::act(const LoopElement& u, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [x, c] : u.terms()) {
    for (const auto& [m, cm] : v) {
      for (const auto& [n, cn] : apply(x, m)) accumulate(out, n, c * cm * cn);
    }
  }
  return out;
}

VectorQ VermaModule::coordinates(const RootVector& beta, const ModuleVector& v) {
  VectorQ out = VectorQ::Zero(static_cast<Eigen::Index>(basis(beta).size()));
  for (const auto& [m, c] : v) out(index(beta, m)) = c;
  return out;
}

const MatrixQ& VermaModule::gram(const RootVector& beta) {
  if (auto it = gram_.find(beta); it != gram_.end()) return it->second;
  const std::vector<Monomial> mons = basis(beta);
  const auto n = static_cast<Eigen::Index>(mons.size());
  MatrixQ out = MatrixQ::Zero(n, n);
  if (beta.is_zero()) {
    out(0, 0) = 1;
  } else {
    // <y r, m> = <r, transpose(y) m>, recursing on the shorter monomial r.
    for (Eigen::Index i = 0; i < n; ++i) {
      const Monomial& mi = mons[static_cast<std::size_t>(i)];
      const Generator y = mi.front();
      const Monomial rest(mi.begin() + 1, mi.end());
      const RootVector sub = beta + g_.root(y);
      const auto [t, sign] = g_.transpose(y);
      const MatrixQ& lower = gram(sub);
      const Eigen::Index r = index(sub, rest);
      for (Eigen::Index j = 0; j < n; ++j) {
        Rational s = 0;
        for (const auto& [mono, c] : apply(t, mons[static_cast<std::size_t>(j)])) {
          s += c * lower(r, index(sub, mono));
        }
        out(i, j) = sign * s;
      }
    }
  }
  return gram_.emplace(beta, std::move(out)).first->second;
}

// ---------------------------------------------------------------- L(lambda)

HighestWeightModule::HighestWeightModule(AffineAlgebra g, Weight lambda)
    : verma_(std::move(g), std::move(lambda)) {}

HighestWeightModule::Quotient& HighestWeightModule::quotient(const RootVector& beta) {
  if (auto it = quotients_.find(beta); it != quotients_.end()) return it->second;
  const MatrixQ& gram = verma_.gram(beta);
  Quotient q;
  const auto ech = linalg::row_echelon<Rational>(gram);
  q.pivots = ech.pivots;
  const auto k = static_cast<Eigen::Index>(q.pivots.size());
  MatrixQ rows(k, gram.cols());
  MatrixQ square(k, k);
  for (Eigen::Index a = 0; a < k; ++a) {
    rows.row(a) = gram.row(q.pivots[static_cast<std::size_t>(a)]);
    for (Eigen::Index b = 0; b < k; ++b) {
      square(a, b) = gram(q.pivots[static_cast<std::size_t>(a)], q.pivots[static_cast<std::size_t>(b)]);
    }
  }
  // The class of v is the unique combination of pivot monomials with the same
  // pairings against the pivot monomials.
  q.projection = k == 0 ? MatrixQ(0, gram.cols()) : MatrixQ(linalg::inverse<Rational>(square) * rows);
  return quotients_.emplace(beta, std::move(q)).first->second;
}

WeightSlice HighestWeightModule::slice(const RootVector& beta) {
  WeightSlice s;
  s.lambda = highest_weight();
  s.beta = beta;
  s.mu = verma_.weight(beta);
  s.basis = verma_.basis(beta);
  s.gram = verma_.gram(beta);
  s.symmetric = s.gram == s.gram.transpose();
  const auto piv = linalg::symmetric_pivots<Rational>(s.gram);
  s.pivots = piv.pivots;
  s.positive_semidefinite = piv.psd;
  s.radical_rank = static_cast<Eigen::Index>(s.basis.size()) - linalg::rank<Rational>(s.gram);
  return s;
}

Eigen::Index HighestWeightModule::dim(const RootVector& beta) {
  return static_cast<Eigen::Index>(quotient(beta).pivots.size());
}

const std::vector<Eigen::Index>& HighestWeightModule::basis_indices(const RootVector& beta) {
  return quotient(beta).pivots;
}

const MatrixQ& HighestWeightModule::projection(const RootVector& beta) { return quotient(beta).projection; }

VectorQ HighestWeightModule::project(const RootVector& beta, const ModuleVector& v) {
  return projection(beta) * verma_.coordinates(beta, v);
}

const MatrixQ& HighestWeightModule::action(const Generator& x, const RootVector& beta) {
  auto key = std::make_pair(x, beta);
  if (auto it = actions_.find(key); it != actions_.end()) return it->second;
  const RootVector target = beta - algebra().root(x);
  const std::vector<Eigen::Index> source = basis_indices(beta);
  const auto cols = static_cast<Eigen::Index>(source.size());
  MatrixQ out;
  if (!target.is_nonnegative()) {
    out = MatrixQ(0, cols);
  } else {
    const MatrixQ& p = projection(target);
    const std::vector<Monomial>& mons = verma_.basis(beta);
    out = MatrixQ::Zero(p.rows(), cols);
    for (Eigen::Index s = 0; s < cols; ++s) {
      const ModuleVector& image = verma_.apply(x, mons[static_cast<std::size_t>(source[static_cast<std::size_t>(s)])]);
      for (const auto& [m, c] : image) out.col(s) += c * p.col(verma_.index(target, m));
    }
  }
  return actions_.emplace(std::move(key), std::move(out)).first->second;
}

HighestWeightModule::GradedMap HighestWeightModule::act(const LoopElement& x, const GradedMap& in) {
  GradedMap out;
  for (const auto& [beta, block] : in) {
    for (const auto& [g, c] : x.terms()) {
      const RootVector target = beta - algebra().root(g);
      if (!target.is_nonnegative()) continue;
      const MatrixQ& a = action(g, beta);
      if (a.rows() == 0) continue;
      MatrixQ image = c * (a * block);
      auto it = out.find(target);
      if (it == out.end()) {
        out.emplace(target, std::move(image));
      } else {
        it->second += image;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if ((it->second.array() == Rational(0)).all()) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

// ---------------------------------------------------------------- A1^(1)

std::vector<Monomial> pbw_basis(const Weight& lambda, const RootVector& beta) {
  VermaModule m(AffineAlgebra(1), lambda);
  return m.basis(beta);
}

WeightSlice shapovalov_slice(const Weight& lambda, const Weight& mu) {
  HighestWeightModule l(AffineAlgebra(1), lambda);
  return l.slice(depth_below(lambda, mu, l.algebra().gcm()));
}

}  // namespace kmq
