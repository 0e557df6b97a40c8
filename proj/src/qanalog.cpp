#include "kmq/qanalog.hpp"

#include "kmq/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace kmq {

// ---------------------------------------------------------------- partitions

KostantPartitions::KostantPartitions(const PositiveRootTable& table) : box_(table.box) {
  const Eigen::Index n = box_.size();
  strides_.resize(static_cast<std::size_t>(n));
  Eigen::Index total = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    strides_[static_cast<std::size_t>(i)] = total;
    total *= box_[i] + 1;
  }
  values_.assign(static_cast<std::size_t>(total), QPolynomial());
  values_[0] = 1;

  const auto points = box_points(box_);
  for (const auto& [alpha, mult] : table.by_height()) {
    // Multiply by (1 - q e^alpha)^(-mult) = sum_k C(mult + k - 1, k) q^k e^(k alpha).
    // Points are visited from the top down so every read sees the old series.
    for (auto it = points.rbegin(); it != points.rend(); ++it) {
      const RootVector& gamma = *it;
      if (!alpha.below(gamma)) continue;
      QPolynomial acc = values_[static_cast<std::size_t>(index(gamma))];
      BigInt binom = 1;
      RootVector rest = gamma;
      for (int k = 1;; ++k) {
        rest -= alpha;
        if (!rest.is_nonnegative()) break;
        binom = binom * (mult + k - 1) / k;
        const QPolynomial& lower = values_[static_cast<std::size_t>(index(rest))];
        if (!lower.is_zero()) acc += lower.shifted(k) * QPolynomial::monomial(0, binom);
      }
      values_[static_cast<std::size_t>(index(gamma))] = std::move(acc);
    }
  }
}

Eigen::Index KostantPartitions::index(const RootVector& beta) const {
  Eigen::Index idx = 0;
  for (Eigen::Index i = 0; i < beta.size(); ++i) idx += beta[i] * strides_[static_cast<std::size_t>(i)];
  return idx;
}

const QPolynomial& KostantPartitions::operator()(const RootVector& beta) const {
  static const QPolynomial zero;
  if (beta.size() != box_.size()) throw DimensionMismatch("partition argument rank mismatch");
  if (!beta.is_nonnegative()) return zero;
  if (!beta.below(box_)) {
    throw BoxTooSmall("partition table box " + box_.str() + " does not dominate " + beta.str());
  }
  return values_[static_cast<std::size_t>(index(beta))];
}

QPolynomial kostant_partition(const RootVector& beta, const PositiveRootTable& table) {
  if (!beta.is_nonnegative()) return QPolynomial();
  if (!table.covers(beta)) {
    throw BoxTooSmall("root table box " + table.box.str() + " does not dominate " + beta.str());
  }
  return KostantPartitions(table.restrict_to(beta))(beta);
}

// ---------------------------------------------------------------- Weyl sum

namespace {

void require_regular_dominant(const Weight& lambda, const GCM& a) {
  if (lambda.coroot_values.size() != a.rank() || lambda.scaling_values.size() != a.corank()) {
    throw DimensionMismatch("weight shape does not match GCM");
  }
  for (Eigen::Index i = 0; i < a.rank(); ++i) {
    const Rational& v = lambda.coroot_values(i);
    if (!is_integer(v)) {
      throw NotDominant("lambda(alpha_" + std::to_string(i) + "^v) = " + to_string(v) +
                        " is not integral");
    }
    if (v + 1 <= 0) {
      throw NotDominant("lambda + rho is not strictly dominant at node " + std::to_string(i));
    }
  }
}

struct OrbitPoint {
  RootVector deficit;    // lambda + rho - w(lambda + rho)
  IntVector coroot;      // w(lambda + rho)(alpha_i^v)
  std::vector<int> word;
};

}  // namespace

std::vector<WeylContribution> contributing_weyl_elements(const Weight& lambda, const Weight& mu,
                                                         const GCM& a) {
  require_regular_dominant(lambda, a);
  const auto diff = root_difference(lambda, mu, a);
  if (!diff || !diff->is_nonnegative()) return {};
  const RootVector& cap = *diff;

  IntVector start(a.rank());
  for (Eigen::Index i = 0; i < a.rank(); ++i) {
    start(i) = static_cast<int>(to_bigint(lambda.coroot_values(i))) + 1;
  }

  std::map<RootVector, OrbitPoint> seen;
  std::deque<RootVector> todo;
  seen.emplace(RootVector::zero(a.rank()), OrbitPoint{RootVector::zero(a.rank()), start, {}});
  todo.push_back(RootVector::zero(a.rank()));
  while (!todo.empty()) {
    const OrbitPoint p = seen.at(todo.front());
    todo.pop_front();
    for (Eigen::Index i = 0; i < a.rank(); ++i) {
      const int c = p.coroot(i);
      if (c <= 0) continue;  // s_i would shorten w
      RootVector deficit = p.deficit;
      deficit[i] += c;
      if (!deficit.below(cap) || seen.count(deficit)) continue;
      OrbitPoint q{deficit, p.coroot - c * a.matrix.col(i), {}};
      q.word.reserve(p.word.size() + 1);
      q.word.push_back(static_cast<int>(i));
      q.word.insert(q.word.end(), p.word.begin(), p.word.end());
      seen.emplace(deficit, q);
      todo.push_back(deficit);
    }
  }

  std::vector<WeylContribution> out;
  out.reserve(seen.size());
  for (const auto& [deficit, p] : seen) {
    out.push_back({p.word, p.word.size() % 2 ? -1 : 1, cap - deficit});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.word.size() < y.word.size();
  });
  return out;
}

QPolynomial q_multiplicity(const Weight& lambda, const Weight& mu, const GCM& a,
                           const PositiveRootTable* table) {
  const auto terms = contributing_weyl_elements(lambda, mu, a);
  if (terms.empty()) return QPolynomial();
  const RootVector cap = *root_difference(lambda, mu, a);
  PositiveRootTable local;
  if (table && table->covers(cap)) {
    local = table->restrict_to(cap);
  } else {
    local = positive_roots_with_mult(a, cap);
  }
  const KostantPartitions partitions(local);
  QPolynomial m;
  for (const auto& t : terms) {
    if (t.sign > 0) {
      m += partitions(t.beta);
    } else {
      m -= partitions(t.beta);
    }
  }
  return m;
}

// ---------------------------------------------------------------- Freudenthal

BigInt freudenthal_dim(const Weight& lambda, const Weight& mu, const GCM& a,
                       const PositiveRootTable* table) {
  if (lambda.coroot_values.size() != a.rank()) throw DimensionMismatch("weight rank mismatch");
  if (!lambda.is_dominant()) throw NotDominant("lambda " + lambda.str() + " is not dominant");
  const auto diff = root_difference(lambda, mu, a);
  if (!diff || !diff->is_nonnegative()) return 0;
  const RootVector& cap = *diff;

  PositiveRootTable roots;
  if (table && table->covers(cap)) {
    roots = table->restrict_to(cap);
  } else {
    roots = positive_roots_with_mult(a, cap);
  }
  const auto root_list = roots.by_height();

  const Weight lr = lambda + rho(a);
  std::map<RootVector, Rational> dims;
  dims.emplace(RootVector::zero(a.rank()), 1);
  for (const RootVector& gamma : box_points(cap)) {
    if (gamma.is_zero()) continue;
    Rational rhs = 0;
    for (const auto& [alpha, mult] : root_list) {
      const Rational lam_alpha = bilinear(lambda, alpha, a);
      const Rational gamma_alpha = bilinear(gamma, alpha, a);
      const Rational alpha_alpha = bilinear(alpha, alpha, a);
      RootVector rest = gamma;
      for (int k = 1;; ++k) {
        rest -= alpha;
        if (!rest.is_nonnegative()) break;
        const Rational& d = dims.at(rest);
        if (d == 0) continue;
        rhs += Rational(mult) * (lam_alpha - gamma_alpha + k * alpha_alpha) * d;
      }
    }
    rhs *= 2;
    const Rational factor = 2 * bilinear(lr, gamma, a) - bilinear(gamma, gamma, a);
    Rational dim = 0;
    if (factor == 0) {
      const Weight nu = lambda - root_weight(a, gamma);
      if (rhs != 0 || nu.is_dominant()) {
        throw SingularWeight("Freudenthal factor vanishes at lambda - " + gamma.str());
      }
    } else {
      dim = rhs / factor;
      if (!is_integer(dim) || dim < 0) {
        throw InternalInconsistency("Freudenthal recurrence produced " + to_string(dim) +
                                    " at lambda - " + gamma.str());
      }
    }
    dims.emplace(gamma, dim);
  }
  return to_bigint(dims.at(cap));
}

}  // namespace kmq
