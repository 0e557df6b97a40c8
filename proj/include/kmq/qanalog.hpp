#pragma once

#include "kmq/gcm.hpp"
#include "kmq/qpolynomial.hpp"
#include "kmq/roots.hpp"

#include <vector>

namespace kmq {

/// K(beta; q) for every beta in the box of a root table:
///   sum_beta K(beta; q) e^beta = prod_alpha (1 - q e^alpha)^(-mult alpha).
/// Each root contributes mult(alpha) distinguishable colors.
class KostantPartitions {
 public:
  explicit KostantPartitions(const PositiveRootTable& table);

  const RootVector& box() const { return box_; }
  /// Throws BoxTooSmall when beta is outside the box; zero for beta outside Q+.
  const QPolynomial& operator()(const RootVector& beta) const;

 private:
  Eigen::Index index(const RootVector& beta) const;

  RootVector box_;
  std::vector<Eigen::Index> strides_;
  std::vector<QPolynomial> values_;
};

QPolynomial kostant_partition(const RootVector& beta, const PositiveRootTable& table);

struct WeylContribution {
  std::vector<int> word;  // s_{w[0]} s_{w[1]} ... ; reduced
  int sign = 1;
  RootVector beta;  // w * lambda - mu
};

/// The Weyl group elements with w * lambda - mu in Q+, found by a pruned
/// breadth-first search over the orbit of lambda + rho.
std::vector<WeylContribution> contributing_weyl_elements(const Weight& lambda, const Weight& mu,
                                                         const GCM& a);

/// m^lambda_mu(q) = sum_w sign(w) K(w * lambda - mu; q).
/// `table` may be supplied when it covers lambda - mu; otherwise one is built.
QPolynomial q_multiplicity(const Weight& lambda, const Weight& mu, const GCM& a,
                           const PositiveRootTable* table = nullptr);

/// dim L(lambda)_mu by Freudenthal's recurrence, descending from lambda.
BigInt freudenthal_dim(const Weight& lambda, const Weight& mu, const GCM& a,
                       const PositiveRootTable* table = nullptr);

}  // namespace kmq
