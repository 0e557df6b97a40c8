#pragma once

// Weight spaces of Verma modules M(lambda) over an untwisted affine algebra,
// the contravariant (Shapovalov) form on them, and the irreducible quotient
// L(lambda) realized weight space by weight space as M_beta / radical.
//
// A weight space is indexed by its depth beta = lambda - mu in Q+.

#include "kmq/linalg.hpp"
#include "kmq/loop_algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kmq {

/// g_1 g_2 ... g_k v_lambda with lowering generators g_1 <= g_2 <= ... <= g_k.
using Monomial = std::vector<Generator>;
/// Sparse vector of M(lambda) in the PBW basis.
using ModuleVector = std::map<Monomial, Rational>;

std::string monomial_str(const AffineAlgebra& g, const Monomial& m);

class VermaModule {
 public:
  VermaModule(AffineAlgebra g, Weight lambda);

  const AffineAlgebra& algebra() const { return g_; }
  const Weight& highest_weight() const { return lambda_; }

  RootVector depth(const Monomial& m) const;
  /// The weight lambda - beta.
  Weight weight(const RootVector& beta) const;
  /// Eigenvalue of a Cartan generator (H, c or d) on M_beta.
  Rational cartan_value(const Generator& h, const RootVector& beta) const;

  /// Lowering generators whose negated root lies below beta, in PBW order.
  std::vector<Generator> lowering_generators(const RootVector& beta) const;
  /// PBW basis of M_beta, in lexicographic order of the generator sequences.
  const std::vector<Monomial>& basis(const RootVector& beta);
  Eigen::Index index(const RootVector& beta, const Monomial& m);

  /// x . (m v_lambda), straightened back into PBW form. Memoized.
  const ModuleVector& apply(const Generator& x, const Monomial& m);
  ModuleVector act(const LoopElement& u, const ModuleVector& v);

  /// Dense coordinates of a vector lying in M_beta.
  VectorQ coordinates(const RootVector& beta, const ModuleVector& v);

  /// Gram matrix of the contravariant form on M_beta, normalized by
  /// <v_lambda, v_lambda> = 1 and <x u, w> = <u, transpose(x) w>.
  const MatrixQ& gram(const RootVector& beta);

 private:
  struct Space {
    std::vector<Monomial> basis;
    std::map<Monomial, Eigen::Index> index;
  };
  Space& space(const RootVector& beta);

  AffineAlgebra g_;
  Weight lambda_;
  IntVector dual_labels_;
  std::map<RootVector, Space> spaces_;
  std::map<std::pair<Generator, Monomial>, ModuleVector> memo_;
  std::map<RootVector, MatrixQ> gram_;
};

/// A weight space of M(lambda) with its contravariant form.
struct WeightSlice {
  Weight lambda;
  Weight mu;
  RootVector beta;
  std::vector<Monomial> basis;
  MatrixQ gram;
  Eigen::Index radical_rank = 0;
  bool symmetric = true;
  bool positive_semidefinite = true;
  std::vector<Rational> pivots;  // diagonal pivots of the symmetric elimination

  /// dim L(lambda)_mu.
  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()) - radical_rank; }
};

/// The irreducible module L(lambda), one weight space at a time.
class HighestWeightModule {
 public:
  using GradedMap = std::map<RootVector, MatrixQ>;  // depth -> block

  HighestWeightModule(AffineAlgebra g, Weight lambda);

  VermaModule& verma() { return verma_; }
  const AffineAlgebra& algebra() const { return verma_.algebra(); }
  const Weight& highest_weight() const { return verma_.highest_weight(); }

  WeightSlice slice(const RootVector& beta);
  Eigen::Index dim(const RootVector& beta);
  /// PBW indices whose images form the chosen basis of L_beta.
  const std::vector<Eigen::Index>& basis_indices(const RootVector& beta);
  /// Maps Verma coordinates on M_beta to coordinates on L_beta.
  const MatrixQ& projection(const RootVector& beta);
  VectorQ project(const RootVector& beta, const ModuleVector& v);

  /// Matrix of a generator from L_beta to L_(beta - root). Zero rows when the
  /// target depth leaves Q+.
  const MatrixQ& action(const Generator& x, const RootVector& beta);
  /// Applies x to every block; blocks are matrices whose columns are vectors
  /// of the module. Blocks that vanish are dropped.
  GradedMap act(const LoopElement& x, const GradedMap& in);

 private:
  struct Quotient {
    std::vector<Eigen::Index> pivots;
    MatrixQ projection;
  };
  Quotient& quotient(const RootVector& beta);

  VermaModule verma_;
  std::map<RootVector, Quotient> quotients_;
  std::map<std::pair<Generator, RootVector>, MatrixQ> actions_;
};

/// PBW basis of M(lambda)_(lambda - beta) for A1^(1).
std::vector<Monomial> pbw_basis(const Weight& lambda, const RootVector& beta);
/// The contravariant form on M(lambda)_mu for A1^(1).
WeightSlice shapovalov_slice(const Weight& lambda, const Weight& mu);

/// lambda - mu as an element of Q+, or InputError naming the weights.
RootVector depth_below(const Weight& lambda, const Weight& mu, const GCM& a);

}  // namespace kmq
