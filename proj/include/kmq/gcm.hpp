#pragma once

#include "kmq/rational.hpp"

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kmq {

using IntMatrix = Eigen::MatrixXi;
using IntVector = Eigen::VectorXi;

/// Element of the root lattice in simple-root coordinates.
struct RootVector {
  IntVector coeffs;

  RootVector() = default;
  explicit RootVector(IntVector c) : coeffs(std::move(c)) {}
  RootVector(std::initializer_list<int> c);

  static RootVector zero(Eigen::Index n) { return RootVector(IntVector::Zero(n)); }
  static RootVector simple(Eigen::Index n, Eigen::Index i);

  Eigen::Index size() const { return coeffs.size(); }
  int operator[](Eigen::Index i) const { return coeffs(i); }
  int& operator[](Eigen::Index i) { return coeffs(i); }

  int height() const { return coeffs.sum(); }
  bool is_zero() const { return (coeffs.array() == 0).all(); }
  /// Membership in Q+.
  bool is_nonnegative() const { return (coeffs.array() >= 0).all(); }
  /// Componentwise order: true when `other - *this` lies in Q+.
  bool below(const RootVector& other) const;
  /// Largest n dividing every coordinate (0 for the zero vector).
  int content() const;

  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator*(int k, RootVector a) {
    a.coeffs *= k;
    return a;
  }
  friend RootVector operator-(RootVector a) {
    a.coeffs = -a.coeffs;
    return a;
  }

  friend bool operator==(const RootVector& a, const RootVector& b);
  friend std::strong_ordering operator<=>(const RootVector& a, const RootVector& b);

  std::string str() const;
};

/// Generalized Cartan matrix together with a symmetrizer and a realization.
///
/// The realization adds `corank()` scaling elements d_s to the span of the
/// simple coroots; `scaling(j, s)` is alpha_j(d_s). For an affine matrix with
/// node 0 listed first this is the usual derivation d with alpha_0(d) = 1.
struct GCM {
  IntMatrix matrix;
  VectorQ symmetrizer;
  IntMatrix scaling;
  // Inverse Gram matrix of the form on h in the basis (coroots, scaling
  // elements); pairs two weights given by their values on that basis.
  MatrixQ weight_form;

  Eigen::Index rank() const { return matrix.rows(); }
  Eigen::Index corank() const { return scaling.cols(); }
  int operator()(Eigen::Index i, Eigen::Index j) const { return matrix(i, j); }

  /// Stable 64-bit FNV-1a digest of the matrix and symmetrizer.
  std::uint64_t hash() const;
  std::string hash_hex() const;
};

/// Checks the GCM axioms and computes a symmetrizer with smallest entry 1 in
/// every indecomposable block.
GCM validate_gcm(const IntMatrix& matrix);
/// As above, but checks a caller-supplied symmetrizer instead of solving for one.
GCM validate_gcm(const IntMatrix& matrix, const VectorQ& symmetrizer);

/// A weight: values on the simple coroots and on the scaling elements.
struct Weight {
  VectorQ coroot_values;
  VectorQ scaling_values;

  Weight() = default;
  Weight(VectorQ coroot, VectorQ scaling)
      : coroot_values(std::move(coroot)), scaling_values(std::move(scaling)) {}

  static Weight zero(const GCM& a);

  bool is_dominant() const;
  bool is_integral() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& k, Weight a) {
    a.coroot_values *= k;
    a.scaling_values *= k;
    return a;
  }
  friend bool operator==(const Weight& a, const Weight& b);

  std::string str() const;
};

enum class BlockType { finite, affine, indefinite };

std::string to_string(BlockType t);

struct SubmatrixType {
  struct Block {
    std::vector<int> nodes;
    BlockType type;
  };

  BlockType tag = BlockType::finite;
  std::vector<Block> blocks;
};

/// Splits A_Z into indecomposable blocks and classifies each one from the
/// definiteness of D_Z A_Z.
SubmatrixType classify(const GCM& a, const std::vector<int>& subset);
SubmatrixType classify(const GCM& a);

/// A root-lattice element viewed as a weight.
Weight root_weight(const GCM& a, const RootVector& beta);

/// Invariant form. <alpha_i, alpha_j> = D_i A_ij, <mu, alpha_i> = D_i mu(alpha_i^v).
Rational bilinear(const RootVector& x, const RootVector& y, const GCM& a);
Rational bilinear(const Weight& x, const RootVector& y, const GCM& a);
Rational bilinear(const RootVector& x, const Weight& y, const GCM& a);
Rational bilinear(const Weight& x, const Weight& y, const GCM& a);

Weight rho(const GCM& a);

/// s_i(nu) = nu - nu(alpha_i^v) alpha_i.
Weight reflect(const GCM& a, int i, const Weight& nu);

/// Applies the word right to left: word {i, j} means s_i s_j.
Weight shifted_action(const std::vector<int>& word, const Weight& lambda, const GCM& a);

/// Solves x - y = sum k_i alpha_i; empty when the difference is off the root lattice.
std::optional<RootVector> root_difference(const Weight& x, const Weight& y, const GCM& a);

/// Smallest positive integer kernel vector of A (Kac labels) or A^T (dual
/// labels) for an indecomposable affine matrix.
IntVector kac_labels(const GCM& a);
IntVector dual_kac_labels(const GCM& a);
/// Sum of a_i^v lambda(alpha_i^v); affine matrices only.
Rational level(const Weight& lambda, const GCM& a);

/// Standard matrices. Affine matrices list the extra node 0 first.
namespace cartan {
GCM finite_a(int rank);
GCM affine_a(int rank);
}  // namespace cartan

}  // namespace kmq
