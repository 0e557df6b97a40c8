#pragma once

#include "kmq/gcm.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace kmq {

/// Positive roots with multiplicities inside the componentwise box [0, box].
struct PositiveRootTable {
  std::uint64_t gcm_hash = 0;
  RootVector box;
  std::map<RootVector, BigInt> entries;

  int height_bound() const { return box.height(); }
  bool covers(const RootVector& beta) const { return beta.is_nonnegative() && beta.below(box); }
  /// Multiplicity of beta (0 for non-roots); throws BoxTooSmall outside the box.
  BigInt mult(const RootVector& beta) const;
  /// Roots ordered by height, then lexicographically.
  std::vector<std::pair<RootVector, BigInt>> by_height() const;
  /// The sub-table for a smaller box.
  PositiveRootTable restrict_to(const RootVector& smaller) const;

  friend bool operator==(const PositiveRootTable&, const PositiveRootTable&) = default;
};

/// Real positive roots of height <= bound, by closing the simple roots under
/// simple reflections and keeping members of Q+.
std::set<RootVector> real_roots(const GCM& a, int height_bound);

/// Root multiplicities by Peterson's recurrence
///
///   (b, b - 2 rho) c_b = sum_{b' + b'' = b} (b', b'') c_b' c_b'',
///   c_b = sum_{n | b} mult(b / n) / n,
///
/// memoized over every vector below the largest box requested so far.
class PetersonSolver {
 public:
  explicit PetersonSolver(GCM a);

  const GCM& gcm() const { return gcm_; }
  BigInt mult(const RootVector& beta);
  /// Fills the memo for every vector in [0, box].
  void fill(const RootVector& box);
  PositiveRootTable table(const RootVector& box);

 private:
  void compute(const RootVector& gamma);

  GCM gcm_;
  Weight rho_;
  std::map<RootVector, BigInt> mult_;
  std::map<RootVector, Rational> c_;  // nonzero entries only
};

/// dim g_beta, with a process-wide memo keyed by (GCM hash, beta).
BigInt peterson_mult(const GCM& a, const RootVector& beta);

PositiveRootTable positive_roots_with_mult(const GCM& a, const RootVector& box);

/// All lattice points in [0, box], ordered by height then lexicographically.
std::vector<RootVector> box_points(const RootVector& box);

}  // namespace kmq
