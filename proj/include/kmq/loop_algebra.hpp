#pragma once

// Untwisted affine algebras realized as L[z, z^-1] + C c + C d over a finite
// simple L with structure constants taken from its matrix realization.
//
//   [x z^m, y z^n] = [x, y] z^(m+n) + delta_{m,-n} m <x, y> c
//   [d, x z^n]     = n x z^n
//
// Node 0 of the affine Cartan matrix is the extra node alpha_0 = delta - theta.

#include "kmq/gcm.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kmq {

enum class Part { raising = 0, cartan = 1, lowering = 2 };

/// Finite-dimensional sl_n in the basis {E_ij (i<j), H_k, E_ji (i<j)}.
struct FiniteLieAlgebra {
  struct Basis {
    std::string label;
    Part part;
    IntVector root;  // finite simple-root coordinates
    int cartan_index = -1;
  };
  using Sparse = std::vector<std::pair<int, int>>;  // (basis index, coefficient)

  int matrix_size = 0;
  std::vector<Basis> basis;
  std::vector<std::vector<Sparse>> bracket;  // bracket[i][j] = [b_i, b_j]
  IntMatrix form;                            // trace form, <theta, theta> = 2
  std::vector<std::pair<int, int>> conj;     // compact involution: conj(b_i) = sign * b_index

  int rank() const { return matrix_size - 1; }
  int dim() const { return static_cast<int>(basis.size()); }
  int find(const std::string& label) const;

  static FiniteLieAlgebra sl(int n);
};

/// Basis symbol of the affine algebra. The field order is the PBW order used
/// everywhere: principal depth, then E/H/F kind, then loop degree, then index.
struct Generator {
  static constexpr int kCentral = -1;
  static constexpr int kDerivation = -2;

  int depth = 0;  // minus the principal degree
  int kind = 0;   // Part as int
  int loop = 0;
  int basis = 0;  // finite basis index, or kCentral / kDerivation

  auto operator<=>(const Generator&) const = default;
};

/// Formal sum of generators with rational coefficients.
class LoopElement {
 public:
  LoopElement() = default;
  LoopElement(const Generator& g, Rational coeff = 1) { add(g, coeff); }

  LoopElement& add(const Generator& g, const Rational& coeff);
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Generator& g) const;
  const std::map<Generator, Rational>& terms() const { return terms_; }

  LoopElement& operator+=(const LoopElement& o);
  LoopElement& operator-=(const LoopElement& o);
  friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
  friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }
  friend LoopElement operator*(const Rational& k, LoopElement a);
  friend bool operator==(const LoopElement&, const LoopElement&) = default;

 private:
  std::map<Generator, Rational> terms_;
};

class AffineAlgebra {
 public:
  /// The untwisted affine algebra over sl_(rank + 1).
  explicit AffineAlgebra(int finite_rank);

  const FiniteLieAlgebra& finite() const { return finite_; }
  const GCM& gcm() const { return gcm_; }
  /// Principal degree of delta.
  int coxeter() const { return finite_.rank() + 1; }

  Generator loop(int basis, int loop_degree) const;
  Generator loop(const std::string& label, int loop_degree) const;
  Generator central() const;
  Generator derivation() const;

  Part part(const Generator& g) const;
  /// Root of g in affine simple-root coordinates (zero for the Cartan part).
  RootVector root(const Generator& g) const;
  int degree(const Generator& g) const { return -g.depth; }
  bool is_imaginary(const Generator& g) const;
  std::string label(const Generator& g) const;
  std::string label(const LoopElement& x) const;

  LoopElement bracket(const Generator& x, const Generator& y) const;
  LoopElement bracket(const LoopElement& x, const LoopElement& y) const;

  /// Anti-linear Cartan involution; linear on rational combinations.
  /// x z^m + a c + b d  ->  conj(x) z^-m - a c - b d.
  LoopElement conj(const LoopElement& x) const;
  std::pair<Generator, int> conj(const Generator& g) const;
  /// The anti-automorphism -conj, sending e_i to f_i; the Shapovalov form is
  /// contravariant for it.
  std::pair<Generator, int> transpose(const Generator& g) const;

  /// Basic invariant form: <x z^m, y z^n> = delta_{m+n,0} <x, y>, <c, d> = 1.
  Rational form(const Generator& x, const Generator& y) const;
  Rational form(const LoopElement& x, const LoopElement& y) const;

  /// Degree-homogeneity test: the common principal degree, if any.
  std::optional<int> homogeneous_degree(const LoopElement& x) const;

  /// Generators whose loop part has principal degree `degree`. Degree 0
  /// includes the finite Cartan, c and d.
  std::vector<Generator> graded_generators(int degree) const;

 private:
  FiniteLieAlgebra finite_;
  GCM gcm_;
};

}  // namespace kmq
