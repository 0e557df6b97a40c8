#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include "kmq/gcm.hpp"
#include "kmq/qpolynomial.hpp"
#include "kmq/roots.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace kmq::oracle {

// Positive roots of A1^(1) with multiplicities from the closed form:
// real roots n delta +- alpha_1, imaginary roots n delta of multiplicity 1.
inline std::vector<std::pair<RootVector, int>> affine_a1_roots(int max_height) {
  std::vector<std::pair<RootVector, int>> out{{RootVector{0, 1}, 1}};
  for (int n = 1; 2 * n - 1 <= max_height; ++n) {
    out.push_back({RootVector{n, n - 1}, 1});
    out.push_back({RootVector{n, n}, 1});
    out.push_back({RootVector{n, n + 1}, 1});
  }
  return out;
}

// Enumerates multisets of colored roots summing to beta; each multiset adds q^parts.
inline QPolynomial brute_force(const RootVector& beta, const std::vector<std::pair<RootVector, int>>& roots) {
  std::vector<RootVector> items;
  for (const auto& [r, m] : roots) {
    for (int c = 0; c < m; ++c) items.push_back(r);
  }
  QPolynomial out;
  std::function<void(std::size_t, const RootVector&, int)> go = [&](std::size_t start, const RootVector& rest,
                                                                    int parts) {
    if (rest.is_zero()) {
      out.add_term(parts, 1);
      return;
    }
    for (std::size_t k = start; k < items.size(); ++k) {
      if (items[k].below(rest)) go(k, rest - items[k], parts + 1);
    }
  };
  go(0, beta, 0);
  return out;
}

inline std::vector<RootVector> lattice_points(Eigen::Index rank, int max_height) {
  std::vector<RootVector> out;
  RootVector box = RootVector::zero(rank);
  box.coeffs.setConstant(max_height);
  for (const auto& p : box_points(box)) {
    if (p.height() <= max_height) out.push_back(p);
  }
  return out;
}

}  // namespace kmq::oracle
