#pragma once

#include "kmq/brylinski.hpp"
#include "kmq/gcm.hpp"
#include "kmq/qpolynomial.hpp"

#include <doctest.h>

#include <initializer_list>
#include <vector>

namespace kmq::test {

inline GCM gcm(std::initializer_list<std::initializer_list<int>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return validate_gcm(m);
}

// A1^(1) weight from the (alpha, h, n) triple.
inline Weight a1w(int alpha, int h, int n) { return affine_a1_weight(alpha, h, n); }

inline Weight weight(std::initializer_list<int> coroot, std::initializer_list<int> scaling = {}) {
  VectorQ c(static_cast<Eigen::Index>(coroot.size()));
  Eigen::Index i = 0;
  for (int v : coroot) c(i++) = v;
  VectorQ s(static_cast<Eigen::Index>(scaling.size()));
  i = 0;
  for (int v : scaling) s(i++) = v;
  return Weight(c, s);
}

// Coefficients listed from q^0 upward.
inline QPolynomial poly(std::initializer_list<long long> coeffs) {
  return QPolynomial::from_coeffs(std::vector<long long>(coeffs));
}

}  // namespace kmq::test
