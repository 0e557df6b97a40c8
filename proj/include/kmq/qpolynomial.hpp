#pragma once

#include "kmq/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kmq {

/// Sparse polynomial in q with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(long long constant);  // NOLINT: implicit, so 0 and 1 read naturally
  static QPolynomial monomial(int exponent, BigInt coeff = 1);
  /// From dense coefficients, lowest degree first.
  static QPolynomial from_coeffs(const std::vector<long long>& dense);

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  int low_degree() const { return terms_.empty() ? -1 : terms_.begin()->first; }
  BigInt coeff(int exponent) const;
  const std::map<int, BigInt>& terms() const { return terms_; }

  BigInt at_one() const;
  BigInt at(const BigInt& q) const;
  bool nonnegative() const;

  QPolynomial& add_term(int exponent, const BigInt& coeff);
  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  /// Multiplies by q^k.
  QPolynomial shifted(int k) const;

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend QPolynomial operator-(QPolynomial a);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// "q^2 + q^4", "1 + 2q - q^3", "0".
  std::string str() const;
  /// [[exponent, "coefficient"], ...] ascending.
  std::vector<std::pair<int, std::string>> serialized() const;

 private:
  std::map<int, BigInt> terms_;
};

}  // namespace kmq
