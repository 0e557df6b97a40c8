#include "kmq/qpolynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace kmq {

QPolynomial::QPolynomial(long long constant) {
  if (constant != 0) terms_.emplace(0, BigInt(constant));
}

QPolynomial QPolynomial::monomial(int exponent, BigInt coeff) {
  QPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

QPolynomial QPolynomial::from_coeffs(const std::vector<long long>& dense) {
  QPolynomial p;
  for (std::size_t i = 0; i < dense.size(); ++i) p.add_term(static_cast<int>(i), BigInt(dense[i]));
  return p;
}

BigInt QPolynomial::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt QPolynomial::at_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

BigInt QPolynomial::at(const BigInt& q) const {
  BigInt sum = 0;
  BigInt power = 1;
  int e = 0;
  for (const auto& [exponent, c] : terms_) {
    for (; e < exponent; ++e) power *= q;
    sum += c * power;
  }
  return sum;
}

bool QPolynomial::nonnegative() const {
  for (const auto& [e, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

QPolynomial& QPolynomial::add_term(int exponent, const BigInt& coeff) {
  if (exponent < 0) throw std::invalid_argument("negative exponent in QPolynomial");
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  QPolynomial out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  *this = std::move(out);
  return *this;
}

QPolynomial QPolynomial::shifted(int k) const {
  QPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(e + k, c);
  return out;
}

QPolynomial operator-(QPolynomial a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string QPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::vector<std::pair<int, std::string>> QPolynomial::serialized() const {
  std::vector<std::pair<int, std::string>> out;
  for (const auto& [e, c] : terms_) out.emplace_back(e, c.str());
  return out;
}

}  // namespace kmq
