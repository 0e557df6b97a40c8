#include "kmq/loop_algebra.hpp"

#include "kmq/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace kmq {

// ---------------------------------------------------------------- sl_n

int FiniteLieAlgebra::find(const std::string& label) const {
  for (int i = 0; i < dim(); ++i) {
    if (basis[static_cast<std::size_t>(i)].label == label) return i;
  }
  throw InputError("no basis element labelled '" + label + "'");
}

FiniteLieAlgebra FiniteLieAlgebra::sl(int n) {
  if (n < 2) throw InputError("sl(n) needs n >= 2");
  const int l = n - 1;
  FiniteLieAlgebra g;
  g.matrix_size = n;

  std::vector<IntMatrix> mats;
  std::vector<std::pair<int, int>> positive;  // (i, j), i < j
  for (int h = 1; h < n; ++h) {
    for (int i = 0; i + h < n; ++i) positive.emplace_back(i, i + h);
  }
  auto root_label = [n](int i, int j) {
    if (n == 2) return std::string();
    std::string s;
    for (int k = i; k < j; ++k) s += std::to_string(k + 1);
    return s;
  };
  auto unit = [n](int r, int c) {
    IntMatrix m = IntMatrix::Zero(n, n);
    m(r, c) = 1;
    return m;
  };
  for (auto [i, j] : positive) {
    IntVector root = IntVector::Zero(l);
    root.segment(i, j - i).setOnes();
    g.basis.push_back({"E" + root_label(i, j), Part::raising, root});
    mats.push_back(unit(i, j));
  }
  for (int k = 0; k < l; ++k) {
    g.basis.push_back({n == 2 ? "H" : "H" + std::to_string(k + 1), Part::cartan, IntVector::Zero(l), k});
    mats.push_back(unit(k, k) - unit(k + 1, k + 1));
  }
  for (auto [i, j] : positive) {
    IntVector root = IntVector::Zero(l);
    root.segment(i, j - i).setConstant(-1);
    g.basis.push_back({"F" + root_label(i, j), Part::lowering, root});
    mats.push_back(unit(j, i));
  }

  const int dim = g.dim();
  auto decompose = [&](const IntMatrix& m) {
    Sparse out;
    for (int b = 0; b < dim; ++b) {
      const auto& info = g.basis[static_cast<std::size_t>(b)];
      if (info.part == Part::cartan) {
        int c = 0;  // coefficient of H_k is d_0 + ... + d_k
        for (int k = 0; k <= info.cartan_index; ++k) c += m(k, k);
        if (c) out.emplace_back(b, c);
      } else {
        const IntMatrix& e = mats[static_cast<std::size_t>(b)];
        int r = 0, c = 0;
        e.maxCoeff(&r, &c);
        if (m(r, c)) out.emplace_back(b, m(r, c));
      }
    }
    return out;
  };

  g.bracket.assign(static_cast<std::size_t>(dim), std::vector<Sparse>(static_cast<std::size_t>(dim)));
  g.form.resize(dim, dim);
  g.conj.resize(static_cast<std::size_t>(dim));
  for (int a = 0; a < dim; ++a) {
    const IntMatrix& x = mats[static_cast<std::size_t>(a)];
    for (int b = 0; b < dim; ++b) {
      const IntMatrix& y = mats[static_cast<std::size_t>(b)];
      g.bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = decompose(x * y - y * x);
      g.form(a, b) = (x * y).trace();
    }
    // conj(x) = -x^T
    const Sparse t = decompose(x.transpose());
    if (t.size() != 1 || t.front().second != 1) {
      throw InternalInconsistency("transpose does not permute the sl(n) basis");
    }
    g.conj[static_cast<std::size_t>(a)] = {t.front().first, -1};
  }
  return g;
}

// ---------------------------------------------------------------- LoopElement

LoopElement& LoopElement::add(const Generator& g, const Rational& coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Rational LoopElement::coeff(const Generator& g) const {
  const auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

LoopElement& LoopElement::operator-=(const LoopElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

LoopElement operator*(const Rational& k, LoopElement a) {
  if (k == 0) return LoopElement();
  for (auto& [g, c] : a.terms_) c *= k;
  return a;
}

// ---------------------------------------------------------------- AffineAlgebra

AffineAlgebra::AffineAlgebra(int finite_rank)
    : finite_(FiniteLieAlgebra::sl(finite_rank + 1)), gcm_(cartan::affine_a(finite_rank)) {}

Generator AffineAlgebra::loop(int basis, int loop_degree) const {
  if (basis < 0 || basis >= finite_.dim()) throw InputError("finite basis index out of range");
  const auto& info = finite_.basis[static_cast<std::size_t>(basis)];
  Generator g;
  g.depth = -(info.root.sum() + loop_degree * coxeter());
  g.kind = static_cast<int>(info.part);
  g.loop = loop_degree;
  g.basis = basis;
  return g;
}

Generator AffineAlgebra::loop(const std::string& label, int loop_degree) const {
  return loop(finite_.find(label), loop_degree);
}

Generator AffineAlgebra::central() const {
  return Generator{0, static_cast<int>(Part::cartan), 0, Generator::kCentral};
}

Generator AffineAlgebra::derivation() const {
  return Generator{0, static_cast<int>(Part::cartan), 0, Generator::kDerivation};
}

Part AffineAlgebra::part(const Generator& g) const {
  if (g.basis < 0) return Part::cartan;
  if (g.loop > 0) return Part::raising;
  if (g.loop < 0) return Part::lowering;
  return finite_.basis[static_cast<std::size_t>(g.basis)].part;
}

RootVector AffineAlgebra::root(const Generator& g) const {
  const int l = finite_.rank();
  RootVector r = RootVector::zero(l + 1);
  if (g.basis < 0) return r;
  const auto& info = finite_.basis[static_cast<std::size_t>(g.basis)];
  r[0] = g.loop;
  for (int i = 0; i < l; ++i) r[i + 1] = info.root(i) + g.loop;
  return r;
}

bool AffineAlgebra::is_imaginary(const Generator& g) const {
  return g.basis >= 0 && g.loop != 0 &&
         finite_.basis[static_cast<std::size_t>(g.basis)].part == Part::cartan;
}

std::string AffineAlgebra::label(const Generator& g) const {
  if (g.basis == Generator::kCentral) return "c";
  if (g.basis == Generator::kDerivation) return "d";
  std::string s = finite_.basis[static_cast<std::size_t>(g.basis)].label;
  if (g.loop == 1) return s + "z";
  if (g.loop != 0) return s + "z^" + std::to_string(g.loop);
  return s;
}

std::string AffineAlgebra::label(const LoopElement& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [g, c] : x.terms()) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1) out += to_string(mag) + "*";
    out += label(g);
  }
  return out;
}

LoopElement AffineAlgebra::bracket(const Generator& x, const Generator& y) const {
  LoopElement out;
  if (x.basis == Generator::kCentral || y.basis == Generator::kCentral) return out;
  if (x.basis == Generator::kDerivation) {
    if (y.basis >= 0 && y.loop != 0) out.add(y, y.loop);
    return out;
  }
  if (y.basis == Generator::kDerivation) {
    if (x.loop != 0) out.add(x, -x.loop);
    return out;
  }
  const int m = x.loop + y.loop;
  for (auto [k, c] : finite_.bracket[static_cast<std::size_t>(x.basis)][static_cast<std::size_t>(y.basis)]) {
    out.add(loop(k, m), c);
  }
  if (m == 0 && x.loop != 0) {
    const int f = finite_.form(x.basis, y.basis);
    if (f) out.add(central(), x.loop * f);
  }
  return out;
}

LoopElement AffineAlgebra::bracket(const LoopElement& x, const LoopElement& y) const {
  LoopElement out;
  for (const auto& [gx, cx] : x.terms()) {
    for (const auto& [gy, cy] : y.terms()) out += (cx * cy) * bracket(gx, gy);
  }
  return out;
}

std::pair<Generator, int> AffineAlgebra::conj(const Generator& g) const {
  if (g.basis < 0) return {g, -1};
  const auto [b, sign] = finite_.conj[static_cast<std::size_t>(g.basis)];
  return {loop(b, -g.loop), sign};
}

LoopElement AffineAlgebra::conj(const LoopElement& x) const {
  LoopElement out;
  for (const auto& [g, c] : x.terms()) {
    const auto [h, sign] = conj(g);
    out.add(h, sign * c);
  }
  return out;
}

std::pair<Generator, int> AffineAlgebra::transpose(const Generator& g) const {
  const auto [h, sign] = conj(g);
  return {h, -sign};
}

Rational AffineAlgebra::form(const Generator& x, const Generator& y) const {
  if (x.basis >= 0 && y.basis >= 0) {
    return x.loop + y.loop == 0 ? Rational(finite_.form(x.basis, y.basis)) : Rational(0);
  }
  const bool cd = x.basis == Generator::kCentral && y.basis == Generator::kDerivation;
  const bool dc = x.basis == Generator::kDerivation && y.basis == Generator::kCentral;
  return (cd || dc) ? Rational(1) : Rational(0);
}

Rational AffineAlgebra::form(const LoopElement& x, const LoopElement& y) const {
  Rational sum = 0;
  for (const auto& [gx, cx] : x.terms()) {
    for (const auto& [gy, cy] : y.terms()) sum += cx * cy * form(gx, gy);
  }
  return sum;
}

std::optional<int> AffineAlgebra::homogeneous_degree(const LoopElement& x) const {
  std::optional<int> deg;
  for (const auto& [g, c] : x.terms()) {
    if (deg && *deg != degree(g)) return std::nullopt;
    deg = degree(g);
  }
  return deg ? deg : std::optional<int>(0);
}

std::vector<Generator> AffineAlgebra::graded_generators(int degree) const {
  std::vector<Generator> out;
  for (int b = 0; b < finite_.dim(); ++b) {
    const int ht = finite_.basis[static_cast<std::size_t>(b)].root.sum();
    const int rem = degree - ht;
    if (rem % coxeter() != 0) continue;
    out.push_back(loop(b, rem / coxeter()));
  }
  if (degree == 0) {
    out.push_back(central());
    out.push_back(derivation());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kmq
