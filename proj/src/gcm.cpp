#include "kmq/gcm.hpp"

#include "kmq/errors.hpp"
#include "kmq/linalg.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <queue>
#include <sstream>

namespace kmq {

// ---------------------------------------------------------------- RootVector

RootVector::RootVector(std::initializer_list<int> c) : coeffs(static_cast<Eigen::Index>(c.size())) {
  Eigen::Index i = 0;
  for (int x : c) coeffs(i++) = x;
}

RootVector RootVector::simple(Eigen::Index n, Eigen::Index i) {
  RootVector r = zero(n);
  r.coeffs(i) = 1;
  return r;
}

bool RootVector::below(const RootVector& other) const {
  if (size() != other.size()) throw DimensionMismatch("root vectors of different rank");
  return (coeffs.array() <= other.coeffs.array()).all();
}

int RootVector::content() const {
  int g = 0;
  for (Eigen::Index i = 0; i < size(); ++i) g = std::gcd(g, coeffs(i));
  return g;
}

RootVector& RootVector::operator+=(const RootVector& o) {
  if (size() != o.size()) throw DimensionMismatch("root vectors of different rank");
  coeffs += o.coeffs;
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  if (size() != o.size()) throw DimensionMismatch("root vectors of different rank");
  coeffs -= o.coeffs;
  return *this;
}

bool operator==(const RootVector& a, const RootVector& b) {
  return a.size() == b.size() && a.coeffs == b.coeffs;
}

std::strong_ordering operator<=>(const RootVector& a, const RootVector& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (auto c = a.coeffs(i) <=> b.coeffs(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string RootVector::str() const {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index i = 0; i < size(); ++i) os << (i ? "," : "") << coeffs(i);
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- GCM

namespace {

void check_axioms(const IntMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw NotGCM("matrix must be square and nonempty");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 2) throw NotGCM("diagonal entry A[" + std::to_string(i) + "] is not 2");
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i == j) continue;
      if (m(i, j) > 0) {
        throw NotGCM("positive off-diagonal entry A[" + std::to_string(i) + "][" +
                     std::to_string(j) + "]");
      }
      if ((m(i, j) == 0) != (m(j, i) == 0)) {
        throw NotGCM("asymmetric zero pattern at A[" + std::to_string(i) + "][" +
                     std::to_string(j) + "]");
      }
    }
  }
}

// Connected components of the Dynkin graph restricted to `nodes`.
std::vector<std::vector<int>> components(const IntMatrix& m, const std::vector<int>& nodes) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(nodes.size(), false);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> block;
    std::queue<std::size_t> todo;
    todo.push(s);
    seen[s] = true;
    while (!todo.empty()) {
      const std::size_t u = todo.front();
      todo.pop();
      block.push_back(nodes[u]);
      for (std::size_t v = 0; v < nodes.size(); ++v) {
        if (!seen[v] && m(nodes[u], nodes[v]) != 0) {
          seen[v] = true;
          todo.push(v);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<int> all_nodes(Eigen::Index n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

VectorQ solve_symmetrizer(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  VectorQ d = VectorQ::Zero(n);
  for (const auto& block : components(m, all_nodes(n))) {
    d(block.front()) = 1;
    std::queue<int> todo;
    todo.push(block.front());
    while (!todo.empty()) {
      const int i = todo.front();
      todo.pop();
      for (int j : block) {
        if (i == j || m(i, j) == 0) continue;
        // d_i A_ij = d_j A_ji
        const Rational want = d(i) * m(i, j) / m(j, i);
        if (d(j) == 0) {
          d(j) = want;
          todo.push(j);
        } else if (d(j) != want) {
          throw NotSymmetrizable("no positive diagonal D makes D*A symmetric (cycle through nodes " +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    }
    Rational smallest = d(block.front());
    for (int i : block) smallest = std::min(smallest, d(i));
    for (int i : block) d(i) /= smallest;
  }
  return d;
}

IntMatrix choose_scaling(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  MatrixQ functionals = m.transpose().cast<Rational>();
  Eigen::Index current = linalg::rank<Rational>(functionals);
  std::vector<Eigen::Index> picks;
  for (Eigen::Index j = 0; j < n && current < n; ++j) {
    MatrixQ trial(n, functionals.cols() + 1);
    trial << functionals, VectorQ::Unit(n, j);
    const Eigen::Index r = linalg::rank<Rational>(trial);
    if (r > current) {
      functionals = std::move(trial);
      current = r;
      picks.push_back(j);
    }
  }
  IntMatrix scaling = IntMatrix::Zero(n, static_cast<Eigen::Index>(picks.size()));
  for (std::size_t s = 0; s < picks.size(); ++s) scaling(picks[s], static_cast<Eigen::Index>(s)) = 1;
  return scaling;
}

MatrixQ weight_form_for(const GCM& a) {
  const Eigen::Index n = a.rank();
  const Eigen::Index r = a.corank();
  MatrixQ gram = MatrixQ::Zero(n + r, n + r);
  // (alpha_i^v, h) = alpha_i(h) / D_i
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < n; ++k) gram(i, k) = Rational(a.matrix(k, i)) / a.symmetrizer(i);
    for (Eigen::Index s = 0; s < r; ++s) {
      gram(i, n + s) = Rational(a.scaling(i, s)) / a.symmetrizer(i);
      gram(n + s, i) = gram(i, n + s);
    }
  }
  try {
    return linalg::inverse<Rational>(gram);
  } catch (const std::domain_error&) {
    throw InternalInconsistency("realization of the Cartan matrix is degenerate");
  }
}

GCM finish(const IntMatrix& matrix, VectorQ symmetrizer) {
  GCM a;
  a.matrix = matrix;
  a.symmetrizer = std::move(symmetrizer);
  a.scaling = choose_scaling(matrix);
  a.weight_form = weight_form_for(a);
  return a;
}

}  // namespace

GCM validate_gcm(const IntMatrix& matrix) {
  check_axioms(matrix);
  return finish(matrix, solve_symmetrizer(matrix));
}

GCM validate_gcm(const IntMatrix& matrix, const VectorQ& symmetrizer) {
  check_axioms(matrix);
  if (symmetrizer.size() != matrix.rows()) throw DimensionMismatch("symmetrizer length != rank");
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    if (symmetrizer(i) <= 0) throw NotSymmetrizable("symmetrizer entries must be positive");
    for (Eigen::Index j = 0; j < matrix.rows(); ++j) {
      if (symmetrizer(i) * matrix(i, j) != symmetrizer(j) * matrix(j, i)) {
        throw NotSymmetrizable("supplied symmetrizer does not make D*A symmetric");
      }
    }
  }
  return finish(matrix, symmetrizer);
}

std::uint64_t GCM::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::string_view bytes) {
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  mix(std::to_string(rank()));
  for (Eigen::Index i = 0; i < rank(); ++i) {
    for (Eigen::Index j = 0; j < rank(); ++j) mix("," + std::to_string(matrix(i, j)));
  }
  for (Eigen::Index i = 0; i < rank(); ++i) mix(";" + to_string(symmetrizer(i)));
  return h;
}

std::string GCM::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

// ---------------------------------------------------------------- Weight

Weight Weight::zero(const GCM& a) {
  return Weight(VectorQ::Zero(a.rank()), VectorQ::Zero(a.corank()));
}

bool Weight::is_dominant() const {
  for (Eigen::Index i = 0; i < coroot_values.size(); ++i) {
    if (coroot_values(i) < 0) return false;
  }
  return true;
}

bool Weight::is_integral() const {
  for (Eigen::Index i = 0; i < coroot_values.size(); ++i) {
    if (!kmq::is_integer(coroot_values(i))) return false;
  }
  return true;
}

Weight& Weight::operator+=(const Weight& o) {
  if (coroot_values.size() != o.coroot_values.size() ||
      scaling_values.size() != o.scaling_values.size()) {
    throw DimensionMismatch("weights of different shape");
  }
  coroot_values += o.coroot_values;
  scaling_values += o.scaling_values;
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (coroot_values.size() != o.coroot_values.size() ||
      scaling_values.size() != o.scaling_values.size()) {
    throw DimensionMismatch("weights of different shape");
  }
  coroot_values -= o.coroot_values;
  scaling_values -= o.scaling_values;
  return *this;
}

bool operator==(const Weight& a, const Weight& b) {
  return a.coroot_values.size() == b.coroot_values.size() &&
         a.scaling_values.size() == b.scaling_values.size() &&
         a.coroot_values == b.coroot_values && a.scaling_values == b.scaling_values;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < coroot_values.size(); ++i) {
    os << (i ? "," : "") << to_string(coroot_values(i));
  }
  if (scaling_values.size() > 0) {
    os << ';';
    for (Eigen::Index i = 0; i < scaling_values.size(); ++i) {
      os << (i ? "," : "") << to_string(scaling_values(i));
    }
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- classify

std::string to_string(BlockType t) {
  switch (t) {
    case BlockType::finite:
      return "finite";
    case BlockType::affine:
      return "affine";
    case BlockType::indefinite:
      return "indefinite";
  }
  return "?";
}

SubmatrixType classify(const GCM& a, const std::vector<int>& subset) {
  if (subset.empty()) throw InputError("classify: empty node subset");
  for (int i : subset) {
    if (i < 0 || i >= a.rank()) throw DimensionMismatch("classify: node index out of range");
  }
  std::vector<int> nodes = subset;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  SubmatrixType out;
  for (auto& block : components(a.matrix, nodes)) {
    const auto k = static_cast<Eigen::Index>(block.size());
    MatrixQ sym(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) {
        sym(i, j) = a.symmetrizer(block[i]) * a.matrix(block[i], block[j]);
      }
    }
    const auto piv = linalg::symmetric_pivots<Rational>(sym);
    BlockType type = BlockType::indefinite;
    if (piv.psd && piv.rank() == k) {
      type = BlockType::finite;
    } else if (piv.psd && piv.rank() == k - 1) {
      type = BlockType::affine;
    }
    out.tag = std::max(out.tag, type);
    out.blocks.push_back({std::move(block), type});
  }
  return out;
}

SubmatrixType classify(const GCM& a) { return classify(a, all_nodes(a.rank())); }

// ---------------------------------------------------------------- forms and actions

Weight root_weight(const GCM& a, const RootVector& beta) {
  if (beta.size() != a.rank()) throw DimensionMismatch("root vector rank does not match GCM");
  const IntVector coroot = a.matrix * beta.coeffs;
  const IntVector scaling = a.scaling.transpose() * beta.coeffs;
  return Weight(coroot.cast<Rational>(), scaling.cast<Rational>());
}

Rational bilinear(const RootVector& x, const RootVector& y, const GCM& a) {
  if (x.size() != a.rank() || y.size() != a.rank()) throw DimensionMismatch("bilinear: rank mismatch");
  Rational sum = 0;
  for (Eigen::Index i = 0; i < a.rank(); ++i) {
    if (x[i] == 0) continue;
    for (Eigen::Index j = 0; j < a.rank(); ++j) {
      if (y[j] != 0) sum += a.symmetrizer(i) * a.matrix(i, j) * x[i] * y[j];
    }
  }
  return sum;
}

Rational bilinear(const Weight& x, const RootVector& y, const GCM& a) {
  if (x.coroot_values.size() != a.rank() || y.size() != a.rank()) {
    throw DimensionMismatch("bilinear: rank mismatch");
  }
  Rational sum = 0;
  for (Eigen::Index i = 0; i < a.rank(); ++i) {
    if (y[i] != 0) sum += a.symmetrizer(i) * x.coroot_values(i) * y[i];
  }
  return sum;
}

Rational bilinear(const RootVector& x, const Weight& y, const GCM& a) { return bilinear(y, x, a); }

Rational bilinear(const Weight& x, const Weight& y, const GCM& a) {
  if (x.coroot_values.size() != a.rank() || y.coroot_values.size() != a.rank() ||
      x.scaling_values.size() != a.corank() || y.scaling_values.size() != a.corank()) {
    throw DimensionMismatch("bilinear: weight shape does not match GCM");
  }
  VectorQ vx(a.rank() + a.corank()), vy(a.rank() + a.corank());
  vx << x.coroot_values, x.scaling_values;
  vy << y.coroot_values, y.scaling_values;
  return vy.dot(a.weight_form * vx);
}

Weight rho(const GCM& a) { return Weight(VectorQ::Ones(a.rank()), VectorQ::Zero(a.corank())); }

Weight reflect(const GCM& a, int i, const Weight& nu) {
  if (i < 0 || i >= a.rank()) throw DimensionMismatch("reflection index out of range");
  Weight out = nu;
  const Rational k = nu.coroot_values(i);
  for (Eigen::Index j = 0; j < a.rank(); ++j) out.coroot_values(j) -= k * a.matrix(j, i);
  for (Eigen::Index s = 0; s < a.corank(); ++s) out.scaling_values(s) -= k * a.scaling(i, s);
  return out;
}

Weight shifted_action(const std::vector<int>& word, const Weight& lambda, const GCM& a) {
  const Weight r = rho(a);
  Weight nu = lambda + r;
  for (auto it = word.rbegin(); it != word.rend(); ++it) nu = reflect(a, *it, nu);
  return nu - r;
}

std::optional<RootVector> root_difference(const Weight& x, const Weight& y, const GCM& a) {
  const Weight diff = x - y;
  const Eigen::Index n = a.rank();
  MatrixQ system(n + a.corank(), n);
  system << a.matrix.cast<Rational>(), a.scaling.transpose().cast<Rational>();
  VectorQ rhs(n + a.corank());
  rhs << diff.coroot_values, diff.scaling_values;
  const auto sol = linalg::solve<Rational>(system, rhs);
  if (!sol) return std::nullopt;
  RootVector out = RootVector::zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!kmq::is_integer((*sol)(i))) return std::nullopt;
    out[i] = static_cast<int>(to_bigint((*sol)(i)));
  }
  return out;
}

namespace {

IntVector positive_kernel_vector(const MatrixQ& m) {
  const MatrixQ ker = linalg::kernel<Rational>(m);
  if (ker.cols() != 1) throw InputError("matrix is not of affine type (kernel dimension != 1)");
  VectorQ v = ker.col(0);
  if (v(0) < 0) v = -v;
  BigInt den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) <= 0) throw InputError("matrix is not of affine type (kernel vector not positive)");
    den = mp::lcm(den, mp::denominator(v(i)));
  }
  BigInt g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = mp::gcd(g, to_bigint(v(i) * den));
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = static_cast<int>(to_bigint(v(i) * den) / g);
  return out;
}

}  // namespace

IntVector kac_labels(const GCM& a) { return positive_kernel_vector(a.matrix.cast<Rational>()); }

IntVector dual_kac_labels(const GCM& a) {
  return positive_kernel_vector(a.matrix.transpose().cast<Rational>());
}

Rational level(const Weight& lambda, const GCM& a) {
  const IntVector labels = dual_kac_labels(a);
  Rational sum = 0;
  for (Eigen::Index i = 0; i < a.rank(); ++i) sum += labels(i) * lambda.coroot_values(i);
  return sum;
}

namespace cartan {

GCM finite_a(int rank) {
  if (rank < 1) throw InputError("finite_a: rank must be >= 1");
  IntMatrix m = 2 * IntMatrix::Identity(rank, rank);
  for (int i = 0; i + 1 < rank; ++i) m(i, i + 1) = m(i + 1, i) = -1;
  return validate_gcm(m);
}

GCM affine_a(int rank) {
  if (rank < 1) throw InputError("affine_a: rank must be >= 1");
  const int n = rank + 1;
  IntMatrix m = 2 * IntMatrix::Identity(n, n);
  if (rank == 1) {
    m(0, 1) = m(1, 0) = -2;
  } else {
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      m(i, j) = m(j, i) = -1;
    }
  }
  return validate_gcm(m);
}

}  // namespace cartan

}  // namespace kmq
