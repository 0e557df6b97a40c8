#include "support.hpp"

#include "kmq/errors.hpp"
#include "kmq/linalg.hpp"

#include <numeric>
#include <random>

using namespace kmq;
using kmq::test::gcm;

namespace {

bool symmetrized(const GCM& a) {
  for (Eigen::Index i = 0; i < a.rank(); ++i) {
    if (a.symmetrizer(i) <= 0) return false;
    for (Eigen::Index j = 0; j < a.rank(); ++j) {
      if (a.symmetrizer(i) * a(i, j) != a.symmetrizer(j) * a(j, i)) return false;
    }
  }
  return true;
}

// All words of length <= n over the given alphabet.
std::vector<std::vector<int>> words(int letters, int n) {
  std::vector<std::vector<int>> out{{}};
  std::size_t begin = 0;
  for (int len = 1; len <= n; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (int i = 0; i < letters; ++i) {
        auto w = out[k];
        w.push_back(i);
        out.push_back(w);
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace

TEST_CASE("validate_gcm computes a normalized symmetrizer") {
  CHECK(gcm({{2}}).symmetrizer == VectorQ::Ones(1));
  CHECK(gcm({{2, -2}, {-2, 2}}).symmetrizer == VectorQ::Ones(2));

  const GCM b = gcm({{2, -1}, {-4, 2}});
  CHECK(b.symmetrizer(0) == 4);
  CHECK(b.symmetrizer(1) == 1);
  CHECK(symmetrized(b));

  // Two blocks are normalized independently.
  const GCM split = gcm({{2, -2, 0}, {-1, 2, 0}, {0, 0, 2}});
  CHECK(split.symmetrizer(0) == 1);
  CHECK(split.symmetrizer(1) == 2);
  CHECK(split.symmetrizer(2) == 1);
}

TEST_CASE("validate_gcm rejects bad matrices") {
  CHECK_THROWS_AS(gcm({{1}}), NotGCM);
  CHECK_THROWS_AS(gcm({{2, 1}, {-1, 2}}), NotGCM);
  CHECK_THROWS_AS(gcm({{2, 0}, {-1, 2}}), NotGCM);
  // A cycle whose product of ratios is not 1.
  CHECK_THROWS_AS(gcm({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}), NotSymmetrizable);

  VectorQ d(2);
  d << 1, 2;
  CHECK_THROWS_AS(validate_gcm(cartan::finite_a(2).matrix, d), NotSymmetrizable);
}

TEST_CASE("random symmetrizable matrices get exact symmetrizers") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(0, 3);
  std::uniform_int_distribution<int> scale(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 4;
    // D^-1 S with S symmetric non-positive off the diagonal: choose D, then S.
    std::vector<int> dd(static_cast<std::size_t>(n));
    for (auto& v : dd) v = scale(rng);
    IntMatrix m = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      m(i, i) = 2;
      for (int j = i + 1; j < n; ++j) {
        // s_ij must be divisible by both d_i and d_j.
        const int l = std::lcm(dd[static_cast<std::size_t>(i)], dd[static_cast<std::size_t>(j)]);
        const int s = -l * entry(rng);
        m(i, j) = s / dd[static_cast<std::size_t>(i)];
        m(j, i) = s / dd[static_cast<std::size_t>(j)];
      }
    }
    const GCM a = validate_gcm(m);
    CHECK(symmetrized(a));
  }
}

TEST_CASE("classify") {
  CHECK(classify(gcm({{2}})).tag == BlockType::finite);
  CHECK(classify(gcm({{2, -2}, {-2, 2}})).tag == BlockType::affine);
  CHECK(classify(gcm({{2, -3}, {-3, 2}})).tag == BlockType::indefinite);
  CHECK(classify(cartan::affine_a(2)).tag == BlockType::affine);
  CHECK(classify(cartan::finite_a(4)).tag == BlockType::finite);

  const GCM h = gcm({{2, -3}, {-3, 2}});
  CHECK(classify(h, {0}).tag == BlockType::finite);
  CHECK(classify(h, {1}).tag == BlockType::finite);

  // Direct sum of an affine and a finite block.
  const GCM sum = gcm({{2, -2, 0}, {-2, 2, 0}, {0, 0, 2}});
  const auto t = classify(sum);
  CHECK(t.tag == BlockType::affine);
  REQUIRE(t.blocks.size() == 2);
  CHECK(t.blocks[0].type == BlockType::affine);
  CHECK(t.blocks[1].type == BlockType::finite);

  CHECK_THROWS_AS(classify(sum, {}), InputError);
}

TEST_CASE("classification is stable under simultaneous permutation") {
  const std::vector<IntMatrix> mats{cartan::affine_a(3).matrix, cartan::finite_a(3).matrix,
                                    gcm({{2, -1, 0}, {-3, 2, -1}, {0, -1, 2}}).matrix,
                                    gcm({{2, -3, 0}, {-3, 2, 0}, {0, 0, 2}}).matrix};
  for (const auto& m : mats) {
    const BlockType reference = classify(validate_gcm(m)).tag;
    std::vector<int> perm(static_cast<std::size_t>(m.rows()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      IntMatrix p(m.rows(), m.cols());
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) p(i, j) = m(perm[i], perm[j]);
      }
      CHECK(classify(validate_gcm(p)).tag == reference);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("affine blocks carry a positive kernel vector of the transpose") {
  for (int l = 1; l <= 5; ++l) {
    const GCM a = cartan::affine_a(l);
    const auto t = classify(a);
    REQUIRE(t.tag == BlockType::affine);
    const IntVector c = dual_kac_labels(a);
    CHECK((c.array() > 0).all());
    CHECK((a.matrix.transpose() * c).isZero());
    CHECK((a.matrix * kac_labels(a)).isZero());
  }
  const GCM g2 = gcm({{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}});  // G2^(1)
  REQUIRE(classify(g2).tag == BlockType::affine);
  const IntVector c = dual_kac_labels(g2);
  CHECK((c.array() > 0).all());
  CHECK((g2.matrix.transpose() * c).isZero());
}

TEST_CASE("bilinear form") {
  const GCM a = cartan::affine_a(1);
  const RootVector a0 = RootVector::simple(2, 0);
  const RootVector a1 = RootVector::simple(2, 1);
  const RootVector delta{1, 1};
  CHECK(bilinear(a1, a1, a) == 2);
  CHECK(bilinear(delta, delta, a) == 0);
  CHECK(bilinear(rho(a), delta, a) == 2);
  CHECK(bilinear(a0, a1, a) == -2);

  const GCM b = gcm({{2, -1}, {-4, 2}});
  CHECK(bilinear(RootVector{1, 0}, RootVector{1, 0}, b) == 8);
  CHECK(bilinear(RootVector{1, 0}, RootVector{0, 1}, b) == -4);
  CHECK(bilinear(RootVector{0, 1}, RootVector{1, 0}, b) == -4);
  // Weight against root agrees with the root-root pairing.
  CHECK(bilinear(root_weight(b, RootVector{2, 3}), RootVector{1, 1}, b) ==
        bilinear(RootVector{2, 3}, RootVector{1, 1}, b));

  CHECK_THROWS_AS(bilinear(RootVector{1}, RootVector{1, 0}, b), DimensionMismatch);
}

TEST_CASE("bilinear is symmetric") {
  const std::vector<GCM> algebras{cartan::affine_a(1), cartan::affine_a(2), gcm({{2, -1}, {-4, 2}}),
                                  gcm({{2, -3}, {-3, 2}})};
  for (const auto& a : algebras) {
    const Eigen::Index n = a.rank();
    std::vector<Weight> ws{rho(a)};
    for (Eigen::Index i = 0; i < n; ++i) {
      ws.push_back(root_weight(a, RootVector::simple(n, i)));
      Weight w = rho(a);
      w.coroot_values(i) += 3;
      if (a.corank()) w.scaling_values(0) = -2;
      ws.push_back(w);
    }
    for (const auto& x : ws) {
      for (const auto& y : ws) CHECK(bilinear(x, y, a) == bilinear(y, x, a));
    }
  }
}

TEST_CASE("rho") {
  CHECK(rho(cartan::finite_a(1)).coroot_values == VectorQ::Ones(1));
  const Weight r = rho(cartan::affine_a(1));
  CHECK(r.coroot_values == VectorQ::Ones(2));
  REQUIRE(r.scaling_values.size() == 1);
  CHECK(r.scaling_values(0) == 0);
  CHECK(rho(cartan::affine_a(2)).coroot_values == VectorQ::Ones(3));
}

TEST_CASE("shifted action") {
  const GCM a = cartan::affine_a(1);
  const Weight lambda = test::a1w(0, 1, 0);
  CHECK(shifted_action({}, lambda, a) == lambda);
  // lambda(alpha_1^v) = 0, so s_1 * lambda = lambda - alpha_1.
  CHECK(shifted_action({1}, lambda, a) == lambda - root_weight(a, RootVector{0, 1}));
  CHECK(!(shifted_action({1, 0}, lambda, a) == shifted_action({0, 1}, lambda, a)));
  const auto diff = root_difference(lambda, shifted_action({1, 0}, lambda, a), a);
  REQUIRE(diff);
  CHECK(diff->is_nonnegative());
}

TEST_CASE("simple reflections are involutions and preserve the form") {
  const std::vector<GCM> algebras{cartan::affine_a(1), cartan::affine_a(2), gcm({{2, -1}, {-4, 2}}),
                                  gcm({{2, -3}, {-3, 2}})};
  for (const auto& a : algebras) {
    const auto n = static_cast<int>(a.rank());
    Weight lambda = rho(a);
    lambda.coroot_values(0) = Rational(5, 2);
    if (a.corank()) lambda.scaling_values(0) = Rational(-1, 3);
    for (int i = 0; i < n; ++i) CHECK(shifted_action({i, i}, lambda, a) == lambda);

    const Weight shifted = lambda + rho(a);
    const Rational norm = bilinear(shifted, shifted, a);
    for (const auto& w : words(n, 5)) {
      Weight v = shifted;
      for (auto it = w.rbegin(); it != w.rend(); ++it) v = reflect(a, *it, v);
      CHECK(bilinear(v, v, a) == norm);
      CHECK(shifted_action(w, lambda, a) + rho(a) == v);
    }
  }
}

TEST_CASE("level is additive") {
  const GCM a = cartan::affine_a(2);
  const Weight x = test::weight({1, 2, 0}, {3});
  const Weight y = test::weight({0, 1, 4}, {-1});
  CHECK(level(x, a) == 3);
  CHECK(level(x + y, a) == level(x, a) + level(y, a));
  CHECK(level(root_weight(a, RootVector{1, 1, 1}), a) == 0);
}

TEST_CASE("root lattice helpers") {
  const RootVector r{2, 4};
  CHECK(r.height() == 6);
  CHECK(r.content() == 2);
  CHECK(RootVector{1, 1}.below(r));
  CHECK(!RootVector{3, 0}.below(r));
  CHECK((-r).is_nonnegative() == false);
  CHECK(r.str() == "[2,4]");
  CHECK(RootVector{0, 1} < RootVector{1, 0});
}

TEST_CASE("exact linear algebra") {
  MatrixQ m(3, 3);
  m << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  CHECK(linalg::rank<Rational>(m) == 2);
  const MatrixQ k = linalg::kernel<Rational>(m);
  REQUIRE(k.cols() == 1);
  CHECK(m * k == MatrixQ::Zero(3, 1));
  CHECK_THROWS_AS(linalg::inverse<Rational>(m), std::domain_error);

  MatrixQ p(2, 2);
  p << 2, 1, 1, 2;
  CHECK(linalg::inverse<Rational>(p) * p == MatrixQ::Identity(2, 2));
  CHECK(linalg::symmetric_pivots<Rational>(p).psd);
  p(0, 1) = p(1, 0) = 3;
  CHECK(!linalg::symmetric_pivots<Rational>(p).psd);
}
