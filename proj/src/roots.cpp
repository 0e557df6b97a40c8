#include "kmq/roots.hpp"

#include "kmq/errors.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>

namespace kmq {

namespace {

bool height_less(const RootVector& x, const RootVector& y) {
  if (x.height() != y.height()) return x.height() < y.height();
  return x < y;
}

}  // namespace

std::vector<RootVector> box_points(const RootVector& box) {
  if (!box.is_nonnegative()) throw InputError("box " + box.str() + " is not in Q+");
  std::vector<RootVector> out;
  RootVector cur = RootVector::zero(box.size());
  for (;;) {
    out.push_back(cur);
    Eigen::Index i = 0;
    while (i < box.size() && cur[i] == box[i]) cur[i++] = 0;
    if (i == box.size()) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end(), height_less);
  return out;
}

// ---------------------------------------------------------------- table

BigInt PositiveRootTable::mult(const RootVector& beta) const {
  if (!covers(beta)) {
    throw BoxTooSmall("root table box " + box.str() + " does not contain " + beta.str());
  }
  const auto it = entries.find(beta);
  return it == entries.end() ? BigInt(0) : it->second;
}

std::vector<std::pair<RootVector, BigInt>> PositiveRootTable::by_height() const {
  std::vector<std::pair<RootVector, BigInt>> out(entries.begin(), entries.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return height_less(x.first, y.first); });
  return out;
}

PositiveRootTable PositiveRootTable::restrict_to(const RootVector& smaller) const {
  if (!smaller.below(box)) throw BoxTooSmall("cannot restrict " + box.str() + " to " + smaller.str());
  PositiveRootTable out;
  out.gcm_hash = gcm_hash;
  out.box = smaller;
  for (const auto& [root, m] : entries) {
    if (root.below(smaller)) out.entries.emplace(root, m);
  }
  return out;
}

// ---------------------------------------------------------------- real roots

std::set<RootVector> real_roots(const GCM& a, int height_bound) {
  if (height_bound < 1) throw InputError("height bound must be >= 1");
  std::set<RootVector> seen;
  std::deque<RootVector> todo;
  for (Eigen::Index i = 0; i < a.rank(); ++i) {
    seen.insert(RootVector::simple(a.rank(), i));
    todo.push_back(RootVector::simple(a.rank(), i));
  }
  while (!todo.empty()) {
    const RootVector beta = todo.front();
    todo.pop_front();
    const IntVector pairing = a.matrix * beta.coeffs;  // beta(alpha_i^v)
    for (Eigen::Index i = 0; i < a.rank(); ++i) {
      RootVector next = beta;
      next[i] -= pairing(i);
      if (!next.is_nonnegative() || next.is_zero() || next.height() > height_bound) continue;
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

// ---------------------------------------------------------------- Peterson

PetersonSolver::PetersonSolver(GCM a) : gcm_(std::move(a)), rho_(rho(gcm_)) {}

BigInt PetersonSolver::mult(const RootVector& beta) {
  if (beta.size() != gcm_.rank()) throw DimensionMismatch("root vector rank does not match GCM");
  if (!beta.is_nonnegative() || beta.is_zero()) {
    throw InputError("multiplicity requested for " + beta.str() + ", which is not in Q+ \\ {0}");
  }
  if (auto it = mult_.find(beta); it != mult_.end()) return it->second;
  fill(beta);
  return mult_.at(beta);
}

void PetersonSolver::fill(const RootVector& box) {
  for (const RootVector& gamma : box_points(box)) {
    if (gamma.is_zero() || mult_.count(gamma)) continue;
    compute(gamma);
  }
}

void PetersonSolver::compute(const RootVector& gamma) {
  BigInt m = 0;
  if (gamma.height() == 1) {
    m = 1;
  } else {
    // Ordered pairs (b', b''), so each unordered pair is counted twice.
    Rational pair_sum = 0;
    for (const auto& [part, cpart] : c_) {
      if (!part.below(gamma) || part == gamma) continue;
      const RootVector rest = gamma - part;
      const auto other = c_.find(rest);
      if (other == c_.end()) continue;
      pair_sum += bilinear(part, rest, gcm_) * cpart * other->second;
    }
    const Rational lhs = bilinear(gamma, gamma, gcm_) - 2 * bilinear(rho_, gamma, gcm_);

    Rational lower = 0;  // sum_{n >= 2, n | gamma} mult(gamma / n) / n
    const int content = gamma.content();
    for (int d = 2; d <= content; ++d) {
      if (content % d) continue;
      RootVector q = gamma;
      q.coeffs /= d;
      lower += Rational(mult_.at(q)) / d;
    }

    if (lhs == 0) {
      if (pair_sum != 0) {
        throw InternalInconsistency("Peterson recurrence forces a contradiction at " + gamma.str());
      }
      m = 0;
    } else {
      const Rational value = pair_sum / lhs - lower;
      if (!is_integer(value) || value < 0) {
        throw InternalInconsistency("Peterson recurrence produced non-integral multiplicity " +
                                    to_string(value) + " at " + gamma.str());
      }
      m = to_bigint(value);
    }
  }
  mult_.emplace(gamma, m);

  Rational c = 0;
  const int content = gamma.content();
  for (int d = 1; d <= content; ++d) {
    if (content % d) continue;
    RootVector q = gamma;
    q.coeffs /= d;
    const BigInt& mq = (d == 1) ? m : mult_.at(q);
    if (mq != 0) c += Rational(mq) / d;
  }
  if (c != 0) c_.emplace(gamma, c);
}

PositiveRootTable PetersonSolver::table(const RootVector& box) {
  if (box.size() != gcm_.rank()) throw DimensionMismatch("box rank does not match GCM");
  fill(box);
  PositiveRootTable out;
  out.gcm_hash = gcm_.hash();
  out.box = box;
  for (const auto& [root, m] : mult_) {
    if (m != 0 && root.below(box)) out.entries.emplace(root, m);
  }
  return out;
}

BigInt peterson_mult(const GCM& a, const RootVector& beta) {
  static std::mutex lock;
  static std::map<std::uint64_t, std::unique_ptr<PetersonSolver>> solvers;
  std::lock_guard<std::mutex> guard(lock);
  auto& slot = solvers[a.hash()];
  if (!slot) slot = std::make_unique<PetersonSolver>(a);
  return slot->mult(beta);
}

PositiveRootTable positive_roots_with_mult(const GCM& a, const RootVector& box) {
  PetersonSolver solver(a);
  return solver.table(box);
}

}  // namespace kmq
