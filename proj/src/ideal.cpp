#include "semitorsion/ideal.hpp"

#include <algorithm>
#include <string>

namespace semitorsion {

namespace {

std::vector<Int> reduce_generators(const NumericalSemigroup& s, std::vector<Int> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Int> kept;
  for (Int g : gens) {
    // g - h in S with h != g forces h < g, so only smaller kept generators matter
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](Int h) { return s.contains(g - h); });
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

CofiniteSet generated_set(const NumericalSemigroup& s, const std::vector<Int>& gens) {
  const Int lo = gens.front();
  const Int hi = gens.back() + s.frobenius() + 1;
  return CofiniteSet::from_window(lo, hi, [&](Int z) {
    for (Int g : gens) {
      if (g > z) break;
      if (s.contains(z - g)) return true;
    }
    return false;
  });
}

void require_same(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (!same_semigroup(a, b)) throw SemigroupMismatch();
}

}  // namespace

SemigroupPtr make_semigroup(std::span<const Int> generators) {
  return std::make_shared<const NumericalSemigroup>(generators);
}

SemigroupPtr make_semigroup(std::initializer_list<Int> generators) {
  return std::make_shared<const NumericalSemigroup>(generators);
}

RelativeIdeal::RelativeIdeal(SemigroupPtr semigroup, std::initializer_list<Int> generators)
    : RelativeIdeal(std::move(semigroup),
                    std::span<const Int>(generators.begin(), generators.size())) {}

RelativeIdeal::RelativeIdeal(SemigroupPtr semigroup, std::span<const Int> generators)
    : semigroup_(std::move(semigroup)) {
  if (!semigroup_) throw std::invalid_argument("relative ideal needs a semigroup");
  if (generators.empty()) throw std::invalid_argument("relative ideal needs a generator");
  gens_ = reduce_generators(*semigroup_, {generators.begin(), generators.end()});
  set_ = generated_set(*semigroup_, gens_);
}

RelativeIdeal RelativeIdeal::from_set(SemigroupPtr semigroup, CofiniteSet members) {
  const auto& ngens = semigroup->generators();
  const Int hi = members.threshold() + ngens.back();
  std::vector<Int> gens;
  for (Int z = members.min_element(); z < hi; ++z) {
    if (!members.contains(z)) continue;
    const bool minimal = std::none_of(ngens.begin(), ngens.end(),
                                      [&](Int n) { return members.contains(z - n); });
    if (minimal) gens.push_back(z);
  }
  return RelativeIdeal(std::move(semigroup), std::move(gens), std::move(members));
}

bool same_semigroup(const RelativeIdeal& a, const RelativeIdeal& b) {
  return a.semigroup_ptr() == b.semigroup_ptr() || a.semigroup() == b.semigroup();
}

bool operator==(const RelativeIdeal& lhs, const RelativeIdeal& rhs) {
  return same_semigroup(lhs, rhs) && lhs.set_ == rhs.set_;
}

RelativeIdeal ideal_sum(const RelativeIdeal& a, const RelativeIdeal& b) {
  require_same(a, b);
  std::vector<Int> sums;
  sums.reserve(a.mu() * b.mu());
  for (Int x : a.min_gens()) {
    for (Int y : b.min_gens()) sums.push_back(x + y);
  }
  return RelativeIdeal(a.semigroup_ptr(), sums);
}

RelativeIdeal ideal_intersect(const RelativeIdeal& a, const RelativeIdeal& b) {
  require_same(a, b);
  return RelativeIdeal::from_set(a.semigroup_ptr(), set_intersection(a.set(), b.set()));
}

RelativeIdeal ideal_dual(const RelativeIdeal& a) {
  const auto& s = a.semigroup();
  const Int m = a.min_element();
  auto members = CofiniteSet::from_window(-m, s.frobenius() + 1 - m, [&](Int z) {
    for (Int g : a.min_gens()) {
      if (!s.contains(z + g)) return false;
    }
    return true;
  });
  return RelativeIdeal::from_set(a.semigroup_ptr(), std::move(members));
}

RelativeIdeal ideal_shift(const RelativeIdeal& a, Int c) {
  std::vector<Int> gens(a.min_gens());
  for (Int& g : gens) g += c;
  return RelativeIdeal(a.semigroup_ptr(), std::move(gens), a.set().shifted(c));
}

RelativeIdeal semigroup_as_ideal(const SemigroupPtr& s) { return RelativeIdeal(s, {0}); }

std::vector<Int> apery_set(const RelativeIdeal& a, Int n) {
  if (n <= 0 || !a.semigroup().contains(n)) {
    throw std::invalid_argument("Apery set needs a positive element of the semigroup, got " +
                                std::to_string(n));
  }
  const Int base = a.set().min_element();
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(n));
  // Each residue class of A is upward closed under +n, so its first member
  // is its only Apery element.
  for (Int z = base; static_cast<Int>(out.size()) < n; ++z) {
    if (a.contains(z) && !a.contains(z - n)) out.push_back(z);
  }
  return out;
}

}  // namespace semitorsion
