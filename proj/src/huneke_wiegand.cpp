#include "semitorsion/huneke_wiegand.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace semitorsion {

namespace {

void require_step(Int n) {
  if (n < 1) throw std::invalid_argument("step must be positive, got " + std::to_string(n));
}

// |(0,n,2n)* \ ((0,n)* + (0,n)*)| computed with the relative ideal algebra.
std::size_t dual_quotient_length(const SemigroupPtr& s, Int n) {
  const auto pair_dual = ideal_dual(RelativeIdeal(s, {0, n}));
  const auto triple_dual = ideal_dual(RelativeIdeal(s, {0, n, 2 * n}));
  return set_difference_card(triple_dual.set(), ideal_sum(pair_dual, pair_dual).set());
}

void require_agreement(Int n, std::size_t direct, std::size_t quotient) {
  if (quotient != direct) {
    throw std::logic_error("torsion length routes disagree at step " + std::to_string(n) + ": " +
                           std::to_string(direct) + " vs " + std::to_string(quotient));
  }
}

}  // namespace

CofiniteSet pairs_set(const NumericalSemigroup& s, Int n) {
  require_step(n);
  return CofiniteSet::from_window(0, s.frobenius() + 1,
                                  [&](Int x) { return s.contains(x) && s.contains(x + n); });
}

CofiniteSet triples_set(const NumericalSemigroup& s, Int n) {
  require_step(n);
  return CofiniteSet::from_window(0, s.frobenius() + 1, [&](Int x) {
    return s.contains(x) && s.contains(x + n) && s.contains(x + 2 * n);
  });
}

TripleReport irreducible_triples(const NumericalSemigroup& s, Int n) {
  TripleReport r;
  r.step = n;
  r.pairs = pairs_set(s, n);
  r.triples = triples_set(s, n);

  const Int p0 = r.pairs.min_element();
  const Int window_end = p0 + s.frobenius() + 1;
  // P + P contains [p0 + T_P, inf); below that only finitely many sums exist.
  const Int tail = p0 + r.pairs.threshold();
  const Int lo = r.triples.min_element();
  std::vector<unsigned char> sum(static_cast<std::size_t>(std::max<Int>(window_end - lo, 0)), 0);
  auto mark = [&](Int v) {
    if (v >= lo && v < window_end) sum[static_cast<std::size_t>(v - lo)] = 1;
  };
  for (Int p = p0; p < window_end - p0; ++p) {
    if (!r.pairs.contains(p)) continue;
    for (Int q = p; p + q < window_end; ++q) {
      if (r.pairs.contains(q)) mark(p + q);
    }
  }
  for (Int z = lo; z < window_end; ++z) {
    if (!r.triples.contains(z)) continue;
    if (z >= tail || sum[static_cast<std::size_t>(z - lo)]) continue;
    r.irreducible.push_back(z);
  }
  r.count = r.irreducible.size();
  return r;
}

std::size_t torsion_length_2gen(const SemigroupPtr& s, Int n) {
  const auto direct = irreducible_triples(*s, n).count;
  require_agreement(n, direct, dual_quotient_length(s, n));
  return direct;
}

HwReport hw_check_semigroup(const SemigroupPtr& s) {
  HwReport report;
  for (Int n : s->gaps()) {
    GapCount g;
    g.n = n;
    const auto triples = irreducible_triples(*s, n);
    require_agreement(n, triples.count, dual_quotient_length(s, n));
    g.count = triples.count;
    if (!triples.irreducible.empty()) g.min_irreducible = triples.irreducible.front();
    report.all_positive = report.all_positive && g.count > 0;
    report.per_gap.push_back(g);
  }
  return report;
}

}  // namespace semitorsion
