#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semitorsion/huneke_wiegand.hpp"
#include "semitorsion/parse.hpp"

using semitorsion::CofiniteSet;
using semitorsion::Int;
using semitorsion::NumericalSemigroup;
using semitorsion::make_semigroup;

namespace {

// Triples (x, x+n, x+2n) in S with no split x = y + w, y and w both pairs.
std::vector<Int> brute_irreducible(const oracle::Semigroup& s, Int n) {
  const auto pair = [&](Int x) { return s.contains(x) && s.contains(x + n); };
  std::vector<Int> out;
  // x - min(P) > F makes x - min(P) a pair, so x <= min(P) + F <= 2F + 1
  const Int top = 2 * s.frobenius() + 2;
  for (Int x = 0; x <= top; ++x) {
    if (!(pair(x) && s.contains(x + 2 * n))) continue;
    bool split = false;
    for (Int y = 0; y <= x && !split; ++y) split = pair(y) && pair(x - y);
    if (!split) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("pairs and triples") {
  const NumericalSemigroup s{5, 7};
  CHECK(semitorsion::pairs_set(s, 1) == CofiniteSet(24, {14, 19, 20, 21}));
  CHECK(semitorsion::pairs_set(NumericalSemigroup{2, 3}, 1) == CofiniteSet(2));
  CHECK(semitorsion::triples_set(NumericalSemigroup{2, 3}, 1) == CofiniteSet(2));
  CHECK_THROWS_AS(semitorsion::pairs_set(s, 0), std::invalid_argument);
  CHECK_THROWS_AS(semitorsion::triples_set(s, -1), std::invalid_argument);
}

TEST_CASE("irreducible triples") {
  const NumericalSemigroup s{5, 7};
  const auto r = semitorsion::irreducible_triples(s, 1);
  CHECK(r.irreducible == std::vector<Int>{19, 20, 24, 25, 26, 27, 29, 30, 31, 32, 36, 37});
  CHECK(r.count == 12);
  CHECK(semitorsion::irreducible_triples(s, 23).irreducible == std::vector<Int>{5, 7});
  CHECK(semitorsion::irreducible_triples(NumericalSemigroup{2, 3}, 1).irreducible == std::vector<Int>{2, 3});
  CHECK(semitorsion::irreducible_triples(NumericalSemigroup{2, 3}, 2).count == 0);
}

TEST_CASE("torsion length by two routes") {
  CHECK(semitorsion::torsion_length_2gen(make_semigroup({5, 7}), 1) == 12);
  CHECK(semitorsion::torsion_length_2gen(make_semigroup({2, 3}), 1) == 2);
  CHECK_THROWS_AS(semitorsion::torsion_length_2gen(make_semigroup({2, 3}), 0), std::invalid_argument);
}

TEST_CASE("gap check") {
  const auto r = semitorsion::hw_check_semigroup(make_semigroup({5, 7}));
  CHECK(r.per_gap.size() == 12);
  CHECK(r.all_positive);
  CHECK(r.per_gap.front().n == 1);
  CHECK(r.per_gap.front().count == 12);
  CHECK(r.per_gap.front().min_irreducible == 19);

  const auto t = semitorsion::hw_check_semigroup(make_semigroup({2, 3}));
  REQUIRE(t.per_gap.size() == 1);
  CHECK(t.per_gap[0].count == 2);

  const auto trivial = semitorsion::hw_check_semigroup(make_semigroup({1}));
  CHECK(trivial.per_gap.empty());
  CHECK(trivial.all_positive);
}

TEST_CASE("property: routes agree with a brute-force split search") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto sg = oracle::random_generators(rng, 12);
    auto s = make_semigroup(sg);
    const oracle::Semigroup ref(sg);
    const Int f = s->frobenius();
    for (Int n = 1; n <= std::max<Int>(2 * f, 1); ++n) {
      const auto r = semitorsion::irreducible_triples(*s, n);
      CAPTURE(semitorsion::format_int_list(sg));
      CAPTURE(n);
      REQUIRE(semitorsion::format_int_list(r.irreducible) ==
              semitorsion::format_int_list(brute_irreducible(ref, n)));
      REQUIRE(semitorsion::torsion_length_2gen(s, n) == r.count);
      // a step in S splits every triple as (0, n) + (x, x + n)
      if (s->contains(n)) CHECK(r.count == 0);
    }
  }
}
