#include <doctest.h>

#include <random>
#include <set>
#include <utility>

#include "oracles.hpp"
#include "semitorsion/torsion.hpp"

using semitorsion::CofiniteSet;
using semitorsion::Int;
using semitorsion::RelativeIdeal;
using semitorsion::make_semigroup;

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

std::set<Edge> edge_set(const semitorsion::GammaGraph& g) { return {g.edges.begin(), g.edges.end()}; }

struct Example26 {
  semitorsion::SemigroupPtr s = make_semigroup({5, 11});
  RelativeIdeal a{s, {20, 21, 22}};
  RelativeIdeal b{s, {0, 23, 24}};
};

}  // namespace

TEST_CASE("Gamma graphs of the <5,11> example") {
  Example26 ex;
  const auto g45 = semitorsion::gamma_graph(ex.a, ex.b, 45);
  CHECK(edge_set(g45) == std::set<Edge>{{0, 0}, {1, 2}, {2, 1}});
  CHECK(g45.component_count == 3);
  CHECK(semitorsion::tau_z(ex.a, ex.b, 45) == 2);

  const auto g55 = semitorsion::gamma_graph(ex.a, ex.b, 55);
  CHECK(edge_set(g55) == std::set<Edge>{{0, 0}, {0, 2}, {1, 1}, {1, 2}, {2, 0}, {2, 1}});
  CHECK(g55.component_count == 1);
  CHECK(semitorsion::tau_z(ex.a, ex.b, 55) == 0);

  // All three left and right vertices exist at 44: 22 = 2*11 puts 22 in B
  // and 44 in A, so v3 w1 is an edge next to v1 w3 and v2 w2.
  const auto g44 = semitorsion::gamma_graph(ex.a, ex.b, 44);
  CHECK(g44.left_vertices == std::vector<std::size_t>{0, 1, 2});
  CHECK(g44.right_vertices == std::vector<std::size_t>{0, 1, 2});
  CHECK(edge_set(g44) == std::set<Edge>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(g44.component_count == 3);
  CHECK(semitorsion::tau_z(ex.a, ex.b, 44) == 2);

  const auto low = semitorsion::gamma_graph(ex.a, ex.b, 19);
  CHECK(low.left_vertices.empty());
  CHECK(low.right_vertices.empty());
  CHECK(low.component_count == 0);
}

TEST_CASE("DOT rendering") {
  Example26 ex;
  const auto dot = semitorsion::to_dot(semitorsion::gamma_graph(ex.a, ex.b, 45));
  CHECK(dot == "graph gamma_45 {\n  v1;\n  v2;\n  v3;\n  w1;\n  w2;\n  w3;\n"
               "  v1 -- w1;\n  v2 -- w3;\n  v3 -- w2;\n}\n");
}

TEST_CASE("fiber oracle") {
  Example26 ex;
  CHECK(semitorsion::fiber_oracle(ex.a, ex.b, 44) == 3);
  CHECK(semitorsion::fiber_oracle(ex.a, ex.b, 45) == 3);
  CHECK(semitorsion::fiber_oracle(ex.a, ex.b, 55) == 1);
  CHECK(semitorsion::fiber_oracle(ex.a, ex.b, 10) == 0);

  auto s = make_semigroup({4, 5, 6});
  RelativeIdeal i(s, {4, 5});
  // 12 (x) 4 = 8 (x) 8 = 4 (x) 12 and 11 (x) 5 = 5 (x) 11
  CHECK(semitorsion::fiber_oracle(i, i, 16) == 2);
  CHECK(semitorsion::fiber_oracle(i, i, 9) == 2);
}

TEST_CASE("torsion profiles") {
  auto s = make_semigroup({4, 5, 6});
  RelativeIdeal i(s, {4, 5});
  const auto p = semitorsion::torsion_profile(i, i);
  CHECK(p.tau_by_z == std::map<Int, std::size_t>{{9, 1}, {16, 1}});
  CHECK(p.total == 2);
  CHECK(p.support_size == 2);
  CHECK(p.z_lo == 8);
  CHECK(p.z_hi == 17);

  CHECK(semitorsion::torsion_profile(i, RelativeIdeal(s, {4, 6})).total == 0);
  CHECK(semitorsion::torsion_profile(RelativeIdeal(s, {3}), i).total == 0);

  Example26 ex;
  const auto q = semitorsion::torsion_profile(ex.a, ex.b);
  CHECK(q.total == 12);
  CHECK(q.tau_by_z == std::map<Int, std::size_t>{{43, 1}, {44, 2}, {45, 2}, {46, 1},
                                                 {48, 1}, {49, 2}, {50, 2}, {51, 1}});
}

TEST_CASE("split criterion") {
  auto s = make_semigroup({4, 5, 6});
  RelativeIdeal i(s, {4, 5});
  const auto free = semitorsion::torsion_free_split_check(i, RelativeIdeal(s, {4, 6}));
  CHECK(free.torsion_free);
  CHECK_FALSE(free.witness);

  const auto torsion = semitorsion::torsion_free_split_check(i, i);
  CHECK_FALSE(torsion.torsion_free);
  REQUIRE(torsion.witness);
  CHECK(torsion.witness->left == std::vector<Int>{4});
  CHECK(torsion.witness->right == std::vector<Int>{5});
  CHECK(torsion.witness->element == 9);

  CHECK(semitorsion::torsion_free_split_check(RelativeIdeal(s, {7}), i).torsion_free);
  std::vector<Int> many{0, 1, 2, 3};
  CHECK_THROWS_AS(semitorsion::torsion_free_split_check(RelativeIdeal(s, many), i, 3),
                  std::invalid_argument);
}

TEST_CASE("bound with correction term") {
  auto s = make_semigroup({4, 5, 6});
  RelativeIdeal i(s, {4, 5});
  CHECK(semitorsion::bound_with_correction(i, i, CofiniteSet(8)) == 1);
  CHECK(semitorsion::bound_with_correction(i, i, semitorsion::ideal_sum(i, i).set()) == 2);
  RelativeIdeal j(s, {4, 6});
  CHECK(semitorsion::bound_with_correction(i, j, semitorsion::ideal_sum(i, j).set()) == 0);
  CHECK_THROWS_AS(semitorsion::bound_with_correction(i, i, CofiniteSet(9)), std::invalid_argument);
}

TEST_CASE("semigroup mismatch is rejected") {
  auto s = make_semigroup({4, 5, 6});
  auto t = make_semigroup({5, 7});
  CHECK_THROWS_AS(semitorsion::gamma_graph(RelativeIdeal(s, {0}), RelativeIdeal(t, {0}), 3),
                  semitorsion::SemigroupMismatch);
  CHECK_THROWS_AS(semitorsion::torsion_profile(RelativeIdeal(s, {0}), RelativeIdeal(t, {0})),
                  semitorsion::SemigroupMismatch);
}

TEST_CASE("property: graph components, fiber closure and literal tensor classes agree") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const auto sg = oracle::random_generators(rng, 9);
    auto s = make_semigroup(sg);
    const oracle::Semigroup ref(sg);
    RelativeIdeal a(s, oracle::random_ideal_generators(rng, -4, 12, 4));
    RelativeIdeal b(s, oracle::random_ideal_generators(rng, -4, 12, 4));
    const auto p = semitorsion::torsion_profile(a, b);
    std::size_t total = 0;
    for (Int z = p.z_lo - 3; z <= p.z_hi + 6; ++z) {
      const auto g = semitorsion::gamma_graph(a, b, z);
      const auto literal = oracle::tensor_classes(ref, a.min_gens(), b.min_gens(), z);
      REQUIRE(g.component_count == literal);
      REQUIRE(semitorsion::fiber_oracle(a, b, z) == literal);
      for (auto [i, j] : g.edges) {
        CHECK(std::count(g.left_vertices.begin(), g.left_vertices.end(), i) == 1);
        CHECK(std::count(g.right_vertices.begin(), g.right_vertices.end(), j) == 1);
      }
      if (z > p.z_hi) {
        CHECK(g.edges.size() == a.mu() * b.mu());
      }
      if (literal > 1) total += literal - 1;
    }
    CHECK(p.total == total);
    std::size_t sum = 0;
    for (auto [z, t] : p.tau_by_z) {
      CHECK(t > 0);
      CHECK(z >= p.z_lo);
      CHECK(z <= p.z_hi);
      sum += t;
    }
    CHECK(sum == p.total);
    CHECK(p.support_size == p.tau_by_z.size());

    // symmetry and shift invariance
    const auto swapped = semitorsion::torsion_profile(b, a);
    CHECK(swapped.tau_by_z == p.tau_by_z);
    const auto moved =
        semitorsion::torsion_profile(semitorsion::ideal_shift(a, 3), semitorsion::ideal_shift(b, -7));
    CHECK(moved.total == p.total);
    std::map<Int, std::size_t> expected;
    for (auto [z, t] : p.tau_by_z) expected.emplace(z - 4, t);
    CHECK(moved.tau_by_z == expected);

    // principal ideals absorb torsion
    CHECK(semitorsion::torsion_profile(RelativeIdeal(s, {a.min_element()}), b).total == 0);

    // split criterion holds exactly when there is no torsion
    CHECK(semitorsion::torsion_free_split_check(a, b).torsion_free == (p.total == 0));
  }
}

TEST_CASE("property: literal tensor count matches the profile") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto sg = oracle::random_generators(rng, 8);
    auto s = make_semigroup(sg);
    const oracle::Semigroup ref(sg);
    RelativeIdeal a(s, oracle::random_ideal_generators(rng, 0, 10, 3));
    RelativeIdeal b(s, oracle::random_ideal_generators(rng, 0, 10, 3));
    CHECK(semitorsion::torsion_profile(a, b).total == oracle::torsion_number(ref, a.min_gens(), b.min_gens()));
  }
}
