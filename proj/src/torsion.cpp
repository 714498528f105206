#include "semitorsion/torsion.hpp"

#include <sstream>
#include <stdexcept>

#include "semitorsion/union_find.hpp"

namespace semitorsion {

namespace {

void require_same(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (!same_semigroup(a, b)) throw SemigroupMismatch();
}

// Components of Gamma_z without materialising the graph. Left vertices are
// 0..m-1, right vertices m..m+n-1.
std::size_t component_count(const RelativeIdeal& a, const RelativeIdeal& b, Int z,
                            UnionFind& uf, std::vector<unsigned char>& present) {
  const auto& s = a.semigroup();
  const auto& ga = a.min_gens();
  const auto& gb = b.min_gens();
  const std::size_t m = ga.size();
  const std::size_t n = gb.size();
  present.assign(m + n, 0);
  std::size_t vertices = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (b.contains(z - ga[i])) {
      present[i] = 1;
      ++vertices;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (a.contains(z - gb[j])) {
      present[m + j] = 1;
      ++vertices;
    }
  }
  if (vertices == 0) return 0;
  uf.reset(m + n);
  std::size_t merges = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!present[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (s.contains(z - ga[i] - gb[j]) && uf.unite(i, m + j)) ++merges;
    }
  }
  return vertices - merges;
}

}  // namespace

GammaGraph gamma_graph(const RelativeIdeal& a, const RelativeIdeal& b, Int z) {
  require_same(a, b);
  const auto& s = a.semigroup();
  const auto& ga = a.min_gens();
  const auto& gb = b.min_gens();
  GammaGraph g;
  g.z = z;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (b.contains(z - ga[i])) g.left_vertices.push_back(i);
  }
  for (std::size_t j = 0; j < gb.size(); ++j) {
    if (a.contains(z - gb[j])) g.right_vertices.push_back(j);
  }
  UnionFind uf(ga.size() + gb.size());
  std::size_t merges = 0;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    for (std::size_t j = 0; j < gb.size(); ++j) {
      if (!s.contains(z - ga[i] - gb[j])) continue;
      g.edges.emplace_back(i, j);
      if (uf.unite(i, ga.size() + j)) ++merges;
    }
  }
  g.component_count = g.left_vertices.size() + g.right_vertices.size() - merges;
  return g;
}

std::string to_dot(const GammaGraph& graph) {
  std::ostringstream out;
  out << "graph gamma_" << (graph.z < 0 ? "m" : "") << (graph.z < 0 ? -graph.z : graph.z)
      << " {\n";
  for (auto i : graph.left_vertices) out << "  v" << i + 1 << ";\n";
  for (auto j : graph.right_vertices) out << "  w" << j + 1 << ";\n";
  for (auto [i, j] : graph.edges) out << "  v" << i + 1 << " -- w" << j + 1 << ";\n";
  out << "}\n";
  return out.str();
}

std::size_t tau_z(const RelativeIdeal& a, const RelativeIdeal& b, Int z) {
  require_same(a, b);
  UnionFind uf;
  std::vector<unsigned char> present;
  const std::size_t c = component_count(a, b, z, uf, present);
  return c > 0 ? c - 1 : 0;
}

TorsionProfile torsion_profile(const RelativeIdeal& a, const RelativeIdeal& b) {
  require_same(a, b);
  TorsionProfile p;
  p.z_lo = a.min_element() + b.min_element();
  p.z_hi = a.semigroup().frobenius() + a.max_generator() + b.max_generator();
  UnionFind uf;
  std::vector<unsigned char> present;
  for (Int z = p.z_lo; z <= p.z_hi; ++z) {
    const std::size_t c = component_count(a, b, z, uf, present);
    if (c > 1) {
      p.tau_by_z.emplace(z, c - 1);
      p.total += c - 1;
    }
  }
  p.support_size = p.tau_by_z.size();
  return p;
}

std::size_t fiber_oracle(const RelativeIdeal& a, const RelativeIdeal& b, Int z) {
  require_same(a, b);
  const Int lo = a.set().min_element();
  const Int hi = z - b.set().min_element();
  if (hi < lo) return 0;
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  // Node x stands for x (x) (z - x).
  std::vector<unsigned char> node(width, 0);
  std::size_t nodes = 0;
  for (Int x = lo; x <= hi; ++x) {
    if (a.contains(x) && b.contains(z - x)) {
      node[static_cast<std::size_t>(x - lo)] = 1;
      ++nodes;
    }
  }
  // The relation moves x to x - s with s in S. Every intermediate point of a
  // decomposition s = n_1 + ... + n_k stays in the fiber, so single generator
  // steps generate the same equivalence.
  UnionFind uf(width);
  std::size_t merges = 0;
  for (std::size_t x = 0; x < width; ++x) {
    if (!node[x]) continue;
    for (Int n : a.semigroup().generators()) {
      const auto step = static_cast<std::size_t>(n);
      if (step > x) break;
      if (node[x - step] && uf.unite(x, x - step)) ++merges;
    }
  }
  return nodes - merges;
}

SplitCheck torsion_free_split_check(const RelativeIdeal& a, const RelativeIdeal& b,
                                    std::size_t mu_cap) {
  require_same(a, b);
  const std::size_t mu = a.mu();
  if (mu > mu_cap) {
    throw std::invalid_argument("split check over " + std::to_string(mu) +
                                " generators exceeds the cap of " + std::to_string(mu_cap));
  }
  SplitCheck result;
  if (mu < 2) return result;
  const auto& gens = a.min_gens();
  // The condition is symmetric in P and Q; fixing generator 0 in P visits
  // each split once.
  const std::size_t full = (std::size_t{1} << mu) - 1;
  for (std::size_t mask = 1; mask < full; mask += 2) {
    std::vector<Int> left;
    std::vector<Int> right;
    for (std::size_t i = 0; i < mu; ++i) {
      ((mask >> i) & 1 ? left : right).push_back(gens[i]);
    }
    const RelativeIdeal p(a.semigroup_ptr(), left);
    const RelativeIdeal q(a.semigroup_ptr(), right);
    const auto lhs = ideal_sum(ideal_intersect(p, q), b);
    const auto rhs = ideal_intersect(ideal_sum(p, b), ideal_sum(q, b));
    if (lhs == rhs) continue;
    auto missing = set_difference(rhs.set(), lhs.set());
    if (missing.empty()) missing = set_difference(lhs.set(), rhs.set());
    result.torsion_free = false;
    result.witness = SplitWitness{std::move(left), std::move(right), missing.front()};
    return result;
  }
  return result;
}

Int bound_with_correction(const RelativeIdeal& a, const RelativeIdeal& b, const CofiniteSet& c) {
  const auto sum = ideal_sum(a, b);
  if (!c.includes(sum.set())) {
    throw std::invalid_argument("correction set must contain A + B");
  }
  const auto tau = torsion_profile(a, b).total;
  return static_cast<Int>(tau) - static_cast<Int>(set_difference_card(c, sum.set()));
}

}  // namespace semitorsion
