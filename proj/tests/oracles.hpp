#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// library: membership comes from a fresh knapsack table and tensor classes
// from the literal pair relation.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Int = std::int64_t;

/// Membership table of <gens> over [0, limit).
inline std::vector<bool> knapsack(const std::vector<Int>& gens, Int limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit), false);
  in[0] = true;
  for (Int z = 1; z < limit; ++z) {
    for (Int g : gens) {
      if (g <= z && in[static_cast<std::size_t>(z - g)]) {
        in[static_cast<std::size_t>(z)] = true;
        break;
      }
    }
  }
  return in;
}

/// Numerical semigroup given by its generators, answered from a table long
/// enough that every query above it is a member (max * max bound).
struct Semigroup {
  std::vector<Int> gens;
  std::vector<bool> table;

  explicit Semigroup(std::vector<Int> g) : gens(std::move(g)) {
    const Int top = *std::max_element(gens.begin(), gens.end());
    table = knapsack(gens, top * top + 2);
  }
  bool contains(Int z) const {
    if (z < 0) return false;
    if (z >= static_cast<Int>(table.size())) return true;
    return table[static_cast<std::size_t>(z)];
  }
  Int frobenius() const {
    for (Int z = static_cast<Int>(table.size()) - 1; z >= 0; --z) {
      if (!table[static_cast<std::size_t>(z)]) return z;
    }
    return -1;
  }
};

inline bool in_ideal(const Semigroup& s, const std::vector<Int>& gens, Int z) {
  return std::any_of(gens.begin(), gens.end(), [&](Int g) { return s.contains(z - g); });
}

inline std::vector<Int> members_in(const Semigroup& s, const std::vector<Int>& gens, Int lo,
                                   Int hi) {
  std::vector<Int> out;
  for (Int z = lo; z < hi; ++z) {
    if (in_ideal(s, gens, z)) out.push_back(z);
  }
  return out;
}

/// Elements g of the set {z in [lo, hi) : pred(z)} with g - s outside the set
/// for every nonzero s in S below hi - lo.
template <class Pred>
std::vector<Int> minimal_elements(const Semigroup& s, Int lo, Int hi, Pred pred) {
  std::vector<Int> out;
  for (Int z = lo; z < hi; ++z) {
    if (!pred(z)) continue;
    bool minimal = true;
    for (Int t = 1; z - t >= lo - 1 && minimal; ++t) {
      if (s.contains(t) && pred(z - t)) minimal = false;
    }
    if (minimal) out.push_back(z);
  }
  return out;
}

/// Number of classes of A x B over degree z under (s + a, b) ~ (a, s + b),
/// connecting every pair of nodes whose first coordinates differ by an
/// element of S.
inline std::size_t tensor_classes(const Semigroup& s, const std::vector<Int>& ga,
                                  const std::vector<Int>& gb, Int z) {
  const Int lo = *std::min_element(ga.begin(), ga.end());
  const Int hi = z - *std::min_element(gb.begin(), gb.end());
  std::vector<Int> nodes;
  for (Int x = lo; x <= hi; ++x) {
    if (in_ideal(s, ga, x) && in_ideal(s, gb, z - x)) nodes.push_back(x);
  }
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (s.contains(nodes[i] - nodes[j])) parent[find(i)] = find(j);
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < nodes.size(); ++i) roots.insert(find(i));
  return roots.size();
}

inline std::size_t torsion_number(const Semigroup& s, const std::vector<Int>& ga,
                                  const std::vector<Int>& gb) {
  const Int lo = *std::min_element(ga.begin(), ga.end()) + *std::min_element(gb.begin(), gb.end());
  const Int hi = s.frobenius() + *std::max_element(ga.begin(), ga.end()) +
                 *std::max_element(gb.begin(), gb.end()) + 8;
  std::size_t total = 0;
  for (Int z = lo; z <= hi; ++z) {
    const auto c = tensor_classes(s, ga, gb, z);
    if (c > 1) total += c - 1;
  }
  return total;
}

/// Random coprime generator list of length 2..4 with entries in [2, top].
inline std::vector<Int> random_generators(std::mt19937_64& rng, Int top) {
  std::uniform_int_distribution<Int> pick(2, top);
  std::uniform_int_distribution<int> len(2, 4);
  while (true) {
    std::vector<Int> g(static_cast<std::size_t>(len(rng)));
    for (auto& x : g) x = pick(rng);
    Int d = 0;
    for (Int x : g) d = std::gcd(d, x);
    if (d == 1) return g;
  }
}

inline std::vector<Int> random_ideal_generators(std::mt19937_64& rng, Int lo, Int hi,
                                                int max_count) {
  std::uniform_int_distribution<Int> pick(lo, hi);
  std::uniform_int_distribution<int> len(1, max_count);
  std::vector<Int> g(static_cast<std::size_t>(len(rng)));
  for (auto& x : g) x = pick(rng);
  return g;
}

}  // namespace oracle
