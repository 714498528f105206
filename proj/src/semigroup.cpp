#include "semitorsion/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace semitorsion {

namespace {

std::vector<Int> minimal_generators(std::vector<Int> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const auto top = static_cast<std::size_t>(gens.back());
  std::vector<unsigned char> reach(top + 1, 0);
  reach[0] = 1;
  std::vector<Int> kept;
  for (Int g : gens) {
    const auto step = static_cast<std::size_t>(g);
    if (reach[step]) continue;
    kept.push_back(g);
    for (std::size_t z = step; z <= top; ++z) {
      if (reach[z - step]) reach[z] = 1;
    }
  }
  return kept;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::initializer_list<Int> generators)
    : NumericalSemigroup(std::span<const Int>(generators.begin(), generators.size())) {}

NumericalSemigroup::NumericalSemigroup(std::span<const Int> generators) {
  if (generators.empty()) {
    throw std::invalid_argument("numerical semigroup needs at least one generator");
  }
  Int g = 0;
  for (Int n : generators) {
    if (n < 1) {
      throw std::invalid_argument("semigroup generators must be positive, got " +
                                  std::to_string(n));
    }
    g = std::gcd(g, n);
  }
  if (g != 1) {
    throw std::invalid_argument("not a numerical semigroup: generators have gcd " +
                                std::to_string(g));
  }
  generators_ = minimal_generators({generators.begin(), generators.end()});

  // Once `multiplicity` consecutive members appear, every larger integer is a
  // member; the table is cut just before that run.
  const Int m = generators_.front();
  std::vector<unsigned char> table{1};
  Int run = 1;
  Int last_gap = -1;
  for (Int z = 1; run < m; ++z) {
    unsigned char in = 0;
    for (Int n : generators_) {
      if (n > z) break;
      if (table[static_cast<std::size_t>(z - n)]) {
        in = 1;
        break;
      }
    }
    table.push_back(in);
    if (in) {
      ++run;
    } else {
      run = 0;
      last_gap = z;
    }
  }
  frobenius_ = last_gap;
  table.resize(static_cast<std::size_t>(frobenius_ + 1));
  member_ = std::move(table);
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (Int z = 0; z <= frobenius_; ++z) {
    if (!contains(z)) out.push_back(z);
  }
  return out;
}

bool NumericalSemigroup::is_symmetric() const {
  for (Int z = -1; z <= frobenius_ + 1; ++z) {
    if (contains(z) == contains(frobenius_ - z)) return false;
  }
  return true;
}

std::vector<Int> apery_set(const NumericalSemigroup& s, Int n) {
  if (n <= 0 || !s.contains(n)) {
    throw std::invalid_argument("Apery set needs a positive element of the semigroup, got " +
                                std::to_string(n));
  }
  // Smallest member in each residue class mod n.
  std::vector<Int> best(static_cast<std::size_t>(n), -1);
  Int found = 0;
  for (Int z = 0; found < n; ++z) {
    if (!s.contains(z)) continue;
    auto& slot = best[static_cast<std::size_t>(z % n)];
    if (slot < 0) {
      slot = z;
      ++found;
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace semitorsion
