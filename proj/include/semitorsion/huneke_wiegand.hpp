#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "semitorsion/cofinite_set.hpp"
#include "semitorsion/ideal.hpp"

namespace semitorsion {

/// Arithmetic sequences of step n in S: pairs P = {x : x, x+n in S}, triples
/// T = {x : x, x+n, x+2n in S}, and the triples that do not split as a sum of
/// two pairs.
struct TripleReport {
  Int step = 0;
  CofiniteSet pairs;
  CofiniteSet triples;
  /// T \ (P + P), ascending.
  std::vector<Int> irreducible;
  std::size_t count = 0;
};

/// {x : x in S and x + n in S}, i.e. the dual of (0, n). Requires n >= 1.
CofiniteSet pairs_set(const NumericalSemigroup& s, Int n);

/// {x : x, x + n, x + 2n in S}, i.e. the dual of (0, n, 2n). Requires n >= 1.
CofiniteSet triples_set(const NumericalSemigroup& s, Int n);

/// Enumerates triples directly and subtracts the sumset P + P, which is
/// finite below min(P) + F + 1 and contains everything from there on.
TripleReport irreducible_triples(const NumericalSemigroup& s, Int n);

/// Torsion length of (1, t^n) (x) (1, t^n)*. Computes it twice, once by
/// irreducible_triples and once as |(0,n,2n)* \ ((0,n)* + (0,n)*)| through
/// ideal duals and sums, and throws std::logic_error if the two disagree.
std::size_t torsion_length_2gen(const SemigroupPtr& s, Int n);

struct GapCount {
  Int n = 0;
  std::size_t count = 0;
  std::optional<Int> min_irreducible;
};

struct HwReport {
  std::vector<GapCount> per_gap;
  /// Every gap has at least one irreducible triple.
  bool all_positive = true;
};

/// Runs torsion_length_2gen for every gap of S.
HwReport hw_check_semigroup(const SemigroupPtr& s);

}  // namespace semitorsion
