#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semitorsion/ideal.hpp"

namespace semitorsion {

/// The bipartite graph Gamma_z(A, B). Vertex i on the left stands for the
/// i-th minimal generator a_i of A (present when z - a_i is in B), vertex j on
/// the right for b_j (present when z - b_j is in A). Indices are 0-based.
struct GammaGraph {
  Int z = 0;
  std::vector<std::size_t> left_vertices;
  std::vector<std::size_t> right_vertices;
  /// (i, j) with z - a_i - b_j in S.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Connected components, isolated vertices included.
  std::size_t component_count = 0;
};

GammaGraph gamma_graph(const RelativeIdeal& a, const RelativeIdeal& b, Int z);

/// Graphviz rendering with vertices named v1..vm and w1..wn.
std::string to_dot(const GammaGraph& graph);

/// max(0, components of Gamma_z - 1): the number of extra tensor classes
/// over degree z.
std::size_t tau_z(const RelativeIdeal& a, const RelativeIdeal& b, Int z);

struct TorsionProfile {
  Int z_lo = 0;
  Int z_hi = 0;
  /// Only degrees with tau_z > 0.
  std::map<Int, std::size_t> tau_by_z;
  std::size_t total = 0;
  std::size_t support_size = 0;
};

/// tau_z over [min G(A) + min G(B), F + max G(A) + max G(B)]. Above that
/// window every z - a_i - b_j exceeds F, so Gamma_z is complete bipartite.
TorsionProfile torsion_profile(const RelativeIdeal& a, const RelativeIdeal& b);

/// Counts tensor classes a (x) (z - a) directly from the generating relation
/// (s + a, b) ~ (a, s + b), without going through Gamma_z.
std::size_t fiber_oracle(const RelativeIdeal& a, const RelativeIdeal& b, Int z);

struct SplitWitness {
  std::vector<Int> left;
  std::vector<Int> right;
  /// Smallest element of (P + B) cap (Q + B) missing from (P cap Q) + B.
  Int element = 0;
};

struct SplitCheck {
  bool torsion_free = true;
  std::optional<SplitWitness> witness;
};

/// Tests (P cap Q) + B = (P + B) cap (Q + B) for every split of G(A) into
/// generator subsets P | Q. Throws std::invalid_argument when mu(A) > mu_cap.
SplitCheck torsion_free_split_check(const RelativeIdeal& a, const RelativeIdeal& b,
                                    std::size_t mu_cap = 20);

/// tau(A, B) - |C \ (A + B)|, where C stands in for the value set of the
/// product of two non-monomial ideals with these value sets. C must contain
/// A + B.
Int bound_with_correction(const RelativeIdeal& a, const RelativeIdeal& b, const CofiniteSet& c);

}  // namespace semitorsion
