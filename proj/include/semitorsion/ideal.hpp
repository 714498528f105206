#pragma once

#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "semitorsion/cofinite_set.hpp"
#include "semitorsion/semigroup.hpp"

namespace semitorsion {

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

SemigroupPtr make_semigroup(std::span<const Int> generators);
SemigroupPtr make_semigroup(std::initializer_list<Int> generators);

/// Raised when two ideals over different semigroups are combined.
class SemigroupMismatch : public std::invalid_argument {
 public:
  SemigroupMismatch() : std::invalid_argument("ideals live over different semigroups") {}
};

/// A relative ideal A = (g_1, ..., g_m) = union of g_i + S, stored as its
/// minimal generators together with the cofinite set of its members.
/// Generators may be negative.
class RelativeIdeal {
 public:
  /// Reduces `generators` to the unique minimal generating set. Throws
  /// std::invalid_argument on an empty list.
  RelativeIdeal(SemigroupPtr semigroup, std::span<const Int> generators);
  RelativeIdeal(SemigroupPtr semigroup, std::initializer_list<Int> generators);

  /// Wraps a set already known to be closed under adding S, reading off the
  /// minimal generators as the members m with m - n_i outside the set for
  /// every semigroup generator n_i.
  static RelativeIdeal from_set(SemigroupPtr semigroup, CofiniteSet members);

  const NumericalSemigroup& semigroup() const { return *semigroup_; }
  const SemigroupPtr& semigroup_ptr() const { return semigroup_; }
  const std::vector<Int>& min_gens() const { return gens_; }
  const CofiniteSet& set() const { return set_; }

  bool contains(Int z) const { return set_.contains(z); }
  std::size_t mu() const { return gens_.size(); }
  bool is_principal() const { return gens_.size() == 1; }
  Int min_element() const { return gens_.front(); }
  Int max_generator() const { return gens_.back(); }

  friend bool operator==(const RelativeIdeal& lhs, const RelativeIdeal& rhs);
  friend RelativeIdeal ideal_shift(const RelativeIdeal& a, Int c);

 private:
  RelativeIdeal(SemigroupPtr semigroup, std::vector<Int> gens, CofiniteSet set)
      : semigroup_(std::move(semigroup)), gens_(std::move(gens)), set_(std::move(set)) {}

  SemigroupPtr semigroup_;
  std::vector<Int> gens_;
  CofiniteSet set_;
};

bool same_semigroup(const RelativeIdeal& a, const RelativeIdeal& b);

RelativeIdeal ideal_sum(const RelativeIdeal& a, const RelativeIdeal& b);
RelativeIdeal ideal_intersect(const RelativeIdeal& a, const RelativeIdeal& b);

/// A* = {z : z + A in S}.
RelativeIdeal ideal_dual(const RelativeIdeal& a);

RelativeIdeal ideal_shift(const RelativeIdeal& a, Int c);

/// The ideal generated by the whole semigroup, i.e. S itself.
RelativeIdeal semigroup_as_ideal(const SemigroupPtr& s);

/// Ap(A, n) = {a in A : a - n not in A}, ascending; one element per residue
/// class mod n. Requires n in S, n > 0.
std::vector<Int> apery_set(const RelativeIdeal& a, Int n);

}  // namespace semitorsion
