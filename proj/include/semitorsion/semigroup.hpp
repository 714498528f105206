#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace semitorsion {

using Int = std::int64_t;

/// A numerical semigroup S = <n_1, ..., n_e>: a submonoid of (N_0, +) with
/// finite complement. Immutable after construction.
///
/// Membership is an O(1) table lookup over [0, F]; everything above the
/// Frobenius number is a member and everything negative is not.
class NumericalSemigroup {
 public:
  /// Builds the semigroup generated by `generators` and reduces the list to
  /// the minimal generating set. Throws std::invalid_argument on an empty
  /// list, a non-positive entry, or generators whose gcd is not 1.
  explicit NumericalSemigroup(std::span<const Int> generators);
  NumericalSemigroup(std::initializer_list<Int> generators);

  const std::vector<Int>& generators() const { return generators_; }
  Int frobenius() const { return frobenius_; }
  Int multiplicity() const { return generators_.front(); }
  std::size_t embedding_dimension() const { return generators_.size(); }

  bool contains(Int z) const {
    if (z < 0) return false;
    if (z > frobenius_) return true;
    return member_[static_cast<std::size_t>(z)] != 0;
  }

  /// Non-members in [0, F], ascending.
  std::vector<Int> gaps() const;

  /// S = {z : F - z not in S}.
  bool is_symmetric() const;

  friend bool operator==(const NumericalSemigroup& lhs,
                         const NumericalSemigroup& rhs) {
    return lhs.generators_ == rhs.generators_;
  }

 private:
  std::vector<Int> generators_;
  Int frobenius_ = -1;
  // length max(F + 1, 0); 1 = member
  std::vector<unsigned char> member_;
};

/// Ap(S, n) = {s in S : s - n not in S}, ascending. Requires n in S, n > 0.
std::vector<Int> apery_set(const NumericalSemigroup& s, Int n);

}  // namespace semitorsion
