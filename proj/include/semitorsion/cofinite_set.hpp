#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "semitorsion/semigroup.hpp"

namespace semitorsion {

/// A set of integers that contains every z >= threshold plus a finite list of
/// members below it. Always stored in canonical form: threshold - 1 is not a
/// member, so the threshold is the conductor of the set.
class CofiniteSet {
 public:
  /// The set {z : z >= threshold}.
  explicit CofiniteSet(Int threshold = 0);

  /// `below` need not be sorted or deduplicated; entries >= threshold are
  /// absorbed by the tail.
  CofiniteSet(Int threshold, std::vector<Int> below);

  /// Builds {z in [lo, hi) : pred(z)} union [hi, inf).
  template <class Pred>
  static CofiniteSet from_window(Int lo, Int hi, Pred&& pred) {
    std::vector<Int> members;
    for (Int z = lo; z < hi; ++z) {
      if (pred(z)) members.push_back(z);
    }
    return CofiniteSet(hi, std::move(members));
  }

  Int threshold() const { return threshold_; }
  const std::vector<Int>& below() const { return below_; }
  Int min_element() const { return below_.empty() ? threshold_ : below_.front(); }

  bool contains(Int z) const {
    if (z >= threshold_) return true;
    if (z < lo_) return false;
    return mask_[static_cast<std::size_t>(z - lo_)] != 0;
  }

  /// Every member of `other` is a member of *this.
  bool includes(const CofiniteSet& other) const;

  CofiniteSet shifted(Int c) const;

  friend bool operator==(const CofiniteSet& lhs, const CofiniteSet& rhs) {
    return lhs.threshold_ == rhs.threshold_ && lhs.below_ == rhs.below_;
  }

 private:
  void normalize();

  Int threshold_ = 0;
  std::vector<Int> below_;
  // dense membership over [lo_, threshold_)
  Int lo_ = 0;
  std::vector<unsigned char> mask_;
};

CofiniteSet set_intersection(const CofiniteSet& x, const CofiniteSet& y);
CofiniteSet set_union(const CofiniteSet& x, const CofiniteSet& y);

/// |X \ Y|. Both sets are bounded below and contain a cofinite tail, so the
/// difference is always finite.
std::size_t set_difference_card(const CofiniteSet& x, const CofiniteSet& y);

/// Members of X not in Y, ascending.
std::vector<Int> set_difference(const CofiniteSet& x, const CofiniteSet& y);

}  // namespace semitorsion
