#include "semitorsion/cofinite_set.hpp"

#include <algorithm>

namespace semitorsion {

CofiniteSet::CofiniteSet(Int threshold) : threshold_(threshold), lo_(threshold) {}

CofiniteSet::CofiniteSet(Int threshold, std::vector<Int> below)
    : threshold_(threshold), below_(std::move(below)) {
  normalize();
}

void CofiniteSet::normalize() {
  std::sort(below_.begin(), below_.end());
  below_.erase(std::unique(below_.begin(), below_.end()), below_.end());
  below_.erase(std::lower_bound(below_.begin(), below_.end(), threshold_), below_.end());
  while (!below_.empty() && below_.back() == threshold_ - 1) {
    below_.pop_back();
    --threshold_;
  }
  lo_ = min_element();
  mask_.assign(static_cast<std::size_t>(threshold_ - lo_), 0);
  for (Int z : below_) mask_[static_cast<std::size_t>(z - lo_)] = 1;
}

bool CofiniteSet::includes(const CofiniteSet& other) const {
  for (Int z : other.below_) {
    if (!contains(z)) return false;
  }
  for (Int z = other.threshold_; z < threshold_; ++z) {
    if (!contains(z)) return false;
  }
  return true;
}

CofiniteSet CofiniteSet::shifted(Int c) const {
  std::vector<Int> moved(below_);
  for (Int& z : moved) z += c;
  return CofiniteSet(threshold_ + c, std::move(moved));
}

CofiniteSet set_intersection(const CofiniteSet& x, const CofiniteSet& y) {
  const Int lo = std::min(x.min_element(), y.min_element());
  const Int hi = std::max(x.threshold(), y.threshold());
  return CofiniteSet::from_window(lo, hi, [&](Int z) { return x.contains(z) && y.contains(z); });
}

CofiniteSet set_union(const CofiniteSet& x, const CofiniteSet& y) {
  std::vector<Int> members(x.below());
  members.insert(members.end(), y.below().begin(), y.below().end());
  return CofiniteSet(std::min(x.threshold(), y.threshold()), std::move(members));
}

std::vector<Int> set_difference(const CofiniteSet& x, const CofiniteSet& y) {
  std::vector<Int> out;
  for (Int z = x.min_element(); z < y.threshold(); ++z) {
    if (x.contains(z) && !y.contains(z)) out.push_back(z);
  }
  return out;
}

std::size_t set_difference_card(const CofiniteSet& x, const CofiniteSet& y) {
  std::size_t count = 0;
  for (Int z = x.min_element(); z < y.threshold(); ++z) {
    if (x.contains(z) && !y.contains(z)) ++count;
  }
  return count;
}

}  // namespace semitorsion
