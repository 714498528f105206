#include "semitorsion/hypersurface.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "semitorsion/torsion.hpp"

namespace semitorsion {

namespace {

Int floor_mod(Int x, Int m) {
  const Int r = x % m;
  return r < 0 ? r + m : r;
}

Int inverse_mod(Int a, Int m) {
  // extended Euclid on (a, m)
  Int old_r = a, r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return floor_mod(old_s, m);
}

void require_base(const HypersurfaceSemigroup& h, const RelativeIdeal& a) {
  if (a.semigroup_ptr() != h.base() && a.semigroup() != *h.base()) throw SemigroupMismatch();
}

}  // namespace

HypersurfaceSemigroup::HypersurfaceSemigroup(Int a, Int b) : a_(a), b_(b) {
  if (!(b > a && a > 1) || std::gcd(a, b) != 1) {
    throw std::domain_error("hypersurface semigroup needs coprime b > a > 1, got <" +
                            std::to_string(a) + "," + std::to_string(b) + ">");
  }
  a_inverse_mod_b_ = inverse_mod(a, b);
  base_ = make_semigroup({a, b});
}

HypersurfaceSemigroup HypersurfaceSemigroup::from_semigroup(const SemigroupPtr& s) {
  const auto& g = s->generators();
  if (g.size() != 2) {
    throw std::domain_error("semigroup is not two-generated (" + std::to_string(g.size()) +
                            " minimal generators)");
  }
  HypersurfaceSemigroup h(g[0], g[1]);
  h.base_ = s;
  return h;
}

bool HypersurfaceSemigroup::same_class(LatticeClass p, LatticeClass q) const {
  const Int dx = p.x - q.x;
  const Int dy = p.y - q.y;
  return dx % b_ == 0 && dy == -(dx / b_) * a_;
}

LatticeClass HypersurfaceSemigroup::normalize(Int g, Int x_lo) const {
  const Int residue = floor_mod(floor_mod(g, b_) * a_inverse_mod_b_, b_);
  const Int x = x_lo + floor_mod(residue - x_lo, b_);
  return {x, (g - a_ * x) / b_};
}

Int HypersurfaceSemigroup::cyclic_key(LatticeClass p) const {
  return floor_mod(b_ * p.x - a_ * p.y, a_ * a_ + b_ * b_);
}

LatticeClass lattice_normalize(const HypersurfaceSemigroup& h, Int g, Int x_lo) {
  return h.normalize(g, x_lo);
}

OrderedGenerators ordered_generators(const HypersurfaceSemigroup& h, const RelativeIdeal& a,
                                     Int anchor) {
  require_base(h, a);
  const auto& gens = a.min_gens();
  if (!std::binary_search(gens.begin(), gens.end(), anchor)) {
    throw std::invalid_argument("anchor " + std::to_string(anchor) +
                                " is not a minimal generator");
  }
  const Int x1 = h.normalize(anchor, 0).x;
  std::vector<LatticeClass> pts;
  pts.reserve(gens.size());
  for (Int g : gens) pts.push_back(h.normalize(g, x1));
  std::sort(pts.begin(), pts.end(), [](auto p, auto q) { return p.x < q.x; });

  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].x < pts[i].x && pts[i - 1].y > pts[i].y)) {
      throw std::logic_error("ordered generators: chain inequality violated");
    }
  }
  if (!(pts.back().x < pts.front().x + h.b() && pts.back().y > pts.front().y - h.a())) {
    throw std::logic_error("ordered generators: wrap-around inequality violated");
  }

  OrderedGenerators out;
  out.pairs = std::move(pts);
  for (auto p : out.pairs) out.psi_values.push_back(h.psi(p));
  return out;
}

OrderedGenerators ordered_generators(const HypersurfaceSemigroup& h, const RelativeIdeal& a) {
  const auto& gens = a.min_gens();
  const auto anchor = std::min_element(gens.begin(), gens.end(), [&](Int p, Int q) {
    return h.normalize(p, 0).x < h.normalize(q, 0).x;
  });
  return ordered_generators(h, a, *anchor);
}

BoundaryCycle boundary_cycle(const HypersurfaceSemigroup& h, const RelativeIdeal& a) {
  require_base(h, a);
  struct Entry {
    Int key;
    LatticeClass point;
    bool maximal;
  };
  std::vector<Entry> entries;
  for (Int g : apery_set(a, h.a() + h.b())) {
    const auto p = h.normalize(g, 0);
    entries.push_back({h.cyclic_key(p), p, a.contains(g - h.a()) && a.contains(g - h.b())});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& l, const Entry& r) { return l.key < r.key; });
  BoundaryCycle out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].key == entries[i - 1].key) {
      throw std::logic_error("boundary cycle: two classes share a cyclic key");
    }
    out.cycle.push_back(entries[i].point);
    out.keys.push_back(entries[i].key);
    out.maximal.push_back(entries[i].maximal);
  }
  return out;
}

RelativeIdeal dual_formula(const HypersurfaceSemigroup& h, const OrderedGenerators& order) {
  const auto& p = order.pairs;
  const Int a = h.a();
  const Int b = h.b();
  std::vector<Int> gens{-a * p.front().x - b * p.back().y};
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    gens.push_back(a * b - a * p[i + 1].x - b * p[i].y);
  }
  return RelativeIdeal(h.base(), gens);
}

RelativeIdeal dual_formula(const HypersurfaceSemigroup& h, const RelativeIdeal& a) {
  return dual_formula(h, ordered_generators(h, a));
}

RelativeIdeal dual_symmetric(const RelativeIdeal& a) {
  const auto& s = a.semigroup();
  if (!s.is_symmetric()) throw std::domain_error("semigroup is not symmetric");
  const Int f = s.frobenius();
  // F - z >= T_A is always in A; F - z < min(A) never is.
  auto members = CofiniteSet::from_window(f - a.set().threshold() + 1, f - a.min_element() + 1,
                                          [&](Int z) { return !a.contains(f - z); });
  return RelativeIdeal::from_set(a.semigroup_ptr(), std::move(members));
}

HalfMuReport check_half_mu_bound(const HypersurfaceSemigroup& h, const RelativeIdeal& a,
                                 const RelativeIdeal& b) {
  require_base(h, a);
  require_base(h, b);
  if (a.is_principal() || b.is_principal()) {
    throw std::domain_error("half-mu bound needs non-principal ideals");
  }
  const auto profile = torsion_profile(a, b);
  HalfMuReport r;
  r.tau = profile.total;
  r.support = profile.support_size;
  r.mu_a = a.mu();
  r.mu_b = b.mu();
  r.mu_product = r.mu_a * r.mu_b;
  r.inequality_1 = r.tau + r.support >= r.mu_product;
  r.inequality_2 = 2 * r.tau >= r.mu_product;
  return r;
}

std::size_t torsion_generator_pairs(const HypersurfaceSemigroup& h, const RelativeIdeal& a) {
  const auto dual = dual_formula(h, a);
  const auto sum = ideal_sum(a, dual);
  const auto& g_sum = sum.min_gens();
  // Each minimal generator of A + A* keeps one preimage g (x) h; every other
  // pair is reduced against it and becomes torsion.
  std::vector<Int> hit;
  for (Int g : a.min_gens()) {
    for (Int d : dual.min_gens()) {
      if (std::binary_search(g_sum.begin(), g_sum.end(), g + d)) hit.push_back(g + d);
    }
  }
  std::sort(hit.begin(), hit.end());
  hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
  return a.mu() * dual.mu() - hit.size();
}

}  // namespace semitorsion
