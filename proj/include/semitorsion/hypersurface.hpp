#pragma once

#include <cstddef>
#include <vector>

#include "semitorsion/ideal.hpp"

namespace semitorsion {

/// A representative (x, y) of a coset in Z = Z^2 / (b, -a)Z. Two
/// representatives name the same class iff they differ by a multiple of
/// (b, -a); HypersurfaceSemigroup::same_class tests that.
struct LatticeClass {
  Int x = 0;
  Int y = 0;
  friend bool operator==(const LatticeClass&, const LatticeClass&) = default;
};

/// S = <a, b> with gcd(a, b) = 1 and b > a > 1, together with the lattice
/// picture Z whose classes are identified with integers by psi(x, y) = ax + by.
class HypersurfaceSemigroup {
 public:
  HypersurfaceSemigroup(Int a, Int b);

  /// Throws std::domain_error unless `s` is minimally generated by exactly
  /// two elements.
  static HypersurfaceSemigroup from_semigroup(const SemigroupPtr& s);

  Int a() const { return a_; }
  Int b() const { return b_; }
  const SemigroupPtr& base() const { return base_; }

  Int psi(LatticeClass p) const { return a_ * p.x + b_ * p.y; }
  bool same_class(LatticeClass p, LatticeClass q) const;

  /// The representative of psi^{-1}(g) with x in [x_lo, x_lo + b).
  LatticeClass normalize(Int g, Int x_lo) const;

  /// Cyclic position (b x - a y) mod (a^2 + b^2); well defined on classes.
  Int cyclic_key(LatticeClass p) const;

 private:
  Int a_;
  Int b_;
  Int a_inverse_mod_b_;
  SemigroupPtr base_;
};

LatticeClass lattice_normalize(const HypersurfaceSemigroup& h, Int g, Int x_lo);

/// Minimal generators as lattice points with x_1 < ... < x_n < x_1 + b and
/// y_1 > ... > y_n > y_1 - a.
struct OrderedGenerators {
  std::vector<LatticeClass> pairs;
  std::vector<Int> psi_values;
};

/// Anchored at the generator whose x-residue in [0, b) is smallest, so every
/// representative lands in x in [0, b).
OrderedGenerators ordered_generators(const HypersurfaceSemigroup& h, const RelativeIdeal& a);

/// Anchored at the minimal generator `anchor` (x_1 taken in [0, b)).
OrderedGenerators ordered_generators(const HypersurfaceSemigroup& h, const RelativeIdeal& a,
                                     Int anchor);

/// psi^{-1}(Ap(A, a + b)) in cyclic order of cyclic_key, starting from the
/// smallest key. `maximal[k]` marks classes whose left and lower neighbours
/// (x - 1, y) and (x, y - 1) both lie in A.
struct BoundaryCycle {
  std::vector<LatticeClass> cycle;
  std::vector<Int> keys;
  std::vector<bool> maximal;
};

BoundaryCycle boundary_cycle(const HypersurfaceSemigroup& h, const RelativeIdeal& a);

/// A* = (-a x_1 - b y_n, ab - a x_{i+1} - b y_i : i = 1..n-1), read off an
/// ordered generator list.
RelativeIdeal dual_formula(const HypersurfaceSemigroup& h, const OrderedGenerators& order);
RelativeIdeal dual_formula(const HypersurfaceSemigroup& h, const RelativeIdeal& a);

/// A* = {z : F - z not in A}; valid over any symmetric semigroup. Throws
/// std::domain_error otherwise.
RelativeIdeal dual_symmetric(const RelativeIdeal& a);

struct HalfMuReport {
  std::size_t tau = 0;
  std::size_t support = 0;
  std::size_t mu_a = 0;
  std::size_t mu_b = 0;
  std::size_t mu_product = 0;
  /// tau + support >= mu(A) mu(B)
  bool inequality_1 = false;
  /// 2 tau >= mu(A) mu(B)
  bool inequality_2 = false;
};

/// Throws std::domain_error when either ideal is principal: the bound does
/// not apply there.
HalfMuReport check_half_mu_bound(const HypersurfaceSemigroup& h, const RelativeIdeal& a,
                                 const RelativeIdeal& b);

/// Torsion elements in a minimal generating set of A (x) A*: the mu(A)mu(A*)
/// pairs (g, h) in G(A) x G(A*) minus the distinct minimal generators of
/// A + A* they reach. Pairs sharing a sum differ by a torsion element, so
/// only one of them per minimal generator stays torsion-free.
std::size_t torsion_generator_pairs(const HypersurfaceSemigroup& h, const RelativeIdeal& a);

}  // namespace semitorsion
