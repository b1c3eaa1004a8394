#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "titsindex/family.hpp"

namespace titsindex {

/// A finitely generated abelian torsion group, presented as a direct sum of
/// cyclic groups.  Stands in for groups like H^3(k, Z/mZ(2)); elements are
/// coordinate vectors.
struct CohGroup {
  std::vector<int> cyclic_orders;           // each >= 1
  std::vector<std::string> generator_labels; // optional, unique when present

  int rank() const { return static_cast<int>(cyclic_orders.size()); }
  /// Exponent of the group (lcm of the cyclic orders).
  int exponent() const;

  friend bool operator==(const CohGroup&, const CohGroup&) = default;
};

CohGroup make_coh_group(std::vector<int> cyclic_orders,
                        std::vector<std::string> labels = {});

/// An element of a CohGroup with the two semantic flags the classification
/// tables branch on: whether the class is a symbol and whether its
/// restriction to the fixed quadratic extension K vanishes.  The zero
/// element always has is_symbol = true and killed_by_K = true.
struct CohElement {
  CohGroup group;
  std::vector<int> coordinates;  // reduced mod the cyclic orders
  bool is_symbol = false;
  bool killed_by_K = false;

  bool is_zero() const;
  int order() const;
  CohElement scaled(int k) const;
  CohElement negated() const { return scaled(-1); }
  /// Component of p-power order in the primary decomposition.
  CohElement p_primary_component(int p) const;

  friend bool operator==(const CohElement& x, const CohElement& y) {
    return x.group == y.group && x.coordinates == y.coordinates;
  }
};

CohElement make_coh_element(CohGroup group, std::vector<int> coordinates,
                            bool is_symbol = false, bool killed_by_K = false);
CohElement zero_element(CohGroup group);

/// True when the cyclic subgroups generated by the two elements coincide,
/// i.e. each is an integer multiple of the other.  Throws DomainError when
/// the elements live in different groups.
bool same_subgroup(const CohElement& e1, const CohElement& e2);

/// p^{v_p(d)}: the p-primary part of a positive integer.
int p_primary_part(int d, int p);

/// Per-family algebraic and cohomological data.  Slots that are unknown are
/// simply absent; every operation that needs a missing slot says which one.
struct InvariantProfile {
  Family family = Family::InnerA;
  int rank = 0;

  std::optional<int> ind_A;                // index of the Tits algebra
  std::optional<int> witt_index;           // i_w(q), type B
  std::optional<int> r;                    // classical: hermitian Witt index;
                                           // exceptional: number of
                                           // distinguished orbits
  std::optional<bool> discriminant_trivial;
  std::optional<int> tits_class_order;     // 1, 2 or 3
  std::optional<std::pair<int, int>> j3;   // mod-3 J-invariant

  std::optional<CohElement> f3;            // mod-2 degree-3 invariant
  std::optional<CohElement> f5;            // mod-2 degree-5 invariant
  std::optional<CohElement> g3;            // mod-3 degree-3 invariant
  std::optional<CohElement> b;             // b(G) in H^3(k, Z/mZ(2))
  std::optional<CohElement> tits_class;    // explicit class in H^2(k, Z)
  std::map<int, CohElement> a_components;  // prime -> p-part of a(G)
};

/// Checks the structural invariants of a profile (index bounds per family,
/// f5 divisible by f3, coordinate reduction, a/b compatibility when the
/// Tits class is trivial).  Empty result means consistent.
std::vector<ValidationFinding> validate_profile(const InvariantProfile& profile);

/// Largest divisor of the Dynkin index coprime to the exponent of the
/// center: the modulus m of the invariant b(G).
int rost_multiplier(Family family, int rank);

/// Dynkin index of the simply connected group, where the catalog ships it.
std::optional<int> dynkin_index(Family family, int rank);

}  // namespace titsindex
