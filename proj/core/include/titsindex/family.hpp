#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "titsindex/tits_index.hpp"

namespace titsindex {

/// Quasi-split type ^tT_n of an absolutely simple group: the Dynkin type
/// together with the order t of the Galois image in Aut(diagram).
enum class Family {
  InnerA,    // 1A_n, n >= 1
  OuterA,    // 2A_n, n >= 2
  B,         // B_n, n >= 2
  C,         // C_n, n >= 3
  InnerD,    // 1D_n, n >= 4
  OuterD,    // 2D_n, n >= 4
  TrialityD4,// 3D_4
  G2,
  F4,
  InnerE6,   // 1E6
  OuterE6,   // 2E6
  E7,
  E8,
};

/// Short label: "1A", "2A", "B", "C", "1D", "2D", "3D4", "G2", "F4",
/// "1E6", "2E6", "E7", "E8".
std::string family_label(Family family);

/// Parses a family label.  Accepts the short labels above plus the aliases
/// A -> 1A, D -> 1D, E6 -> 1E6, and forms with an attached rank ("2A5",
/// "E8").  Returns the family and, when the label carries one, the rank.
std::pair<Family, std::optional<int>> parse_family(const std::string& label);

TypeLabel type_of(Family family);
/// Order of the Galois image for the family (1, 2 or 3).
int galois_order(Family family);
/// True when `rank` is admitted by the family.
bool rank_allowed(Family family, int rank);
/// The unique rank of fixed-rank families (G2, F4, E6..E8, 3D4), or nullopt.
std::optional<int> fixed_rank(Family family);

/// Primes at which the family admits a non-quasi-split index; at any other
/// prime the only index is the quasi-split one.
std::set<int> family_primes(Family family, int rank);

/// Canonical Galois action of the family on its diagram.
GaloisAction family_action(Family family, int rank);

/// The quasi-split index: every orbit distinguished.
TitsIndex quasi_split_index(Family family, int rank);

/// Classifies an index by its canonical family representative.  Returns
/// nullopt when the action is not one of the canonical ones (including the
/// order-6 action on D4, which is outside the catalog).
std::optional<Family> family_of_index(const TitsIndex& index);

/// Exponent of the center of the simply connected group.
int center_exponent(Family family, int rank);

/// Throws DomainError unless t(family) is a power of p, i.e. unless groups
/// of this quasi-split type exist over p-special fields.
void require_prime_compatible(Family family, int p);

bool is_prime(int p);

}  // namespace titsindex
