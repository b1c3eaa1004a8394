#pragma once

#include <string>
#include <vector>

#include "titsindex/diagrams.hpp"

namespace titsindex {

/// A structured validity complaint; `code` is stable for tooling, `message`
/// readable for humans.
struct ValidationFinding {
  std::string code;
  std::string message;
};

/// A Tits index: diagram plus Galois action plus the set of distinguished
/// orbits.  `distinguished` is kept canonical (orbits sorted by smallest
/// member, members ascending).  Construction does not validate; arbitrary
/// distinguished sets may be represented so that validate() can report on
/// them.
struct TitsIndex {
  GaloisAction action;
  OrbitPartition distinguished;

  const DynkinDiagram& diagram() const { return action.diagram; }
  /// The distinguished orbits flattened to a sorted vertex list.
  std::vector<int> distinguished_vertices() const;

  friend bool operator==(const TitsIndex& x, const TitsIndex& y) {
    return x.action == y.action && x.distinguished == y.distinguished;
  }
};

/// Normalizes `distinguished` into canonical form and attaches it to the
/// action.  No validity check is performed.
TitsIndex make_index(GaloisAction action, OrbitPartition distinguished);

/// All invariant violations of the index; empty means valid.  Never throws.
std::vector<ValidationFinding> validate(const TitsIndex& index);

bool is_quasi_split(const TitsIndex& index);
bool is_anisotropic(const TitsIndex& index);

/// Number of distinguished orbits = rank of a maximal split torus.
int split_rank(const TitsIndex& index);

/// Base-change partial order: true when `higher` can be the index of the
/// same group after a field extension.  Requires the higher action's group
/// to be a subgroup of the lower's and the lower distinguished vertex set to
/// be contained in the higher one.  Throws DomainError unless both indexes
/// live on a diagram of the same type and rank.
bool base_change_leq(const TitsIndex& lower, const TitsIndex& higher);

/// Strict ordering used for canonical enumeration output: descending split
/// rank, ties broken lexicographically on the distinguished orbit list.
bool enumeration_less(const TitsIndex& x, const TitsIndex& y);

/// Total order for use in ordered containers.
bool canonical_less(const TitsIndex& x, const TitsIndex& y);

OrbitPartition normalize_orbits(OrbitPartition orbits);

}  // namespace titsindex
