#include "titsindex/tits_index.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace titsindex {

namespace {

std::string orbit_to_string(const Orbit& o) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < o.size(); ++i) {
    if (i) os << ",";
    os << o[i];
  }
  os << "}";
  return os.str();
}

}  // namespace

OrbitPartition normalize_orbits(OrbitPartition orbits) {
  for (auto& o : orbits) std::sort(o.begin(), o.end());
  std::sort(orbits.begin(), orbits.end());
  orbits.erase(std::unique(orbits.begin(), orbits.end()), orbits.end());
  return orbits;
}

TitsIndex make_index(GaloisAction action, OrbitPartition distinguished) {
  TitsIndex index;
  index.action = std::move(action);
  index.distinguished = normalize_orbits(std::move(distinguished));
  return index;
}

std::vector<int> TitsIndex::distinguished_vertices() const {
  std::vector<int> out;
  for (const auto& o : distinguished) out.insert(out.end(), o.begin(), o.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ValidationFinding> validate(const TitsIndex& index) {
  std::vector<ValidationFinding> findings;
  const auto& orbits = index.action.orbits;
  std::set<Orbit> orbit_set(orbits.begin(), orbits.end());
  std::set<Orbit> seen;
  for (const auto& o : index.distinguished) {
    if (!orbit_set.count(o)) {
      findings.push_back(
          {"not_an_orbit", "distinguished set " + orbit_to_string(o) +
                               " is not an orbit of the Galois action"});
      continue;
    }
    if (!seen.insert(o).second) {
      findings.push_back({"duplicate_orbit", "distinguished orbit " +
                                                 orbit_to_string(o) +
                                                 " listed more than once"});
    }
  }
  return findings;
}

bool is_quasi_split(const TitsIndex& index) {
  return index.distinguished == index.action.orbits;
}

bool is_anisotropic(const TitsIndex& index) { return index.distinguished.empty(); }

int split_rank(const TitsIndex& index) {
  return static_cast<int>(index.distinguished.size());
}

bool base_change_leq(const TitsIndex& lower, const TitsIndex& higher) {
  if (!lower.diagram().same_shape(higher.diagram())) {
    throw DomainError("base change comparison requires diagrams of the same "
                      "type and rank, got " +
                      lower.diagram().type_string() + " and " +
                      higher.diagram().type_string());
  }
  if (!higher.action.is_subgroup_of(lower.action)) return false;
  std::vector<int> lo = lower.distinguished_vertices();
  std::vector<int> hi = higher.distinguished_vertices();
  return std::includes(hi.begin(), hi.end(), lo.begin(), lo.end());
}

bool enumeration_less(const TitsIndex& x, const TitsIndex& y) {
  if (split_rank(x) != split_rank(y)) return split_rank(x) > split_rank(y);
  return x.distinguished < y.distinguished;
}

bool canonical_less(const TitsIndex& x, const TitsIndex& y) {
  if (x.diagram() != y.diagram()) return x.diagram() < y.diagram();
  if (x.action.elements != y.action.elements)
    return x.action.elements < y.action.elements;
  return x.distinguished < y.distinguished;
}

}  // namespace titsindex
