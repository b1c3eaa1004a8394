#include "titsindex/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace titsindex {

int CohGroup::exponent() const {
  int e = 1;
  for (int m : cyclic_orders) e = std::lcm(e, m);
  return e;
}

CohGroup make_coh_group(std::vector<int> cyclic_orders,
                        std::vector<std::string> labels) {
  for (int m : cyclic_orders) {
    if (m < 1) throw DomainError("cyclic order must be >= 1");
  }
  if (!labels.empty()) {
    if (labels.size() != cyclic_orders.size()) {
      throw DomainError("generator label count does not match group rank");
    }
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw DomainError("generator labels must be unique");
    }
  }
  return CohGroup{std::move(cyclic_orders), std::move(labels)};
}

bool CohElement::is_zero() const {
  return std::all_of(coordinates.begin(), coordinates.end(),
                     [](int c) { return c == 0; });
}

int CohElement::order() const {
  int n = 1;
  for (size_t i = 0; i < coordinates.size(); ++i) {
    int m = group.cyclic_orders[i];
    int c = coordinates[i];
    n = std::lcm(n, m / std::gcd(c, m));
  }
  return n;
}

CohElement CohElement::scaled(int k) const {
  std::vector<int> coords = coordinates;
  for (size_t i = 0; i < coords.size(); ++i) {
    int m = group.cyclic_orders[i];
    long long c = static_cast<long long>(coords[i]) * k % m;
    if (c < 0) c += m;
    coords[i] = static_cast<int>(c);
  }
  // Scaling preserves the generated subgroup and the K-restriction; symbol
  // status is carried through (the only scalings used here are by units).
  return make_coh_element(group, std::move(coords), is_symbol, killed_by_K);
}

CohElement CohElement::p_primary_component(int p) const {
  int n = order();
  int pa = 1;
  while (n % p == 0) {
    n /= p;
    pa *= p;
  }
  // n is now the prime-to-p part of the order; x_p = (n * s) x with
  // n * s = 1 mod p^a.
  int s = 0;
  for (int k = 0; k < pa; ++k) {
    if ((static_cast<long long>(n) * k) % pa == 1 % pa) {
      s = k;
      break;
    }
  }
  return scaled(n * s);
}

CohElement make_coh_element(CohGroup group, std::vector<int> coordinates,
                            bool is_symbol, bool killed_by_K) {
  if (coordinates.size() != group.cyclic_orders.size()) {
    throw DomainError("coordinate count does not match group rank");
  }
  for (size_t i = 0; i < coordinates.size(); ++i) {
    int m = group.cyclic_orders[i];
    int c = coordinates[i] % m;
    if (c < 0) c += m;
    coordinates[i] = c;
  }
  CohElement e{std::move(group), std::move(coordinates), is_symbol, killed_by_K};
  if (e.is_zero()) {
    e.is_symbol = true;
    e.killed_by_K = true;
  }
  return e;
}

CohElement zero_element(CohGroup group) {
  std::vector<int> coords(group.cyclic_orders.size(), 0);
  return make_coh_element(std::move(group), std::move(coords));
}

namespace {

bool is_multiple_of(const CohElement& x, const CohElement& generator) {
  int e = generator.group.exponent();
  for (int k = 0; k < e; ++k) {
    if (generator.scaled(k).coordinates == x.coordinates) return true;
  }
  return false;
}

}  // namespace

bool same_subgroup(const CohElement& e1, const CohElement& e2) {
  if (e1.group != e2.group) {
    throw DomainError("subgroup comparison requires elements of the same group");
  }
  return is_multiple_of(e2, e1) && is_multiple_of(e1, e2);
}

int p_primary_part(int d, int p) {
  if (d < 1) throw DomainError("p_primary_part requires a positive integer");
  if (p < 2) throw DomainError("p_primary_part requires p >= 2");
  int out = 1;
  while (d % p == 0) {
    d /= p;
    out *= p;
  }
  return out;
}

int rost_multiplier(Family family, int rank) {
  switch (family) {
    case Family::InnerA: return 1;
    case Family::OuterA: return rank % 2 == 0 ? 2 : 1;
    case Family::B:
    case Family::C:
    case Family::InnerD:
    case Family::OuterD: return 1;
    case Family::TrialityD4: return 3;
    case Family::G2: return 2;
    case Family::F4: return 6;
    case Family::InnerE6: return 2;
    case Family::OuterE6: return 4;
    case Family::E7: return 3;
    case Family::E8: return 60;
  }
  return 1;
}

std::optional<int> dynkin_index(Family family, int rank) {
  switch (family) {
    case Family::InnerA: return rank + 1;
    case Family::B: return 2;
    case Family::C: return 1;
    case Family::InnerD: return 2;
    case Family::G2: return 2;
    case Family::F4: return 6;
    case Family::InnerE6: return 6;
    case Family::OuterE6: return 12;
    case Family::E7: return 12;
    case Family::E8: return 60;
    default: return std::nullopt;
  }
}

namespace {

void check_ind_bound(const InvariantProfile& p,
                     std::vector<ValidationFinding>& findings) {
  if (!p.ind_A) return;
  int ind = *p.ind_A;
  if (ind < 1) {
    findings.push_back({"ind_A_range", "ind_A must be a positive integer"});
    return;
  }
  auto reject = [&](const std::string& bound) {
    std::ostringstream os;
    os << "ind_A = " << ind << " violates the bound for family "
       << family_label(p.family) << " (" << bound << ")";
    findings.push_back({"ind_A_bound", os.str()});
  };
  switch (p.family) {
    case Family::InnerA:
    case Family::OuterA:
      if ((p.rank + 1) % ind != 0) reject("divides n+1");
      break;
    case Family::C:
    case Family::InnerD:
    case Family::OuterD:
      if ((2 * p.rank) % ind != 0) reject("divides 2n");
      else if (p_primary_part(ind, 2) != ind) reject("a power of 2");
      break;
    case Family::InnerE6:
      if (ind != 1 && ind != 3 && ind != 9 && ind != 27) reject("divides 27");
      break;
    case Family::E7:
      if (8 % ind != 0) reject("divides 8");
      break;
    case Family::G2:
    case Family::F4:
    case Family::E8:
      if (ind != 1) reject("trivial center forces ind_A = 1");
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<ValidationFinding> validate_profile(const InvariantProfile& p) {
  std::vector<ValidationFinding> findings;
  if (!rank_allowed(p.family, p.rank)) {
    findings.push_back({"rank", "family " + family_label(p.family) +
                                    " does not admit rank " +
                                    std::to_string(p.rank)});
    return findings;
  }
  check_ind_bound(p, findings);
  if (p.witt_index && (*p.witt_index < 0 || *p.witt_index > p.rank)) {
    findings.push_back({"witt_index_range",
                        "witt_index must lie in 0.." + std::to_string(p.rank)});
  }
  if (p.r && *p.r < 0) {
    findings.push_back({"r_range", "r must be nonnegative"});
  }
  if (p.tits_class_order &&
      (*p.tits_class_order < 1 || *p.tits_class_order > 3)) {
    findings.push_back({"tits_class_order", "tits_class_order must be 1, 2 or 3"});
  }
  if (p.f5 && !p.f5->is_zero() && p.f3 && p.f3->is_zero()) {
    findings.push_back(
        {"f5_divisibility",
         "f5 is a multiple of f3, so f3 = 0 forces f5 = 0"});
  }
  if (p.tits_class_order == 1 && p.b) {
    for (const auto& [q, aq] : p.a_components) {
      CohElement bq = p.b->p_primary_component(q);
      if (bq.group == aq.group &&
          bq.coordinates != aq.p_primary_component(q).coordinates) {
        findings.push_back(
            {"a_b_mismatch",
             "with trivial Tits class the " + std::to_string(q) +
                 "-component of a(G) must equal the matching component of b(G)"});
      }
    }
  }
  return findings;
}

}  // namespace titsindex
