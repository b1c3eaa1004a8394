#include "titsindex/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "titsindex/invariants.hpp"

namespace titsindex {

std::set<int> torsion_primes(TypeLabel type, int rank) {
  build_diagram(type, rank);  // validates the rank bounds
  switch (type) {
    case TypeLabel::A: {
      std::set<int> primes{2};
      int m = rank + 1;
      for (int p = 2; p <= m; ++p) {
        if (m % p == 0 && is_prime(p)) primes.insert(p);
      }
      return primes;
    }
    case TypeLabel::B:
    case TypeLabel::C: return {2};
    case TypeLabel::D: return rank == 4 ? std::set<int>{2, 3} : std::set<int>{2};
    case TypeLabel::G: return {2};
    case TypeLabel::F: return {2, 3};
    case TypeLabel::E: return rank == 8 ? std::set<int>{2, 3, 5} : std::set<int>{2, 3};
  }
  return {};
}

std::optional<std::string> family_table_name(Family family) {
  switch (family) {
    case Family::G2: return "G2";
    case Family::TrialityD4: return "3D4";
    case Family::F4: return "F4";
    case Family::InnerE6: return "oE6";
    case Family::OuterE6: return "dE6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    default: return std::nullopt;
  }
}

TitsIndex index_of_row(Family family, const TableRow& row) {
  int rank = fixed_rank(family).value();
  return make_index(family_action(family, rank), row.distinguished);
}

namespace {

// Distinguished vertex patterns of the classical families.  Emitters append
// the distinguished orbit set of every (d, r) the rules admit; duplicates
// collapse in the caller's set.

using PatternSet = std::set<OrbitPartition>;

std::vector<int> p_power_divisors(int m, int p) {
  std::vector<int> out;
  for (int d = 1; d <= m; d *= p) {
    if (m % d == 0) out.push_back(d);
    if (d > m / p) break;
  }
  return out;
}

OrbitPartition singletons(const std::vector<int>& vertices) {
  OrbitPartition out;
  for (int v : vertices) out.push_back({v});
  return out;
}

PatternSet inner_a_patterns(int n, int p) {
  PatternSet out;
  for (int d : p_power_divisors(n + 1, p)) {
    std::vector<int> verts;
    for (int v = d; v <= n + 1 - d; v += d) verts.push_back(v);
    out.insert(singletons(verts));
  }
  return out;
}

PatternSet outer_a_patterns(int n, const ClassicalRules& rules) {
  PatternSet out;
  int bound = rules.outer_a_witt_bound_half ? (n + 1) / 2 : n;
  for (int d : p_power_divisors(n + 1, 2)) {
    for (int r = 0; r * d <= bound; ++r) {
      OrbitPartition orbits;
      for (int i = 1; i <= r; ++i) {
        int v = i * d, w = n + 1 - i * d;
        orbits.push_back(v == w ? Orbit{v} : Orbit{std::min(v, w), std::max(v, w)});
      }
      out.insert(normalize_orbits(std::move(orbits)));
    }
  }
  return out;
}

PatternSet b_patterns(int n) {
  PatternSet out;
  for (int iw = 0; iw <= n; ++iw) {
    std::vector<int> verts;
    for (int v = 1; v <= iw; ++v) verts.push_back(v);
    out.insert(singletons(verts));
  }
  return out;
}

PatternSet c_patterns(int n, const ClassicalRules& rules) {
  PatternSet out;
  for (int d : p_power_divisors(2 * n, 2)) {
    if (d == 1 && rules.c_d1_forces_split) {
      std::vector<int> all;
      for (int v = 1; v <= n; ++v) all.push_back(v);
      out.insert(singletons(all));
      continue;
    }
    for (int r = 0; r * d <= n; ++r) {
      std::vector<int> verts;
      for (int i = 1; i <= r; ++i) verts.push_back(i * d);
      out.insert(singletons(verts));
    }
  }
  return out;
}

PatternSet inner_d_patterns(int n, const ClassicalRules& rules) {
  PatternSet out;
  for (int d : p_power_divisors(2 * n, 2)) {
    for (int r = 0; r * d <= n; ++r) {
      int top = r * d;
      if (top == n - 1 && rules.inner_d_exclude_rd_n_minus_1) continue;
      std::vector<int> verts;
      if (top == n && rules.inner_d_fork_at_n) {
        for (int i = 1; i < r; ++i) verts.push_back(i * d);
        verts.push_back(n - 1);
        verts.push_back(n);
      } else {
        for (int i = 1; i <= r; ++i) verts.push_back(i * d);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      out.insert(singletons(verts));
    }
  }
  return out;
}

PatternSet outer_d_patterns(int n) {
  PatternSet out;
  for (int d : p_power_divisors(2 * n, 2)) {
    for (int r = 0; r * d <= n - 1; ++r) {
      OrbitPartition orbits;
      if (r * d == n - 1) {
        for (int i = 1; i < r; ++i) orbits.push_back({i * d});
        orbits.push_back({n - 1, n});
      } else {
        for (int i = 1; i <= r; ++i) orbits.push_back({i * d});
      }
      out.insert(normalize_orbits(std::move(orbits)));
    }
  }
  return out;
}

std::vector<TitsIndex> from_patterns(const GaloisAction& action,
                                     const PatternSet& patterns) {
  std::vector<TitsIndex> out;
  for (const auto& pattern : patterns) out.push_back(make_index(action, pattern));
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

}  // namespace

std::vector<TitsIndex> enumerate_indexes(Family family, int rank, int p,
                                         const RuleTables& rules) {
  if (!rank_allowed(family, rank)) {
    throw DomainError("family " + family_label(family) +
                      " does not admit rank " + std::to_string(rank));
  }
  require_prime_compatible(family, p);

  if (!family_primes(family, rank).count(p)) {
    return {quasi_split_index(family, rank)};
  }

  GaloisAction action = family_action(family, rank);
  switch (family) {
    case Family::InnerA:
      return from_patterns(action, inner_a_patterns(rank, p));
    case Family::OuterA:
      return from_patterns(action, outer_a_patterns(rank, rules.classical));
    case Family::B:
      return from_patterns(action, b_patterns(rank));
    case Family::C:
      return from_patterns(action, c_patterns(rank, rules.classical));
    case Family::InnerD:
      return from_patterns(action, inner_d_patterns(rank, rules.classical));
    case Family::OuterD:
      return from_patterns(action, outer_d_patterns(rank));
    default: {
      const RuleTable& table = rules.require_table(*family_table_name(family));
      PatternSet patterns;
      for (const auto& row : table.rows) {
        auto it = row.occurs.find(p);
        if (it != row.occurs.end() && it->second) patterns.insert(row.distinguished);
      }
      return from_patterns(action, patterns);
    }
  }
}

bool admissible(const TitsIndex& index, int p, const RuleTables& rules) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime");
  std::optional<Family> family = family_of_index(index);
  if (!family) return false;
  int t = galois_order(*family);
  if (t > 1 && t != p) return false;  // no such groups over p-special fields
  for (const auto& candidate :
       enumerate_indexes(*family, index.diagram().rank, p, rules)) {
    if (candidate == index) return true;
  }
  return false;
}

std::optional<std::string> exceptional_row_label(const TitsIndex& index,
                                                 const RuleTables& rules) {
  std::optional<Family> family = family_of_index(index);
  if (!family) return std::nullopt;
  std::optional<std::string> table_name = family_table_name(*family);
  if (!table_name) return std::nullopt;
  const RuleTable& table = rules.require_table(*table_name);
  for (const auto& row : table.rows) {
    if (row.has_index && row.distinguished == index.distinguished) return row.label;
  }
  return std::nullopt;
}

std::optional<int> signature_of_real_form(const TitsIndex& index,
                                          const RuleTables& rules) {
  std::optional<Family> family = family_of_index(index);
  if (!family) return std::nullopt;
  std::optional<std::string> table_name = family_table_name(*family);
  if (!table_name) return std::nullopt;
  const RuleTable& table = rules.require_table(*table_name);
  for (const auto& row : table.rows) {
    if (row.has_index && row.distinguished == index.distinguished) return row.signature;
  }
  return std::nullopt;
}

}  // namespace titsindex
