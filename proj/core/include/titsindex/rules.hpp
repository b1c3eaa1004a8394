#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "titsindex/tits_index.hpp"

namespace titsindex {

/// Constraint on the index of a Tits algebra, as printed in a table row.
struct IndConstraint {
  enum class Kind { Any, Eq, Divides, In };
  Kind kind = Kind::Any;
  std::vector<int> values;

  bool admits(int ind) const;
  /// Exhaustive list of admitted values (divisors for Kind::Divides).
  std::vector<int> admitted_values() const;
  std::string to_string() const;

  static IndConstraint any() { return {}; }
  static IndConstraint eq(int v) { return {Kind::Eq, {v}}; }
  static IndConstraint divides(int v);
  static IndConstraint one_of(std::vector<int> vs) { return {Kind::In, std::move(vs)}; }

  friend bool operator==(const IndConstraint&, const IndConstraint&) = default;
};

/// Invariant conditions attached to a table row.  Values for f3/f5/g3 are
/// "zero" | "nonzero" | "any"; for b they are "zero" | "nonzero" |
/// "two_torsion_symbol_killed" | "two_torsion_symbol_not_killed" |
/// "two_torsion_not_symbol" | "full_order"; for rost they are "zero" |
/// "nonzero_symbol" | "otherwise".  `any_nonzero` demands that at least one
/// of the named slots is nonzero.
struct RowConditions {
  std::map<std::string, std::string> slots;
  std::vector<std::string> any_nonzero;

  bool empty() const { return slots.empty() && any_nonzero.empty(); }
};

struct TableRow {
  std::string label;
  OrbitPartition distinguished;          // canonical form
  bool has_index = false;                // false for pure dictionary rows
  std::map<int, bool> occurs;            // prime -> occurs as a p-index
  IndConstraint ind;
  std::optional<int> signature;
  RowConditions conditions;
  std::optional<std::pair<int, int>> j3;
  std::optional<std::string> row_ref;    // reference into the base table
};

struct RuleTable {
  std::string name;
  std::string family;                    // family label, e.g. "2E6"
  std::optional<std::string> base_table; // for dictionary tables
  std::vector<TableRow> rows;

  const TableRow* row(const std::string& label) const;
};

struct TorsionRow {
  std::string types;
  std::string center_exponent;
  std::vector<int> primes;
  bool plus_divisors_of_n_plus_1 = false;
};

/// Switches for the under-documented corners of the classical enumeration,
/// kept as data so they can be amended without touching the engine.
struct ClassicalRules {
  bool outer_a_witt_bound_half = true;   // 2A: r*d <= floor((n+1)/2)
  bool c_d1_forces_split = true;         // C: a split algebra forces the split index
  bool inner_d_exclude_rd_n_minus_1 = true;
  bool inner_d_fork_at_n = true;         // 1D: rd = n circles both fork vertices
};

struct RostEntry {
  std::string family;
  int m = 1;
  std::string applies;
  std::string source;  // "stated" or "external"
};

struct RuleTables {
  int version = 0;
  std::vector<TorsionRow> torsion;
  std::vector<RostEntry> rost_multipliers;
  ClassicalRules classical;
  std::vector<RuleTable> tables;

  const RuleTable* table(const std::string& name) const;
  const RuleTable& require_table(const std::string& name) const;
};

/// Parses a rules document; throws DomainError naming the offending field on
/// schema violations.
RuleTables parse_rules(const std::string& json_text);
RuleTables load_rules_file(const std::string& path);

/// The rule tables embedded in the build.
const RuleTables& builtin_rules();
const std::string& builtin_rules_json();

}  // namespace titsindex
