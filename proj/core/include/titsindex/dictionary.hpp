#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "titsindex/catalog.hpp"
#include "titsindex/invariants.hpp"

namespace titsindex {

/// Result of looking up the Tits p-index determined by a profile.  When the
/// known slots match a single table row the lookup is Determined; when they
/// are consistent with several rows it is Underdetermined and lists every
/// candidate together with the slots that would settle the choice.
/// `ind_A` carries any extra constraint the matched row imposes on the
/// algebra index (for example "9 or 27").
struct IndexLookup {
  enum class Status { Determined, Underdetermined };
  Status status = Status::Underdetermined;
  std::vector<TitsIndex> candidates;
  IndConstraint ind_A = IndConstraint::any();
  std::vector<std::string> needed_slots;

  bool determined() const { return status == Status::Determined; }
  const TitsIndex& index() const;
};

/// The unique Tits p-index a complete profile determines.  Classical
/// families are computed from (d_p, r, i_w); exceptional families are looked
/// up against the catalog tables.  Throws DomainError on inconsistent
/// profiles; returns Underdetermined when the tables do not decide.
IndexLookup index_from_profile(const InvariantProfile& profile, int p,
                               const RuleTables& rules = builtin_rules());

/// Constraints a profile must satisfy for a group with the given admissible
/// p-index.  The inverse of index_from_profile on the table rows.
struct ProfileConstraints {
  Family family = Family::InnerA;
  int rank = 0;
  int prime = 2;

  std::optional<int> d_p;         // classical: p-primary part of ind A
  std::optional<int> witt_index;  // type B
  std::optional<int> r;           // classical r; exceptional split rank
  IndConstraint ind_A = IndConstraint::any();
  std::map<std::string, std::string> slots;  // coh-slot condition tokens
  std::vector<std::string> any_nonzero;
  std::vector<std::pair<int, int>> j3_one_of;  // empty = unconstrained

  std::string row_label;  // table row this constraint set describes
  std::string table;      // table the row comes from
};

ProfileConstraints constraints_for_index(const TitsIndex& index, int p,
                                         const RuleTables& rules = builtin_rules());

/// Definite check that a profile meets a constraint set (unknown slots fail
/// closed: a constraint on an absent slot is not satisfied).
bool satisfies(const InvariantProfile& profile, const ProfileConstraints& c);

/// Zeroes a cohomological slot together with everything that must vanish
/// with it (f3 = 0 forces f5 = 0), modelling base change to a field that
/// kills the class.  Slot names: f3, f5, g3, b, tits_class, a.
InvariantProfile zero_slot(InvariantProfile profile, const std::string& slot);

}  // namespace titsindex
