#pragma once

#include <string>
#include <vector>

#include "titsindex/dictionary.hpp"

namespace titsindex {

/// Outcome of a motivic-equivalence decision.  CriterionUnavailable is a
/// first-class answer: it means no stated criterion covers the family and
/// prime, never that the groups were compared some other way.
struct Verdict {
  enum class Kind { Equivalent, NotEquivalent, CriterionUnavailable };
  Kind kind = Kind::CriterionUnavailable;
  int prime = 0;  // 0 on the all-primes verdict
  std::string criterion;
  std::vector<std::string> citations;
  std::string note;

  bool equivalent() const { return kind == Kind::Equivalent; }
  bool unavailable() const { return kind == Kind::CriterionUnavailable; }
};

std::string verdict_name(Verdict::Kind kind);

/// Necessary condition for motivic equivalence mod p: the p-primary Tits
/// class slots of the two profiles generate the same subgroup.  Uses the
/// explicit classes when both profiles carry them, and otherwise the
/// p-primary algebra indexes (generators of equal subgroups have equal
/// index).  Throws DomainError on family mismatch or when the profiles
/// carry no usable Tits-class data.
bool tits_algebra_compatible(const InvariantProfile& p1,
                             const InvariantProfile& p2, int p);

/// Decides motivic equivalence mod p by the family/prime-specific criterion.
/// Families and primes with no stated criterion yield CriterionUnavailable.
Verdict motivic_equivalent_mod_p(const InvariantProfile& p1,
                                 const InvariantProfile& p2, int p,
                                 const RuleTables& rules = builtin_rules());

/// Conjunction over the torsion primes of the type.  A definite
/// NotEquivalent at any prime decides; otherwise any missing criterion makes
/// the verdict CriterionUnavailable.
Verdict motivic_equivalent(const InvariantProfile& p1,
                           const InvariantProfile& p2,
                           const RuleTables& rules = builtin_rules());

}  // namespace titsindex
