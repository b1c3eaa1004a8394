#pragma once

#include <optional>
#include <set>
#include <vector>

#include "titsindex/family.hpp"
#include "titsindex/rules.hpp"

namespace titsindex {

/// Torsion primes S(G) of the simple type: the primes at which a group of
/// the type can fail to be quasi-split over a p-special field.
std::set<int> torsion_primes(TypeLabel type, int rank);

/// All Tits p-indexes of the quasi-split family, duplicate-free, ordered by
/// descending split rank with ties broken lexicographically on the
/// distinguished orbit list.
///
/// For p outside family_primes the list is just the quasi-split index.
/// Throws DomainError when the family cannot exist over a p-special field
/// (Galois image order not a power of p) or the rank is out of range.
std::vector<TitsIndex> enumerate_indexes(Family family, int rank, int p,
                                         const RuleTables& rules = builtin_rules());

/// True when the index appears in the enumeration of its family at p.
/// Indexes whose action is not a canonical family action are never
/// admissible.
bool admissible(const TitsIndex& index, int p,
                const RuleTables& rules = builtin_rules());

/// Signature of the Killing form of the real form carrying this index, for
/// the rows where the catalog records one; absent otherwise.
std::optional<int> signature_of_real_form(const TitsIndex& index,
                                          const RuleTables& rules = builtin_rules());

/// The table row label ("split", "r15", ...) of an admissible exceptional
/// index, used to key dictionary lookups.
std::optional<std::string> exceptional_row_label(const TitsIndex& index,
                                                 const RuleTables& rules = builtin_rules());

/// Name of the rules table covering a family's indexes ("F4", "oE6", ...),
/// when the family is table-driven.
std::optional<std::string> family_table_name(Family family);

/// Builds the index of an exceptional table row on the canonical action.
TitsIndex index_of_row(Family family, const TableRow& row);

}  // namespace titsindex
