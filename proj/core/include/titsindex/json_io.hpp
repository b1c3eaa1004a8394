#pragma once

#include <string>
#include <vector>

#include "titsindex/invariants.hpp"
#include "titsindex/tits_index.hpp"

namespace titsindex {

// Interchange formats.  All documents carry a "schema" discriminator:
// "dynkin-diagram/1", "tits-index/1", "invariant-profile/1".  Serialization
// is canonical (orbits by smallest member, vertex lists ascending, fixed key
// order), so parse-then-print is the identity on canonical documents.

std::string diagram_to_json(const DynkinDiagram& diagram);
DynkinDiagram diagram_from_json(const std::string& text);

std::string index_to_json(const TitsIndex& index);
TitsIndex index_from_json(const std::string& text);

/// Lenient parse for validation tooling: structural problems (bad schema,
/// malformed orbits) come back as findings, and when the document is
/// readable the index is returned along with its validity findings.
struct ParsedIndex {
  bool parsed = false;
  TitsIndex index;
  std::vector<ValidationFinding> findings;
};
ParsedIndex parse_index_lenient(const std::string& text);

std::string profile_to_json(const InvariantProfile& profile);
InvariantProfile profile_from_json(const std::string& text);

}  // namespace titsindex
