#pragma once

#include <string>
#include <vector>

#include "titsindex/rules.hpp"

namespace titsindex {

/// One regenerated catalog table: canonical JSON plus the text renders of
/// its index-bearing rows.
struct TableDocument {
  std::string name;       // table name, e.g. "E7.3"
  std::string filename;   // file-safe name, e.g. "E7_3.json"
  std::string json_text;
  std::string diagrams;   // empty for tables without index rows
};

/// The golden catalog tables (torsion primes, the per-family index tables,
/// and both J3 dictionaries), in a fixed order with row order matching the
/// catalog data.  Byte-stable across runs.
std::vector<TableDocument> golden_tables(const RuleTables& rules = builtin_rules());

/// Concatenation of every table's diagram block, used for diagrams.txt.
std::string all_diagrams(const std::vector<TableDocument>& tables);

}  // namespace titsindex
