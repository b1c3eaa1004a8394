#include "titsindex/tables.hpp"

#include <algorithm>

#include <json.hpp>

#include "titsindex/catalog.hpp"
#include "titsindex/json_io.hpp"
#include "titsindex/render.hpp"

namespace titsindex {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string file_safe(const std::string& name) {
  std::string out = name;
  std::replace(out.begin(), out.end(), '.', '_');
  return out + ".json";
}

ordered_json occurs_json(const std::map<int, bool>& occurs) {
  ordered_json j;
  for (const auto& [p, yes] : occurs) j[std::to_string(p)] = yes;
  return j;
}

ordered_json conditions_json(const RowConditions& conditions) {
  ordered_json j;
  for (const auto& [slot, token] : conditions.slots) j[slot] = token;
  if (!conditions.any_nonzero.empty()) j["any_nonzero"] = conditions.any_nonzero;
  return j;
}

TableDocument base_table_document(const RuleTable& table) {
  Family family = parse_family(table.family).first;

  ordered_json doc;
  doc["schema"] = "tits-tables/1";
  doc["table"] = table.name;
  doc["family"] = table.family;
  ordered_json rows = ordered_json::array();
  std::string diagrams = "== " + table.name + " ==\n";

  for (const auto& row : table.rows) {
    TitsIndex index = index_of_row(family, row);
    std::string render = render_text(index);

    ordered_json rj;
    rj["label"] = row.label;
    rj["index"] = nlohmann::ordered_json::parse(index_to_json(index));
    if (row.ind.kind != IndConstraint::Kind::Any) rj["ind_A"] = row.ind.to_string();
    if (!row.conditions.empty()) rj["conditions"] = conditions_json(row.conditions);
    rj["occurs"] = occurs_json(row.occurs);
    if (row.signature) {
      rj["signature"] = *row.signature;
    } else {
      rj["signature"] = nullptr;
    }
    rj["split_rank"] = static_cast<int>(row.distinguished.size());
    rj["render"] = render;
    rows.push_back(std::move(rj));

    diagrams += row.label + ":\n" + render + "\n\n";
  }
  doc["rows"] = std::move(rows);

  TableDocument out;
  out.name = table.name;
  out.filename = file_safe(table.name);
  out.json_text = doc.dump(2) + "\n";
  out.diagrams = diagrams;
  return out;
}

TableDocument dictionary_table_document(const RuleTable& table,
                                        const RuleTables& rules) {
  Family family = parse_family(table.family).first;
  const RuleTable& base = rules.require_table(*table.base_table);

  ordered_json doc;
  doc["schema"] = "tits-tables/1";
  doc["table"] = table.name;
  doc["family"] = table.family;
  doc["base_table"] = base.name;
  ordered_json rows = ordered_json::array();
  std::string diagrams = "== " + table.name + " ==\n";

  for (const auto& row : table.rows) {
    const TableRow& target = *base.row(*row.row_ref);
    TitsIndex index = index_of_row(family, target);
    std::string render = render_text(index);

    ordered_json rj;
    if (row.j3) rj["J3"] = {row.j3->first, row.j3->second};
    rj["row"] = *row.row_ref;
    rj["index"] = nlohmann::ordered_json::parse(index_to_json(index));
    if (row.ind.kind != IndConstraint::Kind::Any) rj["ind_A"] = row.ind.to_string();
    if (!row.conditions.empty()) rj["conditions"] = conditions_json(row.conditions);
    rj["render"] = render;
    rows.push_back(std::move(rj));

    diagrams += row.label + " -> " + *row.row_ref + ":\n" + render + "\n\n";
  }
  doc["rows"] = std::move(rows);

  TableDocument out;
  out.name = table.name;
  out.filename = file_safe(table.name);
  out.json_text = doc.dump(2) + "\n";
  out.diagrams = diagrams;
  return out;
}

TableDocument torsion_table_document(const RuleTables& rules) {
  ordered_json doc;
  doc["schema"] = "tits-tables/1";
  doc["table"] = "SG";
  ordered_json rows = ordered_json::array();
  for (const auto& row : rules.torsion) {
    ordered_json rj;
    rj["types"] = row.types;
    rj["center_exponent"] = row.center_exponent;
    rj["primes"] = row.primes;
    if (row.plus_divisors_of_n_plus_1) rj["plus_divisors_of_n_plus_1"] = true;
    rows.push_back(std::move(rj));
  }
  doc["rows"] = std::move(rows);

  TableDocument out;
  out.name = "SG";
  out.filename = "SG.json";
  out.json_text = doc.dump(2) + "\n";
  return out;
}

}  // namespace

std::vector<TableDocument> golden_tables(const RuleTables& rules) {
  std::vector<TableDocument> out;
  out.push_back(torsion_table_document(rules));
  for (const char* name : {"F4", "oE6", "dE6", "E7", "E8"}) {
    out.push_back(base_table_document(rules.require_table(name)));
  }
  for (const char* name : {"E6.J3", "E7.3", "E8.J3"}) {
    out.push_back(dictionary_table_document(rules.require_table(name), rules));
  }
  return out;
}

std::string all_diagrams(const std::vector<TableDocument>& tables) {
  std::string out;
  for (const auto& table : tables) {
    if (!table.diagrams.empty()) out += table.diagrams;
  }
  return out;
}

}  // namespace titsindex
