#include "titsindex/rules.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

namespace titsindex {

using nlohmann::json;

bool IndConstraint::admits(int ind) const {
  switch (kind) {
    case Kind::Any: return ind >= 1;
    case Kind::Eq: return ind == values.at(0);
    case Kind::Divides: return ind >= 1 && values.at(0) % ind == 0;
    case Kind::In:
      return std::find(values.begin(), values.end(), ind) != values.end();
  }
  return false;
}

std::vector<int> IndConstraint::admitted_values() const {
  switch (kind) {
    case Kind::Any: return {};
    case Kind::Eq:
    case Kind::In: return values;
    case Kind::Divides: {
      std::vector<int> out;
      for (int d = 1; d <= values.at(0); ++d) {
        if (values.at(0) % d == 0) out.push_back(d);
      }
      return out;
    }
  }
  return {};
}

std::string IndConstraint::to_string() const {
  switch (kind) {
    case Kind::Any: return "any";
    case Kind::Eq: return std::to_string(values.at(0));
    case Kind::Divides: return "divides " + std::to_string(values.at(0));
    case Kind::In: {
      std::ostringstream os;
      for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << " or ";
        os << values[i];
      }
      return os.str();
    }
  }
  return "?";
}

IndConstraint IndConstraint::divides(int v) {
  if (v < 1) throw DomainError("divisor bound must be positive");
  return {Kind::Divides, {v}};
}

const TableRow* RuleTable::row(const std::string& label) const {
  for (const auto& r : rows) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

const RuleTable* RuleTables::table(const std::string& name) const {
  for (const auto& t : tables) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

const RuleTable& RuleTables::require_table(const std::string& name) const {
  const RuleTable* t = table(name);
  if (!t) throw DomainError("rules document has no table named '" + name + "'");
  return *t;
}

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw DomainError("rules schema violation at " + where + ": " + what);
}

IndConstraint parse_ind(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("op")) schema_error(where, "expected {op, ...}");
  std::string op = j.at("op").get<std::string>();
  if (op == "eq") return IndConstraint::eq(j.at("value").get<int>());
  if (op == "divides") return IndConstraint::divides(j.at("value").get<int>());
  if (op == "in") return IndConstraint::one_of(j.at("values").get<std::vector<int>>());
  schema_error(where, "unknown op '" + op + "'");
}

OrbitPartition parse_orbits(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of orbits");
  OrbitPartition orbits;
  for (const auto& o : j) {
    if (!o.is_array() || o.empty()) schema_error(where, "orbit must be a nonempty array");
    orbits.push_back(o.get<Orbit>());
  }
  return normalize_orbits(std::move(orbits));
}

TableRow parse_row(const json& j, const std::string& table_name) {
  const std::string where = "tables[" + table_name + "].rows";
  TableRow row;
  row.label = j.at("label").get<std::string>();
  if (j.contains("distinguished")) {
    row.distinguished = parse_orbits(j.at("distinguished"), where + ".distinguished");
    row.has_index = true;
  }
  if (j.contains("occurs")) {
    for (const auto& [key, value] : j.at("occurs").items()) {
      row.occurs[std::stoi(key)] = value.get<bool>();
    }
  }
  if (j.contains("ind_A")) row.ind = parse_ind(j.at("ind_A"), where + ".ind_A");
  if (j.contains("signature")) row.signature = j.at("signature").get<int>();
  if (j.contains("j3")) {
    auto v = j.at("j3").get<std::vector<int>>();
    if (v.size() != 2) schema_error(where + ".j3", "expected a pair");
    row.j3 = std::make_pair(v[0], v[1]);
  }
  if (j.contains("row")) row.row_ref = j.at("row").get<std::string>();
  if (j.contains("conditions")) {
    for (const auto& [key, value] : j.at("conditions").items()) {
      if (key == "any_nonzero") {
        row.conditions.any_nonzero = value.get<std::vector<std::string>>();
      } else {
        row.conditions.slots[key] = value.get<std::string>();
      }
    }
  }
  return row;
}

}  // namespace

RuleTables parse_rules(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("rules document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) schema_error("$", "expected an object");
  if (j.value("schema", "") != "tits-rules/1") {
    schema_error("schema", "expected \"tits-rules/1\"");
  }

  RuleTables rules;
  rules.version = j.value("version", 0);

  for (const auto& row : j.value("torsion_primes", json::array())) {
    TorsionRow t;
    t.types = row.at("types").get<std::string>();
    t.center_exponent = row.value("center_exponent", "");
    t.primes = row.at("primes").get<std::vector<int>>();
    t.plus_divisors_of_n_plus_1 = row.value("plus_divisors_of_n_plus_1", false);
    rules.torsion.push_back(std::move(t));
  }

  for (const auto& row : j.value("rost_multipliers", json::array())) {
    RostEntry e;
    e.family = row.at("family").get<std::string>();
    e.m = row.at("m").get<int>();
    e.applies = row.value("applies", "");
    e.source = row.value("source", "");
    rules.rost_multipliers.push_back(std::move(e));
  }

  if (j.contains("classical_rules")) {
    const json& c = j.at("classical_rules");
    if (c.contains("2A")) {
      rules.classical.outer_a_witt_bound_half =
          c.at("2A").value("witt_bound_half_n_plus_1", true);
    }
    if (c.contains("C")) {
      rules.classical.c_d1_forces_split =
          c.at("C").value("d_equal_1_forces_split", true);
    }
    if (c.contains("1D")) {
      rules.classical.inner_d_exclude_rd_n_minus_1 =
          c.at("1D").value("exclude_rd_n_minus_1", true);
      rules.classical.inner_d_fork_at_n =
          c.at("1D").value("rd_n_circles_both_fork_vertices", true);
    }
  }

  for (const auto& tj : j.value("tables", json::array())) {
    RuleTable table;
    table.name = tj.at("name").get<std::string>();
    table.family = tj.at("family").get<std::string>();
    if (tj.contains("base_table")) {
      table.base_table = tj.at("base_table").get<std::string>();
    }
    for (const auto& rj : tj.at("rows")) {
      table.rows.push_back(parse_row(rj, table.name));
    }
    rules.tables.push_back(std::move(table));
  }

  // Dictionary rows must point at existing rows of their base table.
  for (const auto& table : rules.tables) {
    if (!table.base_table) continue;
    const RuleTable& base = rules.require_table(*table.base_table);
    for (const auto& row : table.rows) {
      if (!row.row_ref || base.row(*row.row_ref) == nullptr) {
        schema_error("tables[" + table.name + "]",
                     "row '" + row.label + "' does not reference a row of " +
                         base.name);
      }
    }
  }
  return rules;
}

RuleTables load_rules_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open rules file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_rules(buffer.str());
}

const RuleTables& builtin_rules() {
  static const RuleTables rules = parse_rules(builtin_rules_json());
  return rules;
}

}  // namespace titsindex
