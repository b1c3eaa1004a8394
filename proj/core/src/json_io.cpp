#include "titsindex/json_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "titsindex/family.hpp"

namespace titsindex {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  throw DomainError("schema violation in field '" + field + "': " + what);
}

ordered_json parse_document(const std::string& text, const std::string& schema) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) schema_error("$", "expected an object");
  if (j.value("schema", "") != schema) {
    schema_error("schema", "expected \"" + schema + "\"");
  }
  return j;
}

ordered_json diagram_json(const DynkinDiagram& d) {
  ordered_json j;
  j["schema"] = "dynkin-diagram/1";
  j["type"] = d.type_string();
  j["rank"] = d.rank;
  ordered_json edges = ordered_json::array();
  for (const auto& e : d.edges) {
    ordered_json edge = ordered_json::array({e.a, e.b, e.multiplicity});
    if (e.multiplicity >= 2) edge.push_back(e.toward_short);
    edges.push_back(std::move(edge));
  }
  j["edges"] = std::move(edges);
  return j;
}

DynkinDiagram diagram_from(const ordered_json& j) {
  if (!j.contains("type")) schema_error("diagram.type", "missing");
  std::string type_str = j.at("type").get<std::string>();
  if (type_str.empty()) schema_error("diagram.type", "empty");
  TypeLabel type = type_from_char(type_str[0]);
  int rank = 0;
  if (j.contains("rank")) {
    rank = j.at("rank").get<int>();
  } else if (type_str.size() > 1) {
    rank = std::stoi(type_str.substr(1));
  } else {
    schema_error("diagram.rank", "missing");
  }
  if (type_str.size() > 1 && std::stoi(type_str.substr(1)) != rank) {
    schema_error("diagram.rank", "does not match the type label");
  }
  DynkinDiagram canonical = build_diagram(type, rank);
  if (j.contains("edges")) {
    std::vector<DiagramEdge> edges;
    for (const auto& ej : j.at("edges")) {
      if (!ej.is_array() || ej.size() < 3) {
        schema_error("diagram.edges", "edge entries are [a, b, multiplicity(, short)]");
      }
      DiagramEdge e;
      e.a = ej[0].get<int>();
      e.b = ej[1].get<int>();
      if (e.a > e.b) std::swap(e.a, e.b);
      e.multiplicity = ej[2].get<int>();
      if (e.multiplicity >= 2) {
        if (ej.size() < 4) schema_error("diagram.edges", "multiple edge missing short-root vertex");
        e.toward_short = ej[3].get<int>();
      }
      edges.push_back(e);
    }
    std::sort(edges.begin(), edges.end());
    if (edges != canonical.edges) {
      schema_error("diagram.edges", "edge list does not match the canonical " +
                                        canonical.type_string() + " diagram");
    }
  }
  return canonical;
}

ordered_json orbits_json(const OrbitPartition& orbits) {
  ordered_json out = ordered_json::array();
  for (const auto& orbit : orbits) out.push_back(orbit);
  return out;
}

OrbitPartition orbits_from(const ordered_json& j, const std::string& field) {
  if (!j.is_array()) schema_error(field, "expected an array of vertex lists");
  OrbitPartition orbits;
  for (const auto& oj : j) {
    if (!oj.is_array() || oj.empty()) schema_error(field, "orbits are nonempty vertex lists");
    orbits.push_back(oj.get<Orbit>());
  }
  return normalize_orbits(std::move(orbits));
}

ordered_json index_json(const TitsIndex& index) {
  ordered_json j;
  j["schema"] = "tits-index/1";
  j["diagram"] = diagram_json(index.diagram());
  j["t"] = index.action.t;
  j["orbits"] = orbits_json(index.action.orbits);
  j["distinguished"] = orbits_json(index.distinguished);
  return j;
}

/// Rebuilds the action of order t on the diagram whose orbit partition is
/// the given one; the canonical representatives make this unique.
GaloisAction action_from(const DynkinDiagram& diagram, int t,
                         const OrbitPartition& orbits) {
  std::vector<GaloisAction> candidates;
  if (t == 1) {
    candidates.push_back(trivial_action(diagram));
  } else {
    std::vector<Permutation> all = automorphism_group(diagram);
    if (t == static_cast<int>(all.size()) && t > 2) {
      std::vector<Permutation> gens;
      for (const auto& g : all) {
        if (!g.is_identity()) gens.push_back(g);
      }
      candidates.push_back(make_action(diagram, gens));
    }
    for (const auto& g : all) {
      if (g.is_identity()) continue;
      GaloisAction a = make_action(diagram, {g});
      if (a.t == t) candidates.push_back(std::move(a));
    }
  }
  for (auto& a : candidates) {
    if (a.orbits == orbits) return std::move(a);
  }
  throw DomainError(
      "orbits do not arise from a diagram-automorphism subgroup of order " +
      std::to_string(t));
}

}  // namespace

std::string diagram_to_json(const DynkinDiagram& diagram) {
  return diagram_json(diagram).dump(2) + "\n";
}

DynkinDiagram diagram_from_json(const std::string& text) {
  return diagram_from(parse_document(text, "dynkin-diagram/1"));
}

std::string index_to_json(const TitsIndex& index) {
  return index_json(index).dump(2) + "\n";
}

TitsIndex index_from_json(const std::string& text) {
  ParsedIndex parsed = parse_index_lenient(text);
  if (!parsed.parsed) {
    throw DomainError(parsed.findings.front().message);
  }
  for (const auto& finding : parsed.findings) {
    throw DomainError(finding.message);
  }
  return parsed.index;
}

ParsedIndex parse_index_lenient(const std::string& text) {
  ParsedIndex out;
  ordered_json j;
  try {
    j = parse_document(text, "tits-index/1");
  } catch (const DomainError& e) {
    out.findings.push_back({"schema", e.what()});
    return out;
  }
  try {
    if (!j.contains("diagram")) schema_error("diagram", "missing");
    DynkinDiagram diagram = diagram_from(j.at("diagram"));
    int t = j.value("t", 1);
    if (!j.contains("orbits")) schema_error("orbits", "missing");
    OrbitPartition orbits = orbits_from(j.at("orbits"), "orbits");
    GaloisAction action = action_from(diagram, t, orbits);
    if (!j.contains("distinguished")) schema_error("distinguished", "missing");
    OrbitPartition distinguished = orbits_from(j.at("distinguished"), "distinguished");
    out.index = make_index(std::move(action), std::move(distinguished));
    out.parsed = true;
  } catch (const DomainError& e) {
    out.findings.push_back({"schema", e.what()});
    return out;
  }
  for (auto& finding : validate(out.index)) out.findings.push_back(std::move(finding));
  return out;
}

namespace {

ordered_json element_json(const CohElement& e) {
  ordered_json j;
  j["group"] = e.group.cyclic_orders;
  if (!e.group.generator_labels.empty()) j["labels"] = e.group.generator_labels;
  j["coords"] = e.coordinates;
  j["is_symbol"] = e.is_symbol;
  j["killed_by_K"] = e.killed_by_K;
  return j;
}

CohElement element_from(const ordered_json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("group") || !j.contains("coords")) {
    schema_error(field, "expected {group, coords, is_symbol?, killed_by_K?}");
  }
  CohGroup group = make_coh_group(
      j.at("group").get<std::vector<int>>(),
      j.value("labels", std::vector<std::string>{}));
  return make_coh_element(std::move(group), j.at("coords").get<std::vector<int>>(),
                          j.value("is_symbol", false), j.value("killed_by_K", false));
}

}  // namespace

std::string profile_to_json(const InvariantProfile& profile) {
  ordered_json j;
  j["schema"] = "invariant-profile/1";
  j["family"] = family_label(profile.family);
  j["rank"] = profile.rank;
  if (profile.ind_A) j["ind_A"] = *profile.ind_A;
  if (profile.witt_index) j["witt_index"] = *profile.witt_index;
  if (profile.r) j["r"] = *profile.r;
  if (profile.discriminant_trivial) j["discriminant_trivial"] = *profile.discriminant_trivial;
  if (profile.tits_class_order) j["tits_class_order"] = *profile.tits_class_order;
  if (profile.j3) j["J3"] = {profile.j3->first, profile.j3->second};
  if (profile.f3) j["f3"] = element_json(*profile.f3);
  if (profile.f5) j["f5"] = element_json(*profile.f5);
  if (profile.g3) j["g3"] = element_json(*profile.g3);
  if (profile.b) j["b"] = element_json(*profile.b);
  if (profile.tits_class) j["tits_class"] = element_json(*profile.tits_class);
  if (!profile.a_components.empty()) {
    ordered_json a;
    for (const auto& [p, e] : profile.a_components) {
      a[std::to_string(p)] = element_json(e);
    }
    j["a"] = std::move(a);
  }
  return j.dump(2) + "\n";
}

InvariantProfile profile_from_json(const std::string& text) {
  ordered_json j = parse_document(text, "invariant-profile/1");
  InvariantProfile profile;
  if (!j.contains("family")) schema_error("family", "missing");
  auto [family, label_rank] = parse_family(j.at("family").get<std::string>());
  profile.family = family;
  if (j.contains("rank")) {
    profile.rank = j.at("rank").get<int>();
  } else if (label_rank) {
    profile.rank = *label_rank;
  } else if (auto fixed = fixed_rank(family)) {
    profile.rank = *fixed;
  } else {
    schema_error("rank", "missing and not implied by the family label");
  }
  if (!rank_allowed(family, profile.rank)) {
    schema_error("rank", "family " + family_label(family) +
                             " does not admit rank " + std::to_string(profile.rank));
  }
  if (j.contains("ind_A")) profile.ind_A = j.at("ind_A").get<int>();
  if (j.contains("witt_index")) profile.witt_index = j.at("witt_index").get<int>();
  if (j.contains("r")) profile.r = j.at("r").get<int>();
  if (j.contains("discriminant_trivial")) {
    profile.discriminant_trivial = j.at("discriminant_trivial").get<bool>();
  }
  if (j.contains("tits_class_order")) {
    profile.tits_class_order = j.at("tits_class_order").get<int>();
  }
  if (j.contains("J3")) {
    auto v = j.at("J3").get<std::vector<int>>();
    if (v.size() != 2) schema_error("J3", "expected a pair");
    profile.j3 = std::make_pair(v[0], v[1]);
  }
  if (j.contains("f3")) profile.f3 = element_from(j.at("f3"), "f3");
  if (j.contains("f5")) profile.f5 = element_from(j.at("f5"), "f5");
  if (j.contains("g3")) profile.g3 = element_from(j.at("g3"), "g3");
  if (j.contains("b")) profile.b = element_from(j.at("b"), "b");
  if (j.contains("tits_class")) profile.tits_class = element_from(j.at("tits_class"), "tits_class");
  if (j.contains("a")) {
    for (const auto& [key, value] : j.at("a").items()) {
      profile.a_components.emplace(std::stoi(key), element_from(value, "a." + key));
    }
  }
  return profile;
}

}  // namespace titsindex
