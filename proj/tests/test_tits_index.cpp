#include <doctest.h>

#include "titsindex/catalog.hpp"
#include "titsindex/json_io.hpp"

using namespace titsindex;

namespace {

TitsIndex split_index(TypeLabel type, int rank) {
  GaloisAction a = trivial_action(build_diagram(type, rank));
  OrbitPartition all = a.orbits;
  return make_index(std::move(a), std::move(all));
}

}  // namespace

TEST_CASE("the split A3 index validates") {
  TitsIndex index = split_index(TypeLabel::A, 3);
  CHECK(validate(index).empty());
  CHECK(is_quasi_split(index));
  CHECK_FALSE(is_anisotropic(index));
}

TEST_CASE("a distinguished set that is not an orbit is reported") {
  GaloisAction a = diagram_flip_action(build_diagram(TypeLabel::A, 5));
  TitsIndex bad = make_index(a, {{1}});
  auto findings = validate(bad);
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].code == "not_an_orbit");
  CHECK(findings[0].message.find("not an orbit") != std::string::npos);
}

TEST_CASE("the swapped fork pair is a single distinguishable orbit on 2D_n") {
  for (int n : {4, 5, 7}) {
    GaloisAction a = diagram_flip_action(build_diagram(TypeLabel::D, n));
    TitsIndex index = make_index(a, {{n - 1, n}});
    CHECK(validate(index).empty());
    CHECK(split_rank(index) == 1);
  }
}

TEST_CASE("quasi-split and anisotropic predicates") {
  TitsIndex split_e8 = split_index(TypeLabel::E, 8);
  CHECK(is_quasi_split(split_e8));

  GaloisAction g2 = trivial_action(build_diagram(TypeLabel::G, 2));
  TitsIndex aniso = make_index(g2, {});
  CHECK(is_anisotropic(aniso));
  CHECK_FALSE(is_quasi_split(aniso));

  GaloisAction f4 = trivial_action(build_diagram(TypeLabel::F, 4));
  TitsIndex middle = make_index(f4, {{1}});
  CHECK_FALSE(is_quasi_split(middle));
  CHECK_FALSE(is_anisotropic(middle));
}

TEST_CASE("split rank counts distinguished orbits") {
  TitsIndex qs_2e6 = quasi_split_index(Family::OuterE6, 6);
  CHECK(split_rank(qs_2e6) == 4);

  GaloisAction e7 = trivial_action(build_diagram(TypeLabel::E, 7));
  CHECK(split_rank(make_index(e7, {{1}, {5}, {6}})) == 3);
  CHECK(split_rank(make_index(e7, {})) == 0);
}

TEST_CASE("base change: anisotropic sits below everything on the same action") {
  GaloisAction e7 = trivial_action(build_diagram(TypeLabel::E, 7));
  TitsIndex aniso = make_index(e7, {});
  TitsIndex some = make_index(e7, {{1}, {5}});
  CHECK(base_change_leq(aniso, some));
  CHECK_FALSE(base_change_leq(some, aniso));
}

TEST_CASE("base change compares distinguished vertex sets") {
  GaloisAction e7 = trivial_action(build_diagram(TypeLabel::E, 7));
  TitsIndex i15 = make_index(e7, {{1}, {5}});
  TitsIndex i6 = make_index(e7, {{6}});
  CHECK_FALSE(base_change_leq(i15, i6));
  CHECK_FALSE(base_change_leq(i6, i15));
  CHECK(base_change_leq(i15, i15));
}

TEST_CASE("base change requires the higher action to be a subgroup") {
  DynkinDiagram d5 = build_diagram(TypeLabel::D, 5);
  TitsIndex outer_aniso = make_index(diagram_flip_action(d5), {});
  TitsIndex inner_split = split_index(TypeLabel::D, 5);
  // The action shrinks from t=2 to t=1 under base change, never grows.
  CHECK(base_change_leq(outer_aniso, inner_split));
  CHECK_FALSE(base_change_leq(inner_split, outer_aniso));
}

TEST_CASE("base change rejects different diagrams") {
  TitsIndex a3 = split_index(TypeLabel::A, 3);
  TitsIndex a4 = split_index(TypeLabel::A, 4);
  CHECK_THROWS_AS(base_change_leq(a3, a4), DomainError);
}

TEST_CASE("2D_n chains grow along the base-change order") {
  GaloisAction a = diagram_flip_action(build_diagram(TypeLabel::D, 6));
  TitsIndex two = make_index(a, {{1}, {2}});
  TitsIndex three = make_index(a, {{1}, {2}, {3}});
  CHECK(base_change_leq(two, three));
  CHECK_FALSE(base_change_leq(three, two));
}

TEST_CASE("index JSON round trip is the identity on canonical documents") {
  for (const auto& index : enumerate_indexes(Family::OuterE6, 6, 2)) {
    std::string text = index_to_json(index);
    TitsIndex back = index_from_json(text);
    CHECK(back == index);
    CHECK(index_to_json(back) == text);
  }
  for (const auto& index : enumerate_indexes(Family::TrialityD4, 4, 3)) {
    CHECK(index_from_json(index_to_json(index)) == index);
  }
}

TEST_CASE("the documented index JSON shape parses") {
  std::string text = R"({
    "schema": "tits-index/1",
    "diagram": {"type": "E6", "rank": 6,
                "edges": [[1,2,1],[2,3,1],[3,4,1],[4,5,1],[3,6,1]]},
    "t": 2,
    "orbits": [[1,5],[2,4],[3],[6]],
    "distinguished": [[1,5],[6]]
  })";
  TitsIndex index = index_from_json(text);
  CHECK(index.action.t == 2);
  CHECK(split_rank(index) == 2);
  CHECK(validate(index).empty());
}

TEST_CASE("lenient parsing surfaces schema and validity findings") {
  ParsedIndex bad_schema = parse_index_lenient("{\"schema\":\"nope\"}");
  CHECK_FALSE(bad_schema.parsed);
  REQUIRE_FALSE(bad_schema.findings.empty());
  CHECK(bad_schema.findings[0].message.find("schema") != std::string::npos);

  std::string not_an_orbit = R"({
    "schema": "tits-index/1",
    "diagram": {"type": "A5", "rank": 5},
    "t": 2,
    "orbits": [[1,5],[2,4],[3]],
    "distinguished": [[1]]
  })";
  ParsedIndex parsed = parse_index_lenient(not_an_orbit);
  CHECK(parsed.parsed);
  REQUIRE_FALSE(parsed.findings.empty());
  CHECK(parsed.findings[0].code == "not_an_orbit");
}
