#include <doctest.h>

#include "titsindex/invariants.hpp"
#include "titsindex/rules.hpp"

using namespace titsindex;

namespace {

CohElement elem(std::vector<int> orders, std::vector<int> coords,
                bool symbol = false, bool killed = false) {
  return make_coh_element(make_coh_group(std::move(orders)), std::move(coords),
                          symbol, killed);
}

}  // namespace

TEST_CASE("zero elements generate the zero subgroup") {
  CHECK(same_subgroup(elem({4}, {0}), elem({4}, {0})));
  CHECK_FALSE(same_subgroup(elem({4}, {0}), elem({4}, {2})));
}

TEST_CASE("in Z/3, 1 and 2 generate the same subgroup") {
  CHECK(same_subgroup(elem({3}, {1}), elem({3}, {2})));
}

TEST_CASE("distinct lines in (Z/3)^2 are distinct subgroups") {
  CHECK_FALSE(same_subgroup(elem({3, 3}, {1, 0}), elem({3, 3}, {0, 1})));
  CHECK(same_subgroup(elem({3, 3}, {1, 2}), elem({3, 3}, {2, 1})));
}

TEST_CASE("subgroup comparison needs a common group") {
  CHECK_THROWS_AS(same_subgroup(elem({3}, {1}), elem({9}, {1})), DomainError);
}

TEST_CASE("same_subgroup is an equivalence relation on small grids") {
  std::vector<CohElement> grid;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 4; ++y) grid.push_back(elem({2, 4}, {x, y}));
  }
  for (const auto& a : grid) CHECK(same_subgroup(a, a));
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      CHECK(same_subgroup(a, b) == same_subgroup(b, a));
      for (const auto& c : grid) {
        if (same_subgroup(a, b) && same_subgroup(b, c)) {
          CHECK(same_subgroup(a, c));
        }
      }
    }
  }
}

TEST_CASE("over a group of prime order, same subgroup means both zero or both nonzero") {
  for (int p : {2, 3, 5}) {
    for (int x = 0; x < p; ++x) {
      for (int y = 0; y < p; ++y) {
        bool expected = (x == 0) == (y == 0);
        CHECK(same_subgroup(elem({p}, {x}), elem({p}, {y})) == expected);
      }
    }
  }
}

TEST_CASE("zero elements are flagged symbol and killed by convention") {
  CohElement z = elem({4, 2}, {0, 0});
  CHECK(z.is_symbol);
  CHECK(z.killed_by_K);
  CHECK(z.order() == 1);
}

TEST_CASE("element order and primary components") {
  CohElement x = elem({12}, {2});  // order 6
  CHECK(x.order() == 6);
  CHECK(x.p_primary_component(2).order() == 2);
  CHECK(x.p_primary_component(3).order() == 3);
  CHECK(x.p_primary_component(5).is_zero());
  // The components sum back to the element.
  auto c2 = x.p_primary_component(2).coordinates[0];
  auto c3 = x.p_primary_component(3).coordinates[0];
  CHECK((c2 + c3) % 12 == 2);
}

TEST_CASE("negation preserves the generated subgroup") {
  CohElement x = elem({5, 25}, {2, 10});
  CHECK(same_subgroup(x, x.negated()));
}

TEST_CASE("profile index bounds per family") {
  InvariantProfile p;
  p.family = Family::E7;
  p.rank = 7;
  p.ind_A = 3;
  CHECK_FALSE(validate_profile(p).empty());
  p.ind_A = 8;
  CHECK(validate_profile(p).empty());

  InvariantProfile q;
  q.family = Family::InnerE6;
  q.rank = 6;
  q.ind_A = 9;
  CHECK(validate_profile(q).empty());
  q.ind_A = 6;
  CHECK_FALSE(validate_profile(q).empty());

  InvariantProfile c;
  c.family = Family::C;
  c.rank = 4;
  c.ind_A = 8;
  CHECK(validate_profile(c).empty());
  c.ind_A = 6;  // divides 2n but is not a 2-power
  CHECK_FALSE(validate_profile(c).empty());

  InvariantProfile a;
  a.family = Family::InnerA;
  a.rank = 5;
  a.ind_A = 6;
  CHECK(validate_profile(a).empty());
  a.ind_A = 4;
  CHECK_FALSE(validate_profile(a).empty());
}

TEST_CASE("f5 vanishes with f3") {
  InvariantProfile p;
  p.family = Family::F4;
  p.rank = 4;
  p.f3 = elem({2}, {0});
  p.f5 = elem({2}, {1});
  auto findings = validate_profile(p);
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].code == "f5_divisibility");
  p.f3 = elem({2}, {1});
  CHECK(validate_profile(p).empty());
}

TEST_CASE("a and b agree where they overlap once the Tits class vanishes") {
  InvariantProfile p;
  p.family = Family::InnerE6;
  p.rank = 6;
  p.tits_class_order = 1;
  p.b = elem({2}, {1});
  p.a_components.emplace(2, elem({2}, {0}));
  CHECK_FALSE(validate_profile(p).empty());
  p.a_components.clear();
  p.a_components.emplace(2, elem({2}, {1}));
  CHECK(validate_profile(p).empty());
}

TEST_CASE("rost multipliers match the shipped data table") {
  const RuleTables& rules = builtin_rules();
  auto data_m = [&](const std::string& family, bool even_rank) -> int {
    for (const auto& e : rules.rost_multipliers) {
      if (e.family != family) continue;
      if (e.applies.empty()) return e.m;
      if (e.applies == "even rank" && even_rank) return e.m;
      if (e.applies == "odd rank" && !even_rank) return e.m;
    }
    FAIL("no data entry for family ", family);
    return -1;
  };
  CHECK(rost_multiplier(Family::OuterA, 4) == data_m("2A", true));
  CHECK(rost_multiplier(Family::OuterA, 5) == data_m("2A", false));
  CHECK(rost_multiplier(Family::TrialityD4, 4) == data_m("3D4", true));
  CHECK(rost_multiplier(Family::OuterE6, 6) == data_m("2E6", true));
  CHECK(rost_multiplier(Family::G2, 2) == data_m("G2", true));
  CHECK(rost_multiplier(Family::F4, 4) == data_m("F4", true));
  CHECK(rost_multiplier(Family::E7, 7) == data_m("E7", false));
  CHECK(rost_multiplier(Family::E8, 8) == data_m("E8", true));
  CHECK(rost_multiplier(Family::InnerE6, 6) == data_m("1E6", true));
}

TEST_CASE("dynkin indexes are shipped for the exceptional families") {
  CHECK(dynkin_index(Family::G2, 2) == 2);
  CHECK(dynkin_index(Family::F4, 4) == 6);
  CHECK(dynkin_index(Family::InnerE6, 6) == 6);
  CHECK(dynkin_index(Family::OuterE6, 6) == 12);
  CHECK(dynkin_index(Family::E7, 7) == 12);
  CHECK(dynkin_index(Family::E8, 8) == 60);
  CHECK_FALSE(dynkin_index(Family::TrialityD4, 4).has_value());
}
