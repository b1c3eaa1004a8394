#include <doctest.h>

#include "titsindex/dictionary.hpp"

using namespace titsindex;

namespace {

CohElement elem(std::vector<int> orders, std::vector<int> coords,
                bool symbol = false, bool killed = false) {
  return make_coh_element(make_coh_group(std::move(orders)), std::move(coords),
                          symbol, killed);
}

InvariantProfile f4_profile(int f3, int f5, int g3) {
  InvariantProfile p;
  p.family = Family::F4;
  p.rank = 4;
  p.f3 = elem({2}, {f3}, true);
  p.f5 = elem({2}, {f5}, true);
  p.g3 = elem({3}, {g3}, true);
  return p;
}

TitsIndex exceptional_index(Family family, OrbitPartition distinguished) {
  int rank = fixed_rank(family).value();
  return make_index(family_action(family, rank), std::move(distinguished));
}

}  // namespace

TEST_CASE("F4 dictionary at p = 2") {
  auto r1 = index_from_profile(f4_profile(1, 0, 0), 2);
  REQUIRE(r1.determined());
  OrbitPartition expected = {{1}};
  CHECK(r1.index().distinguished == expected);
  CHECK(signature_of_real_form(r1.index()) == -20);

  auto split = index_from_profile(f4_profile(0, 0, 0), 2);
  REQUIRE(split.determined());
  CHECK(is_quasi_split(split.index()));

  auto aniso = index_from_profile(f4_profile(1, 1, 0), 2);
  REQUIRE(aniso.determined());
  CHECK(is_anisotropic(aniso.index()));

  // g3 alone dies over a 2-special field.
  auto split_again = index_from_profile(f4_profile(0, 0, 1), 2);
  REQUIRE(split_again.determined());
  CHECK(is_quasi_split(split_again.index()));
}

TEST_CASE("F4 dictionary at p = 3 is the g3 dichotomy") {
  auto split = index_from_profile(f4_profile(1, 1, 0), 3);
  REQUIRE(split.determined());
  CHECK(is_quasi_split(split.index()));

  auto aniso = index_from_profile(f4_profile(0, 0, 2), 3);
  REQUIRE(aniso.determined());
  CHECK(is_anisotropic(aniso.index()));
}

TEST_CASE("an F4 profile with f3 = 0 but f5 != 0 is inconsistent") {
  CHECK_THROWS_AS(index_from_profile(f4_profile(0, 1, 0), 2), DomainError);
}

TEST_CASE("2D_n profiles with rd = n-1 circle the fork orbit") {
  InvariantProfile p;
  p.family = Family::OuterD;
  p.rank = 5;
  p.ind_A = 2;
  p.r = 2;  // rd = 4 = n-1
  auto lookup = index_from_profile(p, 2);
  REQUIRE(lookup.determined());
  OrbitPartition expected = {{2}, {4, 5}};
  CHECK(lookup.index().distinguished == expected);
}

TEST_CASE("1D_n profiles with rd = n circle both fork vertices") {
  InvariantProfile p;
  p.family = Family::InnerD;
  p.rank = 8;
  p.ind_A = 4;
  p.r = 2;
  auto lookup = index_from_profile(p, 2);
  REQUIRE(lookup.determined());
  OrbitPartition expected = {{4}, {7}, {8}};
  CHECK(lookup.index().distinguished == expected);

  p.r = 1;
  auto partial = index_from_profile(p, 2);
  OrbitPartition expected_partial = {{4}};
  CHECK(partial.index().distinguished == expected_partial);
}

TEST_CASE("1D_n rejects rd = n-1") {
  InvariantProfile p;
  p.family = Family::InnerD;
  p.rank = 5;
  p.ind_A = 2;
  p.r = 2;
  CHECK_THROWS_AS(index_from_profile(p, 2), DomainError);
}

TEST_CASE("classical lookups reject out-of-range parameters") {
  InvariantProfile p;
  p.family = Family::C;
  p.rank = 4;
  p.ind_A = 1;
  p.r = 2;  // split algebra forces r = n
  CHECK_THROWS_AS(index_from_profile(p, 2), DomainError);

  InvariantProfile q;
  q.family = Family::OuterA;
  q.rank = 5;
  q.ind_A = 2;
  q.r = 2;  // r*d = 4 > 3
  CHECK_THROWS_AS(index_from_profile(q, 2), DomainError);
}

TEST_CASE("1A lookup from the algebra index") {
  InvariantProfile p;
  p.family = Family::InnerA;
  p.rank = 5;
  p.ind_A = 6;
  auto at2 = index_from_profile(p, 2);
  OrbitPartition expected2 = {{2}, {4}};
  CHECK(at2.index().distinguished == expected2);
  auto at3 = index_from_profile(p, 3);
  OrbitPartition expected3 = {{3}};
  CHECK(at3.index().distinguished == expected3);
  auto at5 = index_from_profile(p, 5);
  CHECK(is_quasi_split(at5.index()));
}

TEST_CASE("1E6 with trivial Tits class and no invariants is split at p = 2 only when f3 = 0") {
  InvariantProfile p;
  p.family = Family::InnerE6;
  p.rank = 6;
  p.tits_class_order = 1;
  p.f3 = elem({2}, {0});
  p.g3 = elem({3}, {0});
  auto split = index_from_profile(p, 2);
  REQUIRE(split.determined());
  CHECK(is_quasi_split(split.index()));

  p.f3 = elem({2}, {1}, true);
  auto r15 = index_from_profile(p, 2);
  REQUIRE(r15.determined());
  OrbitPartition expected = {{1}, {5}};
  CHECK(r15.index().distinguished == expected);
}

TEST_CASE("1E6 at p = 3: J3 classifies, with the constrained algebra index") {
  InvariantProfile p;
  p.family = Family::InnerE6;
  p.rank = 6;

  p.j3 = {0, 0};
  auto split = index_from_profile(p, 3);
  REQUIRE(split.determined());
  CHECK(is_quasi_split(split.index()));

  p.j3 = {1, 0};
  auto r36 = index_from_profile(p, 3);
  REQUIRE(r36.determined());
  OrbitPartition expected = {{3}, {6}};
  CHECK(r36.index().distinguished == expected);
  CHECK(r36.ind_A.to_string() == "3");

  p.j3 = {2, 1};
  auto aniso = index_from_profile(p, 3);
  REQUIRE(aniso.determined());
  CHECK(is_anisotropic(aniso.index()));
  CHECK(aniso.ind_A.admits(9));
  CHECK(aniso.ind_A.admits(27));
  CHECK_FALSE(aniso.ind_A.admits(3));
  CHECK_FALSE(aniso.ind_A.admits(1));

  p.j3 = {5, 5};
  CHECK_THROWS_AS(index_from_profile(p, 3), DomainError);
}

TEST_CASE("1E6 at p = 3 with a nonzero g3 is anisotropic") {
  InvariantProfile p;
  p.family = Family::InnerE6;
  p.rank = 6;
  p.ind_A = 1;
  p.g3 = elem({3}, {1}, true);
  auto lookup = index_from_profile(p, 3);
  REQUIRE(lookup.determined());
  CHECK(is_anisotropic(lookup.index()));
}

TEST_CASE("2E6 dictionary at p = 2 follows the b classification") {
  auto lookup = [](CohElement b) {
    InvariantProfile p;
    p.family = Family::OuterE6;
    p.rank = 6;
    p.b = std::move(b);
    return index_from_profile(p, 2);
  };
  CHECK(is_quasi_split(lookup(elem({4}, {0})).index()));

  OrbitPartition r15_6 = {{1, 5}, {6}};
  CHECK(lookup(elem({4}, {2}, true, true)).index().distinguished == r15_6);

  OrbitPartition r15 = {{1, 5}};
  CHECK(lookup(elem({4}, {2}, true, false)).index().distinguished == r15);

  OrbitPartition r6 = {{6}};
  CHECK(lookup(elem({4}, {2}, false, false)).index().distinguished == r6);

  CHECK(is_anisotropic(lookup(elem({4}, {1}, false, false)).index()));
}

TEST_CASE("E7 at p = 3: nonzero b circles vertex 6 only") {
  InvariantProfile p;
  p.family = Family::E7;
  p.rank = 7;
  p.b = elem({3}, {1}, true);
  auto lookup = index_from_profile(p, 3);
  REQUIRE(lookup.determined());
  OrbitPartition expected = {{6}};
  CHECK(lookup.index().distinguished == expected);

  p.b = elem({3}, {0});
  CHECK(is_quasi_split(index_from_profile(p, 3).index()));
}

TEST_CASE("E8 at p = 3 and p = 5") {
  InvariantProfile p;
  p.family = Family::E8;
  p.rank = 8;
  p.b = elem({60}, {20}, true);  // order 3, a symbol
  auto r67 = index_from_profile(p, 3);
  REQUIRE(r67.determined());
  OrbitPartition expected = {{6}, {7}};
  CHECK(r67.index().distinguished == expected);

  p.b = elem({60}, {20}, false);  // order 3, not a symbol
  CHECK(is_anisotropic(index_from_profile(p, 3).index()));

  p.b = elem({60}, {12});  // order 5
  CHECK(is_anisotropic(index_from_profile(p, 5).index()));
  p.b = elem({60}, {0});
  CHECK(is_quasi_split(index_from_profile(p, 5).index()));
}

TEST_CASE("E7 at p = 2 is underdetermined on ambiguous data") {
  InvariantProfile p;
  p.family = Family::E7;
  p.rank = 7;
  p.ind_A = 2;
  auto lookup = index_from_profile(p, 2);
  CHECK_FALSE(lookup.determined());
  CHECK(lookup.candidates.size() == 4);  // r1235, r15, r5, r1

  p.r = 1;
  auto narrowed = index_from_profile(p, 2);
  CHECK_FALSE(narrowed.determined());
  CHECK(narrowed.candidates.size() == 2);  // r5 and r1 share ind 2, rank 1
}

TEST_CASE("missing slots are reported") {
  InvariantProfile p;
  p.family = Family::InnerA;
  p.rank = 5;
  auto lookup = index_from_profile(p, 2);
  CHECK_FALSE(lookup.determined());
  REQUIRE(lookup.needed_slots.size() == 1);
  CHECK(lookup.needed_slots[0] == "ind_A");
  CHECK(lookup.candidates.size() == 2);
}

TEST_CASE("constraints describe the table rows") {
  TitsIndex aniso_1e6 = exceptional_index(Family::InnerE6, {});
  ProfileConstraints c = constraints_for_index(aniso_1e6, 3);
  CHECK(c.ind_A.to_string() == "divides 27");
  CHECK(c.j3_one_of.size() == 3);

  TitsIndex r1235 = exceptional_index(Family::E7, {{1}, {2}, {3}, {5}});
  ProfileConstraints c2 = constraints_for_index(r1235, 2);
  CHECK(c2.ind_A.to_string() == "2");
  CHECK(c2.r == 4);

  TitsIndex aniso_e7 = exceptional_index(Family::E7, {});
  CHECK(constraints_for_index(aniso_e7, 2).ind_A.to_string() == "divides 8");

  TitsIndex split_f4 = quasi_split_index(Family::F4, 4);
  ProfileConstraints c3 = constraints_for_index(split_f4, 2);
  CHECK(c3.slots.at("f3") == "zero");
  CHECK(c3.slots.at("f5") == "zero");
  CHECK(c3.slots.count("g3") == 0);  // dead at p = 2
}

TEST_CASE("constraints round-trip through the dictionary where one exists") {
  // Classical families: (d_p, r, i_w) pin the index exactly.
  for (auto [family, rank] : std::vector<std::pair<Family, int>>{
           {Family::InnerA, 6}, {Family::OuterA, 7}, {Family::B, 5},
           {Family::C, 6}, {Family::InnerD, 6}, {Family::OuterD, 6}}) {
    for (const auto& index : enumerate_indexes(family, rank, 2)) {
      ProfileConstraints c = constraints_for_index(index, 2);
      InvariantProfile p;
      p.family = family;
      p.rank = rank;
      if (c.witt_index) p.witt_index = *c.witt_index;
      if (c.r) p.r = *c.r;
      if (c.d_p) {
        p.ind_A = *c.d_p;
      } else if (c.r && *c.r == 0) {
        p.ind_A = family == Family::C ? 2 : 1;
        if (family == Family::InnerA) p.ind_A = rank + 1;
      }
      if (family == Family::B) p.witt_index = c.witt_index.value_or(0);
      auto lookup = index_from_profile(p, 2);
      REQUIRE(lookup.determined());
      CHECK(lookup.index() == index);
      CHECK(satisfies(p, c));
    }
  }
}

TEST_CASE("monotone specialization: zeroing slots never shrinks the index") {
  for (int f3 : {0, 1}) {
    for (int f5 : {0, 1}) {
      for (int g3 : {0, 1, 2}) {
        if (f3 == 0 && f5 != 0) continue;
        InvariantProfile p = f4_profile(f3, f5, g3);
        for (int prime : {2, 3}) {
          TitsIndex base = index_from_profile(p, prime).index();
          for (const char* slot : {"f3", "f5", "g3"}) {
            TitsIndex specialized =
                index_from_profile(zero_slot(p, slot), prime).index();
            CHECK(base_change_leq(base, specialized));
          }
        }
      }
    }
  }
}
