#include <doctest.h>

#include <map>

#include "oracle.hpp"
#include "titsindex/catalog.hpp"

using namespace titsindex;

namespace {

oracle::PatternSet engine_patterns(Family family, int rank, int p) {
  oracle::PatternSet out;
  for (const auto& index : enumerate_indexes(family, rank, p)) {
    out.insert(index.distinguished);
  }
  return out;
}

}  // namespace

TEST_CASE("torsion primes follow the type table") {
  CHECK(torsion_primes(TypeLabel::E, 8) == std::set<int>{2, 3, 5});
  CHECK(torsion_primes(TypeLabel::A, 5) == std::set<int>{2, 3});
  CHECK(torsion_primes(TypeLabel::A, 1) == std::set<int>{2});
  CHECK(torsion_primes(TypeLabel::A, 14) == std::set<int>{2, 3, 5});
  CHECK(torsion_primes(TypeLabel::G, 2) == std::set<int>{2});
  CHECK(torsion_primes(TypeLabel::B, 6) == std::set<int>{2});
  CHECK(torsion_primes(TypeLabel::C, 5) == std::set<int>{2});
  CHECK(torsion_primes(TypeLabel::D, 4) == std::set<int>{2, 3});
  CHECK(torsion_primes(TypeLabel::D, 5) == std::set<int>{2});
  CHECK(torsion_primes(TypeLabel::E, 7) == std::set<int>{2, 3});
  CHECK(torsion_primes(TypeLabel::F, 4) == std::set<int>{2, 3});
  CHECK(torsion_primes(TypeLabel::E, 6) == std::set<int>{2, 3});
}

TEST_CASE("p-primary part") {
  CHECK(p_primary_part(12, 2) == 4);
  CHECK(p_primary_part(12, 3) == 3);
  CHECK(p_primary_part(7, 2) == 1);
  CHECK(p_primary_part(1, 5) == 1);
  CHECK_THROWS_AS(p_primary_part(0, 2), DomainError);
}

TEST_CASE("1A5 at p=2: split and the d=2 chain") {
  auto indexes = enumerate_indexes(Family::InnerA, 5, 2);
  REQUIRE(indexes.size() == 2);
  CHECK(is_quasi_split(indexes[0]));
  OrbitPartition expected = {{2}, {4}};
  CHECK(indexes[1].distinguished == expected);
}

TEST_CASE("1A5 at p=3: split and the d=3 index") {
  auto indexes = enumerate_indexes(Family::InnerA, 5, 3);
  REQUIRE(indexes.size() == 2);
  OrbitPartition expected = {{3}};
  CHECK(indexes[1].distinguished == expected);
}

TEST_CASE("1A1 at p=2 has an anisotropic index") {
  auto indexes = enumerate_indexes(Family::InnerA, 1, 2);
  REQUIRE(indexes.size() == 2);
  CHECK(is_anisotropic(indexes[1]));
}

TEST_CASE("B4 at p=2 has 5 indexes, one per Witt index") {
  CHECK(enumerate_indexes(Family::B, 4, 2).size() == 5);
}

TEST_CASE("2A5 at p=2 has 5 distinct indexes") {
  // Six (d, r) parameter pairs feed the rule, but (1,0) and (2,0) both give
  // the anisotropic index, so the duplicate-free list has 5 entries.
  auto indexes = enumerate_indexes(Family::OuterA, 5, 2);
  CHECK(indexes.size() == 5);
  CHECK(engine_patterns(Family::OuterA, 5, 2) == oracle::outer_a(5));
}

TEST_CASE("exceptional counts match the catalog tables") {
  std::map<std::pair<Family, int>, size_t> expected = {
      {{Family::G2, 2}, 2},        {{Family::TrialityD4, 3}, 2},
      {{Family::F4, 2}, 3},        {{Family::F4, 3}, 2},
      {{Family::InnerE6, 2}, 2},   {{Family::InnerE6, 3}, 3},
      {{Family::OuterE6, 2}, 5},   {{Family::E7, 2}, 7},
      {{Family::E7, 3}, 2},        {{Family::E8, 2}, 6},
      {{Family::E8, 3}, 3},        {{Family::E8, 5}, 2},
  };
  for (const auto& [key, count] : expected) {
    auto [family, p] = key;
    CAPTURE(family_label(family));
    CAPTURE(p);
    CHECK(enumerate_indexes(family, fixed_rank(family).value(), p).size() == count);
  }
}

TEST_CASE("classical enumeration equals the brute-force oracle up to rank 8") {
  for (int n = 1; n <= 8; ++n) {
    for (int p : {2, 3, 5, 7}) {
      CAPTURE(n);
      CAPTURE(p);
      CHECK(engine_patterns(Family::InnerA, n, p) == oracle::inner_a(n, p));
    }
  }
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(engine_patterns(Family::OuterA, n, 2) == oracle::outer_a(n));
    CHECK(engine_patterns(Family::B, n, 2) == oracle::type_b(n));
  }
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(engine_patterns(Family::C, n, 2) == oracle::type_c(n));
  }
  for (int n = 4; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(engine_patterns(Family::InnerD, n, 2) == oracle::inner_d(n));
    CHECK(engine_patterns(Family::OuterD, n, 2) == oracle::outer_d(n));
  }
}

TEST_CASE("every enumerated index validates and appears exactly once") {
  std::vector<std::pair<Family, int>> cases = {
      {Family::InnerA, 6},  {Family::OuterA, 6}, {Family::B, 6},
      {Family::C, 6},       {Family::InnerD, 6}, {Family::OuterD, 6},
      {Family::G2, 2},      {Family::F4, 4},     {Family::InnerE6, 6},
      {Family::OuterE6, 6}, {Family::E7, 7},     {Family::E8, 8}};
  for (auto [family, rank] : cases) {
    for (int p : family_primes(family, rank)) {
      auto indexes = enumerate_indexes(family, rank, p);
      for (size_t i = 0; i < indexes.size(); ++i) {
        CHECK(validate(indexes[i]).empty());
        for (size_t j = i + 1; j < indexes.size(); ++j) {
          CHECK_FALSE(indexes[i] == indexes[j]);
        }
      }
    }
  }
}

TEST_CASE("enumeration is ordered by descending split rank, then lexicographically") {
  for (auto [family, rank, p] :
       std::vector<std::tuple<Family, int, int>>{{Family::E8, 8, 2},
                                                 {Family::OuterD, 7, 2},
                                                 {Family::C, 8, 2}}) {
    auto indexes = enumerate_indexes(family, rank, p);
    for (size_t i = 0; i + 1 < indexes.size(); ++i) {
      bool rank_desc = split_rank(indexes[i]) > split_rank(indexes[i + 1]);
      bool tie_lex = split_rank(indexes[i]) == split_rank(indexes[i + 1]) &&
                     indexes[i].distinguished < indexes[i + 1].distinguished;
      CHECK((rank_desc || tie_lex));
    }
  }
  auto e8 = enumerate_indexes(Family::E8, 8, 2);
  OrbitPartition r1 = {{1}};
  CHECK(e8[3].distinguished == r1);  // {1} sorts before {7} at equal rank
}

TEST_CASE("exactly one quasi-split index per enumeration, maximal for base change") {
  for (auto [family, rank] : std::vector<std::pair<Family, int>>{
           {Family::OuterA, 7}, {Family::InnerD, 8}, {Family::E7, 7}}) {
    for (int p : family_primes(family, rank)) {
      auto indexes = enumerate_indexes(family, rank, p);
      int quasi_split_count = 0;
      for (const auto& index : indexes) {
        if (is_quasi_split(index)) ++quasi_split_count;
        CHECK(base_change_leq(index, indexes.front()));
      }
      CHECK(quasi_split_count == 1);
      CHECK(is_quasi_split(indexes.front()));
    }
  }
}

TEST_CASE("outside the torsion primes only the quasi-split index remains") {
  auto g2_at_3 = enumerate_indexes(Family::G2, 2, 3);
  REQUIRE(g2_at_3.size() == 1);
  CHECK(is_quasi_split(g2_at_3.front()));

  auto inner_d4_at_3 = enumerate_indexes(Family::InnerD, 4, 3);
  REQUIRE(inner_d4_at_3.size() == 1);
  CHECK(is_quasi_split(inner_d4_at_3.front()));

  auto a5_at_7 = enumerate_indexes(Family::InnerA, 5, 7);
  REQUIRE(a5_at_7.size() == 1);
  CHECK(is_quasi_split(a5_at_7.front()));
}

TEST_CASE("families reject primes their Galois image cannot survive") {
  CHECK_THROWS_AS(enumerate_indexes(Family::OuterA, 5, 3), DomainError);
  CHECK_THROWS_AS(enumerate_indexes(Family::OuterE6, 6, 3), DomainError);
  CHECK_THROWS_AS(enumerate_indexes(Family::TrialityD4, 4, 2), DomainError);
  CHECK_THROWS_AS(enumerate_indexes(Family::OuterD, 6, 5), DomainError);
  CHECK_THROWS_AS(enumerate_indexes(Family::E7, 7, 4), DomainError);
}

TEST_CASE("admissible membership") {
  GaloisAction f4 = trivial_action(build_diagram(TypeLabel::F, 4));
  CHECK(admissible(make_index(f4, {}), 3));
  CHECK(admissible(make_index(f4, {{1}}), 2));
  CHECK_FALSE(admissible(make_index(f4, {{1}}), 3));
  CHECK_FALSE(admissible(make_index(f4, {{2}}), 2));

  GaloisAction e6 = trivial_action(build_diagram(TypeLabel::E, 6));
  CHECK_FALSE(admissible(make_index(e6, {{3}, {6}}), 2));
  CHECK(admissible(make_index(e6, {{3}, {6}}), 3));
}

TEST_CASE("1D_n excludes rd = n-1 while 2D_n realizes it as the fork orbit") {
  GaloisAction inner = trivial_action(build_diagram(TypeLabel::D, 5));
  TitsIndex bad = make_index(inner, {{1}, {2}, {3}, {4}});  // would be rd = 4 = n-1
  CHECK(validate(bad).empty());
  CHECK_FALSE(admissible(bad, 2));

  GaloisAction outer = diagram_flip_action(build_diagram(TypeLabel::D, 5));
  TitsIndex good = make_index(outer, {{1}, {2}, {3}, {4, 5}});
  CHECK(admissible(good, 2));
}

TEST_CASE("chain closure: specializing parameters moves up the base-change order") {
  // r -> r+1 adds an orbit; d -> d/p refines the step.  Both must land at a
  // comparable index, exhaustively for ranks <= 8.
  auto find = [](const std::vector<TitsIndex>& indexes, const oracle::OrbitList& pattern)
      -> const TitsIndex* {
    for (const auto& index : indexes) {
      if (index.distinguished == pattern) return &index;
    }
    return nullptr;
  };

  for (int n = 1; n <= 8; ++n) {
    for (int p : {2, 3}) {
      auto indexes = enumerate_indexes(Family::InnerA, n, p);
      for (int d = p; d <= n + 1; d *= p) {
        if ((n + 1) % d != 0) continue;
        oracle::OrbitList coarse, fine;
        for (int v = d; v <= n + 1 - d; v += d) coarse.push_back({v});
        for (int v = d / p; v <= n + 1 - d / p; v += d / p) fine.push_back({v});
        const TitsIndex* lo = find(indexes, coarse);
        const TitsIndex* hi = find(indexes, fine);
        REQUIRE(lo != nullptr);
        REQUIRE(hi != nullptr);
        CHECK(base_change_leq(*lo, *hi));
      }
    }
  }

  for (int n = 2; n <= 8; ++n) {
    auto indexes = enumerate_indexes(Family::B, n, 2);
    for (size_t i = 0; i + 1 < indexes.size(); ++i) {
      CHECK(base_change_leq(indexes[i + 1], indexes[i]));
    }
  }

  for (auto family : {Family::C, Family::InnerD, Family::OuterD}) {
    for (int n = family == Family::C ? 3 : 4; n <= 8; ++n) {
      auto indexes = enumerate_indexes(family, n, 2);
      for (const auto& lo : indexes) {
        if (is_quasi_split(lo)) continue;
        // Some index strictly above must exist within the family.
        bool has_upper = false;
        for (const auto& hi : indexes) {
          if (!(hi == lo) && base_change_leq(lo, hi)) has_upper = true;
        }
        CHECK(has_upper);
      }
    }
  }
}

TEST_CASE("signatures of real forms are recorded where the tables carry them") {
  auto split_f4 = enumerate_indexes(Family::F4, 4, 2).front();
  CHECK(signature_of_real_form(split_f4) == 4);

  GaloisAction e8 = trivial_action(build_diagram(TypeLabel::E, 8));
  CHECK(signature_of_real_form(make_index(e8, {})) == -248);

  TitsIndex qs_2e6 = quasi_split_index(Family::OuterE6, 6);
  CHECK(signature_of_real_form(qs_2e6) == 2);

  GaloisAction e7 = trivial_action(build_diagram(TypeLabel::E, 7));
  CHECK(signature_of_real_form(make_index(e7, {{1}, {5}, {6}})) == -25);
  CHECK_FALSE(signature_of_real_form(make_index(e7, {{1}, {5}})).has_value());

  // Classical types carry no signature data.
  auto b3 = enumerate_indexes(Family::B, 3, 2).front();
  CHECK_FALSE(signature_of_real_form(b3).has_value());
}

TEST_CASE("rules overrides change catalog behavior") {
  std::string text = builtin_rules_json();
  auto pos = text.find("\"d_equal_1_forces_split\": true");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, std::string("\"d_equal_1_forces_split\": true").size(),
               "\"d_equal_1_forces_split\": false");
  RuleTables relaxed = parse_rules(text);
  size_t strict_count = enumerate_indexes(Family::C, 4, 2).size();
  size_t relaxed_count = enumerate_indexes(Family::C, 4, 2, relaxed).size();
  CHECK(relaxed_count > strict_count);
}
