#include "titsindex/equivalence.hpp"

#include <algorithm>
#include <sstream>

namespace titsindex {

std::string verdict_name(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Equivalent: return "equivalent";
    case Verdict::Kind::NotEquivalent: return "not_equivalent";
    case Verdict::Kind::CriterionUnavailable: return "criterion_unavailable";
  }
  return "?";
}

namespace {

Verdict verdict(Verdict::Kind kind, int p, std::string criterion,
                std::vector<std::string> citations, std::string note = "") {
  Verdict v;
  v.kind = kind;
  v.prime = p;
  v.criterion = std::move(criterion);
  v.citations = std::move(citations);
  v.note = std::move(note);
  return v;
}

Verdict decide(bool equal, int p, std::string criterion,
               std::vector<std::string> citations, std::string note = "") {
  return verdict(equal ? Verdict::Kind::Equivalent : Verdict::Kind::NotEquivalent,
                 p, std::move(criterion), std::move(citations), std::move(note));
}

const CohElement& require_slot(const std::optional<CohElement>& slot,
                               const std::string& name,
                               const std::string& criterion) {
  if (!slot) {
    throw DomainError("criterion " + criterion + " needs slot '" + name +
                      "' in both profiles");
  }
  return *slot;
}

bool elements_equal(const CohElement& x, const CohElement& y,
                    const std::string& name) {
  if (x.group != y.group) {
    throw DomainError("profiles declare different groups for slot '" + name + "'");
  }
  return x.coordinates == y.coordinates;
}

/// b(G) as seen mod p, with the same fallbacks the dictionary uses.
std::optional<CohElement> b_component(const InvariantProfile& profile, int p) {
  if (profile.b) return profile.b->p_primary_component(p);
  auto it = profile.a_components.find(p);
  if (it != profile.a_components.end()) return it->second.p_primary_component(p);
  if (p == 2 && profile.f3) return profile.f3;
  if (p == 3 && profile.g3) return profile.g3;
  return std::nullopt;
}

Verdict subgroup_criterion(const InvariantProfile& p1, const InvariantProfile& p2,
                           int p, const std::string& criterion,
                           std::vector<std::string> citations,
                           std::string note = "") {
  std::optional<CohElement> b1 = b_component(p1, p);
  std::optional<CohElement> b2 = b_component(p2, p);
  if (!b1 || !b2) {
    throw DomainError("criterion " + criterion + " needs slot 'b' (mod " +
                      std::to_string(p) + ") in both profiles");
  }
  if (b1->group != b2->group) {
    throw DomainError("profiles declare different groups for slot 'b'");
  }
  return decide(same_subgroup(*b1, *b2), p, criterion, std::move(citations),
                std::move(note));
}

bool effective_t_trivial(const InvariantProfile& profile, int p) {
  if (p_primary_part(center_exponent(profile.family, profile.rank), p) == 1) {
    return true;
  }
  if (profile.tits_class_order) return p_primary_part(*profile.tits_class_order, p) == 1;
  if (profile.tits_class) return profile.tits_class->p_primary_component(p).is_zero();
  if (profile.ind_A) return p_primary_part(*profile.ind_A, p) == 1;
  if (profile.family == Family::InnerE6 &&
      (profile.f3 || profile.g3 || !profile.a_components.empty())) {
    return true;  // these invariants presuppose a trivial Tits class
  }
  return false;
}

Verdict unavailable(int p, const std::string& note) {
  return verdict(Verdict::Kind::CriterionUnavailable, p, "none", {}, note);
}

}  // namespace

Verdict motivic_equivalent_mod_p(const InvariantProfile& p1,
                                 const InvariantProfile& p2, int p,
                                 const RuleTables& rules) {
  (void)rules;
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime");
  if (p1.family != p2.family || p1.rank != p2.rank) {
    return verdict(Verdict::Kind::NotEquivalent, p, "quasi_split_type", {},
                   "no diagram isomorphism f between the quasi-split inner forms");
  }
  Family family = p1.family;
  int rank = p1.rank;

  if (!torsion_primes(type_of(family), rank).count(p)) {
    return verdict(Verdict::Kind::Equivalent, p, "outside_torsion_primes",
                   {"Table SG"},
                   "every group of this type is quasi-split over a " +
                       std::to_string(p) + "-special field");
  }

  int t = galois_order(family);
  if (t > 1 && t != p) {
    return unavailable(p, "the family becomes inner over " + std::to_string(p) +
                              "-special fields; no stated criterion");
  }

  if (!family_primes(family, rank).count(p)) {
    return verdict(Verdict::Kind::Equivalent, p, "only_quasi_split_index", {},
                   "the family has a single p-index at p = " + std::to_string(p));
  }

  switch (family) {
    case Family::G2:
      return subgroup_criterion(
          p1, p2, p, "G2_mod2_b_subgroup", {"Table G2"},
          "for G2, motivic equivalence mod 2 coincides with isomorphism");
    case Family::TrialityD4:
      return subgroup_criterion(p1, p2, p, "3D4_mod3_b_subgroup", {"Table 3D4"});
    case Family::F4: {
      if (p == 3) {
        return subgroup_criterion(p1, p2, p, "F4_mod3_g3_subgroup", {"Table F4"});
      }
      const CohElement& f3a = require_slot(p1.f3, "f3", "F4_mod2_f3_f5_equal");
      const CohElement& f3b = require_slot(p2.f3, "f3", "F4_mod2_f3_f5_equal");
      const CohElement& f5a = require_slot(p1.f5, "f5", "F4_mod2_f3_f5_equal");
      const CohElement& f5b = require_slot(p2.f5, "f5", "F4_mod2_f3_f5_equal");
      bool equal = elements_equal(f3a, f3b, "f3") && elements_equal(f5a, f5b, "f5");
      return decide(equal, p, "F4_mod2_f3_f5_equal", {"Table F4"});
    }
    case Family::InnerE6: {
      if (p == 2) {
        std::optional<CohElement> x = b_component(p1, 2);
        std::optional<CohElement> y = b_component(p2, 2);
        if (!x || !y) {
          throw DomainError("criterion E6_1_mod2_f3_equal needs slot 'f3' in "
                            "both profiles");
        }
        if (x->group != y->group) {
          throw DomainError("profiles declare different groups for slot 'f3'");
        }
        return decide(x->coordinates == y->coordinates, p, "E6_1_mod2_f3_equal",
                      {"Table oE6", "Table E6.triv"});
      }
      if (effective_t_trivial(p1, p) && effective_t_trivial(p2, p)) {
        return subgroup_criterion(p1, p2, p, "E6_1_tG0_mod3_a_subgroup",
                                  {"Table E6.triv"});
      }
      return unavailable(p, "the mod-3 criterion for 1E6 is stated only when "
                            "both Tits classes vanish");
    }
    case Family::E7: {
      if (p == 3) {
        std::optional<CohElement> x = b_component(p1, 3);
        std::optional<CohElement> y = b_component(p2, 3);
        if (!x || !y) {
          throw DomainError("criterion E7_mod3_pm_b needs slot 'b' in both profiles");
        }
        if (x->group != y->group) {
          throw DomainError("profiles declare different groups for slot 'b'");
        }
        bool equal = x->coordinates == y->coordinates ||
                     x->coordinates == y->negated().coordinates;
        return decide(equal, p, "E7_mod3_pm_b", {"Table E7.3"});
      }
      return unavailable(p, "no stated criterion for E7 at p = 2");
    }
    case Family::E8: {
      if (p == 5) {
        return subgroup_criterion(p1, p2, p, "E8_mod5_b_subgroup", {"Table E8"});
      }
      return unavailable(p, "no stated criterion for E8 at p = " + std::to_string(p));
    }
    case Family::OuterE6:
      return unavailable(p, "no stated criterion for 2E6 at p = 2");
    default:
      return unavailable(p, "no stated criterion for " + family_label(family) +
                                " at p = " + std::to_string(p) +
                                "; classical cases rest on prior work");
  }
}

Verdict motivic_equivalent(const InvariantProfile& p1, const InvariantProfile& p2,
                           const RuleTables& rules) {
  if (p1.family != p2.family || p1.rank != p2.rank) {
    return verdict(Verdict::Kind::NotEquivalent, 0, "quasi_split_type", {},
                   "no diagram isomorphism f between the quasi-split inner forms");
  }
  std::vector<Verdict> per_prime;
  for (int p : torsion_primes(type_of(p1.family), p1.rank)) {
    per_prime.push_back(motivic_equivalent_mod_p(p1, p2, p, rules));
  }

  Verdict out;
  out.prime = 0;
  std::vector<std::string> parts;
  for (const auto& v : per_prime) {
    if (v.kind == Verdict::Kind::NotEquivalent) {
      out = v;
      out.prime = 0;
      out.note = "not equivalent mod " + std::to_string(v.prime) +
                 (v.note.empty() ? "" : "; " + v.note);
      return out;
    }
  }
  for (const auto& v : per_prime) {
    if (v.kind == Verdict::Kind::CriterionUnavailable) {
      out = v;
      out.prime = 0;
      out.note = "no criterion mod " + std::to_string(v.prime) +
                 (v.note.empty() ? "" : "; " + v.note);
      return out;
    }
  }
  out.kind = Verdict::Kind::Equivalent;
  std::vector<std::string> citations;
  for (const auto& v : per_prime) {
    if (!v.criterion.empty() && v.criterion != "none") parts.push_back(v.criterion);
    for (const auto& c : v.citations) {
      if (std::find(citations.begin(), citations.end(), c) == citations.end()) {
        citations.push_back(c);
      }
    }
  }
  std::string joined;
  for (const auto& part : parts) joined += joined.empty() ? part : "+" + part;
  out.criterion = joined;
  out.citations = std::move(citations);
  return out;
}

bool tits_algebra_compatible(const InvariantProfile& p1,
                             const InvariantProfile& p2, int p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime");
  if (p1.family != p2.family || p1.rank != p2.rank) {
    throw DomainError("Tits algebra comparison requires profiles of the same family");
  }
  if (p1.tits_class && p2.tits_class) {
    CohElement a = p1.tits_class->p_primary_component(p);
    CohElement b = p2.tits_class->p_primary_component(p);
    return same_subgroup(a, b);
  }
  bool t1 = effective_t_trivial(p1, p);
  bool t2 = effective_t_trivial(p2, p);
  if (t1 || t2) return t1 == t2;
  // Both nontrivial: generators of equal subgroups have equal index, so
  // differing p-primary indexes refute compatibility; equal ones are all the
  // slots can certify.
  if (p1.ind_A && p2.ind_A) {
    return p_primary_part(*p1.ind_A, p) == p_primary_part(*p2.ind_A, p);
  }
  return true;
}

}  // namespace titsindex
