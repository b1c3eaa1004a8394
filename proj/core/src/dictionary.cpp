#include "titsindex/dictionary.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace titsindex {

const TitsIndex& IndexLookup::index() const {
  if (!determined() || candidates.size() != 1) {
    throw DomainError("lookup is not determined");
  }
  return candidates.front();
}

namespace {

enum class Tri { False, True, Unknown };

Tri tri_of(std::optional<bool> known_zero, bool want_zero) {
  if (!known_zero) return Tri::Unknown;
  return *known_zero == want_zero ? Tri::True : Tri::False;
}

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::True;
}

Tri tri_not(Tri a) {
  if (a == Tri::Unknown) return Tri::Unknown;
  return a == Tri::True ? Tri::False : Tri::True;
}

Tri tri_bool(bool b) { return b ? Tri::True : Tri::False; }

/// The profile as seen from the p-special closure: slots of order coprime
/// to p are known to vanish, the algebra index is replaced by its p-primary
/// part, and the Tits class dies when p does not divide the center exponent.
struct ReducedProfile {
  int prime = 2;
  std::optional<bool> f3_zero, f5_zero, g3_zero;
  std::optional<CohElement> b_p;
  std::optional<int> ind_p;
  std::optional<int> r;
  std::optional<std::pair<int, int>> j3;
  std::optional<int> t_order_p;
};

std::optional<bool> zero_state(const std::optional<CohElement>& e) {
  if (!e) return std::nullopt;
  return e->is_zero();
}

ReducedProfile reduce_profile(const InvariantProfile& p, int prime) {
  ReducedProfile red;
  red.prime = prime;

  auto a_part = [&](int q) -> std::optional<CohElement> {
    auto it = p.a_components.find(q);
    if (it == p.a_components.end()) return std::nullopt;
    return it->second.p_primary_component(q);
  };

  if (prime == 2) {
    red.f3_zero = zero_state(p.f3);
    if (!red.f3_zero) red.f3_zero = zero_state(a_part(2));
    red.f5_zero = zero_state(p.f5);
    red.g3_zero = true;  // 3-torsion dies over a 2-special field
  } else if (prime == 3) {
    red.f3_zero = true;
    red.f5_zero = true;
    red.g3_zero = zero_state(p.g3);
    if (!red.g3_zero) red.g3_zero = zero_state(a_part(3));
  } else {
    red.f3_zero = true;
    red.f5_zero = true;
    red.g3_zero = true;
  }
  // f5 is a Pfister multiple of f3, so killing f3 kills f5.
  if (red.f3_zero == true && !red.f5_zero) red.f5_zero = true;

  if (p.b) {
    red.b_p = p.b->p_primary_component(prime);
  } else if (auto ap = a_part(prime)) {
    red.b_p = ap;  // when defined, a and b agree p-primarily
  } else if (prime == 2 && p.f3) {
    red.b_p = p.f3;
  } else if (prime == 3 && p.g3) {
    red.b_p = p.g3;
  }

  if (p.ind_A) red.ind_p = p_primary_part(*p.ind_A, prime);
  red.r = p.r;
  if (prime == 3) red.j3 = p.j3;

  if (p_primary_part(center_exponent(p.family, p.rank), prime) == 1) {
    red.t_order_p = 1;
  } else if (p.tits_class_order) {
    red.t_order_p = p_primary_part(*p.tits_class_order, prime);
  } else if (p.tits_class) {
    red.t_order_p = p.tits_class->p_primary_component(prime).order();
  } else if (p.family == Family::InnerE6 &&
             (p.f3 || p.g3 || !p.a_components.empty())) {
    // a(G), hence f3/g3, only exists once the Tits class vanishes.
    red.t_order_p = 1;
  } else if (p.family == Family::InnerE6 && red.ind_p) {
    // The degree-27 algebra represents the Tits class, so its 3-primary
    // index is 1 exactly when t_G vanishes 3-primarily.
    red.t_order_p = *red.ind_p == 1 ? 1 : 3;
  }
  return red;
}

Tri eval_b_token(const ReducedProfile& red, const std::string& token) {
  if (!red.b_p) return Tri::Unknown;
  const CohElement& b = *red.b_p;
  bool zero = b.is_zero();
  if (token == "zero") return tri_bool(zero);
  if (token == "nonzero") return tri_bool(!zero);
  if (token == "two_torsion_symbol_killed") {
    return tri_bool(!zero && b.order() == 2 && b.is_symbol && b.killed_by_K);
  }
  if (token == "two_torsion_symbol_not_killed") {
    return tri_bool(!zero && b.order() == 2 && b.is_symbol && !b.killed_by_K);
  }
  if (token == "two_torsion_not_symbol") {
    return tri_bool(!zero && b.order() == 2 && !b.is_symbol);
  }
  if (token == "full_order") return tri_bool(b.order() > 2);
  if (token == "nonzero_symbol") return tri_bool(!zero && b.is_symbol);
  if (token == "otherwise") return tri_bool(!zero && !b.is_symbol);
  throw DomainError("unknown condition token '" + token + "'");
}

Tri eval_condition(const ReducedProfile& red, const std::string& slot,
                   const std::string& token) {
  if (slot == "f3" || slot == "f5" || slot == "g3") {
    std::optional<bool> state = slot == "f3"   ? red.f3_zero
                                : slot == "f5" ? red.f5_zero
                                               : red.g3_zero;
    if (token == "any") return Tri::True;
    if (token == "zero") return tri_of(state, true);
    if (token == "nonzero") return tri_of(state, false);
    throw DomainError("unknown condition token '" + token + "'");
  }
  if (slot == "b" || slot == "rost") return eval_b_token(red, token);
  throw DomainError("unknown condition slot '" + slot + "'");
}

Tri eval_any_nonzero(const ReducedProfile& red,
                     const std::vector<std::string>& slots) {
  bool any_unknown = false;
  for (const auto& slot : slots) {
    Tri t = eval_condition(red, slot, "nonzero");
    if (t == Tri::True) return Tri::True;
    if (t == Tri::Unknown) any_unknown = true;
  }
  return any_unknown ? Tri::Unknown : Tri::False;
}

struct RowState {
  const TableRow* row = nullptr;
  Tri verdict = Tri::True;
  IndConstraint ind = IndConstraint::any();
  std::set<std::string> unknowns;

  void apply(Tri t, const std::string& slot) {
    verdict = tri_and(verdict, t);
    if (t == Tri::Unknown) unknowns.insert(slot);
  }
};

void apply_conditions(RowState& state, const RowConditions& conditions,
                      const ReducedProfile& red) {
  for (const auto& [slot, token] : conditions.slots) {
    state.apply(eval_condition(red, slot, token), slot);
  }
  if (!conditions.any_nonzero.empty()) {
    std::string name;
    for (const auto& s : conditions.any_nonzero) name += name.empty() ? s : "|" + s;
    state.apply(eval_any_nonzero(red, conditions.any_nonzero), name);
  }
}

bool row_is_quasi_split(Family family, int rank, const TableRow& row) {
  return row.distinguished == family_action(family, rank).orbits;
}

IndexLookup exceptional_lookup(const InvariantProfile& profile, int p,
                               const RuleTables& rules) {
  Family family = profile.family;
  int rank = profile.rank;
  ReducedProfile red = reduce_profile(profile, p);
  const RuleTable& base = rules.require_table(*family_table_name(family));

  std::vector<RowState> states;
  for (const auto& row : base.rows) {
    auto it = row.occurs.find(p);
    if (it == row.occurs.end() || !it->second) continue;
    RowState state;
    state.row = &row;
    state.ind = row.ind;
    apply_conditions(state, row.conditions, red);
    if (row.ind.kind != IndConstraint::Kind::Any) {
      state.apply(red.ind_p ? tri_bool(row.ind.admits(*red.ind_p)) : Tri::Unknown,
                  "ind_A");
    }
    if (red.r) state.apply(tri_bool(static_cast<int>(row.distinguished.size()) == *red.r), "r");
    states.push_back(std::move(state));
  }

  // Dictionary-table refinements.
  if (family == Family::InnerE6) {
    if (red.t_order_p == 1) {
      const RuleTable& triv = rules.require_table("E6.triv");
      for (auto& state : states) {
        const TableRow* ref = nullptr;
        for (const auto& trow : triv.rows) {
          if (*trow.row_ref == state.row->label) ref = &trow;
        }
        if (ref == nullptr) {
          state.apply(Tri::False, "tits_class");  // row needs a nonzero Tits class
        } else {
          apply_conditions(state, ref->conditions, red);
        }
      }
    }
    if (p == 3 && red.j3) {
      const RuleTable& jt = rules.require_table("E6.J3");
      const TableRow* match = nullptr;
      for (const auto& jrow : jt.rows) {
        if (jrow.j3 == red.j3) match = &jrow;
      }
      if (!match) {
        std::ostringstream os;
        os << "J3 = (" << red.j3->first << "," << red.j3->second
           << ") is not a classified value";
        throw DomainError(os.str());
      }
      for (auto& state : states) {
        if (state.row->label != *match->row_ref) {
          state.apply(Tri::False, "J3");
        } else if (match->ind.kind != IndConstraint::Kind::Any) {
          state.ind = match->ind;
          if (red.ind_p) state.apply(tri_bool(match->ind.admits(*red.ind_p)), "ind_A");
        }
      }
    }
  }
  if (family == Family::E7 && p == 3) {
    const RuleTable& t3 = rules.require_table("E7.3");
    for (auto& state : states) {
      for (const auto& trow : t3.rows) {
        if (*trow.row_ref == state.row->label) apply_conditions(state, trow.conditions, red);
      }
    }
  }
  if (family == Family::E8 && p == 3) {
    const RuleTable& jt = rules.require_table("E8.J3");
    for (auto& state : states) {
      const TableRow* ref = nullptr;
      for (const auto& jrow : jt.rows) {
        if (*jrow.row_ref == state.row->label) ref = &jrow;
      }
      if (ref) {
        apply_conditions(state, ref->conditions, red);
        if (red.j3) state.apply(tri_bool(ref->j3 == red.j3), "J3");
      }
    }
    if (red.j3) {
      bool listed = false;
      for (const auto& jrow : jt.rows) listed = listed || jrow.j3 == red.j3;
      if (!listed) {
        std::ostringstream os;
        os << "J3 = (" << red.j3->first << "," << red.j3->second
           << ") is not a classified value";
        throw DomainError(os.str());
      }
    }
  }

  // Height-one dichotomy: when the only p-indexes are quasi-split and
  // anisotropic, b(G) decides between them.
  if (states.size() == 2) {
    RowState* qs = nullptr;
    RowState* aniso = nullptr;
    for (auto& state : states) {
      if (row_is_quasi_split(family, rank, *state.row)) qs = &state;
      if (state.row->distinguished.empty()) aniso = &state;
    }
    if (qs && aniso && red.b_p) {
      qs->apply(tri_bool(red.b_p->is_zero()), "b");
      aniso->apply(tri_bool(!red.b_p->is_zero()), "b");
    }
  }

  std::vector<RowState> alive;
  for (auto& state : states) {
    if (state.verdict != Tri::False) alive.push_back(std::move(state));
  }
  if (alive.empty()) {
    throw DomainError("profile is inconsistent: no " + family_label(family) +
                      " index at p = " + std::to_string(p) + " matches it");
  }

  IndexLookup out;
  if (alive.size() == 1) {
    out.status = IndexLookup::Status::Determined;
    out.candidates = {index_of_row(family, *alive.front().row)};
    out.ind_A = alive.front().ind;
    return out;
  }
  out.status = IndexLookup::Status::Underdetermined;
  std::set<std::string> needed;
  for (const auto& state : alive) {
    out.candidates.push_back(index_of_row(family, *state.row));
    needed.insert(state.unknowns.begin(), state.unknowns.end());
  }
  std::sort(out.candidates.begin(), out.candidates.end(), enumeration_less);
  out.needed_slots.assign(needed.begin(), needed.end());
  return out;
}

[[noreturn]] void inconsistent(const std::string& what) {
  throw DomainError("profile is inconsistent: " + what);
}

IndexLookup determined(TitsIndex index) {
  IndexLookup out;
  out.status = IndexLookup::Status::Determined;
  out.candidates = {std::move(index)};
  return out;
}

IndexLookup underdetermined(std::vector<TitsIndex> candidates,
                            std::vector<std::string> needed) {
  IndexLookup out;
  out.status = IndexLookup::Status::Underdetermined;
  out.candidates = std::move(candidates);
  out.needed_slots = std::move(needed);
  std::sort(out.candidates.begin(), out.candidates.end(), enumeration_less);
  return out;
}

IndexLookup classical_lookup(const InvariantProfile& profile, int p,
                             const RuleTables& rules) {
  Family family = profile.family;
  int n = profile.rank;
  GaloisAction action = family_action(family, n);

  switch (family) {
    case Family::InnerA: {
      if (!profile.ind_A) {
        return underdetermined(enumerate_indexes(family, n, p, rules), {"ind_A"});
      }
      int d = p_primary_part(*profile.ind_A, p);
      if ((n + 1) % d != 0) inconsistent("d_p does not divide n+1");
      OrbitPartition orbits;
      for (int v = d; v <= n + 1 - d; v += d) orbits.push_back({v});
      return determined(make_index(action, orbits));
    }
    case Family::OuterA: {
      if (!profile.ind_A || !profile.r) {
        std::vector<std::string> needed;
        if (!profile.ind_A) needed.push_back("ind_A");
        if (!profile.r) needed.push_back("r");
        return underdetermined(enumerate_indexes(family, n, p, rules), needed);
      }
      int d = p_primary_part(*profile.ind_A, 2);
      int r = *profile.r;
      int bound = rules.classical.outer_a_witt_bound_half ? (n + 1) / 2 : n;
      if ((n + 1) % d != 0) inconsistent("d_2 does not divide n+1");
      if (r * d > bound) inconsistent("r*d exceeds the Witt bound");
      OrbitPartition orbits;
      for (int i = 1; i <= r; ++i) {
        int v = i * d, w = n + 1 - i * d;
        orbits.push_back(v == w ? Orbit{v} : Orbit{std::min(v, w), std::max(v, w)});
      }
      return determined(make_index(action, orbits));
    }
    case Family::B: {
      if (!profile.witt_index) {
        return underdetermined(enumerate_indexes(family, n, p, rules), {"witt_index"});
      }
      int iw = *profile.witt_index;
      if (iw < 0 || iw > n) inconsistent("Witt index out of range");
      OrbitPartition orbits;
      for (int v = 1; v <= iw; ++v) orbits.push_back({v});
      return determined(make_index(action, orbits));
    }
    case Family::C: {
      if (!profile.ind_A || !profile.r) {
        std::vector<std::string> needed;
        if (!profile.ind_A) needed.push_back("ind_A");
        if (!profile.r) needed.push_back("r");
        return underdetermined(enumerate_indexes(family, n, p, rules), needed);
      }
      int d = p_primary_part(*profile.ind_A, 2);
      int r = *profile.r;
      if ((2 * n) % d != 0) inconsistent("d does not divide 2n");
      if (r * d > n) inconsistent("r*d exceeds n");
      if (d == 1 && rules.classical.c_d1_forces_split && r != n) {
        inconsistent("a split symplectic algebra carries a hyperbolic form, "
                     "forcing r = n");
      }
      OrbitPartition orbits;
      for (int i = 1; i <= r; ++i) orbits.push_back({i * d});
      return determined(make_index(action, orbits));
    }
    case Family::InnerD: {
      if (profile.discriminant_trivial == false) {
        inconsistent("family 1D requires trivial discriminant");
      }
      if (!profile.ind_A || !profile.r) {
        std::vector<std::string> needed;
        if (!profile.ind_A) needed.push_back("ind_A");
        if (!profile.r) needed.push_back("r");
        return underdetermined(enumerate_indexes(family, n, p, rules), needed);
      }
      int d = p_primary_part(*profile.ind_A, 2);
      int r = *profile.r;
      if ((2 * n) % d != 0) inconsistent("d does not divide 2n");
      if (r * d > n) inconsistent("r*d exceeds n");
      if (r * d == n - 1 && rules.classical.inner_d_exclude_rd_n_minus_1) {
        inconsistent("r*d = n-1 cannot occur with trivial discriminant");
      }
      std::set<int> verts;
      if (r * d == n && rules.classical.inner_d_fork_at_n) {
        for (int i = 1; i < r; ++i) verts.insert(i * d);
        verts.insert(n - 1);
        verts.insert(n);
      } else {
        for (int i = 1; i <= r; ++i) verts.insert(i * d);
      }
      OrbitPartition orbits;
      for (int v : verts) orbits.push_back({v});
      return determined(make_index(action, orbits));
    }
    case Family::OuterD: {
      if (profile.discriminant_trivial == true) {
        inconsistent("family 2D requires nontrivial discriminant");
      }
      if (!profile.ind_A || !profile.r) {
        std::vector<std::string> needed;
        if (!profile.ind_A) needed.push_back("ind_A");
        if (!profile.r) needed.push_back("r");
        return underdetermined(enumerate_indexes(family, n, p, rules), needed);
      }
      int d = p_primary_part(*profile.ind_A, 2);
      int r = *profile.r;
      if ((2 * n) % d != 0) inconsistent("d does not divide 2n");
      if (r * d > n - 1) inconsistent("r*d exceeds n-1");
      OrbitPartition orbits;
      if (r * d == n - 1) {
        for (int i = 1; i < r; ++i) orbits.push_back({i * d});
        orbits.push_back({n - 1, n});
      } else {
        for (int i = 1; i <= r; ++i) orbits.push_back({i * d});
      }
      return determined(make_index(action, orbits));
    }
    default:
      throw DomainError("not a classical family");
  }
}

}  // namespace

IndexLookup index_from_profile(const InvariantProfile& profile, int p,
                               const RuleTables& rules) {
  if (!rank_allowed(profile.family, profile.rank)) {
    throw DomainError("family " + family_label(profile.family) +
                      " does not admit rank " + std::to_string(profile.rank));
  }
  require_prime_compatible(profile.family, p);
  auto findings = validate_profile(profile);
  if (!findings.empty()) {
    throw DomainError("profile is inconsistent: " + findings.front().message);
  }
  if (!family_primes(profile.family, profile.rank).count(p)) {
    return determined(quasi_split_index(profile.family, profile.rank));
  }
  if (family_table_name(profile.family)) {
    return exceptional_lookup(profile, p, rules);
  }
  return classical_lookup(profile, p, rules);
}

namespace {

std::string table_citation(const std::string& name) { return "Table " + name; }

void fill_exceptional_constraints(ProfileConstraints& c, const TitsIndex& index,
                                  int p, const RuleTables& rules) {
  Family family = c.family;
  const RuleTable& base = rules.require_table(*family_table_name(family));
  std::optional<std::string> label = exceptional_row_label(index, rules);
  if (!label) throw DomainError("index does not match a catalog table row");
  const TableRow& row = *base.row(*label);

  c.r = split_rank(index);
  c.ind_A = row.ind;
  c.row_label = *label;
  c.table = table_citation(base.name);

  auto copy_conditions = [&](const RowConditions& conditions, int prime) {
    for (const auto& [slot, token] : conditions.slots) {
      // Conditions on slots that die at this prime reduce away.
      bool dead = (prime != 2 && (slot == "f3" || slot == "f5")) ||
                  (prime != 3 && slot == "g3");
      if (!dead) c.slots[slot] = token;
    }
    for (const auto& slot : conditions.any_nonzero) {
      bool dead = (prime != 2 && (slot == "f3" || slot == "f5")) ||
                  (prime != 3 && slot == "g3");
      if (!dead) c.any_nonzero.push_back(slot);
    }
    if (c.any_nonzero.size() == 1) {
      c.slots[c.any_nonzero.front()] = "nonzero";
      c.any_nonzero.clear();
    }
  };

  copy_conditions(row.conditions, p);

  if (family == Family::InnerE6) {
    if (p == 2) {
      const RuleTable& triv = rules.require_table("E6.triv");
      for (const auto& trow : triv.rows) {
        if (*trow.row_ref == *label) {
          copy_conditions(trow.conditions, p);
          c.table = table_citation(triv.name);
        }
      }
    } else {
      const RuleTable& jt = rules.require_table("E6.J3");
      IndConstraint merged = IndConstraint::any();
      for (const auto& jrow : jt.rows) {
        if (*jrow.row_ref != *label) continue;
        c.j3_one_of.push_back(*jrow.j3);
        if (jrow.ind.kind == IndConstraint::Kind::Eq) {
          if (merged.kind == IndConstraint::Kind::Any) merged = IndConstraint::one_of({});
          merged.values.push_back(jrow.ind.values.front());
        } else if (jrow.ind.kind == IndConstraint::Kind::In) {
          if (merged.kind == IndConstraint::Kind::Any) merged = IndConstraint::one_of({});
          merged.values.insert(merged.values.end(), jrow.ind.values.begin(),
                               jrow.ind.values.end());
        }
      }
      if (merged.kind == IndConstraint::Kind::In) c.ind_A = merged;
      c.table = table_citation(jt.name);
    }
  }
  if (family == Family::E7 && p == 3) {
    const RuleTable& t3 = rules.require_table("E7.3");
    for (const auto& trow : t3.rows) {
      if (*trow.row_ref == *label) {
        copy_conditions(trow.conditions, p);
        c.table = table_citation(t3.name);
      }
    }
  }
  if (family == Family::E8 && p == 3) {
    const RuleTable& jt = rules.require_table("E8.J3");
    for (const auto& jrow : jt.rows) {
      if (*jrow.row_ref == *label) {
        copy_conditions(jrow.conditions, p);
        c.j3_one_of.push_back(*jrow.j3);
        c.table = table_citation(jt.name);
      }
    }
  }

  // Height-one dichotomy rows carry no explicit condition; b decides.
  bool have_b = c.slots.count("b") || c.slots.count("rost");
  if (!have_b && c.slots.empty() && c.any_nonzero.empty() && c.j3_one_of.empty()) {
    std::vector<const TableRow*> at_p;
    for (const auto& r2 : base.rows) {
      auto it = r2.occurs.find(p);
      if (it != r2.occurs.end() && it->second) at_p.push_back(&r2);
    }
    if (at_p.size() == 2) {
      bool is_aniso = row.distinguished.empty();
      bool is_qs = row_is_quasi_split(family, c.rank, row);
      if (is_aniso) c.slots["b"] = "nonzero";
      if (is_qs) c.slots["b"] = "zero";
    }
  }
}

void fill_classical_constraints(ProfileConstraints& c, const TitsIndex& index) {
  Family family = c.family;
  int n = c.rank;
  std::vector<int> verts = index.distinguished_vertices();
  int orbit_count = split_rank(index);

  switch (family) {
    case Family::InnerA:
      c.d_p = verts.empty() ? n + 1 : verts.front();
      c.table = "type 1A rule";
      break;
    case Family::OuterA:
      c.r = orbit_count;
      if (!verts.empty()) c.d_p = verts.front();
      c.table = "type 2A rule";
      break;
    case Family::B:
      c.witt_index = orbit_count;
      c.table = "type B rule";
      break;
    case Family::C:
      c.r = orbit_count;
      if (!verts.empty()) c.d_p = verts.front();
      c.table = "type C rule";
      break;
    case Family::InnerD: {
      c.table = "type 1D rule";
      bool fork = std::binary_search(verts.begin(), verts.end(), n - 1) &&
                  std::binary_search(verts.begin(), verts.end(), n);
      if (fork) {
        std::vector<int> chain;
        for (int v : verts) {
          if (v != n - 1 && v != n) chain.push_back(v);
        }
        // With both fork vertices circled, rd = n.
        int d = chain.empty() ? n : chain.front();
        c.d_p = d;
        c.r = n / d;
      } else {
        c.d_p = verts.empty() ? std::optional<int>() : verts.front();
        c.r = orbit_count;
      }
      break;
    }
    case Family::OuterD: {
      c.table = "type 2D rule";
      bool pair = false;
      std::vector<int> singles;
      for (const auto& o : index.distinguished) {
        if (o.size() == 2) pair = true;
        else singles.push_back(o.front());
      }
      if (pair) {
        int d = singles.empty() ? n - 1 : singles.front();
        c.d_p = d;
        c.r = (n - 1) / d;
      } else {
        c.d_p = singles.empty() ? std::optional<int>() : singles.front();
        c.r = orbit_count;
      }
      break;
    }
    default:
      throw DomainError("not a classical family");
  }
}

}  // namespace

ProfileConstraints constraints_for_index(const TitsIndex& index, int p,
                                         const RuleTables& rules) {
  std::optional<Family> family = family_of_index(index);
  if (!family) {
    throw DomainError("index does not carry a canonical family action");
  }
  if (!admissible(index, p, rules)) {
    throw DomainError("index is not admissible for " + family_label(*family) +
                      " at p = " + std::to_string(p));
  }
  ProfileConstraints c;
  c.family = *family;
  c.rank = index.diagram().rank;
  c.prime = p;
  if (is_quasi_split(index) && !family_primes(*family, c.rank).count(p)) {
    c.table = "quasi-split outside the torsion primes";
    return c;
  }
  if (family_table_name(*family)) {
    fill_exceptional_constraints(c, index, p, rules);
  } else {
    fill_classical_constraints(c, index);
  }
  return c;
}

bool satisfies(const InvariantProfile& profile, const ProfileConstraints& c) {
  if (profile.family != c.family || profile.rank != c.rank) return false;
  ReducedProfile red = reduce_profile(profile, c.prime);
  if (c.d_p) {
    if (!red.ind_p || *red.ind_p != *c.d_p) return false;
  }
  if (c.witt_index) {
    if (!profile.witt_index || *profile.witt_index != *c.witt_index) return false;
  }
  if (c.r) {
    std::optional<int> have = profile.r;
    if (!have && c.witt_index) have = profile.witt_index;
    if (!have || *have != *c.r) return false;
  }
  if (c.ind_A.kind != IndConstraint::Kind::Any) {
    if (!red.ind_p || !c.ind_A.admits(*red.ind_p)) return false;
  }
  for (const auto& [slot, token] : c.slots) {
    if (eval_condition(red, slot, token) != Tri::True) return false;
  }
  if (!c.any_nonzero.empty() && eval_any_nonzero(red, c.any_nonzero) != Tri::True) {
    return false;
  }
  if (!c.j3_one_of.empty()) {
    if (!profile.j3) return false;
    if (std::find(c.j3_one_of.begin(), c.j3_one_of.end(), *profile.j3) ==
        c.j3_one_of.end()) {
      return false;
    }
  }
  return true;
}

InvariantProfile zero_slot(InvariantProfile profile, const std::string& slot) {
  auto zero_out = [](std::optional<CohElement>& e) {
    if (e) e = zero_element(e->group);
  };
  if (slot == "f3") {
    zero_out(profile.f3);
    zero_out(profile.f5);  // f5 is a multiple of f3
  } else if (slot == "f5") {
    zero_out(profile.f5);
  } else if (slot == "g3") {
    zero_out(profile.g3);
  } else if (slot == "b") {
    zero_out(profile.b);
  } else if (slot == "tits_class") {
    zero_out(profile.tits_class);
    if (profile.tits_class_order) profile.tits_class_order = 1;
  } else if (slot == "a2") {
    if (auto it = profile.a_components.find(2); it != profile.a_components.end()) {
      it->second = zero_element(it->second.group);
    }
    zero_out(profile.f3);
    zero_out(profile.f5);
  } else if (slot == "a3") {
    if (auto it = profile.a_components.find(3); it != profile.a_components.end()) {
      it->second = zero_element(it->second.group);
    }
    zero_out(profile.g3);
  } else if (slot == "a5") {
    if (auto it = profile.a_components.find(5); it != profile.a_components.end()) {
      it->second = zero_element(it->second.group);
    }
  } else {
    throw DomainError("unknown slot '" + slot + "'");
  }
  return profile;
}

}  // namespace titsindex
