#include "titsindex/family.hpp"

#include <algorithm>
#include <sstream>

namespace titsindex {

std::string family_label(Family family) {
  switch (family) {
    case Family::InnerA: return "1A";
    case Family::OuterA: return "2A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::InnerD: return "1D";
    case Family::OuterD: return "2D";
    case Family::TrialityD4: return "3D4";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::InnerE6: return "1E6";
    case Family::OuterE6: return "2E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

std::pair<Family, std::optional<int>> parse_family(const std::string& label) {
  std::string head;
  std::string digits;
  // Split a trailing run of digits off the alphabetic stem; "3D4"/"1E6"-style
  // labels keep their leading twist digit in the stem.
  size_t i = 0;
  if (i < label.size() && (label[i] == '1' || label[i] == '2' || label[i] == '3')) {
    head += label[i++];
  }
  while (i < label.size() && !std::isdigit(static_cast<unsigned char>(label[i]))) {
    head += static_cast<char>(std::toupper(static_cast<unsigned char>(label[i])));
    ++i;
  }
  digits = label.substr(i);

  std::optional<int> rank;
  if (!digits.empty()) {
    try {
      rank = std::stoi(digits);
    } catch (const std::exception&) {
      throw DomainError("cannot parse family label '" + label + "'");
    }
  }

  Family family;
  if (head == "A" || head == "1A") family = Family::InnerA;
  else if (head == "2A") family = Family::OuterA;
  else if (head == "B") family = Family::B;
  else if (head == "C") family = Family::C;
  else if (head == "D" || head == "1D") {
    family = Family::InnerD;
  } else if (head == "2D") family = Family::OuterD;
  else if (head == "3D") family = Family::TrialityD4;
  else if (head == "G") family = Family::G2;
  else if (head == "F") family = Family::F4;
  else if (head == "E" || head == "1E") {
    if (rank == 7) family = Family::E7;
    else if (rank == 8) family = Family::E8;
    else if (rank == 6 || !rank) family = Family::InnerE6;
    else throw DomainError("no exceptional family E" + digits);
  } else if (head == "2E") family = Family::OuterE6;
  else throw DomainError("unknown family label '" + label + "'");

  if (rank && !rank_allowed(family, *rank)) {
    std::ostringstream os;
    os << "family " << family_label(family) << " does not admit rank " << *rank;
    throw DomainError(os.str());
  }
  return {family, rank};
}

TypeLabel type_of(Family family) {
  switch (family) {
    case Family::InnerA:
    case Family::OuterA: return TypeLabel::A;
    case Family::B: return TypeLabel::B;
    case Family::C: return TypeLabel::C;
    case Family::InnerD:
    case Family::OuterD:
    case Family::TrialityD4: return TypeLabel::D;
    case Family::G2: return TypeLabel::G;
    case Family::F4: return TypeLabel::F;
    case Family::InnerE6:
    case Family::OuterE6:
    case Family::E7:
    case Family::E8: return TypeLabel::E;
  }
  return TypeLabel::A;
}

int galois_order(Family family) {
  switch (family) {
    case Family::OuterA:
    case Family::OuterD:
    case Family::OuterE6: return 2;
    case Family::TrialityD4: return 3;
    default: return 1;
  }
}

bool rank_allowed(Family family, int rank) {
  switch (family) {
    case Family::InnerA: return rank >= 1;
    case Family::OuterA: return rank >= 2;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::InnerD:
    case Family::OuterD: return rank >= 4;
    case Family::TrialityD4: return rank == 4;
    case Family::G2: return rank == 2;
    case Family::F4: return rank == 4;
    case Family::InnerE6:
    case Family::OuterE6: return rank == 6;
    case Family::E7: return rank == 7;
    case Family::E8: return rank == 8;
  }
  return false;
}

std::optional<int> fixed_rank(Family family) {
  switch (family) {
    case Family::TrialityD4: return 4;
    case Family::G2: return 2;
    case Family::F4: return 4;
    case Family::InnerE6:
    case Family::OuterE6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    default: return std::nullopt;
  }
}

std::set<int> family_primes(Family family, int rank) {
  switch (family) {
    case Family::InnerA: {
      std::set<int> primes;
      int m = rank + 1;
      for (int p = 2; p <= m; ++p) {
        if (m % p == 0 && is_prime(p)) primes.insert(p);
      }
      return primes;
    }
    case Family::OuterA:
    case Family::B:
    case Family::C:
    case Family::InnerD:
    case Family::OuterD:
    case Family::OuterE6:
    case Family::G2: return {2};
    case Family::TrialityD4: return {3};
    case Family::F4:
    case Family::InnerE6:
    case Family::E7: return {2, 3};
    case Family::E8: return {2, 3, 5};
  }
  return {};
}

GaloisAction family_action(Family family, int rank) {
  if (!rank_allowed(family, rank)) {
    std::ostringstream os;
    os << "family " << family_label(family) << " does not admit rank " << rank;
    throw DomainError(os.str());
  }
  DynkinDiagram diagram = build_diagram(type_of(family), rank);
  switch (galois_order(family)) {
    case 1: return trivial_action(diagram);
    case 2: return diagram_flip_action(diagram);
    case 3: return triality_action(diagram);
  }
  throw DomainError("unsupported Galois order");
}

TitsIndex quasi_split_index(Family family, int rank) {
  GaloisAction action = family_action(family, rank);
  OrbitPartition all = action.orbits;
  return make_index(std::move(action), std::move(all));
}

std::optional<Family> family_of_index(const TitsIndex& index) {
  const DynkinDiagram& d = index.diagram();
  int t = index.action.t;
  auto matches = [&](Family f) {
    return rank_allowed(f, d.rank) &&
           index.action == family_action(f, d.rank);
  };
  switch (d.type) {
    case TypeLabel::A:
      if (t == 1 && matches(Family::InnerA)) return Family::InnerA;
      if (t == 2 && matches(Family::OuterA)) return Family::OuterA;
      return std::nullopt;
    case TypeLabel::B:
      if (matches(Family::B)) return Family::B;
      return std::nullopt;
    case TypeLabel::C:
      if (matches(Family::C)) return Family::C;
      return std::nullopt;
    case TypeLabel::D:
      if (t == 1 && matches(Family::InnerD)) return Family::InnerD;
      if (t == 2 && matches(Family::OuterD)) return Family::OuterD;
      if (t == 3 && matches(Family::TrialityD4)) return Family::TrialityD4;
      return std::nullopt;
    case TypeLabel::G:
      if (matches(Family::G2)) return Family::G2;
      return std::nullopt;
    case TypeLabel::F:
      if (matches(Family::F4)) return Family::F4;
      return std::nullopt;
    case TypeLabel::E:
      if (d.rank == 6 && t == 1 && matches(Family::InnerE6)) return Family::InnerE6;
      if (d.rank == 6 && t == 2 && matches(Family::OuterE6)) return Family::OuterE6;
      if (d.rank == 7 && matches(Family::E7)) return Family::E7;
      if (d.rank == 8 && matches(Family::E8)) return Family::E8;
      return std::nullopt;
  }
  return std::nullopt;
}

int center_exponent(Family family, int rank) {
  switch (family) {
    case Family::InnerA:
    case Family::OuterA: return rank + 1;
    case Family::B:
    case Family::C:
    case Family::E7: return 2;
    case Family::InnerD:
    case Family::OuterD: return rank % 2 == 0 ? 2 : 4;
    case Family::TrialityD4: return 2;
    case Family::InnerE6:
    case Family::OuterE6: return 3;
    case Family::G2:
    case Family::F4:
    case Family::E8: return 1;
  }
  return 1;
}

void require_prime_compatible(Family family, int p) {
  if (!is_prime(p)) {
    throw DomainError(std::to_string(p) + " is not a prime");
  }
  int t = galois_order(family);
  // Over a p-special field the Galois image has p-power order.
  bool ok = t == 1 || (t == 2 && p == 2) || (t == 3 && p == 3);
  if (!ok) {
    std::ostringstream os;
    os << "family " << family_label(family) << " has Galois image of order "
       << t << ", which is not a power of " << p
       << "; no such groups exist over " << p << "-special fields";
    throw DomainError(os.str());
  }
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace titsindex
