#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace titsindex {

/// Thrown when an operation is asked something outside its mathematical
/// domain (bad rank, incompatible diagrams, unknown family/prime pairing).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TypeLabel : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

char to_char(TypeLabel type);
TypeLabel type_from_char(char c);

/// An edge of a Dynkin diagram.  Endpoints satisfy a < b.  For multiplicity
/// 2 or 3 the arrow points toward the short root; `toward_short` holds that
/// endpoint and is 0 on simple edges.
struct DiagramEdge {
  int a = 0;
  int b = 0;
  int multiplicity = 1;
  int toward_short = 0;

  friend auto operator<=>(const DiagramEdge&, const DiagramEdge&) = default;
};

/// Labeled Dynkin diagram of a simple root system.  Vertices are 1..rank
/// with the numbering fixed by build_diagram; values are immutable once
/// constructed.
struct DynkinDiagram {
  TypeLabel type = TypeLabel::A;
  int rank = 0;
  std::vector<DiagramEdge> edges;  // sorted by (a, b)

  const DiagramEdge* edge_between(int i, int j) const;
  std::vector<int> neighbors(int v) const;
  /// Compact label such as "A5" or "E6".
  std::string type_string() const;
  bool same_shape(const DynkinDiagram& other) const {
    return type == other.type && rank == other.rank;
  }

  friend auto operator<=>(const DynkinDiagram&, const DynkinDiagram&) = default;
};

/// Canonical diagram for the given type and rank.
///
/// Numbering: A/B/C are the chain 1..n (multiple edge between n-1 and n for
/// B and C); D is the chain 1..n-2 with both n-1 and n attached to n-2;
/// E6 is the chain 1..5 with 6 attached to 3; E7 the chain 1..6 with 7
/// attached to 4; E8 the chain 1..7 with 8 attached to 5; F4 the chain
/// 1-2=3-4; G2 the triple edge 1-2.
///
/// Throws DomainError naming the valid range if the rank is out of bounds
/// (A: n>=1, B: n>=2, C: n>=3, D: n>=4, E: 6..8, F: 4, G: 2).
DynkinDiagram build_diagram(TypeLabel type, int rank);

/// Vertex permutation on 1..degree.  image[v] is the image of v; slot 0 is
/// unused and fixed to 0.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int degree);
  int degree() const { return static_cast<int>(image.size()) - 1; }
  int operator()(int v) const { return image[static_cast<size_t>(v)]; }
  bool is_identity() const;
  /// (this * other)(v) = this(other(v))
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Checks that `p` maps every edge to an edge with the same multiplicity and
/// short side.  On failure, if `violated_edge` is non-null it receives the
/// offending edge endpoints.
bool is_diagram_automorphism(const DynkinDiagram& diagram, const Permutation& p,
                             std::pair<int, int>* violated_edge = nullptr);

/// Full automorphism group of the diagram as explicit permutations, sorted
/// with the identity first.
std::vector<Permutation> automorphism_group(const DynkinDiagram& diagram);

using Orbit = std::vector<int>;            // ascending vertex labels
using OrbitPartition = std::vector<Orbit>; // sorted by smallest member

/// The image of the Galois group in Aut(diagram): a diagram-automorphism
/// subgroup with its orbit partition.  `elements` is the full generated
/// subgroup (order t <= 6), sorted with the identity first.
struct GaloisAction {
  DynkinDiagram diagram;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  int t = 1;
  OrbitPartition orbits;

  const Orbit* orbit_of(int v) const;
  /// True when every element of this action also belongs to `other`
  /// (actions only shrink under base change).
  bool is_subgroup_of(const GaloisAction& other) const;

  friend bool operator==(const GaloisAction& x, const GaloisAction& y) {
    return x.diagram == y.diagram && x.elements == y.elements;
  }
};

/// Builds the action generated by `generators`.  Throws DomainError listing
/// the violated edge if a generator does not preserve the diagram, or if the
/// generated order is not realizable for the type (t in {1,2,3,6}, t > 1
/// only for A with n>=2, D, and E6).
GaloisAction make_action(const DynkinDiagram& diagram,
                         std::vector<Permutation> generators);

GaloisAction trivial_action(const DynkinDiagram& diagram);
/// The canonical order-2 outer action: i <-> n+1-i on A_n (n>=2), the swap
/// of the fork vertices n-1, n on D_n, and 1<->5, 2<->4 on E6.
GaloisAction diagram_flip_action(const DynkinDiagram& diagram);
/// The order-3 rotation (1 3 4) on D4.
GaloisAction triality_action(const DynkinDiagram& diagram);

/// Translation of this library's vertex numbering to Bourbaki's.  Identity
/// for A, B, C, D, F4 and G2; E6/E7/E8 are relabeled.
int bourbaki_label(TypeLabel type, int rank, int v);

}  // namespace titsindex
