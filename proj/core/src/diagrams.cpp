#include "titsindex/diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace titsindex {

char to_char(TypeLabel type) { return static_cast<char>(type); }

TypeLabel type_from_char(char c) {
  switch (c) {
    case 'A': return TypeLabel::A;
    case 'B': return TypeLabel::B;
    case 'C': return TypeLabel::C;
    case 'D': return TypeLabel::D;
    case 'E': return TypeLabel::E;
    case 'F': return TypeLabel::F;
    case 'G': return TypeLabel::G;
    default:
      throw DomainError(std::string("unknown Dynkin type letter '") + c + "'");
  }
}

const DiagramEdge* DynkinDiagram::edge_between(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& e : edges) {
    if (e.a == i && e.b == j) return &e;
  }
  return nullptr;
}

std::vector<int> DynkinDiagram::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& e : edges) {
    if (e.a == v) out.push_back(e.b);
    if (e.b == v) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string DynkinDiagram::type_string() const {
  return std::string(1, to_char(type)) + std::to_string(rank);
}

namespace {

[[noreturn]] void bad_rank(TypeLabel type, int rank, const std::string& range) {
  std::ostringstream os;
  os << "type " << to_char(type) << " has no diagram of rank " << rank
     << " (valid range: " << range << ")";
  throw DomainError(os.str());
}

std::vector<DiagramEdge> chain(int from, int to) {
  std::vector<DiagramEdge> edges;
  for (int i = from; i < to; ++i) edges.push_back({i, i + 1, 1, 0});
  return edges;
}

}  // namespace

DynkinDiagram build_diagram(TypeLabel type, int rank) {
  DynkinDiagram d;
  d.type = type;
  d.rank = rank;
  switch (type) {
    case TypeLabel::A:
      if (rank < 1) bad_rank(type, rank, "n >= 1");
      d.edges = chain(1, rank);
      break;
    case TypeLabel::B:
      if (rank < 2) bad_rank(type, rank, "n >= 2");
      d.edges = chain(1, rank - 1);
      d.edges.push_back({rank - 1, rank, 2, rank});  // short root at the end
      break;
    case TypeLabel::C:
      if (rank < 3) bad_rank(type, rank, "n >= 3");
      d.edges = chain(1, rank - 1);
      d.edges.push_back({rank - 1, rank, 2, rank - 1});  // long root at the end
      break;
    case TypeLabel::D:
      if (rank < 4) bad_rank(type, rank, "n >= 4");
      d.edges = chain(1, rank - 2);
      d.edges.push_back({rank - 2, rank - 1, 1, 0});
      d.edges.push_back({rank - 2, rank, 1, 0});
      break;
    case TypeLabel::E:
      if (rank < 6 || rank > 8) bad_rank(type, rank, "n in {6, 7, 8}");
      d.edges = chain(1, rank - 1);
      // Branch vertex: 6 on 3, 7 on 4, 8 on 5.
      d.edges.push_back({rank - 3, rank, 1, 0});
      break;
    case TypeLabel::F:
      if (rank != 4) bad_rank(type, rank, "n = 4");
      d.edges = {{1, 2, 1, 0}, {2, 3, 2, 3}, {3, 4, 1, 0}};
      break;
    case TypeLabel::G:
      if (rank != 2) bad_rank(type, rank, "n = 2");
      d.edges = {{1, 2, 3, 1}};
      break;
  }
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.image.resize(static_cast<size_t>(degree) + 1);
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

bool Permutation::is_identity() const {
  for (int v = 1; v <= degree(); ++v) {
    if (image[static_cast<size_t>(v)] != v) return false;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& other) const {
  Permutation out = identity(degree());
  for (int v = 1; v <= degree(); ++v) out.image[static_cast<size_t>(v)] = (*this)(other(v));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out = identity(degree());
  for (int v = 1; v <= degree(); ++v) out.image[static_cast<size_t>((*this)(v))] = v;
  return out;
}

bool is_diagram_automorphism(const DynkinDiagram& diagram, const Permutation& p,
                             std::pair<int, int>* violated_edge) {
  if (p.degree() != diagram.rank) {
    if (violated_edge) *violated_edge = {0, 0};
    return false;
  }
  std::vector<bool> seen(static_cast<size_t>(diagram.rank) + 1, false);
  for (int v = 1; v <= diagram.rank; ++v) {
    int w = p(v);
    if (w < 1 || w > diagram.rank || seen[static_cast<size_t>(w)]) {
      if (violated_edge) *violated_edge = {v, v};
      return false;
    }
    seen[static_cast<size_t>(w)] = true;
  }
  // Both directions: edge count is preserved for bijections mapping edges to
  // edges, so checking images of edges suffices.
  for (const auto& e : diagram.edges) {
    const DiagramEdge* img = diagram.edge_between(p(e.a), p(e.b));
    bool ok = img != nullptr && img->multiplicity == e.multiplicity;
    if (ok && e.multiplicity >= 2) ok = img->toward_short == p(e.toward_short);
    if (!ok) {
      if (violated_edge) *violated_edge = {e.a, e.b};
      return false;
    }
  }
  return true;
}

namespace {

void search_automorphisms(const DynkinDiagram& diagram, std::vector<int>& image,
                          std::vector<bool>& used, int v,
                          std::vector<Permutation>& out) {
  int n = diagram.rank;
  if (v > n) {
    Permutation p{image};
    if (is_diagram_automorphism(diagram, p)) out.push_back(std::move(p));
    return;
  }
  for (int w = 1; w <= n; ++w) {
    if (used[static_cast<size_t>(w)]) continue;
    // Degree must match, and images of already-placed neighbors must be
    // adjacent to w with matching edge data.
    if (diagram.neighbors(v).size() != diagram.neighbors(w).size()) continue;
    bool consistent = true;
    for (const auto& e : diagram.edges) {
      int other = 0;
      if (e.a == v) other = e.b;
      else if (e.b == v) other = e.a;
      else continue;
      if (other > v - 1 || other < 1) continue;  // image not assigned yet
      if (image[static_cast<size_t>(other)] == 0) continue;
      const DiagramEdge* img = diagram.edge_between(w, image[static_cast<size_t>(other)]);
      if (img == nullptr || img->multiplicity != e.multiplicity) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    image[static_cast<size_t>(v)] = w;
    used[static_cast<size_t>(w)] = true;
    search_automorphisms(diagram, image, used, v + 1, out);
    used[static_cast<size_t>(w)] = false;
    image[static_cast<size_t>(v)] = 0;
  }
}

}  // namespace

std::vector<Permutation> automorphism_group(const DynkinDiagram& diagram) {
  std::vector<Permutation> out;
  std::vector<int> image(static_cast<size_t>(diagram.rank) + 1, 0);
  std::vector<bool> used(static_cast<size_t>(diagram.rank) + 1, false);
  search_automorphisms(diagram, image, used, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

const Orbit* GaloisAction::orbit_of(int v) const {
  for (const auto& o : orbits) {
    if (std::find(o.begin(), o.end(), v) != o.end()) return &o;
  }
  return nullptr;
}

bool GaloisAction::is_subgroup_of(const GaloisAction& other) const {
  for (const auto& e : elements) {
    if (std::find(other.elements.begin(), other.elements.end(), e) ==
        other.elements.end()) {
      return false;
    }
  }
  return true;
}

GaloisAction make_action(const DynkinDiagram& diagram,
                         std::vector<Permutation> generators) {
  for (const auto& g : generators) {
    std::pair<int, int> bad;
    if (!is_diagram_automorphism(diagram, g, &bad)) {
      std::ostringstream os;
      os << "generator is not a diagram automorphism: edge (" << bad.first
         << ", " << bad.second << ") is not preserved";
      throw DomainError(os.str());
    }
  }

  // Close under composition; groups here have order at most 6.
  std::set<Permutation> closure;
  closure.insert(Permutation::identity(diagram.rank));
  for (const auto& g : generators) closure.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> current(closure.begin(), closure.end());
    for (const auto& x : current) {
      for (const auto& y : current) {
        if (closure.insert(x.compose(y)).second) grew = true;
      }
    }
  }

  GaloisAction action;
  action.diagram = diagram;
  action.generators = std::move(generators);
  action.elements.assign(closure.begin(), closure.end());
  action.t = static_cast<int>(action.elements.size());

  int t = action.t;
  bool t_ok = (t == 1 || t == 2 || t == 3 || t == 6);
  if (t > 1) {
    switch (diagram.type) {
      case TypeLabel::A:
        t_ok = t_ok && diagram.rank >= 2 && t == 2;
        break;
      case TypeLabel::D:
        t_ok = t_ok && (diagram.rank == 4 || t == 2);
        break;
      case TypeLabel::E:
        t_ok = t_ok && diagram.rank == 6 && t == 2;
        break;
      default:
        t_ok = false;
    }
  }
  if (!t_ok) {
    std::ostringstream os;
    os << "an action of order " << t << " is not realizable on "
       << diagram.type_string();
    throw DomainError(os.str());
  }

  // Orbit partition of the generated group.
  std::vector<bool> placed(static_cast<size_t>(diagram.rank) + 1, false);
  for (int v = 1; v <= diagram.rank; ++v) {
    if (placed[static_cast<size_t>(v)]) continue;
    std::set<int> orbit{v};
    for (const auto& e : action.elements) orbit.insert(e(v));
    Orbit o(orbit.begin(), orbit.end());
    for (int w : o) placed[static_cast<size_t>(w)] = true;
    action.orbits.push_back(std::move(o));
  }
  return action;
}

GaloisAction trivial_action(const DynkinDiagram& diagram) {
  return make_action(diagram, {});
}

GaloisAction diagram_flip_action(const DynkinDiagram& diagram) {
  int n = diagram.rank;
  Permutation p = Permutation::identity(n);
  switch (diagram.type) {
    case TypeLabel::A:
      if (n < 2) throw DomainError("A1 has no outer action");
      for (int v = 1; v <= n; ++v) p.image[static_cast<size_t>(v)] = n + 1 - v;
      break;
    case TypeLabel::D:
      std::swap(p.image[static_cast<size_t>(n - 1)], p.image[static_cast<size_t>(n)]);
      break;
    case TypeLabel::E:
      if (n != 6) throw DomainError(diagram.type_string() + " has no outer action");
      std::swap(p.image[1], p.image[5]);
      std::swap(p.image[2], p.image[4]);
      break;
    default:
      throw DomainError(diagram.type_string() + " has no outer action");
  }
  return make_action(diagram, {std::move(p)});
}

GaloisAction triality_action(const DynkinDiagram& diagram) {
  if (diagram.type != TypeLabel::D || diagram.rank != 4) {
    throw DomainError("triality requires D4");
  }
  Permutation p = Permutation::identity(4);
  p.image[1] = 3;
  p.image[3] = 4;
  p.image[4] = 1;
  return make_action(diagram, {std::move(p)});
}

int bourbaki_label(TypeLabel type, int rank, int v) {
  if (v < 1 || v > rank) throw DomainError("vertex out of range");
  switch (type) {
    case TypeLabel::E:
      if (rank == 6) {
        static constexpr int map6[7] = {0, 1, 3, 4, 5, 6, 2};
        return map6[v];
      }
      if (rank == 7) {
        static constexpr int map7[8] = {0, 7, 6, 5, 4, 3, 1, 2};
        return map7[v];
      }
      {
        static constexpr int map8[9] = {0, 8, 7, 6, 5, 4, 3, 1, 2};
        return map8[v];
      }
    default:
      return v;
  }
}

}  // namespace titsindex
