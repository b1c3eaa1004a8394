#include "titsindex/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace titsindex {

namespace {

void require_valid(const TitsIndex& index) {
  auto findings = validate(index);
  if (!findings.empty()) {
    throw DomainError("cannot render an invalid index: " + findings.front().message);
  }
}

std::vector<int> main_line(const DynkinDiagram& d) {
  std::vector<int> out;
  int last = d.rank;
  if (d.type == TypeLabel::D) last = d.rank - 2;
  if (d.type == TypeLabel::E) last = d.rank - 1;
  for (int v = 1; v <= last; ++v) out.push_back(v);
  return out;
}

std::string edge_glyph(const DiagramEdge& e, int right_vertex, bool ascii_only) {
  switch (e.multiplicity) {
    case 1: return "--";
    case 2: return e.toward_short == right_vertex ? "=>=" : "=<=";
    default: return ascii_only ? "###" : "≡";
  }
}

std::string pad_to(size_t column) { return std::string(column, ' '); }

}  // namespace

std::string render_text(const TitsIndex& index, const RenderOptions& options) {
  require_valid(index);
  const DynkinDiagram& d = index.diagram();
  std::vector<int> circled_list = index.distinguished_vertices();
  std::set<int> circled(circled_list.begin(), circled_list.end());

  auto token = [&](int v) { return circled.count(v) ? std::string("(o)") : std::string("o"); };

  std::vector<int> chain = main_line(d);
  std::string main;
  std::map<int, size_t> o_column;  // column of each vertex's `o` glyph
  for (size_t i = 0; i < chain.size(); ++i) {
    int v = chain[i];
    if (i > 0) main += edge_glyph(*d.edge_between(chain[i - 1], v), v, options.ascii_only);
    o_column[v] = main.size() + (circled.count(v) ? 1 : 0);
    main += token(v);
  }

  auto aux_line = [&](int v, size_t column) {
    size_t start = column - (circled.count(v) ? 1 : 0);
    return pad_to(start) + token(v);
  };

  std::vector<std::string> lines;
  if (d.type == TypeLabel::E) {
    int branch = d.rank;
    int attach = d.rank - 3;
    lines.push_back(aux_line(branch, o_column[attach]));
    lines.push_back(main);
  } else if (d.type == TypeLabel::D) {
    size_t column = o_column[d.rank - 2] + 2;
    lines.push_back(aux_line(d.rank - 1, column));
    lines.push_back(main);
    lines.push_back(aux_line(d.rank, column));
  } else {
    lines.push_back(main);
  }

  std::string orbit_note;
  std::set<Orbit> distinguished(index.distinguished.begin(), index.distinguished.end());
  for (const auto& orbit : index.action.orbits) {
    if (orbit.size() < 2) continue;
    orbit_note += "{";
    for (size_t i = 0; i < orbit.size(); ++i) {
      if (i) orbit_note += ",";
      orbit_note += std::to_string(orbit[i]);
    }
    orbit_note += "}";
    if (distinguished.count(orbit)) orbit_note += "*";
  }
  if (!orbit_note.empty()) lines.push_back("orbits: " + orbit_note);

  std::string out;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i) out += "\n";
    out += lines[i];
  }
  return out;
}

namespace {

struct Point {
  int x = 0;
  int y = 0;
};

// Fixed layout per type; outer type A and E6 fold the paired vertices onto
// shared columns so orbit ovals enclose only their members.
std::map<int, Point> layout(const GaloisAction& action) {
  const DynkinDiagram& d = action.diagram;
  int n = d.rank;
  auto col = [](int i) { return 30 + 40 * (i - 1); };
  std::map<int, Point> pos;

  if (d.type == TypeLabel::A && action.t == 2) {
    for (int i = 1; 2 * i <= n; ++i) {
      pos[i] = {col(i), 70};
      pos[n + 1 - i] = {col(i), 110};
    }
    if (n % 2 == 1) pos[(n + 1) / 2] = {col((n + 1) / 2 + (n > 1 ? 1 : 0)), 90};
    return pos;
  }
  if (d.type == TypeLabel::E && n == 6 && action.t == 2) {
    pos[6] = {col(1), 90};
    pos[3] = {col(2), 90};
    pos[2] = {col(3), 70};
    pos[4] = {col(3), 110};
    pos[1] = {col(4), 70};
    pos[5] = {col(4), 110};
    return pos;
  }

  switch (d.type) {
    case TypeLabel::D:
      for (int v = 1; v <= n - 2; ++v) pos[v] = {col(v), 90};
      pos[n - 1] = {col(n - 2) + 30, 60};
      pos[n] = {col(n - 2) + 30, 120};
      break;
    case TypeLabel::E:
      for (int v = 1; v <= n - 1; ++v) pos[v] = {col(v), 90};
      pos[n] = {col(n - 3), 40};
      break;
    default:
      for (int v = 1; v <= n; ++v) pos[v] = {col(v), 90};
      break;
  }
  return pos;
}

struct OvalSpec {
  int cx = 0, cy = 0, rx = 0, ry = 0;
};

OvalSpec oval_around(const Orbit& orbit, const std::map<int, Point>& pos) {
  int min_x = 1 << 30, max_x = -(1 << 30);
  int min_y = 1 << 30, max_y = -(1 << 30);
  for (int v : orbit) {
    const Point& p = pos.at(v);
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  OvalSpec o;
  o.cx = (min_x + max_x) / 2;
  o.cy = (min_y + max_y) / 2;
  o.rx = (max_x - min_x) / 2 + 14;
  o.ry = (max_y - min_y) / 2 + 14;
  return o;
}

}  // namespace

std::string render_svg(const TitsIndex& index) {
  require_valid(index);
  const DynkinDiagram& d = index.diagram();
  std::map<int, Point> pos = layout(index.action);

  int max_x = 0, max_y = 0;
  for (const auto& [v, p] : pos) {
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  int width = max_x + 40;
  int height = std::max(max_y + 40, 160);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
      << " " << height << "\">\n";

  for (const auto& e : d.edges) {
    Point a = pos.at(e.a), b = pos.at(e.b);
    if (e.multiplicity == 1) {
      svg << "  <line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x
          << "\" y2=\"" << b.y << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
      continue;
    }
    int offsets2[] = {-2, 2};
    int offsets3[] = {-4, 0, 4};
    const int* offsets = e.multiplicity == 2 ? offsets2 : offsets3;
    for (int i = 0; i < e.multiplicity; ++i) {
      svg << "  <line x1=\"" << a.x << "\" y1=\"" << a.y + offsets[i]
          << "\" x2=\"" << b.x << "\" y2=\"" << b.y + offsets[i]
          << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    if (e.multiplicity == 2) {
      int mid_x = (a.x + b.x) / 2;
      int mid_y = (a.y + b.y) / 2;
      int dir = e.toward_short == (a.x < b.x ? e.b : e.a) ? 1 : -1;
      svg << "  <path d=\"M " << mid_x - 6 * dir << " " << mid_y - 6 << " L "
          << mid_x + 6 * dir << " " << mid_y << " L " << mid_x - 6 * dir << " "
          << mid_y + 6 << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
  }

  for (const auto& [v, p] : pos) {
    svg << "  <circle cx=\"" << p.x << "\" cy=\"" << p.y
        << "\" r=\"5\" fill=\"black\"/>\n";
  }

  for (const auto& orbit : index.distinguished) {
    if (orbit.size() == 1) {
      const Point& p = pos.at(orbit.front());
      svg << "  <circle cx=\"" << p.x << "\" cy=\"" << p.y
          << "\" r=\"12\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    } else {
      OvalSpec o = oval_around(orbit, pos);
      svg << "  <ellipse cx=\"" << o.cx << "\" cy=\"" << o.cy << "\" rx=\""
          << o.rx << "\" ry=\"" << o.ry
          << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

namespace {

// TikZ lengths in cm on a 0.025 cm grid, printed with two decimals.  Layout
// units are even, so two decimals are exact.
std::string tikz_length(int units) {
  int scaled = units * 25;
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%d.%02d", neg ? "-" : "", scaled / 1000,
                (scaled % 1000) / 10);
  return buf;
}

std::string tikz_coord(int x, int y) {
  return "(" + tikz_length(x - 30) + "," + tikz_length(90 - y) + ")";
}

}  // namespace

std::string render_tikz(const TitsIndex& index) {
  require_valid(index);
  const DynkinDiagram& d = index.diagram();
  std::map<int, Point> pos = layout(index.action);

  std::ostringstream tikz;
  for (const auto& e : d.edges) {
    Point a = pos.at(e.a), b = pos.at(e.b);
    if (e.multiplicity == 1) {
      tikz << "\\draw " << tikz_coord(a.x, a.y) << " -- " << tikz_coord(b.x, b.y)
           << ";\n";
      continue;
    }
    int offsets2[] = {-2, 2};
    int offsets3[] = {-4, 0, 4};
    const int* offsets = e.multiplicity == 2 ? offsets2 : offsets3;
    for (int i = 0; i < e.multiplicity; ++i) {
      tikz << "\\draw " << tikz_coord(a.x, a.y + offsets[i]) << " -- "
           << tikz_coord(b.x, b.y + offsets[i]) << ";\n";
    }
    if (e.multiplicity == 2) {
      int mid_x = (a.x + b.x) / 2;
      int mid_y = (a.y + b.y) / 2;
      int dir = e.toward_short == (a.x < b.x ? e.b : e.a) ? 1 : -1;
      tikz << "\\draw " << tikz_coord(mid_x - 6 * dir, mid_y - 6) << " -- "
           << tikz_coord(mid_x + 6 * dir, mid_y) << " -- "
           << tikz_coord(mid_x - 6 * dir, mid_y + 6) << ";\n";
    }
  }
  for (const auto& [v, p] : pos) {
    tikz << "\\filldraw " << tikz_coord(p.x, p.y) << " circle (0.06);\n";
  }
  for (const auto& orbit : index.distinguished) {
    if (orbit.size() == 1) {
      const Point& p = pos.at(orbit.front());
      tikz << "\\draw " << tikz_coord(p.x, p.y) << " circle (0.3);\n";
    } else {
      OvalSpec o = oval_around(orbit, pos);
      tikz << "\\draw " << tikz_coord(o.cx, o.cy) << " ellipse ("
           << tikz_length(o.rx) << " and " << tikz_length(o.ry) << ");\n";
    }
  }
  return tikz.str();
}

}  // namespace titsindex
