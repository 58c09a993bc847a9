// SVG and DOT output. Positions come from a barycentric layout of the
// planarization with its largest face pinned to a regular polygon; nothing in
// here feeds back into any check.

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "biplane/io.hpp"

namespace biplane {
namespace {

struct Point {
  double x = 0, y = 0;
};

constexpr double kSize = 600.0;

std::vector<Point> barycentric_layout(int nodes, const Rotation& rotation, const std::vector<Face>& faces,
                                      const std::function<NodeId(Dart)>& head, const std::function<NodeId(Dart)>& tail) {
  std::vector<Point> pos(nodes, {kSize / 2, kSize / 2});
  std::vector<char> fixed(nodes, 0);
  const Face* outer = nullptr;
  for (const Face& f : faces)
    if (!outer || f.size() > outer->size()) outer = &f;
  if (outer) {
    std::vector<NodeId> ring;
    for (Dart d : outer->darts) {
      const NodeId x = tail(d);
      if (!fixed[x]) {
        fixed[x] = 1;
        ring.push_back(x);
      }
    }
    const double r = kSize * 0.45;
    for (size_t i = 0; i < ring.size(); ++i) {
      const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(ring.size());
      // Faces are traced clockwise, so walk the polygon clockwise too.
      pos[ring[i]] = {kSize / 2 + r * std::cos(-a), kSize / 2 + r * std::sin(-a)};
    }
  }
  for (int iter = 0; iter < 2000; ++iter) {
    double moved = 0;
    for (NodeId x = 0; x < nodes; ++x) {
      if (fixed[x] || rotation[x].empty()) continue;
      Point s;
      for (Dart d : rotation[x]) {
        s.x += pos[head(d)].x;
        s.y += pos[head(d)].y;
      }
      s.x /= static_cast<double>(rotation[x].size());
      s.y /= static_cast<double>(rotation[x].size());
      moved = std::max(moved, std::abs(s.x - pos[x].x) + std::abs(s.y - pos[x].y));
      pos[x] = s;
    }
    if (moved < 1e-6) break;
  }
  return pos;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

const char* vertex_fill(Color c) { return c == 1 ? "#ffffff" : "#222222"; }

void svg_vertices(std::ostringstream& out, const Drawing& d, const std::vector<Point>& pos) {
  out << "<g id=\"vertices\">\n";
  for (VertexId x = 0; x < d.num_vertices(); ++x) {
    out << "<circle cx=\"" << num(pos[x].x) << "\" cy=\"" << num(pos[x].y) << "\" r=\"7\" fill=\""
        << vertex_fill(d.graph().color(x)) << "\" stroke=\"#000\"><title>" << x << "</title></circle>\n";
  }
  out << "</g>\n";
}

std::vector<Point> layout_of(const Drawing& d) {
  return barycentric_layout(
      d.num_nodes(), d.rotation(), d.faces(), [&](Dart x) { return d.head(x); }, [&](Dart x) { return d.tail(x); });
}

}  // namespace

std::string render_svg(const Drawing& d) {
  const auto pos = layout_of(d);
  const auto cls = classify_edges(d);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\">\n";
  out << "<g id=\"edges\" fill=\"none\">\n";
  for (EdgeId e = 0; e < d.num_edges(); ++e) {
    const Edge& ed = d.graph().edge(e);
    std::vector<NodeId> path{ed.u};
    if (auto c = d.crossing_of(e)) path.push_back(d.dummy_of(*c));
    path.push_back(ed.v);
    const char* style = "stroke=\"#000\"";
    if (cls.edge_class[e] == EdgeClass::Right) style = "stroke=\"#1f5fbf\"";
    if (cls.edge_class[e] == EdgeClass::Left) style = "stroke=\"#c0392b\" stroke-dasharray=\"6 4\"";
    out << "<polyline class=\"" << to_string(cls.edge_class[e]) << "\" " << style << " points=\"";
    for (size_t i = 0; i < path.size(); ++i) out << (i ? " " : "") << num(pos[path[i]].x) << "," << num(pos[path[i]].y);
    out << "\"/>\n";
  }
  out << "</g>\n";
  svg_vertices(out, d, pos);
  out << "</svg>\n";
  return out.str();
}

std::string render_decomposition_svg(const Drawing& d) {
  const GPrime gp = derive_gprime(d);
  const Drawing& plane = gp.plane;
  const auto pos = layout_of(plane);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\">\n";
  std::optional<PartsDecomposition> decomp;
  try {
    decomp = decompose(gp);
  } catch (const std::exception&) {
  }
  if (decomp) {
    static const char* fills[] = {"#f4d03f", "#85c1e9", "#82e0aa", "#f5b7b1", "#d7bde2", "#f8c471"};
    std::map<Dart, const Face*> by_id;
    for (const Face& f : plane.faces()) by_id[f.id()] = &f;
    const Face* outer = nullptr;
    for (const Face& f : plane.faces())
      if (!outer || f.size() > outer->size()) outer = &f;
    for (size_t i = 0; i < decomp->parts.size(); ++i) {
      const Part& part = decomp->parts[i];
      out << "<g id=\"part-" << i << "\" class=\"" << to_string(part.kind) << "\">\n";
      for (Dart fid : part.faces) {
        const Face* f = by_id.at(fid);
        if (f == outer) continue;  // pinned to the frame; drawing it would cover everything
        out << "<polygon fill=\"" << fills[i % 6] << "\" fill-opacity=\"0.6\" stroke=\"none\" points=\"";
        for (size_t k = 0; k < f->darts.size(); ++k) {
          const Point& p = pos[plane.tail(f->darts[k])];
          out << (k ? " " : "") << num(p.x) << "," << num(p.y);
        }
        out << "\"/>\n";
      }
      out << "</g>\n";
    }
  }
  out << "<g id=\"edges\">\n";
  for (EdgeId e = 0; e < plane.num_edges(); ++e) {
    const Edge& ed = plane.graph().edge(e);
    const bool right = gp.edge_class[e] == EdgeClass::Right;
    out << "<line class=\"" << (right ? "right" : "simple") << "\" x1=\"" << num(pos[ed.u].x) << "\" y1=\""
        << num(pos[ed.u].y) << "\" x2=\"" << num(pos[ed.v].x) << "\" y2=\"" << num(pos[ed.v].y) << "\" stroke=\""
        << (right ? "#1f5fbf\" stroke-dasharray=\"3 3" : "#000") << "\"/>\n";
  }
  out << "</g>\n";
  svg_vertices(out, plane, pos);
  out << "</svg>\n";
  return out.str();
}

std::string render_dot(const Drawing& d) {
  const auto cls = classify_edges(d);
  std::ostringstream out;
  out << "graph drawing {\n  node [shape=circle];\n";
  for (VertexId x = 0; x < d.num_vertices(); ++x) {
    out << "  " << x << " [style=filled, fillcolor=\"" << vertex_fill(d.graph().color(x)) << "\", fontcolor=\""
        << (d.graph().color(x) == 1 ? "#000000" : "#ffffff") << "\"];\n";
  }
  for (EdgeId e = 0; e < d.num_edges(); ++e) {
    const Edge& ed = d.graph().edge(e);
    out << "  " << ed.u << " -- " << ed.v << " [id=" << e << ", class=" << to_string(cls.edge_class[e]);
    if (cls.edge_class[e] == EdgeClass::Right) out << ", color=\"#1f5fbf\"";
    if (cls.edge_class[e] == EdgeClass::Left) out << ", color=\"#c0392b\", style=dashed";
    out << "];\n";
  }
  for (int c = 0; c < d.num_crossings(); ++c)
    out << "  // crossing " << c << ": " << d.crossings()[c].first << " x " << d.crossings()[c].second << "\n";
  out << "}\n";
  return out.str();
}

}  // namespace biplane
