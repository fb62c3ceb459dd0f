#include "vondyck/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace vondyck::io {

namespace {

char const* type_name(VertexType t) {
  switch (t) {
    case VertexType::A:
      return "A";
    case VertexType::B:
      return "B";
    case VertexType::O:
      return "O";
  }
  return "?";
}

Json point_json(SurfacePoint const& p, CurvatureClass model) {
  if (model == CurvatureClass::Spherical) {
    return Json::array({p.x, p.y, p.z});
  }
  return Json::array({p.x, p.y});
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") {
    s = "0.000";
  }
  return s;
}

}  // namespace

Json store_to_json(ElementStore const& store) {
  Json doc;
  doc["schema"] = "vondyck.store/1";
  doc["model"] = describe(store.model());
  doc["complete"] = store.complete();
  if (auto bound = store.max_word_length()) {
    doc["max_word_length"] = *bound;
  } else {
    doc["max_word_length"] = nullptr;
  }
  Json elements = Json::array();
  for (auto const& e : store.elements()) {
    Json rec;
    rec["id"] = e.id;
    rec["word"] = format_word(e.canonical_word);
    rec["depth"] = e.depth;
    rec["fingerprint"] = store.key(e.id);
    Json action = Json::array();
    for (Letter l : kLetters) {
      auto const t = store.act(e.id, l);
      action.push_back(t == kUnknown ? Json(nullptr) : Json(t));
    }
    rec["action"] = action;
    elements.push_back(std::move(rec));
  }
  doc["elements"] = std::move(elements);
  doc["action_letters"] = {"x", "y", "x^-1", "y^-1"};
  return doc;
}

Json cayley_to_json(CayleyGraph const& graph, ElementStore const& store) {
  Json doc;
  doc["schema"] = "vondyck.cayley/1";
  doc["model"] = describe(store.model());
  doc["complete"] = store.complete();
  Json vertices = Json::array();
  for (ElementId v : graph.vertices) {
    vertices.push_back({{"id", v},
                        {"word", format_word(canonical_word(store, v))},
                        {"interior", std::binary_search(graph.interior.begin(),
                                                        graph.interior.end(), v)}});
  }
  Json edges = Json::array();
  for (auto const& e : graph.edges) {
    edges.push_back({{"src", e.src}, {"dst", e.dst}, {"color", to_string(e.color)}});
  }
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  return doc;
}

Json coset_to_json(CosetGeometry const& geometry, ElementStore const& store) {
  Json doc;
  doc["schema"] = "vondyck.coset/1";
  doc["model"] = describe(store.model());
  doc["complete"] = store.complete();
  auto cosets = [](std::vector<Coset> const& cs) {
    Json out = Json::array();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      out.push_back({{"index", i}, {"rep", cs[i].rep}, {"members", cs[i].members}});
    }
    return out;
  };
  doc["h_vertices"] = cosets(geometry.h_vertices());
  doc["k_vertices"] = cosets(geometry.k_vertices());
  Json edges = Json::array();
  for (auto const& e : geometry.edges()) {
    edges.push_back({{"h", e.h},
                     {"k", e.k},
                     {"label", e.label},
                     {"word", format_word(canonical_word(store, e.label))}});
  }
  doc["edges"] = std::move(edges);
  return doc;
}

Json tiling_to_json(PolygonTiling const& tiling) {
  auto const model = tiling.geometry().model();
  auto const& p = tiling.geometry().params();
  Json doc;
  doc["schema"] = "vondyck.tiling/1";
  doc["params"] = {p.a, p.b, p.c};
  doc["surface"] = to_string(model);
  Json vertices = Json::array();
  for (auto const& v : tiling.vertices()) {
    vertices.push_back({{"point", point_json(v.point, model)}, {"type", type_name(v.type)}});
  }
  Json edges = Json::array();
  for (auto const& e : tiling.edges()) {
    edges.push_back({{"a", e.a_vertex},
                     {"b", e.b_vertex},
                     {"word", format_word(e.word)},
                     {"label", e.label ? Json(*e.label) : Json(nullptr)}});
  }
  Json tiles = Json::array();
  for (std::size_t i = 0; i < tiling.polygons().size(); ++i) {
    auto const& poly = tiling.polygons()[i];
    auto const tile = tiling.as_tile(static_cast<std::int32_t>(i));
    Json corners = Json::array();
    for (auto const& tp : tile.polygon) {
      corners.push_back({{"point", point_json(tp.point, model)}, {"type", type_name(tp.type)}});
    }
    tiles.push_back({{"center", point_json(poly.center, model)},
                     {"word", format_word(poly.word)},
                     {"vertices", poly.vertices},
                     {"edges", poly.edges},
                     {"polygon", std::move(corners)},
                     {"element", tile.element ? Json(*tile.element) : Json(nullptr)}});
  }
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  doc["tiles"] = std::move(tiles);
  return doc;
}

Json enumeration_to_json(DnnnEnumeration const& e) {
  Json doc;
  doc["schema"] = "vondyck.enumeration/1";
  doc["n"] = e.tiling.geometry().params().a;
  Json rows = Json::array();
  for (auto const& row : e.edges) {
    rows.push_back({{"index", row.index}, {"word", format_word(row.word)}});
  }
  Json rings = Json::array();
  for (std::size_t i = 0; i < e.rings.size(); ++i) {
    auto const& r = e.rings[i];
    rings.push_back({{"ring", i + 1},
                     {"boundary_edges", r.boundary_edges},
                     {"hinge_sum", r.hinge_sum},
                     {"added", r.added},
                     {"formula", r.formula_count},
                     {"brute_force", r.brute_force_count}});
  }
  doc["edges"] = std::move(rows);
  doc["rings"] = std::move(rings);
  return doc;
}

std::string cayley_to_dot(CayleyGraph const& graph, ElementStore const& store) {
  std::ostringstream out;
  out << "digraph cayley {\n";
  out << "  // " << describe(store.model()) << "\n";
  for (ElementId v : graph.vertices) {
    bool const interior =
        std::binary_search(graph.interior.begin(), graph.interior.end(), v);
    out << "  " << v << " [label=\"" << format_word(canonical_word(store, v))
        << "\", interior=" << (interior ? "true" : "false") << "];\n";
  }
  for (auto const& e : graph.edges) {
    out << "  " << e.src << " -> " << e.dst << " [color=\"" << to_string(e.color) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string coset_to_dot(CosetGeometry const& geometry, ElementStore const& store) {
  std::ostringstream out;
  out << "graph coset {\n";
  out << "  // " << describe(store.model()) << "\n";
  out << "  node [style=filled];\n";
  for (std::size_t i = 0; i < geometry.h_vertices().size(); ++i) {
    auto const rep = geometry.h_vertices()[i].rep;
    out << "  H" << i << " [type=\"H\", fillcolor=\"red\", label=\""
        << format_word(canonical_word(store, rep)) << " H\"];\n";
  }
  for (std::size_t i = 0; i < geometry.k_vertices().size(); ++i) {
    auto const rep = geometry.k_vertices()[i].rep;
    out << "  K" << i << " [type=\"K\", fillcolor=\"blue\", label=\""
        << format_word(canonical_word(store, rep)) << " K\"];\n";
  }
  for (auto const& e : geometry.edges()) {
    out << "  H" << e.h << " -- K" << e.k << " [label=\""
        << format_word(canonical_word(store, e.label)) << "\", element=" << e.label << "];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

// Maps model coordinates to the SVG viewport (y pointing down).
class Canvas {
 public:
  Canvas(CurvatureClass model, std::vector<SurfacePoint> const& points, RenderStyle const& style)
      : _model(model), _style(style) {
    if (model == CurvatureClass::Spherical) {
      throw std::invalid_argument("spherical tilings are not rendered");
    }
    double const margin = 20.0;
    if (model == CurvatureClass::Hyperbolic) {
      _cx = -1.0;
      _cy = -1.0;
      _scale = (style.size - 2 * margin) / 2.0;
    } else {
      double lo_x = std::numeric_limits<double>::max();
      double lo_y = lo_x;
      double hi_x = std::numeric_limits<double>::lowest();
      double hi_y = hi_x;
      for (auto const& p : points) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
      }
      if (points.empty()) {
        lo_x = lo_y = -1;
        hi_x = hi_y = 1;
      }
      double const span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
      _cx = lo_x;
      _cy = lo_y;
      _scale = (style.size - 2 * margin) / span;
      _hi_y = hi_y;
    }
    _margin = margin;
    if (model == CurvatureClass::Hyperbolic) {
      _hi_y = 1.0;
    }
  }

  double sx(SurfacePoint const& p) const { return _margin + (p.x - _cx) * _scale; }
  double sy(SurfacePoint const& p) const { return _margin + (_hi_y - p.y) * _scale; }
  std::string at(SurfacePoint const& p) const { return fmt(sx(p)) + " " + fmt(sy(p)); }

  // Path data for the geodesic from p to q, without the initial move.
  std::string geodesic_tail(SurfacePoint const& p, SurfacePoint const& q) const {
    if (_model == CurvatureClass::Hyperbolic) {
      // Circle orthogonal to the unit circle: 2 p.c = |p|^2 + 1, same for q.
      double const det = p.x * q.y - p.y * q.x;
      if (std::abs(det) > 1e-9) {
        double const rp = (p.x * p.x + p.y * p.y + 1) / 2;
        double const rq = (q.x * q.x + q.y * q.y + 1) / 2;
        double const cx = (rp * q.y - p.y * rq) / det;
        double const cy = (p.x * rq - rp * q.x) / det;
        double const r = std::sqrt(std::max(cx * cx + cy * cy - 1.0, 0.0));
        double const cross = (p.x - cx) * (q.y - cy) - (p.y - cy) * (q.x - cx);
        std::string const rr = fmt(r * _scale);
        return " A " + rr + " " + rr + " 0 0 " + (cross > 0 ? "1" : "0") + " " + at(q);
      }
    }
    return " L " + at(q);
  }

  std::string geodesic(SurfacePoint const& p, SurfacePoint const& q) const {
    return "M " + at(p) + geodesic_tail(p, q);
  }

  std::string header(SvgCounts const& counts, std::string const& title) const {
    std::string s;
    std::string const size = fmt(_style.size);
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size +
         "\" height=\"" + size + "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
    s += "<title>" + title + "</title>\n";
    s += "<metadata><vd:counts xmlns:vd=\"urn:vondyck:svg\" vertices=\"" +
         std::to_string(counts.vertices) + "\" edges=\"" + std::to_string(counts.edges) +
         "\" tiles=\"" + std::to_string(counts.tiles) + "\"/></metadata>\n";
    if (_style.arrowheads) {
      s += "<defs>\n";
      for (auto const& [id, color] : {std::pair{"arrow-a", _style.a_color},
                                      std::pair{"arrow-b", _style.b_color}}) {
        s += std::string("<marker id=\"") + id +
             "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
             "markerHeight=\"6\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"" +
             color + "\"/></marker>\n";
      }
      s += "</defs>\n";
    }
    if (_model == CurvatureClass::Hyperbolic && _style.disk_boundary) {
      SurfacePoint const o{0, 0, 0};
      s += "<circle cx=\"" + fmt(sx(o)) + "\" cy=\"" + fmt(sy(o)) + "\" r=\"" + fmt(_scale) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    return s;
  }

 private:
  CurvatureClass _model;
  RenderStyle _style;
  double _cx = 0;
  double _cy = 0;
  double _hi_y = 0;
  double _scale = 1;
  double _margin = 0;
};

std::string title_of(PolygonTiling const& tiling, std::string const& what) {
  auto const& p = tiling.geometry().params();
  return what + " " + std::to_string(p.a) + "," + std::to_string(p.b) + "," +
         std::to_string(p.c);
}

std::vector<SurfacePoint> skeleton_points(PolygonTiling const& tiling) {
  std::vector<SurfacePoint> pts;
  for (auto const& v : tiling.vertices()) {
    pts.push_back(v.point);
  }
  return pts;
}

std::string polygon_fills(PolygonTiling const& tiling, Canvas const& canvas,
                          RenderStyle const& style) {
  std::string s = "<g id=\"tiles\" fill=\"" + style.tile_fill + "\" stroke=\"none\">\n";
  for (auto const& poly : tiling.polygons()) {
    std::string d;
    auto const m = poly.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
      auto const& p = tiling.vertices()[static_cast<std::size_t>(poly.vertices[i])].point;
      auto const& q = tiling.vertices()[static_cast<std::size_t>(poly.vertices[(i + 1) % m])].point;
      if (i == 0) {
        d += "M " + canvas.at(p);
      }
      d += canvas.geodesic_tail(p, q);
    }
    s += "<path d=\"" + d + " Z\"/>\n";
  }
  s += "</g>\n";
  return s;
}

std::string skeleton_edges(PolygonTiling const& tiling, Canvas const& canvas,
                           RenderStyle const& style, std::string const& color) {
  std::string s = "<g id=\"edges\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
                  fmt(style.edge_width) + "\">\n";
  for (auto const& e : tiling.edges()) {
    auto const& a = tiling.vertices()[static_cast<std::size_t>(e.a_vertex)].point;
    auto const& b = tiling.vertices()[static_cast<std::size_t>(e.b_vertex)].point;
    s += "<path d=\"" + canvas.geodesic(a, b) + "\"/>\n";
  }
  s += "</g>\n";
  return s;
}

std::string skeleton_vertices(PolygonTiling const& tiling, Canvas const& canvas,
                              RenderStyle const& style) {
  std::string s = "<g id=\"vertices\">\n";
  for (auto const& v : tiling.vertices()) {
    s += "<circle cx=\"" + fmt(canvas.sx(v.point)) + "\" cy=\"" + fmt(canvas.sy(v.point)) +
         "\" r=\"" + fmt(style.vertex_radius) + "\" fill=\"" +
         (v.type == VertexType::A ? style.a_color : style.b_color) + "\"/>\n";
  }
  s += "</g>\n";
  return s;
}

std::string derived_edges(DerivedTiling const& derived, Canvas const& canvas,
                          RenderStyle const& style) {
  std::string s = "<g id=\"derived\" fill=\"none\" stroke-width=\"" + fmt(style.arrow_width) +
                  "\">\n";
  for (auto const& e : derived.edges) {
    auto const& p = derived.midpoints.at(e.src);
    auto const& q = derived.midpoints.at(e.dst);
    bool const a = e.color == VertexType::A;
    s += "<path d=\"" + canvas.geodesic(p, q) + "\" stroke=\"" +
         (a ? style.a_color : style.b_color) + "\"";
    if (style.arrowheads) {
      s += std::string(" marker-end=\"url(#") + (a ? "arrow-a" : "arrow-b") + ")\"";
    }
    s += "/>\n";
  }
  s += "</g>\n";
  return s;
}

std::string midpoint_dots(DerivedTiling const& derived, Canvas const& canvas,
                          RenderStyle const& style) {
  std::string s = "<g id=\"midpoints\" fill=\"black\">\n";
  for (auto const& [id, p] : derived.midpoints) {
    s += "<circle cx=\"" + fmt(canvas.sx(p)) + "\" cy=\"" + fmt(canvas.sy(p)) + "\" r=\"" +
         fmt(style.vertex_radius * 0.7) + "\"/>\n";
  }
  s += "</g>\n";
  return s;
}

// Derived edges whose endpoints both have midpoints.
DerivedTiling drawable(DerivedTiling const& derived) {
  DerivedTiling out;
  out.midpoints = derived.midpoints;
  for (auto const& e : derived.edges) {
    if (derived.midpoints.contains(e.src) && derived.midpoints.contains(e.dst)) {
      out.edges.push_back(e);
    }
  }
  return out;
}

}  // namespace

Svg render_tiling(PolygonTiling const& tiling, RenderStyle const& style) {
  Canvas const canvas(tiling.geometry().model(), skeleton_points(tiling), style);
  Svg svg;
  svg.counts = {tiling.vertices().size(), tiling.edges().size(), tiling.polygons().size()};
  svg.text = canvas.header(svg.counts, title_of(tiling, "polygon tiling"));
  svg.text += polygon_fills(tiling, canvas, style);
  svg.text += skeleton_edges(tiling, canvas, style, style.edge_color);
  svg.text += skeleton_vertices(tiling, canvas, style);
  svg.text += "</svg>\n";
  return svg;
}

Svg render_coset(PolygonTiling const& tiling, RenderStyle const& style) {
  Canvas const canvas(tiling.geometry().model(), skeleton_points(tiling), style);
  Svg svg;
  svg.counts = {tiling.vertices().size(), tiling.edges().size(), 0};
  svg.text = canvas.header(svg.counts, title_of(tiling, "coset geometry"));
  svg.text += skeleton_edges(tiling, canvas, style, "black");
  svg.text += skeleton_vertices(tiling, canvas, style);
  svg.text += "</svg>\n";
  return svg;
}

Svg render_derived(PolygonTiling const& tiling, DerivedTiling const& derived,
                   RenderStyle const& style) {
  Canvas const canvas(tiling.geometry().model(), skeleton_points(tiling), style);
  auto const shown = drawable(derived);
  Svg svg;
  svg.counts = {shown.midpoints.size(), shown.edges.size(), tiling.polygons().size()};
  svg.text = canvas.header(svg.counts, title_of(tiling, "derived tiling"));
  svg.text += polygon_fills(tiling, canvas, style);
  svg.text += skeleton_edges(tiling, canvas, style, "#bbbbbb");
  svg.text += derived_edges(shown, canvas, style);
  svg.text += midpoint_dots(shown, canvas, style);
  svg.text += "</svg>\n";
  return svg;
}

Svg render_cayley(PolygonTiling const& tiling, DerivedTiling const& derived,
                  RenderStyle const& style) {
  Canvas const canvas(tiling.geometry().model(), skeleton_points(tiling), style);
  auto const shown = drawable(derived);
  Svg svg;
  svg.counts = {shown.midpoints.size(), shown.edges.size(), 0};
  svg.text = canvas.header(svg.counts, title_of(tiling, "Cayley graph"));
  svg.text += derived_edges(shown, canvas, style);
  svg.text += midpoint_dots(shown, canvas, style);
  svg.text += "</svg>\n";
  return svg;
}

}  // namespace vondyck::io
