#include "vondyck/tiling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <unordered_set>

namespace vondyck {

namespace {

constexpr double kHalfTurnTolerance = 1e-7;

std::array<double, 3> coords(SurfacePoint const& p) {
  return {p.x, p.y, p.z};
}

Word normalized(Word w, VonDyckParams const& p) {
  return torsion_normalize(free_reduce(std::move(w)), p);
}

Word concat(Word const& a, Word const& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

int order_at(VonDyckParams const& p, VertexType t) {
  return t == VertexType::A ? p.a : p.b;
}

}  // namespace

std::vector<Tile> build_triangle_tiling(ElementStore const& store) {
  auto const* geo = store.geometry();
  if (geo == nullptr) {
    throw std::invalid_argument("triangle tilings need a geometric model");
  }
  auto const model = geo->model();
  auto const& t0 = geo->basic_triangle();
  std::vector<Tile> tiles;
  QuantizedIndex index;
  auto add = [&](SurfacePoint a, SurfacePoint b, SurfacePoint o, Orientation orient,
                 std::optional<ElementId> element) {
    std::array<double, 9> key{a.x, a.y, a.z, b.x, b.y, b.z, o.x, o.y, o.z};
    auto const id = static_cast<std::int32_t>(tiles.size());
    if (index.insert(key, id) != id) {
      return;
    }
    Tile t;
    t.orientation = orient;
    t.element = element;
    if (orient == Orientation::Positive) {
      t.polygon = {{a, VertexType::A}, {b, VertexType::B}, {o, VertexType::O}};
    } else {
      t.polygon = {{o, VertexType::O}, {b, VertexType::B}, {a, VertexType::A}};
    }
    tiles.push_back(std::move(t));
  };
  for (auto const& e : store.elements()) {
    auto const& g = std::get<Isometry>(e.payload);
    add(apply(g, t0.vA), apply(g, t0.vB), apply(g, t0.vO), Orientation::Positive, e.id);
  }
  auto const positives = tiles.size();
  for (std::size_t i = 0; i < positives; ++i) {
    auto const a = tiles[i].polygon[0].point;
    auto const b = tiles[i].polygon[1].point;
    auto const o = tiles[i].polygon[2].point;
    add(a, b, reflect_in_geodesic(model, a, b, o), Orientation::Negative, std::nullopt);
    add(reflect_in_geodesic(model, b, o, a), b, o, Orientation::Negative, std::nullopt);
    add(a, reflect_in_geodesic(model, o, a, b), o, Orientation::Negative, std::nullopt);
  }
  return tiles;
}

std::vector<Tile> build_triangle_tiling(VonDyckParams const& p, int depth) {
  if (depth < 0) {
    throw std::invalid_argument("depth must be non-negative");
  }
  return build_triangle_tiling(enumerate_elements(GeometricModel{p}, depth));
}

std::size_t Skeleton::labeled_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](Edge const& e) { return e.label.has_value(); }));
}

PolygonTiling::PolygonTiling(VonDyckParams const& p) : _geometry(p) {
  Isometry const r = _geometry.evaluate({Letter::Yinv, Letter::Xinv});
  Isometry rk = _geometry.identity();
  Word wk;
  for (int k = 0; k < p.c; ++k) {
    _template.emplace_back(rk, wk);
    rk = compose(rk, r);
    wk.push_back(Letter::Yinv);
    wk.push_back(Letter::Xinv);
    _template.emplace_back(compose(rk, _geometry.generator(Letter::X)),
                           free_reduce(concat(wk, {Letter::X})));
  }
}

PolygonTiling PolygonTiling::from_store(ElementStore const& store) {
  auto const* geo = store.geometry();
  if (geo == nullptr) {
    throw std::invalid_argument("polygon tilings need a geometric model");
  }
  PolygonTiling t(geo->params());
  t._store = &store;
  for (auto const& e : store.elements()) {
    t.add_polygon(std::get<Isometry>(e.payload), e.canonical_word);
  }
  return t;
}

std::int32_t PolygonTiling::vertex_at(SurfacePoint const& p, VertexType type) {
  auto const c = coords(p);
  auto const id = static_cast<std::int32_t>(_vertices.size());
  auto const found = _vertex_index.insert(c, id);
  if (found == id) {
    _vertices.push_back({p, type, {}, {}});
  } else if (_vertices[static_cast<std::size_t>(found)].type != type) {
    throw std::logic_error("skeleton vertex reached with two different types");
  }
  return found;
}

std::int32_t PolygonTiling::edge_for(Isometry const& g, Word const& word) {
  auto const& t0 = _geometry.basic_triangle();
  auto const probe = probe_images(g, t0);
  if (auto hit = _edge_index.find(probe)) {
    return *hit;
  }
  auto const id = static_cast<std::int32_t>(_edges.size());
  _edge_index.insert(probe, id);
  auto const a = vertex_at(apply(g, t0.vA), VertexType::A);
  auto const b = vertex_at(apply(g, t0.vB), VertexType::B);
  std::optional<ElementId> label;
  if (_store != nullptr) {
    label = _store->find(Payload{g});
  }
  _edges.push_back({a, b, g, normalized(word, _geometry.params()), label, {}});
  _vertices[static_cast<std::size_t>(a)].edges.push_back(id);
  _vertices[static_cast<std::size_t>(b)].edges.push_back(id);
  return id;
}

std::int32_t PolygonTiling::add_polygon(Isometry const& g, Word const& word) {
  auto const center = apply(g, _geometry.basic_triangle().vO);
  auto const c = coords(center);
  if (auto hit = _center_index.find(c)) {
    return *hit;
  }
  auto const id = static_cast<std::int32_t>(_polygons.size());
  _center_index.insert(c, id);
  Polygon poly{center, g, normalized(word, _geometry.params()), {}, {}};
  for (std::size_t i = 0; i < _template.size(); ++i) {
    auto const& [t, suffix] = _template[i];
    auto const e = edge_for(compose(g, t), concat(poly.word, suffix));
    auto const& edge = _edges[static_cast<std::size_t>(e)];
    poly.edges.push_back(e);
    poly.vertices.push_back(i % 2 == 0 ? edge.a_vertex : edge.b_vertex);
  }
  for (auto e : poly.edges) {
    _edges[static_cast<std::size_t>(e)].polygons.push_back(id);
  }
  for (auto v : poly.vertices) {
    _vertices[static_cast<std::size_t>(v)].polygons.push_back(id);
  }
  _polygons.push_back(std::move(poly));
  return id;
}

void PolygonTiling::complete_star(std::int32_t vertex) {
  auto const& v = _vertices.at(static_cast<std::size_t>(vertex));
  if (v.edges.empty()) {
    throw std::logic_error("vertex without edges");
  }
  auto const& e = _edges[static_cast<std::size_t>(v.edges.front())];
  Isometry placement = e.element;
  Word word = e.word;
  Letter const gen = v.type == VertexType::A ? Letter::X : Letter::Y;
  int const order = order_at(_geometry.params(), v.type);
  for (int r = 0; r < order; ++r) {
    add_polygon(placement, word);
    placement = compose(placement, _geometry.generator(gen));
    word.push_back(gen);
  }
}

std::vector<std::int32_t> PolygonTiling::star(std::int32_t vertex) const {
  auto const& v = _vertices.at(static_cast<std::size_t>(vertex));
  std::vector<std::pair<double, std::int32_t>> keyed;
  for (auto p : v.polygons) {
    keyed.emplace_back(
        local_angle(_geometry.model(), v.point, _polygons[static_cast<std::size_t>(p)].center), p);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::int32_t> out;
  for (auto const& [angle, p] : keyed) {
    out.push_back(p);
  }
  return out;
}

std::optional<std::int32_t> PolygonTiling::across(std::int32_t edge, std::int32_t polygon) const {
  for (auto p : _edges.at(static_cast<std::size_t>(edge)).polygons) {
    if (p != polygon) {
      return p;
    }
  }
  return std::nullopt;
}

std::optional<std::int32_t> PolygonTiling::find_edge(Isometry const& element) const {
  return _edge_index.find(probe_images(element, _geometry.basic_triangle()));
}

Tile PolygonTiling::as_tile(std::int32_t polygon) const {
  auto const& poly = _polygons.at(static_cast<std::size_t>(polygon));
  Tile t;
  for (auto v : poly.vertices) {
    auto const& vx = _vertices[static_cast<std::size_t>(v)];
    t.polygon.push_back({vx.point, vx.type});
  }
  // Representative of the <xy>-coset: smallest label among g (xy)^-k.
  for (std::size_t i = 0; i < poly.edges.size(); i += 2) {
    auto const& label = _edges[static_cast<std::size_t>(poly.edges[i])].label;
    if (label && (!t.element || *label < *t.element)) {
      t.element = label;
    }
  }
  return t;
}

Skeleton PolygonTiling::skeleton() const {
  Skeleton s;
  for (auto const& v : _vertices) {
    s.vertices.push_back({v.type, v.point});
  }
  for (auto const& e : _edges) {
    s.edges.push_back({e.a_vertex, e.b_vertex, e.label});
  }
  return s;
}

Skeleton abstract_skeleton(ElementStore const& store) {
  if (!store.complete()) {
    throw IncompleteStoreError("abstract skeletons need a complete store");
  }
  auto const n = store.size();
  Skeleton s;
  std::array<std::vector<std::int32_t>, 2> vertex_of{std::vector<std::int32_t>(n, -1),
                                                     std::vector<std::int32_t>(n, -1)};
  std::array<Letter, 2> const gens{Letter::X, Letter::Y};
  std::array<VertexType, 2> const types{VertexType::A, VertexType::B};
  for (std::size_t side = 0; side < 2; ++side) {
    for (ElementId d = 0; d < static_cast<ElementId>(n); ++d) {
      if (vertex_of[side][static_cast<std::size_t>(d)] >= 0) {
        continue;
      }
      auto const v = static_cast<std::int32_t>(s.vertices.size());
      s.vertices.push_back({types[side], std::nullopt});
      ElementId cur = d;
      do {
        vertex_of[side][static_cast<std::size_t>(cur)] = v;
        cur = store.act(cur, gens[side]);
      } while (cur != d);
    }
  }
  for (ElementId d = 0; d < static_cast<ElementId>(n); ++d) {
    s.edges.push_back({vertex_of[0][static_cast<std::size_t>(d)],
                       vertex_of[1][static_cast<std::size_t>(d)], d});
  }
  return s;
}

Skeleton quotient_skeleton(PolygonTiling const& tiling, ElementStore const& quotient) {
  auto const& params = tiling.geometry().params();
  auto const& edges = tiling.edges();
  auto const& vertices = tiling.vertices();
  std::vector<ElementId> qlabel(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    qlabel[i] = quotient.walk(0, edges[i].word);
    if (qlabel[i] == kUnknown) {
      throw std::runtime_error("edge word " + format_word(edges[i].word) +
                               " leaves the quotient store");
    }
  }
  Skeleton s;
  std::map<std::pair<VertexType, std::vector<ElementId>>, std::int32_t> by_labels;
  std::vector<std::int32_t> image(vertices.size(), -1);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    auto const& vx = vertices[v];
    if (static_cast<int>(vx.edges.size()) != order_at(params, vx.type)) {
      continue;
    }
    std::vector<ElementId> labels;
    for (auto e : vx.edges) {
      labels.push_back(qlabel[static_cast<std::size_t>(e)]);
    }
    std::sort(labels.begin(), labels.end());
    auto [it, fresh] =
        by_labels.try_emplace({vx.type, labels}, static_cast<std::int32_t>(s.vertices.size()));
    if (fresh) {
      s.vertices.push_back({vx.type, std::nullopt});
    }
    image[v] = it->second;
  }
  std::map<ElementId, Skeleton::Edge> by_label;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto const a = image[static_cast<std::size_t>(edges[i].a_vertex)];
    auto const b = image[static_cast<std::size_t>(edges[i].b_vertex)];
    if (a < 0 || b < 0) {
      continue;
    }
    Skeleton::Edge const e{a, b, qlabel[i]};
    auto [it, fresh] = by_label.try_emplace(qlabel[i], e);
    if (!fresh && (it->second.a != a || it->second.b != b)) {
      throw std::runtime_error("quotient label " + std::to_string(qlabel[i]) +
                               " lands on two different edges");
    }
  }
  for (auto const& [label, e] : by_label) {
    s.edges.push_back(e);
  }
  return s;
}

VerificationReport identify_skeleton_with_coset_geometry(Skeleton const& skeleton,
                                                         CosetGeometry const& geometry) {
  VerificationReport report{"skeleton of P = coset geometry", {}, 0};
  std::map<ElementId, std::size_t> edge_of_label;
  std::vector<std::vector<ElementId>> labels_at(skeleton.vertices.size());
  for (std::size_t i = 0; i < skeleton.edges.size(); ++i) {
    auto const& e = skeleton.edges[i];
    if (skeleton.vertices.at(static_cast<std::size_t>(e.a)).type != VertexType::A ||
        skeleton.vertices.at(static_cast<std::size_t>(e.b)).type != VertexType::B) {
      report.fail("skeleton edge " + std::to_string(i) + " does not join an A- and a B-vertex");
    }
    if (!e.label) {
      continue;
    }
    if (!edge_of_label.emplace(*e.label, i).second) {
      report.fail("label " + std::to_string(*e.label) + " appears on two skeleton edges");
    }
    labels_at[static_cast<std::size_t>(e.a)].push_back(*e.label);
    labels_at[static_cast<std::size_t>(e.b)].push_back(*e.label);
  }
  for (auto& l : labels_at) {
    std::sort(l.begin(), l.end());
  }

  // Coset -> skeleton vertex, through the edges carrying its members.
  auto map_cosets = [&](std::vector<Coset> const& cosets, bool a_side) {
    std::vector<std::int32_t> image(cosets.size(), -1);
    std::map<std::int32_t, std::size_t> preimage;
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      ++report.checked;
      auto const& coset = cosets[c];
      std::optional<std::int32_t> vertex;
      bool ok = true;
      for (ElementId m : coset.members) {
        auto it = edge_of_label.find(m);
        if (it == edge_of_label.end()) {
          ok = false;
          break;
        }
        auto const& e = skeleton.edges[it->second];
        auto const v = a_side ? e.a : e.b;
        if (vertex && *vertex != v) {
          ok = false;
          break;
        }
        vertex = v;
      }
      std::string const name = std::string(a_side ? "H" : "K") + "-coset of " +
                               std::to_string(coset.rep);
      if (!ok || !vertex) {
        report.fail(name + " is not the star of a single skeleton vertex");
        continue;
      }
      if (labels_at[static_cast<std::size_t>(*vertex)] != coset.members) {
        report.fail(name + " and its skeleton vertex carry different labels");
      }
      if (!preimage.emplace(*vertex, c).second) {
        report.fail(name + " shares its skeleton vertex with another coset");
      }
      image[c] = *vertex;
    }
    return image;
  };
  auto const h_image = map_cosets(geometry.h_vertices(), true);
  auto const k_image = map_cosets(geometry.k_vertices(), false);

  std::set<ElementId> geometry_labels;
  for (auto const& ge : geometry.edges()) {
    ++report.checked;
    geometry_labels.insert(ge.label);
    auto it = edge_of_label.find(ge.label);
    if (it == edge_of_label.end()) {
      report.fail("edge labeled " + std::to_string(ge.label) + " is missing from the skeleton");
      continue;
    }
    auto const& se = skeleton.edges[it->second];
    if (se.a != h_image[static_cast<std::size_t>(ge.h)] ||
        se.b != k_image[static_cast<std::size_t>(ge.k)]) {
      report.fail("edge labeled " + std::to_string(ge.label) + " has different endpoints");
    }
  }
  std::set<std::int32_t> const h_set(h_image.begin(), h_image.end());
  std::set<std::int32_t> const k_set(k_image.begin(), k_image.end());
  for (std::size_t i = 0; i < skeleton.edges.size(); ++i) {
    auto const& e = skeleton.edges[i];
    if (h_set.contains(e.a) && k_set.contains(e.b) &&
        (!e.label || !geometry_labels.contains(*e.label))) {
      report.fail("skeleton edge " + std::to_string(i) +
                  " joins matched vertices but is not a coset-geometry edge");
    }
  }
  return report;
}

int DerivedTiling::degree(ElementId v) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](DerivedEdge const& e) {
    return e.src == v || e.dst == v;
  }));
}

DerivedTiling derived_tiling(PolygonTiling const& tiling) {
  auto const model = tiling.geometry().model();
  auto const& edges = tiling.edges();
  auto const& vertices = tiling.vertices();
  DerivedTiling out;
  for (auto const& e : edges) {
    if (e.label) {
      out.midpoints.emplace(*e.label,
                            geodesic_midpoint(model, vertices[static_cast<std::size_t>(e.a_vertex)].point,
                                              vertices[static_cast<std::size_t>(e.b_vertex)].point));
    }
  }
  auto other_end = [&](PolygonTiling::Edge const& e, std::int32_t v) {
    return vertices[static_cast<std::size_t>(e.a_vertex == v ? e.b_vertex : e.a_vertex)].point;
  };
  for (auto const& poly : tiling.polygons()) {
    auto const m = poly.edges.size();
    for (std::size_t i = 0; i < m; ++i) {
      auto const& e1 = edges[static_cast<std::size_t>(poly.edges[i])];
      auto const& e2 = edges[static_cast<std::size_t>(poly.edges[(i + 1) % m])];
      if (!e1.label || !e2.label) {
        continue;
      }
      auto const v = poly.vertices[(i + 1) % m];
      auto const& vx = vertices[static_cast<std::size_t>(v)];
      double const turn = ccw_turn(model, vx.point, other_end(e1, v), other_end(e2, v));
      if (std::abs(turn - std::numbers::pi) < kHalfTurnTolerance) {
        out.edges.push_back({*e1.label, *e2.label, vx.type});
        out.edges.push_back({*e2.label, *e1.label, vx.type});
      } else if (turn < std::numbers::pi) {
        out.edges.push_back({*e1.label, *e2.label, vx.type});
      } else {
        out.edges.push_back({*e2.label, *e1.label, vx.type});
      }
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

DerivedTiling relabel(DerivedTiling const& derived,
                      std::function<ElementId(ElementId)> const& map) {
  DerivedTiling out;
  for (auto const& e : derived.edges) {
    out.edges.push_back({map(e.src), map(e.dst), e.color});
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

VerificationReport derived_equals_cayley(DerivedTiling const& derived, CayleyGraph const& cayley,
                                         std::span<ElementId const> region) {
  VerificationReport report{"derived tiling = Cayley graph", {}, 0};
  std::set<ElementId> const keep(region.begin(), region.end());
  std::set<CayleyEdge> from_derived;
  for (auto const& e : derived.edges) {
    if (e.color == VertexType::O) {
      report.fail("derived edge colored by an O-vertex");
      continue;
    }
    if (keep.contains(e.src) && keep.contains(e.dst)) {
      from_derived.insert({e.src, e.dst, e.color == VertexType::A ? Color::X : Color::Y});
    }
  }
  std::set<CayleyEdge> from_cayley;
  for (auto const& e : cayley.edges) {
    if (keep.contains(e.src) && keep.contains(e.dst)) {
      from_cayley.insert(e);
    }
  }
  auto describe = [](CayleyEdge const& e) {
    return std::to_string(e.src) + " -" + std::string(to_string(e.color)) + "-> " +
           std::to_string(e.dst);
  };
  for (auto const& e : from_cayley) {
    ++report.checked;
    if (!from_derived.contains(e)) {
      report.fail("Cayley edge " + describe(e) + " has no derived counterpart");
    }
  }
  for (auto const& e : from_derived) {
    if (!from_cayley.contains(e)) {
      ++report.checked;
      report.fail("derived edge " + describe(e) + " is not a Cayley edge");
    }
  }
  return report;
}

VerificationReport derived_equals_cayley(DerivedTiling const& derived, CayleyGraph const& cayley) {
  return derived_equals_cayley(derived, cayley, cayley.vertices);
}

int RingBoundary::hinge_sum() const {
  int s = 0;
  for (int i : hinge_counts) {
    s += i;
  }
  return s;
}

RingBoundary ring_boundary(PolygonTiling& tiling, std::span<std::int32_t const> region) {
  if (region.empty()) {
    throw RingBoundaryError("empty sub-tiling");
  }
  std::set<std::int32_t> const in_q(region.begin(), region.end());
  for (auto p : in_q) {
    if (p < 0 || static_cast<std::size_t>(p) >= tiling.polygons().size()) {
      throw RingBoundaryError("unknown polygon " + std::to_string(p));
    }
  }

  std::set<std::int32_t> reached{*in_q.begin()};
  std::deque<std::int32_t> queue{*in_q.begin()};
  while (!queue.empty()) {
    auto const p = queue.front();
    queue.pop_front();
    for (auto e : tiling.polygons()[static_cast<std::size_t>(p)].edges) {
      for (auto q : tiling.edges()[static_cast<std::size_t>(e)].polygons) {
        if (in_q.contains(q) && reached.insert(q).second) {
          queue.push_back(q);
        }
      }
    }
  }
  if (reached.size() != in_q.size()) {
    throw RingBoundaryError("sub-tiling is not edge-connected");
  }

  for (auto p : in_q) {
    auto const vs = tiling.polygons()[static_cast<std::size_t>(p)].vertices;
    for (auto v : vs) {
      tiling.complete_star(v);
    }
  }

  // Boundary edges, oriented as in their (unique) sub-tiling polygon.
  std::map<std::int32_t, std::pair<std::int32_t, std::int32_t>> ends;
  std::map<std::int32_t, std::int32_t> out_of;
  for (auto p : in_q) {
    auto const& poly = tiling.polygons()[static_cast<std::size_t>(p)];
    auto const m = poly.edges.size();
    for (std::size_t i = 0; i < m; ++i) {
      auto const e = poly.edges[i];
      auto const& ps = tiling.edges()[static_cast<std::size_t>(e)].polygons;
      auto const inside = std::count_if(ps.begin(), ps.end(),
                                        [&](std::int32_t q) { return in_q.contains(q); });
      if (inside != 1) {
        continue;
      }
      auto const from = poly.vertices[i];
      auto const to = poly.vertices[(i + 1) % m];
      ends[e] = {from, to};
      if (!out_of.emplace(from, e).second) {
        throw RingBoundaryError("boundary is not a simple loop: vertex " + std::to_string(from) +
                                " is visited twice");
      }
    }
  }
  if (ends.empty()) {
    throw RingBoundaryError("sub-tiling has no boundary");
  }

  RingBoundary ring;
  auto const start = ends.begin()->first;
  auto e = start;
  do {
    auto const [from, to] = ends.at(e);
    ring.vertices.push_back(from);
    ring.edges.push_back(e);
    auto it = out_of.find(to);
    if (it == out_of.end()) {
      throw RingBoundaryError("boundary is not closed at vertex " + std::to_string(to));
    }
    e = it->second;
    if (ring.edges.size() > ends.size()) {
      throw RingBoundaryError("boundary walk does not close");
    }
  } while (e != start);
  if (ring.edges.size() != ends.size()) {
    throw RingBoundaryError("boundary has " + std::to_string(ends.size()) +
                            " edges but its loop through the first one has " +
                            std::to_string(ring.edges.size()));
  }

  auto const& params = tiling.geometry().params();
  for (auto v : ring.vertices) {
    auto const& vx = tiling.vertices()[static_cast<std::size_t>(v)];
    int const i = static_cast<int>(std::count_if(
        vx.polygons.begin(), vx.polygons.end(), [&](std::int32_t q) { return in_q.contains(q); }));
    if (i < 1 || i > order_at(params, vx.type) - 1) {
      throw RingBoundaryError("boundary vertex " + std::to_string(v) + " has " +
                              std::to_string(i) + " sub-tiling polygons");
    }
    ring.hinge_counts.push_back(i);
  }
  return ring;
}

Enlargement enlarge(PolygonTiling& tiling, std::span<std::int32_t const> region) {
  auto const& params = tiling.geometry().params();
  if (params.a != params.b || params.b != params.c) {
    throw std::invalid_argument("enlargement needs a = b = c");
  }
  int const n = params.a;
  Enlargement out;
  out.boundary = ring_boundary(tiling, region);
  auto const& ring = out.boundary;
  std::set<std::int32_t> const in_q(region.begin(), region.end());
  auto const big_n = static_cast<int>(ring.size());

  auto outside = [&](std::int32_t e) {
    for (auto p : tiling.edges()[static_cast<std::size_t>(e)].polygons) {
      if (!in_q.contains(p)) {
        return p;
      }
    }
    throw EnlargementMismatch("boundary edge " + std::to_string(e) + " has no outer polygon");
  };

  std::set<std::int32_t> seen;
  int listed = 0;
  for (int k = 0; k < big_n; ++k) {
    auto const v = ring.vertices[static_cast<std::size_t>(k)];
    auto const first = outside(ring.edges[static_cast<std::size_t>((k + big_n - 1) % big_n)]);
    auto const last = outside(ring.edges[static_cast<std::size_t>(k)]);
    auto const around = tiling.star(v);
    auto const m = around.size();
    auto const pos = static_cast<std::size_t>(std::find(around.begin(), around.end(), first) -
                                              around.begin());
    if (pos == m) {
      throw EnlargementMismatch("outer polygon missing from the star of vertex " +
                                std::to_string(v));
    }
    for (std::size_t j = 1; first != last; ++j) {
      if (j >= m) {
        throw EnlargementMismatch("walk around vertex " + std::to_string(v) +
                                  " does not reach the next boundary edge");
      }
      auto const t = around[(pos + j) % m];
      if (in_q.contains(t)) {
        throw EnlargementMismatch("walk around vertex " + std::to_string(v) +
                                  " enters the sub-tiling");
      }
      ++listed;
      if (seen.insert(t).second) {
        out.added.push_back(t);
        out.hinges.push_back(v);
      }
      if (t == last) {
        break;
      }
    }
  }

  std::set<std::int32_t> touching;
  for (auto p : in_q) {
    for (auto v : tiling.polygons()[static_cast<std::size_t>(p)].vertices) {
      for (auto q : tiling.vertices()[static_cast<std::size_t>(v)].polygons) {
        if (!in_q.contains(q)) {
          touching.insert(q);
        }
      }
    }
  }
  out.formula_count = big_n * (n - 1) - ring.hinge_sum();
  out.brute_force_count = static_cast<int>(touching.size());
  auto const geometric = static_cast<int>(out.added.size());
  if (listed != geometric || geometric != out.formula_count ||
      out.brute_force_count != out.formula_count) {
    throw EnlargementMismatch("enlargement counts disagree: listed " + std::to_string(listed) +
                              ", distinct " + std::to_string(geometric) + ", formula " +
                              std::to_string(out.formula_count) + ", brute force " +
                              std::to_string(out.brute_force_count));
  }
  out.region.assign(region.begin(), region.end());
  out.region.insert(out.region.end(), out.added.begin(), out.added.end());
  return out;
}

DnnnEnumeration enumerate_dnnn(int n, int rings) {
  if (n < 3) {
    throw std::invalid_argument("enumeration needs n >= 3");
  }
  if (rings < 0) {
    throw std::invalid_argument("rings must be non-negative");
  }
  VonDyckParams const params{n, n, n};
  params.validate();
  DnnnEnumeration out{PolygonTiling(params), {}, {}, {}};
  auto& tiling = out.tiling;
  auto const p0 = tiling.add_polygon(tiling.geometry().identity(), {});
  out.region = {p0};

  std::unordered_set<Fingerprint, FingerprintHash> fingerprints;
  std::set<std::int32_t> listed;
  auto list_edge = [&](std::int32_t e) {
    if (!listed.insert(e).second) {
      return;
    }
    auto const& edge = tiling.edges()[static_cast<std::size_t>(e)];
    auto const fp = tiling.geometry().fingerprint(edge.element);
    if (!fingerprints.insert(fp).second) {
      throw EnlargementMismatch("edge " + format_word(edge.word) + " repeats an earlier element");
    }
    out.edges.push_back({static_cast<std::int64_t>(out.edges.size()), edge.word, fp, e});
  };
  auto list_polygon = [&](std::int32_t p, std::int32_t from_vertex) {
    auto const poly = tiling.polygons()[static_cast<std::size_t>(p)];
    auto const m = poly.edges.size();
    auto const start = static_cast<std::size_t>(
        std::find(poly.vertices.begin(), poly.vertices.end(), from_vertex) - poly.vertices.begin());
    for (std::size_t j = 0; j < m; ++j) {
      list_edge(poly.edges[(start + j) % m]);
    }
  };
  list_polygon(p0, tiling.polygons()[static_cast<std::size_t>(p0)].vertices.front());

  for (int r = 1; r <= rings; ++r) {
    Enlargement step;
    try {
      step = enlarge(tiling, out.region);
    } catch (RingBoundaryError const& err) {
      throw RingBoundaryError("ring " + std::to_string(r) + ": " + err.what());
    } catch (EnlargementMismatch const& err) {
      throw EnlargementMismatch("ring " + std::to_string(r) + ": " + err.what());
    }
    for (std::size_t i = 0; i < step.added.size(); ++i) {
      list_polygon(step.added[i], step.hinges[i]);
    }
    out.rings.push_back({static_cast<int>(step.boundary.size()), step.boundary.hinge_sum(),
                         static_cast<int>(step.added.size()), step.formula_count,
                         step.brute_force_count});
    out.region = std::move(step.region);
  }
  return out;
}

}  // namespace vondyck
