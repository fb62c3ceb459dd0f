#include "vondyck/coset.hpp"

#include <algorithm>
#include <stdexcept>

namespace vondyck {

bool Coset::contains(ElementId d) const {
  return std::binary_search(members.begin(), members.end(), d);
}

int Coset::position(ElementId d) const {
  auto it = std::find(cycle.begin(), cycle.end(), d);
  if (it == cycle.end()) {
    throw std::invalid_argument("element " + std::to_string(d) + " is not in the coset");
  }
  return static_cast<int>(it - cycle.begin());
}

namespace {

std::optional<std::int32_t> lookup(std::vector<std::int32_t> const& v, ElementId d) {
  if (d < 0 || static_cast<std::size_t>(d) >= v.size() || v[static_cast<std::size_t>(d)] < 0) {
    return std::nullopt;
  }
  return v[static_cast<std::size_t>(d)];
}

// The orbit of d under right multiplication by `g`, or empty if it leaves the
// known part of the store or touches a non-interior element.
std::vector<ElementId> interior_orbit(ElementStore const& store, ElementId d, Letter g) {
  std::vector<ElementId> orbit;
  ElementId cur = d;
  do {
    if (cur == kUnknown || !store.is_interior(cur) ||
        orbit.size() > store.size()) {
      return {};
    }
    orbit.push_back(cur);
    cur = store.act(cur, g);
  } while (cur != d);
  return orbit;
}

void collect_cosets(ElementStore const& store, CosetType type, std::vector<Coset>& out,
                    std::vector<std::int32_t>& index_of) {
  Letter const g = type == CosetType::H ? Letter::X : Letter::Y;
  index_of.assign(store.size(), -1);
  std::vector<char> rejected(store.size(), 0);
  for (ElementId d = 0; d < static_cast<ElementId>(store.size()); ++d) {
    auto const u = static_cast<std::size_t>(d);
    if (index_of[u] >= 0 || rejected[u]) {
      continue;
    }
    // d is the smallest id not yet placed, hence the minimum of its coset.
    auto orbit = interior_orbit(store, d, g);
    if (orbit.empty()) {
      rejected[u] = 1;
      continue;
    }
    Coset c;
    c.type = type;
    c.rep = d;
    c.cycle = orbit;
    c.members = std::move(orbit);
    std::sort(c.members.begin(), c.members.end());
    auto const idx = static_cast<std::int32_t>(out.size());
    for (ElementId m : c.members) {
      index_of[static_cast<std::size_t>(m)] = idx;
    }
    out.push_back(std::move(c));
  }
}

}  // namespace

std::optional<std::int32_t> CosetGeometry::h_of(ElementId d) const {
  return lookup(_h_of, d);
}

std::optional<std::int32_t> CosetGeometry::k_of(ElementId d) const {
  return lookup(_k_of, d);
}

std::optional<std::int32_t> CosetGeometry::edge_of_label(ElementId d) const {
  return lookup(_edge_of, d);
}

std::optional<std::int32_t> CosetGeometry::edge_between(std::int32_t h, std::int32_t k) const {
  CosetEdge const probe{h, k, kUnknown};
  auto it = std::lower_bound(_edges.begin(), _edges.end(), probe);
  if (it == _edges.end() || it->h != h || it->k != k) {
    return std::nullopt;
  }
  return static_cast<std::int32_t>(it - _edges.begin());
}

std::vector<ElementId> CosetGeometry::labels() const {
  std::vector<ElementId> out;
  out.reserve(_edges.size());
  for (auto const& e : _edges) {
    out.push_back(e.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

kernels::IncidenceTables CosetGeometry::incidence(std::size_t store_size) const {
  kernels::IncidenceTables t;
  t.h_of.assign(_h_of.begin(), _h_of.end());
  t.k_of.assign(_k_of.begin(), _k_of.end());
  t.h_of.resize(store_size, -1);
  t.k_of.resize(store_size, -1);
  for (auto const& c : _h) {
    t.h_rep.push_back(c.rep);
  }
  for (auto const& c : _k) {
    t.k_rep.push_back(c.rep);
  }
  for (auto const& e : _edges) {
    t.edges.push_back({e.h, e.k, e.label});
  }
  return t;
}

CosetGeometry build_coset_geometry(ElementStore const& store) {
  CosetGeometry g;
  collect_cosets(store, CosetType::H, g._h, g._h_of);
  collect_cosets(store, CosetType::K, g._k, g._k_of);
  for (ElementId d = 0; d < static_cast<ElementId>(store.size()); ++d) {
    auto const h = g._h_of[static_cast<std::size_t>(d)];
    auto const k = g._k_of[static_cast<std::size_t>(d)];
    if (h >= 0 && k >= 0) {
      g._edges.push_back({h, k, d});
    }
  }
  std::sort(g._edges.begin(), g._edges.end());
  g._edge_of.assign(store.size(), -1);
  for (std::size_t i = 0; i < g._edges.size(); ++i) {
    g._edge_of[static_cast<std::size_t>(g._edges[i].label)] = static_cast<std::int32_t>(i);
  }
  return g;
}

ElementId edge_label(CosetGeometry const& geometry, std::int32_t h, std::int32_t k) {
  auto const e = geometry.edge_between(h, k);
  if (!e) {
    throw std::invalid_argument("cosets " + std::to_string(h) + " and " + std::to_string(k) +
                                " do not intersect");
  }
  return geometry.edges()[static_cast<std::size_t>(*e)].label;
}

std::int32_t b_map(CosetGeometry const& geometry, ElementId d) {
  auto const e = geometry.edge_of_label(d);
  if (!e) {
    throw std::out_of_range("element " + std::to_string(d) +
                            " has no realized edge in the coset geometry");
  }
  return *e;
}

Word GeneratorPower::word() const {
  return Word(static_cast<std::size_t>(exponent), generator);
}

GeneratorPower psi(CosetGeometry const& geometry, std::int32_t e1, std::int32_t e2) {
  auto const& edges = geometry.edges();
  auto const& a = edges.at(static_cast<std::size_t>(e1));
  auto const& b = edges.at(static_cast<std::size_t>(e2));
  if (e1 == e2) {
    return {Letter::X, 0};
  }
  if (a.h == b.h) {
    auto const& c = geometry.h_vertices()[static_cast<std::size_t>(a.h)];
    int const n = static_cast<int>(c.cycle.size());
    int const r = ((c.position(b.label) - c.position(a.label)) % n + n) % n;
    return {Letter::X, r};
  }
  if (a.k == b.k) {
    auto const& c = geometry.k_vertices()[static_cast<std::size_t>(a.k)];
    int const n = static_cast<int>(c.cycle.size());
    int const s = ((c.position(b.label) - c.position(a.label)) % n + n) % n;
    return {Letter::Y, s};
  }
  throw std::invalid_argument("edges " + std::to_string(e1) + " and " + std::to_string(e2) +
                              " are not incident");
}

namespace {

// g * members(c) as a sorted set.
std::vector<ElementId> translate(std::vector<ElementId> const& table, std::size_t n, ElementId g,
                                 Coset const& c) {
  std::vector<ElementId> out;
  out.reserve(c.members.size());
  for (ElementId m : c.members) {
    out.push_back(table[static_cast<std::size_t>(g) * n + static_cast<std::size_t>(m)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

VerificationReport verify_edge_action(CosetGeometry const& geometry, ElementStore const& store,
                                      kernels::Execution exec) {
  if (!store.complete()) {
    throw IncompleteStoreError("edge action verification needs a complete store");
  }
  VerificationReport report{"edge-transitive and edge-regular action", {}, 0};
  auto const n = store.size();
  auto const basic = geometry.basic_edge();
  if (!basic) {
    report.fail("no basic edge");
    return report;
  }
  auto const table = kernels::multiplication_table(store, exec);
  auto const& h0 = geometry.h_vertices()[static_cast<std::size_t>(geometry.edges()[*basic].h)];
  auto const& k0 = geometry.k_vertices()[static_cast<std::size_t>(geometry.edges()[*basic].k)];
  if (geometry.edges().size() != n) {
    report.fail("edge count " + std::to_string(geometry.edges().size()) +
                " differs from group order " + std::to_string(n));
  }
  // Transitivity: each edge is the translate of the basic edge by its label.
  for (auto const& e : geometry.edges()) {
    ++report.checked;
    auto const& h = geometry.h_vertices()[static_cast<std::size_t>(e.h)];
    auto const& k = geometry.k_vertices()[static_cast<std::size_t>(e.k)];
    if (translate(table, n, e.label, h0) != h.members ||
        translate(table, n, e.label, k0) != k.members) {
      report.fail("edge labeled " + std::to_string(e.label) +
                  " is not the translate of the basic edge by its label");
    }
  }
  // Regularity: the stabilizer of the basic edge is trivial.
  for (ElementId g = 0; g < static_cast<ElementId>(n); ++g) {
    ++report.checked;
    bool const fixes = translate(table, n, g, h0) == h0.members &&
                       translate(table, n, g, k0) == k0.members;
    if (fixes != (g == 0)) {
      report.fail("element " + std::to_string(g) +
                  (fixes ? " stabilizes the basic edge" : " (identity) moves the basic edge"));
    }
  }
  return report;
}

VerificationReport verify_b_equivariance(CosetGeometry const& geometry,
                                         ElementStore const& store, kernels::Execution exec) {
  if (!store.complete()) {
    throw IncompleteStoreError("b-equivariance verification needs a complete store");
  }
  VerificationReport report{"b(g d) = g b(d)", {}, 0};
  auto const n = store.size();
  auto const table = kernels::multiplication_table(store, exec);
  auto const violations =
      kernels::equivariance_violations(geometry.incidence(n), table, n, exec);
  report.checked = n * n;
  for (auto const& v : violations) {
    report.fail("g=" + std::to_string(v.g) + " d=" + std::to_string(v.d) +
                ": translated edge carries label " + std::to_string(v.found));
  }
  return report;
}

CayleyGraph reconstruct_cayley(CosetGeometry const& geometry) {
  CayleyGraph out;
  out.vertices = geometry.labels();
  auto const& edges = geometry.edges();
  std::vector<std::vector<std::int32_t>> at_h(geometry.h_vertices().size());
  std::vector<std::vector<std::int32_t>> at_k(geometry.k_vertices().size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    at_h[static_cast<std::size_t>(edges[i].h)].push_back(static_cast<std::int32_t>(i));
    at_k[static_cast<std::size_t>(edges[i].k)].push_back(static_cast<std::int32_t>(i));
  }
  auto emit_star = [&](std::vector<std::int32_t> const& star, Letter gen, Color color) {
    for (auto e1 : star) {
      for (auto e2 : star) {
        if (psi(geometry, e1, e2) == GeneratorPower{gen, 1}) {
          out.edges.push_back({edges[static_cast<std::size_t>(e1)].label,
                               edges[static_cast<std::size_t>(e2)].label, color});
        }
      }
    }
  };
  for (auto const& star : at_h) {
    emit_star(star, Letter::X, Color::X);
  }
  for (auto const& star : at_k) {
    emit_star(star, Letter::Y, Color::Y);
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  // A vertex is interior when both of its stars are fully realized.
  for (ElementId d : out.vertices) {
    auto const e = *geometry.edge_of_label(d);
    auto const& h = geometry.h_vertices()[static_cast<std::size_t>(edges[e].h)];
    auto const& k = geometry.k_vertices()[static_cast<std::size_t>(edges[e].k)];
    if (at_h[static_cast<std::size_t>(edges[e].h)].size() == h.members.size() &&
        at_k[static_cast<std::size_t>(edges[e].k)].size() == k.members.size()) {
      out.interior.push_back(d);
    }
  }
  return out;
}

}  // namespace vondyck
