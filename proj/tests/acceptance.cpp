// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vondyck/coset.hpp"
#include "vondyck/io.hpp"
#include "vondyck/pipeline.hpp"
#include "vondyck/tiling.hpp"

using namespace vondyck;

namespace {

constexpr double kRelatorTolerance = 1e-9;
constexpr int kSampledCases = 1000;
constexpr int kMaxCoverDepth = 14;

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, std::string const& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;  // <= 0: untimed
  std::function<Outcome()> body;
};

ElementStore closed(GroupModel const& m) {
  return enumerate_elements(m, std::nullopt);
}

std::string summary(VerificationReport const& r) {
  return r.check + ": " + (r.violations.empty() ? "ok" : r.violations.front());
}

Outcome ac1() {
  Outcome o;
  auto const s = closed(ToyZ6Model{});
  auto const g = build_coset_geometry(s);
  auto const c = build_cayley(s);
  o.expect(g.h_vertices().size() == 3, "H-vertices != 3");
  o.expect(g.k_vertices().size() == 2, "K-vertices != 2");
  o.expect(g.edges().size() == 6, "edges != 6");
  o.expect(c.vertices.size() == 6, "Cayley vertices != 6");
  o.expect(c.count(Color::X) == 6 && c.count(Color::Y) == 6, "colored edge counts != 6");
  std::set<std::int32_t> image;
  for (auto const& e : s.elements()) {
    auto const b = b_map(g, e.id);
    image.insert(b);
    o.expect(g.edges()[static_cast<std::size_t>(b)].label == e.id, "b is not inverse to the labeling");
  }
  o.expect(image.size() == 6, "b is not a bijection");
  o.expect(reconstruct_cayley(g) == c, "psi-reconstruction differs from the Cayley graph");
  return o;
}

Outcome ac2() {
  Outcome o;
  std::vector<B23NormalForm> all;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) all.push_back({a, b, c});
  for (auto const& u : all) {
    for (auto const& v : all) {
      auto const p = b23_multiply(u, v);
      auto const want = oracle::b23_rewrite(oracle::b23_word({u.alpha, u.beta, u.gamma}) +
                                            oracle::b23_word({v.alpha, v.beta, v.gamma}));
      o.expect((std::array<int, 3>{p.alpha, p.beta, p.gamma}) == want, "b23_multiply disagrees with rewriting");
    }
  }
  if (!o.ok) return o;
  auto const s = closed(BurnsideB23Model{});
  auto const g = build_coset_geometry(s);
  o.expect(s.size() == 27, "order != 27");
  o.expect(g.h_vertices().size() == 9 && g.k_vertices().size() == 9, "coset vertices != 9 + 9");
  o.expect(g.edges().size() == 27, "edges != 27");
  o.expect(build_cayley(s).vertices.size() == 27, "Cayley vertices != 27");
  auto const d = verify_duality(BurnsideB23Model{}, std::nullopt);
  for (auto const& r : d.reports) o.expect(r.passed(), summary(r));
  return o;
}

Outcome ac3() {
  Outcome o;
  std::vector<std::pair<VonDyckParams, std::size_t>> cases{
      {{2, 3, 3}, 12}, {{2, 3, 4}, 24}, {{2, 3, 5}, 60}};
  for (int c = 2; c <= 6; ++c) cases.push_back({{2, 2, c}, static_cast<std::size_t>(2 * c)});
  for (auto const& [p, size] : cases) {
    auto const tag = std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c);
    auto const s = closed(GeometricModel{p});
    o.expect(s.complete() && s.size() == size, "store size for " + tag);
    o.expect(oracle::spherical_closure_size(p.a, p.b, p.c) == static_cast<int>(size),
             "matrix-closure oracle for " + tag);
    auto const& t0 = s.geometry()->basic_triangle();
    for (auto const& [l, n] : {std::pair{Letter::X, p.a}, std::pair{Letter::Y, p.b}}) {
      o.expect(max_probe_displacement(evaluate_word(Word(static_cast<std::size_t>(n), l), p), t0) < kRelatorTolerance,
               "relator residual for " + tag);
    }
    Word xyc;
    for (int i = 0; i < p.c; ++i) {
      xyc.push_back(Letter::X);
      xyc.push_back(Letter::Y);
    }
    o.expect(max_probe_displacement(evaluate_word(xyc, p), t0) < kRelatorTolerance, "(xy)^c residual for " + tag);
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  try {
    PolygonTiling t({3, 3, 3});
    std::vector<std::int32_t> q{t.add_polygon(t.geometry().identity(), {})};
    auto const first = enlarge(t, q);
    o.expect(first.added.size() == 6, "(3,3,3) ring 1 adds " + std::to_string(first.added.size()));
    o.expect(first.formula_count == 6, "(3,3,3) ring 1 formula");
    auto const second = enlarge(t, first.region);
    auto const n = static_cast<int>(second.boundary.size());
    int const formula = n * 2 - second.boundary.hinge_sum();
    o.expect(n == 18, "(3,3,3) ring 2 boundary has " + std::to_string(n) + " edges");
    o.expect(static_cast<int>(second.added.size()) == formula, "(3,3,3) ring 2 formula mismatch");
    o.expect(second.formula_count == formula && second.brute_force_count == formula, "(3,3,3) ring 2 counts");
    PolygonTiling h({4, 4, 4});
    std::vector<std::int32_t> r{h.add_polygon(h.geometry().identity(), {})};
    auto const oct = enlarge(h, r);
    o.expect(oct.added.size() == 16 && oct.formula_count == 16, "(4,4,4) ring 1 adds " + std::to_string(oct.added.size()));
    o.detail = o.ok ? "added 6, " + std::to_string(second.added.size()) + "; 16" : o.detail;
  } catch (std::exception const& e) {
    o.expect(false, e.what());
  }
  return o;
}

// Elements d with d(O) or (d x^-1)(O) the center of a polygon of the region.
Outcome ac5_case(int n, int rings) {
  Outcome o;
  auto const tag = "n=" + std::to_string(n);
  std::optional<DnnnEnumeration> run;
  try {
    run.emplace(enumerate_dnnn(n, rings));
  } catch (std::exception const& e) {
    o.expect(false, tag + ": " + e.what());
    return o;
  }
  auto const& en = *run;
  std::set<Fingerprint> fps;
  for (auto const& row : en.edges) fps.insert(row.fingerprint);
  o.expect(fps.size() == en.edges.size(), tag + ": repeated fingerprint");

  VonDyckParams const p{n, n, n};
  DyckGeometry const geo(p);
  auto const o_point = geo.basic_triangle().vO;
  QuantizedIndex centers;
  for (auto q : en.region) {
    auto const c = en.tiling.polygons()[static_cast<std::size_t>(q)].center;
    std::array<double, 3> const v{c.x, c.y, c.z};
    centers.insert(v, q);
  }
  auto const x_inv = geo.generator(Letter::Xinv);
  for (int depth = 4; depth <= kMaxCoverDepth; ++depth) {
    auto const s = enumerate_elements(GeometricModel{p}, depth);
    std::set<ElementId> listed;
    bool missing = false;
    for (auto const& row : en.edges) {
      auto const id = s.find(Payload{geo.evaluate(row.word)});
      if (!id) {
        missing = true;
        break;
      }
      listed.insert(*id);
    }
    if (missing) continue;
    std::set<ElementId> region;
    for (auto const& e : s.elements()) {
      auto const& g = std::get<Isometry>(e.payload);
      auto const c1 = apply(g, o_point);
      auto const c2 = apply(compose(g, x_inv), o_point);
      std::array<double, 3> const v1{c1.x, c1.y, c1.z}, v2{c2.x, c2.y, c2.z};
      if (centers.find(v1) || centers.find(v2)) region.insert(e.id);
    }
    o.expect(listed == region, tag + ": enumerated set differs from the BFS region");
    o.detail = tag + " " + std::to_string(listed.size()) + " elements at depth " + std::to_string(depth);
    return o;
  }
  o.expect(false, tag + ": enumerated elements not reached by BFS up to depth " + std::to_string(kMaxCoverDepth));
  return o;
}

Outcome ac5() {
  auto a = ac5_case(3, 3);
  if (!a.ok) return a;
  auto b = ac5_case(4, 2);
  if (b.ok) b.detail = a.detail + "; " + b.detail;
  return b;
}

Outcome ac6() {
  Outcome o;
  std::set<std::string> const required{"psi-reconstruction = Cayley graph (region)", "skeleton of P = coset geometry",
                                       "derived tiling = Cayley graph (region)"};
  for (auto [p, depth] : {std::pair{VonDyckParams{3, 3, 3}, 4}, std::pair{VonDyckParams{4, 4, 4}, 2}}) {
    auto const d = verify_duality(GeometricModel{p}, depth);
    std::set<std::string> seen;
    for (auto const& r : d.reports) {
      o.expect(r.passed(), summary(r));
      o.expect(r.checked > 0, r.check + " checked nothing");
      seen.insert(r.check);
    }
    for (auto const& name : required) o.expect(seen.count(name) == 1, "missing check " + name);
  }
  return o;
}

// Property suites on one geometry: exhaustive when `sample` is false.
struct PropertyCounts {
  long intersections = 0;
  long equivariance = 0;
  long cocycle = 0;
  long cycles = 0;
};

void properties(ElementStore const& s, bool sample, Outcome& o, PropertyCounts& n, std::mt19937_64& rng) {
  auto const g = build_coset_geometry(s);
  auto const tag = describe(s.model());
  VonDyckParams p{2, 3, 6};
  if (auto const* geo = s.geometry()) p = geo->params();
  int const a = static_cast<int>(g.h_vertices().front().members.size());
  int const b = static_cast<int>(g.k_vertices().front().members.size());
  if (std::holds_alternative<BurnsideB23Model>(s.model())) p = {3, 3, 3};
  int const c = p.c;
  auto const trials = [&](std::size_t full) { return sample ? static_cast<std::size_t>(kSampledCases) : full; };
  std::uniform_int_distribution<std::size_t> pick_h(0, g.h_vertices().size() - 1);
  std::uniform_int_distribution<std::size_t> pick_k(0, g.k_vertices().size() - 1);
  std::uniform_int_distribution<std::size_t> pick_e(0, g.edges().size() - 1);
  std::uniform_int_distribution<std::size_t> pick_s(0, s.size() - 1);

  // |H-coset n K-coset| <= 1.
  auto const hk = g.h_vertices().size() * g.k_vertices().size();
  for (std::size_t t = 0; t < trials(hk); ++t) {
    auto const h = sample ? pick_h(rng) : t / g.k_vertices().size();
    auto const k = sample ? pick_k(rng) : t % g.k_vertices().size();
    auto const& hm = g.h_vertices()[h].members;
    auto const& km = g.k_vertices()[k].members;
    std::vector<ElementId> common;
    std::set_intersection(hm.begin(), hm.end(), km.begin(), km.end(), std::back_inserter(common));
    o.expect(common.size() <= 1, tag + ": two cosets meet twice");
    ++n.intersections;
  }

  // label(g e) = g label(e) and b(g d) = g b(d), with g d computed by left multiplication.
  auto left = [&](ElementId x, ElementId d) -> ElementId {
    if (s.complete()) return multiply(s, x, d);
    auto const prod = compose(std::get<Isometry>(s.element(x).payload), std::get<Isometry>(s.element(d).payload));
    auto const hit = s.find(Payload{prod});
    return hit ? *hit : kUnknown;
  };
  std::size_t const pairs = s.size() * g.edges().size();
  long tested = 0;
  std::size_t const attempts = sample ? trials(pairs) * 50 : pairs;
  for (std::size_t t = 0; tested < static_cast<long>(trials(pairs)) && t < attempts; ++t) {
    auto const x = static_cast<ElementId>(sample ? pick_s(rng) : t / g.edges().size());
    auto const& e = g.edges()[sample ? pick_e(rng) : t % g.edges().size()];
    auto const xd = left(x, e.label);
    auto const xh = left(x, g.h_vertices()[static_cast<std::size_t>(e.h)].rep);
    auto const xk = left(x, g.k_vertices()[static_cast<std::size_t>(e.k)].rep);
    if (xd == kUnknown || xh == kUnknown || xk == kUnknown) continue;
    auto const h2 = g.h_of(xh);
    auto const k2 = g.k_of(xk);
    auto const bd = g.edge_of_label(xd);
    if (!h2 || !k2 || !bd) continue;
    auto const moved = g.edge_between(*h2, *k2);
    o.expect(moved.has_value(), tag + ": translated edge missing");
    if (moved) {
      o.expect(g.edges()[static_cast<std::size_t>(*moved)].label == xd, tag + ": label equivariance");
      o.expect(*moved == *bd, tag + ": b-equivariance");
    }
    ++tested;
  }
  o.expect(tested >= static_cast<long>(trials(pairs)), tag + ": too few equivariance cases");
  n.equivariance += tested;

  // psi(e1, e3) = psi(e1, e2) psi(e2, e3) on vertex stars.
  std::map<std::int32_t, std::vector<std::int32_t>> h_star, k_star;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    h_star[g.edges()[i].h].push_back(static_cast<std::int32_t>(i));
    k_star[g.edges()[i].k].push_back(static_cast<std::int32_t>(i));
  }
  // Stars cut by the truncation are skipped.
  auto cocycle = [&](std::vector<std::int32_t> const& star, int order, std::int32_t e1, std::int32_t e2,
                     std::int32_t e3) {
    if (star.size() != static_cast<std::size_t>(order)) return;
    auto const p12 = psi(g, e1, e2);
    auto const p23 = psi(g, e2, e3);
    auto const p13 = psi(g, e1, e3);
    o.expect((p12.exponent + p23.exponent) % order == p13.exponent, tag + ": psi cocycle");
    ++n.cocycle;
  };
  if (sample) {
    std::uniform_int_distribution<int> which(0, 1);
    auto const before = n.cocycle;
    for (int t = 0; n.cocycle - before < kSampledCases && t < 50 * kSampledCases; ++t) {
      auto const& e = g.edges()[pick_e(rng)];
      bool const at_h = which(rng) == 0;
      auto const& star = at_h ? h_star[e.h] : k_star[e.k];
      std::uniform_int_distribution<std::size_t> pick(0, star.size() - 1);
      cocycle(star, at_h ? a : b, star[pick(rng)], star[pick(rng)], star[pick(rng)]);
    }
  } else {
    for (auto const* stars : {&h_star, &k_star}) {
      for (auto const& [v, star] : *stars) {
        for (auto e1 : star)
          for (auto e2 : star)
            for (auto e3 : star) cocycle(star, stars == &h_star ? a : b, e1, e2, e3);
      }
    }
  }

  // First-return lengths of x, y and xy divide a, b and c.
  auto const cycles_before = n.cycles;
  std::size_t const cycle_attempts = sample ? 50 * static_cast<std::size_t>(kSampledCases) : s.size();
  for (std::size_t t = 0; t < cycle_attempts && (!sample || n.cycles - cycles_before < kSampledCases); ++t) {
    auto const d = static_cast<ElementId>(sample ? pick_s(rng) : t);
    for (auto const& [w, order] : {std::pair{Word{Letter::X}, a}, std::pair{Word{Letter::Y}, b},
                                   std::pair{Word{Letter::X, Letter::Y}, c}}) {
      ElementId u = d;
      int len = 0;
      do {
        u = s.walk(u, w);
        ++len;
      } while (u != kUnknown && u != d && len <= order);
      if (u == kUnknown) continue;
      o.expect(u == d && order % len == 0, tag + ": cycle length " + std::to_string(len));
      ++n.cycles;
    }
  }
}

Outcome ac7() {
  Outcome o;
  PropertyCounts n;
  std::mt19937_64 rng(0x5eed);
  for (GroupModel const& m : {GroupModel{ToyZ6Model{}}, GroupModel{BurnsideB23Model{}},
                              GroupModel{GeometricModel{{2, 3, 5}}}}) {
    properties(closed(m), false, o, n, rng);
  }
  PropertyCounts sampled;
  for (auto [p, depth] : {std::pair{VonDyckParams{3, 3, 3}, 8}, std::pair{VonDyckParams{4, 4, 4}, 6},
                          std::pair{VonDyckParams{2, 3, 7}, 12}}) {
    PropertyCounts one;
    properties(enumerate_elements(GeometricModel{p}, depth), true, o, one, rng);
    o.expect(one.intersections >= kSampledCases && one.equivariance >= kSampledCases &&
                 one.cocycle >= kSampledCases && one.cycles >= kSampledCases,
             "fewer than 1000 sampled cases on a truncated model");
    sampled.intersections += one.intersections;
    sampled.equivariance += one.equivariance;
    sampled.cocycle += one.cocycle;
    sampled.cycles += one.cycles;
  }
  if (o.ok) {
    std::ostringstream s;
    s << "exhaustive " << n.intersections + n.equivariance + n.cocycle + n.cycles << ", sampled "
      << sampled.intersections + sampled.equivariance + sampled.cocycle + sampled.cycles;
    o.detail = s.str();
  }
  return o;
}

std::size_t group_size(boost::property_tree::ptree const& svg, std::string const& id) {
  for (auto const& [name, child] : svg) {
    if (name == "g" && child.get<std::string>("<xmlattr>.id", "") == id) {
      std::size_t k = 0;
      for (auto const& [cname, c] : child) k += cname != "<xmlattr>";
      return k;
    }
  }
  return 0;
}

Outcome ac8() {
  Outcome o;
  namespace pt = boost::property_tree;
  auto check = [&](std::string const& tag, io::Svg const& svg, std::size_t vertices, std::size_t edges,
                   std::size_t tiles, std::string const& vgroup, std::string const& egroup) {
    pt::ptree tree;
    try {
      std::istringstream in(svg.text);
      pt::read_xml(in, tree);
    } catch (std::exception const& e) {
      o.expect(false, tag + ": not well-formed XML: " + e.what());
      return;
    }
    auto const root = tree.get_child_optional("svg");
    o.expect(root.has_value(), tag + ": no svg root");
    if (!root) return;
    auto const counts = root->get_child_optional("metadata.vd:counts.<xmlattr>");
    o.expect(counts.has_value(), tag + ": no metadata counts");
    if (!counts) return;
    o.expect(counts->get<std::size_t>("vertices") == vertices, tag + ": vertex count");
    o.expect(counts->get<std::size_t>("edges") == edges, tag + ": edge count");
    o.expect(counts->get<std::size_t>("tiles") == tiles, tag + ": tile count");
    o.expect(group_size(*root, vgroup) == vertices, tag + ": drawn vertices");
    o.expect(group_size(*root, egroup) == edges, tag + ": drawn edges");
    o.expect(group_size(*root, "tiles") == tiles, tag + ": drawn tiles");
  };
  auto const s3 = enumerate_elements(GeometricModel{{3, 3, 3}}, 4);
  auto const t3 = PolygonTiling::from_store(s3);
  auto const d3 = derived_tiling(t3);
  check("(3,3,3) derived", io::render_derived(t3, d3), d3.midpoints.size(), d3.edges.size(), t3.polygons().size(),
        "midpoints", "derived");
  auto const s4 = enumerate_elements(GeometricModel{{4, 4, 4}}, 3);
  auto const t4 = PolygonTiling::from_store(s4);
  check("(4,4,4) tiling", io::render_tiling(t4), t4.vertices().size(), t4.edges().size(), t4.polygons().size(),
        "vertices", "edges");
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {"AC1", "Z6 toy model", 1, ac1},
      {"AC2", "B(2,3) exhaustive duality", 5, ac2},
      {"AC3", "spherical closure", 10, ac3},
      {"AC4", "ring counts", 10, ac4},
      {"AC5", "enumeration injectivity and coverage", 30, ac5},
      {"AC6", "truncated duality on (3,3,3) and (4,4,4)", 60, ac6},
      {"AC7", "property suites", 0, ac7},
      {"AC8", "SVG smoke tests", 0, ac8},
  };
  bool all = true;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (std::exception const& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
    bool const pass = o.ok && in_time;
    all = all && pass;
    std::string limit = c.limit_seconds > 0 ? " < " + std::to_string(static_cast<int>(c.limit_seconds)) + " s" : "";
    std::printf("%s %s  %s  (%.3f s%s)%s%s\n", c.id.c_str(), pass ? "PASS" : "FAIL", c.title.c_str(), secs,
                limit.c_str(), o.detail.empty() ? "" : "  ", o.detail.c_str());
    if (!in_time) std::printf("    over the time limit\n");
  }
  return all ? 0 : 1;
}
