#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "vondyck/cayley.hpp"
#include "vondyck/kernels.hpp"

using namespace vondyck;
using kernels::Execution;

namespace {

ElementStore closed(GroupModel const& m) {
  return enumerate_elements(m, std::nullopt);
}

std::vector<int> repeat(int len, int times) {
  return std::vector<int>(static_cast<std::size_t>(times), len);
}

}  // namespace

TEST_CASE("edge and vertex counts of complete Cayley graphs") {
  for (GroupModel const& m : {GroupModel{ToyZ6Model{}}, GroupModel{BurnsideB23Model{}},
                              GroupModel{GeometricModel{{2, 3, 5}}},
                              GroupModel{GeometricModel{{2, 2, 7}}}}) {
    auto const s = closed(m);
    auto const g = build_cayley(s);
    CHECK(g.vertices.size() == s.size());
    CHECK(g.interior.size() == s.size());
    CHECK(g.count(Color::X) == s.size());
    CHECK(g.count(Color::Y) == s.size());
    CHECK(g.edges.size() == 2 * s.size());
    std::map<ElementId, std::array<int, 4>> deg;
    for (auto const& e : g.edges) {
      ++deg[e.src][static_cast<std::size_t>(e.color)];
      ++deg[e.dst][2 + static_cast<std::size_t>(e.color)];
    }
    for (auto const& [v, d] : deg) {
      CHECK(d == std::array<int, 4>{1, 1, 1, 1});
    }
    CHECK(std::is_sorted(g.edges.begin(), g.edges.end()));
  }
}

TEST_CASE("Z6 edges are translations by 3 and 2") {
  auto const s = closed(ToyZ6Model{});
  auto const g = build_cayley(s);
  for (auto const& e : g.edges) {
    int const src = std::get<int>(s.element(e.src).payload);
    int const dst = std::get<int>(s.element(e.dst).payload);
    CHECK(dst == (src + (e.color == Color::X ? 3 : 2)) % 6);
  }
}

TEST_CASE("B(2,3) edges agree with the rewriting oracle") {
  auto const s = closed(BurnsideB23Model{});
  auto const g = build_cayley(s);
  for (auto const& e : g.edges) {
    auto const& nf = std::get<B23NormalForm>(s.element(e.src).payload);
    auto const& to = std::get<B23NormalForm>(s.element(e.dst).payload);
    std::string const w = oracle::b23_word({nf.alpha, nf.beta, nf.gamma}) + (e.color == Color::X ? "x" : "y");
    CHECK(oracle::b23_rewrite(w) == std::array<int, 3>{to.alpha, to.beta, to.gamma});
  }
}

TEST_CASE("partial (3,3,3) Cayley graph agrees with the lattice oracle") {
  auto const s = enumerate_elements(GeometricModel{{3, 3, 3}}, 5);
  auto const g = build_cayley(s);
  std::map<oracle::Eisenstein, ElementId> by_value;
  for (auto const& el : s.elements()) {
    REQUIRE(by_value.emplace(oracle::eis_evaluate(el.canonical_word), el.id).second);
  }
  std::size_t expected = 0;
  for (auto const& [v, id] : by_value) {
    for (Letter l : {Letter::X, Letter::Y}) {
      if (by_value.count(oracle::eis_compose(v, oracle::eis_generator(l)))) ++expected;
    }
  }
  CHECK(g.edges.size() == expected);
  for (auto const& e : g.edges) {
    auto const v = oracle::eis_evaluate(s.element(e.src).canonical_word);
    auto const want = oracle::eis_compose(v, oracle::eis_generator(letter_of(e.color)));
    CHECK(by_value.at(want) == e.dst);
  }
  std::set<ElementId> const interior(g.interior.begin(), g.interior.end());
  for (auto const& [v, id] : by_value) {
    bool all = true;
    for (Letter l : kLetters) all = all && by_value.count(oracle::eis_compose(v, oracle::eis_generator(l)));
    CHECK(interior.count(id) == static_cast<std::size_t>(all));
  }
}

TEST_CASE("cycle structures of the generators and their product") {
  std::array<Color, 1> const cx{Color::X};
  std::array<Color, 1> const cy{Color::Y};
  std::array<Color, 2> const cxy{Color::X, Color::Y};

  auto const z6 = build_cayley(closed(ToyZ6Model{}));
  CHECK(cycle_structure(z6, cx) == repeat(2, 3));
  CHECK(cycle_structure(z6, cy) == repeat(3, 2));
  CHECK(cycle_structure(z6, cxy) == repeat(6, 1));

  auto const b23 = build_cayley(closed(BurnsideB23Model{}));
  CHECK(cycle_structure(b23, cx) == repeat(3, 9));
  CHECK(cycle_structure(b23, cy) == repeat(3, 9));
  CHECK(cycle_structure(b23, cxy) == repeat(3, 9));

  for (VonDyckParams p : {VonDyckParams{2, 3, 3}, VonDyckParams{2, 3, 4}, VonDyckParams{2, 3, 5},
                          VonDyckParams{2, 2, 6}}) {
    auto const s = closed(GeometricModel{p});
    auto const g = build_cayley(s);
    int const n = static_cast<int>(s.size());
    CHECK(cycle_structure(g, cx) == repeat(p.a, n / p.a));
    CHECK(cycle_structure(g, cy) == repeat(p.b, n / p.b));
    CHECK(cycle_structure(g, cxy) == repeat(p.c, n / p.c));
  }

  auto const partial = build_cayley(enumerate_elements(GeometricModel{{4, 4, 4}}, 2));
  CHECK_THROWS_AS(cycle_structure(partial, cx), IncompleteStoreError);
}

TEST_CASE("restrict_to keeps the induced subgraph") {
  auto const s = closed(GeometricModel{{2, 3, 4}});
  auto const g = build_cayley(s);
  std::vector<ElementId> keep{5, 0, 3, 1, 2};
  auto const r = restrict_to(g, keep);
  CHECK(r.vertices == std::vector<ElementId>{0, 1, 2, 3, 5});
  std::set<ElementId> const k(keep.begin(), keep.end());
  std::size_t expected = 0;
  for (auto const& e : g.edges) expected += k.count(e.src) && k.count(e.dst);
  CHECK(r.edges.size() == expected);
  for (auto const& e : r.edges) {
    CHECK(k.count(e.src));
    CHECK(k.count(e.dst));
  }
  CHECK(r.interior == r.vertices);
}

TEST_CASE("vertex regularity holds on complete stores") {
  for (GroupModel const& m : {GroupModel{ToyZ6Model{}}, GroupModel{BurnsideB23Model{}},
                              GroupModel{GeometricModel{{2, 3, 5}}}}) {
    auto const s = closed(m);
    auto const g = build_cayley(s);
    auto const r = verify_vertex_regularity(g, s);
    CHECK(r.passed());
    CHECK(r.checked == s.size() * s.size());
  }
  auto const partial = enumerate_elements(GeometricModel{{4, 4, 4}}, 2);
  CHECK_THROWS_AS(verify_vertex_regularity(build_cayley(partial), partial), IncompleteStoreError);
}

TEST_CASE("multiplication table matches element-wise multiply") {
  auto const s = closed(GeometricModel{{2, 3, 4}});
  auto const n = static_cast<ElementId>(s.size());
  auto const t = kernels::multiplication_table(s, Execution::Serial);
  REQUIRE(t.size() == s.size() * s.size());
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = 0; j < n; ++j) {
      REQUIRE(t[static_cast<std::size_t>(i * n + j)] == multiply(s, i, j));
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  for (GroupModel const& m : {GroupModel{BurnsideB23Model{}}, GroupModel{GeometricModel{{2, 3, 5}}},
                              GroupModel{GeometricModel{{2, 2, 40}}}}) {
    auto const s = closed(m);
    auto const serial = kernels::multiplication_table(s, Execution::Serial);
    auto const parallel = kernels::multiplication_table(s, Execution::Parallel);
    CHECK(serial == parallel);
    CHECK(kernels::regularity_violations(s, serial, Execution::Serial) ==
          kernels::regularity_violations(s, serial, Execution::Parallel));
  }
}

TEST_CASE("regularity kernel flags a corrupted table identically in both modes") {
  auto const s = closed(GeometricModel{{2, 3, 4}});
  auto t = kernels::multiplication_table(s, Execution::Serial);
  auto const n = s.size();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto corrupted = t;
    std::uniform_int_distribution<std::size_t> cell(n, n * n - 1);
    std::uniform_int_distribution<ElementId> value(0, static_cast<ElementId>(n - 1));
    auto const c = cell(rng);
    auto v = value(rng);
    if (v == corrupted[c]) v = static_cast<ElementId>((v + 1) % static_cast<ElementId>(n));
    corrupted[c] = v;
    auto const serial = kernels::regularity_violations(s, corrupted, Execution::Serial);
    CHECK_FALSE(serial.empty());
    CHECK(serial == kernels::regularity_violations(s, corrupted, Execution::Parallel));
  }
}

TEST_CASE("Cayley graphs are connected from the identity") {
  for (GroupModel const& m : {GroupModel{BurnsideB23Model{}}, GroupModel{GeometricModel{{2, 3, 5}}}}) {
    auto const s = closed(m);
    auto const g = build_cayley(s);
    std::map<ElementId, std::vector<ElementId>> adj;
    for (auto const& e : g.edges) {
      adj[e.src].push_back(e.dst);
      adj[e.dst].push_back(e.src);
    }
    std::set<ElementId> seen{0};
    std::vector<ElementId> stack{0};
    while (!stack.empty()) {
      auto const v = stack.back();
      stack.pop_back();
      for (auto u : adj[v]) {
        if (seen.insert(u).second) stack.push_back(u);
      }
    }
    CHECK(seen.size() == s.size());
  }
  auto const partial = enumerate_elements(GeometricModel{{2, 3, 7}}, 6);
  auto const g = build_cayley(partial);
  std::set<ElementId> reached{0};
  for (int round = 0; round < 8; ++round) {
    for (auto const& e : g.edges) {
      if (reached.count(e.src) || reached.count(e.dst)) {
        reached.insert(e.src);
        reached.insert(e.dst);
      }
    }
  }
  CHECK(reached.size() == partial.size());
}
