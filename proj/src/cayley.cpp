#include "vondyck/cayley.hpp"

#include <algorithm>
#include <unordered_map>

namespace vondyck {

std::string_view to_string(Color c) {
  return c == Color::X ? "x" : "y";
}

Letter letter_of(Color c) {
  return c == Color::X ? Letter::X : Letter::Y;
}

std::size_t CayleyGraph::count(Color c) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [c](CayleyEdge const& e) { return e.color == c; }));
}

void VerificationReport::fail(std::string message) {
  violations.push_back(std::move(message));
}

CayleyGraph build_cayley(ElementStore const& store) {
  CayleyGraph g;
  auto const n = static_cast<ElementId>(store.size());
  for (ElementId d = 0; d < n; ++d) {
    g.vertices.push_back(d);
    for (Color c : {Color::X, Color::Y}) {
      ElementId const t = store.act(d, letter_of(c));
      if (t != kUnknown) {
        g.edges.push_back({d, t, c});
      }
    }
    if (store.is_interior(d)) {
      g.interior.push_back(d);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

CayleyGraph restrict_to(CayleyGraph const& g, std::span<ElementId const> keep) {
  std::vector<ElementId> k(keep.begin(), keep.end());
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  auto in = [&k](ElementId v) { return std::binary_search(k.begin(), k.end(), v); };
  CayleyGraph out;
  std::copy_if(g.vertices.begin(), g.vertices.end(), std::back_inserter(out.vertices), in);
  std::copy_if(g.edges.begin(), g.edges.end(), std::back_inserter(out.edges),
               [&](CayleyEdge const& e) { return in(e.src) && in(e.dst); });
  std::copy_if(g.interior.begin(), g.interior.end(), std::back_inserter(out.interior), in);
  return out;
}

namespace {
std::string_view describe(kernels::RegularityFailure f) {
  switch (f) {
    case kernels::RegularityFailure::NotColorPreserving:
      return "translation does not preserve a colored edge";
    case kernels::RegularityFailure::FixesVertex:
      return "non-identity element fixes a vertex";
    case kernels::RegularityFailure::NotInjective:
      return "translation is not injective";
  }
  return "?";
}
}  // namespace

VerificationReport verify_vertex_regularity(CayleyGraph const& graph, ElementStore const& store,
                                            kernels::Execution exec) {
  if (!store.complete()) {
    throw IncompleteStoreError("vertex regularity needs a complete store");
  }
  VerificationReport report{"vertex-regular left action", {}, 0};
  if (graph != build_cayley(store)) {
    report.fail("graph does not match the store's action table");
    return report;
  }
  auto const table = kernels::multiplication_table(store, exec);
  auto const violations = kernels::regularity_violations(store, table, exec);
  report.checked = store.size() * store.size();
  for (auto const& v : violations) {
    report.fail("g=" + std::to_string(v.g) + " d=" + std::to_string(v.d) + ": " +
                std::string(describe(v.failure)));
  }
  return report;
}

std::vector<int> cycle_structure(CayleyGraph const& graph, std::span<Color const> color_word) {
  std::array<std::unordered_map<ElementId, ElementId>, 2> next;
  for (auto const& e : graph.edges) {
    next[static_cast<std::size_t>(e.color)][e.src] = e.dst;
  }
  auto step = [&](ElementId v) {
    for (Color c : color_word) {
      auto const& m = next[static_cast<std::size_t>(c)];
      auto it = m.find(v);
      if (it == m.end()) {
        throw IncompleteStoreError("vertex " + std::to_string(v) + " lacks an outgoing " +
                                   std::string(to_string(c)) + "-edge");
      }
      v = it->second;
    }
    return v;
  };
  std::unordered_map<ElementId, bool> seen;
  std::vector<int> lengths;
  for (ElementId v : graph.vertices) {
    if (seen[v]) {
      continue;
    }
    int len = 0;
    ElementId u = v;
    do {
      seen[u] = true;
      u = step(u);
      ++len;
      if (len > static_cast<int>(graph.vertices.size())) {
        throw std::logic_error("composite action is not a permutation");
      }
    } while (u != v);
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace vondyck
