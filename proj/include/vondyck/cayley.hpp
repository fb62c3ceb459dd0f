// The edge-colored, directed Cayley graph with respect to {x, y}.

#ifndef VONDYCK_CAYLEY_HPP_
#define VONDYCK_CAYLEY_HPP_

#include <span>
#include <string>
#include <vector>

#include "vondyck/group.hpp"
#include "vondyck/kernels.hpp"

namespace vondyck {

enum class Color : std::uint8_t { X, Y };

std::string_view to_string(Color c);
Letter letter_of(Color c);

struct CayleyEdge {
  ElementId src;
  ElementId dst;
  Color color;

  auto operator<=>(CayleyEdge const&) const = default;
};

// Vertices, edges and interior are kept sorted.
struct CayleyGraph {
  std::vector<ElementId> vertices;
  std::vector<CayleyEdge> edges;
  std::vector<ElementId> interior;

  std::size_t count(Color c) const;
  bool operator==(CayleyGraph const&) const = default;
};

// Edges come from the right-action table, restricted to known targets;
// interior holds the vertices whose four products are all known.
CayleyGraph build_cayley(ElementStore const& store);

// Induced subgraph on `keep` (sorted or not); interior is intersected too.
CayleyGraph restrict_to(CayleyGraph const& g, std::span<ElementId const> keep);

// Pass/fail record of one verification. A check passes iff it has no violations.
struct VerificationReport {
  std::string check;
  std::vector<std::string> violations;
  std::size_t checked = 0;

  bool passed() const noexcept { return violations.empty(); }
  void fail(std::string message);
};

// Left translations are color-preserving automorphisms and only the identity
// fixes a vertex. Throws IncompleteStoreError on a partial store.
VerificationReport verify_vertex_regularity(CayleyGraph const& graph, ElementStore const& store,
                                            kernels::Execution exec = kernels::Execution::Parallel);

// Orbit lengths of the composite permutation d -> d * s1 * s2 * ... (sorted).
// Throws IncompleteStoreError unless every vertex has both colors.
std::vector<int> cycle_structure(CayleyGraph const& graph, std::span<Color const> color_word);

}  // namespace vondyck

#endif  // VONDYCK_CAYLEY_HPP_
