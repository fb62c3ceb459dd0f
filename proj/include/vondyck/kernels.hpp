// Data-parallel verification kernels over complete element stores.
//
// Every kernel has a serial reference and an OpenMP version selected by
// Execution. Both return identical, sorted results; the serial path is kept
// as the oracle for the parallel one.

#ifndef VONDYCK_KERNELS_HPP_
#define VONDYCK_KERNELS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "vondyck/group.hpp"

namespace vondyck::kernels {

enum class Execution { Serial, Parallel };

// Row-major n x n table with table[i * n + j] = i * j, computed row by row
// along the BFS tree (j = parent(j) * last_letter(j)). Requires a complete store.
std::vector<ElementId> multiplication_table(ElementStore const& store, Execution exec);

enum class RegularityFailure : std::uint8_t {
  // g * (d * s) != (g * d) * s for a generator s.
  NotColorPreserving,
  // g != 1 but g * d == d.
  FixesVertex,
  // d -> g * d is not injective.
  NotInjective,
};

struct RegularityViolation {
  ElementId g;
  ElementId d;
  RegularityFailure failure;

  auto operator<=>(RegularityViolation const&) const = default;
};

// Checks that every left translation d -> g * d is a color- and
// direction-preserving automorphism of the Cayley graph and that only the
// identity fixes a vertex.
std::vector<RegularityViolation> regularity_violations(ElementStore const& store,
                                                       std::span<ElementId const> table,
                                                       Execution exec);

// Coset incidence in flat form: per element its H- and K-coset index, per
// coset its representative, and the edge list sorted by (h, k).
struct IncidenceTables {
  std::vector<std::int32_t> h_of;
  std::vector<std::int32_t> k_of;
  std::vector<ElementId> h_rep;
  std::vector<ElementId> k_rep;
  struct Edge {
    std::int32_t h;
    std::int32_t k;
    ElementId label;
    auto operator<=>(Edge const&) const = default;
  };
  std::vector<Edge> edges;
};

struct EquivarianceViolation {
  ElementId g;
  ElementId d;
  // Label found on the translated edge, or kUnknown if g * b(d) is not an edge.
  ElementId found;

  auto operator<=>(EquivarianceViolation const&) const = default;
};

// For all g, d: the translate g * b(d), computed on coset representatives,
// is an edge and its label is g * d. Covers b(g d) = g b(d) and the
// equivariance of the edge labeling.
std::vector<EquivarianceViolation> equivariance_violations(IncidenceTables const& incidence,
                                                           std::span<ElementId const> table,
                                                           std::size_t n, Execution exec);

}  // namespace vondyck::kernels

#endif  // VONDYCK_KERNELS_HPP_
