// The rank-two coset geometry T = G/H u G/K with H = <x>, K = <y>, seen as a
// bipartite graph whose edges join intersecting cosets. Each edge carries the
// unique element in its intersection, which gives the maps b and psi.

#ifndef VONDYCK_COSET_HPP_
#define VONDYCK_COSET_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "vondyck/cayley.hpp"
#include "vondyck/group.hpp"
#include "vondyck/kernels.hpp"

namespace vondyck {

enum class CosetType : std::uint8_t { H, K };

struct Coset {
  CosetType type = CosetType::H;
  ElementId rep = kUnknown;  // smallest member id
  std::vector<ElementId> members;  // sorted
  // rep, rep*g, rep*g^2, ... for the generator g of the subgroup.
  std::vector<ElementId> cycle;

  bool contains(ElementId d) const;
  // Exponent r with d = rep * g^r.
  int position(ElementId d) const;
};

struct CosetEdge {
  std::int32_t h;  // index into h_vertices
  std::int32_t k;  // index into k_vertices
  ElementId label;

  auto operator<=>(CosetEdge const&) const = default;
};

class CosetGeometry {
 public:
  std::vector<Coset> const& h_vertices() const noexcept { return _h; }
  std::vector<Coset> const& k_vertices() const noexcept { return _k; }
  std::vector<CosetEdge> const& edges() const noexcept { return _edges; }

  // Coset indices of an element, if its coset is included.
  std::optional<std::int32_t> h_of(ElementId d) const;
  std::optional<std::int32_t> k_of(ElementId d) const;
  // Edge index by endpoints / by label.
  std::optional<std::int32_t> edge_between(std::int32_t h, std::int32_t k) const;
  std::optional<std::int32_t> edge_of_label(ElementId d) const;
  std::optional<std::int32_t> basic_edge() const { return edge_of_label(0); }

  // The edge labels, sorted.
  std::vector<ElementId> labels() const;

  // Flattened tables for the equivariance kernel (complete geometries only).
  kernels::IncidenceTables incidence(std::size_t store_size) const;

 private:
  friend CosetGeometry build_coset_geometry(ElementStore const& store);

  std::vector<Coset> _h;
  std::vector<Coset> _k;
  std::vector<CosetEdge> _edges;  // sorted by (h, k)
  std::vector<std::int32_t> _h_of;  // per element, -1 if excluded
  std::vector<std::int32_t> _k_of;
  std::vector<std::int32_t> _edge_of;
};

// All H- and K-cosets (for a partial store, only cosets whose members are all
// interior), ordered by representative, and the incidence edges ordered by
// their endpoints.
CosetGeometry build_coset_geometry(ElementStore const& store);

// The unique element g with gH = h and gK = k. Throws if (h, k) is not an edge.
ElementId edge_label(CosetGeometry const& geometry, std::int32_t h, std::int32_t k);

// b(d) = (dH, dK), as an edge index. Throws for an absent element.
std::int32_t b_map(CosetGeometry const& geometry, ElementId d);

// An element of H u K written as x^r (0 <= r < a) or y^s (0 <= s < b).
struct GeneratorPower {
  Letter generator = Letter::X;
  int exponent = 0;

  Word word() const;
  auto operator<=>(GeneratorPower const&) const = default;
};

// For incident edges e1, e2: the generator power carrying label(e1) to
// label(e2) around their shared vertex. psi(e, e) is the empty power.
// Throws std::invalid_argument for a non-incident pair.
GeneratorPower psi(CosetGeometry const& geometry, std::int32_t e1, std::int32_t e2);

// Edge-transitivity and edge-regularity of the natural action, plus
// b-equivariance b(g d) = g b(d) (which is also equivariance of labels).
// Throws IncompleteStoreError on a partial store.
VerificationReport verify_edge_action(CosetGeometry const& geometry, ElementStore const& store,
                                      kernels::Execution exec = kernels::Execution::Parallel);
VerificationReport verify_b_equivariance(CosetGeometry const& geometry,
                                         ElementStore const& store,
                                         kernels::Execution exec = kernels::Execution::Parallel);

// Cayley graph read off the geometry: an x-edge label(e1) -> label(e2) for
// every ordered incident pair with psi = x, likewise for y.
CayleyGraph reconstruct_cayley(CosetGeometry const& geometry);

}  // namespace vondyck

#endif  // VONDYCK_COSET_HPP_
