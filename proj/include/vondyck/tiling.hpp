// Geometric realizations: the triangle tiling T_{a,b,c}, the polygon tiling
// P_{a,b,c} (2c-gons around O-type vertices) whose 1-skeleton is the coset
// geometry, its derived tiling P' whose colored and directed skeleton is the
// Cayley graph, and ring-by-ring enlargement of sub-tilings of P_{n,n,n}.

#ifndef VONDYCK_TILING_HPP_
#define VONDYCK_TILING_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "vondyck/cayley.hpp"
#include "vondyck/coset.hpp"
#include "vondyck/geometry.hpp"
#include "vondyck/group.hpp"

namespace vondyck {

struct TypedPoint {
  SurfacePoint point;
  VertexType type;
};

enum class Orientation : std::uint8_t { Positive, Negative };

struct Tile {
  std::vector<TypedPoint> polygon;  // counterclockwise
  Orientation orientation = Orientation::Positive;
  std::optional<ElementId> element;
};

// Positive triangles g T0 for every stored g, plus the negative triangles
// across their sides, deduplicated.
std::vector<Tile> build_triangle_tiling(ElementStore const& store);
std::vector<Tile> build_triangle_tiling(VonDyckParams const& p, int depth);

// A 1-skeleton with typed vertices and optionally labeled edges. Geometric
// skeletons carry points; abstract ones do not.
struct Skeleton {
  struct Vertex {
    VertexType type;
    std::optional<SurfacePoint> point;
  };
  struct Edge {
    std::int32_t a;  // A-type endpoint
    std::int32_t b;  // B-type endpoint
    std::optional<ElementId> label;
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  std::size_t labeled_edge_count() const;
};

class PolygonTiling {
 public:
  struct Vertex {
    SurfacePoint point;
    VertexType type;
    std::vector<std::int32_t> edges;
    std::vector<std::int32_t> polygons;
  };
  // The edge g(A, B) of the element g.
  struct Edge {
    std::int32_t a_vertex;
    std::int32_t b_vertex;
    Isometry element;
    Word word;
    std::optional<ElementId> label;
    std::vector<std::int32_t> polygons;
  };
  // g P0: vertices counterclockwise starting at g(A); edges[i] joins
  // vertices[i] and vertices[i + 1].
  struct Polygon {
    SurfacePoint center;
    Isometry placement;
    Word word;
    std::vector<std::int32_t> vertices;
    std::vector<std::int32_t> edges;
  };

  explicit PolygonTiling(VonDyckParams const& p);

  // One polygon per O-type vertex g(O) of a stored element; edges are
  // labeled by the store where it holds the element. The tiling keeps a
  // pointer to `store`, which must outlive it.
  static PolygonTiling from_store(ElementStore const& store);

  DyckGeometry const& geometry() const noexcept { return _geometry; }
  std::vector<Vertex> const& vertices() const noexcept { return _vertices; }
  std::vector<Edge> const& edges() const noexcept { return _edges; }
  std::vector<Polygon> const& polygons() const noexcept { return _polygons; }

  // Adds g P0 (no-op if present); returns its id.
  std::int32_t add_polygon(Isometry const& g, Word const& word);
  // Adds every polygon hinged at the vertex (a of them at A-type, b at B-type).
  void complete_star(std::int32_t vertex);
  // Polygons at the vertex, counterclockwise by the direction of their centers.
  std::vector<std::int32_t> star(std::int32_t vertex) const;
  // Id of the polygon containing the edge other than `polygon`, if built.
  std::optional<std::int32_t> across(std::int32_t edge, std::int32_t polygon) const;
  std::optional<std::int32_t> find_edge(Isometry const& element) const;

  Tile as_tile(std::int32_t polygon) const;
  Skeleton skeleton() const;

 private:
  std::int32_t vertex_at(SurfacePoint const& p, VertexType type);
  std::int32_t edge_for(Isometry const& g, Word const& word);

  DyckGeometry _geometry;
  ElementStore const* _store = nullptr;
  // P0 edges relative to the placement: isometry and word suffix.
  std::vector<std::pair<Isometry, Word>> _template;
  std::vector<Vertex> _vertices;
  std::vector<Edge> _edges;
  std::vector<Polygon> _polygons;
  QuantizedIndex _vertex_index;
  QuantizedIndex _edge_index;
  QuantizedIndex _center_index;
};

// Vertices are the x-orbits (A) and y-orbits (B) of a complete store; edge d
// joins the orbits of d. No geometry is involved.
Skeleton abstract_skeleton(ElementStore const& store);

// The skeleton of `tiling` pushed through the homomorphism onto `quotient`
// (each edge word evaluated there). Only vertices whose star is fully
// labeled are kept; vertices are identified when their incident label sets
// agree and edges when their labels agree. Throws std::runtime_error if the
// identification is inconsistent.
Skeleton quotient_skeleton(PolygonTiling const& tiling, ElementStore const& quotient);

// A-vertices <-> H-cosets, B-vertices <-> K-cosets and labeled edges <->
// labeled edges, over the cosets included in `geometry`.
VerificationReport identify_skeleton_with_coset_geometry(Skeleton const& skeleton,
                                                         CosetGeometry const& geometry);

struct DerivedEdge {
  ElementId src;
  ElementId dst;
  VertexType color;  // type of the shared skeleton vertex (A or B)

  auto operator<=>(DerivedEdge const&) const = default;
};

struct DerivedTiling {
  std::map<ElementId, SurfacePoint> midpoints;
  std::vector<DerivedEdge> edges;  // sorted, unique

  // Incident directed edges (in + out) of a vertex.
  int degree(ElementId v) const;
};

// Vertices are geodesic midpoints of labeled skeleton edges. Two edges that
// are consecutive on a polygon are joined, colored by their shared vertex and
// directed along the counterclockwise rotation carrying one onto the other
// inside the polygon (both ways when that rotation is a half turn).
DerivedTiling derived_tiling(PolygonTiling const& tiling);

// Pushes vertex ids through `map` (e.g. a quotient homomorphism); points are dropped.
DerivedTiling relabel(DerivedTiling const& derived, std::function<ElementId(ElementId)> const& map);

// A-colored <-> x-colored and B-colored <-> y-colored directed edges agree
// on `region` (edges with both ends in it).
VerificationReport derived_equals_cayley(DerivedTiling const& derived, CayleyGraph const& cayley,
                                         std::span<ElementId const> region);
VerificationReport derived_equals_cayley(DerivedTiling const& derived, CayleyGraph const& cayley);

class RingBoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EnlargementMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The boundary of a sub-tiling as a counterclockwise loop v_0 e_0 v_1 e_1 ...
// starting at the oldest boundary edge; hinge_counts[k] is the number of
// sub-tiling polygons at v_k.
struct RingBoundary {
  std::vector<std::int32_t> vertices;
  std::vector<std::int32_t> edges;
  std::vector<int> hinge_counts;

  std::size_t size() const noexcept { return edges.size(); }
  int hinge_sum() const;
};

// Completes the stars of the sub-tiling's vertices, then extracts the
// boundary. Throws RingBoundaryError unless the sub-tiling is edge-connected
// and its boundary is one simple loop.
RingBoundary ring_boundary(PolygonTiling& tiling, std::span<std::int32_t const> region);

struct Enlargement {
  std::vector<std::int32_t> region;  // the enlarged sub-tiling
  std::vector<std::int32_t> added;   // in enumeration order
  std::vector<std::int32_t> hinges;  // boundary vertex each added polygon was reached from
  // added.size() is the geometric count; formula_count = N(n-1) - sum i_k;
  // brute_force_count counts every outside polygon sharing a vertex.
  int formula_count = 0;
  int brute_force_count = 0;
  RingBoundary boundary;
};

// Adds every outside polygon meeting the boundary: for each boundary vertex
// v_k in loop order, the n - i_k - 1 polygons counterclockwise after the one
// across the incoming boundary edge. Requires a = b = c. Throws
// EnlargementMismatch if the three counts disagree.
Enlargement enlarge(PolygonTiling& tiling, std::span<std::int32_t const> region);

struct EnumeratedEdge {
  std::int64_t index;
  Word word;
  Fingerprint fingerprint;
  std::int32_t edge;
};

struct RingStep {
  int boundary_edges;
  int hinge_sum;
  int added;
  int formula_count;
  int brute_force_count;
};

struct DnnnEnumeration {
  PolygonTiling tiling;
  std::vector<std::int32_t> region;
  std::vector<EnumeratedEdge> edges;
  std::vector<RingStep> rings;
};

// Lists the edges of P_{n,n,n} (hence the elements of D(n,n,n)) without
// repetition: the 2n edges of the basic polygon counterclockwise from the
// identity edge, then the new edges of each enlargement. Throws
// EnlargementMismatch on a repeated fingerprint.
DnnnEnumeration enumerate_dnnn(int n, int rings);

}  // namespace vondyck

#endif  // VONDYCK_TILING_HPP_
