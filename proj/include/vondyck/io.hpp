// Exports: versioned JSON documents, Graphviz DOT and SVG drawings of the
// tilings. All outputs are deterministic for fixed inputs.

#ifndef VONDYCK_IO_HPP_
#define VONDYCK_IO_HPP_

#include <string>

#include <json.hpp>

#include "vondyck/cayley.hpp"
#include "vondyck/coset.hpp"
#include "vondyck/group.hpp"
#include "vondyck/tiling.hpp"

namespace vondyck::io {

using Json = nlohmann::json;

Json store_to_json(ElementStore const& store);
Json cayley_to_json(CayleyGraph const& graph, ElementStore const& store);
Json coset_to_json(CosetGeometry const& geometry, ElementStore const& store);
Json tiling_to_json(PolygonTiling const& tiling);
Json enumeration_to_json(DnnnEnumeration const& e);

// Directed; edge attribute color is "x" or "y".
std::string cayley_to_dot(CayleyGraph const& graph, ElementStore const& store);
// Undirected; vertex attribute type is "H" (red) or "K" (blue), edges carry labels.
std::string coset_to_dot(CosetGeometry const& geometry, ElementStore const& store);

struct RenderStyle {
  std::string a_color = "red";    // A-vertices, H-cosets, x-edges
  std::string b_color = "blue";   // B-vertices, K-cosets, y-edges
  std::string edge_color = "#444444";
  std::string tile_fill = "#f4f1e8";
  double edge_width = 1.2;
  double arrow_width = 1.0;
  double vertex_radius = 3.0;
  double size = 800.0;
  bool disk_boundary = true;
  bool arrowheads = true;
};

// Counts embedded in the SVG metadata.
struct SvgCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t tiles = 0;
};

struct Svg {
  std::string text;
  SvgCounts counts;
};

// Plane models are drawn with straight segments, the disk with geodesic arcs
// inside the unit circle. Spherical tilings are rejected with
// std::invalid_argument.
Svg render_tiling(PolygonTiling const& tiling, RenderStyle const& style = {});
Svg render_coset(PolygonTiling const& tiling, RenderStyle const& style = {});
Svg render_derived(PolygonTiling const& tiling, DerivedTiling const& derived,
                   RenderStyle const& style = {});
Svg render_cayley(PolygonTiling const& tiling, DerivedTiling const& derived,
                  RenderStyle const& style = {});

}  // namespace vondyck::io

#endif  // VONDYCK_IO_HPP_
