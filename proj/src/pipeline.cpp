#include "vondyck/pipeline.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "vondyck/coset.hpp"
#include "vondyck/tiling.hpp"

namespace vondyck {

namespace {

bool infinite(GroupModel const& model) {
  auto const* g = std::get_if<GeometricModel>(&model);
  return g != nullptr && classify_curvature(g->params) != CurvatureClass::Spherical;
}

std::string edge_text(CayleyEdge const& e) {
  return std::to_string(e.src) + " -" + std::string(to_string(e.color)) + "-> " +
         std::to_string(e.dst);
}

VerificationReport compare_on(std::string check, CayleyGraph const& found,
                              CayleyGraph const& expected, std::span<ElementId const> region) {
  VerificationReport report{std::move(check), {}, 0};
  auto const f = restrict_to(found, region);
  auto const e = restrict_to(expected, region);
  std::set<ElementId> const have(found.vertices.begin(), found.vertices.end());
  for (ElementId v : region) {
    ++report.checked;
    if (!have.contains(v)) {
      report.fail("vertex " + std::to_string(v) + " is missing");
    }
  }
  std::set<CayleyEdge> const fs(f.edges.begin(), f.edges.end());
  std::set<CayleyEdge> const es(e.edges.begin(), e.edges.end());
  for (auto const& x : es) {
    ++report.checked;
    if (!fs.contains(x)) {
      report.fail("edge " + edge_text(x) + " is missing");
    }
  }
  for (auto const& x : fs) {
    if (!es.contains(x)) {
      ++report.checked;
      report.fail("edge " + edge_text(x) + " is spurious");
    }
  }
  return report;
}

void add_tiling_checks_for_b23(ElementStore const& b23, CosetGeometry const& coset,
                               CayleyGraph const& cayley, DualityResult& out) {
  auto const cover =
      enumerate_elements(GeometricModel{{3, 3, 3}}, kB23CoverDepth);
  auto const tiling = PolygonTiling::from_store(cover);
  auto report = identify_skeleton_with_coset_geometry(quotient_skeleton(tiling, b23), coset);
  report.check = "skeleton of P(3,3,3) / B(2,3) = coset geometry";
  out.reports.push_back(std::move(report));

  std::vector<ElementId> image(cover.size());
  for (auto const& e : cover.elements()) {
    image[static_cast<std::size_t>(e.id)] = b23.walk(0, e.canonical_word);
  }
  auto const derived = relabel(derived_tiling(tiling), [&](ElementId d) {
    return image[static_cast<std::size_t>(d)];
  });
  auto dreport = derived_equals_cayley(derived, cayley);
  dreport.check = "derived P'(3,3,3) / B(2,3) = Cayley graph";
  out.reports.push_back(std::move(dreport));
}

}  // namespace

ElementStore build_store(GroupModel const& model, std::optional<int> depth) {
  if (depth && *depth < 0) {
    throw UsageError("depth must be non-negative");
  }
  if (auto const* g = std::get_if<GeometricModel>(&model)) {
    g->params.validate();
  }
  if (!depth && infinite(model)) {
    throw UsageError("a depth is required for " + describe(model) + ", which is infinite");
  }
  return enumerate_elements(model, depth);
}

int interior_margin(VonDyckParams const& p) {
  return std::max(p.a, p.b);
}

bool DualityResult::passed() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](VerificationReport const& r) { return r.passed(); });
}

DualityResult verify_duality(GroupModel const& model, std::optional<int> depth,
                             kernels::Execution exec) {
  DualityResult out;
  if (infinite(model)) {
    if (!depth) {
      throw UsageError("a depth is required for " + describe(model));
    }
    if (*depth < 0) {
      throw UsageError("depth must be non-negative");
    }
    auto const& params = std::get<GeometricModel>(model).params;
    auto const store = enumerate_elements(model, *depth + interior_margin(params));
    std::vector<ElementId> region;
    for (auto const& e : store.elements()) {
      if (e.depth <= *depth) {
        region.push_back(e.id);
      }
    }
    out.region_size = region.size();
    auto const cayley = build_cayley(store);
    auto const coset = build_coset_geometry(store);
    out.reports.push_back(compare_on("psi-reconstruction = Cayley graph (region)",
                                     reconstruct_cayley(coset), cayley, region));
    auto const tiling = PolygonTiling::from_store(store);
    out.reports.push_back(identify_skeleton_with_coset_geometry(tiling.skeleton(), coset));
    auto derived = derived_equals_cayley(derived_tiling(tiling), cayley, region);
    derived.check += " (region)";
    out.reports.push_back(std::move(derived));
    return out;
  }

  auto const store = build_store(model, std::nullopt);
  out.region_size = store.size();
  auto const cayley = build_cayley(store);
  out.reports.push_back(verify_vertex_regularity(cayley, store, exec));
  auto const coset = build_coset_geometry(store);
  out.reports.push_back(verify_edge_action(coset, store, exec));
  out.reports.push_back(verify_b_equivariance(coset, store, exec));
  auto rec = compare_on("psi-reconstruction = Cayley graph", reconstruct_cayley(coset), cayley,
                        cayley.vertices);
  out.reports.push_back(std::move(rec));

  if (std::holds_alternative<GeometricModel>(model)) {
    auto const tiling = PolygonTiling::from_store(store);
    out.reports.push_back(identify_skeleton_with_coset_geometry(tiling.skeleton(), coset));
    out.reports.push_back(derived_equals_cayley(derived_tiling(tiling), cayley));
    return out;
  }
  auto abstract = identify_skeleton_with_coset_geometry(abstract_skeleton(store), coset);
  abstract.check = "abstract skeleton = coset geometry";
  out.reports.push_back(std::move(abstract));
  if (std::holds_alternative<BurnsideB23Model>(model)) {
    add_tiling_checks_for_b23(store, coset, cayley, out);
  }
  return out;
}

}  // namespace vondyck
