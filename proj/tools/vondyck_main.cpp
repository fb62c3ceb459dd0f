// vondyck: build, verify, enumerate and draw von Dyck groups D(a,b,c).
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vondyck/cayley.hpp"
#include "vondyck/coset.hpp"
#include "vondyck/io.hpp"
#include "vondyck/pipeline.hpp"
#include "vondyck/tiling.hpp"

namespace {

using namespace vondyck;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct ModelArgs {
  std::string model = "geometric";
  std::optional<int> a;
  std::optional<int> b;
  std::optional<int> c;
  std::optional<int> depth;
};

void add_params(CLI::App* cmd, ModelArgs& m) {
  cmd->add_option("--a", m.a, "order of x");
  cmd->add_option("--b", m.b, "order of y");
  cmd->add_option("--c", m.c, "order of xy");
}

void add_model(CLI::App* cmd, ModelArgs& m) {
  cmd->add_option("--model", m.model, "group model")
      ->check(CLI::IsMember({"geometric", "z6", "b23"}));
  add_params(cmd, m);
  cmd->add_option("--depth", m.depth, "word-length bound (radius for verify)");
}

VonDyckParams params_of(ModelArgs const& m) {
  if (!m.a || !m.b || !m.c) {
    throw UsageError("--a, --b and --c are required");
  }
  VonDyckParams p{*m.a, *m.b, *m.c};
  try {
    p.validate();
  } catch (std::invalid_argument const& e) {
    throw UsageError(e.what());
  }
  return p;
}

GroupModel model_of(ModelArgs const& m) {
  if (m.model == "z6") {
    return ToyZ6Model{};
  }
  if (m.model == "b23") {
    return BurnsideB23Model{};
  }
  return GeometricModel{params_of(m)};
}

int run_classify(ModelArgs const& m) {
  auto const p = params_of(m);
  auto const k = classify_curvature(p);
  std::cout << to_string(k);
  if (k == CurvatureClass::Spherical) {
    std::cout << ", order " << build_store(GeometricModel{p}, std::nullopt).size();
  }
  std::cout << "\n";
  return 0;
}

int run_build(std::string const& what, ModelArgs const& m, std::string const& format) {
  auto const model = model_of(m);
  auto const store = build_store(model, m.depth);
  if (what == "store") {
    if (format != "json") {
      throw UsageError("stores are exported as json");
    }
    std::cout << io::store_to_json(store).dump(2) << "\n";
  } else if (what == "cayley") {
    auto const g = build_cayley(store);
    std::cout << (format == "dot" ? io::cayley_to_dot(g, store)
                                  : io::cayley_to_json(g, store).dump(2) + "\n");
  } else if (what == "coset") {
    auto const g = build_coset_geometry(store);
    std::cout << (format == "dot" ? io::coset_to_dot(g, store)
                                  : io::coset_to_json(g, store).dump(2) + "\n");
  } else {
    if (format != "json") {
      throw UsageError("tilings are exported as json");
    }
    if (!std::holds_alternative<GeometricModel>(model)) {
      throw UsageError("tilings need --model geometric");
    }
    std::cout << io::tiling_to_json(PolygonTiling::from_store(store)).dump(2) << "\n";
  }
  return 0;
}

int run_verify(ModelArgs const& m) {
  auto const result = verify_duality(model_of(m), m.depth);
  std::size_t width = 5;
  for (auto const& r : result.reports) {
    width = std::max(width, r.check.size());
  }
  std::cout << std::left << std::setw(static_cast<int>(width)) << "check"
            << "  result  checked\n";
  for (auto const& r : result.reports) {
    std::cout << std::left << std::setw(static_cast<int>(width)) << r.check << "  "
              << std::setw(6) << (r.passed() ? "pass" : "FAIL") << "  " << r.checked << "\n";
  }
  for (auto const& r : result.reports) {
    for (std::size_t i = 0; i < r.violations.size() && i < 10; ++i) {
      std::cout << "  " << r.check << ": " << r.violations[i] << "\n";
    }
  }
  std::cout << "region: " << result.region_size << " elements\n";
  std::cout << "overall: " << (result.passed() ? "pass" : "FAIL") << "\n";
  return result.passed() ? 0 : kExitFailure;
}

int run_enumerate(int n, int rings, bool check, std::string const& format) {
  DnnnEnumeration e = [&] {
    try {
      return enumerate_dnnn(n, rings);
    } catch (std::invalid_argument const& err) {
      throw UsageError(err.what());
    }
  }();
  if (format == "json") {
    std::cout << io::enumeration_to_json(e).dump(2) << "\n";
  } else {
    for (auto const& row : e.edges) {
      std::cout << row.index << "\t" << format_word(row.word) << "\n";
    }
  }
  if (check) {
    for (std::size_t i = 0; i < e.rings.size(); ++i) {
      auto const& r = e.rings[i];
      bool const ok = r.added == r.formula_count && r.added == r.brute_force_count;
      std::cerr << "ring " << i + 1 << ": N=" << r.boundary_edges << " sum_i=" << r.hinge_sum
                << " added=" << r.added << " formula=" << r.formula_count
                << " brute_force=" << r.brute_force_count << " check "
                << (ok ? "pass" : "FAIL") << "\n";
      if (!ok) {
        return kExitFailure;
      }
    }
  }
  return 0;
}

int run_render(std::string const& what, ModelArgs const& m, std::string const& out) {
  auto const p = params_of(m);
  if (classify_curvature(p) == CurvatureClass::Spherical) {
    throw UsageError("spherical tilings are not rendered");
  }
  auto const store = build_store(GeometricModel{p}, m.depth);
  auto const tiling = PolygonTiling::from_store(store);
  io::Svg svg;
  if (what == "tiling") {
    svg = io::render_tiling(tiling);
  } else if (what == "coset") {
    svg = io::render_coset(tiling);
  } else if (what == "derived") {
    svg = io::render_derived(tiling, derived_tiling(tiling));
  } else {
    svg = io::render_cayley(tiling, derived_tiling(tiling));
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) {
    std::cerr << "cannot write " << out << "\n";
    return kExitFailure;
  }
  file << svg.text;
  std::cerr << "wrote " << out << " (vertices=" << svg.counts.vertices
            << ", edges=" << svg.counts.edges << ", tiles=" << svg.counts.tiles << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"von Dyck groups: Cayley graphs, coset geometries and tilings"};
  app.require_subcommand(1);

  ModelArgs classify_args;
  auto* classify = app.add_subcommand("classify", "curvature class (and order if finite)");
  add_params(classify, classify_args);

  ModelArgs build_args;
  std::string build_what;
  std::string build_format = "json";
  auto* build = app.add_subcommand("build", "export a store, Cayley graph, coset geometry or tiling");
  build->add_option("what", build_what, "cayley, coset, store or tiling")
      ->required()
      ->check(CLI::IsMember({"cayley", "coset", "store", "tiling"}));
  add_model(build, build_args);
  build->add_option("--format", build_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  ModelArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run the duality checks");
  add_model(verify, verify_args);

  int n = 0;
  int rings = 0;
  bool check = false;
  std::string enum_format = "text";
  auto* enumerate = app.add_subcommand("enumerate", "list D(n,n,n) ring by ring");
  enumerate->add_option("--n", n, "polygon order")->required();
  enumerate->add_option("--rings", rings, "number of enlargements")->default_val(0);
  enumerate->add_flag("--check", check, "report the enlargement counts per ring");
  enumerate->add_option("--format", enum_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  ModelArgs render_args;
  std::string render_what = "tiling";
  std::string render_out;
  auto* render = app.add_subcommand("render", "draw a tiling as SVG");
  render->add_option("--what", render_what, "coset, cayley, tiling or derived")
      ->check(CLI::IsMember({"coset", "cayley", "tiling", "derived"}));
  add_params(render, render_args);
  render->add_option("--depth", render_args.depth, "word-length bound")->required();
  render->add_option("--out", render_out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) {
      return run_classify(classify_args);
    }
    if (build->parsed()) {
      return run_build(build_what, build_args, build_format);
    }
    if (verify->parsed()) {
      return run_verify(verify_args);
    }
    if (enumerate->parsed()) {
      return run_enumerate(n, rings, check, enum_format);
    }
    return run_render(render_what, render_args, render_out);
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (RingBoundaryError const& e) {
    std::cerr << "ring boundary: " << e.what() << "\n";
    return kExitFailure;
  } catch (EnlargementMismatch const& e) {
    std::cerr << "enlargement: " << e.what() << "\n";
    return kExitFailure;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
