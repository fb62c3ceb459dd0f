#include "vondyck/kernels.hpp"

#include <algorithm>

#include <omp.h>

namespace vondyck::kernels {

namespace {

void require_complete(ElementStore const& store) {
  if (!store.complete()) {
    throw IncompleteStoreError("kernel requires a complete element store");
  }
}

void fill_row(ElementStore const& store, ElementId i, ElementId* row) {
  auto const n = store.size();
  row[0] = i;
  for (std::size_t j = 1; j < n; ++j) {
    auto const& e = store.elements()[j];
    row[j] = store.act(row[e.parent], *e.last_letter);
  }
}

void check_row(ElementStore const& store, std::span<ElementId const> table, ElementId g,
               std::vector<RegularityViolation>& out) {
  auto const n = store.size();
  ElementId const* row = table.data() + static_cast<std::size_t>(g) * n;
  std::vector<char> hit(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    auto const d = static_cast<ElementId>(j);
    ElementId const gd = row[j];
    for (Letter s : {Letter::X, Letter::Y}) {
      if (row[store.act(d, s)] != store.act(gd, s)) {
        out.push_back({g, d, RegularityFailure::NotColorPreserving});
      }
    }
    if (g != 0 && gd == d) {
      out.push_back({g, d, RegularityFailure::FixesVertex});
    }
    if (hit[static_cast<std::size_t>(gd)]++) {
      out.push_back({g, d, RegularityFailure::NotInjective});
    }
  }
}

ElementId translated_label(IncidenceTables const& inc, ElementId const* row, ElementId d) {
  auto const h = inc.h_of[static_cast<std::size_t>(d)];
  auto const k = inc.k_of[static_cast<std::size_t>(d)];
  ElementId const gh = row[inc.h_rep[static_cast<std::size_t>(h)]];
  ElementId const gk = row[inc.k_rep[static_cast<std::size_t>(k)]];
  IncidenceTables::Edge const probe{inc.h_of[static_cast<std::size_t>(gh)],
                                    inc.k_of[static_cast<std::size_t>(gk)], kUnknown};
  auto it = std::lower_bound(inc.edges.begin(), inc.edges.end(), probe,
                             [](auto const& a, auto const& b) {
                               return std::tie(a.h, a.k) < std::tie(b.h, b.k);
                             });
  if (it == inc.edges.end() || it->h != probe.h || it->k != probe.k) {
    return kUnknown;
  }
  return it->label;
}

}  // namespace

std::vector<ElementId> multiplication_table(ElementStore const& store, Execution exec) {
  require_complete(store);
  auto const n = store.size();
  std::vector<ElementId> table(n * n);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) {
      fill_row(store, static_cast<ElementId>(i), table.data() + i * n);
    }
    return table;
  }
  auto const rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    fill_row(store, static_cast<ElementId>(i), table.data() + static_cast<std::size_t>(i) * n);
  }
  return table;
}

std::vector<RegularityViolation> regularity_violations(ElementStore const& store,
                                                       std::span<ElementId const> table,
                                                       Execution exec) {
  require_complete(store);
  auto const n = store.size();
  std::vector<RegularityViolation> out;
  if (exec == Execution::Serial) {
    for (std::size_t g = 0; g < n; ++g) {
      check_row(store, table, static_cast<ElementId>(g), out);
    }
    return out;
  }
  auto const rows = static_cast<std::int64_t>(n);
#pragma omp parallel
  {
    std::vector<RegularityViolation> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t g = 0; g < rows; ++g) {
      check_row(store, table, static_cast<ElementId>(g), local);
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EquivarianceViolation> equivariance_violations(IncidenceTables const& incidence,
                                                           std::span<ElementId const> table,
                                                           std::size_t n, Execution exec) {
  std::vector<EquivarianceViolation> out;
  auto scan_row = [&](std::size_t g, std::vector<EquivarianceViolation>& sink) {
    ElementId const* row = table.data() + g * n;
    for (std::size_t d = 0; d < n; ++d) {
      ElementId const found = translated_label(incidence, row, static_cast<ElementId>(d));
      if (found != row[d]) {
        sink.push_back({static_cast<ElementId>(g), static_cast<ElementId>(d), found});
      }
    }
  };
  if (exec == Execution::Serial) {
    for (std::size_t g = 0; g < n; ++g) {
      scan_row(g, out);
    }
    return out;
  }
  auto const rows = static_cast<std::int64_t>(n);
#pragma omp parallel
  {
    std::vector<EquivarianceViolation> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t g = 0; g < rows; ++g) {
      scan_row(static_cast<std::size_t>(g), local);
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vondyck::kernels
