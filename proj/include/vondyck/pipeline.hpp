// End-to-end duality checks shared by the CLI and the acceptance suite.

#ifndef VONDYCK_PIPELINE_HPP_
#define VONDYCK_PIPELINE_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "vondyck/cayley.hpp"
#include "vondyck/group.hpp"
#include "vondyck/kernels.hpp"

namespace vondyck {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite models close on their own; geometric models on a non-spherical
// surface need an explicit depth (UsageError otherwise).
ElementStore build_store(GroupModel const& model, std::optional<int> depth);

// Extra BFS layers grown beyond a requested radius so that every element
// within the radius has its full H- and K-cosets and both polygons inside the
// store.
int interior_margin(VonDyckParams const& p);

// D(3,3,3) depth whose polygon tiling covers B(2,3) under the quotient map.
inline constexpr int kB23CoverDepth = 6;

struct DualityResult {
  std::vector<VerificationReport> reports;
  // Elements over which the checks quantify.
  std::size_t region_size = 0;

  bool passed() const;
};

// Complete models: vertex regularity, edge action, b-equivariance,
// psi-reconstruction, and the tiling checks (abstract skeleton for Z6; the
// D(3,3,3) tiling pushed to the quotient for B(2,3)). Infinite geometric
// models: `depth` is the radius of the region; the store is grown by
// interior_margin and every comparison is restricted to the region.
DualityResult verify_duality(GroupModel const& model, std::optional<int> depth,
                             kernels::Execution exec = kernels::Execution::Parallel);

}  // namespace vondyck

#endif  // VONDYCK_PIPELINE_HPP_
