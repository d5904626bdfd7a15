#pragma once

#include "k3lat/config.hpp"
#include "k3lat/report.hpp"

#include <optional>

namespace k3lat {

struct CommandOptions {
  std::optional<int> degree_max;  // overrides config search_degree_max
  std::optional<int> orbit;       // overrides config orbit_count
  int power = 1;                  // matrix power shown by `dynamics`
  unsigned long seed = 0;         // seed for sampled membership diagnostics
};

// lattice facts: rank, determinant, signature, classes declared in the config
Report cmd_info(const Config& cfg);

// extremal rational-curve classes and their degrees
Report cmd_curves(const Config& cfg, const CommandOptions& opt);

// effective and nef cones with certified extremal rays
Report cmd_cones(const Config& cfg, const CommandOptions& opt);

// the covering involution fixing the ample class (requires self-intersection 2)
Report cmd_involution(const Config& cfg);

// the two certified involutions on the extended lattice, their composite,
// its characteristic polynomial, order certificate, fixed line and orbit
Report cmd_dynamics(const Config& cfg, const CommandOptions& opt);

// the surface squared: block lattice, swap isometry, invariant ample class
// and the Mori-dream-space checklist
Report cmd_product(const Config& cfg, const CommandOptions& opt);

// the full pinned-claim verification suite (every check listed even when a
// missing input only allows it to be reported as skipped)
Report cmd_verify_paper(const Config& cfg, const CommandOptions& opt);

}  // namespace k3lat
