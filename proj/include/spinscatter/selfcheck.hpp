#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinscatter/linalg.hpp"

namespace spinscatter {

struct InvariantDeviation {
  std::string name;
  double max_deviation = 0.0;
};

/// Runs every operator identity and cross-module invariant on `trials`
/// seeded random elastic geometries (mixing arbitrary orientations with
/// normal-incidence ones) and returns the worst deviation seen per
/// invariant, in a fixed order. Everything listed vanishes in exact
/// arithmetic; the accepted threshold is 1e-10.
std::vector<InvariantDeviation> run_invariant_suite(std::uint64_t seed,
                                                    int trials);

/// Names reported by run_invariant_suite, in order.
const std::vector<std::string>& invariant_names();

}  // namespace spinscatter
