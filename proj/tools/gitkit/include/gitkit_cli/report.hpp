#pragma once

#include <string>

#include "gitkit/serialize.hpp"
#include "gitkit_cli/problem.hpp"

namespace gitkit::cli {

struct Outcome {
  Json report;
  bool failed = false;  // a verification or invariant check did not hold
};

Outcome hilbert_report(const Problem& p);
Outcome orbit_cones_report(const Problem& p);
Outcome git_fan_report(const Problem& p);
Outcome downgrade_fan_report(const Problem& p);
Outcome ppdivisor_report(const Problem& p);
Outcome verify_report(const Problem& p, unsigned box);

/// Runs every pipeline on the built-in example and checks its known values.
Outcome selfcheck_report();

/// The example cone with its subtorus and reference tables.
Json example_problem();

std::string vector_text(const IntVector& v);
std::string cone_text(const Cone& c);

}  // namespace gitkit::cli
