#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "gitkit/arith.hpp"
#include "gitkit/downgrade.hpp"
#include "gitkit/serialize.hpp"
#include "gitkit/toric_git.hpp"

namespace gitkit::cli {

struct Problem {
  std::size_t rank = 0;
  std::vector<IntVector> cone_rays;
  std::optional<IntMatrix> embedding;  // rank x rank'
  std::optional<unsigned> box;
  std::vector<GitClaim> git_claims;
  std::vector<DowngradeClaim> downgrade_claims;
};

/// Validates the whole document before anything is computed. Errors carry the
/// JSON pointer of the offending field.
Problem parse_problem(const Json& doc);
Problem load_problem(const std::filesystem::path& path);
Json echo(const Problem& p);

}  // namespace gitkit::cli
