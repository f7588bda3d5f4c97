#pragma once

#include <string>

#include "gitkit/serialize.hpp"

namespace gitkit::cli {

/// Renders a report as markdown: one section per top-level key, arrays of
/// objects as tables, everything else as inline JSON.
std::string to_markdown(const Json& report);

}  // namespace gitkit::cli
