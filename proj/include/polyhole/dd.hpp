#pragma once

#include <cstddef>
#include <vector>

#include "polyhole/checked.hpp"

namespace polyhole {

/// Extreme rays of the cone {y in R^dim : g . y >= 0 for every g in
/// constraints}, by the incremental double description method over exact
/// integers. The final cone must be pointed (throws invalid_input otherwise).
/// Rays come back primitive and sorted.
std::vector<Vec> dual_extreme_rays(std::size_t dim, const std::vector<Vec>& constraints);

}  // namespace polyhole
