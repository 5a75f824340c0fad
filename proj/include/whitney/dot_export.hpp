#pragma once

#include "whitney/poset.hpp"

#include <string>

namespace whitney {

/// Hasse diagram in DOT digraph format: one node per element, one edge per
/// cover (lower -> upper), elements of equal height grouped on one rank.
std::string to_dot(const Poset& p, const std::string& graph_name = "hasse");

}  // namespace whitney
