#pragma once

#include <posetq/generators.hpp>

#include <string>
#include <vector>

namespace posetq {

enum class DotMode { Hasse, Geometric };

/// Hasse: cover edges drawn bottom-up, each chain boxed as a cluster (an
/// event on several chains joins the first), forward projections between
/// chains drawn dashed. Geometric: one dark node per chain, placed left to
/// right by geometric_order().
std::string export_dot(const Model &model, DotMode mode);

/// Chain indices ordered so that each chain lies between its neighbours
/// where the betweenness relation decides it. Starts from the first chain
/// that is not between any two others; ties keep the listed order.
std::vector<std::size_t> geometric_order(const Model &model);

} // namespace posetq
