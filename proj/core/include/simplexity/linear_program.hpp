#pragma once

#include <span>

#include "simplexity/exact_geometry.hpp"

namespace simplexity {

/// Exact feasibility of { x >= 0 : A x = b } for integer A and b.
///
/// Phase-one simplex on a fraction-free integer tableau with Bland's rule, so
/// it terminates and never rounds. Runs in checked 64-bit arithmetic first and
/// repeats with arbitrary precision if an intermediate overflows.
bool nonnegative_solution_exists(const CoordinateMatrix& a, std::span<const Coordinate> b);

/// Whether the relative interiors of two full-dimensional simplices, given as
/// point indices of one configuration, have a common point.
bool simplex_interiors_intersect(const PointConfiguration& config, std::span<const Index> s1,
                                 std::span<const Index> s2);

/// Whether conv(s1) and conv(s2) meet in exactly conv(s1 cap s2). s1 must be
/// affinely independent; identical simplices count as meeting properly.
bool simplices_meet_properly(const PointConfiguration& config, std::span<const Index> s1,
                             std::span<const Index> s2);

} // namespace simplexity
