#pragma once

#include <cstddef>
#include <functional>

#include "simplexity/exact_geometry.hpp"
#include "simplexity/simplicial_complex.hpp"

namespace simplexity {

enum class Objective {
    weighted,    // sum of 1 / prod t_i! (1 / d! per simplex for a plain cube)
    cardinality, // number of simplices
};

struct SearchProblem
{
    ConfigPtr config;
    Objective objective = Objective::weighted;
};

inline constexpr std::size_t max_candidate_simplices = 10'000;

/// Full-dimensional simplices of the configuration, lexicographically.
std::vector<Simplex> candidate_simplices(const PointConfiguration& config);

/// Visits every triangulation exactly once; the callback returns false to stop.
/// Backtracking: the simplex covering a fixed generic interior point is chosen
/// first, then each open interior ridge is closed from its uncovered side by a
/// simplex compatible with all chosen ones. Returns the number visited.
/// Throws std::length_error above max_candidate_simplices candidates.
std::size_t enumerate_triangulations(const SearchProblem& problem,
                                     const std::function<bool(const Triangulation&)>& visit);

struct SearchResult
{
    Rational value;
    Triangulation witness;
    std::size_t triangulations = 0;
};

/// Minimum of the objective over all triangulations, with the first witness found.
SearchResult min_weighted_size(const SearchProblem& problem);

/// Objective value of one triangulation.
Rational objective_value(const Triangulation& t, Objective objective);

} // namespace simplexity
