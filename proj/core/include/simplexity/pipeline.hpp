#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "simplexity/coloring_product.hpp"
#include "simplexity/simplicial_complex.hpp"

namespace simplexity {

struct PipelineSpec
{
    unsigned target_dim = 4;
    unsigned l = 3;
    unsigned m = 3;
    std::string seed = "i3d2"; // i3d2 | i3d1 | square_family | unimodular
    ColoringStrategy coloring = ColoringStrategy::random;
    std::uint64_t rng_seed = 1;
    std::size_t samples = 64;
    bool validate = true;
    unsigned face_check_max_dim = 6;
    /// Skip building the final triangulation and report its closed-form size only.
    bool size_only = false;
};

struct StepReport
{
    unsigned d = 0;        // dimension reached by this step
    unsigned n = 0;        // Q = I^(n-1)
    unsigned m = 1;        // colors used
    std::string seed;      // seed actually used
    std::uint64_t q_size = 0;
    Rational t0;           // weighted size of the seed
    std::uint64_t size = 0;
    Rational bound;        // |T_Q| t0 (n/m + l)^l
    Rational expected;     // exact expectation over uniform colorings
    std::uint64_t rng_seed = 0;
    std::size_t samples = 0;
    std::vector<unsigned> colors; // best coloring of Q's vertices, 0-based
    bool within_bound = false;
    /// Cellwise dissection check against the previous level, when the chain runs.
    std::optional<ValidityReport> validity;
};

struct PipelineResult
{
    Triangulation triangulation; // empty when size_only
    std::uint64_t size = 0;
    unsigned base_dim = 0;
    std::vector<StepReport> steps;
    std::optional<ValidityReport> validity;
    std::vector<std::string> notes;
};

/// Start from the smallest cube triangulation of dimension ((d-1) mod l) + 1
/// and repeatedly triangulate I^l x I^(n-1) with the seed, keeping the best
/// sampled coloring. m is clamped to min(m, n) per step; the seed follows
/// (i3d2 for m = 3, i3d1 for m = 2, the minimal cube for m = 1).
/// Validation: full face-to-face up to face_check_max_dim; above it, the base
/// and every step are checked cellwise against the level below.
PipelineResult build_cube_recursive(const PipelineSpec& spec);

/// Triangulation of I^(k+l) refining T_k x T_l by staircases
/// (the coloring construction with a single color).
Triangulation build_cube_haiman(const Triangulation& tk, const Triangulation& tl);

/// Smallest size reachable by Haiman products of the minimal triangulations
/// of I^1, I^2, I^3: h(d) = min_k h(k) h(d-k) C(d, k).
Integer haiman_size(unsigned d);

inline constexpr double asymptotic_target_i3d1 = 0.8355;
inline constexpr double asymptotic_target_i3d2 = 0.8159;

struct TableRow
{
    unsigned d = 0;
    std::uint64_t size = 0;
    double efficiency = 0;
    Rational bound; // zero for base cases
    double hadamard = 0;
    std::optional<double> smith;
    std::optional<std::uint64_t> phi_known;
    std::optional<double> rho_known;
    Integer haiman;
    double haiman_efficiency = 0;
};

std::vector<TableRow> report_table(unsigned d_max, const PipelineSpec& base = {});
void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);

} // namespace simplexity
