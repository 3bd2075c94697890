#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "simplexity/exact_geometry.hpp"
#include "simplexity/simplicial_complex.hpp"

namespace simplexity {

enum class ColoringStrategy { random, balanced, explicit_map };

std::string to_string(ColoringStrategy s);
ColoringStrategy parse_coloring_strategy(const std::string& text);

/// Colors of the vertices of Q, stored 0-based (printed 1-based).
struct Coloring
{
    std::vector<unsigned> colors;
    unsigned m = 1;
    ColoringStrategy strategy = ColoringStrategy::balanced;
    std::uint64_t rng_seed = 0;
};

/// Deterministic 64-bit generator used for every random choice: mt19937_64
/// with rejection sampling for bounded draws, so results do not depend on the
/// standard library's distribution implementations.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);

  private:
    std::mt19937_64 m_engine;
};

/// Seed of sample `i` derived from a base seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t i);

Coloring make_coloring(std::size_t q_vertices, unsigned m, ColoringStrategy strategy, std::uint64_t rng_seed = 0,
                       const std::vector<unsigned>& explicit_colors = {});

/// The same triangulation over P x Delta^0.
Triangulation with_point_factor(const Triangulation& t);

/// Multi-staircase triangulation of P x Q from a triangulation of Q, a
/// triangulation of P x Delta^(m-1) and an m-coloring of Q's vertices.
Triangulation triangulate_product(const Triangulation& tq, const Triangulation& t0, const Coloring& coloring);

/// Closed-form size of triangulate_product for a coloring:
/// sum over sigma, tau of prod_i C(|sigma_i| + |tau_i| - 2, |tau_i| - 1).
std::uint64_t product_size(const Triangulation& tq, const Triangulation& t0, const Coloring& coloring);

/// |T_Q| * t0 * (n/m + l)^l.
Rational size_bound(std::uint64_t tq_size, const Rational& t0, unsigned n, unsigned m, unsigned l);

/// Expected size over uniform colorings via the per-simplex multinomial law.
Rational expected_size_multinomial(const Triangulation& tq, const Triangulation& t0, unsigned m);
/// Expected size by averaging product_size over all m^|V(Q)| colorings.
Rational expected_size_enumerated(const Triangulation& tq, const Triangulation& t0, unsigned m);

inline constexpr std::uint64_t max_enumerated_colorings = std::uint64_t{1} << 20;

/// Both computations above; throws std::logic_error if they differ and
/// std::length_error when there are more than 2^20 colorings.
Rational exact_expected_size(const Triangulation& tq, const Triangulation& t0, unsigned m);

/// E[prod_i (k_i + l_i - 2)_(l_i - 1)] for (k_1..k_m) multinomial with n trials
/// and uniform cells, where (x)_j is the falling factorial.
Rational falling_power_expectation(const std::vector<unsigned>& l, unsigned n, unsigned m);

struct SampleStatistics
{
    Rational mean;
    std::uint64_t min = 0;
    std::uint64_t max = 0;
    std::size_t samples = 0;
    std::uint64_t rng_seed = 0;
    Coloring best; // a coloring attaining min
};

SampleStatistics monte_carlo_size(const Triangulation& tq, const Triangulation& t0, unsigned m, std::size_t samples,
                                  std::uint64_t rng_seed);

} // namespace simplexity
