#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simplexity/exact_geometry.hpp"

namespace simplexity {

/// Sorted vertex indices into a PointConfiguration.
using Simplex = std::vector<Index>;

/// Full-dimensional simplices over one configuration, stored flat with a
/// stride of dim + 1 indices per simplex.
class Triangulation
{
  public:
    Triangulation() = default;
    explicit Triangulation(ConfigPtr config);

    const ConfigPtr& config_ptr() const { return m_config; }
    const PointConfiguration& config() const { return *m_config; }
    std::size_t stride() const { return m_stride; }
    std::size_t size() const { return m_stride == 0 ? 0 : m_indices.size() / m_stride; }
    bool empty() const { return m_indices.empty(); }

    std::span<const Index> simplex(std::size_t i) const { return {m_indices.data() + i * m_stride, m_stride}; }
    Simplex simplex_copy(std::size_t i) const
    {
        auto s = simplex(i);
        return {s.begin(), s.end()};
    }

    /// Adds a simplex; vertices are sorted and must be distinct and in range.
    void add(std::span<const Index> vertices);
    void add(std::initializer_list<Index> vertices) { add(std::span<const Index>(vertices.begin(), vertices.size())); }
    void reserve(std::size_t simplices) { m_indices.reserve(simplices * m_stride); }
    /// Sorts simplices lexicographically; output order becomes canonical.
    void sort();

    const std::vector<Index>& raw() const { return m_indices; }

  private:
    ConfigPtr m_config;
    std::size_t m_stride = 0;
    std::vector<Index> m_indices;
};

inline constexpr std::size_t no_simplex = std::numeric_limits<std::size_t>::max();

struct Violation
{
    std::size_t first = no_simplex;
    std::size_t second = no_simplex;
    std::string reason;
};

struct ValidityReport
{
    bool is_dissection = false;
    bool is_face_to_face = false;
    NormalizedVolume volume_total;
    std::vector<Violation> violations;
    /// "pairwise" or "ridge" for the interior-disjointness proof used.
    std::string method;
    std::size_t lp_calls = 0;
};

enum class DissectionMode {
    automatic, // pairwise below the pair budget, ridge certificate above
    pairwise,
    ridge,
};

struct ValidationOptions
{
    DissectionMode mode = DissectionMode::automatic;
    std::size_t pair_budget = 20'000'000;
    /// Reports stop collecting after this many violations (the verdict is unaffected).
    std::size_t max_violations = 1000;
};

/// Volume sum against `expected` plus pairwise interior disjointness.
///
/// The ridge mode proves disjointness without pairs: with no degenerate
/// simplex, every ridge on the boundary in exactly one simplex and every other
/// ridge in exactly two simplices lying on opposite sides, the number of
/// simplices covering a generic point is constant, and the volume sum pins it
/// to one.
ValidityReport validate_dissection(const Triangulation& t, const NormalizedVolume& expected,
                                   const ValidationOptions& options = {});

/// Dissection check for a triangulation of P x Q refining the cells P x sigma,
/// sigma in `coarse`, a dissection of Q verified by the caller. Each simplex is
/// assigned to the cell its projection onto Q spans; the exact pairwise test
/// runs within each cell, and simplices of different cells are disjoint
/// because their projections are.
ValidityReport validate_dissection_cellwise(const Triangulation& t, const Triangulation& coarse,
                                            const NormalizedVolume& expected, const ValidationOptions& options = {});

/// Dissection check followed by the exact pairwise test
/// conv(S1) cap conv(S2) = conv(S1 cap S2). Without `expected`, the ambient
/// volume of the configuration label is used.
ValidityReport validate_face_to_face(const Triangulation& t, std::optional<NormalizedVolume> expected = {},
                                     const ValidationOptions& options = {});

/// Whether the d points span a hyperplane supporting conv(config), i.e. the
/// ridge lies in the boundary.
bool ridge_on_boundary(const PointConfiguration& config, std::span<const Index> ridge);

/// (|T| / d!)^(1/d), for reporting only.
double efficiency(const Integer& size, unsigned d);
double efficiency(std::uint64_t size, unsigned d);

struct SimplexType
{
    std::vector<unsigned> t;
    Rational weight;
};

/// Type of a simplex of P x Delta^(m-1): t_i is the number of its vertices
/// over the i-th simplex vertex, minus one.
SimplexType simplex_type(const PointConfiguration& product, std::span<const Index> simplex);

/// Sum of 1 / prod t_i! over the simplices of a triangulation of P x Delta^(m-1).
Rational weighted_size(const Triangulation& t);

/// (weighted / m^l)^(1/l), for reporting only.
double weighted_efficiency(const Rational& weighted, unsigned m, unsigned l);

/// Decimal rendering of a rational, `digits` after the point.
std::string to_decimal(const Rational& r, int digits);
double to_double(const Rational& r);

} // namespace simplexity
