#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace simplexity {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Lattice coordinates. Coordinates themselves are small; every quantity
/// derived from them (determinants, volumes, pivots) is computed exactly,
/// first in overflow-checked 64-bit arithmetic and, on overflow, again with
/// arbitrary precision.
using Coordinate = std::int64_t;
using Index = std::uint32_t;
using Point = std::vector<Coordinate>;

/// Upper bound on the number of facets tracked per configuration.
inline constexpr std::size_t max_tracked_facets = 128;
using FacetSet = std::bitset<max_tracked_facets>;

/// Row-major dense matrix; used for determinant and rank computations.
template <class T>
struct DenseMatrix
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c, T fill = T(0))
        : rows(r)
        , cols(c)
        , data(r * c, fill)
    {}

    T& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

using CoordinateMatrix = DenseMatrix<Coordinate>;

/// Structured description of the polytope a configuration lists the vertices of.
struct ConfigLabel
{
    enum class Kind {
        custom,
        cube,               // I^a
        simplex,            // Delta^a
        cube_times_simplex, // I^a x Delta^b
        simplex_times_simplex, // Delta^a x Delta^b
        minkowski_cubes,    // I^a + ... + I^a (b summands), lattice points {0..b}^a
    };

    Kind kind = Kind::custom;
    int a = 0;
    int b = 0;

    static ConfigLabel cube(int l) { return {Kind::cube, l, 0}; }
    static ConfigLabel simplex(int k) { return {Kind::simplex, k, 0}; }
    static ConfigLabel cube_times_simplex(int l, int k) { return {Kind::cube_times_simplex, l, k}; }
    static ConfigLabel simplex_times_simplex(int k, int l) { return {Kind::simplex_times_simplex, k, l}; }
    static ConfigLabel minkowski_cubes(int l, int m) { return {Kind::minkowski_cubes, l, m}; }

    /// e.g. "cube(3)", "cube(3)xsimplex(2)", "minkowski-sum(cube(2),3)".
    std::string to_string() const;
    /// Inverse of to_string(); throws std::invalid_argument on malformed text.
    static ConfigLabel parse(const std::string& text);

    bool operator==(const ConfigLabel&) const = default;
};

std::ostream& operator<<(std::ostream& os, const ConfigLabel& label);

/// Normalized volume: d! times Euclidean volume, i.e. |det| of edge vectors.
class NormalizedVolume
{
  public:
    NormalizedVolume() = default;
    explicit NormalizedVolume(Integer v);

    const Integer& value() const { return m_value; }
    bool is_zero() const { return m_value == 0; }

    NormalizedVolume& operator+=(const NormalizedVolume& other)
    {
        m_value += other.m_value;
        return *this;
    }
    friend NormalizedVolume operator+(NormalizedVolume a, const NormalizedVolume& b) { return a += b; }
    friend bool operator==(const NormalizedVolume& a, const NormalizedVolume& b) { return a.m_value == b.m_value; }
    friend bool operator<(const NormalizedVolume& a, const NormalizedVolume& b) { return a.m_value < b.m_value; }

  private:
    Integer m_value = 0;
};

std::ostream& operator<<(std::ostream& os, const NormalizedVolume& v);

/// Indexed list of distinct lattice points of one dimension. The index order
/// is the canonical total order every downstream tie-break refers to.
class PointConfiguration
{
  public:
    PointConfiguration(std::size_t dim, std::vector<Point> points, ConfigLabel label = {});

    std::size_t dim() const { return m_dim; }
    std::size_t size() const { return m_count; }
    const ConfigLabel& label() const { return m_label; }

    std::span<const Coordinate> point(std::size_t i) const
    {
        return {m_coords.data() + i * m_dim, m_dim};
    }
    Point point_copy(std::size_t i) const;

    /// For product configurations A x B with vertex (a, b) stored at index
    /// a * |B| + b: the sizes (|A|, |B|). Zero when not a product.
    std::size_t left_factor_size() const { return m_left_factor; }
    std::size_t right_factor_size() const { return m_right_factor; }
    bool is_product() const { return m_right_factor != 0; }
    void set_product_factors(std::size_t left, std::size_t right);

    /// Facets of conv(points) containing point i. Available for labeled
    /// configurations; computed by brute force for small custom ones.
    const FacetSet& facets_of(std::size_t i) const { return m_facets[i]; }
    std::size_t facet_count() const { return m_facet_count; }

    /// Index of the point with the given coordinates, or size() if absent.
    std::size_t find(std::span<const Coordinate> coords) const;

  private:
    void compute_facets();

    std::size_t m_dim;
    std::size_t m_count;
    std::vector<Coordinate> m_coords;
    ConfigLabel m_label;
    std::size_t m_left_factor = 0;
    std::size_t m_right_factor = 0;
    std::size_t m_facet_count = 0;
    std::vector<FacetSet> m_facets;
};

using ConfigPtr = std::shared_ptr<const PointConfiguration>;

/// Vertices of I^l in binary-counter order: index bit (l-1-j) is coordinate j,
/// so index order equals lexicographic coordinate order.
ConfigPtr cube_configuration(int l);
/// Vertices 0, e_1, ..., e_k of the standard k-simplex in R^k.
ConfigPtr simplex_configuration(int k);
/// Cartesian product A x B, vertices ordered lexicographically by (a, b).
/// Labels cube x cube as a cube and cube x simplex / simplex x simplex accordingly.
ConfigPtr product_configuration(const ConfigPtr& left, const ConfigPtr& right);
/// I^l x Delta^(m-1).
ConfigPtr cube_times_simplex_configuration(int l, int m);
/// Lattice points {0, ..., m}^l of the Minkowski sum of m copies of I^l.
ConfigPtr minkowski_cubes_configuration(int l, int m);

/// Canonical configuration of a labeled polytope; throws for custom labels.
ConfigPtr make_configuration(const ConfigLabel& label);

/// Exact determinant of a square integer matrix (fraction-free elimination).
Integer determinant(const CoordinateMatrix& m);
int determinant_sign(const CoordinateMatrix& m);
/// Exact rank of an integer matrix.
std::size_t matrix_rank(const CoordinateMatrix& m);

/// |det(p_1 - p_0, ..., p_d - p_0)| for d+1 points in dimension d.
NormalizedVolume normalized_volume(std::span<const Point> vertices);
NormalizedVolume normalized_volume(const PointConfiguration& config, std::span<const Index> vertices);

/// Signed version of normalized_volume for points of a configuration.
Integer signed_volume(const PointConfiguration& config, std::span<const Index> vertices);

/// Dimension of the affine hull of a non-empty point list.
std::size_t affine_rank(std::span<const Point> points);
std::size_t affine_rank(const PointConfiguration& config, std::span<const Index> vertices);

/// Exact normalized volume of a labeled polytope in its ambient dimension.
NormalizedVolume ambient_normalized_volume(const ConfigLabel& label);

Integer factorial(unsigned n);
/// Binomial coefficient with the conventions C(n, 0) = 1 for every n
/// (including n = -1) and C(n, k) = 0 for 0 <= n < k.
std::uint64_t binomial(long n, long k);

/// Integer adjugate of the edge matrix of a full-dimensional simplex. Row i of
/// `barycentric` times (x - v_0) gives det * lambda_{i+1}(x); lambda_0 follows
/// from the coordinates summing to det.
struct SimplexFrame
{
    std::vector<Coordinate> origin;
    CoordinateMatrix adjugate;
    Coordinate det = 0;

    /// det * barycentric coordinates of x (d+1 entries), exact.
    void scaled_barycentric(std::span<const Coordinate> x, std::span<Integer> out) const;
    /// Same, in 64-bit arithmetic; returns false on overflow.
    bool scaled_barycentric_fast(std::span<const Coordinate> x, std::span<std::int64_t> out) const;
};

/// Builds the frame, or returns false when the adjugate does not fit in 64 bits
/// or the simplex is degenerate.
bool make_simplex_frame(const PointConfiguration& config, std::span<const Index> vertices, SimplexFrame& frame);

} // namespace simplexity
