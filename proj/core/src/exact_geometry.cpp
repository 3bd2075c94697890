#include "simplexity/exact_geometry.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "simplexity/detail/checked_int.hpp"

namespace simplexity {

using detail::CheckedInt;

// ---------------------------------------------------------------------------
// ConfigLabel

std::string ConfigLabel::to_string() const
{
    std::ostringstream os;
    switch (kind) {
    case Kind::custom: os << "custom"; break;
    case Kind::cube: os << "cube(" << a << ")"; break;
    case Kind::simplex: os << "simplex(" << a << ")"; break;
    case Kind::cube_times_simplex: os << "cube(" << a << ")xsimplex(" << b << ")"; break;
    case Kind::simplex_times_simplex: os << "simplex(" << a << ")xsimplex(" << b << ")"; break;
    case Kind::minkowski_cubes: os << "minkowski-sum(cube(" << a << ")," << b << ")"; break;
    }
    return os.str();
}

ConfigLabel ConfigLabel::parse(const std::string& text)
{
    std::smatch m;
    static const std::regex cube_re(R"(^\s*cube\((\d+)\)\s*$)");
    static const std::regex simplex_re(R"(^\s*simplex\((\d+)\)\s*$)");
    static const std::regex cs_re(R"(^\s*cube\((\d+)\)\s*x\s*simplex\((\d+)\)\s*$)");
    static const std::regex ss_re(R"(^\s*simplex\((\d+)\)\s*x\s*simplex\((\d+)\)\s*$)");
    static const std::regex mk_re(R"(^\s*minkowski-sum\(\s*cube\((\d+)\)\s*,\s*(\d+)\s*\)\s*$)");
    if (text == "custom") return {};
    if (std::regex_match(text, m, cube_re)) return cube(std::stoi(m[1]));
    if (std::regex_match(text, m, simplex_re)) return simplex(std::stoi(m[1]));
    if (std::regex_match(text, m, cs_re)) return cube_times_simplex(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(text, m, ss_re)) return simplex_times_simplex(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(text, m, mk_re)) return minkowski_cubes(std::stoi(m[1]), std::stoi(m[2]));
    throw std::invalid_argument("unrecognized configuration label: " + text);
}

std::ostream& operator<<(std::ostream& os, const ConfigLabel& label) { return os << label.to_string(); }

// ---------------------------------------------------------------------------
// NormalizedVolume

NormalizedVolume::NormalizedVolume(Integer v)
    : m_value(std::move(v))
{
    if (m_value < 0) throw std::invalid_argument("normalized volume must be non-negative");
}

std::ostream& operator<<(std::ostream& os, const NormalizedVolume& v) { return os << v.value(); }

// ---------------------------------------------------------------------------
// Determinants and rank

Integer determinant(const CoordinateMatrix& m)
{
    if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
    try {
        return Integer(detail::bareiss_determinant(detail::convert_matrix<CheckedInt>(m)).value());
    } catch (const detail::Overflow&) {
        return detail::bareiss_determinant(detail::convert_matrix<Integer>(m));
    }
}

int determinant_sign(const CoordinateMatrix& m) { return determinant(m).sign(); }

std::size_t matrix_rank(const CoordinateMatrix& m)
{
    try {
        return detail::bareiss_rank(detail::convert_matrix<CheckedInt>(m));
    } catch (const detail::Overflow&) {
        return detail::bareiss_rank(detail::convert_matrix<Integer>(m));
    }
}

namespace {

CoordinateMatrix edge_matrix(std::span<const Point> vertices)
{
    const std::size_t d = vertices.front().size();
    CoordinateMatrix m(vertices.size() - 1, d);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        if (vertices[i].size() != d) throw std::invalid_argument("points of different dimensions");
        for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = vertices[i][j] - vertices[0][j];
    }
    return m;
}

CoordinateMatrix edge_matrix(const PointConfiguration& config, std::span<const Index> vertices)
{
    const std::size_t d = config.dim();
    CoordinateMatrix m(vertices.size() - 1, d);
    const auto p0 = config.point(vertices[0]);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        const auto p = config.point(vertices[i]);
        for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = p[j] - p0[j];
    }
    return m;
}

} // namespace

NormalizedVolume normalized_volume(std::span<const Point> vertices)
{
    if (vertices.empty()) throw std::invalid_argument("normalized_volume: no points");
    const std::size_t d = vertices.front().size();
    if (vertices.size() != d + 1) {
        throw std::invalid_argument("normalized_volume: expected " + std::to_string(d + 1) + " points, got " +
                                    std::to_string(vertices.size()));
    }
    return NormalizedVolume(abs(determinant(edge_matrix(vertices))));
}

Integer signed_volume(const PointConfiguration& config, std::span<const Index> vertices)
{
    if (vertices.size() != config.dim() + 1) {
        throw std::invalid_argument("signed_volume: expected " + std::to_string(config.dim() + 1) + " vertices");
    }
    return determinant(edge_matrix(config, vertices));
}

NormalizedVolume normalized_volume(const PointConfiguration& config, std::span<const Index> vertices)
{
    return NormalizedVolume(abs(signed_volume(config, vertices)));
}

std::size_t affine_rank(std::span<const Point> points)
{
    if (points.empty()) throw std::invalid_argument("affine_rank: empty point list");
    if (points.size() == 1) {
        return 0;
    }
    return matrix_rank(edge_matrix(points));
}

std::size_t affine_rank(const PointConfiguration& config, std::span<const Index> vertices)
{
    if (vertices.empty()) throw std::invalid_argument("affine_rank: empty point list");
    if (vertices.size() == 1) return 0;
    return matrix_rank(edge_matrix(config, vertices));
}

Integer factorial(unsigned n)
{
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

std::uint64_t binomial(long n, long k)
{
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n < k) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (long i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (r > UINT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

NormalizedVolume ambient_normalized_volume(const ConfigLabel& label)
{
    using K = ConfigLabel::Kind;
    switch (label.kind) {
    case K::cube: return NormalizedVolume(factorial(label.a));
    case K::simplex: return NormalizedVolume(Integer(1));
    case K::cube_times_simplex: return NormalizedVolume(factorial(label.a + label.b) / factorial(label.b));
    case K::simplex_times_simplex: return NormalizedVolume(Integer(binomial(label.a + label.b, label.a)));
    case K::minkowski_cubes: return NormalizedVolume(pow(Integer(label.b), label.a) * factorial(label.a));
    case K::custom: break;
    }
    throw std::invalid_argument("ambient_normalized_volume: unsupported label " + label.to_string());
}

// ---------------------------------------------------------------------------
// PointConfiguration

PointConfiguration::PointConfiguration(std::size_t dim, std::vector<Point> points, ConfigLabel label)
    : m_dim(dim)
    , m_count(points.size())
    , m_label(label)
{
    m_coords.reserve(points.size() * dim);
    for (const auto& p : points) {
        if (p.size() != dim) throw std::invalid_argument("PointConfiguration: point of wrong dimension");
        m_coords.insert(m_coords.end(), p.begin(), p.end());
    }
    std::set<Point> seen(points.begin(), points.end());
    if (seen.size() != points.size()) throw std::invalid_argument("PointConfiguration: repeated point");
    compute_facets();
}

Point PointConfiguration::point_copy(std::size_t i) const
{
    auto p = point(i);
    return {p.begin(), p.end()};
}

void PointConfiguration::set_product_factors(std::size_t left, std::size_t right)
{
    if (left * right != m_count) throw std::invalid_argument("product factor sizes do not match point count");
    m_left_factor = left;
    m_right_factor = right;
}

std::size_t PointConfiguration::find(std::span<const Coordinate> coords) const
{
    for (std::size_t i = 0; i < m_count; ++i) {
        auto p = point(i);
        if (std::equal(p.begin(), p.end(), coords.begin(), coords.end())) return i;
    }
    return m_count;
}

void PointConfiguration::compute_facets()
{
    using K = ConfigLabel::Kind;
    m_facets.assign(m_count, FacetSet{});
    switch (m_label.kind) {
    case K::cube:
    case K::minkowski_cubes: {
        const Coordinate hi = m_label.kind == K::cube ? 1 : m_label.b;
        m_facet_count = 2 * m_dim;
        for (std::size_t i = 0; i < m_count; ++i) {
            auto p = point(i);
            for (std::size_t j = 0; j < m_dim; ++j) {
                if (p[j] == 0) m_facets[i].set(2 * j);
                if (p[j] == hi) m_facets[i].set(2 * j + 1);
            }
        }
        return;
    }
    case K::simplex:
    case K::cube_times_simplex:
    case K::simplex_times_simplex: {
        // Facets of a product are (facet of one factor) x (other factor).
        // Simplex facets: 0 is sum(y) = 1, f >= 1 is y_{f-1} = 0. Cube facets
        // come in pairs x_j = 0, x_j = 1.
        struct Factor { bool cube; std::size_t dim; };
        std::vector<Factor> factors;
        if (m_label.kind == K::simplex) factors = {{false, std::size_t(m_label.a)}};
        if (m_label.kind == K::cube_times_simplex) factors = {{true, std::size_t(m_label.a)}, {false, std::size_t(m_label.b)}};
        if (m_label.kind == K::simplex_times_simplex) factors = {{false, std::size_t(m_label.a)}, {false, std::size_t(m_label.b)}};
        std::size_t total = 0;
        for (const auto& f : factors) total += f.cube ? 2 * f.dim : (f.dim == 0 ? 0 : f.dim + 1);
        if (total > max_tracked_facets) return;
        m_facet_count = total;
        for (std::size_t i = 0; i < m_count; ++i) {
            auto p = point(i);
            std::size_t offset = 0;
            std::size_t coord = 0;
            for (const auto& f : factors) {
                if (f.cube) {
                    for (std::size_t j = 0; j < f.dim; ++j) {
                        if (p[coord + j] == 0) m_facets[i].set(offset + 2 * j);
                        if (p[coord + j] == 1) m_facets[i].set(offset + 2 * j + 1);
                    }
                    offset += 2 * f.dim;
                } else if (f.dim > 0) {
                    Coordinate sum = 0;
                    for (std::size_t j = 0; j < f.dim; ++j) {
                        sum += p[coord + j];
                        if (p[coord + j] == 0) m_facets[i].set(offset + 1 + j);
                    }
                    if (sum == 1) m_facets[i].set(offset);
                    offset += f.dim + 1;
                }
                coord += f.dim;
            }
        }
        return;
    }
    default: break;
    }
    // Custom configurations: brute force over d-subsets when small.
    if (m_dim == 0 || m_count <= m_dim) return;
    if (binomial(static_cast<long>(m_count), static_cast<long>(m_dim)) > 200000) return;

    std::vector<std::vector<bool>> facet_members;
    std::vector<Index> subset(m_dim);
    for (std::size_t i = 0; i < m_dim; ++i) subset[i] = static_cast<Index>(i);
    while (true) {
        // Normal of the hyperplane through the subset via cofactors.
        CoordinateMatrix diff(m_dim - 1, m_dim);
        auto p0 = point(subset[0]);
        for (std::size_t r = 1; r < m_dim; ++r) {
            auto p = point(subset[r]);
            for (std::size_t c = 0; c < m_dim; ++c) diff(r - 1, c) = p[c] - p0[c];
        }
        std::vector<Integer> normal(m_dim);
        bool nonzero = false;
        for (std::size_t c = 0; c < m_dim; ++c) {
            CoordinateMatrix minor(m_dim - 1, m_dim - 1);
            for (std::size_t r = 0; r + 1 < m_dim; ++r) {
                std::size_t cc = 0;
                for (std::size_t k = 0; k < m_dim; ++k) {
                    if (k == c) continue;
                    minor(r, cc++) = diff(r, k);
                }
            }
            normal[c] = determinant(minor);
            if (c % 2) normal[c] = -normal[c];
            if (normal[c] != 0) nonzero = true;
        }
        if (nonzero) {
            int side = 0;
            bool supporting = true;
            std::vector<bool> on(m_count, false);
            for (std::size_t i = 0; i < m_count && supporting; ++i) {
                auto p = point(i);
                Integer s = 0;
                for (std::size_t c = 0; c < m_dim; ++c) s += normal[c] * (p[c] - p0[c]);
                const int sg = s.sign();
                if (sg == 0) {
                    on[i] = true;
                } else if (side == 0) {
                    side = sg;
                } else if (side != sg) {
                    supporting = false;
                }
            }
            if (supporting && std::find(facet_members.begin(), facet_members.end(), on) == facet_members.end()) {
                facet_members.push_back(std::move(on));
            }
        }
        // next combination
        std::size_t k = m_dim;
        while (k > 0 && subset[k - 1] == m_count - m_dim + k - 1) --k;
        if (k == 0) break;
        ++subset[k - 1];
        for (std::size_t j = k; j < m_dim; ++j) subset[j] = subset[j - 1] + 1;
    }
    if (facet_members.size() > max_tracked_facets) return;
    m_facet_count = facet_members.size();
    for (std::size_t f = 0; f < facet_members.size(); ++f) {
        for (std::size_t i = 0; i < m_count; ++i) {
            if (facet_members[f][i]) m_facets[i].set(f);
        }
    }
}

// ---------------------------------------------------------------------------
// Builders

ConfigPtr cube_configuration(int l)
{
    if (l < 0 || l > 24) throw std::invalid_argument("cube_configuration: dimension out of range");
    std::vector<Point> pts;
    const std::size_t n = std::size_t{1} << l;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Point p(l);
        for (int j = 0; j < l; ++j) p[j] = static_cast<Coordinate>((i >> (l - 1 - j)) & 1u);
        pts.push_back(std::move(p));
    }
    return std::make_shared<PointConfiguration>(l, std::move(pts), ConfigLabel::cube(l));
}

ConfigPtr simplex_configuration(int k)
{
    if (k < 0) throw std::invalid_argument("simplex_configuration: negative dimension");
    std::vector<Point> pts;
    pts.emplace_back(k, 0);
    for (int i = 0; i < k; ++i) {
        Point p(k, 0);
        p[i] = 1;
        pts.push_back(std::move(p));
    }
    return std::make_shared<PointConfiguration>(k, std::move(pts), ConfigLabel::simplex(k));
}

ConfigPtr product_configuration(const ConfigPtr& left, const ConfigPtr& right)
{
    using K = ConfigLabel::Kind;
    ConfigLabel label;
    const auto& la = left->label();
    const auto& lb = right->label();
    if (la.kind == K::cube && lb.kind == K::cube) {
        label = ConfigLabel::cube(la.a + lb.a);
    } else if (la.kind == K::cube && lb.kind == K::simplex) {
        label = ConfigLabel::cube_times_simplex(la.a, lb.a);
    } else if (la.kind == K::simplex && lb.kind == K::simplex) {
        label = ConfigLabel::simplex_times_simplex(la.a, lb.a);
    }
    std::vector<Point> pts;
    pts.reserve(left->size() * right->size());
    for (std::size_t i = 0; i < left->size(); ++i) {
        for (std::size_t j = 0; j < right->size(); ++j) {
            Point p;
            p.reserve(left->dim() + right->dim());
            auto a = left->point(i);
            auto b = right->point(j);
            p.insert(p.end(), a.begin(), a.end());
            p.insert(p.end(), b.begin(), b.end());
            pts.push_back(std::move(p));
        }
    }
    auto config = std::make_shared<PointConfiguration>(left->dim() + right->dim(), std::move(pts), label);
    config->set_product_factors(left->size(), right->size());
    return config;
}

ConfigPtr cube_times_simplex_configuration(int l, int m)
{
    if (m < 1) throw std::invalid_argument("cube_times_simplex_configuration: m must be positive");
    return product_configuration(cube_configuration(l), simplex_configuration(m - 1));
}

ConfigPtr minkowski_cubes_configuration(int l, int m)
{
    if (l < 0 || m < 1) throw std::invalid_argument("minkowski_cubes_configuration: bad arguments");
    std::vector<Point> pts;
    Point p(l, 0);
    while (true) {
        pts.push_back(p);
        int j = l - 1;
        while (j >= 0 && p[j] == m) p[j--] = 0;
        if (j < 0) break;
        ++p[j];
    }
    return std::make_shared<PointConfiguration>(l, std::move(pts), ConfigLabel::minkowski_cubes(l, m));
}

ConfigPtr make_configuration(const ConfigLabel& label)
{
    using K = ConfigLabel::Kind;
    switch (label.kind) {
    case K::cube: return cube_configuration(label.a);
    case K::simplex: return simplex_configuration(label.a);
    case K::cube_times_simplex: return cube_times_simplex_configuration(label.a, label.b + 1);
    case K::simplex_times_simplex:
        return product_configuration(simplex_configuration(label.a), simplex_configuration(label.b));
    case K::minkowski_cubes: return minkowski_cubes_configuration(label.a, label.b);
    case K::custom: break;
    }
    throw std::invalid_argument("make_configuration: custom configurations need explicit points");
}

// ---------------------------------------------------------------------------
// SimplexFrame

bool make_simplex_frame(const PointConfiguration& config, std::span<const Index> vertices, SimplexFrame& frame)
{
    const std::size_t d = config.dim();
    if (vertices.size() != d + 1) throw std::invalid_argument("make_simplex_frame: wrong vertex count");
    auto p0 = config.point(vertices[0]);
    frame.origin.assign(p0.begin(), p0.end());
    // Columns of e are the edge vectors v_i - v_0.
    CoordinateMatrix e(d, d);
    for (std::size_t i = 1; i <= d; ++i) {
        auto p = config.point(vertices[i]);
        for (std::size_t r = 0; r < d; ++r) e(r, i - 1) = p[r] - p0[r];
    }
    try {
        const auto det = detail::bareiss_determinant(detail::convert_matrix<CheckedInt>(e));
        if (det == CheckedInt(0)) return false;
        frame.det = det.value();
        frame.adjugate = CoordinateMatrix(d, d);
        if (d == 1) {
            frame.adjugate(0, 0) = 1;
            return true;
        }
        DenseMatrix<CheckedInt> minor(d - 1, d - 1);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                // adj(e)(i, j) = (-1)^(i+j) det(e without row j, column i)
                std::size_t rr = 0;
                for (std::size_t r = 0; r < d; ++r) {
                    if (r == j) continue;
                    std::size_t cc = 0;
                    for (std::size_t c = 0; c < d; ++c) {
                        if (c == i) continue;
                        minor(rr, cc++) = CheckedInt(e(r, c));
                    }
                    ++rr;
                }
                auto v = detail::bareiss_determinant(minor);
                if ((i + j) % 2) v = -v;
                frame.adjugate(i, j) = v.value();
            }
        }
    } catch (const detail::Overflow&) {
        return false;
    }
    return true;
}

void SimplexFrame::scaled_barycentric(std::span<const Coordinate> x, std::span<Integer> out) const
{
    const std::size_t d = origin.size();
    Integer rest = det;
    for (std::size_t i = 0; i < d; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < d; ++j) s += Integer(adjugate(i, j)) * (x[j] - origin[j]);
        out[i + 1] = s;
        rest -= s;
    }
    out[0] = rest;
}

bool SimplexFrame::scaled_barycentric_fast(std::span<const Coordinate> x, std::span<std::int64_t> out) const
{
    const std::size_t d = origin.size();
    std::int64_t rest = det;
    for (std::size_t i = 0; i < d; ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < d; ++j) {
            std::int64_t t;
            if (__builtin_mul_overflow(adjugate(i, j), x[j] - origin[j], &t)) return false;
            if (__builtin_add_overflow(s, t, &s)) return false;
        }
        out[i + 1] = s;
        if (__builtin_sub_overflow(rest, s, &rest)) return false;
    }
    out[0] = rest;
    return true;
}

} // namespace simplexity
