#include "simplexity/simplicial_complex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <limits>
#include <map>
#include <unordered_map>

#include "simplexity/linear_program.hpp"

namespace simplexity {

// ---------------------------------------------------------------------------
// Triangulation

Triangulation::Triangulation(ConfigPtr config)
    : m_config(std::move(config))
    , m_stride(m_config->dim() + 1)
{}

void Triangulation::add(std::span<const Index> vertices)
{
    if (vertices.size() != m_stride) {
        throw std::invalid_argument("Triangulation::add: expected " + std::to_string(m_stride) + " vertices, got " +
                                    std::to_string(vertices.size()));
    }
    const std::size_t start = m_indices.size();
    m_indices.insert(m_indices.end(), vertices.begin(), vertices.end());
    auto first = m_indices.begin() + static_cast<std::ptrdiff_t>(start);
    std::sort(first, m_indices.end());
    for (auto it = first; it != m_indices.end(); ++it) {
        if (*it >= m_config->size() || (it != first && *it == *(it - 1))) {
            m_indices.resize(start);
            throw std::invalid_argument("Triangulation::add: vertex index out of range or repeated");
        }
    }
}

void Triangulation::sort()
{
    const std::size_t n = size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto sa = simplex(a);
        auto sb = simplex(b);
        return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
    });
    std::vector<Index> sorted;
    sorted.reserve(m_indices.size());
    for (std::size_t i : order) {
        auto s = simplex(i);
        sorted.insert(sorted.end(), s.begin(), s.end());
    }
    m_indices = std::move(sorted);
}

// ---------------------------------------------------------------------------
// Pair predicates

namespace {

struct SpanHash
{
    std::size_t operator()(std::span<const Index> s) const
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (Index v : s) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

void add_violation(ValidityReport& report, const ValidationOptions& options, Violation v)
{
    if (report.violations.size() < options.max_violations) report.violations.push_back(std::move(v));
}

/// Per-simplex data shared by the pairwise scans over a subset of simplices:
/// adjugate frames, bounding boxes and, when it fits, a table of scaled
/// barycentric coordinates of the subset's points with respect to each simplex.
/// Local ids index `members`.
class PairOracle
{
  public:
    PairOracle(const Triangulation& t, std::vector<std::size_t> members, std::vector<Index> points)
        : m_t(t)
        , m_config(t.config())
        , m_d(t.config().dim())
        , m_members(std::move(members))
        , m_points(std::move(points))
    {
        const std::size_t n = m_members.size();
        m_frames.resize(n);
        m_has_frame.assign(n, false);
        m_lo.assign(n * m_d, 0);
        m_hi.assign(n * m_d, 0);
        for (std::size_t i = 0; i < n; ++i) {
            auto s = simplex(i);
            m_has_frame[i] = make_simplex_frame(m_config, s, m_frames[i]);
            for (std::size_t c = 0; c < m_d; ++c) {
                Coordinate lo = m_config.point(s[0])[c];
                Coordinate hi = lo;
                for (Index v : s) {
                    lo = std::min(lo, m_config.point(v)[c]);
                    hi = std::max(hi, m_config.point(v)[c]);
                }
                m_lo[i * m_d + c] = lo;
                m_hi[i * m_d + c] = hi;
            }
        }
        const std::size_t entries = n * m_points.size() * (m_d + 1);
        if (entries <= 16'000'000) {
            m_local.assign(m_config.size(), no_point);
            for (std::size_t p = 0; p < m_points.size(); ++p) m_local[m_points[p]] = static_cast<Index>(p);
            m_table.assign(entries, 0);
            m_table_ok.assign(n, false);
            std::vector<std::int64_t> buf(m_d + 1);
            for (std::size_t i = 0; i < n; ++i) {
                if (!m_has_frame[i]) continue;
                bool ok = true;
                for (std::size_t p = 0; p < m_points.size() && ok; ++p) {
                    ok = barycentric(i, m_points[p], buf);
                    std::copy(buf.begin(), buf.end(), m_table.begin() + static_cast<std::ptrdiff_t>(slot(i, p)));
                }
                m_table_ok[i] = ok;
            }
        }
    }

    /// Every simplex and every point of the configuration.
    static PairOracle whole(const Triangulation& t)
    {
        std::vector<std::size_t> members(t.size());
        std::iota(members.begin(), members.end(), 0);
        std::vector<Index> points(t.config().size());
        std::iota(points.begin(), points.end(), 0);
        return PairOracle(t, std::move(members), std::move(points));
    }

    std::size_t size() const { return m_members.size(); }
    std::size_t global(std::size_t local) const { return m_members[local]; }
    std::span<const Index> simplex(std::size_t local) const { return m_t.simplex(m_members[local]); }

    bool boxes_separated(std::size_t a, std::size_t b) const
    {
        for (std::size_t c = 0; c < m_d; ++c) {
            if (m_hi[a * m_d + c] < m_lo[b * m_d + c] || m_hi[b * m_d + c] < m_lo[a * m_d + c]) return true;
        }
        return false;
    }

    /// Some facet hyperplane of `a` has all of `b` weakly on its far side; with
    /// `proper`, the vertices of `b` on that hyperplane must also be vertices of `a`.
    bool facet_separates(std::size_t a, std::size_t b, bool proper) const
    {
        if (!m_has_frame[a]) return false;
        auto sa = simplex(a);
        auto sb = simplex(b);
        const std::size_t k = m_d + 1;
        std::int64_t stack_buf[64 * 17];
        std::vector<std::int64_t> heap_buf;
        std::int64_t* lam = stack_buf;
        if (k * k > sizeof(stack_buf) / sizeof(stack_buf[0])) {
            heap_buf.resize(k * k);
            lam = heap_buf.data();
        }
        const bool use_table = !m_table.empty() && m_table_ok[a];
        for (std::size_t j = 0; j < k; ++j) {
            if (use_table) {
                const Index local = m_local[sb[j]];
                if (local == no_point) return false;
                std::copy_n(m_table.begin() + static_cast<std::ptrdiff_t>(slot(a, local)), k, lam + j * k);
            } else {
                std::span<std::int64_t> row(lam + j * k, k);
                if (!barycentric(a, sb[j], row)) return false;
            }
        }
        for (std::size_t f = 0; f < k; ++f) {
            bool separated = true;
            for (std::size_t j = 0; j < k && separated; ++j) {
                const std::int64_t v = lam[j * k + f];
                if (v > 0) {
                    separated = false;
                } else if (v == 0 && proper && !std::binary_search(sa.begin(), sa.end(), sb[j])) {
                    separated = false;
                }
            }
            if (separated) return true;
        }
        return false;
    }

  private:
    static constexpr Index no_point = std::numeric_limits<Index>::max();

    std::size_t slot(std::size_t simplex, std::size_t point) const
    {
        return (simplex * m_points.size() + point) * (m_d + 1);
    }

    /// |det| * barycentric coordinates of point p in local simplex i.
    bool barycentric(std::size_t i, Index p, std::span<std::int64_t> out) const
    {
        if (!m_frames[i].scaled_barycentric_fast(m_config.point(p), out)) return false;
        if (m_frames[i].det < 0) {
            for (auto& v : out) v = -v;
        }
        return true;
    }

    const Triangulation& m_t;
    const PointConfiguration& m_config;
    std::size_t m_d;
    std::vector<std::size_t> m_members;
    std::vector<Index> m_points;
    std::vector<Index> m_local;
    std::vector<SimplexFrame> m_frames;
    std::vector<bool> m_has_frame;
    std::vector<Coordinate> m_lo, m_hi;
    std::vector<std::int64_t> m_table;
    std::vector<bool> m_table_ok;
};

/// Exact interior-disjointness test over all pairs of the oracle's simplices.
void pairwise_disjointness(const Triangulation& t, const PairOracle& oracle, const std::vector<bool>& skip,
                           ValidityReport& report, const ValidationOptions& options)
{
    const std::size_t n = oracle.size();
    for (std::size_t a = 0; a < n; ++a) {
        if (skip[oracle.global(a)]) continue;
        for (std::size_t b = a + 1; b < n; ++b) {
            if (skip[oracle.global(b)]) continue;
            if (oracle.boxes_separated(a, b) || oracle.facet_separates(a, b, false) ||
                oracle.facet_separates(b, a, false)) {
                continue;
            }
            ++report.lp_calls;
            if (simplex_interiors_intersect(t.config(), oracle.simplex(a), oracle.simplex(b))) {
                add_violation(report, options, {oracle.global(a), oracle.global(b), "overlap: interiors intersect"});
            }
        }
    }
}

struct RidgeEntry
{
    std::uint64_t hash;
    std::uint32_t simplex;
    std::uint8_t omitted;
    std::int8_t side;
};

void ridge_certificate(const Triangulation& t, const std::vector<int>& orientation, ValidityReport& report,
                       const ValidationOptions& options)
{
    const std::size_t n = t.size();
    const std::size_t k = t.stride();
    if (k < 2) return;
    const std::size_t d = k - 1;
    std::vector<RidgeEntry> entries;
    entries.reserve(n * k);
    std::vector<Index> ridge(d);
    auto ridge_of = [&](std::size_t s, std::size_t omit, std::vector<Index>& out) {
        auto simplex = t.simplex(s);
        std::size_t o = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (i != omit) out[o++] = simplex[i];
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t omit = 0; omit < k; ++omit) {
            ridge_of(s, omit, ridge);
            // Moving the apex from position `omit` to the end takes d - omit swaps.
            const int side = ((d - omit) % 2 ? -1 : 1) * orientation[s];
            entries.push_back({SpanHash{}(ridge), static_cast<std::uint32_t>(s), static_cast<std::uint8_t>(omit),
                               static_cast<std::int8_t>(side)});
        }
    }
    std::vector<Index> ra(d), rb(d);
    auto ridge_less = [&](const RidgeEntry& a, const RidgeEntry& b) {
        if (a.hash != b.hash) return a.hash < b.hash;
        ridge_of(a.simplex, a.omitted, ra);
        ridge_of(b.simplex, b.omitted, rb);
        return ra < rb;
    };
    std::sort(entries.begin(), entries.end(), ridge_less);

    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i + 1;
        ridge_of(entries[i].simplex, entries[i].omitted, ra);
        while (j < entries.size() && entries[j].hash == entries[i].hash) {
            ridge_of(entries[j].simplex, entries[j].omitted, rb);
            if (rb != ra) break;
            ++j;
        }
        const std::size_t count = j - i;
        const bool boundary = ridge_on_boundary(t.config(), ra);
        if (boundary && count != 1) {
            add_violation(report, options,
                          {entries[i].simplex, entries[i + 1].simplex, "boundary ridge shared by several simplices"});
        } else if (!boundary && count != 2) {
            add_violation(report, options,
                          {entries[i].simplex, count > 1 ? entries[i + 1].simplex : no_simplex,
                           "interior ridge in " + std::to_string(count) + " simplices"});
        } else if (!boundary && entries[i].side == entries[i + 1].side) {
            add_violation(report, options,
                          {entries[i].simplex, entries[i + 1].simplex, "simplices on the same side of a shared ridge"});
        }
        i = j;
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Validation

bool ridge_on_boundary(const PointConfiguration& config, std::span<const Index> ridge)
{
    if (config.facet_count() > 0) {
        FacetSet common = config.facets_of(ridge[0]);
        for (Index v : ridge.subspan(1)) common &= config.facets_of(v);
        return common.any();
    }
    // Normal through cofactors, then every point must lie on one side.
    const std::size_t d = config.dim();
    CoordinateMatrix diff(d - 1, d);
    auto p0 = config.point(ridge[0]);
    for (std::size_t r = 1; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) diff(r - 1, c) = config.point(ridge[r])[c] - p0[c];
    }
    std::vector<Integer> normal(d);
    for (std::size_t c = 0; c < d; ++c) {
        CoordinateMatrix minor(d - 1, d - 1);
        for (std::size_t r = 0; r + 1 < d; ++r) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < d; ++k) {
                if (k != c) minor(r, cc++) = diff(r, k);
            }
        }
        normal[c] = determinant(minor);
        if (c % 2) normal[c] = -normal[c];
    }
    int side = 0;
    for (std::size_t i = 0; i < config.size(); ++i) {
        Integer s = 0;
        for (std::size_t c = 0; c < d; ++c) s += normal[c] * (config.point(i)[c] - p0[c]);
        const int sg = s.sign();
        if (sg == 0) continue;
        if (side != 0 && sg != side) return false;
        side = sg;
    }
    return true;
}

namespace {

/// Volume sum, degenerate and duplicate simplices. Marks simplices the pair
/// scans should skip and returns their orientations.
std::vector<int> volume_and_duplicates(const Triangulation& t, const NormalizedVolume& expected,
                                       ValidityReport& report, const ValidationOptions& options,
                                       std::vector<bool>& skip)
{
    const std::size_t n = t.size();
    std::vector<int> orientation(n, 0);
    skip.assign(n, false);
    Integer total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Integer v = signed_volume(t.config(), t.simplex(i));
        orientation[i] = v.sign();
        if (v == 0) {
            skip[i] = true;
            add_violation(report, options, {i, no_simplex, "degenerate simplex"});
        }
        total += abs(v);
    }
    report.volume_total = NormalizedVolume(total);
    if (!(report.volume_total == expected)) {
        std::ostringstream os;
        os << (total < expected.value() ? "volume deficit" : "volume excess") << ": total " << total
           << ", expected " << expected.value();
        add_violation(report, options, {no_simplex, no_simplex, os.str()});
    }

    std::unordered_map<std::span<const Index>, std::size_t, SpanHash,
                       decltype([](std::span<const Index> a, std::span<const Index> b) {
                           return std::equal(a.begin(), a.end(), b.begin(), b.end());
                       })>
        seen;
    seen.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, inserted] = seen.emplace(t.simplex(i), i);
        if (!inserted) {
            skip[i] = true;
            add_violation(report, options, {it->second, i, "overlap: duplicate simplex"});
        }
    }
    return orientation;
}

} // namespace

ValidityReport validate_dissection(const Triangulation& t, const NormalizedVolume& expected,
                                   const ValidationOptions& options)
{
    ValidityReport report;
    std::vector<bool> skip;
    const std::vector<int> orientation = volume_and_duplicates(t, expected, report, options, skip);
    const std::size_t n = t.size();
    const bool any_degenerate = std::find(orientation.begin(), orientation.end(), 0) != orientation.end();
    const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
    const bool pairwise = options.mode == DissectionMode::pairwise ||
                          (options.mode == DissectionMode::automatic && pairs <= options.pair_budget);
    if (pairwise) {
        report.method = "pairwise";
        pairwise_disjointness(t, PairOracle::whole(t), skip, report, options);
    } else {
        report.method = "ridge";
        if (!any_degenerate) ridge_certificate(t, orientation, report, options);
    }
    report.is_dissection = report.violations.empty();
    return report;
}

ValidityReport validate_dissection_cellwise(const Triangulation& t, const Triangulation& coarse,
                                            const NormalizedVolume& expected, const ValidationOptions& options)
{
    const PointConfiguration& config = t.config();
    if (!config.is_product() || config.right_factor_size() != coarse.config().size()) {
        throw std::invalid_argument("validate_dissection_cellwise: configuration is not P x Q over the coarse points");
    }
    ValidityReport report;
    report.method = "cellwise";
    std::vector<bool> skip;
    volume_and_duplicates(t, expected, report, options, skip);

    const std::size_t q = config.right_factor_size();
    const std::size_t p = config.left_factor_size();
    std::unordered_map<std::span<const Index>, std::size_t, SpanHash,
                       decltype([](std::span<const Index> a, std::span<const Index> b) {
                           return std::equal(a.begin(), a.end(), b.begin(), b.end());
                       })>
        cell_of;
    cell_of.reserve(coarse.size());
    for (std::size_t c = 0; c < coarse.size(); ++c) cell_of.emplace(coarse.simplex(c), c);

    std::vector<std::vector<std::size_t>> members(coarse.size());
    std::vector<Index> projection;
    for (std::size_t i = 0; i < t.size(); ++i) {
        projection.clear();
        for (Index v : t.simplex(i)) projection.push_back(static_cast<Index>(v % q));
        std::sort(projection.begin(), projection.end());
        projection.erase(std::unique(projection.begin(), projection.end()), projection.end());
        const auto it = cell_of.find(projection);
        if (it == cell_of.end()) {
            add_violation(report, options, {i, no_simplex, "simplex does not lie over a single coarse cell"});
            skip[i] = true;
            continue;
        }
        members[it->second].push_back(i);
    }
    for (std::size_t c = 0; c < coarse.size(); ++c) {
        if (members[c].size() < 2) continue;
        std::vector<Index> points;
        points.reserve(p * coarse.stride());
        for (std::size_t a = 0; a < p; ++a) {
            for (Index v : coarse.simplex(c)) points.push_back(static_cast<Index>(a * q + v));
        }
        pairwise_disjointness(t, PairOracle(t, std::move(members[c]), std::move(points)), skip, report, options);
    }
    report.is_dissection = report.violations.empty();
    return report;
}

ValidityReport validate_face_to_face(const Triangulation& t, std::optional<NormalizedVolume> expected,
                                     const ValidationOptions& options)
{
    const NormalizedVolume target = expected ? *expected : ambient_normalized_volume(t.config().label());
    ValidityReport report = validate_dissection(t, target, options);
    if (!report.is_dissection) return report;
    const std::size_t n = t.size();
    const PairOracle oracle = PairOracle::whole(t);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (oracle.boxes_separated(a, b) || oracle.facet_separates(a, b, true) ||
                oracle.facet_separates(b, a, true)) {
                continue;
            }
            ++report.lp_calls;
            if (!simplices_meet_properly(t.config(), t.simplex(a), t.simplex(b))) {
                add_violation(report, options, {a, b, "improper intersection: not face to face"});
            }
        }
    }
    report.is_face_to_face = report.violations.empty();
    return report;
}

// ---------------------------------------------------------------------------
// Sizes and weights

double efficiency(const Integer& size, unsigned d)
{
    if (d == 0) throw std::invalid_argument("efficiency: dimension must be positive");
    const Rational ratio(size, factorial(d));
    return std::pow(to_double(ratio), 1.0 / d);
}

double efficiency(std::uint64_t size, unsigned d) { return efficiency(Integer(size), d); }

SimplexType simplex_type(const PointConfiguration& product, std::span<const Index> simplex)
{
    if (!product.is_product()) throw std::invalid_argument("simplex_type: configuration is not a product");
    const std::size_t m = product.right_factor_size();
    std::vector<unsigned> counts(m, 0);
    for (Index v : simplex) ++counts[v % m];
    SimplexType type;
    Integer denom = 1;
    for (unsigned c : counts) {
        if (c == 0) throw std::invalid_argument("simplex_type: simplex misses a vertex of the simplex factor");
        type.t.push_back(c - 1);
        denom *= factorial(c - 1);
    }
    type.weight = Rational(Integer(1), denom);
    return type;
}

Rational weighted_size(const Triangulation& t)
{
    if (!t.config().is_product()) throw std::invalid_argument("weighted_size: configuration is not a product");
    // Tally types first; one rational addition per distinct type.
    Rational total = 0;
    std::map<std::vector<unsigned>, std::uint64_t> census;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::size_t m = t.config().right_factor_size();
        std::vector<unsigned> counts(m, 0);
        for (Index v : t.simplex(i)) ++counts[v % m];
        std::sort(counts.begin(), counts.end());
        if (counts.front() == 0) throw std::invalid_argument("weighted_size: simplex misses a color");
        ++census[counts];
    }
    for (const auto& [counts, number] : census) {
        Integer denom = 1;
        for (unsigned c : counts) denom *= factorial(c - 1);
        total += Rational(Integer(number), denom);
    }
    return total;
}

double weighted_efficiency(const Rational& weighted, unsigned m, unsigned l)
{
    if (l == 0 || m == 0) throw std::invalid_argument("weighted_efficiency: m and l must be positive");
    const Rational ratio = weighted / Rational(pow(Integer(m), l));
    return std::pow(to_double(ratio), 1.0 / l);
}

double to_double(const Rational& r) { return static_cast<double>(r.convert_to<long double>()); }

std::string to_decimal(const Rational& r, int digits)
{
    const Integer scale = pow(Integer(10), digits);
    Rational scaled = abs(r) * scale + Rational(1, 2);
    const Integer whole = numerator(scaled) / denominator(scaled);
    std::string s = whole.str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    if (r < 0 && whole != 0) s.insert(0, "-");
    return s;
}

} // namespace simplexity
