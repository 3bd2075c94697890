#include "simplexity/coloring_product.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "simplexity/product_staircase.hpp"

namespace simplexity {

std::string to_string(ColoringStrategy s)
{
    switch (s) {
    case ColoringStrategy::random: return "random";
    case ColoringStrategy::balanced: return "balanced";
    case ColoringStrategy::explicit_map: return "explicit";
    }
    return "?";
}

ColoringStrategy parse_coloring_strategy(const std::string& text)
{
    if (text == "random") return ColoringStrategy::random;
    if (text == "balanced") return ColoringStrategy::balanced;
    if (text == "explicit") return ColoringStrategy::explicit_map;
    throw std::invalid_argument("unknown coloring strategy: " + text);
}

Rng::Rng(std::uint64_t seed)
    : m_engine(seed)
{}

std::uint64_t Rng::next() { return m_engine(); }

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0) throw std::invalid_argument("Rng::below: empty range");
    // Reject the top partial copy of [0, bound) so every residue is equally likely.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t i)
{
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Coloring make_coloring(std::size_t q_vertices, unsigned m, ColoringStrategy strategy, std::uint64_t rng_seed,
                       const std::vector<unsigned>& explicit_colors)
{
    if (m == 0) throw std::invalid_argument("make_coloring: m must be positive");
    Coloring c;
    c.m = m;
    c.strategy = strategy;
    c.rng_seed = rng_seed;
    c.colors.resize(q_vertices);
    switch (strategy) {
    case ColoringStrategy::balanced:
        for (std::size_t v = 0; v < q_vertices; ++v) c.colors[v] = static_cast<unsigned>(v % m);
        break;
    case ColoringStrategy::random: {
        Rng rng(rng_seed);
        for (auto& color : c.colors) color = static_cast<unsigned>(rng.below(m));
        break;
    }
    case ColoringStrategy::explicit_map:
        if (explicit_colors.size() != q_vertices) throw std::invalid_argument("make_coloring: incomplete color map");
        for (std::size_t v = 0; v < q_vertices; ++v) {
            if (explicit_colors[v] >= m) throw std::invalid_argument("make_coloring: color out of range");
            c.colors[v] = explicit_colors[v];
        }
        break;
    }
    return c;
}

Triangulation with_point_factor(const Triangulation& t)
{
    auto config = product_configuration(t.config_ptr(), simplex_configuration(0));
    Triangulation out(config);
    out.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out.add(t.simplex(i));
    return out;
}

namespace {

/// Per-color vertex counts |tau_i| of every simplex of T0.
std::vector<std::vector<unsigned>> types_of(const Triangulation& t0)
{
    const std::size_t m = t0.config().right_factor_size();
    std::vector<std::vector<unsigned>> out;
    out.reserve(t0.size());
    for (std::size_t i = 0; i < t0.size(); ++i) {
        std::vector<unsigned> counts(m, 0);
        for (Index v : t0.simplex(i)) ++counts[v % m];
        out.push_back(std::move(counts));
    }
    return out;
}

/// Per-color vertex counts |sigma_i| of every simplex of T_Q.
std::vector<std::vector<unsigned>> color_counts(const Triangulation& tq, const Coloring& coloring)
{
    std::vector<std::vector<unsigned>> out;
    out.reserve(tq.size());
    for (std::size_t s = 0; s < tq.size(); ++s) {
        std::vector<unsigned> k(coloring.m, 0);
        for (Index v : tq.simplex(s)) ++k[coloring.colors[v]];
        out.push_back(std::move(k));
    }
    return out;
}

std::uint64_t cell_count(const std::vector<unsigned>& k, const std::vector<unsigned>& l)
{
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < k.size() && c != 0; ++i) {
        c *= binomial(static_cast<long>(k[i]) + l[i] - 2, static_cast<long>(l[i]) - 1);
    }
    return c;
}

/// Sum over tau of the cell count for one color-count vector k, memoized.
class CountCache
{
  public:
    explicit CountCache(const Triangulation& t0)
        : m_types(types_of(t0))
    {}

    std::uint64_t operator()(const std::vector<unsigned>& k)
    {
        auto it = m_cache.find(k);
        if (it != m_cache.end()) return it->second;
        std::uint64_t total = 0;
        for (const auto& l : m_types) total += cell_count(k, l);
        m_cache.emplace(k, total);
        return total;
    }

    const std::vector<std::vector<unsigned>>& types() const { return m_types; }

  private:
    std::vector<std::vector<unsigned>> m_types;
    std::map<std::vector<unsigned>, std::uint64_t> m_cache;
};

void check_inputs(const Triangulation& tq, const Triangulation& t0, unsigned m)
{
    if (!t0.config().is_product()) throw std::invalid_argument("seed triangulation is not over P x Delta^(m-1)");
    if (t0.config().right_factor_size() != m) {
        throw std::invalid_argument("coloring uses m = " + std::to_string(m) + " but the seed has " +
                                    std::to_string(t0.config().right_factor_size()) + " simplex vertices");
    }
    if (tq.empty()) throw std::invalid_argument("empty triangulation of Q");
}

} // namespace

Triangulation triangulate_product(const Triangulation& tq, const Triangulation& t0, const Coloring& coloring)
{
    check_inputs(tq, t0, coloring.m);
    const auto& q = tq.config();
    if (coloring.colors.size() != q.size()) throw std::invalid_argument("coloring does not cover Q");
    auto target = product_configuration(left_factor(t0.config()), tq.config_ptr());
    Triangulation out(target);
    out.reserve(product_size(tq, t0, coloring));
    const std::size_t q_size = q.size();
    const std::size_t m = coloring.m;
    const CellIndexer indexer = [q_size](Index p, Index col) { return static_cast<Index>(p * q_size + col); };

    LiftedCell cell;
    for (std::size_t s = 0; s < tq.size(); ++s) {
        std::vector<std::vector<Index>> cols(m);
        for (Index v : tq.simplex(s)) cols[coloring.colors[v]].push_back(v);
        for (std::size_t t = 0; t < t0.size(); ++t) {
            std::vector<std::vector<Index>> rows(m);
            for (Index v : t0.simplex(t)) rows[v % m].push_back(static_cast<Index>(v / m));
            // Colors absent from sigma: tau must meet that face in one vertex,
            // which the restriction to the face drops.
            bool on_face = true;
            cell.block_rows.clear();
            cell.block_cols.clear();
            for (std::size_t i = 0; i < m; ++i) {
                if (cols[i].empty()) {
                    if (rows[i].size() != 1) on_face = false;
                    continue;
                }
                cell.block_rows.push_back(std::move(rows[i]));
                cell.block_cols.push_back(cols[i]);
            }
            if (on_face) append_multi_staircases(cell, indexer, out);
        }
    }
    return out;
}

std::uint64_t product_size(const Triangulation& tq, const Triangulation& t0, const Coloring& coloring)
{
    check_inputs(tq, t0, coloring.m);
    CountCache cache(t0);
    std::uint64_t total = 0;
    for (const auto& k : color_counts(tq, coloring)) total += cache(k);
    return total;
}

Rational size_bound(std::uint64_t tq_size, const Rational& t0, unsigned n, unsigned m, unsigned l)
{
    if (m == 0 || m > n) throw std::invalid_argument("size_bound: requires 1 <= m <= n");
    if (l == 0) throw std::invalid_argument("size_bound: requires l >= 1");
    const Rational base = Rational(Integer(n), Integer(m)) + l;
    Rational power = 1;
    for (unsigned i = 0; i < l; ++i) power *= base;
    return Rational(Integer(tq_size)) * t0 * power;
}

namespace {

/// Calls f(k, multinomial coefficient) for every composition k of n into m parts.
template <class F>
void for_each_composition(unsigned n, unsigned m, F&& f)
{
    std::vector<unsigned> k(m, 0);
    auto rec = [&](auto&& self, unsigned i, unsigned left, Integer coeff) -> void {
        if (i + 1 == m) {
            k[i] = left;
            f(k, coeff / factorial(left));
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            k[i] = v;
            self(self, i + 1, left - v, coeff / factorial(v));
        }
    };
    rec(rec, 0, n, factorial(n));
}

} // namespace

Rational expected_size_multinomial(const Triangulation& tq, const Triangulation& t0, unsigned m)
{
    check_inputs(tq, t0, m);
    // Each sigma has n = dim Q + 1 vertices with i.i.d. uniform colors, so its
    // color counts are multinomial and the expectation is the same for all sigma.
    const unsigned n = static_cast<unsigned>(tq.stride());
    CountCache cache(t0);
    Integer weighted = 0;
    for_each_composition(n, m, [&](const std::vector<unsigned>& k, const Integer& coeff) {
        weighted += coeff * cache(k);
    });
    return Rational(weighted * tq.size(), pow(Integer(m), n));
}

Rational expected_size_enumerated(const Triangulation& tq, const Triangulation& t0, unsigned m)
{
    check_inputs(tq, t0, m);
    const std::size_t q = tq.config().size();
    Integer count = 1;
    for (std::size_t i = 0; i < q; ++i) {
        count *= m;
        if (count > max_enumerated_colorings) {
            throw std::length_error("expected_size_enumerated: more than 2^20 colorings");
        }
    }
    Coloring c = make_coloring(q, m, ColoringStrategy::explicit_map, 0, std::vector<unsigned>(q, 0));
    CountCache cache(t0);
    Integer total = 0;
    while (true) {
        for (const auto& k : color_counts(tq, c)) total += cache(k);
        std::size_t v = 0;
        while (v < q && ++c.colors[v] == m) c.colors[v++] = 0;
        if (v == q) break;
    }
    return Rational(total, count);
}

Rational exact_expected_size(const Triangulation& tq, const Triangulation& t0, unsigned m)
{
    const Rational enumerated = expected_size_enumerated(tq, t0, m);
    const Rational multinomial = expected_size_multinomial(tq, t0, m);
    if (enumerated != multinomial) {
        throw std::logic_error("expected size mismatch: enumeration " + enumerated.str() + " vs multinomial " +
                               multinomial.str());
    }
    return enumerated;
}

Rational falling_power_expectation(const std::vector<unsigned>& l, unsigned n, unsigned m)
{
    if (l.size() != m) throw std::invalid_argument("falling_power_expectation: l must have m entries");
    Integer weighted = 0;
    for_each_composition(n, m, [&](const std::vector<unsigned>& k, const Integer& coeff) {
        Integer prod = 1;
        for (unsigned i = 0; i < m; ++i) {
            // (k + l - 2)(k + l - 3)...(k): l - 1 factors.
            for (unsigned j = 0; j + 1 < l[i]; ++j) prod *= static_cast<long>(k[i]) + l[i] - 2 - j;
        }
        weighted += coeff * prod;
    });
    return Rational(weighted, pow(Integer(m), n));
}

SampleStatistics monte_carlo_size(const Triangulation& tq, const Triangulation& t0, unsigned m, std::size_t samples,
                                  std::uint64_t rng_seed)
{
    if (samples == 0) throw std::invalid_argument("monte_carlo_size: samples must be positive");
    check_inputs(tq, t0, m);
    CountCache cache(t0);
    SampleStatistics stats;
    stats.samples = samples;
    stats.rng_seed = rng_seed;
    Integer total = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        Coloring c = make_coloring(tq.config().size(), m, ColoringStrategy::random, derive_seed(rng_seed, i));
        std::uint64_t size = 0;
        for (const auto& k : color_counts(tq, c)) size += cache(k);
        total += size;
        if (i == 0 || size < stats.min) {
            stats.min = size;
            stats.best = std::move(c);
        }
        if (i == 0 || size > stats.max) stats.max = size;
    }
    stats.mean = Rational(total, Integer(samples));
    return stats;
}

} // namespace simplexity
