#include "simplexity/search_oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "simplexity/linear_program.hpp"

namespace simplexity {

std::vector<Simplex> candidate_simplices(const PointConfiguration& config)
{
    const std::size_t n = config.size();
    const std::size_t k = config.dim() + 1;
    std::vector<Simplex> out;
    if (n < k) return out;
    Simplex subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = static_cast<Index>(i);
    while (true) {
        if (signed_volume(config, subset) != 0) {
            out.push_back(subset);
            if (out.size() > max_candidate_simplices) {
                throw std::length_error("search oracle: more than " + std::to_string(max_candidate_simplices) +
                                        " candidate simplices");
            }
        }
        std::size_t j = k;
        while (j > 0 && subset[j - 1] == n - k + j - 1) --j;
        if (j == 0) break;
        ++subset[j - 1];
        for (std::size_t i = j; i < k; ++i) subset[i] = subset[i - 1] + 1;
    }
    return out;
}

Rational objective_value(const Triangulation& t, Objective objective)
{
    if (objective == Objective::cardinality) return Rational(Integer(t.size()));
    if (t.config().is_product()) return weighted_size(t);
    return Rational(Integer(t.size()), factorial(static_cast<unsigned>(t.config().dim())));
}

namespace {

class Search
{
  public:
    Search(const SearchProblem& problem, const std::function<bool(const Triangulation&)>& visit)
        : m_config(problem.config)
        , m_visit(visit)
        , m_d(problem.config->dim())
        , m_candidates(candidate_simplices(*problem.config))
    {
        const std::size_t n = m_candidates.size();
        m_compat.assign(n * n, -1);
        std::map<Simplex, std::size_t> ridge_ids;
        m_ridges.resize(n);
        Simplex ridge(m_d);
        for (std::size_t c = 0; c < n; ++c) {
            const int orientation = signed_volume(*m_config, m_candidates[c]).sign();
            for (std::size_t omit = 0; omit <= m_d; ++omit) {
                std::size_t o = 0;
                for (std::size_t i = 0; i <= m_d; ++i) {
                    if (i != omit) ridge[o++] = m_candidates[c][i];
                }
                auto [it, inserted] = ridge_ids.emplace(ridge, ridge_ids.size());
                if (inserted) {
                    m_boundary.push_back(ridge_on_boundary(*m_config, ridge));
                    m_by_side.emplace_back();
                }
                const int side = ((m_d - omit) % 2 ? -1 : 1) * orientation;
                m_ridges[c].push_back({it->second, side});
                m_by_side[it->second][side > 0 ? 1 : 0].push_back(c);
            }
        }
        m_count.assign(m_boundary.size(), 0);
        m_side.assign(m_boundary.size(), 0);
    }

    std::size_t run()
    {
        if (m_candidates.empty()) return 0;
        for (std::size_t c : covering_generic_point()) {
            if (!push(c)) break;
        }
        return m_found;
    }

  private:
    struct RidgeRef
    {
        std::size_t id;
        int side;
    };

    /// Candidates whose interior contains a generic point near the barycenter
    /// of the first candidate.
    std::vector<std::size_t> covering_generic_point() const
    {
        const auto& s0 = m_candidates.front();
        Integer scale = 1000;
        for (long k = 2;; ++k, scale *= 7) {
            // x = X / D with X = scale * sum(s0) + (1, k, k^2, ...), D = scale * (d + 1).
            std::vector<Integer> x(m_d, 0);
            for (Index v : s0) {
                for (std::size_t c = 0; c < m_d; ++c) x[c] += scale * m_config->point(v)[c];
            }
            Integer step = 1;
            for (std::size_t c = 0; c < m_d; ++c, step *= k) x[c] += step;
            const Integer denom = scale * (m_d + 1);
            std::vector<std::size_t> covering;
            bool generic = true;
            for (std::size_t c = 0; c < m_candidates.size() && generic; ++c) {
                const int sign = point_position(m_candidates[c], x, denom);
                if (sign == 0) generic = false;
                if (sign > 0) covering.push_back(c);
            }
            if (generic && !covering.empty() && covering.front() == 0) return covering;
        }
    }

    /// 1 if x/denom is interior to s, -1 if outside, 0 if on its boundary.
    int point_position(const Simplex& s, const std::vector<Integer>& x, const Integer& denom) const
    {
        // Barycentric coordinates by Cramer's rule on the edge matrix.
        CoordinateMatrix e(m_d, m_d);
        auto p0 = m_config->point(s[0]);
        for (std::size_t i = 1; i <= m_d; ++i) {
            for (std::size_t r = 0; r < m_d; ++r) e(r, i - 1) = m_config->point(s[i])[r] - p0[r];
        }
        const Integer det = determinant(e);
        std::vector<Integer> rhs(m_d);
        for (std::size_t r = 0; r < m_d; ++r) rhs[r] = x[r] - denom * p0[r];
        // det * denom * lambda_i for i >= 1, via determinants with column i replaced.
        Integer rest = det * denom;
        bool zero = false;
        bool outside = false;
        for (std::size_t i = 0; i < m_d; ++i) {
            DenseMatrix<Integer> a(m_d, m_d);
            for (std::size_t r = 0; r < m_d; ++r) {
                for (std::size_t c = 0; c < m_d; ++c) a(r, c) = c == i ? rhs[r] : Integer(e(r, c));
            }
            const Integer li = integer_determinant(a);
            rest -= li;
            const int sg = li.sign() * det.sign();
            zero = zero || sg == 0;
            outside = outside || sg < 0;
        }
        const int sg = rest.sign() * det.sign();
        zero = zero || sg == 0;
        outside = outside || sg < 0;
        if (outside) return -1;
        return zero ? 0 : 1;
    }

    static Integer integer_determinant(DenseMatrix<Integer> m)
    {
        const std::size_t n = m.rows;
        Integer prev = 1;
        bool negate = false;
        for (std::size_t k = 0; k < n; ++k) {
            if (m(k, k) == 0) {
                std::size_t r = k + 1;
                while (r < n && m(r, k) == 0) ++r;
                if (r == n) return 0;
                for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
                negate = !negate;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            prev = m(k, k);
        }
        return negate ? Integer(-m(n - 1, n - 1)) : m(n - 1, n - 1);
    }

    bool compatible(std::size_t a, std::size_t b)
    {
        auto& slot = m_compat[a * m_candidates.size() + b];
        if (slot < 0) {
            const bool ok = !simplex_interiors_intersect(*m_config, m_candidates[a], m_candidates[b]) &&
                            simplices_meet_properly(*m_config, m_candidates[a], m_candidates[b]);
            slot = ok ? 1 : 0;
            m_compat[b * m_candidates.size() + a] = slot;
        }
        return slot == 1;
    }

    /// Adds candidate c, explores, removes it. Returns false to stop everything.
    bool push(std::size_t c)
    {
        for (std::size_t other : m_chosen) {
            if (!compatible(other, c)) return true;
        }
        m_chosen.push_back(c);
        for (const auto& r : m_ridges[c]) {
            ++m_count[r.id];
            m_side[r.id] = r.side;
        }
        bool keep_going = true;
        const std::size_t open = first_open_ridge();
        if (open == no_simplex) {
            ++m_found;
            Triangulation t(m_config);
            for (std::size_t s : m_chosen) t.add(m_candidates[s]);
            keep_going = m_visit(t);
        } else {
            const int need = -m_side[open];
            for (std::size_t next : m_by_side[open][need > 0 ? 1 : 0]) {
                if (!push(next)) {
                    keep_going = false;
                    break;
                }
            }
        }
        for (const auto& r : m_ridges[c]) --m_count[r.id];
        // Restore the side of ridges still covered once by an earlier simplex.
        m_chosen.pop_back();
        for (const auto& r : m_ridges[c]) {
            if (m_count[r.id] == 1) {
                for (std::size_t s : m_chosen) {
                    for (const auto& rr : m_ridges[s]) {
                        if (rr.id == r.id) m_side[r.id] = rr.side;
                    }
                }
            }
        }
        return keep_going;
    }

    std::size_t first_open_ridge() const
    {
        std::size_t best = no_simplex;
        for (std::size_t s : m_chosen) {
            for (const auto& r : m_ridges[s]) {
                if (!m_boundary[r.id] && m_count[r.id] == 1 && r.id < best) best = r.id;
            }
        }
        return best;
    }

    ConfigPtr m_config;
    const std::function<bool(const Triangulation&)>& m_visit;
    std::size_t m_d;
    std::vector<Simplex> m_candidates;
    std::vector<std::vector<RidgeRef>> m_ridges;
    std::vector<bool> m_boundary;
    std::vector<std::array<std::vector<std::size_t>, 2>> m_by_side;
    std::vector<int> m_count;
    std::vector<int> m_side;
    std::vector<std::size_t> m_chosen;
    std::vector<signed char> m_compat;
    std::size_t m_found = 0;
};

} // namespace

std::size_t enumerate_triangulations(const SearchProblem& problem,
                                     const std::function<bool(const Triangulation&)>& visit)
{
    if (problem.config->dim() == 0) {
        Triangulation t(problem.config);
        t.add({0});
        visit(t);
        return 1;
    }
    Search search(problem, visit);
    return search.run();
}

SearchResult min_weighted_size(const SearchProblem& problem)
{
    SearchResult result;
    bool first = true;
    result.triangulations = enumerate_triangulations(problem, [&](const Triangulation& t) {
        const Rational v = objective_value(t, problem.objective);
        if (first || v < result.value) {
            result.value = v;
            result.witness = t;
            first = false;
        }
        return true;
    });
    if (first) throw std::runtime_error("min_weighted_size: no triangulation found");
    return result;
}

} // namespace simplexity
