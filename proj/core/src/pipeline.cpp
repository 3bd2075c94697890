#include "simplexity/pipeline.hpp"

#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "simplexity/cayley.hpp"
#include "simplexity/product_staircase.hpp"
#include "simplexity/seed_catalog.hpp"

namespace simplexity {

namespace {

Triangulation smallest_cube(unsigned d)
{
    return d <= 3 ? minimal_cube(d) : unimodular_cube(d);
}

struct Seed
{
    Triangulation t0;
    std::string name;
    unsigned m = 1;
};

/// Cayley triangulations of catalog seeds, built once per process.
const Triangulation& cached_seed(const std::string& name)
{
    static std::mutex lock;
    static std::map<std::string, Triangulation> cache;
    std::lock_guard guard(lock);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, mixed_to_triangulation(seed_by_name(name))).first;
    return it->second;
}

Seed choose_seed(const PipelineSpec& spec, unsigned m, std::vector<std::string>& notes)
{
    if (m <= 1) {
        return {with_point_factor(smallest_cube(spec.l)), "minimal_cube(" + std::to_string(spec.l) + ")", 1};
    }
    if (spec.seed == "i3d2" || spec.seed == "i3d1") {
        if (spec.l != 3) throw std::invalid_argument("seeds i3d1 and i3d2 need l = 3");
        if (spec.seed == "i3d2" && m >= 3) {
            try {
                return {cached_seed("i3d2"), "i3d2", 3};
            } catch (const std::exception& e) {
                notes.push_back(std::string("i3d2 unavailable, falling back to i3d1: ") + e.what());
            }
        }
        return {cached_seed("i3d1"), "i3d1", 2};
    }
    if (spec.seed == "square_family") {
        if (spec.l != 2) throw std::invalid_argument("seed square_family needs l = 2");
        const std::string name = "square(" + std::to_string(m) + ")";
        return {cached_seed(name), name, m};
    }
    if (spec.seed == "unimodular") {
        const std::string name = "unimodular(" + std::to_string(spec.l) + "," + std::to_string(m) + ")";
        return {cached_seed(name), name, m};
    }
    throw std::invalid_argument("unknown seed: " + spec.seed);
}

} // namespace

PipelineResult build_cube_recursive(const PipelineSpec& spec)
{
    if (spec.target_dim < 1) throw std::invalid_argument("build_cube_recursive: dimension must be positive");
    if (spec.l < 1 || spec.m < 1) throw std::invalid_argument("build_cube_recursive: l and m must be positive");
    PipelineResult result;
    result.base_dim = (spec.target_dim - 1) % spec.l + 1;
    Triangulation current = smallest_cube(result.base_dim);
    unsigned dim = result.base_dim;
    // Above the face-to-face range, every level is certified against the
    // previous one so that only pairs within a cell need the exact test.
    const bool chain = spec.validate && !spec.size_only && spec.target_dim > spec.face_check_max_dim;
    bool chain_ok = true;
    if (chain) {
        const ValidityReport base = validate_dissection(current, NormalizedVolume(factorial(dim)));
        if (!base.is_dissection) {
            chain_ok = false;
            result.notes.push_back("base triangulation failed the dissection check");
        }
    }
    std::size_t step_index = 0;
    while (dim < spec.target_dim) {
        const unsigned n = dim + 1;
        const unsigned m_req = std::min(spec.m, n);
        Seed seed = choose_seed(spec, m_req, result.notes);
        StepReport step;
        step.d = dim + spec.l;
        step.n = n;
        step.m = seed.m;
        step.seed = seed.name;
        step.q_size = current.size();
        step.t0 = weighted_size(seed.t0);
        step.bound = size_bound(current.size(), step.t0, n, seed.m, spec.l);
        step.expected = expected_size_multinomial(current, seed.t0, seed.m);

        Coloring best;
        if (spec.coloring == ColoringStrategy::random && seed.m > 1) {
            step.rng_seed = derive_seed(spec.rng_seed, step_index);
            const auto stats = monte_carlo_size(current, seed.t0, seed.m, spec.samples, step.rng_seed);
            step.samples = stats.samples;
            best = stats.best;
        } else {
            best = make_coloring(current.config().size(), seed.m, ColoringStrategy::balanced);
            step.samples = 1;
        }
        step.size = product_size(current, seed.t0, best);
        step.colors = best.colors;
        step.within_bound = Rational(Integer(step.size)) <= step.bound;

        const bool last = step.d >= spec.target_dim;
        if (!(last && spec.size_only)) {
            Triangulation next = triangulate_product(current, seed.t0, best);
            if (next.size() != step.size) {
                throw std::logic_error("build_cube_recursive: closed-form size " + std::to_string(step.size) +
                                       " differs from the construction's " + std::to_string(next.size()));
            }
            if (chain) {
                step.validity = validate_dissection_cellwise(next, current, NormalizedVolume(factorial(step.d)));
                if (!step.validity->is_dissection) chain_ok = false;
            }
            current = std::move(next);
        }
        result.steps.push_back(std::move(step));
        dim += spec.l;
        ++step_index;
    }
    result.size = result.steps.empty() ? current.size() : result.steps.back().size;
    if (!spec.size_only || result.steps.empty()) {
        result.triangulation = std::move(current);
        if (spec.validate) {
            const NormalizedVolume expected(factorial(spec.target_dim));
            if (spec.target_dim <= spec.face_check_max_dim) {
                result.validity = validate_face_to_face(result.triangulation, expected);
            } else if (!result.steps.empty()) {
                result.validity = *result.steps.back().validity;
                if (!chain_ok && result.validity->is_dissection) {
                    result.validity->is_dissection = false;
                    result.validity->violations.push_back({no_simplex, no_simplex, "an earlier level failed"});
                }
            } else {
                result.validity = validate_dissection(result.triangulation, expected);
            }
        }
    }
    return result;
}

Triangulation build_cube_haiman(const Triangulation& tk, const Triangulation& tl)
{
    const Triangulation t0 = with_point_factor(tk);
    return triangulate_product(tl, t0, make_coloring(tl.config().size(), 1, ColoringStrategy::balanced));
}

Integer haiman_size(unsigned d)
{
    static const std::vector<Integer> small{0, 1, 2, 5};
    std::vector<Integer> h(d + 1);
    for (unsigned i = 1; i <= d; ++i) {
        h[i] = i <= 3 ? small[i] : Integer(-1);
        for (unsigned k = 1; k < i; ++k) {
            const Integer v = h[k] * h[i - k] * binomial(i, k);
            if (h[i] < 0 || v < h[i]) h[i] = v;
        }
    }
    if (d == 0) throw std::invalid_argument("haiman_size: d must be positive");
    return h[d];
}

std::vector<TableRow> report_table(unsigned d_max, const PipelineSpec& base)
{
    if (d_max < 1) throw std::invalid_argument("report_table: d_max must be positive");
    std::vector<TableRow> rows;
    for (unsigned d = 1; d <= d_max; ++d) {
        PipelineSpec spec = base;
        spec.target_dim = d;
        spec.validate = false;
        spec.size_only = true;
        const PipelineResult r = build_cube_recursive(spec);
        TableRow row;
        row.d = d;
        row.size = r.size;
        row.efficiency = efficiency(r.size, d);
        if (!r.steps.empty()) row.bound = r.steps.back().bound;
        row.hadamard = hadamard_lower(d);
        if (d <= 8) {
            const auto k = known_constants(d);
            row.smith = k.smith_lower;
            if (d <= 7) {
                row.phi_known = k.phi;
                row.rho_known = k.rho;
            }
        }
        row.haiman = haiman_size(d);
        row.haiman_efficiency = efficiency(row.haiman, d);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows)
{
    os << "d,size,efficiency,bound,hadamard,smith,phi_known,rho_known,haiman_size,haiman_efficiency,"
          "target_i3d1,target_i3d2\n";
    auto fixed = [](double v, int digits) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(digits) << v;
        return s.str();
    };
    for (const auto& r : rows) {
        os << r.d << ',' << r.size << ',' << fixed(r.efficiency, 4) << ',';
        if (r.bound != 0) os << to_decimal(r.bound, 2);
        os << ',' << fixed(r.hadamard, 3) << ',';
        if (r.smith) os << fixed(*r.smith, 3);
        os << ',';
        if (r.phi_known) os << *r.phi_known;
        os << ',';
        if (r.rho_known) os << fixed(*r.rho_known, 3);
        os << ',' << r.haiman << ',' << fixed(r.haiman_efficiency, 4) << ',' << fixed(asymptotic_target_i3d1, 4)
           << ',' << fixed(asymptotic_target_i3d2, 4) << '\n';
    }
}

} // namespace simplexity
