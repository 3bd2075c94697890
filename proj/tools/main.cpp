// simplexity: build, verify and report triangulations of cubes and products.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "simplexity/cayley.hpp"
#include "simplexity/coloring_product.hpp"
#include "simplexity/io.hpp"
#include "simplexity/pipeline.hpp"
#include "simplexity/search_oracle.hpp"
#include "simplexity/seed_catalog.hpp"

using namespace simplexity;

namespace {

void print_violations(const ValidityReport& r, std::size_t limit = 10)
{
    for (std::size_t i = 0; i < r.violations.size() && i < limit; ++i) {
        const auto& v = r.violations[i];
        std::cerr << "  violation: " << v.reason;
        if (v.first != no_simplex) std::cerr << " [simplex " << v.first;
        if (v.second != no_simplex) std::cerr << ", simplex " << v.second;
        if (v.first != no_simplex) std::cerr << "]";
        std::cerr << "\n";
    }
    if (r.violations.size() > limit) std::cerr << "  ... " << r.violations.size() - limit << " more\n";
}

std::string fixed(double v, int digits)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

ConfigLabel oracle_label(const std::string& name)
{
    // Shorthands: "I2xD1" for cube(2)xsimplex(1), "I3" for cube(3).
    if (name.size() >= 2 && name[0] == 'I') {
        const auto x = name.find("xD");
        if (x == std::string::npos) return ConfigLabel::cube(std::stoi(name.substr(1)));
        return ConfigLabel::cube_times_simplex(std::stoi(name.substr(1, x - 1)), std::stoi(name.substr(x + 2)));
    }
    return ConfigLabel::parse(name);
}

int run_build(const PipelineSpec& spec, const std::string& out)
{
    const PipelineResult r = build_cube_recursive(spec);
    std::cout << "base: I^" << r.base_dim << "\n";
    bool ok = true;
    for (const auto& s : r.steps) {
        std::cout << "step d=" << s.d << " n=" << s.n << " m=" << s.m << " seed=" << s.seed << " |T_Q|=" << s.q_size
                  << " t0=" << s.t0 << " size=" << s.size << " bound=" << to_decimal(s.bound, 3)
                  << " expected=" << to_decimal(s.expected, 3) << " rng_seed=" << s.rng_seed
                  << " samples=" << s.samples << (s.within_bound ? " ok" : " ABOVE BOUND") << "\n";
        std::cout << "  colors:";
        for (unsigned c : s.colors) std::cout << ' ' << c + 1;
        std::cout << "\n";
        if (s.validity) {
            std::cout << "  level check (" << s.validity->method << "): "
                      << (s.validity->is_dissection ? "pass" : "FAIL") << "\n";
        }
        ok = ok && s.within_bound;
    }
    for (const auto& note : r.notes) std::cout << "note: " << note << "\n";
    std::cout << "I^" << spec.target_dim << ": " << r.size << " simplices, efficiency "
              << fixed(efficiency(r.size, spec.target_dim), 4) << "\n";
    if (r.validity) {
        const auto& v = *r.validity;
        const bool f2f = spec.target_dim <= spec.face_check_max_dim;
        std::cout << "dissection (" << v.method << "): " << (v.is_dissection ? "pass" : "FAIL") << "\n";
        if (f2f) std::cout << "face-to-face: " << (v.is_face_to_face ? "pass" : "FAIL") << "\n";
        print_violations(v);
        ok = ok && v.is_dissection && (!f2f || v.is_face_to_face);
    }
    if (!out.empty()) {
        save_triangulation(out, r.triangulation);
        std::cout << "wrote " << out << "\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Triangulations of cubes and products of polytopes with exact verification"};
    app.require_subcommand(1);

    // build cube
    auto* build = app.add_subcommand("build", "construct a triangulation");
    auto* build_cube = build->add_subcommand("cube", "triangulate I^d by the recursive coloring construction");
    build->require_subcommand(1);
    PipelineSpec spec;
    std::string coloring = "random";
    std::string out;
    build_cube->add_option("--dim", spec.target_dim, "target dimension d")->required();
    build_cube->add_option("--l", spec.l, "block dimension l")->capture_default_str();
    build_cube->add_option("--m", spec.m, "colors m")->capture_default_str();
    build_cube->add_option("--seed", spec.seed, "i3d2 | i3d1 | square_family | unimodular")->capture_default_str();
    build_cube->add_option("--coloring", coloring, "balanced | random")->capture_default_str();
    build_cube->add_option("--rng-seed", spec.rng_seed, "PRNG seed")->capture_default_str();
    build_cube->add_option("--samples", spec.samples, "colorings sampled per step")->capture_default_str();
    build_cube->add_option("--face-check-max-dim", spec.face_check_max_dim,
                           "run the face-to-face check up to this dimension")
        ->capture_default_str();
    build_cube->add_option("--out", out, "write the triangulation as JSON");

    // verify
    auto* verify = app.add_subcommand("verify", "validate a triangulation file");
    std::string verify_path;
    bool face_to_face = false;
    std::string mode = "auto";
    verify->add_option("path", verify_path, "triangulation JSON")->required();
    verify->add_flag("--face-to-face", face_to_face, "also run the pairwise face-to-face check");
    verify->add_option("--mode", mode, "auto | pairwise | ridge")->capture_default_str();

    // report table
    auto* report = app.add_subcommand("report", "reporting tables");
    auto* table = report->add_subcommand("table", "per-dimension sizes, efficiencies and bounds as CSV");
    report->require_subcommand(1);
    unsigned max_dim = 10;
    std::string table_out;
    PipelineSpec table_spec;
    table->add_option("--max-dim", max_dim, "largest dimension")->capture_default_str();
    table->add_option("--out", table_out, "CSV path (stdout if omitted)");
    table->add_option("--rng-seed", table_spec.rng_seed, "PRNG seed")->capture_default_str();
    table->add_option("--samples", table_spec.samples, "colorings sampled per step")->capture_default_str();

    // expect
    auto* expect = app.add_subcommand("expect", "sizes of I^3 x I^q over random colorings");
    unsigned q_dim = 3;
    unsigned expect_m = 2;
    std::size_t expect_samples = 100;
    std::uint64_t expect_rng = 1;
    expect->add_option("--q-dim", q_dim, "dimension of Q = I^q")->capture_default_str();
    expect->add_option("--m", expect_m, "colors (1, 2 or 3)")->capture_default_str();
    expect->add_option("--samples", expect_samples, "random colorings")->capture_default_str();
    expect->add_option("--rng-seed", expect_rng, "PRNG seed")->capture_default_str();

    // seeds show
    auto* seeds = app.add_subcommand("seeds", "catalog objects");
    auto* show = seeds->add_subcommand("show", "dump a catalog object as JSON");
    seeds->require_subcommand(1);
    std::string seed_name;
    std::string seed_format = "mixed";
    show->add_option("name", seed_name, "i3d1 | i3d2 | square(m) | unimodular(l,m) | minimal_cube(d) | unimodular_cube(d)")
        ->required();
    show->add_option("--format", seed_format, "mixed | triangulation")->capture_default_str();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive search on tiny configurations");
    auto* min_weighted = oracle->add_subcommand("min-weighted", "minimum weighted size over all triangulations");
    oracle->require_subcommand(1);
    std::string oracle_config;
    std::string objective = "weighted";
    min_weighted->add_option("--config", oracle_config, "e.g. cube(2)xsimplex(1), I2xD1, cube(3)")->required();
    min_weighted->add_option("--objective", objective, "weighted | cardinality")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build_cube->parsed()) {
            spec.coloring = parse_coloring_strategy(coloring);
            return run_build(spec, out);
        }
        if (verify->parsed()) {
            const Triangulation t = load_triangulation(verify_path);
            ValidationOptions options;
            if (mode == "pairwise") options.mode = DissectionMode::pairwise;
            else if (mode == "ridge") options.mode = DissectionMode::ridge;
            else if (mode != "auto") throw std::invalid_argument("unknown mode " + mode);
            const NormalizedVolume expected = ambient_normalized_volume(t.config().label());
            const ValidityReport r = face_to_face ? validate_face_to_face(t, expected, options)
                                                  : validate_dissection(t, expected, options);
            std::cout << t.config().label() << ": " << t.size() << " simplices, volume " << r.volume_total
                      << " of " << expected << "\n";
            std::cout << "dissection (" << r.method << "): " << (r.is_dissection ? "pass" : "FAIL") << "\n";
            if (face_to_face) std::cout << "face-to-face: " << (r.is_face_to_face ? "pass" : "FAIL") << "\n";
            if (t.config().is_product()) {
                const Rational w = weighted_size(t);
                std::cout << "weighted size: " << w << "\n";
            } else if (t.config().label().kind == ConfigLabel::Kind::cube) {
                std::cout << "efficiency: " << fixed(efficiency(t.size(), static_cast<unsigned>(t.config().dim())), 4)
                          << "\n";
            }
            print_violations(r);
            return r.is_dissection && (!face_to_face || r.is_face_to_face) ? 0 : 1;
        }
        if (table->parsed()) {
            const auto rows = report_table(max_dim, table_spec);
            if (table_out.empty()) {
                write_table_csv(std::cout, rows);
            } else {
                std::ofstream os(table_out);
                if (!os) throw std::runtime_error("cannot write " + table_out);
                write_table_csv(os, rows);
                std::cout << "wrote " << table_out << "\n";
            }
            return 0;
        }
        if (expect->parsed()) {
            if (expect_m < 1 || expect_m > 3) throw std::invalid_argument("--m must be 1, 2 or 3");
            const Triangulation tq = q_dim <= 3 ? minimal_cube(q_dim) : unimodular_cube(q_dim);
            const Triangulation t0 = expect_m == 1 ? with_point_factor(minimal_cube(3))
                                                   : mixed_to_triangulation(expect_m == 2 ? seed_i3d1() : seed_i3d2());
            const unsigned n = q_dim + 1;
            if (expect_m > n) throw std::invalid_argument("--m must not exceed q-dim + 1");
            const auto stats = monte_carlo_size(tq, t0, expect_m, expect_samples, expect_rng);
            const Rational bound = size_bound(tq.size(), weighted_size(t0), n, expect_m, 3);
            std::string exact;
            try {
                exact = to_decimal(exact_expected_size(tq, t0, expect_m), 4);
            } catch (const std::length_error&) {
                exact = "";
            }
            std::cout << "d,m,strategy,seed,size,bound,expected_exact_or_blank\n";
            std::cout << (3 + q_dim) << ',' << expect_m << ",random," << expect_rng << ',' << stats.min << ','
                      << to_decimal(bound, 4) << ',' << exact << "\n";
            std::cerr << "samples=" << stats.samples << " mean=" << to_decimal(stats.mean, 4) << " min=" << stats.min
                      << " max=" << stats.max << "\n";
            return Rational(Integer(stats.min)) <= bound ? 0 : 1;
        }
        if (show->parsed()) {
            const std::regex minimal_re(R"(^minimal_cube\((\d)\)$)");
            const std::regex unimodular_re(R"(^unimodular_cube\((\d+)\)$)");
            std::smatch match;
            if (std::regex_match(seed_name, match, minimal_re)) {
                write_triangulation_json(std::cout, minimal_cube(static_cast<unsigned>(std::stoul(match[1]))));
                return 0;
            }
            if (std::regex_match(seed_name, match, unimodular_re)) {
                write_triangulation_json(std::cout, unimodular_cube(static_cast<unsigned>(std::stoul(match[1]))));
                return 0;
            }
            const MixedSubdivision s = seed_by_name(seed_name);
            if (seed_format == "triangulation") {
                write_triangulation_json(std::cout, mixed_to_triangulation(s));
            } else if (seed_format == "mixed") {
                write_mixed_json(std::cout, s);
            } else {
                throw std::invalid_argument("unknown format " + seed_format);
            }
            return 0;
        }
        if (min_weighted->parsed()) {
            SearchProblem problem{make_configuration(oracle_label(oracle_config)),
                                  objective == "cardinality" ? Objective::cardinality : Objective::weighted};
            if (objective != "weighted" && objective != "cardinality") {
                throw std::invalid_argument("unknown objective " + objective);
            }
            const SearchResult r = min_weighted_size(problem);
            std::cerr << problem.config->label() << ": " << r.triangulations << " triangulations, minimum "
                      << objective << " " << r.value << "\n";
            write_triangulation_json(std::cout, r.witness);
            const auto check = validate_face_to_face(r.witness);
            return check.is_face_to_face ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
