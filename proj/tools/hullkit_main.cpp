// hullkit: generate point sets, compute 2D convex hulls with instrumented
// algorithms, cross-check them against a reference, and run benchmarks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hullkit/bench.hpp"
#include "hullkit/errors.hpp"
#include "hullkit/generators.hpp"
#include "hullkit/io.hpp"
#include "hullkit/quickhull_det.hpp"
#include "hullkit/quickhull_rs.hpp"
#include "hullkit/reference.hpp"
#include "hullkit/rng.hpp"

namespace {

using namespace hullkit;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

Distribution make_distribution(const std::string& name, std::size_t h) {
    Distribution d;
    if (name == "square") d.kind = DistKind::Square;
    else if (name == "circle") d.kind = DistKind::Circle;
    else if (name == "oncircle") d.kind = DistKind::OnCircle;
    else if (name == "quad") d.kind = DistKind::Quad;
    else if (name == "worst") d.kind = DistKind::Worst;
    else if (name == "adversarial") {
        d.kind = DistKind::Adversarial;
        d.h = h;
    } else {
        throw std::invalid_argument("unknown distribution: " + name);
    }
    return d;
}

std::vector<Point> load_points(const std::string& path) {
    if (path == "-") return read_points(std::cin);
    return read_points_file(path);
}

void print_stats(const Stats& st) {
    std::cerr << "orientation_tests=" << st.orientation_tests << '\n'
              << "ray_shoot_calls=" << st.ray_shoot_calls << '\n'
              << "recursive_calls=" << st.recursive_calls << '\n'
              << "points_pruned=" << st.points_pruned << '\n'
              << "max_depth=" << st.max_depth << '\n';
}

int cmd_gen(const std::string& dist_name, std::size_t n, std::size_t h,
            std::uint64_t seed, const std::string& out_path) {
    const auto pts = generate(make_distribution(dist_name, h), n, seed);
    if (out_path == "-") {
        write_points(pts, std::cout);
    } else {
        write_points_file(pts, out_path);
    }
    return kExitOk;
}

int cmd_hull(const std::string& algo, const std::string& in_path,
             std::uint64_t seed, bool shuffle_rayshoot, bool show_stats) {
    const auto pts = load_points(in_path);
    if (pts.empty()) {
        std::cerr << "hull: input contains no points\n";
        return kExitUsage;
    }
    Stats st;
    Hull hull;
    if (algo == "det") {
        hull = quickhull(pts, st);
    } else if (algo == "rs") {
        hull = rs_quickhull(pts, seed, shuffle_rayshoot, st);
    } else {
        hull = monotone_chain(pts, &st);
    }
    write_points(hull.vertices, std::cout);
    if (show_stats) print_stats(st);
    return kExitOk;
}

int cmd_verify(const std::string& in_path, std::size_t trials,
               std::uint64_t seed) {
    const auto pts = load_points(in_path);
    if (pts.empty()) {
        std::cerr << "verify: input contains no points\n";
        return kExitUsage;
    }

    Stats st;
    const Hull ref = monotone_chain(pts, &st);
    if (auto why = hull_violation(ref, pts)) {
        std::cerr << "verify: reference hull invalid: " << *why << '\n';
        return kExitVerifyFailure;
    }

    const Hull det = quickhull(pts, st);
    if (auto why = hull_violation(det, pts)) {
        std::cerr << "verify: det hull invalid: " << *why << '\n';
        return kExitVerifyFailure;
    }
    if (!cyclic_equal(det, ref)) {
        std::cerr << "verify: det hull disagrees with reference ("
                  << det.vertices.size() << " vs " << ref.vertices.size()
                  << " vertices)\n";
        return kExitVerifyFailure;
    }

    for (std::size_t k = 0; k < trials; ++k) {
        const std::uint64_t rs_seed = seed + k;
        const Hull rs = rs_quickhull(pts, rs_seed, st);
        if (auto why = hull_violation(rs, pts)) {
            std::cerr << "verify: rs hull invalid at seed " << rs_seed << ": "
                      << *why << '\n';
            return kExitVerifyFailure;
        }
        if (!cyclic_equal(rs, ref)) {
            std::cerr << "verify: rs hull disagrees with reference at seed "
                      << rs_seed << '\n';
            return kExitVerifyFailure;
        }
    }
    std::cout << "ok: " << pts.size() << " points, hull size "
              << ref.vertices.size() << ", det + " << trials
              << " rs seeds match the reference\n";
    return kExitOk;
}

int cmd_bench(const std::string& dist_name, std::size_t h,
              const std::vector<std::size_t>& sizes,
              const std::vector<std::string>& algo_names, std::size_t trials,
              std::uint64_t seed, unsigned workers, bool shuffle_rayshoot,
              const std::string& out_path) {
    BenchConfig cfg;
    cfg.dist = make_distribution(dist_name, h);
    cfg.sizes = sizes;
    for (const auto& a : algo_names) {
        if (a == "det") cfg.algos.push_back(Algo::Det);
        else if (a == "rs") cfg.algos.push_back(Algo::Rs);
        else if (a == "reference") cfg.algos.push_back(Algo::Reference);
        else throw std::invalid_argument("unknown algorithm: " + a);
    }
    cfg.trials = trials;
    cfg.base_seed = seed;
    cfg.workers = workers;
    cfg.shuffle_rayshoot = shuffle_rayshoot;

    const auto records = run_bench(cfg, &std::cerr);
    if (out_path == "-") {
        write_csv(records, std::cout);
    } else {
        write_csv_file(records, out_path);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D convex hull toolkit: instrumented quickhull variants, "
                 "seeded point generators, verification, benchmarks"};
    app.require_subcommand(1);
    // --h is a real option on gen/bench, so help is --help only.
    app.set_help_flag("--help", "Print help");

    const std::vector<std::string> dist_choices{"square", "circle", "oncircle",
                                                "quad", "worst", "adversarial"};
    const std::vector<std::string> algo_choices{"det", "rs", "reference"};

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a seeded point set");
    std::string gen_dist;
    std::size_t gen_n = 0, gen_h = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out = "-";
    gen->add_option("--dist", gen_dist, "Distribution")
        ->required()
        ->check(CLI::IsMember(dist_choices));
    gen->add_option("--n", gen_n, "Number of points")->required();
    gen->add_option("--h", gen_h, "Hull size target (adversarial)");
    gen->add_option("--seed", gen_seed, "RNG seed")->envname("HULLKIT_SEED");
    gen->add_option("-o,--out", gen_out, "Output path ('-' for stdout)");

    // hull
    auto* hull = app.add_subcommand("hull", "Compute the hull of a point file");
    std::string hull_algo, hull_in = "-";
    std::uint64_t hull_seed = 0;
    bool hull_stats = false;
    bool hull_shuffle = true;
    hull->add_option("--algo", hull_algo, "Algorithm")
        ->required()
        ->check(CLI::IsMember(algo_choices));
    hull->add_option("input", hull_in, "Point file ('-' for stdin)");
    hull->add_option("--seed", hull_seed, "Seed for rs")->envname("HULLKIT_SEED");
    hull->add_flag("--stats", hull_stats, "Print run counters to stderr");
    hull->add_flag("--shuffle-rayshoot,!--no-shuffle-rayshoot", hull_shuffle,
                   "Shuffle inside the ray-shooting scan (default on)");

    // verify
    auto* verify =
        app.add_subcommand("verify", "Cross-check det, rs and the reference");
    std::string verify_in = "-";
    std::size_t verify_trials = 8;
    std::uint64_t verify_seed = 0;
    verify->add_option("input", verify_in, "Point file ('-' for stdin)");
    verify->add_option("--trials", verify_trials, "Number of rs seeds");
    verify->add_option("--seed", verify_seed, "First rs seed")
        ->envname("HULLKIT_SEED");

    // bench
    auto* bench = app.add_subcommand("bench", "Run seeded benchmark batches");
    std::string bench_dist;
    std::size_t bench_h = 0, bench_trials = 100;
    std::vector<std::size_t> bench_sizes;
    std::vector<std::string> bench_algos{"det", "rs"};
    std::uint64_t bench_seed = 0;
    unsigned bench_workers = 1;
    bool bench_shuffle = false;
    std::string bench_out = "-";
    bench->add_option("--dist", bench_dist, "Distribution")
        ->required()
        ->check(CLI::IsMember(dist_choices));
    bench->add_option("--h", bench_h, "Hull size target (adversarial)");
    bench->add_option("--sizes", bench_sizes, "Comma-separated point counts")
        ->required()
        ->delimiter(',');
    bench->add_option("--algos", bench_algos, "Comma-separated algorithms")
        ->delimiter(',')
        ->check(CLI::IsMember(algo_choices));
    bench->add_option("--trials", bench_trials, "Trials per (size, algorithm)");
    bench->add_option("--seed", bench_seed, "Base seed")->envname("HULLKIT_SEED");
    bench->add_option("--workers", bench_workers, "Worker threads");
    bench->add_flag("--shuffle-rayshoot,!--no-shuffle-rayshoot", bench_shuffle,
                    "Shuffle inside the ray-shooting scan (default off)");
    bench->add_option("-o,--out", bench_out, "CSV path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_dist, gen_n, gen_h, gen_seed, gen_out);
        if (hull->parsed())
            return cmd_hull(hull_algo, hull_in, hull_seed, hull_shuffle,
                            hull_stats);
        if (verify->parsed())
            return cmd_verify(verify_in, verify_trials, verify_seed);
        if (bench->parsed())
            return cmd_bench(bench_dist, bench_h, bench_sizes, bench_algos,
                             bench_trials, bench_seed, bench_workers,
                             bench_shuffle, bench_out);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
