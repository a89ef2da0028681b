#include "hullkit/bench.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "hullkit/errors.hpp"
#include "hullkit/io.hpp"
#include "hullkit/quickhull_det.hpp"
#include "hullkit/quickhull_rs.hpp"
#include "hullkit/reference.hpp"
#include "hullkit/rng.hpp"

namespace hullkit {

std::string algo_name(Algo a) {
    switch (a) {
        case Algo::Det: return "det";
        case Algo::Rs: return "rs";
        case Algo::Reference: return "reference";
    }
    return "unknown";
}

namespace {

struct TrialResult {
    double ms = 0.0;
    std::uint64_t orientation_tests = 0;
    std::size_t hull_size = 0;
};

TrialResult run_trial(Algo algo, std::span<const Point> pts,
                      std::uint64_t rs_seed, bool shuffle_rayshoot,
                      std::mutex& timing_mutex) {
    using clock = std::chrono::steady_clock;
    Stats st;
    Hull hull;
    double ms;
    {
        std::lock_guard<std::mutex> lock(timing_mutex);
        const auto t0 = clock::now();
        switch (algo) {
            case Algo::Det: hull = quickhull(pts, st); break;
            case Algo::Rs:
                hull = rs_quickhull(pts, rs_seed, shuffle_rayshoot, st);
                break;
            case Algo::Reference: hull = monotone_chain(pts, &st); break;
        }
        const auto t1 = clock::now();
        ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    return {ms, st.orientation_tests, hull.vertices.size()};
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg, std::ostream* log) {
    if (cfg.trials < 1) throw std::invalid_argument("run_bench: trials must be >= 1");
    if (cfg.sizes.empty()) throw std::invalid_argument("run_bench: no sizes");

    if (log) *log << "bench: prng=splitmix64 dist=" << distribution_name(cfg.dist)
                  << " seed=" << cfg.base_seed << " trials=" << cfg.trials
                  << " shuffle_rayshoot=" << (cfg.shuffle_rayshoot ? 1 : 0)
                  << "\n";

    const unsigned workers = cfg.workers == 0 ? 1 : cfg.workers;
    std::vector<BenchRecord> records;

    for (const std::size_t n : cfg.sizes) {
        for (const Algo algo : cfg.algos) {
            std::mutex timing_mutex;
            // Warm-up: one untimed run on trial 0's point set.
            {
                const auto pts = generate(cfg.dist, n, cfg.base_seed);
                run_trial(algo, pts, Rng::mix(cfg.base_seed, 1),
                          cfg.shuffle_rayshoot, timing_mutex);
            }

            std::vector<TrialResult> results(cfg.trials);
            std::atomic<std::size_t> next{0};
            auto work = [&] {
                for (;;) {
                    const std::size_t t = next.fetch_add(1);
                    if (t >= cfg.trials) break;
                    const std::uint64_t trial_seed = cfg.base_seed + t;
                    const auto pts = generate(cfg.dist, n, trial_seed);
                    results[t] = run_trial(algo, pts, Rng::mix(trial_seed, 1),
                                           cfg.shuffle_rayshoot, timing_mutex);
                }
            };
            if (workers == 1) {
                work();
            } else {
                std::vector<std::thread> pool;
                for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
                for (auto& th : pool) th.join();
            }

            double sum_ms = 0.0;
            double sum_tests = 0.0;
            double sum_hull = 0.0;
            for (const TrialResult& tr : results) {
                sum_ms += tr.ms;
                sum_tests += static_cast<double>(tr.orientation_tests);
                sum_hull += static_cast<double>(tr.hull_size);
            }
            const double trials_d = static_cast<double>(cfg.trials);
            const double mean_ms = sum_ms / trials_d;
            double var = 0.0;
            for (const TrialResult& tr : results) {
                var += (tr.ms - mean_ms) * (tr.ms - mean_ms);
            }
            const double stddev_ms =
                cfg.trials > 1 ? std::sqrt(var / (trials_d - 1.0)) : 0.0;

            BenchRecord rec{distribution_name(cfg.dist),
                            n,
                            algo_name(algo),
                            cfg.trials,
                            mean_ms,
                            stddev_ms,
                            sum_tests / trials_d,
                            sum_hull / trials_d,
                            cfg.base_seed};
            if (log)
                *log << "bench: n=" << n << " algo=" << rec.algorithm
                     << " mean_ms=" << rec.mean_ms
                     << " mean_orientation_tests=" << rec.mean_orientation_tests
                     << " mean_hull_size=" << rec.mean_hull_size << "\n";
            records.push_back(std::move(rec));
        }
    }
    return records;
}

namespace {

constexpr const char* kCsvHeader =
    "distribution,n,algorithm,trials,mean_ms,stddev_ms,"
    "mean_orientation_tests,mean_hull_size,seed";

template <class T>
T parse_field(const std::string& field, std::size_t line_no) {
    T value{};
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw parse_error("bad CSV field '" + field + "'", line_no);
    return value;
}

}  // namespace

void write_csv(std::span<const BenchRecord> records, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const BenchRecord& r : records) {
        out << r.distribution << ',' << r.n << ',' << r.algorithm << ','
            << r.trials << ',' << format_double(r.mean_ms) << ','
            << format_double(r.stddev_ms) << ','
            << format_double(r.mean_orientation_tests) << ','
            << format_double(r.mean_hull_size) << ',' << r.seed << '\n';
    }
}

void write_csv_file(std::span<const BenchRecord> records,
                    const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_csv(records, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<BenchRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw parse_error("missing or malformed CSV header", 1);

    std::vector<BenchRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            const std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        if (fields.size() != 9)
            throw parse_error("expected 9 CSV fields", line_no);
        BenchRecord r;
        r.distribution = fields[0];
        r.n = parse_field<std::size_t>(fields[1], line_no);
        r.algorithm = fields[2];
        r.trials = parse_field<std::size_t>(fields[3], line_no);
        r.mean_ms = parse_field<double>(fields[4], line_no);
        r.stddev_ms = parse_field<double>(fields[5], line_no);
        r.mean_orientation_tests = parse_field<double>(fields[6], line_no);
        r.mean_hull_size = parse_field<double>(fields[7], line_no);
        r.seed = parse_field<std::uint64_t>(fields[8], line_no);
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace hullkit
