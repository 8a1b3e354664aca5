// Copyright 2026 The jumpback Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jumpback/experiments.hpp"
#include "jumpback/golden.hpp"
#include "jumpback/hashers.hpp"
#include "jumpback/theory.hpp"

namespace jumpback::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5EED5EED5EED5EEDULL;

/// Thrown for bad arguments discovered after CLI11 parsing; maps to exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string key_hex(Key key) {
    char buffer[19];
    std::snprintf(buffer, sizeof buffer, "0x%016llx", static_cast<unsigned long long>(key));
    return buffer;
}

Algorithm require_algorithm(const std::string& name) {
    if (auto algorithm = parse_algorithm(name)) return *algorithm;
    std::string known;
    for (Algorithm a : kAllAlgorithms) {
        known += known.empty() ? "" : ", ";
        known += algorithm_name(a);
    }
    throw UsageError("unknown algorithm '" + name + "' (known: " + known + ")");
}

std::uint64_t require_u64(const std::string& text, const char* what) {
    if (auto value = parse_u64(text)) return *value;
    throw UsageError(std::string("invalid ") + what + " '" + text + "'");
}

BucketCount require_bucket_count(const std::string& text) {
    const auto value = parse_u64(text);
    if (!value || *value < 1 || *value > BucketCount::kMax) {
        throw UsageError("n must be an integer in [1, 2147483647], got '" + text + "'");
    }
    return BucketCount{*value};
}

std::vector<std::uint32_t> require_n_spec(const std::string& spec) {
    try {
        return parse_n_spec(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

/// Output stream for `path`; "-" means `fallback`.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) : stream_{&fallback} {
        if (path != "-") {
            file_.open(path, std::ios::out | std::ios::trunc | std::ios::binary);
            if (!file_) throw UsageError("cannot open '" + path + "' for writing");
            stream_ = &file_;
        }
    }

    std::ostream& stream() { return *stream_; }

    void finish(const std::string& path) {
        stream_->flush();
        if (!*stream_) throw UsageError("failed writing '" + path + "'");
    }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

nlohmann::json trace_to_json(const EvaluationTrace& trace) {
    nlohmann::json j;
    if (trace.x0) j["x0"] = *trace.x0;
    if (trace.x1) j["x1"] = *trace.x1;
    if (trace.u_bits) j["u_bits"] = *trace.u_bits;
    if (!trace.m_list.empty()) j["m_list"] = trace.m_list;
    if (!trace.c_list.empty()) j["c_list"] = trace.c_list;
    if (!trace.y_list.empty()) j["y_list"] = trace.y_list;
    if (!trace.z_list.empty()) j["z_list"] = trace.z_list;
    if (!trace.active_indices.empty()) j["active_indices"] = trace.active_indices;
    if (trace.unit_uniform) j["unit_uniform"] = *trace.unit_uniform;
    if (trace.gamma) j["gamma"] = *trace.gamma;
    j["invocations"] = trace.invocations;
    return j;
}

// --- map ------------------------------------------------------------------

struct MapArgs {
    std::string algo;
    std::string key;
    std::string n;
    bool count = false;
    bool trace = false;
    std::string verify;
};

int cmd_map(const MapArgs& args, std::ostream& out, std::ostream& err) {
    const Algorithm algorithm = require_algorithm(args.algo);
    const Key key = require_u64(args.key, "key");
    const BucketCount n = require_bucket_count(args.n);

    const Evaluation e = evaluate(algorithm, key, n);
    out << "bucket=" << e.bucket;
    if (args.count) out << " invocations=" << e.invocations;
    out << '\n';
    if (args.trace) {
        auto [bucket, trace] = evaluate_traced(HasherConfig{algorithm}, key, n);
        out << trace_to_json(trace).dump() << '\n';
    }

    if (args.verify.empty()) return kExitOk;
    std::ifstream in(args.verify);
    if (!in) throw UsageError("cannot read '" + args.verify + "'");
    std::vector<GoldenRecord> records;
    try {
        records = read_golden_file(in);
    } catch (const GoldenFormatError& ex) {
        throw UsageError(args.verify + ": " + ex.what());
    }
    auto it = std::find_if(records.begin(), records.end(), [&](const GoldenRecord& r) {
        return r.algorithm == algorithm && r.key == key && r.n == n.value();
    });
    if (it == records.end()) {
        throw UsageError("no golden record for " + std::string(algorithm_name(algorithm)) + "," +
                         key_hex(key) + "," + std::to_string(n.value()));
    }
    if (it->bucket != e.bucket || it->invocations != e.invocations) {
        err << "mismatch: expected " << format_golden_record(*it) << ", got bucket=" << e.bucket
            << " invocations=" << e.invocations << '\n';
        return kExitCheckFailed;
    }
    out << "verified " << format_golden_record(*it) << '\n';
    return kExitOk;
}

// --- scan -----------------------------------------------------------------

struct ScanArgs {
    std::string algo;
    std::string key;
    std::string n_max;
};

int cmd_scan(const ScanArgs& args, std::ostream& out) {
    const Algorithm algorithm = require_algorithm(args.algo);
    const Key key = require_u64(args.key, "key");
    const std::uint32_t n_max = require_bucket_count(args.n_max).value();

    BucketIndex previous = hash(algorithm, key, BucketCount{1});
    out << "n=1 bucket=" << previous << '\n';
    std::uint64_t reassignments = 0;
    std::uint64_t violations = 0;
    for (std::uint32_t n = 2; n <= n_max; ++n) {
        const BucketIndex current = hash(algorithm, key, BucketCount{n});
        if (current == previous) continue;
        ++reassignments;
        out << "n=" << n << " bucket=" << current;
        if (current != n - 1) {
            ++violations;
            out << " violation";
        }
        out << '\n';
        previous = current;
    }
    out << "reassignments=" << reassignments << " violations=" << violations << '\n';
    return kExitOk;
}

// --- consumption ----------------------------------------------------------

struct ConsumptionArgs {
    std::string algo;
    std::string n_spec;
    std::string keys = "100000";
    std::string seed = std::to_string(kDefaultSeed);
    std::string out = "-";
    unsigned workers = 0;
};

int cmd_consumption(const ConsumptionArgs& args, std::ostream& out, std::ostream& err) {
    const Algorithm algorithm = require_algorithm(args.algo);
    const auto n_list = require_n_spec(args.n_spec);
    const std::uint64_t keys = require_u64(args.keys, "key count");
    if (keys == 0) throw UsageError("--keys must be positive");
    const std::uint64_t seed = require_u64(args.seed, "seed");

    OutputTarget target(args.out, out);
    const auto summaries = run_consumption_experiment(algorithm, n_list, keys, seed, args.workers);

    auto& csv = target.stream();
    csv << "n,samples,mean_empirical,variance_empirical,mean_theory,variance_theory\n";
    double max_mean_dev = 0.0;
    double max_var_dev = 0.0;
    for (const auto& s : summaries) {
        const double mean_theory = s.theory ? s.theory->mean : std::nan("");
        const double var_theory = s.theory ? s.theory->variance : std::nan("");
        csv << s.n << ',' << s.sample_count << ',' << format_float(s.empirical_mean) << ','
            << format_float(s.empirical_variance) << ',' << format_float(mean_theory) << ','
            << format_float(var_theory) << '\n';
        if (s.theory) {
            max_mean_dev = std::max(max_mean_dev, std::abs(s.empirical_mean - mean_theory));
            max_var_dev = std::max(max_var_dev, std::abs(s.empirical_variance - var_theory));
        }
    }
    target.finish(args.out);
    err << "max_mean_deviation=" << format_float(max_mean_dev)
        << " max_variance_deviation=" << format_float(max_var_dev) << '\n';
    return kExitOk;
}

// --- checks ---------------------------------------------------------------

struct MonotonicityArgs {
    std::string algo;
    std::string runs = "1000";
    std::string n_max = "10000";
    std::string seed = std::to_string(kDefaultSeed);
    unsigned workers = 0;
};

int cmd_check_monotonicity(const MonotonicityArgs& args, std::ostream& out) {
    const Algorithm algorithm = require_algorithm(args.algo);
    const std::uint64_t runs = require_u64(args.runs, "run count");
    const std::uint32_t n_max = require_bucket_count(args.n_max).value();
    if (n_max < 2) throw UsageError("--n-max must be at least 2");
    const std::uint64_t seed = require_u64(args.seed, "seed");

    const auto report = run_monotonicity_check(algorithm, runs, n_max, seed, args.workers);
    out << "check=monotonicity algo=" << algorithm_name(algorithm) << " runs=" << report.runs
        << " n_max=" << report.n_max << " violations=" << report.violations;
    if (report.first_violation) {
        out << " first_key=" << key_hex(report.first_violation->first)
            << " first_n=" << report.first_violation->second;
    }
    out << " result=" << (report.violations == 0 ? "pass" : "fail") << '\n';
    return report.violations == 0 ? kExitOk : kExitCheckFailed;
}

struct UniformityArgs {
    std::string algo;
    std::string n_spec = "range:2:100";
    std::string keys = "100000";
    double alpha = 0.001;
    double max_rejection = 0.02;
    std::string seed = std::to_string(kDefaultSeed);
    bool verbose = false;
    unsigned workers = 0;
};

int cmd_check_uniformity(const UniformityArgs& args, std::ostream& out) {
    const Algorithm algorithm = require_algorithm(args.algo);
    const auto n_list = require_n_spec(args.n_spec);
    const std::uint64_t keys = require_u64(args.keys, "key count");
    if (keys == 0) throw UsageError("--keys must be positive");
    if (!(args.alpha > 0.0 && args.alpha < 1.0)) throw UsageError("--alpha must lie in (0, 1)");
    const std::uint64_t seed = require_u64(args.seed, "seed");

    const auto report = run_uniformity_check(algorithm, keys, n_list, args.alpha, seed,
                                             args.workers);
    if (args.verbose) {
        for (const auto& entry : report.entries) {
            const char* kind = entry.result.kind == GofKind::g_test    ? "g"
                               : entry.result.kind == GofKind::ks_test ? "ks"
                                                                       : "none";
            out << "n=" << entry.n << " test=" << kind
                << " statistic=" << format_float(entry.result.statistic)
                << " p=" << format_float(entry.result.p_value)
                << (entry.result.rejected_at(args.alpha) ? " rejected" : "") << '\n';
        }
    }
    const bool pass = report.rejection_fraction() <= args.max_rejection;
    out << "check=uniformity algo=" << algorithm_name(algorithm) << " keys=" << keys
        << " tests=" << report.tested << " rejected=" << report.rejected
        << " rejection_fraction=" << format_float(report.rejection_fraction())
        << " alpha=" << format_float(args.alpha) << " result=" << (pass ? "pass" : "fail") << '\n';
    return pass ? kExitOk : kExitCheckFailed;
}

// --- bench ----------------------------------------------------------------

struct BenchArgs {
    std::string algos = "modulo,random,jumphash,jumpbackhash,jumpbackhash-packed";
    std::string n_spec;
    std::string keys = "1000000";
    std::string seed = std::to_string(kDefaultSeed);
    std::string out = "-";
};

int cmd_bench(const BenchArgs& args, std::ostream& out) {
    std::vector<Algorithm> algorithms;
    std::stringstream names(args.algos);
    for (std::string name; std::getline(names, name, ',');) {
        if (!name.empty()) algorithms.push_back(require_algorithm(name));
    }
    if (algorithms.empty()) throw UsageError("--algos must name at least one algorithm");
    const auto n_list =
        args.n_spec.empty() ? benchmark_bucket_counts(1000000) : require_n_spec(args.n_spec);
    const std::uint64_t keys = require_u64(args.keys, "key count");
    if (keys == 0) throw UsageError("--keys must be positive");
    const std::uint64_t seed = require_u64(args.seed, "seed");

    std::vector<Key> key_list(keys);
    for (std::uint64_t i = 0; i < keys; ++i) key_list[i] = experiment_key(seed, i);

    OutputTarget target(args.out, out);
    auto& csv = target.stream();
    csv << "algo,n,ns_per_op,mean_invocations\n";
    for (Algorithm algorithm : algorithms) {
        for (std::uint32_t raw_n : n_list) {
            const BucketCount n{raw_n};
            std::uint64_t sink = 0;
            const auto start = std::chrono::steady_clock::now();
            for (Key key : key_list) sink += hash(algorithm, key, n);
            const auto stop = std::chrono::steady_clock::now();
            static volatile std::uint64_t keep;
            keep = sink;

            std::uint64_t invocations = 0;
            for (Key key : key_list) invocations += evaluate(algorithm, key, n).invocations;
            const double ns =
                std::chrono::duration<double, std::nano>(stop - start).count() /
                static_cast<double>(keys);
            csv << algorithm_name(algorithm) << ',' << raw_n << ',' << format_float(ns) << ','
                << format_float(static_cast<double>(invocations) / static_cast<double>(keys))
                << '\n';
        }
    }
    target.finish(args.out);
    return kExitOk;
}

// --- golden ---------------------------------------------------------------

struct GoldenArgs {
    std::string write;
    std::string verify;
};

int cmd_golden(const GoldenArgs& args, std::ostream& out, std::ostream& err) {
    if (!args.write.empty()) {
        const auto records = compute_golden_records();
        OutputTarget target(args.write, out);
        write_golden_file(target.stream(), records);
        target.finish(args.write);
        if (args.write != "-") out << "wrote " << records.size() << " records\n";
        return kExitOk;
    }

    std::ifstream in(args.verify);
    if (!in) throw UsageError("cannot read '" + args.verify + "'");
    std::vector<GoldenRecord> records;
    try {
        records = read_golden_file(in);
    } catch (const GoldenFormatError& e) {
        throw UsageError(args.verify + ": " + e.what());
    }
    const auto mismatches = verify_golden_records(records);
    for (const auto& m : mismatches) {
        err << "mismatch: expected " << format_golden_record(m.expected)
            << " got bucket=" << m.actual.bucket << " invocations=" << m.actual.invocations
            << '\n';
    }
    out << "records=" << records.size() << " mismatches=" << mismatches.size() << '\n';
    return mismatches.empty() ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::optional<std::uint64_t> parse_u64(std::string_view text) {
    int base = 10;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        text.remove_prefix(2);
        base = 16;
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

std::vector<std::uint32_t> parse_n_spec(std::string_view spec) {
    auto bucket_count = [](std::string_view text) {
        const auto value = parse_u64(text);
        if (!value || *value < 1 || *value > BucketCount::kMax) {
            throw std::invalid_argument("invalid bucket count '" + std::string(text) + "'");
        }
        return static_cast<std::uint32_t>(*value);
    };
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("n-spec must start with list:, geom: or range:");
    }
    const std::string_view kind = spec.substr(0, colon);
    std::string_view rest = spec.substr(colon + 1);

    std::vector<std::uint32_t> result;
    if (kind == "list") {
        while (true) {
            const auto comma = rest.find(',');
            result.push_back(bucket_count(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        return result;
    }

    const auto second = rest.find(':');
    if (second == std::string_view::npos) {
        throw std::invalid_argument("n-spec '" + std::string(spec) + "' needs two parameters");
    }
    if (kind == "geom") {
        const std::uint32_t n0 = bucket_count(rest.substr(0, second));
        const std::string factor_text{rest.substr(second + 1)};
        std::size_t used = 0;
        double factor = 0.0;
        try {
            factor = std::stod(factor_text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != factor_text.size() || !(factor > 0.0 && factor < 1.0)) {
            throw std::invalid_argument("geom factor must lie in (0, 1), got '" + factor_text +
                                        "'");
        }
        for (std::uint64_t n : geometric_n_sequence(n0, factor)) {
            result.push_back(static_cast<std::uint32_t>(n));
        }
        return result;
    }
    if (kind == "range") {
        const std::uint32_t lo = bucket_count(rest.substr(0, second));
        const std::uint32_t hi = bucket_count(rest.substr(second + 1));
        if (lo > hi) throw std::invalid_argument("range lower bound exceeds upper bound");
        for (std::uint64_t n = lo; n <= hi; ++n) result.push_back(static_cast<std::uint32_t>(n));
        return result;
    }
    throw std::invalid_argument("unknown n-spec kind '" + std::string(kind) + "'");
}

std::string format_float(double value) {
    if (std::isnan(value)) return "nan";
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.9g", value);
    return buffer;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Consistent hashing toolkit: key-to-bucket mapping, experiments and golden vectors",
                 "jbhash"};
    app.require_subcommand(1);

    MapArgs map_args;
    auto* map = app.add_subcommand("map", "Map one key to a bucket");
    map->add_option("--algo", map_args.algo, "Algorithm name")->required();
    map->add_option("--key", map_args.key, "Key, decimal or 0x-hex")->required();
    map->add_option("--n", map_args.n, "Number of buckets")->required();
    map->add_flag("--count", map_args.count, "Also print generator invocations");
    map->add_flag("--trace", map_args.trace, "Print the evaluation trace as JSON");
    map->add_option("--verify", map_args.verify, "Golden-vector file to check the result against");

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "Print the reassignment points for n = 1..n-max");
    scan->add_option("--algo", scan_args.algo, "Algorithm name")->required();
    scan->add_option("--key", scan_args.key, "Key, decimal or 0x-hex")->required();
    scan->add_option("--n-max", scan_args.n_max, "Largest bucket count")->required();

    ConsumptionArgs consumption_args;
    auto* consumption =
        app.add_subcommand("consumption", "Measure generator invocations per evaluation (CSV)");
    consumption->add_option("--algo", consumption_args.algo, "Algorithm name")->required();
    consumption->add_option("--n-spec", consumption_args.n_spec,
                            "list:<n,...> | geom:<n0>:<factor> | range:<lo>:<hi>")
        ->required();
    consumption->add_option("--keys", consumption_args.keys, "Keys per bucket count")
        ->capture_default_str();
    consumption->add_option("--seed", consumption_args.seed, "Experiment seed")
        ->capture_default_str();
    consumption->add_option("--out", consumption_args.out, "CSV output path, - for stdout")
        ->capture_default_str();
    consumption->add_option("--workers", consumption_args.workers,
                            "Worker threads (0: JUMPBACK_WORKERS or all cores)");

    MonotonicityArgs mono_args;
    auto* mono = app.add_subcommand("check-monotonicity", "Sweep n for random keys");
    mono->add_option("--algo", mono_args.algo, "Algorithm name")->required();
    mono->add_option("--runs", mono_args.runs, "Number of random keys")->capture_default_str();
    mono->add_option("--n-max", mono_args.n_max, "Largest bucket count")->capture_default_str();
    mono->add_option("--seed", mono_args.seed, "Experiment seed")->capture_default_str();
    mono->add_option("--workers", mono_args.workers, "Worker threads");

    UniformityArgs uni_args;
    auto* uni = app.add_subcommand("check-uniformity", "G-test / KS test of bucket frequencies");
    uni->add_option("--algo", uni_args.algo, "Algorithm name")->required();
    uni->add_option("--n-spec", uni_args.n_spec, "Bucket counts to test")->capture_default_str();
    uni->add_option("--keys", uni_args.keys, "Keys per bucket count")->capture_default_str();
    uni->add_option("--alpha", uni_args.alpha, "Per-test significance level")
        ->capture_default_str();
    uni->add_option("--max-rejection", uni_args.max_rejection,
                    "Largest acceptable fraction of rejected tests")
        ->capture_default_str();
    uni->add_option("--seed", uni_args.seed, "Experiment seed")->capture_default_str();
    uni->add_flag("--verbose", uni_args.verbose, "Print one line per bucket count");
    uni->add_option("--workers", uni_args.workers, "Worker threads");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Time algorithms and count invocations (CSV)");
    bench->add_option("--algos", bench_args.algos, "Comma-separated algorithm names")
        ->capture_default_str();
    bench->add_option("--n-spec", bench_args.n_spec,
                      "Bucket counts (default: 2^i, 2^i+1, 2^i*1.25/1.5/1.75 up to 10^6)");
    bench->add_option("--keys", bench_args.keys, "Keys per measurement")->capture_default_str();
    bench->add_option("--seed", bench_args.seed, "Key seed")->capture_default_str();
    bench->add_option("--out", bench_args.out, "CSV output path, - for stdout")
        ->capture_default_str();

    GoldenArgs golden_args;
    auto* golden = app.add_subcommand("golden", "Write or verify the golden-vector file");
    auto* write_opt = golden->add_option("--write", golden_args.write, "Regenerate into PATH");
    auto* verify_opt = golden->add_option("--verify", golden_args.verify, "Verify PATH");
    write_opt->excludes(verify_opt);
    golden->require_option(1);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*map) return cmd_map(map_args, out, err);
        if (*scan) return cmd_scan(scan_args, out);
        if (*consumption) return cmd_consumption(consumption_args, out, err);
        if (*mono) return cmd_check_monotonicity(mono_args, out);
        if (*uni) return cmd_check_uniformity(uni_args, out);
        if (*bench) return cmd_bench(bench_args, out);
        if (*golden) return cmd_golden(golden_args, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace jumpback::cli
