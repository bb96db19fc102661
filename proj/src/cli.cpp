// Copyright 2026 The qtamper Authors
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

#include "qtamper/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qtamper/error.hpp"
#include "qtamper/haar.hpp"
#include "qtamper/json_io.hpp"
#include "qtamper/moments.hpp"
#include "qtamper/perm.hpp"
#include "qtamper/qamd.hpp"
#include "qtamper/tamper.hpp"
#include "qtamper/weingarten.hpp"

namespace qtamper::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char *kBuildId = "qtamper " QTAMPER_VERSION;

struct Outcome {
    Json report;
    bool assertions_pass = true;
    std::optional<std::string> csv;
};

// Parameters shared by every subcommand.
struct Globals {
    unsigned jobs = 0;
    std::string out = "reports";
};

std::string to_text(double x) { return format_double(x); }
std::string to_text(std::uint64_t x) { return std::to_string(x); }
std::string to_text(int x) { return std::to_string(x); }

std::uint64_t fallback_seed() {
    if (const char *env = std::getenv("QTAMPER_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception &) {
        }
        throw Error(ErrorCode::UsageError, "QTAMPER_SEED is not an unsigned integer");
    }
    return 0;
}

Json manifest(const std::string &subcommand, const std::vector<std::string> &argv, const std::vector<std::uint64_t> &seeds) {
    return Json{{"subcommand", subcommand},
                {"argv", argv},
                {"seeds", seeds},
                {"generator", std::string(kGeneratorVersion)},
                {"build", kBuildId}};
}

Json rational_json(const Rational &r) { return to_fraction_string(r); }

// ---------------------------------------------------------------- weingarten-table

Outcome weingarten_table_cmd(int p, std::uint64_t N) {
    const auto table = wg_table(p, N);
    Json entries = Json::array();
    for (const auto &e : table->entries()) {
        entries.push_back({{"cycle_type", e.type.to_string()},
                           {"value", rational_json(e.value)},
                           {"class_size", e.class_size},
                           {"approx", e.value.get_d()}});
    }
    Rational rising = 1;
    Rational falling = 1;
    for (int i = 0; i < p; ++i) {
        rising *= Rational(static_cast<long>(N) + i);
        falling *= Rational(static_cast<long>(N) - i);
    }
    const Rational sum = wg_sum(p, N);
    const Rational abs_sum = wg_abs_sum(p, N);
    const bool sum_ok = sum == 1 / rising;
    // The falling-factorial identity needs N ≥ p, which wg_table already enforces.
    const bool abs_ok = abs_sum == 1 / falling;
    Outcome out;
    out.report = Json{{"p", p},
                      {"N", N},
                      {"entries", entries},
                      {"wg_sum", rational_json(sum)},
                      {"wg_abs_sum", rational_json(abs_sum)},
                      {"checks",
                       {{"wg_sum_rising_factorial", sum_ok}, {"wg_abs_sum_falling_factorial", abs_ok}}}};
    out.assertions_pass = sum_ok && abs_ok;
    return out;
}

// ---------------------------------------------------------------- perm-verify

Outcome perm_verify_cmd(int n_max) {
    const auto lemmas = verify_lemmas(n_max);
    Json checks = Json::array();
    for (const auto &c : lemmas.checks) {
        checks.push_back({{"lemma", c.lemma_name},
                          {"n_or_t", c.n_or_t},
                          {"checked", c.checked_count},
                          {"counterexamples", c.counterexamples}});
    }
    Outcome out;
    out.report = Json{{"n_max", n_max}, {"checks", checks}, {"total_counterexamples", lemmas.total_counterexamples()}};
    out.assertions_pass = lemmas.total_counterexamples() == 0;
    return out;
}

// ---------------------------------------------------------------- qamd-scan

Json message_json(const Message &m) { return Json(m); }

Outcome qamd_scan_cmd(std::uint32_t q, int d, const QamdScanMode &mode, unsigned jobs) {
    const QamdParams params(q, d);
    const auto r = qamd_security_scan(params, mode, jobs);
    Outcome out;
    out.report = Json{{"q", q},
                      {"d", d},
                      {"mode", mode.kind == QamdScanMode::Kind::kExhaustive ? "exhaustive" : "random"},
                      {"trials", mode.trials},
                      {"bound", r.bound},
                      {"max_prob", r.max_prob},
                      {"pairs_checked", r.pairs_checked},
                      {"max_root_count", r.max_root_count},
                      {"witness", {{"message", message_json(r.witness_message)}, {"tamper", pauli_to_json(r.witness_tamper)}}},
                      {"within_bound", r.within_bound()}};
    out.assertions_pass = r.within_bound();
    return out;
}

// ---------------------------------------------------------------- moments

ComplexMatrix resolve_unitary(const std::string &spec, Eigen::Index N) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::UsageError, "--unitary must be pauli:, file: or random:");
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    ComplexMatrix U;
    if (kind == "pauli") {
        const auto label = PauliLabel::parse(rest);
        if (label.dimension() != N) throw Error(ErrorCode::UsageError, "Pauli label dimension differs from --N");
        U = pauli_matrix(label);
    } else if (kind == "file") {
        U = read_unitary_file(rest);
        if (U.rows() != N) throw Error(ErrorCode::InputError, "unitary file dimension differs from --N");
    } else if (kind == "random") {
        std::size_t used = 0;
        std::uint64_t seed = 0;
        try {
            seed = std::stoull(rest, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != rest.size()) throw Error(ErrorCode::UsageError, "random:<seed> needs an unsigned integer");
        U = sample_haar_unitary(N, Seed{seed}).matrix;
    } else {
        throw Error(ErrorCode::UsageError, "--unitary must be pauli:, file: or random:");
    }
    return U;
}

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Outcome moments_cmd(const MomentSpec &spec, std::uint64_t trials, Seed seed, unsigned jobs) {
    const Eigen::Index N = spec.U.rows();
    Outcome out;
    Json r{{"pattern", to_string(spec.pattern)}, {"t", spec.t}, {"N", N}, {"trace_abs", std::abs(spec.U.trace())}};
    std::optional<double> exact;
    if (N >= 2 * spec.t) {
        exact = exact_moment(spec);
        r["exact"] = *exact;
    } else {
        r["exact"] = nullptr;
    }
    if (spec.pattern == MomentPattern::kQuantumMessage) {
        r["K"] = spec.K;
        r["target"] = spec.target;
        Json amps = Json::array();
        for (const auto &a : spec.message_amplitudes) amps.push_back(complex_json(a));
        r["message_amplitudes"] = amps;
        Json weights = Json::array();
        for (const auto &bw : beta_weights(spec)) {
            weights.push_back({{"beta", to_cycle_string(bw.beta)}, {"weight", complex_json(bw.weight)}});
        }
        r["beta_weights"] = weights;
    }
    if (spec.t == 1 && spec.pattern != MomentPattern::kQuantumMessage) {
        const double closed = spec.pattern == MomentPattern::kOffDiagonal ? first_moment_js(spec.U) : first_moment_ss(spec.U);
        r["closed_form"] = closed;
        if (exact) {
            const bool ok = std::abs(*exact - closed) <= 1e-12 * std::max(1.0, std::abs(closed));
            r["exact_matches_closed_form"] = ok;
            out.assertions_pass = out.assertions_pass && ok;
        }
    }
    if (trials > 0) {
        const auto mc = mc_moment(spec, trials, seed, jobs);
        r["trials"] = trials;
        r["mc_estimate"] = mc.estimate;
        r["mc_stderr"] = mc.standard_error;
        if (exact) {
            const bool ok = std::abs(*exact - mc.estimate) <= 4.0 * mc.standard_error + 1e-12;
            r["exact_within_4_stderr"] = ok;
            out.assertions_pass = out.assertions_pass && ok;
        }
    }
    out.report = std::move(r);
    return out;
}

// ---------------------------------------------------------------- tamper-sim

std::vector<Seed> parse_seed_range(const std::string &text) {
    auto parse_one = [&](const std::string &s) {
        std::size_t used = 0;
        std::uint64_t v = 0;
        try {
            v = std::stoull(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw Error(ErrorCode::UsageError, "--seeds expects S or S0..S1");
        return v;
    };
    const auto dots = text.find("..");
    const std::uint64_t lo = parse_one(text.substr(0, dots));
    const std::uint64_t hi = dots == std::string::npos ? lo : parse_one(text.substr(dots + 2));
    if (hi < lo || hi - lo >= 100000) throw Error(ErrorCode::UsageError, "--seeds range is empty or too long");
    std::vector<Seed> seeds;
    for (std::uint64_t s = lo;; ++s) {
        seeds.push_back(Seed{s});
        if (s == hi) break;
    }
    return seeds;
}

UnitaryFamily resolve_family(const std::string &spec, int n, std::optional<double> phi, Seed family_seed) {
    constexpr std::string_view kPaulis = "paulis:";
    constexpr std::string_view kFile = "file:";
    if (spec.starts_with(kPaulis)) {
        const std::string count_text = spec.substr(kPaulis.size());
        std::size_t used = 0;
        std::size_t count = 0;
        try {
            count = std::stoul(count_text, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != count_text.size()) throw Error(ErrorCode::UsageError, "paulis:COUNT needs an integer");
        UnitaryFamily family(phi.value_or(0.0));
        for (const auto &label : random_pauli_labels(PrimeModulus(2), n, count, family_seed)) family.add(label);
        return family;
    }
    if (spec.starts_with(kFile)) return read_family_file(spec.substr(kFile.size()), phi);
    throw Error(ErrorCode::UsageError, "--family must be paulis:COUNT or file:PATH");
}

std::string optional_text(const std::optional<double> &v) { return v ? format_double(*v) : ""; }

Outcome tamper_sim_cmd(int n, int k, const UnitaryFamily &family, double epsilon, DetectionMode mode,
                       const std::vector<Seed> &seeds, double required_fraction, unsigned jobs) {
    const auto r = family_security_scan(n, k, family, epsilon, seeds, mode, jobs);
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "seed,member,label,message,p_same,p_diff,p_perp,score,fidelity_given_pass\n";
    for (const auto &row : r.rows) {
        const auto &label = family.members()[row.member].label;
        Json j{{"seed", row.seed},
               {"member", row.member},
               {"message", row.message},
               {"p_same", row.p_same},
               {"p_diff", row.p_diff},
               {"p_perp", row.p_perp}};
        if (mode == DetectionMode::kQuantum) {
            j["fidelity_given_pass"] = row.fidelity_given_pass ? Json(*row.fidelity_given_pass) : Json("undefined");
        }
        rows.push_back(std::move(j));
        csv << row.seed << ',' << row.member << ',' << label << ',' << row.message << ',' << format_double(row.p_same) << ','
            << format_double(row.p_diff) << ',' << format_double(row.p_perp) << ',' << format_double(row.score) << ','
            << optional_text(row.fidelity_given_pass) << '\n';
    }
    Json seed_rows = Json::array();
    for (const auto &s : r.seeds) {
        seed_rows.push_back({{"seed", s.seed}, {"min_score", s.min_score}, {"mean_p_same", s.mean_p_same}, {"pass", s.pass}});
    }
    Json labels = Json::array();
    for (const auto &m : family.members()) labels.push_back(m.label);
    const bool pass = r.pass_fraction >= required_fraction && r.conservation_violations == 0;
    Outcome out;
    out.report = Json{{"n", n},
                      {"k", k},
                      {"mode", to_string(mode)},
                      {"epsilon", epsilon},
                      {"family", {{"size", r.family_size},
                                  {"labels", labels},
                                  {"trace_bound_phi", r.trace_bound_phi ? Json(*r.trace_bound_phi) : Json(nullptr)},
                                  {"max_trace_ratio", r.max_trace_ratio}}},
                      {"seeds", seed_rows},
                      {"rows", rows},
                      {"pass_fraction", r.pass_fraction},
                      {"required_fraction", required_fraction},
                      {"min_score", r.min_score},
                      {"mean_p_same", r.mean_p_same},
                      {"mean_p_same_stderr", r.mean_p_same_stderr},
                      {"conservation_violations", r.conservation_violations},
                      {"max_conservation_error", r.max_conservation_error},
                      {"warnings", r.warnings},
                      {"pass", pass}};
    out.assertions_pass = pass;
    out.csv = csv.str();
    return out;
}

// ---------------------------------------------------------------- driver

int emit(const Globals &g, const std::string &name, Outcome outcome, const Json &run_manifest,
         std::chrono::steady_clock::time_point start) {
    outcome.report["manifest"] = run_manifest;
    outcome.report["assertions_pass"] = outcome.assertions_pass;
    const fs::path dir(g.out);
    const fs::path report = dir / (name + ".json");
    write_text_file(report, dump_json(outcome.report));
    if (outcome.csv) write_text_file(dir / (name + ".csv"), *outcome.csv);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_text_file(dir / (name + ".timing.json"), dump_json(Json{{"duration_seconds", seconds}}));
    std::cout << report.string() << '\n';
    if (!outcome.assertions_pass) {
        std::cerr << name << ": assertion failed, see " << report.string() << '\n';
        return kExitAssertion;
    }
    return kExitOk;
}

int dispatch(const std::vector<std::string> &args, int depth);

int run_replay(const std::string &manifest_path, const Globals &g, int depth) {
    if (depth > 0) throw Error(ErrorCode::UsageError, "a manifest cannot replay another replay");
    const Json doc = read_json_file(manifest_path);
    const Json &m = doc.contains("manifest") ? doc.at("manifest") : doc;
    std::vector<std::string> argv;
    try {
        argv = m.at("argv").get<std::vector<std::string>>();
    } catch (const Json::exception &e) {
        throw Error(ErrorCode::InputError, std::string("manifest: ") + e.what());
    }
    if (argv.empty() || argv.front() == "replay") throw Error(ErrorCode::InputError, "manifest has no replayable argv");
    argv.insert(argv.end(), {"--out", g.out, "--jobs", std::to_string(g.jobs)});
    return dispatch(argv, depth + 1);
}

int dispatch(const std::vector<std::string> &args, int depth) {
    const auto start = std::chrono::steady_clock::now();
    CLI::App app{"qtamper: quantum tamper-detection laboratory", "qtamper"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kBuildId);
    Globals g;
    app.add_option("--jobs", g.jobs, "worker threads (0 = all cores)");
    app.add_option("--out", g.out, "report directory");

    int wg_p = 0;
    std::uint64_t wg_n = 0;
    auto *wg = app.add_subcommand("weingarten-table", "exact Weingarten table");
    wg->fallthrough();
    wg->add_option("--p", wg_p, "permutation degree")->required()->check(CLI::Range(1, 6));
    wg->add_option("--N", wg_n, "unitary dimension")->required();

    int n_max = 0;
    auto *pv = app.add_subcommand("perm-verify", "exhaustive permutation lemma checks");
    pv->fallthrough();
    pv->add_option("--n-max", n_max, "largest degree")->required()->check(CLI::Range(1, 7));

    std::uint32_t qamd_q = 0;
    int qamd_d = 0;
    bool exhaustive = false;
    std::uint64_t qamd_trials = 0;
    std::optional<std::uint64_t> qamd_seed;
    auto *qs = app.add_subcommand("qamd-scan", "QAMD security scan");
    qs->fallthrough();
    qs->add_option("--q", qamd_q, "field size (prime)")->required();
    qs->add_option("--d", qamd_d, "message length")->required();
    auto *ex = qs->add_flag("--exhaustive", exhaustive, "every (message, tamper) pair");
    auto *tr = qs->add_option("--trials", qamd_trials, "random pairs");
    ex->excludes(tr);
    qs->add_option("--seed", qamd_seed, "seed for --trials");

    std::string pattern;
    int moment_t = 1;
    Eigen::Index moment_n = 0;
    std::string unitary;
    std::uint64_t moment_trials = 100000;
    std::optional<std::uint64_t> moment_seed;
    Eigen::Index moment_k = 2;
    Eigen::Index moment_target = 0;
    auto *mo = app.add_subcommand("moments", "Haar moments of the tampering statistics");
    mo->fallthrough();
    mo->add_option("--pattern", pattern, "js, ss or m")->required()->check(CLI::IsMember({"js", "ss", "m"}));
    mo->add_option("--t", moment_t, "moment order")->check(CLI::Range(1, 3));
    mo->add_option("--N", moment_n, "dimension")->required();
    mo->add_option("--unitary", unitary, "pauli:<label> | file:<path> | random:<seed>")->required();
    mo->add_option("--trials", moment_trials, "Monte Carlo trials (0 skips)");
    mo->add_option("--seed", moment_seed, "Monte Carlo seed");
    mo->add_option("--K", moment_k, "code size for pattern m");
    mo->add_option("--target", moment_target, "codeword index for pattern m");

    int ts_n = 0;
    int ts_k = 0;
    std::string family_spec;
    double epsilon = 0.0;
    std::string mode_text = "classical";
    std::string seeds_text;
    std::optional<std::uint64_t> family_seed;
    std::optional<double> phi;
    double required_fraction = 0.9;
    auto *ts = app.add_subcommand("tamper-sim", "Haar-random tamper detection over a unitary family");
    ts->fallthrough();
    ts->add_option("--n", ts_n, "qubits")->required();
    ts->add_option("--k", ts_k, "message bits")->required();
    ts->add_option("--family", family_spec, "paulis:COUNT | file:PATH")->required();
    ts->add_option("--epsilon", epsilon, "security target")->required();
    ts->add_option("--mode", mode_text, "classical, relaxed, weak or quantum")
        ->check(CLI::IsMember({"classical", "relaxed", "weak", "quantum"}));
    ts->add_option("--seeds", seeds_text, "scheme seeds S0..S1")->required();
    ts->add_option("--family-seed", family_seed, "seed for paulis:COUNT");
    ts->add_option("--phi", phi, "declared trace bound |Tr U| <= phi N");
    ts->add_option("--required-fraction", required_fraction, "pass fraction needed for exit 0")->check(CLI::Range(0.0, 1.0));

    std::string manifest_path;
    auto *rp = app.add_subcommand("replay", "re-run the manifest embedded in a report");
    rp->fallthrough();
    rp->add_option("--manifest", manifest_path, "report or manifest JSON")->required();

    std::vector<std::string> argv_storage{"qtamper"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &a : argv_storage) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (*rp) return run_replay(manifest_path, g, depth);

    if (*wg) {
        const std::vector<std::string> canon{"weingarten-table", "--p", to_text(wg_p), "--N", to_text(wg_n)};
        return emit(g, "weingarten-table", weingarten_table_cmd(wg_p, wg_n), manifest("weingarten-table", canon, {}), start);
    }
    if (*pv) {
        const std::vector<std::string> canon{"perm-verify", "--n-max", to_text(n_max)};
        return emit(g, "perm-verify", perm_verify_cmd(n_max), manifest("perm-verify", canon, {}), start);
    }
    if (*qs) {
        QamdScanMode mode;
        std::vector<std::string> canon{"qamd-scan", "--q", to_text(std::uint64_t{qamd_q}), "--d", to_text(qamd_d)};
        std::vector<std::uint64_t> seeds;
        if (exhaustive) {
            canon.emplace_back("--exhaustive");
        } else {
            if (qamd_trials == 0) throw Error(ErrorCode::UsageError, "qamd-scan needs --exhaustive or --trials");
            const std::uint64_t seed = qamd_seed.value_or(fallback_seed());
            mode = QamdScanMode{QamdScanMode::Kind::kRandom, qamd_trials, Seed{seed}};
            canon.insert(canon.end(), {"--trials", to_text(qamd_trials), "--seed", to_text(seed)});
            seeds.push_back(seed);
        }
        return emit(g, "qamd-scan", qamd_scan_cmd(qamd_q, qamd_d, mode, g.jobs), manifest("qamd-scan", canon, seeds), start);
    }
    if (*mo) {
        if (moment_n < 2 || moment_n > kMaxDimension) throw Error(ErrorCode::OutOfRange, "--N must lie in [2, 4096]");
        if (moment_trials != 0 && moment_trials < 1000) throw Error(ErrorCode::UsageError, "--trials must be 0 or >= 1000");
        const std::uint64_t seed = moment_seed.value_or(fallback_seed());
        MomentSpec spec;
        spec.pattern = parse_moment_pattern(pattern);
        spec.t = moment_t;
        spec.U = resolve_unitary(unitary, moment_n);
        std::vector<std::string> canon{"moments", "--pattern", pattern,       "--t",        to_text(moment_t),
                                       "--N",     to_text(static_cast<std::uint64_t>(moment_n)), "--unitary", unitary,
                                       "--trials", to_text(moment_trials), "--seed", to_text(seed)};
        if (spec.pattern == MomentPattern::kQuantumMessage) {
            if (moment_k < 1) throw Error(ErrorCode::OutOfRange, "--K must be positive");
            spec.K = moment_k;
            spec.target = moment_target;
            spec.message_amplitudes.assign(static_cast<std::size_t>(moment_k),
                                           Complex{1.0 / std::sqrt(static_cast<double>(moment_k)), 0.0});
            canon.insert(canon.end(), {"--K", to_text(static_cast<std::uint64_t>(moment_k)), "--target",
                                       to_text(static_cast<std::uint64_t>(moment_target))});
        }
        return emit(g, "moments", moments_cmd(spec, moment_trials, Seed{seed}, g.jobs), manifest("moments", canon, {seed}), start);
    }
    if (*ts) {
        const auto seeds = parse_seed_range(seeds_text);
        const auto mode = parse_detection_mode(mode_text);
        const std::uint64_t fseed = family_seed.value_or(fallback_seed());
        const auto family = resolve_family(family_spec, ts_n, phi, Seed{fseed});
        std::vector<std::string> canon{"tamper-sim", "--n",    to_text(ts_n),  "--k",      to_text(ts_k),
                                       "--family",   family_spec, "--epsilon", to_text(epsilon), "--mode", mode_text,
                                       "--seeds",    seeds_text, "--family-seed", to_text(fseed),
                                       "--required-fraction", to_text(required_fraction)};
        if (phi) canon.insert(canon.end(), {"--phi", to_text(*phi)});
        std::vector<std::uint64_t> seed_values{fseed};
        for (const auto &s : seeds) seed_values.push_back(s.value);
        return emit(g, "tamper-sim", tamper_sim_cmd(ts_n, ts_k, family, epsilon, mode, seeds, required_fraction, g.jobs),
                    manifest("tamper-sim", canon, seed_values), start);
    }
    return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string> &args) {
    try {
        return dispatch(args, 0);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::InternalConsistency ? kExitAssertion : kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace qtamper::cli
