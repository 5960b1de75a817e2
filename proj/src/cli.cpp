// Copyright 2026 The contractsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "contractsched/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <type_traits>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "contractsched/errors.hpp"
#include "contractsched/experiments.hpp"
#include "contractsched/noise.hpp"
#include "contractsched/query_prediction.hpp"
#include "contractsched/robustness.hpp"
#include "contractsched/schedule.hpp"
#include "contractsched/time_prediction.hpp"
#include "contractsched/verify.hpp"

namespace contractsched {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Bad flag combinations that CLI11 validators cannot express.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Default strings use shortest round-trip formatting so the echoed config is exact.
std::string repr(const std::string& v) { return v; }
std::string repr(double v) { return fmt::format("{}", v); }
template <class T>
    requires std::is_integral_v<T>
std::string repr(T v) {
    return fmt::format("{}", v);
}
std::string repr(const std::optional<double>& v) { return v ? repr(*v) : std::string{}; }
std::string repr(const std::vector<double>& v) {
    std::string s;
    for (double x : v) s += (s.empty() ? "" : ",") + repr(x);
    return s;
}

template <class T>
CLI::Option* add(CLI::App& sub, const std::string& name, T& var, const std::string& desc) {
    CLI::Option* opt = sub.add_option(name, var, desc);
    opt->default_str(repr(var));
    return opt;
}

struct ScheduleFlags {
    std::string kind = "exp";
    double r = 4.0;
    std::optional<double> tau;
    double p = 0.0;
    std::optional<double> h;
    int n = 4;
    std::optional<double> tmax;
    double base = 2.0;
    double scale = 1.0;
    std::size_t member = 0;
};

void add_schedule_flags(CLI::App& sub, ScheduleFlags& f) {
    add(sub, "--kind", f.kind, "exp, pareto, buffered, ideal or robust")
        ->check(CLI::IsMember({"exp", "pareto", "buffered", "ideal", "robust"}));
    add(sub, "--r", f.r, "robustness target")->check(CLI::Range(4.0, kInf));
    add(sub, "--tau", f.tau, "predicted interruption")->check(CLI::Range(1.0, kInf));
    add(sub, "--p", f.p, "buffer")->check(CLI::Range(0.0, 1.0));
    add(sub, "--H", f.h, "error bound; selects the bound-aware buffered schedule")
        ->check(CLI::Range(0.0, 1.0));
    add(sub, "--n", f.n, "number of queries")->check(CLI::Range(1, 1 << 20));
    add(sub, "--tmax", f.tmax, "horizon of the printed prefix")->check(CLI::Range(1.0, kInf));
    add(sub, "--base", f.base, "base of the exponential schedule")
        ->check(CLI::Range(1.0, kInf));
    add(sub, "--scale", f.scale, "first length of the exponential schedule, divided by base")
        ->check(CLI::PositiveNumber);
    add(sub, "--member", f.member, "family member index (ideal, robust)");
}

double require_tau(const ScheduleFlags& f) {
    if (!f.tau) throw UsageError(fmt::format("--tau is required for --kind {}", f.kind));
    return *f.tau;
}

ContractSchedule build_schedule(const ScheduleFlags& f) {
    if (f.kind == "exp") {
        if (!(f.base > 1.0)) throw UsageError("--base must exceed 1");
        return ContractSchedule::geometric(f.base, f.scale);
    }
    if (f.kind == "pareto") return pareto_schedule(f.r, require_tau(f));
    if (f.kind == "buffered") {
        if (f.h) return bound_aware_schedule(f.r, TimePrediction{require_tau(f), *f.h});
        if (f.p >= 1.0) throw UsageError("--p must be below 1 for --kind buffered");
        return buffered_schedule(f.r, require_tau(f), f.p);
    }
    QueryFamily family = f.kind == "ideal" ? ideal_family(f.r, f.n) : [&] {
        if (f.p > 0.5) throw UsageError("--p must be at most 0.5 for --kind robust");
        return robust_family(f.r, f.n, f.p);
    }();
    if (f.member >= family.count())
        throw UsageError(fmt::format("--member {} outside a family of {}", f.member, family.count()));
    return family.member(f.member);
}

void write_text(const std::string& text, std::ostream& out, const std::string& path) {
    out << text;
    if (path.empty()) return;
    const std::filesystem::path target(path);
    std::error_code ec;
    if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path(), ec);
    std::ofstream file(target);
    if (!file) throw std::runtime_error(fmt::format("cannot write {}", path));
    file << text;
    if (!file) throw std::runtime_error(fmt::format("failed writing {}", path));
}

// Stdout gets name=value lines, --out gets the same pairs as CSV.
void emit_pairs(const std::vector<std::pair<std::string, std::string>>& pairs, std::ostream& out,
                const std::string& path) {
    std::string text;
    std::string csv = "quantity,value\n";
    for (const auto& [k, v] : pairs) {
        text += fmt::format("{}={}\n", k, v);
        csv += fmt::format("{},{}\n", k, v);
    }
    out << text;
    if (!path.empty()) {
        std::ostringstream sink;
        write_text(csv, sink, path);
    }
}

std::string num(double v) { return fmt::format("{}", v); }

int run_schedule(const ScheduleFlags& f, const std::string& path, std::ostream& out) {
    const ContractSchedule s = build_schedule(f);
    const double horizon = f.tmax ? *f.tmax : (f.tau ? *f.tau : 1000.0);
    std::string text = fmt::format("# {}\nindex,length,completion\n", s.label());
    for (const PrefixEntry& e : schedule_prefix(s, horizon)) {
        if (e.completion > horizon * (1.0 + kCompletionTolerance)) break;
        text += fmt::format("{},{},{}\n", e.index, num(e.length), num(e.completion));
    }
    write_text(text, out, path);
    return kExitOk;
}

int run_eval(const ScheduleFlags& f, double t, const std::string& path, std::ostream& out) {
    const EvalRecord rec = acceleration_ratio(build_schedule(f), t);
    emit_pairs({{"schedule", rec.schedule_id},
                {"T", num(rec.interruption)},
                {"largest", num(rec.largest)},
                {"ratio", num(rec.ratio)}},
               out, path);
    return kExitOk;
}

struct BoundsFlags {
    double r = 4.0;
    double p = 0.1;
    double h = 0.1;
    int n = 4;
};

int run_bounds(const BoundsFlags& f, const std::string& path, std::ostream& out) {
    const RobustnessParams params = cr_br(f.r);
    const ErrorBoundThresholds th = h_thresholds(f.r);
    std::vector<std::pair<std::string, std::string>> pairs{
        {"c_r", num(params.consistency)},
        {"b_r", num(params.base)},
        {"h_lower", num(th.lower)},
        {"h_dom", num(th.dominance)},
    };
    if (f.p < 1.0) {
        pairs.emplace_back("buffered_bound_late", num(buffered_ratio_bound(
                                                      f.r, f.p, SignedError{f.h, ErrorSign::kPositive})));
        pairs.emplace_back("buffered_bound_early", num(buffered_ratio_bound(
                                                       f.r, f.p, SignedError{f.h, ErrorSign::kNegative})));
    }
    pairs.emplace_back("query_consistency_lower_bound", num(consistency_lower_bound(f.n)));
    if (f.n < 63) pairs.emplace_back("ideal_consistency", num(ideal_consistency(f.r, f.n)));
    if (f.p <= 0.5) {
        const RobustBase rb = robust_base(f.r, f.n, f.p);
        pairs.emplace_back("robust_base", num(rb.base));
        pairs.emplace_back("robust_bound", num(rb.bound));
    }
    emit_pairs(pairs, out, path);
    return kExitOk;
}

struct ExperimentFlags {
    std::string setting = "time";
    std::uint64_t seed = ExperimentConfig{}.seed;
    int trials = 1000;
    int points = 1000;
    double tmin = 2.0;
    double tmax = 1048576.0;
    std::string spacing = "linear";
    std::string noise = "normal";
    double h = 0.1;
    std::optional<double> sigma;
    int n = 100;
    double r = 4.0;
    std::vector<double> buffers{0.05, 0.1, 0.2, 0.3};
    int jobs = 1;
    std::string format = "series";
    std::string summary;
};

ExperimentConfig to_config(const ExperimentFlags& f) {
    ExperimentConfig cfg;
    cfg.setting = setting_from_string(f.setting);
    cfg.r = f.r;
    cfg.grid = GridSpec{f.tmin, f.tmax, f.points, spacing_from_string(f.spacing)};
    cfg.trials = f.trials;
    const NoiseKind kind = noise_kind_from_string(f.noise);
    if (kind == NoiseKind::kUniform) {
        if (f.sigma) throw UsageError("--sigma applies to normal noise only");
        cfg.noise = TimeNoiseModel::uniform(f.h);
    } else {
        cfg.noise = f.sigma ? TimeNoiseModel::truncated_normal(f.h, *f.sigma)
                            : TimeNoiseModel::truncated_normal(f.h);
    }
    cfg.queries = f.n;
    cfg.query_error_bound = f.h;
    cfg.buffers = f.buffers;
    cfg.seed = f.seed;
    cfg.jobs = f.jobs;
    cfg.validate();
    return cfg;
}

int run_experiment_cmd(const ExperimentFlags& f, const std::string& path, std::ostream& out) {
    const ExperimentResult result = run_experiment(to_config(f));
    write_results(result, OutputFormat::kSummaryCsv, out);
    if (!path.empty()) emit_results(result, output_format_from_string(f.format), path);
    if (!f.summary.empty()) emit_results(result, OutputFormat::kSummaryCsv, f.summary);
    return kExitOk;
}

int run_verify(const VerifyOptions& options, const std::string& path, std::ostream& out) {
    bool ok = true;
    std::string csv = "module,suite,passed,detail\n";
    for (const SuiteResult& res : run_invariant_suites(options)) {
        ok = ok && res.passed;
        out << fmt::format("{} {}: {}{}\n", res.passed ? "PASS" : "FAIL", res.module, res.name,
                           res.detail.empty() ? "" : " -- " + res.detail);
        csv += fmt::format("{},{},{},\"{}\"\n", res.module, res.name, res.passed ? 1 : 0, res.detail);
    }
    if (!path.empty()) {
        std::ostringstream sink;
        write_text(csv, sink, path);
    }
    return ok ? kExitOk : kExitRuntime;
}

// The selected subcommand's options as TOML; fed back through --config it reproduces the run.
// Unset optional flags are omitted.
std::string resolved_config(const CLI::App& sub) {
    std::string text = fmt::format("# resolved configuration for `{}`\n[{}]\n", sub.get_name(),
                                   sub.get_name());
    for (const CLI::Option* opt : sub.get_options()) {
        if (opt->get_lnames().empty() || opt->get_lnames().front() == "help") continue;
        std::vector<std::string> items;
        if (opt->count() > 0) {
            for (const std::string& r : opt->results()) {
                std::stringstream ss(r);
                for (std::string part; std::getline(ss, part, ',');) items.push_back(part);
            }
        } else if (!opt->get_default_str().empty()) {
            std::stringstream ss(opt->get_default_str());
            for (std::string part; std::getline(ss, part, ',');) items.push_back(part);
        }
        if (items.empty()) continue;
        auto value = [](const std::string& v) {
            char* end = nullptr;
            std::strtod(v.c_str(), &end);
            const bool numeric = !v.empty() && end == v.c_str() + v.size();
            return numeric ? v : fmt::format("\"{}\"", v);
        };
        std::string rendered;
        if (opt->get_items_expected_max() > 1) {
            for (const std::string& v : items) rendered += (rendered.empty() ? "" : ",") + value(v);
            rendered = "[" + rendered + "]";
        } else {
            rendered = value(items.back());
        }
        text += fmt::format("{}={}\n", opt->get_lnames().front(), rendered);
    }
    return text;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Contract scheduling with untrusted predictions", "contractsched"};
    app.set_config("--config", "", "TOML file whose keys mirror the flags (flags win)");
    app.allow_config_extras(false);
    app.fallthrough();  // lets --config follow the subcommand
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all", "Expand all help");

    ScheduleFlags sched_flags;
    std::string sched_out;
    CLI::App* schedule = app.add_subcommand("schedule", "Print the prefix of a schedule");
    add_schedule_flags(*schedule, sched_flags);
    add(*schedule, "--out", sched_out, "also write the table to this file");

    ScheduleFlags eval_flags;
    double eval_t = 1.0;
    std::string eval_out;
    CLI::App* eval = app.add_subcommand("eval", "Acceleration ratio of a schedule at interruption T");
    add_schedule_flags(*eval, eval_flags);
    add(*eval, "--T", eval_t, "interruption time")->required()->check(CLI::Range(1.0, kInf));
    add(*eval, "--out", eval_out, "also write CSV to this file");

    BoundsFlags bounds_flags;
    std::string bounds_out;
    CLI::App* bounds = app.add_subcommand("bounds", "Print the analytic bounds for the given parameters");
    add(*bounds, "--r", bounds_flags.r, "robustness target")
        ->check(CLI::Range(4.0, kInf));
    add(*bounds, "--p", bounds_flags.p, "buffer")->check(CLI::Range(0.0, 1.0));
    add(*bounds, "--H", bounds_flags.h, "error bound")->check(CLI::Range(0.0, 1.0));
    add(*bounds, "--n", bounds_flags.n, "number of queries")
        ->check(CLI::Range(1, 1 << 20));
    add(*bounds, "--out", bounds_out, "also write CSV to this file");

    ExperimentFlags exp_flags;
    std::string exp_out;
    CLI::App* experiment = app.add_subcommand("experiment", "Run the noisy-prediction experiment");
    add(*experiment, "--setting", exp_flags.setting, "time or query")
        ->check(CLI::IsMember({"time", "query"}));
    add(*experiment, "--seed", exp_flags.seed, "master seed")
        ->envname("CONTRACTSCHED_SEED");
    add(*experiment, "--trials", exp_flags.trials, "trials per grid point")
        ->check(CLI::Range(1, 1 << 30));
    add(*experiment, "--points", exp_flags.points, "grid points")
        ->check(CLI::Range(1, 1 << 30));
    add(*experiment, "--tmin", exp_flags.tmin, "first interruption")
        ->check(CLI::Range(1.0, kInf));
    add(*experiment, "--tmax", exp_flags.tmax, "last interruption")
        ->check(CLI::Range(1.0, kInf));
    add(*experiment, "--spacing", exp_flags.spacing, "linear or log")
        ->check(CLI::IsMember({"linear", "log"}));
    add(*experiment, "--noise", exp_flags.noise, "normal or uniform (time setting)")
        ->check(CLI::IsMember({"normal", "truncated-normal", "uniform"}));
    add(*experiment, "--H", exp_flags.h, "error bound")->check(CLI::Range(0.0, 1.0));
    add(*experiment, "--sigma", exp_flags.sigma, "std deviation of the normal noise before truncation")
        ->check(CLI::PositiveNumber);
    add(*experiment, "--n", exp_flags.n, "queries (query setting)")
        ->check(CLI::Range(1, 1 << 20));
    add(*experiment, "--r", exp_flags.r, "robustness target")
        ->check(CLI::Range(4.0, kInf));
    add(*experiment, "--p", exp_flags.buffers, "buffers to compare")
        ->check(CLI::Range(0.0, 1.0))
        ->delimiter(',');
    add(*experiment, "--jobs", exp_flags.jobs, "worker threads")
        ->check(CLI::Range(1, 1024));
    add(*experiment, "--format", exp_flags.format, "format for --out: series, summary or plotdata")
        ->check(CLI::IsMember({"series", "csv", "summary", "plotdata"}));
    add(*experiment, "--out", exp_out, "write results to this file");
    add(*experiment, "--summary", exp_flags.summary, "write the summary CSV to this file");

    VerifyOptions verify_opts;
    std::string verify_out;
    CLI::App* verify = app.add_subcommand("verify", "Run the invariant suites");
    add(*verify, "--seed", verify_opts.seed, "seed for randomized suites");
    add(*verify, "--jobs", verify_opts.jobs, "worker threads")
        ->check(CLI::Range(1, 1024));
    add(*verify, "--out", verify_out, "also write CSV to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    CLI::App* selected = app.get_subcommands().front();
    err << resolved_config(*selected);

    try {
        if (selected == schedule) return run_schedule(sched_flags, sched_out, out);
        if (selected == eval) return run_eval(eval_flags, eval_t, eval_out, out);
        if (selected == bounds) return run_bounds(bounds_flags, bounds_out, out);
        if (selected == experiment) return run_experiment_cmd(exp_flags, exp_out, out);
        return run_verify(verify_opts, verify_out, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

int dispatch(int argc, const char* const* argv) { return dispatch(argc, argv, std::cout, std::cerr); }

}  // namespace contractsched
