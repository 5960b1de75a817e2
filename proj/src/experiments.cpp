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

#include "contractsched/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <fmt/core.h>

#include "contractsched/errors.hpp"
#include "contractsched/robustness.hpp"

namespace contractsched {

namespace {

// Grid points are independent; workers pull indices and write disjoint slots.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1 || count < 2) {
        for (std::size_t k = 0; k < count; ++k) body(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < count && !failed; k = next++) {
                try {
                    body(k);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

std::string fmt17(double x) { return fmt::format("{:.17g}", x); }

void finish_rows(ExperimentResult& result) {
    for (SummaryRow& row : result.rows) {
        const auto& m = row.mean_ratio_by_t;
        row.overall_mean = std::accumulate(m.begin(), m.end(), 0.0) / static_cast<double>(m.size());
        const Improvement imp = compare_to_baseline(m, result.baseline);
        row.improvement_pct = imp.improvement_pct;
        row.strong_improvement_pct = imp.strong_improvement_pct;
    }
}

ExperimentResult prepare(const ExperimentConfig& config) {
    config.validate();
    ExperimentResult result;
    result.config = config;
    result.grid = config.grid.values();
    result.baseline = baseline_series(result.grid);
    for (double p : config.buffers) {
        SummaryRow row;
        row.buffer = p;
        row.mean_ratio_by_t.assign(result.grid.size(), 0.0);
        result.rows.push_back(std::move(row));
    }
    return result;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_double(const std::string& text, const std::filesystem::path& path, std::size_t line) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty())
        throw std::runtime_error(
            fmt::format("{}:{}: cannot parse '{}' as a number", path.string(), line, text));
    return value;
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path,
                                               const std::string& header, std::size_t columns) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(fmt::format("cannot open {} for reading", path.string()));
    std::string line;
    if (!std::getline(in, line) || line != header)
        throw std::runtime_error(fmt::format("{}: unexpected header '{}'", path.string(), line));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t n = 2; std::getline(in, line); ++n) {
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (cells.size() != columns)
            throw std::runtime_error(fmt::format("{}:{}: expected {} columns, found {}",
                                                 path.string(), n, columns, cells.size()));
        rows.push_back(std::move(cells));
    }
    return rows;
}

constexpr const char* kSeriesHeader = "setting,r,p,H,noise_kind,T,mean_ratio,baseline_ratio";
constexpr const char* kSummaryHeader =
    "setting,p,overall_mean,improvement_pct,strong_improvement_pct";

}  // namespace

std::string to_string(Setting setting) { return setting == Setting::kTime ? "time" : "query"; }

Setting setting_from_string(const std::string& name) {
    if (name == "time") return Setting::kTime;
    if (name == "query") return Setting::kQuery;
    throw ConfigError(fmt::format("unknown setting '{}' (expected time or query)", name));
}

std::string to_string(Spacing spacing) { return spacing == Spacing::kLinear ? "linear" : "log"; }

Spacing spacing_from_string(const std::string& name) {
    if (name == "linear") return Spacing::kLinear;
    if (name == "log") return Spacing::kLog;
    throw ConfigError(fmt::format("unknown spacing '{}' (expected linear or log)", name));
}

std::vector<double> GridSpec::values() const {
    if (points < 2) throw ConfigError("grid needs at least 2 points");
    if (!(t_min >= 1.0 && t_max > t_min))
        throw ConfigError(fmt::format("grid [{}, {}] must satisfy 1 <= t_min < t_max", t_min, t_max));
    std::vector<double> out(static_cast<std::size_t>(points));
    const double steps = points - 1;
    for (int k = 0; k < points; ++k) {
        const double u = k / steps;
        out[k] = spacing == Spacing::kLinear
                     ? t_min + (t_max - t_min) * u
                     : std::exp(std::log(t_min) + (std::log(t_max) - std::log(t_min)) * u);
    }
    out.front() = t_min;
    out.back() = t_max;
    return out;
}

void ExperimentConfig::validate() const {
    if (!(r >= 4.0)) throw ConfigError(fmt::format("r={} must be at least 4", r));
    if (trials < 1) throw ConfigError(fmt::format("trials={} must be at least 1", trials));
    if (jobs < 1) throw ConfigError(fmt::format("jobs={} must be at least 1", jobs));
    if (buffers.empty()) throw ConfigError("at least one buffer p is required");
    (void)grid.values();
    if (setting == Setting::kTime) {
        noise.validate();
        for (double p : buffers) {
            if (!(p >= 0.0 && p < 1.0))
                throw ConfigError(fmt::format("buffer p={} must lie in [0, 1)", p));
            // Smallest predicted time is t_min / (1 + H); its buffered target must stay >= 1.
            if (grid.t_min * (1.0 - p) / (1.0 + noise.bound) < 1.0)
                throw ConfigError(fmt::format("t_min={} too small for p={} and H={}", grid.t_min,
                                              p, noise.bound));
        }
        if (grid.t_min * (1.0 - noise.bound) < 1.0)
            throw ConfigError(fmt::format("t_min={} must be at least 1/(1-H)", grid.t_min));
    } else {
        if (queries < 1) throw ConfigError(fmt::format("queries={} must be at least 1", queries));
        if (!(query_error_bound >= 0.0 && query_error_bound <= 1.0))
            throw ConfigError(fmt::format("query H={} must lie in [0, 1]", query_error_bound));
        for (double p : buffers)
            if (!(p >= 0.0 && p <= 0.5))
                throw ConfigError(fmt::format("query buffer p={} must lie in [0, 1/2]", p));
    }
}

std::vector<double> baseline_series(std::span<const double> grid) {
    const ContractSchedule doubling = ContractSchedule::geometric(2.0);
    std::vector<double> out;
    out.reserve(grid.size());
    for (double t : grid) out.push_back(t / largest_completed(doubling, t));
    return out;
}

Improvement compare_to_baseline(std::span<const double> mean_ratio,
                                std::span<const double> baseline) {
    if (mean_ratio.size() != baseline.size() || baseline.empty())
        throw ConfigError(fmt::format("series of {} points cannot be compared to a baseline of {}",
                                      mean_ratio.size(), baseline.size()));
    std::size_t better = 0;
    std::size_t strong = 0;
    for (std::size_t k = 0; k < baseline.size(); ++k) {
        if (mean_ratio[k] < baseline[k]) ++better;
        // Same interruption, so ratio_base >= 1.2 ratio means a contract >= 20% longer.
        if (baseline[k] >= 1.2 * mean_ratio[k]) ++strong;
    }
    const double n = static_cast<double>(baseline.size());
    return {100.0 * better / n, 100.0 * strong / n};
}

ExperimentResult run_time_experiment(const ExperimentConfig& config) {
    if (config.setting != Setting::kTime) throw ConfigError("run_time_experiment needs setting=time");
    ExperimentResult result = prepare(config);
    parallel_for(result.grid.size(), config.jobs, [&](std::size_t k) {
        const double t = result.grid[k];
        std::vector<double> sums(config.buffers.size(), 0.0);
        for (int trial = 0; trial < config.trials; ++trial) {
            RngStream rng(config.seed, key_for_value(t), static_cast<std::uint64_t>(trial));
            const TimePrediction prediction = sample_tau(t, config.noise, rng);
            for (std::size_t b = 0; b < config.buffers.size(); ++b) {
                const ContractSchedule s = buffered_schedule(config.r, prediction.tau, config.buffers[b]);
                sums[b] += t / largest_completed(s, t);
            }
        }
        for (std::size_t b = 0; b < sums.size(); ++b)
            result.rows[b].mean_ratio_by_t[k] = sums[b] / config.trials;
    });
    finish_rows(result);
    return result;
}

ExperimentResult run_query_experiment(const ExperimentConfig& config) {
    if (config.setting != Setting::kQuery)
        throw ConfigError("run_query_experiment needs setting=query");
    ExperimentResult result = prepare(config);
    std::vector<QueryFamily> families;
    for (double p : config.buffers) families.push_back(robust_family(config.r, config.queries, p));

    parallel_for(result.grid.size(), config.jobs, [&](std::size_t k) {
        const double t = result.grid[k];
        for (std::size_t b = 0; b < families.size(); ++b) {
            const QueryFamily& family = families[b];
            const AnswerBits truth = encode_answers(best_index(family, t), config.queries);
            double sum = 0.0;
            for (int trial = 0; trial < config.trials; ++trial) {
                // Same stream for every buffer: each p sees identical corruption.
                RngStream rng(config.seed, key_for_value(t), static_cast<std::uint64_t>(trial));
                const double eta =
                    config.query_error_bound > 0.0 ? rng.uniform(0.0, config.query_error_bound) : 0.0;
                const AnswerBits noisy = flip_bits(truth, eta, rng);
                const std::size_t chosen = decode_robust(noisy, config.queries, family.buffer());
                sum += t / largest_completed(family.member(chosen), t);
            }
            result.rows[b].mean_ratio_by_t[k] = sum / config.trials;
        }
    });
    finish_rows(result);
    return result;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    return config.setting == Setting::kTime ? run_time_experiment(config)
                                            : run_query_experiment(config);
}

double error_free_consistency(std::span<const ContractSchedule> members, std::size_t depth) {
    if (members.empty()) throw DomainError("need at least one schedule");
    double worst = 0.0;
    for (const ContractSchedule& owner : members) {
        for (std::size_t j = 1; j <= depth; ++j) {
            const double t = just_before(owner.completion(j));
            if (t < 1.0) continue;
            double largest = 1.0;
            for (const ContractSchedule& m : members) largest = std::max(largest, largest_completed(m, t));
            worst = std::max(worst, t / largest);
        }
    }
    return worst;
}

double lower_bound_search(int queries, double r, int resolution, std::uint64_t max_families) {
    if (queries < 0 || queries > 4)
        throw ResourceError(fmt::format("lower-bound search supports 0 <= n <= 4 (got {})", queries));
    if (resolution < 1) throw DomainError("resolution must be at least 1");
    const RobustnessParams params = cr_br(r);
    const std::size_t members = std::size_t{1} << queries;

    std::vector<double> bases{params.base};
    if (params.base > params.consistency) {
        const int base_points = std::min(resolution, 16);
        bases.clear();
        for (int k = 0; k < base_points; ++k)
            bases.push_back(params.consistency +
                            (params.base - params.consistency) * k / std::max(1, base_points - 1));
    }
    // Offsets are nondecreasing with the first fixed at 0: combinations with repetition.
    double combos = 1.0;
    for (std::size_t k = 1; k < members; ++k)
        combos = combos * static_cast<double>(resolution + k - 1) / static_cast<double>(k);
    if (combos * static_cast<double>(bases.size()) > static_cast<double>(max_families))
        throw ResourceError(fmt::format("search over {:.0f} families exceeds the cap of {}",
                                        combos * bases.size(), max_families));

    constexpr std::size_t kDepth = 40;
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> offsets(members, 0);
    std::vector<ContractSchedule> family;
    for (double base : bases) {
        // Members with base <= 1 cannot be r-robust; c_r > 1 so base is always valid here.
        std::fill(offsets.begin(), offsets.end(), 0);
        for (;;) {
            family.clear();
            for (int s : offsets)
                family.push_back(ContractSchedule::geometric(base, std::pow(base, double(s) / resolution)));
            best = std::min(best, error_free_consistency(family, kDepth));

            // Next nondecreasing offset vector over positions 1..members-1.
            std::size_t pos = members;
            while (pos > 1 && offsets[pos - 1] == resolution - 1) --pos;
            if (pos <= 1) break;
            const int v = offsets[pos - 1] + 1;
            for (std::size_t k = pos - 1; k < members; ++k) offsets[k] = v;
        }
    }
    return best;
}

OutputFormat output_format_from_string(const std::string& name) {
    if (name == "csv" || name == "series") return OutputFormat::kSeriesCsv;
    if (name == "summary") return OutputFormat::kSummaryCsv;
    if (name == "plotdata") return OutputFormat::kPlotdata;
    throw ConfigError(fmt::format("unknown output format '{}'", name));
}

void write_results(const ExperimentResult& result, OutputFormat format, std::ostream& out) {
    const ExperimentConfig& cfg = result.config;
    const std::string setting = to_string(cfg.setting);
    const std::string noise = cfg.setting == Setting::kTime ? to_string(cfg.noise.kind) : "bitflip";
    switch (format) {
        case OutputFormat::kSeriesCsv:
            out << kSeriesHeader << '\n';
            for (const SummaryRow& row : result.rows)
                for (std::size_t k = 0; k < result.grid.size(); ++k)
                    out << setting << ',' << fmt17(cfg.r) << ',' << fmt17(row.buffer) << ','
                        << fmt17(cfg.error_bound()) << ',' << noise << ',' << fmt17(result.grid[k])
                        << ',' << fmt17(row.mean_ratio_by_t[k]) << ','
                        << fmt17(result.baseline[k]) << '\n';
            break;
        case OutputFormat::kSummaryCsv:
            out << kSummaryHeader << '\n';
            for (const SummaryRow& row : result.rows)
                out << setting << ',' << fmt17(row.buffer) << ',' << fmt17(row.overall_mean) << ','
                    << fmt17(row.improvement_pct) << ',' << fmt17(row.strong_improvement_pct)
                    << '\n';
            break;
        case OutputFormat::kPlotdata:
            out << "T,baseline";
            for (const SummaryRow& row : result.rows) out << ",p=" << fmt17(row.buffer);
            out << '\n';
            for (std::size_t k = 0; k < result.grid.size(); ++k) {
                out << fmt17(result.grid[k]) << ',' << fmt17(result.baseline[k]);
                for (const SummaryRow& row : result.rows) out << ',' << fmt17(row.mean_ratio_by_t[k]);
                out << '\n';
            }
            break;
    }
}

void emit_results(const ExperimentResult& result, OutputFormat format,
                  const std::filesystem::path& path) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec)
        throw std::runtime_error(fmt::format("cannot create directory for {}: {}", path.string(),
                                             ec.message()));
    std::ofstream out(path);
    if (!out) throw std::runtime_error(fmt::format("cannot open {} for writing", path.string()));
    write_results(result, format, out);
    out.flush();
    if (!out) throw std::runtime_error(fmt::format("write to {} failed", path.string()));
}

std::vector<SeriesRow> read_series_csv(const std::filesystem::path& path) {
    std::vector<SeriesRow> rows;
    std::size_t line = 1;
    for (const auto& c : read_csv(path, kSeriesHeader, 8)) {
        ++line;
        rows.push_back({c[0], parse_double(c[1], path, line), parse_double(c[2], path, line),
                        parse_double(c[3], path, line), c[4], parse_double(c[5], path, line),
                        parse_double(c[6], path, line), parse_double(c[7], path, line)});
    }
    return rows;
}

std::vector<SummaryRecord> read_summary_csv(const std::filesystem::path& path) {
    std::vector<SummaryRecord> rows;
    std::size_t line = 1;
    for (const auto& c : read_csv(path, kSummaryHeader, 5)) {
        ++line;
        rows.push_back({c[0], parse_double(c[1], path, line), parse_double(c[2], path, line),
                        parse_double(c[3], path, line), parse_double(c[4], path, line)});
    }
    return rows;
}

}  // namespace contractsched
