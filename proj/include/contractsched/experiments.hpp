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

#ifndef CONTRACTSCHED_EXPERIMENTS_HPP_
#define CONTRACTSCHED_EXPERIMENTS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "contractsched/noise.hpp"

namespace contractsched {

enum class Setting { kTime, kQuery };
enum class Spacing { kLinear, kLog };

std::string to_string(Setting setting);
Setting setting_from_string(const std::string& name);
std::string to_string(Spacing spacing);
Spacing spacing_from_string(const std::string& name);

struct GridSpec {
    double t_min = 2.0;
    double t_max = 1048576.0;  // 2^20
    int points = 1000;
    Spacing spacing = Spacing::kLinear;

    // Evenly spaced interruptions; the first is t_min and the last exactly t_max.
    std::vector<double> values() const;
};

// Defaults reproduce the published setup: r = 4, 1000 x 1000, H = 0.1, n = 100.
struct ExperimentConfig {
    Setting setting = Setting::kTime;
    double r = 4.0;
    GridSpec grid;
    int trials = 1000;
    TimeNoiseModel noise = TimeNoiseModel::truncated_normal(0.1);  // time setting
    int queries = 100;                                             // query setting
    double query_error_bound = 0.1;  // eta ~ U[0, H] per trial, query setting
    std::vector<double> buffers{0.05, 0.1, 0.2, 0.3};
    std::uint64_t seed = 20210101;
    int jobs = 1;

    double error_bound() const { return setting == Setting::kTime ? noise.bound : query_error_bound; }
    // Throws ConfigError naming the offending field.
    void validate() const;
};

struct SummaryRow {
    double buffer = 0.0;
    std::vector<double> mean_ratio_by_t;
    double overall_mean = 0.0;
    double improvement_pct = 0.0;
    double strong_improvement_pct = 0.0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<double> grid;
    std::vector<double> baseline;  // ratio of (2^i) at each grid point
    std::vector<SummaryRow> rows;  // one per buffer, in config order
};

// Buffered schedule built from a sampled prediction, evaluated at the true interruption.
ExperimentResult run_time_experiment(const ExperimentConfig& config);
// Robust query family, answers corrupted with eta ~ U[0, H], decoded with each buffer.
ExperimentResult run_query_experiment(const ExperimentConfig& config);
ExperimentResult run_experiment(const ExperimentConfig& config);

// Acceleration ratio of the baseline schedule (2^i) at each interruption.
std::vector<double> baseline_series(std::span<const double> grid);

struct Improvement {
    double improvement_pct = 0.0;         // mean ratio strictly below the baseline
    double strong_improvement_pct = 0.0;  // completed contract at least 20% longer
};

// Percentages over the grid. Throws ConfigError when the series lengths differ.
Improvement compare_to_baseline(std::span<const double> mean_ratio, std::span<const double> baseline);

// Smallest error-free consistency found over families of 2^n geometric schedules that
// share a base in [c_r, b_r] and differ by offsets base^s, s on a grid of `resolution`
// points in [0, 1). Each family is scored by the worst interruption just before any member
// completes, choosing the best member per interruption. queries = 0 scores the single
// schedule. A corroborating search, not a proof.
double lower_bound_search(int queries, double r, int resolution,
                          std::uint64_t max_families = 2'000'000);

// Worst ratio over interruptions just before completions of contracts 1..depth of every
// member, each interruption served by the member with the largest completed contract.
double error_free_consistency(std::span<const ContractSchedule> members, std::size_t depth);

// ---------------------------------------------------------------------------------------
// Persistence. Floats are written with 17 significant digits so reads are bit-exact.

enum class OutputFormat {
    kSeriesCsv,   // setting,r,p,H,noise_kind,T,mean_ratio,baseline_ratio
    kSummaryCsv,  // setting,p,overall_mean,improvement_pct,strong_improvement_pct
    kPlotdata,    // T,baseline,<one column per buffer>
};

OutputFormat output_format_from_string(const std::string& name);

void write_results(const ExperimentResult& result, OutputFormat format, std::ostream& out);
// Creates parent directories; throws std::runtime_error mentioning the path on failure.
void emit_results(const ExperimentResult& result, OutputFormat format,
                  const std::filesystem::path& path);

struct SeriesRow {
    std::string setting;
    double r = 0.0;
    double buffer = 0.0;
    double error_bound = 0.0;
    std::string noise_kind;
    double t = 0.0;
    double mean_ratio = 0.0;
    double baseline_ratio = 0.0;
};

struct SummaryRecord {
    std::string setting;
    double buffer = 0.0;
    double overall_mean = 0.0;
    double improvement_pct = 0.0;
    double strong_improvement_pct = 0.0;
};

std::vector<SeriesRow> read_series_csv(const std::filesystem::path& path);
std::vector<SummaryRecord> read_summary_csv(const std::filesystem::path& path);

}  // namespace contractsched

#endif  // CONTRACTSCHED_EXPERIMENTS_HPP_
