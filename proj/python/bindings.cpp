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

#include <optional>
#include <tuple>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "contractsched/errors.hpp"
#include "contractsched/experiments.hpp"
#include "contractsched/noise.hpp"
#include "contractsched/query_prediction.hpp"
#include "contractsched/robustness.hpp"
#include "contractsched/schedule.hpp"
#include "contractsched/time_prediction.hpp"
#include "contractsched/verify.hpp"

namespace py = pybind11;
using namespace contractsched;

namespace {

py::dict result_to_dict(const ExperimentResult& result) {
    py::dict out;
    out["setting"] = to_string(result.config.setting);
    out["grid"] = result.grid;
    out["baseline"] = result.baseline;
    py::list rows;
    for (const SummaryRow& row : result.rows) {
        py::dict d;
        d["p"] = row.buffer;
        d["mean_ratio"] = row.mean_ratio_by_t;
        d["overall_mean"] = row.overall_mean;
        d["improvement_pct"] = row.improvement_pct;
        d["strong_improvement_pct"] = row.strong_improvement_pct;
        rows.append(d);
    }
    out["rows"] = rows;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "contractsched native core";
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<ContractSchedule>(m, "ContractSchedule")
        .def_static("geometric", &ContractSchedule::geometric, py::arg("base"), py::arg("scale") = 1.0)
        .def_static("explicit", &ContractSchedule::explicit_lengths, py::arg("lengths"))
        .def_property_readonly("is_geometric", &ContractSchedule::is_geometric)
        .def_property_readonly("base", &ContractSchedule::base)
        .def_property_readonly("scale", &ContractSchedule::scale)
        .def("length", &ContractSchedule::length, py::arg("i"))
        .def("completion", &ContractSchedule::completion, py::arg("i"))
        .def("completed_count", &ContractSchedule::completed_count, py::arg("t"))
        .def("scaled", &ContractSchedule::scaled, py::arg("factor"))
        .def("label", &ContractSchedule::label)
        .def("__repr__", &ContractSchedule::label);

    py::class_<EvalRecord>(m, "EvalRecord")
        .def_readonly("interruption", &EvalRecord::interruption)
        .def_readonly("largest", &EvalRecord::largest)
        .def_readonly("ratio", &EvalRecord::ratio)
        .def_readonly("schedule_id", &EvalRecord::schedule_id);

    m.def("largest_completed", &largest_completed, py::arg("schedule"), py::arg("t"));
    m.def("acceleration_ratio", &acceleration_ratio, py::arg("schedule"), py::arg("t"));
    m.def("empirical_robustness", &empirical_robustness, py::arg("schedule"), py::arg("max_index"));
    m.def(
        "schedule_prefix",
        [](const ContractSchedule& s, double horizon) {
            std::vector<std::tuple<std::size_t, double, double>> out;
            for (const PrefixEntry& e : schedule_prefix(s, horizon))
                out.emplace_back(e.index, e.length, e.completion);
            return out;
        },
        py::arg("schedule"), py::arg("horizon"), "List of (index, length, completion).");

    m.def(
        "cr_br",
        [](double r) {
            const RobustnessParams p = cr_br(r);
            return std::make_pair(p.consistency, p.base);
        },
        py::arg("r"), "(c_r, b_r) for robustness target r >= 4.");
    m.def("exponential_robustness", &exponential_robustness, py::arg("base"));

    m.def("pareto_schedule", &pareto_schedule, py::arg("r"), py::arg("tau"));
    m.def("buffered_schedule", &buffered_schedule, py::arg("r"), py::arg("tau"), py::arg("p"));
    m.def(
        "bound_aware_schedule",
        [](double r, double tau, std::optional<double> h) {
            return bound_aware_schedule(r, TimePrediction{tau, h});
        },
        py::arg("r"), py::arg("tau"), py::arg("H") = py::none());
    m.def(
        "buffered_ratio_bound",
        [](double r, double p, double eta, bool late) {
            return buffered_ratio_bound(
                r, p, SignedError{eta, eta == 0.0 ? ErrorSign::kZero
                                                  : (late ? ErrorSign::kPositive : ErrorSign::kNegative)});
        },
        py::arg("r"), py::arg("p"), py::arg("eta"), py::arg("late") = true,
        "Bound for an interruption at tau(1+eta) when late, else tau(1-eta).");
    m.def(
        "h_thresholds",
        [](double r) {
            const ErrorBoundThresholds h = h_thresholds(r);
            return std::make_pair(h.lower, h.dominance);
        },
        py::arg("r"));

    py::class_<QueryFamily>(m, "QueryFamily")
        .def_property_readonly("queries", &QueryFamily::queries)
        .def_property_readonly("base", &QueryFamily::base)
        .def_property_readonly("count", &QueryFamily::count)
        .def("member", &QueryFamily::member, py::arg("i"))
        .def("best_index", [](const QueryFamily& f, double t) { return best_index(f, t); }, py::arg("t"));

    py::class_<AnswerBits>(m, "AnswerBits")
        .def(py::init([](std::vector<bool> bits) { return AnswerBits{std::move(bits), 0.0}; }),
             py::arg("bits"))
        .def_readwrite("bits", &AnswerBits::bits)
        .def_readonly("eta", &AnswerBits::eta)
        .def("no_count", &AnswerBits::no_count);

    m.def("ideal_family", &ideal_family, py::arg("r"), py::arg("n"), py::arg("cap") = kDefaultIdealQueryCap);
    m.def("ideal_select", &ideal_select, py::arg("family"), py::arg("answers"));
    m.def("ideal_consistency", &ideal_consistency, py::arg("r"), py::arg("n"));
    m.def("consistency_lower_bound", &consistency_lower_bound, py::arg("n"));
    m.def(
        "robust_base",
        [](double r, int n, double p) {
            const RobustBase b = robust_base(r, n, p);
            return py::dict(py::arg("k") = b.k, py::arg("base") = b.base, py::arg("bound") = b.bound);
        },
        py::arg("r"), py::arg("n"), py::arg("p"));
    m.def("robust_family", &robust_family, py::arg("r"), py::arg("n"), py::arg("p"));
    m.def("encode_answers", &encode_answers, py::arg("best"), py::arg("n"));
    m.def(
        "decode_robust",
        [](const AnswerBits& a, int n, double p, bool literal_shift) {
            return decode_robust(a, n, p,
                                 literal_shift ? DecodeConvention::kLiteralShift : DecodeConvention::kIdentity);
        },
        py::arg("answers"), py::arg("n"), py::arg("p"), py::arg("literal_shift") = false);

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init([](const std::string& setting, int points, int trials, std::uint64_t seed,
                         double h, std::vector<double> buffers, int jobs) {
                 ExperimentConfig cfg;
                 cfg.setting = setting_from_string(setting);
                 cfg.grid.points = points;
                 cfg.trials = trials;
                 cfg.seed = seed;
                 cfg.noise = TimeNoiseModel::truncated_normal(h);
                 cfg.query_error_bound = h;
                 cfg.buffers = std::move(buffers);
                 cfg.jobs = jobs;
                 cfg.validate();
                 return cfg;
             }),
             py::arg("setting") = "time", py::arg("points") = 1000, py::arg("trials") = 1000,
             py::arg("seed") = ExperimentConfig{}.seed, py::arg("H") = 0.1,
             py::arg("buffers") = ExperimentConfig{}.buffers, py::arg("jobs") = 1)
        .def_readwrite("trials", &ExperimentConfig::trials)
        .def_readwrite("seed", &ExperimentConfig::seed)
        .def_readwrite("jobs", &ExperimentConfig::jobs)
        .def_readwrite("buffers", &ExperimentConfig::buffers);

    m.def(
        "run_experiment",
        [](const ExperimentConfig& cfg) {
            ExperimentResult result;
            {
                py::gil_scoped_release release;
                result = run_experiment(cfg);
            }
            return result_to_dict(result);
        },
        py::arg("config"));

    m.def(
        "run_invariant_suites",
        [](std::uint64_t seed, int jobs) {
            std::vector<SuiteResult> results;
            {
                py::gil_scoped_release release;
                results = run_invariant_suites(VerifyOptions{seed, jobs});
            }
            py::list out;
            for (const SuiteResult& r : results)
                out.append(py::make_tuple(r.module, r.name, r.passed, r.detail));
            return out;
        },
        py::arg("seed") = 7, py::arg("jobs") = 1);
}
