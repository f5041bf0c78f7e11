#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skyrm/sweep.hpp"

namespace skyrm {

// Run-configuration file <-> RunConfig/BenchConfig. Unknown keys are rejected
// so typos fail loudly; missing keys keep their defaults.
RunConfig run_config_from_json(const std::string& text);
std::string run_config_to_json(const RunConfig& config);
RunConfig load_run_config(const std::string& path);

BenchConfig bench_config_from_json(const std::string& text);
BenchConfig load_bench_config(const std::string& path);

// Resolved-config echo plus version, record summary, and transition report.
// Parsing the "config" object back reproduces the RunConfig exactly.
std::string manifest_json(const RunConfig& config, const std::vector<SweepRecord>& records,
                          const std::optional<TransitionReport>& transition);

std::string benchmark_json(const BenchmarkResult& result, const BenchConfig& config);

double parse_double(const std::string& text);
SolverKind parse_solver(const std::string& text);

bool operator==(const RunConfig& a, const RunConfig& b);

}  // namespace skyrm
