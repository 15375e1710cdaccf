#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "schedsim/schedule.hpp"
#include "schedsim/workload.hpp"

namespace schedsim::cli {

enum class OutputFormat { table, csv, json };

std::optional<OutputFormat> parse_output_format(std::string_view name);

struct RunRequest {
  std::optional<std::string> workload_path;
  std::optional<WorkloadFormat> input_format;   // sniffed from the path if unset
  std::optional<GeneratorConfig> generator;
  std::vector<Algorithm> algorithms;            // one, or all four
  std::optional<Tick> quantum;                  // --q
  std::optional<Tick> initial_quantum;          // --k
  Tick growth_factor = 2;                       // --F
  std::optional<std::uint64_t> quantum_seed;
  OutputFormat output = OutputFormat::table;
  bool gantt = false;
  int gantt_width = 72;
  std::optional<std::string> export_schedule_path;
};

/// "count=10,min=4,max=30,seed=7"; count is required, min/max default to
/// 4/30, a missing seed is drawn from the system and reported.
GeneratorConfig parse_generator_spec(std::string_view spec);

int cmd_run(const RunRequest& request, std::ostream& out, std::ostream& err);

int cmd_generate(const GeneratorConfig& config, const std::string& out_path,
                 WorkloadFormat format, std::ostream& out, std::ostream& err);

}  // namespace schedsim::cli
