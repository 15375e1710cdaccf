#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "reproduce.hpp"
#include "schedsim/schedule.hpp"

using schedsim::Algorithm;
using schedsim::GeneratorConfig;
using schedsim::WorkloadFormat;
using namespace schedsim::cli;

namespace {

struct RunFlags {
  std::string workload_path;
  std::string input_format;
  std::string generate_spec;
  std::string algo;
  long long quantum = 0;
  long long initial_quantum = 0;
  long long growth_factor = 2;
  std::uint64_t quantum_seed = 0;
  std::string output;
  bool gantt = false;
  int gantt_width = 72;
  std::string export_schedule;
};

struct RunOptions {
  CLI::Option* workload = nullptr;
  CLI::Option* input_format = nullptr;
  CLI::Option* generate = nullptr;
  CLI::Option* quantum = nullptr;
  CLI::Option* initial_quantum = nullptr;
  CLI::Option* quantum_seed = nullptr;
  CLI::Option* output = nullptr;
  CLI::Option* export_schedule = nullptr;
};

RunOptions add_run_options(CLI::App* cmd, RunFlags& flags) {
  RunOptions opts;
  opts.workload =
      cmd->add_option("--workload", flags.workload_path, "Workload file path");
  opts.input_format =
      cmd->add_option("--input-format", flags.input_format,
                      "Workload file format (default: by extension)")
          ->check(CLI::IsMember({"csv", "json"}));
  opts.generate = cmd->add_option(
      "--generate", flags.generate_spec,
      "Synthesize a workload: count=N[,min=A][,max=B][,seed=S]");
  opts.workload->excludes(opts.generate);
  opts.generate->excludes(opts.workload);
  opts.quantum = cmd->add_option("--q", flags.quantum, "RR time quantum");
  opts.initial_quantum =
      cmd->add_option("--k", flags.initial_quantum,
                      "OMDRRS initial time quantum");
  cmd->add_option("--F", flags.growth_factor,
                  "OMDRRS quantum growth factor (default 2)");
  opts.quantum_seed = cmd->add_option(
      "--quantum-seed", flags.quantum_seed,
      "Draw missing --q/--k uniformly from [2, max burst] with this seed");
  opts.output = cmd->add_option("--output", flags.output,
                                "Output format (default table; the "
                                "SCHEDSIM_FORMAT env var overrides the "
                                "default)")
                    ->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_flag("--gantt", flags.gantt,
                "Render a Gantt chart (table output only)");
  cmd->add_option("--gantt-width", flags.gantt_width,
                  "Target chart width in columns (>= 20, default 72)");
  opts.export_schedule = cmd->add_option(
      "--export-schedule", flags.export_schedule,
      "Write the slice-level schedule JSON to this path (single algorithm)");
  return opts;
}

int build_request(const RunFlags& flags, const RunOptions& opts,
                  bool force_all, RunRequest& request, std::ostream& err) {
  if (opts.workload->count() > 0) request.workload_path = flags.workload_path;
  if (opts.input_format->count() > 0) {
    request.input_format = flags.input_format == "json" ? WorkloadFormat::json
                                                        : WorkloadFormat::csv;
  }
  if (opts.generate->count() > 0) {
    try {
      request.generator = parse_generator_spec(flags.generate_spec);
    } catch (const schedsim::Error& error) {
      err << "error: " << error.what() << "\n";
      return 2;
    }
  }
  if (!request.workload_path && !request.generator) {
    err << "error: one of --workload or --generate is required\n";
    return 2;
  }

  if (force_all || flags.algo == "all") {
    request.algorithms = {Algorithm::fcfs, Algorithm::sjf, Algorithm::rr,
                          Algorithm::omdrrs};
  } else {
    const auto algorithm = schedsim::parse_algorithm(flags.algo);
    if (!algorithm) {
      err << "error: --algo must be fcfs, sjf, rr, omdrrs or all\n";
      return 2;
    }
    request.algorithms = {*algorithm};
  }

  if (opts.quantum->count() > 0) request.quantum = flags.quantum;
  if (opts.initial_quantum->count() > 0) {
    request.initial_quantum = flags.initial_quantum;
  }
  request.growth_factor = flags.growth_factor;
  if (opts.quantum_seed->count() > 0) {
    request.quantum_seed = flags.quantum_seed;
  }

  request.output = OutputFormat::table;
  if (const char* env = std::getenv("SCHEDSIM_FORMAT")) {
    if (const auto format = parse_output_format(env)) {
      request.output = *format;
    } else {
      err << "warning: ignoring invalid SCHEDSIM_FORMAT '" << env << "'\n";
    }
  }
  if (opts.output->count() > 0) {
    request.output = *parse_output_format(flags.output);
  }
  request.gantt = flags.gantt;
  request.gantt_width = flags.gantt_width;
  if (opts.export_schedule->count() > 0) {
    request.export_schedule_path = flags.export_schedule;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic CPU-scheduling simulator: FCFS, SJF, "
               "round robin and dynamic-quantum round robin (OMDRRS)"};
  app.require_subcommand(1);

  RunFlags run_flags;
  CLI::App* run_cmd = app.add_subcommand("run", "Run one or all algorithms");
  RunOptions run_opts = add_run_options(run_cmd, run_flags);
  run_cmd->add_option("--algo", run_flags.algo,
                      "fcfs, sjf, rr, omdrrs or all")
      ->required();

  RunFlags compare_flags;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Run all four algorithms side by side");
  RunOptions compare_opts = add_run_options(compare_cmd, compare_flags);

  std::string generate_spec;
  std::string generate_out;
  std::string generate_format;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Write a synthesized workload file");
  generate_cmd
      ->add_option("spec", generate_spec,
                   "count=N[,min=A][,max=B][,seed=S]")
      ->required();
  generate_cmd->add_option("--out", generate_out, "Output file path")
      ->required();
  generate_cmd
      ->add_option("--format", generate_format,
                   "File format (default: by extension)")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string reproduce_table;
  CLI::App* reproduce_cmd = app.add_subcommand(
      "reproduce", "Re-run an embedded reference table and diff the results");
  reproduce_cmd
      ->add_option("table", reproduce_table, "T1, T2, T3 or T4")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  if (run_cmd->parsed() || compare_cmd->parsed()) {
    const bool is_compare = compare_cmd->parsed();
    RunRequest request;
    const int status = build_request(
        is_compare ? compare_flags : run_flags,
        is_compare ? compare_opts : run_opts, is_compare, request, std::cerr);
    if (status != 0) return status;
    return cmd_run(request, std::cout, std::cerr);
  }

  if (generate_cmd->parsed()) {
    GeneratorConfig config;
    try {
      config = parse_generator_spec(generate_spec);
    } catch (const schedsim::Error& error) {
      std::cerr << "error: " << error.what() << "\n";
      return 2;
    }
    WorkloadFormat format = WorkloadFormat::csv;
    if (generate_format == "json" ||
        (generate_format.empty() && generate_out.size() >= 5 &&
         generate_out.substr(generate_out.size() - 5) == ".json")) {
      format = WorkloadFormat::json;
    }
    return cmd_generate(config, generate_out, format, std::cout, std::cerr);
  }

  const auto table = parse_table_id(reproduce_table);
  if (!table) {
    std::cerr << "error: table must be T1, T2, T3 or T4\n";
    return 2;
  }
  return cmd_reproduce(*table, std::cout);
}
