#include "commands.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "nlohmann/json.hpp"
#include "schedsim/algorithms.hpp"
#include "schedsim/metrics.hpp"

namespace schedsim::cli {

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

GeneratorConfig parse_generator_spec(std::string_view spec) {
  GeneratorConfig config;
  bool count_seen = false;
  bool seed_seen = false;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string_view item = spec.substr(
        pos, comma == std::string_view::npos ? spec.size() - pos : comma - pos);
    pos = comma == std::string_view::npos ? spec.size() + 1 : comma + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::invalid_config,
                  "--generate items must be key=value, got '" +
                      std::string(item) + "'");
    }
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    try {
      if (key == "count") {
        config.count = std::stoll(value);
        count_seen = true;
      } else if (key == "min") {
        config.burst_min = std::stoll(value);
      } else if (key == "max") {
        config.burst_max = std::stoll(value);
      } else if (key == "seed") {
        config.seed = std::stoull(value);
        seed_seen = true;
      } else {
        throw Error(Errc::invalid_config,
                    "--generate: unknown key '" + key +
                        "' (expected count, min, max, seed)");
      }
    } catch (const std::invalid_argument&) {
      throw Error(Errc::invalid_config,
                  "--generate: '" + key + "' is not an integer: '" + value +
                      "'");
    } catch (const std::out_of_range&) {
      throw Error(Errc::invalid_config,
                  "--generate: '" + key + "' is out of range: '" + value +
                      "'");
    }
  }
  if (!count_seen) {
    throw Error(Errc::invalid_config, "--generate requires count=N");
  }
  if (!seed_seen) {
    config.seed = std::random_device{}();
  }
  return config;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::invalid_config, "cannot open workload file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

WorkloadFormat sniff_format(const std::string& path,
                            std::optional<WorkloadFormat> explicit_format) {
  if (explicit_format) return *explicit_format;
  return path.size() >= 5 && path.substr(path.size() - 5) == ".json"
             ? WorkloadFormat::json
             : WorkloadFormat::csv;
}

Workload load_workload(const RunRequest& request) {
  if (request.workload_path) {
    return parse_workload(read_file(*request.workload_path),
                          sniff_format(*request.workload_path,
                                       request.input_format));
  }
  if (request.generator) {
    return generate_workload(*request.generator);
  }
  throw Error(Errc::invalid_config,
              "one of --workload or --generate is required");
}

Tick draw_quantum(std::mt19937_64& rng, Tick lo, Tick hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t overflow =
      (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
  std::uint64_t sample = rng();
  if (overflow != 0) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - overflow;
    while (sample > limit) sample = rng();
  }
  return lo + static_cast<Tick>(sample % span);
}

struct ResolvedParams {
  Tick quantum = 0;
  Tick initial_quantum = 0;
  Tick growth_factor = 2;
};

bool wants(const std::vector<Algorithm>& algorithms, Algorithm algorithm) {
  for (Algorithm a : algorithms) {
    if (a == algorithm) return true;
  }
  return false;
}

// RR needs q and the dynamic policy needs k; either may come from the
// flag or from --quantum-seed, which draws uniformly from
// [2, max(2, max burst)] (q first, then k).
ResolvedParams resolve_params(const RunRequest& request,
                              const Workload& workload) {
  ResolvedParams params;
  params.growth_factor = request.growth_factor;
  if (params.growth_factor < 2) {
    throw Error(Errc::invalid_config, "--F must be at least 2");
  }
  std::mt19937_64 rng(request.quantum_seed.value_or(0));
  const Tick upper = std::max<Tick>(2, workload.max_burst());
  if (wants(request.algorithms, Algorithm::rr)) {
    if (request.quantum) {
      params.quantum = *request.quantum;
    } else if (request.quantum_seed) {
      params.quantum = draw_quantum(rng, 2, upper);
    } else {
      throw Error(Errc::invalid_config, "rr requires --q or --quantum-seed");
    }
    if (params.quantum < 1) {
      throw Error(Errc::invalid_config, "--q must be at least 1");
    }
  }
  if (wants(request.algorithms, Algorithm::omdrrs)) {
    if (request.initial_quantum) {
      params.initial_quantum = *request.initial_quantum;
    } else if (request.quantum_seed) {
      params.initial_quantum = draw_quantum(rng, 2, upper);
    } else {
      throw Error(Errc::invalid_config,
                  "omdrrs requires --k or --quantum-seed");
    }
    if (params.initial_quantum < 1) {
      throw Error(Errc::invalid_config, "--k must be at least 1");
    }
  }
  return params;
}

Schedule run_algorithm(Algorithm algorithm, const Workload& workload,
                       const ResolvedParams& params) {
  switch (algorithm) {
    case Algorithm::fcfs: return run_fcfs(workload);
    case Algorithm::sjf: return run_sjf(workload);
    case Algorithm::rr: return run_rr(workload, params.quantum);
    case Algorithm::omdrrs:
      return run_omdrrs(workload, params.initial_quantum,
                        params.growth_factor);
  }
  throw Error(Errc::invalid_config, "unknown algorithm");
}

void render_table(const RunRequest& request,
                  const std::vector<Schedule>& schedules,
                  const std::vector<MetricsReport>& reports,
                  std::ostream& out) {
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out << "\n";
    out << report_to_table(reports[i]);
    if (request.gantt) {
      out << render_gantt(schedules[i], request.gantt_width);
    }
  }
  if (reports.size() > 1) {
    out << "\n== comparison ==\n" << comparison_to_table(compare(reports));
  }
}

void render_csv(const std::vector<MetricsReport>& reports, std::ostream& out) {
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out << "\n";
    out << report_to_csv(reports[i]);
  }
  if (reports.size() > 1) {
    out << "\n" << comparison_to_csv(compare(reports));
  }
}

void render_json(const std::vector<MetricsReport>& reports,
                 std::ostream& out) {
  if (reports.size() == 1) {
    out << report_to_json(reports.front());
    return;
  }
  nlohmann::ordered_json doc;
  doc["reports"] = nlohmann::ordered_json::array();
  for (const MetricsReport& report : reports) {
    doc["reports"].push_back(nlohmann::ordered_json::parse(
        report_to_json(report)));
  }
  doc["comparison"] =
      nlohmann::ordered_json::parse(comparison_to_json(compare(reports)));
  out << doc.dump(2) << "\n";
}

}  // namespace

int cmd_run(const RunRequest& request, std::ostream& out, std::ostream& err) {
  try {
    const Workload workload = load_workload(request);
    const ResolvedParams params = resolve_params(request, workload);

    std::vector<Schedule> schedules;
    std::vector<MetricsReport> reports;
    for (Algorithm algorithm : request.algorithms) {
      Schedule schedule = run_algorithm(algorithm, workload, params);
      const ValidationReport validation =
          validate_schedule(workload, schedule);
      if (!validation.ok()) {
        err << "internal invariant failure in " << to_string(algorithm)
            << " trace:\n"
            << validation.summary();
        return 1;
      }
      reports.push_back(compute_metrics(workload, schedule));
      schedules.push_back(std::move(schedule));
    }

    if (request.export_schedule_path) {
      if (schedules.size() != 1) {
        err << "error: --export-schedule requires a single algorithm\n";
        return 2;
      }
      std::ofstream file(*request.export_schedule_path, std::ios::binary);
      if (!file) {
        err << "error: cannot write " << *request.export_schedule_path
            << "\n";
        return 2;
      }
      file << schedule_to_json(schedules.front());
    }

    switch (request.output) {
      case OutputFormat::table:
        render_table(request, schedules, reports, out);
        break;
      case OutputFormat::csv:
        render_csv(reports, out);
        break;
      case OutputFormat::json:
        render_json(reports, out);
        break;
    }
    return 0;
  } catch (const Error& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    err << "internal error: " << error.what() << "\n";
    return 1;
  }
}

int cmd_generate(const GeneratorConfig& config, const std::string& out_path,
                 WorkloadFormat format, std::ostream& out,
                 std::ostream& err) {
  try {
    const Workload workload = generate_workload(config);
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return 2;
    }
    file << serialize_workload(workload, format);
    if (!file.flush()) {
      err << "error: failed writing " << out_path << "\n";
      return 2;
    }
    out << "wrote " << workload.size() << " processes to " << out_path
        << " (seed " << config.seed << ")\n";
    return 0;
  } catch (const Error& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    err << "internal error: " << error.what() << "\n";
    return 1;
  }
}

}  // namespace schedsim::cli
