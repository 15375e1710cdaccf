#include "schedsim/schedule.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "nlohmann/json.hpp"

namespace schedsim {

const char* to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::fcfs: return "FCFS";
    case Algorithm::sjf: return "SJF";
    case Algorithm::rr: return "RR";
    case Algorithm::omdrrs: return "OMDRRS";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "fcfs") return Algorithm::fcfs;
  if (lower == "sjf") return Algorithm::sjf;
  if (lower == "rr") return Algorithm::rr;
  if (lower == "omdrrs") return Algorithm::omdrrs;
  return std::nullopt;
}

const char* to_string(AllocationKind kind) {
  switch (kind) {
    case AllocationKind::quantum_grant: return "quantum_grant";
    case AllocationKind::continuation_grant: return "continuation_grant";
    case AllocationKind::run_to_completion: return "run_to_completion";
  }
  return "?";
}

SchedulerParams SchedulerParams::for_rr(Tick q) {
  SchedulerParams params;
  params.quantum = q;
  return params;
}

SchedulerParams SchedulerParams::for_omdrrs(Tick k, Tick f) {
  SchedulerParams params;
  params.initial_quantum = k;
  params.growth_factor = f;
  return params;
}

std::string SchedulerParams::label() const {
  std::ostringstream out;
  if (quantum) out << "q=" << *quantum;
  if (initial_quantum) {
    if (out.tellp() > 0) out << ", ";
    out << "k=" << *initial_quantum;
  }
  if (growth_factor) {
    if (out.tellp() > 0) out << ", ";
    out << "F=" << *growth_factor;
  }
  return out.str();
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (const Violation& violation : violations) {
    if (violation.slice_index == Violation::no_slice) {
      out << "[-] ";
    } else {
      out << "[slice " << violation.slice_index << "] ";
    }
    out << violation.message << '\n';
  }
  return out.str();
}

ValidationReport validate_schedule(const Workload& workload,
                                   const Schedule& schedule) {
  ValidationReport report;
  auto flag = [&report](std::size_t index, std::string message) {
    report.violations.push_back({index, std::move(message)});
  };

  std::unordered_map<int, Tick> burst_by_pid;
  for (const ProcessSpec& process : workload.processes()) {
    burst_by_pid[process.pid()] = process.burst();
  }

  if (schedule.slices.empty()) {
    flag(Violation::no_slice, "schedule has no slices");
    return report;
  }
  if (schedule.slices.front().start != 0) {
    flag(0, "first slice starts at " +
                std::to_string(schedule.slices.front().start) +
                ", expected 0");
  }

  std::unordered_map<int, Tick> ran_by_pid;
  std::unordered_map<int, std::size_t> last_slice_by_pid;
  for (std::size_t i = 0; i < schedule.slices.size(); ++i) {
    const ExecutionSlice& slice = schedule.slices[i];
    if (slice.end <= slice.start) {
      flag(i, "zero or negative length slice [" + std::to_string(slice.start) +
                  ", " + std::to_string(slice.end) + ")");
    }
    if (i > 0 && slice.start != schedule.slices[i - 1].end) {
      flag(i, "contiguity: slice starts at " + std::to_string(slice.start) +
                  " but previous slice ends at " +
                  std::to_string(schedule.slices[i - 1].end));
    }
    if (!burst_by_pid.count(slice.pid)) {
      flag(i, "pid " + std::to_string(slice.pid) + " is not in the workload");
      continue;
    }
    if (slice.kind == AllocationKind::continuation_grant) {
      if (i == 0 || schedule.slices[i - 1].pid != slice.pid ||
          schedule.slices[i - 1].kind != AllocationKind::quantum_grant) {
        flag(i, "continuation grant does not immediately follow a quantum "
                "grant of pid " +
                    std::to_string(slice.pid));
      }
    }
    ran_by_pid[slice.pid] += slice.length();
    last_slice_by_pid[slice.pid] = i;
  }

  for (const ProcessSpec& process : workload.processes()) {
    auto ran = ran_by_pid.find(process.pid());
    Tick total = ran == ran_by_pid.end() ? 0 : ran->second;
    if (total != process.burst()) {
      std::size_t index = last_slice_by_pid.count(process.pid())
                              ? last_slice_by_pid[process.pid()]
                              : Violation::no_slice;
      flag(index, "burst conservation: pid " + std::to_string(process.pid()) +
                      " ran " + std::to_string(total) + " of " +
                      std::to_string(process.burst()) + " ticks");
    }
  }

  for (const ProcessSpec& process : workload.processes()) {
    auto completion = schedule.completions.find(process.pid());
    if (completion == schedule.completions.end()) {
      flag(Violation::no_slice, "missing completion for pid " +
                                    std::to_string(process.pid()));
      continue;
    }
    auto last = last_slice_by_pid.find(process.pid());
    if (last != last_slice_by_pid.end() &&
        schedule.slices[last->second].end != completion->second) {
      flag(last->second,
           "completion of pid " + std::to_string(process.pid()) + " is " +
               std::to_string(completion->second) +
               " but its final slice ends at " +
               std::to_string(schedule.slices[last->second].end));
    }
  }
  for (const auto& [pid, tick] : schedule.completions) {
    (void)tick;
    if (!burst_by_pid.count(pid)) {
      flag(Violation::no_slice,
           "completion recorded for unknown pid " + std::to_string(pid));
    }
  }

  if (schedule.slices.back().end != workload.total_burst()) {
    flag(schedule.slices.size() - 1,
         "final tick is " + std::to_string(schedule.slices.back().end) +
             ", expected total burst " +
             std::to_string(workload.total_burst()));
  }
  return report;
}

long long dispatch_count(const Schedule& schedule) {
  return static_cast<long long>(schedule.slices.size());
}

namespace {

nlohmann::ordered_json params_to_json(const SchedulerParams& params) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  if (params.quantum) out["q"] = *params.quantum;
  if (params.initial_quantum) out["k"] = *params.initial_quantum;
  if (params.growth_factor) out["F"] = *params.growth_factor;
  return out;
}

}  // namespace

std::string schedule_to_json(const Schedule& schedule) {
  nlohmann::ordered_json doc;
  doc["algorithm"] = to_string(schedule.algorithm);
  doc["params"] = params_to_json(schedule.params);
  nlohmann::ordered_json slices = nlohmann::ordered_json::array();
  for (const ExecutionSlice& slice : schedule.slices) {
    slices.push_back({{"pid", slice.pid},
                      {"start", slice.start},
                      {"end", slice.end},
                      {"kind", to_string(slice.kind)}});
  }
  doc["slices"] = std::move(slices);
  nlohmann::ordered_json completions = nlohmann::ordered_json::object();
  for (const auto& [pid, tick] : schedule.completions) {
    completions[std::to_string(pid)] = tick;
  }
  doc["completions"] = std::move(completions);
  return doc.dump(2) + "\n";
}

}  // namespace schedsim
