#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schedsim/error.hpp"

namespace schedsim {

/// Simulation time unit. All bursts, slice boundaries and derived metrics
/// are integer ticks; averages are kept as exact rationals (see metrics).
using Tick = long long;

/// A submitted job: positive id plus its CPU demand in whole ticks.
/// Zero or negative bursts are rejected at construction.
class ProcessSpec {
 public:
  ProcessSpec(int pid, Tick burst);

  int pid() const noexcept { return pid_; }
  Tick burst() const noexcept { return burst_; }

  friend bool operator==(const ProcessSpec&, const ProcessSpec&) = default;

 private:
  int pid_;
  Tick burst_;
};

enum class WorkloadOrigin { manual, generated };

/// Ordered, non-empty set of processes. Index order is submission order:
/// it decides FCFS service order and every tie-break in the other
/// policies. All processes arrive at tick 0.
class Workload {
 public:
  static Workload manual(std::vector<ProcessSpec> processes);
  static Workload generated(std::vector<ProcessSpec> processes,
                            std::uint64_t seed);

  const std::vector<ProcessSpec>& processes() const noexcept {
    return processes_;
  }
  std::size_t size() const noexcept { return processes_.size(); }
  WorkloadOrigin origin() const noexcept { return origin_; }
  std::optional<std::uint64_t> seed() const noexcept;

  Tick total_burst() const noexcept { return total_burst_; }
  Tick max_burst() const noexcept { return max_burst_; }

  /// Hex digest of the pid/burst sequence. Two workloads with the same
  /// processes in the same order share a fingerprint.
  const std::string& fingerprint() const noexcept { return fingerprint_; }

  /// Origin is provenance metadata; equality is over the process sequence.
  friend bool operator==(const Workload& a, const Workload& b) {
    return a.processes_ == b.processes_;
  }

 private:
  Workload(std::vector<ProcessSpec> processes, WorkloadOrigin origin,
           std::uint64_t seed);

  std::vector<ProcessSpec> processes_;
  WorkloadOrigin origin_;
  std::uint64_t seed_;
  Tick total_burst_;
  Tick max_burst_;
  std::string fingerprint_;
};

struct GeneratorConfig {
  long long count = 0;
  Tick burst_min = 4;
  Tick burst_max = 30;
  std::uint64_t seed = 0;
};

enum class WorkloadFormat { csv, json };

/// Parses `pid,burst` CSV (LF or CRLF) or a JSON array of
/// {"pid": n, "burst": n} objects. Row order becomes submission order and
/// the result is a manual workload. Errors name the offending row.
Workload parse_workload(std::string_view text, WorkloadFormat format);

/// Deterministic workload synthesis: pids 1..count, bursts drawn uniformly
/// from [burst_min, burst_max] by rejection sampling over mt19937_64, so a
/// config maps to exactly one workload on every run.
Workload generate_workload(const GeneratorConfig& config);

/// CSV output uses LF line endings and the fixed header `pid,burst`.
std::string serialize_workload(const Workload& workload,
                               WorkloadFormat format);

}  // namespace schedsim
