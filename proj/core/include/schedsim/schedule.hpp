#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schedsim/workload.hpp"

namespace schedsim {

enum class Algorithm { fcfs, sjf, rr, omdrrs };

const char* to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// How a slice came to be.
///   quantum_grant      - ran exactly the round quantum (or was preempted).
///   continuation_grant - finish-early extension: may only immediately
///                        follow a quantum_grant of the same pid, no gap.
///   run_to_completion  - dispatched straight to completion.
enum class AllocationKind { quantum_grant, continuation_grant,
                            run_to_completion };

const char* to_string(AllocationKind kind);

/// One contiguous CPU allocation, [start, end) in ticks.
struct ExecutionSlice {
  int pid = 0;
  Tick start = 0;
  Tick end = 0;
  AllocationKind kind = AllocationKind::run_to_completion;

  Tick length() const noexcept { return end - start; }

  friend bool operator==(const ExecutionSlice&,
                         const ExecutionSlice&) = default;
};

/// Parameters a schedule was produced with. RR carries q; the dynamic
/// policy carries the initial quantum k and growth factor F (round r runs
/// with quantum k*F^(r-1)); FCFS/SJF carry nothing.
struct SchedulerParams {
  std::optional<Tick> quantum;
  std::optional<Tick> initial_quantum;
  std::optional<Tick> growth_factor;

  static SchedulerParams none() { return {}; }
  static SchedulerParams for_rr(Tick q);
  static SchedulerParams for_omdrrs(Tick k, Tick f);

  /// "q=6" or "k=6, F=2"; empty when there are no parameters.
  std::string label() const;

  friend bool operator==(const SchedulerParams&,
                         const SchedulerParams&) = default;
};

/// Full trace of one run: contiguous slices from tick 0 plus per-process
/// completion ticks. The CPU never idles (all arrivals are at 0), so the
/// last slice ends at the workload's total burst.
struct Schedule {
  Algorithm algorithm = Algorithm::fcfs;
  SchedulerParams params;
  std::vector<ExecutionSlice> slices;
  std::map<int, Tick> completions;
};

struct Violation {
  static constexpr std::size_t no_slice = std::numeric_limits<std::size_t>::max();

  std::size_t slice_index = no_slice;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

/// Checks every trace invariant against the workload: starts at 0,
/// contiguous non-empty slices, per-process burst conservation, completion
/// map consistency, final tick = total burst, continuation placement.
/// Violations are data, not errors.
ValidationReport validate_schedule(const Workload& workload,
                                   const Schedule& schedule);

/// Number of allocation events: one per slice, continuation grants
/// included. This is the "context switch" figure the comparison tables
/// report; the trace records dispatches, not process-to-process
/// transitions.
long long dispatch_count(const Schedule& schedule);

/// JSON export with fixed field order:
/// {algorithm, params, slices:[{pid,start,end,kind}], completions}.
std::string schedule_to_json(const Schedule& schedule);

}  // namespace schedsim
