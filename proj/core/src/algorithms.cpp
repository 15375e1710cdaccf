#include "schedsim/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>
#include <vector>

namespace schedsim {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(Errc::invalid_config, message);
}

// Appends a slice at the current clock and records the completion when the
// process is done.
class TraceBuilder {
 public:
  explicit TraceBuilder(Schedule& schedule) : schedule_(schedule) {}

  void grant(int pid, Tick length, AllocationKind kind, bool finishes) {
    schedule_.slices.push_back({pid, clock_, clock_ + length, kind});
    clock_ += length;
    if (finishes) schedule_.completions[pid] = clock_;
  }

 private:
  Schedule& schedule_;
  Tick clock_ = 0;
};

Schedule non_preemptive(const Workload& workload, Algorithm algorithm,
                        const std::vector<std::size_t>& order) {
  Schedule schedule{algorithm, SchedulerParams::none(), {}, {}};
  TraceBuilder trace(schedule);
  for (std::size_t index : order) {
    const ProcessSpec& process = workload.processes()[index];
    trace.grant(process.pid(), process.burst(),
                AllocationKind::run_to_completion, true);
  }
  return schedule;
}

}  // namespace

Schedule run_fcfs(const Workload& workload) {
  std::vector<std::size_t> order(workload.size());
  std::iota(order.begin(), order.end(), 0);
  return non_preemptive(workload, Algorithm::fcfs, order);
}

Schedule run_sjf(const Workload& workload) {
  std::vector<std::size_t> order(workload.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&workload](std::size_t a, std::size_t b) {
                     return workload.processes()[a].burst() <
                            workload.processes()[b].burst();
                   });
  return non_preemptive(workload, Algorithm::sjf, order);
}

Schedule run_rr(const Workload& workload, Tick quantum) {
  require(quantum >= 1, "rr quantum must be at least 1 tick");
  Schedule schedule{Algorithm::rr, SchedulerParams::for_rr(quantum), {}, {}};
  TraceBuilder trace(schedule);

  struct Entry {
    int pid;
    Tick remaining;
  };
  std::deque<Entry> queue;
  for (const ProcessSpec& process : workload.processes()) {
    queue.push_back({process.pid(), process.burst()});
  }
  while (!queue.empty()) {
    Entry entry = queue.front();
    queue.pop_front();
    const Tick length = std::min(quantum, entry.remaining);
    entry.remaining -= length;
    const bool finishes = entry.remaining == 0;
    trace.grant(entry.pid, length,
                finishes ? AllocationKind::run_to_completion
                         : AllocationKind::quantum_grant,
                finishes);
    if (!finishes) queue.push_back(entry);
  }
  return schedule;
}

Schedule run_omdrrs(const Workload& workload, Tick initial_quantum,
                    Tick growth_factor) {
  require(initial_quantum >= 1, "initial quantum must be at least 1 tick");
  require(growth_factor >= 2, "growth factor must be at least 2");
  Schedule schedule{
      Algorithm::omdrrs,
      SchedulerParams::for_omdrrs(initial_quantum, growth_factor),
      {},
      {}};
  TraceBuilder trace(schedule);

  struct Entry {
    int pid;
    std::size_t submitted;
    Tick remaining;
  };
  std::vector<Entry> pending;
  pending.reserve(workload.size());
  for (std::size_t i = 0; i < workload.size(); ++i) {
    const ProcessSpec& process = workload.processes()[i];
    pending.push_back({process.pid(), i, process.burst()});
  }

  // Any quantum past every possible remaining burst behaves identically,
  // so growth saturates there instead of overflowing.
  const Tick quantum_cap = workload.total_burst() + 1;
  Tick quantum = std::min(initial_quantum, quantum_cap);
  std::vector<Entry> carried;
  while (!pending.empty()) {
    // Queue order is fixed at the round boundary only; a preemption does
    // not reorder the rest of the round.
    std::sort(pending.begin(), pending.end(),
              [](const Entry& a, const Entry& b) {
                return std::tie(a.remaining, a.submitted) <
                       std::tie(b.remaining, b.submitted);
              });
    carried.clear();
    for (Entry entry : pending) {
      if (entry.remaining < quantum) {
        trace.grant(entry.pid, entry.remaining,
                    AllocationKind::run_to_completion, true);
        continue;
      }
      entry.remaining -= quantum;
      trace.grant(entry.pid, quantum, AllocationKind::quantum_grant,
                  entry.remaining == 0);
      if (entry.remaining == 0) continue;
      // Finish-early rule, exact in integers: remaining < TQ/F.
      if (static_cast<__int128>(entry.remaining) * growth_factor < quantum) {
        trace.grant(entry.pid, entry.remaining,
                    AllocationKind::continuation_grant, true);
      } else {
        carried.push_back(entry);
      }
    }
    pending.swap(carried);
    quantum = quantum > quantum_cap / growth_factor ? quantum_cap
                                                    : quantum * growth_factor;
  }
  return schedule;
}

}  // namespace schedsim
