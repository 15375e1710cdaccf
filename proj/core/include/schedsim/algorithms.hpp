#pragma once

#include "schedsim/schedule.hpp"
#include "schedsim/workload.hpp"

namespace schedsim {

/// One run-to-completion slice per process, in submission order.
Schedule run_fcfs(const Workload& workload);

/// One run-to-completion slice per process, shortest burst first; equal
/// bursts keep submission order.
Schedule run_sjf(const Workload& workload);

/// Fixed-quantum round robin: cyclic service in submission order, each
/// dispatch min(quantum, remaining) ticks; a preempted process rejoins the
/// queue tail. Requires quantum >= 1.
Schedule run_rr(const Workload& workload, Tick quantum);

/// Dynamic round robin (OMDRRS). Round r serves the unfinished processes
/// in ascending order of remaining burst (ties by submission order) under
/// quantum TQ = k*F^(r-1):
///   remaining <  TQ  -> runs to completion;
///   otherwise        -> runs exactly TQ; then, if the new remaining
///                       satisfies remaining*F < TQ, a continuation grant
///                       finishes it immediately; a grant that hits zero
///                       exactly ends the process with no continuation;
///                       anything else waits for the next round.
/// Requires initial_quantum >= 1 and growth_factor >= 2 (a factor of 1
/// would freeze both the growth rule and the finish-early threshold).
Schedule run_omdrrs(const Workload& workload, Tick initial_quantum,
                    Tick growth_factor = 2);

}  // namespace schedsim
