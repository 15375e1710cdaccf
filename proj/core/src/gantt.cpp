#include <string>
#include <vector>

#include "schedsim/metrics.hpp"

namespace schedsim {

std::vector<GanttSegment> gantt_segments(const Schedule& schedule) {
  std::vector<GanttSegment> segments;
  for (const ExecutionSlice& slice : schedule.slices) {
    if (slice.kind == AllocationKind::continuation_grant &&
        !segments.empty() && segments.back().pid == slice.pid &&
        segments.back().end == slice.start) {
      segments.back().end = slice.end;
      continue;
    }
    segments.push_back({slice.pid, slice.start, slice.end});
  }
  return segments;
}

std::string render_gantt(const Schedule& schedule, int width) {
  if (width < 20) {
    throw Error(Errc::invalid_config, "gantt width must be at least 20");
  }
  if (schedule.slices.empty()) {
    throw Error(Errc::invalid_schedule, "cannot render an empty schedule");
  }

  // Every raw slice boundary gets a tick mark, including the ones hidden
  // inside a collapsed quantum/continuation segment.
  std::vector<Tick> ticks;
  ticks.push_back(schedule.slices.front().start);
  for (const ExecutionSlice& slice : schedule.slices) {
    ticks.push_back(slice.end);
  }
  const Tick total = ticks.back();

  // Proportional columns, strictly increasing so every slice is visible.
  std::vector<long long> columns(ticks.size(), 0);
  for (std::size_t i = 1; i < ticks.size(); ++i) {
    const long long ideal = total == 0 ? 0
                                       : (ticks[i] * (width - 1)) / total;
    columns[i] = std::max(columns[i - 1] + 1, ideal);
  }

  const std::vector<GanttSegment> segments = gantt_segments(schedule);
  std::vector<std::size_t> tick_index_of;  // segment start -> tick index
  {
    std::size_t t = 0;
    for (const GanttSegment& segment : segments) {
      while (ticks[t] != segment.start) ++t;
      tick_index_of.push_back(t);
    }
  }

  // Widen any segment too narrow for its label, pushing later columns.
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const long long need =
        static_cast<long long>(std::to_string(segments[s].pid).size()) + 2;
    std::size_t start = tick_index_of[s];
    std::size_t end = start + 1;
    while (ticks[end] != segments[s].end) ++end;
    const long long deficit = need - (columns[end] - columns[start]);
    if (deficit > 0) {
      for (std::size_t t = end; t < columns.size(); ++t) columns[t] += deficit;
    }
  }

  std::string bar(static_cast<std::size_t>(columns.back()) + 1, ' ');
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const std::size_t at = static_cast<std::size_t>(columns[tick_index_of[s]]);
    bar[at] = '|';
    const std::string label = "P" + std::to_string(segments[s].pid);
    for (std::size_t i = 0; i < label.size(); ++i) bar[at + 1 + i] = label[i];
  }
  bar[static_cast<std::size_t>(columns.back())] = '|';

  std::string scale;
  for (std::size_t i = 0; i < ticks.size(); ++i) {
    const std::string number = std::to_string(ticks[i]);
    std::size_t at = static_cast<std::size_t>(columns[i]);
    if (at < scale.size() + (i == 0 ? 0 : 1)) at = scale.size() + 1;
    scale.resize(at, ' ');
    scale += number;
  }

  return bar + "\n" + scale + "\n";
}

}  // namespace schedsim
