#pragma once

#include <string>
#include <vector>

#include "schedsim/schedule.hpp"
#include "schedsim/workload.hpp"

namespace schedsim {

struct ProcessMetrics {
  int pid = 0;
  Tick burst = 0;
  Tick turnaround = 0;  // completion tick; arrivals are at 0
  Tick waiting = 0;     // turnaround - burst

  friend bool operator==(const ProcessMetrics&,
                         const ProcessMetrics&) = default;
};

/// Exact mean kept as total/count. Rendering rounds half-up to one decimal
/// and drops a zero decimal, matching the reference tables ("48", "32.6").
class ExactAverage {
 public:
  ExactAverage(long long total, long long count);

  long long total() const noexcept { return total_; }
  long long count() const noexcept { return count_; }
  long long tenths() const noexcept;
  std::string display() const;

  friend bool operator==(const ExactAverage& a, const ExactAverage& b);
  friend bool operator<(const ExactAverage& a, const ExactAverage& b);

 private:
  long long total_;
  long long count_;
};

struct MetricsReport {
  Algorithm algorithm = Algorithm::fcfs;
  SchedulerParams params;
  std::vector<ProcessMetrics> per_process;  // pid order
  ExactAverage avg_turnaround{0, 1};
  ExactAverage avg_waiting{0, 1};
  long long context_switches = 0;
  std::string workload_fingerprint;
  std::string workload_origin;  // "manual" or "generated(seed=...)"
};

/// Validates the schedule first; a trace that breaks any invariant is an
/// error here, not a violation report.
MetricsReport compute_metrics(const Workload& workload,
                              const Schedule& schedule);

/// Visual segment of a Gantt chart: a quantum grant and its immediately
/// following continuation grant collapse into one segment. The underlying
/// slice list stays unmerged (dispatch_count is unaffected).
struct GanttSegment {
  int pid = 0;
  Tick start = 0;
  Tick end = 0;

  friend bool operator==(const GanttSegment&, const GanttSegment&) = default;
};

std::vector<GanttSegment> gantt_segments(const Schedule& schedule);

/// One-lane ASCII chart: labeled segments over a tick scale that lists
/// every slice boundary (including boundaries inside collapsed segments).
/// `width` is a target column count (>= 20); labels may widen the chart.
std::string render_gantt(const Schedule& schedule, int width);

/// Side-by-side summary, one column per report, mirroring the layout of
/// the reference aggregate tables. Minima are marked per row; ties all
/// carry the mark.
struct ComparisonTable {
  struct Row {
    std::string label;
    std::vector<std::string> values;
    std::vector<bool> minimal;
  };

  std::vector<std::string> columns;
  Row context_switches;
  Row turnaround;
  Row waiting;
};

/// All reports must come from the same workload (fingerprints must agree).
ComparisonTable compare(const std::vector<MetricsReport>& reports);

std::string report_to_table(const MetricsReport& report);
std::string report_to_csv(const MetricsReport& report);
std::string report_to_json(const MetricsReport& report);

std::string comparison_to_table(const ComparisonTable& table);
std::string comparison_to_csv(const ComparisonTable& table);
std::string comparison_to_json(const ComparisonTable& table);

}  // namespace schedsim
