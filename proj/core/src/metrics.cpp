#include "schedsim/metrics.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "nlohmann/json.hpp"

namespace schedsim {

ExactAverage::ExactAverage(long long total, long long count)
    : total_(total), count_(count) {
  if (count < 1 || total < 0) {
    throw Error(Errc::invalid_config, "average needs count >= 1, total >= 0");
  }
}

long long ExactAverage::tenths() const noexcept {
  // Half-up at the second decimal: floor(10*total/count + 1/2).
  return (20 * total_ + count_) / (2 * count_);
}

std::string ExactAverage::display() const {
  const long long value = tenths();
  if (value % 10 == 0) return std::to_string(value / 10);
  return std::to_string(value / 10) + "." + std::to_string(value % 10);
}

bool operator==(const ExactAverage& a, const ExactAverage& b) {
  return static_cast<__int128>(a.total_) * b.count_ ==
         static_cast<__int128>(b.total_) * a.count_;
}

bool operator<(const ExactAverage& a, const ExactAverage& b) {
  return static_cast<__int128>(a.total_) * b.count_ <
         static_cast<__int128>(b.total_) * a.count_;
}

MetricsReport compute_metrics(const Workload& workload,
                              const Schedule& schedule) {
  ValidationReport validation = validate_schedule(workload, schedule);
  if (!validation.ok()) {
    throw Error(Errc::invalid_schedule,
                "schedule fails validation: " +
                    validation.violations.front().message);
  }

  MetricsReport report;
  report.algorithm = schedule.algorithm;
  report.params = schedule.params;
  report.workload_fingerprint = workload.fingerprint();
  if (auto seed = workload.seed()) {
    report.workload_origin = "generated(seed=" + std::to_string(*seed) + ")";
  } else {
    report.workload_origin = "manual";
  }

  report.per_process.reserve(workload.size());
  for (const ProcessSpec& process : workload.processes()) {
    const Tick turnaround = schedule.completions.at(process.pid());
    report.per_process.push_back({process.pid(), process.burst(), turnaround,
                                  turnaround - process.burst()});
  }
  std::sort(report.per_process.begin(), report.per_process.end(),
            [](const ProcessMetrics& a, const ProcessMetrics& b) {
              return a.pid < b.pid;
            });

  long long turnaround_sum = 0;
  long long waiting_sum = 0;
  for (const ProcessMetrics& metrics : report.per_process) {
    turnaround_sum += metrics.turnaround;
    waiting_sum += metrics.waiting;
  }
  const long long n = static_cast<long long>(workload.size());
  report.avg_turnaround = ExactAverage(turnaround_sum, n);
  report.avg_waiting = ExactAverage(waiting_sum, n);
  report.context_switches = dispatch_count(schedule);
  return report;
}

namespace {

std::string column_label(const MetricsReport& report) {
  return to_string(report.algorithm);
}

ComparisonTable::Row make_row(std::string label,
                              std::vector<std::string> values,
                              const std::vector<std::size_t>& min_indices,
                              std::size_t count) {
  ComparisonTable::Row row;
  row.label = std::move(label);
  row.values = std::move(values);
  row.minimal.assign(count, false);
  for (std::size_t index : min_indices) row.minimal[index] = true;
  return row;
}

template <typename Value, typename Less>
std::vector<std::size_t> minima(const std::vector<Value>& values, Less less) {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || less(values[i], values[indices.front()])) {
      indices.assign(1, i);
    } else if (!less(values[indices.front()], values[i])) {
      indices.push_back(i);
    }
  }
  return indices;
}

}  // namespace

ComparisonTable compare(const std::vector<MetricsReport>& reports) {
  if (reports.empty()) {
    throw Error(Errc::invalid_config, "nothing to compare");
  }
  for (const MetricsReport& report : reports) {
    if (report.workload_fingerprint != reports.front().workload_fingerprint) {
      throw Error(Errc::mixed_workloads,
                  "reports come from different workloads (fingerprint " +
                      report.workload_fingerprint + " vs " +
                      reports.front().workload_fingerprint + ")");
    }
  }

  ComparisonTable table;
  std::vector<long long> switches;
  std::vector<ExactAverage> turnarounds;
  std::vector<ExactAverage> waits;
  std::vector<std::string> switch_text;
  std::vector<std::string> turnaround_text;
  std::vector<std::string> waiting_text;
  for (const MetricsReport& report : reports) {
    table.columns.push_back(column_label(report));
    switches.push_back(report.context_switches);
    turnarounds.push_back(report.avg_turnaround);
    waits.push_back(report.avg_waiting);
    switch_text.push_back(std::to_string(report.context_switches));
    turnaround_text.push_back(report.avg_turnaround.display());
    waiting_text.push_back(report.avg_waiting.display());
  }
  auto less_ll = [](long long a, long long b) { return a < b; };
  auto less_avg = [](const ExactAverage& a, const ExactAverage& b) {
    return a < b;
  };
  table.context_switches =
      make_row("context switch", std::move(switch_text),
               minima(switches, less_ll), reports.size());
  table.turnaround =
      make_row("turnaround time", std::move(turnaround_text),
               minima(turnarounds, less_avg), reports.size());
  table.waiting = make_row("waiting time", std::move(waiting_text),
                           minima(waits, less_avg), reports.size());
  return table;
}

std::string report_to_table(const MetricsReport& report) {
  std::ostringstream out;
  out << "== " << to_string(report.algorithm);
  if (const std::string label = report.params.label(); !label.empty()) {
    out << " (" << label << ")";
  }
  out << " ==\n";
  out << "workload: " << report.per_process.size()
      << " processes, origin " << report.workload_origin << ", fingerprint "
      << report.workload_fingerprint << "\n";
  out << std::setw(6) << "pid" << std::setw(8) << "burst" << std::setw(12)
      << "turnaround" << std::setw(10) << "waiting" << "\n";
  for (const ProcessMetrics& metrics : report.per_process) {
    out << std::setw(6) << metrics.pid << std::setw(8) << metrics.burst
        << std::setw(12) << metrics.turnaround << std::setw(10)
        << metrics.waiting << "\n";
  }
  out << "avg turnaround:   " << report.avg_turnaround.display() << "\n";
  out << "avg waiting:      " << report.avg_waiting.display() << "\n";
  out << "context switches: " << report.context_switches << "\n";
  return out.str();
}

std::string report_to_csv(const MetricsReport& report) {
  std::ostringstream out;
  out << "algorithm," << to_string(report.algorithm) << "\n";
  out << "pid,bt,tat,wt\n";
  for (const ProcessMetrics& metrics : report.per_process) {
    out << metrics.pid << ',' << metrics.burst << ',' << metrics.turnaround
        << ',' << metrics.waiting << "\n";
  }
  out << "\nmetric,value\n";
  out << "att," << report.avg_turnaround.display() << "\n";
  out << "awt," << report.avg_waiting.display() << "\n";
  out << "cs," << report.context_switches << "\n";
  out << "origin," << report.workload_origin << "\n";
  out << "fingerprint," << report.workload_fingerprint << "\n";
  return out.str();
}

namespace {

nlohmann::ordered_json report_json(const MetricsReport& report) {
  nlohmann::ordered_json doc;
  doc["algorithm"] = to_string(report.algorithm);
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  if (report.params.quantum) params["q"] = *report.params.quantum;
  if (report.params.initial_quantum) {
    params["k"] = *report.params.initial_quantum;
  }
  if (report.params.growth_factor) {
    params["F"] = *report.params.growth_factor;
  }
  doc["params"] = std::move(params);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ProcessMetrics& metrics : report.per_process) {
    rows.push_back({{"pid", metrics.pid},
                    {"burst", metrics.burst},
                    {"turnaround", metrics.turnaround},
                    {"waiting", metrics.waiting}});
  }
  doc["per_process"] = std::move(rows);
  doc["avg_turnaround"] = report.avg_turnaround.display();
  doc["avg_waiting"] = report.avg_waiting.display();
  doc["context_switches"] = report.context_switches;
  doc["workload_fingerprint"] = report.workload_fingerprint;
  doc["workload_origin"] = report.workload_origin;
  return doc;
}

nlohmann::ordered_json comparison_json(const ComparisonTable& table) {
  nlohmann::ordered_json doc;
  doc["columns"] = table.columns;
  auto row_json = [&table](const ComparisonTable::Row& row) {
    nlohmann::ordered_json out;
    out["criteria"] = row.label;
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    nlohmann::ordered_json min = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      values[table.columns[i]] = row.values[i];
      if (row.minimal[i]) min.push_back(table.columns[i]);
    }
    out["values"] = std::move(values);
    out["min"] = std::move(min);
    return out;
  };
  doc["rows"] = nlohmann::ordered_json::array(
      {row_json(table.context_switches), row_json(table.turnaround),
       row_json(table.waiting)});
  return doc;
}

}  // namespace

std::string report_to_json(const MetricsReport& report) {
  return report_json(report).dump(2) + "\n";
}

std::string comparison_to_table(const ComparisonTable& table) {
  std::ostringstream out;
  auto edge = [&out, &table](const std::string& label,
                             const std::vector<std::string>& cells,
                             const std::vector<bool>& marks) {
    out << std::left << std::setw(18) << label << std::right;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::string cell = cells[i];
      if (!marks.empty() && marks[i]) cell += "*";
      out << std::setw(10) << cell;
    }
    out << "\n";
  };
  edge("criteria", table.columns, {});
  edge(table.context_switches.label, table.context_switches.values,
       table.context_switches.minimal);
  edge(table.turnaround.label, table.turnaround.values,
       table.turnaround.minimal);
  edge(table.waiting.label, table.waiting.values, table.waiting.minimal);
  out << "(* marks the best value in each row)\n";
  return out.str();
}

std::string comparison_to_csv(const ComparisonTable& table) {
  std::ostringstream out;
  out << "criteria";
  for (const std::string& column : table.columns) out << ',' << column;
  out << ",min\n";
  auto row = [&out, &table](const ComparisonTable::Row& data,
                            const std::string& key) {
    out << key;
    for (const std::string& value : data.values) out << ',' << value;
    out << ',';
    bool first = true;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      if (!data.minimal[i]) continue;
      if (!first) out << '|';
      out << table.columns[i];
      first = false;
    }
    out << "\n";
  };
  row(table.context_switches, "context_switch");
  row(table.turnaround, "turnaround_time");
  row(table.waiting, "waiting_time");
  return out.str();
}

std::string comparison_to_json(const ComparisonTable& table) {
  return comparison_json(table).dump(2) + "\n";
}

}  // namespace schedsim
