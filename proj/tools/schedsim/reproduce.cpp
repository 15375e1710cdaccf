#include "reproduce.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "reference_data.hpp"
#include "schedsim/algorithms.hpp"
#include "schedsim/metrics.hpp"

namespace schedsim::cli {

std::optional<TableId> parse_table_id(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "T1") return TableId::t1;
  if (upper == "T2") return TableId::t2;
  if (upper == "T3") return TableId::t3;
  if (upper == "T4") return TableId::t4;
  return std::nullopt;
}

const char* to_string(TableId table) {
  switch (table) {
    case TableId::t1: return "T1";
    case TableId::t2: return "T2";
    case TableId::t3: return "T3";
    case TableId::t4: return "T4";
  }
  return "?";
}

namespace {

std::vector<std::vector<std::string>> parse_rows(const char* text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = line.find(',', pos);
      fields.push_back(line.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

// Generic labeled grid: a header row plus one label + cells per data row.
struct Grid {
  std::vector<std::string> header;
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;

  std::string render() const {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      widths[c] = header[c].size();
    }
    for (const auto& [label, cells] : rows) {
      widths[0] = std::max(widths[0], label.size());
      for (std::size_t c = 0; c < cells.size(); ++c) {
        widths[c + 1] = std::max(widths[c + 1], cells[c].size());
      }
    }
    std::ostringstream out;
    auto put = [&out, &widths](std::size_t column, const std::string& text) {
      out << std::left << std::setw(static_cast<int>(widths[column]) + 2)
          << text;
    };
    for (std::size_t c = 0; c < header.size(); ++c) put(c, header[c]);
    out << '\n';
    for (const auto& [label, cells] : rows) {
      put(0, label);
      for (std::size_t c = 0; c < cells.size(); ++c) put(c + 1, cells[c]);
      out << '\n';
    }
    return out.str();
  }
};

struct PinnedParams {
  Tick quantum;
  Tick initial_quantum;
  Tick growth_factor;
};

const char* table_csv(TableId table) {
  switch (table) {
    case TableId::t1: return kTable1Csv;
    case TableId::t2: return kTable2Csv;
    case TableId::t3: return kTable3Csv;
    case TableId::t4: return kTable4Csv;
  }
  return "";
}

bool is_aggregate(TableId table) {
  return table == TableId::t3 || table == TableId::t4;
}

// T3 aggregates the T1 runs, T4 the T2 runs.
TableId workload_table(TableId table) {
  switch (table) {
    case TableId::t1:
    case TableId::t3: return TableId::t1;
    default: return TableId::t2;
  }
}

PinnedParams pinned_params(TableId table) {
  return workload_table(table) == TableId::t1 ? PinnedParams{5, 5, 2}
                                              : PinnedParams{6, 6, 2};
}

Workload workload_from_csv(const char* text) {
  std::vector<ProcessSpec> processes;
  for (const auto& fields : parse_rows(text)) {
    processes.emplace_back(std::stoi(fields.at(0)),
                           std::stoll(fields.at(1)));
  }
  return Workload::manual(std::move(processes));
}

struct ReferenceRuns {
  Workload workload;
  std::vector<MetricsReport> reports;  // fcfs, sjf, rr, dynamic
};

ReferenceRuns run_pinned(TableId table) {
  const PinnedParams params = pinned_params(table);
  Workload workload = workload_from_csv(table_csv(workload_table(table)));
  std::vector<MetricsReport> reports;
  reports.push_back(compute_metrics(workload, run_fcfs(workload)));
  reports.push_back(compute_metrics(workload, run_sjf(workload)));
  reports.push_back(compute_metrics(workload, run_rr(workload, params.quantum)));
  reports.push_back(compute_metrics(
      workload,
      run_omdrrs(workload, params.initial_quantum, params.growth_factor)));
  return {std::move(workload), std::move(reports)};
}

Grid computed_per_process(const ReferenceRuns& runs) {
  Grid grid;
  grid.header = {"pid",    "burst",  "fcfs_tat", "fcfs_wt", "sjf_tat",
                 "sjf_wt", "rr_tat", "rr_wt",    "dyn_tat", "dyn_wt"};
  for (std::size_t i = 0; i < runs.workload.size(); ++i) {
    const int pid = runs.reports.front().per_process[i].pid;
    std::vector<std::string> cells;
    cells.push_back(
        std::to_string(runs.reports.front().per_process[i].burst));
    for (const MetricsReport& report : runs.reports) {
      cells.push_back(std::to_string(report.per_process[i].turnaround));
      cells.push_back(std::to_string(report.per_process[i].waiting));
    }
    grid.rows.emplace_back("P" + std::to_string(pid), std::move(cells));
  }
  return grid;
}

Grid computed_aggregate(const ReferenceRuns& runs) {
  Grid grid;
  grid.header = {"criteria", "fcfs", "sjf", "rr", "dyn"};
  std::vector<std::string> cs;
  std::vector<std::string> att;
  std::vector<std::string> awt;
  for (const MetricsReport& report : runs.reports) {
    cs.push_back(std::to_string(report.context_switches));
    att.push_back(report.avg_turnaround.display());
    awt.push_back(report.avg_waiting.display());
  }
  grid.rows.emplace_back("cs", std::move(cs));
  grid.rows.emplace_back("att", std::move(att));
  grid.rows.emplace_back("awt", std::move(awt));
  return grid;
}

Grid reference_grid(TableId table) {
  Grid grid;
  if (is_aggregate(table)) {
    grid.header = {"criteria", "fcfs", "sjf", "rr", "dyn"};
  } else {
    grid.header = {"pid",    "burst",  "fcfs_tat", "fcfs_wt", "sjf_tat",
                   "sjf_wt", "rr_tat", "rr_wt",    "dyn_tat", "dyn_wt"};
  }
  for (const auto& fields : parse_rows(table_csv(table))) {
    std::string label = is_aggregate(table) ? fields.at(0) : "P" + fields.at(0);
    grid.rows.emplace_back(std::move(label),
                           std::vector<std::string>(fields.begin() + 1,
                                                    fields.end()));
  }
  return grid;
}

struct ErrataKey {
  std::string table;
  std::string row;
  std::string column;

  bool operator<(const ErrataKey& other) const {
    return std::tie(table, row, column) <
           std::tie(other.table, other.row, other.column);
  }
};

std::map<ErrataKey, std::pair<std::string, std::string>> errata_index() {
  std::map<ErrataKey, std::pair<std::string, std::string>> index;
  for (const auto& fields : parse_rows(kErrataCsv)) {
    index[{fields.at(0), fields.at(1), fields.at(2)}] = {fields.at(3),
                                                         fields.at(4)};
  }
  return index;
}

std::vector<CellDiff> diff_grids(TableId table, const Grid& computed,
                                 const Grid& reference) {
  const auto errata = errata_index();
  std::vector<CellDiff> diffs;
  // For per-process tables the first cell is the burst column; metrics
  // start after it. Aggregate rows are all metric cells.
  const std::size_t first_metric = is_aggregate(table) ? 0 : 1;
  for (std::size_t r = 0; r < computed.rows.size(); ++r) {
    const auto& [label, cells] = computed.rows[r];
    const auto& reference_cells = reference.rows[r].second;
    for (std::size_t c = first_metric; c < cells.size(); ++c) {
      if (cells[c] == reference_cells[c]) continue;
      CellDiff diff;
      if (is_aggregate(table)) {
        // Entity is the algorithm column, metric is the criteria row.
        diff.row = computed.header[c + 1];
        diff.column = label;
      } else {
        diff.row = label;
        diff.column = computed.header[c + 1];
      }
      diff.published = reference_cells[c];
      diff.computed = cells[c];
      auto hit = errata.find({to_string(table), diff.row, diff.column});
      diff.errata = hit != errata.end() &&
                    hit->second.first == diff.published &&
                    hit->second.second == diff.computed;
      diffs.push_back(std::move(diff));
    }
  }
  return diffs;
}

}  // namespace

Workload reference_workload_t1() { return workload_from_csv(kTable1Csv); }

Workload reference_workload_t2() { return workload_from_csv(kTable2Csv); }

ReproduceResult run_reproduction(TableId table) {
  const ReferenceRuns runs = run_pinned(table);
  const Grid computed = is_aggregate(table) ? computed_aggregate(runs)
                                            : computed_per_process(runs);
  const Grid reference = reference_grid(table);
  ReproduceResult result;
  result.table = table;
  result.diffs = diff_grids(table, computed, reference);

  const PinnedParams params = pinned_params(table);
  std::ostringstream out;
  out << "computed " << to_string(table) << " (rr q=" << params.quantum
      << "; dynamic k=" << params.initial_quantum
      << ", F=" << params.growth_factor << ")\n";
  out << computed.render() << "\n";
  out << "reference " << to_string(table) << "\n";
  out << reference.render() << "\n";
  if (result.diffs.empty()) {
    out << "diff: none\n";
  } else {
    out << "diff (computed vs reference):\n";
    std::size_t annotated = 0;
    for (const CellDiff& diff : result.diffs) {
      out << "  " << diff.row << "/" << diff.column << ": computed "
          << diff.computed << ", reference " << diff.published;
      if (diff.errata) {
        out << "  [errata]";
        ++annotated;
      }
      out << "\n";
    }
    out << result.diffs.size() << " cell(s) differ, " << annotated
        << " annotated as errata (see data/errata.csv)\n";
  }
  result.rendered = out.str();
  return result;
}

int cmd_reproduce(TableId table, std::ostream& out) {
  const ReproduceResult result = run_reproduction(table);
  out << result.rendered;
  if (!result.clean()) {
    out << "FAIL: unexpected mismatches against reference "
        << to_string(table) << "\n";
    return 1;
  }
  return 0;
}

}  // namespace schedsim::cli
