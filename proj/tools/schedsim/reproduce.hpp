#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "schedsim/workload.hpp"

namespace schedsim::cli {

enum class TableId { t1, t2, t3, t4 };

std::optional<TableId> parse_table_id(std::string_view name);
const char* to_string(TableId table);

struct CellDiff {
  std::string row;     // "P8" or "dyn"
  std::string column;  // "dyn_tat", "cs", ...
  std::string published;
  std::string computed;
  bool errata = false;
};

struct ReproduceResult {
  TableId table;
  std::string rendered;         // computed table, reference table, diff
  std::vector<CellDiff> diffs;

  bool clean() const {
    for (const CellDiff& diff : diffs) {
      if (!diff.errata) return false;
    }
    return true;
  }
};

/// Re-runs the embedded reference workload behind `table` with its pinned
/// parameters (T1/T3: q=5, k=5, F=2; T2/T4: q=6, k=6, F=2) and diffs the
/// engine's output against the published values cell by cell. Diffs listed
/// in data/errata.csv are annotated rather than fatal.
ReproduceResult run_reproduction(TableId table);

/// The embedded workloads, for callers that want to re-run them directly.
Workload reference_workload_t1();
Workload reference_workload_t2();

int cmd_reproduce(TableId table, std::ostream& out);

}  // namespace schedsim::cli
