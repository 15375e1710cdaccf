// Acceptance suite: one check per release criterion, one PASS/FAIL line
// each. Run with no arguments for the full suite or with criterion numbers
// (1-8) for a subset. Exits nonzero if any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "schedsim/algorithms.hpp"
#include "schedsim/metrics.hpp"
#include "test_data.hpp"

using namespace schedsim;
using namespace schedsim::testing;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<void(std::ostream&)> body;  // streams failure details
};

struct FourRuns {
  std::vector<Schedule> schedules;  // fcfs, sjf, rr, omdrrs
  std::vector<MetricsReport> reports;
};

FourRuns reference_runs(const Workload& workload, Tick quantum,
                        Tick initial_quantum) {
  FourRuns runs;
  runs.schedules.push_back(run_fcfs(workload));
  runs.schedules.push_back(run_sjf(workload));
  runs.schedules.push_back(run_rr(workload, quantum));
  runs.schedules.push_back(run_omdrrs(workload, initial_quantum, 2));
  for (const Schedule& schedule : runs.schedules) {
    runs.reports.push_back(compute_metrics(workload, schedule));
  }
  return runs;
}

void check(std::ostream& fail, bool ok, const std::string& detail) {
  if (!ok) fail << "    " << detail << "\n";
}

template <typename T>
std::string seq(const std::vector<T>& values) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ",";
    out << values[i];
  }
  out << ")";
  return out.str();
}

void check_turnaround_column(std::ostream& fail, const std::string& run,
                             const Workload& workload,
                             const Schedule& schedule,
                             const std::vector<Tick>& expected_tat) {
  for (std::size_t i = 0; i < expected_tat.size(); ++i) {
    const int pid = static_cast<int>(i + 1);
    const Tick tat = schedule.completions.at(pid);
    const Tick wt = tat - workload.processes()[i].burst();
    const Tick expected_wt =
        expected_tat[i] - workload.processes()[i].burst();
    check(fail, tat == expected_tat[i],
          run + " P" + std::to_string(pid) + " turnaround: computed " +
              std::to_string(tat) + ", required " +
              std::to_string(expected_tat[i]));
    check(fail, wt == expected_wt,
          run + " P" + std::to_string(pid) + " waiting: computed " +
              std::to_string(wt) + ", required " +
              std::to_string(expected_wt));
  }
}

// --- criteria -------------------------------------------------------------

void criterion1(std::ostream& fail) {
  const auto start = std::chrono::steady_clock::now();
  const Workload t2 = make_workload(kT2Bursts);
  const FourRuns runs = reference_runs(t2, 6, 6);
  check_turnaround_column(fail, "fcfs", t2, runs.schedules[0], kT2FcfsTat);
  check_turnaround_column(fail, "sjf", t2, runs.schedules[1], kT2SjfTat);
  check_turnaround_column(fail, "rr(q=6)", t2, runs.schedules[2], kT2RrTat);
  check_turnaround_column(fail, "omdrrs(k=6,F=2)", t2, runs.schedules[3],
                          kT2DynTat);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  check(fail, elapsed < 1.0,
        "runtime " + std::to_string(elapsed) + "s exceeds 1s");
}

void criterion2(std::ostream& fail) {
  const Workload t2 = make_workload(kT2Bursts);
  const FourRuns runs = reference_runs(t2, 6, 6);

  const std::vector<long long> required_cs{5, 5, 15, 10};
  const std::vector<std::string> required_att{"48", "32.6", "51.8", "36.2"};
  const std::vector<std::string> required_awt{"32.8", "17.4", "36.6", "21"};
  for (std::size_t i = 0; i < runs.reports.size(); ++i) {
    const MetricsReport& report = runs.reports[i];
    const std::string column = to_string(report.algorithm);
    check(fail, report.context_switches == required_cs[i],
          column + " context switches: computed " +
              std::to_string(report.context_switches) + ", required " +
              std::to_string(required_cs[i]) +
              (i == 3 ? " (the published figure; the trace forced by the "
                        "turnaround cells has 11 allocations, see "
                        "tools/schedsim/data/errata.csv)"
                      : ""));
    check(fail, report.avg_turnaround.display() == required_att[i],
          column + " avg turnaround: computed " +
              report.avg_turnaround.display() + ", required " +
              required_att[i]);
    check(fail, report.avg_waiting.display() == required_awt[i],
          column + " avg waiting: computed " + report.avg_waiting.display() +
              ", required " + required_awt[i]);
  }
}

void criterion3(std::ostream& fail) {
  const Workload t1 = make_workload(kT1Bursts);
  const FourRuns runs = reference_runs(t1, 5, 5);
  check_turnaround_column(fail, "fcfs", t1, runs.schedules[0], kT1FcfsTat);
  check_turnaround_column(fail, "sjf", t1, runs.schedules[1], kT1SjfTat);
  check_turnaround_column(fail, "rr(q=5)", t1, runs.schedules[2], kT1RrTat);
  check(fail, runs.reports[2].context_switches == 38,
        "rr(q=5) context switches: computed " +
            std::to_string(runs.reports[2].context_switches) +
            ", required 38");

  // The dynamic column must deviate from the published values on exactly
  // the four documented errata cells and nowhere else.
  const std::map<int, std::pair<Tick, Tick>> expected_errata{
      {8, {150, 160}},   // computed vs published turnaround
      {10, {160, 165}},
  };
  for (std::size_t i = 0; i < kT1Bursts.size(); ++i) {
    const int pid = static_cast<int>(i + 1);
    const Tick computed = runs.schedules[3].completions.at(pid);
    const Tick published = kT1DynTatPublished[i];
    const auto errata = expected_errata.find(pid);
    if (errata != expected_errata.end()) {
      check(fail, computed == errata->second.first,
            "omdrrs P" + std::to_string(pid) + " turnaround: computed " +
                std::to_string(computed) + ", expected errata value " +
                std::to_string(errata->second.first));
      check(fail, published == errata->second.second,
            "embedded published value drifted for P" + std::to_string(pid));
      check(fail, computed != published,
            "omdrrs P" + std::to_string(pid) +
                " unexpectedly matches the published errata cell");
    } else {
      check(fail, computed == published,
            "omdrrs P" + std::to_string(pid) + " turnaround: computed " +
                std::to_string(computed) + ", required " +
                std::to_string(published));
    }
  }
  check(fail, runs.reports[3].context_switches == 25,
        "omdrrs(k=5,F=2) context switches: computed " +
            std::to_string(runs.reports[3].context_switches) +
            ", required 25 (published 27 is a documented erratum)");
}

void criterion4(std::ostream& fail) {
  const Workload t1 = make_workload(kT1Bursts);
  const FourRuns runs = reference_runs(t1, 5, 5);
  const std::vector<std::string> att{"83", "76.3", "127.4", "104.8"};
  const std::vector<std::string> awt{"65.9", "59.2", "110.3", "87.7"};
  for (std::size_t i = 0; i < runs.reports.size(); ++i) {
    const std::string column = to_string(runs.reports[i].algorithm);
    const std::string suffix =
        i == 3 ? " (errata-derived: published 106.3/89.2 average the two "
                 "infeasible turnaround cells)"
               : "";
    check(fail, runs.reports[i].avg_turnaround.display() == att[i],
          column + " avg turnaround: computed " +
              runs.reports[i].avg_turnaround.display() + ", required " +
              att[i] + suffix);
    check(fail, runs.reports[i].avg_waiting.display() == awt[i],
          column + " avg waiting: computed " +
              runs.reports[i].avg_waiting.display() + ", required " + awt[i] +
              suffix);
  }
}

void criterion5(std::ostream& fail) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(0x5EED5);
  for (int i = 0; i < 200; ++i) {
    const GeneratorConfig config{
        .count = static_cast<long long>(rng() % 6 + 3),  // 3..8 processes
        .burst_min = 1,
        .burst_max = static_cast<Tick>(rng() % 40 + 1),
        .seed = rng()};
    const Workload workload = generate_workload(config);
    const Schedule schedule = run_sjf(workload);
    long long waiting = 0;
    std::vector<Tick> bursts;
    for (const ProcessSpec& process : workload.processes()) {
      waiting += schedule.completions.at(process.pid()) - process.burst();
      bursts.push_back(process.burst());
    }
    const long long best = brute_force_min_total_waiting(bursts);
    if (waiting != best) {
      check(fail, false,
            "workload seed " + std::to_string(config.seed) +
                ": sjf total waiting " + std::to_string(waiting) +
                " but brute-force minimum is " + std::to_string(best));
      return;
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  check(fail, elapsed < 30.0,
        "runtime " + std::to_string(elapsed) + "s exceeds 30s");
}

void criterion6(std::ostream& fail) {
  std::mt19937_64 rng(0x5EED6);
  for (int i = 0; i < 200; ++i) {
    const GeneratorConfig config{
        .count = static_cast<long long>(rng() % 12 + 1),
        .burst_min = 1,
        .burst_max = static_cast<Tick>(rng() % 60 + 1),
        .seed = rng()};
    const Workload workload = generate_workload(config);

    const Schedule fcfs = run_fcfs(workload);
    const Schedule rr = run_rr(workload, workload.max_burst());
    if (rr.slices != fcfs.slices || rr.completions != fcfs.completions) {
      check(fail, false,
            "rr(q=max burst) differs from fcfs for seed " +
                std::to_string(config.seed));
      return;
    }

    const Schedule sjf = run_sjf(workload);
    const Schedule dyn = run_omdrrs(workload, workload.max_burst(), 2);
    if (dyn.completions != sjf.completions) {
      check(fail, false,
            "omdrrs(k=max burst, F=2) completions differ from sjf for seed " +
                std::to_string(config.seed));
      return;
    }
  }
}

void criterion7(std::ostream& fail) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(0x5EED7);
  for (int i = 0; i < 1000; ++i) {
    const GeneratorConfig config{
        .count = static_cast<long long>(rng() % 15 + 1),
        .burst_min = 1,
        .burst_max = static_cast<Tick>(rng() % 50 + 1),
        .seed = rng()};
    const Workload workload = generate_workload(config);
    Schedule schedule;
    std::string name;
    switch (i % 4) {
      case 0:
        schedule = run_fcfs(workload);
        name = "fcfs";
        break;
      case 1:
        schedule = run_sjf(workload);
        name = "sjf";
        break;
      case 2:
        schedule =
            run_rr(workload,
                   static_cast<Tick>(rng() % (workload.max_burst() + 3) + 1));
        name = "rr";
        break;
      default:
        schedule = run_omdrrs(
            workload,
            static_cast<Tick>(rng() % (workload.max_burst() + 3) + 1),
            static_cast<Tick>(rng() % 4 + 2));
        name = "omdrrs";
        break;
    }
    const ValidationReport report = validate_schedule(workload, schedule);
    if (!report.ok()) {
      check(fail, false,
            name + " trace for seed " + std::to_string(config.seed) +
                " fails validation: " + report.violations.front().message);
      return;
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  check(fail, elapsed < 60.0,
        "runtime " + std::to_string(elapsed) + "s exceeds 60s");
}

void criterion8(std::ostream& fail) {
  // Two independent executions of each full pipeline must serialize to
  // identical bytes.
  auto pipeline = [](std::uint64_t seed) {
    const Workload workload = generate_workload(
        {.count = 7, .burst_min = 2, .burst_max = 19, .seed = seed});
    const Schedule schedule = run_omdrrs(workload, 4, 2);
    return serialize_workload(workload, WorkloadFormat::csv) +
           serialize_workload(workload, WorkloadFormat::json) +
           schedule_to_json(schedule) +
           report_to_json(compute_metrics(workload, schedule));
  };
  for (std::uint64_t seed : {1ull, 42ull, 31337ull}) {
    if (pipeline(seed) != pipeline(seed)) {
      check(fail, false,
            "pipeline output differs across runs for seed " +
                std::to_string(seed));
      return;
    }
  }

  const Workload t2 = make_workload(kT2Bursts);
  check(fail,
        schedule_to_json(run_rr(t2, 6)) == schedule_to_json(run_rr(t2, 6)),
        "rr schedule export differs across runs");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "five-process reference table, every turnaround/waiting cell exact",
       criterion1},
      {2, "five-process aggregates: context switches and averages exact",
       criterion2},
      {3, "ten-process reference table exact up to the four errata cells",
       criterion3},
      {4, "ten-process aggregate averages exact (dynamic column "
          "errata-derived)",
       criterion4},
      {5, "sjf attains the brute-force minimum average waiting time "
          "(200 workloads)",
       criterion5},
      {6, "degeneration: rr(q=max)=fcfs slice-for-slice, omdrrs(k=max)=sjf "
          "completions (200 workloads)",
       criterion6},
      {7, "validity: 1000 random traces pass schedule validation",
       criterion7},
      {8, "determinism: repeated runs serialize to identical bytes",
       criterion8},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    selected.insert(std::atoi(argv[i]));
  }

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    if (!selected.empty() && !selected.count(criterion.id)) continue;
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(detail);
    } catch (const std::exception& error) {
      detail << "    unexpected exception: " << error.what() << "\n";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool passed = detail.str().empty();
    failures += passed ? 0 : 1;
    std::printf("[%s] C%d %s (%.3fs)\n", passed ? "PASS" : "FAIL",
                criterion.id, criterion.title.c_str(), elapsed);
    if (!passed) std::fputs(detail.str().c_str(), stdout);
  }
  return failures == 0 ? 0 : 1;
}
