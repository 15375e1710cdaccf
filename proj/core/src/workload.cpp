#include "schedsim/workload.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_set>

#include "nlohmann/json.hpp"

namespace schedsim {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::malformed_input: return "malformed input";
    case Errc::duplicate_pid: return "duplicate pid";
    case Errc::non_positive_burst: return "non-positive burst";
    case Errc::empty_workload: return "empty workload";
    case Errc::invalid_config: return "invalid config";
    case Errc::invalid_schedule: return "invalid schedule";
    case Errc::mixed_workloads: return "mixed workloads";
  }
  return "unknown error";
}

Error::Error(Errc code, const std::string& message,
             std::optional<long long> row)
    : std::runtime_error(message), code_(code), row_(row) {}

ProcessSpec::ProcessSpec(int pid, Tick burst) : pid_(pid), burst_(burst) {
  if (pid < 1) {
    throw Error(Errc::malformed_input,
                "pid must be positive, got " + std::to_string(pid));
  }
  if (burst < 1) {
    throw Error(Errc::non_positive_burst,
                "burst must be at least 1 tick, got " + std::to_string(burst));
  }
}

namespace {

// FNV-1a 64 over the decimal pid/burst sequence.
std::string fingerprint_of(const std::vector<ProcessSpec>& processes) {
  std::uint64_t hash = 14695981039346656037ull;
  auto mix = [&hash](const std::string& text) {
    for (unsigned char byte : text) {
      hash ^= byte;
      hash *= 1099511628211ull;
    }
  };
  for (const ProcessSpec& process : processes) {
    mix(std::to_string(process.pid()) + ":" +
        std::to_string(process.burst()) + ";");
  }
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

}  // namespace

Workload::Workload(std::vector<ProcessSpec> processes, WorkloadOrigin origin,
                   std::uint64_t seed)
    : processes_(std::move(processes)),
      origin_(origin),
      seed_(seed),
      total_burst_(0),
      max_burst_(0) {
  if (processes_.empty()) {
    throw Error(Errc::empty_workload, "workload has no processes");
  }
  std::unordered_set<int> seen;
  seen.reserve(processes_.size());
  constexpr Tick tick_limit = std::numeric_limits<Tick>::max();
  for (std::size_t i = 0; i < processes_.size(); ++i) {
    const ProcessSpec& process = processes_[i];
    if (!seen.insert(process.pid()).second) {
      throw Error(Errc::duplicate_pid,
                  "pid " + std::to_string(process.pid()) +
                      " appears more than once",
                  static_cast<long long>(i + 1));
    }
    if (total_burst_ > tick_limit - process.burst()) {
      throw Error(Errc::invalid_config, "total burst overflows the tick range");
    }
    total_burst_ += process.burst();
    max_burst_ = std::max(max_burst_, process.burst());
  }
  fingerprint_ = fingerprint_of(processes_);
}

Workload Workload::manual(std::vector<ProcessSpec> processes) {
  return Workload(std::move(processes), WorkloadOrigin::manual, 0);
}

Workload Workload::generated(std::vector<ProcessSpec> processes,
                             std::uint64_t seed) {
  return Workload(std::move(processes), WorkloadOrigin::generated, seed);
}

std::optional<std::uint64_t> Workload::seed() const noexcept {
  if (origin_ == WorkloadOrigin::generated) return seed_;
  return std::nullopt;
}

namespace {

Tick parse_tick_field(std::string_view field, long long row,
                      const char* name) {
  std::size_t begin = field.find_first_not_of(" \t");
  std::size_t end = field.find_last_not_of(" \t");
  if (begin == std::string_view::npos) {
    throw Error(Errc::malformed_input,
                "row " + std::to_string(row) + ": empty " + name + " field",
                row);
  }
  field = field.substr(begin, end - begin + 1);
  Tick value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(Errc::malformed_input,
                "row " + std::to_string(row) + ": " + name +
                    " is not an integer: '" + std::string(field) + "'",
                row);
  }
  return value;
}

ProcessSpec make_process(Tick pid, Tick burst, long long row) {
  if (pid < 1 || pid > std::numeric_limits<int>::max()) {
    throw Error(Errc::malformed_input,
                "row " + std::to_string(row) + ": pid out of range", row);
  }
  if (burst < 1) {
    throw Error(Errc::non_positive_burst,
                "row " + std::to_string(row) +
                    ": burst must be at least 1 tick, got " +
                    std::to_string(burst),
                row);
  }
  return ProcessSpec(static_cast<int>(pid), burst);
}

Workload parse_csv(std::string_view text) {
  std::vector<ProcessSpec> processes;
  std::size_t pos = 0;
  bool header_seen = false;
  long long data_row = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (!header_seen) {
      if (line != "pid,burst") {
        throw Error(Errc::malformed_input,
                    "expected header 'pid,burst', got '" + std::string(line) +
                        "'");
      }
      header_seen = true;
      continue;
    }
    ++data_row;
    std::size_t comma = line.find(',');
    if (comma == std::string_view::npos ||
        line.find(',', comma + 1) != std::string_view::npos) {
      throw Error(Errc::malformed_input,
                  "row " + std::to_string(data_row) +
                      ": expected two comma-separated fields",
                  data_row);
    }
    Tick pid = parse_tick_field(line.substr(0, comma), data_row, "pid");
    Tick burst = parse_tick_field(line.substr(comma + 1), data_row, "burst");
    processes.push_back(make_process(pid, burst, data_row));
  }
  if (!header_seen) {
    throw Error(Errc::malformed_input, "missing header 'pid,burst'");
  }
  if (processes.empty()) {
    throw Error(Errc::empty_workload, "workload file lists no processes");
  }
  return Workload::manual(std::move(processes));
}

Workload parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    throw Error(Errc::malformed_input,
                std::string("invalid JSON: ") + error.what());
  }
  if (!doc.is_array()) {
    throw Error(Errc::malformed_input, "expected a top-level JSON array");
  }
  std::vector<ProcessSpec> processes;
  long long row = 0;
  for (const auto& entry : doc) {
    ++row;
    if (!entry.is_object() || entry.size() != 2 || !entry.contains("pid") ||
        !entry.contains("burst")) {
      throw Error(Errc::malformed_input,
                  "row " + std::to_string(row) +
                      ": expected an object with exactly 'pid' and 'burst'",
                  row);
    }
    if (!entry["pid"].is_number_integer() ||
        !entry["burst"].is_number_integer()) {
      throw Error(Errc::malformed_input,
                  "row " + std::to_string(row) +
                      ": 'pid' and 'burst' must be integers",
                  row);
    }
    processes.push_back(make_process(entry["pid"].get<Tick>(),
                                     entry["burst"].get<Tick>(), row));
  }
  if (processes.empty()) {
    throw Error(Errc::empty_workload, "workload array is empty");
  }
  return Workload::manual(std::move(processes));
}

// Rejection-sampled uniform draw over [lo, hi]: fixed mapping on top of
// mt19937_64, so the same seed yields the same sequence everywhere.
Tick draw_uniform(std::mt19937_64& rng, Tick lo, Tick hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t overflow =
      (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
  std::uint64_t sample = rng();
  if (overflow != 0) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - overflow;
    while (sample > limit) sample = rng();
  }
  return lo + static_cast<Tick>(sample % span);
}

}  // namespace

Workload parse_workload(std::string_view text, WorkloadFormat format) {
  return format == WorkloadFormat::csv ? parse_csv(text) : parse_json(text);
}

Workload generate_workload(const GeneratorConfig& config) {
  if (config.count < 1) {
    throw Error(Errc::invalid_config, "count must be at least 1");
  }
  if (config.count > std::numeric_limits<int>::max()) {
    throw Error(Errc::invalid_config, "count out of range");
  }
  if (config.burst_min < 1) {
    throw Error(Errc::invalid_config, "burst_min must be at least 1");
  }
  if (config.burst_min > config.burst_max) {
    throw Error(Errc::invalid_config, "burst_min must not exceed burst_max");
  }
  std::mt19937_64 rng(config.seed);
  std::vector<ProcessSpec> processes;
  processes.reserve(static_cast<std::size_t>(config.count));
  for (long long pid = 1; pid <= config.count; ++pid) {
    processes.emplace_back(static_cast<int>(pid),
                           draw_uniform(rng, config.burst_min,
                                        config.burst_max));
  }
  return Workload::generated(std::move(processes), config.seed);
}

std::string serialize_workload(const Workload& workload,
                               WorkloadFormat format) {
  if (format == WorkloadFormat::csv) {
    std::ostringstream out;
    out << "pid,burst\n";
    for (const ProcessSpec& process : workload.processes()) {
      out << process.pid() << ',' << process.burst() << '\n';
    }
    return out.str();
  }
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const ProcessSpec& process : workload.processes()) {
    doc.push_back({{"pid", process.pid()}, {"burst", process.burst()}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace schedsim
