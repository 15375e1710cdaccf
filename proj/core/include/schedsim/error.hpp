#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace schedsim {

enum class Errc {
  malformed_input,
  duplicate_pid,
  non_positive_burst,
  empty_workload,
  invalid_config,
  invalid_schedule,
  mixed_workloads,
};

const char* to_string(Errc code);

/// Thrown when input breaks a documented contract. `row` is the 1-based
/// data row (CSV) or array index (JSON) for errors that can name one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<long long> row = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<long long> row() const noexcept { return row_; }

 private:
  Errc code_;
  std::optional<long long> row_;
};

}  // namespace schedsim
