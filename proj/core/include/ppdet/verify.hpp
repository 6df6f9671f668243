#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppdet/numeric.hpp"

namespace ppdet {

/// One verified identity instance. lhs/rhs are kept as exact canonical
/// rationals so a failing report is audit-ready; equal <=> lhs = rhs.
struct IdentityRecord {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  Rational lhs, rhs;
  bool equal = false;
  std::int64_t elapsed_ms = 0;
};

struct VerificationReport {
  std::string suite;
  std::string grid;
  std::vector<IdentityRecord> records;
  std::int64_t total_elapsed_ms = 0;
  bool aborted = false;  // time budget hit; records are a prefix of the grid

  std::size_t checked() const { return records.size(); }
  std::size_t failed() const;
  std::size_t passed() const { return checked() - failed(); }
};

struct SweepOptions {
  long max_n = 4;
  long max_x = 2;
  long max_y = 2;
  int jobs = 0;       // 0 = hardware concurrency
  bool timings = false;  // measure per-record elapsed_ms (off keeps reports
                         // byte-identical across runs)
  std::optional<long> cap;  // series truncation override
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Names: theorem1, thm2, cor3, thm8, thm9, thm10, thm11, thm12, thm13,
/// appendix, all.
std::vector<std::string> suite_names();

/// Runs one suite (or all) over the option grid. Unknown names are
/// rejected. A guard violation inside a grid point is reported as a
/// "<suite>.guard" record carrying the message, not as a fatal error.
VerificationReport run_suite(const std::string& name, const SweepOptions& opts);

std::string render_table(const VerificationReport& report);
std::string render_json(const VerificationReport& report);
std::string render_csv(const VerificationReport& report);

}  // namespace ppdet
