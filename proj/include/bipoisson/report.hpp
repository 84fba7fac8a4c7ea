#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bipoisson/polynomial.hpp"

namespace bipoisson {

struct Witness {
  std::string location;  // e.g. "(S[1,2], S[2,1], S0)"
  Polynomial residual;   // nonzero
};

/// Verdict of one identity check. A failing report always carries the
/// witness of its first (lexicographically smallest) violation; composite
/// reports copy the witness of their first failing child.
struct Report {
  std::string identity;
  bool passed = true;
  std::size_t checked = 0;
  std::optional<Witness> witness;
  std::string note;
  std::vector<Report> children;
  std::chrono::duration<double, std::milli> elapsed{};

  /// Records a violation; only the first one is kept as the witness.
  void fail(std::string location, Polynomial residual);
  /// Appends a sub-report and folds its status into this one.
  void add_child(Report child);

  nlohmann::ordered_json to_json(bool with_timing = false) const;
  /// Human-readable, one line per (sub-)report.
  std::string to_text(bool with_timing = false, int indent = 0) const;
};

/// RAII stopwatch writing into Report::elapsed.
class ReportTimer {
 public:
  explicit ReportTimer(Report& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() { report_.elapsed = std::chrono::steady_clock::now() - start_; }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  Report& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace bipoisson
