#pragma once

#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace mbgram {

using json = nlohmann::json;

enum class Status { Pass, Fail, Skipped };

std::string_view status_name(Status s);

/// One failing parameter tuple with the values that disagree.
struct Witness {
  json parameters;
  json values;
};

/// Outcome of one verification claim.
///
/// A report covers a sweep of parameter tuples; `checked` counts them and
/// `failures` keeps a witness for each one that did not hold. Status is FAIL
/// iff `failures` is non-empty, unless the claim was skipped.
struct Report {
  std::string claim;
  std::string statement;
  Status status = Status::Pass;
  json parameters = json::object();
  std::size_t checked = 0;
  std::vector<Witness> failures;
  json results = json::object();
  json provenance = json::object();
  /// Wall-clock measurements; emitted only together with duration_ms.
  json timings = json::object();
  std::vector<std::string> notes;
  double duration_ms = 0.0;
  std::optional<std::uint64_t> seed;

  void record(json params, bool ok, json values = json::object());
  void skip(std::string reason);
  bool passed() const { return status == Status::Pass; }

  /// JSON object; `with_timing` false drops duration_ms for byte-stable output.
  json to_json(bool with_timing = true) const;
};

/// Measures wall-clock time into Report::duration_ms on destruction.
class ScopedTimer {
 public:
  explicit ScopedTimer(Report& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ScopedTimer();
  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;

 private:
  Report& report_;
  std::chrono::steady_clock::time_point start_;
};

/// Serializes reports as JSON lines through a single writer.
class ReportWriter {
 public:
  enum class Format { JsonLines, Table };
  ReportWriter(std::ostream& out, Format format, bool with_timing = true)
      : out_(out), format_(format), with_timing_(with_timing) {}

  void write(const Report& r);
  /// Table footer; no-op for JSON lines.
  void finish();

  std::size_t failures() const { return failed_; }

 private:
  std::mutex mutex_;
  std::ostream& out_;
  Format format_;
  bool with_timing_;
  std::size_t written_ = 0;
  std::size_t failed_ = 0;
};

/// Renders one report as a fixed-width table row.
std::string table_row(const Report& r);

}  // namespace mbgram
