#include "mbgram/report.hpp"

#include <cstdio>

namespace mbgram {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

void Report::record(json params, bool ok, json values) {
  ++checked;
  if (!ok) {
    failures.push_back({std::move(params), std::move(values)});
    status = Status::Fail;
  }
}

void Report::skip(std::string reason) {
  status = Status::Skipped;
  notes.push_back(std::move(reason));
}

json Report::to_json(bool with_timing) const {
  json j;
  j["claim"] = claim;
  j["statement"] = statement;
  j["status"] = std::string(status_name(status));
  j["parameters"] = parameters;
  j["checked"] = checked;
  json fails = json::array();
  for (const auto& w : failures) fails.push_back({{"parameters", w.parameters}, {"values", w.values}});
  j["failures"] = std::move(fails);
  j["results"] = results;
  j["provenance"] = provenance;
  j["notes"] = notes;
  if (seed) j["seed"] = *seed;
  if (with_timing) {
    j["duration_ms"] = duration_ms;
    if (!timings.empty()) j["timings"] = timings;
  }
  return j;
}

ScopedTimer::~ScopedTimer() {
  const auto elapsed = std::chrono::steady_clock::now() - start_;
  report_.duration_ms = std::chrono::duration<double, std::milli>(elapsed).count();
}

std::string table_row(const Report& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-7s %-34s %8zu %6zu %10.1f ms",
                std::string(status_name(r.status)).c_str(), r.claim.c_str(), r.checked,
                r.failures.size(), r.duration_ms);
  return buf;
}

void ReportWriter::write(const Report& r) {
  std::lock_guard lock(mutex_);
  if (r.status == Status::Fail) ++failed_;
  if (format_ == Format::JsonLines) {
    out_ << r.to_json(with_timing_).dump() << '\n';
  } else {
    if (written_ == 0) {
      char head[128];
      std::snprintf(head, sizeof head, "%-7s %-34s %8s %6s %13s", "STATUS", "CLAIM", "CHECKED",
                    "FAILED", "TIME");
      out_ << head << '\n';
    }
    out_ << table_row(r) << '\n';
    for (const auto& note : r.notes) out_ << "        note: " << note << '\n';
  }
  ++written_;
  out_.flush();
}

void ReportWriter::finish() {
  std::lock_guard lock(mutex_);
  if (format_ == Format::Table)
    out_ << written_ << " claims, " << failed_ << " failed\n";
}

}  // namespace mbgram
