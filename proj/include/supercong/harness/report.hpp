#pragma once

#include "supercong/congruence.hpp"

#include <json.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace supercong::harness {

struct RunSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<CongruenceReport> failures;
  std::vector<CongruenceReport> reports; // every check, in scan order

  void add(const CongruenceReport &r) {
    ++total;
    if (r.skipped())
      ++skipped;
    else if (r.pass)
      ++passed;
    else {
      ++failed;
      failures.push_back(r);
    }
    reports.push_back(r);
  }
};

enum class ReportFormat { jsonl, tap, human };

/// One JSON Lines record; residues are decimal strings.
inline nlohmann::ordered_json to_json(const CongruenceReport &r) {
  nlohmann::ordered_json j;
  j["statement"] = std::string(statement_name(r.statement));
  j["p"] = r.p;
  j["x"] = r.x ? nlohmann::ordered_json(to_string(*r.x)) : nlohmann::ordered_json(nullptr);
  if (r.skipped()) {
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
    j["modulus"] = nullptr;
  } else {
    j["lhs"] = r.lhs.str();
    j["rhs"] = r.rhs.str();
    j["modulus"] = r.lhs.big_modulus().str();
  }
  j["pass"] = r.pass;
  j["skipped_reason"] =
      r.skipped() ? nlohmann::ordered_json(r.skipped_reason) : nlohmann::ordered_json(nullptr);
  j["micros"] = r.wall_time.count();
  return j;
}

inline std::string to_jsonl_line(const CongruenceReport &r) { return to_json(r).dump() + "\n"; }

inline std::string describe(const CongruenceReport &r) {
  std::string s = std::string(statement_name(r.statement)) + " p=" + std::to_string(r.p);
  if (r.x)
    s += " x=" + to_string(*r.x);
  return s;
}

inline std::string failure_detail(const CongruenceReport &r) {
  std::string s = "lhs=" + r.lhs.str() + " rhs=" + r.rhs.str() + " mod " + r.lhs.big_modulus().str();
  if (!r.oracle_mismatch.empty())
    s += " oracle mismatch: " + r.oracle_mismatch;
  if (!r.detail.empty())
    s += " (" + r.detail + ")";
  return s;
}

inline std::string emit_report(const RunSummary &summary, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
  case ReportFormat::jsonl: {
    nlohmann::ordered_json header;
    header["schema_version"] = 1;
    header["total"] = summary.total;
    header["passed"] = summary.passed;
    header["failed"] = summary.failed;
    header["skipped"] = summary.skipped;
    out << header.dump() << "\n";
    for (const auto &r : summary.reports)
      out << to_jsonl_line(r);
    break;
  }
  case ReportFormat::tap: {
    out << "TAP version 13\n1.." << summary.reports.size() << "\n";
    std::size_t i = 0;
    for (const auto &r : summary.reports) {
      ++i;
      if (r.skipped())
        out << "ok " << i << " - " << describe(r) << " # SKIP " << r.skipped_reason << "\n";
      else if (r.pass)
        out << "ok " << i << " - " << describe(r) << "\n";
      else
        out << "not ok " << i << " - " << describe(r) << " # " << failure_detail(r) << "\n";
    }
    break;
  }
  case ReportFormat::human: {
    out << "total=" << summary.total << " passed=" << summary.passed
        << " failed=" << summary.failed << " skipped=" << summary.skipped << "\n";
    for (const auto &r : summary.failures)
      out << "FAIL " << describe(r) << ": " << failure_detail(r) << "\n";
    break;
  }
  }
  return out.str();
}

} // namespace supercong::harness
