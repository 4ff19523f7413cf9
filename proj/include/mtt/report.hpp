#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"

namespace mtt {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, PassWithSign, Skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::PassWithSign: return "pass_with_sign";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

struct Failure {
  std::vector<Edge> graph;
  std::string expected;
  std::string actual;
  std::string term;  // optional: monomial or law name when the graph alone does not locate the mismatch
};

inline constexpr std::size_t kMaxReportedFailures = 32;

/// Per-chunk case counter and failure list. Merging keeps the first
/// kMaxReportedFailures failures in enumeration order.
struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;

  void fail(Failure f) {
    ++failure_count;
    if (failures.size() < kMaxReportedFailures) failures.push_back(std::move(f));
  }

  void merge(Tally&& o) {
    cases += o.cases;
    failure_count += o.failure_count;
    for (auto& f : o.failures) {
      if (failures.size() >= kMaxReportedFailures) break;
      failures.push_back(std::move(f));
    }
  }
};

struct VerificationReport {
  std::string check;
  Json params = Json::object();
  Status status = Status::Pass;
  std::optional<int> sign;
  std::optional<bool> literal_holds;  // sign-probing checks: does the statement hold as printed
  std::uint64_t total_cases = 0;
  std::vector<Failure> failures;
  std::int64_t elapsed_ms = 0;
  std::string note;

  bool ok() const { return status != Status::Fail; }

  Json to_json(bool with_elapsed = true) const {
    Json j;
    j["check"] = check;
    j["params"] = params;
    j["status"] = to_string(status);
    j["sign"] = sign ? Json(*sign) : Json(nullptr);
    if (literal_holds) j["literal_holds"] = *literal_holds;
    j["total_cases"] = total_cases;
    Json fs = Json::array();
    for (const Failure& f : failures) {
      Json g = Json::array();
      for (const Edge& e : f.graph) g.push_back({e.tail, e.head});
      Json fj;
      fj["graph"] = std::move(g);
      if (!f.term.empty()) fj["term"] = f.term;
      fj["expected"] = f.expected;
      fj["actual"] = f.actual;
      fs.push_back(std::move(fj));
    }
    j["failures"] = std::move(fs);
    if (!note.empty()) j["note"] = note;
    if (with_elapsed) j["elapsed_ms"] = elapsed_ms;
    return j;
  }
};

/// Wall-clock timer plus the bookkeeping shared by every check.
class CheckRun {
 public:
  CheckRun(std::string check, Json params) : start_(std::chrono::steady_clock::now()) {
    report_.check = std::move(check);
    report_.params = std::move(params);
  }

  Tally& tally() { return tally_; }

  VerificationReport finish(std::optional<int> sign = std::nullopt, std::optional<bool> literal = std::nullopt) {
    report_.total_cases = tally_.cases;
    report_.failures = std::move(tally_.failures);
    report_.literal_holds = literal;
    if (tally_.failure_count > 0) {
      report_.status = Status::Fail;
    } else if (sign) {
      report_.status = Status::PassWithSign;
      report_.sign = sign;
    } else {
      report_.status = Status::Pass;
    }
    report_.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
  VerificationReport report_;
  Tally tally_;
};

}  // namespace mtt
