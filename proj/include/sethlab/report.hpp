#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sethlab {

/// One verified claim: what was checked, on which inputs, and the outcome.
struct CheckResult {
  std::string check;
  nlohmann::json inputs;
  std::string expected;  // e.g. "== 12" or "<= 949"
  std::int64_t actual = 0;
  bool pass = false;
};

class Report {
 public:
  void add(CheckResult r) { results_.push_back(std::move(r)); }

  void append(const Report& other) {
    results_.insert(results_.end(), other.results_.begin(), other.results_.end());
  }

  const std::vector<CheckResult>& results() const { return results_; }
  std::size_t size() const { return results_.size(); }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : results_) n += !r.pass;
    return n;
  }

  bool ok() const { return failures() == 0; }

  nlohmann::json to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& r : results_)
      arr.push_back({{"check", r.check},
                     {"inputs", r.inputs},
                     {"expected", r.expected},
                     {"actual", r.actual},
                     {"pass", r.pass}});
    return arr;
  }

  void write_text(std::ostream& out) const {
    for (const auto& r : results_)
      out << (r.pass ? "PASS " : "FAIL ") << r.check << ' ' << r.inputs.dump() << " expected "
          << r.expected << " actual " << r.actual << '\n';
    out << (size() - failures()) << '/' << size() << " checks passed\n";
  }

  std::string to_text() const {
    std::ostringstream out;
    write_text(out);
    return out.str();
  }

 private:
  std::vector<CheckResult> results_;
};

inline CheckResult expect_equal(std::string check, nlohmann::json inputs, std::uint64_t expected,
                                std::uint64_t actual) {
  return {std::move(check), std::move(inputs), "== " + std::to_string(expected),
          static_cast<std::int64_t>(actual), actual == expected};
}

inline CheckResult expect_at_most(std::string check, nlohmann::json inputs, std::uint64_t bound,
                                  std::uint64_t actual) {
  return {std::move(check), std::move(inputs), "<= " + std::to_string(bound),
          static_cast<std::int64_t>(actual), actual <= bound};
}

inline CheckResult expect_at_least(std::string check, nlohmann::json inputs, std::uint64_t bound,
                                   std::uint64_t actual) {
  return {std::move(check), std::move(inputs), ">= " + std::to_string(bound),
          static_cast<std::int64_t>(actual), actual >= bound};
}

}  // namespace sethlab
