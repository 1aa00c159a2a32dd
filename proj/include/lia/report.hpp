// Deterministic pass/fail/skip reporting shared by all checkers.
#ifndef LIA_REPORT_HPP
#define LIA_REPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace lia {

enum class Status { Pass, Fail, Skip };

struct Check {
  std::string id;
  Status status;
  std::string witness;  // counterexample or note
};

struct Report {
  std::vector<Check> checks;

  void add(std::string id, bool ok, std::string witness = "") {
    checks.push_back({std::move(id), ok ? Status::Pass : Status::Fail, std::move(witness)});
  }
  void skip(std::string id, std::string note = "") {
    checks.push_back({std::move(id), Status::Skip, std::move(note)});
  }
  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.status != Status::Fail; });
  }
  std::size_t failures() const {
    return std::count_if(checks.begin(), checks.end(),
                         [](const Check& c) { return c.status == Status::Fail; });
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (c.status == Status::Fail) return &c;
    return nullptr;
  }

  std::vector<Check> sorted() const {
    auto v = checks;
    std::stable_sort(v.begin(), v.end(),
                     [](const Check& a, const Check& b) { return a.id < b.id; });
    return v;
  }

  std::string to_text() const {
    std::string out;
    for (const auto& c : sorted()) {
      out += c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP";
      out += "  " + c.id;
      if (!c.witness.empty()) out += "  [" + c.witness + "]";
      out += "\n";
    }
    out += ok() ? "result: ok\n" : "result: failed\n";
    return out;
  }

  std::string to_kv() const {
    std::string out;
    for (const auto& c : sorted()) {
      out += "check." + c.id + "=";
      out += c.status == Status::Pass ? "pass" : c.status == Status::Fail ? "fail" : "skip";
      if (!c.witness.empty()) {
        std::string w = c.witness;
        std::replace(w.begin(), w.end(), '\n', ' ');
        out += " witness=" + w;
      }
      out += "\n";
    }
    out += std::string("ok=") + (ok() ? "1" : "0") + "\n";
    return out;
  }
};

}  // namespace lia

#endif  // LIA_REPORT_HPP
