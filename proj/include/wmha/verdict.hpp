#pragma once

#include <string>
#include <vector>

namespace wmha {

enum class Status { Pass, Fail, SkippedNotApplicable, VerifiedOnProbes };

std::string status_name(Status s);

struct CheckResult {
  std::string name;
  // Descriptive label of the identity or condition being checked.
  std::string anchor;
  Status status = Status::Pass;
  std::string witness;
};

class Report {
 public:
  void add(std::string name, std::string anchor, Status status, std::string witness = {});
  // Pass when ok, otherwise Fail with the witness.
  void check(std::string name, std::string anchor, bool ok, std::string witness = {});
  void append(const Report& other, const std::string& prefix = {});

  const std::vector<CheckResult>& checks() const { return checks_; }
  // No Fail entries.
  bool ok() const;
  const CheckResult* first_failure() const;
  const CheckResult* find(const std::string& name) const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace wmha
