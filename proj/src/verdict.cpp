#include "wmha/verdict.hpp"

namespace wmha {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::SkippedNotApplicable: return "skipped-not-applicable";
    case Status::VerifiedOnProbes: return "verified-on-probes";
  }
  return "unknown";
}

void Report::add(std::string name, std::string anchor, Status status, std::string witness) {
  checks_.push_back({std::move(name), std::move(anchor), status, std::move(witness)});
}

void Report::check(std::string name, std::string anchor, bool ok, std::string witness) {
  add(std::move(name), std::move(anchor), ok ? Status::Pass : Status::Fail,
      ok ? std::string() : std::move(witness));
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    CheckResult r = c;
    if (!prefix.empty()) r.name = prefix + "." + r.name;
    checks_.push_back(std::move(r));
  }
}

bool Report::ok() const { return first_failure() == nullptr; }

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks_)
    if (c.status == Status::Fail) return &c;
  return nullptr;
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace wmha
