#include "gca/report.hpp"

#include <sstream>

namespace gca {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Unsupported: return "unsupported";
  }
  return "unknown";
}

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::fact(const std::string& key, nlohmann::ordered_json value) { facts_[key] = std::move(value); }

void Report::check(Check c) { checks_.push_back(std::move(c)); }

CheckStatus Report::status() const {
  bool unsupported = false;
  for (const auto& c : checks_) {
    if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (c.status == CheckStatus::Unsupported) unsupported = true;
  }
  return unsupported ? CheckStatus::Unsupported : CheckStatus::Pass;
}

int Report::exit_code() const {
  switch (status()) {
    case CheckStatus::Pass: return 0;
    case CheckStatus::Fail: return 1;
    case CheckStatus::Unsupported: return 3;
  }
  return 1;
}

namespace {

std::string render_value(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && !v.empty() && v.front().is_string()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + render_value(v[i]);
    return s;
  }
  return v.dump();
}

}  // namespace

std::string Report::text() const {
  std::ostringstream out;
  out << kToolName << " " << kToolVersion << ": " << command_ << "\n";
  for (const auto& [key, value] : facts_.items()) out << key << ": " << render_value(value) << "\n";
  for (const auto& c : checks_) {
    out << "[" << to_string(c.status) << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    if (c.cases) out << " (" << c.cases << " cases)";
    out << "\n";
    if (c.counterexample) out << "  counterexample: " << *c.counterexample << "\n";
  }
  out << "status: " << to_string(status()) << "\n";
  out << "seconds: " << seconds_ << "\n";
  return out.str();
}

nlohmann::ordered_json Report::json() const {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command_;
  j["facts"] = facts_;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    e["detail"] = c.detail;
    e["cases"] = c.cases;
    if (c.counterexample) e["counterexample"] = *c.counterexample;
    j["checks"].push_back(std::move(e));
  }
  j["status"] = to_string(status());
  j["seconds"] = seconds_;
  return j;
}

std::string Report::json_text() const { return json().dump(2) + "\n"; }

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Internal: return 1;
    case ErrorKind::InvalidArgument:
    case ErrorKind::GroupMismatch:
    case ErrorKind::Precondition:
    case ErrorKind::Parse: return 2;
    case ErrorKind::Unsupported:
    case ErrorKind::InfiniteFamily:
    case ErrorKind::BudgetExceeded: return 3;
  }
  return 1;
}

}  // namespace gca
