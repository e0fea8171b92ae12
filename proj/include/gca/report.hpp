#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gca/error.hpp"

namespace gca {

inline constexpr const char* kToolName = "gca-lab";
inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, Unsupported };
std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;
};

/// Result of one command: ordered facts and checks, rendered as text or JSON
/// with the same content. Timing is the only field that varies between runs.
class Report {
 public:
  explicit Report(std::string command);

  void fact(const std::string& key, nlohmann::ordered_json value);
  void check(Check c);
  void set_seconds(double s) { seconds_ = s; }

  const std::vector<Check>& checks() const noexcept { return checks_; }
  CheckStatus status() const;
  /// 0 all pass, 1 any failure, 3 otherwise unsupported.
  int exit_code() const;

  std::string text() const;
  nlohmann::ordered_json json() const;
  std::string json_text() const;

 private:
  std::string command_;
  nlohmann::ordered_json facts_ = nlohmann::ordered_json::object();
  std::vector<Check> checks_;
  double seconds_ = 0;
};

/// 1 internal, 2 usage/parse/precondition/mismatch, 3 unsupported/infinite/budget.
int exit_code_for(ErrorKind kind);

}  // namespace gca
