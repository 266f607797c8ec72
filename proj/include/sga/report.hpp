#ifndef SGA_REPORT_HPP
#define SGA_REPORT_HPP

#include <string>
#include <vector>

namespace sga {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string tag;
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // failure witness or skip reason
  double ms = 0.0;      // wall time; excluded from canonical output

  bool ok() const { return status != CheckStatus::fail; }
};

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

inline CheckResult check_pass(std::string tag) { return {std::move(tag), CheckStatus::pass, "", 0}; }
inline CheckResult check_fail(std::string tag, std::string witness) {
  return {std::move(tag), CheckStatus::fail, std::move(witness), 0};
}
inline CheckResult check_skip(std::string tag, std::string reason) {
  return {std::move(tag), CheckStatus::skipped, std::move(reason), 0};
}
inline CheckResult check_bool(std::string tag, bool ok, std::string witness) {
  return ok ? check_pass(std::move(tag)) : check_fail(std::move(tag), std::move(witness));
}

} // namespace sga

#endif
