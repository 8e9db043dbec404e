#ifndef QUOTMOT_REPORT_HPP
#define QUOTMOT_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace quotmot {

struct VerifyFailure {
  std::string check;    // which assertion broke
  std::string witness;  // the parameters exhibiting the failure
};

/// Outcome of a verify_* sweep: the identity checked, the range swept, and
/// every violating witness found (empty means pass).
struct VerifyReport {
  std::string identity;
  std::string range;
  std::vector<VerifyFailure> failures;

  bool passed() const { return failures.empty(); }

  void fail(std::string check, std::string witness) {
    failures.push_back({std::move(check), std::move(witness)});
  }
};

}  // namespace quotmot

#endif
