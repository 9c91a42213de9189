#ifndef LAURICELLA_REPORT_HPP
#define LAURICELLA_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lauricella {

enum class CheckStatus { kPass, kFail, kNotApplicable, kSkipped };

std::string to_string(CheckStatus status);

/// Location of a failing entry: which matrix, and its (row, col) position
/// in basis order with the corresponding subsets spelled out.
struct Witness {
  std::string matrix;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string row_subset;
  std::string col_subset;
};

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
  std::optional<Witness> witness;
};

/// Ordered list of named exact checks.
struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  void pass(std::string name, std::string detail = {});
  void fail(std::string name, std::string detail, std::optional<Witness> witness = std::nullopt);
  void not_applicable(std::string name, std::string detail);
  void record(std::string name, bool ok, std::string detail = {},
              std::optional<Witness> witness = std::nullopt);
  void append(const Report& other);

  /// True when no check failed (not-applicable and skipped are fine).
  bool passed() const;
  std::size_t failures() const;

  /// {"title": ..., "passed": bool, "checks": [{"name", "status", "detail",
  /// "witness": {...}}]}; key order is fixed so output is byte-stable.
  std::string to_json(int indent = 2) const;
};

}  // namespace lauricella

#endif  // LAURICELLA_REPORT_HPP
