#include "lauricella/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace lauricella {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kNotApplicable:
      return "not_applicable";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

void Report::pass(std::string name, std::string detail) {
  checks.push_back({std::move(name), CheckStatus::kPass, std::move(detail), std::nullopt});
}

void Report::fail(std::string name, std::string detail, std::optional<Witness> witness) {
  checks.push_back({std::move(name), CheckStatus::kFail, std::move(detail), std::move(witness)});
}

void Report::not_applicable(std::string name, std::string detail) {
  checks.push_back({std::move(name), CheckStatus::kNotApplicable, std::move(detail), std::nullopt});
}

void Report::record(std::string name, bool ok, std::string detail, std::optional<Witness> witness) {
  if (ok) {
    pass(std::move(name), std::move(detail));
  } else {
    fail(std::move(name), std::move(detail), std::move(witness));
  }
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) {
    return c.status == CheckStatus::kFail;
  }));
}

std::string Report::to_json(int indent) const {
  nlohmann::ordered_json doc;
  doc["title"] = title;
  doc["passed"] = passed();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["status"] = to_string(c.status);
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.witness) {
      j["witness"] = {{"matrix", c.witness->matrix},
                      {"row", c.witness->row},
                      {"col", c.witness->col},
                      {"row_subset", c.witness->row_subset},
                      {"col_subset", c.witness->col_subset}};
    }
    arr.push_back(std::move(j));
  }
  doc["checks"] = std::move(arr);
  return doc.dump(indent);
}

}  // namespace lauricella
