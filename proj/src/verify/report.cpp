#include "bipoisson/report.hpp"

#include <sstream>

namespace bipoisson {

void Report::fail(std::string location, Polynomial residual) {
  if (passed || !witness) witness = Witness{std::move(location), std::move(residual)};
  passed = false;
}

void Report::add_child(Report child) {
  checked += child.checked;
  if (!child.passed && passed) {
    passed = false;
    if (child.witness) witness = Witness{child.identity + " " + child.witness->location, child.witness->residual};
  }
  children.push_back(std::move(child));
}

nlohmann::ordered_json Report::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["identity"] = identity;
  j["status"] = passed ? "pass" : "fail";
  j["checked"] = checked;
  if (witness) {
    j["witness"] = {{"location", witness->location}, {"residual", witness->residual.to_string()}};
  }
  if (!note.empty()) j["note"] = note;
  if (with_timing) j["elapsed_ms"] = elapsed.count();
  if (!children.empty()) {
    j["children"] = nlohmann::ordered_json::array();
    for (const auto& c : children) j["children"].push_back(c.to_json(with_timing));
  }
  return j;
}

std::string Report::to_text(bool with_timing, int indent) const {
  std::ostringstream os;
  os << std::string(static_cast<std::size_t>(indent), ' ') << (passed ? "PASS " : "FAIL ") << identity << " ("
     << checked << " checked";
  if (with_timing) os << ", " << elapsed.count() << " ms";
  os << ")";
  if (witness && children.empty()) {
    os << " first witness " << witness->location << ": " << witness->residual.to_string();
  }
  if (!note.empty()) os << " [" << note << "]";
  os << "\n";
  for (const auto& c : children) os << c.to_text(with_timing, indent + 2);
  return os.str();
}

}  // namespace bipoisson
