#include "report.hpp"

#include <string>

namespace labgraph::cli {
namespace {

bool IsScalar(const Report& j) { return !j.is_object() && !j.is_array(); }

bool AllScalar(const Report& j) {
  for (const auto& item : j) {
    if (!IsScalar(item)) return false;
  }
  return true;
}

std::string Scalar(const Report& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

std::string JoinScalars(const Report& j, const char* sep) {
  std::string text;
  for (const auto& item : j) {
    if (!text.empty()) text += sep;
    text += Scalar(item);
  }
  return text.empty() ? "(none)" : text;
}

std::string Record(const Report& j) {
  std::string text;
  for (const auto& [k, v] : j.items()) {
    if (!text.empty()) text += ", ";
    text += k + "=" + (IsScalar(v) ? Scalar(v) : v.is_array() && AllScalar(v) ? "[" + JoinScalars(v, ", ") + "]" : v.dump());
  }
  return text;
}

}  // namespace

void RenderText(const Report& report, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : report.items()) {
    if (value.is_object()) {
      if (!value.empty() && AllScalar(value)) {
        for (const auto& [sub, v] : value.items()) out << pad << key << "(" << sub << ")=" << Scalar(v) << "\n";
      } else {
        out << pad << key << ":\n";
        RenderText(value, out, indent + 2);
      }
    } else if (value.is_array()) {
      if (AllScalar(value)) {
        out << pad << key << ": " << JoinScalars(value, ", ") << "\n";
      } else {
        out << pad << key << ":\n";
        for (const auto& item : value) {
          if (item.is_object()) {
            out << pad << "  - " << Record(item) << "\n";
          } else {
            out << pad << "  - " << (IsScalar(item) ? Scalar(item) : item.dump()) << "\n";
          }
        }
      }
    } else {
      out << pad << key << ": " << Scalar(value) << "\n";
    }
  }
}

}  // namespace labgraph::cli
