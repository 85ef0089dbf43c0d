#include "dta/export.hpp"

namespace dta {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_suite(const ArrayDocument& doc, bool numeric) {
  const auto& a = doc.array;
  if (!numeric) {
    std::string missing;
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (Level x = 0; x < a.types()[j]; ++x)
        if (!doc.names.level(j, x))
          missing += (missing.empty() ? "" : ", ") + std::string("col=") +
                     std::to_string(j + 1) + " level=" + std::to_string(x);
    if (!missing.empty())
      throw DomainError("missing level names: " + missing +
                        " (use --numeric for raw levels)");
  }
  std::string out;
  for (std::size_t j = 0; j < a.cols(); ++j)
    out += (j ? "," : "") + csv_field(doc.names.factor(j));
  out += '\n';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ',';
      out += numeric ? std::to_string(a.at(r, j))
                     : csv_field(*doc.names.level(j, a.at(r, j)));
    }
    out += '\n';
  }
  return out;
}

}  // namespace dta
