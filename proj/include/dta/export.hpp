#pragma once

#include <string>

#include "dta/format.hpp"

namespace dta {

/// CSV test plan: a header of factor names, then one line per row with the
/// level names (or raw level indices when `numeric`). LF line endings;
/// fields containing commas or quotes are quoted. Without `numeric`, every
/// level used must have a name; otherwise DomainError lists the missing
/// (column, level) keys.
std::string export_suite(const ArrayDocument& doc, bool numeric = false);

}  // namespace dta
