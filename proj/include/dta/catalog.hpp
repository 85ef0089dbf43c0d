#pragma once

// Built-in arrays and target lists:
//   table1          (1,2)-DTA(18; 4, 2^1 3^3) for the copy function of a mail
//                   system, with factor and level names
//   example34       (2,2)-DTA(48; 5, 3^3 4^2), not super-simple
//   table2-targets  parameter list of optimum (1,2)-DTAs with N <= 30

#include <string>
#include <vector>

#include "dta/format.hpp"
#include "dta/verify.hpp"

namespace dta {

/// One row of the optimum (1,2)-DTA list: types (var_level^a, fixed...) exist
/// for every a <= max_a at N rows.
struct Table2Row {
  std::size_t rows = 0;
  int var_level = 2;
  std::vector<std::pair<int, int>> fixed;  // (level, multiplicity)
  int max_a = 0;

  /// Types at exponent a, sorted nondecreasing.
  TypeVector types_for(int a) const;
  /// "2^a 3^1" style.
  std::string pattern() const;
};

struct CatalogEntry {
  std::string id;
  std::string description;
  std::string provenance;
  /// Absent for pure parameter lists.
  std::optional<ArrayDocument> document;
  std::vector<Table2Row> targets;
};

std::vector<std::string> catalog_ids();

/// Throws DomainError for unknown ids.
CatalogEntry catalog_get(const std::string& id);

const std::vector<Table2Row>& table2_targets();

/// Re-checks an entry's declared (d,t)-DTA property (and, for parameter
/// lists, that every N equals the lower bound at the largest a).
VerifyReport verify_catalog_entry(const CatalogEntry& entry,
                                  Exec exec = Exec::parallel);

}  // namespace dta
