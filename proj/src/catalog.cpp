#include "dta/catalog.hpp"

#include <algorithm>
#include <array>

namespace dta {

namespace {

constexpr int kTable1[18][4] = {
    {0, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 1}, {1, 1, 2, 1}, {1, 2, 0, 1},
    {1, 2, 2, 2}, {0, 0, 1, 2}, {1, 1, 0, 0}, {0, 1, 1, 0}, {1, 2, 1, 0},
    {0, 0, 2, 1}, {0, 2, 2, 0}, {1, 0, 0, 2}, {1, 0, 2, 0}, {0, 2, 1, 1},
    {0, 2, 0, 2}, {1, 1, 1, 2}, {0, 1, 2, 2},
};

// Factor-major: each block is 5 factors x 24 runs, as printed. Runs are the
// 24 columns of the first block followed by the 24 of the second.
constexpr int kExample34[2][5][24] = {
    {{1, 2, 0, 0, 2, 0, 2, 2, 1, 0, 0, 1, 1, 2, 1, 2, 0, 2, 0, 0, 1, 0, 1, 2},
     {2, 1, 2, 0, 0, 2, 2, 1, 0, 1, 1, 2, 0, 1, 1, 2, 2, 2, 0, 1, 0, 2, 1, 2},
     {1, 0, 0, 2, 1, 2, 2, 1, 2, 1, 1, 1, 1, 2, 0, 2, 0, 0, 1, 0, 0, 0, 0, 1},
     {2, 3, 1, 2, 1, 3, 3, 0, 1, 1, 2, 3, 0, 2, 0, 1, 3, 0, 2, 1, 3, 2, 0, 0},
     {1, 2, 1, 1, 1, 0, 1, 2, 0, 2, 3, 2, 3, 0, 1, 2, 3, 3, 0, 0, 1, 2, 0, 0}},
    {{0, 0, 2, 1, 2, 2, 1, 2, 1, 1, 2, 0, 1, 2, 2, 0, 1, 1, 1, 0, 0, 0, 2, 1},
     {1, 0, 0, 2, 2, 1, 1, 0, 0, 1, 1, 0, 2, 0, 2, 1, 0, 1, 2, 0, 0, 2, 0, 1},
     {1, 2, 2, 0, 2, 0, 2, 1, 0, 1, 0, 2, 2, 1, 1, 2, 0, 2, 1, 2, 0, 1, 0, 2},
     {3, 0, 0, 2, 2, 1, 2, 2, 1, 3, 2, 3, 0, 3, 1, 0, 2, 3, 1, 1, 0, 0, 3, 1},
     {1, 0, 1, 0, 3, 3, 2, 2, 2, 0, 1, 2, 2, 3, 0, 3, 3, 3, 3, 3, 2, 1, 0, 1}},
};

ArrayDocument table1_document() {
  ArrayDocument doc;
  MixedArray a(TypeVector{2, 3, 3, 3}, 18);
  for (std::size_t r = 0; r < 18; ++r)
    for (std::size_t j = 0; j < 4; ++j) a.set(r, j, kTable1[r][j]);
  doc.array = std::move(a);
  doc.t = 2;
  doc.d = 1;
  doc.lambda = 2;
  const std::array<std::string, 4> factors = {"Function scope", "Server type",
                                              "Client type", "Target content"};
  const std::array<std::vector<std::string>, 4> levels = {{
      {"Current", "Marked"},
      {"Share mode", "User mode", "MSNET"},
      {"MSNET", "Enhanced", "Basic"},
      {"Empty", "Partial", "Full"},
  }};
  for (std::size_t j = 0; j < 4; ++j) {
    doc.names.factors[j] = factors[j];
    for (std::size_t x = 0; x < levels[j].size(); ++x)
      doc.names.levels[{j, static_cast<Level>(x)}] = levels[j][x];
  }
  return doc;
}

ArrayDocument example34_document() {
  ArrayDocument doc;
  MixedArray a(TypeVector{3, 3, 3, 4, 4}, 48);
  for (std::size_t block = 0; block < 2; ++block)
    for (std::size_t run = 0; run < 24; ++run)
      for (std::size_t f = 0; f < 5; ++f)
        a.set(block * 24 + run, f, kExample34[block][f][run]);
  doc.array = std::move(a);
  doc.t = 2;
  doc.d = 2;
  doc.lambda = 3;
  return doc;
}

}  // namespace

TypeVector Table2Row::types_for(int a) const {
  std::vector<int> sizes(static_cast<std::size_t>(a), var_level);
  for (auto [level, mult] : fixed)
    sizes.insert(sizes.end(), static_cast<std::size_t>(mult), level);
  std::sort(sizes.begin(), sizes.end());
  return TypeVector(std::move(sizes));
}

std::string Table2Row::pattern() const {
  std::vector<std::pair<int, std::string>> parts;
  parts.emplace_back(var_level, std::to_string(var_level) + "^a");
  for (auto [level, mult] : fixed)
    parts.emplace_back(level, std::to_string(level) + "^" + std::to_string(mult));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& [level, text] : parts) out += (out.empty() ? "" : " ") + text;
  return out;
}

const std::vector<Table2Row>& table2_targets() {
  static const std::vector<Table2Row> rows = {
      {8, 2, {}, 4},
      {12, 2, {{3, 1}}, 3},
      {16, 2, {{4, 1}}, 3},
      {18, 3, {{2, 1}}, 3},
      {18, 2, {{3, 2}}, 4},
      {18, 3, {}, 6},
      {20, 2, {{5, 1}}, 3},
      {24, 2, {{6, 1}}, 3},
      {24, 2, {{3, 2}, {4, 1}}, 1},
      {24, 2, {{3, 1}, {4, 1}}, 4},
      {24, 3, {{4, 1}}, 5},
      {28, 2, {{7, 1}}, 3},
      {30, 2, {{3, 3}, {5, 1}}, 1},
      {30, 2, {{3, 1}, {5, 1}}, 4},
      {30, 3, {{5, 1}}, 5},
  };
  return rows;
}

std::vector<std::string> catalog_ids() {
  return {"table1", "example34", "table2-targets"};
}

CatalogEntry catalog_get(const std::string& id) {
  CatalogEntry e;
  e.id = id;
  if (id == "table1") {
    e.description = "(1,2)-DTA(18; 4, 2^1 3^3) for a mail-system copy function";
    e.provenance = "18-test detecting array with named factors; rows in the "
                   "published order";
    e.document = table1_document();
  } else if (id == "example34") {
    e.description = "optimum (2,2)-DTA(48; 5, 3^3 4^2), not super-simple";
    e.provenance = "two factor-major 5x24 blocks, runs concatenated";
    e.document = example34_document();
  } else if (id == "table2-targets") {
    e.description = "optimum (1,2)-DTA parameter list for N <= 30";
    e.provenance = "existence list of bound-meeting (1,2)-DTAs found by search";
    e.targets = table2_targets();
  } else {
    throw DomainError("unknown catalog id '" + id + "'");
  }
  return e;
}

VerifyReport verify_catalog_entry(const CatalogEntry& entry, Exec exec) {
  if (entry.document) {
    const auto& doc = *entry.document;
    auto rep = is_detecting(doc.array, doc.d, doc.t, VerifyLimits{}, exec);
    if (rep.holds && doc.lambda &&
        static_cast<std::uint64_t>(rep.stats["coverage_index"]) != *doc.lambda) {
      rep.holds = false;
      rep.witness = Witness{{}, {}, "declared lambda does not match"};
    }
    return rep;
  }
  VerifyReport rep;
  rep.property = "targets meet the lower bound";
  rep.holds = true;
  for (const auto& row : entry.targets) {
    auto types = row.types_for(row.max_a);
    if (lower_bound(1, 2, types) != row.rows) {
      rep.holds = false;
      rep.witness = Witness{{}, {}, "N = " + std::to_string(row.rows) +
                                        " differs from the bound for " +
                                        types.exponent_notation()};
      break;
    }
  }
  rep.stats["targets"] = static_cast<std::int64_t>(entry.targets.size());
  return rep;
}

}  // namespace dta
