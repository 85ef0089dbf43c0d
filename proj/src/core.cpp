#include "dta/core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>

namespace dta {

TypeVector::TypeVector(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw DomainError("type vector must have k >= 1 columns");
  for (std::size_t j = 0; j < sizes_.size(); ++j) {
    if (sizes_[j] < 1) {
      throw DomainError("column " + std::to_string(j + 1) +
                        " has alphabet size " + std::to_string(sizes_[j]) +
                        " (must be >= 1)");
    }
  }
}

int TypeVector::min_size() const {
  return *std::min_element(sizes_.begin(), sizes_.end());
}

int TypeVector::max_size() const {
  return *std::max_element(sizes_.begin(), sizes_.end());
}

std::vector<int> TypeVector::sorted() const {
  auto s = sizes_;
  std::sort(s.begin(), s.end());
  return s;
}

std::uint64_t TypeVector::largest_product(std::size_t t) const {
  auto s = sorted();
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < t && i < s.size(); ++i) {
    auto v = static_cast<std::uint64_t>(s[s.size() - 1 - i]);
    if (p > std::numeric_limits<std::uint64_t>::max() / v)
      throw DomainError("product of alphabet sizes overflows 64 bits");
    p *= v;
  }
  return p;
}

TypeVector TypeVector::without(std::size_t j) const {
  if (sizes_.size() < 2) throw DomainError("cannot remove the only column");
  auto s = sizes_;
  s.erase(s.begin() + static_cast<std::ptrdiff_t>(j));
  return TypeVector(std::move(s));
}

std::string TypeVector::exponent_notation() const {
  std::map<int, int> mult;
  for (int v : sizes_) ++mult[v];
  std::string out;
  for (auto [v, m] : mult) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v) + "^" + std::to_string(m);
  }
  return out;
}

std::string TypeVector::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < sizes_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(sizes_[j]);
  }
  return out;
}

namespace {

int parse_int(std::string_view s, const std::string& context) {
  int value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size())
    throw DomainError("invalid integer '" + std::string(s) + "' in " + context);
  return value;
}

}  // namespace

TypeVector parse_types(const std::string& text) {
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), ',', ' ');
  std::istringstream in(norm);
  std::vector<int> sizes;
  std::string tok;
  while (in >> tok) {
    auto caret = tok.find('^');
    if (caret == std::string::npos) {
      sizes.push_back(parse_int(tok, "type list"));
    } else {
      int v = parse_int(std::string_view(tok).substr(0, caret), "type list");
      int m = parse_int(std::string_view(tok).substr(caret + 1), "type list");
      if (m < 0) throw DomainError("negative exponent in '" + tok + "'");
      sizes.insert(sizes.end(), static_cast<std::size_t>(m), v);
    }
  }
  return TypeVector(std::move(sizes));
}

MixedArray::MixedArray(TypeVector types, std::size_t rows)
    : types_(std::move(types)), rows_(rows), data_(rows * types_.k(), 0) {
  if (rows_ == 0) throw DomainError("array must have N >= 1 rows");
}

MixedArray::MixedArray(TypeVector types, std::vector<std::vector<Level>> rows)
    : MixedArray(std::move(types), rows.size()) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols()) {
      throw DomainError("row " + std::to_string(r + 1) + " has " +
                        std::to_string(rows[r].size()) + " entries, expected " +
                        std::to_string(cols()));
    }
    for (std::size_t j = 0; j < cols(); ++j) set(r, j, rows[r][j]);
  }
}

void MixedArray::set(std::size_t r, std::size_t j, Level value) {
  if (r >= rows_ || j >= cols())
    throw DomainError("entry (" + std::to_string(r + 1) + "," +
                      std::to_string(j + 1) + ") outside the array");
  if (value < 0 || value >= types_[j]) {
    throw DomainError("entry (" + std::to_string(r + 1) + "," +
                      std::to_string(j + 1) + ") = " + std::to_string(value) +
                      " outside alphabet 0.." + std::to_string(types_[j] - 1));
  }
  data_[r * cols() + j] = value;
}

std::vector<Level> MixedArray::column(std::size_t j) const {
  std::vector<Level> c(rows_);
  for (std::size_t r = 0; r < rows_; ++r) c[r] = at(r, j);
  return c;
}

void MixedArray::append(const MixedArray& other) {
  if (!(other.types_ == types_))
    throw DomainError("cannot append arrays of different types");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

MixedArray MixedArray::select_rows(std::span<const std::size_t> rows) const {
  MixedArray out(types_, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw DomainError("row index out of range");
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(rows[i] * cols()),
                cols(),
                out.data_.begin() + static_cast<std::ptrdiff_t>(i * cols()));
  }
  return out;
}

MixedArray full_factorial(const TypeVector& types) {
  std::uint64_t n = types.largest_product(types.k());
  MixedArray out(types, static_cast<std::size_t>(n));
  std::vector<Level> digits(types.k(), 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < types.k(); ++j) out.set(r, j, digits[j]);
    for (std::size_t j = types.k(); j-- > 0;) {
      if (++digits[j] < types[j]) break;
      digits[j] = 0;
    }
  }
  return out;
}

Interaction::Interaction(std::vector<Pin> pins) : pins_(std::move(pins)) {
  std::sort(pins_.begin(), pins_.end());
  for (std::size_t i = 1; i < pins_.size(); ++i) {
    if (pins_[i].column == pins_[i - 1].column)
      throw DomainError("interaction pins column " +
                        std::to_string(pins_[i].column + 1) + " twice");
  }
}

bool Interaction::pins_column(std::size_t j) const {
  return std::any_of(pins_.begin(), pins_.end(),
                     [j](const Pin& p) { return p.column == j; });
}

Interaction Interaction::extended(Pin p) const {
  auto pins = pins_;
  pins.push_back(p);
  return Interaction(std::move(pins));
}

void Interaction::validate(const TypeVector& types) const {
  if (pins_.empty()) throw DomainError("interaction has no pins");
  for (const auto& p : pins_) {
    if (p.column >= types.k())
      throw DomainError("interaction pins column " +
                        std::to_string(p.column + 1) + " but k = " +
                        std::to_string(types.k()));
    if (p.level < 0 || p.level >= types[p.column])
      throw DomainError("interaction level " + std::to_string(p.level) +
                        " outside alphabet of column " +
                        std::to_string(p.column + 1));
  }
}

std::string Interaction::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < pins_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(pins_[i].column + 1) + "=" +
           std::to_string(pins_[i].level);
  }
  return out + ")";
}

RowSet rho(const MixedArray& a, const Interaction& t) {
  t.validate(a.types());
  RowSet out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    bool covers = std::all_of(t.pins().begin(), t.pins().end(),
                              [&](const Pin& p) {
                                return a.at(r, p.column) == p.level;
                              });
    if (covers) out.push_back(r);
  }
  return out;
}

RowSet rho_union(const MixedArray& a, std::span<const Interaction> ts) {
  std::vector<bool> hit(a.rows(), false);
  for (const auto& t : ts)
    for (auto r : rho(a, t)) hit[r] = true;
  RowSet out;
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (hit[r]) out.push_back(r);
  return out;
}

std::vector<Interaction> extensions(const TypeVector& types,
                                    const Interaction& t) {
  t.validate(types);
  if (t.strength() >= types.k())
    throw DomainError("interaction of strength " +
                      std::to_string(t.strength()) +
                      " pins every column; no extension exists");
  std::vector<Interaction> out;
  for (std::size_t j = 0; j < types.k(); ++j) {
    if (t.pins_column(j)) continue;
    for (Level x = 0; x < types[j]; ++x) out.push_back(t.extended({j, x}));
  }
  return out;
}

std::vector<Interaction> extensions(const MixedArray& a, const Interaction& t) {
  return extensions(a.types(), t);
}

std::vector<std::vector<std::size_t>> column_sets(std::size_t k,
                                                  std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  if (t > k) return out;
  std::vector<std::size_t> c(t);
  for (std::size_t i = 0; i < t; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = t;
    while (i > 0 && c[i - 1] == k - t + (i - 1)) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t m = i; m < t; ++m) c[m] = c[m - 1] + 1;
  }
  return out;
}

std::vector<Interaction> all_interactions(const TypeVector& types,
                                          std::size_t t) {
  if (t < 1 || t > types.k())
    throw DomainError("strength t = " + std::to_string(t) +
                      " outside 1..k = " + std::to_string(types.k()));
  std::vector<Interaction> out;
  for (const auto& cols : column_sets(types.k(), t)) {
    std::vector<Level> levels(t, 0);
    while (true) {
      std::vector<Pin> pins(t);
      for (std::size_t i = 0; i < t; ++i) pins[i] = {cols[i], levels[i]};
      out.emplace_back(std::move(pins));
      std::size_t i = t;
      while (i > 0) {
        if (++levels[i - 1] < types[cols[i - 1]]) break;
        levels[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  return out;
}

std::uint64_t interaction_count(const TypeVector& types, std::size_t t) {
  std::uint64_t total = 0;
  for (const auto& cols : column_sets(types.k(), t)) {
    std::uint64_t p = 1;
    for (auto j : cols) p *= static_cast<std::uint64_t>(types[j]);
    total += p;
  }
  return total;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // out * (n - r + i) / i is exact at every step
    unsigned __int128 v = static_cast<unsigned __int128>(out) * (n - r + i) / i;
    if (v > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
    out = static_cast<std::uint64_t>(v);
  }
  return out;
}

std::string format_rows(const RowSet& rows) {
  std::string out = "{";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(rows[i] + 1);
  }
  return out + "}";
}

}  // namespace dta
