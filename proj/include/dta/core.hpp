#pragma once

// Array and interaction data model for mixed-level detecting arrays.
//
// Levels of column j are the integers 0..v_j-1. Columns and rows are
// 0-based throughout the library; user-facing output (CLI, reports) adds one
// to row and column indices.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dta {

using Level = int;

/// Raised when an argument violates a documented precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when (d, t, types) violate the standing conventions
/// 2 <= v_j, t < k and d < min v_j, or a construction's feasibility condition.
class InfeasibleParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive enumeration would exceed its configured cap.
class EnumerationLimit : public std::runtime_error {
 public:
  EnumerationLimit(const std::string& what, std::uint64_t required,
                   std::uint64_t cap)
      : std::runtime_error(what + " (requires " + std::to_string(required) +
                           ", cap " + std::to_string(cap) + ")"),
        required_(required), cap_(cap) {}
  std::uint64_t required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

/// Alphabet size of every column.
class TypeVector {
 public:
  TypeVector() = default;
  explicit TypeVector(std::vector<int> sizes);
  TypeVector(std::initializer_list<int> sizes)
      : TypeVector(std::vector<int>(sizes)) {}

  std::size_t k() const { return sizes_.size(); }
  int operator[](std::size_t j) const { return sizes_[j]; }
  const std::vector<int>& sizes() const { return sizes_; }
  int min_size() const;
  int max_size() const;

  /// Sizes sorted nondecreasing (the conventional v_1 <= ... <= v_k order).
  std::vector<int> sorted() const;
  /// Product of the t largest sizes.
  std::uint64_t largest_product(std::size_t t) const;
  /// Same sizes with column j removed.
  TypeVector without(std::size_t j) const;

  /// "2^1 3^3" style rendering of the sorted multiset.
  std::string exponent_notation() const;
  /// Comma separated, in column order.
  std::string to_string() const;

  bool operator==(const TypeVector&) const = default;

 private:
  std::vector<int> sizes_;
};

/// Parses "2,3,3,3" or "2 3 3 3" or exponent notation "2^1 3^3" / "2^1,3^3".
TypeVector parse_types(const std::string& text);

/// N x k matrix of levels, row-major.
class MixedArray {
 public:
  MixedArray() = default;
  MixedArray(TypeVector types, std::size_t rows);
  MixedArray(TypeVector types, std::vector<std::vector<Level>> rows);

  const TypeVector& types() const { return types_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return types_.k(); }

  Level at(std::size_t r, std::size_t j) const { return data_[r * cols() + j]; }
  /// Range-checked store.
  void set(std::size_t r, std::size_t j, Level value);
  std::span<const Level> row(std::size_t r) const {
    return {data_.data() + r * cols(), cols()};
  }
  std::vector<Level> column(std::size_t j) const;
  void swap_in_column(std::size_t j, std::size_t r1, std::size_t r2) {
    std::swap(data_[r1 * cols() + j], data_[r2 * cols() + j]);
  }
  const std::vector<Level>& data() const { return data_; }

  /// Rows of `other` appended below; types must match.
  void append(const MixedArray& other);
  /// Copy restricted to the listed rows, in that order.
  MixedArray select_rows(std::span<const std::size_t> rows) const;

  bool operator==(const MixedArray&) const = default;

 private:
  TypeVector types_;
  std::size_t rows_ = 0;
  std::vector<Level> data_;
};

/// Full factorial over `types` in lexicographic order (last column fastest).
MixedArray full_factorial(const TypeVector& types);

struct Pin {
  std::size_t column = 0;
  Level level = 0;
  bool operator==(const Pin&) const = default;
  auto operator<=>(const Pin&) const = default;
};

/// A t-way interaction: pins on distinct columns, kept sorted by column.
class Interaction {
 public:
  Interaction() = default;
  explicit Interaction(std::vector<Pin> pins);
  Interaction(std::initializer_list<Pin> pins)
      : Interaction(std::vector<Pin>(pins)) {}

  std::size_t strength() const { return pins_.size(); }
  const std::vector<Pin>& pins() const { return pins_; }
  bool pins_column(std::size_t j) const;
  /// Same interaction with one more pin; `p.column` must be unpinned.
  Interaction extended(Pin p) const;
  /// Throws DomainError unless every pin is a valid (column, level) of `types`.
  void validate(const TypeVector& types) const;
  /// "(1=0, 3=2)" with 1-based columns.
  std::string to_string() const;

  bool operator==(const Interaction&) const = default;
  auto operator<=>(const Interaction&) const = default;

 private:
  std::vector<Pin> pins_;
};

/// Row indices (0-based), ascending, no duplicates.
using RowSet = std::vector<std::size_t>;

/// Rows of A covering every pin of T, ascending.
RowSet rho(const MixedArray& a, const Interaction& t);

/// Union of rho over the given interactions, ascending.
RowSet rho_union(const MixedArray& a, std::span<const Interaction> ts);

/// All (t+1)-way extensions of T: one extra pin on each unpinned column, in
/// column-then-level order. Count is the sum of the unpinned sizes.
std::vector<Interaction> extensions(const MixedArray& a, const Interaction& t);
std::vector<Interaction> extensions(const TypeVector& types,
                                    const Interaction& t);

/// All t-column subsets of {0..k-1} in lexicographic order.
std::vector<std::vector<std::size_t>> column_sets(std::size_t k, std::size_t t);

/// Every t-way interaction of `types`, ordered by column set then by levels
/// (last pinned column fastest).
std::vector<Interaction> all_interactions(const TypeVector& types,
                                          std::size_t t);

/// Number of t-way interactions of `types`.
std::uint64_t interaction_count(const TypeVector& types, std::size_t t);

std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// 1-based rendering "{1, 2, 16}".
std::string format_rows(const RowSet& rows);

}  // namespace dta
