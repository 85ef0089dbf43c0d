#pragma once

// Enumeration kernels shared by verify and locate.
//
// Every kernel exists twice: a straightforward serial reference and an
// OpenMP version. Both return identical results (the parallel versions merge
// per-thread findings so the lexicographically first witness wins); tests
// compare them and bench/ times them.

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dta/core.hpp"

namespace dta {

enum class Exec { serial, parallel };

/// Row bitsets for many interactions, stored contiguously.
class MaskTable {
 public:
  MaskTable() = default;
  MaskTable(std::size_t rows, std::size_t count)
      : rows_(rows), words_((rows + 63) / 64), count_(count),
        bits_(words_ * count, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t words() const { return words_; }
  std::size_t size() const { return count_; }

  std::span<std::uint64_t> operator[](std::size_t i) {
    return {bits_.data() + i * words_, words_};
  }
  std::span<const std::uint64_t> operator[](std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }
  void set(std::size_t i, std::size_t row) {
    bits_[i * words_ + row / 64] |= std::uint64_t{1} << (row % 64);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t words_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> bits_;
};

namespace bits {

inline bool subset(std::span<const std::uint64_t> a,
                   std::span<const std::uint64_t> b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

inline bool any(std::span<const std::uint64_t> a) {
  for (auto w : a)
    if (w) return true;
  return false;
}

inline std::size_t count(std::span<const std::uint64_t> a) {
  std::size_t c = 0;
  for (auto w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline void or_into(std::span<std::uint64_t> dst,
                    std::span<const std::uint64_t> src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
}

RowSet to_rows(std::span<const std::uint64_t> a, std::size_t rows);

}  // namespace bits

/// All t-way interactions of an array with their row bitsets, in
/// all_interactions() order.
struct InteractionTable {
  std::size_t strength = 0;
  std::vector<Interaction> interactions;
  MaskTable masks;
};

InteractionTable build_interaction_table(const MixedArray& a, std::size_t t,
                                         Exec exec = Exec::parallel);

/// Per-column-set tuple counts at strength t.
struct CoverageStats {
  std::uint64_t min_count = 0;
  std::uint64_t max_count = 0;
  /// Interaction attaining min_count (first in enumeration order).
  Interaction min_witness;
};

/// A (t+1)-tuple appearing more than once.
struct DuplicateTuple {
  Interaction tuple;
  RowSet rows;
};

/// A t-way interaction whose rows are covered by at most d extensions.
struct ExtensionCover {
  Interaction base;
  std::vector<Interaction> cover;
};

/// A violation of the detecting condition: rho(T) within rho(set) iff T in set.
struct DetectionViolation {
  Interaction target;
  std::vector<Interaction> set;
  bool target_in_set = false;
};

namespace kernels {

/// Aborts with EnumerationLimit when the sum over column sets of the tuple
/// space exceeds `cap`.
CoverageStats coverage(const MixedArray& a, std::size_t t, std::uint64_t cap,
                       Exec exec);

std::optional<DuplicateTuple> first_duplicate(const MixedArray& a,
                                              std::size_t t, std::uint64_t cap,
                                              Exec exec);

/// Smallest cover (by size, then lexicographic) for the first failing base.
std::optional<ExtensionCover> first_extension_cover(const MixedArray& a,
                                                    std::size_t t,
                                                    std::size_t d, Exec exec);

/// Definitional scan over all size-d interaction sets.
std::optional<DetectionViolation> first_detection_violation(
    const InteractionTable& table, std::size_t d, Exec exec);

/// Indices of interactions whose row set lies inside `fail`.
std::vector<std::size_t> contained_interactions(
    const InteractionTable& table, std::span<const std::uint64_t> fail,
    Exec exec);

}  // namespace kernels

}  // namespace dta
