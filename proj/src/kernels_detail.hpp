#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dta/core.hpp"
#include "dta/kernels.hpp"

namespace dta::detail {

/// The t-column sets of a type vector with their tuple-space sizes and
/// offsets into a flat concatenation (the all_interactions() order).
struct ColumnSetSpace {
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> offsets;
  std::uint64_t total = 0;
};

ColumnSetSpace column_set_space(const TypeVector& types, std::size_t t);

/// Mixed-radix index of row r restricted to `cols` (last column fastest).
inline std::uint64_t tuple_index(const MixedArray& a, std::size_t r,
                                 std::span<const std::size_t> cols) {
  std::uint64_t idx = 0;
  for (auto j : cols)
    idx = idx * static_cast<std::uint64_t>(a.types()[j]) +
          static_cast<std::uint64_t>(a.at(r, j));
  return idx;
}

Interaction tuple_interaction(const TypeVector& types,
                              std::span<const std::size_t> cols,
                              std::uint64_t idx);

/// Single-pin row masks: index offset[j] + level.
struct PinMasks {
  std::vector<std::size_t> offset;
  MaskTable masks;
};

PinMasks pin_masks(const MixedArray& a);

/// Searches for at most `d` extensions of base interaction `base` (row mask
/// `base_rows`) whose rows cover base_rows. Returns the cover, smallest size
/// first, lexicographic within a size.
std::optional<std::vector<Interaction>> find_extension_cover(
    const MixedArray& a, const PinMasks& pins, const Interaction& base,
    std::span<const std::uint64_t> base_rows, std::size_t d);

// Serial reference and OpenMP variants behind kernels::*.
namespace serial {
CoverageStats coverage(const MixedArray& a, std::size_t t);
std::optional<DuplicateTuple> first_duplicate(const MixedArray& a,
                                              std::size_t t);
std::optional<ExtensionCover> first_extension_cover(const MixedArray& a,
                                                    std::size_t t,
                                                    std::size_t d);
std::optional<DetectionViolation> first_detection_violation(
    const InteractionTable& table, std::size_t d);
std::vector<std::size_t> contained_interactions(
    const InteractionTable& table, std::span<const std::uint64_t> fail);
void fill_masks(const MixedArray& a, const ColumnSetSpace& space,
                MaskTable& masks);
}  // namespace serial

namespace omp {
CoverageStats coverage(const MixedArray& a, std::size_t t);
std::optional<DuplicateTuple> first_duplicate(const MixedArray& a,
                                              std::size_t t);
std::optional<ExtensionCover> first_extension_cover(const MixedArray& a,
                                                    std::size_t t,
                                                    std::size_t d);
std::optional<DetectionViolation> first_detection_violation(
    const InteractionTable& table, std::size_t d);
std::vector<std::size_t> contained_interactions(
    const InteractionTable& table, std::span<const std::uint64_t> fail);
void fill_masks(const MixedArray& a, const ColumnSetSpace& space,
                MaskTable& masks);
}  // namespace omp

}  // namespace dta::detail
