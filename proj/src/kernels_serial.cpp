// Serial reference kernels. Kept deliberately plain: these are the baseline
// the OpenMP kernels are checked against.

#include <algorithm>
#include <map>

#include "kernels_detail.hpp"

namespace dta::detail::serial {

void fill_masks(const MixedArray& a, const ColumnSetSpace& space,
                MaskTable& masks) {
  for (std::size_t s = 0; s < space.sets.size(); ++s)
    for (std::size_t r = 0; r < a.rows(); ++r)
      masks.set(space.offsets[s] + tuple_index(a, r, space.sets[s]), r);
}

CoverageStats coverage(const MixedArray& a, std::size_t t) {
  CoverageStats out;
  bool first = true;
  for (const auto& cols : column_sets(a.cols(), t)) {
    std::map<std::vector<Level>, std::uint64_t> counts;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      std::vector<Level> key;
      for (auto j : cols) key.push_back(a.at(r, j));
      ++counts[key];
    }
    // Walk the full tuple space so absent tuples count as zero.
    std::vector<Level> key(t, 0);
    while (true) {
      auto it = counts.find(key);
      std::uint64_t c = it == counts.end() ? 0 : it->second;
      if (first || c < out.min_count) {
        std::vector<Pin> pins;
        for (std::size_t i = 0; i < t; ++i) pins.push_back({cols[i], key[i]});
        out.min_count = c;
        out.min_witness = Interaction(std::move(pins));
      }
      if (first || c > out.max_count) out.max_count = c;
      first = false;
      std::size_t i = t;
      while (i > 0) {
        if (++key[i - 1] < a.types()[cols[i - 1]]) break;
        key[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  return out;
}

std::optional<DuplicateTuple> first_duplicate(const MixedArray& a,
                                              std::size_t t) {
  for (const auto& cols : column_sets(a.cols(), t + 1)) {
    std::map<std::vector<Level>, RowSet> seen;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      std::vector<Level> key;
      for (auto j : cols) key.push_back(a.at(r, j));
      seen[key].push_back(r);
    }
    // std::map iterates keys lexicographically, matching tuple order.
    for (const auto& [key, rows] : seen) {
      if (rows.size() < 2) continue;
      std::vector<Pin> pins;
      for (std::size_t i = 0; i < cols.size(); ++i)
        pins.push_back({cols[i], key[i]});
      return DuplicateTuple{Interaction(std::move(pins)), rows};
    }
  }
  return std::nullopt;
}

std::optional<ExtensionCover> first_extension_cover(const MixedArray& a,
                                                    std::size_t t,
                                                    std::size_t d) {
  auto pins = pin_masks(a);
  auto table = all_interactions(a.types(), t);
  for (const auto& base : table) {
    std::vector<std::uint64_t> rows((a.rows() + 63) / 64, 0);
    for (auto r : rho(a, base)) rows[r / 64] |= std::uint64_t{1} << (r % 64);
    if (auto cover = find_extension_cover(a, pins, base, rows, d))
      return ExtensionCover{base, std::move(*cover)};
  }
  return std::nullopt;
}

std::optional<DetectionViolation> first_detection_violation(
    const InteractionTable& table, std::size_t d) {
  const std::size_t m = table.interactions.size();
  if (d == 0 || d > m) return std::nullopt;
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  std::vector<std::uint64_t> uni(table.masks.words());
  while (true) {
    std::fill(uni.begin(), uni.end(), 0);
    for (auto i : idx) bits::or_into(uni, table.masks[i]);
    for (std::size_t t = 0; t < m; ++t) {
      bool inside = bits::subset(table.masks[t], uni);
      bool member = std::find(idx.begin(), idx.end(), t) != idx.end();
      if (inside != member) {
        DetectionViolation v{table.interactions[t], {}, member};
        for (auto i : idx) v.set.push_back(table.interactions[i]);
        return v;
      }
    }
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == m - d + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::nullopt;
}

std::vector<std::size_t> contained_interactions(
    const InteractionTable& table, std::span<const std::uint64_t> fail) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.interactions.size(); ++i)
    if (bits::subset(table.masks[i], fail)) out.push_back(i);
  return out;
}

}  // namespace dta::detail::serial
