// OpenMP kernels. Each parallel loop records per-task results and a serial
// pass picks the lowest-index finding, so output matches kernels_serial.cpp.

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>

#include "kernels_detail.hpp"

namespace dta::detail::omp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void lower_to(std::atomic<std::size_t>& best, std::size_t value) {
  auto cur = best.load(std::memory_order_relaxed);
  while (value < cur &&
         !best.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

}  // namespace

void fill_masks(const MixedArray& a, const ColumnSetSpace& space,
                MaskTable& masks) {
  const auto sets = static_cast<std::ptrdiff_t>(space.sets.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < sets; ++s) {
    const auto& cols = space.sets[static_cast<std::size_t>(s)];
    auto base = space.offsets[static_cast<std::size_t>(s)];
    for (std::size_t r = 0; r < a.rows(); ++r)
      masks.set(base + tuple_index(a, r, cols), r);
  }
}

CoverageStats coverage(const MixedArray& a, std::size_t t) {
  auto space = column_set_space(a.types(), t);
  const std::size_t n = space.sets.size();
  std::vector<std::uint64_t> mins(n), maxs(n), argmin(n);
#pragma omp parallel
  {
    std::vector<std::uint64_t> counts;
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(n); ++s) {
      auto su = static_cast<std::size_t>(s);
      counts.assign(space.sizes[su], 0);
      for (std::size_t r = 0; r < a.rows(); ++r)
        ++counts[tuple_index(a, r, space.sets[su])];
      auto lo = std::min_element(counts.begin(), counts.end());
      mins[su] = *lo;
      argmin[su] = static_cast<std::uint64_t>(lo - counts.begin());
      maxs[su] = *std::max_element(counts.begin(), counts.end());
    }
  }
  CoverageStats out;
  std::size_t best = 0;
  for (std::size_t s = 0; s < n; ++s)
    if (mins[s] < mins[best]) best = s;
  out.min_count = mins[best];
  out.max_count = *std::max_element(maxs.begin(), maxs.end());
  out.min_witness = tuple_interaction(a.types(), space.sets[best], argmin[best]);
  return out;
}

std::optional<DuplicateTuple> first_duplicate(const MixedArray& a,
                                              std::size_t t) {
  auto space = column_set_space(a.types(), t + 1);
  const std::size_t n = space.sets.size();
  std::vector<std::uint64_t> dup(n, std::numeric_limits<std::uint64_t>::max());
  std::atomic<std::size_t> best{kNone};
#pragma omp parallel
  {
    std::vector<std::uint32_t> counts;
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(n); ++s) {
      auto su = static_cast<std::size_t>(s);
      if (su > best.load(std::memory_order_relaxed)) continue;
      counts.assign(space.sizes[su], 0);
      for (std::size_t r = 0; r < a.rows(); ++r)
        ++counts[tuple_index(a, r, space.sets[su])];
      auto it = std::find_if(counts.begin(), counts.end(),
                             [](std::uint32_t c) { return c > 1; });
      if (it != counts.end()) {
        dup[su] = static_cast<std::uint64_t>(it - counts.begin());
        lower_to(best, su);
      }
    }
  }
  auto s = best.load();
  if (s == kNone) return std::nullopt;
  DuplicateTuple out;
  out.tuple = tuple_interaction(a.types(), space.sets[s], dup[s]);
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (tuple_index(a, r, space.sets[s]) == dup[s]) out.rows.push_back(r);
  return out;
}

std::optional<ExtensionCover> first_extension_cover(const MixedArray& a,
                                                    std::size_t t,
                                                    std::size_t d) {
  auto pins = pin_masks(a);
  auto table = build_interaction_table(a, t, Exec::parallel);
  const std::size_t m = table.interactions.size();
  std::vector<std::optional<std::vector<Interaction>>> found(m);
  std::atomic<std::size_t> best{kNone};
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
    auto iu = static_cast<std::size_t>(i);
    if (iu > best.load(std::memory_order_relaxed)) continue;
    found[iu] = find_extension_cover(a, pins, table.interactions[iu],
                                     table.masks[iu], d);
    if (found[iu]) lower_to(best, iu);
  }
  auto i = best.load();
  if (i == kNone) return std::nullopt;
  return ExtensionCover{table.interactions[i], std::move(*found[i])};
}

std::optional<DetectionViolation> first_detection_violation(
    const InteractionTable& table, std::size_t d) {
  const std::size_t m = table.interactions.size();
  if (d == 0 || d > m) return std::nullopt;
  const std::size_t words = table.masks.words();
  std::vector<std::optional<DetectionViolation>> found(m);
  std::atomic<std::size_t> best{kNone};
  // One task per leading index; combinations below it run serially in
  // lexicographic order so each task's first hit is its lexicographic first.
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t lead = 0; lead < static_cast<std::ptrdiff_t>(m - d + 1);
       ++lead) {
    auto lu = static_cast<std::size_t>(lead);
    if (lu > best.load(std::memory_order_relaxed)) continue;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = lu + i;
    std::vector<std::uint64_t> uni(words);
    bool done = false;
    while (!done) {
      std::fill(uni.begin(), uni.end(), 0);
      for (auto i : idx) bits::or_into(uni, table.masks[i]);
      std::size_t next_member = 0;
      for (std::size_t t = 0; t < m; ++t) {
        bool member = next_member < d && idx[next_member] == t;
        if (member) ++next_member;
        if (bits::subset(table.masks[t], uni) != member) {
          DetectionViolation v{table.interactions[t], {}, member};
          for (auto i : idx) v.set.push_back(table.interactions[i]);
          found[lu] = std::move(v);
          lower_to(best, lu);
          done = true;
          break;
        }
      }
      if (done) break;
      // Advance positions 1..d-1; position 0 stays at `lead`.
      std::size_t i = d;
      while (i > 1 && idx[i - 1] == m - d + (i - 1)) --i;
      if (i <= 1) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  auto lead = best.load();
  if (lead == kNone) return std::nullopt;
  return found[lead];
}

std::vector<std::size_t> contained_interactions(
    const InteractionTable& table, std::span<const std::uint64_t> fail) {
  const std::size_t m = table.interactions.size();
  std::vector<char> hit(m, 0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i)
    hit[static_cast<std::size_t>(i)] =
        bits::subset(table.masks[static_cast<std::size_t>(i)], fail);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m; ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

}  // namespace dta::detail::omp
