#include "dta/kernels.hpp"

#include "kernels_detail.hpp"

namespace dta {

RowSet bits::to_rows(std::span<const std::uint64_t> a, std::size_t rows) {
  RowSet out;
  for (std::size_t r = 0; r < rows; ++r)
    if (a[r / 64] >> (r % 64) & 1) out.push_back(r);
  return out;
}

namespace detail {

ColumnSetSpace column_set_space(const TypeVector& types, std::size_t t) {
  ColumnSetSpace s;
  s.sets = column_sets(types.k(), t);
  for (const auto& cols : s.sets) {
    std::uint64_t size = 1;
    for (auto j : cols) size *= static_cast<std::uint64_t>(types[j]);
    s.offsets.push_back(s.total);
    s.sizes.push_back(size);
    s.total += size;
  }
  return s;
}

Interaction tuple_interaction(const TypeVector& types,
                              std::span<const std::size_t> cols,
                              std::uint64_t idx) {
  std::vector<Pin> pins(cols.size());
  for (std::size_t i = cols.size(); i-- > 0;) {
    auto v = static_cast<std::uint64_t>(types[cols[i]]);
    pins[i] = {cols[i], static_cast<Level>(idx % v)};
    idx /= v;
  }
  return Interaction(std::move(pins));
}

PinMasks pin_masks(const MixedArray& a) {
  PinMasks p;
  std::size_t total = 0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    p.offset.push_back(total);
    total += static_cast<std::size_t>(a.types()[j]);
  }
  p.masks = MaskTable(a.rows(), total);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < a.cols(); ++j)
      p.masks.set(p.offset[j] + static_cast<std::size_t>(a.at(r, j)), r);
  return p;
}

namespace {

struct CoverSearch {
  std::span<const std::uint64_t> target;
  const std::vector<std::vector<std::uint64_t>>& cand;
  std::size_t size;
  std::vector<std::size_t> chosen;

  bool dfs(std::size_t start, std::vector<std::uint64_t>& acc) {
    if (chosen.size() == size) return bits::subset(target, acc);
    std::vector<std::uint64_t> next(acc.size());
    for (std::size_t i = start; i + (size - chosen.size()) <= cand.size();
         ++i) {
      for (std::size_t w = 0; w < acc.size(); ++w) next[w] = acc[w] | cand[i][w];
      chosen.push_back(i);
      if (dfs(i + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Interaction>> find_extension_cover(
    const MixedArray& a, const PinMasks& pins, const Interaction& base,
    std::span<const std::uint64_t> base_rows, std::size_t d) {
  if (!bits::any(base_rows)) return std::vector<Interaction>{};
  std::vector<Pin> cand_pins;
  std::vector<std::vector<std::uint64_t>> cand;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (base.pins_column(j)) continue;
    for (Level x = 0; x < a.types()[j]; ++x) {
      auto col = pins.masks[pins.offset[j] + static_cast<std::size_t>(x)];
      std::vector<std::uint64_t> m(base_rows.size());
      bool nonempty = false;
      for (std::size_t w = 0; w < m.size(); ++w) {
        m[w] = base_rows[w] & col[w];
        nonempty |= m[w] != 0;
      }
      if (!nonempty) continue;
      cand_pins.push_back({j, x});
      cand.push_back(std::move(m));
    }
  }
  for (std::size_t size = 1; size <= d && size <= cand.size(); ++size) {
    CoverSearch search{base_rows, cand, size, {}};
    std::vector<std::uint64_t> acc(base_rows.size(), 0);
    if (search.dfs(0, acc)) {
      std::vector<Interaction> cover;
      for (auto i : search.chosen) cover.push_back(base.extended(cand_pins[i]));
      return cover;
    }
  }
  return std::nullopt;
}

}  // namespace detail

InteractionTable build_interaction_table(const MixedArray& a, std::size_t t,
                                         Exec exec) {
  InteractionTable table;
  table.strength = t;
  table.interactions = all_interactions(a.types(), t);
  auto space = detail::column_set_space(a.types(), t);
  table.masks = MaskTable(a.rows(), table.interactions.size());
  if (exec == Exec::serial)
    detail::serial::fill_masks(a, space, table.masks);
  else
    detail::omp::fill_masks(a, space, table.masks);
  return table;
}

namespace kernels {

namespace {

void check_tuple_cap(const TypeVector& types, std::size_t t,
                     std::uint64_t cap) {
  auto required = interaction_count(types, t);
  if (required > cap)
    throw EnumerationLimit("tuple counting at strength " + std::to_string(t) +
                               " exceeds the configured cell cap",
                           required, cap);
}

}  // namespace

CoverageStats coverage(const MixedArray& a, std::size_t t, std::uint64_t cap,
                       Exec exec) {
  if (t < 1 || t > a.cols())
    throw DomainError("strength t = " + std::to_string(t) +
                      " outside 1..k = " + std::to_string(a.cols()));
  check_tuple_cap(a.types(), t, cap);
  return exec == Exec::serial ? detail::serial::coverage(a, t)
                              : detail::omp::coverage(a, t);
}

std::optional<DuplicateTuple> first_duplicate(const MixedArray& a,
                                              std::size_t t, std::uint64_t cap,
                                              Exec exec) {
  if (t + 1 > a.cols())
    throw DomainError("super-simplicity at strength " + std::to_string(t) +
                      " needs t+1 <= k = " + std::to_string(a.cols()));
  check_tuple_cap(a.types(), t + 1, cap);
  return exec == Exec::serial ? detail::serial::first_duplicate(a, t)
                              : detail::omp::first_duplicate(a, t);
}

std::optional<ExtensionCover> first_extension_cover(const MixedArray& a,
                                                    std::size_t t,
                                                    std::size_t d, Exec exec) {
  return exec == Exec::serial ? detail::serial::first_extension_cover(a, t, d)
                              : detail::omp::first_extension_cover(a, t, d);
}

std::optional<DetectionViolation> first_detection_violation(
    const InteractionTable& table, std::size_t d, Exec exec) {
  return exec == Exec::serial
             ? detail::serial::first_detection_violation(table, d)
             : detail::omp::first_detection_violation(table, d);
}

std::vector<std::size_t> contained_interactions(
    const InteractionTable& table, std::span<const std::uint64_t> fail,
    Exec exec) {
  return exec == Exec::serial
             ? detail::serial::contained_interactions(table, fail)
             : detail::omp::contained_interactions(table, fail);
}

}  // namespace kernels

}  // namespace dta
