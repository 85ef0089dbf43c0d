#pragma once

// Test-only generators and independent oracles. Nothing here calls into the
// kernels it is used to check: counts come from rho() scans over explicitly
// enumerated interactions.

#include <algorithm>
#include <random>

#include "dta/catalog.hpp"
#include "dta/construct.hpp"
#include "dta/core.hpp"

namespace dta::testing {

inline MixedArray table1() { return catalog_get("table1").document->array; }
inline MixedArray example34() {
  return catalog_get("example34").document->array;
}

inline MixedArray random_array(std::mt19937_64& rng, std::size_t rows,
                               const TypeVector& types) {
  MixedArray a(types, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < types.k(); ++j)
      a.set(r, j,
            std::uniform_int_distribution<Level>(0, types[j] - 1)(rng));
  return a;
}

/// Random type vector with k in [kmin, kmax] and sizes in [vmin, vmax].
inline TypeVector random_types(std::mt19937_64& rng, std::size_t kmin,
                               std::size_t kmax, int vmin, int vmax) {
  auto k = std::uniform_int_distribution<std::size_t>(kmin, kmax)(rng);
  std::vector<int> sizes(k);
  for (auto& v : sizes) v = std::uniform_int_distribution<int>(vmin, vmax)(rng);
  return TypeVector(sizes);
}

/// Minimum |rho| over every t-way interaction.
inline std::uint64_t oracle_coverage_index(const MixedArray& a, std::size_t t) {
  std::uint64_t best = a.rows();
  for (const auto& it : all_interactions(a.types(), t))
    best = std::min<std::uint64_t>(best, rho(a, it).size());
  return best;
}

inline std::uint64_t oracle_max_cover(const MixedArray& a, std::size_t t) {
  std::uint64_t best = 0;
  for (const auto& it : all_interactions(a.types(), t))
    best = std::max<std::uint64_t>(best, rho(a, it).size());
  return best;
}

/// No (t+1)-way interaction covered twice.
inline bool oracle_super_simple(const MixedArray& a, std::size_t t) {
  for (const auto& it : all_interactions(a.types(), t + 1))
    if (rho(a, it).size() > 1) return false;
  return true;
}

inline MixedArray stacked(const MixedArray& a, std::size_t copies) {
  MixedArray out = a;
  for (std::size_t i = 1; i < copies; ++i) out.append(a);
  return out;
}

/// Random row permutation (properties are invariant under it).
inline MixedArray shuffled_rows(const MixedArray& a, std::mt19937_64& rng) {
  std::vector<std::size_t> order(a.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  return a.select_rows(order);
}

}  // namespace dta::testing
