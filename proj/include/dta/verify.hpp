#pragma once

// Predicates and bounds over mixed arrays: coverage index, super-simplicity,
// d-extendibility, the two detecting-array checks, the size lower bound and
// the known necessary conditions used to screen search parameters.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dta/core.hpp"
#include "dta/kernels.hpp"

namespace dta {

/// Enumeration caps. Tuple counting keeps one counter per t-tuple of every
/// column set; brute-force detection enumerates C(M, d) * M subset tests.
struct VerifyLimits {
  std::uint64_t max_tuple_cells = std::uint64_t{1} << 28;
  std::uint64_t max_enumeration = 2'000'000'000;
  std::size_t max_extendible_d = 4;

  /// Defaults, with max_enumeration overridden by $DTA_MAX_ENUM when set.
  static VerifyLimits from_env();
};

struct Witness {
  std::vector<Interaction> interactions;
  RowSet rows;
  std::string note;
};

struct VerifyReport {
  std::string property;
  bool holds = false;
  /// False only for UNKNOWN outcomes of check_search_constraints.
  bool conclusive = true;
  /// Present iff !holds.
  std::optional<Witness> witness;
  std::map<std::string, std::int64_t> stats;
  std::string detail;
};

/// Largest lambda for which every t-tuple on every t columns appears at
/// least lambda times (0 when some tuple is missing).
std::uint64_t coverage_index(const MixedArray& a, std::size_t t,
                             const VerifyLimits& limits = {},
                             Exec exec = Exec::parallel);

/// Every (t+1)-tuple appears at most once in every t+1 columns.
VerifyReport is_super_simple(const MixedArray& a, std::size_t t,
                             const VerifyLimits& limits = {},
                             Exec exec = Exec::parallel);

/// No t-way interaction has its rows covered by the union of at most d of
/// its extensions (extensions may mix columns).
VerifyReport is_d_extendible(const MixedArray& a, std::size_t t,
                             std::size_t d, const VerifyLimits& limits = {},
                             Exec exec = Exec::parallel);

/// Structural check: coverage index >= d+1 and d-extendible. Reports
/// stats["optimum"] = 1 when N equals lower_bound(d, t, types).
VerifyReport is_detecting(const MixedArray& a, std::size_t d, std::size_t t,
                          const VerifyLimits& limits = {},
                          Exec exec = Exec::parallel);

/// Definitional check over every t-way T and every set of exactly d t-way
/// interactions: rho(T) within rho(set) iff T is in the set. Refuses with
/// EnumerationLimit above limits.max_enumeration subset tests.
VerifyReport is_detecting_brute(const MixedArray& a, std::size_t d,
                                std::size_t t, const VerifyLimits& limits = {},
                                Exec exec = Exec::parallel);

/// (d+1) times the product of the t largest alphabet sizes.
std::uint64_t lower_bound(std::size_t d, std::size_t t,
                          const TypeVector& types);

/// Every t-way interaction is covered at least d+1 times.
VerifyReport min_rho_check(const MixedArray& a, std::size_t d, std::size_t t,
                           const VerifyLimits& limits = {},
                           Exec exec = Exec::parallel);

/// Necessary conditions for an optimum (1,2)-DTA: k <= 2q for type q^k, and
/// the restrictions on the family 2^u 3^k w^1 (w >= 3). REJECT is
/// holds=false; PASS is holds=true; UNKNOWN is holds=true, conclusive=false.
VerifyReport check_search_constraints(const TypeVector& types, std::size_t d,
                                      std::size_t t);

/// Throws InfeasibleParameters unless t < k, d < min v_j and all v_j >= 2.
void require_dta_parameters(const TypeVector& types, std::size_t d,
                            std::size_t t);

}  // namespace dta
