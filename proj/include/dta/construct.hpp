#pragma once

// Deterministic builders: orthogonal arrays, optimum index-1 MCAs with
// k = t+1, Kronecker composition, column insertion, cyclic replication and
// super-simple OA derivation.

#include <cstddef>

#include "dta/core.hpp"

namespace dta {

/// OA(t, t+1, v) of index 1: rows (x_1..x_t, sum x_i mod v) over Z_v^t in
/// lexicographic order.
MixedArray oa_sum(std::size_t t, int v);

/// Bush construction over the prime field Z_q: one row per polynomial of
/// degree < t, columns = evaluations at 0..q-1 plus the coefficient of
/// x^(t-1). Index-1 OA(t, q+1, q) with q^t rows. Requires q prime, t <= q.
MixedArray oa_bush(std::size_t t, int q);

bool is_prime(int q);

/// Index-1 MCA(N; t, t+1, types) with N = product of all sizes but the
/// smallest. Column order follows `types`; the first smallest column holds
/// the sum (mod its size) of the others, which form a full factorial.
MixedArray mca_optimum(std::size_t t, const TypeVector& types);

/// Appends e blocks to `a`: block r (1..e) is `b` with a constant column
/// v_i - 1 + r inserted at position `col`. `a` must be an MCA at strength t
/// and `b` an MCA at strength t-1 on a's types without column `col`; both
/// are checked. Output type has v_col + e at `col`.
MixedArray insert_expand(const MixedArray& a, const MixedArray& b,
                         std::size_t col, int e, std::size_t t);

/// Kronecker product: row (i, r) holds a[i][j] * u_j + b[r][j] where u_j is
/// b's size for column j. Output type (v_j * u_j).
MixedArray kronecker(const MixedArray& a, const MixedArray& b);

/// Mixed-radix encoding used by kronecker().
constexpr Level kron_level(Level a, Level b, int u) { return a * u + b; }

/// d stacked copies of an index-1 optimum MCA with k = t+1; copy i adds i
/// (mod v) to the column outside the full-factorial part. Requires
/// 1 <= d <= v of that column.
MixedArray replicate_cyclic(const MixedArray& a, std::size_t d);

/// From an index-1 OA(t+1, k+1, m): rows whose last column is below lam,
/// last column dropped. Gives a super-simple OA_lam(t, k, m); 2 <= lam <= m.
MixedArray derive_super_simple(const MixedArray& a, int lam);

}  // namespace dta
