#pragma once

// Simulated annealing for (1,2)-detecting arrays.
//
// The objective counts pairs (T, E) of a 2-way interaction T and an
// extension E with |rho(T)| == |rho(E)|; it is zero exactly when the array
// is a (1,2)-DTA. Moves swap two entries of one column, so every column keeps
// its initial (balanced) level multiset. Worse-or-equal moves are accepted
// with a constant probability; there is no cooling schedule.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dta/core.hpp"

namespace dta {

struct SearchConfig {
  TypeVector types;
  /// Defaults to lower_bound(1, 2, types).
  std::optional<std::size_t> rows;
  std::uint64_t seed = 1;
  /// Move budget per chain.
  std::uint64_t max_iters = 5'000'000;
  /// Number of independent chains; chain i uses seed + i.
  std::size_t restarts = 1;
  double accept_prob = 0.01;
  /// Ignore a REJECT from check_search_constraints.
  bool force = false;
  /// Run chains concurrently. The reported array is still the one from the
  /// lowest-indexed successful chain.
  bool parallel_chains = false;
  /// Compare the incremental objective with a full recount every n moves
  /// (0 disables).
  std::uint64_t audit_every = 0;
};

enum class SearchOutcome { found, exhausted };

struct ChainSummary {
  std::uint64_t seed = 0;
  std::uint64_t initial_delta = 0;
  std::uint64_t best_delta = 0;
  std::uint64_t final_delta = 0;
  std::uint64_t iterations = 0;
  std::uint64_t accepted = 0;
  bool found = false;
  bool operator==(const ChainSummary&) const = default;
};

struct SearchReport {
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::optional<MixedArray> array;
  std::optional<std::size_t> winning_chain;
  std::vector<ChainSummary> chains;
  double seconds = 0.0;

  /// Equality ignoring wall-clock time.
  bool same_result(const SearchReport& other) const;
};

/// Number of (2-way interaction, extension) pairs with equal cover counts.
/// Requires k >= 3.
std::uint64_t sa_objective(const MixedArray& a);

/// Pair and triple cover counts of an array, maintained under column swaps
/// so the objective can be updated from the touched terms only.
class DeltaTracker {
 public:
  explicit DeltaTracker(MixedArray a);

  const MixedArray& array() const { return a_; }
  std::uint64_t delta() const { return delta_; }

  /// Swaps entries (r1, j) and (r2, j) and returns the objective change.
  std::int64_t swap(std::size_t j, std::size_t r1, std::size_t r2);
  /// Undoes the most recent swap(j, r1, r2) without re-evaluating terms.
  void undo(std::size_t j, std::size_t r1, std::size_t r2,
            std::int64_t change);

 private:
  std::size_t pair_slot(std::size_t a, Level x, std::size_t b,
                        Level y) const;
  std::size_t triple_slot(Pin p, Pin q, Pin r) const;
  void move_counts(std::size_t j, std::size_t r1, std::size_t r2);
  std::int64_t affected_terms(std::size_t j, std::size_t r1, std::size_t r2,
                              Level p, Level q);
  std::int64_t terms_of(Pin u, Pin w);

  MixedArray a_;
  std::size_t k_;
  std::vector<std::size_t> pair_off_;
  std::vector<std::size_t> triple_off_;
  std::vector<std::uint32_t> pairs_;
  std::vector<std::uint32_t> triples_;
  std::uint64_t delta_ = 0;
  std::vector<std::pair<std::size_t, std::pair<Pin, Pin>>> scratch_;
};

/// Array whose columns hold each level floor(N/v) or ceil(N/v) times, each
/// column independently shuffled.
MixedArray balanced_random_array(const TypeVector& types, std::size_t rows,
                                 std::mt19937_64& rng);

/// Runs up to cfg.restarts chains. Throws InfeasibleParameters when N is
/// below the lower bound, k < 3, or the parameters fail the known necessary
/// conditions (unless cfg.force). An exhausted budget is not a proof of
/// nonexistence.
SearchReport sa_search(const SearchConfig& cfg);

}  // namespace dta
