#include "dta/search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>

#include "dta/verify.hpp"

namespace dta {

std::uint64_t sa_objective(const MixedArray& a) {
  if (a.cols() < 3)
    throw DomainError("the search objective needs k >= 3 (got k = " +
                      std::to_string(a.cols()) + ")");
  std::uint64_t delta = 0;
  for (const auto& t : all_interactions(a.types(), 2)) {
    auto base = rho(a, t).size();
    for (const auto& e : extensions(a, t))
      if (rho(a, e).size() == base) ++delta;
  }
  return delta;
}

DeltaTracker::DeltaTracker(MixedArray a) : a_(std::move(a)), k_(a_.cols()) {
  if (k_ < 3)
    throw DomainError("the search objective needs k >= 3 (got k = " +
                      std::to_string(k_) + ")");
  const auto& v = a_.types();
  pair_off_.assign(k_ * k_, 0);
  std::size_t total = 0;
  for (std::size_t x = 0; x < k_; ++x)
    for (std::size_t y = x + 1; y < k_; ++y) {
      pair_off_[x * k_ + y] = total;
      total += static_cast<std::size_t>(v[x] * v[y]);
    }
  pairs_.assign(total, 0);
  triple_off_.assign(k_ * k_ * k_, 0);
  total = 0;
  for (std::size_t x = 0; x < k_; ++x)
    for (std::size_t y = x + 1; y < k_; ++y)
      for (std::size_t z = y + 1; z < k_; ++z) {
        triple_off_[(x * k_ + y) * k_ + z] = total;
        total += static_cast<std::size_t>(v[x] * v[y] * v[z]);
      }
  triples_.assign(total, 0);

  for (std::size_t r = 0; r < a_.rows(); ++r) {
    for (std::size_t x = 0; x < k_; ++x)
      for (std::size_t y = x + 1; y < k_; ++y) {
        ++pairs_[pair_slot(x, a_.at(r, x), y, a_.at(r, y))];
        for (std::size_t z = y + 1; z < k_; ++z)
          ++triples_[triple_slot({x, a_.at(r, x)}, {y, a_.at(r, y)},
                                 {z, a_.at(r, z)})];
      }
  }
  for (std::size_t x = 0; x < k_; ++x)
    for (std::size_t y = x + 1; y < k_; ++y)
      for (Level lx = 0; lx < v[x]; ++lx)
        for (Level ly = 0; ly < v[y]; ++ly)
          delta_ += static_cast<std::uint64_t>(terms_of({x, lx}, {y, ly}));
}

std::size_t DeltaTracker::pair_slot(std::size_t a, Level x, std::size_t b,
                                    Level y) const {
  if (a > b) {
    std::swap(a, b);
    std::swap(x, y);
  }
  return pair_off_[a * k_ + b] +
         static_cast<std::size_t>(x * a_.types()[b] + y);
}

std::size_t DeltaTracker::triple_slot(Pin p, Pin q, Pin r) const {
  if (p.column > q.column) std::swap(p, q);
  if (q.column > r.column) std::swap(q, r);
  if (p.column > q.column) std::swap(p, q);
  const auto& v = a_.types();
  return triple_off_[(p.column * k_ + q.column) * k_ + r.column] +
         static_cast<std::size_t>((p.level * v[q.column] + q.level) *
                                      v[r.column] +
                                  r.level);
}

std::int64_t DeltaTracker::terms_of(Pin u, Pin w) {
  auto base = pairs_[pair_slot(u.column, u.level, w.column, w.level)];
  std::int64_t n = 0;
  for (std::size_t e = 0; e < k_; ++e) {
    if (e == u.column || e == w.column) continue;
    for (Level z = 0; z < a_.types()[e]; ++z)
      n += triples_[triple_slot(u, w, {e, z})] == base;
  }
  return n;
}

std::int64_t DeltaTracker::affected_terms(std::size_t j, std::size_t r1,
                                          std::size_t r2, Level p, Level q) {
  std::int64_t n = 0;
  const Level xs[2] = {p, q};
  // 2-way interactions pinning column j: every extension may change.
  for (std::size_t c = 0; c < k_; ++c) {
    if (c == j) continue;
    Level y1 = a_.at(r1, c), y2 = a_.at(r2, c);
    for (Level x : xs) {
      n += terms_of({j, x}, {c, y1});
      if (y2 != y1) n += terms_of({j, x}, {c, y2});
    }
  }
  // 2-way interactions away from column j: only their extensions on j.
  for (std::size_t a = 0; a < k_; ++a) {
    if (a == j) continue;
    for (std::size_t b = a + 1; b < k_; ++b) {
      if (b == j) continue;
      Level a1 = a_.at(r1, a), b1 = a_.at(r1, b);
      Level a2 = a_.at(r2, a), b2 = a_.at(r2, b);
      auto base1 = pairs_[pair_slot(a, a1, b, b1)];
      for (Level x : xs)
        n += triples_[triple_slot({a, a1}, {b, b1}, {j, x})] == base1;
      if (a1 == a2 && b1 == b2) continue;
      auto base2 = pairs_[pair_slot(a, a2, b, b2)];
      for (Level x : xs)
        n += triples_[triple_slot({a, a2}, {b, b2}, {j, x})] == base2;
    }
  }
  return n;
}

void DeltaTracker::move_counts(std::size_t j, std::size_t r1,
                               std::size_t r2) {
  const Level p = a_.at(r1, j), q = a_.at(r2, j);
  auto shift = [&](std::size_t r, Level from, Level to) {
    for (std::size_t c = 0; c < k_; ++c) {
      if (c == j) continue;
      Level y = a_.at(r, c);
      --pairs_[pair_slot(j, from, c, y)];
      ++pairs_[pair_slot(j, to, c, y)];
      for (std::size_t e = c + 1; e < k_; ++e) {
        if (e == j) continue;
        Pin pc{c, y}, pe{e, a_.at(r, e)};
        --triples_[triple_slot({j, from}, pc, pe)];
        ++triples_[triple_slot({j, to}, pc, pe)];
      }
    }
  };
  shift(r1, p, q);
  shift(r2, q, p);
  a_.swap_in_column(j, r1, r2);
}

std::int64_t DeltaTracker::swap(std::size_t j, std::size_t r1,
                                std::size_t r2) {
  const Level p = a_.at(r1, j), q = a_.at(r2, j);
  if (p == q) return 0;
  auto before = affected_terms(j, r1, r2, p, q);
  move_counts(j, r1, r2);
  auto after = affected_terms(j, r1, r2, p, q);
  auto change = after - before;
  delta_ = static_cast<std::uint64_t>(static_cast<std::int64_t>(delta_) +
                                      change);
  return change;
}

void DeltaTracker::undo(std::size_t j, std::size_t r1, std::size_t r2,
                        std::int64_t change) {
  if (a_.at(r1, j) == a_.at(r2, j)) return;
  move_counts(j, r1, r2);
  delta_ = static_cast<std::uint64_t>(static_cast<std::int64_t>(delta_) -
                                      change);
}

MixedArray balanced_random_array(const TypeVector& types, std::size_t rows,
                                 std::mt19937_64& rng) {
  MixedArray a(types, rows);
  for (std::size_t j = 0; j < types.k(); ++j) {
    std::vector<Level> col(rows);
    for (std::size_t r = 0; r < rows; ++r)
      col[r] = static_cast<Level>(r % static_cast<std::size_t>(types[j]));
    std::shuffle(col.begin(), col.end(), rng);
    for (std::size_t r = 0; r < rows; ++r) a.set(r, j, col[r]);
  }
  return a;
}

bool SearchReport::same_result(const SearchReport& other) const {
  return outcome == other.outcome && array == other.array &&
         winning_chain == other.winning_chain && chains == other.chains;
}

namespace {

struct ChainResult {
  ChainSummary summary;
  std::optional<MixedArray> array;
};

#ifndef NDEBUG
bool same_column_multisets(const MixedArray& a, const MixedArray& b) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    auto x = a.column(j), y = b.column(j);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  return true;
}
#endif

ChainResult run_chain(const SearchConfig& cfg, std::size_t rows,
                      std::uint64_t seed, const std::atomic<bool>* stop) {
  std::mt19937_64 rng(seed);
  DeltaTracker state(balanced_random_array(cfg.types, rows, rng));
#ifndef NDEBUG
  const MixedArray initial = state.array();
#endif
  std::uniform_int_distribution<std::size_t> pick_col(0, cfg.types.k() - 1);
  std::uniform_int_distribution<std::size_t> pick_row(0, rows - 1);
  std::uniform_int_distribution<std::size_t> pick_other(0, rows - 2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  ChainResult out;
  out.summary.seed = seed;
  out.summary.initial_delta = state.delta();
  out.summary.best_delta = state.delta();
  std::uint64_t it = 0;
  while (state.delta() > 0 && it < cfg.max_iters) {
    if (stop && (it & 0xfff) == 0 && stop->load(std::memory_order_relaxed))
      break;
    ++it;
    auto j = pick_col(rng);
    auto r1 = pick_row(rng);
    auto r2 = pick_other(rng);
    if (r2 >= r1) ++r2;
    if (state.array().at(r1, j) == state.array().at(r2, j)) continue;
    auto change = state.swap(j, r1, r2);
    bool accept = change < 0 || unit(rng) < cfg.accept_prob;
    if (accept) {
      ++out.summary.accepted;
      out.summary.best_delta = std::min(out.summary.best_delta, state.delta());
#ifndef NDEBUG
      if (!same_column_multisets(initial, state.array()))
        throw std::logic_error("swap changed a column multiset");
#endif
    } else {
      state.undo(j, r1, r2, change);
    }
    if (cfg.audit_every && it % cfg.audit_every == 0 &&
        sa_objective(state.array()) != state.delta())
      throw std::logic_error("incremental objective diverged from recount");
  }
  out.summary.iterations = it;
  out.summary.final_delta = state.delta();
  out.summary.found = state.delta() == 0;
  if (out.summary.found) out.array = state.array();
  return out;
}

}  // namespace

SearchReport sa_search(const SearchConfig& cfg) {
  const auto& types = cfg.types;
  if (types.k() < 3)
    throw InfeasibleParameters("(1,2)-DTA search needs k >= 3 (got k = " +
                               std::to_string(types.k()) + ")");
  auto bound = lower_bound(1, 2, types);
  std::size_t rows = cfg.rows.value_or(static_cast<std::size_t>(bound));
  if (rows < bound)
    throw InfeasibleParameters(
        "N = " + std::to_string(rows) + " is below the lower bound " +
        std::to_string(bound) + " = 2 * (product of the 2 largest sizes)");
  if (!(cfg.accept_prob >= 0.0 && cfg.accept_prob <= 1.0))
    throw DomainError("acceptance probability must lie in [0, 1]");
  if (cfg.max_iters < 1) throw DomainError("max_iters must be >= 1");
  if (cfg.restarts < 1) throw DomainError("restarts must be >= 1");
  if (rows == bound && !cfg.force) {
    auto screen = check_search_constraints(types, 1, 2);
    if (!screen.holds)
      throw InfeasibleParameters(screen.detail + " (use --force to search)");
  }

  auto start = std::chrono::steady_clock::now();
  SearchReport rep;
  std::vector<ChainResult> results;
  if (!cfg.parallel_chains) {
    for (std::size_t i = 0; i < cfg.restarts; ++i) {
      results.push_back(run_chain(cfg, rows, cfg.seed + i, nullptr));
      if (results.back().summary.found) break;
    }
  } else {
    results.resize(cfg.restarts);
    std::vector<std::atomic<bool>> stop(cfg.restarts);
    std::vector<char> ran(cfg.restarts, 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cfg.restarts);
         ++i) {
      auto iu = static_cast<std::size_t>(i);
      if (stop[iu].load()) continue;
      results[iu] = run_chain(cfg, rows, cfg.seed + iu, &stop[iu]);
      ran[iu] = 1;
      if (results[iu].summary.found)
        for (std::size_t later = iu + 1; later < cfg.restarts; ++later)
          stop[later].store(true);
    }
    std::vector<ChainResult> kept;
    for (std::size_t i = 0; i < cfg.restarts; ++i)
      if (ran[i]) kept.push_back(std::move(results[i]));
    results = std::move(kept);
  }

  for (std::size_t i = 0; i < results.size(); ++i) {
    rep.chains.push_back(results[i].summary);
    if (!rep.winning_chain && results[i].summary.found) {
      rep.winning_chain = static_cast<std::size_t>(results[i].summary.seed -
                                                   cfg.seed);
      rep.array = std::move(results[i].array);
    }
  }
  if (rep.array) {
    if (!is_detecting(*rep.array, 1, 2).holds)
      throw std::logic_error("search produced an array that is not a DTA");
    rep.outcome = SearchOutcome::found;
  }
  rep.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

}  // namespace dta
