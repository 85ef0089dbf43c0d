// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Timing limits are checked against wall-clock time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "dta/locate.hpp"
#include "dta/search.hpp"
#include "dta/verify.hpp"
#include "support.hpp"

using namespace dta;
using dta::testing::example34;
using dta::testing::stacked;
using dta::testing::table1;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, double limit_s,
         const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                           start)
                 .count();
  if (limit_s > 0 && s > limit_s) {
    out.pass = false;
    out.detail += " [over time limit " + std::to_string(limit_s) + " s]";
  }
  std::printf("AC%d %s: %s (%.2f s) %s\n", id, out.pass ? "PASS" : "FAIL",
              title.c_str(), s, out.detail.c_str());
  std::fflush(stdout);
  failures += !out.pass;
}

Outcome ac1() {
  auto a = table1();
  auto rep = is_detecting(a, 1, 2);
  auto lam = coverage_index(a, 2);
  auto bound = lower_bound(1, 2, TypeVector{2, 3, 3, 3});
  std::ostringstream d;
  d << "detecting=" << rep.holds << " coverage=" << lam << " N=" << a.rows()
    << " bound=" << bound;
  return {rep.holds && lam == 2 && a.rows() == 18 && bound == 18, d.str()};
}

Outcome ac2() {
  auto a = example34();
  auto rep = is_detecting(a, 2, 2);
  auto ss = is_super_simple(a, 2);
  auto bound = lower_bound(2, 2, a.types());
  std::ostringstream d;
  d << "detecting=" << rep.holds << " N=" << a.rows() << " bound=" << bound
    << " super-simple=" << ss.holds;
  return {rep.holds && a.rows() == 48 && bound == 48 && !ss.holds, d.str()};
}

Outcome ac3() {
  std::mt19937_64 rng(20240601);
  std::size_t total = 0, agree = 0, positive = 0;
  auto compare = [&](const MixedArray& a, std::size_t d) {
    bool s = is_detecting(a, d, 2).holds;
    bool b = is_detecting_brute(a, d, 2).holds;
    ++total;
    agree += s == b;
    positive += b;
  };
  // Unconstrained random arrays.
  for (int i = 0; i < 200; ++i) {
    auto types = dta::testing::random_types(rng, 3, 5, 2, 3);
    std::size_t d = types.min_size() == 3 ? 1 + rng() % 2 : 1;
    auto n = std::uniform_int_distribution<std::size_t>(1, 16)(rng);
    compare(dta::testing::random_array(rng, n, types), d);
  }
  // Single-entry perturbations of small detecting arrays sit near the
  // boundary, so both verdicts occur.
  std::vector<std::pair<MixedArray, std::size_t>> seeds{
      {full_factorial(TypeVector{2, 2, 2}), 1},
      {derive_super_simple(oa_sum(3, 2), 2), 1},
      {full_factorial(TypeVector{2, 2, 2, 2}), 1},
      {derive_super_simple(oa_sum(3, 3), 2), 1},
      {stacked(full_factorial(TypeVector{3, 3, 3}), 1), 2}};
  for (int i = 0; i < 100; ++i) {
    auto [a, d] = seeds[static_cast<std::size_t>(i) % seeds.size()];
    if (i >= static_cast<int>(seeds.size())) {
      auto r = rng() % a.rows(), j = rng() % a.cols();
      a.set(r, j, static_cast<Level>(rng() % static_cast<unsigned>(a.types()[j])));
    }
    compare(a, d);
  }
  compare(table1(), 1);
  compare(example34(), 2);
  std::ostringstream d;
  d << agree << "/" << total << " agree, " << positive << " detecting";
  return {agree == total && total >= 202, d.str()};
}

Outcome ac4() {
  std::vector<std::pair<MixedArray, std::size_t>> cases;
  for (int v = 2; v <= 5; ++v)
    for (int lam = 2; lam <= v; ++lam) {
      cases.emplace_back(derive_super_simple(oa_sum(3, v), lam), lam - 1);
      cases.emplace_back(stacked(oa_sum(2, v), static_cast<std::size_t>(lam)),
                         lam - 1);
    }
  for (int q : {3, 5})
    for (int lam = 2; lam <= q; ++lam) {
      cases.emplace_back(derive_super_simple(oa_bush(3, q), lam), lam - 1);
      cases.emplace_back(stacked(oa_bush(2, q), static_cast<std::size_t>(lam)),
                         lam - 1);
    }
  std::mt19937_64 rng(9);
  std::size_t base = cases.size();
  for (std::size_t i = 0; cases.size() < 60; ++i)
    cases.emplace_back(dta::testing::shuffled_rows(cases[i % base].first, rng),
                       cases[i % base].second);
  std::size_t agree = 0, simple = 0;
  for (const auto& [a, d] : cases) {
    if (coverage_index(a, 2) != d + 1 ||
        dta::testing::oracle_max_cover(a, 2) != d + 1)
      return {false, "generated instance is not an OA_{d+1}"};
    bool ss = is_super_simple(a, 2).holds;
    agree += is_d_extendible(a, 2, d).holds == ss;
    simple += ss;
  }
  std::ostringstream d;
  d << agree << "/" << cases.size() << " agree, " << simple << " super-simple";
  return {agree == cases.size() && cases.size() >= 50, d.str()};
}

Outcome ac5_entry(std::size_t n, const TypeVector& types) {
  SearchConfig cfg;
  cfg.types = types;
  cfg.rows = n;
  cfg.seed = 1;
  cfg.restarts = 40;
  cfg.max_iters = 2'000'000;
  auto rep = sa_search(cfg);
  if (rep.outcome != SearchOutcome::found)
    return {false, "budget exhausted after " + std::to_string(rep.chains.size()) +
                       " chains"};
  bool brute = is_detecting_brute(*rep.array, 1, 2).holds;
  bool structural = is_detecting(*rep.array, 1, 2).holds;
  std::ostringstream d;
  d << "found by chain " << *rep.winning_chain + 1 << " after "
    << rep.chains.back().iterations << " moves; brute=" << brute;
  return {brute && structural && rep.array->rows() == n &&
              lower_bound(1, 2, types) == n,
          d.str()};
}

Outcome ac6() {
  auto k = kronecker(table1(), table1());
  auto rep = is_detecting(k, 3, 2);
  std::ostringstream d;
  d << "N=" << k.rows() << " types=(" << k.types().to_string()
    << ") detecting=" << rep.holds
    << " bound=" << lower_bound(3, 2, k.types());
  return {rep.holds && k.rows() == 324 && k.types() == TypeVector{4, 9, 9, 9} &&
              lower_bound(3, 2, k.types()) == 324,
          d.str()};
}

Outcome ac7() {
  auto base = mca_optimum(2, TypeVector{2, 3, 3});
  MixedArray b(TypeVector{2, 3}, {{0, 0}, {1, 1}, {0, 2}});
  auto mca = insert_expand(base, b, 2, 1, 2);
  bool mca_ok = mca.rows() == 12 && mca.types() == TypeVector{2, 3, 4} &&
                coverage_index(mca, 2) == 1;
  auto r = replicate_cyclic(mca, 2);
  auto rep = is_detecting(r, 1, 2);
  bool optimum = rep.holds && r.rows() == 24 && lower_bound(1, 2, r.types()) == 24;
  bool rejected = false;
  try {
    replicate_cyclic(mca, 3);
  } catch (const InfeasibleParameters&) {
    rejected = true;
  }
  std::ostringstream d;
  d << "MCA(12)=" << mca_ok << " DTA(24) optimum=" << optimum
    << " d=3 rejected=" << rejected;
  return {mca_ok && optimum && rejected, d.str()};
}

Outcome ac8() {
  auto a = table1();
  auto all = all_interactions(a.types(), 2);
  std::size_t single_ok = 0, pair_ok = 0, pairs = 0;
  auto pass = locate_faults(a, 1, 2, OutcomeVector::all_pass(18));
  bool pass_ok = std::holds_alternative<Identified>(pass) &&
                 std::get<Identified>(pass).faults.empty();
  for (const auto& t : all) {
    std::vector<Interaction> f{t};
    auto res = locate_faults(a, 1, 2, simulate_outcome(a, f));
    single_ok += std::holds_alternative<Identified>(res) &&
                 std::get<Identified>(res).faults == f;
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      std::vector<Interaction> f{all[i], all[j]};
      auto res = locate_faults(a, 1, 2, simulate_outcome(a, f));
      ++pairs;
      pair_ok += !std::holds_alternative<Identified>(res);
    }
  std::ostringstream d;
  d << "single " << single_ok << "/" << all.size() << ", all-pass " << pass_ok
    << ", two-fault " << pair_ok << "/" << pairs << " not identified";
  return {single_ok == 45 && pass_ok && pair_ok == 990 && pairs == 990,
          d.str()};
}

Outcome ac9() {
  SearchConfig cfg;
  cfg.types = TypeVector{2, 3, 3, 3};
  cfg.seed = 77;
  cfg.restarts = 4;
  cfg.max_iters = 500'000;
  bool same = sa_search(cfg).same_result(sa_search(cfg));
  cfg.types = TypeVector(std::vector<int>(6, 3));
  cfg.max_iters = 20'000;
  same = same && sa_search(cfg).same_result(sa_search(cfg));

  std::size_t docs = 0, ok = 0;
  for (const auto& id : catalog_ids()) {
    auto e = catalog_get(id);
    if (!e.document) continue;
    ++docs;
    auto text = serialize(*e.document);
    ok += parse_document(text) == *e.document &&
          serialize(parse_document(text)) == text;
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    ArrayDocument doc;
    auto types = dta::testing::random_types(rng, 1, 6, 1, 6);
    doc.array = dta::testing::random_array(rng, 1 + rng() % 25, types);
    doc.t = rng() % 4;
    doc.d = rng() % 3;
    if (rng() % 2) doc.lambda = rng() % 4;
    for (std::size_t j = 0; j < types.k(); ++j) {
      if (rng() % 2) doc.names.factors[j] = "F" + std::to_string(j);
      for (Level x = 0; x < types[j]; ++x)
        if (rng() % 2) doc.names.levels[{j, x}] = "level " + std::to_string(x);
    }
    ++docs;
    auto text = serialize(doc);
    ok += parse_document(text) == doc && serialize(parse_document(text)) == text;
  }
  std::ostringstream d;
  d << "search reports identical=" << same << ", round-trips " << ok << "/"
    << docs;
  return {same && ok == docs, d.str()};
}

}  // namespace

int main() {
  run(1, "table1 is an optimum (1,2)-DTA with coverage 2", 1, ac1);
  run(2, "example34 is an optimum (2,2)-DTA, not super-simple", 5, ac2);
  run(3, "structural and brute-force detection agree", 120, ac3);
  run(4, "d-extendible iff super-simple on OA_{d+1}", 0, ac4);
  struct Entry {
    std::size_t n;
    TypeVector types;
  };
  std::vector<Entry> entries{{8, TypeVector{2, 2, 2, 2}},
                             {12, TypeVector{2, 2, 2, 3}},
                             {16, TypeVector{2, 2, 2, 4}},
                             {18, TypeVector{2, 3, 3, 3}},
                             {18, TypeVector{3, 3, 3, 3, 3, 3}}};
  for (const auto& e : entries)
    run(5, "search finds (" + std::to_string(e.n) + "; " +
               e.types.exponent_notation() + ")",
        300, [&] { return ac5_entry(e.n, e.types); });
  run(6, "table1 (x) table1 is an optimum (3,2)-DTA(324)", 60, ac6);
  run(7, "insert/replicate pipeline gives an optimum (1,2)-DTA(24)", 0, ac7);
  run(8, "exhaustive localization on table1", 10, ac8);
  run(9, "deterministic search and format round-trips", 0, ac9);
  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
