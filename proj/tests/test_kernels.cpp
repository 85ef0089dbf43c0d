#include <doctest.h>

#include "dta/kernels.hpp"
#include "support.hpp"

using namespace dta;
using dta::testing::example34;
using dta::testing::random_array;
using dta::testing::random_types;
using dta::testing::table1;

namespace {

constexpr std::uint64_t kCap = std::uint64_t{1} << 28;

void check_equivalent(const MixedArray& a, std::size_t t, std::size_t d) {
  auto cs = kernels::coverage(a, t, kCap, Exec::serial);
  auto cp = kernels::coverage(a, t, kCap, Exec::parallel);
  CHECK(cs.min_count == cp.min_count);
  CHECK(cs.max_count == cp.max_count);
  CHECK(cs.min_witness == cp.min_witness);

  if (t + 1 <= a.cols()) {
    auto ds = kernels::first_duplicate(a, t, kCap, Exec::serial);
    auto dp = kernels::first_duplicate(a, t, kCap, Exec::parallel);
    REQUIRE(ds.has_value() == dp.has_value());
    if (ds) {
      CHECK(ds->tuple == dp->tuple);
      CHECK(ds->rows == dp->rows);
    }
  }

  auto es = kernels::first_extension_cover(a, t, d, Exec::serial);
  auto ep = kernels::first_extension_cover(a, t, d, Exec::parallel);
  REQUIRE(es.has_value() == ep.has_value());
  if (es) {
    CHECK(es->base == ep->base);
    CHECK(es->cover == ep->cover);
  }

  auto ts = build_interaction_table(a, t, Exec::serial);
  auto tp = build_interaction_table(a, t, Exec::parallel);
  REQUIRE(ts.interactions == tp.interactions);
  for (std::size_t i = 0; i < ts.interactions.size(); ++i)
    CHECK(bits::to_rows(ts.masks[i], a.rows()) ==
          bits::to_rows(tp.masks[i], a.rows()));

  auto vs = kernels::first_detection_violation(ts, d, Exec::serial);
  auto vp = kernels::first_detection_violation(tp, d, Exec::parallel);
  REQUIRE(vs.has_value() == vp.has_value());
  if (vs) {
    CHECK(vs->target == vp->target);
    CHECK(vs->set == vp->set);
    CHECK(vs->target_in_set == vp->target_in_set);
  }
}

}  // namespace

TEST_CASE("interaction table matches rho") {
  auto a = table1();
  auto table = build_interaction_table(a, 2, Exec::parallel);
  CHECK(table.interactions == all_interactions(a.types(), 2));
  for (std::size_t i = 0; i < table.interactions.size(); ++i)
    CHECK(bits::to_rows(table.masks[i], a.rows()) ==
          rho(a, table.interactions[i]));
}

TEST_CASE("bitset helpers") {
  MaskTable m(130, 2);
  m.set(0, 0);
  m.set(0, 129);
  m.set(1, 0);
  m.set(1, 64);
  m.set(1, 129);
  CHECK(bits::count(m[0]) == 2);
  CHECK(bits::subset(m[0], m[1]));
  CHECK_FALSE(bits::subset(m[1], m[0]));
  CHECK(bits::to_rows(m[1], 130) == RowSet{0, 64, 129});
}

TEST_CASE("coverage kernel agrees with the rho oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    auto types = random_types(rng, 3, 5, 2, 4);
    auto n = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    auto a = random_array(rng, n, types);
    auto t = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    auto c = kernels::coverage(a, t, kCap, Exec::parallel);
    CHECK(c.min_count == dta::testing::oracle_coverage_index(a, t));
    CHECK(c.max_count == dta::testing::oracle_max_cover(a, t));
    CHECK(rho(a, c.min_witness).size() == c.min_count);
    auto dup = kernels::first_duplicate(a, t, kCap, Exec::parallel);
    CHECK(dup.has_value() == !dta::testing::oracle_super_simple(a, t));
    if (dup) CHECK(rho(a, dup->tuple) == dup->rows);
  }
}

TEST_CASE("serial and parallel kernels agree on catalog arrays") {
  check_equivalent(table1(), 2, 1);
  check_equivalent(example34(), 2, 2);
  check_equivalent(example34(), 2, 1);
}

TEST_CASE("serial and parallel kernels agree on random arrays") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    auto types = random_types(rng, 3, 4, 2, 3);
    auto n = std::uniform_int_distribution<std::size_t>(2, 20)(rng);
    auto a = random_array(rng, n, types);
    std::size_t d = types.min_size() > 2 ? 2 : 1;
    check_equivalent(a, 2, d);
    check_equivalent(a, 1, 1);
  }
}

TEST_CASE("extension cover witness is a genuine cover") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto types = random_types(rng, 3, 4, 2, 3);
    auto a = random_array(rng, 8, types);
    auto w = kernels::first_extension_cover(a, 2, 1, Exec::parallel);
    if (!w) continue;
    CHECK(w->cover.size() <= 1);
    auto base = rho(a, w->base);
    auto covered = rho_union(a, w->cover);
    CHECK(std::includes(covered.begin(), covered.end(), base.begin(),
                        base.end()));
    auto ext = extensions(a, w->base);
    for (const auto& e : w->cover)
      CHECK(std::find(ext.begin(), ext.end(), e) != ext.end());
  }
}

TEST_CASE("contained interactions") {
  auto a = table1();
  auto table = build_interaction_table(a, 2, Exec::serial);
  MaskTable fail(a.rows(), 1);
  for (std::size_t r : RowSet{0, 1, 15}) fail.set(0, r);
  auto s = kernels::contained_interactions(table, fail[0], Exec::serial);
  auto p = kernels::contained_interactions(table, fail[0], Exec::parallel);
  CHECK(s == p);
  REQUIRE(s.size() == 1);
  CHECK(table.interactions[s[0]] == Interaction({{0, 0}, {2, 0}}));
}

TEST_CASE("coverage respects the enumeration cap") {
  auto a = table1();
  CHECK_THROWS_AS(kernels::coverage(a, 2, 10, Exec::serial), EnumerationLimit);
  CHECK_THROWS_AS(kernels::coverage(a, 2, 10, Exec::parallel),
                  EnumerationLimit);
}
