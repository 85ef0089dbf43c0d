#include <doctest.h>

#include <map>

#include "dta/construct.hpp"
#include "dta/verify.hpp"
#include "support.hpp"

using namespace dta;
using dta::testing::oracle_coverage_index;
using dta::testing::oracle_max_cover;
using dta::testing::oracle_super_simple;
using dta::testing::table1;

namespace {

bool exact_index(const MixedArray& a, std::size_t t, std::uint64_t lam) {
  return oracle_coverage_index(a, t) == lam && oracle_max_cover(a, t) == lam;
}

MixedArray strength1_23() {
  return MixedArray(TypeVector{2, 3}, {{0, 0}, {1, 1}, {0, 2}});
}

MixedArray mca12() {
  return insert_expand(mca_optimum(2, TypeVector{2, 3, 3}), strength1_23(), 2,
                       1, 2);
}

}  // namespace

TEST_CASE("sum-column orthogonal arrays") {
  auto a = oa_sum(2, 3);
  CHECK(a.rows() == 9);
  CHECK(a.cols() == 3);
  CHECK(exact_index(a, 2, 1));
  auto b = oa_sum(3, 2);
  CHECK(b.rows() == 8);
  CHECK(b.cols() == 4);
  CHECK(exact_index(b, 3, 1));
  CHECK(coverage_index(b, 3) == 1);
  CHECK_THROWS_AS(oa_sum(2, 1), DomainError);
}

TEST_CASE("Bush orthogonal arrays") {
  auto a = oa_bush(2, 3);
  CHECK(a.rows() == 9);
  CHECK(a.cols() == 4);
  CHECK(exact_index(a, 2, 1));
  auto b = oa_bush(3, 5);
  CHECK(b.rows() == 125);
  CHECK(b.cols() == 6);
  CHECK(exact_index(b, 3, 1));
  CHECK(exact_index(oa_bush(2, 7), 2, 1));
  CHECK_THROWS_AS(oa_bush(2, 4), DomainError);
  CHECK_THROWS_AS(oa_bush(4, 3), DomainError);
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("optimum index-1 MCAs") {
  auto a = mca_optimum(2, TypeVector{2, 3, 3});
  CHECK(a.rows() == 9);
  CHECK(a.types() == TypeVector{2, 3, 3});
  CHECK(oracle_coverage_index(a, 2) == 1);
  auto b = mca_optimum(3, TypeVector{2, 3, 3, 4});
  CHECK(b.rows() == 36);
  CHECK(oracle_coverage_index(b, 3) == 1);
  auto c = mca_optimum(2, TypeVector{2, 2, 2});
  CHECK(c.rows() == 4);
  CHECK(exact_index(c, 2, 1));
  CHECK(mca_optimum(2, TypeVector{3, 2, 4}).types() == TypeVector{3, 2, 4});
  CHECK_THROWS_AS(mca_optimum(2, TypeVector{2, 3}), DomainError);
}

TEST_CASE("column insertion") {
  auto a = mca12();
  CHECK(a.rows() == 12);
  CHECK(a.types() == TypeVector{2, 3, 4});
  CHECK(oracle_coverage_index(a, 2) == 1);
  CHECK(a.rows() == lower_bound(0, 2, a.types()));

  auto b = insert_expand(mca_optimum(2, TypeVector{2, 3, 3}), strength1_23(),
                         2, 2, 2);
  CHECK(b.rows() == 15);
  CHECK(b.types() == TypeVector{2, 3, 5});
  CHECK(oracle_coverage_index(b, 2) == 1);

  MixedArray wrong(TypeVector{3, 3}, {{0, 0}, {1, 1}, {2, 2}});
  CHECK_THROWS_AS(insert_expand(mca_optimum(2, TypeVector{2, 3, 3}), wrong, 2,
                                1, 2),
                  DomainError);
  MixedArray thin(TypeVector{2, 3}, {{0, 0}, {1, 1}});
  CHECK_THROWS_AS(insert_expand(mca_optimum(2, TypeVector{2, 3, 3}), thin, 2,
                                1, 2),
                  DomainError);
}

TEST_CASE("Kronecker product") {
  auto k = kronecker(table1(), table1());
  CHECK(k.rows() == 324);
  CHECK(k.types() == TypeVector{4, 9, 9, 9});
  auto rep = is_detecting(k, 3, 2);
  CHECK(rep.holds);
  CHECK(rep.stats["optimum"] == 1);

  auto o = kronecker(oa_sum(2, 2), oa_sum(2, 2));
  CHECK(o.rows() == 16);
  CHECK(o.types() == TypeVector{4, 4, 4});
  CHECK(coverage_index(o, 2) == 1);
  CHECK(kron_level(1, 2, 3) == 5);
  static_assert(kron_level(1, 2, 3) == 5);
  CHECK_THROWS_AS(kronecker(oa_sum(2, 2), table1()), DomainError);
}

TEST_CASE("property: Kronecker coverage multiplies") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    auto types = dta::testing::random_types(rng, 3, 3, 2, 3);
    auto a = dta::testing::random_array(rng, 6, types);
    auto b = dta::testing::random_array(rng, 5, types);
    auto k = kronecker(a, b);
    CHECK(oracle_coverage_index(k, 2) ==
          oracle_coverage_index(a, 2) * oracle_coverage_index(b, 2));
  }
}

TEST_CASE("cyclic replication") {
  auto a = mca12();
  auto r = replicate_cyclic(a, 2);
  CHECK(r.rows() == 24);
  CHECK(oracle_super_simple(r, 2));
  CHECK(oracle_coverage_index(r, 2) == 2);
  auto rep = is_detecting(r, 1, 2);
  CHECK(rep.holds);
  CHECK(rep.stats["optimum"] == 1);
  CHECK(is_detecting_brute(r, 1, 2).holds);

  CHECK(replicate_cyclic(a, 1) == a);
  CHECK_THROWS_AS(replicate_cyclic(a, 3), InfeasibleParameters);

  auto three = replicate_cyclic(mca_optimum(2, TypeVector{3, 3, 3}), 3);
  CHECK(three.rows() == 27);
  CHECK(is_detecting(three, 2, 2).holds);
}

TEST_CASE("super-simple derivation") {
  auto a = derive_super_simple(oa_sum(3, 2), 2);
  CHECK(a.rows() == 8);
  CHECK(a.cols() == 3);
  CHECK(exact_index(a, 2, 2));
  CHECK(oracle_super_simple(a, 2));

  auto b = derive_super_simple(oa_bush(3, 5), 2);
  CHECK(b.rows() == 50);
  CHECK(b.cols() == 5);
  CHECK(exact_index(b, 2, 2));
  CHECK(oracle_super_simple(b, 2));
  CHECK(is_detecting(b, 1, 2).holds);

  CHECK_THROWS_AS(derive_super_simple(oa_sum(3, 2), 1), DomainError);
  CHECK_THROWS_AS(derive_super_simple(oa_sum(3, 2), 3), DomainError);
  CHECK_THROWS_AS(derive_super_simple(table1(), 2), DomainError);
}
