#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solvrad/catalog.hpp"
#include "solvrad/perm_group.hpp"

using namespace solvrad;

namespace {

uint64_t factorial(uint32_t n) {
  uint64_t f = 1;
  for (uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("orders match the closed formulas") {
  for (uint32_t n = 1; n <= 6; ++n) CHECK(symmetric(n).order() == factorial(n));
  CHECK(alternating(1).order() == 1);
  CHECK(alternating(2).order() == 1);
  for (uint32_t n = 3; n <= 6; ++n) CHECK(alternating(n).order() == factorial(n) / 2);
  for (uint32_t n = 1; n <= 12; ++n) CHECK(cyclic(n).order() == n);
  for (uint32_t n = 3; n <= 8; ++n) CHECK(dihedral(n).order() == 2 * n);
  for (uint32_t p : {5u, 7u, 11u}) CHECK(psl2(p).order() == uint64_t(p) * (p * p - 1) / 2);
  CHECK(psl2(2).order() == 6);
  CHECK(psl2(3).order() == 12);
}

TEST_CASE("degenerate and invalid parameters") {
  CHECK(cyclic(1).order() == 1);
  CHECK_THROWS_AS(symmetric(0), Error);
  CHECK_THROWS_AS(dihedral(2), Error);
  CHECK_THROWS_AS(psl2(4), Error);
  CHECK_THROWS_AS(psl2(9), Error);
}

TEST_CASE("psl2 structure") {
  for (uint32_t p : {5u, 7u, 11u}) CHECK(is_simple(psl2(p), 10000));
  CHECK(psl2(3).is_solvable());  // A4
  CHECK(psl2(2).is_solvable());  // S3
  // psl2(5) has the order of A5 and is simple; derived series stays put
  CHECK(psl2(5).order() == 60);
  CHECK(derived_series(psl2(5)).orders() == std::vector<uint64_t>{60});
}

TEST_CASE("products and the wreath extension") {
  CHECK(direct_product(alternating(5), cyclic(3)).order() == 180);
  CHECK(direct_product(symmetric(4), PermGroup::trivial(2)).order() == 24);
  auto w = wreath_swap(alternating(5));
  CHECK(w.degree() == 10);
  CHECK(w.order() == 2 * 60 * 60);
  CHECK(w.contains(block_swap(5)));
  // the base subgroup sits inside
  CHECK(w.contains_group(direct_product(alternating(5), alternating(5))));
}

TEST_CASE("name grammar") {
  CHECK(group_from_name("A5").order() == 60);
  CHECK(group_from_name("S5").order() == 120);
  CHECK(group_from_name("A6").order() == 360);
  CHECK(group_from_name("C12").order() == 12);
  CHECK(group_from_name("PSL(2,7)").order() == 168);
  CHECK(group_from_name("A5xC3").order() == 180);
  CHECK(group_from_name("S4xA5").order() == 1440);
  CHECK(group_from_name("A5wr2").order() == 7200);
  CHECK(group_from_name("a5xc3").order() == 180);  // case-insensitive
  CHECK(group_from_name("S4 x S3").order() == 144);
  CHECK(group_from_name("C2xC2xC2").order() == 8);
  CHECK(group_from_name("D8").order() == 16);

  CHECK_THROWS_AS(group_from_name(""), Error);
  CHECK_THROWS_AS(group_from_name("Q8"), Error);
  CHECK_THROWS_AS(group_from_name("A5x"), Error);
  CHECK_THROWS_AS(group_from_name("PSL(3,2)"), Error);
  CHECK_THROWS_AS(group_from_name("S"), Error);
}

TEST_CASE("catalog summary lists every family") {
  auto rows = group_catalog_summary();
  CHECK(rows.size() >= 6);
}
