#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "solvrad/perm.hpp"

using namespace solvrad;

namespace {

Permutation random_perm(uint32_t degree, std::mt19937_64& rng) {
  std::vector<uint32_t> images(degree);
  for (uint32_t i = 0; i < degree; ++i) images[i] = i;
  for (uint32_t i = degree; i > 1; --i) std::swap(images[i - 1], images[rng() % i]);
  return Permutation(std::move(images));
}

}  // namespace

TEST_CASE("construction validates") {
  CHECK_THROWS_AS(Permutation(0), Error);
  CHECK_THROWS_AS(Permutation(std::vector<uint32_t>{0, 0}), Error);
  CHECK_THROWS_AS(Permutation(std::vector<uint32_t>{1, 2}), Error);
  CHECK(Permutation(4).is_identity());
}

TEST_CASE("compose applies left to right") {
  Permutation p = parse_cycles("(1 2)", 3);
  Permutation q = parse_cycles("(2 3)", 3);
  Permutation r = compose(p, q);
  // independent pointwise oracle: r(i) = q(p(i))
  for (uint32_t i = 0; i < 3; ++i) CHECK(r[i] == q[p[i]]);
  CHECK(r == parse_cycles("(1 3 2)", 3));

  Permutation any = parse_cycles("(1 4)(2 5 3)", 5);
  CHECK(compose(Permutation(5), any) == any);
  CHECK(compose(any, inverse(any)).is_identity());
  CHECK_THROWS_AS(compose(p, Permutation(5)), Error);
}

TEST_CASE("inverse by pointwise check") {
  CHECK(inverse(Permutation(6)).is_identity());
  CHECK(inverse(parse_cycles("(1 2 3)", 3)) == parse_cycles("(1 3 2)", 3));
  Permutation t = parse_cycles("(1 2)", 4);
  CHECK(inverse(t) == t);
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(element_order(Permutation(5)) == 1);
  CHECK(element_order(parse_cycles("(1 2)(3 4 5)", 5)) == 6);  // lcm(2,3)
  CHECK(element_order(parse_cycles("(1 2 3 4 5 6)", 6)) == 6);
  // product of two of the involutions used throughout the triple scan
  Permutation a = parse_cycles("(2 3)(4 5)", 5);
  Permutation b = parse_cycles("(1 3)(4 5)", 5);
  CHECK(element_order(compose(a, b)) == 3);
  CHECK(element_order(compose(b, a)) == 3);
}

TEST_CASE("cycle parsing") {
  Permutation x1 = parse_cycles("(2 3)(4 5)", 5);
  CHECK(x1[1] == 2);
  CHECK(x1[2] == 1);
  CHECK(x1[3] == 4);
  CHECK(x1[4] == 3);
  CHECK(x1[0] == 0);

  CHECK(parse_cycles("()", 4).is_identity());
  CHECK(parse_cycles("e", 4).is_identity());
  CHECK(parse_cycles(" ( 1 2 )  (3,4) ", 4) == parse_cycles("(1 2)(3 4)", 4));
  CHECK(parse_cycles("(1,2,3)", 3) == parse_cycles("(1 2 3)", 3));
  // overlapping cycles compose left to right
  CHECK(parse_cycles("(1 2)(2 3)", 3) == parse_cycles("(1 3 2)", 3));
  // single-point cycle is a fixed point
  CHECK(parse_cycles("(2)", 3).is_identity());

  CHECK_THROWS_AS(parse_cycles("(1 2", 3), Error);
  CHECK_THROWS_AS(parse_cycles("(0 1)", 3), Error);
  CHECK_THROWS_AS(parse_cycles("(1 4)", 3), Error);
  CHECK_THROWS_AS(parse_cycles("(1 2 1)", 3), Error);
  CHECK_THROWS_AS(parse_cycles("", 3), Error);
  CHECK_THROWS_AS(parse_cycles("1 2", 3), Error);
  CHECK_THROWS_AS(parse_cycles("(a b)", 3), Error);
}

TEST_CASE("canonical printing") {
  CHECK(print_cycles(Permutation(7)) == "()");
  CHECK(print_cycles(parse_cycles("(1 3 2)", 3)) == "(1 3 2)");
  CHECK(print_cycles(parse_cycles("(3 2 1)", 3)) == "(1 3 2)");   // starts at least point
  CHECK(print_cycles(parse_cycles("(4 5)(2 3)", 5)) == "(2 3)(4 5)");  // ordered by least point
  CHECK(print_cycles(parse_cycles("(2 3)", 9)) == "(2 3)");       // fixed points omitted
}

TEST_CASE("parse/print round trip on random permutations") {
  std::mt19937_64 rng(20240811);
  for (uint32_t degree = 1; degree <= 30; ++degree)
    for (int trial = 0; trial < 20; ++trial) {
      Permutation p = random_perm(degree, rng);
      CHECK(parse_cycles(print_cycles(p), degree) == p);
    }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Permutation a = random_perm(30, rng), b = random_perm(30, rng), c = random_perm(30, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("commutator and conjugate match their definitions") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation p = random_perm(12, rng), g = random_perm(12, rng);
    CHECK(conjugate(p, g) == compose(compose(inverse(g), p), g));
    CHECK(commutator(p, g) == compose(compose(compose(inverse(p), inverse(g)), p), g));
  }
  CHECK(commutator(parse_cycles("(1 2)", 4), parse_cycles("(1 2)", 4)).is_identity());
}
