#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solvrad/lie.hpp"
#include "solvrad/lie_catalog.hpp"

using namespace solvrad;

namespace {

RatVec vec(std::initializer_list<int> entries) {
  RatVec v;
  for (int e : entries) v.push_back(Rat(e));
  return v;
}

}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(parse_rational("3") == Rat(3));
  CHECK(parse_rational("-1/2") == Rat(-1, 2));
  CHECK(parse_rational(" 4/6 ") == Rat(2, 3));  // canonicalized
  CHECK(rational_str(Rat(-3, 6)) == "-1/2");
  CHECK(rational_str(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("sampler is deterministic and in range") {
  SmallRationalSampler a(42), b(42);
  for (int i = 0; i < 200; ++i) {
    Rat qa = a.next(), qb = b.next();
    CHECK(qa == qb);
    CHECK(qa >= Rat(-9));
    CHECK(qa <= Rat(9));
  }
}

TEST_CASE("rref and nullspace") {
  RatMat m = {vec({1, 2, 3}), vec({2, 4, 6}), vec({0, 1, 1})};
  RatMat r = rref(m);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == RatVec{Rat(1), Rat(0), Rat(1)});
  CHECK(r[1] == RatVec{Rat(0), Rat(1), Rat(1)});

  RatMat kernel = nullspace({vec({1, 1, 0})}, 3);
  REQUIRE(kernel.size() == 2);
  for (const RatVec& k : kernel) CHECK(k[0] + k[1] == 0);

  CHECK(nullspace({}, 3).size() == 3);  // no constraints: everything
}

TEST_CASE("subspace canonical form") {
  Subspace s = Subspace::span(3, {vec({2, 0, 0}), vec({1, 1, 0})});
  Subspace t = Subspace::span(3, {vec({0, 3, 0}), vec({5, 0, 0}), vec({1, 1, 0})});
  CHECK(s == t);
  CHECK(s.dim() == 2);
  CHECK(s.contains(vec({7, -2, 0})));
  CHECK_FALSE(s.contains(vec({0, 0, 1})));
  CHECK(s.pivot_columns() == std::vector<uint32_t>{0, 1});
  CHECK(s.sum(Subspace::span(3, {vec({0, 0, 4})})).dim() == 3);
}

TEST_CASE("construction validates antisymmetry input and jacobi") {
  // [e0,e1] = e2, [e1,e2] = e1 fails jacobi on (0,1,2)
  try {
    LieAlgebra(3, {}, {{0, 1, {{2, Rat(1)}}}, {1, 2, {{1, Rat(1)}}}});
    FAIL("jacobi violation not caught");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(0,1,2)") != std::string::npos);
  }
  CHECK_THROWS_AS(LieAlgebra(2, {}, {{1, 0, {{0, Rat(1)}}}}), Error);  // i >= j
  CHECK_THROWS_AS(LieAlgebra(2, {}, {{0, 1, {{5, Rat(1)}}}}), Error);  // k out of range
  CHECK_THROWS_AS(LieAlgebra(2, {}, {{0, 1, {}}, {0, 1, {}}}), Error);  // duplicate
  CHECK_THROWS_AS(LieAlgebra(2, {"a"}, {}), Error);                     // label count
}

TEST_CASE("bracket basics in sl2") {
  LieAlgebra sl2 = lie_sl2();
  LieElement e = sl2.basis_element(0), h = sl2.basis_element(1), f = sl2.basis_element(2);
  CHECK(sl2.bracket(e, f) == h);
  CHECK(sl2.bracket(h, e) == vec({2, 0, 0}));
  CHECK(sl2.bracket(h, f) == vec({0, 0, -2}));
  CHECK(is_zero_vec(sl2.bracket(e, e)));
  CHECK(is_zero_vec(sl2.bracket(vec({1, 2, -1}), vec({1, 2, -1}))));

  RatMat zero_ad = sl2.ad_matrix(sl2.zero());
  for (const RatVec& row : zero_ad) CHECK(is_zero_vec(row));
  CHECK_THROWS_AS(sl2.bracket(e, vec({1, 0})), Error);
}

TEST_CASE("subalgebra closure") {
  LieAlgebra sl2 = lie_sl2();
  CHECK(sl2.subalgebra_closure({}).dim() == 0);
  CHECK(sl2.subalgebra_closure({sl2.basis_element(0), sl2.basis_element(2)}).dim() == 3);
  CHECK(sl2.subalgebra_closure({sl2.basis_element(1)}).dim() == 1);
}

TEST_CASE("solvability of subalgebras") {
  LieAlgebra sl2 = lie_sl2();
  Subspace whole = Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  CHECK_FALSE(sl2.is_solvable_subalgebra(whole));
  Subspace borel = Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});  // span{e, h}
  CHECK(sl2.is_solvable_subalgebra(borel));
  CHECK(sl2.is_solvable_subalgebra(Subspace(3)));
  Subspace not_closed = Subspace::span(3, {vec({1, 0, 0}), vec({0, 0, 1})});  // span{e, f}
  CHECK_THROWS_AS(sl2.is_solvable_subalgebra(not_closed), Error);
}

TEST_CASE("killing form symmetry and invariance") {
  for (const LieAlgebra& l : {lie_sl2(), lie_gl2(), lie_direct_sum(lie_sl2(), lie_heisenberg())}) {
    SmallRationalSampler sampler(3);
    for (int trial = 0; trial < 25; ++trial) {
      LieElement x = sampler.vector(l.dim());
      LieElement y = sampler.vector(l.dim());
      LieElement z = sampler.vector(l.dim());
      CHECK(l.killing(x, y) == l.killing(y, x));
      CHECK(l.killing(l.bracket(x, y), z) == l.killing(x, l.bracket(y, z)));
    }
  }
}

TEST_CASE("killing radical across the catalog") {
  CHECK(lie_sl2().killing_radical().dim() == 0);
  CHECK(lie_abelian(3).killing_radical().dim() == 3);
  CHECK(lie_heisenberg().killing_radical().dim() == 3);
  CHECK(lie_nonabelian2().killing_radical().dim() == 2);
  CHECK(lie_borel_sl2().killing_radical().dim() == 2);

  Subspace gl2_radical = lie_gl2().killing_radical();
  CHECK(gl2_radical == Subspace::span(4, {vec({0, 0, 0, 1})}));  // the scalar line

  Subspace sum_radical = lie_direct_sum(lie_sl2(), lie_heisenberg()).killing_radical();
  CHECK(sum_radical ==
        Subspace::span(6, {vec({0, 0, 0, 1, 0, 0}), vec({0, 0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 0, 1})}));
}

TEST_CASE("radical is a solvable ideal with semisimple quotient") {
  for (const char* name : {"abelian3", "nonabelian2", "h3", "borel2", "sl2", "gl2", "sl2+h3"}) {
    LieAlgebra l = lie_from_name(name);
    Subspace radical = l.killing_radical();
    CHECK(l.is_ideal(radical));
    CHECK(l.is_solvable_subalgebra(radical));
    LieAlgebra quotient = l.quotient(radical);
    CHECK(quotient.killing_radical().dim() == 0);
  }
}

TEST_CASE("quotients") {
  LieAlgebra gl2 = lie_gl2();
  LieAlgebra q = gl2.quotient(gl2.killing_radical());
  CHECK(q.dim() == 3);
  LieAlgebra sl2 = lie_sl2();
  for (uint32_t i = 0; i < 3; ++i)
    for (uint32_t j = 0; j < 3; ++j) CHECK(q.basis_bracket(i, j) == sl2.basis_bracket(i, j));

  Subspace whole = Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  CHECK(sl2.quotient(whole).dim() == 0);  // zero algebra
  CHECK(sl2.quotient(Subspace(3)).dim() == 3);

  // span{e, f} in sl2 is not an ideal
  Subspace not_ideal = Subspace::span(3, {vec({1, 0, 0})});
  CHECK_THROWS_AS(sl2.quotient(not_ideal), Error);
}

TEST_CASE("v word mechanics") {
  LieAlgebra two = lie_nonabelian2();
  LieElement e = two.basis_element(0), f = two.basis_element(1);
  CHECK(two.v_word(e, f, 1) == e);
  CHECK(two.v_word(e, f, 2) == f);               // [e, [e,f]] = [e, f] = f
  CHECK(is_zero_vec(two.v_word(e, f, 3)));        // [f, f] = 0

  LieAlgebra sl2 = lie_sl2();
  SmallRationalSampler sampler(9);
  for (int trial = 0; trial < 20; ++trial) {
    LieElement x = sampler.vector(3), y = sampler.vector(3);
    CHECK(sl2.v_word(x, y, 1) == x);
    CHECK(is_zero_vec(sl2.v_word(x, x, 2)));
  }
  CHECK_THROWS_AS(sl2.v_word(sl2.zero(), sl2.zero(), 0), Error);
}

TEST_CASE("v test certifies nonmembers and stays silent on members") {
  LieAlgebra sl2 = lie_sl2();
  VTestResult out = radical_membership_vtest(sl2, sl2.basis_element(0), 30, 100, 0);
  CHECK(out.certified_out);
  // the certificate re-validates
  CHECK_FALSE(sl2.is_solvable_subalgebra(sl2.subalgebra_closure({out.witness, sl2.basis_element(0)})));

  LieAlgebra gl2 = lie_gl2();
  VTestResult z = radical_membership_vtest(gl2, gl2.basis_element(3), 40, 100, 0);
  CHECK_FALSE(z.certified_out);  // central element: consistent with membership
  VTestResult zero = radical_membership_vtest(gl2, gl2.zero(), 40, 100, 0);
  CHECK_FALSE(zero.certified_out);
}

TEST_CASE("pairs witness search") {
  LieAlgebra sl2 = lie_sl2();
  std::vector<LieElement> xs = {sl2.basis_element(0), sl2.basis_element(1), sl2.basis_element(2)};
  LiePairsResult found = pairs_witness_search(sl2, xs, 1000, 0);
  CHECK(found.found);
  for (const LieElement& x : xs)
    CHECK_FALSE(sl2.is_solvable_subalgebra(sl2.subalgebra_closure({x, found.witness})));

  LiePairsResult empty = pairs_witness_search(sl2, {}, 10, 0);
  CHECK(empty.found);
  CHECK(empty.samples_used == 1);

  LieAlgebra gl2 = lie_gl2();
  try {
    pairs_witness_search(gl2, {gl2.basis_element(0), gl2.basis_element(3)}, 10, 0);
    FAIL("radical member not rejected");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("#1") != std::string::npos);
  }
}

TEST_CASE("direct sums relabel duplicates") {
  LieAlgebra twice = lie_direct_sum(lie_sl2(), lie_sl2());
  CHECK(twice.dim() == 6);
  CHECK(twice.labels()[0] == "e");
  CHECK(twice.labels()[3] != "e");
  CHECK(twice.killing_radical().dim() == 0);
}

TEST_CASE("catalog names") {
  CHECK(lie_from_name("sl2").dim() == 3);
  CHECK(lie_from_name("SL2").dim() == 3);
  CHECK(lie_from_name("sl2+h3").dim() == 6);
  CHECK(lie_from_name("abelian4").dim() == 4);
  CHECK_THROWS_AS(lie_from_name("so3"), Error);
  CHECK_THROWS_AS(lie_from_name(""), Error);
}

TEST_CASE("algebra files") {
  LieAlgebra h3 = lie_from_json_text(
      R"({"dim": 3, "labels": ["x","y","z"], "brackets": [[0, 1, [[2, 1, 1]]]]})");
  CHECK(h3.dim() == 3);
  CHECK(h3.bracket(h3.basis_element(0), h3.basis_element(1)) == h3.basis_element(2));
  CHECK(h3.killing_radical().dim() == 3);

  // labels are optional
  CHECK(lie_from_json_text(R"({"dim": 2, "brackets": []})").labels()[0] == "e0");

  CHECK_THROWS_AS(lie_from_json_text("not json"), Error);
  CHECK_THROWS_AS(lie_from_json_text(R"({"dim": 2, "brackets": [[1, 0, []]]})"), Error);
  CHECK_THROWS_AS(lie_from_json_text(R"({"dim": 2, "brackets": [[0, 1, [[0, 1, 0]]]]})"), Error);
  CHECK_THROWS_AS(lie_from_json_text(R"({"dim": 2, "brackets": [[0, 1, [[7, 1, 1]]]]})"), Error);
  try {
    lie_from_json_text(R"({"dim": 3, "brackets": [[0, 1, [[2,1,1]]], [1, 2, [[1,1,1]]]]})");
    FAIL("jacobi violation not caught");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(0,1,2)") != std::string::npos);
  }
}

TEST_CASE("element parse and print") {
  LieAlgebra sl2 = lie_sl2();
  LieElement x = sl2.parse_element("1,-1/2,0");
  CHECK(x == RatVec{Rat(1), Rat(-1, 2), Rat(0)});
  CHECK(sl2.element_str(x) == "(1, -1/2, 0)");
  CHECK_THROWS_AS(sl2.parse_element("1,2"), Error);
  CHECK_THROWS_AS(sl2.parse_element("1,2,x"), Error);
}
