#include "reckon/algebra.hpp"
#include "reckon/quiver.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace reckon;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

QuiverPresentation one_vertex() {
  QuiverPresentation q;
  q.vertices = {"v"};
  return q;
}

QuiverPresentation dual_numbers_quiver() {
  QuiverPresentation q;
  q.vertices = {"v"};
  q.arrows = {{"x", 0, 0}};
  q.relations = {{{{Rat(1), {0, 0}}}}};
  q.max_path_length = 5;
  return q;
}

QuiverPresentation a2_quiver() {
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}};
  return q;
}

QuiverPresentation a3_rad2_quiver() {
  QuiverPresentation q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 2}};
  q.relations = {{{{Rat(1), {0, 1}}}}};
  q.max_path_length = 6;
  return q;
}

Algebra k_times_k() {
  // basis e0, e1 with e_i e_j = delta_ij e_i
  std::vector<Rat> c(8, Rat(0));
  c[(0 * 2 + 0) * 2 + 0] = Rat(1);
  c[(1 * 2 + 1) * 2 + 1] = Rat(1);
  Mat unit = Mat::from_rows({{Rat(1), Rat(1)}}, 2, kQ);
  return Algebra(kQ, 2, c, unit, {"e0", "e1"});
}

}  // namespace

TEST_CASE("from_quiver small catalog") {
  SECTION("one vertex, no arrows: the field") {
    Algebra a = from_quiver(one_vertex(), kQ);
    CHECK(a.dim() == 1);
    CHECK(a.is_associative());
    CHECK(a.unit_is_identity());
  }
  SECTION("loop with x^2 = 0: dual numbers, dim 2") {
    Algebra a = from_quiver(dual_numbers_quiver(), kQ);
    CHECK(a.dim() == 2);
    // x * x = 0
    Mat x = a.basis_element(1);
    CHECK(a.multiply(x, x).is_zero());
  }
  SECTION("A3 with rad^2 = 0: dim 5 (three trivial paths + two arrows)") {
    Algebra a = from_quiver(a3_rad2_quiver(), kQ);
    CHECK(a.dim() == 5);
    CHECK(a.is_associative());
    CHECK(a.unit_is_identity());
  }
  SECTION("loop without relations exceeds the bound") {
    QuiverPresentation q;
    q.vertices = {"v"};
    q.arrows = {{"x", 0, 0}};
    q.max_path_length = 4;
    CHECK_THROWS_WITH(from_quiver(q, kQ), Catch::Matchers::ContainsSubstring("length 4"));
  }
  SECTION("relation of length 1 rejected") {
    QuiverPresentation q;
    q.vertices = {"v"};
    q.arrows = {{"x", 0, 0}};
    q.relations = {{{{Rat(1), {0}}}}};
    CHECK_THROWS_AS(from_quiver(q, kQ), std::invalid_argument);
  }
}

TEST_CASE("opposite algebra") {
  SECTION("commutative algebras are fixed entrywise") {
    Algebra a = from_quiver(dual_numbers_quiver(), kQ);
    CHECK(a.opposite() == a);
  }
  SECTION("opposite is an involution") {
    Algebra a = from_quiver(a3_rad2_quiver(), kQ);
    CHECK(a.opposite().opposite() == a);
  }
  SECTION("opposite of path algebra of 1->2 equals path algebra of 2->1") {
    Algebra a_op = from_quiver(a2_quiver(), kQ).opposite();
    QuiverPresentation rev;
    rev.vertices = {"1", "2"};
    rev.arrows = {{"a", 1, 0}};
    Algebra b = from_quiver(rev, kQ);
    // same basis order (trivial paths then the arrow), so entrywise equality
    CHECK(a_op == b);
  }
}

TEST_CASE("radical") {
  SECTION("field is semisimple") {
    CHECK(radical_basis(Algebra::field_algebra(kQ)).rows() == 0);
  }
  SECTION("dual numbers: radical = span{x}") {
    Algebra a = from_quiver(dual_numbers_quiver(), kQ);
    Mat rad = radical_basis(a);
    REQUIRE(rad.rows() == 1);
    CHECK(rad.at(0, 0) == Rat(0));
    CHECK(rad.at(0, 1) == Rat(1));
  }
  SECTION("path algebra of 1->2: radical = arrow span") {
    Algebra a = from_quiver(a2_quiver(), kQ);
    Mat rad = radical_basis(a);
    REQUIRE(rad.rows() == 1);
    // the arrow is the last basis element
    CHECK(rad.at(0, 2) == Rat(1));
  }
  SECTION("field guard: GF(3) rejected for dim-5 algebra") {
    Algebra a = from_quiver(a3_rad2_quiver(), FieldSpec::gf(3));
    CHECK_THROWS_AS(radical_basis(a), std::domain_error);
  }
  SECTION("GF(7) accepted for dim-5 algebra") {
    Algebra a = from_quiver(a3_rad2_quiver(), FieldSpec::gf(7));
    CHECK(radical_basis(a).rows() == 2);
  }
}

TEST_CASE("primitive idempotents") {
  SECTION("field: just the unit") {
    auto es = primitive_idempotents(Algebra::field_algebra(kQ));
    REQUIRE(es.size() == 1);
    CHECK(es[0].element == Mat::from_rows({{Rat(1)}}, 1, kQ));
  }
  SECTION("k x k: the two coordinate idempotents") {
    Algebra a = k_times_k();
    auto es = primitive_idempotents(a);
    REQUIRE(es.size() == 2);
    for (const auto& e : es) CHECK(a.is_idempotent(e.element));
    CHECK(es[0].element + es[1].element == a.unit());
  }
  SECTION("path algebra of 1->2: the two trivial paths") {
    Algebra a = from_quiver(a2_quiver(), kQ);
    auto es = primitive_idempotents(a);
    REQUIRE(es.size() == 2);
    for (const auto& e : es) {
      CHECK(a.is_idempotent(e.element));
      // supported on trivial paths only
      CHECK(e.element.at(0, 2) == Rat(0));
    }
  }
  SECTION("local algebra: dual numbers stay whole") {
    Algebra a = from_quiver(dual_numbers_quiver(), kQ);
    auto es = primitive_idempotents(a);
    REQUIRE(es.size() == 1);
    CHECK(es[0].element == a.unit());
  }
  SECTION("A3/rad^2 has three") {
    Algebra a = from_quiver(a3_rad2_quiver(), kQ);
    CHECK(primitive_idempotents(a).size() == 3);
  }
}

TEST_CASE("corner and quotient algebras") {
  Algebra a = from_quiver(a2_quiver(), kQ);
  auto es = primitive_idempotents(a);
  SECTION("corner at a trivial path is the field") {
    auto c = corner_algebra(a, es[0].element);
    CHECK(c.alg.dim() == 1);
    CHECK(c.alg.is_associative());
  }
  SECTION("quotient by the arrow ideal is k x k") {
    Mat rad = radical_basis(a);
    auto q = quotient_algebra(a, two_sided_ideal(a, rad));
    CHECK(q.alg.dim() == 2);
    CHECK(radical_basis(q.alg).rows() == 0);
  }
  SECTION("non-ideal subspace rejected") {
    // span{e_1} is not an ideal
    Mat bad = Mat::from_rows({{Rat(1), Rat(0), Rat(0)}}, 3, kQ);
    CHECK_THROWS_AS(quotient_algebra(a, bad), std::invalid_argument);
  }
}

TEST_CASE("minimal polynomial and splitting") {
  Algebra a = k_times_k();
  Poly mu = minimal_polynomial(a, a.basis_element(0));
  // t^2 - t
  REQUIRE(mu.c.size() == 3);
  CHECK(mu.c[0] == Rat(0));
  CHECK(mu.c[1] == Rat(-1));
  CHECK(mu.c[2] == Rat(1));
  auto roots = field_roots(mu);
  CHECK(roots == std::vector<Rat>{Rat(0), Rat(1)});
}

TEST_CASE("non-split semisimple corners advise a field change") {
  // GF(25) as a 2-dimensional algebra over GF(5): basis {1, t}, t^2 = 2
  FieldSpec f5 = FieldSpec::gf(5);
  std::vector<Rat> c(8, Rat(0));
  c[(0 * 2 + 0) * 2 + 0] = Rat(1);  // 1*1 = 1
  c[(0 * 2 + 1) * 2 + 1] = Rat(1);  // 1*t = t
  c[(1 * 2 + 0) * 2 + 1] = Rat(1);  // t*1 = t
  c[(1 * 2 + 1) * 2 + 0] = Rat(2);  // t*t = 2
  Algebra gf25(f5, 2, c, Mat::from_rows({{Rat(1), Rat(0)}}, 2, f5), {"1", "t"});
  REQUIRE(gf25.is_associative());
  CHECK(radical_basis(gf25).rows() == 0);
  CHECK_THROWS_WITH(primitive_idempotents(gf25),
                    Catch::Matchers::ContainsSubstring("field"));
}
