#include "reckon/approx.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace reckon;
using namespace reckon::testfx;

TEST_CASE("make_subcategory endomorphism algebras") {
  SECTION("End of the projectives of A2 has the dimension of the algebra") {
    auto fx = a2();
    auto b = make_subcategory(fx.alg, {proj_at(fx, 0), proj_at(fx, 1)}, {"P1", "P2"});
    CHECK(b.gamma->dim() == fx.alg->dim());
    CHECK(b.gamma->is_associative());
    CHECK(b.gamma->unit_is_identity());
  }
  SECTION("End(S) over the dual numbers is the field") {
    auto fx = dual_numbers();
    auto b = make_subcategory(fx.alg, {fx.cat.simples[0]}, {"S"});
    CHECK(b.gamma->dim() == 1);
  }
  SECTION("the Auslander algebra of A2 has dimension 5") {
    auto fx = a2();
    auto b = make_subcategory(fx.alg, {proj_at(fx, 0), proj_at(fx, 1), simple_at(fx, 0)},
                              {"P1", "P2", "S1"});
    CHECK(b.gamma->dim() == 5);
    CHECK(primitive_idempotents(*b.gamma).size() == 3);
  }
  SECTION("duplicate generators rejected") {
    auto fx = a2();
    CHECK_THROWS_AS(make_subcategory(fx.alg, {proj_at(fx, 1), proj_at(fx, 1)}),
                    std::invalid_argument);
  }
  SECTION("decomposable generator rejected") {
    auto fx = a2();
    CHECK_THROWS_AS(make_subcategory(fx.alg, {regular_module(fx.alg)}), std::invalid_argument);
  }
}

TEST_CASE("contains") {
  auto fx = a3_rad2();
  auto b = make_subcategory(
      fx.alg, {proj_at(fx, 0), proj_at(fx, 1), simple_at(fx, 2), simple_at(fx, 0)},
      {"P1", "P2", "S3", "S1"});
  CHECK(contains(b, b.N).contained);
  CHECK(contains(b, zero_module(fx.alg)).contained);
  CHECK(!contains(b, simple_at(fx, 1)).contained);
  auto two = direct_sum_modules(fx.alg, {proj_at(fx, 0), simple_at(fx, 0)}).module;
  auto r = contains(b, two);
  CHECK(r.contained);
  CHECK(r.matching.size() == 2);
}

TEST_CASE("approximations") {
  auto fx = dual_numbers();
  const RightModule R = regular_module(fx.alg);
  const RightModule S = fx.cat.simples[0];
  SECTION("minimal right approximation of a member is an iso") {
    auto b = make_subcategory(fx.alg, {decompose(R).summands[0].first, S}, {"R", "S"});
    auto a = minimal_right_approximation(b, S);
    CHECK(a.map.source.dim == S.dim);
    CHECK(invert(a.map.matrix).has_value());
  }
  SECTION("B = add(projectives): minimal right approximation of S is the cover") {
    auto b = make_subcategory(fx.alg, {decompose(R).summands[0].first}, {"R"});
    auto a = minimal_right_approximation(b, S);
    CHECK(a.map.source.dim == 2);
    CHECK(rank(a.map.matrix) == 1);
    CHECK(a.gens == std::vector<std::size_t>{0});
  }
  SECTION("left approximation of S by add(R) is the hull") {
    auto b = make_subcategory(fx.alg, {decompose(R).summands[0].first}, {"R"});
    auto a = minimal_left_approximation(b, S);
    CHECK(a.map.target.dim == 2);
    CHECK(rank(a.map.matrix) == 1);
  }
  SECTION("approximation of the zero module is the zero map") {
    auto b = make_subcategory(fx.alg, {S}, {"S"});
    auto a = minimal_right_approximation(b, zero_module(fx.alg));
    CHECK(a.map.source.dim == 0);
  }
}

TEST_CASE("yoneda modules") {
  auto fx = a2();
  auto b = make_subcategory(fx.alg, {proj_at(fx, 0), proj_at(fx, 1), simple_at(fx, 0)},
                            {"P1", "P2", "S1"});
  SECTION("yoneda of N is the regular Gamma-module") {
    YonedaModule y = yoneda_module(b, b.N);
    CHECK(y.module.dim == b.gamma->dim());
    CHECK(modules_isomorphic(y.module, regular_module(b.gamma)).has_value());
  }
  SECTION("yoneda of zero is zero") {
    CHECK(yoneda_module(b, zero_module(fx.alg)).module.dim == 0);
  }
  SECTION("yoneda of the non-projective simple is 2-dimensional") {
    YonedaModule y = yoneda_module(b, simple_at(fx, 0));
    CHECK(y.module.dim == 2);
  }
  SECTION("projectivization is fully faithful on the generators") {
    for (std::size_t i = 0; i < b.generators.size(); ++i)
      for (std::size_t j = 0; j < b.generators.size(); ++j) {
        YonedaModule yi = yoneda_module(b, b.generators[i]);
        YonedaModule yj = yoneda_module(b, b.generators[j]);
        CHECK(hom_basis(yi.module, yj.module).size() ==
              hom_basis(b.generators[i], b.generators[j]).size());
      }
  }
  SECTION("round trip through the dictionary") {
    const RightModule& p1 = b.generators[0];
    const RightModule& s1 = b.generators[2];
    YonedaModule y1 = yoneda_module(b, p1);
    YonedaModule y2 = yoneda_module(b, s1);
    auto hb = hom_basis(p1, s1);
    REQUIRE(hb.size() == 1);
    ModuleHom g = yoneda_hom(b, hb[0], y1, y2);
    ModuleHom back = from_yoneda_hom(b, g, p1, s1, y1, y2);
    CHECK(back.matrix == hb[0].matrix);
  }
}

TEST_CASE("fp functors") {
  auto fx = dual_numbers();
  const RightModule R = decompose(regular_module(fx.alg)).summands[0].first;
  const RightModule S = fx.cat.simples[0];
  auto b = make_subcategory(fx.alg, {R, S}, {"R", "S"});
  SECTION("identity presents the zero functor") {
    CHECK(fp_functor(b, identity_hom(R)).dim == 0);
  }
  SECTION("zero map presents the representable") {
    RightModule f0 = fp_functor(b, zero_hom(R, R));
    CHECK(f0.dim == yoneda_module(b, R).module.dim);
  }
  SECTION("multiplication by x on R presents a 2-dimensional functor") {
    ModuleHom mx{R, R, act(R, fx.alg->basis_element(1))};
    REQUIRE(check_hom(mx));
    CHECK(fp_functor(b, mx).dim == 2);
  }
  SECTION("presentation evaluated at the generators is exact") {
    ModuleHom mx{R, R, act(R, fx.alg->basis_element(1))};
    YonedaModule y1 = yoneda_module(b, R);
    ModuleHom ymx = yoneda_hom(b, mx, y1, y1);
    RightModule f = cokernel(ymx).module;
    // dim coker = dim Hom(N,R) - rank of the induced map
    CHECK(f.dim == y1.module.dim - rank(ymx.matrix));
  }
}
