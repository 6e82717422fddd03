#include "reckon/abridger.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "reckon/higher_ar.hpp"

#include "fixtures.hpp"

using namespace reckon;
using namespace reckon::testfx;

namespace {

ABContext dual_numbers_ctx() {
  AlgebraFixture fx = dual_numbers();
  RightModule R = decompose(regular_module(fx.alg)).summands[0].first;
  AddSubcategory b = make_subcategory(fx.alg, {R, fx.cat.simples[0]}, {"R", "S"});
  return make_ab_context(b);
}

ABContext a2_ctx() {
  AlgebraFixture fx = a2();
  AddSubcategory b = make_subcategory(
      fx.alg, {proj_at(fx, 0), proj_at(fx, 1), simple_at(fx, 0)}, {"P1", "P2", "S1"});
  return make_ab_context(b);
}

}  // namespace

TEST_CASE("ab context construction") {
  SECTION("dual numbers: e_proj is the R block") {
    ABContext ctx = dual_numbers_ctx();
    CHECK(ctx.gen_projective == std::vector<bool>{true, false});
    CHECK(ctx.gen_injective == std::vector<bool>{true, false});
  }
  SECTION("missing injectives rejected") {
    AlgebraFixture fx = a2();
    // add(P1, P2) misses the injective S1
    AddSubcategory b = make_subcategory(fx.alg, {proj_at(fx, 0), proj_at(fx, 1)}, {"P1", "P2"});
    CHECK_THROWS_AS(make_ab_context(b), std::invalid_argument);
  }
}

TEST_CASE("star and double star") {
  ABContext ctx = dual_numbers_ctx();
  RightModule reg = regular_module(ctx.B.gamma);
  SECTION("star of the regular module is the opposite regular module") {
    RightModule s = star(ctx, reg);
    CHECK(s.dim == reg.dim);
    CHECK(modules_isomorphic(s, regular_module(ctx.gamma_op)).has_value());
  }
  SECTION("representables are reflexive") {
    for (const auto& g : ctx.B.generators) {
      YonedaModule y = yoneda_module(ctx.B, g);
      DoubleStarResult ds = double_star_with_evaluation(ctx, y.module);
      CHECK(ds.double_star.dim == y.module.dim);
      CHECK(invert(ds.evaluation.matrix).has_value());
    }
  }
  SECTION("vanishing star forces vanishing double star") {
    for (const auto& x : enumerate_indecomposables(ctx.B.gamma).indecs) {
      RightModule s = star(ctx, x);
      if (s.dim == 0) {
        DoubleStarResult ds = double_star_with_evaluation(ctx, x);
        CHECK(ds.double_star.dim == 0);
        CHECK(ds.evaluation.matrix.is_zero());
      }
    }
  }
}

TEST_CASE("auslander-bridger sequences are exact with matching ext terms") {
  for (ABContext ctx : {dual_numbers_ctx(), a2_ctx()}) {
    for (const auto& x : enumerate_indecomposables(ctx.B.gamma).indecs) {
      ABData ab = ab_sequence(ctx, x);  // exactness + ext cross-check certified inside
      CHECK(four_term_exact(ab.sequence));
      CHECK(ab.ext1_dim == ab.sequence.m0.dim);
      CHECK(ab.ext2_dim == ab.sequence.m3.dim);
      // outer terms killed by the projective-generator block
      CHECK(act(ab.sequence.m0, ctx.e_proj).is_zero());
      CHECK(act(ab.sequence.m3, ctx.e_proj).is_zero());
      // q(evaluation) is an isomorphism
      auto qx = ctx.rec.q(x);
      auto qxx = ctx.rec.q(ab.double_star);
      ModuleHom qe = ctx.rec.q_hom(ab.evaluation, qx, qxx);
      CHECK(invert(qe.matrix).has_value());
    }
  }
}

TEST_CASE("projective Gamma-modules have degenerate AB sequences") {
  ABContext ctx = a2_ctx();
  RightModule reg = regular_module(ctx.B.gamma);
  ABData ab = ab_sequence(ctx, reg);
  CHECK(ab.sequence.m0.dim == 0);
  CHECK(ab.sequence.m3.dim == 0);
  CHECK(invert(ab.evaluation.matrix).has_value());
}

TEST_CASE("theorem: AB sequence equals the right-defining sequence") {
  for (ABContext ctx : {dual_numbers_ctx(), a2_ctx()}) {
    std::size_t count = 0;
    for (const auto& x : enumerate_indecomposables(ctx.B.gamma).indecs) {
      SequenceComparison cmp = compare_with_right_defining(ctx, x);
      INFO("indecomposable of dim " + std::to_string(x.dim) + ": " + cmp.detail);
      CHECK(cmp.ok);
      ++count;
    }
    CHECK(count >= 2);
  }
}

TEST_CASE("second syzygy membership") {
  ABContext ctx = dual_numbers_ctx();
  SECTION("images of q_rho are members") {
    RightModule base_reg = regular_module(ctx.B.base);
    auto q = ctx.rec.q(regular_module(ctx.B.gamma));
    auto rq = ctx.rec.q_rho(q.module);
    SecondSyzygyResult r = second_syzygy_membership(ctx, rq.module);
    CHECK(r.member);
    CHECK(r.copresentation_found);
    // the copresentation really is exact at X
    CHECK(rank(r.into_q0.matrix) == rq.module.dim);
    CHECK(same_row_space(image_basis(r.into_q0.matrix), left_kernel_basis(r.q0_to_q1.matrix)));
  }
  SECTION("the regular module is a member") {
    CHECK(second_syzygy_membership(ctx, regular_module(ctx.B.gamma)).member);
  }
  SECTION("defect modules are not members") {
    std::size_t defects_seen = 0;
    for (const auto& x : enumerate_indecomposables(ctx.B.gamma).indecs) {
      if (x.dim > 0 && act(x, ctx.e_proj).is_zero()) {
        ++defects_seen;
        CHECK(!second_syzygy_membership(ctx, x).member);
      }
    }
    CHECK(defects_seen >= 1);
  }
}
