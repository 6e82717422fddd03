// Shared catalog fixtures for the test suites: the dual numbers k[x]/(x^2),
// the A2 path algebra 1->2, and kA3 with rad^2 = 0.
#pragma once

#include "reckon/module.hpp"
#include "reckon/quiver.hpp"

namespace reckon::testfx {

inline const FieldSpec kQ = FieldSpec::rationals();

struct AlgebraFixture {
  AlgebraPtr alg;
  ProjectiveCatalog cat;
};

inline AlgebraFixture dual_numbers() {
  QuiverPresentation q;
  q.vertices = {"v"};
  q.arrows = {{"x", 0, 0}};
  q.relations = {{{{Rat(1), {0, 0}}}}};
  q.max_path_length = 5;
  AlgebraPtr alg = make_algebra(from_quiver(q, kQ));
  return {alg, projective_catalog(alg)};
}

inline AlgebraFixture a2() {
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}};
  AlgebraPtr alg = make_algebra(from_quiver(q, kQ));
  return {alg, projective_catalog(alg)};
}

inline AlgebraFixture a3_rad2() {
  QuiverPresentation q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 2}};
  q.relations = {{{{Rat(1), {0, 1}}}}};
  q.max_path_length = 6;
  AlgebraPtr alg = make_algebra(from_quiver(q, kQ));
  return {alg, projective_catalog(alg)};
}

// index of the primitive idempotent whose trivial path sits at `vertex`
// (from_quiver puts trivial paths first, in vertex order; verified here)
inline std::size_t vertex_block(const AlgebraFixture& fx, std::size_t vertex) {
  for (std::size_t v = 0; v < fx.cat.prim.size(); ++v)
    if (!fx.alg->field().is_zero(fx.cat.prim[v].element.at(0, vertex))) return v;
  throw std::runtime_error("vertex_block: no idempotent supported at vertex");
}

inline const RightModule& simple_at(const AlgebraFixture& fx, std::size_t vertex) {
  return fx.cat.simples[vertex_block(fx, vertex)];
}

inline const RightModule& proj_at(const AlgebraFixture& fx, std::size_t vertex) {
  return fx.cat.projectives[vertex_block(fx, vertex)];
}

inline const RightModule& inj_at(const AlgebraFixture& fx, std::size_t vertex) {
  return fx.cat.injectives[vertex_block(fx, vertex)];
}

}  // namespace reckon::testfx
