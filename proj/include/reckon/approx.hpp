// Functorially finite subcategories B = add(N) of mod Lambda: membership,
// right/left approximations with certified minimality, the endomorphism
// algebra Gamma = End(N) with labeled idempotent blocks, and the
// projectivization dictionary sending X to the Gamma-module Hom(N, X).
//
// Gamma multiplication is composition (gamma * gamma' applies gamma' first),
// so Hom(N, X) with precomposition is a right Gamma-module and
// Hom(N, N) itself becomes the regular one.
#pragma once

#include "reckon/module.hpp"

#include <string>
#include <vector>

namespace reckon {

struct AddSubcategory {
  AlgebraPtr base;                      // Lambda
  std::vector<RightModule> generators;  // pairwise non-isomorphic indecomposables
  std::vector<std::string> names;       // one label per generator
  RightModule N;                        // direct sum of the generators
  std::vector<ModuleHom> incl, proj;    // N_i <-> N
  AlgebraPtr gamma;                     // End(N)
  std::vector<ModuleHom> gamma_basis;   // block-organized basis of End(N)
  std::vector<std::pair<std::size_t, std::size_t>> basis_block;  // (source gen, target gen)
  std::vector<Mat> block_idem;          // 1 x dim(Gamma) coefficient rows, one per generator
};

namespace detail {

inline bool certified_local_endo(const RightModule& x) {
  if (x.dim == 0) return false;
  EndoAlgebra e = endo_algebra(x);
  Mat rad = radical_basis(e.alg, false);
  return rad.rows() + 1 == e.alg.dim();
}

}  // namespace detail

inline AddSubcategory make_subcategory(AlgebraPtr base, std::vector<RightModule> gens,
                                       std::vector<std::string> names = {}) {
  if (gens.empty()) throw std::invalid_argument("make_subcategory: no generators");
  for (const auto& g : gens) {
    if (!(g.alg == base || *g.alg == *base))
      throw std::invalid_argument("make_subcategory: generator over a different algebra");
    if (!detail::certified_local_endo(g))
      throw std::invalid_argument("make_subcategory: generator is zero or decomposable");
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (indec_iso(gens[i], gens[j]))
        throw std::invalid_argument("make_subcategory: duplicate generator (isomorphic pair)");
  if (names.empty())
    for (std::size_t i = 0; i < gens.size(); ++i) names.push_back("N" + std::to_string(i + 1));
  if (names.size() != gens.size())
    throw std::invalid_argument("make_subcategory: name count mismatch");

  AddSubcategory b;
  b.base = base;
  b.generators = std::move(gens);
  b.names = std::move(names);
  DirectSumResult ds = direct_sum_modules(base, b.generators);
  b.N = ds.module;
  b.incl = ds.inclusions;
  b.proj = ds.projections;

  const FieldSpec& f = base->field();
  // block-organized basis of End(N): Hom(N_i, N_j) embedded via proj_i, incl_j
  for (std::size_t i = 0; i < b.generators.size(); ++i)
    for (std::size_t j = 0; j < b.generators.size(); ++j) {
      auto hb = hom_basis(b.generators[i], b.generators[j]);
      for (const auto& h : hb) {
        ModuleHom ext{b.N, b.N, b.proj[i].matrix * h.matrix * b.incl[j].matrix};
        b.gamma_basis.push_back(ext);
        b.basis_block.emplace_back(i, j);
      }
    }
  std::size_t d = b.gamma_basis.size();
  Mat chart = hom_space_rows(b.gamma_basis, b.N.dim, b.N.dim, f);
  if (rank(chart) != d) throw std::runtime_error("make_subcategory: block basis is dependent");
  std::vector<Rat> constants(d * d * d, Rat(0));
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      // gamma_p * gamma_q := gamma_p o gamma_q (apply q first)
      Mat prod = b.gamma_basis[q].matrix * b.gamma_basis[p].matrix;
      Mat coords = coords_in_rowbasis(chart, vec_of(prod));
      for (std::size_t k = 0; k < d; ++k) constants[(p * d + q) * d + k] = coords.at(0, k);
    }
  Mat unit = coords_in_rowbasis(chart, vec_of(Mat::identity(b.N.dim, f)));
  std::vector<std::string> labels;
  {
    std::vector<std::size_t> counter(b.generators.size() * b.generators.size(), 0);
    for (auto [i, j] : b.basis_block) {
      std::size_t c = counter[i * b.generators.size() + j]++;
      labels.push_back(b.names[i] + ">" + b.names[j] + "#" + std::to_string(c));
    }
  }
  b.gamma = make_algebra(Algebra(f, d, std::move(constants), unit, labels));

  // labeled block idempotents: the identity of each generator, certified
  Mat sum(1, d, f);
  for (std::size_t v = 0; v < b.generators.size(); ++v) {
    Mat idv = b.proj[v].matrix * b.incl[v].matrix;
    Mat coords = coords_in_rowbasis(chart, vec_of(idv));
    if (!b.gamma->is_idempotent(coords))
      throw std::runtime_error("make_subcategory: block identity is not idempotent");
    b.block_idem.push_back(coords);
    sum = sum + coords;
  }
  if (sum != b.gamma->unit())
    throw std::runtime_error("make_subcategory: block idempotents do not sum to 1");
  for (std::size_t v = 0; v < b.generators.size(); ++v)
    for (std::size_t w = 0; w < b.generators.size(); ++w) {
      Mat prod = b.gamma->multiply(b.block_idem[v], b.block_idem[w]);
      if (v == w ? prod != b.block_idem[v] : !prod.is_zero())
        throw std::runtime_error("make_subcategory: block idempotents not orthogonal");
    }
  for (std::size_t v = 0; v < b.generators.size(); ++v) {
    auto corner = corner_algebra(*b.gamma, b.block_idem[v]);
    Mat rad = radical_basis(corner.alg, false);
    if (rad.rows() + 1 != corner.alg.dim())
      throw std::runtime_error("make_subcategory: block idempotent is not primitive");
  }
  return b;
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

struct ContainsResult {
  bool contained = false;
  // for each indecomposable piece of X: index of the matching generator
  std::vector<std::size_t> matching;
};

inline ContainsResult contains(const AddSubcategory& b, const RightModule& x) {
  ContainsResult r;
  if (x.dim == 0) {
    r.contained = true;
    return r;
  }
  Decomposition d = decompose(x);
  for (const auto& piece : d.pieces) {
    bool found = false;
    for (std::size_t v = 0; v < b.generators.size(); ++v)
      if (indec_iso(piece.module, b.generators[v])) {
        r.matching.push_back(v);
        found = true;
        break;
      }
    if (!found) {
      r.contained = false;
      r.matching.clear();
      return r;
    }
  }
  r.contained = true;
  return r;
}

// ---------------------------------------------------------------------------
// Approximations
// ---------------------------------------------------------------------------

struct Approximation {
  ModuleHom map;                    // source -> X (right) or X -> target (left)
  std::vector<std::size_t> gens;    // generator index of each summand
  std::vector<ModuleHom> components;  // hom N_gen -> X (right) or X -> N_gen (left)
};

// Does every map N_j -> X factor through the given family of components?
inline bool is_right_approximation(const AddSubcategory& b,
                                   const std::vector<std::size_t>& gens,
                                   const std::vector<ModuleHom>& comps, const RightModule& x) {
  const FieldSpec& f = b.base->field();
  for (std::size_t j = 0; j < b.generators.size(); ++j) {
    const RightModule& nj = b.generators[j];
    auto targets = hom_basis(nj, x);
    if (targets.empty()) continue;
    // factor rows: (u then comp_k) over all k and basis u of Hom(N_j, N_{gens[k]})
    Mat rows(0, nj.dim * x.dim, f);
    for (std::size_t k = 0; k < comps.size(); ++k)
      for (const auto& u : hom_basis(nj, b.generators[gens[k]]))
        rows = Mat::vstack(rows, vec_of(compose(u, comps[k]).matrix));
    for (const auto& g : targets)
      if (!row_space_contained(vec_of(g.matrix), rows)) return false;
  }
  return true;
}

inline bool is_left_approximation(const AddSubcategory& b, const std::vector<std::size_t>& gens,
                                  const std::vector<ModuleHom>& comps, const RightModule& x) {
  const FieldSpec& f = b.base->field();
  for (std::size_t j = 0; j < b.generators.size(); ++j) {
    const RightModule& nj = b.generators[j];
    auto targets = hom_basis(x, nj);
    if (targets.empty()) continue;
    Mat rows(0, x.dim * nj.dim, f);
    for (std::size_t k = 0; k < comps.size(); ++k)
      for (const auto& u : hom_basis(b.generators[gens[k]], nj))
        rows = Mat::vstack(rows, vec_of(compose(comps[k], u).matrix));
    for (const auto& g : targets)
      if (!row_space_contained(vec_of(g.matrix), rows)) return false;
  }
  return true;
}

namespace detail {

inline Approximation assemble_right(const AddSubcategory& b, const std::vector<std::size_t>& gens,
                                    const std::vector<ModuleHom>& comps, const RightModule& x) {
  std::vector<RightModule> parts;
  for (std::size_t g : gens) parts.push_back(b.generators[g]);
  RightModule src = direct_sum_modules(b.base, parts).module;
  Mat m(0, x.dim, b.base->field());
  for (const auto& c : comps) m = Mat::vstack(m, c.matrix);
  if (comps.empty()) m = Mat(0, x.dim, b.base->field());
  return {ModuleHom{src, x, m}, gens, comps};
}

inline Approximation assemble_left(const AddSubcategory& b, const std::vector<std::size_t>& gens,
                                   const std::vector<ModuleHom>& comps, const RightModule& x) {
  std::vector<RightModule> parts;
  for (std::size_t g : gens) parts.push_back(b.generators[g]);
  RightModule tgt = direct_sum_modules(b.base, parts).module;
  Mat m(x.dim, 0, b.base->field());
  for (const auto& c : comps) m = Mat::hstack(m, c.matrix);
  if (comps.empty()) m = Mat(x.dim, 0, b.base->field());
  return {ModuleHom{x, tgt, m}, gens, comps};
}

}  // namespace detail

// The universal right approximation assembled from every Hom(N_i, X) basis
// element; its factorization property is certified before returning.
inline Approximation right_approximation(const AddSubcategory& b, const RightModule& x) {
  std::vector<std::size_t> gens;
  std::vector<ModuleHom> comps;
  for (std::size_t v = 0; v < b.generators.size(); ++v)
    for (const auto& h : hom_basis(b.generators[v], x)) {
      gens.push_back(v);
      comps.push_back(h);
    }
  if (!is_right_approximation(b, gens, comps, x))
    throw std::runtime_error("right_approximation: factorization property failed");
  return detail::assemble_right(b, gens, comps, x);
}

// Greedy summand elimination in deterministic order, re-certified each step.
inline Approximation minimal_right_approximation(const AddSubcategory& b, const RightModule& x) {
  Approximation full = right_approximation(b, x);
  std::vector<std::size_t> gens = full.gens;
  std::vector<ModuleHom> comps = full.components;
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      std::vector<std::size_t> g2 = gens;
      std::vector<ModuleHom> c2 = comps;
      g2.erase(g2.begin() + k);
      c2.erase(c2.begin() + k);
      if (is_right_approximation(b, g2, c2, x)) {
        gens = std::move(g2);
        comps = std::move(c2);
        removed = true;
        break;
      }
    }
  }
  return detail::assemble_right(b, gens, comps, x);
}

inline Approximation left_approximation(const AddSubcategory& b, const RightModule& x) {
  std::vector<std::size_t> gens;
  std::vector<ModuleHom> comps;
  for (std::size_t v = 0; v < b.generators.size(); ++v)
    for (const auto& h : hom_basis(x, b.generators[v])) {
      gens.push_back(v);
      comps.push_back(h);
    }
  if (!is_left_approximation(b, gens, comps, x))
    throw std::runtime_error("left_approximation: factorization property failed");
  return detail::assemble_left(b, gens, comps, x);
}

inline Approximation minimal_left_approximation(const AddSubcategory& b, const RightModule& x) {
  Approximation full = left_approximation(b, x);
  std::vector<std::size_t> gens = full.gens;
  std::vector<ModuleHom> comps = full.components;
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      std::vector<std::size_t> g2 = gens;
      std::vector<ModuleHom> c2 = comps;
      g2.erase(g2.begin() + k);
      c2.erase(c2.begin() + k);
      if (is_left_approximation(b, g2, c2, x)) {
        gens = std::move(g2);
        comps = std::move(c2);
        removed = true;
        break;
      }
    }
  }
  return detail::assemble_left(b, gens, comps, x);
}

// ---------------------------------------------------------------------------
// Projectivization: Gamma-modules from Lambda-data
// ---------------------------------------------------------------------------

struct YonedaModule {
  RightModule module;             // over gamma
  std::vector<ModuleHom> basis;   // block-organized basis of Hom(N, X)
};

// Hom_Lambda(N, X) as a right Gamma-module (precomposition action).
inline YonedaModule yoneda_module(const AddSubcategory& b, const RightModule& x) {
  const FieldSpec& f = b.base->field();
  std::vector<ModuleHom> basis;
  for (std::size_t v = 0; v < b.generators.size(); ++v)
    for (const auto& h : hom_basis(b.generators[v], x))
      basis.push_back(ModuleHom{b.N, x, b.proj[v].matrix * h.matrix});
  std::size_t d = basis.size();
  Mat chart = hom_space_rows(basis, b.N.dim, x.dim, f);
  if (d > 0 && rank(chart) != d)
    throw std::runtime_error("yoneda_module: block basis is dependent");
  RightModule m{b.gamma, d, {}};
  for (std::size_t a = 0; a < b.gamma->dim(); ++a) {
    Mat t(d, d, f);
    for (std::size_t r = 0; r < d; ++r) {
      // phi . gamma_a = phi o gamma_a (gamma_a applied first)
      Mat img = b.gamma_basis[a].matrix * basis[r].matrix;
      Mat coords = coords_in_rowbasis(chart, vec_of(img));
      for (std::size_t c = 0; c < d; ++c) t.set(r, c, coords.at(0, c));
    }
    m.action.push_back(t);
  }
  if (!check_module(m)) throw std::runtime_error("yoneda_module: action axioms fail");
  return {m, basis};
}

// functorial action on maps: Hom(N, f), postcomposition
inline ModuleHom yoneda_hom(const AddSubcategory& b, const ModuleHom& f, const YonedaModule& yx,
                            const YonedaModule& yy) {
  const FieldSpec& fld = b.base->field();
  Mat m(yx.module.dim, yy.module.dim, fld);
  Mat chart = hom_space_rows(yy.basis, b.N.dim, f.target.dim, fld);
  for (std::size_t r = 0; r < yx.basis.size(); ++r) {
    Mat img = yx.basis[r].matrix * f.matrix;
    Mat coords = coords_in_rowbasis(chart, vec_of(img));
    for (std::size_t c = 0; c < yy.basis.size(); ++c) m.set(r, c, coords.at(0, c));
  }
  ModuleHom h{yx.module, yy.module, m};
  if (!check_hom(h)) throw std::runtime_error("yoneda_hom: induced map is not Gamma-linear");
  return h;
}

// inverse dictionary: the unique f: b0 -> b1 with yoneda_hom(f) = g
inline ModuleHom from_yoneda_hom(const AddSubcategory& b, const ModuleHom& g,
                                 const RightModule& b0, const RightModule& b1,
                                 const YonedaModule& yb0, const YonedaModule& yb1) {
  const FieldSpec& f = b.base->field();
  auto hb = hom_basis(b0, b1);
  Mat rows(hb.size(), yb0.module.dim * yb1.module.dim, f);
  for (std::size_t k = 0; k < hb.size(); ++k) {
    ModuleHom yk = yoneda_hom(b, hb[k], yb0, yb1);
    Mat v = vec_of(yk.matrix);
    for (std::size_t c = 0; c < v.cols(); ++c) rows.set(k, c, v.at(0, c));
  }
  auto coeff = solve_left(rows, vec_of(g.matrix));
  if (!coeff) throw std::runtime_error("from_yoneda_hom: map is not in the image of Hom(N,-)");
  Mat m(b0.dim, b1.dim, f);
  for (std::size_t k = 0; k < hb.size(); ++k) m = m + hb[k].matrix.scaled(coeff->at(0, k));
  return {b0, b1, m};
}

// Hom_Lambda(X, N) as a right module over Gamma^op (postcomposition action).
struct CoYonedaModule {
  RightModule module;            // over opposite(gamma)
  std::vector<ModuleHom> basis;  // block-organized basis of Hom(X, N)
};

inline CoYonedaModule coyoneda_module(const AddSubcategory& b, AlgebraPtr gamma_op,
                                      const RightModule& x) {
  const FieldSpec& f = b.base->field();
  std::vector<ModuleHom> basis;
  for (std::size_t v = 0; v < b.generators.size(); ++v)
    for (const auto& h : hom_basis(x, b.generators[v]))
      basis.push_back(ModuleHom{x, b.N, h.matrix * b.incl[v].matrix});
  std::size_t d = basis.size();
  Mat chart = hom_space_rows(basis, x.dim, b.N.dim, f);
  if (d > 0 && rank(chart) != d)
    throw std::runtime_error("coyoneda_module: block basis is dependent");
  RightModule m{gamma_op, d, {}};
  for (std::size_t a = 0; a < gamma_op->dim(); ++a) {
    Mat t(d, d, f);
    for (std::size_t r = 0; r < d; ++r) {
      // psi . gamma_a^op = gamma_a o psi (psi applied first)
      Mat img = basis[r].matrix * b.gamma_basis[a].matrix;
      Mat coords = coords_in_rowbasis(chart, vec_of(img));
      for (std::size_t c = 0; c < d; ++c) t.set(r, c, coords.at(0, c));
    }
    m.action.push_back(t);
  }
  if (!check_module(m)) throw std::runtime_error("coyoneda_module: action axioms fail");
  return {m, basis};
}

// contravariant functorial action: Hom(f, N): coyoneda(Y) -> coyoneda(X)
inline ModuleHom coyoneda_hom(const AddSubcategory& b, const ModuleHom& f,
                              const CoYonedaModule& cy, const CoYonedaModule& cx) {
  const FieldSpec& fld = b.base->field();
  Mat chart = hom_space_rows(cx.basis, f.source.dim, b.N.dim, fld);
  Mat m(cy.module.dim, cx.module.dim, fld);
  for (std::size_t r = 0; r < cy.basis.size(); ++r) {
    Mat img = f.matrix * cy.basis[r].matrix;
    Mat coords = coords_in_rowbasis(chart, vec_of(img));
    for (std::size_t c = 0; c < cx.basis.size(); ++c) m.set(r, c, coords.at(0, c));
  }
  ModuleHom h{cy.module, cx.module, m};
  if (!check_hom(h)) throw std::runtime_error("coyoneda_hom: induced map is not linear");
  return h;
}

// finitely presented functor with presentation f: b1 -> b0 (objects of B)
inline RightModule fp_functor(const AddSubcategory& b, const ModuleHom& f) {
  if (!contains(b, f.source).contained || !contains(b, f.target).contained)
    throw std::invalid_argument("fp_functor: presentation objects must lie in the subcategory");
  YonedaModule y1 = yoneda_module(b, f.source);
  YonedaModule y0 = yoneda_module(b, f.target);
  return cokernel(yoneda_hom(b, f, y1, y0)).module;
}

}  // namespace reckon
