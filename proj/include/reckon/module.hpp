// Finite-dimensional right modules over an Algebra and the homological
// toolkit: Hom-spaces, kernels/cokernels, duality, Krull-Schmidt
// decomposition, projective covers and injective hulls, minimal
// presentations, syzygies, Ext, transpose and the Auslander-Reiten
// translations, stable Hom-spaces.
//
// Row-vector convention: module elements are coefficient rows, the action of
// a basis element b_i is m |-> m * action[i], and module maps apply on the
// right, so "f then g" has matrix f.matrix * g.matrix. Everything is a pure
// value; results are deterministic for identical inputs.
#pragma once

#include "reckon/algebra.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace reckon {

struct RightModule {
  AlgebraPtr alg;
  std::size_t dim = 0;
  std::vector<Mat> action;  // one dim x dim matrix per algebra basis element

  bool operator==(const RightModule& o) const {
    return dim == o.dim && action == o.action && (alg == o.alg || *alg == *o.alg);
  }
  bool operator!=(const RightModule& o) const { return !(*this == o); }
};

struct ModuleHom {
  RightModule source, target;
  Mat matrix;  // dim(source) x dim(target)
};

inline bool same_algebra(const RightModule& x, const RightModule& y) {
  return x.alg == y.alg || *x.alg == *y.alg;
}

inline RightModule zero_module(AlgebraPtr alg) {
  RightModule m{alg, 0, {}};
  m.action.assign(alg->dim(), Mat(0, 0, alg->field()));
  return m;
}

inline RightModule regular_module(AlgebraPtr alg) {
  RightModule m{alg, alg->dim(), {}};
  m.action.reserve(alg->dim());
  for (std::size_t j = 0; j < alg->dim(); ++j) m.action.push_back(alg->right_mult(j));
  return m;
}

// action of an arbitrary algebra element (1 x dim(alg) row)
inline Mat act(const RightModule& x, const Mat& elt) {
  Mat m(x.dim, x.dim, x.alg->field());
  for (std::size_t i = 0; i < x.alg->dim(); ++i) {
    if (x.alg->field().is_zero(elt.at(0, i))) continue;
    m = m + x.action[i].scaled(elt.at(0, i));
  }
  return m;
}

// exhaustive check of linearity/multiplicativity/unitality of the action
inline bool check_module(const RightModule& x) {
  const Algebra& A = *x.alg;
  if (x.action.size() != A.dim()) return false;
  for (const Mat& a : x.action)
    if (a.rows() != x.dim || a.cols() != x.dim) return false;
  if (act(x, A.unit()) != Mat::identity(x.dim, A.field())) return false;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Mat expected(x.dim, x.dim, A.field());
      for (std::size_t k = 0; k < A.dim(); ++k) {
        Rat c = A.constant(i, j, k);
        if (!A.field().is_zero(c)) expected = expected + x.action[k].scaled(c);
      }
      if (x.action[i] * x.action[j] != expected) return false;
    }
  return true;
}

inline bool check_hom(const ModuleHom& f) {
  if (!same_algebra(f.source, f.target)) return false;
  if (f.matrix.rows() != f.source.dim || f.matrix.cols() != f.target.dim) return false;
  for (std::size_t i = 0; i < f.source.alg->dim(); ++i)
    if (f.source.action[i] * f.matrix != f.matrix * f.target.action[i]) return false;
  return true;
}

inline ModuleHom zero_hom(const RightModule& x, const RightModule& y) {
  return {x, y, Mat(x.dim, y.dim, x.alg->field())};
}

inline ModuleHom identity_hom(const RightModule& x) {
  return {x, x, Mat::identity(x.dim, x.alg->field())};
}

// f then g
inline ModuleHom compose(const ModuleHom& f, const ModuleHom& g) {
  return {f.source, g.target, f.matrix * g.matrix};
}

// Rebinds the algebra pointer (values must agree); used after double
// opposites so modules keep comparing against the caller's algebra object.
inline RightModule rebind_algebra(RightModule x, AlgebraPtr alg) {
  if (*x.alg != *alg) throw std::invalid_argument("rebind_algebra: algebras differ");
  x.alg = std::move(alg);
  return x;
}

// ---------------------------------------------------------------------------
// Hom spaces
// ---------------------------------------------------------------------------

// Basis of the intertwiner space Hom_A(X, Y), canonical (rref-derived).
inline std::vector<ModuleHom> hom_basis(const RightModule& x, const RightModule& y) {
  if (!same_algebra(x, y)) throw std::invalid_argument("hom_basis: algebra mismatch");
  const FieldSpec& f = x.alg->field();
  if (x.dim == 0 || y.dim == 0) return {};
  std::size_t n = x.alg->dim();
  std::size_t nv = x.dim * y.dim;
  Mat constraints(nv, 0, f);
  Mat idx = Mat::identity(x.dim, f), idy = Mat::identity(y.dim, f);
  for (std::size_t i = 0; i < n; ++i) {
    Mat c = kron(x.action[i].transposed(), idy) - kron(idx, y.action[i]);
    constraints = Mat::hstack(constraints, c);
  }
  Mat basis = constraints.cols() == 0 ? Mat::identity(nv, f) : left_kernel_basis(constraints);
  std::vector<ModuleHom> result;
  result.reserve(basis.rows());
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    Mat m(x.dim, y.dim, f);
    for (std::size_t i = 0; i < x.dim; ++i)
      for (std::size_t j = 0; j < y.dim; ++j) m.set(i, j, basis.at(r, i * y.dim + j));
    result.push_back({x, y, std::move(m)});
  }
  return result;
}

inline Mat vec_of(const Mat& m) {
  Mat v(1, m.rows() * m.cols(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.set(0, i * m.cols() + j, m.at(i, j));
  return v;
}

// rows: vec of each hom's matrix (the coordinate chart for hom spaces)
inline Mat hom_space_rows(const std::vector<ModuleHom>& hs, std::size_t dx, std::size_t dy,
                          const FieldSpec& f) {
  Mat rows(hs.size(), dx * dy, f);
  for (std::size_t r = 0; r < hs.size(); ++r) {
    Mat v = vec_of(hs[r].matrix);
    for (std::size_t c = 0; c < v.cols(); ++c) rows.set(r, c, v.at(0, c));
  }
  return rows;
}

// coordinates of a hom in a hom basis
inline Mat hom_coords(const std::vector<ModuleHom>& basis, const ModuleHom& h) {
  if (basis.empty()) {
    if (!h.matrix.is_zero()) throw std::runtime_error("hom_coords: nonzero hom, empty basis");
    return Mat(1, 0, h.matrix.field());
  }
  Mat rows = hom_space_rows(basis, h.source.dim, h.target.dim, h.matrix.field());
  return coords_in_rowbasis(rows, vec_of(h.matrix));
}

inline ModuleHom hom_from_coords(const std::vector<ModuleHom>& basis, const Mat& coords,
                                 const RightModule& x, const RightModule& y) {
  Mat m(x.dim, y.dim, x.alg->field());
  for (std::size_t i = 0; i < basis.size(); ++i)
    m = m + basis[i].matrix.scaled(coords.at(0, i));
  return {x, y, std::move(m)};
}

// ---------------------------------------------------------------------------
// Sub/quotient modules, kernels, images, cokernels
// ---------------------------------------------------------------------------

struct SubmoduleResult {
  RightModule module;
  ModuleHom inclusion;  // module -> ambient
};

inline bool is_invariant_subspace(const RightModule& x, const Mat& rows) {
  for (std::size_t i = 0; i < x.alg->dim(); ++i)
    if (!row_space_contained(rows * x.action[i], rows)) return false;
  return true;
}

inline SubmoduleResult submodule(const RightModule& x, const Mat& span_rows) {
  Mat basis = image_basis(span_rows);
  if (!is_invariant_subspace(x, basis))
    throw std::invalid_argument("submodule: subspace is not action-invariant");
  RightModule s{x.alg, basis.rows(), {}};
  s.action.reserve(x.alg->dim());
  for (std::size_t i = 0; i < x.alg->dim(); ++i) {
    if (basis.rows() == 0) {
      s.action.push_back(Mat(0, 0, x.alg->field()));
      continue;
    }
    auto a = solve_left(basis, basis * x.action[i]);
    if (!a) throw std::runtime_error("submodule: induced action inconsistent");
    s.action.push_back(*a);
  }
  return {s, ModuleHom{s, x, basis}};
}

struct QuotientResult {
  RightModule module;
  ModuleHom projection;  // ambient -> module
  Mat section;           // module -> ambient representatives
};

inline QuotientResult quotient_module(const RightModule& x, const Mat& span_rows) {
  Mat sub = image_basis(span_rows);
  if (!is_invariant_subspace(x, sub))
    throw std::invalid_argument("quotient_module: subspace is not action-invariant");
  const FieldSpec& f = x.alg->field();
  RrefResult r = rref(sub);
  std::vector<bool> is_pivot(x.dim, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < x.dim; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  std::size_t q = free_cols.size();
  Mat projection(x.dim, q, f);
  for (std::size_t j = 0; j < x.dim; ++j) {
    std::vector<Rat> v(x.dim, Rat(0));
    v[j] = f.one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      Rat coef = v[r.pivots[i]];
      if (f.is_zero(coef)) continue;
      for (std::size_t k = 0; k < x.dim; ++k) v[k] = f.sub(v[k], f.mul(coef, r.mat.at(i, k)));
    }
    for (std::size_t c = 0; c < q; ++c) projection.set(j, c, v[free_cols[c]]);
  }
  Mat section(q, x.dim, f);
  for (std::size_t c = 0; c < q; ++c) section.set(c, free_cols[c], f.one());
  RightModule qm{x.alg, q, {}};
  qm.action.reserve(x.alg->dim());
  for (std::size_t i = 0; i < x.alg->dim(); ++i) qm.action.push_back(section * x.action[i] * projection);
  return {qm, ModuleHom{x, qm, projection}, section};
}

struct KernelResult {
  RightModule module;
  ModuleHom inclusion;
};

inline KernelResult kernel(const ModuleHom& fhom) {
  Mat rows = left_kernel_basis(fhom.matrix);
  auto s = submodule(fhom.source, rows);
  return {s.module, s.inclusion};
}

struct ImageResult {
  RightModule module;
  ModuleHom epi;   // source ->> image
  ModuleHom mono;  // image -> target
};

inline ImageResult image(const ModuleHom& fhom) {
  Mat rows = image_basis(fhom.matrix);
  auto s = submodule(fhom.target, rows);
  Mat epi = rows.rows() == 0 ? Mat(fhom.source.dim, 0, fhom.matrix.field())
                             : *solve_left(rows, fhom.matrix);
  return {s.module, ModuleHom{fhom.source, s.module, epi}, s.inclusion};
}

struct CokernelResult {
  RightModule module;
  ModuleHom projection;
};

inline CokernelResult cokernel(const ModuleHom& fhom) {
  auto q = quotient_module(fhom.target, image_basis(fhom.matrix));
  return {q.module, q.projection};
}

inline RightModule dual_module(const RightModule& x) {
  RightModule d{make_algebra(x.alg->opposite()), x.dim, {}};
  d.action.reserve(x.alg->dim());
  for (const Mat& a : x.action) d.action.push_back(a.transposed());
  return d;
}

// contravariant: f: X -> Y gives D(f): D(Y) -> D(X) with the transposed matrix
inline ModuleHom dual_hom(const ModuleHom& f) {
  return {dual_module(f.target), dual_module(f.source), f.matrix.transposed()};
}

struct DirectSumResult {
  RightModule module;
  std::vector<ModuleHom> inclusions;
  std::vector<ModuleHom> projections;
};

inline DirectSumResult direct_sum_modules(AlgebraPtr alg, const std::vector<RightModule>& parts) {
  const FieldSpec& f = alg->field();
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim;
  RightModule sum{alg, total, {}};
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    Mat a(0, 0, f);
    for (const auto& p : parts) a = direct_sum(a, p.action[i]);
    sum.action.push_back(a);
  }
  DirectSumResult r{sum, {}, {}};
  std::size_t off = 0;
  for (const auto& p : parts) {
    Mat incl(p.dim, total, f), proj(total, p.dim, f);
    for (std::size_t i = 0; i < p.dim; ++i) {
      incl.set(i, off + i, f.one());
      proj.set(off + i, i, f.one());
    }
    r.inclusions.push_back({p, sum, incl});
    r.projections.push_back({sum, p, proj});
    off += p.dim;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Endomorphism algebras and Krull-Schmidt decomposition
// ---------------------------------------------------------------------------

struct EndoAlgebra {
  Algebra alg;  // multiplication g*h := g o h (h applied first)
  std::vector<ModuleHom> basis;
};

inline EndoAlgebra endo_algebra(const RightModule& x) {
  auto basis = hom_basis(x, x);
  const FieldSpec& f = x.alg->field();
  std::size_t d = basis.size();
  if (x.dim > 0 && d == 0) throw std::runtime_error("endo_algebra: identity missing");
  std::vector<Rat> constants(d * d * d, Rat(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      // basis[i] o basis[j]: apply basis[j] first
      ModuleHom prod = compose(basis[j], basis[i]);
      Mat coords = hom_coords(basis, prod);
      for (std::size_t k = 0; k < d; ++k) constants[(i * d + j) * d + k] = coords.at(0, k);
    }
  Mat unit = d == 0 ? Mat(1, 0, f) : hom_coords(basis, identity_hom(x));
  return {Algebra(f, d, std::move(constants), unit), std::move(basis)};
}

struct Summand {
  RightModule module;
  ModuleHom inclusion;  // into the decomposed module
};

struct Decomposition {
  // pairwise non-isomorphic indecomposable representatives with multiplicity
  std::vector<std::pair<RightModule, std::size_t>> summands;
  ModuleHom iso;  // direct sum (reps repeated by multiplicity, in order) -> X
  std::vector<Summand> pieces;  // all indecomposable pieces, grouped in the same order
};

// X ~ Y for indecomposables: some basis element of Hom(X,Y) is invertible.
// (The non-isomorphisms form a proper subspace when X ~ Y, so a basis cannot
// consist of them alone; conversely any invertible hom is an iso.)
inline std::optional<ModuleHom> indec_iso(const RightModule& x, const RightModule& y) {
  if (x.dim != y.dim) return std::nullopt;
  if (x.dim == 0) return ModuleHom{x, y, Mat(0, 0, x.alg->field())};
  for (const auto& h : hom_basis(x, y))
    if (invert(h.matrix)) return h;
  return std::nullopt;
}

inline Decomposition decompose(const RightModule& x) {
  const FieldSpec& f = x.alg->field();
  if (x.dim == 0) return {{}, ModuleHom{zero_module(x.alg), x, Mat(0, 0, f)}, {}};
  EndoAlgebra endo = endo_algebra(x);
  auto prims = primitive_idempotents(endo.alg);
  std::vector<Summand> pieces;
  std::size_t total = 0;
  for (const auto& e : prims) {
    ModuleHom proj = hom_from_coords(endo.basis, e.element, x, x);
    Mat rows = image_basis(proj.matrix);
    auto s = submodule(x, rows);
    total += s.module.dim;
    pieces.push_back({s.module, s.inclusion});
  }
  if (total != x.dim) throw std::runtime_error("decompose: summand dimensions do not add up");

  // group by isomorphism, order groups canonically
  std::vector<std::size_t> group_of(pieces.size(), SIZE_MAX);
  std::vector<std::size_t> group_rep;
  std::vector<std::vector<std::size_t>> group_members;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t g = 0; g < group_rep.size(); ++g)
      if (indec_iso(pieces[group_rep[g]].module, pieces[i].module)) {
        group_of[i] = g;
        group_members[g].push_back(i);
        break;
      }
    if (group_of[i] == SIZE_MAX) {
      group_of[i] = group_rep.size();
      group_rep.push_back(i);
      group_members.push_back({i});
    }
  }
  std::vector<std::size_t> order(group_rep.size());
  for (std::size_t g = 0; g < order.size(); ++g) order[g] = g;
  auto fingerprint = [&](std::size_t g) {
    std::string s;
    for (const Mat& a : pieces[group_rep[g]].module.action) s += a.to_string();
    return s;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    std::size_t da = pieces[group_rep[a]].module.dim, db = pieces[group_rep[b]].module.dim;
    if (da != db) return da < db;
    return fingerprint(a) < fingerprint(b);
  });

  Decomposition dec;
  Mat iso_rows(0, x.dim, f);
  std::vector<Summand> ordered;
  for (std::size_t g : order) {
    const RightModule& rep = pieces[group_rep[g]].module;
    dec.summands.emplace_back(rep, group_members[g].size());
    for (std::size_t idx : group_members[g]) {
      ModuleHom u = idx == group_rep[g]
                        ? identity_hom(rep)
                        : *indec_iso(rep, pieces[idx].module);
      iso_rows = Mat::vstack(iso_rows, u.matrix * pieces[idx].inclusion.matrix);
      ordered.push_back(pieces[idx]);
    }
  }
  std::vector<RightModule> sum_parts;
  for (const auto& [rep, mult] : dec.summands)
    for (std::size_t m = 0; m < mult; ++m) sum_parts.push_back(rep);
  RightModule sum = direct_sum_modules(x.alg, sum_parts).module;
  dec.iso = ModuleHom{sum, x, iso_rows};
  dec.pieces = std::move(ordered);
  if (!invert(dec.iso.matrix)) throw std::runtime_error("decompose: assembled map is not an iso");
  return dec;
}

// General isomorphism test: match Krull-Schmidt decompositions.
inline std::optional<ModuleHom> modules_isomorphic(const RightModule& x, const RightModule& y) {
  if (!same_algebra(x, y) || x.dim != y.dim) return std::nullopt;
  if (x.dim == 0) return ModuleHom{x, y, Mat(0, 0, x.alg->field())};
  Decomposition dx = decompose(x), dy = decompose(y);
  if (dx.pieces.size() != dy.pieces.size()) return std::nullopt;
  std::vector<bool> used(dy.pieces.size(), false);
  // block matrix from the x-direct-sum order to the y-direct-sum order
  Mat blocks(x.dim, y.dim, x.alg->field());
  std::size_t xoff = 0;
  std::vector<std::size_t> yoff(dy.pieces.size(), 0);
  {
    std::size_t off = 0;
    for (std::size_t j = 0; j < dy.pieces.size(); ++j) {
      yoff[j] = off;
      off += dy.pieces[j].module.dim;
    }
  }
  std::vector<std::optional<ModuleHom>> match(dx.pieces.size());
  for (std::size_t i = 0; i < dx.pieces.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < dy.pieces.size(); ++j) {
      if (used[j]) continue;
      auto u = indec_iso(dx.pieces[i].module, dy.pieces[j].module);
      if (u) {
        used[j] = true;
        found = true;
        for (std::size_t r = 0; r < u->matrix.rows(); ++r)
          for (std::size_t c = 0; c < u->matrix.cols(); ++c)
            blocks.set(xoff + r, yoff[j] + c, u->matrix.at(r, c));
        break;
      }
    }
    if (!found) return std::nullopt;
    xoff += dx.pieces[i].module.dim;
  }
  // X -> sum_x -> sum_y -> Y
  auto inv_x = invert(dx.iso.matrix);
  Mat m = *inv_x * blocks * dy.iso.matrix;
  ModuleHom h{x, y, m};
  if (!invert(h.matrix) || !check_hom(h)) throw std::runtime_error("modules_isomorphic: bad iso");
  return h;
}

// ---------------------------------------------------------------------------
// Projectives, injectives, simples
// ---------------------------------------------------------------------------

struct ProjectiveCatalog {
  AlgebraPtr alg;
  Mat radical;                         // rows inside the algebra
  std::vector<Idempotent> prim;
  std::vector<RightModule> projectives;  // P_v = e_v A
  std::vector<Mat> projective_rows;      // basis of e_v A inside the algebra
  std::vector<RightModule> injectives;   // I_v = D(opposite P_v)
  std::vector<RightModule> simples;      // top(P_v)
};

inline ProjectiveCatalog projective_catalog(AlgebraPtr alg) {
  ProjectiveCatalog c;
  c.alg = alg;
  c.radical = radical_basis(*alg);
  c.prim = primitive_idempotents(*alg);
  RightModule reg = regular_module(alg);
  AlgebraPtr op = make_algebra(alg->opposite());
  RightModule reg_op = regular_module(op);
  for (const auto& e : c.prim) {
    Mat rows = image_basis(alg->lmat(e.element));  // e*A = row space of lmat(e)
    c.projectives.push_back(submodule(reg, rows).module);
    c.projective_rows.push_back(rows);
    // opposite projective eA^op = Ae in the original; dualize to the injective
    Mat rows_op = image_basis(op->lmat(e.element));
    RightModule p_op = submodule(reg_op, rows_op).module;
    c.injectives.push_back(rebind_algebra(dual_module(p_op), alg));
    // simple: top of the projective
    const RightModule& p = c.projectives.back();
    Mat pj(0, p.dim, alg->field());
    for (std::size_t r = 0; r < c.radical.rows(); ++r)
      pj = Mat::vstack(pj, act(p, c.radical.row_slice({r})));
    c.simples.push_back(quotient_module(p, pj).module);
  }
  return c;
}

// rows spanning X * rad(A)
inline Mat radical_subspace(const RightModule& x, const Mat& rad_rows) {
  Mat rows(0, x.dim, x.alg->field());
  for (std::size_t r = 0; r < rad_rows.rows(); ++r)
    rows = Mat::vstack(rows, act(x, rad_rows.row_slice({r})));
  return image_basis(rows);
}

// rows spanning soc X = {m : m * rad(A) = 0}
inline Mat socle_subspace(const RightModule& x, const Mat& rad_rows) {
  Mat stacked(x.dim, 0, x.alg->field());
  for (std::size_t r = 0; r < rad_rows.rows(); ++r)
    stacked = Mat::hstack(stacked, act(x, rad_rows.row_slice({r})));
  if (stacked.cols() == 0) return Mat::identity(x.dim, x.alg->field());
  return image_basis(left_kernel_basis(stacked));
}

struct CoverResult {
  RightModule cover;   // projective (resp. injective)
  ModuleHom map;       // cover ->> X (resp. X -> cover)
  std::vector<std::size_t> indices;  // which P_v / I_v, with multiplicity
};

// Minimal projective cover, built top-first: greedily add a hom P_v -> X
// whenever some row of X*e_v is not yet covered modulo X*rad. Minimality
// (ker inside rad of the cover) is certified before returning.
inline CoverResult projective_cover(const RightModule& x, const ProjectiveCatalog& cat) {
  const FieldSpec& f = x.alg->field();
  if (x.dim == 0) return {zero_module(x.alg), ModuleHom{zero_module(x.alg), x, Mat(0, x.dim, f)}, {}};
  Mat xrad = radical_subspace(x, cat.radical);
  Mat covered = xrad;  // rows spanning (chosen images) + X*rad
  std::vector<std::size_t> chosen;
  Mat total_map(0, x.dim, f);
  RightModule cover = zero_module(x.alg);
  std::vector<RightModule> parts;
  for (;;) {
    if (rank(covered) == x.dim) break;
    bool advanced = false;
    for (std::size_t v = 0; v < cat.prim.size() && !advanced; ++v) {
      Mat xe = image_basis(act(x, cat.prim[v].element));
      for (std::size_t r = 0; r < xe.rows(); ++r) {
        Mat cand = xe.row_slice({r});
        if (row_space_contained(cand, covered)) continue;
        // hom P_v -> X: e_v * a |-> cand * a; P_v basis rows are elements of A
        const RightModule& p = cat.projectives[v];
        const Mat& prows = cat.projective_rows[v];
        Mat hom(p.dim, x.dim, f);
        for (std::size_t i = 0; i < p.dim; ++i) {
          Mat img = cand * act(x, prows.row_slice({i}));
          for (std::size_t j = 0; j < x.dim; ++j) hom.set(i, j, img.at(0, j));
        }
        parts.push_back(p);
        chosen.push_back(v);
        total_map = Mat::vstack(total_map, hom);
        covered = image_basis(Mat::vstack(covered, image_basis(hom)));
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::runtime_error("projective_cover: cannot cover the top");
  }
  RightModule sum = direct_sum_modules(x.alg, parts).module;
  ModuleHom pi{sum, x, total_map};
  if (!check_hom(pi)) throw std::runtime_error("projective_cover: assembled map not a hom");
  if (rank(pi.matrix) != x.dim) throw std::runtime_error("projective_cover: not surjective");
  // minimality: kernel inside rad(P)
  Mat ker = left_kernel_basis(pi.matrix);
  if (!row_space_contained(ker, radical_subspace(sum, cat.radical)))
    throw std::runtime_error("projective_cover: kernel escapes the radical (cover not minimal)");
  return {sum, pi, chosen};
}

// Injective hull: dual of the projective cover over the opposite algebra.
inline CoverResult injective_hull(const RightModule& x, const ProjectiveCatalog& cat) {
  if (x.dim == 0)
    return {zero_module(x.alg), ModuleHom{x, zero_module(x.alg), Mat(x.dim, 0, x.alg->field())}, {}};
  AlgebraPtr op = make_algebra(x.alg->opposite());
  RightModule dx = dual_module(x);
  ProjectiveCatalog cat_op = projective_catalog(op);
  CoverResult pc = projective_cover(dx, cat_op);
  RightModule hull = rebind_algebra(dual_module(pc.cover), x.alg);
  // iota = D(pi): D(DX) = X -> D(P)
  ModuleHom iota{x, hull, pc.map.matrix.transposed()};
  if (!check_hom(iota) || rank(iota.matrix) != x.dim)
    throw std::runtime_error("injective_hull: not a mono");
  Mat soc = socle_subspace(hull, cat.radical);
  if (!row_space_contained(soc, image_basis(iota.matrix)))
    throw std::runtime_error("injective_hull: socle escapes the image (hull not minimal)");
  return {hull, iota, pc.indices};
}

struct Presentation {
  ModuleHom d1;     // P1 -> P0
  ModuleHom d0;     // P0 ->> X
  RightModule p1, p0;
};

inline Presentation min_proj_presentation(const RightModule& x, const ProjectiveCatalog& cat) {
  CoverResult c0 = projective_cover(x, cat);
  KernelResult k = kernel(c0.map);
  CoverResult c1 = projective_cover(k.module, cat);
  ModuleHom d1 = compose(c1.map, k.inclusion);
  return {d1, c0.map, c1.cover, c0.cover};
}

// ---------------------------------------------------------------------------
// Syzygies, Ext, transpose, AR translation, stable Homs
// ---------------------------------------------------------------------------

// kernel of the projective cover, not stripped (for resolutions)
inline RightModule syzygy_raw(const RightModule& x, const ProjectiveCatalog& cat) {
  return kernel(projective_cover(x, cat).map).module;
}

inline bool is_in_list(const RightModule& m, const std::vector<RightModule>& list) {
  for (const auto& l : list)
    if (indec_iso(m, l)) return true;
  return false;
}

// strips summands isomorphic to members of `drop` (drop entries indecomposable)
inline RightModule strip_summands(const RightModule& x, const std::vector<RightModule>& drop) {
  if (x.dim == 0) return x;
  Decomposition d = decompose(x);
  std::vector<RightModule> keep;
  for (const auto& piece : d.pieces)
    if (!is_in_list(piece.module, drop)) keep.push_back(piece.module);
  return direct_sum_modules(x.alg, keep).module;
}

// stable syzygy: projective summands split off
inline RightModule syzygy(const RightModule& x, std::size_t m, const ProjectiveCatalog& cat) {
  RightModule cur = strip_summands(x, cat.projectives);
  for (std::size_t s = 0; s < m; ++s)
    cur = strip_summands(syzygy_raw(cur, cat), cat.projectives);
  return cur;
}

inline RightModule cosyzygy_raw(const RightModule& x, const ProjectiveCatalog& cat) {
  return cokernel(injective_hull(x, cat).map).module;
}

inline RightModule cosyzygy(const RightModule& x, std::size_t m, const ProjectiveCatalog& cat) {
  RightModule cur = strip_summands(x, cat.injectives);
  for (std::size_t s = 0; s < m; ++s)
    cur = strip_summands(cosyzygy_raw(cur, cat), cat.injectives);
  return cur;
}

struct ExtResult {
  std::size_t dim = 0;
  std::vector<ModuleHom> cocycles;  // homs P_i -> Y spanning the cocycle space
};

// Minimal projective resolution P_len -> ... -> P_1 -> P_0 ->> X.
struct Resolution {
  std::vector<RightModule> P;
  std::vector<ModuleHom> d;  // d[j-1]: P_j -> P_{j-1}, for j = 1..len
  ModuleHom augmentation;    // P_0 ->> X
};

inline Resolution projective_resolution(const RightModule& x, std::size_t len,
                                        const ProjectiveCatalog& cat) {
  Resolution res;
  CoverResult c0 = projective_cover(x, cat);
  res.P.push_back(c0.cover);
  res.augmentation = c0.map;
  KernelResult k = kernel(c0.map);
  RightModule ker = k.module;      // current kernel
  ModuleHom incl = k.inclusion;    // into the previous cover
  for (std::size_t j = 1; j <= len; ++j) {
    CoverResult cj = projective_cover(ker, cat);
    res.P.push_back(cj.cover);
    res.d.push_back(compose(cj.map, incl));  // P_j ->> ker -> P_{j-1}
    if (j < len) {
      KernelResult kj = kernel(cj.map);
      ker = kj.module;
      incl = kj.inclusion;
    }
  }
  return res;
}

// Ext^i_A(X, Y) from a minimal projective resolution of X.
inline ExtResult ext(const RightModule& x, const RightModule& y, std::size_t i,
                     const ProjectiveCatalog& cat) {
  if (i == 0) {
    auto hb = hom_basis(x, y);
    return {hb.size(), hb};
  }
  const FieldSpec& f = y.alg->field();
  Resolution res = projective_resolution(x, i + 1, cat);
  auto hom_i = hom_basis(res.P[i], y);
  auto hom_im1 = hom_basis(res.P[i - 1], y);
  auto hom_ip1 = hom_basis(res.P[i + 1], y);
  // induced map Hom(P_{j-1}, Y) -> Hom(P_j, Y): h |-> d_j then h
  auto induced = [&](const ModuleHom& dj, const std::vector<ModuleHom>& from,
                     const std::vector<ModuleHom>& to) {
    Mat t(from.size(), to.size(), f);
    for (std::size_t r = 0; r < from.size(); ++r) {
      ModuleHom comp = compose(dj, from[r]);
      if (to.empty()) continue;
      Mat coords = hom_coords(to, comp);
      for (std::size_t c = 0; c < to.size(); ++c) t.set(r, c, coords.at(0, c));
    }
    return t;
  };
  Mat ti = induced(res.d[i - 1], hom_im1, hom_i);    // from Hom(P_{i-1}, Y)
  Mat tip1 = induced(res.d[i], hom_i, hom_ip1);      // into Hom(P_{i+1}, Y)
  Mat coc = kernel_basis(tip1.transposed());         // rows c with c*tip1 = 0
  ExtResult r;
  r.dim = coc.rows() - rank(ti);
  for (std::size_t k = 0; k < coc.rows(); ++k)
    r.cocycles.push_back(hom_from_coords(hom_i, coc.row_slice({k}), res.P[i], y));
  return r;
}

// Hom_A(X, regular) as a right module over the opposite algebra, together
// with the hom basis realizing its coordinates.
struct StarModule {
  RightModule module;               // over opposite(alg of X)
  std::vector<ModuleHom> basis;     // homs X -> regular A
};

inline StarModule star_module(const RightModule& x, AlgebraPtr op) {
  AlgebraPtr alg = x.alg;
  RightModule reg = regular_module(alg);
  auto basis = hom_basis(x, reg);
  const FieldSpec& f = alg->field();
  std::size_t d = basis.size();
  RightModule s{op, d, {}};
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    // phi . b_i^op := L_{b_i} o phi (postcompose with left multiplication)
    Mat a(d, d, f);
    for (std::size_t r = 0; r < d; ++r) {
      Mat img = basis[r].matrix * alg->left_mult(i);
      Mat coords = coords_in_rowbasis(hom_space_rows(basis, x.dim, reg.dim, f), vec_of(img));
      for (std::size_t c = 0; c < d; ++c) a.set(r, c, coords.at(0, c));
    }
    s.action.push_back(a);
  }
  if (!check_module(s)) throw std::runtime_error("star_module: action axioms fail");
  return {s, basis};
}

// induced map star(Y) -> star(X) of f: X -> Y (precomposition)
inline ModuleHom star_hom(const ModuleHom& f, const StarModule& sx, const StarModule& sy) {
  const FieldSpec& fld = f.matrix.field();
  Mat m(sy.module.dim, sx.module.dim, fld);
  Mat chart = hom_space_rows(sx.basis, f.source.dim, f.source.alg->dim(), fld);
  for (std::size_t r = 0; r < sy.basis.size(); ++r) {
    Mat img = f.matrix * sy.basis[r].matrix;  // f then psi
    Mat coords = coords_in_rowbasis(chart, vec_of(img));
    for (std::size_t c = 0; c < sx.basis.size(); ++c) m.set(r, c, coords.at(0, c));
  }
  return {sy.module, sx.module, m};
}

// Tr X = Cok( star(P0) -> star(P1) ) over the opposite algebra.
inline RightModule transpose(const RightModule& x, const ProjectiveCatalog& cat) {
  AlgebraPtr op = make_algebra(x.alg->opposite());
  Presentation pres = min_proj_presentation(x, cat);
  StarModule s0 = star_module(pres.p0, op);
  StarModule s1 = star_module(pres.p1, op);
  ModuleHom dstar = star_hom(pres.d1, s1, s0);  // star(P0) -> star(P1)
  if (!check_hom(dstar)) throw std::runtime_error("transpose: dualized map not a hom");
  return cokernel(dstar).module;
}

// tau = D Tr, tau^- = Tr D; projective (injective) summands die automatically.
inline RightModule ar_translate(const RightModule& x, const ProjectiveCatalog& cat) {
  return rebind_algebra(dual_module(transpose(x, cat)), x.alg);
}

inline RightModule ar_translate_inverse(const RightModule& y, const ProjectiveCatalog& cat) {
  AlgebraPtr op = make_algebra(y.alg->opposite());
  ProjectiveCatalog cat_op = projective_catalog(op);
  RightModule tr = transpose(dual_module(y), cat_op);
  return rebind_algebra(tr, y.alg);
}

struct StableHomResult {
  std::size_t dim = 0;
  std::vector<ModuleHom> coset_reps;
};

// Hom(X, Y) modulo maps factoring through projectives (equivalently through
// the projective cover of Y).
inline StableHomResult stable_hom_proj(const RightModule& x, const RightModule& y,
                                       const ProjectiveCatalog& cat) {
  auto hb = hom_basis(x, y);
  if (hb.empty()) return {0, {}};
  const FieldSpec& f = x.alg->field();
  CoverResult c = projective_cover(y, cat);
  Mat chart = hom_space_rows(hb, x.dim, y.dim, f);
  Mat factor_rows(0, hb.size(), f);
  for (const auto& g : hom_basis(x, c.cover)) {
    ModuleHom comp = compose(g, c.map);
    factor_rows = Mat::vstack(factor_rows, coords_in_rowbasis(chart, vec_of(comp.matrix)));
  }
  RrefResult r = rref(factor_rows);
  std::vector<bool> is_pivot(hb.size(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  StableHomResult out;
  out.dim = hb.size() - r.pivots.size();
  for (std::size_t i = 0; i < hb.size(); ++i)
    if (!is_pivot[i]) out.coset_reps.push_back(hb[i]);
  return out;
}

// Hom(X, Y) modulo maps factoring through injectives (through the hull of X).
inline StableHomResult stable_hom_inj(const RightModule& x, const RightModule& y,
                                      const ProjectiveCatalog& cat) {
  auto hb = hom_basis(x, y);
  if (hb.empty()) return {0, {}};
  const FieldSpec& f = x.alg->field();
  CoverResult c = injective_hull(x, cat);
  Mat chart = hom_space_rows(hb, x.dim, y.dim, f);
  Mat factor_rows(0, hb.size(), f);
  for (const auto& g : hom_basis(c.cover, y)) {
    ModuleHom comp = compose(c.map, g);
    factor_rows = Mat::vstack(factor_rows, coords_in_rowbasis(chart, vec_of(comp.matrix)));
  }
  RrefResult r = rref(factor_rows);
  std::vector<bool> is_pivot(hb.size(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  StableHomResult out;
  out.dim = hb.size() - r.pivots.size();
  for (std::size_t i = 0; i < hb.size(); ++i)
    if (!is_pivot[i]) out.coset_reps.push_back(hb[i]);
  return out;
}

}  // namespace reckon
