// Finite-dimensional associative unital algebras given by structure
// constants, with the structure theory needed for projective covers and
// Krull-Schmidt decompositions: Jacobson radical, complete sets of primitive
// orthogonal idempotents, opposite algebras, corners eAe and quotients A/I.
//
// Elements are coefficient row vectors (1 x dim Mat) in the chosen basis.
// Convention: b_i * b_j = sum_k c[i][j][k] b_k. Left multiplication by b_i is
// the row-vector map with matrix L_i[j][k] = c[i][j][k]; right multiplication
// by b_j has matrix R_j[i][k] = c[i][j][k].
#pragma once

#include "reckon/matrix.hpp"
#include "reckon/poly.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reckon {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
 public:
  // constants: flat c[i*dim*dim + j*dim + k]; unit: 1 x dim row.
  Algebra(FieldSpec field, std::size_t dim, std::vector<Rat> constants, Mat unit,
          std::vector<std::string> labels = {})
      : field_(std::move(field)), dim_(dim), unit_(std::move(unit)), labels_(std::move(labels)) {
    if (constants.size() != dim * dim * dim)
      throw std::invalid_argument("Algebra: structure constant count != dim^3");
    if (unit_.rows() != 1 || unit_.cols() != dim)
      throw std::invalid_argument("Algebra: unit must be a 1 x dim row");
    if (labels_.empty()) {
      labels_.reserve(dim);
      for (std::size_t i = 0; i < dim; ++i) labels_.push_back("b" + std::to_string(i));
    }
    if (labels_.size() != dim) throw std::invalid_argument("Algebra: label count != dim");
    left_.reserve(dim);
    right_.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) left_.push_back(Mat(dim, dim, field_));
    for (std::size_t j = 0; j < dim; ++j) right_.push_back(Mat(dim, dim, field_));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
          const Rat v = field_.norm(constants[(i * dim + j) * dim + k]);
          if (field_.is_zero(v)) continue;
          left_[i].set(j, k, v);
          right_[j].set(i, k, v);
        }
  }

  static Algebra field_algebra(const FieldSpec& f) {
    return Algebra(f, 1, {Rat(1)}, Mat::identity(1, f), {"1"});
  }

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Mat& unit() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Mat& left_mult(std::size_t i) const { return left_[i]; }
  const Mat& right_mult(std::size_t j) const { return right_[j]; }

  Rat constant(std::size_t i, std::size_t j, std::size_t k) const { return left_[i].at(j, k); }

  // matrix of y |-> x*y (row convention)
  Mat lmat(const Mat& x) const {
    Mat m(dim_, dim_, field_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (field_.is_zero(x.at(0, i))) continue;
      m = m + left_[i].scaled(x.at(0, i));
    }
    return m;
  }

  // matrix of y |-> y*x
  Mat rmat(const Mat& x) const {
    Mat m(dim_, dim_, field_);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (field_.is_zero(x.at(0, j))) continue;
      m = m + right_[j].scaled(x.at(0, j));
    }
    return m;
  }

  Mat multiply(const Mat& x, const Mat& y) const { return y * lmat(x); }

  Mat basis_element(std::size_t i) const {
    Mat e(1, dim_, field_);
    e.set(0, i, field_.one());
    return e;
  }

  bool is_associative() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        Mat bij = multiply(basis_element(i), basis_element(j));
        for (std::size_t l = 0; l < dim_; ++l) {
          Mat lhs = multiply(bij, basis_element(l));
          Mat rhs = multiply(basis_element(i), multiply(basis_element(j), basis_element(l)));
          if (lhs != rhs) return false;
        }
      }
    return true;
  }

  bool unit_is_identity() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      Mat b = basis_element(i);
      if (multiply(unit_, b) != b || multiply(b, unit_) != b) return false;
    }
    return true;
  }

  bool is_idempotent(const Mat& e) const { return multiply(e, e) == e; }

  Algebra opposite() const {
    std::vector<Rat> constants(dim_ * dim_ * dim_, Rat(0));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) constants[(i * dim_ + j) * dim_ + k] = constant(j, i, k);
    return Algebra(field_, dim_, std::move(constants), unit_, labels_);
  }

  bool operator==(const Algebra& o) const {
    if (field_ != o.field_ || dim_ != o.dim_ || unit_ != o.unit_) return false;
    for (std::size_t i = 0; i < dim_; ++i)
      if (left_[i] != o.left_[i]) return false;
    return true;
  }
  bool operator!=(const Algebra& o) const { return !(*this == o); }

 private:
  FieldSpec field_;
  std::size_t dim_;
  Mat unit_;
  std::vector<std::string> labels_;
  std::vector<Mat> left_, right_;
};

inline AlgebraPtr make_algebra(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

struct Idempotent {
  Mat element;  // 1 x dim coefficient row
};

// ---------------------------------------------------------------------------
// Subspaces, ideals, corners and quotients
// ---------------------------------------------------------------------------

// Closes the row span of `seed` under left and right multiplication by basis
// elements: the two-sided ideal generated by the rows.
inline Mat two_sided_ideal(const Algebra& A, const Mat& seed) {
  Mat basis = image_basis(seed);
  for (;;) {
    Mat next = basis;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      Mat x = basis.row_slice({r});
      for (std::size_t i = 0; i < A.dim(); ++i) {
        next = Mat::vstack(next, A.multiply(A.basis_element(i), x));
        next = Mat::vstack(next, A.multiply(x, A.basis_element(i)));
      }
    }
    Mat closed = image_basis(next);
    if (closed.rows() == basis.rows()) return closed;
    basis = closed;
  }
}

inline bool is_two_sided_ideal(const Algebra& A, const Mat& rows) {
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    Mat x = rows.row_slice({r});
    for (std::size_t i = 0; i < A.dim(); ++i) {
      if (!row_space_contained(A.multiply(A.basis_element(i), x), rows)) return false;
      if (!row_space_contained(A.multiply(x, A.basis_element(i)), rows)) return false;
    }
  }
  return true;
}

// A unital subalgebra presented by a row basis inside an ambient algebra,
// with its own structure constants. Used for corners eAe and End-images.
struct SubAlgebraResult {
  Algebra alg;        // intrinsic algebra on the subspace basis
  Mat basis;          // rows: subspace basis in ambient coordinates
  Mat unit_ambient;   // the subalgebra's unit in ambient coordinates
};

// eAe with unit e; requires e idempotent.
inline SubAlgebraResult corner_algebra(const Algebra& A, const Mat& e,
                                       const std::vector<std::string>& labels = {}) {
  if (!A.is_idempotent(e)) throw std::invalid_argument("corner_algebra: e is not idempotent");
  // x |-> e*x*e: first x*e (rmat), then e*(x*e) (lmat); row maps compose left to right
  Mat proj = A.rmat(e) * A.lmat(e);
  Mat basis = image_basis(proj);
  std::size_t d = basis.rows();
  std::vector<Rat> constants(d * d * d, Rat(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Mat prod = A.multiply(basis.row_slice({i}), basis.row_slice({j}));
      Mat coords = coords_in_rowbasis(basis, prod);
      for (std::size_t k = 0; k < d; ++k) constants[(i * d + j) * d + k] = coords.at(0, k);
    }
  Mat unit_coords = coords_in_rowbasis(basis, e);
  std::vector<std::string> lab = labels;
  if (lab.empty())
    for (std::size_t i = 0; i < d; ++i) lab.push_back("c" + std::to_string(i));
  return {Algebra(A.field(), d, std::move(constants), unit_coords, lab), basis, e};
}

struct QuotientAlgebraResult {
  Algebra alg;
  Mat projection;   // dim(A) x dim(Q), row conv: x |-> x*projection
  Mat section;      // dim(Q) x dim(A), representatives
  Mat ideal_basis;  // canonical basis of the ideal
};

// A / I for a two-sided ideal I (verified). Representatives are the standard
// basis vectors at the non-pivot columns of the ideal's rref.
inline QuotientAlgebraResult quotient_algebra(const Algebra& A, const Mat& ideal_rows,
                                              const std::vector<std::string>& labels = {}) {
  Mat ideal = image_basis(ideal_rows);
  if (!is_two_sided_ideal(A, ideal))
    throw std::invalid_argument("quotient_algebra: subspace is not a two-sided ideal");
  const FieldSpec& f = A.field();
  std::size_t n = A.dim();
  RrefResult r = rref(ideal);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  std::size_t d = free_cols.size();
  // projection: reduce e_j modulo the ideal, keep free coordinates
  Mat projection(n, d, f);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> v(n, Rat(0));
    v[j] = f.one();
    // subtract ideal rows to clear pivot positions
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      Rat coef = v[r.pivots[i]];
      if (f.is_zero(coef)) continue;
      for (std::size_t k = 0; k < n; ++k) v[k] = f.sub(v[k], f.mul(coef, r.mat.at(i, k)));
    }
    for (std::size_t q = 0; q < d; ++q) projection.set(j, q, v[free_cols[q]]);
  }
  Mat section(d, n, f);
  for (std::size_t q = 0; q < d; ++q) section.set(q, free_cols[q], f.one());
  std::vector<Rat> constants(d * d * d, Rat(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Mat prod = A.multiply(section.row_slice({i}), section.row_slice({j})) * projection;
      for (std::size_t k = 0; k < d; ++k) constants[(i * d + j) * d + k] = prod.at(0, k);
    }
  Mat unit_q = A.unit() * projection;
  std::vector<std::string> lab = labels;
  if (lab.empty())
    for (std::size_t q = 0; q < d; ++q) lab.push_back(A.labels()[free_cols[q]] + "~");
  Algebra Q(A.field(), d, std::move(constants), unit_q, lab);
  if (!Q.is_associative() || !Q.unit_is_identity())
    throw std::runtime_error("quotient_algebra: quotient multiplication ill-defined");
  return {std::move(Q), std::move(projection), std::move(section), std::move(ideal)};
}

// ---------------------------------------------------------------------------
// Radical and primitive idempotents
// ---------------------------------------------------------------------------

inline void require_radical_field(const Algebra& A, const char* who) {
  if (!A.field().is_rationals() && A.field().characteristic() <= A.dim())
    throw std::domain_error(std::string(who) +
                            ": unsupported field; needs Q or GF(p) with p > dim = " +
                            std::to_string(A.dim()));
}

// Jacobson radical as the kernel of the trace form (x,y) |-> tr(L_x L_y) of
// the left regular representation. Valid over Q, and over GF(p) when p > dim;
// the precondition is enforced. Nilpotency and semisimplicity of the quotient
// are re-verified before returning.
inline Mat radical_basis(const Algebra& A, bool verify = true) {
  require_radical_field(A, "radical");
  const FieldSpec& f = A.field();
  std::size_t n = A.dim();
  Mat gram(n, n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram.set(i, j, (A.left_mult(i) * A.left_mult(j)).trace());
  Mat rad = image_basis(kernel_basis(gram));
  if (verify) {
    if (!is_two_sided_ideal(A, rad)) throw std::runtime_error("radical: kernel is not an ideal");
    // nilpotency within dim steps
    Mat power = rad;
    std::size_t steps = 0;
    while (power.rows() > 0) {
      if (++steps > n) throw std::runtime_error("radical: ideal power did not reach zero");
      Mat next(0, 0, f);
      for (std::size_t r = 0; r < power.rows(); ++r)
        for (std::size_t s = 0; s < rad.rows(); ++s)
          next = Mat::vstack(next, A.multiply(power.row_slice({r}), rad.row_slice({s})));
      power = next.rows() ? image_basis(next) : Mat(0, n, f);
    }
    if (rad.rows() > 0) {
      auto q = quotient_algebra(A, rad);
      if (radical_basis(q.alg, false).rows() != 0)
        throw std::runtime_error("radical: quotient is not semisimple");
    }
  }
  return rad;
}

// Minimal polynomial of x in A (via the faithful left regular representation).
inline Poly minimal_polynomial(const Algebra& A, const Mat& x) {
  const FieldSpec& f = A.field();
  std::size_t n = A.dim();
  Mat powers = A.unit();
  Mat cur = A.unit();
  for (std::size_t k = 1; k <= n; ++k) {
    cur = A.multiply(cur, x);
    Mat stacked = Mat::vstack(powers, cur);
    if (rank(stacked) < stacked.rows()) {
      // cur = combination of lower powers: solve c * powers = cur
      auto c = solve_left(powers, cur);
      if (!c) throw std::runtime_error("minimal_polynomial: inconsistent power dependence");
      Poly p(f);
      p.c.assign(k + 1, Rat(0));
      for (std::size_t i = 0; i < k; ++i) p.c[i] = f.neg(c->at(0, i));
      p.c[k] = f.one();
      return p;
    }
    powers = stacked;
  }
  throw std::runtime_error("minimal_polynomial: no dependence found (dim overflow)");
}

// Evaluate a polynomial at an algebra element.
inline Mat poly_eval_in_algebra(const Algebra& A, const Poly& p, const Mat& x) {
  Mat acc(1, A.dim(), A.field());
  for (std::size_t i = p.c.size(); i-- > 0;) {
    acc = A.multiply(acc, x);
    acc = acc + A.unit().scaled(p.c[i]);
  }
  return acc;
}

namespace detail {

// Tries to produce a nontrivial idempotent of the (unital) algebra C from the
// element z: if the minimal polynomial has a root lambda in k with
// mu = (t-lambda)^e * g, gcd = 1, the CRT element v(z)g(z) is an exact
// idempotent. Returns nullopt when no root-based split exists.
inline std::optional<Mat> split_from_element(const Algebra& C, const Mat& z) {
  const FieldSpec& f = C.field();
  Poly mu = minimal_polynomial(C, z);
  auto roots = field_roots(mu);
  // descending, so an idempotent seed peels off its own support first and
  // block order follows basis order
  std::reverse(roots.begin(), roots.end());
  for (const Rat& lambda : roots) {
    // peel (t - lambda)^e
    Poly lin(f, {f.neg(lambda), f.one()});
    Poly fpart(f, {f.one()});
    Poly g = mu;
    for (;;) {
      auto [q, r] = poly_divmod(g, lin);
      if (!r.is_zero()) break;
      fpart = poly_mul(fpart, lin);
      g = q;
    }
    if (g.degree() == 0 && g.c.size() <= 1) continue;  // mu = (t-lambda)^e: no split
    if (g.is_zero()) continue;
    auto x = poly_xgcd(fpart, g);
    if (x.g.degree() != 0) continue;  // not coprime (cannot happen for root split)
    // epsilon = v*g(z) with u*f + v*g = 1: epsilon = 1 mod f-part, 0 mod g
    Poly vg = poly_mul(x.v, g);
    Mat eps = poly_eval_in_algebra(C, vg, z);
    if (!C.is_idempotent(eps)) continue;
    if (eps.is_zero() || eps == C.unit()) continue;
    return eps;
  }
  return std::nullopt;
}

// deterministic seeds: basis elements, then pairwise sums
inline std::vector<Mat> split_seeds(const Algebra& C) {
  std::vector<Mat> seeds;
  for (std::size_t i = 0; i < C.dim(); ++i) seeds.push_back(C.basis_element(i));
  for (std::size_t i = 0; i < C.dim(); ++i)
    for (std::size_t j = i + 1; j < C.dim(); ++j)
      seeds.push_back(C.basis_element(i) + C.basis_element(j));
  return seeds;
}

inline bool is_certified_local(const Algebra& C) {
  Mat rad = radical_basis(C, false);
  return rad.rows() + 1 == C.dim();
}

// Recursive peeling, everything expressed in the ambient algebra A.
inline void primitive_idempotents_rec(const Algebra& A, const Mat& e,
                                      std::vector<Mat>& out) {
  SubAlgebraResult corner = corner_algebra(A, e);
  const Algebra& C = corner.alg;
  if (C.dim() == 0) return;
  if (C.dim() == 1) {
    out.push_back(e);
    return;
  }
  for (const Mat& seed : split_seeds(C)) {
    auto eps_c = split_from_element(C, seed);
    if (!eps_c) continue;
    Mat eps = *eps_c * corner.basis;  // back to ambient coordinates
    Mat rest = e - eps;
    primitive_idempotents_rec(A, eps, out);
    primitive_idempotents_rec(A, rest, out);
    return;
  }
  if (is_certified_local(C)) {
    out.push_back(e);
    return;
  }
  throw std::runtime_error(
      "primitive_idempotents: cannot split a non-local corner (possibly a division-algebra "
      "component); try a different coefficient field");
}

}  // namespace detail

// Complete set of pairwise orthogonal primitive idempotents summing to 1.
// Deterministic: seeds are tried in basis order, then pair sums.
inline std::vector<Idempotent> primitive_idempotents(const Algebra& A) {
  require_radical_field(A, "primitive_idempotents");
  std::vector<Mat> parts;
  detail::primitive_idempotents_rec(A, A.unit(), parts);
  // certify: orthogonality and sum
  Mat sum(1, A.dim(), A.field());
  for (const auto& p : parts) sum = sum + p;
  if (sum != A.unit()) throw std::runtime_error("primitive_idempotents: parts do not sum to 1");
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      Mat prod = A.multiply(parts[i], parts[j]);
      if (i == j ? prod != parts[i] : !prod.is_zero())
        throw std::runtime_error("primitive_idempotents: orthogonality failure");
    }
  std::vector<Idempotent> result;
  result.reserve(parts.size());
  for (auto& p : parts) result.push_back({std::move(p)});
  return result;
}

}  // namespace reckon
