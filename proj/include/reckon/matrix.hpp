// Exact dense matrices over a FieldSpec, with the row-reduction toolkit the
// whole engine is built on: rref, rank, kernels, solving, Kronecker products.
//
// Matrices are immutable values by convention: every operation returns a
// fresh matrix, so concurrent readers need no synchronization. Row-vector
// convention throughout: linear maps act on the right, x |-> x*M.
#pragma once

#include "reckon/field.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace reckon {

class Mat {
 public:
  Mat() : rows_(0), cols_(0), field_(FieldSpec::rationals()) {}

  Mat(std::size_t rows, std::size_t cols, FieldSpec field)
      : rows_(rows), cols_(cols), field_(std::move(field)), entries_(rows * cols, Rat(0)) {}

  static Mat zero(std::size_t rows, std::size_t cols, const FieldSpec& f) {
    return Mat(rows, cols, f);
  }

  static Mat identity(std::size_t n, const FieldSpec& f) {
    Mat m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, f.one());
    return m;
  }

  static Mat from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols,
                       const FieldSpec& f) {
    Mat m(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("Mat::from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m.set(i, j, f.norm(rows[i][j]));
    }
    return m;
  }

  // 1 x n row vector.
  static Mat row(const std::vector<Rat>& v, const FieldSpec& f) {
    return from_rows({v}, v.size(), f);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Rat& v) { entries_[i * cols_ + j] = field_.norm(v); }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && entries_ == o.entries_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (numerator(e) != 0) return false;
    return true;
  }

  Mat transposed() const {
    Mat t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = at(i, j);
    return t;
  }

  Mat operator+(const Mat& o) const {
    check_same_shape(o, "+");
    Mat r(rows_, cols_, field_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      r.entries_[k] = field_.add(entries_[k], o.entries_[k]);
    return r;
  }

  Mat operator-(const Mat& o) const {
    check_same_shape(o, "-");
    Mat r(rows_, cols_, field_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      r.entries_[k] = field_.sub(entries_[k], o.entries_[k]);
    return r;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_ || field_ != o.field_)
      throw std::invalid_argument("Mat::*: shape or field mismatch");
    Mat r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = at(i, k);
        if (numerator(a) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.entries_[i * o.cols_ + j] =
              field_.add(r.entries_[i * o.cols_ + j], field_.mul(a, o.at(k, j)));
      }
    return r;
  }

  Mat scaled(const Rat& c) const {
    Mat r(rows_, cols_, field_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = field_.mul(entries_[k], c);
    return r;
  }

  Mat negated() const {
    Mat r(rows_, cols_, field_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = field_.neg(entries_[k]);
    return r;
  }

  Rat trace() const {
    Rat t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = field_.add(t, at(i, i));
    return t;
  }

  std::vector<Rat> row_vec(std::size_t i) const {
    return std::vector<Rat>(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
  }

  Mat row_slice(const std::vector<std::size_t>& idx) const {
    Mat r(idx.size(), cols_, field_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(idx[i], j));
    return r;
  }

  static Mat vstack(const Mat& a, const Mat& b) {
    if (a.rows_ == 0 && a.cols_ == 0) return b;
    if (b.rows_ == 0 && b.cols_ == 0) return a;
    if (a.cols_ != b.cols_ || a.field_ != b.field_)
      throw std::invalid_argument("Mat::vstack: mismatch");
    Mat r(a.rows_ + b.rows_, a.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) r.set(a.rows_ + i, j, b.at(i, j));
    return r;
  }

  static Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows_ == 0 && a.cols_ == 0) return b;
    if (b.rows_ == 0 && b.cols_ == 0) return a;
    if (a.rows_ != b.rows_ || a.field_ != b.field_)
      throw std::invalid_argument("Mat::hstack: mismatch");
    Mat r(a.rows_, a.cols_ + b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
      for (std::size_t j = 0; j < b.cols_; ++j) r.set(i, a.cols_ + j, b.at(i, j));
    }
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) os << "; ";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) os << " ";
        os << scalar_to_string(at(i, j));
      }
    }
    os << "]";
    return os.str();
  }

 private:
  void check_same_shape(const Mat& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
      throw std::invalid_argument(std::string("Mat::") + op + ": shape or field mismatch");
  }

  std::size_t rows_, cols_;
  FieldSpec field_;
  std::vector<Rat> entries_;
};

struct RrefResult {
  Mat mat;
  std::vector<std::size_t> pivots;  // strictly increasing pivot column indices
};

// Reduced row echelon form. Row space is preserved; the result is canonical,
// so equal row spaces yield identical rref matrices.
inline RrefResult rref(const Mat& m) {
  const FieldSpec& f = m.field();
  std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Rat>> a(nr);
  for (std::size_t i = 0; i < nr; ++i) a[i] = m.row_vec(i);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t sel = nr;
    for (std::size_t i = r; i < nr; ++i)
      if (numerator(a[i][c]) != 0) {
        sel = i;
        break;
      }
    if (sel == nr) continue;
    std::swap(a[r], a[sel]);
    Rat piv_inv = f.inv(a[r][c]);
    for (std::size_t j = c; j < nc; ++j) a[r][j] = f.mul(a[r][j], piv_inv);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || numerator(a[i][c]) == 0) continue;
      Rat factor = a[i][c];
      for (std::size_t j = c; j < nc; ++j)
        a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return {Mat::from_rows(a, nc, f), pivots};
}

inline std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

// Basis of the row space: the nonzero rows of the rref (canonical).
inline Mat image_basis(const Mat& m) {
  RrefResult r = rref(m);
  std::vector<std::size_t> idx(r.pivots.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return r.mat.row_slice(idx);
}

// Rows v with m * v^T = 0; row count = cols(m) - rank(m).
inline Mat kernel_basis(const Mat& m) {
  const FieldSpec& f = m.field();
  RrefResult r = rref(m);
  std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> rows;
  for (std::size_t free_c = 0; free_c < nc; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Rat> v(nc, Rat(0));
    v[free_c] = f.one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = f.neg(r.mat.at(i, free_c));
    rows.push_back(std::move(v));
  }
  return Mat::from_rows(rows, nc, f);
}

// Rows v with v * m = 0.
inline Mat left_kernel_basis(const Mat& m) { return kernel_basis(m.transposed()); }

// Some X with A*X = b, or nullopt if the system is inconsistent.
inline std::optional<Mat> solve(const Mat& A, const Mat& b) {
  if (A.rows() != b.rows() || A.field() != b.field())
    throw std::invalid_argument("solve: shape or field mismatch");
  const FieldSpec& f = A.field();
  RrefResult r = rref(Mat::hstack(A, b));
  for (std::size_t p : r.pivots)
    if (p >= A.cols()) return std::nullopt;
  Mat X(A.cols(), b.cols(), f);
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) X.set(r.pivots[i], j, r.mat.at(i, A.cols() + j));
  return X;
}

// Some X with X*A = b, or nullopt.
inline std::optional<Mat> solve_left(const Mat& A, const Mat& b) {
  auto t = solve(A.transposed(), b.transposed());
  if (!t) return std::nullopt;
  return t->transposed();
}

inline std::optional<Mat> invert(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto X = solve(m, Mat::identity(m.rows(), m.field()));
  if (!X) return std::nullopt;
  // consistency of the augmented system plus squareness gives a two-sided
  // inverse only when the rank is full; check it
  if ((*X * m) != Mat::identity(m.rows(), m.field())) return std::nullopt;
  return X;
}

inline Mat direct_sum(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw std::invalid_argument("direct_sum: field mismatch");
  Mat r(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.set(a.rows() + i, a.cols() + j, b.at(i, j));
  return r;
}

// Kronecker product: (a kron b)[(i,k),(j,l)] = a[i][j] b[k][l], indexing
// (i,k) |-> i*rows(b)+k. This is the tensor product of linear maps in the
// row-vector convention with basis u_i (x) v_k ordered the same way.
inline Mat kron(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw std::invalid_argument("kron: field mismatch");
  const FieldSpec& f = a.field();
  Mat r(a.rows() * b.rows(), a.cols() * b.cols(), f);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rat& aij = a.at(i, j);
      if (numerator(aij) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r.set(i * b.rows() + k, j * b.cols() + l, f.mul(aij, b.at(k, l)));
    }
  return r;
}

// Coordinates of each row of `vectors` in the row basis `basis` (rows must be
// independent): returns C with C * basis = vectors.
inline Mat coords_in_rowbasis(const Mat& basis, const Mat& vectors) {
  if (basis.rows() == 0) {
    if (!vectors.is_zero()) throw std::runtime_error("coords_in_rowbasis: not in span");
    return Mat(vectors.rows(), 0, vectors.field());
  }
  auto c = solve_left(basis, vectors);
  if (!c) throw std::runtime_error("coords_in_rowbasis: not in span");
  return *c;
}

// Do two row spaces coincide? (canonical rref comparison)
inline bool same_row_space(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols() || a.field() != b.field()) return false;
  return image_basis(a) == image_basis(b);
}

// Is every row of a in the row space of b?
inline bool row_space_contained(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return true;
  return rank(Mat::vstack(a, b)) == rank(b);
}

}  // namespace reckon
