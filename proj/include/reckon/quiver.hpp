// Path algebras of quivers modulo relation ideals, built degree by degree.
//
// Relations must be linear combinations of parallel paths of a common length
// >= 2 (admissible, length-homogeneous). The ideal is then graded by path
// length, so truncating at max_path_length is exact: construction stops at
// the first length where every path dies, and that certifies the quotient is
// the full finite-dimensional algebra. If residue paths survive at the bound,
// construction fails naming the offending length.
#pragma once

#include "reckon/algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace reckon {

struct QuiverArrow {
  std::string name;
  std::size_t source, target;  // vertex indices
};

struct QuiverRelation {
  // each term: coefficient and a path given as a sequence of arrow indices
  std::vector<std::pair<Rat, std::vector<std::size_t>>> terms;
};

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<QuiverRelation> relations;
  std::size_t max_path_length = 12;
};

namespace detail {

struct QPath {
  std::size_t source, target;
  std::vector<std::size_t> arrows;  // empty = trivial path at source==target
};

// Paths are keyed by (source, arrow list): the arrow list alone cannot
// distinguish trivial paths at different vertices.
inline std::vector<std::size_t> path_key(const QPath& p) {
  std::vector<std::size_t> k;
  k.reserve(p.arrows.size() + 1);
  k.push_back(p.source);
  k.insert(k.end(), p.arrows.begin(), p.arrows.end());
  return k;
}

inline std::vector<std::size_t> word_key(std::size_t source, const std::vector<std::size_t>& word) {
  std::vector<std::size_t> k;
  k.reserve(word.size() + 1);
  k.push_back(source);
  k.insert(k.end(), word.begin(), word.end());
  return k;
}

inline std::string path_label(const QuiverPresentation& q, const QPath& p) {
  if (p.arrows.empty()) return "e_" + q.vertices[p.source];
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

// One graded level: all paths of that length, the rref of the ideal's degree
// piece, and for every path its expansion in residue paths of this level.
struct QLevel {
  std::vector<QPath> paths;
  std::map<std::vector<std::size_t>, std::size_t> index;
  RrefResult ideal;
  std::vector<std::size_t> residue_cols;  // non-pivot columns, ascending
};

}  // namespace detail

// Validates the presentation; raises std::invalid_argument on bad input.
inline void validate_quiver(const QuiverPresentation& q) {
  if (q.vertices.empty()) throw std::invalid_argument("quiver: needs at least one vertex");
  for (const auto& a : q.arrows)
    if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
      throw std::invalid_argument("quiver: arrow '" + a.name + "' has an unknown endpoint");
  for (const auto& rel : q.relations) {
    if (rel.terms.empty()) throw std::invalid_argument("quiver: empty relation");
    std::size_t len = rel.terms.front().second.size();
    std::size_t src = 0, tgt = 0;
    bool first = true;
    for (const auto& [coef, path] : rel.terms) {
      (void)coef;
      if (path.size() < 2)
        throw std::invalid_argument("quiver: relation paths must have length >= 2");
      if (path.size() != len)
        throw std::invalid_argument(
            "quiver: relation terms must all have the same path length (length-homogeneous "
            "relations only)");
      for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= q.arrows.size())
          throw std::invalid_argument("quiver: relation uses an unknown arrow");
        if (i > 0 && q.arrows[path[i - 1]].target != q.arrows[path[i]].source)
          throw std::invalid_argument("quiver: relation path is not composable");
      }
      std::size_t s = q.arrows[path.front()].source;
      std::size_t t = q.arrows[path.back()].target;
      if (first) {
        src = s;
        tgt = t;
        first = false;
      } else if (s != src || t != tgt) {
        throw std::invalid_argument("quiver: relation terms must be parallel paths");
      }
    }
  }
}

// Path algebra modulo the relation ideal. Basis: residue paths below the
// first residue-free length; unit: sum of trivial paths. Paths compose left
// to right (p*q = "p then q"), matching right-module conventions.
inline Algebra from_quiver(const QuiverPresentation& q, const FieldSpec& f) {
  using detail::QLevel;
  using detail::QPath;
  validate_quiver(q);

  std::vector<QLevel> levels;
  {
    QLevel l0;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) l0.paths.push_back({v, v, {}});
    for (std::size_t i = 0; i < l0.paths.size(); ++i) {
      l0.index[detail::path_key(l0.paths[i])] = i;
      l0.residue_cols.push_back(i);
    }
    l0.ideal = rref(Mat(0, l0.paths.size(), f));
    levels.push_back(std::move(l0));
  }

  std::size_t stop_len = 0;
  bool closed = false;
  for (std::size_t len = 1; len <= q.max_path_length; ++len) {
    QLevel lv;
    for (const QPath& p : levels[len - 1].paths)
      for (std::size_t ai = 0; ai < q.arrows.size(); ++ai)
        if (q.arrows[ai].source == p.target) {
          QPath np = p;
          np.arrows.push_back(ai);
          np.target = q.arrows[ai].target;
          lv.paths.push_back(np);
        }
    if (lv.paths.empty()) {
      stop_len = len;
      closed = true;
      break;
    }
    for (std::size_t i = 0; i < lv.paths.size(); ++i) lv.index[detail::path_key(lv.paths[i])] = i;
    // ideal degree piece: all p * r * s with |p| + |r| + |s| = len
    std::vector<std::vector<Rat>> ideal_rows;
    for (const auto& rel : q.relations) {
      std::size_t rlen = rel.terms.front().second.size();
      if (rlen > len) continue;
      std::size_t rsrc = q.arrows[rel.terms.front().second.front()].source;
      std::size_t rtgt = q.arrows[rel.terms.front().second.back()].target;
      for (std::size_t llen = 0; llen + rlen <= len; ++llen) {
        std::size_t tlen = len - rlen - llen;
        for (const QPath& lp : levels[llen].paths) {
          if (lp.target != rsrc) continue;
          for (const QPath& rp : levels[tlen].paths) {
            if (rp.source != rtgt) continue;
            std::vector<Rat> row(lv.paths.size(), Rat(0));
            for (const auto& [coef, mid] : rel.terms) {
              std::vector<std::size_t> word = lp.arrows;
              word.insert(word.end(), mid.begin(), mid.end());
              word.insert(word.end(), rp.arrows.begin(), rp.arrows.end());
              std::size_t col = lv.index.at(detail::word_key(lp.source, word));
              row[col] = f.add(row[col], f.norm(coef));
            }
            ideal_rows.push_back(std::move(row));
          }
        }
      }
    }
    lv.ideal = rref(Mat::from_rows(ideal_rows, lv.paths.size(), f));
    std::vector<bool> dead(lv.paths.size(), false);
    for (std::size_t p : lv.ideal.pivots) dead[p] = true;
    for (std::size_t i = 0; i < lv.paths.size(); ++i)
      if (!dead[i]) lv.residue_cols.push_back(i);
    bool empty_level = lv.residue_cols.empty();
    levels.push_back(std::move(lv));
    if (empty_level) {
      stop_len = len;
      closed = true;
      break;
    }
  }
  if (!closed)
    throw std::runtime_error(
        "from_quiver: residue paths still appear at length " + std::to_string(q.max_path_length) +
        "; algebra is not finite-dimensional within the bound (raise max_path_length if it is)");

  // global residue basis, ordered by (length, generation order)
  std::vector<QPath> basis;
  std::vector<std::vector<std::size_t>> level_to_basis(levels.size());
  for (std::size_t len = 0; len < levels.size() && len < stop_len; ++len) {
    level_to_basis[len].assign(levels[len].paths.size(), SIZE_MAX);
    for (std::size_t col : levels[len].residue_cols) {
      level_to_basis[len][col] = basis.size();
      basis.push_back(levels[len].paths[col]);
    }
  }
  std::size_t dim = basis.size();

  // class of a single path in residue coordinates
  auto reduce_path = [&](const QPath& p, std::vector<Rat>& out) {
    std::size_t len = p.arrows.size();
    if (len >= stop_len) return;
    const QLevel& lv = levels[len];
    std::vector<Rat> v(lv.paths.size(), Rat(0));
    v[lv.index.at(detail::path_key(p))] = f.one();
    for (std::size_t i = 0; i < lv.ideal.pivots.size(); ++i) {
      Rat coef = v[lv.ideal.pivots[i]];
      if (f.is_zero(coef)) continue;
      for (std::size_t k = 0; k < lv.paths.size(); ++k)
        v[k] = f.sub(v[k], f.mul(coef, lv.ideal.mat.at(i, k)));
    }
    for (std::size_t col : lv.residue_cols)
      if (!f.is_zero(v[col])) out[level_to_basis[len][col]] = f.add(out[level_to_basis[len][col]], v[col]);
  };

  std::vector<Rat> constants(dim * dim * dim, Rat(0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const QPath& p = basis[i];
      const QPath& r = basis[j];
      if (p.target != r.source) continue;
      QPath prod{p.source, r.target, p.arrows};
      prod.arrows.insert(prod.arrows.end(), r.arrows.begin(), r.arrows.end());
      std::vector<Rat> out(dim, Rat(0));
      reduce_path(prod, out);
      for (std::size_t k = 0; k < dim; ++k) constants[(i * dim + j) * dim + k] = out[k];
    }
  Mat unit(1, dim, f);
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < dim; ++b) {
    if (basis[b].arrows.empty()) unit.set(0, b, f.one());
    labels.push_back(detail::path_label(q, basis[b]));
  }
  Algebra A(f, dim, std::move(constants), unit, labels);
  if (!A.is_associative() || !A.unit_is_identity())
    throw std::runtime_error("from_quiver: constructed constants fail algebra axioms");
  return A;
}

}  // namespace reckon
