// Declarative instance files: a line-oriented format with named sections
// declaring the field, an algebra (quiver or explicit structure constants),
// optional modules, a subcategory, idempotent blocks and task parameters.
//
//   field rationals            | field gf 5
//   quiver ... end             | algebra explicit ... end
//   module M ... end           (representation data over a quiver algebra)
//   subcategory P1 P2 S3 S1    | subcategory all
//   idempotent P1 P2
//   n 2
//   universe bound 50
//
// Matrices are rows of integers or rationals a/b separated by ';'.
#pragma once

#include "reckon/quiver.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace reckon {

struct ParsedModule {
  std::string name;
  // representation data: dimension per vertex, one matrix per arrow
  std::vector<std::size_t> vertex_dims;
  std::map<std::string, Mat> arrow_mats;  // parsed over the instance field
};

struct ExplicitAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Rat> unit;
  // mult i j = coefficient row
  std::vector<std::tuple<std::size_t, std::size_t, std::vector<Rat>>> products;
};

struct InstanceFile {
  FieldSpec field = FieldSpec::rationals();
  std::optional<QuiverPresentation> quiver;
  std::optional<ExplicitAlgebra> explicit_algebra;
  std::vector<ParsedModule> modules;
  std::vector<std::string> subcategory;  // empty = not declared; {"all"} allowed
  std::vector<std::string> idempotent_blocks;
  std::size_t n = 1;
  std::size_t universe_bound = 0;            // 0 = default knitting bound
  std::vector<std::string> universe_names;   // nonempty = user-supplied indecomposables
  std::string path;
};

namespace detail {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] inline void fail(const std::string& path, std::size_t lineno, const std::string& msg) {
  throw ParseError(path + ":" + std::to_string(lineno) + ": " + msg);
}

inline Rat parse_entry(const FieldSpec& f, const std::string& s, const std::string& path,
                       std::size_t lineno) {
  try {
    return parse_scalar(f, s);
  } catch (const std::exception&) {
    fail(path, lineno, "bad matrix entry '" + s + "'");
  }
}

// rows separated by ';', entries by spaces
inline Mat parse_matrix(const FieldSpec& f, const std::vector<std::string>& toks,
                        std::size_t rows, std::size_t cols, const std::string& path,
                        std::size_t lineno) {
  std::vector<std::vector<Rat>> data(1);
  for (const auto& t : toks) {
    if (t == ";") {
      data.emplace_back();
    } else {
      data.back().push_back(parse_entry(f, t, path, lineno));
    }
  }
  if (rows == 0 && data.size() == 1 && data[0].empty()) return Mat(0, cols, f);
  if (data.size() != rows) fail(path, lineno, "expected " + std::to_string(rows) + " matrix rows");
  for (auto& r : data)
    if (r.size() != cols) fail(path, lineno, "expected " + std::to_string(cols) + " columns");
  return Mat::from_rows(data, cols, f);
}

}  // namespace detail

inline InstanceFile parse_instance(const std::string& path,
                                   std::optional<FieldSpec> field_override = std::nullopt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("parse_instance: cannot open '" + path + "'");
  InstanceFile inst;
  inst.path = path;
  bool field_seen = false;
  if (field_override) {
    inst.field = *field_override;
    field_seen = true;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);

  // vertex/arrow name tables for the quiver
  std::map<std::string, std::size_t> vertex_index, arrow_index;

  auto parse_path_word = [&](const std::string& word, std::size_t lineno) {
    std::vector<std::size_t> arrows;
    std::string cur;
    std::istringstream is(word);
    while (std::getline(is, cur, '*')) {
      auto it = arrow_index.find(cur);
      if (it == arrow_index.end()) detail::fail(path, lineno, "unknown arrow '" + cur + "'");
      arrows.push_back(it->second);
    }
    return arrows;
  };

  std::size_t i = 0;
  while (i < lines.size()) {
    std::size_t lineno = i + 1;
    auto toks = detail::tokens_of(detail::strip_comment(lines[i]));
    ++i;
    if (toks.empty()) continue;
    const std::string& head = toks[0];

    if (head == "field") {
      if (field_override) continue;  // command-line override wins
      if (toks.size() == 2 && (toks[1] == "rationals" || toks[1] == "Q")) {
        inst.field = FieldSpec::rationals();
      } else if (toks.size() == 3 && toks[1] == "gf") {
        std::uint32_t p = 0;
        try {
          p = static_cast<std::uint32_t>(std::stoul(toks[2]));
          inst.field = FieldSpec::gf(p);
        } catch (const std::exception& e) {
          detail::fail(path, lineno, std::string("bad prime field: ") + e.what());
        }
      } else {
        detail::fail(path, lineno, "expected 'field rationals' or 'field gf <p>'");
      }
      field_seen = true;
    } else if (head == "quiver") {
      QuiverPresentation q;
      bool closed = false;
      while (i < lines.size()) {
        std::size_t ln = i + 1;
        auto t = detail::tokens_of(detail::strip_comment(lines[i]));
        ++i;
        if (t.empty()) continue;
        if (t[0] == "end") {
          closed = true;
          break;
        }
        if (t[0] == "vertex" && t.size() == 2) {
          if (vertex_index.count(t[1])) detail::fail(path, ln, "duplicate vertex '" + t[1] + "'");
          vertex_index[t[1]] = q.vertices.size();
          q.vertices.push_back(t[1]);
        } else if (t[0] == "arrow" && t.size() == 4) {
          if (!vertex_index.count(t[2]) || !vertex_index.count(t[3]))
            detail::fail(path, ln, "arrow endpoints must be declared vertices");
          if (arrow_index.count(t[1])) detail::fail(path, ln, "duplicate arrow '" + t[1] + "'");
          arrow_index[t[1]] = q.arrows.size();
          q.arrows.push_back({t[1], vertex_index[t[2]], vertex_index[t[3]]});
        } else if (t[0] == "relation" && t.size() >= 2) {
          // terms: [sign] [coefficient] path, joined by +/-
          QuiverRelation rel;
          Rat sign(1);
          std::optional<Rat> coef;
          for (std::size_t k = 1; k < t.size(); ++k) {
            if (t[k] == "+" || t[k] == "-") {
              sign = t[k] == "-" ? Rat(-1) : Rat(1);
              coef.reset();
              continue;
            }
            bool numeric = t[k].find_first_not_of("0123456789/-") == std::string::npos;
            if (numeric && k + 1 < t.size() && t[k + 1] != "+" && t[k + 1] != "-") {
              coef = detail::parse_entry(inst.field, t[k], path, ln);
              continue;
            }
            Rat c = coef.value_or(Rat(1)) * sign;
            rel.terms.emplace_back(c, parse_path_word(t[k], ln));
            sign = Rat(1);
            coef.reset();
          }
          if (rel.terms.empty()) detail::fail(path, ln, "empty relation");
          q.relations.push_back(rel);
        } else if (t[0] == "maxlen" && t.size() == 2) {
          q.max_path_length = std::stoul(t[1]);
        } else {
          detail::fail(path, ln, "unknown quiver line '" + t[0] + "'");
        }
      }
      if (!closed) detail::fail(path, lineno, "quiver section not closed with 'end'");
      inst.quiver = q;
    } else if (head == "algebra" && toks.size() == 2 && toks[1] == "explicit") {
      ExplicitAlgebra ea;
      bool closed = false;
      while (i < lines.size()) {
        std::size_t ln = i + 1;
        auto t = detail::tokens_of(detail::strip_comment(lines[i]));
        ++i;
        if (t.empty()) continue;
        if (t[0] == "end") {
          closed = true;
          break;
        }
        if (t[0] == "dim" && t.size() == 2) {
          ea.dim = std::stoul(t[1]);
        } else if (t[0] == "label" && t.size() == 3) {
          std::size_t idx = std::stoul(t[1]);
          if (ea.labels.size() <= idx) ea.labels.resize(idx + 1);
          ea.labels[idx] = t[2];
        } else if (t[0] == "unit") {
          for (std::size_t k = 1; k < t.size(); ++k)
            ea.unit.push_back(detail::parse_entry(inst.field, t[k], path, ln));
        } else if (t[0] == "mult" && t.size() >= 4 && t[3] == "=") {
          std::vector<Rat> row;
          for (std::size_t k = 4; k < t.size(); ++k)
            row.push_back(detail::parse_entry(inst.field, t[k], path, ln));
          ea.products.emplace_back(std::stoul(t[1]), std::stoul(t[2]), row);
        } else {
          detail::fail(path, ln, "unknown explicit-algebra line '" + t[0] + "'");
        }
      }
      if (!closed) detail::fail(path, lineno, "algebra section not closed with 'end'");
      inst.explicit_algebra = ea;
    } else if (head == "module" && toks.size() == 2) {
      ParsedModule m;
      m.name = toks[1];
      bool closed = false;
      while (i < lines.size()) {
        std::size_t ln = i + 1;
        auto t = detail::tokens_of(detail::strip_comment(lines[i]));
        ++i;
        if (t.empty()) continue;
        if (t[0] == "end") {
          closed = true;
          break;
        }
        if (t[0] == "vertexdim") {
          for (std::size_t k = 1; k < t.size(); ++k) m.vertex_dims.push_back(std::stoul(t[k]));
        } else if (t[0] == "arrow" && t.size() >= 3 && t[2] == "=") {
          if (!inst.quiver) detail::fail(path, ln, "module arrows require a quiver algebra");
          auto it = arrow_index.find(t[1]);
          if (it == arrow_index.end()) detail::fail(path, ln, "unknown arrow '" + t[1] + "'");
          const QuiverArrow& a = inst.quiver->arrows[it->second];
          if (m.vertex_dims.size() != inst.quiver->vertices.size())
            detail::fail(path, ln, "vertexdim must come before arrow matrices");
          std::vector<std::string> rest(t.begin() + 3, t.end());
          m.arrow_mats[t[1]] = detail::parse_matrix(inst.field, rest, m.vertex_dims[a.source],
                                                    m.vertex_dims[a.target], path, ln);
        } else {
          detail::fail(path, ln, "unknown module line '" + t[0] + "'");
        }
      }
      if (!closed) detail::fail(path, lineno, "module section not closed with 'end'");
      inst.modules.push_back(std::move(m));
    } else if (head == "subcategory") {
      inst.subcategory.assign(toks.begin() + 1, toks.end());
      if (inst.subcategory.empty()) detail::fail(path, lineno, "subcategory needs generator names");
    } else if (head == "idempotent") {
      inst.idempotent_blocks.assign(toks.begin() + 1, toks.end());
      if (inst.idempotent_blocks.empty())
        detail::fail(path, lineno, "idempotent needs block names");
    } else if (head == "n" && toks.size() == 2) {
      inst.n = std::stoul(toks[1]);
      if (inst.n == 0) detail::fail(path, lineno, "n must be >= 1");
    } else if (head == "universe" && toks.size() == 3 && toks[1] == "bound") {
      inst.universe_bound = std::stoul(toks[2]);
    } else if (head == "universe" && toks.size() >= 2) {
      // user-supplied list of indecomposables (module names)
      inst.universe_names.assign(toks.begin() + 1, toks.end());
    } else {
      detail::fail(path, lineno, "unknown directive '" + head + "'");
    }
  }
  if (!field_seen) throw detail::ParseError(path + ": missing 'field' declaration");
  if (!inst.quiver && !inst.explicit_algebra)
    throw detail::ParseError(path + ": missing algebra (quiver or explicit)");
  if (inst.quiver && inst.explicit_algebra)
    throw detail::ParseError(path + ": declare either a quiver or an explicit algebra, not both");
  return inst;
}

// builds the Algebra declared by the instance
inline Algebra build_instance_algebra(const InstanceFile& inst) {
  if (inst.quiver) return from_quiver(*inst.quiver, inst.field);
  const ExplicitAlgebra& ea = *inst.explicit_algebra;
  if (ea.unit.size() != ea.dim)
    throw std::runtime_error(inst.path + ": unit length differs from dim");
  std::vector<Rat> constants(ea.dim * ea.dim * ea.dim, Rat(0));
  for (const auto& [bi, bj, row] : ea.products) {
    if (bi >= ea.dim || bj >= ea.dim || row.size() != ea.dim)
      throw std::runtime_error(inst.path + ": bad mult line indices");
    for (std::size_t k = 0; k < ea.dim; ++k) constants[(bi * ea.dim + bj) * ea.dim + k] = row[k];
  }
  std::vector<std::string> labels = ea.labels;
  labels.resize(ea.dim);
  for (std::size_t k = 0; k < ea.dim; ++k)
    if (labels[k].empty()) labels[k] = "b" + std::to_string(k);
  Mat unit(1, ea.dim, inst.field);
  for (std::size_t k = 0; k < ea.dim; ++k) unit.set(0, k, ea.unit[k]);
  Algebra a(inst.field, ea.dim, constants, unit, labels);
  if (!a.is_associative())
    throw std::runtime_error(inst.path + ": structure constants are not associative");
  if (!a.unit_is_identity()) throw std::runtime_error(inst.path + ": unit is not an identity");
  return a;
}

}  // namespace reckon
