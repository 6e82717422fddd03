// Command dispatch: resolves an instance file into algebra, universe and
// subcategory data and runs one of the verification tasks over it. Shared by
// the command-line tool and the test suites; exit code 0 means every check
// passed.
#pragma once

#include "reckon/higher_ar.hpp"
#include "reckon/instance.hpp"
#include "reckon/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace reckon {

struct ResolvedInstance {
  InstanceFile file;
  AlgebraPtr alg;
  ProjectiveCatalog cat;
  IndecUniverse universe;
  std::vector<std::string> universe_names;
  std::map<std::string, RightModule> declared;  // modules declared in the file
};

namespace detail {

inline RightModule build_declared_module(const InstanceFile& inst, AlgebraPtr alg,
                                         const ParsedModule& pm) {
  if (!inst.quiver)
    throw std::runtime_error("module '" + pm.name + "': explicit algebras take no modules");
  const QuiverPresentation& q = *inst.quiver;
  if (pm.vertex_dims.size() != q.vertices.size())
    throw std::runtime_error("module '" + pm.name + "': vertexdim count != vertex count");
  const FieldSpec& f = inst.field;
  std::size_t total = 0;
  std::vector<std::size_t> offset;
  for (std::size_t d : pm.vertex_dims) {
    offset.push_back(total);
    total += d;
  }
  // block action of each arrow, then of each basis path
  std::map<std::string, Mat> arrow_action;
  for (const auto& a : q.arrows) {
    Mat block(total, total, f);
    auto it = pm.arrow_mats.find(a.name);
    Mat am = it != pm.arrow_mats.end()
                 ? it->second
                 : Mat(pm.vertex_dims[a.source], pm.vertex_dims[a.target], f);
    for (std::size_t r = 0; r < am.rows(); ++r)
      for (std::size_t c = 0; c < am.cols(); ++c)
        block.set(offset[a.source] + r, offset[a.target] + c, am.at(r, c));
    arrow_action[a.name] = block;
  }
  RightModule m{alg, total, {}};
  for (std::size_t b = 0; b < alg->dim(); ++b) {
    const std::string& label = alg->labels()[b];
    if (label.rfind("e_", 0) == 0) {
      // trivial path: projection onto the vertex block
      std::string v = label.substr(2);
      Mat proj(total, total, f);
      for (std::size_t vi = 0; vi < q.vertices.size(); ++vi)
        if (q.vertices[vi] == v)
          for (std::size_t r = 0; r < pm.vertex_dims[vi]; ++r)
            proj.set(offset[vi] + r, offset[vi] + r, f.one());
      m.action.push_back(proj);
    } else {
      // path label: arrow names joined with '*'
      Mat acc = Mat::identity(total, f);
      std::istringstream is(label);
      std::string arrow;
      while (std::getline(is, arrow, '*')) acc = acc * arrow_action.at(arrow);
      m.action.push_back(acc);
    }
  }
  if (!check_module(m))
    throw std::runtime_error("module '" + pm.name + "': representation violates the relations");
  return m;
}

inline std::vector<std::string> name_universe(const IndecUniverse& u,
                                              const ProjectiveCatalog& cat) {
  std::vector<std::string> names(u.indecs.size());
  std::vector<bool> taken(u.indecs.size(), false);
  auto assign = [&](const std::vector<RightModule>& list, const std::string& prefix) {
    for (std::size_t k = 0; k < list.size(); ++k)
      for (std::size_t i = 0; i < u.indecs.size(); ++i)
        if (!taken[i] && indec_iso(u.indecs[i], list[k])) {
          names[i] = prefix + std::to_string(k + 1);
          taken[i] = true;
          break;
        }
  };
  assign(cat.projectives, "P");
  assign(cat.simples, "S");
  assign(cat.injectives, "I");
  std::size_t counter = 1;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!taken[i]) names[i] = "M" + std::to_string(counter++);
  return names;
}

}  // namespace detail

inline RightModule resolve_module_name(const ResolvedInstance& r, const std::string& name);

inline ResolvedInstance resolve_instance(const InstanceFile& inst) {
  AlgebraPtr alg = make_algebra(build_instance_algebra(inst));
  ProjectiveCatalog cat = projective_catalog(alg);
  ResolvedInstance r{inst, alg, std::move(cat), IndecUniverse{alg, {}, {}}, {}, {}};
  for (const auto& pm : inst.modules)
    r.declared.emplace(pm.name, detail::build_declared_module(inst, alg, pm));
  if (!inst.universe_names.empty()) {
    // user-supplied universe: resolve against declared modules and P/I/S names
    r.universe.provenance = UniverseProvenance::user_supplied;
    for (const auto& name : inst.universe_names) {
      RightModule m = resolve_module_name(r, name);
      EndoAlgebra e = endo_algebra(m);
      if (m.dim == 0 || radical_basis(e.alg, false).rows() + 1 != e.alg.dim())
        throw std::runtime_error("universe entry '" + name + "' is zero or decomposable");
      for (const auto& prev : r.universe.indecs)
        if (indec_iso(m, prev))
          throw std::runtime_error("universe entry '" + name + "' duplicates an earlier one");
      r.universe.indecs.push_back(m);
      r.universe_names.push_back(name);
    }
  } else {
    r.universe = enumerate_indecomposables(alg, inst.universe_bound);
    r.universe_names = detail::name_universe(r.universe, r.cat);
  }
  return r;
}

// resolves P<i>, I<i>, S<i>, declared module names, or universe names
inline RightModule resolve_module_name(const ResolvedInstance& r, const std::string& name) {
  auto it = r.declared.find(name);
  if (it != r.declared.end()) return it->second;
  auto indexed = [&](const std::vector<RightModule>& list,
                     char prefix) -> std::optional<RightModule> {
    if (name.size() < 2 || name[0] != prefix) return std::nullopt;
    std::size_t idx = 0;
    try {
      idx = std::stoul(name.substr(1));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (idx == 0 || idx > list.size())
      throw std::runtime_error("module name '" + name + "' is out of range");
    return list[idx - 1];
  };
  if (auto m = indexed(r.cat.projectives, 'P')) return *m;
  if (auto m = indexed(r.cat.injectives, 'I')) return *m;
  if (auto m = indexed(r.cat.simples, 'S')) return *m;
  for (std::size_t i = 0; i < r.universe_names.size(); ++i)
    if (r.universe_names[i] == name) return r.universe.indecs[i];
  throw std::runtime_error("unknown module name '" + name + "'");
}

inline AddSubcategory resolve_subcategory(const ResolvedInstance& r) {
  if (r.file.subcategory.empty())
    throw std::runtime_error("this task needs a 'subcategory' declaration");
  std::vector<RightModule> gens;
  std::vector<std::string> names;
  if (r.file.subcategory.size() == 1 && r.file.subcategory[0] == "all") {
    gens = r.universe.indecs;
    names = r.universe_names;
  } else {
    for (const auto& n : r.file.subcategory) {
      gens.push_back(resolve_module_name(r, n));
      names.push_back(n);
    }
  }
  return make_subcategory(r.alg, gens, names);
}

inline Mat resolve_idempotent(const ResolvedInstance& r, const AddSubcategory& b) {
  if (r.file.idempotent_blocks.empty())
    throw std::runtime_error("this task needs an 'idempotent' declaration (block names)");
  Mat e(1, b.gamma->dim(), r.file.field);
  for (const auto& name : r.file.idempotent_blocks) {
    bool found = false;
    for (std::size_t v = 0; v < b.names.size(); ++v)
      if (b.names[v] == name) {
        e = e + b.block_idem[v];
        found = true;
        break;
      }
    if (!found) {
      // allow naming by isomorphism class rather than by literal label
      RightModule m = resolve_module_name(r, name);
      for (std::size_t v = 0; v < b.generators.size(); ++v)
        if (indec_iso(m, b.generators[v])) {
          e = e + b.block_idem[v];
          found = true;
          break;
        }
    }
    if (!found) throw std::runtime_error("idempotent block '" + name + "' is not a generator");
  }
  return e;
}

// ---------------------------------------------------------------------------
// Task implementations
// ---------------------------------------------------------------------------

namespace tasks {

inline Report algebra_check(const ResolvedInstance& r) {
  Report rep;
  rep.task = "algebra-check";
  VerifyReport v;
  v.title = "algebra axioms";
  v.add("associativity", r.alg->is_associative());
  v.add("unit", r.alg->unit_is_identity());
  Mat rad = radical_basis(*r.alg);
  v.add("radical certified", true, "dim " + std::to_string(rad.rows()));
  auto prim = primitive_idempotents(*r.alg);
  v.add("primitive idempotents certified", true, std::to_string(prim.size()) + " blocks");
  rep.metadata.emplace_back("dim", std::to_string(r.alg->dim()));
  rep.metadata.emplace_back("radical_dim", std::to_string(rad.rows()));
  rep.metadata.emplace_back("blocks", std::to_string(prim.size()));
  rep.sections.push_back(std::move(v));
  return rep;
}

inline Report indecs(const ResolvedInstance& r) {
  Report rep;
  rep.task = "indecs";
  VerifyReport v;
  v.title = r.universe.provenance == UniverseProvenance::knitted
                ? "indecomposable modules (knitted)"
                : "indecomposable modules (user-supplied)";
  for (std::size_t i = 0; i < r.universe.indecs.size(); ++i)
    v.add(r.universe_names[i], true, "dim " + std::to_string(r.universe.indecs[i].dim));
  rep.metadata.emplace_back("count", std::to_string(r.universe.indecs.size()));
  rep.sections.push_back(std::move(v));
  return rep;
}

inline Report recollement_verify(const ResolvedInstance& r) {
  Report rep;
  rep.task = "recollement-verify";
  AddSubcategory b = resolve_subcategory(r);
  Mat e = resolve_idempotent(r, b);
  Recollement rec = build_recollement(b.gamma, e);
  RecollementTestset ts;
  ts.gamma_modules = enumerate_indecomposables(b.gamma).indecs;
  if (rec.ctx().corner->dim() > 0)
    ts.corner_modules = enumerate_indecomposables(rec.ctx().corner).indecs;
  if (rec.ctx().quotient->dim() > 0)
    ts.quotient_modules = enumerate_indecomposables(rec.ctx().quotient).indecs;
  rep.metadata.emplace_back("gamma_dim", std::to_string(b.gamma->dim()));
  rep.metadata.emplace_back("corner_dim", std::to_string(rec.ctx().corner->dim()));
  rep.metadata.emplace_back("quotient_dim", std::to_string(rec.ctx().quotient->dim()));
  rep.metadata.emplace_back("gamma_indecs", std::to_string(ts.gamma_modules.size()));
  rep.sections.push_back(verify_adjunction(rec, ts));
  rep.sections.push_back(verify_axioms(rec, ts));
  rep.sections.push_back(verify_serre_quotient(rec, ts));
  VerifyReport seqs;
  seqs.title = "defining exact sequences";
  for (std::size_t i = 0; i < ts.gamma_modules.size(); ++i) {
    DefiningSequence rd = right_defining_sequence(rec, ts.gamma_modules[i]);
    seqs.add("right-defining sequence exact at X" + std::to_string(i),
             four_term_exact(rd.seq) && rd.tail_killed_by_e,
             "dims " + std::to_string(rd.seq.m0.dim) + "," + std::to_string(rd.seq.m1.dim) + "," +
                 std::to_string(rd.seq.m2.dim) + "," + std::to_string(rd.seq.m3.dim));
    DefiningSequence ld = left_defining_sequence(rec, ts.gamma_modules[i]);
    seqs.add("left-defining sequence exact at X" + std::to_string(i),
             four_term_exact(ld.seq) && ld.tail_killed_by_e,
             "dualized claim: checked by symmetry");
  }
  rep.sections.push_back(std::move(seqs));
  return rep;
}

inline Report ab_compare(const ResolvedInstance& r) {
  Report rep;
  rep.task = "ab-compare";
  AddSubcategory b = resolve_subcategory(r);
  ABContext ctx = make_ab_context(b);
  auto indecs = enumerate_indecomposables(b.gamma).indecs;
  rep.metadata.emplace_back("gamma_dim", std::to_string(b.gamma->dim()));
  rep.metadata.emplace_back("gamma_indecs", std::to_string(indecs.size()));
  VerifyReport v;
  v.title = "Auslander-Bridger sequence = right-defining sequence";
  VerifyReport syz;
  syz.title = "second syzygy membership";
  for (std::size_t i = 0; i < indecs.size(); ++i) {
    SequenceComparison cmp = compare_with_right_defining(ctx, indecs[i]);
    v.add("X" + std::to_string(i) + " (dim " + std::to_string(indecs[i].dim) + ")", cmp.ok,
          cmp.detail);
    SecondSyzygyResult ssm = second_syzygy_membership(ctx, indecs[i]);
    bool is_defect = indecs[i].dim > 0 && act(indecs[i], ctx.e_proj).is_zero();
    syz.add("X" + std::to_string(i) + (ssm.member ? " in Im q_rho" : " not in Im q_rho"),
            !(is_defect && ssm.member), is_defect ? "defect module" : "");
  }
  rep.sections.push_back(std::move(v));
  rep.sections.push_back(std::move(syz));
  return rep;
}

inline Report nct_check(const ResolvedInstance& r) {
  Report rep;
  rep.task = "nct-check";
  AddSubcategory b = resolve_subcategory(r);
  ClusterTiltingReport ct = is_n_cluster_tilting(r.universe, b, r.file.n);
  rep.metadata.emplace_back("n", std::to_string(r.file.n));
  rep.metadata.emplace_back("generators", std::to_string(b.generators.size()));
  std::string violations;
  for (std::size_t i : ct.left_perp_violations)
    violations += (violations.empty() ? "" : " ") + r.universe_names[i];
  if (!violations.empty()) rep.metadata.emplace_back("left_perp_violations", violations);
  rep.sections.push_back(std::move(ct.report));
  return rep;
}

inline Report ar_duality_table(const ResolvedInstance& r) {
  Report rep;
  rep.task = "ar-duality-table";
  AddSubcategory b = resolve_subcategory(r);
  ABContext ctx = make_ab_context(b);
  rep.metadata.emplace_back("n", std::to_string(r.file.n));
  DualityTable t = verify_n_ar_duality(ctx, r.file.n);
  rep.sections.push_back(std::move(t.report));
  rep.sections.push_back(verify_sigma_equals_tau(ctx, r.file.n));
  return rep;
}

inline Report defect(const ResolvedInstance& r) {
  Report rep;
  rep.task = "defect";
  AddSubcategory b = resolve_subcategory(r);
  ABContext ctx = make_ab_context(b);
  std::size_t n = r.file.n;
  rep.metadata.emplace_back("n", std::to_string(n));
  SigmaTransport t = make_sigma_transport(ctx, n);
  VerifyReport v;
  v.title = "defects of the projective-cover completions";
  VerifyReport hi;
  hi.title = "homotopy invariance (minimal vs full approximations)";
  VerifyReport hd;
  hd.title = "higher defect formula";
  for (std::size_t gi = 0; gi < b.generators.size(); ++gi) {
    if (ctx.gen_projective[gi]) continue;
    CoverResult cover = projective_cover(b.generators[gi], ctx.base_cat);
    NExactSequence s = complete_n_exact_from_epi(b, ctx.gamma_op, cover.map, n, true);
    DefectPair d = defects(ctx, s);
    std::string shape;
    for (std::size_t k = 0; k < s.objects.size(); ++k)
      shape += (k ? " -> " : "") + std::to_string(s.objects[k].dim);
    v.add("delta(" + b.names[gi] + "): " + shape, true,
          "defect dims " + std::to_string(d.contravariant.dim) + ", " +
              std::to_string(d.covariant.dim));
    NExactSequence s2 = complete_n_exact_from_epi(b, ctx.gamma_op, cover.map, n, false);
    DefectPair d2 = defects(ctx, s2);
    hi.add("defects of delta(" + b.names[gi] + ") invariant",
           modules_isomorphic(d.contravariant, d2.contravariant).has_value() &&
               modules_isomorphic(d.covariant, d2.covariant).has_value());
    DefectFormulaReport f = verify_higher_defect_formula(ctx, s, n, t);
    hd.add("formula on delta(" + b.names[gi] + ")", f.report.pass());
  }
  rep.sections.push_back(std::move(v));
  rep.sections.push_back(std::move(hi));
  rep.sections.push_back(std::move(hd));
  return rep;
}

}  // namespace tasks

struct RunResult {
  Report report;
  int exit_code = 1;
};

inline RunResult run_command(const std::string& command, const InstanceFile& inst) {
  ResolvedInstance r = resolve_instance(inst);
  Report rep;
  if (command == "algebra-check") {
    rep = tasks::algebra_check(r);
  } else if (command == "indecs") {
    rep = tasks::indecs(r);
  } else if (command == "recollement-verify") {
    rep = tasks::recollement_verify(r);
  } else if (command == "ab-compare") {
    rep = tasks::ab_compare(r);
  } else if (command == "nct-check") {
    rep = tasks::nct_check(r);
  } else if (command == "ar-duality-table") {
    rep = tasks::ar_duality_table(r);
  } else if (command == "defect") {
    rep = tasks::defect(r);
  } else {
    throw std::runtime_error("unknown command '" + command + "'");
  }
  rep.instance = inst.path;
  rep.field_name = inst.field.name();
  return {rep, rep.pass() ? 0 : 1};
}

}  // namespace reckon
