#include "reckon/runner.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace reckon;

namespace {

// writes a throwaway instance file and cleans it up
struct TempInstance {
  std::filesystem::path path;
  explicit TempInstance(const std::string& body) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("reckon_test_" + std::to_string(++counter) + ".alg");
    std::ofstream out(path);
    out << body;
  }
  ~TempInstance() { std::error_code ec; std::filesystem::remove(path, ec); }
};

}  // namespace

TEST_CASE("parse_instance on the catalog") {
  SECTION("minimal field instance") {
    InstanceFile f = parse_instance("catalog/field.alg");
    Algebra a = build_instance_algebra(f);
    CHECK(a.dim() == 1);
  }
  SECTION("a2 gives the dim-3 algebra") {
    InstanceFile f = parse_instance("catalog/a2.alg");
    CHECK(build_instance_algebra(f).dim() == 3);
  }
  SECTION("a3rad2 gives the dim-5 algebra with parameters") {
    InstanceFile f = parse_instance("catalog/a3rad2.alg");
    CHECK(build_instance_algebra(f).dim() == 5);
    CHECK(f.n == 2);
    CHECK(f.subcategory == std::vector<std::string>{"P1", "P2", "S3", "S1"});
  }
}

TEST_CASE("parse errors carry positions and reasons") {
  SECTION("non-prime p rejected") {
    TempInstance t("field gf 6\nquiver\n  vertex v\nend\n");
    CHECK_THROWS_WITH(parse_instance(t.path.string()),
                      Catch::Matchers::ContainsSubstring("prime"));
  }
  SECTION("unknown directive names the line") {
    TempInstance t("field rationals\nbogus stuff\n");
    CHECK_THROWS_WITH(parse_instance(t.path.string()), Catch::Matchers::ContainsSubstring(":2:"));
  }
  SECTION("missing algebra") {
    TempInstance t("field rationals\n");
    CHECK_THROWS_WITH(parse_instance(t.path.string()),
                      Catch::Matchers::ContainsSubstring("missing algebra"));
  }
  SECTION("unknown arrow in a relation") {
    TempInstance t("field rationals\nquiver\n  vertex v\n  relation y*y\nend\n");
    CHECK_THROWS_WITH(parse_instance(t.path.string()),
                      Catch::Matchers::ContainsSubstring("unknown arrow"));
  }
}

TEST_CASE("declared modules are validated representations") {
  TempInstance t(
      "field rationals\n"
      "quiver\n"
      "  vertex 1\n"
      "  vertex 2\n"
      "  arrow a 1 2\n"
      "end\n"
      "module M\n"
      "  vertexdim 1 1\n"
      "  arrow a = 1\n"
      "end\n"
      "module Bad\n"
      "  vertexdim 1 1\n"
      "end\n");
  InstanceFile f = parse_instance(t.path.string());
  ResolvedInstance r = resolve_instance(f);
  // M is the projective P1; Bad is S1 + S2
  RightModule m = resolve_module_name(r, "M");
  CHECK(m.dim == 2);
  CHECK(modules_isomorphic(m, r.cat.projectives[0]).has_value());
  RightModule bad = resolve_module_name(r, "Bad");
  CHECK(decompose(bad).summands.size() == 2);
}

TEST_CASE("explicit structure-constant algebras") {
  TempInstance t(
      "field rationals\n"
      "algebra explicit\n"
      "  dim 2\n"
      "  label 0 e0\n"
      "  label 1 e1\n"
      "  unit 1 1\n"
      "  mult 0 0 = 1 0\n"
      "  mult 1 1 = 0 1\n"
      "end\n");
  InstanceFile f = parse_instance(t.path.string());
  Algebra a = build_instance_algebra(f);
  CHECK(a.dim() == 2);
  CHECK(radical_basis(a).rows() == 0);
  CHECK(primitive_idempotents(a).size() == 2);
}

TEST_CASE("run_command dispatch and exit codes") {
  SECTION("passing task returns 0") {
    RunResult r = run_command("algebra-check", parse_instance("catalog/a2.alg"));
    CHECK(r.exit_code == 0);
    CHECK(r.report.pass());
  }
  SECTION("unknown command throws") {
    CHECK_THROWS_WITH(run_command("transmogrify", parse_instance("catalog/field.alg")),
                      Catch::Matchers::ContainsSubstring("unknown command"));
  }
  SECTION("failing certification returns 1") {
    // add(projectives) is not 2-cluster-tilting over kA3/rad^2
    TempInstance t(
        "field rationals\n"
        "quiver\n"
        "  vertex 1\n  vertex 2\n  vertex 3\n"
        "  arrow a 1 2\n  arrow b 2 3\n"
        "  relation a*b\n"
        "  maxlen 4\n"
        "end\n"
        "subcategory P1 P2 P3\n"
        "n 2\n");
    RunResult r = run_command("nct-check", parse_instance(t.path.string()));
    CHECK(r.exit_code == 1);
    CHECK(!r.report.pass());
    bool s1_mentioned = false;
    for (const auto& [k, v] : r.report.metadata)
      if (k == "left_perp_violations" && v.find("S1") != std::string::npos) s1_mentioned = true;
    CHECK(s1_mentioned);
  }
  SECTION("task parameter overrides apply") {
    InstanceFile f = parse_instance("catalog/a3rad2.alg");
    f.n = 1;  // add(P1,P2,S3,S1) is not 1-cluster-tilting (S2 missing)
    RunResult r = run_command("nct-check", f);
    CHECK(r.exit_code == 1);
  }
}

TEST_CASE("machine-readable reports are deterministic") {
  InstanceFile f = parse_instance("catalog/dual_numbers.alg");
  RunResult a = run_command("recollement-verify", f);
  RunResult b = run_command("recollement-verify", f);
  CHECK(a.report.to_json() == b.report.to_json());
  // text and JSON agree on the verdict and the check names
  CHECK(a.report.to_text().find("result: PASS") != std::string::npos);
  CHECK(a.report.to_json().find("\"pass\": true") != std::string::npos);
}

TEST_CASE("field override re-parses the instance") {
  InstanceFile f = parse_instance("catalog/a2.alg", FieldSpec::gf(7));
  CHECK(f.field == FieldSpec::gf(7));
  RunResult r = run_command("recollement-verify", f);
  CHECK(r.exit_code == 0);
}
