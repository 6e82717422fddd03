// Command-line front end: runs one verification task over an instance file
// and emits the report as text (with timing) or deterministic JSON.
#include "reckon/runner.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

std::optional<reckon::FieldSpec> parse_field_flag(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "rationals" || s == "Q" || s == "q") return reckon::FieldSpec::rationals();
  std::string t = s;
  if (t.rfind("gf", 0) == 0) t = t.substr(2);
  if (!t.empty() && (t[0] == ':' || t[0] == '=')) t = t.substr(1);
  try {
    return reckon::FieldSpec::gf(static_cast<std::uint32_t>(std::stoul(t)));
  } catch (const std::exception&) {
    throw std::runtime_error("bad --field value '" + s + "' (use rationals or gf<p>)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "reckon - exact verification of recollements, Auslander-Bridger sequences and higher "
      "Auslander-Reiten theory on finite-dimensional algebras"};
  std::string command, instance_path, out_path, format = "text", field_flag;
  std::size_t n_override = 0;
  std::vector<std::string> idem_override;
  app.add_option("command", command,
                 "algebra-check | indecs | recollement-verify | ab-compare | nct-check | "
                 "ar-duality-table | defect")
      ->required();
  app.add_option("instance", instance_path, "instance file (see catalog/ for examples)")
      ->required();
  app.add_option("--n", n_override, "override the task parameter n");
  app.add_option("--idempotent", idem_override,
                 "override the idempotent block names (generator names)");
  app.add_option("--field", field_flag, "override the coefficient field: rationals or gf<p>");
  app.add_option("--out", out_path, "write the report to this path instead of stdout");
  app.add_option("--format", format, "text | structured (JSON)")
      ->check(CLI::IsMember({"text", "structured"}));
  CLI11_PARSE(app, argc, argv);

  try {
    reckon::InstanceFile inst =
        reckon::parse_instance(instance_path, parse_field_flag(field_flag));
    if (n_override > 0) inst.n = n_override;
    if (!idem_override.empty()) inst.idempotent_blocks = idem_override;
    auto t0 = std::chrono::steady_clock::now();
    reckon::RunResult res = reckon::run_command(command, inst);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // JSON output is deterministic: timing goes to the text rendering only
    std::string rendered =
        format == "structured" ? res.report.to_json() : res.report.to_text(seconds);
    if (out_path.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
      out << rendered;
    }
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
