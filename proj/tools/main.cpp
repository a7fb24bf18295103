#include "report.hpp"
#include "suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace qhcis;

bool color_enabled() {
  const char* v = std::getenv("CIS_COLOR");
  return v != nullptr && std::string(v) == "1";
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 2;
  }
  os << text;
  return 0;
}

int cmd_classify(const std::string& type, int rank, const std::string& subset) {
  try {
    ParabolicSpec spec;
    spec.type = AlgebraType{family_from_char(type.empty() ? '?' : type[0]), rank};
    for (size_t pos = 0; pos < subset.size();) {
      size_t comma = subset.find(',', pos);
      if (comma == std::string::npos) comma = subset.size();
      spec.subset.insert(std::stoi(subset.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    StepClassification cls = classify_step(spec);
    if (spec.subset.size() == 1) std::cout << cls.kind_name() << "\n";
    else std::cout << cls.k << "-step\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_case(const std::string& label, const std::string& format, const std::string& out_path) {
  try {
    CaseReport r = build_report(label);
    std::string text;
    if (format == "text") text = report_text(r);
    else if (format == "json") text = report_json(r);
    else if (format == "csv") text = report_csv(r);
    else {
      std::cerr << "error: unknown format '" << format << "'\n";
      return 2;
    }
    return write_output(text, out_path);
  } catch (const excluded_case_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}

int cmd_verify(const std::string& scope, const std::string& out_path) {
  std::vector<int> which;
  try {
    which = criteria_for_scope(scope);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  auto results = run_criteria(which, &std::cerr, color_enabled());
  nlohmann::ordered_json j;
  j["spec_version"] = "1";
  j["scope"] = scope;
  bool all = true;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    checks.push_back({{"criterion", r.criterion},
                      {"name", r.name},
                      {"pass", r.pass},
                      {"seconds", r.seconds},
                      {"detail", r.detail}});
    all = all && r.pass;
  }
  j["checks"] = checks;
  j["pass"] = all;
  int rc = write_output(j.dump(2) + "\n", out_path);
  if (rc != 0) return rc;
  return all ? 0 : 1;
}

int cmd_constants(const std::string& type, int rank, const std::string& out_path) {
  try {
    auto m = LieAlgebraModel::get(AlgebraType{family_from_char(type.empty() ? '?' : type[0]), rank});
    std::ostringstream os;
    m->constants().write_csv(m->roots(), os);
    return write_output(os.str(), out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformally invariant systems for maximal parabolics of quasi-Heisenberg type"};
  app.require_subcommand(1);

  std::string type, subset, label, format = "text", scope, out_path;
  int rank = 0;

  auto* classify = app.add_subcommand("classify", "Classify the nilradical of a parabolic");
  classify->add_option("--type", type, "Family letter A-G")->required();
  classify->add_option("--rank", rank, "Rank of the algebra")->required();
  classify->add_option("--subset", subset, "Comma-separated simple-root indices")->required();

  auto* casecmd = app.add_subcommand("case", "Full report for one quasi-Heisenberg case");
  casecmd->add_option("label", label, "Case label, e.g. B7(3)")->required();
  casecmd->add_option("--format", format, "text, json or csv")->default_val("text");
  casecmd->add_option("--out", out_path, "Write the report to a file");

  auto* verify = app.add_subcommand("verify", "Run a verification scope");
  verify->add_option("--scope", scope, "tables, lemmas or all")->required();
  verify->add_option("--out", out_path, "Write the JSON summary to a file");

  auto* constants = app.add_subcommand("constants", "Dump the structure-constant table as CSV");
  constants->add_option("--type", type, "Family letter A-F")->required();
  constants->add_option("--rank", rank, "Rank of the algebra")->required();
  constants->add_option("--out", out_path, "Write the CSV to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (app.got_subcommand(classify)) return cmd_classify(type, rank, subset);
  if (app.got_subcommand(casecmd)) return cmd_case(label, format, out_path);
  if (app.got_subcommand(verify)) return cmd_verify(scope, out_path);
  if (app.got_subcommand(constants)) return cmd_constants(type, rank, out_path);
  return 2;
}
