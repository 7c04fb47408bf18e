#include "m1n/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "m1n/certify.hpp"
#include "m1n/chow.hpp"
#include "m1n/corpus.hpp"
#include "m1n/error.hpp"
#include "m1n/gluing.hpp"
#include "m1n/report.hpp"

namespace m1n::cli {

namespace {

nlohmann::json read_json(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(path + ": " + e.what());
  }
}

template <class F> auto load(const std::string &path, F parse) {
  try {
    return parse(read_json(path));
  } catch (const ParseError &e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0)
      throw;
    throw ParseError(path + ": " + what);
  }
}

void write_json(const nlohmann::json &doc, const std::string &path, std::ostream &out) {
  if (path.empty() || path == "-") {
    out << doc.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f)
    throw ParseError("cannot write '" + path + "'");
  f << doc.dump(2) << "\n";
}

int parse_degree(const std::string &text, const std::string &item) {
  try {
    std::size_t used = 0;
    int d = std::stoi(text, &used);
    if (used == text.size())
      return d;
  } catch (const std::exception &) {
  }
  throw DomainError("bad degree in '" + item + "'");
}

nlohmann::json invariants_json() {
  const auto inv = chow::family_invariants();
  return {{"kd_squared", poly_to_json(inv.kd_squared)},
          {"c2_TD", poly_to_json(inv.c2_td)},
          {"hodge_lambda", poly_to_json(inv.hodge_lambda)},
          {"rational_tails", poly_to_json(inv.rational_tails)},
          {"directrix_cycles", poly_to_json(inv.directrix_cycles)},
          {"two_section_genus", poly_to_json(inv.two_section_genus)},
          {"ramification", poly_to_json(inv.ramification)},
          {"irreducible_nodal", poly_to_json(inv.irreducible_nodal)}};
}

std::string scalar_text(const Scalar &s) {
  return s.is_constant() ? s.constant_value().str() : poly_to_json(s).dump();
}

} // namespace

nlohmann::json export_item(const std::string &name) {
  auto starts = [&](std::string_view p) { return name.rfind(p, 0) == 0; };
  if (starts("bn:"))
    return to_json(bn_class(parse_degree(name.substr(3), name)));
  if (name == "gp")
    return to_json(gp_class());
  if (name == "golden:trigonal")
    return to_json(golden_pullback(Golden::Trigonal));
  if (name == "golden:gp")
    return to_json(golden_pullback(Golden::Gp));
  if (starts("profile:"))
    return to_json(profile(ProfileName::parse(name.substr(8))));
  if (name == "certificate:trigonal")
    return to_json(trigonal_certificate());
  if (name == "certificate:gp")
    return to_json(gp_certificate());
  if (starts("certificate:gonal:"))
    return to_json(gonal_certificate(parse_degree(name.substr(18), name)));
  if (name == "chow:invariants")
    return invariants_json();
  throw DomainError("unknown corpus item '" + name + "'");
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact verification of divisor-class computations on M-bar_{1,n}", "m1n"};
  app.require_subcommand(1);

  VerifyOptions vopts;
  std::string section = "all", golden_trig, golden_gp;
  bool as_json = false;
  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("section", section, "all, trigonal, gonal, gp or chow")
      ->check(CLI::IsMember({"all", "trigonal", "gonal", "gp", "chow"}));
  verify->add_option("--max-d", vopts.max_d, "Largest d for the closed and binomial routes")
      ->check(CLI::Range(3, 200));
  verify->add_option("--direct-max-d", vopts.direct_max_d, "Largest d for the direct route")
      ->check(CLI::Range(3, 12));
  verify->add_flag("--json", as_json, "Emit the report as JSON");
  verify->add_option("--golden-trigonal", golden_trig, "Replacement trigonal golden expansion");
  verify->add_option("--golden-gp", golden_gp, "Replacement gp golden expansion");

  int g = 0, m = 0;
  std::string input, output;
  auto *pull = app.add_subcommand("pullback", "Pull a class on M-bar_g back to M-bar_{1,2m}");
  pull->add_option("--g", g, "Genus of the source class")->required();
  pull->add_option("--m", m, "Number of glued pairs")->required();
  pull->add_option("--input", input, "Class on M-bar_g (JSON)")->required();
  pull->add_option("--output", output, "Output file; stdout when omitted");

  std::string profile_path, class_path;
  auto *inter = app.add_subcommand("intersect", "Pair a curve profile with a divisor class");
  inter->add_option("--profile", profile_path, "Curve profile (JSON)")->required();
  inter->add_option("--class", class_path, "Divisor class on M-bar_{1,n} (JSON)")->required();

  std::string item, export_out;
  auto *exp = app.add_subcommand("export", "Write a corpus item as JSON");
  exp->add_option("--name", item, "Corpus item name")->required();
  exp->add_option("--output", export_out, "Output file; stdout when omitted");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*verify) {
      if (!golden_trig.empty())
        vopts.golden_trigonal = load(golden_trig, class_m1n_from_json);
      if (!golden_gp.empty())
        vopts.golden_gp = load(golden_gp, class_m1n_from_json);
      if (vopts.direct_max_d > vopts.max_d)
        vopts.direct_max_d = vopts.max_d;
      const auto results = verify_section(section, vopts);
      out << emit_report(results, as_json ? ReportFormat::Json : ReportFormat::Text);
      return all_pass(results) ? kExitOk : kExitCheckFailed;
    }
    if (*pull) {
      const DivisorClassMg w = load(input, class_mg_from_json);
      if (w.g() != g)
        throw SpaceMismatchError("input class lives on M-bar_" + std::to_string(w.g()) +
                                 ", not M-bar_" + std::to_string(g));
      write_json(to_json(glue_pullback(w, m)), output, out);
      return kExitOk;
    }
    if (*inter) {
      const CurveProfile p = load(profile_path, profile_from_json);
      const DivisorClassM1n c = load(class_path, class_m1n_from_json);
      out << scalar_text(pair(p, c)) << "\n";
      return kExitOk;
    }
    write_json(export_item(item), export_out, out);
    return kExitOk;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

} // namespace m1n::cli
