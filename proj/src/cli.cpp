#include "hkt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hkt/verify.hpp"

namespace hkt {

namespace {

using OrderedJson = nlohmann::ordered_json;

CatalogEntry loadEntry(const std::string& input) {
  constexpr std::string_view kBuiltinPrefix = "builtin:";
  if (input.rfind(kBuiltinPrefix, 0) == 0) return builtin(input.substr(kBuiltinPrefix.size()));
  std::ifstream in(input);
  if (!in) throw ParseError(0, "cannot open '" + input + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseEntry(buf.str());
}

std::string flagStr(const std::optional<bool>& f) {
  if (!f) return "n/a";
  return *f ? "yes" : "no";
}

void renderText(const CatalogEntry& entry, const Report& r, std::ostream& os) {
  os << "entry: " << entry.name << " (dim " << entry.structure.dim() << ")\n";
  os << "flags:\n";
  for (int a = 0; a < 3; ++a)
    if (r.integrable[static_cast<size_t>(a)])
      os << "  complex_integrable J" << (a + 1) << ": "
         << flagStr(r.integrable[static_cast<size_t>(a)]) << '\n';
  auto row = [&](const char* name, const std::optional<bool>& f) {
    if (f) os << "  " << name << ": " << flagStr(f) << '\n';
  };
  row("hypercomplex", r.hypercomplex);
  row("abelian_hypercomplex", r.abelianHypercomplex);
  row("hermitian", r.hermitian);
  row("kahler", r.kahler);
  row("hyper_hermitian", r.hyperHermitian);
  row("hkt", r.hkt);
  row("strong", r.strong);
  row("weak", r.weak);
  row("balanced", r.balanced);
  row("conformally_balanced", r.conformallyBalanced);
  row("hyper_kahler", r.hyperKahler);
  row("torsion_coclosed", r.torsionCoclosed);
  if (!r.forms.empty()) {
    os << "forms (coefficients exact; decimal hints approximate):\n";
    for (const auto& [name, f] : r.forms) {
      os << "  " << name << " = " << f.str();
      if (!f.isZeroForm() && f.coefficients().size() == 1) {
        os << "   (~ " << f.coefficients().begin()->second.approx() << ")";
      }
      os << '\n';
    }
  }
}

OrderedJson formJson(const KForm& f) {
  OrderedJson terms = OrderedJson::array();
  for (const auto& [idx, c] : f.coefficients()) {
    OrderedJson term;
    term["indices"] = idx;
    term["coeff"] = c.str();
    terms.push_back(term);
  }
  OrderedJson out;
  out["degree"] = f.degree();
  out["terms"] = terms;
  return out;
}

void renderJson(const CatalogEntry& entry, const Report& r, std::ostream& os) {
  OrderedJson j;
  j["entry"] = entry.name;
  j["dim"] = entry.structure.dim();
  OrderedJson flags;
  for (int a = 0; a < 3; ++a)
    if (r.integrable[static_cast<size_t>(a)])
      flags["complex_integrable_J" + std::to_string(a + 1)] = *r.integrable[static_cast<size_t>(a)];
  auto put = [&](const char* name, const std::optional<bool>& f) {
    if (f) flags[name] = *f;
  };
  put("hypercomplex", r.hypercomplex);
  put("abelian_hypercomplex", r.abelianHypercomplex);
  put("hermitian", r.hermitian);
  put("kahler", r.kahler);
  put("hyper_hermitian", r.hyperHermitian);
  put("hkt", r.hkt);
  put("strong", r.strong);
  put("weak", r.weak);
  put("balanced", r.balanced);
  put("conformally_balanced", r.conformallyBalanced);
  put("hyper_kahler", r.hyperKahler);
  put("torsion_coclosed", r.torsionCoclosed);
  j["flags"] = flags;
  OrderedJson forms;
  for (const auto& [name, f] : r.forms) forms[name] = formJson(f);
  j["forms"] = forms;
  os << j.dump(2) << '\n';
}

int cmdCheck(const std::string& input, std::ostream& out) {
  CatalogEntry entry = loadEntry(input);
  out << "checking " << entry.name << " (dim " << entry.structure.dim() << ")\n";
  CheckResult res = validateEntry(entry);
  auto jac = entry.structure.algebra.jacobiDefect();
  out << "  [" << (jac.ok() ? "PASS" : "FAIL") << "] Jacobi identity";
  if (!jac.ok()) {
    auto w = *jac.witness;
    out << " (witness (e" << w[0] << ", e" << w[1] << ", e" << w[2]
        << "), residual " << jac.worst.str() << ")";
  }
  out << '\n';
  for (const auto& issue : res.issues)
    if (issue.what != "Jacobi identity fails")
      out << "  [FAIL] " << issue.what << (issue.witness.empty() ? "" : " at " + issue.witness)
          << '\n';
  if (res.ok()) out << "  [PASS] structural validation\n";
  return res.ok() ? 0 : 1;
}

int cmdReport(const std::string& input, bool json, std::ostream& out) {
  CatalogEntry entry = loadEntry(input);
  CheckResult res = validateEntry(entry);
  if (!res.ok()) throw ValidationError("invalid entry: " + res.summary());
  Report r = classify(entry.structure);
  if (json)
    renderJson(entry, r, out);
  else
    renderText(entry, r, out);
  return 0;
}

int cmdConstruct(const std::string& kind, const std::string& input,
                 const std::string& connName, const std::string& outPath,
                 std::ostream& out) {
  CatalogEntry entry = loadEntry(input);
  CheckResult res = validateEntry(entry);
  if (!res.ok()) throw ValidationError("invalid entry: " + res.summary());

  CatalogEntry result;
  if (kind == "rho") {
    auto it = entry.quatReps.find(connName);
    if (it == entry.quatReps.end())
      throw ValidationError("no quaternionic representation named '" + connName + "'");
    result.structure = rhoExtension(entry.structure, it->second);
    result.name = entry.name + "_rho_" + connName;
  } else {
    auto it = entry.connections.find(connName);
    if (it == entry.connections.end())
      throw ValidationError("no connection named '" + connName + "'");
    if (kind == "tangent") {
      result.structure = tangentAlgebra(entry.structure, it->second);
      result.name = entry.name + "_tangent_" + connName;
    } else if (kind == "kaehler-double") {
      result.structure = kaehlerToHkt(entry.structure, it->second);
      result.name = entry.name + "_double_" + connName;
    } else if (kind == "iterate") {
      GeomStructure first = entry.structure.hasTriple()
                                ? tangentAlgebra(entry.structure, it->second)
                                : kaehlerToHkt(entry.structure, it->second);
      result.structure = iterateTangent(first, it->second);
      result.name = entry.name + "_iterate_" + connName;
    } else {
      throw ValidationError("unknown construction kind '" + kind + "'");
    }
  }
  std::string text = serializeEntry(result);
  if (outPath.empty()) {
    out << text;
  } else {
    std::ofstream f(outPath);
    if (!f) throw ValidationError("cannot write '" + outPath + "'");
    f << text;
    out << "wrote " << result.name << " (dim " << result.structure.dim() << ") to "
        << outPath << '\n';
  }
  return 0;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact constructor and classifier for HKT structures on Lie algebras"};
  app.require_subcommand(1);

  std::string input, connName, outPath, caseName;
  bool json = false;

  auto* check = app.add_subcommand("check", "validate an entry structurally");
  check->add_option("input", input, "path or builtin:NAME")->required();

  auto* report = app.add_subcommand("report", "classify an entry and print the full report");
  report->add_option("input", input, "path or builtin:NAME")->required();
  report->add_flag("--json", json, "emit JSON instead of text");

  auto* construct = app.add_subcommand("construct", "build a derived structure");
  std::string kind;
  construct->add_option("kind", kind, "tangent | rho | kaehler-double | iterate")
      ->required()
      ->check(CLI::IsMember({"tangent", "rho", "kaehler-double", "iterate"}));
  construct->add_option("input", input, "path or builtin:NAME")->required();
  construct->add_option("connection", connName, "named connection or representation")->required();
  construct->add_option("--out", outPath, "output path (stdout when omitted)");

  auto* verify = app.add_subcommand("verify-paper", "run the built-in verification suite");
  verify->add_option("--case", caseName, "run a single case");

  auto* list = app.add_subcommand("list", "list built-in entries");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (check->parsed()) return cmdCheck(input, out);
    if (report->parsed()) return cmdReport(input, json, out);
    if (construct->parsed()) return cmdConstruct(kind, input, connName, outPath, out);
    if (verify->parsed()) {
      if (!caseName.empty()) {
        auto names = verifyCaseNames();
        if (std::find(names.begin(), names.end(), caseName) == names.end()) {
          err << "unknown case '" << caseName << "'; available:";
          for (const auto& n : names) err << ' ' << n;
          err << '\n';
          return 2;
        }
      }
      return runVerification(out, caseName) ? 0 : 1;
    }
    if (list->parsed()) {
      for (const auto& name : builtinNames()) {
        CatalogEntry e = builtin(name);
        out << name << "  (dim " << e.structure.dim();
        if (!e.connections.empty()) {
          out << "; connections:";
          for (const auto& [n, c] : e.connections) out << ' ' << n;
        }
        if (!e.quatReps.empty()) {
          out << "; quat_reps:";
          for (const auto& [n, r] : e.quatReps) out << ' ' << n;
        }
        out << ")\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace hkt
