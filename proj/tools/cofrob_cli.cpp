#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "cofrob/corpus.hpp"
#include "cofrob/random_gen.hpp"

using namespace cofrob;

namespace {

constexpr int kExitOk = 0, kExitVerdict = 1, kExitIo = 2;

std::string readFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream o;
  o << std::hex << h;
  return o.str();
}

struct Ctx {
  std::uint64_t seed = kDefaultSeed;
  int jobs = 0;
  std::string format = "json";  // json | table
  std::string command;
  Json inputs = Json::object();

  Json load(const std::string& path) {
    inputs[path] = fnv1a(readFileBytes(path));
    return loadJsonFile(path);
  }

  Json report() const {
    Json r;
    r["command"] = command;
    r["inputs"] = inputs;
    return r;
  }
};

void printTableValue(const std::string& key, const Json& v, int indent) {
  std::string pad(indent, ' ');
  if (v.is_array() && !v.empty() && v.front().is_object()) {
    std::cout << pad << key << ":\n";
    for (const auto& row : v) {
      std::cout << pad << "  -";
      for (auto it = row.begin(); it != row.end(); ++it) {
        if (it.value().is_structured())
          std::cout << " " << it.key() << "=" << it.value().dump();
        else
          std::cout << " " << it.key() << "=" << (it.value().is_string()
                                                      ? it.value().get<std::string>()
                                                      : it.value().dump());
      }
      std::cout << "\n";
    }
  } else if (v.is_object()) {
    std::cout << pad << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) printTableValue(it.key(), it.value(), indent + 2);
  } else {
    std::cout << pad << key << ": "
              << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

void emitReport(const Ctx& ctx, const Json& report) {
  if (ctx.format == "table") {
    for (auto it = report.begin(); it != report.end(); ++it)
      printTableValue(it.key(), it.value(), 0);
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

// ---------------------------------------------------------------- validate

int cmdValidate(Ctx& ctx, const std::string& path) {
  Json j = ctx.load(path);
  Json report = ctx.report();
  ValidationReport combined;

  if (j.contains("vertices")) {
    GraphSpec G = graphFromJson(j);
    validateGraphSpec(G);  // throws on failure
    report["kind"] = "graph";
  } else if (j.contains("table")) {
    makeGroup(groupFromJson(j).elements, groupFromJson(j).table);  // throws on failure
    report["kind"] = "group";
  } else if (j.contains("matrices")) {
    if (j.contains("group") && j["group"].is_string())
      j["group"] = loadJsonFile(j["group"].get<std::string>());
    validateRepresentation(representationFromJson(j));  // throws on failure
    report["kind"] = "representation";
  } else if (j.contains("delta")) {
    CoalgPtr C = coalgebraFromJson(j);
    report["kind"] = "coalgebra";
    combined = validateCoalgebra(*C);
    if (combined.valid && C->decomp) {
      ValidationReport d = validateDecomposition(*C, *C->decomp);
      for (const auto& issue : d.issues) combined.fail(issue.axiom, issue.element, issue.detail);
    }
  } else if (j.contains("rho")) {
    if (!j.contains("coalgebra"))
      throw Error("ParseError", path + ": comodule file needs an embedded \"coalgebra\"");
    CoalgPtr C = coalgebraFromJson(j["coalgebra"]);
    combined = validateCoalgebra(*C);
    if (combined.valid) combined = validateComodule(comoduleFromJson(j, C));
    report["kind"] = "comodule";
  } else {
    throw Error("ParseError", path + ": unrecognized input shape");
  }

  report["validation"] = validationToJson(combined);
  emitReport(ctx, report);
  return combined.valid ? kExitOk : kExitVerdict;
}

// ---------------------------------------------------------------- analyze

int cmdAnalyze(Ctx& ctx, const std::string& path) {
  CoalgPtr C = coalgebraFromJson(ctx.load(path));
  Verdict v = verdicts(C);
  Json report = ctx.report();
  report["dim"] = C->dim();
  report["verdict"] = verdictToJson(v);
  Json warnings = Json::array();
  if (v.nonSplitTrusted)
    warnings.push_back("non-split endomorphism dimensions taken from the input data");
  report["warnings"] = warnings;
  emitReport(ctx, report);
  return kExitOk;
}

// ---------------------------------------------------------------- integrals

int cmdIntegrals(Ctx& ctx, const std::string& coalgPath, const std::string& comodPath,
                 const std::string& side, const std::string& emit) {
  CoalgPtr C = coalgebraFromJson(ctx.load(coalgPath));
  Comodule M = comoduleFromJson(ctx.load(comodPath), C);
  IntegralSpace sp = side == "left" ? leftIntegrals(C, M) : rightIntegrals(C, M);
  Json report = ctx.report();
  report["side"] = side;
  report["comoduleDim"] = M.dim();
  report["dim"] = sp.dim();
  if (emit == "basis") {
    Json basis = Json::array();
    for (const auto& b : sp.basis) basis.push_back(matrixToJson(b));
    report["basis"] = basis;
  }
  emitReport(ctx, report);
  return kExitOk;
}

// ---------------------------------------------------------------- graph

int cmdGraphBuild(Ctx& ctx, const std::string& path, const std::string& out) {
  GraphSpec G = graphFromJson(ctx.load(path));
  validateGraphSpec(G);
  CoalgPtr C = buildGraphCoalgebra(G);
  Json coalgJson = coalgebraToJson(*C);
  if (!out.empty()) {
    std::ofstream o(out, std::ios::binary);
    if (!o) throw Error("IoError", "cannot write " + out);
    o << coalgJson.dump(2) << "\n";
    Json report = ctx.report();
    report["dim"] = C->dim();
    report["written"] = out;
    emitReport(ctx, report);
  } else {
    std::cout << coalgJson.dump(2) << "\n";
  }
  return kExitOk;
}

int cmdGraphAnalyze(Ctx& ctx, const std::string& path) {
  GraphSpec G = graphFromJson(ctx.load(path));
  validateGraphSpec(G);
  GraphAnalysis A = combinatorialVerdicts(G);
  Json report = ctx.report();
  report["analysis"] = graphAnalysisToJson(A);
  if (!A.conclusive)
    report["warnings"] = Json::array(
        {"boundary vertices excluded: verdicts describe the window interior only"});
  emitReport(ctx, report);
  return kExitOk;
}

// ---------------------------------------------------------------- group

Json quantumSuite(const CoalgPtr& RG, const Representation& eta) {
  Json r;
  const FieldPtr& f = eta.field;
  IntegralSpace sp = intEtaSpace(RG, eta);
  r["repDim"] = eta.dim();
  r["integralSpaceDim"] = sp.dim();
  bool roundTrip = true, invariant = true, member = true;
  for (int i = 0; i < eta.dim(); ++i) {
    Vec v = vecZero(f, eta.dim());
    v[i] = Scalar::one(f);
    Matrix L = quantumIntegralH(eta, v);
    if (!vecEq(thetaEta(eta, L), v)) roundTrip = false;
    if (!quantumInvarianceCheck(eta, L)) invariant = false;
    if (!inIntegralSpace(sp, L)) member = false;
  }
  r["thetaAfterHIsIdentity"] = roundTrip;
  r["invariance"] = invariant;
  r["inIntegralSpace"] = member;
  return r;
}

int cmdGroupDemo(Ctx& ctx, const std::string& groupName, const std::string& repName) {
  CatalogEntry cat = groupCatalog(groupName);
  Representation eta = cat.rep(repName);
  CoalgPtr RG = representativeCoalgebra(cat.group, cat.field);
  Json report = ctx.report();
  report["group"] = groupName;
  report["rep"] = repName;
  report["order"] = cat.group.order();
  Json suite = quantumSuite(RG, eta);
  report["suite"] = suite;
  emitReport(ctx, report);
  bool ok = suite["thetaAfterHIsIdentity"].get<bool>() && suite["invariance"].get<bool>() &&
            suite["inIntegralSpace"].get<bool>() &&
            suite["integralSpaceDim"].get<int>() == eta.dim();
  return ok ? kExitOk : kExitVerdict;
}

int cmdGroupCheck(Ctx& ctx, const std::string& path) {
  Json j = ctx.load(path);
  if (j.contains("group") && j["group"].is_string()) {
    std::string gpath = j["group"].get<std::string>();
    ctx.inputs[gpath] = fnv1a(readFileBytes(gpath));
    j["group"] = loadJsonFile(gpath);
  }
  Representation eta = representationFromJson(j);
  validateRepresentation(eta);  // throws NotARepresentation
  CoalgPtr RG = representativeCoalgebra(eta.group, eta.field);
  Json report = ctx.report();
  report["order"] = eta.group.order();
  Json suite = quantumSuite(RG, eta);
  report["suite"] = suite;
  emitReport(ctx, report);
  bool ok = suite["thetaAfterHIsIdentity"].get<bool>() && suite["invariance"].get<bool>() &&
            suite["inIntegralSpace"].get<bool>();
  return ok ? kExitOk : kExitVerdict;
}

// ---------------------------------------------------------------- corpus

int cmdCorpusList(Ctx& ctx) {
  Json report = ctx.report();
  Json members = Json::array();
  for (const auto& m : corpusMembers())
    members.push_back(Json{{"id", m.id},
                           {"description", m.description},
                           {"dim", m.coalg->dim()},
                           {"window", m.window}});
  report["members"] = members;
  emitReport(ctx, report);
  return kExitOk;
}

int cmdCorpusRun(Ctx& ctx) {
  CorpusReport rep = runCorpus(ctx.seed);
  if (ctx.format == "table") {
    for (const auto& c : rep.criteria)
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.number << " " << c.name << " — "
                << c.detail << "\n";
    std::cout << (rep.allPass ? "all criteria passed" : "criteria failed") << "\n";
  } else {
    Json report = ctx.report();
    for (auto it = rep.json.begin(); it != rep.json.end(); ++it) report[it.key()] = it.value();
    std::cout << report.dump(2) << "\n";
  }
  return rep.allPass ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact integral spaces and co-Frobenius verdicts for finite-dimensional coalgebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may trail the subcommand

  Ctx ctx;
  {
    std::ostringstream echo;
    for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];
    ctx.command = echo.str();
  }
  app.add_option("--seed", ctx.seed, "Seed for randomized property runs");
  app.add_option("--jobs", ctx.jobs, "OpenMP thread budget (0 = runtime default)");
  app.add_option("--format", ctx.format, "Report format: json or table")
      ->check(CLI::IsMember({"json", "table"}));

  std::string path, secondPath, outPath;
  std::string side = "left", emit = "dim", groupName, repName;

  auto* validate = app.add_subcommand("validate", "Validate a coalgebra/comodule/graph/group file");
  validate->add_option("file", path)->required();

  auto* analyze = app.add_subcommand("analyze", "Multiplicity-criteria verdicts for a coalgebra");
  analyze->add_option("file", path)->required();

  auto* integrals = app.add_subcommand("integrals", "Integral space of a comodule");
  integrals->add_option("coalgebra", path)->required();
  integrals->add_option("comodule", secondPath)->required();
  integrals->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  integrals->add_option("--emit", emit)->check(CLI::IsMember({"dim", "basis"}));

  auto* graph = app.add_subcommand("graph", "Graph coalgebra tools");
  graph->require_subcommand(1);
  auto* graphBuild = graph->add_subcommand("build", "Materialize the coalgebra of a graph");
  graphBuild->add_option("file", path)->required();
  graphBuild->add_option("-o,--output", outPath, "Write the coalgebra JSON here");
  auto* graphAnalyze = graph->add_subcommand("analyze", "Closed-form verdicts for a graph");
  graphAnalyze->add_option("file", path)->required();

  auto* group = app.add_subcommand("group", "Finite-group integral tools");
  group->require_subcommand(1);
  auto* groupDemo = group->add_subcommand("demo", "Run the quantum integral suite on a catalog rep");
  groupDemo->add_option("--group", groupName)->required();
  groupDemo->add_option("--rep", repName)->required();
  auto* groupCheck = group->add_subcommand("check", "Validate a representation file");
  groupCheck->add_option("file", path)->required();

  auto* corpus = app.add_subcommand("corpus", "Built-in verification corpus");
  corpus->require_subcommand(1);
  auto* corpusList = corpus->add_subcommand("list", "Enumerate corpus members");
  auto* corpusRun = corpus->add_subcommand("run", "Run all verification criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitIo;
  }

#ifdef _OPENMP
  if (ctx.jobs > 0) omp_set_num_threads(ctx.jobs);
#endif

  try {
    if (validate->parsed()) return cmdValidate(ctx, path);
    if (analyze->parsed()) return cmdAnalyze(ctx, path);
    if (integrals->parsed()) return cmdIntegrals(ctx, path, secondPath, side, emit);
    if (graphBuild->parsed()) return cmdGraphBuild(ctx, path, outPath);
    if (graphAnalyze->parsed()) return cmdGraphAnalyze(ctx, path);
    if (groupDemo->parsed()) return cmdGroupDemo(ctx, groupName, repName);
    if (groupCheck->parsed()) return cmdGroupCheck(ctx, path);
    if (corpusList->parsed()) return cmdCorpusList(ctx);
    if (corpusRun->parsed()) return cmdCorpusRun(ctx);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return (e.kind == "ParseError" || e.kind == "IoError") ? kExitIo : kExitVerdict;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerdict;
  }
  return kExitIo;
}
