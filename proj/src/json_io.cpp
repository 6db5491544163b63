#include "cofrob/json_io.hpp"

#include <fstream>

namespace cofrob {

FieldPtr fieldFromJson(const Json& j) {
  std::string kind = j.value("kind", "rational");
  if (kind == "rational") return Field::rational();
  if (kind == "prime") return Field::prime(j.at("modulus").get<long>());
  if (kind == "extension") {
    FieldPtr base = fieldFromJson(j.at("base"));
    std::vector<Scalar> minpoly;
    for (const auto& c : j.at("minpoly")) minpoly.push_back(Scalar::parse(base, c.get<std::string>()));
    return Field::extension(base, std::move(minpoly), j.value("var", "t"));
  }
  throw Error("ParseError", "unknown field kind: " + kind);
}

Json fieldToJson(const FieldPtr& f) {
  Json j;
  switch (f->kind) {
    case Field::Kind::Rational:
      j["kind"] = "rational";
      break;
    case Field::Kind::Prime:
      j["kind"] = "prime";
      j["modulus"] = f->modulus;
      break;
    case Field::Kind::Extension:
      j["kind"] = "extension";
      j["base"] = fieldToJson(f->base);
      j["minpoly"] = Json::array();
      for (const auto& c : f->minpoly) j["minpoly"].push_back(c.str());
      j["var"] = f->varName;
      break;
  }
  return j;
}

Json scalarToJson(const Scalar& s) { return s.str(); }

Json vecToJson(const Vec& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(s.str());
  return j;
}

Json matrixToJson(const Matrix& m) {
  Json j = Json::array();
  for (int r = 0; r < m.rows; ++r) j.push_back(vecToJson(m.row(r)));
  return j;
}

Vec vecFromJson(const Json& j, const FieldPtr& f) {
  Vec v;
  for (const auto& c : j) v.push_back(Scalar::parse(f, c.get<std::string>()));
  return v;
}

namespace {

int nameIndex(const std::vector<std::string>& names, const std::string& n,
              const char* what) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return static_cast<int>(i);
  throw Error("ParseError", std::string("unknown ") + what + " name: " + n);
}

DecompositionData decompositionFromJson(const Json& j, const FieldPtr& f) {
  DecompositionData D;
  auto simples = [&](const Json& arr) {
    std::vector<SimpleType> out;
    for (const auto& s : arr) {
      SimpleType st;
      for (const auto& v : s.at("basis")) st.basis.push_back(vecFromJson(v, f));
      st.mult = s.value("mult", 1);
      st.endoDim = s.value("endoDim", 1);
      st.nonSplit = s.value("nonSplit", false);
      out.push_back(std::move(st));
    }
    return out;
  };
  auto injectives = [&](const Json& arr) {
    std::vector<InjectiveCopy> out;
    for (const auto& e : arr) {
      InjectiveCopy ic;
      for (const auto& v : e.at("basis")) ic.basis.push_back(vecFromJson(v, f));
      ic.simpleIndex = e.value("simpleIndex", 0);
      out.push_back(std::move(ic));
    }
    return out;
  };
  D.simplesLeft = simples(j.at("simplesLeft"));
  D.simplesRight = simples(j.at("simplesRight"));
  D.injectivesLeft = injectives(j.at("injectivesLeft"));
  D.injectivesRight = injectives(j.at("injectivesRight"));
  return D;
}

Json decompositionToJson(const DecompositionData& D) {
  Json j;
  auto simples = [](const std::vector<SimpleType>& in) {
    Json arr = Json::array();
    for (const auto& s : in) {
      Json e;
      e["basis"] = Json::array();
      for (const auto& v : s.basis) e["basis"].push_back(vecToJson(v));
      e["mult"] = s.mult;
      e["endoDim"] = s.endoDim;
      if (s.nonSplit) e["nonSplit"] = true;
      arr.push_back(std::move(e));
    }
    return arr;
  };
  auto injectives = [](const std::vector<InjectiveCopy>& in) {
    Json arr = Json::array();
    for (const auto& ic : in) {
      Json e;
      e["basis"] = Json::array();
      for (const auto& v : ic.basis) e["basis"].push_back(vecToJson(v));
      e["simpleIndex"] = ic.simpleIndex;
      arr.push_back(std::move(e));
    }
    return arr;
  };
  j["simplesLeft"] = simples(D.simplesLeft);
  j["simplesRight"] = simples(D.simplesRight);
  j["injectivesLeft"] = injectives(D.injectivesLeft);
  j["injectivesRight"] = injectives(D.injectivesRight);
  return j;
}

}  // namespace

CoalgPtr coalgebraFromJson(const Json& j) {
  auto C = std::make_shared<Coalgebra>();
  C->field = fieldFromJson(j.value("field", Json{{"kind", "rational"}}));
  for (const auto& b : j.at("basis")) C->basisNames.push_back(b.get<std::string>());
  int n = C->dim();
  C->delta.resize(n);
  C->epsilon = vecZero(C->field, n);
  for (const auto& row : j.at("delta")) {
    int k = nameIndex(C->basisNames, row.at("on").get<std::string>(), "basis");
    for (const auto& t : row.at("terms")) {
      int l = nameIndex(C->basisNames, t.at(0).get<std::string>(), "basis");
      int r = nameIndex(C->basisNames, t.at(1).get<std::string>(), "basis");
      C->delta[k].push_back({l, r, Scalar::parse(C->field, t.at(2).get<std::string>())});
    }
  }
  for (const auto& [name, val] : j.at("epsilon").items())
    C->epsilon[nameIndex(C->basisNames, name, "basis")] =
        Scalar::parse(C->field, val.get<std::string>());
  if (j.contains("decomposition"))
    C->decomp = decompositionFromJson(j.at("decomposition"), C->field);
  return C;
}

Json coalgebraToJson(const Coalgebra& C, bool includeDecomposition) {
  Json j;
  j["field"] = fieldToJson(C.field);
  j["basis"] = C.basisNames;
  j["delta"] = Json::array();
  for (int k = 0; k < C.dim(); ++k) {
    Json row;
    row["on"] = C.basisNames[k];
    row["terms"] = Json::array();
    for (const auto& t : C.delta[k])
      row["terms"].push_back(
          Json::array({C.basisNames[t.left], C.basisNames[t.right], t.c.str()}));
    j["delta"].push_back(std::move(row));
  }
  j["epsilon"] = Json::object();
  for (int k = 0; k < C.dim(); ++k)
    if (!C.epsilon[k].isZero()) j["epsilon"][C.basisNames[k]] = C.epsilon[k].str();
  if (includeDecomposition && C.decomp) j["decomposition"] = decompositionToJson(*C.decomp);
  return j;
}

Comodule comoduleFromJson(const Json& j, const CoalgPtr& C) {
  Comodule M;
  std::string side = j.value("side", "right");
  if (side != "right" && side != "left") throw Error("ParseError", "side must be left or right");
  M.side = side == "right" ? Side::Right : Side::Left;
  M.coalg = C;
  for (const auto& b : j.at("basis")) M.basisNames.push_back(b.get<std::string>());
  M.rho.resize(M.dim());
  for (const auto& row : j.at("rho")) {
    int a = nameIndex(M.basisNames, row.at("on").get<std::string>(), "comodule basis");
    for (const auto& t : row.at("terms")) {
      int m = nameIndex(M.basisNames, t.at(0).get<std::string>(), "comodule basis");
      int c = nameIndex(C->basisNames, t.at(1).get<std::string>(), "coalgebra basis");
      M.rho[a].push_back({m, c, Scalar::parse(C->field, t.at(2).get<std::string>())});
    }
  }
  return M;
}

Json comoduleToJson(const Comodule& M) {
  Json j;
  j["side"] = sideName(M.side);
  j["basis"] = M.basisNames;
  j["rho"] = Json::array();
  for (int a = 0; a < M.dim(); ++a) {
    Json row;
    row["on"] = M.basisNames[a];
    row["terms"] = Json::array();
    for (const auto& t : M.rho[a])
      row["terms"].push_back(
          Json::array({M.basisNames[t.mod], M.coalg->basisNames[t.co], t.c.str()}));
    j["rho"].push_back(std::move(row));
  }
  return j;
}

GraphSpec graphFromJson(const Json& j) {
  GraphSpec G;
  for (const auto& v : j.at("vertices"))
    G.vertices.push_back({v.at("name").get<std::string>(), v.value("label", 1)});
  for (const auto& e : j.value("edges", Json::array()))
    G.edges.push_back({e.at("name").get<std::string>(), e.at("from").get<std::string>(),
                       e.at("to").get<std::string>()});
  for (const auto& b : j.value("boundary", Json::array()))
    G.boundary.insert(b.get<std::string>());
  validateGraphSpec(G);
  return G;
}

Json graphToJson(const GraphSpec& G) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : G.vertices)
    j["vertices"].push_back({{"name", v.name}, {"label", v.label}});
  j["edges"] = Json::array();
  for (const auto& e : G.edges)
    j["edges"].push_back({{"name", e.name}, {"from", e.from}, {"to", e.to}});
  j["boundary"] = Json::array();
  for (const auto& b : G.boundary) j["boundary"].push_back(b);
  return j;
}

FiniteGroup groupFromJson(const Json& j) {
  std::vector<std::string> elements;
  for (const auto& e : j.at("elements")) elements.push_back(e.get<std::string>());
  std::vector<std::vector<int>> table;
  for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
  return makeGroup(std::move(elements), std::move(table));
}

Json groupToJson(const FiniteGroup& G) {
  Json j;
  j["elements"] = G.elements;
  j["table"] = G.table;
  return j;
}

Representation representationFromJson(const Json& j) {
  Representation eta;
  eta.group = groupFromJson(j.at("group"));
  eta.field = fieldFromJson(j.value("field", Json{{"kind", "rational"}}));
  const Json& mats = j.at("matrices");
  int d = -1;
  for (const auto& name : eta.group.elements) {
    if (!mats.contains(name))
      throw Error("ParseError", "missing matrix for element " + name);
    const Json& m = mats.at(name);
    if (d < 0) d = static_cast<int>(m.size());
    Matrix mat(eta.field, d, d);
    for (int r = 0; r < d; ++r) {
      Vec row = vecFromJson(m.at(r), eta.field);
      if (static_cast<int>(row.size()) != d) throw Error("ParseError", "ragged matrix");
      for (int c = 0; c < d; ++c) mat.at(r, c) = row[c];
    }
    eta.matrices.push_back(std::move(mat));
  }
  validateRepresentation(eta);
  return eta;
}

Json validationToJson(const ValidationReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["issues"] = Json::array();
  for (const auto& i : r.issues) {
    Json e;
    e["axiom"] = i.axiom;
    e["element"] = i.element;
    if (!i.detail.empty()) e["detail"] = i.detail;
    j["issues"].push_back(std::move(e));
  }
  return j;
}

Json verdictToJson(const Verdict& v) {
  Json j;
  j["semiperfect"] = {{"left", v.semiperfectLeft}, {"right", v.semiperfectRight}};
  j["qcf"] = {{"left", v.qcfLeft}, {"right", v.qcfRight}};
  j["coFrobenius"] = {{"left", v.coFrobeniusLeft}, {"right", v.coFrobeniusRight}};
  Json sig = Json::array();
  for (size_t t = 0; t < v.sigmaLeft.map.size(); ++t)
    sig.push_back(Json::array({static_cast<int>(t), v.sigmaLeft.map[t]}));
  j["sigma"] = std::move(sig);
  Json sigR = Json::array();
  for (size_t s = 0; s < v.sigmaRight.map.size(); ++s)
    sigR.push_back(Json::array({static_cast<int>(s), v.sigmaRight.map[s]}));
  j["sigmaMirror"] = std::move(sigR);
  Json mult;
  auto entries = [](const std::vector<SimpleSummary::Entry>& es) {
    Json arr = Json::array();
    for (const auto& e : es)
      arr.push_back({{"mult", e.mult}, {"endoDim", e.endoDim}, {"dim", e.dimension}});
    return arr;
  };
  mult["left"] = entries(v.summary.left);
  mult["right"] = entries(v.summary.right);
  j["multiplicities"] = std::move(mult);
  j["certificates"] = {{"embeddingLeftVerified", v.embeddingLeftVerified},
                       {"embeddingRightVerified", v.embeddingRightVerified},
                       {"nonSplitTrusted", v.nonSplitTrusted}};
  return j;
}

Json graphAnalysisToJson(const GraphAnalysis& a) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : a.vertices) {
    Json e;
    e["name"] = v.name;
    e["label"] = v.label;
    e["inDeg"] = v.inDeg;
    e["outDeg"] = v.outDeg;
    e["leftIntegralDim"] = v.leftIntegralDim;
    e["rightIntegralDim"] = v.rightIntegralDim;
    e["sigmaLeft"] = v.sigmaLeftTarget < 0 ? Json() : Json(a.vertices[v.sigmaLeftTarget].name);
    e["sigmaRight"] =
        v.sigmaRightTarget < 0 ? Json() : Json(a.vertices[v.sigmaRightTarget].name);
    e["boundary"] = v.boundary;
    j["vertices"].push_back(std::move(e));
  }
  j["qcf"] = {{"left", a.qcfLeft}, {"right", a.qcfRight}};
  j["coFrobenius"] = {{"left", a.coFrobeniusLeft}, {"right", a.coFrobeniusRight}};
  j["conclusive"] = a.conclusive;
  return j;
}

Json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("ParseError", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw Error("ParseError", path + ": " + e.what());
  }
}

}  // namespace cofrob
