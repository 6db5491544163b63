#pragma once

#include "cofrob/frobenius.hpp"
#include "cofrob/graphcoalg.hpp"
#include "cofrob/groupint.hpp"

// single-header nlohmann json lives in vendor/
#include "json.hpp"

namespace cofrob {

/// Ordered json keeps key insertion order so emitted reports are byte-stable.
using Json = nlohmann::ordered_json;

// field: {"kind":"rational"} | {"kind":"prime","modulus":p}
//      | {"kind":"extension","base":{...},"minpoly":[scalars],"var":"t"}
FieldPtr fieldFromJson(const Json& j);
Json fieldToJson(const FieldPtr& f);

Json scalarToJson(const Scalar& s);  // string form
Json vecToJson(const Vec& v);
Json matrixToJson(const Matrix& m);
Vec vecFromJson(const Json& j, const FieldPtr& f);

// { "field": ..., "basis": [...], "delta": [{"on","terms":[[l,r,c]]}],
//   "epsilon": {name: c}, "decomposition": optional }
CoalgPtr coalgebraFromJson(const Json& j);
Json coalgebraToJson(const Coalgebra& C, bool includeDecomposition = true);

// { "side": "right"|"left", "basis": [...], "rho": [{"on","terms":[[m,c,s]]}] }
Comodule comoduleFromJson(const Json& j, const CoalgPtr& C);
Json comoduleToJson(const Comodule& M);

GraphSpec graphFromJson(const Json& j);
Json graphToJson(const GraphSpec& G);

FiniteGroup groupFromJson(const Json& j);
Json groupToJson(const FiniteGroup& G);

// { "group": {...inline group...}, "field": optional, "matrices": {elem: [[c]]} }
Representation representationFromJson(const Json& j);

Json validationToJson(const ValidationReport& r);
Json verdictToJson(const Verdict& v);
Json graphAnalysisToJson(const GraphAnalysis& a);

/// Read a file, throwing ParseError (kind) with the path on failure.
Json loadJsonFile(const std::string& path);

}  // namespace cofrob
