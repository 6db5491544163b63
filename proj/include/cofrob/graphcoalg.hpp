#pragma once

#include <set>

#include "cofrob/comodule.hpp"

namespace cofrob {

/// Finite directed labeled multigraph. Labels n_v >= 1 give the comatrix block
/// size at each vertex. Vertices in `boundary` mark a truncation frontier of an
/// infinite family; verdicts touching them are reported as inconclusive.
struct GraphVertex {
  std::string name;
  int label = 1;
};
struct GraphEdge {
  std::string name, from, to;
};
struct GraphSpec {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  std::set<std::string> boundary;

  int vertexIndex(const std::string& name) const;
};

/// Throws on duplicate names, non-positive labels, or dangling endpoints.
void validateGraphSpec(const GraphSpec& G);

/// The path-coalgebra truncation at length one: grouplike comatrix blocks at
/// vertices, primitive blocks at edges. Ground-truth DecompositionData is
/// attached (simples = block rows/columns, injectives E_r(v,i), E_l(v,j)).
CoalgPtr buildGraphCoalgebra(const GraphSpec& G, FieldPtr field = Field::rational());

/// Closed-form integral dimension at a vertex. Left value:
///   sum_v n_v * #edges(v -> w)  (+ n_w when w has no outgoing edge).
/// The correction term covers sinks, whose injective envelope is already
/// simple; `paperMode` drops it and reproduces the uncorrected count.
int combinatorialIntegralDim(const GraphSpec& G, const std::string& vertex, Side side,
                             bool paperMode = false);

struct GraphAnalysis {
  struct VertexInfo {
    std::string name;
    int label, inDeg, outDeg;
    int leftIntegralDim, rightIntegralDim;
    int sigmaLeftTarget = -1;   // vertex index of sigma(<v>) for the left criteria
    int sigmaRightTarget = -1;  // mirrored
    bool boundary = false;
  };
  std::vector<VertexInfo> vertices;
  bool qcfLeft = false, qcfRight = false;
  bool coFrobeniusLeft = false, coFrobeniusRight = false;
  bool conclusive = true;  // false when boundary vertices were skipped
};

/// sigma-pair v -> u iff R(v) = {m} and L(u) = {m} (or v = u fully isolated);
/// verdict flags quantify over non-boundary vertices only.
GraphAnalysis combinatorialVerdicts(const GraphSpec& G);

/// Named example windows; `graph` is empty for members that are plain
/// coalgebras. Throws UnknownExample.
struct GalleryItem {
  std::optional<GraphSpec> graph;
  CoalgPtr coalg;  // set when graph is empty
};
GalleryItem exampleGallery(const std::string& name, const std::vector<int>& params = {});

std::vector<std::string> exampleGalleryNames();

}  // namespace cofrob
