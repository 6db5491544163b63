#include "cofrob/graphcoalg.hpp"

#include <algorithm>

namespace cofrob {

int GraphSpec::vertexIndex(const std::string& name) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].name == name) return static_cast<int>(i);
  throw Error("UnknownVertex", name);
}

void validateGraphSpec(const GraphSpec& G) {
  std::set<std::string> names;
  for (const auto& v : G.vertices) {
    if (!names.insert(v.name).second) throw Error("DuplicateName", v.name);
    if (v.label < 1) throw Error("BadLabel", v.name + " has label < 1");
  }
  for (const auto& e : G.edges) {
    if (!names.insert(e.name).second) throw Error("DuplicateName", e.name);
    G.vertexIndex(e.from);
    G.vertexIndex(e.to);
  }
  for (const auto& b : G.boundary) G.vertexIndex(b);
}

CoalgPtr buildGraphCoalgebra(const GraphSpec& G, FieldPtr field) {
  validateGraphSpec(G);
  auto C = std::make_shared<Coalgebra>();
  C->field = field;
  Scalar one = Scalar::one(field);

  // basis layout: per vertex v its n_v x n_v block, then per edge m its
  // n_{l(m)} x n_{r(m)} block
  int nv = static_cast<int>(G.vertices.size());
  std::vector<int> vOff(nv);
  auto blockName = [](const std::string& base, int i, int j, bool scalar) {
    return scalar ? base : base + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
  };
  int pos = 0;
  for (int v = 0; v < nv; ++v) {
    vOff[v] = pos;
    int n = G.vertices[v].label;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        C->basisNames.push_back(blockName(G.vertices[v].name, i, j, n == 1));
    pos += n * n;
  }
  std::vector<int> eOff(G.edges.size());
  std::vector<int> eFrom(G.edges.size()), eTo(G.edges.size());
  for (size_t m = 0; m < G.edges.size(); ++m) {
    eOff[m] = pos;
    eFrom[m] = G.vertexIndex(G.edges[m].from);
    eTo[m] = G.vertexIndex(G.edges[m].to);
    int nl = G.vertices[eFrom[m]].label, nr = G.vertices[eTo[m]].label;
    for (int i = 0; i < nl; ++i)
      for (int j = 0; j < nr; ++j)
        C->basisNames.push_back(blockName(G.edges[m].name, i, j, nl == 1 && nr == 1));
    pos += nl * nr;
  }
  int dim = pos;
  C->delta.resize(dim);
  C->epsilon = vecZero(field, dim);

  auto vIdx = [&](int v, int i, int j) { return vOff[v] + i * G.vertices[v].label + j; };
  auto eIdx = [&](int m, int i, int j) { return eOff[m] + i * G.vertices[eTo[m]].label + j; };

  for (int v = 0; v < nv; ++v) {
    int n = G.vertices[v].label;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k)
          C->delta[vIdx(v, i, j)].push_back({vIdx(v, i, k), vIdx(v, k, j), one});
        if (i == j) C->epsilon[vIdx(v, i, j)] = one;
      }
  }
  for (size_t m = 0; m < G.edges.size(); ++m) {
    int nl = G.vertices[eFrom[m]].label, nr = G.vertices[eTo[m]].label;
    int mi = static_cast<int>(m);
    for (int i = 0; i < nl; ++i)
      for (int j = 0; j < nr; ++j) {
        for (int k = 0; k < nl; ++k)
          C->delta[eIdx(mi, i, j)].push_back({vIdx(eFrom[m], i, k), eIdx(mi, k, j), one});
        for (int k = 0; k < nr; ++k)
          C->delta[eIdx(mi, i, j)].push_back({eIdx(mi, i, k), vIdx(eTo[m], k, j), one});
      }
  }

  DecompositionData D;
  auto unit = [&](int k) {
    Vec u = vecZero(field, dim);
    u[k] = one;
    return u;
  };
  for (int v = 0; v < nv; ++v) {
    int n = G.vertices[v].label;
    SimpleType right;  // first row of the comatrix block
    for (int j = 0; j < n; ++j) right.basis.push_back(unit(vIdx(v, 0, j)));
    right.mult = n;
    D.simplesRight.push_back(right);
    SimpleType left;  // first column
    for (int i = 0; i < n; ++i) left.basis.push_back(unit(vIdx(v, i, 0)));
    left.mult = n;
    D.simplesLeft.push_back(left);
    for (int i = 0; i < n; ++i) {
      InjectiveCopy E;  // E_r(v, i) = row i of v plus row i of every outgoing edge
      for (int k = 0; k < n; ++k) E.basis.push_back(unit(vIdx(v, i, k)));
      for (size_t m = 0; m < G.edges.size(); ++m)
        if (eFrom[m] == v)
          for (int q = 0; q < G.vertices[eTo[m]].label; ++q)
            E.basis.push_back(unit(eIdx(static_cast<int>(m), i, q)));
      E.simpleIndex = v;
      D.injectivesRight.push_back(std::move(E));
    }
    for (int j = 0; j < n; ++j) {
      InjectiveCopy E;  // E_l(v, j) = column j of v plus column j of incoming edges
      for (int k = 0; k < n; ++k) E.basis.push_back(unit(vIdx(v, k, j)));
      for (size_t m = 0; m < G.edges.size(); ++m)
        if (eTo[m] == v)
          for (int q = 0; q < G.vertices[eFrom[m]].label; ++q)
            E.basis.push_back(unit(eIdx(static_cast<int>(m), q, j)));
      E.simpleIndex = v;
      D.injectivesLeft.push_back(std::move(E));
    }
  }
  C->decomp = std::move(D);
  return C;
}

int combinatorialIntegralDim(const GraphSpec& G, const std::string& vertex, Side side,
                             bool paperMode) {
  int w = G.vertexIndex(vertex);
  int total = 0;
  bool noContinuation = true;  // R(w) empty on the left, L(w) on the right
  for (const auto& e : G.edges) {
    if (side == Side::Left) {
      if (e.to == vertex) total += G.vertices[G.vertexIndex(e.from)].label;
      if (e.from == vertex) noContinuation = false;
    } else {
      if (e.from == vertex) total += G.vertices[G.vertexIndex(e.to)].label;
      if (e.to == vertex) noContinuation = false;
    }
  }
  if (!paperMode && noContinuation) total += G.vertices[w].label;
  return total;
}

GraphAnalysis combinatorialVerdicts(const GraphSpec& G) {
  validateGraphSpec(G);
  GraphAnalysis A;
  int nv = static_cast<int>(G.vertices.size());
  std::vector<std::vector<int>> in(nv), out(nv);  // edge indices
  for (size_t m = 0; m < G.edges.size(); ++m) {
    out[G.vertexIndex(G.edges[m].from)].push_back(static_cast<int>(m));
    in[G.vertexIndex(G.edges[m].to)].push_back(static_cast<int>(m));
  }
  A.conclusive = G.boundary.empty();
  A.qcfLeft = A.qcfRight = true;
  for (int v = 0; v < nv; ++v) {
    GraphAnalysis::VertexInfo info;
    info.name = G.vertices[v].name;
    info.label = G.vertices[v].label;
    info.inDeg = static_cast<int>(in[v].size());
    info.outDeg = static_cast<int>(out[v].size());
    info.leftIntegralDim = combinatorialIntegralDim(G, info.name, Side::Left);
    info.rightIntegralDim = combinatorialIntegralDim(G, info.name, Side::Right);
    info.boundary = G.boundary.count(info.name) > 0;
    // sigma for the left criteria: E_r(v) must be the dual of some E_l(u)
    if (info.outDeg == 0 && info.inDeg == 0) {
      info.sigmaLeftTarget = v;
      info.sigmaRightTarget = v;
    } else {
      if (out[v].size() == 1) {
        int m = out[v][0];
        int u = G.vertexIndex(G.edges[m].to);
        if (in[u].size() == 1 && in[u][0] == m) info.sigmaLeftTarget = u;
      }
      if (in[v].size() == 1) {
        int m = in[v][0];
        int u = G.vertexIndex(G.edges[m].from);
        if (out[u].size() == 1 && out[u][0] == m) info.sigmaRightTarget = u;
      }
    }
    A.vertices.push_back(std::move(info));
  }
  A.coFrobeniusLeft = A.coFrobeniusRight = true;
  for (const auto& info : A.vertices) {
    if (info.boundary) continue;
    if (info.sigmaLeftTarget < 0)
      A.qcfLeft = A.coFrobeniusLeft = false;
    else if (info.label > A.vertices[info.sigmaLeftTarget].label)
      A.coFrobeniusLeft = false;
    if (info.sigmaRightTarget < 0)
      A.qcfRight = A.coFrobeniusRight = false;
    else if (info.label > A.vertices[info.sigmaRightTarget].label)
      A.coFrobeniusRight = false;
  }
  return A;
}

// ---------------------------------------------------------------- gallery

namespace {

GraphSpec labeledLine(const std::vector<int>& labels) {
  if (labels.empty()) throw Error("BadArgument", "labeled-line needs at least one label");
  GraphSpec G;
  for (size_t i = 0; i < labels.size(); ++i)
    G.vertices.push_back({"a" + std::to_string(i), labels[i]});
  for (size_t i = 0; i + 1 < labels.size(); ++i)
    G.edges.push_back({"m" + std::to_string(i), G.vertices[i].name, G.vertices[i + 1].name});
  G.boundary.insert(G.vertices.front().name);
  G.boundary.insert(G.vertices.back().name);
  return G;
}

GraphSpec xLineWithY(int radius) {
  if (radius < 1) throw Error("BadArgument", "x-line-with-y needs radius >= 1");
  GraphSpec G;
  for (int i = -radius; i <= radius; ++i)
    G.vertices.push_back({"x" + std::to_string(i), 1});
  G.vertices.push_back({"y0", 1});
  for (int i = -radius; i < radius; ++i)
    G.edges.push_back({"e" + std::to_string(i), "x" + std::to_string(i),
                       "x" + std::to_string(i + 1)});
  G.edges.push_back({"ey", "x0", "y0"});
  G.boundary.insert("x" + std::to_string(-radius));
  G.boundary.insert("x" + std::to_string(radius));
  return G;
}

GraphSpec halfLine(int n) {
  if (n < 1) throw Error("BadArgument", "half-line needs length >= 1");
  GraphSpec G;
  for (int i = 0; i <= n; ++i) G.vertices.push_back({"v" + std::to_string(i), 1});
  for (int i = 0; i < n; ++i)
    G.edges.push_back({"m" + std::to_string(i), "v" + std::to_string(i),
                       "v" + std::to_string(i + 1)});
  G.boundary.insert("v" + std::to_string(n));
  return G;
}

GraphSpec rootedTree(int depth, int branching) {
  if (depth < 1 || branching < 1) throw Error("BadArgument", "rooted-tree needs depth, branching >= 1");
  GraphSpec G;
  // the full tree branches over all of N at every vertex, so every window
  // vertex sits on the truncation frontier
  std::vector<std::string> level{"r"};
  G.vertices.push_back({"r", 1});
  int edge = 0;
  for (int d = 0; d < depth; ++d) {
    std::vector<std::string> next;
    for (const auto& p : level)
      for (int b = 0; b < branching; ++b) {
        std::string child = p + "." + std::to_string(b);
        G.vertices.push_back({child, 1});
        G.edges.push_back({"t" + std::to_string(edge++), p, child});
        next.push_back(child);
      }
    level = std::move(next);
  }
  for (const auto& v : G.vertices) G.boundary.insert(v.name);
  return G;
}

GraphSpec wTree(int copies) {
  if (copies < 1) throw Error("BadArgument", "w-tree needs copies >= 1");
  GraphSpec G;
  int edge = 0;
  std::string glue;  // out-leaf of the previous copy, reused as an in-leaf
  for (int k = 0; k < copies; ++k) {
    std::string p = "w" + std::to_string(k);
    G.vertices.push_back({p + ".c", 1});
    std::vector<std::string> ins = {p + ".i0", p + ".i1"};
    if (!glue.empty()) ins[0] = glue;
    for (const auto& v : ins) {
      if (v != glue) G.vertices.push_back({v, 1});
      G.edges.push_back({"g" + std::to_string(edge++), v, p + ".c"});
    }
    for (const auto& v : {p + ".o0", p + ".o1"}) {
      G.vertices.push_back({v, 1});
      G.edges.push_back({"g" + std::to_string(edge++), p + ".c", v});
    }
    glue = p + ".o1";
  }
  for (const auto& v : G.vertices) G.boundary.insert(v.name);
  return G;
}

}  // namespace

std::vector<std::string> exampleGalleryNames() {
  return {"primitives-fan", "labeled-line", "x-line-with-y", "half-line", "rooted-tree",
          "w-tree"};
}

GalleryItem exampleGallery(const std::string& name, const std::vector<int>& params) {
  auto arg = [&](size_t i, int dflt) {
    return i < params.size() ? params[i] : dflt;
  };
  GalleryItem item;
  if (name == "primitives-fan") {
    item.coalg = buildPrimitivesFan(arg(0, 3));
  } else if (name == "labeled-line") {
    item.graph = labeledLine(params.empty() ? std::vector<int>{1, 2, 3} : params);
  } else if (name == "x-line-with-y") {
    item.graph = xLineWithY(arg(0, 1));
  } else if (name == "half-line") {
    item.graph = halfLine(arg(0, 3));
  } else if (name == "rooted-tree") {
    item.graph = rootedTree(arg(0, 2), arg(1, 2));
  } else if (name == "w-tree") {
    item.graph = wTree(arg(0, 2));
  } else {
    throw Error("UnknownExample", name);
  }
  if (item.graph) validateGraphSpec(*item.graph);
  return item;
}

}  // namespace cofrob
