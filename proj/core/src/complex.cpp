#include "stackcore/complex.hpp"

#include <numeric>

namespace stk::cx {

int Complex::cells(int p) const {
  switch (p) {
    case 0: return nodes;
    case 1: return static_cast<int>(edge.size());
    case 2: return static_cast<int>(face.size());
    default: return 0;
  }
}

std::string Complex::validate() const {
  if (nodes < 0) return "negative node count";
  for (size_t e = 0; e < edge.size(); ++e) {
    if (edge[e].a < 0 || edge[e].a >= nodes || edge[e].b < 0 || edge[e].b >= nodes)
      return "edge " + std::to_string(e) + " has endpoints out of range";
  }
  for (size_t f = 0; f < face.size(); ++f) {
    const Face& F = face[f];
    std::string where = "face " + std::to_string(f);
    if (F.boundary.empty()) return where + " has an empty boundary";
    std::vector<int> node_bd(static_cast<size_t>(nodes), 0);
    for (auto [e, s] : F.boundary) {
      if (e < 0 || e >= cells(1)) return where + " references a missing edge";
      if (s != 1 && s != -1) return where + " has a non-unit boundary sign";
      node_bd[static_cast<size_t>(edge[static_cast<size_t>(e)].b)] += s;
      node_bd[static_cast<size_t>(edge[static_cast<size_t>(e)].a)] -= s;
    }
    for (int v : node_bd)
      if (v != 0) return where + " has a non-closed boundary";
    if (F.wedge_a != kNone && (F.wedge_a < 0 || F.wedge_a >= cells(1)))
      return where + " has a wedge edge out of range";
    if (F.wedge_b != kNone && (F.wedge_b < 0 || F.wedge_b >= cells(1)))
      return where + " has a wedge edge out of range";
  }
  return {};
}

Complex pointComplex() {
  Complex c;
  c.nodes = 1;
  return c;
}

Complex pathComplex(int n_edges) {
  if (n_edges < 0) throw StructuralError("pathComplex: negative length");
  Complex c;
  c.nodes = n_edges + 1;
  for (Id i = 0; i < n_edges; ++i) c.edge.push_back({i, i + 1});
  return c;
}

Complex rectComplex(int nx, int ny) {
  if (nx < 1 || ny < 1) throw StructuralError("rectComplex: need at least one cell per axis");
  Complex c;
  int w = nx + 1;
  c.nodes = w * (ny + 1);
  auto node = [w](int x, int y) { return static_cast<Id>(y * w + x); };
  // x-edges first, row by row, then y-edges.
  auto ex = [&](int x, int y) { return static_cast<Id>(y * nx + x); };
  auto ey = [&](int x, int y) { return static_cast<Id>(nx * (ny + 1) + y * w + x); };
  for (int y = 0; y <= ny; ++y)
    for (int x = 0; x < nx; ++x) c.edge.push_back({node(x, y), node(x + 1, y)});
  for (int y = 0; y < ny; ++y)
    for (int x = 0; x <= nx; ++x) c.edge.push_back({node(x, y), node(x, y + 1)});
  for (int y = 0; y < ny; ++y)
    for (int x = 0; x < nx; ++x) {
      Face F;
      F.boundary = {{ex(x, y), 1}, {ey(x + 1, y), 1}, {ex(x, y + 1), -1}, {ey(x, y), -1}};
      F.wedge_a = ex(x, y);
      F.wedge_b = ey(x, y);
      c.face.push_back(std::move(F));
    }
  return c;
}

std::string Map::validate(const Complex& S, const Complex& D) const {
  if (static_cast<int>(node.size()) != S.nodes) return "node table size mismatch";
  if (edge.size() != S.edge.size() || edge_sign.size() != S.edge.size() ||
      edge_node.size() != S.edge.size())
    return "edge table size mismatch";
  if (face.size() != S.face.size() || face_sign.size() != S.face.size())
    return "face table size mismatch";
  for (Id v = 0; v < S.nodes; ++v)
    if (node[static_cast<size_t>(v)] < 0 || node[static_cast<size_t>(v)] >= D.nodes)
      return "node image out of range";
  for (size_t e = 0; e < S.edge.size(); ++e) {
    Id fa = node[static_cast<size_t>(S.edge[e].a)];
    Id fb = node[static_cast<size_t>(S.edge[e].b)];
    std::string where = "edge " + std::to_string(e);
    if (edge[e] == kNone) {
      if (edge_sign[e] != 0) return where + ": collapsed edge with a sign";
      if (edge_node[e] != fa || fa != fb) return where + ": collapse target disagrees with endpoints";
      continue;
    }
    if (edge[e] < 0 || edge[e] >= D.cells(1)) return where + ": image out of range";
    const Edge& de = D.edge[static_cast<size_t>(edge[e])];
    if (edge_sign[e] == 1) {
      if (de.a != fa || de.b != fb) return where + ": image endpoints disagree";
    } else if (edge_sign[e] == -1) {
      if (de.a != fb || de.b != fa) return where + ": reversed image endpoints disagree";
    } else {
      return where + ": surviving edge needs sign ±1";
    }
  }
  for (size_t f = 0; f < S.face.size(); ++f) {
    std::string where = "face " + std::to_string(f);
    // Push the boundary chain forward and compare with the image boundary.
    std::vector<int> push(D.edge.size(), 0);
    for (auto [e, s] : S.face[f].boundary)
      if (edge[static_cast<size_t>(e)] != kNone)
        push[static_cast<size_t>(edge[static_cast<size_t>(e)])] += s * edge_sign[static_cast<size_t>(e)];
    if (face[f] == kNone) {
      if (face_sign[f] != 0) return where + ": collapsed face with a sign";
      for (int v : push)
        if (v != 0) return where + ": collapsed face with a surviving boundary";
      continue;
    }
    if (face[f] < 0 || face[f] >= D.cells(2)) return where + ": image out of range";
    if (face_sign[f] != 1 && face_sign[f] != -1) return where + ": surviving face needs sign ±1";
    for (auto [e, s] : D.face[static_cast<size_t>(face[f])].boundary)
      push[static_cast<size_t>(e)] -= face_sign[f] * s;
    for (int v : push)
      if (v != 0) return where + ": boundary chains disagree";
  }
  return {};
}

Map identityMap(const Complex& C) {
  Map m;
  m.node.resize(static_cast<size_t>(C.nodes));
  std::iota(m.node.begin(), m.node.end(), 0);
  m.edge.resize(C.edge.size());
  std::iota(m.edge.begin(), m.edge.end(), 0);
  m.edge_sign.assign(C.edge.size(), 1);
  m.edge_node.assign(C.edge.size(), kNone);
  m.face.resize(C.face.size());
  std::iota(m.face.begin(), m.face.end(), 0);
  m.face_sign.assign(C.face.size(), 1);
  return m;
}

Map composeMaps(const Map& g, const Map& f) {
  Map m;
  m.node.reserve(f.node.size());
  for (Id v : f.node) m.node.push_back(g.node[static_cast<size_t>(v)]);
  size_t ne = f.edge.size();
  m.edge.resize(ne);
  m.edge_sign.resize(ne);
  m.edge_node.resize(ne);
  for (size_t e = 0; e < ne; ++e) {
    if (f.edge[e] == kNone) {
      m.edge[e] = kNone;
      m.edge_sign[e] = 0;
      m.edge_node[e] = g.node[static_cast<size_t>(f.edge_node[e])];
      continue;
    }
    size_t e2 = static_cast<size_t>(f.edge[e]);
    if (g.edge[e2] == kNone) {
      m.edge[e] = kNone;
      m.edge_sign[e] = 0;
      m.edge_node[e] = g.edge_node[e2];
    } else {
      m.edge[e] = g.edge[e2];
      m.edge_sign[e] = f.edge_sign[e] * g.edge_sign[e2];
      m.edge_node[e] = kNone;
    }
  }
  size_t nf = f.face.size();
  m.face.resize(nf);
  m.face_sign.resize(nf);
  for (size_t i = 0; i < nf; ++i) {
    if (f.face[i] == kNone || g.face[static_cast<size_t>(f.face[i])] == kNone) {
      m.face[i] = kNone;
      m.face_sign[i] = 0;
    } else {
      m.face[i] = g.face[static_cast<size_t>(f.face[i])];
      m.face_sign[i] = f.face_sign[i] * g.face_sign[static_cast<size_t>(f.face[i])];
    }
  }
  return m;
}

bool sameMap(const Map& a, const Map& b) {
  return a.node == b.node && a.edge == b.edge && a.edge_sign == b.edge_sign &&
         a.edge_node == b.edge_node && a.face == b.face && a.face_sign == b.face_sign;
}

int Product::vertCells(int p) const {
  switch (p) {
    case 0: return vn * un;
    case 1: return ve * un;
    case 2: return vf * un;
    default: return 0;
  }
}

Product productComplex(const Complex& V, const Complex& U) {
  Product P;
  P.vn = V.nodes;
  P.ve = V.cells(1);
  P.vf = V.cells(2);
  P.un = U.nodes;
  P.ue = U.cells(1);
  P.uf = U.cells(2);
  Complex& c = P.cx;
  c.nodes = P.vn * P.un;
  for (Id e = 0; e < P.ve; ++e)
    for (Id u = 0; u < P.un; ++u)
      c.edge.push_back({P.node(V.edge[static_cast<size_t>(e)].a, u),
                        P.node(V.edge[static_cast<size_t>(e)].b, u)});
  for (Id v = 0; v < P.vn; ++v)
    for (Id e = 0; e < P.ue; ++e)
      c.edge.push_back({P.node(v, U.edge[static_cast<size_t>(e)].a),
                        P.node(v, U.edge[static_cast<size_t>(e)].b)});
  for (Id f = 0; f < P.vf; ++f)
    for (Id u = 0; u < P.un; ++u) {
      const Face& F = V.face[static_cast<size_t>(f)];
      Face out;
      for (auto [e, s] : F.boundary) out.boundary.push_back({P.edgeV(e, u), s});
      out.wedge_a = F.wedge_a == kNone ? kNone : P.edgeV(F.wedge_a, u);
      out.wedge_b = F.wedge_b == kNone ? kNone : P.edgeV(F.wedge_b, u);
      c.face.push_back(std::move(out));
    }
  for (Id e = 0; e < P.ve; ++e)
    for (Id eu = 0; eu < P.ue; ++eu) {
      const Edge& a = V.edge[static_cast<size_t>(e)];
      const Edge& b = U.edge[static_cast<size_t>(eu)];
      Face out;
      out.boundary = {{P.edgeV(e, b.a), 1},
                      {P.edgeU(a.b, eu), 1},
                      {P.edgeV(e, b.b), -1},
                      {P.edgeU(a.a, eu), -1}};
      out.wedge_a = P.edgeV(e, b.a);
      out.wedge_b = P.edgeU(a.a, eu);
      c.face.push_back(std::move(out));
    }
  for (Id v = 0; v < P.vn; ++v)
    for (Id f = 0; f < P.uf; ++f) {
      const Face& F = U.face[static_cast<size_t>(f)];
      Face out;
      for (auto [e, s] : F.boundary) out.boundary.push_back({P.edgeU(v, e), s});
      out.wedge_a = F.wedge_a == kNone ? kNone : P.edgeU(v, F.wedge_a);
      out.wedge_b = F.wedge_b == kNone ? kNone : P.edgeU(v, F.wedge_b);
      c.face.push_back(std::move(out));
    }
  return P;
}

Map productMap(const Product& S, const Product& D, const Map& f, const Map& g) {
  Map m;
  m.node.resize(static_cast<size_t>(S.cx.nodes));
  for (Id v = 0; v < S.vn; ++v)
    for (Id u = 0; u < S.un; ++u)
      m.node[static_cast<size_t>(S.node(v, u))] =
          D.node(f.node[static_cast<size_t>(v)], g.node[static_cast<size_t>(u)]);
  size_t ne = S.cx.edge.size();
  m.edge.assign(ne, kNone);
  m.edge_sign.assign(ne, 0);
  m.edge_node.assign(ne, kNone);
  for (Id e = 0; e < S.ve; ++e)
    for (Id u = 0; u < S.un; ++u) {
      size_t at = static_cast<size_t>(S.edgeV(e, u));
      Id gu = g.node[static_cast<size_t>(u)];
      if (f.edge[static_cast<size_t>(e)] == kNone) {
        m.edge_node[at] = D.node(f.edge_node[static_cast<size_t>(e)], gu);
      } else {
        m.edge[at] = D.edgeV(f.edge[static_cast<size_t>(e)], gu);
        m.edge_sign[at] = f.edge_sign[static_cast<size_t>(e)];
      }
    }
  for (Id v = 0; v < S.vn; ++v)
    for (Id e = 0; e < S.ue; ++e) {
      size_t at = static_cast<size_t>(S.edgeU(v, e));
      Id fv = f.node[static_cast<size_t>(v)];
      if (g.edge[static_cast<size_t>(e)] == kNone) {
        m.edge_node[at] = D.node(fv, g.edge_node[static_cast<size_t>(e)]);
      } else {
        m.edge[at] = D.edgeU(fv, g.edge[static_cast<size_t>(e)]);
        m.edge_sign[at] = g.edge_sign[static_cast<size_t>(e)];
      }
    }
  size_t nf = S.cx.face.size();
  m.face.assign(nf, kNone);
  m.face_sign.assign(nf, 0);
  for (Id f2 = 0; f2 < S.vf; ++f2)
    for (Id u = 0; u < S.un; ++u)
      if (f.face[static_cast<size_t>(f2)] != kNone) {
        size_t at = static_cast<size_t>(S.faceV(f2, u));
        m.face[at] = D.faceV(f.face[static_cast<size_t>(f2)], g.node[static_cast<size_t>(u)]);
        m.face_sign[at] = f.face_sign[static_cast<size_t>(f2)];
      }
  for (Id e = 0; e < S.ve; ++e)
    for (Id eu = 0; eu < S.ue; ++eu)
      if (f.edge[static_cast<size_t>(e)] != kNone && g.edge[static_cast<size_t>(eu)] != kNone) {
        size_t at = static_cast<size_t>(S.faceM(e, eu));
        m.face[at] = D.faceM(f.edge[static_cast<size_t>(e)], g.edge[static_cast<size_t>(eu)]);
        m.face_sign[at] = f.edge_sign[static_cast<size_t>(e)] * g.edge_sign[static_cast<size_t>(eu)];
      }
  for (Id v = 0; v < S.vn; ++v)
    for (Id f2 = 0; f2 < S.uf; ++f2)
      if (g.face[static_cast<size_t>(f2)] != kNone) {
        size_t at = static_cast<size_t>(S.faceU(v, f2));
        m.face[at] = D.faceU(f.node[static_cast<size_t>(v)], g.face[static_cast<size_t>(f2)]);
        m.face_sign[at] = g.face_sign[static_cast<size_t>(f2)];
      }
  return m;
}

int modq(long long v, int q) {
  if (q < 1) throw StructuralError("modq: modulus must be positive");
  long long r = v % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

Cochain zeroCochain(const Complex& C, int p) { return Cochain(static_cast<size_t>(C.cells(p)), 0); }

Cochain addC(const Cochain& a, const Cochain& b, int q) {
  if (a.size() != b.size()) throw StructuralError("addC: size mismatch");
  Cochain r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = modq(a[i] + b[i], q);
  return r;
}

Cochain subC(const Cochain& a, const Cochain& b, int q) {
  if (a.size() != b.size()) throw StructuralError("subC: size mismatch");
  Cochain r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = modq(a[i] - b[i], q);
  return r;
}

Cochain negC(const Cochain& a, int q) {
  Cochain r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = modq(-a[i], q);
  return r;
}

Cochain d0(const Complex& C, const Cochain& a, int q) {
  if (static_cast<int>(a.size()) != C.nodes) throw StructuralError("d0: size mismatch");
  Cochain r(C.edge.size());
  for (size_t e = 0; e < C.edge.size(); ++e)
    r[e] = modq(a[static_cast<size_t>(C.edge[e].b)] - a[static_cast<size_t>(C.edge[e].a)], q);
  return r;
}

Cochain d1(const Complex& C, const Cochain& a, int q) {
  if (a.size() != C.edge.size()) throw StructuralError("d1: size mismatch");
  Cochain r(C.face.size());
  for (size_t f = 0; f < C.face.size(); ++f) {
    long long acc = 0;
    for (auto [e, s] : C.face[f].boundary) acc += static_cast<long long>(s) * a[static_cast<size_t>(e)];
    r[f] = modq(acc, q);
  }
  return r;
}

Cochain pull0(const Map& m, const Cochain& a, int q) {
  Cochain r(m.node.size());
  for (size_t v = 0; v < m.node.size(); ++v) r[v] = modq(a[static_cast<size_t>(m.node[v])], q);
  return r;
}

Cochain pull1(const Map& m, const Cochain& a, int q) {
  Cochain r(m.edge.size(), 0);
  for (size_t e = 0; e < m.edge.size(); ++e)
    if (m.edge[e] != kNone)
      r[e] = modq(static_cast<long long>(m.edge_sign[e]) * a[static_cast<size_t>(m.edge[e])], q);
  return r;
}

Cochain pull2(const Map& m, const Cochain& a, int q) {
  Cochain r(m.face.size(), 0);
  for (size_t f = 0; f < m.face.size(); ++f)
    if (m.face[f] != kNone)
      r[f] = modq(static_cast<long long>(m.face_sign[f]) * a[static_cast<size_t>(m.face[f])], q);
  return r;
}

Cochain dVert0(const Product& P, const Cochain& g, int q) {
  if (static_cast<int>(g.size()) != P.cx.nodes) throw StructuralError("dVert0: size mismatch");
  Cochain r(static_cast<size_t>(P.vertCells(1)));
  for (size_t e = 0; e < r.size(); ++e) {
    const Edge& E = P.cx.edge[e];  // vertical edges are the leading block
    r[e] = modq(g[static_cast<size_t>(E.b)] - g[static_cast<size_t>(E.a)], q);
  }
  return r;
}

Cochain dVert1(const Product& P, const Cochain& A, int q) {
  if (static_cast<int>(A.size()) != P.vertCells(1)) throw StructuralError("dVert1: size mismatch");
  Cochain r(static_cast<size_t>(P.vertCells(2)));
  for (size_t f = 0; f < r.size(); ++f) {
    long long acc = 0;
    for (auto [e, s] : P.cx.face[f].boundary) acc += static_cast<long long>(s) * A[static_cast<size_t>(e)];
    r[f] = modq(acc, q);
  }
  return r;
}

Cochain vertPart(const Product& P, int p, const Cochain& full) {
  if (static_cast<int>(full.size()) != P.cx.cells(p)) throw StructuralError("vertPart: size mismatch");
  return Cochain(full.begin(), full.begin() + P.vertCells(p));
}

Cochain pullVert1(const Product& S, const Product& D, const Map& f, const Map& g,
                  const Cochain& A, int q) {
  if (static_cast<int>(A.size()) != D.vertCells(1)) throw StructuralError("pullVert1: size mismatch");
  Cochain r(static_cast<size_t>(S.vertCells(1)), 0);
  for (Id e = 0; e < S.ve; ++e) {
    if (f.edge[static_cast<size_t>(e)] == kNone) continue;
    Id fe = f.edge[static_cast<size_t>(e)];
    int s = f.edge_sign[static_cast<size_t>(e)];
    for (Id u = 0; u < S.un; ++u)
      r[static_cast<size_t>(S.edgeV(e, u))] = modq(
          static_cast<long long>(s) *
              A[static_cast<size_t>(D.edgeV(fe, g.node[static_cast<size_t>(u)]))],
          q);
  }
  return r;
}

Cochain pullVert2(const Product& S, const Product& D, const Map& f, const Map& g,
                  const Cochain& A, int q) {
  if (static_cast<int>(A.size()) != D.vertCells(2)) throw StructuralError("pullVert2: size mismatch");
  Cochain r(static_cast<size_t>(S.vertCells(2)), 0);
  for (Id f2 = 0; f2 < S.vf; ++f2) {
    if (f.face[static_cast<size_t>(f2)] == kNone) continue;
    Id ff = f.face[static_cast<size_t>(f2)];
    int s = f.face_sign[static_cast<size_t>(f2)];
    for (Id u = 0; u < S.un; ++u)
      r[static_cast<size_t>(S.faceV(f2, u))] = modq(
          static_cast<long long>(s) *
              A[static_cast<size_t>(D.faceV(ff, g.node[static_cast<size_t>(u)]))],
          q);
  }
  return r;
}

std::vector<Id> componentOf(const Complex& C) {
  std::vector<Id> parent(static_cast<size_t>(C.nodes));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Id x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (const Edge& e : C.edge) {
    Id ra = find(e.a), rb = find(e.b);
    if (ra != rb) parent[static_cast<size_t>(ra)] = rb;
  }
  std::vector<Id> comp(static_cast<size_t>(C.nodes), kNone);
  Id next = 0;
  for (Id v = 0; v < C.nodes; ++v) {
    Id r = find(v);
    if (comp[static_cast<size_t>(r)] == kNone) comp[static_cast<size_t>(r)] = next++;
    comp[static_cast<size_t>(v)] = comp[static_cast<size_t>(r)];
  }
  return comp;
}

}  // namespace stk::cx
