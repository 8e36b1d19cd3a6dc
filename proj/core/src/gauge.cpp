#include "stackcore/gauge.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

namespace stk::gauge {

namespace {

long long powChecked(int b, int k, const char* what) {
  long long r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > (1LL << 40) / b) throw StructuralError(std::string(what) + ": enumeration too large");
    r *= b;
  }
  return r;
}

cx::Cochain decodeC(Id code, int cells, int b) {
  cx::Cochain c(static_cast<size_t>(cells));
  long long v = code;
  for (int i = 0; i < cells; ++i) {
    c[static_cast<size_t>(i)] = static_cast<int>(v % b);
    v /= b;
  }
  return c;
}

Id encodeC(const cx::Cochain& c, int b) {
  long long v = 0;
  for (size_t i = c.size(); i-- > 0;) v = v * b + c[i];
  return static_cast<Id>(v);
}

// Cellular map on a face-free complex determined by its node assignment;
// fails when some edge image is neither an edge nor a node of the target.
cx::Map mapFromNodes(const cx::Complex& S, const cx::Complex& D, std::vector<Id> nodes,
                     bool* ok = nullptr) {
  if (ok) *ok = true;
  cx::Map m;
  m.node = std::move(nodes);
  m.edge.assign(S.edge.size(), kNone);
  m.edge_sign.assign(S.edge.size(), 0);
  m.edge_node.assign(S.edge.size(), kNone);
  m.face.assign(S.face.size(), kNone);
  m.face_sign.assign(S.face.size(), 0);
  if (!S.face.empty()) throw StructuralError("mapFromNodes: source carries faces");
  for (size_t e = 0; e < S.edge.size(); ++e) {
    Id fa = m.node[static_cast<size_t>(S.edge[e].a)];
    Id fb = m.node[static_cast<size_t>(S.edge[e].b)];
    if (fa == fb) {
      m.edge_node[e] = fa;
      continue;
    }
    bool found = false;
    for (size_t d = 0; d < D.edge.size(); ++d) {
      if (D.edge[d].a == fa && D.edge[d].b == fb) {
        m.edge[e] = static_cast<Id>(d);
        m.edge_sign[e] = 1;
        found = true;
        break;
      }
      if (D.edge[d].a == fb && D.edge[d].b == fa) {
        m.edge[e] = static_cast<Id>(d);
        m.edge_sign[e] = -1;
        found = true;
        break;
      }
    }
    if (!found) {
      if (!ok) throw StructuralError("mapFromNodes: edge image is not a cell");
      *ok = false;
      return m;
    }
  }
  return m;
}

// All cellular maps between face-free complexes.
std::vector<cx::Map> allMaps(const cx::Complex& S, const cx::Complex& D) {
  std::vector<cx::Map> out;
  std::vector<Id> nodes(static_cast<size_t>(S.nodes), 0);
  while (true) {
    bool ok = false;
    cx::Map m = mapFromNodes(S, D, nodes, &ok);
    if (ok) out.push_back(std::move(m));
    int i = 0;
    for (; i < S.nodes; ++i) {
      if (++nodes[static_cast<size_t>(i)] < D.nodes) break;
      nodes[static_cast<size_t>(i)] = 0;
    }
    if (i == S.nodes) break;
  }
  return out;
}

}  // namespace

std::string Calc::name() const {
  if (lattice()) return "Z" + std::to_string(q) + "-lattice";
  return "order" + std::to_string(G.n) + "-constant";
}

Calc latticeCalc(int q) {
  if (q < 2) throw StructuralError("latticeCalc: modulus must be at least 2");
  Calc c;
  c.q = q;
  return c;
}

Calc finiteCalc(grpd::FinGroup G) {
  Calc c;
  c.q = 0;
  c.G = std::move(G);
  return c;
}

std::vector<int> digitsOf(long long code, int k, int b) {
  std::vector<int> d(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    d[static_cast<size_t>(i)] = static_cast<int>(code % b);
    code /= b;
  }
  return d;
}

long long codeOf(const std::vector<int>& digits, int b) {
  long long v = 0;
  for (size_t i = digits.size(); i-- > 0;) v = v * b + digits[i];
  return v;
}

int Dom::gaugeDigits() const { return calc.lattice() ? prod.cx.nodes : n_comp; }

long long Dom::nGauge() const {
  int b = calc.lattice() ? calc.q : calc.G.n;
  return powChecked(b, gaugeDigits(), "gauge group");
}

Id Dom::gUnit() const {
  if (calc.lattice()) return 0;
  std::vector<int> d(static_cast<size_t>(n_comp), calc.G.e);
  return static_cast<Id>(codeOf(d, calc.G.n));
}

Id Dom::gMul(Id a, Id b) const {
  int k = gaugeDigits();
  if (calc.lattice()) {
    auto da = digitsOf(a, k, calc.q);
    auto db = digitsOf(b, k, calc.q);
    for (int i = 0; i < k; ++i)
      da[static_cast<size_t>(i)] = (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % calc.q;
    return static_cast<Id>(codeOf(da, calc.q));
  }
  auto da = digitsOf(a, k, calc.G.n);
  auto db = digitsOf(b, k, calc.G.n);
  for (int i = 0; i < k; ++i)
    da[static_cast<size_t>(i)] = calc.G.times(da[static_cast<size_t>(i)], db[static_cast<size_t>(i)]);
  return static_cast<Id>(codeOf(da, calc.G.n));
}

Id Dom::gInv(Id a) const {
  int k = gaugeDigits();
  if (calc.lattice()) {
    auto d = digitsOf(a, k, calc.q);
    for (int i = 0; i < k; ++i)
      d[static_cast<size_t>(i)] = (calc.q - d[static_cast<size_t>(i)]) % calc.q;
    return static_cast<Id>(codeOf(d, calc.q));
  }
  auto d = digitsOf(a, k, calc.G.n);
  for (int i = 0; i < k; ++i)
    d[static_cast<size_t>(i)] = calc.G.inv[static_cast<size_t>(d[static_cast<size_t>(i)])];
  return static_cast<Id>(codeOf(d, calc.G.n));
}

long long Dom::nForm(int p, bool vert) const {
  if (!calc.lattice()) return 1;
  int cells = vert ? prod.vertCells(p) : prod.cx.cells(p);
  return powChecked(calc.q, cells, "form module");
}

Id Dom::fAdd(int p, bool vert, Id a, Id b) const {
  if (!calc.lattice()) return 0;
  int cells = vert ? prod.vertCells(p) : prod.cx.cells(p);
  return encodeC(cx::addC(decodeC(a, cells, calc.q), decodeC(b, cells, calc.q), calc.q), calc.q);
}

Id Dom::fSub(int p, bool vert, Id a, Id b) const {
  if (!calc.lattice()) return 0;
  int cells = vert ? prod.vertCells(p) : prod.cx.cells(p);
  return encodeC(cx::subC(decodeC(a, cells, calc.q), decodeC(b, cells, calc.q), calc.q), calc.q);
}

Id Dom::actConn(Id A, Id g, bool vert) const {
  if (!calc.lattice()) return A;
  int cells = vert ? prod.vertCells(1) : prod.cx.cells(1);
  cx::Cochain gc = decodeC(g, prod.cx.nodes, calc.q);
  cx::Cochain dg = vert ? cx::dVert0(prod, gc, calc.q) : cx::d0(prod.cx, gc, calc.q);
  return encodeC(cx::addC(decodeC(A, cells, calc.q), dg, calc.q), calc.q);
}

Id Dom::actAd(Id w, Id) const { return w; }

Id Dom::curvVert(Id A) const {
  if (!calc.lattice()) return 0;
  cx::Cochain Ac = decodeC(A, prod.vertCells(1), calc.q);
  return encodeC(cx::dVert1(prod, Ac, calc.q), calc.q);
}

Dom makeDom(const Calc& c, const cx::Complex& V, const cx::Complex& U) {
  Dom d;
  d.calc = c;
  d.prod = cx::productComplex(V, U);
  d.comp_of = cx::componentOf(d.prod.cx);
  d.n_comp = d.comp_of.empty() ? 0 : *std::max_element(d.comp_of.begin(), d.comp_of.end()) + 1;
  d.comp_rep.assign(static_cast<size_t>(d.n_comp), kNone);
  for (Id n = 0; n < d.prod.cx.nodes; ++n)
    if (d.comp_rep[static_cast<size_t>(d.comp_of[static_cast<size_t>(n)])] == kNone)
      d.comp_rep[static_cast<size_t>(d.comp_of[static_cast<size_t>(n)])] = n;
  return d;
}

DomMap domMap(const Dom& S, const Dom& D, const cx::Map& v, const cx::Map& u) {
  DomMap m;
  m.v = v;
  m.u = u;
  m.prod = cx::productMap(S.prod, D.prod, v, u);
  return m;
}

Id gPull(const Dom& S, const Dom& D, const DomMap& m, Id g) {
  if (S.calc.lattice()) {
    cx::Cochain gc = decodeC(g, D.prod.cx.nodes, D.calc.q);
    return encodeC(cx::pull0(m.prod, gc, S.calc.q), S.calc.q);
  }
  auto gd = digitsOf(g, D.n_comp, D.calc.G.n);
  std::vector<int> out(static_cast<size_t>(S.n_comp));
  for (int c = 0; c < S.n_comp; ++c) {
    Id img = m.prod.node[static_cast<size_t>(S.comp_rep[static_cast<size_t>(c)])];
    out[static_cast<size_t>(c)] = gd[static_cast<size_t>(D.comp_of[static_cast<size_t>(img)])];
  }
  return static_cast<Id>(codeOf(out, S.calc.G.n));
}

Id fPull(const Dom& S, const Dom& D, const DomMap& m, int p, bool vert, Id w) {
  if (!S.calc.lattice()) return 0;
  int q = S.calc.q;
  int dcells = vert ? D.prod.vertCells(p) : D.prod.cx.cells(p);
  cx::Cochain wc = decodeC(w, dcells, q);
  cx::Cochain out;
  if (p == 0) {
    out = cx::pull0(m.prod, wc, q);
  } else if (p == 1) {
    out = vert ? cx::pullVert1(S.prod, D.prod, m.v, m.u, wc, q) : cx::pull1(m.prod, wc, q);
  } else if (p == 2) {
    out = vert ? cx::pullVert2(S.prod, D.prod, m.v, m.u, wc, q) : cx::pull2(m.prod, wc, q);
  } else {
    throw StructuralError("fPull: degree out of range");
  }
  return encodeC(out, q);
}

int Atlas::pairIndex(int i, int j) const {
  if (!(0 <= i && i < j && j < charts())) throw StructuralError("pairIndex: bad chart pair");
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += charts() - 1 - a;
  return idx + (j - i - 1);
}

int Atlas::tripleIndex(int i, int j, int k) const {
  if (!(0 <= i && i < j && j < k && k < charts()))
    throw StructuralError("tripleIndex: bad chart triple");
  int idx = 0;
  int n = charts();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (a == i && b == j && c == k) return idx;
        ++idx;
      }
  throw StructuralError("tripleIndex: unreachable");
}

std::string Atlas::validate() const {
  int n = charts();
  if (n == 0) return "atlas " + name + ": no charts";
  if (static_cast<int>(causally_convex.size()) != n)
    return "atlas " + name + ": causal flags do not match charts";
  for (int i = 0; i < n; ++i) {
    std::string e = chart[static_cast<size_t>(i)].validate();
    if (!e.empty()) return "atlas " + name + " chart " + std::to_string(i) + ": " + e;
  }
  if (static_cast<int>(pair.size()) != n * (n - 1) / 2)
    return "atlas " + name + ": pair table has wrong size";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Overlap& o = pair[static_cast<size_t>(pairIndex(i, j))];
      if (o.empty) continue;
      std::string tag = "atlas " + name + " pair " + std::to_string(i) + "," + std::to_string(j);
      std::string e = o.cpx.validate();
      if (!e.empty()) return tag + ": " + e;
      e = o.into_a.validate(o.cpx, chart[static_cast<size_t>(i)]);
      if (!e.empty()) return tag + " into_a: " + e;
      e = o.into_b.validate(o.cpx, chart[static_cast<size_t>(j)]);
      if (!e.empty()) return tag + " into_b: " + e;
    }
  int nt = n * (n - 1) * (n - 2) / 6;
  if (static_cast<int>(triple.size()) != nt)
    return "atlas " + name + ": triple table has wrong size";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const TripleOverlap& t = triple[static_cast<size_t>(tripleIndex(i, j, k))];
        if (t.empty) continue;
        std::string tag = "atlas " + name + " triple " + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k);
        std::string e = t.cpx.validate();
        if (!e.empty()) return tag + ": " + e;
        const Overlap& ab = pair[static_cast<size_t>(pairIndex(i, j))];
        const Overlap& ac = pair[static_cast<size_t>(pairIndex(i, k))];
        const Overlap& bc = pair[static_cast<size_t>(pairIndex(j, k))];
        if (ab.empty || ac.empty || bc.empty) return tag + ": face of a triple is empty";
        e = t.to_ab.validate(t.cpx, ab.cpx);
        if (!e.empty()) return tag + " to_ab: " + e;
        e = t.to_ac.validate(t.cpx, ac.cpx);
        if (!e.empty()) return tag + " to_ac: " + e;
        e = t.to_bc.validate(t.cpx, bc.cpx);
        if (!e.empty()) return tag + " to_bc: " + e;
        if (!cx::sameMap(cx::composeMaps(ab.into_a, t.to_ab), cx::composeMaps(ac.into_a, t.to_ac)))
          return tag + ": faces disagree in chart " + std::to_string(i);
        if (!cx::sameMap(cx::composeMaps(ab.into_b, t.to_ab), cx::composeMaps(bc.into_a, t.to_bc)))
          return tag + ": faces disagree in chart " + std::to_string(j);
        if (!cx::sameMap(cx::composeMaps(ac.into_b, t.to_ac), cx::composeMaps(bc.into_b, t.to_bc)))
          return tag + ": faces disagree in chart " + std::to_string(k);
      }
  return {};
}

Atlas lineOneChartAtlas() {
  Atlas a;
  a.name = "line-1chart";
  a.chart = {cx::pathComplex(1)};
  a.causally_convex = {true};
  return a;
}

Atlas lineTwoChartAtlas() {
  Atlas a;
  a.name = "line-2chart";
  a.chart = {cx::pathComplex(2), cx::pathComplex(2)};
  a.causally_convex = {true, true};
  Overlap o;
  o.empty = false;
  o.cpx = cx::pathComplex(1);
  o.into_a = mapFromNodes(o.cpx, a.chart[0], {1, 2});
  o.into_b = mapFromNodes(o.cpx, a.chart[1], {0, 1});
  a.pair = {std::move(o)};
  return a;
}

Atlas circleThreeArcAtlas() {
  Atlas a;
  a.name = "circle-3arc";
  a.chart = {cx::pathComplex(1), cx::pathComplex(1), cx::pathComplex(1)};
  a.causally_convex = {true, true, true};
  auto point = [&](int ca, Id na, int cb, Id nb) {
    Overlap o;
    o.empty = false;
    o.cpx = cx::pointComplex();
    o.into_a = mapFromNodes(o.cpx, a.chart[static_cast<size_t>(ca)], {na});
    o.into_b = mapFromNodes(o.cpx, a.chart[static_cast<size_t>(cb)], {nb});
    return o;
  };
  a.pair.resize(3);
  a.pair[static_cast<size_t>(0)] = point(0, 1, 1, 0);  // (0,1)
  a.pair[static_cast<size_t>(1)] = point(0, 0, 2, 1);  // (0,2)
  a.pair[static_cast<size_t>(2)] = point(1, 1, 2, 0);  // (1,2)
  a.triple.resize(1);
  return a;
}

Atlas squareOneChartAtlas() {
  Atlas a;
  a.name = "square-1chart";
  a.chart = {cx::rectComplex(1, 1)};
  a.causally_convex = {true};
  return a;
}

std::string AtlasEmbedding::validate() const {
  if (from == nullptr || to == nullptr) return "embedding: missing atlas";
  int n = from->charts();
  if (static_cast<int>(chart_to.size()) != n || static_cast<int>(chart_map.size()) != n)
    return "embedding: chart assignment has wrong size";
  for (int i = 0; i < n; ++i) {
    int t = chart_to[static_cast<size_t>(i)];
    if (t < 0 || t >= to->charts()) return "embedding: chart image out of range";
    std::string e = chart_map[static_cast<size_t>(i)].validate(
        from->chart[static_cast<size_t>(i)], to->chart[static_cast<size_t>(t)]);
    if (!e.empty()) return "embedding chart " + std::to_string(i) + ": " + e;
  }
  size_t t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Overlap& o = from->pair[static_cast<size_t>(from->pairIndex(i, j))];
      if (o.empty) continue;
      std::string tag = "embedding pair " + std::to_string(i) + "," + std::to_string(j);
      if (t >= pair_map.size()) return tag + ": missing overlap map";
      int a = chart_to[static_cast<size_t>(i)];
      int b = chart_to[static_cast<size_t>(j)];
      if (a == b) return tag + ": collapsing distinct charts is unsupported";
      int lo = std::min(a, b), hi = std::max(a, b);
      const Overlap& p = to->pair[static_cast<size_t>(to->pairIndex(lo, hi))];
      if (p.empty) return tag + ": image overlap is empty";
      const cx::Map& leg_a = (a == lo) ? p.into_a : p.into_b;
      const cx::Map& leg_b = (a == lo) ? p.into_b : p.into_a;
      std::string e = pair_map[t].validate(o.cpx, p.cpx);
      if (!e.empty()) return tag + ": " + e;
      if (!cx::sameMap(cx::composeMaps(leg_a, pair_map[t]),
                       cx::composeMaps(chart_map[static_cast<size_t>(i)], o.into_a)))
        return tag + ": square over chart " + std::to_string(i) + " does not commute";
      if (!cx::sameMap(cx::composeMaps(leg_b, pair_map[t]),
                       cx::composeMaps(chart_map[static_cast<size_t>(j)], o.into_b)))
        return tag + ": square over chart " + std::to_string(j) + " does not commute";
      ++t;
    }
  if (t != pair_map.size()) return "embedding: extra overlap maps";
  for (const TripleOverlap& tr : from->triple)
    if (!tr.empty) return "embedding: triple overlaps are unsupported";
  return {};
}

ParamModel paramSite(int level) {
  if (level < 2 || level > 4) throw StructuralError("paramSite: level must be 2, 3 or 4");

  struct Spec {
    std::string name;
    cx::Complex grid;
    std::vector<Id> anchor;  // per point
  };
  std::vector<Spec> spec;
  spec.push_back({"pt", cx::pointComplex(), {0}});
  spec.push_back({"D", cx::pointComplex(), {0, 0}});
  if (level >= 3) spec.push_back({"T", cx::pathComplex(1), {0, 1}});
  if (level >= 4) spec.push_back({"T3", cx::pathComplex(2), {0, 1, 2}});
  int n_obj = static_cast<int>(spec.size());

  struct Entry {
    Id src, dst;
    cx::Map grid;
    std::vector<Id> point;
  };
  std::vector<Entry> entry;
  std::map<std::tuple<Id, Id, std::vector<Id>, std::vector<Id>>, Id> index;
  for (Id s = 0; s < n_obj; ++s)
    for (Id d = 0; d < n_obj; ++d) {
      const Spec& S = spec[static_cast<size_t>(s)];
      const Spec& D = spec[static_cast<size_t>(d)];
      for (cx::Map& gm : allMaps(S.grid, D.grid)) {
        std::vector<std::vector<Id>> choice(S.anchor.size());
        for (size_t p = 0; p < S.anchor.size(); ++p) {
          Id img = gm.node[static_cast<size_t>(S.anchor[p])];
          for (size_t q = 0; q < D.anchor.size(); ++q)
            if (D.anchor[q] == img) choice[p].push_back(static_cast<Id>(q));
        }
        std::vector<Id> pm(S.anchor.size(), 0);
        std::vector<size_t> pick(S.anchor.size(), 0);
        while (true) {
          for (size_t p = 0; p < S.anchor.size(); ++p) pm[p] = choice[p][pick[p]];
          index[{s, d, gm.node, pm}] = static_cast<Id>(entry.size());
          entry.push_back({s, d, gm, pm});
          size_t p = 0;
          for (; p < S.anchor.size(); ++p) {
            if (++pick[p] < choice[p].size()) break;
            pick[p] = 0;
          }
          if (p == S.anchor.size()) break;
        }
      }
    }

  auto find = [&](Id s, Id d, const std::vector<Id>& nodes, const std::vector<Id>& points) {
    auto it = index.find({s, d, nodes, points});
    if (it == index.end()) throw StructuralError("paramSite: composite not in morphism table");
    return it->second;
  };

  std::vector<grpd::Mor> mors;
  std::vector<std::string> mor_labels;
  for (const Entry& e : entry) {
    mors.push_back({e.src, e.dst});
    std::string lab = spec[static_cast<size_t>(e.src)].name + ">" +
                      spec[static_cast<size_t>(e.dst)].name + "[";
    for (Id n : e.grid.node) lab += static_cast<char>('0' + n);
    lab += "|";
    for (Id p : e.point) lab += static_cast<char>('0' + p);
    lab += "]";
    mor_labels.push_back(std::move(lab));
  }

  std::vector<Id> idents(static_cast<size_t>(n_obj));
  for (Id u = 0; u < n_obj; ++u) {
    const Spec& S = spec[static_cast<size_t>(u)];
    std::vector<Id> nodes(static_cast<size_t>(S.grid.nodes));
    for (Id n = 0; n < S.grid.nodes; ++n) nodes[static_cast<size_t>(n)] = n;
    std::vector<Id> points(S.anchor.size());
    for (size_t p = 0; p < points.size(); ++p) points[p] = static_cast<Id>(p);
    idents[static_cast<size_t>(u)] = find(u, u, nodes, points);
  }

  std::vector<std::array<Id, 3>> comp;
  for (Id f = 0; f < static_cast<Id>(entry.size()); ++f)
    for (Id g = 0; g < static_cast<Id>(entry.size()); ++g) {
      const Entry& F = entry[static_cast<size_t>(f)];
      const Entry& G = entry[static_cast<size_t>(g)];
      if (F.dst != G.src) continue;
      cx::Map gm = cx::composeMaps(G.grid, F.grid);
      std::vector<Id> pm(F.point.size());
      for (size_t p = 0; p < pm.size(); ++p)
        pm[p] = G.point[static_cast<size_t>(F.point[p])];
      comp.push_back({g, f, find(F.src, G.dst, gm.node, pm)});
    }

  std::vector<std::string> obj_labels;
  for (const Spec& s : spec) obj_labels.push_back(s.name);

  ParamModel pm;
  pm.site.cat = site::Category::make(n_obj, std::move(mors), std::move(idents), std::move(comp),
                                     std::move(obj_labels), std::move(mor_labels));
  pm.site.pt = 0;
  pm.site.covers_of.resize(static_cast<size_t>(n_obj));
  pm.site.refines_of.resize(static_cast<size_t>(n_obj));
  for (Id u = 0; u < n_obj; ++u) {
    site::Cover triv;
    triv.base = u;
    triv.member_obj = {u};
    triv.member_mor = {pm.site.cat.identity(u)};
    pm.site.covers_of[static_cast<size_t>(u)].push_back(std::move(triv));
  }
  for (const Spec& sp : spec) pm.grid.push_back(sp.grid);
  for (const Entry& e : entry) pm.gridmap.push_back(e.grid);

  if (level >= 4) {
    Id t = 2, t3 = 3;
    site::Cover cech;
    cech.base = t3;
    cech.member_obj = {t, t};
    cech.member_mor = {find(t, t3, {0, 1}, {0, 1}), find(t, t3, {1, 2}, {1, 2})};
    site::PairCell pc;
    pc.obj = 0;
    pc.to_first = find(0, t, {1}, {1});
    pc.to_second = find(0, t, {0}, {0});
    cech.pair = {pc};
    pm.site.covers_of[static_cast<size_t>(t3)].push_back(std::move(cech));
    pm.site.refines_of[static_cast<size_t>(t3)].push_back({1, 0});
  }

  std::string err = pm.site.validate();
  if (!err.empty()) throw StructuralError("paramSite: " + err);
  return pm;
}

grpd::GroupoidPtr actionGroupoid(long long n_obj, long long n_gauge, Id unit,
                                 const std::function<Id(Id, Id)>& act,
                                 const std::function<Id(Id, Id)>& mul,
                                 const std::function<Id(Id)>& inv) {
  if (n_obj <= 0 || n_gauge <= 0) throw StructuralError("actionGroupoid: empty action data");
  if (n_obj * n_gauge > 50'000'000) throw StructuralError("actionGroupoid: too many morphisms");
  int N = static_cast<int>(n_obj);
  Id ng = static_cast<Id>(n_gauge);
  std::vector<grpd::Mor> mors;
  mors.reserve(static_cast<size_t>(n_obj * n_gauge));
  std::vector<Id> invs(static_cast<size_t>(n_obj * n_gauge));
  for (Id x = 0; x < N; ++x)
    for (Id g = 0; g < ng; ++g) {
      Id y = act(x, g);
      mors.push_back({x, y});
      invs[static_cast<size_t>(x) * static_cast<size_t>(ng) + static_cast<size_t>(g)] =
          y * ng + inv(g);
    }
  std::vector<Id> idents(static_cast<size_t>(n_obj));
  for (Id x = 0; x < N; ++x) idents[static_cast<size_t>(x)] = x * ng + unit;
  auto comp = [ng, mul](Id m2, Id m1) {
    return (m1 / ng) * ng + mul(m1 % ng, m2 % ng);
  };
  return std::make_shared<grpd::Groupoid>(
      grpd::Groupoid::make(N, std::move(mors), std::move(idents), std::move(invs), comp));
}

psh::Psh classifyingPsh(const ParamModel& pm, const Calc& c, Flavor f, int p) {
  const site::Site& s = pm.site;
  int n_obj = s.cat.objects();
  std::vector<Dom> dom;
  dom.reserve(static_cast<size_t>(n_obj));
  for (Id u = 0; u < n_obj; ++u)
    dom.push_back(makeDom(c, pm.grid[static_cast<size_t>(u)], cx::pointComplex()));

  auto nFormAt = [&](Id u) -> long long {
    switch (f) {
      case Flavor::bundle: return 1;
      case Flavor::connection: return dom[static_cast<size_t>(u)].nForm(1, false);
      case Flavor::adjoint: return dom[static_cast<size_t>(u)].nForm(p, false);
    }
    return 1;
  };

  psh::Psh X;
  X.on = &s;
  for (Id u = 0; u < n_obj; ++u) {
    const Dom& d = dom[static_cast<size_t>(u)];
    auto act = [&d, f](Id x, Id g) {
      return f == Flavor::connection ? d.actConn(x, g, false) : d.actAd(x, g);
    };
    auto mul = [d](Id a, Id b) { return d.gMul(a, b); };
    auto inv = [&d](Id a) { return d.gInv(a); };
    X.stage.push_back(actionGroupoid(nFormAt(u), d.nGauge(), d.gUnit(), act, mul, inv));
  }

  for (Id m = 0; m < s.cat.morphisms(); ++m) {
    Id a = s.cat.src(m), b = s.cat.dst(m);
    const Dom& da = dom[static_cast<size_t>(a)];
    const Dom& db = dom[static_cast<size_t>(b)];
    DomMap dm = domMap(da, db, pm.gridmap[static_cast<size_t>(m)],
                       cx::identityMap(cx::pointComplex()));
    Id nga = static_cast<Id>(da.nGauge());
    Id ngb = static_cast<Id>(db.nGauge());
    grpd::Functor r;
    r.A = X.stage[static_cast<size_t>(b)].get();
    r.B = X.stage[static_cast<size_t>(a)].get();
    r.on_obj.resize(static_cast<size_t>(r.A->objects()));
    for (Id x = 0; x < r.A->objects(); ++x)
      r.on_obj[static_cast<size_t>(x)] =
          f == Flavor::bundle ? 0 : fPull(da, db, dm, f == Flavor::connection ? 1 : p, false, x);
    r.on_mor.resize(static_cast<size_t>(r.A->morphisms()));
    for (Id mm = 0; mm < r.A->morphisms(); ++mm) {
      Id x = mm / ngb, g = mm % ngb;
      r.on_mor[static_cast<size_t>(mm)] =
          r.on_obj[static_cast<size_t>(x)] * nga + gPull(da, db, dm, g);
    }
    X.restriction.push_back(std::move(r));
  }

  std::string err = X.validate();
  if (!err.empty()) throw StructuralError("classifyingPsh: " + err);
  return X;
}

}  // namespace stk::gauge
