#include "stackcore/site.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace stk::site {

namespace {

std::uint64_t pairKey(Id g, Id f) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
         static_cast<std::uint32_t>(f);
}

long long choose2(long long x) { return x * (x - 1) / 2; }

}  // namespace

Category Category::make(int n_obj, std::vector<Mor> mors, std::vector<Id> idents,
                        std::vector<std::array<Id, 3>> comp_triples,
                        std::vector<std::string> obj_labels,
                        std::vector<std::string> mor_labels) {
  Category c;
  c.n_obj_ = n_obj;
  c.mors_ = std::move(mors);
  c.ident_ = std::move(idents);
  if (n_obj < 0) throw StructuralError("category: negative object count");
  for (Id m = 0; m < c.morphisms(); ++m) {
    const Mor& e = c.mors_[static_cast<size_t>(m)];
    if (e.src < 0 || e.src >= n_obj || e.dst < 0 || e.dst >= n_obj)
      throw StructuralError("category: morphism " + std::to_string(m) + " has out-of-range endpoints");
  }
  if (static_cast<int>(c.ident_.size()) != n_obj)
    throw StructuralError("category: identity table size mismatch");
  for (Id x = 0; x < n_obj; ++x) {
    Id e = c.ident_[static_cast<size_t>(x)];
    if (e < 0 || e >= c.morphisms() || c.src(e) != x || c.dst(e) != x)
      throw StructuralError("category: identity of object " + std::to_string(x) + " is not an endomorphism");
  }
  for (const auto& t : comp_triples) {
    Id g = t[0], f = t[1], gf = t[2];
    if (g < 0 || g >= c.morphisms() || f < 0 || f >= c.morphisms() || gf < 0 || gf >= c.morphisms())
      throw StructuralError("category: composition entry out of range");
    if (c.dst(f) != c.src(g)) throw StructuralError("category: composition entry for non-composable pair");
    if (c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g))
      throw StructuralError("category: composite has wrong endpoints");
    if (!c.comp_.emplace(pairKey(g, f), gf).second)
      throw StructuralError("category: duplicate composition entry");
  }
  for (Id m = 0; m < c.morphisms(); ++m) {
    c.comp_.emplace(pairKey(m, c.identity(c.src(m))), m);
    c.comp_.emplace(pairKey(c.identity(c.dst(m)), m), m);
  }
  c.out_.assign(static_cast<size_t>(n_obj), {});
  c.in_.assign(static_cast<size_t>(n_obj), {});
  for (Id m = 0; m < c.morphisms(); ++m) {
    c.out_[static_cast<size_t>(c.src(m))].push_back(m);
    c.in_[static_cast<size_t>(c.dst(m))].push_back(m);
  }
  if (obj_labels.empty()) {
    for (Id x = 0; x < n_obj; ++x) obj_labels.push_back("o" + std::to_string(x));
  }
  if (mor_labels.empty()) {
    for (Id m = 0; m < c.morphisms(); ++m) mor_labels.push_back("m" + std::to_string(m));
  }
  if (static_cast<int>(obj_labels.size()) != n_obj ||
      static_cast<Id>(mor_labels.size()) != c.morphisms())
    throw StructuralError("category: label count mismatch");
  c.obj_label_ = std::move(obj_labels);
  c.mor_label_ = std::move(mor_labels);
  return c;
}

Id Category::compose(Id g, Id f) const {
  if (g < 0 || g >= morphisms() || f < 0 || f >= morphisms() || dst(f) != src(g))
    throw StructuralError("category: compose called on non-composable pair");
  auto it = comp_.find(pairKey(g, f));
  if (it == comp_.end())
    throw StructuralError("category: composition " + morLabel(g) + " after " + morLabel(f) + " is not defined");
  return it->second;
}

std::vector<Id> Category::hom(Id x, Id y) const {
  std::vector<Id> r;
  for (Id m : out(x))
    if (dst(m) == y) r.push_back(m);
  return r;
}

std::string Category::validate() const {
  for (Id f = 0; f < morphisms(); ++f)
    for (Id g = 0; g < morphisms(); ++g) {
      if (dst(f) != src(g)) continue;
      auto it = comp_.find(pairKey(g, f));
      if (it == comp_.end())
        return "missing composition " + morLabel(g) + " after " + morLabel(f);
      Id gf = it->second;
      if (src(gf) != src(f) || dst(gf) != dst(g))
        return "composite " + morLabel(gf) + " has wrong endpoints";
    }
  for (Id m = 0; m < morphisms(); ++m) {
    if (compose(m, identity(src(m))) != m || compose(identity(dst(m)), m) != m)
      return "identity law fails at " + morLabel(m);
  }
  for (Id f = 0; f < morphisms(); ++f)
    for (Id g = 0; g < morphisms(); ++g) {
      if (dst(f) != src(g)) continue;
      for (Id h = 0; h < morphisms(); ++h) {
        if (dst(g) != src(h)) continue;
        if (compose(h, compose(g, f)) != compose(compose(h, g), f))
          return "associativity fails at (" + morLabel(h) + ", " + morLabel(g) + ", " + morLabel(f) + ")";
      }
    }
  return {};
}

int Cover::pairIndex(int i, int j) const {
  if (!(0 <= i && i < j && j < members()))
    throw StructuralError("cover: pairIndex needs 0 <= i < j < members");
  int m = members();
  return static_cast<int>(static_cast<long long>(i) * (2 * m - i - 1) / 2 + (j - i - 1));
}

int Cover::tripleIndex(int i, int j, int k) const {
  if (!(0 <= i && i < j && j < k && k < members()))
    throw StructuralError("cover: tripleIndex needs 0 <= i < j < k < members");
  int m = members();
  long long r = 0;
  for (int a = 0; a < i; ++a) r += choose2(m - 1 - a);
  for (int b = i + 1; b < j; ++b) r += m - 1 - b;
  r += k - j - 1;
  return static_cast<int>(r);
}

PairSlot Site::pairSlot(const Cover& c, int i, int j) const {
  if (!(0 <= i && i <= j && j < c.members()))
    throw StructuralError("site: pairSlot needs 0 <= i <= j < members");
  if (i == j) {
    Id u = c.member_obj[static_cast<size_t>(i)];
    return {u, cat.identity(u), cat.identity(u)};
  }
  const PairCell& cell = c.pair[static_cast<size_t>(c.pairIndex(i, j))];
  return {cell.obj, cell.to_first, cell.to_second};
}

TripleSlot Site::tripleSlot(const Cover& c, int i, int j, int k) const {
  if (!(0 <= i && i <= j && j <= k && k < c.members()))
    throw StructuralError("site: tripleSlot needs 0 <= i <= j <= k < members");
  if (i == j && j == k) {
    Id u = c.member_obj[static_cast<size_t>(i)];
    Id e = cat.identity(u);
    return {u, e, e, e};
  }
  if (i == j) {  // {i,i,k}: the cell is U_ik; the (i,i) face is U_i
    const PairCell& cell = c.pair[static_cast<size_t>(c.pairIndex(i, k))];
    if (cell.obj == kNone) return {kNone, kNone, kNone, kNone};
    Id e = cat.identity(cell.obj);
    return {cell.obj, cell.to_first, e, e};
  }
  if (j == k) {  // {i,j,j}: the cell is U_ij; the (j,j) face is U_j
    const PairCell& cell = c.pair[static_cast<size_t>(c.pairIndex(i, j))];
    if (cell.obj == kNone) return {kNone, kNone, kNone, kNone};
    Id e = cat.identity(cell.obj);
    return {cell.obj, e, e, cell.to_second};
  }
  const TripleCell& cell = c.triple[static_cast<size_t>(c.tripleIndex(i, j, k))];
  return {cell.obj, cell.to_ij, cell.to_ik, cell.to_jk};
}

bool Site::refinesDeclared(Id obj, int finer, int coarser) const {
  if (finer == coarser) return true;
  for (const auto& [f, c] : refines_of[static_cast<size_t>(obj)])
    if (f == finer && c == coarser) return true;
  return false;
}

std::string Site::validate() const {
  if (auto err = cat.validate(); !err.empty()) return err;
  int n = cat.objects();
  if (pt < 0 || pt >= n) return "pt out of range";
  for (Id x = 0; x < n; ++x)
    if (cat.hom(x, pt).size() != 1)
      return "pt is not terminal from " + cat.objLabel(x);
  if (static_cast<int>(covers_of.size()) != n) return "covers_of size mismatch";
  if (static_cast<int>(refines_of.size()) != n) return "refines_of size mismatch";
  for (Id u = 0; u < n; ++u) {
    const auto& cs = covers_of[static_cast<size_t>(u)];
    bool trivial = false;
    for (const Cover& c : cs)
      if (c.members() == 1 && c.member_mor[0] == cat.identity(u)) trivial = true;
    if (!trivial) return "object " + cat.objLabel(u) + " lacks the trivial cover";
    for (size_t ci = 0; ci < cs.size(); ++ci) {
      const Cover& c = cs[ci];
      std::string where = "cover " + std::to_string(ci) + " of " + cat.objLabel(u);
      if (c.base != u) return where + ": wrong base";
      int m = c.members();
      if (m <= 0) return where + ": no members";
      if (static_cast<int>(c.member_mor.size()) != m) return where + ": leg count mismatch";
      for (int i = 0; i < m; ++i) {
        Id leg = c.member_mor[static_cast<size_t>(i)];
        if (cat.src(leg) != c.member_obj[static_cast<size_t>(i)] || cat.dst(leg) != u)
          return where + ": leg " + std::to_string(i) + " has wrong endpoints";
      }
      if (static_cast<long long>(c.pair.size()) != choose2(m)) return where + ": pair cell count mismatch";
      long long want_triples = static_cast<long long>(m) * (m - 1) * (m - 2) / 6;
      if (static_cast<long long>(c.triple.size()) != want_triples)
        return where + ": triple cell count mismatch";
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          const PairCell& cell = c.pair[static_cast<size_t>(c.pairIndex(i, j))];
          std::string cellw = where + ", cell {" + std::to_string(i) + "," + std::to_string(j) + "}";
          if (cell.obj == kNone) {
            if (cell.to_first != kNone || cell.to_second != kNone)
              return cellw + ": empty cell with inclusions";
            continue;
          }
          if (cat.src(cell.to_first) != cell.obj || cat.dst(cell.to_first) != c.member_obj[static_cast<size_t>(i)])
            return cellw + ": first inclusion has wrong endpoints";
          if (cat.src(cell.to_second) != cell.obj || cat.dst(cell.to_second) != c.member_obj[static_cast<size_t>(j)])
            return cellw + ": second inclusion has wrong endpoints";
          if (cat.compose(c.member_mor[static_cast<size_t>(i)], cell.to_first) !=
              cat.compose(c.member_mor[static_cast<size_t>(j)], cell.to_second))
            return cellw + ": inclusion triangle does not commute";
        }
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          for (int k = j + 1; k < m; ++k) {
            const TripleCell& cell = c.triple[static_cast<size_t>(c.tripleIndex(i, j, k))];
            std::string cellw = where + ", cell {" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + "}";
            if (cell.obj == kNone) {
              if (cell.to_ij != kNone || cell.to_ik != kNone || cell.to_jk != kNone)
                return cellw + ": empty cell with inclusions";
              continue;
            }
            const PairCell& pij = c.pair[static_cast<size_t>(c.pairIndex(i, j))];
            const PairCell& pik = c.pair[static_cast<size_t>(c.pairIndex(i, k))];
            const PairCell& pjk = c.pair[static_cast<size_t>(c.pairIndex(j, k))];
            if (pij.obj == kNone || pik.obj == kNone || pjk.obj == kNone)
              return cellw + ": nonempty triple over an empty pair";
            if (cat.src(cell.to_ij) != cell.obj || cat.dst(cell.to_ij) != pij.obj)
              return cellw + ": ij inclusion has wrong endpoints";
            if (cat.src(cell.to_ik) != cell.obj || cat.dst(cell.to_ik) != pik.obj)
              return cellw + ": ik inclusion has wrong endpoints";
            if (cat.src(cell.to_jk) != cell.obj || cat.dst(cell.to_jk) != pjk.obj)
              return cellw + ": jk inclusion has wrong endpoints";
            if (cat.compose(pij.to_first, cell.to_ij) != cat.compose(pik.to_first, cell.to_ik))
              return cellw + ": squares over member " + std::to_string(i) + " disagree";
            if (cat.compose(pij.to_second, cell.to_ij) != cat.compose(pjk.to_first, cell.to_jk))
              return cellw + ": squares over member " + std::to_string(j) + " disagree";
            if (cat.compose(pik.to_second, cell.to_ik) != cat.compose(pjk.to_second, cell.to_jk))
              return cellw + ": squares over member " + std::to_string(k) + " disagree";
          }
    }
    for (const auto& [f, co] : refines_of[static_cast<size_t>(u)]) {
      if (f < 0 || f >= static_cast<int>(cs.size()) || co < 0 || co >= static_cast<int>(cs.size()))
        return "refinement entry out of range at " + cat.objLabel(u);
      if (!findTransport(*this, cs[static_cast<size_t>(f)], cs[static_cast<size_t>(co)]))
        return "declared refinement at " + cat.objLabel(u) + " admits no transport";
    }
  }
  return {};
}

std::optional<Transport> findTransport(const Site& s, const Cover& fine, const Cover& coarse) {
  if (fine.base != coarse.base) return std::nullopt;
  Transport t;
  for (int b = 0; b < fine.members(); ++b) {
    Id w = fine.member_obj[static_cast<size_t>(b)];
    Id leg = fine.member_mor[static_cast<size_t>(b)];
    bool found = false;
    for (int i = 0; i < coarse.members() && !found; ++i) {
      for (Id u : s.cat.hom(w, coarse.member_obj[static_cast<size_t>(i)])) {
        if (s.cat.compose(coarse.member_mor[static_cast<size_t>(i)], u) == leg) {
          t.member.push_back(i);
          t.via.push_back(u);
          found = true;
          break;
        }
      }
    }
    if (!found) return std::nullopt;
  }
  return t;
}

Id OverSite::objOf(Id site_mor) const {
  auto it = obj_of_leg.find(site_mor);
  if (it == obj_of_leg.end())
    throw StructuralError("over-site: morphism is not an object of the slice");
  return it->second;
}

OverSite overSite(const Site& s, Id U) {
  if (U < 0 || U >= s.cat.objects()) throw StructuralError("over-site: base object out of range");
  OverSite o;
  std::vector<Id> legs;
  for (Id m = 0; m < s.cat.morphisms(); ++m)
    if (s.cat.dst(m) == U) {
      o.obj_of_leg.emplace(m, static_cast<Id>(legs.size()));
      legs.push_back(m);
    }
  o.leg = legs;
  int n = static_cast<int>(legs.size());

  std::vector<Mor> mors;
  std::vector<std::string> mor_labels;
  std::vector<Id> idents(static_cast<size_t>(n), kNone);
  std::map<std::tuple<Id, Id, Id>, Id> by_ends_and_under;
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      Id va = s.cat.src(legs[static_cast<size_t>(a)]);
      Id vb = s.cat.src(legs[static_cast<size_t>(b)]);
      for (Id h : s.cat.hom(va, vb)) {
        if (s.cat.compose(legs[static_cast<size_t>(b)], h) != legs[static_cast<size_t>(a)]) continue;
        Id id = static_cast<Id>(mors.size());
        mors.push_back({a, b});
        o.back_mor.push_back(h);
        mor_labels.push_back(s.cat.morLabel(h));
        by_ends_and_under.emplace(std::tuple{a, b, h}, id);
        if (a == b && h == s.cat.identity(va)) idents[static_cast<size_t>(a)] = id;
      }
    }
  std::vector<std::array<Id, 3>> comps;
  for (Id f = 0; f < static_cast<Id>(mors.size()); ++f)
    for (Id g = 0; g < static_cast<Id>(mors.size()); ++g) {
      if (mors[static_cast<size_t>(f)].dst != mors[static_cast<size_t>(g)].src) continue;
      Id under = s.cat.compose(o.back_mor[static_cast<size_t>(g)], o.back_mor[static_cast<size_t>(f)]);
      comps.push_back({{g, f, by_ends_and_under.at({mors[static_cast<size_t>(f)].src,
                                                    mors[static_cast<size_t>(g)].dst, under})}});
    }
  std::vector<std::string> obj_labels;
  for (Id a = 0; a < n; ++a) obj_labels.push_back("[" + s.cat.morLabel(legs[static_cast<size_t>(a)]) + "]");
  o.site.cat = Category::make(n, mors, idents, comps, obj_labels, mor_labels);
  o.site.pt = o.objOf(s.cat.identity(U));

  auto wrap = [&](Id src_leg, Id dst_leg, Id h) {
    return by_ends_and_under.at({o.objOf(src_leg), o.objOf(dst_leg), h});
  };
  o.site.covers_of.assign(static_cast<size_t>(n), {});
  o.site.refines_of.assign(static_cast<size_t>(n), {});
  for (Id a = 0; a < n; ++a) {
    Id g = legs[static_cast<size_t>(a)];
    Id v = s.cat.src(g);
    for (const Cover& c : s.covers_of[static_cast<size_t>(v)]) {
      Cover oc;
      oc.base = a;
      std::vector<Id> member_leg(static_cast<size_t>(c.members()));
      for (int i = 0; i < c.members(); ++i) {
        Id li = c.member_mor[static_cast<size_t>(i)];
        member_leg[static_cast<size_t>(i)] = s.cat.compose(g, li);
        oc.member_obj.push_back(o.objOf(member_leg[static_cast<size_t>(i)]));
        oc.member_mor.push_back(wrap(member_leg[static_cast<size_t>(i)], g, li));
      }
      std::vector<Id> pair_leg(c.pair.size(), kNone);
      for (int i = 0; i < c.members(); ++i)
        for (int j = i + 1; j < c.members(); ++j) {
          const PairCell& cell = c.pair[static_cast<size_t>(c.pairIndex(i, j))];
          if (cell.obj == kNone) {
            oc.pair.push_back({});
            continue;
          }
          Id cell_leg = s.cat.compose(member_leg[static_cast<size_t>(i)], cell.to_first);
          pair_leg[static_cast<size_t>(c.pairIndex(i, j))] = cell_leg;
          oc.pair.push_back({o.objOf(cell_leg),
                             wrap(cell_leg, member_leg[static_cast<size_t>(i)], cell.to_first),
                             wrap(cell_leg, member_leg[static_cast<size_t>(j)], cell.to_second)});
        }
      for (int i = 0; i < c.members(); ++i)
        for (int j = i + 1; j < c.members(); ++j)
          for (int k = j + 1; k < c.members(); ++k) {
            const TripleCell& cell = c.triple[static_cast<size_t>(c.tripleIndex(i, j, k))];
            if (cell.obj == kNone) {
              oc.triple.push_back({});
              continue;
            }
            Id lij = pair_leg[static_cast<size_t>(c.pairIndex(i, j))];
            Id lik = pair_leg[static_cast<size_t>(c.pairIndex(i, k))];
            Id ljk = pair_leg[static_cast<size_t>(c.pairIndex(j, k))];
            Id cell_leg = s.cat.compose(lij, cell.to_ij);
            oc.triple.push_back({o.objOf(cell_leg), wrap(cell_leg, lij, cell.to_ij),
                                 wrap(cell_leg, lik, cell.to_ik), wrap(cell_leg, ljk, cell.to_jk)});
          }
      o.site.covers_of[static_cast<size_t>(a)].push_back(std::move(oc));
    }
    o.site.refines_of[static_cast<size_t>(a)] = s.refines_of[static_cast<size_t>(v)];
  }
  if (auto err = o.site.validate(); !err.empty())
    throw StructuralError("over-site: " + err);
  return o;
}

namespace {

// Sites whose underlying category is a poset of chart inclusions topped by a
// terminal point object.
struct PosetSiteBuilder {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> le;
  std::vector<std::vector<Id>> mor_of;

  Id obj(const std::string& name) {
    names.push_back(name);
    for (auto& row : le) row.push_back(false);
    le.emplace_back(names.size(), false);
    le.back()[names.size() - 1] = true;
    return static_cast<Id>(names.size() - 1);
  }

  void rel(Id x, Id y) { le[static_cast<size_t>(x)][static_cast<size_t>(y)] = true; }

  Site build() {
    int n = static_cast<int>(names.size());
    for (int k = 0; k < n; ++k)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (le[static_cast<size_t>(x)][static_cast<size_t>(k)] &&
              le[static_cast<size_t>(k)][static_cast<size_t>(y)])
            le[static_cast<size_t>(x)][static_cast<size_t>(y)] = true;
    mor_of.assign(static_cast<size_t>(n), std::vector<Id>(static_cast<size_t>(n), kNone));
    std::vector<Mor> mors;
    std::vector<std::string> labels;
    std::vector<Id> idents;
    for (Id x = 0; x < n; ++x)
      for (Id y = 0; y < n; ++y)
        if (le[static_cast<size_t>(x)][static_cast<size_t>(y)]) {
          mor_of[static_cast<size_t>(x)][static_cast<size_t>(y)] = static_cast<Id>(mors.size());
          mors.push_back({x, y});
          labels.push_back(x == y ? "id_" + names[static_cast<size_t>(x)]
                                  : names[static_cast<size_t>(x)] + ">" + names[static_cast<size_t>(y)]);
        }
    for (Id x = 0; x < n; ++x) idents.push_back(mor_of[static_cast<size_t>(x)][static_cast<size_t>(x)]);
    std::vector<std::array<Id, 3>> comps;
    for (Id x = 0; x < n; ++x)
      for (Id y = 0; y < n; ++y)
        for (Id z = 0; z < n; ++z)
          if (le[static_cast<size_t>(x)][static_cast<size_t>(y)] &&
              le[static_cast<size_t>(y)][static_cast<size_t>(z)])
            comps.push_back({{mor_of[static_cast<size_t>(y)][static_cast<size_t>(z)],
                              mor_of[static_cast<size_t>(x)][static_cast<size_t>(y)],
                              mor_of[static_cast<size_t>(x)][static_cast<size_t>(z)]}});
    Site s;
    s.cat = Category::make(n, mors, idents, comps, names, labels);
    s.covers_of.assign(static_cast<size_t>(n), {});
    s.refines_of.assign(static_cast<size_t>(n), {});
    for (Id x = 0; x < n; ++x) {
      Cover t;
      t.base = x;
      t.member_obj = {x};
      t.member_mor = {s.cat.identity(x)};
      s.covers_of[static_cast<size_t>(x)].push_back(std::move(t));
    }
    return s;
  }

  Id mor(Id x, Id y) const { return mor_of[static_cast<size_t>(x)][static_cast<size_t>(y)]; }

  // Appends a cover of base by the given members; empty intersections are
  // marked by kNone in the pairwise object list.
  static void addCover(Site& s, const PosetSiteBuilder& b, Id base, const std::vector<Id>& members,
                       const std::vector<std::vector<Id>>& pair_obj,
                       const std::vector<std::vector<std::vector<Id>>>& triple_obj = {}) {
    Cover c;
    c.base = base;
    int m = static_cast<int>(members.size());
    for (Id u : members) {
      c.member_obj.push_back(u);
      c.member_mor.push_back(b.mor(u, base));
    }
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Id pij = pair_obj[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (pij == kNone) {
          c.pair.push_back({});
        } else {
          c.pair.push_back({pij, b.mor(pij, members[static_cast<size_t>(i)]),
                            b.mor(pij, members[static_cast<size_t>(j)])});
        }
      }
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
          Id tijk = triple_obj.empty()
                        ? kNone
                        : triple_obj[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
          if (tijk == kNone) {
            c.triple.push_back({});
          } else {
            Id pij = pair_obj[static_cast<size_t>(i)][static_cast<size_t>(j)];
            Id pik = pair_obj[static_cast<size_t>(i)][static_cast<size_t>(k)];
            Id pjk = pair_obj[static_cast<size_t>(j)][static_cast<size_t>(k)];
            c.triple.push_back({tijk, b.mor(tijk, pij), b.mor(tijk, pik), b.mor(tijk, pjk)});
          }
        }
    int idx = static_cast<int>(s.covers_of[static_cast<size_t>(base)].size());
    s.covers_of[static_cast<size_t>(base)].push_back(std::move(c));
    s.refines_of[static_cast<size_t>(base)].push_back({idx, 0});
  }
};

}  // namespace

Site intervalTwoChartSite() {
  PosetSiteBuilder b;
  Id i = b.obj("I"), l = b.obj("L"), r = b.obj("R"), c = b.obj("C"), pt = b.obj("pt");
  b.rel(l, i);
  b.rel(r, i);
  b.rel(c, l);
  b.rel(c, r);
  for (Id x : {i, l, r, c}) b.rel(x, pt);
  Site s = b.build();
  s.pt = pt;
  PosetSiteBuilder::addCover(s, b, i, {l, r}, {{kNone, c}, {}});
  if (auto err = s.validate(); !err.empty()) throw StructuralError("interval site: " + err);
  return s;
}

Site circleThreeArcSite() {
  PosetSiteBuilder b;
  Id sObj = b.obj("S");
  Id a1 = b.obj("A1"), a2 = b.obj("A2"), a3 = b.obj("A3");
  Id p12 = b.obj("P12"), p13 = b.obj("P13"), p23 = b.obj("P23");
  Id pt = b.obj("pt");
  for (Id a : {a1, a2, a3}) b.rel(a, sObj);
  b.rel(p12, a1);
  b.rel(p12, a2);
  b.rel(p13, a1);
  b.rel(p13, a3);
  b.rel(p23, a2);
  b.rel(p23, a3);
  for (Id x : {sObj, a1, a2, a3, p12, p13, p23}) b.rel(x, pt);
  Site s = b.build();
  s.pt = pt;
  PosetSiteBuilder::addCover(s, b, sObj, {a1, a2, a3},
                             {{kNone, p12, p13}, {kNone, kNone, p23}, {}},
                             {{{kNone, kNone, kNone}, {kNone, kNone, kNone}},
                              {{}, {kNone, kNone, kNone}}});
  if (auto err = s.validate(); !err.empty()) throw StructuralError("circle site: " + err);
  return s;
}

Site lineThreeChartSite() {
  PosetSiteBuilder b;
  Id ln = b.obj("Ln");
  Id a = b.obj("A"), m = b.obj("B"), c = b.obj("C");
  Id p = b.obj("P"), q = b.obj("Q");
  Id pt = b.obj("pt");
  for (Id x : {a, m, c}) b.rel(x, ln);
  b.rel(p, a);
  b.rel(p, m);
  b.rel(q, m);
  b.rel(q, c);
  for (Id x : {ln, a, m, c, p, q}) b.rel(x, pt);
  Site s = b.build();
  s.pt = pt;
  PosetSiteBuilder::addCover(s, b, ln, {a, m, c},
                             {{kNone, p, kNone}, {kNone, kNone, q}, {}},
                             {{{kNone, kNone, kNone}, {kNone, kNone, kNone}},
                              {{}, {kNone, kNone, kNone}}});
  if (auto err = s.validate(); !err.empty()) throw StructuralError("line site: " + err);
  return s;
}

Site discretePointSite(int k) {
  if (k < 1) throw StructuralError("discrete point site: need at least one point");
  Id pt = 0, u = 1;
  std::vector<Mor> mors;
  std::vector<std::string> labels;
  auto add = [&](Id s, Id d, std::string lab) {
    mors.push_back({s, d});
    labels.push_back(std::move(lab));
    return static_cast<Id>(mors.size() - 1);
  };
  Id id_pt = add(pt, pt, "id_pt");
  Id id_u = add(u, u, "id_U");
  Id t = add(u, pt, "U>pt");
  std::vector<Id> p(static_cast<size_t>(k)), e(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) p[static_cast<size_t>(i)] = add(pt, u, "p" + std::to_string(i));
  for (int i = 0; i < k; ++i) e[static_cast<size_t>(i)] = add(u, u, "e" + std::to_string(i));
  std::vector<std::array<Id, 3>> comps;
  for (int i = 0; i < k; ++i) {
    comps.push_back({{t, p[static_cast<size_t>(i)], id_pt}});
    comps.push_back({{p[static_cast<size_t>(i)], t, e[static_cast<size_t>(i)]}});
    comps.push_back({{t, e[static_cast<size_t>(i)], t}});
    for (int j = 0; j < k; ++j) {
      comps.push_back({{e[static_cast<size_t>(i)], p[static_cast<size_t>(j)], p[static_cast<size_t>(i)]}});
      comps.push_back({{e[static_cast<size_t>(i)], e[static_cast<size_t>(j)], e[static_cast<size_t>(i)]}});
    }
  }
  Site s;
  s.cat = Category::make(2, mors, {id_pt, id_u}, comps, {"pt", "U"}, labels);
  s.pt = pt;
  s.covers_of.assign(2, {});
  s.refines_of.assign(2, {});
  Cover tp;
  tp.base = pt;
  tp.member_obj = {pt};
  tp.member_mor = {id_pt};
  s.covers_of[0].push_back(std::move(tp));
  Cover tu;
  tu.base = u;
  tu.member_obj = {u};
  tu.member_mor = {id_u};
  s.covers_of[1].push_back(std::move(tu));
  Cover points;
  points.base = u;
  points.member_obj.assign(static_cast<size_t>(k), pt);
  points.member_mor = p;
  points.pair.assign(static_cast<size_t>(choose2(k)), {});
  points.triple.assign(static_cast<size_t>(static_cast<long long>(k) * (k - 1) * (k - 2) / 6), {});
  s.covers_of[1].push_back(std::move(points));
  s.refines_of[1].push_back({1, 0});
  if (auto err = s.validate(); !err.empty()) throw StructuralError("discrete point site: " + err);
  return s;
}

}  // namespace stk::site
