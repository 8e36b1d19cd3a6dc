#include "stackcore/sheaves.hpp"

#include <map>
#include <numeric>

namespace stk::psh {

namespace {

using Family = std::vector<Id>;

bool familyMatches(const SetPsh& F, const Site& s, const site::Cover& c, const Family& fam) {
  for (int i = 0; i < c.members(); ++i)
    for (int j = i + 1; j < c.members(); ++j) {
      site::PairSlot ps = s.pairSlot(c, i, j);
      if (ps.obj == kNone) continue;
      if (F.map[static_cast<size_t>(ps.to_i)][static_cast<size_t>(fam[static_cast<size_t>(i)])] !=
          F.map[static_cast<size_t>(ps.to_j)][static_cast<size_t>(fam[static_cast<size_t>(j)])])
        return false;
    }
  return true;
}

std::vector<Family> matchingFamilies(const SetPsh& F, const Site& s, const site::Cover& c,
                                     std::size_t cap) {
  std::vector<Family> out;
  int m = c.members();
  Family fam(static_cast<size_t>(m), 0);
  std::size_t visited = 0;
  auto consistent = [&](int upto) {
    for (int i = 0; i < upto; ++i) {
      site::PairSlot ps = s.pairSlot(c, i, upto);
      if (ps.obj == kNone) continue;
      if (F.map[static_cast<size_t>(ps.to_i)][static_cast<size_t>(fam[static_cast<size_t>(i)])] !=
          F.map[static_cast<size_t>(ps.to_j)][static_cast<size_t>(fam[static_cast<size_t>(upto)])])
        return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m) {
      out.push_back(fam);
      return;
    }
    int n = F.size[static_cast<size_t>(c.member_obj[static_cast<size_t>(pos)])];
    for (Id v = 0; v < n; ++v) {
      if (++visited > cap) throw grpd::EnumerationOverflow("matching family enumeration passed cap");
      fam[static_cast<size_t>(pos)] = v;
      if (consistent(pos)) self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

PlusPsh plusConstruction(const SetPsh& F, std::size_t cap) {
  const Site& s = *F.on;
  const site::Category& cat = s.cat;
  PlusPsh p;
  p.psh.on = F.on;
  p.rep.resize(static_cast<size_t>(cat.objects()));
  p.cls.resize(static_cast<size_t>(cat.objects()));
  p.unit.resize(static_cast<size_t>(cat.objects()));

  // per object: enumerated (cover, family) items, lookup, and class of item
  std::vector<std::vector<std::pair<int, Family>>> items(static_cast<size_t>(cat.objects()));
  std::vector<std::map<std::pair<int, Family>, int>> item_index(static_cast<size_t>(cat.objects()));
  std::vector<std::vector<Id>> class_of(static_cast<size_t>(cat.objects()));

  for (Id u = 0; u < cat.objects(); ++u) {
    const auto& covers = s.covers_of[static_cast<size_t>(u)];
    for (int ci = 0; ci < static_cast<int>(covers.size()); ++ci)
      for (Family& fam : matchingFamilies(F, s, covers[static_cast<size_t>(ci)], cap)) {
        item_index[static_cast<size_t>(u)].emplace(std::pair{ci, fam},
                                                   static_cast<int>(items[static_cast<size_t>(u)].size()));
        items[static_cast<size_t>(u)].push_back({ci, std::move(fam)});
      }
    UnionFind uf(static_cast<int>(items[static_cast<size_t>(u)].size()));
    for (const auto& [fine, coarse] : s.refines_of[static_cast<size_t>(u)]) {
      const site::Cover& cf = covers[static_cast<size_t>(fine)];
      const site::Cover& cc = covers[static_cast<size_t>(coarse)];
      auto tr = findTransport(s, cf, cc);
      if (!tr) throw StructuralError("plus construction: declared refinement admits no transport");
      for (const auto& [ci, fam] : items[static_cast<size_t>(u)]) {
        if (ci != coarse) continue;
        Family t(static_cast<size_t>(cf.members()));
        for (int b = 0; b < cf.members(); ++b)
          t[static_cast<size_t>(b)] =
              F.map[static_cast<size_t>(tr->via[static_cast<size_t>(b)])]
                   [static_cast<size_t>(fam[static_cast<size_t>(tr->member[static_cast<size_t>(b)])])];
        if (!familyMatches(F, s, cf, t))
          throw StructuralError("plus construction: refinement transport broke matching");
        uf.unite(item_index[static_cast<size_t>(u)].at({coarse, fam}),
                 item_index[static_cast<size_t>(u)].at({fine, t}));
      }
    }
    std::vector<Id> root_class(items[static_cast<size_t>(u)].size(), kNone);
    for (size_t it = 0; it < items[static_cast<size_t>(u)].size(); ++it) {
      int r = uf.find(static_cast<int>(it));
      if (root_class[static_cast<size_t>(r)] == kNone) {
        root_class[static_cast<size_t>(r)] = static_cast<Id>(p.rep[static_cast<size_t>(u)].size());
        p.rep[static_cast<size_t>(u)].push_back(items[static_cast<size_t>(u)][it]);
      }
      class_of[static_cast<size_t>(u)].push_back(root_class[static_cast<size_t>(r)]);
      p.cls[static_cast<size_t>(u)].emplace(items[static_cast<size_t>(u)][it],
                                            root_class[static_cast<size_t>(r)]);
    }
    p.psh.size.push_back(static_cast<int>(p.rep[static_cast<size_t>(u)].size()));

    int trivial = -1;
    for (int ci = 0; ci < static_cast<int>(covers.size()); ++ci)
      if (covers[static_cast<size_t>(ci)].members() == 1 &&
          covers[static_cast<size_t>(ci)].member_mor[0] == cat.identity(u)) {
        trivial = ci;
        break;
      }
    for (Id x = 0; x < F.size[static_cast<size_t>(u)]; ++x)
      p.unit[static_cast<size_t>(u)].push_back(
          class_of[static_cast<size_t>(u)]
                  [static_cast<size_t>(item_index[static_cast<size_t>(u)].at({trivial, {x}}))]);
  }

  for (Id m = 0; m < cat.morphisms(); ++m) {
    Id u = cat.dst(m), v = cat.src(m);
    std::vector<Id> table;
    for (const auto& [ci, fam] : p.rep[static_cast<size_t>(u)]) {
      const site::Cover& c = s.covers_of[static_cast<size_t>(u)][static_cast<size_t>(ci)];
      Id result = kNone;
      for (int di = 0; di < static_cast<int>(s.covers_of[static_cast<size_t>(v)].size()) && result == kNone;
           ++di) {
        const site::Cover& d = s.covers_of[static_cast<size_t>(v)][static_cast<size_t>(di)];
        Family t(static_cast<size_t>(d.members()));
        bool full = true;
        for (int b = 0; b < d.members() && full; ++b) {
          Id wb = d.member_obj[static_cast<size_t>(b)];
          Id target = cat.compose(m, d.member_mor[static_cast<size_t>(b)]);
          bool found = false;
          for (int i = 0; i < c.members() && !found; ++i)
            for (Id link : cat.hom(wb, c.member_obj[static_cast<size_t>(i)])) {
              if (cat.compose(c.member_mor[static_cast<size_t>(i)], link) != target) continue;
              t[static_cast<size_t>(b)] =
                  F.map[static_cast<size_t>(link)][static_cast<size_t>(fam[static_cast<size_t>(i)])];
              found = true;
              break;
            }
          full = found;
        }
        if (!full || !familyMatches(F, s, d, t)) continue;
        auto it = item_index[static_cast<size_t>(v)].find({di, t});
        if (it == item_index[static_cast<size_t>(v)].end()) continue;
        result = class_of[static_cast<size_t>(v)][static_cast<size_t>(it->second)];
      }
      if (result == kNone)
        throw StructuralError("plus construction: no cover of " + cat.objLabel(v) +
                              " receives the restricted family along " + cat.morLabel(m));
      table.push_back(result);
    }
    p.psh.map.push_back(std::move(table));
  }
  if (auto err = p.psh.validate(); !err.empty())
    throw StructuralError("plus construction: " + err);
  return p;
}

std::vector<std::vector<Id>> plusMap(const SetPsh& F, const SetPsh& G, const PlusPsh& pf,
                                     const PlusPsh& pg, const std::vector<std::vector<Id>>& comp) {
  const Site& s = *F.on;
  std::vector<std::vector<Id>> out;
  for (Id u = 0; u < s.cat.objects(); ++u) {
    std::vector<Id> table;
    for (const auto& [ci, fam] : pf.rep[static_cast<size_t>(u)]) {
      Family g_fam;
      for (int i = 0; i < static_cast<int>(fam.size()); ++i) {
        Id member = s.covers_of[static_cast<size_t>(u)][static_cast<size_t>(ci)]
                        .member_obj[static_cast<size_t>(i)];
        g_fam.push_back(comp[static_cast<size_t>(member)][static_cast<size_t>(fam[static_cast<size_t>(i)])]);
      }
      auto it = pg.cls[static_cast<size_t>(u)].find({ci, g_fam});
      if (it == pg.cls[static_cast<size_t>(u)].end())
        throw StructuralError("plus map: image family is not matching data");
      table.push_back(it->second);
    }
    out.push_back(std::move(table));
  }
  return out;
}

Sheafified sheafify(const SetPsh& F, std::size_t cap) {
  Sheafified sh;
  sh.p1 = plusConstruction(F, cap);
  sh.p2 = plusConstruction(sh.p1.psh, cap);
  for (Id u = 0; u < static_cast<Id>(F.size.size()); ++u) {
    std::vector<Id> t;
    for (Id x = 0; x < F.size[static_cast<size_t>(u)]; ++x)
      t.push_back(sh.p2.unit[static_cast<size_t>(u)][static_cast<size_t>(
          sh.p1.unit[static_cast<size_t>(u)][static_cast<size_t>(x)])]);
    sh.unit.push_back(std::move(t));
  }
  return sh;
}

std::vector<std::vector<Id>> sheafifyMap(const SetPsh& F, const SetPsh& G, const Sheafified& sf,
                                         const Sheafified& sg,
                                         const std::vector<std::vector<Id>>& comp) {
  auto once = plusMap(F, G, sf.p1, sg.p1, comp);
  return plusMap(sf.p1.psh, sg.p1.psh, sf.p2, sg.p2, once);
}

bool isSetSheaf(const SetPsh& F, std::size_t cap) {
  Sheafified sh = sheafify(F, cap);
  for (Id u = 0; u < static_cast<Id>(F.size.size()); ++u)
    if (!bijective(sh.unit[static_cast<size_t>(u)], sh.p2.psh.size[static_cast<size_t>(u)]))
      return false;
  return true;
}

bool bijective(const std::vector<Id>& table, int codomain) {
  if (static_cast<int>(table.size()) != codomain) return false;
  std::vector<bool> hit(static_cast<size_t>(codomain), false);
  for (Id v : table) {
    if (v < 0 || v >= codomain || hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = true;
  }
  return true;
}

}  // namespace stk::psh
