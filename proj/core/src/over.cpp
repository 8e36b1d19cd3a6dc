#include "stackcore/over.hpp"

#include <algorithm>

#include "stackcore/model.hpp"
#include "stackcore/internal_hom.hpp"
#include "stackcore/sheaves.hpp"

namespace stk::psh {

std::string OverObject::validate() const {
  if (total == nullptr || base == nullptr) return "over-object: missing endpoint";
  if (map.X != total || map.Y != base) return "over-object: map endpoints disagree";
  return map.validate();
}

OverObject overObject(const PshMor& f) {
  OverObject o;
  o.total = f.X;
  o.base = f.Y;
  o.map = f;
  auto err = o.validate();
  if (!err.empty()) throw StructuralError("overObject: " + err);
  return o;
}

OverObject SubPsh::over() const {
  OverObject o;
  o.total = psh.get();
  o.base = ambient;
  o.map = incl;
  return o;
}

SubPsh fullSubPsh(const Psh& K, std::vector<std::vector<Id>> objs) {
  const auto& s = K.s();
  if (static_cast<int>(objs.size()) != s.cat.objects())
    throw StructuralError("fullSubPsh: one object list per site object expected");

  SubPsh out;
  out.ambient = &K;
  out.psh = std::make_shared<Psh>();
  out.psh->on = K.on;

  std::vector<grpd::Functor> incl;
  for (Id u = 0; u < s.cat.objects(); ++u) {
    auto sub = grpd::fullSubgroupoid(K.at(u), objs[static_cast<size_t>(u)]);
    out.psh->stage.push_back(sub.sub);
    out.obj_of_sub.push_back(sub.obj_of_sub);
    incl.push_back(sub.inclusion(K.at(u)));

    std::vector<Id> so(static_cast<size_t>(K.at(u).objects()), kNone);
    for (Id i = 0; i < sub.sub->objects(); ++i)
      so[static_cast<size_t>(sub.obj_of_sub[static_cast<size_t>(i)])] = i;
    out.sub_of_obj.push_back(std::move(so));

    std::vector<Id> sm(static_cast<size_t>(K.at(u).morphisms()), kNone);
    for (Id g = 0; g < sub.sub->morphisms(); ++g)
      sm[static_cast<size_t>(incl.back().mor(g))] = g;
    out.sub_of_mor.push_back(std::move(sm));
  }

  for (Id m = 0; m < s.cat.morphisms(); ++m) {
    const Id w = s.cat.src(m), v = s.cat.dst(m);
    grpd::Functor r;
    r.A = out.psh->stage[static_cast<size_t>(v)].get();
    r.B = out.psh->stage[static_cast<size_t>(w)].get();
    for (Id i = 0; i < r.A->objects(); ++i) {
      Id img = out.sub_of_obj[static_cast<size_t>(w)][static_cast<size_t>(
          K.res(m).obj(out.obj_of_sub[static_cast<size_t>(v)][static_cast<size_t>(i)]))];
      if (img == kNone) throw StructuralError("fullSubPsh: subsets not closed under restriction");
      r.on_obj.push_back(img);
    }
    for (Id g = 0; g < r.A->morphisms(); ++g) {
      Id img = out.sub_of_mor[static_cast<size_t>(w)][static_cast<size_t>(
          K.res(m).mor(incl[static_cast<size_t>(v)].mor(g)))];
      if (img == kNone) throw StructuralError("fullSubPsh: subsets not closed under restriction");
      r.on_mor.push_back(img);
    }
    out.psh->restriction.push_back(std::move(r));
  }

  auto err = out.psh->validate();
  if (!err.empty()) throw StructuralError("fullSubPsh: " + err);

  out.incl.X = out.psh.get();
  out.incl.Y = &K;
  out.incl.comp = std::move(incl);
  err = out.incl.validate();
  if (!err.empty()) throw StructuralError("fullSubPsh inclusion: " + err);
  return out;
}

PshMor inducedSubMor(const SubPsh& a, const SubPsh& b, const PshMor& g) {
  if (g.X != a.ambient || g.Y != b.ambient)
    throw StructuralError("inducedSubMor: g must run between the ambient presheaves");
  PshMor out;
  out.X = a.psh.get();
  out.Y = b.psh.get();
  const int n = static_cast<int>(a.psh->stage.size());
  for (Id u = 0; u < n; ++u) {
    grpd::Functor c;
    c.A = a.psh->stage[static_cast<size_t>(u)].get();
    c.B = b.psh->stage[static_cast<size_t>(u)].get();
    for (Id i = 0; i < c.A->objects(); ++i) {
      Id img = b.sub_of_obj[static_cast<size_t>(u)][static_cast<size_t>(
          g.comp[static_cast<size_t>(u)].obj(a.obj_of_sub[static_cast<size_t>(u)][static_cast<size_t>(i)]))];
      if (img == kNone) throw StructuralError("inducedSubMor: image object not in target subset");
      c.on_obj.push_back(img);
    }
    for (Id m = 0; m < c.A->morphisms(); ++m) {
      Id img = b.sub_of_mor[static_cast<size_t>(u)][static_cast<size_t>(
          g.comp[static_cast<size_t>(u)].mor(a.incl.comp[static_cast<size_t>(u)].mor(m)))];
      if (img == kNone) throw StructuralError("inducedSubMor: image morphism not in target subset");
      c.on_mor.push_back(img);
    }
    out.comp.push_back(std::move(c));
  }
  auto err = out.validate();
  if (!err.empty()) throw StructuralError("inducedSubMor: " + err);
  return out;
}

namespace {

ImageFactor factorThrough(const OverObject& o, std::vector<std::vector<Id>> objs) {
  ImageFactor out;
  out.im = fullSubPsh(*o.base, std::move(objs));
  out.to_im.X = o.total;
  out.to_im.Y = out.im.psh.get();
  const auto& s = o.base->s();
  for (Id u = 0; u < s.cat.objects(); ++u) {
    grpd::Functor c;
    c.A = o.total->stage[static_cast<size_t>(u)].get();
    c.B = out.im.psh->stage[static_cast<size_t>(u)].get();
    for (Id x = 0; x < c.A->objects(); ++x)
      c.on_obj.push_back(out.im.sub_of_obj[static_cast<size_t>(u)][static_cast<size_t>(
          o.map.comp[static_cast<size_t>(u)].obj(x))]);
    for (Id m = 0; m < c.A->morphisms(); ++m)
      c.on_mor.push_back(out.im.sub_of_mor[static_cast<size_t>(u)][static_cast<size_t>(
          o.map.comp[static_cast<size_t>(u)].mor(m))]);
    out.to_im.comp.push_back(std::move(c));
  }
  auto err = out.to_im.validate();
  if (!err.empty()) throw StructuralError("image factorization: " + err);
  return out;
}

// Whether some morphism z -> e exists with e an f-image object at stage u.
std::vector<char> essentialImage(const OverObject& o, Id u) {
  const auto& ku = o.base->at(u);
  std::vector<char> image(static_cast<size_t>(ku.objects()), 0);
  const auto& fu = o.map.comp[static_cast<size_t>(u)];
  for (Id x = 0; x < o.total->at(u).objects(); ++x)
    image[static_cast<size_t>(fu.obj(x))] = 1;
  std::vector<char> ess(static_cast<size_t>(ku.objects()), 0);
  for (Id z = 0; z < ku.objects(); ++z) {
    if (image[static_cast<size_t>(z)]) {
      ess[static_cast<size_t>(z)] = 1;
      continue;
    }
    for (Id g : ku.out(z)) {
      if (image[static_cast<size_t>(ku.dst(g))]) {
        ess[static_cast<size_t>(z)] = 1;
        break;
      }
    }
  }
  return ess;
}

}  // namespace

ImageFactor fullImage(const OverObject& o) {
  const auto& s = o.base->s();
  std::vector<std::vector<Id>> objs(static_cast<size_t>(s.cat.objects()));
  for (Id u = 0; u < s.cat.objects(); ++u) {
    std::vector<char> hit(static_cast<size_t>(o.base->at(u).objects()), 0);
    for (Id x = 0; x < o.total->at(u).objects(); ++x)
      hit[static_cast<size_t>(o.map.comp[static_cast<size_t>(u)].obj(x))] = 1;
    for (Id z = 0; z < o.base->at(u).objects(); ++z)
      if (hit[static_cast<size_t>(z)]) objs[static_cast<size_t>(u)].push_back(z);
  }
  return factorThrough(o, std::move(objs));
}

ImageFactor oneImage(const OverObject& o) {
  const auto& s = o.base->s();
  const int n = s.cat.objects();
  std::vector<std::vector<char>> ess;
  for (Id u = 0; u < n; ++u) ess.push_back(essentialImage(o, u));

  std::vector<std::vector<char>> keep = ess;
  for (Id u = 0; u < n; ++u) {
    for (const auto& c : s.covers_of[static_cast<size_t>(u)]) {
      for (Id z = 0; z < o.base->at(u).objects(); ++z) {
        if (keep[static_cast<size_t>(u)][static_cast<size_t>(z)]) continue;
        bool all = true;
        for (int i = 0; i < c.members() && all; ++i) {
          Id zi = o.base->res(c.member_mor[static_cast<size_t>(i)]).obj(z);
          all = ess[static_cast<size_t>(c.member_obj[static_cast<size_t>(i)])]
                   [static_cast<size_t>(zi)] != 0;
        }
        if (all) keep[static_cast<size_t>(u)][static_cast<size_t>(z)] = 1;
      }
    }
  }

  bool grew = true;
  while (grew) {
    grew = false;
    for (Id m = 0; m < s.cat.morphisms(); ++m) {
      const Id w = s.cat.src(m), v = s.cat.dst(m);
      for (Id z = 0; z < o.base->at(v).objects(); ++z) {
        if (!keep[static_cast<size_t>(v)][static_cast<size_t>(z)]) continue;
        Id zw = o.base->res(m).obj(z);
        if (!keep[static_cast<size_t>(w)][static_cast<size_t>(zw)]) {
          keep[static_cast<size_t>(w)][static_cast<size_t>(zw)] = 1;
          grew = true;
        }
      }
    }
    for (Id u = 0; u < n; ++u) {
      const auto& ku = o.base->at(u);
      for (Id z = 0; z < ku.objects(); ++z) {
        if (!keep[static_cast<size_t>(u)][static_cast<size_t>(z)]) continue;
        for (Id g : ku.out(z)) {
          Id zp = ku.dst(g);
          if (!keep[static_cast<size_t>(u)][static_cast<size_t>(zp)]) {
            keep[static_cast<size_t>(u)][static_cast<size_t>(zp)] = 1;
            grew = true;
          }
        }
      }
    }
  }

  std::vector<std::vector<Id>> objs(static_cast<size_t>(n));
  for (Id u = 0; u < n; ++u)
    for (Id z = 0; z < o.base->at(u).objects(); ++z)
      if (keep[static_cast<size_t>(u)][static_cast<size_t>(z)]) objs[static_cast<size_t>(u)].push_back(z);
  return factorThrough(o, std::move(objs));
}

LocalityReport isSMinusOneLocal(const OverObject& o, std::size_t cap) {
  auto fib = isLocalFibration(o.map, cap);
  if (!fib.ok) return {false, "not a local fibration: " + fib.detail};
  const auto& s = o.base->s();
  for (Id u = 0; u < s.cat.objects(); ++u) {
    auto ff = grpd::checkFullyFaithful(o.map.comp[static_cast<size_t>(u)]);
    if (!ff.ok)
      return {false, "stage " + s.cat.objLabel(u) + " not fully faithful: " + ff.detail};
  }
  return {true, ""};
}

bool pi0Epi(const PshMor& f, std::size_t cap) {
  auto px = pi0Psh(*f.X);
  auto py = pi0Psh(*f.Y);
  auto comp = pi0Mor(f, px, py);
  auto sx = sheafify(px, cap);
  auto sy = sheafify(py, cap);
  auto tab = sheafifyMap(px, py, sx, sy, comp.comp);
  for (size_t u = 0; u < tab.size(); ++u) {
    std::vector<char> hit(static_cast<size_t>(sy.psh().size[u]), 0);
    for (Id c : tab[u]) hit[static_cast<size_t>(c)] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
  }
  return true;
}

LocalReport imVsOneImageWeq(const OverObject& o, std::size_t cap) {
  auto im = fullImage(o);
  auto im1 = oneImage(o);
  auto can = inducedSubMor(im.im, im1.im, identityPshMor(*o.base));
  return isLocalWeq(can, cap);
}

BaseChangeReport baseChangeWeq(const OverObject& o, const PshMor& g, std::size_t cap) {
  if (g.X != o.base) throw StructuralError("baseChangeWeq: g must start at the base");
  auto gw = isLocalWeq(g, cap);
  if (!gw.ok) throw StructuralError("baseChangeWeq: g is not a local weak equivalence: " + gw.detail);

  auto o2 = overObject(composePshMor(g, o.map));
  auto im_f = fullImage(o);
  auto im_gf = fullImage(o2);
  auto im1_f = oneImage(o);
  auto im1_gf = oneImage(o2);

  BaseChangeReport r;
  r.im = isLocalWeq(inducedSubMor(im_f.im, im_gf.im, g), cap);
  r.im1 = isLocalWeq(inducedSubMor(im1_f.im, im1_gf.im, g), cap);
  r.ok = r.im.ok && r.im1.ok;
  return r;
}

namespace {

bool sameTables(const PshMor& a, const PshMor& b) {
  for (size_t u = 0; u < a.comp.size(); ++u) {
    if (a.comp[u].on_obj != b.comp[u].on_obj) return false;
    if (a.comp[u].on_mor != b.comp[u].on_mor) return false;
  }
  return true;
}

}  // namespace

SliceMapping sliceMapping(const OverObject& a, const OverObject& b, std::size_t cap) {
  if (a.base != b.base) throw StructuralError("sliceMapping: objects live over different bases");
  SliceMapping out;
  out.target = b.total;
  for (auto& cand : enumeratePshMor(*a.total, *b.total, cap))
    if (sameTables(composePshMor(b.map, cand), a.map)) out.objs.push_back(cand);

  const auto& s = a.base->s();
  for (Id i = 0; i < static_cast<Id>(out.objs.size()); ++i) {
    for (Id j = 0; j < static_cast<Id>(out.objs.size()); ++j) {
      for (auto& comp : enumerateModifications(out.objs[static_cast<size_t>(i)],
                                               out.objs[static_cast<size_t>(j)], cap)) {
        bool over_base = true;
        for (Id u = 0; u < s.cat.objects() && over_base; ++u) {
          const auto& whisker = b.map.comp[static_cast<size_t>(u)];
          for (Id x = 0; x < a.total->at(u).objects() && over_base; ++x) {
            Id k = whisker.mor(comp[static_cast<size_t>(u)][static_cast<size_t>(x)]);
            over_base = a.base->at(u).isIdentity(k) &&
                        a.base->at(u).src(k) == a.map.comp[static_cast<size_t>(u)].obj(x);
          }
        }
        if (over_base) out.mors.push_back({i, j, std::move(comp)});
      }
    }
  }
  return out;
}

bool SliceMapping::emptyOrPoint() const {
  if (objs.size() > 1) return false;
  for (const auto& h : mors) {
    if (h.src != h.dst) continue;
    for (size_t u = 0; u < h.comp.size(); ++u)
      for (Id c : h.comp[u])
        if (!target->at(static_cast<Id>(u)).isIdentity(c)) return false;
  }
  return true;
}

}  // namespace stk::psh
