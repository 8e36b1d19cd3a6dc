#include "stackcore/model.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace stk::grpd {

namespace {

// Spanning data of a groupoid: per component a root, a BFS object order and
// a chosen morphism root -> x for each object x. Any morphism m : x -> y
// factors as path(y) ∘ γ ∘ path(x)⁻¹ with γ in the root vertex group.
struct Skeleton {
  struct Component {
    Id root = kNone;
    std::vector<Id> objs;
    std::vector<Id> vertex;  // Aut(root)
    std::unordered_map<Id, int> vertex_index;
  };
  std::vector<Component> comps;
  std::vector<int> comp_of_obj;
  std::vector<Id> path_of_obj;  // morphism root(component) -> object

  Id gamma(const Groupoid& G, Id m) const {
    Id px = path_of_obj[static_cast<size_t>(G.src(m))];
    Id py = path_of_obj[static_cast<size_t>(G.dst(m))];
    return G.compose(G.inverse(py), G.compose(m, px));
  }
};

Skeleton buildSkeleton(const Groupoid& G) {
  Skeleton sk;
  sk.comp_of_obj.assign(static_cast<size_t>(G.objects()), -1);
  sk.path_of_obj.assign(static_cast<size_t>(G.objects()), kNone);
  for (Id r = 0; r < G.objects(); ++r) {
    if (sk.comp_of_obj[static_cast<size_t>(r)] != -1) continue;
    Skeleton::Component c;
    c.root = r;
    int ci = static_cast<int>(sk.comps.size());
    sk.comp_of_obj[static_cast<size_t>(r)] = ci;
    sk.path_of_obj[static_cast<size_t>(r)] = G.identity(r);
    c.objs.push_back(r);
    for (size_t qi = 0; qi < c.objs.size(); ++qi) {
      Id x = c.objs[qi];
      Id px = sk.path_of_obj[static_cast<size_t>(x)];
      for (Id m : G.out(x)) {
        Id y = G.dst(m);
        if (sk.comp_of_obj[static_cast<size_t>(y)] != -1) continue;
        sk.comp_of_obj[static_cast<size_t>(y)] = ci;
        sk.path_of_obj[static_cast<size_t>(y)] = G.compose(m, px);
        c.objs.push_back(y);
      }
      for (Id m : G.in(x)) {
        Id y = G.src(m);
        if (sk.comp_of_obj[static_cast<size_t>(y)] != -1) continue;
        sk.comp_of_obj[static_cast<size_t>(y)] = ci;
        sk.path_of_obj[static_cast<size_t>(y)] = G.compose(G.inverse(m), px);
        c.objs.push_back(y);
      }
    }
    c.vertex = G.hom(r, r);
    for (size_t i = 0; i < c.vertex.size(); ++i)
      c.vertex_index.emplace(c.vertex[i], static_cast<int>(i));
    sk.comps.push_back(std::move(c));
  }
  return sk;
}

// All group homomorphisms Aut_A -> Aut_B given as element-image tables
// (indexed like `va`); unit image is pinned to the unit.
std::vector<std::vector<Id>> enumerateGroupHoms(const Groupoid& A, const std::vector<Id>& va,
                                                const std::unordered_map<Id, int>& va_index,
                                                const Groupoid& B, const std::vector<Id>& vb) {
  std::vector<std::vector<Id>> out;
  const size_t n = va.size();
  std::vector<Id> img(n, kNone);
  std::vector<std::vector<int>> prod(n, std::vector<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      prod[i][j] = va_index.at(A.compose(va[i], va[j]));
  auto consistent = [&](size_t k) {
    for (size_t i = 0; i <= k; ++i) {
      for (size_t j = 0; j <= k; ++j) {
        size_t p = static_cast<size_t>(prod[i][j]);
        if (img[i] == kNone || img[j] == kNone || p > k) continue;
        if (img[p] != B.compose(img[i], img[j])) return false;
      }
    }
    return true;
  };
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == n) {
      out.push_back(img);
      return;
    }
    if (A.isIdentity(va[k])) {
      for (Id h : vb)
        if (B.isIdentity(h)) {
          img[k] = h;
          if (consistent(k)) rec(k + 1);
          img[k] = kNone;
        }
      return;
    }
    for (Id h : vb) {
      img[k] = h;
      if (consistent(k)) rec(k + 1);
    }
    img[k] = kNone;
  };
  rec(0);
  return out;
}

// Per-component functor datum: an image for the root, a vertex-group
// homomorphism and a morphism out of the root image for each object.
struct ComponentChoice {
  Id b = kNone;
  std::vector<Id> phi;  // indexed like vertex list
  std::vector<Id> u;    // indexed like component objects; u[0] = id_b
};

Functor assemble(const Groupoid& A, const Groupoid& B, const Skeleton& sk,
                 const std::vector<ComponentChoice>& choice) {
  Functor F;
  F.A = &A;
  F.B = &B;
  F.on_obj.assign(static_cast<size_t>(A.objects()), kNone);
  F.on_mor.assign(static_cast<size_t>(A.morphisms()), kNone);
  for (size_t ci = 0; ci < sk.comps.size(); ++ci) {
    const auto& c = sk.comps[ci];
    const auto& ch = choice[ci];
    for (size_t p = 0; p < c.objs.size(); ++p)
      F.on_obj[static_cast<size_t>(c.objs[p])] = B.dst(ch.u[p]);
  }
  std::vector<int> pos_of_obj(static_cast<size_t>(A.objects()), -1);
  for (const auto& c : sk.comps)
    for (size_t p = 0; p < c.objs.size(); ++p) pos_of_obj[static_cast<size_t>(c.objs[p])] = static_cast<int>(p);
  for (Id m = 0; m < A.morphisms(); ++m) {
    int ci = sk.comp_of_obj[static_cast<size_t>(A.src(m))];
    const auto& c = sk.comps[static_cast<size_t>(ci)];
    const auto& ch = choice[static_cast<size_t>(ci)];
    Id g = sk.gamma(A, m);
    Id phi_g = ch.phi[static_cast<size_t>(c.vertex_index.at(g))];
    Id ux = ch.u[static_cast<size_t>(pos_of_obj[static_cast<size_t>(A.src(m))])];
    Id uy = ch.u[static_cast<size_t>(pos_of_obj[static_cast<size_t>(A.dst(m))])];
    F.on_mor[static_cast<size_t>(m)] = B.compose(uy, B.compose(phi_g, B.inverse(ux)));
  }
  return F;
}

}  // namespace

Check checkFullyFaithful(const Functor& F) {
  const Groupoid& A = *F.A;
  const Groupoid& B = *F.B;
  for (Id x = 0; x < A.objects(); ++x)
    for (Id y = 0; y < A.objects(); ++y) {
      const auto& ha = A.hom(x, y);
      const auto& hb = B.hom(F.obj(x), F.obj(y));
      std::unordered_set<Id> images;
      for (Id m : ha)
        if (!images.insert(F.mor(m)).second)
          return {false, "not faithful on hom(" + std::to_string(x) + "," + std::to_string(y) + ")"};
      if (images.size() != hb.size())
        return {false, "not full on hom(" + std::to_string(x) + "," + std::to_string(y) + ")"};
    }
  return {};
}

Check checkEssentiallySurjective(const Functor& F) {
  const Groupoid& B = *F.B;
  Pi0 p = pi0(B);
  std::vector<char> hit(static_cast<size_t>(p.count), 0);
  for (Id x = 0; x < F.A->objects(); ++x)
    hit[static_cast<size_t>(p.comp_of_obj[static_cast<size_t>(F.obj(x))])] = 1;
  for (int c = 0; c < p.count; ++c)
    if (!hit[static_cast<size_t>(c)]) {
      for (Id y = 0; y < B.objects(); ++y)
        if (p.comp_of_obj[static_cast<size_t>(y)] == c)
          return {false, "object " + std::to_string(y) + " not isomorphic to any image"};
    }
  return {};
}

Check checkWeakEquivalence(const Functor& F) {
  Check ff = checkFullyFaithful(F);
  if (!ff.ok) return ff;
  return checkEssentiallySurjective(F);
}

Check checkFibration(const Functor& F) {
  const Groupoid& A = *F.A;
  const Groupoid& B = *F.B;
  for (Id x = 0; x < A.objects(); ++x) {
    std::unordered_set<Id> images;
    for (Id g : A.out(x)) images.insert(F.mor(g));
    for (Id h : B.out(F.obj(x)))
      if (!images.count(h))
        return {false, "morphism " + std::to_string(h) + " out of image of object " +
                           std::to_string(x) + " has no lift"};
  }
  return {};
}

Check checkCofibration(const Functor& F) {
  std::unordered_set<Id> seen;
  for (Id x = 0; x < F.A->objects(); ++x)
    if (!seen.insert(F.obj(x)).second)
      return {false, "objects collapse onto " + std::to_string(F.obj(x))};
  return {};
}

Check checkIsomorphism(const Functor& F) {
  Check c = checkCofibration(F);
  if (!c.ok) return c;
  if (F.A->objects() != F.B->objects()) return {false, "object counts differ"};
  if (F.A->morphisms() != F.B->morphisms()) return {false, "morphism counts differ"};
  std::unordered_set<Id> seen;
  for (Id m = 0; m < F.A->morphisms(); ++m)
    if (!seen.insert(F.mor(m)).second) return {false, "morphisms collapse"};
  return {};
}

bool isWeakEquivalence(const Functor& F) { return checkWeakEquivalence(F).ok; }
bool isFibration(const Functor& F) { return checkFibration(F).ok; }
bool isCofibration(const Functor& F) { return checkCofibration(F).ok; }

std::vector<Functor> enumerateFunctors(const Groupoid& A, const Groupoid& B, std::size_t cap) {
  std::vector<Functor> out;
  if (A.objects() == 0) {
    out.push_back(Functor{&A, &B, {}, {}});
    return out;
  }
  if (B.objects() == 0) return out;
  Skeleton sk = buildSkeleton(A);
  std::vector<std::vector<ComponentChoice>> local(sk.comps.size());
  for (size_t ci = 0; ci < sk.comps.size(); ++ci) {
    const auto& c = sk.comps[ci];
    for (Id b = 0; b < B.objects(); ++b) {
      auto homs = enumerateGroupHoms(A, c.vertex, c.vertex_index, B, B.hom(b, b));
      if (homs.empty()) continue;
      std::vector<std::vector<Id>> u_choices(c.objs.size());
      u_choices[0] = {B.identity(b)};
      for (size_t p = 1; p < c.objs.size(); ++p) u_choices[p] = B.out(b);
      std::vector<Id> u(c.objs.size());
      std::function<void(size_t, const std::vector<Id>&)> rec = [&](size_t p, const std::vector<Id>& phi) {
        if (p == c.objs.size()) {
          local[ci].push_back({b, phi, u});
          return;
        }
        for (Id cand : u_choices[p]) {
          u[p] = cand;
          rec(p + 1, phi);
        }
      };
      for (const auto& phi : homs) rec(0, phi);
    }
  }
  std::vector<ComponentChoice> choice(sk.comps.size());
  std::function<void(size_t)> recc = [&](size_t ci) {
    if (ci == sk.comps.size()) {
      if (out.size() >= cap) throw EnumerationOverflow("functor enumeration exceeds cap");
      out.push_back(assemble(A, B, sk, choice));
      return;
    }
    for (const auto& ch : local[ci]) {
      choice[ci] = ch;
      recc(ci + 1);
    }
  };
  recc(0);
  return out;
}

std::vector<std::vector<Id>> enumerateNatTrans(const Functor& F, const Functor& G,
                                               std::size_t cap) {
  const Groupoid& A = *F.A;
  const Groupoid& B = *F.B;
  if (F.B != G.B || F.A != G.A) throw StructuralError("transformations need parallel functors");
  std::vector<std::vector<Id>> out;
  if (A.objects() == 0) {
    out.push_back({});
    return out;
  }
  Skeleton sk = buildSkeleton(A);
  std::vector<std::vector<Id>> root_choices(sk.comps.size());
  for (size_t ci = 0; ci < sk.comps.size(); ++ci) {
    const auto& c = sk.comps[ci];
    for (Id k : B.hom(F.obj(c.root), G.obj(c.root))) {
      bool ok = true;
      for (Id g : c.vertex)
        if (B.compose(k, F.mor(g)) != B.compose(G.mor(g), k)) {
          ok = false;
          break;
        }
      if (ok) root_choices[ci].push_back(k);
    }
    if (root_choices[ci].empty()) return out;
  }
  std::vector<Id> pick(sk.comps.size());
  std::function<void(size_t)> rec = [&](size_t ci) {
    if (ci == sk.comps.size()) {
      if (out.size() >= cap) throw EnumerationOverflow("transformation enumeration exceeds cap");
      std::vector<Id> comp(static_cast<size_t>(A.objects()));
      for (size_t cj = 0; cj < sk.comps.size(); ++cj)
        for (Id x : sk.comps[cj].objs) {
          Id t = sk.path_of_obj[static_cast<size_t>(x)];
          comp[static_cast<size_t>(x)] =
              B.compose(G.mor(t), B.compose(pick[cj], B.inverse(F.mor(t))));
        }
      out.push_back(std::move(comp));
      return;
    }
    for (Id k : root_choices[ci]) {
      pick[ci] = k;
      rec(ci + 1);
    }
  };
  rec(0);
  return out;
}

FunctorGroupoid functorGroupoid(const Groupoid& A, const Groupoid& B, std::size_t cap) {
  FunctorGroupoid fg;
  auto a = std::make_shared<Groupoid>(A);
  auto b = std::make_shared<Groupoid>(B);
  fg.functor_of_obj = enumerateFunctors(*a, *b, cap);
  const int n = static_cast<int>(fg.functor_of_obj.size());
  std::vector<Mor> mors;
  std::vector<Id> inv;
  auto key_index = std::make_shared<std::map<std::vector<Id>, Id>>();
  auto payload = std::make_shared<std::vector<std::vector<Id>>>();
  auto keyOf = [](Id si, Id di, const std::vector<Id>& comp) {
    std::vector<Id> k;
    k.reserve(comp.size() + 2);
    k.push_back(si);
    k.push_back(di);
    k.insert(k.end(), comp.begin(), comp.end());
    return k;
  };
  for (Id si = 0; si < n; ++si)
    for (Id di = 0; di < n; ++di) {
      auto nts = enumerateNatTrans(fg.functor_of_obj[static_cast<size_t>(si)],
                                   fg.functor_of_obj[static_cast<size_t>(di)], cap);
      for (auto& comp : nts) {
        if (mors.size() >= cap) throw EnumerationOverflow("hom-groupoid exceeds cap");
        Id id = static_cast<Id>(mors.size());
        key_index->emplace(keyOf(si, di, comp), id);
        payload->push_back(comp);
        fg.nt_of_mor.emplace_back(si, comp);
        mors.push_back({si, di});
      }
    }
  std::vector<Id> ident(static_cast<size_t>(n));
  for (Id fi = 0; fi < n; ++fi) {
    const Functor& F = fg.functor_of_obj[static_cast<size_t>(fi)];
    std::vector<Id> comp;
    comp.reserve(static_cast<size_t>(a->objects()));
    for (Id x = 0; x < a->objects(); ++x) comp.push_back(b->identity(F.obj(x)));
    ident[static_cast<size_t>(fi)] = key_index->at(keyOf(fi, fi, comp));
  }
  auto mors_copy = std::make_shared<std::vector<Mor>>(mors);
  for (Id m = 0; m < static_cast<Id>(mors.size()); ++m) {
    const auto& comp = (*payload)[static_cast<size_t>(m)];
    std::vector<Id> icomp;
    icomp.reserve(comp.size());
    for (Id c : comp) icomp.push_back(b->inverse(c));
    inv.push_back(key_index->at(keyOf(mors[static_cast<size_t>(m)].dst,
                                      mors[static_cast<size_t>(m)].src, icomp)));
  }
  Groupoid::CompFn compfn = [b, key_index, payload, mors_copy, keyOf](Id m2, Id m1) {
    const auto& c1 = (*payload)[static_cast<size_t>(m1)];
    const auto& c2 = (*payload)[static_cast<size_t>(m2)];
    std::vector<Id> c(c1.size());
    for (size_t i = 0; i < c1.size(); ++i) c[i] = b->compose(c2[i], c1[i]);
    return key_index->at(keyOf((*mors_copy)[static_cast<size_t>(m1)].src,
                               (*mors_copy)[static_cast<size_t>(m2)].dst, c));
  };
  fg.grpd = std::make_shared<Groupoid>(
      Groupoid::make(n, std::move(mors), std::move(ident), std::move(inv), std::move(compfn)));
  for (auto& F : fg.functor_of_obj) {
    F.A = a.get();
    F.B = b.get();
  }
  fg.dom = a;
  fg.cod = b;
  return fg;
}

std::optional<Functor> findLift(const Functor& i, const Functor& p, const Functor& f,
                                const Functor& g, std::size_t cap) {
  const Groupoid& A = *i.A;
  const Groupoid& B = *i.B;
  const Groupoid& X = *p.A;
  const Groupoid& Y = *p.B;
  if (f.A != &A || f.B != &X || g.A != &B || g.B != &Y)
    throw StructuralError("findLift: square endpoints do not match");
  std::vector<Id> hobj(static_cast<size_t>(B.objects()), kNone);
  for (Id a = 0; a < A.objects(); ++a) {
    Id bx = i.obj(a);
    if (hobj[static_cast<size_t>(bx)] != kNone && hobj[static_cast<size_t>(bx)] != f.obj(a))
      return std::nullopt;
    hobj[static_cast<size_t>(bx)] = f.obj(a);
  }
  std::vector<Id> free_objs;
  for (Id bx = 0; bx < B.objects(); ++bx)
    if (hobj[static_cast<size_t>(bx)] == kNone) free_objs.push_back(bx);
  std::vector<std::vector<Id>> obj_cands(free_objs.size());
  for (size_t k = 0; k < free_objs.size(); ++k) {
    for (Id x = 0; x < X.objects(); ++x)
      if (p.obj(x) == g.obj(free_objs[k])) obj_cands[k].push_back(x);
    if (obj_cands[k].empty()) return std::nullopt;
  }
  std::size_t nodes = 0;

  std::vector<Id> hmor(static_cast<size_t>(B.morphisms()), kNone);
  std::vector<Id> trail;
  // Assigns h(m) = v, propagating inverses and composites; records
  // assignments on the trail so the caller can roll back.
  std::function<bool(Id, Id)> assign = [&](Id m, Id v) {
    if (hmor[static_cast<size_t>(m)] != kNone) return hmor[static_cast<size_t>(m)] == v;
    if (X.src(v) != hobj[static_cast<size_t>(B.src(m))] ||
        X.dst(v) != hobj[static_cast<size_t>(B.dst(m))])
      return false;
    if (p.mor(v) != g.mor(m)) return false;
    hmor[static_cast<size_t>(m)] = v;
    trail.push_back(m);
    if (!assign(B.inverse(m), X.inverse(v))) return false;
    for (Id m1 = 0; m1 < B.morphisms(); ++m1) {
      if (hmor[static_cast<size_t>(m1)] == kNone) continue;
      if (B.dst(m1) == B.src(m)) {
        if (!assign(B.compose(m, m1), X.compose(v, hmor[static_cast<size_t>(m1)]))) return false;
      }
      if (B.dst(m) == B.src(m1)) {
        if (!assign(B.compose(m1, m), X.compose(hmor[static_cast<size_t>(m1)], v))) return false;
      }
    }
    return true;
  };

  std::function<bool()> solveMors = [&]() -> bool {
    Id next = kNone;
    for (Id m = 0; m < B.morphisms(); ++m)
      if (hmor[static_cast<size_t>(m)] == kNone) {
        next = m;
        break;
      }
    if (next == kNone) return true;
    if (++nodes > cap) throw EnumerationOverflow("lift search exceeds cap");
    for (Id v : X.hom(hobj[static_cast<size_t>(B.src(next))], hobj[static_cast<size_t>(B.dst(next))])) {
      size_t mark = trail.size();
      if (assign(next, v) && solveMors()) return true;
      while (trail.size() > mark) {
        hmor[static_cast<size_t>(trail.back())] = kNone;
        trail.pop_back();
      }
    }
    return false;
  };

  std::function<bool(size_t)> solveObjs = [&](size_t k) -> bool {
    if (k == free_objs.size()) {
      trail.clear();
      std::fill(hmor.begin(), hmor.end(), kNone);
      bool seeded = true;
      for (Id bx = 0; bx < B.objects() && seeded; ++bx)
        seeded = assign(B.identity(bx), X.identity(hobj[static_cast<size_t>(bx)]));
      for (Id m = 0; m < A.morphisms() && seeded; ++m) seeded = assign(i.mor(m), f.mor(m));
      if (seeded && solveMors()) return true;
      return false;
    }
    for (Id x : obj_cands[k]) {
      hobj[static_cast<size_t>(free_objs[k])] = x;
      if (solveObjs(k + 1)) return true;
    }
    hobj[static_cast<size_t>(free_objs[k])] = kNone;
    return false;
  };

  if (!solveObjs(0)) return std::nullopt;
  Functor h;
  h.A = &B;
  h.B = &X;
  h.on_obj = hobj;
  h.on_mor = hmor;
  if (!h.validate().empty()) throw StructuralError("lift search produced an invalid functor");
  return h;
}

std::vector<GroupoidPtr> smallGroupoidFamily(int max_objects, int max_group) {
  std::vector<FinGroup> groups;
  for (int n = 1; n <= max_group; ++n) {
    groups.push_back(FinGroup::cyclic(n));
    if (n == 4) groups.push_back(FinGroup::product(FinGroup::cyclic(2), FinGroup::cyclic(2)));
    if (n == 6) groups.push_back(FinGroup::symmetric(3));
  }
  struct CompType {
    int k;
    int gi;
  };
  std::vector<CompType> types;
  for (int k = 1; k <= max_objects; ++k)
    for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi) types.push_back({k, gi});
  std::vector<GroupoidPtr> out;
  out.push_back(std::make_shared<Groupoid>(emptyGroupoid()));
  std::vector<int> chosen;
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    for (int t = start; t < static_cast<int>(types.size()); ++t) {
      if (types[t].k > remaining) continue;
      chosen.push_back(t);
      Groupoid g = connectedGroupoid(types[static_cast<size_t>(chosen[0])].k,
                                     groups[static_cast<size_t>(types[static_cast<size_t>(chosen[0])].gi)]);
      for (size_t j = 1; j < chosen.size(); ++j)
        g = coproductGroupoid(
            g, connectedGroupoid(types[static_cast<size_t>(chosen[j])].k,
                                 groups[static_cast<size_t>(types[static_cast<size_t>(chosen[j])].gi)]));
      out.push_back(std::make_shared<Groupoid>(std::move(g)));
      rec(t, remaining - types[static_cast<size_t>(t)].k);
      chosen.pop_back();
    }
  };
  rec(0, max_objects);
  return out;
}

}  // namespace stk::grpd
