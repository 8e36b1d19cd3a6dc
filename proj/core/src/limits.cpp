#include "stackcore/limits.hpp"

#include <algorithm>
#include <unordered_set>

namespace stk::grpd {

namespace {
std::uint64_t pairKey(Id x, Id y) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
         static_cast<std::uint32_t>(y);
}

std::string checkParallel(const Functor& F, const char* name, const Groupoid* A,
                          const Groupoid* B) {
  if (F.A != A || F.B != B) return std::string(name) + " has wrong endpoints";
  return F.validate();
}

bool sameTables(const Functor& F, const Functor& G) {
  return F.on_obj == G.on_obj && F.on_mor == G.on_mor;
}
}  // namespace

std::string CosimplicialGroupoid2::validate() const {
  if (!g0 || !g1 || !g2) return "missing level";
  for (const auto& [f, name, a, b] :
       {std::tuple{&d0_01, "d0:0->1", g0.get(), g1.get()},
        std::tuple{&d1_01, "d1:0->1", g0.get(), g1.get()},
        std::tuple{&d0_12, "d0:1->2", g1.get(), g2.get()},
        std::tuple{&d1_12, "d1:1->2", g1.get(), g2.get()},
        std::tuple{&d2_12, "d2:1->2", g1.get(), g2.get()},
        std::tuple{&s0_10, "s0:1->0", g1.get(), g0.get()}}) {
    std::string err = checkParallel(*f, name, a, b);
    if (!err.empty()) return err;
  }
  Functor idg0 = identityFunctor(*g0);
  if (!sameTables(composeFunctors(s0_10, d0_01), idg0)) return "s0∘d0 is not the identity";
  if (!sameTables(composeFunctors(s0_10, d1_01), idg0)) return "s0∘d1 is not the identity";
  if (!sameTables(composeFunctors(d1_12, d0_01), composeFunctors(d0_12, d0_01)))
    return "coface identity d1d0 = d0d0 fails";
  if (!sameTables(composeFunctors(d2_12, d0_01), composeFunctors(d0_12, d1_01)))
    return "coface identity d2d0 = d0d1 fails";
  if (!sameTables(composeFunctors(d2_12, d1_01), composeFunctors(d1_12, d1_01)))
    return "coface identity d2d1 = d1d1 fails";
  return "";
}

CosimplicialGroupoid2 constantCosimplicial(const Groupoid& G) {
  CosimplicialGroupoid2 D;
  D.g0 = std::make_shared<Groupoid>(G);
  D.g1 = D.g0;
  D.g2 = D.g0;
  Functor id = identityFunctor(*D.g0);
  D.d0_01 = D.d1_01 = id;
  D.d0_12 = D.d1_12 = D.d2_12 = id;
  D.s0_10 = id;
  return D;
}

Id Descent::objIndex(Id x, Id h) const {
  auto it = obj_index->find({x, h});
  return it == obj_index->end() ? kNone : it->second;
}

Id Descent::morIndex(Id src_obj, Id g) const {
  auto it = mor_index->find({src_obj, g});
  return it == mor_index->end() ? kNone : it->second;
}

Descent holimDescent(const CosimplicialGroupoid2& D) {
  std::string err = D.validate();
  if (!err.empty()) throw StructuralError("holimDescent: " + err);
  const Groupoid& G0 = *D.g0;
  const Groupoid& G1 = *D.g1;
  const Groupoid& G2 = *D.g2;

  Descent out;
  out.g0 = D.g0;
  out.g1 = D.g1;
  out.obj_index = std::make_shared<std::map<std::pair<Id, Id>, Id>>();
  out.mor_index = std::make_shared<std::map<std::pair<Id, Id>, Id>>();
  for (Id x = 0; x < G0.objects(); ++x)
    for (Id h : G1.hom(D.d1_01.obj(x), D.d0_01.obj(x))) {
      if (D.s0_10.mor(h) != G0.identity(x)) continue;
      if (G2.compose(D.d0_12.mor(h), D.d2_12.mor(h)) != D.d1_12.mor(h)) continue;
      Id idx = static_cast<Id>(out.obj_data.size());
      out.obj_data.emplace_back(x, h);
      out.obj_index->emplace(std::pair{x, h}, idx);
    }

  std::vector<Mor> mors;
  std::vector<Id> ident(out.obj_data.size(), kNone), inv;
  for (Id oi = 0; oi < static_cast<Id>(out.obj_data.size()); ++oi) {
    auto [x, h] = out.obj_data[static_cast<size_t>(oi)];
    for (Id g : G0.out(x)) {
      Id hp = G1.compose(D.d0_01.mor(g), G1.compose(h, G1.inverse(D.d1_01.mor(g))));
      Id oj = out.objIndex(G0.dst(g), hp);
      if (oj == kNone)
        throw StructuralError("holimDescent: transported cocycle left the descent category");
      Id mid = static_cast<Id>(out.mor_data.size());
      out.mor_data.emplace_back(oi, g);
      out.mor_index->emplace(std::pair{oi, g}, mid);
      mors.push_back({oi, oj});
    }
  }
  for (Id mid = 0; mid < static_cast<Id>(out.mor_data.size()); ++mid) {
    auto [oi, g] = out.mor_data[static_cast<size_t>(mid)];
    Id oj = mors[static_cast<size_t>(mid)].dst;
    if (G0.isIdentity(g) && ident[static_cast<size_t>(oi)] == kNone && oi == oj)
      ident[static_cast<size_t>(oi)] = mid;
    inv.push_back(out.mor_index->at({oj, G0.inverse(g)}));
  }
  auto g0 = out.g0;
  auto mor_index = out.mor_index;
  auto mor_data = std::make_shared<std::vector<std::pair<Id, Id>>>(out.mor_data);
  Groupoid::CompFn comp = [g0, mor_index, mor_data](Id m2, Id m1) {
    auto [o1, ga] = (*mor_data)[static_cast<size_t>(m1)];
    Id gb = (*mor_data)[static_cast<size_t>(m2)].second;
    return mor_index->at({o1, g0->compose(gb, ga)});
  };
  out.grpd = std::make_shared<Groupoid>(
      Groupoid::make(static_cast<int>(out.obj_data.size()), std::move(mors), std::move(ident),
                     std::move(inv), std::move(comp)));
  return out;
}

Functor descentComparison(const Descent& H, const CosimplicialGroupoid2& D, const Functor& aug) {
  if (aug.B != D.g0.get() || D.g0 != H.g0)
    throw StructuralError("descentComparison: augmentation must land in level 0");
  if (!sameTables(composeFunctors(D.d0_01, aug), composeFunctors(D.d1_01, aug)))
    throw StructuralError("descentComparison: augmentation does not equalize the cofaces");
  Functor c;
  c.A = aug.A;
  c.B = H.grpd.get();
  for (Id y = 0; y < aug.A->objects(); ++y) {
    Id x = aug.obj(y);
    Id idx = H.objIndex(x, D.g1->identity(D.d0_01.obj(x)));
    if (idx == kNone) throw StructuralError("descentComparison: identity cocycle missing");
    c.on_obj.push_back(idx);
  }
  for (Id m = 0; m < aug.A->morphisms(); ++m) {
    Id mid = H.morIndex(c.obj(aug.A->src(m)), aug.mor(m));
    if (mid == kNone) throw StructuralError("descentComparison: morphism has no descent image");
    c.on_mor.push_back(mid);
  }
  return c;
}

Id HomotopyFiberProduct::objIndex(Id x, Id y, Id k) const {
  auto it = obj_index->find({x, y, k});
  return it == obj_index->end() ? kNone : it->second;
}

Id HomotopyFiberProduct::morIndex(Id src_obj, Id g, Id h) const {
  auto it = mor_index->find({src_obj, g, h});
  return it == mor_index->end() ? kNone : it->second;
}

HomotopyFiberProduct homotopyFiberProduct(const Functor& f1, const Functor& f2) {
  if (f1.B != f2.B) throw StructuralError("homotopyFiberProduct: targets must coincide");
  const Groupoid& X = *f1.A;
  const Groupoid& Y = *f2.A;
  const Groupoid& Z = *f1.B;
  HomotopyFiberProduct out;
  out.x = std::make_shared<Groupoid>(X);
  out.y = std::make_shared<Groupoid>(Y);
  out.z = std::make_shared<Groupoid>(Z);
  out.obj_index = std::make_shared<std::map<std::array<Id, 3>, Id>>();
  out.mor_index = std::make_shared<std::map<std::array<Id, 3>, Id>>();
  for (Id x = 0; x < X.objects(); ++x)
    for (Id y = 0; y < Y.objects(); ++y)
      for (Id k : Z.hom(f1.obj(x), f2.obj(y))) {
        Id idx = static_cast<Id>(out.obj_data.size());
        out.obj_data.push_back({x, y, k});
        out.obj_index->emplace(std::array{x, y, k}, idx);
      }
  std::vector<Mor> mors;
  std::vector<Id> ident(out.obj_data.size(), kNone), inv;
  for (Id oi = 0; oi < static_cast<Id>(out.obj_data.size()); ++oi) {
    auto [x, y, k] = out.obj_data[static_cast<size_t>(oi)];
    for (Id g : X.out(x))
      for (Id h : Y.out(y)) {
        Id kp = Z.compose(f2.mor(h), Z.compose(k, Z.inverse(f1.mor(g))));
        Id oj = out.objIndex(X.dst(g), Y.dst(h), kp);
        if (oj == kNone) throw StructuralError("homotopyFiberProduct: closure failure");
        Id mid = static_cast<Id>(out.mor_data.size());
        out.mor_data.push_back({oi, g, h});
        out.mor_index->emplace(std::array{oi, g, h}, mid);
        mors.push_back({oi, oj});
      }
  }
  for (Id mid = 0; mid < static_cast<Id>(out.mor_data.size()); ++mid) {
    auto [oi, g, h] = out.mor_data[static_cast<size_t>(mid)];
    Id oj = mors[static_cast<size_t>(mid)].dst;
    if (X.isIdentity(g) && Y.isIdentity(h) && oi == oj) ident[static_cast<size_t>(oi)] = mid;
    inv.push_back(out.mor_index->at({oj, X.inverse(g), Y.inverse(h)}));
  }
  auto xg = out.x;
  auto yg = out.y;
  auto mor_index = out.mor_index;
  auto mor_data = std::make_shared<std::vector<std::array<Id, 3>>>(out.mor_data);
  Groupoid::CompFn comp = [xg, yg, mor_index, mor_data](Id m2, Id m1) {
    auto [o1, g1, h1] = (*mor_data)[static_cast<size_t>(m1)];
    auto [o2, g2, h2] = (*mor_data)[static_cast<size_t>(m2)];
    (void)o2;
    return mor_index->at({o1, xg->compose(g2, g1), yg->compose(h2, h1)});
  };
  out.grpd = std::make_shared<Groupoid>(
      Groupoid::make(static_cast<int>(out.obj_data.size()), std::move(mors), std::move(ident),
                     std::move(inv), std::move(comp)));
  out.proj1.A = out.grpd.get();
  out.proj1.B = f1.A;
  out.proj2.A = out.grpd.get();
  out.proj2.B = f2.A;
  for (auto& od : out.obj_data) {
    out.proj1.on_obj.push_back(od[0]);
    out.proj2.on_obj.push_back(od[1]);
  }
  for (auto& md : out.mor_data) {
    out.proj1.on_mor.push_back(md[1]);
    out.proj2.on_mor.push_back(md[2]);
  }
  return out;
}

StrictFiberProduct strictFiberProduct(const Functor& f1, const Functor& f2) {
  if (f1.B != f2.B) throw StructuralError("strictFiberProduct: targets must coincide");
  const Groupoid& X = *f1.A;
  const Groupoid& Y = *f2.A;
  StrictFiberProduct out;
  std::map<std::pair<Id, Id>, Id> obj_index;
  for (Id x = 0; x < X.objects(); ++x)
    for (Id y = 0; y < Y.objects(); ++y)
      if (f1.obj(x) == f2.obj(y)) {
        obj_index.emplace(std::pair{x, y}, static_cast<Id>(out.obj_data.size()));
        out.obj_data.emplace_back(x, y);
      }
  auto mor_index = std::make_shared<std::unordered_map<std::uint64_t, Id>>();
  std::vector<Mor> mors;
  std::vector<Id> ident(out.obj_data.size(), kNone), inv;
  for (Id g = 0; g < X.morphisms(); ++g)
    for (Id h = 0; h < Y.morphisms(); ++h)
      if (f1.mor(g) == f2.mor(h)) {
        Id mid = static_cast<Id>(out.mor_data.size());
        out.mor_data.emplace_back(g, h);
        mor_index->emplace(pairKey(g, h), mid);
        mors.push_back({obj_index.at({X.src(g), Y.src(h)}), obj_index.at({X.dst(g), Y.dst(h)})});
      }
  for (Id mid = 0; mid < static_cast<Id>(out.mor_data.size()); ++mid) {
    auto [g, h] = out.mor_data[static_cast<size_t>(mid)];
    if (X.isIdentity(g) && Y.isIdentity(h))
      ident[static_cast<size_t>(mors[static_cast<size_t>(mid)].src)] = mid;
    inv.push_back(mor_index->at(pairKey(X.inverse(g), Y.inverse(h))));
  }
  for (size_t oi = 0; oi < out.obj_data.size(); ++oi)
    if (ident[oi] == kNone) throw StructuralError("strictFiberProduct: missing identity");
  auto xg = std::make_shared<Groupoid>(X);
  auto yg = std::make_shared<Groupoid>(Y);
  auto mor_data = std::make_shared<std::vector<std::pair<Id, Id>>>(out.mor_data);
  Groupoid::CompFn comp = [xg, yg, mor_index, mor_data](Id m2, Id m1) {
    auto [g1, h1] = (*mor_data)[static_cast<size_t>(m1)];
    auto [g2, h2] = (*mor_data)[static_cast<size_t>(m2)];
    return mor_index->at(pairKey(xg->compose(g2, g1), yg->compose(h2, h1)));
  };
  out.grpd = std::make_shared<Groupoid>(
      Groupoid::make(static_cast<int>(out.obj_data.size()), std::move(mors), std::move(ident),
                     std::move(inv), std::move(comp)));
  return out;
}

Functor strictToHomotopyComparison(const StrictFiberProduct& S, const HomotopyFiberProduct& P) {
  Functor c;
  c.A = S.grpd.get();
  c.B = P.grpd.get();
  for (auto [x, y] : S.obj_data) {
    Id oi = kNone;
    for (Id cand = 0; cand < static_cast<Id>(P.obj_data.size()); ++cand) {
      const auto& od = P.obj_data[static_cast<size_t>(cand)];
      if (od[0] == x && od[1] == y && P.z->isIdentity(od[2])) {
        oi = cand;
        break;
      }
    }
    if (oi == kNone) throw StructuralError("comparison: identity triple missing");
    c.on_obj.push_back(oi);
  }
  for (Id sm = 0; sm < static_cast<Id>(S.mor_data.size()); ++sm) {
    auto [g, h] = S.mor_data[static_cast<size_t>(sm)];
    Id mid = P.morIndex(c.obj(S.grpd->src(sm)), g, h);
    if (mid == kNone) throw StructuralError("comparison: morphism missing");
    c.on_mor.push_back(mid);
  }
  return c;
}

// Pushout saturation ---------------------------------------------------------

namespace {

struct SaturationState {
  std::vector<Id> par, src, dst, inv;
  std::vector<std::array<Id, 3>> prov;
  std::map<std::pair<Id, Id>, Id> table;
  std::vector<Id> id_of_class;
  bool changed = false;

  Id find(Id e) {
    while (par[static_cast<size_t>(e)] != e) {
      par[static_cast<size_t>(e)] = par[static_cast<size_t>(par[static_cast<size_t>(e)])];
      e = par[static_cast<size_t>(e)];
    }
    return e;
  }

  Id fresh(Id s, Id d, std::array<Id, 3> p) {
    Id e = static_cast<Id>(par.size());
    par.push_back(e);
    src.push_back(s);
    dst.push_back(d);
    inv.push_back(kNone);
    prov.push_back(p);
    return e;
  }

  void merge(Id a, Id b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the earliest element as the root
    if (src[static_cast<size_t>(a)] != src[static_cast<size_t>(b)] ||
        dst[static_cast<size_t>(a)] != dst[static_cast<size_t>(b)])
      throw StructuralError("pushout saturation merged morphisms with different endpoints");
    par[static_cast<size_t>(b)] = a;
    changed = true;
    Id ia = inv[static_cast<size_t>(a)], ib = inv[static_cast<size_t>(b)];
    if (ia == kNone)
      inv[static_cast<size_t>(a)] = ib;
    else if (ib != kNone)
      merge(ia, ib);
  }

  void addEntry(Id g, Id f, Id v) {
    g = find(g);
    f = find(f);
    v = find(v);
    auto it = table.find({g, f});
    if (it == table.end()) {
      table.emplace(std::pair{g, f}, v);
      changed = true;
    } else if (find(it->second) != v) {
      merge(it->second, v);
    }
  }

  void propagate() {
    do {
      changed = false;
      std::map<std::pair<Id, Id>, Id> canon;
      for (auto& [key, v] : table) {
        std::pair<Id, Id> k{find(key.first), find(key.second)};
        Id cv = find(v);
        auto it = canon.find(k);
        if (it == canon.end())
          canon.emplace(k, cv);
        else if (find(it->second) != cv)
          merge(it->second, cv);
      }
      table.swap(canon);
      for (Id e = 0; e < static_cast<Id>(par.size()); ++e) {
        if (find(e) != e) continue;
        addEntry(id_of_class[static_cast<size_t>(dst[static_cast<size_t>(e)])], e, e);
        addEntry(e, id_of_class[static_cast<size_t>(src[static_cast<size_t>(e)])], e);
        Id iv = inv[static_cast<size_t>(e)];
        if (iv != kNone) {
          iv = find(iv);
          addEntry(iv, e, id_of_class[static_cast<size_t>(src[static_cast<size_t>(e)])]);
          addEntry(e, iv, id_of_class[static_cast<size_t>(dst[static_cast<size_t>(e)])]);
        }
      }
      // Associativity completion: entries (h,g) and (g,f) force h∘(g∘f)
      // and (h∘g)∘f to agree, defining whichever side is missing.
      std::map<Id, std::vector<std::pair<Id, Id>>> by_left;
      for (auto& [key, v] : table) by_left[key.first].push_back({key.second, v});
      std::vector<std::array<Id, 4>> todo;
      for (auto& [key, a] : table) {
        auto it = by_left.find(find(key.second));
        if (it == by_left.end()) continue;
        for (auto& [f, b] : it->second) todo.push_back({key.first, key.second, f, 0});
      }
      for (auto& t : todo) {
        Id h = find(t[0]), g = find(t[1]), f = find(t[2]);
        auto ihg = table.find({h, g});
        auto igf = table.find({g, f});
        if (ihg == table.end() || igf == table.end()) continue;
        Id a = find(ihg->second), b = find(igf->second);
        auto iaf = table.find({a, f});
        auto ihb = table.find({h, b});
        if (iaf != table.end() && ihb != table.end())
          merge(iaf->second, ihb->second);
        else if (iaf != table.end())
          addEntry(h, b, find(iaf->second));
        else if (ihb != table.end())
          addEntry(a, f, find(ihb->second));
      }
    } while (changed);
  }
};

}  // namespace

PushoutGroupoid pushoutAlongCofibration(const Functor& F, const Functor& Fp, std::size_t cap) {
  if (F.A != Fp.A) throw StructuralError("pushout: functors must share their source");
  if (!isCofibration(F))
    throw StructuralError("pushout: first functor must be injective on objects");
  const Groupoid& G = *F.A;
  const Groupoid& H = *F.B;
  const Groupoid& G2 = *Fp.B;

  // Object classes of H_0 ⊔ G'_0 under F(x) ~ F'(x).
  const int raw_objs = H.objects() + G2.objects();
  std::vector<Id> opar(static_cast<size_t>(raw_objs));
  for (size_t i = 0; i < opar.size(); ++i) opar[i] = static_cast<Id>(i);
  std::function<Id(Id)> ofind = [&](Id o) {
    while (opar[static_cast<size_t>(o)] != o) {
      opar[static_cast<size_t>(o)] = opar[static_cast<size_t>(opar[static_cast<size_t>(o)])];
      o = opar[static_cast<size_t>(o)];
    }
    return o;
  };
  for (Id x = 0; x < G.objects(); ++x) {
    Id a = ofind(F.obj(x));
    Id b = ofind(static_cast<Id>(H.objects() + Fp.obj(x)));
    if (a != b) opar[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<Id> class_of_raw(static_cast<size_t>(raw_objs));
  std::vector<Id> side_of_class, orig_of_class;
  {
    std::unordered_map<Id, Id> compact;
    for (Id o = 0; o < raw_objs; ++o) {
      Id r = ofind(o);
      auto it = compact.find(r);
      if (it == compact.end()) {
        it = compact.emplace(r, static_cast<Id>(side_of_class.size())).first;
        side_of_class.push_back(r < H.objects() ? 0 : 1);
        orig_of_class.push_back(r < H.objects() ? r : r - H.objects());
      }
      class_of_raw[static_cast<size_t>(o)] = it->second;
    }
  }
  const int n_classes = static_cast<int>(side_of_class.size());

  SaturationState st;
  st.id_of_class.assign(static_cast<size_t>(n_classes), kNone);
  std::vector<Id> eH(static_cast<size_t>(H.morphisms()));
  std::vector<Id> eG2(static_cast<size_t>(G2.morphisms()));
  for (Id m = 0; m < H.morphisms(); ++m)
    eH[static_cast<size_t>(m)] =
        st.fresh(class_of_raw[static_cast<size_t>(H.src(m))],
                 class_of_raw[static_cast<size_t>(H.dst(m))], {0, m, kNone});
  for (Id m = 0; m < G2.morphisms(); ++m)
    eG2[static_cast<size_t>(m)] =
        st.fresh(class_of_raw[static_cast<size_t>(H.objects() + G2.src(m))],
                 class_of_raw[static_cast<size_t>(H.objects() + G2.dst(m))], {1, m, kNone});
  for (Id m = 0; m < H.morphisms(); ++m)
    st.inv[static_cast<size_t>(eH[static_cast<size_t>(m)])] = eH[static_cast<size_t>(H.inverse(m))];
  for (Id m = 0; m < G2.morphisms(); ++m)
    st.inv[static_cast<size_t>(eG2[static_cast<size_t>(m)])] =
        eG2[static_cast<size_t>(G2.inverse(m))];
  for (Id x = 0; x < H.objects(); ++x)
    st.id_of_class[static_cast<size_t>(class_of_raw[static_cast<size_t>(x)])] =
        eH[static_cast<size_t>(H.identity(x))];
  for (Id x = 0; x < G2.objects(); ++x) {
    Id c = class_of_raw[static_cast<size_t>(H.objects() + x)];
    if (st.id_of_class[static_cast<size_t>(c)] == kNone)
      st.id_of_class[static_cast<size_t>(c)] = eG2[static_cast<size_t>(G2.identity(x))];
  }
  for (Id f = 0; f < H.morphisms(); ++f)
    for (Id g : H.out(H.dst(f)))
      st.table[{eH[static_cast<size_t>(g)], eH[static_cast<size_t>(f)]}] =
          eH[static_cast<size_t>(H.compose(g, f))];
  for (Id f = 0; f < G2.morphisms(); ++f)
    for (Id g : G2.out(G2.dst(f)))
      st.table[{eG2[static_cast<size_t>(g)], eG2[static_cast<size_t>(f)]}] =
          eG2[static_cast<size_t>(G2.compose(g, f))];
  for (Id m = 0; m < G.morphisms(); ++m)
    st.merge(eH[static_cast<size_t>(F.mor(m))], eG2[static_cast<size_t>(Fp.mor(m))]);

  while (true) {
    st.propagate();
    if (st.par.size() > cap)
      throw EnumerationOverflow("pushout saturation exceeded its element cap; "
                                "the pushout groupoid may be infinite");
    std::pair<Id, Id> missing{kNone, kNone};
    std::vector<Id> roots;
    for (Id e = 0; e < static_cast<Id>(st.par.size()); ++e)
      if (st.find(e) == e) roots.push_back(e);
    for (Id g : roots) {
      for (Id f : roots) {
        if (st.dst[static_cast<size_t>(f)] != st.src[static_cast<size_t>(g)]) continue;
        if (!st.table.count({g, f})) {
          missing = {g, f};
          break;
        }
      }
      if (missing.first != kNone) break;
    }
    if (missing.first == kNone) break;
    auto [g, f] = missing;
    Id c = st.fresh(st.src[static_cast<size_t>(f)], st.dst[static_cast<size_t>(g)],
                    {2, g, f});
    st.addEntry(g, f, c);
    Id ig = st.find(st.inv[static_cast<size_t>(g)]);
    Id iff = st.find(st.inv[static_cast<size_t>(f)]);
    auto it = st.table.find({iff, ig});
    if (it != st.table.end()) {
      Id c2 = st.find(it->second);
      st.inv[static_cast<size_t>(c)] = c2;
      if (st.inv[static_cast<size_t>(c2)] == kNone) st.inv[static_cast<size_t>(c2)] = c;
    } else {
      Id c2 = st.fresh(st.dst[static_cast<size_t>(g)], st.src[static_cast<size_t>(f)],
                       {2, iff, ig});
      st.addEntry(iff, ig, c2);
      st.inv[static_cast<size_t>(c)] = c2;
      st.inv[static_cast<size_t>(c2)] = c;
    }
  }

  // Compact to a groupoid.
  PushoutGroupoid out;
  std::vector<Id> mor_of_el(st.par.size(), kNone);
  std::vector<Id> rep;
  for (Id e = 0; e < static_cast<Id>(st.par.size()); ++e)
    if (st.find(e) == e) {
      mor_of_el[static_cast<size_t>(e)] = static_cast<Id>(rep.size());
      rep.push_back(e);
    }
  for (Id e = 0; e < static_cast<Id>(st.par.size()); ++e)
    mor_of_el[static_cast<size_t>(e)] = mor_of_el[static_cast<size_t>(st.find(e))];
  std::vector<Mor> mors;
  std::vector<Id> ident(static_cast<size_t>(n_classes)), inv;
  for (Id r : rep) mors.push_back({st.src[static_cast<size_t>(r)], st.dst[static_cast<size_t>(r)]});
  for (Id c = 0; c < n_classes; ++c)
    ident[static_cast<size_t>(c)] =
        mor_of_el[static_cast<size_t>(st.id_of_class[static_cast<size_t>(c)])];
  for (Id r : rep) {
    Id iv = st.inv[static_cast<size_t>(r)];
    if (iv == kNone) throw StructuralError("pushout saturation left a morphism without inverse");
    inv.push_back(mor_of_el[static_cast<size_t>(iv)]);
  }
  auto comp_table = std::make_shared<std::unordered_map<std::uint64_t, Id>>();
  for (auto& [key, v] : st.table)
    comp_table->emplace(pairKey(mor_of_el[static_cast<size_t>(key.first)],
                                mor_of_el[static_cast<size_t>(key.second)]),
                        mor_of_el[static_cast<size_t>(v)]);
  Groupoid::CompFn comp = [comp_table](Id m2, Id m1) {
    auto it = comp_table->find(pairKey(m2, m1));
    if (it == comp_table->end()) throw StructuralError("pushout composition table incomplete");
    return it->second;
  };
  out.grpd = std::make_shared<Groupoid>(Groupoid::make(
      n_classes, std::move(mors), std::move(ident), std::move(inv), std::move(comp)));
  std::string verr = out.grpd->validate();
  if (!verr.empty()) throw StructuralError("pushout result invalid: " + verr);

  out.h = std::make_shared<Groupoid>(H);
  out.g2 = std::make_shared<Groupoid>(G2);
  out.inj_h.A = out.h.get();
  out.inj_h.B = out.grpd.get();
  for (Id x = 0; x < H.objects(); ++x)
    out.inj_h.on_obj.push_back(class_of_raw[static_cast<size_t>(x)]);
  for (Id m = 0; m < H.morphisms(); ++m)
    out.inj_h.on_mor.push_back(mor_of_el[static_cast<size_t>(eH[static_cast<size_t>(m)])]);
  out.inj_g2.A = out.g2.get();
  out.inj_g2.B = out.grpd.get();
  for (Id x = 0; x < G2.objects(); ++x)
    out.inj_g2.on_obj.push_back(class_of_raw[static_cast<size_t>(H.objects() + x)]);
  for (Id m = 0; m < G2.morphisms(); ++m)
    out.inj_g2.on_mor.push_back(mor_of_el[static_cast<size_t>(eG2[static_cast<size_t>(m)])]);
  for (const Functor* inj : {&out.inj_h, &out.inj_g2}) {
    std::string err = inj->validate();
    if (!err.empty()) throw StructuralError("pushout injection invalid: " + err);
  }
  out.element_prov = st.prov;
  out.mor_of_element = mor_of_el;
  out.rep_element_of_mor = rep;
  out.obj_side = side_of_class;
  out.obj_orig = orig_of_class;
  return out;
}

Functor mediatingFunctor(const PushoutGroupoid& P, const Functor& c1, const Functor& c2) {
  if (c1.A != P.inj_h.A || c2.A != P.inj_g2.A || c1.B != c2.B)
    throw StructuralError("mediatingFunctor: cocone endpoints do not match");
  const Groupoid& T = *c1.B;
  const Groupoid& Pg = *P.grpd;
  Functor med;
  med.A = P.grpd.get();
  med.B = c1.B;
  med.on_obj.assign(static_cast<size_t>(Pg.objects()), kNone);
  for (Id c = 0; c < Pg.objects(); ++c)
    med.on_obj[static_cast<size_t>(c)] = P.obj_side[static_cast<size_t>(c)] == 0
                                             ? c1.obj(P.obj_orig[static_cast<size_t>(c)])
                                             : c2.obj(P.obj_orig[static_cast<size_t>(c)]);
  med.on_mor.assign(static_cast<size_t>(Pg.morphisms()), kNone);
  std::function<Id(Id)> image = [&](Id mor) -> Id {
    Id& slot = med.on_mor[static_cast<size_t>(mor)];
    if (slot != kNone) return slot;
    const auto& pv = P.element_prov[static_cast<size_t>(P.rep_element_of_mor[static_cast<size_t>(mor)])];
    Id v;
    if (pv[0] == 0)
      v = c1.mor(pv[1]);
    else if (pv[0] == 1)
      v = c2.mor(pv[1]);
    else
      v = T.compose(image(P.mor_of_element[static_cast<size_t>(pv[1])]),
                    image(P.mor_of_element[static_cast<size_t>(pv[2])]));
    slot = v;
    return v;
  };
  for (Id m = 0; m < Pg.morphisms(); ++m) image(m);
  std::string err = med.validate();
  if (!err.empty()) throw StructuralError("mediatingFunctor: cocone does not commute: " + err);
  for (Id m = 0; m < P.inj_h.A->morphisms(); ++m)
    if (med.mor(P.inj_h.mor(m)) != c1.mor(m))
      throw StructuralError("mediatingFunctor: disagrees with the first leg");
  for (Id m = 0; m < P.inj_g2.A->morphisms(); ++m)
    if (med.mor(P.inj_g2.mor(m)) != c2.mor(m))
      throw StructuralError("mediatingFunctor: disagrees with the second leg");
  return med;
}

namespace {
// F × F' : A×B -> C×D in the row-major object/morphism encoding of
// productGroupoid.
Functor productFunctor(const Groupoid& AxB, const Groupoid& CxD, const Functor& F,
                       const Functor& Fp) {
  Functor r;
  r.A = &AxB;
  r.B = &CxD;
  const int bn = Fp.A->objects(), bm = Fp.A->morphisms();
  const int dn = Fp.B->objects(), dm = Fp.B->morphisms();
  for (Id o = 0; o < AxB.objects(); ++o)
    r.on_obj.push_back(F.obj(o / bn) * dn + Fp.obj(o % bn));
  for (Id m = 0; m < AxB.morphisms(); ++m)
    r.on_mor.push_back(F.mor(m / bm) * dm + Fp.mor(m % bm));
  return r;
}
}  // namespace

PushoutProduct pushoutProduct(const Functor& F, const Functor& Fp, std::size_t cap) {
  if (!isCofibration(F) || !isCofibration(Fp))
    throw StructuralError("pushoutProduct: both inputs must be cofibrations");
  PushoutProduct out;
  out.gxgp = std::make_shared<Groupoid>(productGroupoid(*F.A, *Fp.A));
  out.hxgp = std::make_shared<Groupoid>(productGroupoid(*F.B, *Fp.A));
  out.gxhp = std::make_shared<Groupoid>(productGroupoid(*F.A, *Fp.B));
  out.hxhp = std::make_shared<Groupoid>(productGroupoid(*F.B, *Fp.B));
  Functor idA = identityFunctor(*F.A);
  Functor idB = identityFunctor(*F.B);
  Functor idAp = identityFunctor(*Fp.A);
  Functor idBp = identityFunctor(*Fp.B);
  Functor fx1 = productFunctor(*out.gxgp, *out.hxgp, F, idAp);
  Functor ixfp = productFunctor(*out.gxgp, *out.gxhp, idA, Fp);
  out.pushout = pushoutAlongCofibration(fx1, ixfp, cap);
  Functor leg1 = productFunctor(*out.hxgp, *out.hxhp, idB, Fp);
  Functor leg2 = productFunctor(*out.gxhp, *out.hxhp, F, idBp);
  leg1.A = out.pushout.h.get();
  leg2.A = out.pushout.g2.get();
  out.box = mediatingFunctor(out.pushout, leg1, leg2);
  return out;
}

IntervalInclusion makeJ() {
  IntervalInclusion out;
  out.pt = std::make_shared<Groupoid>(terminalGroupoid());
  out.delta1 = std::make_shared<Groupoid>(intervalGroupoid());
  out.j.A = out.pt.get();
  out.j.B = out.delta1.get();
  out.j.on_obj = {0};
  out.j.on_mor = {out.delta1->identity(0)};
  return out;
}

JPushoutProduct jPushoutProduct(const Functor& F) {
  if (!isCofibration(F)) throw StructuralError("jPushoutProduct: input must be a cofibration");
  const Groupoid& G = *F.A;
  JPushoutProduct out;
  out.h = std::make_shared<Groupoid>(*F.B);
  out.delta1 = std::make_shared<Groupoid>(intervalGroupoid());
  out.hxd1 = std::make_shared<Groupoid>(productGroupoid(*out.h, *out.delta1));
  const Groupoid& H = *out.h;
  const int gn = G.objects();
  const int n = gn + H.objects();
  auto pi = [&](Id a) { return a < gn ? F.obj(a) : static_cast<Id>(a - gn); };
  auto mor_index = std::make_shared<std::map<std::array<Id, 3>, Id>>();
  auto mor_data = std::make_shared<std::vector<std::array<Id, 3>>>();
  std::vector<Mor> mors;
  std::vector<Id> ident(static_cast<size_t>(n), kNone), inv;
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      for (Id h : H.hom(pi(a), pi(b))) {
        Id mid = static_cast<Id>(mor_data->size());
        mor_data->push_back({a, b, h});
        mor_index->emplace(std::array{a, b, h}, mid);
        mors.push_back({a, b});
        if (a == b && H.isIdentity(h)) ident[static_cast<size_t>(a)] = mid;
      }
  for (auto& md : *mor_data) inv.push_back(mor_index->at({md[1], md[0], H.inverse(md[2])}));
  auto hc = out.h;
  Groupoid::CompFn comp = [hc, mor_index, mor_data](Id m2, Id m1) {
    const auto& a = (*mor_data)[static_cast<size_t>(m1)];
    const auto& b = (*mor_data)[static_cast<size_t>(m2)];
    return mor_index->at({a[0], b[1], hc->compose(b[2], a[2])});
  };
  out.p = std::make_shared<Groupoid>(
      Groupoid::make(n, std::move(mors), std::move(ident), std::move(inv), std::move(comp)));
  out.box.A = out.p.get();
  out.box.B = out.hxd1.get();
  const int dm = out.delta1->morphisms();
  for (Id a = 0; a < n; ++a) out.box.on_obj.push_back(pi(a) * 2 + (a < gn ? 1 : 0));
  for (auto& md : *mor_data) {
    Id ea = md[0] < gn ? 1 : 0;
    Id eb = md[1] < gn ? 1 : 0;
    out.box.on_mor.push_back(md[2] * dm + (ea * 2 + eb));
  }
  std::string err = out.box.validate();
  if (!err.empty()) throw StructuralError("jPushoutProduct: " + err);
  return out;
}

BoxObjects pushoutProductObjects(const Functor& F, const Functor& Fp) {
  const int hn = F.B->objects(), gpn = Fp.A->objects();
  const int gn = F.A->objects(), hpn = Fp.B->objects();
  const int raw = hn * gpn + gn * hpn;
  std::vector<Id> par(static_cast<size_t>(raw));
  for (size_t i = 0; i < par.size(); ++i) par[i] = static_cast<Id>(i);
  std::function<Id(Id)> find = [&](Id o) {
    while (par[static_cast<size_t>(o)] != o) {
      par[static_cast<size_t>(o)] = par[static_cast<size_t>(par[static_cast<size_t>(o)])];
      o = par[static_cast<size_t>(o)];
    }
    return o;
  };
  for (Id x = 0; x < gn; ++x)
    for (Id xp = 0; xp < gpn; ++xp) {
      Id a = find(F.obj(x) * gpn + xp);
      Id b = find(static_cast<Id>(hn * gpn) + x * hpn + Fp.obj(xp));
      if (a != b) par[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
  BoxObjects out;
  out.class_of_hxgp.resize(static_cast<size_t>(hn * gpn));
  out.class_of_gxhp.resize(static_cast<size_t>(gn * hpn));
  std::unordered_map<Id, Id> compact;
  std::vector<Id> img;
  auto imageOf = [&](Id rawobj) {
    if (rawobj < hn * gpn) return static_cast<Id>((rawobj / gpn) * hpn + Fp.obj(rawobj % gpn));
    Id r = rawobj - hn * gpn;
    return static_cast<Id>(F.obj(r / hpn) * hpn + r % hpn);
  };
  bool consistent = true;
  for (Id o = 0; o < raw; ++o) {
    Id r = find(o);
    auto it = compact.find(r);
    if (it == compact.end()) {
      it = compact.emplace(r, static_cast<Id>(img.size())).first;
      img.push_back(imageOf(o));
    } else if (img[static_cast<size_t>(it->second)] != imageOf(o)) {
      consistent = false;
    }
    (o < hn * gpn ? out.class_of_hxgp[static_cast<size_t>(o)]
                  : out.class_of_gxhp[static_cast<size_t>(o - hn * gpn)]) = it->second;
  }
  if (!consistent) throw StructuralError("pushoutProductObjects: image map ill-defined");
  out.classes = static_cast<int>(img.size());
  out.image = img;
  std::unordered_set<Id> seen;
  out.injective = true;
  for (Id v : img)
    if (!seen.insert(v).second) out.injective = false;
  return out;
}

}  // namespace stk::grpd
