#include "stackcore/groupoid.hpp"

#include <algorithm>

namespace stk::grpd {

namespace {
std::uint64_t pairKey(Id x, Id y) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
         static_cast<std::uint32_t>(y);
}
const std::string kEmptyLabel;
}  // namespace

const std::vector<Id>& Groupoid::hom(Id x, Id y) const {
  auto& cache = *hom_cache_;
  auto it = cache.find(pairKey(x, y));
  if (it != cache.end()) return it->second;
  std::vector<Id> ms;
  for (Id m : out_[static_cast<size_t>(x)])
    if (dst(m) == y) ms.push_back(m);
  return cache.emplace(pairKey(x, y), std::move(ms)).first->second;
}

const std::string& Groupoid::objLabel(Id x) const {
  if (static_cast<size_t>(x) < obj_label_.size()) return obj_label_[static_cast<size_t>(x)];
  return kEmptyLabel;
}

const std::string& Groupoid::morLabel(Id m) const {
  if (static_cast<size_t>(m) < mor_label_.size()) return mor_label_[static_cast<size_t>(m)];
  return kEmptyLabel;
}

void Groupoid::finalize() {
  out_.assign(static_cast<size_t>(n_obj_), {});
  in_.assign(static_cast<size_t>(n_obj_), {});
  for (Id m = 0; m < morphisms(); ++m) {
    const Mor& mm = mor_[static_cast<size_t>(m)];
    if (mm.src < 0 || mm.src >= n_obj_ || mm.dst < 0 || mm.dst >= n_obj_)
      throw StructuralError("morphism " + std::to_string(m) + " has out-of-range endpoints");
    out_[static_cast<size_t>(mm.src)].push_back(m);
    in_[static_cast<size_t>(mm.dst)].push_back(m);
  }
  if (ident_.size() != static_cast<size_t>(n_obj_))
    throw StructuralError("identity table size mismatch");
  if (inv_.size() != mor_.size()) throw StructuralError("inverse table size mismatch");
  for (Id x = 0; x < n_obj_; ++x) {
    Id e = ident_[static_cast<size_t>(x)];
    if (e < 0 || e >= morphisms() || src(e) != x || dst(e) != x)
      throw StructuralError("identity of object " + std::to_string(x) + " is not an endomorphism");
  }
  for (Id m = 0; m < morphisms(); ++m) {
    Id w = inv_[static_cast<size_t>(m)];
    if (w < 0 || w >= morphisms() || src(w) != dst(m) || dst(w) != src(m))
      throw StructuralError("inverse of morphism " + std::to_string(m) + " has wrong endpoints");
  }
  hom_cache_ = std::make_shared<std::unordered_map<std::uint64_t, std::vector<Id>>>();
}

Groupoid Groupoid::make(int n_obj, std::vector<Mor> mors, std::vector<Id> idents,
                        std::vector<Id> invs, CompFn comp, std::vector<std::string> obj_labels,
                        std::vector<std::string> mor_labels) {
  Groupoid g;
  g.n_obj_ = n_obj;
  g.mor_ = std::move(mors);
  g.ident_ = std::move(idents);
  g.inv_ = std::move(invs);
  g.comp_ = std::move(comp);
  g.obj_label_ = std::move(obj_labels);
  g.mor_label_ = std::move(mor_labels);
  g.finalize();
  return g;
}

Groupoid Groupoid::fromTables(int n_obj, std::vector<Mor> mors, std::vector<Id> idents,
                              std::vector<Id> invs,
                              const std::vector<std::array<Id, 3>>& comp_triples,
                              std::vector<std::string> obj_labels,
                              std::vector<std::string> mor_labels) {
  auto table = std::make_shared<std::unordered_map<std::uint64_t, Id>>();
  table->reserve(comp_triples.size());
  for (const auto& t : comp_triples) {
    auto [g, f, gf] = t;
    if (!table->emplace(pairKey(g, f), gf).second)
      throw StructuralError("duplicate composition entry");
  }
  CompFn comp = [table](Id g, Id f) -> Id {
    auto it = table->find(pairKey(g, f));
    if (it == table->end()) throw StructuralError("missing composition entry");
    return it->second;
  };
  return make(n_obj, std::move(mors), std::move(idents), std::move(invs), std::move(comp),
              std::move(obj_labels), std::move(mor_labels));
}

std::string Groupoid::validate(std::size_t max_triples) const {
  for (Id m = 0; m < morphisms(); ++m) {
    Id e_src = identity(src(m)), e_dst = identity(dst(m));
    if (compose(m, e_src) != m) return "right unit fails at morphism " + std::to_string(m);
    if (compose(e_dst, m) != m) return "left unit fails at morphism " + std::to_string(m);
    Id w = inverse(m);
    if (compose(w, m) != e_src) return "inverse law (w∘m) fails at morphism " + std::to_string(m);
    if (compose(m, w) != e_dst) return "inverse law (m∘w) fails at morphism " + std::to_string(m);
    Id c = compose(m, e_src);
    if (src(c) != src(m) || dst(c) != dst(m)) return "composition endpoint mismatch";
  }
  std::size_t seen = 0;
  for (Id f = 0; f < morphisms(); ++f) {
    for (Id g : out_[static_cast<size_t>(dst(f))]) {
      Id gf = compose(g, f);
      if (src(gf) != src(f) || dst(gf) != dst(g))
        return "composite endpoints wrong for (" + std::to_string(g) + "," + std::to_string(f) + ")";
      for (Id h : out_[static_cast<size_t>(dst(g))]) {
        if (++seen > max_triples) return "";
        if (compose(h, gf) != compose(compose(h, g), f))
          return "associativity fails at (" + std::to_string(h) + "," + std::to_string(g) + "," +
                 std::to_string(f) + ")";
      }
    }
  }
  return "";
}

std::string Functor::validate(std::size_t max_pairs) const {
  if (!A || !B) return "functor has null endpoints";
  if (on_obj.size() != static_cast<size_t>(A->objects())) return "object table size mismatch";
  if (on_mor.size() != static_cast<size_t>(A->morphisms())) return "morphism table size mismatch";
  for (Id x = 0; x < A->objects(); ++x)
    if (obj(x) < 0 || obj(x) >= B->objects()) return "object image out of range";
  for (Id m = 0; m < A->morphisms(); ++m) {
    Id fm = mor(m);
    if (fm < 0 || fm >= B->morphisms()) return "morphism image out of range";
    if (B->src(fm) != obj(A->src(m)) || B->dst(fm) != obj(A->dst(m)))
      return "endpoints not preserved at morphism " + std::to_string(m);
  }
  for (Id x = 0; x < A->objects(); ++x)
    if (mor(A->identity(x)) != B->identity(obj(x)))
      return "identity not preserved at object " + std::to_string(x);
  std::size_t seen = 0;
  for (Id f = 0; f < A->morphisms(); ++f)
    for (Id g : A->out(A->dst(f))) {
      if (++seen > max_pairs) return "";
      if (mor(A->compose(g, f)) != B->compose(mor(g), mor(f)))
        return "composition not preserved at (" + std::to_string(g) + "," + std::to_string(f) + ")";
    }
  return "";
}

Functor identityFunctor(const Groupoid& G) {
  Functor f;
  f.A = &G;
  f.B = &G;
  f.on_obj.resize(static_cast<size_t>(G.objects()));
  f.on_mor.resize(static_cast<size_t>(G.morphisms()));
  for (Id x = 0; x < G.objects(); ++x) f.on_obj[static_cast<size_t>(x)] = x;
  for (Id m = 0; m < G.morphisms(); ++m) f.on_mor[static_cast<size_t>(m)] = m;
  return f;
}

Functor composeFunctors(const Functor& second, const Functor& first) {
  if (first.B != second.A) throw StructuralError("functors not composable");
  Functor f;
  f.A = first.A;
  f.B = second.B;
  f.on_obj.reserve(first.on_obj.size());
  f.on_mor.reserve(first.on_mor.size());
  for (Id x : first.on_obj) f.on_obj.push_back(second.obj(x));
  for (Id m : first.on_mor) f.on_mor.push_back(second.mor(m));
  return f;
}

std::string NatTrans::validate() const {
  if (!F || !G) return "transformation has null endpoints";
  if (F->A != G->A || F->B != G->B) return "functors are not parallel";
  const Groupoid& A = *F->A;
  const Groupoid& B = *F->B;
  if (component.size() != static_cast<size_t>(A.objects())) return "component table size mismatch";
  for (Id x = 0; x < A.objects(); ++x) {
    Id c = component[static_cast<size_t>(x)];
    if (c < 0 || c >= B.morphisms() || B.src(c) != F->obj(x) || B.dst(c) != G->obj(x))
      return "component at object " + std::to_string(x) + " has wrong endpoints";
  }
  for (Id m = 0; m < A.morphisms(); ++m) {
    Id x = A.src(m), y = A.dst(m);
    if (B.compose(component[static_cast<size_t>(y)], F->mor(m)) !=
        B.compose(G->mor(m), component[static_cast<size_t>(x)]))
      return "naturality fails at morphism " + std::to_string(m);
  }
  return "";
}

std::string FinGroup::validate() const {
  if (n <= 0) return "group must be nonempty";
  if (mul.size() != static_cast<size_t>(n) * n) return "multiplication table size mismatch";
  if (inv.size() != static_cast<size_t>(n)) return "inverse table size mismatch";
  if (e < 0 || e >= n) return "unit out of range";
  for (Id a = 0; a < n; ++a) {
    if (times(e, a) != a || times(a, e) != a) return "unit law fails";
    if (times(inv[static_cast<size_t>(a)], a) != e || times(a, inv[static_cast<size_t>(a)]) != e)
      return "inverse law fails";
    for (Id b = 0; b < n; ++b) {
      Id ab = times(a, b);
      if (ab < 0 || ab >= n) return "product out of range";
      for (Id c = 0; c < n; ++c)
        if (times(ab, c) != times(a, times(b, c))) return "associativity fails";
    }
  }
  return "";
}

FinGroup FinGroup::trivial() { return cyclic(1); }

FinGroup FinGroup::cyclic(int n) {
  FinGroup g;
  g.n = n;
  g.e = 0;
  g.mul.resize(static_cast<size_t>(n) * n);
  g.inv.resize(static_cast<size_t>(n));
  g.label.resize(static_cast<size_t>(n));
  for (Id a = 0; a < n; ++a) {
    g.inv[static_cast<size_t>(a)] = static_cast<Id>((n - a) % n);
    g.label[static_cast<size_t>(a)] = std::to_string(a);
    for (Id b = 0; b < n; ++b) g.mul[static_cast<size_t>(a) * n + b] = static_cast<Id>((a + b) % n);
  }
  return g;
}

FinGroup FinGroup::symmetric(int letters) {
  if (letters < 1 || letters > 4) throw StructuralError("symmetric: supported range is 1..4");
  std::vector<std::vector<int>> perms;
  std::vector<int> base(static_cast<size_t>(letters));
  for (int i = 0; i < letters; ++i) base[static_cast<size_t>(i)] = i;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(perms.begin(), perms.end());
  auto indexOf = [&](const std::vector<int>& q) {
    return static_cast<Id>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  FinGroup g;
  g.n = static_cast<int>(perms.size());
  g.e = indexOf(base);
  g.mul.resize(static_cast<size_t>(g.n) * g.n);
  g.inv.resize(static_cast<size_t>(g.n));
  g.label.resize(static_cast<size_t>(g.n));
  for (Id a = 0; a < g.n; ++a) {
    const auto& pa = perms[static_cast<size_t>(a)];
    std::vector<int> ia(static_cast<size_t>(letters));
    std::string lab;
    for (int i = 0; i < letters; ++i) {
      ia[static_cast<size_t>(pa[static_cast<size_t>(i)])] = i;
      lab += static_cast<char>('0' + pa[static_cast<size_t>(i)]);
    }
    g.inv[static_cast<size_t>(a)] = indexOf(ia);
    g.label[static_cast<size_t>(a)] = lab;
    for (Id b = 0; b < g.n; ++b) {
      const auto& pb = perms[static_cast<size_t>(b)];
      std::vector<int> ab(static_cast<size_t>(letters));
      for (int i = 0; i < letters; ++i)
        ab[static_cast<size_t>(i)] = pa[static_cast<size_t>(pb[static_cast<size_t>(i)])];
      g.mul[static_cast<size_t>(a) * g.n + b] = indexOf(ab);
    }
  }
  return g;
}

FinGroup FinGroup::product(const FinGroup& a, const FinGroup& b) {
  FinGroup g;
  g.n = a.n * b.n;
  auto enc = [&](Id x, Id y) { return static_cast<Id>(x * b.n + y); };
  g.e = enc(a.e, b.e);
  g.mul.resize(static_cast<size_t>(g.n) * g.n);
  g.inv.resize(static_cast<size_t>(g.n));
  g.label.resize(static_cast<size_t>(g.n));
  for (Id x = 0; x < a.n; ++x)
    for (Id y = 0; y < b.n; ++y) {
      Id i = enc(x, y);
      g.inv[static_cast<size_t>(i)] = enc(a.inv[static_cast<size_t>(x)], b.inv[static_cast<size_t>(y)]);
      g.label[static_cast<size_t>(i)] = "(" + (x < static_cast<Id>(a.label.size()) ? a.label[static_cast<size_t>(x)] : std::to_string(x)) +
                                        "," + (y < static_cast<Id>(b.label.size()) ? b.label[static_cast<size_t>(y)] : std::to_string(y)) + ")";
      for (Id u = 0; u < a.n; ++u)
        for (Id v = 0; v < b.n; ++v)
          g.mul[static_cast<size_t>(i) * g.n + enc(u, v)] = enc(a.times(x, u), b.times(y, v));
    }
  return g;
}

Groupoid emptyGroupoid() {
  return Groupoid::make(0, {}, {}, {}, [](Id, Id) -> Id { return kNone; });
}

Groupoid terminalGroupoid() { return discreteGroupoid(1); }

Groupoid discreteGroupoid(int n) {
  std::vector<Mor> mors;
  std::vector<Id> ident, inv;
  for (Id x = 0; x < n; ++x) {
    mors.push_back({x, x});
    ident.push_back(x);
    inv.push_back(x);
  }
  return Groupoid::make(n, std::move(mors), std::move(ident), std::move(inv),
                        [](Id, Id f) { return f; });
}

Groupoid intervalGroupoid() { return indiscreteGroupoid(2); }

Groupoid indiscreteGroupoid(int n) {
  std::vector<Mor> mors;
  std::vector<Id> ident(static_cast<size_t>(n)), inv;
  mors.reserve(static_cast<size_t>(n) * n);
  auto enc = [n](Id x, Id y) { return static_cast<Id>(x * n + y); };
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y) {
      mors.push_back({x, y});
      inv.push_back(enc(y, x));
    }
  for (Id x = 0; x < n; ++x) ident[static_cast<size_t>(x)] = enc(x, x);
  std::vector<Mor> mors_copy = mors;
  return Groupoid::make(
      n, std::move(mors), std::move(ident), std::move(inv),
      [n, mors_copy](Id g, Id f) {
        Id x = mors_copy[static_cast<size_t>(f)].src;
        Id z = mors_copy[static_cast<size_t>(g)].dst;
        return static_cast<Id>(x * n + z);
      });
}

namespace {
Groupoid deloopWith(const FinGroup& g, bool opposite) {
  auto grp = std::make_shared<FinGroup>(g);
  std::string err = grp->validate();
  if (!err.empty()) throw StructuralError("deloop: " + err);
  std::vector<Mor> mors(static_cast<size_t>(g.n), Mor{0, 0});
  std::vector<Id> ident{g.e};
  std::vector<Id> inv = g.inv;
  std::vector<std::string> mor_labels = g.label;
  Groupoid::CompFn comp;
  if (opposite)
    comp = [grp](Id m2, Id m1) { return grp->times(m1, m2); };
  else
    comp = [grp](Id m2, Id m1) { return grp->times(m2, m1); };
  return Groupoid::make(1, std::move(mors), std::move(ident), std::move(inv), std::move(comp), {"*"},
                        std::move(mor_labels));
}
}  // namespace

Groupoid deloop(const FinGroup& g) { return deloopWith(g, false); }
Groupoid deloopOpposite(const FinGroup& g) { return deloopWith(g, true); }

Groupoid connectedGroupoid(int n, const FinGroup& g) {
  auto grp = std::make_shared<FinGroup>(g);
  std::string err = grp->validate();
  if (!err.empty()) throw StructuralError("connectedGroupoid: " + err);
  const int k = g.n;
  auto enc = [n, k](Id x, Id y, Id gamma) { return static_cast<Id>((x * n + y) * k + gamma); };
  std::vector<Mor> mors;
  std::vector<Id> ident(static_cast<size_t>(n)), inv;
  mors.reserve(static_cast<size_t>(n) * n * k);
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y)
      for (Id gamma = 0; gamma < k; ++gamma) {
        mors.push_back({x, y});
        inv.push_back(enc(y, x, g.inv[static_cast<size_t>(gamma)]));
      }
  for (Id x = 0; x < n; ++x) ident[static_cast<size_t>(x)] = enc(x, x, g.e);
  const int nn = n;
  return Groupoid::make(n, std::move(mors), std::move(ident), std::move(inv),
                        [grp, nn](Id m2, Id m1) {
                          const int k2 = grp->n;
                          Id g1 = m1 % k2, g2 = m2 % k2;
                          Id x = (m1 / k2) / nn;
                          Id z = (m2 / k2) % nn;
                          return static_cast<Id>((x * nn + z) * k2 + grp->times(g2, g1));
                        });
}

Groupoid productGroupoid(const Groupoid& A, const Groupoid& B) {
  auto a = std::make_shared<Groupoid>(A);
  auto b = std::make_shared<Groupoid>(B);
  const int bn = B.objects();
  const int bm = B.morphisms();
  std::vector<Mor> mors;
  std::vector<Id> ident(static_cast<size_t>(A.objects()) * bn), inv;
  mors.reserve(static_cast<size_t>(A.morphisms()) * bm);
  auto encM = [bm](Id ma, Id mb) { return static_cast<Id>(ma * bm + mb); };
  auto encO = [bn](Id xa, Id xb) { return static_cast<Id>(xa * bn + xb); };
  for (Id ma = 0; ma < A.morphisms(); ++ma)
    for (Id mb = 0; mb < bm; ++mb) {
      mors.push_back({encO(A.src(ma), B.src(mb)), encO(A.dst(ma), B.dst(mb))});
      inv.push_back(encM(A.inverse(ma), B.inverse(mb)));
    }
  for (Id xa = 0; xa < A.objects(); ++xa)
    for (Id xb = 0; xb < bn; ++xb)
      ident[static_cast<size_t>(encO(xa, xb))] = encM(A.identity(xa), B.identity(xb));
  return Groupoid::make(A.objects() * bn, std::move(mors), std::move(ident), std::move(inv),
                        [a, b, bm](Id m2, Id m1) {
                          Id a2 = m2 / bm, b2 = m2 % bm;
                          Id a1 = m1 / bm, b1 = m1 % bm;
                          return static_cast<Id>(a->compose(a2, a1) * bm + b->compose(b2, b1));
                        });
}

Groupoid coproductGroupoid(const Groupoid& A, const Groupoid& B) {
  auto a = std::make_shared<Groupoid>(A);
  auto b = std::make_shared<Groupoid>(B);
  const Id obj_off = A.objects();
  const Id mor_off = A.morphisms();
  std::vector<Mor> mors;
  std::vector<Id> ident, inv;
  for (Id m = 0; m < A.morphisms(); ++m) {
    mors.push_back({A.src(m), A.dst(m)});
    inv.push_back(A.inverse(m));
  }
  for (Id m = 0; m < B.morphisms(); ++m) {
    mors.push_back({static_cast<Id>(B.src(m) + obj_off), static_cast<Id>(B.dst(m) + obj_off)});
    inv.push_back(static_cast<Id>(B.inverse(m) + mor_off));
  }
  for (Id x = 0; x < A.objects(); ++x) ident.push_back(A.identity(x));
  for (Id x = 0; x < B.objects(); ++x) ident.push_back(static_cast<Id>(B.identity(x) + mor_off));
  return Groupoid::make(A.objects() + B.objects(), std::move(mors), std::move(ident),
                        std::move(inv), [a, b, mor_off](Id m2, Id m1) -> Id {
                          if (m1 < mor_off) return a->compose(m2, m1);
                          return static_cast<Id>(b->compose(m2 - mor_off, m1 - mor_off) + mor_off);
                        });
}

Functor productProj(const Groupoid& P, const Groupoid& A, const Groupoid& B, int which) {
  Functor f;
  f.A = &P;
  f.B = which == 0 ? &A : &B;
  const int bn = B.objects(), bm = B.morphisms();
  for (Id x = 0; x < P.objects(); ++x)
    f.on_obj.push_back(which == 0 ? x / bn : x % bn);
  for (Id m = 0; m < P.morphisms(); ++m)
    f.on_mor.push_back(which == 0 ? m / bm : m % bm);
  return f;
}

Functor coproductInj(const Groupoid& C, const Groupoid& A, const Groupoid& B, int which) {
  Functor f;
  f.A = which == 0 ? &A : &B;
  f.B = &C;
  const Groupoid& S = which == 0 ? A : B;
  const Id obj_off = which == 0 ? 0 : A.objects();
  const Id mor_off = which == 0 ? 0 : A.morphisms();
  for (Id x = 0; x < S.objects(); ++x) f.on_obj.push_back(static_cast<Id>(x + obj_off));
  for (Id m = 0; m < S.morphisms(); ++m) f.on_mor.push_back(static_cast<Id>(m + mor_off));
  return f;
}

SubGroupoid fullSubgroupoid(const Groupoid& G, const std::vector<Id>& objs) {
  auto g = std::make_shared<Groupoid>(G);
  std::vector<Id> obj_of_sub = objs;
  std::vector<Id> sub_of_obj(static_cast<size_t>(G.objects()), kNone);
  for (size_t i = 0; i < objs.size(); ++i) {
    if (objs[i] < 0 || objs[i] >= G.objects()) throw StructuralError("fullSubgroupoid: bad object");
    if (sub_of_obj[static_cast<size_t>(objs[i])] != kNone)
      throw StructuralError("fullSubgroupoid: repeated object");
    sub_of_obj[static_cast<size_t>(objs[i])] = static_cast<Id>(i);
  }
  std::vector<Id> mor_of_sub;          // sub morphism -> ambient morphism
  std::vector<Id> sub_of_mor(static_cast<size_t>(G.morphisms()), kNone);
  std::vector<Mor> mors;
  for (Id m = 0; m < G.morphisms(); ++m) {
    Id sx = sub_of_obj[static_cast<size_t>(G.src(m))];
    Id sy = sub_of_obj[static_cast<size_t>(G.dst(m))];
    if (sx == kNone || sy == kNone) continue;
    sub_of_mor[static_cast<size_t>(m)] = static_cast<Id>(mor_of_sub.size());
    mor_of_sub.push_back(m);
    mors.push_back({sx, sy});
  }
  std::vector<Id> ident, inv;
  for (Id x : obj_of_sub) ident.push_back(sub_of_mor[static_cast<size_t>(G.identity(x))]);
  for (Id m : mor_of_sub) inv.push_back(sub_of_mor[static_cast<size_t>(G.inverse(m))]);
  auto mos = std::make_shared<std::vector<Id>>(mor_of_sub);
  auto som = std::make_shared<std::vector<Id>>(sub_of_mor);
  SubGroupoid out;
  out.sub = std::make_shared<Groupoid>(Groupoid::make(
      static_cast<int>(objs.size()), std::move(mors), std::move(ident), std::move(inv),
      [g, mos, som](Id m2, Id m1) {
        Id c = g->compose((*mos)[static_cast<size_t>(m2)], (*mos)[static_cast<size_t>(m1)]);
        return (*som)[static_cast<size_t>(c)];
      }));
  out.obj_of_sub = std::move(obj_of_sub);
  return out;
}

Functor SubGroupoid::inclusion(const Groupoid& ambient) const {
  Functor f;
  f.A = sub.get();
  f.B = &ambient;
  f.on_obj = obj_of_sub;
  for (Id m = 0; m < sub->morphisms(); ++m) {
    Id x = obj_of_sub[static_cast<size_t>(sub->src(m))];
    // Recover the ambient morphism by matching within the hom set.
    // Sub hom sets enumerate ambient morphisms in ambient order, so position
    // lookups agree.
    Id y = obj_of_sub[static_cast<size_t>(sub->dst(m))];
    const auto& sub_hom = sub->hom(sub->src(m), sub->dst(m));
    const auto& amb_hom = ambient.hom(x, y);
    for (size_t i = 0; i < sub_hom.size(); ++i)
      if (sub_hom[i] == m) {
        f.on_mor.push_back(amb_hom[i]);
        break;
      }
  }
  return f;
}

Pi0 pi0(const Groupoid& G) {
  std::vector<int> parent(static_cast<size_t>(G.objects()));
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (Id m = 0; m < G.morphisms(); ++m) {
    int a = find(G.src(m)), b = find(G.dst(m));
    if (a != b) parent[static_cast<size_t>(a)] = b;
  }
  Pi0 out;
  out.comp_of_obj.resize(static_cast<size_t>(G.objects()));
  std::unordered_map<int, int> index;
  for (Id x = 0; x < G.objects(); ++x) {
    int r = find(x);
    auto it = index.find(r);
    if (it == index.end()) it = index.emplace(r, out.count++).first;
    out.comp_of_obj[static_cast<size_t>(x)] = it->second;
  }
  return out;
}

}  // namespace stk::grpd
