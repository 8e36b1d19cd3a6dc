#include "stackcore/products.hpp"

#include <memory>
#include <string>

namespace stk::grpd {

Id ProductGroupoid::objSlot(Id obj, int t) const {
  return (obj / obj_place[static_cast<size_t>(t)]) % factor[static_cast<size_t>(t)]->objects();
}

Id ProductGroupoid::morSlot(Id mor, int t) const {
  return (mor / mor_place[static_cast<size_t>(t)]) % factor[static_cast<size_t>(t)]->morphisms();
}

Id ProductGroupoid::encodeObj(const std::vector<Id>& digits) const {
  Id out = 0;
  for (size_t t = 0; t < factor.size(); ++t) out += digits[t] * obj_place[t];
  return out;
}

Id ProductGroupoid::encodeMor(const std::vector<Id>& digits) const {
  Id out = 0;
  for (size_t t = 0; t < factor.size(); ++t) out += digits[t] * mor_place[t];
  return out;
}

ProductGroupoid productOfGroupoids(std::vector<GroupoidPtr> factors, std::size_t cap) {
  ProductGroupoid out;
  out.factor = std::move(factors);
  const int k = out.slots();
  out.obj_place.assign(static_cast<size_t>(k), 1);
  out.mor_place.assign(static_cast<size_t>(k), 1);
  std::size_t n_obj = 1, n_mor = 1;
  for (int t = k - 1; t >= 0; --t) {
    out.obj_place[static_cast<size_t>(t)] = static_cast<Id>(n_obj);
    out.mor_place[static_cast<size_t>(t)] = static_cast<Id>(n_mor);
    n_obj *= static_cast<std::size_t>(out.factor[static_cast<size_t>(t)]->objects());
    n_mor *= static_cast<std::size_t>(out.factor[static_cast<size_t>(t)]->morphisms());
    if (n_mor > cap || n_obj > cap)
      throw EnumerationOverflow("productOfGroupoids: size exceeds cap of " + std::to_string(cap));
  }
  auto fac = std::make_shared<std::vector<GroupoidPtr>>(out.factor);
  auto oplace = std::make_shared<std::vector<Id>>(out.obj_place);
  auto mplace = std::make_shared<std::vector<Id>>(out.mor_place);

  std::vector<Mor> mors;
  std::vector<Id> ident(n_obj), inv(n_mor);
  mors.reserve(n_mor);
  for (std::size_t m = 0; m < n_mor; ++m) {
    Id s = 0, d = 0, iv = 0;
    for (int t = 0; t < k; ++t) {
      const Groupoid& g = *(*fac)[static_cast<size_t>(t)];
      Id digit = (static_cast<Id>(m) / (*mplace)[static_cast<size_t>(t)]) % g.morphisms();
      s += g.src(digit) * (*oplace)[static_cast<size_t>(t)];
      d += g.dst(digit) * (*oplace)[static_cast<size_t>(t)];
      iv += g.inverse(digit) * (*mplace)[static_cast<size_t>(t)];
    }
    mors.push_back({s, d});
    inv[m] = iv;
  }
  for (std::size_t o = 0; o < n_obj; ++o) {
    Id e = 0;
    for (int t = 0; t < k; ++t) {
      const Groupoid& g = *(*fac)[static_cast<size_t>(t)];
      Id digit = (static_cast<Id>(o) / (*oplace)[static_cast<size_t>(t)]) % g.objects();
      e += g.identity(digit) * (*mplace)[static_cast<size_t>(t)];
    }
    ident[o] = e;
  }
  const int kk = k;
  out.grpd = std::make_shared<Groupoid>(Groupoid::make(
      static_cast<int>(n_obj), std::move(mors), std::move(ident), std::move(inv),
      [fac, mplace, kk](Id m2, Id m1) {
        Id r = 0;
        for (int t = 0; t < kk; ++t) {
          const Groupoid& g = *(*fac)[static_cast<size_t>(t)];
          Id place = (*mplace)[static_cast<size_t>(t)];
          Id a = (m2 / place) % g.morphisms();
          Id b = (m1 / place) % g.morphisms();
          r += g.compose(a, b) * place;
        }
        return r;
      }));
  return out;
}

Functor gatherProductFunctor(const ProductGroupoid& A, const ProductGroupoid& B,
                             const std::vector<int>& gather,
                             const std::vector<const Functor*>& slot) {
  const int k = B.slots();
  if (static_cast<int>(gather.size()) != k || static_cast<int>(slot.size()) != k)
    throw StructuralError("gatherProductFunctor: slot count mismatch");
  for (int t = 0; t < k; ++t) {
    if (slot[static_cast<size_t>(t)]->A != A.factor[static_cast<size_t>(gather[static_cast<size_t>(t)])].get() ||
        slot[static_cast<size_t>(t)]->B != B.factor[static_cast<size_t>(t)].get())
      throw StructuralError("gatherProductFunctor: stage functor endpoints mismatch");
  }
  Functor f;
  f.A = A.grpd.get();
  f.B = B.grpd.get();
  f.on_obj.reserve(static_cast<size_t>(A.grpd->objects()));
  for (Id o = 0; o < A.grpd->objects(); ++o) {
    Id out = 0;
    for (int t = 0; t < k; ++t)
      out += slot[static_cast<size_t>(t)]->obj(A.objSlot(o, gather[static_cast<size_t>(t)])) *
             B.obj_place[static_cast<size_t>(t)];
    f.on_obj.push_back(out);
  }
  f.on_mor.reserve(static_cast<size_t>(A.grpd->morphisms()));
  for (Id m = 0; m < A.grpd->morphisms(); ++m) {
    Id out = 0;
    for (int t = 0; t < k; ++t)
      out += slot[static_cast<size_t>(t)]->mor(A.morSlot(m, gather[static_cast<size_t>(t)])) *
             B.mor_place[static_cast<size_t>(t)];
    f.on_mor.push_back(out);
  }
  return f;
}

Functor tupleFunctor(const Groupoid& X, const ProductGroupoid& B,
                     const std::vector<const Functor*>& legs) {
  const int k = B.slots();
  if (static_cast<int>(legs.size()) != k)
    throw StructuralError("tupleFunctor: leg count mismatch");
  for (int t = 0; t < k; ++t)
    if (legs[static_cast<size_t>(t)]->A != &X ||
        legs[static_cast<size_t>(t)]->B != B.factor[static_cast<size_t>(t)].get())
      throw StructuralError("tupleFunctor: leg endpoints mismatch");
  Functor f;
  f.A = &X;
  f.B = B.grpd.get();
  for (Id o = 0; o < X.objects(); ++o) {
    Id out = 0;
    for (int t = 0; t < k; ++t)
      out += legs[static_cast<size_t>(t)]->obj(o) * B.obj_place[static_cast<size_t>(t)];
    f.on_obj.push_back(out);
  }
  for (Id m = 0; m < X.morphisms(); ++m) {
    Id out = 0;
    for (int t = 0; t < k; ++t)
      out += legs[static_cast<size_t>(t)]->mor(m) * B.mor_place[static_cast<size_t>(t)];
    f.on_mor.push_back(out);
  }
  return f;
}

Functor projectionFunctor(const ProductGroupoid& P, int t) {
  Functor f;
  f.A = P.grpd.get();
  f.B = P.factor[static_cast<size_t>(t)].get();
  for (Id o = 0; o < P.grpd->objects(); ++o) f.on_obj.push_back(P.objSlot(o, t));
  for (Id m = 0; m < P.grpd->morphisms(); ++m) f.on_mor.push_back(P.morSlot(m, t));
  return f;
}

}  // namespace stk::grpd
