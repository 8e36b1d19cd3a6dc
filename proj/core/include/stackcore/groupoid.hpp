#pragma once
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace stk::grpd {

using Id = std::int32_t;
inline constexpr Id kNone = -1;

// Thrown when input tables are inconsistent (bad sources/targets, broken
// units, non-associative composition, ...).
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an enumeration exceeds its configured cap.
struct EnumerationOverflow : std::runtime_error {
  explicit EnumerationOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct Mor {
  Id src = kNone;
  Id dst = kNone;
};

// A finite groupoid: object ids 0..objects()-1, morphism ids 0..morphisms()-1.
// Values are immutable after construction and safe to share across threads.
// Composition is a pluggable engine so that large structured groupoids
// (descent categories, fiber products) avoid a dense table.
class Groupoid {
 public:
  using CompFn = std::function<Id(Id, Id)>;  // (g, f) -> g∘f, composable input

  Groupoid() = default;

  int objects() const { return n_obj_; }
  int morphisms() const { return static_cast<int>(mor_.size()); }
  Id src(Id m) const { return mor_[static_cast<size_t>(m)].src; }
  Id dst(Id m) const { return mor_[static_cast<size_t>(m)].dst; }
  Id identity(Id x) const { return ident_[static_cast<size_t>(x)]; }
  Id inverse(Id m) const { return inv_[static_cast<size_t>(m)]; }

  // g∘f, defined iff dst(f) == src(g).
  Id compose(Id g, Id f) const {
    if (dst(f) != src(g)) throw StructuralError("compose: morphisms not composable");
    return comp_(g, f);
  }

  const std::vector<Id>& out(Id x) const { return out_[static_cast<size_t>(x)]; }
  const std::vector<Id>& in(Id x) const { return in_[static_cast<size_t>(x)]; }
  const std::vector<Id>& hom(Id x, Id y) const;

  bool isIdentity(Id m) const { return ident_[static_cast<size_t>(src(m))] == m; }

  const std::string& objLabel(Id x) const;
  const std::string& morLabel(Id m) const;

  // Construction ------------------------------------------------------------

  // Assembles a groupoid whose composition is given by an explicit engine.
  static Groupoid make(int n_obj, std::vector<Mor> mors, std::vector<Id> idents,
                       std::vector<Id> invs, CompFn comp,
                       std::vector<std::string> obj_labels = {},
                       std::vector<std::string> mor_labels = {});

  // Assembles a groupoid from an explicit list of composition triples
  // (g, f, g∘f); every composable pair must appear exactly once.
  static Groupoid fromTables(int n_obj, std::vector<Mor> mors, std::vector<Id> idents,
                             std::vector<Id> invs,
                             const std::vector<std::array<Id, 3>>& comp_triples,
                             std::vector<std::string> obj_labels = {},
                             std::vector<std::string> mor_labels = {});

  // Checks unit, inverse and associativity laws by exhaustion. Returns an
  // explanation for the first failure, or an empty string when valid.
  std::string validate(std::size_t max_triples = 2'000'000) const;

 private:
  int n_obj_ = 0;
  std::vector<Mor> mor_;
  std::vector<Id> ident_;
  std::vector<Id> inv_;
  CompFn comp_;
  std::vector<std::vector<Id>> out_, in_;
  mutable std::shared_ptr<std::unordered_map<std::uint64_t, std::vector<Id>>> hom_cache_;
  std::vector<std::string> obj_label_, mor_label_;

  void finalize();
};

using GroupoidPtr = std::shared_ptr<const Groupoid>;

// A functor between finite groupoids, stored as plain tables. Non-owning:
// the referenced groupoids must outlive the functor.
struct Functor {
  const Groupoid* A = nullptr;
  const Groupoid* B = nullptr;
  std::vector<Id> on_obj;
  std::vector<Id> on_mor;

  Id obj(Id x) const { return on_obj[static_cast<size_t>(x)]; }
  Id mor(Id m) const { return on_mor[static_cast<size_t>(m)]; }

  // Checks preservation of sources, targets, identities and composition.
  std::string validate(std::size_t max_pairs = 4'000'000) const;

  bool operator==(const Functor& o) const {
    return A == o.A && B == o.B && on_obj == o.on_obj && on_mor == o.on_mor;
  }
};

Functor identityFunctor(const Groupoid& G);
Functor composeFunctors(const Functor& second, const Functor& first);  // second∘first

// A natural transformation F => G between parallel functors.
struct NatTrans {
  const Functor* F = nullptr;
  const Functor* G = nullptr;
  std::vector<Id> component;  // per object of the source groupoid

  std::string validate() const;
};

// Finite group presented by tables; used to build one-object groupoids and
// cocycle instances.
struct FinGroup {
  int n = 0;
  Id e = 0;
  std::vector<Id> mul;  // mul[a*n + b] = a·b
  std::vector<Id> inv;
  std::vector<std::string> label;

  Id times(Id a, Id b) const { return mul[static_cast<size_t>(a) * n + b]; }
  std::string validate() const;

  static FinGroup trivial();
  static FinGroup cyclic(int n);
  static FinGroup symmetric(int letters);  // letters <= 4
  static FinGroup product(const FinGroup& a, const FinGroup& b);
};

// Builders ------------------------------------------------------------------

Groupoid emptyGroupoid();
Groupoid terminalGroupoid();                  // {*}
Groupoid discreteGroupoid(int n);             // n objects, identities only
Groupoid intervalGroupoid();                  // Δ¹: objects 0,1 and one isomorphism 0→1
Groupoid indiscreteGroupoid(int n);           // exactly one morphism between any two objects
Groupoid deloop(const FinGroup& g);           // one object, morphisms g, composition m2∘m1 = m2·m1
Groupoid deloopOpposite(const FinGroup& g);   // one object, composition m2∘m1 = m1·m2
// Connected groupoid on n objects with vertex group g: morphisms (x,y,γ).
Groupoid connectedGroupoid(int n, const FinGroup& g);

Groupoid productGroupoid(const Groupoid& A, const Groupoid& B);
Groupoid coproductGroupoid(const Groupoid& A, const Groupoid& B);
// Projections / injections for the above.
Functor productProj(const Groupoid& P, const Groupoid& A, const Groupoid& B, int which);
Functor coproductInj(const Groupoid& C, const Groupoid& A, const Groupoid& B, int which);

// Full subgroupoid on the given objects; returns the inclusion functor.
// `sub` receives newly built groupoid storage via shared ownership.
struct SubGroupoid {
  GroupoidPtr sub;
  std::vector<Id> obj_of_sub;  // sub object -> ambient object
  Functor inclusion(const Groupoid& ambient) const;
};
SubGroupoid fullSubgroupoid(const Groupoid& G, const std::vector<Id>& objs);

// Connected components; pi0 as component index per object.
struct Pi0 {
  int count = 0;
  std::vector<int> comp_of_obj;
};
Pi0 pi0(const Groupoid& G);

}  // namespace stk::grpd
