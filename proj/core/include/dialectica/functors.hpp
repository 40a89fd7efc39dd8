#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "dialectica/dialectica.hpp"
#include "dialectica/intuitionistic.hpp"
#include "dialectica/laws.hpp"
#include "dialectica/lineale.hpp"

namespace dialectica {

using LinearModel = Dialectica<Lineale>;
using IntuitionisticModel = DillerNahm<NonlinearPart>;
using LObject = LinearModel::Object;
using LMorphism = LinearModel::Morphism;
using IObject = IntuitionisticModel::Object;
using IMorphism = IntuitionisticModel::Morphism;

// The linear and intuitionistic constructions over one lineale, sharing limits.
struct DialecticaPair {
  DialecticaPair(const Lineale& r, Limits limits = {});
  LinearModel linear;
  IntuitionisticModel intuitionistic;
  const Lineale& lineale() const { return linear.base(); }
};

// Applies an element map to every entry of a family, keeping the index sets.
LObject map_family(const LObject& G, const std::function<Elem(Elem)>& fn);

// D_f(M) : linear -> intuitionistic.  g becomes (x, v) -> [g v].
IObject lift_multiplication(const DialecticaPair& d, const LObject& G);
IMorphism lift_multiplication(const DialecticaPair& d, const LMorphism& m);

// D_dn(L) : intuitionistic -> linear.  Counter-witnesses X -> Y*, value the
// tensor of L K(x, y) over y in h(x).
LObject lift_linearisation(const DialecticaPair& d, const IObject& K);
LMorphism lift_linearisation(const DialecticaPair& d, const IMorphism& m);

// The hom bijection of D_dn(L) -| D_f(M): g'(x, v) = g(v)(x).
IMorphism adjunct_right(const DialecticaPair& d, const LMorphism& m, const IObject& K,
                        const LObject& H);
LMorphism adjunct_left(const DialecticaPair& d, const IMorphism& n, const IObject& K,
                       const LObject& H);

struct AdjunctionReport {
  std::size_t linear_homs = 0;
  std::size_t intuitionistic_homs = 0;
  bool bijective = false;
  bool round_trips = false;
  bool ok() const { return bijective && round_trips && linear_homs == intuitionistic_homs; }
};

// Enumerates hom(D_dn(L) K, H) and hom(K, D_f(M) H) and checks that the
// adjuncts are mutually inverse bijections between them.
AdjunctionReport adjunction_witness(const DialecticaPair& d, const IObject& K, const LObject& H);

// phi(b . m . D_dn(L) a) = D_f(M) b . phi(m) . a for a : K' -> K, b : H -> H'.
bool adjunction_natural(const DialecticaPair& d, const IMorphism& a, const LMorphism& m,
                        const LMorphism& b);

// A(G): counter-witnesses Y*, value the tensor of G(x, y) over y in s.
LObject endofunctor_A(const LinearModel& model, const LObject& G);
// B(G): counter-witnesses X -> Y, value G(x, h x).
LObject endofunctor_B(const LinearModel& model, const LObject& G);
// B(A(D_f(L)(D_f(M)(G)))).
LObject four_part_bang(const LinearModel& model, const LObject& G);

// Mutually inverse morphisms D_dn(L) K1 (x) D_dn(L) K2 <-> D_dn(L)(K1 & K2).
std::pair<LMorphism, LMorphism> strong_monoidality_witness(const DialecticaPair& d,
                                                           const IObject& K1, const IObject& K2);

// A morphism of lineale models: an element map F on R whose restriction G
// to S lands in the target's S.
struct LinealeMorphism {
  Lineale source;
  Lineale target;
  std::vector<Elem> F;

  Elem operator()(Elem a) const { return F.at(a.id); }
};

// Monotonicity, strong monoidality, and the squares M'F = GM and L'G = FL.
LawReport check_lineale_morphism(const LinealeMorphism& phi);

LinealeMorphism identity_lineale_morphism(const Lineale& r);

// The lift D(F) on objects and morphisms of the linear construction.
LObject lift_object(const LinealeMorphism& phi, const LObject& G);
LMorphism lift_morphism(const LinealeMorphism& phi, const LinearModel& target, const LMorphism& m);
// The componentwise action D_f(G) on the intuitionistic construction.
IObject lift_intuitionistic_object(const LinealeMorphism& phi, const IObject& K);

// The exponential squares of the lifted morphism on sample objects:
// D(F)(!G) = !'(D(F) G), D_f(M')(D(F) G) = D_f(G)(D_f(M) G) and
// D_dn(L')(D_f(G) K) = D(F)(D_dn(L) K).
LawReport check_lifted_squares(const LinealeMorphism& phi, const DialecticaPair& src,
                               const DialecticaPair& dst, const std::vector<LObject>& objects,
                               const std::vector<IObject>& intuitionistic_objects);

}  // namespace dialectica
