#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dialectica/functors.hpp"
#include "dialectica/laws.hpp"

namespace dialectica {

// Every object with |X|, |Y| <= max_index (not both empty) and entries drawn
// from the lineale, index sets being 0..n-1.
std::vector<LObject> small_objects(const LinearModel& model, std::size_t max_index);
std::vector<IObject> small_intuitionistic_objects(const DialecticaPair& d, std::size_t max_index);

// Short description such as "2x2[1,0,0,1]" used in counterexamples.
std::string object_label(const Lineale& r, const LObject& G);

struct CategoryAuditStats {
  std::size_t objects = 0;
  std::size_t morphisms = 0;
  std::uint64_t composable_pairs = 0;
  std::uint64_t composable_triples = 0;
};

// Identity and associativity laws over every morphism between the objects,
// using an interned composition table.
LawReport category_audit(const LinearModel& model, const std::vector<LObject>& objects,
                         CategoryAuditStats* stats = nullptr);

// Associator, unitors and symmetry: each typed at every object tuple and
// each an explicit inverse pair.
LawReport monoidal_audit(const LinearModel& model, const std::vector<LObject>& objects);

// curry / uncurry as mutually inverse bijections
// hom(A (x) B, C) <-> hom(A, B -o C) for every triple, and dual involutive.
LawReport star_autonomy_audit(const LinearModel& model, const std::vector<LObject>& objects);

// with_ and plus satisfy their universal properties, top is terminal and
// zero initial.
LawReport products_audit(const LinearModel& model, const std::vector<LObject>& objects);

// The D_dn(L) -| D_f(M) hom bijection for every pair of objects, and
// naturality in both variables for every morphism between the given
// naturality objects.
LawReport adjunction_audit(const DialecticaPair& d, const std::vector<IObject>& iobjects,
                           const std::vector<LObject>& lobjects,
                           const std::vector<IObject>& natural_iobjects,
                           const std::vector<LObject>& natural_lobjects);

// Functoriality of the lifts D_f(M) and D_dn(L) on identities and composites.
LawReport functor_audit(const DialecticaPair& d, const std::vector<IObject>& iobjects,
                        const std::vector<LObject>& lobjects);

}  // namespace dialectica
