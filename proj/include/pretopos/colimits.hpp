#pragma once

// Finite colimits and the regularity toolkit: sums, coequalizers, pushouts,
// mapping cones, (-1)-truncation, image factorization, covers and regular
// epis, and unique choice.

#include <vector>

#include "pretopos/core.hpp"
#include "pretopos/limits.hpp"

namespace pretopos {

struct SumObject {
  FinSet object;
  FinMap inl;
  FinMap inr;
};

struct CoeqObject {
  FinSet object;
  FinMap proj;
  std::vector<Index> class_reps;  // least member of each class
};

struct Pushout {
  FinSet object;
  FinMap inl;  // B -> P
  FinMap inr;  // C -> P
};

struct MappingCone {
  FinSet object;
  std::size_t components = 0;
};

struct ImageFactorization {
  FinSet image;
  FinMap surj;  // dom(f) ->> Im
  FinMap inj;   // Im >-> cod(f)
};

FinSet initial();
FinMap from_initial(const FinSet& a);

/// A + B with A's block first; decoder tags "inl i" / "inr j".
SumObject sum(const FinSet& a, const FinSet& b);
/// [f, g] : A + B -> C.
FinMap copair(const SumObject& s, const FinMap& f, const FinMap& g);
/// f + g : A + C -> B + D.
FinMap sum_map(const FinMap& f, const FinMap& g);

Certificate verify_sum_disjoint(const SumObject& s);
/// (A0 x_B X) + (A1 x_B X) against (A0 + A1) x_B X through the canonical map.
Certificate verify_sum_stability(const FinMap& f0, const FinMap& f1, const FinMap& g);

/// Quotient of cod by the equivalence generated by f(a) ~ g(a).
CoeqObject coequalizer(const FinMap& f, const FinMap& g);
/// Every h : B -> C with h∘f = h∘g and |C| <= max_codomain factors uniquely
/// through q.proj.
Certificate verify_coeq_universal(const FinMap& f, const FinMap& g, const CoeqObject& q,
                                  std::size_t max_codomain = 3, std::uint64_t cap = kDefaultCap);

/// Throws DomainMismatch unless f and g share a domain.
Pushout pushout(const FinMap& f, const FinMap& g);
/// Pushout of bang(A) and f.
MappingCone mapping_cone(const FinMap& f);

FinSet prop_truncate(const FinSet& a);
FinMap truncation_map(const FinSet& a);
Certificate verify_trunc_universal(const FinSet& a, std::uint64_t cap = kDefaultCap);

ImageFactorization image_factorization(const FinMap& f);

/// Every mono through which f factors is an iso. Also compares against the
/// mono half of the image factorization.
Certificate is_cover(const FinMap& f, std::uint64_t cap = kDefaultCap);
/// coequalizer(kernel pair of f) -> cod(f) is an iso.
Certificate is_regular_epi(const FinMap& f);
Certificate verify_surj_is_regular_epi(const FinMap& f, std::uint64_t cap = kDefaultCap);
/// c.f must be surjective (NotSurjective otherwise). Checks the leg pulled
/// back along c.g is surjective with matching fibers.
Certificate verify_pullback_of_surjection(const Cospan& c);

/// The function a |-> the unique b with r(a, b). Throws NotTotal / NotUnique.
FinMap unique_choice(const FinSet& a, const FinSet& b, const BoolMatrix& r);

/// epi (brute force) <=> one-component mapping cone <=> surjective.
Certificate verify_epi_surjective_cone_equivalence(const FinMap& f, std::uint64_t cap = kDefaultCap);

}  // namespace pretopos
