#pragma once

// The subobject classifier Ω = {false, true}, pointed propositions, and a
// skeletal object classifier for maps whose fibers have at most N elements.
// In the skeletal model the universe is replaced by the cardinalities
// 0..N, so the classifier is a set rather than a groupoid.

#include <vector>

#include "pretopos/core.hpp"
#include "pretopos/lcc.hpp"
#include "pretopos/limits.hpp"

namespace pretopos {

struct Omega {
  FinSet object;  // 0 = false, 1 = true
  FinMap truth;   // 1 -> Ω
};

Omega omega();

struct Subobject {
  FinSet ambient;
  FinMap mono;
  std::vector<Index> hits;  // canonical form: sorted image

  friend bool operator==(const Subobject& a, const Subobject& b) { return a.hits == b.hits; }
};

/// Throws NotMono.
Subobject make_subobject(const FinMap& mono);
Subobject subobject_of_subset(const FinSet& ambient, const std::vector<Index>& hits);

FinMap char_of_mono(const Subobject& s);
/// Inclusion of the true-set of χ : B -> Ω.
Subobject sub_of_char(const FinMap& chi);
/// (s.mono, bang) over (χ, true).
Square classifying_square(const Subobject& s);

/// Sub(B) ≅ Hom(B, Ω) with every classifying square a pullback.
Certificate verify_subobject_classifier(const FinSet& b, std::uint64_t cap = kDefaultCap);

/// Σ over the listed propositions (carriers of size <= 1) of their elements.
FinSet pointed_sum(const std::vector<FinSet>& props);
Certificate pointed_prop_check();

struct ObjectClassifier {
  std::size_t bound = 0;
  FinSet universe;  // element k stands for cardinality k
  FinSet pointed;   // pairs (k, i) with i < k
  FinMap proj;      // pointed -> universe
  std::vector<Index> offset;  // first pointed element over k

  Index index_of(Index k, Index i) const { return offset[k] + i; }
};

ObjectClassifier object_classifier(std::size_t bound);

struct Classification {
  FinMap chi;    // B -> U, fiber cardinalities
  FinMap theta;  // A -> E, (cardinality, rank within the fiber)
};

/// Throws FiberBoundExceeded naming the first offending point of B.
Classification classify(const FinMap& f, const ObjectClassifier& oc);

/// The square (θ_f, proj; χ_f, f) commutes and is a pullback.
Certificate verify_object_classifier_pullback(const FinMap& f, const ObjectClassifier& oc);

/// ψ(P): Σ_b P(b) as an object over B.
SliceObj family_total(const FinMap& family, const ObjectClassifier& oc);

/// χ(ψ(P)) = P for every family, ψ(χ(f)) ≅ f over B for every map with
/// bounded fibers, and equal counts of families and iso-classes of maps.
Certificate verify_family_equivalence(const FinSet& b, const ObjectClassifier& oc,
                                      std::uint64_t cap = kDefaultCap);

}  // namespace pretopos
