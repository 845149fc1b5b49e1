#pragma once

// Equivalence relations, quotients and their effectiveness, the category of
// setoids with the quotient/inclusion adjunction, and propositional-row
// quotients.

#include <utility>
#include <vector>

#include "pretopos/core.hpp"
#include "pretopos/limits.hpp"

namespace pretopos {

/// An arbitrary binary relation on a carrier.
struct Relation {
  FinSet base;
  BoolMatrix matrix;

  bool operator()(Index x, Index y) const { return matrix.at(x, y); }
};

/// Throws OutOfRange for pairs outside the base.
Relation make_relation(const FinSet& base, const std::vector<std::pair<Index, Index>>& pairs);
Relation identity_relation(const FinSet& base);
Relation full_relation(const FinSet& base);

/// A carrier with an equivalence relation: an object of EqRel.
struct Setoid {
  FinSet carrier;
  Relation rel;
};

/// Throws NotEquivalenceRelation.
Setoid make_setoid(const Relation& rel);

/// A map of carriers preserving the relations.
struct SetoidMap {
  Setoid src;
  Setoid dst;
  FinMap f0;
};

/// Throws NotPreserving.
SetoidMap make_setoid_map(const Setoid& src, const Setoid& dst, const FinMap& f0);

/// The relation as a subobject of A x A: T = {(x, y) : R(x, y)} with its two legs.
struct Tabulation {
  FinSet object;
  FinMap r1;
  FinMap r2;
};
Tabulation tabulate(const Relation& r);

bool is_reflexive(const Relation& r);
bool is_symmetric(const Relation& r);
bool is_transitive(const Relation& r);

/// Matrix laws plus the categorical witnesses ρ : A -> T, σ : T -> T,
/// τ : T x_A T -> T with their equations.
Certificate is_equivalence_relation(const Relation& r);

/// Least equivalence relation containing r.
Relation rst_closure(const Relation& r);

struct Quotient {
  FinSet object;
  FinMap proj;
  std::vector<Index> reps;  // least member of each class
};

/// Throws NotEquivalenceRelation.
Quotient quotient(const Setoid& s);

/// The tabulated relation is isomorphic to the kernel pair of its quotient map.
Certificate verify_effectiveness(const Setoid& s);

Setoid kernel_relation(const FinMap& f);
Certificate verify_kernel_effective(const FinMap& f);

Setoid setoid_inclusion(const FinSet& a);
FinSet q_functor(const Setoid& s);
FinMap q_on_map(const SetoidMap& m);

/// Hom_EqRel(S, iA) -> Hom_Set(QS, A).
FinMap transpose_to_set(const Setoid& s, const FinSet& a, const FinMap& g);
/// Hom_Set(QS, A) -> Hom_EqRel(S, iA), carriers only.
FinMap transpose_to_eqrel(const Setoid& s, const FinMap& k);

Certificate verify_adjunction_q_i(const Setoid& s, const FinSet& a, std::uint64_t cap = kDefaultCap);

/// Quotient by the set of distinct relation rows (each row an equivalence
/// class viewed as a predicate), with the comparison to quotient(s).
struct VVQuotient {
  FinSet object;
  std::vector<std::vector<bool>> rows;
  FinMap comparison;  // object -> quotient(s).object
  bool comparison_is_iso = false;
};
VVQuotient vv_quotient(const Setoid& s);

/// 2 quotiented by the relation 0 ~ 1 iff p, and what a section of the
/// quotient map says about p.
struct TwoModP {
  FinSet object;
  FinMap proj;
  FinMap section;
  bool recovered = false;
};
TwoModP two_mod_p(bool p);

/// Setoid for a restricted-growth string (block index of every element).
Setoid setoid_from_blocks(const std::vector<Index>& blocks);
/// Every equivalence relation on [n], in restricted-growth-string order.
std::vector<Setoid> all_equivalence_relations(std::size_t n);

}  // namespace pretopos
