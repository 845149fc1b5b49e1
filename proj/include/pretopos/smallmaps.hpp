#pragma once

// Classes of small maps and the algebraic-set-theory layer at finite scale:
// stability, local fullness, quasi-pullbacks, covering and collection
// squares, the collection axiom and multiple choice.

#include <functional>
#include <string>

#include "pretopos/core.hpp"
#include "pretopos/limits.hpp"

namespace pretopos {

struct MapClass {
  std::string name;
  std::function<bool(const FinMap&)> predicate;

  bool operator()(const FinMap& f) const { return predicate(f); }
};

/// Maps all of whose fibers have at most k elements.
MapClass fiber_bound_class(std::size_t k);

/// Pullback stability, descent along surjections, and closure under sums,
/// over every square with carriers of size <= max_size.
Certificate verify_stable(const MapClass& s, std::size_t max_size, std::uint64_t cap = kDefaultCap);

/// For composable g, f with f in the class: g in the class iff f∘g is.
Certificate verify_locally_full(const MapClass& s, std::size_t max_size, std::uint64_t cap = kDefaultCap);

/// The comparison map from the corner into the pullback is surjective.
Certificate is_quasi_pullback(const Square& s);
/// A quasi-pullback with surjective bottom map.
Certificate is_covering_square(const Square& s);

///   D --q--> B
///   |g       |f
///   C --p--> A
struct CoveringSquare {
  Square square;
};

/// Throws NonCommuting, or NotSurjective when the square is not covering.
CoveringSquare make_covering_square(const Square& s);

/// For every a, every E with |E| <= e_bound and every surjection
/// e : E ->> fib_f(a), some c over a admits t : fib_g(c) -> E with e∘t = q_c.
/// Searched exhaustively and also built from a splitting of e; both are
/// reported.
Certificate is_collection_square(const CoveringSquare& cs, std::size_t e_bound = 4,
                                 std::uint64_t cap = kDefaultCap);

struct CollectionWitness {
  Square square;  // B -> A through C, over Y -> X
  FinMap lift;    // B -> C
  Certificate certificate;
};

/// For f : A -> X in the class and p : C ->> A, a quasi-pullback whose left
/// map is in the class and whose bottom map is surjective, with the top map
/// factored through p. Throws NotSurjective.
CollectionWitness collection_axiom_witness(const MapClass& s, const FinMap& f, const FinMap& p);

struct AmcWitness {
  CoveringSquare square;
  Certificate certificate;
};

/// The identity covering square on f, checked as a collection square.
AmcWitness amc_witness(const FinMap& f, std::size_t e_bound = 4, std::uint64_t cap = kDefaultCap);

/// Every covering square whose four carriers have size <= max_size, up to
/// the choice of corner map into the pullback. Visitor returns false to stop.
void for_each_covering_square(std::size_t max_size, std::uint64_t cap,
                              const std::function<bool(const CoveringSquare&)>& visit);

}  // namespace pretopos
