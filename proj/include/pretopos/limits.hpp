#pragma once

// Finite limits: terminal object, products, equalizers, pullbacks and kernel
// pairs, plus an exact recognizer for pullback squares.

#include <limits>
#include <vector>

#include "pretopos/core.hpp"

namespace pretopos {

inline constexpr Index kNoIndex = std::numeric_limits<Index>::max();

/// Two maps with a shared codomain.
struct Cospan {
  FinMap f;  // A -> X
  FinMap g;  // B -> X
};

/// Throws DomainMismatch unless cod(f) and cod(g) agree.
Cospan make_cospan(FinMap f, FinMap g);

/// corner --top--> A
///   |             |
/// left          right
///   v             v
///   B --bottom--> X
struct Square {
  FinMap top;
  FinMap right;
  FinMap bottom;
  FinMap left;

  const FinSet& corner() const { return top.dom(); }
  bool commutes() const;
};

/// Checks the boundary (domains and codomains line up); throws DomainMismatch.
Square make_square(FinMap top, FinMap right, FinMap bottom, FinMap left);

/// A limit of a pair of maps, stored with a dense (a, b) -> index lookup.
struct Pullback {
  FinSet object;
  FinMap p1;
  FinMap p2;
  std::vector<Index> lookup;  // |A|*|B| entries, kNoIndex where f(a) != g(b)

  Index index_of(Index a, Index b) const { return lookup[a * p2.cod().size() + b]; }
};

struct Product {
  FinSet object;
  FinMap p1;
  FinMap p2;

  Index index_of(Index a, Index b) const { return a * p2.cod().size() + b; }
};

struct Equalizer {
  FinSet object;
  FinMap inclusion;
};

FinSet terminal();
FinMap bang(const FinSet& a);

Product product(const FinSet& a, const FinSet& b);
/// The mediating map <f, g> : C -> A x B.
FinMap pairing(const Product& p, const FinMap& f, const FinMap& g);

/// Throws ParallelMismatch unless f and g share domain and codomain.
Equalizer equalizer(const FinMap& f, const FinMap& g);

/// {(a, b) : f(a) = g(b)}, lexicographic.
Pullback pullback(const Cospan& c);
inline Pullback pullback(const FinMap& f, const FinMap& g) { return pullback(make_cospan(f, g)); }
Pullback kernel_pair(const FinMap& f);

/// The canonical map from the corner into pullback(bottom, right),
/// p |-> (left p, top p). Throws NonCommuting.
FinMap pullback_comparison(const Square& s, const Pullback& canonical);

/// Passes iff the comparison map is an isomorphism.
Certificate verify_pullback_square(const Square& s);

/// Pasting: [outer square] = [left square] beside [right square].
///   P --t1--> Q --t2--> R
///   |         |         |
///   v         v         v
///   B --b1--> C --b2--> X
Square paste_horizontal(const Square& left, const Square& right);

/// f injective iff the diagonal A -> A x_B A is an isomorphism.
Certificate diagonal_injectivity_check(const FinMap& f);

}  // namespace pretopos
