#pragma once

// Slices, base change, dependent sums and products, exponentials, polynomial
// functors and W-types computed as colimits of the initial chain.

#include <optional>
#include <utility>
#include <vector>

#include "pretopos/core.hpp"
#include "pretopos/limits.hpp"

namespace pretopos {

/// An object of the slice over `base`: a map total -> base.
struct SliceObj {
  FinSet base;
  FinSet total;
  FinMap proj;
};

SliceObj make_slice(const FinMap& proj);

struct SliceMap {
  SliceObj src;
  SliceObj dst;
  FinMap map;
};

/// Throws NonCommuting unless dst.proj ∘ map = src.proj.
SliceMap make_slice_map(const SliceObj& src, const SliceObj& dst, const FinMap& map);

/// f*(g) for f : X -> Y and g over Y. The total is the pullback of g.proj
/// along f, elements (x, t).
SliceObj base_change(const FinMap& f, const SliceObj& g);
/// Σ_f(h) = h.proj followed by f.
SliceObj sigma_f(const FinMap& f, const SliceObj& h);

/// Π_f(h): over every y, the sections of h on the fiber of f at y.
struct PiObject {
  SliceObj slice;
  std::vector<std::vector<Index>> shape_fibers;  // fib_f(y)
  std::vector<std::vector<std::vector<Index>>> candidates;  // per y, per fiber position: fib_h(x)
  std::vector<Index> offset;  // first element over y
  std::vector<std::size_t> count;  // sections over y

  /// Index of the section over y; kNoIndex if it is not a section.
  Index index_of(Index y, const std::vector<Index>& section) const;
  /// The section table of element e, positions following shape_fibers[y].
  std::vector<Index> section(Index e) const;
};

/// Throws DomainMismatch unless h lives over dom(f); CapExceeded when the
/// sections over some y exceed cap.
PiObject pi_f(const FinMap& f, const SliceObj& h, std::uint64_t cap = kDefaultCap);

/// Every slice map src -> dst, as tables on src.total.
std::vector<FinMap> slice_homs(const SliceObj& src, const SliceObj& dst, std::uint64_t cap = kDefaultCap);

/// Hom_{/X}(f*g, h) ≅ Hom_{/Y}(g, Π_f h) through explicit transposes.
Certificate verify_pi_adjunction(const FinMap& f, const SliceObj& g, const SliceObj& h,
                                 std::uint64_t cap = kDefaultCap);

struct Exponential {
  FinSet object;   // B^A, functions in lexicographic table order
  Product domain;  // B^A x A
  FinMap eval;     // B^A x A -> B
  std::size_t exponent = 0;  // |A|
  std::size_t base = 0;      // |B|

  /// Position of a table in `object`.
  Index index_of(const std::vector<Index>& table) const;
};

Exponential exponential(const FinSet& a, const FinSet& b, std::uint64_t cap = kDefaultCap);
/// h : C x A -> B (on product(C, A)) gives C -> B^A.
FinMap curry(const Exponential& e, const FinSet& c, const FinMap& h);
FinMap uncurry(const Exponential& e, const FinMap& k);

/// P_f(A) = Σ_y A^{fib_f(y)}; elements (y, branch) ordered by y, then
/// lexicographically by branch.
struct PolyObject {
  FinSet object;
  std::vector<std::vector<Index>> shape_fibers;
  std::vector<Index> offset;
  std::size_t arg_size = 0;

  Index index_of(Index y, const std::vector<Index>& branch) const;
  std::pair<Index, std::vector<Index>> decode(Index e) const;
};

/// Σ_y |A|^|fib(y)|, saturated at limit + 1.
std::uint64_t poly_size(const FinMap& f, std::size_t a, std::uint64_t limit = kDefaultCap);

/// Built as Σ_f Π_f (X x A) and cross-checked element by element against
/// the direct formula. Throws CapExceeded.
PolyObject poly_apply(const FinMap& f, const FinSet& a, std::uint64_t cap = kDefaultCap);
/// The direct construction alone.
PolyObject poly_apply_direct(const FinMap& f, const FinSet& a, std::uint64_t cap = kDefaultCap);
FinMap poly_on_map(const FinMap& f, const FinMap& m, std::uint64_t cap = kDefaultCap);
FinMap poly_on_map(const PolyObject& src, const PolyObject& dst, const FinMap& m);

enum class WStatus { Finite, DivergedAtCap };
enum class WFiniteness { Empty, IsY, Infinite };

std::string_view to_string(WStatus s) noexcept;
std::string_view to_string(WFiniteness s) noexcept;

struct WResult {
  FinMap shape;
  WStatus status = WStatus::DivergedAtCap;
  std::vector<std::size_t> stages;  // |W_0|, |W_1|, ...
  std::size_t stage = 0;            // k with W_{k-1} -> W_k an iso
  std::optional<FinSet> w;          // decoded as trees
  std::optional<PolyObject> pw;     // P_f(W)
  std::optional<FinMap> sup;        // P_f(W) -> W
};

inline constexpr std::uint64_t kDefaultWSizeCap = 5000;
inline constexpr std::size_t kDefaultWStageCap = 50;

WResult w_type(const FinMap& f, std::uint64_t size_cap = kDefaultWSizeCap,
               std::size_t stage_cap = kDefaultWStageCap);

/// Closed-form oracle for whether the initial chain stabilizes.
WFiniteness w_finiteness_criterion(const FinMap& f);

struct Algebra {
  FinMap shape;
  FinSet carrier;
  PolyObject domain;  // P_f(carrier)
  FinMap structure;   // domain -> carrier
};

/// Throws LengthMismatch / OutOfRange when the table does not fit P_f(carrier).
Algebra make_algebra(const FinMap& shape, const FinSet& carrier, std::vector<Index> structure,
                     std::uint64_t cap = kDefaultCap);

/// The algebra morphism W -> carrier, by structural recursion.
FinMap fold(const WResult& w, const Algebra& alg);

/// Lambek plus existence and uniqueness of algebra morphisms out of W into
/// every algebra on a carrier of size <= max_carrier.
Certificate verify_initiality(const WResult& w, std::size_t max_carrier = 4,
                              std::uint64_t cap = kDefaultCap);

Json to_json(const WResult& w);

}  // namespace pretopos
