#pragma once

// Exhaustive verification suites, one per axiom group, and the aggregate
// ΠW-pretopos check. Suites convert module errors into failures with the
// offending inputs; CapExceeded propagates.

#include <cstdint>
#include <optional>

#include "pretopos/core.hpp"

namespace pretopos {

Certificate suite_lextensive(std::size_t max_size, std::uint64_t cap = kDefaultCap);
Certificate suite_regular(std::size_t max_size, std::uint64_t cap = kDefaultCap);
/// Effectiveness and vv-quotients for every equivalence relation on carriers
/// <= max_size, Q ⊣ i on carriers <= min(max_size, 4), and closure against
/// the coequalizer for every relation on carriers <= min(max_size, 3).
Certificate suite_exact(std::size_t max_size, std::uint64_t cap = kDefaultCap);
/// Π_f adjunction for bases <= min(max_size, 2) and slice totals <= max_size.
Certificate suite_lcc(std::size_t max_size, std::uint64_t cap = kDefaultCap);
/// Every shape map with |X|, |Y| <= max_size; initiality against carriers <= max_carrier.
Certificate suite_wtypes(std::size_t max_size, std::size_t max_carrier = 4,
                         std::uint64_t cap = kDefaultCap);
Certificate suite_epi(std::size_t max_size, std::uint64_t cap = kDefaultCap);
/// Subobject classifier for |B| <= max_size, object classifier for
/// |B|, N <= min(max_size, 3).
Certificate suite_classifiers(std::size_t max_size, std::uint64_t cap = kDefaultCap);
/// fiber_bound_class(k), k <= 2, and collection squares with E_bound 4.
Certificate suite_smallmaps(std::size_t max_size, std::uint64_t cap = kDefaultCap);

/// Lextensive, regular, exact, LCC and W-types in that order, plus a sampled
/// naturality check of χ driven by the seed.
Certificate verify_piw_pretopos(std::size_t max_size, std::optional<std::uint64_t> seed = std::nullopt,
                                std::uint64_t cap = kDefaultCap);

}  // namespace pretopos
