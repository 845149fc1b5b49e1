#pragma once

// Test hook: deliberately broken variants of selected constructions, used to
// check that the verification suites catch real bugs. Inactive unless a
// ScopedMutation is alive on the current thread.

#include <array>
#include <string_view>

namespace pretopos::fault {

enum class Mutation {
  None,
  CoequalizerSkipUnion,     // coequalizer forgets the last identification
  ClosureDropTransitivity,  // rst_closure stops after reflexive + symmetric
  PiSectionOffByOne,        // Π_f drops the last section over every base point
  PullbackDropLast,         // pullback omits its last pair
  SumOverlap,               // inr lands one slot early, overlapping inl
  QuotientMergeFirstClasses,  // quotient glues classes 0 and 1 together
  WTypeStopEarly,           // Adámek iteration declares convergence after one stage
  ClassifierRankOffByOne,   // θ_f uses rank - 1, clamped at 0
};

inline constexpr std::array<Mutation, 8> kAllMutations = {
    Mutation::CoequalizerSkipUnion,      Mutation::ClosureDropTransitivity,
    Mutation::PiSectionOffByOne,         Mutation::PullbackDropLast,
    Mutation::SumOverlap,                Mutation::QuotientMergeFirstClasses,
    Mutation::WTypeStopEarly,            Mutation::ClassifierRankOffByOne,
};

std::string_view to_string(Mutation m) noexcept;

Mutation active() noexcept;
inline bool enabled(Mutation m) noexcept { return active() == m; }

class ScopedMutation {
 public:
  explicit ScopedMutation(Mutation m) noexcept;
  ~ScopedMutation();
  ScopedMutation(const ScopedMutation&) = delete;
  ScopedMutation& operator=(const ScopedMutation&) = delete;

 private:
  Mutation previous_;
};

}  // namespace pretopos::fault
