#include "pretopos/fault.hpp"

namespace pretopos::fault {

namespace {
thread_local Mutation current = Mutation::None;
}

std::string_view to_string(Mutation m) noexcept {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::CoequalizerSkipUnion: return "coequalizer-skip-union";
    case Mutation::ClosureDropTransitivity: return "closure-drop-transitivity";
    case Mutation::PiSectionOffByOne: return "pi-section-off-by-one";
    case Mutation::PullbackDropLast: return "pullback-drop-last";
    case Mutation::SumOverlap: return "sum-overlap";
    case Mutation::QuotientMergeFirstClasses: return "quotient-merge-first-classes";
    case Mutation::WTypeStopEarly: return "wtype-stop-early";
    case Mutation::ClassifierRankOffByOne: return "classifier-rank-off-by-one";
  }
  return "unknown";
}

Mutation active() noexcept { return current; }

ScopedMutation::ScopedMutation(Mutation m) noexcept : previous_(current) { current = m; }
ScopedMutation::~ScopedMutation() { current = previous_; }

}  // namespace pretopos::fault
