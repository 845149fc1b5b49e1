#pragma once

// Naive reference computations the library results are compared against.
// Deliberately written without any library helpers beyond the value types.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "pretopos/core.hpp"

namespace oracle {

using pretopos::FinMap;
using pretopos::FinSet;
using pretopos::Index;

inline std::uint64_t power(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// All tables [a] -> [b], built by recursion rather than an odometer.
inline std::vector<std::vector<Index>> tables(std::size_t a, std::size_t b) {
  if (a == 0) return {{}};
  std::vector<std::vector<Index>> out;
  const auto tails = tables(a - 1, b);
  for (Index v = 0; v < b; ++v)
    for (const auto& rest : tails) {
      std::vector<Index> t{v};
      t.insert(t.end(), rest.begin(), rest.end());
      out.push_back(t);
    }
  return out;
}

inline std::vector<FinMap> maps(std::size_t a, std::size_t b) {
  std::vector<FinMap> out;
  for (const auto& t : tables(a, b)) out.emplace_back(FinSet(a), FinSet(b), t);
  return out;
}

inline bool injective(const FinMap& f) {
  std::set<Index> seen(f.table().begin(), f.table().end());
  return seen.size() == f.table().size();
}

inline bool surjective(const FinMap& f) {
  std::set<Index> seen(f.table().begin(), f.table().end());
  return seen.size() == f.cod().size();
}

/// Pairs (a, b) with f(a) = g(b), lexicographic.
inline std::vector<std::pair<Index, Index>> pullback_pairs(const FinMap& f, const FinMap& g) {
  std::vector<std::pair<Index, Index>> out;
  for (Index a = 0; a < f.dom().size(); ++a)
    for (Index b = 0; b < g.dom().size(); ++b)
      if (f(a) == g(b)) out.emplace_back(a, b);
  return out;
}

/// Number of equivalence classes of the smallest equivalence relation
/// containing the pairs, by repeated relabelling.
inline std::vector<Index> closure_labels(std::size_t n, const std::vector<std::pair<Index, Index>>& pairs) {
  std::vector<Index> label(n);
  for (Index i = 0; i < n; ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [x, y] : pairs) {
      Index lo = std::min(label[x], label[y]);
      Index hi = std::max(label[x], label[y]);
      if (lo == hi) continue;
      for (auto& l : label)
        if (l == hi) l = lo;
      changed = true;
    }
  }
  return label;  // least member of each class
}

inline std::size_t count_classes(const std::vector<Index>& label) {
  return std::set<Index>(label.begin(), label.end()).size();
}

inline std::uint64_t bell(std::size_t n) {
  // Bell triangle
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = next;
  }
  return row.front();
}

inline FinMap random_map(std::mt19937_64& rng, std::size_t a, std::size_t b) {
  std::vector<Index> t(a);
  if (b > 0) {
    std::uniform_int_distribution<Index> pick(0, b - 1);
    for (auto& v : t) v = pick(rng);
  }
  return FinMap(FinSet(a), FinSet(b), t);
}

}  // namespace oracle
