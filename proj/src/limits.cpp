#include "pretopos/limits.hpp"

#include "pretopos/fault.hpp"

namespace pretopos {

namespace {

std::string pair_label(Index a, Index b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Cospan make_cospan(FinMap f, FinMap g) {
  if (!compatible(f.cod(), g.cod())) {
    throw Error(ErrorKind::DomainMismatch, "cospan legs have codomains of size " +
                                               std::to_string(f.cod().size()) + " and " +
                                               std::to_string(g.cod().size()));
  }
  return Cospan{std::move(f), std::move(g)};
}

bool Square::commutes() const { return compose(right, top) == compose(bottom, left); }

Square make_square(FinMap top, FinMap right, FinMap bottom, FinMap left) {
  const bool ok = compatible(top.dom(), left.dom()) && compatible(top.cod(), right.dom()) &&
                  compatible(left.cod(), bottom.dom()) && compatible(right.cod(), bottom.cod());
  if (!ok) throw Error(ErrorKind::DomainMismatch, "square boundary does not line up");
  return Square{std::move(top), std::move(right), std::move(bottom), std::move(left)};
}

FinSet terminal() { return FinSet(1, "1"); }

FinMap bang(const FinSet& a) { return FinMap(a, terminal(), std::vector<Index>(a.size(), 0)); }

Product product(const FinSet& a, const FinSet& b) {
  const std::size_t n = a.size() * b.size();
  std::vector<std::string> decoder;
  std::vector<Index> t1, t2;
  decoder.reserve(n);
  for (Index i = 0; i < a.size(); ++i) {
    for (Index j = 0; j < b.size(); ++j) {
      decoder.push_back(pair_label(i, j));
      t1.push_back(i);
      t2.push_back(j);
    }
  }
  FinSet p(n, std::move(decoder));
  return Product{p, FinMap(p, a, std::move(t1)), FinMap(p, b, std::move(t2))};
}

FinMap pairing(const Product& p, const FinMap& f, const FinMap& g) {
  if (!compatible(f.dom(), g.dom()))
    throw Error(ErrorKind::DomainMismatch, "pairing needs a common domain");
  std::vector<Index> table(f.dom().size());
  for (Index c = 0; c < table.size(); ++c) table[c] = p.index_of(f(c), g(c));
  return FinMap(f.dom(), p.object, std::move(table));
}

Equalizer equalizer(const FinMap& f, const FinMap& g) {
  if (!compatible(f.dom(), g.dom()) || !compatible(f.cod(), g.cod()))
    throw Error(ErrorKind::ParallelMismatch, "equalizer needs a parallel pair");
  std::vector<Index> incl;
  std::vector<std::string> decoder;
  for (Index a = 0; a < f.dom().size(); ++a) {
    if (f(a) == g(a)) {
      incl.push_back(a);
      decoder.push_back(f.dom().describe(a));
    }
  }
  FinSet e(incl.size(), std::move(decoder));
  return Equalizer{e, FinMap(e, f.dom(), std::move(incl))};
}

Pullback pullback(const Cospan& c) {
  const FinSet& a = c.f.dom();
  const FinSet& b = c.g.dom();
  std::vector<Index> t1, t2;
  std::vector<std::string> decoder;
  std::vector<Index> lookup(a.size() * b.size(), kNoIndex);
  for (Index i = 0; i < a.size(); ++i) {
    for (Index j = 0; j < b.size(); ++j) {
      if (c.f(i) != c.g(j)) continue;
      lookup[i * b.size() + j] = t1.size();
      t1.push_back(i);
      t2.push_back(j);
      decoder.push_back(pair_label(i, j));
    }
  }
  if (fault::enabled(fault::Mutation::PullbackDropLast) && !t1.empty()) {
    lookup[t1.back() * b.size() + t2.back()] = kNoIndex;
    t1.pop_back();
    t2.pop_back();
    decoder.pop_back();
  }
  FinSet p(t1.size(), std::move(decoder));
  return Pullback{p, FinMap(p, a, std::move(t1)), FinMap(p, b, std::move(t2)), std::move(lookup)};
}

Pullback kernel_pair(const FinMap& f) { return pullback(make_cospan(f, f)); }

FinMap pullback_comparison(const Square& s, const Pullback& canonical) {
  if (!s.commutes()) throw Error(ErrorKind::NonCommuting, "right∘top != bottom∘left");
  std::vector<Index> table(s.corner().size());
  for (Index p = 0; p < table.size(); ++p) {
    Index k = canonical.index_of(s.left(p), s.top(p));
    if (k == kNoIndex) {
      throw Error(ErrorKind::NonCommuting,
                  "corner element " + std::to_string(p) + " has no image in the pullback");
    }
    table[p] = k;
  }
  return FinMap(s.corner(), canonical.object, std::move(table));
}

Certificate verify_pullback_square(const Square& s) {
  Certificate cert("limits.pullback_square");
  cert.inputs = {{"top", to_json(s.top)},
                 {"right", to_json(s.right)},
                 {"bottom", to_json(s.bottom)},
                 {"left", to_json(s.left)}};
  const Pullback canonical = pullback(make_cospan(s.bottom, s.right));
  const FinMap cmp = pullback_comparison(s, canonical);
  cert.witnesses["comparison"] = to_json(cmp);
  cert.witnesses["pullback_size"] = canonical.object.size();

  auto fib = fibers(cmp);
  for (Index k = 0; k < fib.size(); ++k) {
    if (fib[k].size() > 1) {
      cert.fail("comparison not injective",
                {{"elements", fib[k]}, {"image", canonical.object.describe(k)}});
      break;
    }
  }
  for (Index k = 0; k < fib.size(); ++k) {
    if (fib[k].empty()) {
      cert.fail("comparison not surjective", {{"missed", canonical.object.describe(k)}});
      break;
    }
  }
  return cert;
}

Square paste_horizontal(const Square& left, const Square& right) {
  return make_square(compose(right.top, left.top), right.right,
                     compose(right.bottom, left.bottom), left.left);
}

Certificate diagonal_injectivity_check(const FinMap& f) {
  Certificate cert("limits.diagonal_injectivity");
  cert.inputs["f"] = to_json(f);
  const Pullback k = kernel_pair(f);
  std::vector<Index> table(f.dom().size());
  bool total = true;
  for (Index a = 0; a < table.size(); ++a) {
    table[a] = k.index_of(a, a);
    if (table[a] == kNoIndex) {
      total = false;
      table[a] = 0;
    }
  }
  const bool injective = is_mono(f);
  bool diagonal_iso = false;
  if (total) {
    const FinMap diag(f.dom(), k.object, table);
    diagonal_iso = is_iso(diag).has_value();
    cert.witnesses["diagonal"] = to_json(diag);
  }
  cert.witnesses["injective"] = injective;
  cert.witnesses["diagonal_iso"] = diagonal_iso;
  cert.witnesses["kernel_pair_size"] = k.object.size();
  if (injective != diagonal_iso) {
    cert.fail("injectivity and diagonal disagree",
              {{"injective", injective}, {"diagonal_iso", diagonal_iso}});
  }
  return cert;
}

}  // namespace pretopos
