#include "pretopos/lcc.hpp"

#include <algorithm>
#include <stdexcept>

#include "pretopos/colimits.hpp"
#include "pretopos/fault.hpp"

namespace pretopos {

namespace {

std::string table_label(const std::vector<Index>& t) {
  std::string s = "[";
  for (Index i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + "]";
}

Index position_in(const std::vector<Index>& sorted, Index v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  return it != sorted.end() && *it == v ? static_cast<Index>(it - sorted.begin()) : kNoIndex;
}

/// Locates the block containing e given ascending block offsets.
Index block_of(const std::vector<Index>& offset, Index e) {
  auto it = std::upper_bound(offset.begin(), offset.end(), e);
  return static_cast<Index>(it - offset.begin()) - 1;
}

}  // namespace

SliceObj make_slice(const FinMap& proj) { return SliceObj{proj.cod(), proj.dom(), proj}; }

SliceMap make_slice_map(const SliceObj& src, const SliceObj& dst, const FinMap& map) {
  if (!(compose(dst.proj, map) == src.proj))
    throw Error(ErrorKind::NonCommuting, "map does not commute with the projections");
  return SliceMap{src, dst, map};
}

SliceObj base_change(const FinMap& f, const SliceObj& g) {
  const Pullback p = pullback(make_cospan(f, g.proj));
  return SliceObj{f.dom(), p.object, p.p1};
}

SliceObj sigma_f(const FinMap& f, const SliceObj& h) {
  return SliceObj{f.cod(), h.total, compose(f, h.proj)};
}

Index PiObject::index_of(Index y, const std::vector<Index>& sec) const {
  const auto& cand = candidates[y];
  if (sec.size() != cand.size()) return kNoIndex;
  Index local = 0;
  for (Index i = 0; i < cand.size(); ++i) {
    const Index d = position_in(cand[i], sec[i]);
    if (d == kNoIndex) return kNoIndex;
    local = local * cand[i].size() + d;
  }
  return local < count[y] ? offset[y] + local : kNoIndex;
}

std::vector<Index> PiObject::section(Index e) const {
  const Index y = block_of(offset, e);
  Index local = e - offset[y];
  const auto& cand = candidates[y];
  std::vector<Index> sec(cand.size());
  for (Index i = cand.size(); i-- > 0;) {
    sec[i] = cand[i][local % cand[i].size()];
    local /= cand[i].size();
  }
  return sec;
}

PiObject pi_f(const FinMap& f, const SliceObj& h, std::uint64_t cap) {
  if (!compatible(h.base, f.dom()))
    throw Error(ErrorKind::DomainMismatch, "Π_f needs an object over dom(f)");
  PiObject pi;
  pi.shape_fibers = fibers(f);
  const auto over_x = fibers(h.proj);
  std::vector<Index> proj;
  std::vector<std::string> decoder;
  for (Index y = 0; y < f.cod().size(); ++y) {
    std::vector<std::vector<Index>> cand;
    for (Index x : pi.shape_fibers[y]) cand.push_back(over_x[x]);
    std::uint64_t n = choice_count(cand, cap);
    if (n > cap)
      throw Error(ErrorKind::CapExceeded, "sections over " + std::to_string(y) + " exceed the cap");
    if (fault::enabled(fault::Mutation::PiSectionOffByOne) && n > 0) --n;
    pi.offset.push_back(proj.size());
    pi.count.push_back(n);
    std::uint64_t seen = 0;
    for_each_choice(cand, cap, [&](const std::vector<Index>& sec) {
      if (seen++ == n) return false;
      proj.push_back(y);
      decoder.push_back(std::to_string(y) + ":" + table_label(sec));
      return true;
    });
    pi.candidates.push_back(std::move(cand));
  }
  FinSet total(proj.size(), std::move(decoder));
  pi.slice = SliceObj{f.cod(), total, FinMap(total, f.cod(), std::move(proj))};
  return pi;
}

std::vector<FinMap> slice_homs(const SliceObj& src, const SliceObj& dst, std::uint64_t cap) {
  const auto over = fibers(dst.proj);
  std::vector<std::vector<Index>> options;
  for (Index e = 0; e < src.total.size(); ++e) options.push_back(over[src.proj(e)]);
  std::vector<FinMap> out;
  for_each_choice(options, cap, [&](const std::vector<Index>& t) {
    out.emplace_back(src.total, dst.total, t);
    return true;
  });
  return out;
}

Certificate verify_pi_adjunction(const FinMap& f, const SliceObj& g, const SliceObj& h, std::uint64_t cap) {
  Certificate cert("lcc.pi_adjunction");
  cert.inputs = {{"f", to_json(f)}, {"g", to_json(g.proj)}, {"h", to_json(h.proj)}};
  cert.caps["hom_cap"] = cap;
  if (!compatible(g.base, f.cod()) || !compatible(h.base, f.dom()))
    throw Error(ErrorKind::DomainMismatch, "g must live over cod(f) and h over dom(f)");

  const Pullback pb = pullback(make_cospan(f, g.proj));
  const SliceObj fg{f.dom(), pb.object, pb.p1};
  const PiObject pi = pi_f(f, h, cap);
  const auto left = slice_homs(fg, h, cap);
  const auto right = slice_homs(g, pi.slice, cap);
  cert.witnesses["hom_pullback_side"] = left.size();
  cert.witnesses["hom_pi_side"] = right.size();
  cert.witnesses["pi_total"] = pi.slice.total.size();
  if (left.size() != right.size())
    cert.fail("hom-set sizes differ", {{"left", left.size()}, {"right", right.size()}});

  auto transpose = [&](const FinMap& m) -> std::optional<FinMap> {
    std::vector<Index> table(g.total.size());
    for (Index t = 0; t < table.size(); ++t) {
      const Index y = g.proj(t);
      std::vector<Index> sec;
      for (Index x : pi.shape_fibers[y]) {
        const Index e = pb.index_of(x, t);
        if (e == kNoIndex) return std::nullopt;
        sec.push_back(m(e));
      }
      table[t] = pi.index_of(y, sec);
      if (table[t] == kNoIndex) return std::nullopt;
    }
    return FinMap(g.total, pi.slice.total, std::move(table));
  };
  auto untranspose = [&](const FinMap& n) {
    std::vector<Index> table(fg.total.size());
    for (Index e = 0; e < table.size(); ++e) {
      const Index x = pb.p1(e);
      const auto& fib = pi.shape_fibers[f(x)];
      const Index pos = position_in(fib, x);
      table[e] = pi.section(n(pb.p2(e)))[pos];
    }
    return FinMap(fg.total, h.total, std::move(table));
  };

  for (const auto& m : left) {
    const auto n = transpose(m);
    if (!n) {
      cert.fail("transpose is not a section", to_json(m));
      return cert;
    }
    if (!(compose(pi.slice.proj, *n) == g.proj)) {
      cert.fail("transpose not over Y", to_json(*n));
      return cert;
    }
    if (!(untranspose(*n) == m)) {
      cert.fail("round trip on the pullback side", to_json(m));
      return cert;
    }
  }
  for (const auto& n : right) {
    const FinMap m = untranspose(n);
    if (!(compose(h.proj, m) == fg.proj)) {
      cert.fail("untranspose not over X", to_json(m));
      return cert;
    }
    const auto back = transpose(m);
    if (!back || !(*back == n)) {
      cert.fail("round trip on the Π side", to_json(n));
      return cert;
    }
  }
  return cert;
}

Index Exponential::index_of(const std::vector<Index>& table) const {
  Index k = 0;
  for (Index v : table) k = k * base + v;
  return k;
}

Exponential exponential(const FinSet& a, const FinSet& b, std::uint64_t cap) {
  std::vector<std::string> decoder;
  std::vector<std::vector<Index>> tables;
  for_each_table(a.size(), b.size(), cap, [&](const std::vector<Index>& t) {
    tables.push_back(t);
    decoder.push_back(table_label(t));
    return true;
  });
  FinSet e(tables.size(), std::move(decoder), "B^A");
  Product dom = product(e, a);
  std::vector<Index> ev(dom.object.size());
  for (Index k = 0; k < tables.size(); ++k)
    for (Index x = 0; x < a.size(); ++x) ev[dom.index_of(k, x)] = tables[k][x];
  FinMap eval(dom.object, b, std::move(ev));
  return Exponential{e, std::move(dom), std::move(eval), a.size(), b.size()};
}

FinMap curry(const Exponential& e, const FinSet& c, const FinMap& h) {
  if (h.dom().size() != c.size() * e.exponent || h.cod().size() != e.base)
    throw Error(ErrorKind::DomainMismatch, "curry expects C x A -> B");
  std::vector<Index> table(c.size());
  for (Index i = 0; i < c.size(); ++i) {
    std::vector<Index> row(e.exponent);
    for (Index x = 0; x < e.exponent; ++x) row[x] = h(i * e.exponent + x);
    table[i] = e.index_of(row);
  }
  return FinMap(c, e.object, std::move(table));
}

FinMap uncurry(const Exponential& e, const FinMap& k) {
  const Product p = product(k.dom(), e.domain.p2.cod());
  std::vector<Index> table(p.object.size());
  for (Index i = 0; i < k.dom().size(); ++i)
    for (Index x = 0; x < e.exponent; ++x) table[p.index_of(i, x)] = e.eval(e.domain.index_of(k(i), x));
  return FinMap(p.object, e.eval.cod(), std::move(table));
}

Index PolyObject::index_of(Index y, const std::vector<Index>& branch) const {
  Index local = 0;
  for (Index v : branch) local = local * arg_size + v;
  return offset[y] + local;
}

std::pair<Index, std::vector<Index>> PolyObject::decode(Index e) const {
  const Index y = block_of(offset, e);
  Index local = e - offset[y];
  std::vector<Index> branch(shape_fibers[y].size());
  for (Index i = branch.size(); i-- > 0;) {
    branch[i] = local % arg_size;
    local /= arg_size;
  }
  return {y, std::move(branch)};
}

std::uint64_t poly_size(const FinMap& f, std::size_t a, std::uint64_t limit) {
  const std::uint64_t over = limit + 1;
  std::uint64_t total = 0;
  for (const auto& fib : fibers(f)) {
    total += hom_count(fib.size(), a, limit);
    if (total > limit) return over;
  }
  return total;
}

PolyObject poly_apply_direct(const FinMap& f, const FinSet& a, std::uint64_t cap) {
  const std::uint64_t n = poly_size(f, a.size(), cap);
  if (n > cap)
    throw Error(ErrorKind::CapExceeded, "P_f(A) has more than " + std::to_string(cap) + " elements");
  PolyObject p;
  p.shape_fibers = fibers(f);
  p.arg_size = a.size();
  std::vector<std::string> decoder;
  decoder.reserve(n);
  for (Index y = 0; y < f.cod().size(); ++y) {
    p.offset.push_back(decoder.size());
    for_each_table(p.shape_fibers[y].size(), a.size(), cap, [&](const std::vector<Index>& br) {
      std::string d = "(" + f.cod().describe(y) + ",[";
      for (Index i = 0; i < br.size(); ++i) d += (i ? "," : "") + a.describe(br[i]);
      decoder.push_back(d + "])");
      return true;
    });
  }
  p.object = FinSet(n, std::move(decoder));
  return p;
}

PolyObject poly_apply(const FinMap& f, const FinSet& a, std::uint64_t cap) {
  PolyObject direct = poly_apply_direct(f, a, cap);
  // X x A over X, then Π_f, then Σ_f down to the terminal object
  const Product xa = product(f.dom(), a);
  const PiObject pi = pi_f(f, make_slice(xa.p1), cap);
  const SliceObj summed = sigma_f(bang(f.cod()), pi.slice);
  if (summed.total.size() != direct.object.size()) {
    throw std::logic_error("P_f(A): functor pipeline gives " + std::to_string(summed.total.size()) +
                           " elements, formula gives " + std::to_string(direct.object.size()));
  }
  for (Index e = 0; e < summed.total.size(); ++e) {
    const Index y = pi.slice.proj(e);
    std::vector<Index> branch;
    for (Index v : pi.section(e)) branch.push_back(xa.p2(v));
    if (direct.decode(e) != std::make_pair(y, branch))
      throw std::logic_error("P_f(A): pipeline and formula disagree at element " + std::to_string(e));
  }
  return direct;
}

FinMap poly_on_map(const PolyObject& src, const PolyObject& dst, const FinMap& m) {
  std::vector<Index> table(src.object.size());
  for (Index e = 0; e < table.size(); ++e) {
    auto [y, branch] = src.decode(e);
    for (auto& v : branch) v = m(v);
    table[e] = dst.index_of(y, branch);
  }
  return FinMap(src.object, dst.object, std::move(table));
}

FinMap poly_on_map(const FinMap& f, const FinMap& m, std::uint64_t cap) {
  return poly_on_map(poly_apply(f, m.dom(), cap), poly_apply(f, m.cod(), cap), m);
}

std::string_view to_string(WStatus s) noexcept {
  return s == WStatus::Finite ? "Finite" : "DivergedAtCap";
}

std::string_view to_string(WFiniteness s) noexcept {
  switch (s) {
    case WFiniteness::Empty: return "Empty";
    case WFiniteness::IsY: return "IsY";
    case WFiniteness::Infinite: return "Infinite";
  }
  return "?";
}

WResult w_type(const FinMap& f, std::uint64_t size_cap, std::size_t stage_cap) {
  WResult r;
  r.shape = f;
  r.stages.push_back(0);
  std::vector<PolyObject> chain;  // chain[k-1] is W_k = P_f(W_{k-1})
  FinSet prev(0);
  std::optional<FinMap> conn;  // W_{k-2} -> W_{k-1}

  for (std::size_t k = 1; k <= stage_cap; ++k) {
    if (poly_size(f, prev.size(), size_cap) > size_cap) return r;
    PolyObject next = poly_apply(f, prev, size_cap);
    r.stages.push_back(next.object.size());
    FinMap step = k == 1 ? from_initial(next.object) : poly_on_map(chain.back(), next, *conn);
    auto inverse = is_iso(step);
    const bool stop_early = fault::enabled(fault::Mutation::WTypeStopEarly) && k == 2 && !prev.empty();
    if (inverse || stop_early) {
      r.status = WStatus::Finite;
      r.stage = k;
      // W = W_{k-1}; element trees come from the earlier stages
      std::vector<std::vector<std::string>> terms(k);
      for (std::size_t j = 1; j < k; ++j) {
        const PolyObject& wj = chain[j - 1];
        terms[j].resize(wj.object.size());
        for (Index e = 0; e < wj.object.size(); ++e) {
          auto [y, children] = wj.decode(e);
          std::string t = "c" + std::to_string(y);
          if (!children.empty()) {
            t += "(";
            for (Index i = 0; i < children.size(); ++i) t += (i ? "," : "") + terms[j - 1][children[i]];
            t += ")";
          }
          terms[j][e] = std::move(t);
        }
      }
      FinSet w(prev.size(), std::move(terms[k - 1]), "W");
      PolyObject pw = poly_apply(f, w, size_cap);
      std::vector<Index> sup_table;
      if (inverse) {
        sup_table = inverse->table();
      } else {
        for (Index e = 0; e < pw.object.size(); ++e) sup_table.push_back(std::min<Index>(e, w.size() - 1));
      }
      r.sup = FinMap(pw.object, w, std::move(sup_table));
      r.w = std::move(w);
      r.pw = std::move(pw);
      return r;
    }
    conn = std::move(step);
    prev = next.object;
    chain.push_back(std::move(next));
  }
  return r;
}

WFiniteness w_finiteness_criterion(const FinMap& f) {
  bool some_empty = false;
  bool some_inhabited = false;
  for (const auto& fib : fibers(f)) (fib.empty() ? some_empty : some_inhabited) = true;
  if (!some_empty) return WFiniteness::Empty;
  if (!some_inhabited) return WFiniteness::IsY;
  return WFiniteness::Infinite;
}

Algebra make_algebra(const FinMap& shape, const FinSet& carrier, std::vector<Index> structure,
                     std::uint64_t cap) {
  PolyObject dom = poly_apply(shape, carrier, cap);
  FinMap s(dom.object, carrier, std::move(structure));
  return Algebra{shape, carrier, std::move(dom), std::move(s)};
}

FinMap fold(const WResult& w, const Algebra& alg) {
  if (w.status != WStatus::Finite || !w.w || !w.sup || !w.pw)
    throw std::invalid_argument("fold needs a converged W-type");
  if (!(w.shape == alg.shape))
    throw Error(ErrorKind::DomainMismatch, "algebra has a different shape map");
  const FinSet& tree = *w.w;
  // sup^{-1}: first preimage of every tree
  std::vector<Index> unsup(tree.size(), kNoIndex);
  for (Index p = w.sup->dom().size(); p-- > 0;) unsup[(*w.sup)(p)] = p;

  enum : unsigned char { kTodo, kBusy, kDone };
  std::vector<unsigned char> state(tree.size(), kTodo);
  std::vector<Index> h(tree.size(), 0);
  auto visit = [&](auto&& self, Index t) -> Index {
    if (state[t] == kDone) return h[t];
    if (state[t] == kBusy) throw std::logic_error("W is not well-founded");
    if (unsup[t] == kNoIndex) throw std::logic_error("sup is not surjective");
    state[t] = kBusy;
    auto [y, children] = w.pw->decode(unsup[t]);
    for (auto& c : children) c = self(self, c);
    h[t] = alg.structure(alg.domain.index_of(y, children));
    state[t] = kDone;
    return h[t];
  };
  for (Index t = 0; t < tree.size(); ++t) visit(visit, t);
  return FinMap(tree, alg.carrier, std::move(h));
}

Certificate verify_initiality(const WResult& w, std::size_t max_carrier, std::uint64_t cap) {
  Certificate cert("lcc.w_initiality");
  cert.inputs["shape"] = to_json(w.shape);
  cert.caps = {{"hom_cap", cap}, {"max_carrier", max_carrier}};
  if (w.status != WStatus::Finite) {
    cert.fail("chain did not converge", {{"stages", w.stages}});
    return cert;
  }
  const FinSet& tree = *w.w;
  const PolyObject& pw = *w.pw;
  const FinMap& sup = *w.sup;
  if (!is_iso(sup)) {
    cert.fail("Lambek: sup is not an isomorphism", to_json(sup));
    return cert;
  }

  Json per_carrier = Json::array();
  for (std::size_t c = 0; c <= max_carrier && cert.passed; ++c) {
    const FinSet carrier(c);
    const PolyObject pc = poly_apply(w.shape, carrier, cap);
    Json summary = {{"carrier", c}, {"poly_size", pc.object.size()}};
    if (c == 0 && !pc.object.empty()) {
      summary["algebras"] = 0;
      per_carrier.push_back(summary);
      continue;
    }
    // every candidate h : W -> C with its action P(h) on P(W)
    std::vector<std::vector<Index>> homs, actions;
    for_each_table(tree.size(), c, cap, [&](const std::vector<Index>& h) {
      homs.push_back(h);
      actions.push_back(poly_on_map(pw, pc, FinMap(tree, carrier, h)).table());
      return true;
    });
    // The morphism condition reads the structure map only on the images of
    // P(h); when all structure maps do not fit under the cap, enumerate
    // their restrictions to that set instead.
    const bool full = hom_count(pc.object.size(), c, cap) <= cap;
    std::vector<Index> domain;
    if (full) {
      for (Index e = 0; e < pc.object.size(); ++e) domain.push_back(e);
    } else {
      for (const auto& a : actions) domain.insert(domain.end(), a.begin(), a.end());
      std::sort(domain.begin(), domain.end());
      domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    }
    summary["mode"] = full ? "all structure maps" : "structure maps restricted to reachable inputs";
    summary["enumerated_structures"] = hom_count(domain.size(), c, cap);

    std::uint64_t algebras = 0;
    for_each_table(domain.size(), c, cap, [&](const std::vector<Index>& alpha_part) {
      ++algebras;
      std::vector<Index> alpha(pc.object.size(), 0);
      for (Index i = 0; i < domain.size(); ++i) alpha[domain[i]] = alpha_part[i];
      std::vector<Index> morphisms;
      for (Index k = 0; k < homs.size(); ++k) {
        bool ok = true;
        for (Index p = 0; p < pw.object.size() && ok; ++p) ok = homs[k][sup(p)] == alpha[actions[k][p]];
        if (ok) morphisms.push_back(k);
      }
      if (morphisms.size() != 1) {
        cert.fail(morphisms.empty() ? "no algebra morphism" : "algebra morphism not unique",
                  {{"carrier", c}, {"structure", alpha}, {"morphisms", morphisms.size()}});
        return false;
      }
      const Algebra alg{w.shape, carrier, pc, FinMap(pc.object, carrier, alpha)};
      if (fold(w, alg).table() != homs[morphisms[0]]) {
        cert.fail("fold differs from the unique morphism", {{"carrier", c}, {"structure", alpha}});
        return false;
      }
      return true;
    });
    summary["algebras"] = algebras;
    per_carrier.push_back(summary);
  }
  cert.witnesses["carriers"] = per_carrier;
  cert.witnesses["w_size"] = tree.size();
  return cert;
}

Json to_json(const WResult& w) {
  Json j = {{"shape", to_json(w.shape)}, {"status", std::string(to_string(w.status))}, {"stages", w.stages}};
  if (w.status == WStatus::Finite) {
    j["stage"] = w.stage;
    j["trees"] = w.w->decoder() ? Json(*w.w->decoder()) : Json::array();
    j["sup"] = to_json(*w.sup);
  }
  return j;
}

}  // namespace pretopos
