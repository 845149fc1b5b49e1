#include "pretopos/exactness.hpp"

#include <algorithm>
#include <map>

#include "pretopos/colimits.hpp"
#include "pretopos/fault.hpp"
#include "pretopos/union_find.hpp"

namespace pretopos {

namespace {

Json pair_json(Index x, Index y) { return Json::array({x, y}); }

/// (x, y) -> position in the tabulation, kNoIndex when unrelated.
std::vector<Index> tabulation_lookup(const Relation& r) {
  const std::size_t n = r.base.size();
  std::vector<Index> lookup(n * n, kNoIndex);
  Index next = 0;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (r(x, y)) lookup[x * n + y] = next++;
  return lookup;
}

void require_equivalence(const Relation& r) {
  if (!is_reflexive(r) || !is_symmetric(r) || !is_transitive(r))
    throw Error(ErrorKind::NotEquivalenceRelation, "relation is not an equivalence relation");
}

}  // namespace

Relation make_relation(const FinSet& base, const std::vector<std::pair<Index, Index>>& pairs) {
  Relation r{base, BoolMatrix(base.size(), base.size())};
  for (auto [x, y] : pairs) {
    if (x >= base.size() || y >= base.size()) {
      throw Error(ErrorKind::OutOfRange, "pair (" + std::to_string(x) + "," + std::to_string(y) +
                                             ") outside a carrier of size " +
                                             std::to_string(base.size()));
    }
    r.matrix.set(x, y);
  }
  return r;
}

Relation identity_relation(const FinSet& base) {
  Relation r{base, BoolMatrix(base.size(), base.size())};
  for (Index x = 0; x < base.size(); ++x) r.matrix.set(x, x);
  return r;
}

Relation full_relation(const FinSet& base) {
  Relation r{base, BoolMatrix(base.size(), base.size())};
  for (Index x = 0; x < base.size(); ++x)
    for (Index y = 0; y < base.size(); ++y) r.matrix.set(x, y);
  return r;
}

Setoid make_setoid(const Relation& rel) {
  require_equivalence(rel);
  return Setoid{rel.base, rel};
}

SetoidMap make_setoid_map(const Setoid& src, const Setoid& dst, const FinMap& f0) {
  if (f0.dom().size() != src.carrier.size() || f0.cod().size() != dst.carrier.size())
    throw Error(ErrorKind::DomainMismatch, "carrier map does not fit the setoids");
  for (Index x = 0; x < src.carrier.size(); ++x) {
    for (Index y = 0; y < src.carrier.size(); ++y) {
      if (src.rel(x, y) && !dst.rel(f0(x), f0(y))) {
        throw Error(ErrorKind::NotPreserving, "related pair (" + std::to_string(x) + "," +
                                                  std::to_string(y) + ") is sent to unrelated elements");
      }
    }
  }
  return SetoidMap{src, dst, f0};
}

Tabulation tabulate(const Relation& r) {
  std::vector<Index> t1, t2;
  std::vector<std::string> decoder;
  for (Index x = 0; x < r.base.size(); ++x) {
    for (Index y = 0; y < r.base.size(); ++y) {
      if (!r(x, y)) continue;
      t1.push_back(x);
      t2.push_back(y);
      decoder.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  }
  FinSet t(t1.size(), std::move(decoder));
  return Tabulation{t, FinMap(t, r.base, std::move(t1)), FinMap(t, r.base, std::move(t2))};
}

bool is_reflexive(const Relation& r) {
  for (Index x = 0; x < r.base.size(); ++x)
    if (!r(x, x)) return false;
  return true;
}

bool is_symmetric(const Relation& r) {
  for (Index x = 0; x < r.base.size(); ++x)
    for (Index y = 0; y < r.base.size(); ++y)
      if (r(x, y) && !r(y, x)) return false;
  return true;
}

bool is_transitive(const Relation& r) {
  const std::size_t n = r.base.size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (r(x, y))
        for (Index z = 0; z < n; ++z)
          if (r(y, z) && !r(x, z)) return false;
  return true;
}

Certificate is_equivalence_relation(const Relation& r) {
  Certificate cert("exactness.equivalence_relation");
  cert.inputs = {{"base", r.base.size()}, {"pairs", to_json(r.matrix)}};
  const std::size_t n = r.base.size();
  const bool refl = is_reflexive(r);
  const bool sym = is_symmetric(r);
  const bool trans = is_transitive(r);
  cert.witnesses["matrix"] = {{"reflexive", refl}, {"symmetric", sym}, {"transitive", trans}};

  const Tabulation t = tabulate(r);
  const auto lookup = tabulation_lookup(r);
  const FinMap id = identity(r.base);

  // ρ : A -> T
  bool rho_ok = true;
  {
    std::vector<Index> table(n, 0);
    for (Index x = 0; x < n && rho_ok; ++x) {
      table[x] = lookup[x * n + x];
      if (table[x] == kNoIndex) {
        rho_ok = false;
        cert.fail("no reflexivity witness", {{"element", x}});
      }
    }
    if (rho_ok) {
      const FinMap rho(r.base, t.object, table);
      rho_ok = compose(t.r1, rho) == id && compose(t.r2, rho) == id;
      if (!rho_ok) cert.fail("rho equations", to_json(rho));
      else cert.witnesses["rho"] = to_json(rho);
    }
  }
  // σ : T -> T
  bool sigma_ok = true;
  {
    std::vector<Index> table(t.object.size(), 0);
    for (Index k = 0; k < table.size() && sigma_ok; ++k) {
      table[k] = lookup[t.r2(k) * n + t.r1(k)];
      if (table[k] == kNoIndex) {
        sigma_ok = false;
        cert.fail("no symmetry witness", {{"pair", pair_json(t.r1(k), t.r2(k))}});
      }
    }
    if (sigma_ok) {
      const FinMap sigma(t.object, t.object, table);
      sigma_ok = compose(t.r1, sigma) == t.r2 && compose(t.r2, sigma) == t.r1;
      if (!sigma_ok) cert.fail("sigma equations", to_json(sigma));
      else cert.witnesses["sigma"] = to_json(sigma);
    }
  }
  // τ : T x_A T -> T over the composable pairs
  bool tau_ok = true;
  {
    const Pullback comp = pullback(make_cospan(t.r2, t.r1));
    std::vector<Index> table(comp.object.size(), 0);
    for (Index k = 0; k < table.size() && tau_ok; ++k) {
      const Index x = t.r1(comp.p1(k));
      const Index z = t.r2(comp.p2(k));
      table[k] = lookup[x * n + z];
      if (table[k] == kNoIndex) {
        tau_ok = false;
        cert.fail("no transitivity witness",
                  {{"pairs", Json::array({pair_json(x, t.r2(comp.p1(k))), pair_json(t.r1(comp.p2(k)), z)})}});
      }
    }
    if (tau_ok) {
      const FinMap tau(comp.object, t.object, table);
      tau_ok = compose(t.r1, tau) == compose(t.r1, comp.p1) && compose(t.r2, tau) == compose(t.r2, comp.p2);
      if (!tau_ok) cert.fail("tau equations", to_json(tau));
      else cert.witnesses["tau"] = to_json(tau);
    }
  }
  const bool matrix_ok = refl && sym && trans;
  const bool witnesses_ok = rho_ok && sigma_ok && tau_ok;
  cert.witnesses["routes_agree"] = matrix_ok == witnesses_ok;
  if (!matrix_ok && cert.passed) cert.fail("matrix laws", cert.witnesses["matrix"]);
  return cert;
}

Relation rst_closure(const Relation& r) {
  const std::size_t n = r.base.size();
  Relation out{r.base, BoolMatrix(n, n)};
  if (fault::enabled(fault::Mutation::ClosureDropTransitivity)) {
    for (Index x = 0; x < n; ++x) {
      out.matrix.set(x, x);
      for (Index y = 0; y < n; ++y) {
        if (r(x, y)) {
          out.matrix.set(x, y);
          out.matrix.set(y, x);
        }
      }
    }
    return out;
  }
  UnionFind uf(n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (r(x, y)) uf.unite(x, y);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (uf.same(x, y)) out.matrix.set(x, y);
  return out;
}

Quotient quotient(const Setoid& s) {
  require_equivalence(s.rel);
  const std::size_t n = s.carrier.size();
  std::vector<Index> label(n, kNoIndex);
  std::vector<Index> reps;
  for (Index x = 0; x < n; ++x) {
    Index least = x;
    for (Index y = 0; y < x; ++y) {
      if (s.rel(x, y)) {
        least = y;
        break;
      }
    }
    if (least == x) {
      label[x] = reps.size();
      reps.push_back(x);
    } else {
      label[x] = label[least];
    }
  }
  if (fault::enabled(fault::Mutation::QuotientMergeFirstClasses) && reps.size() >= 2) {
    for (auto& l : label)
      if (l >= 1) --l;
    reps.erase(reps.begin() + 1);
  }
  std::vector<std::string> decoder;
  for (Index r : reps) decoder.push_back("[" + s.carrier.describe(r) + "]");
  FinSet q(reps.size(), std::move(decoder));
  return Quotient{q, FinMap(s.carrier, q, std::move(label)), std::move(reps)};
}

Certificate verify_effectiveness(const Setoid& s) {
  Certificate cert("exactness.effectiveness");
  cert.inputs = {{"carrier", s.carrier.size()}, {"pairs", to_json(s.rel.matrix)}};
  const Quotient q = quotient(s);
  const Tabulation t = tabulate(s.rel);
  const Pullback k = kernel_pair(q.proj);
  cert.witnesses["relation_size"] = t.object.size();
  cert.witnesses["kernel_pair_size"] = k.object.size();

  std::vector<Index> table(t.object.size(), 0);
  for (Index e = 0; e < table.size(); ++e) {
    table[e] = k.index_of(t.r1(e), t.r2(e));
    if (table[e] == kNoIndex) {
      cert.fail("related pair not identified by the quotient", {{"pair", pair_json(t.r1(e), t.r2(e))}});
      return cert;
    }
  }
  const FinMap cmp(t.object, k.object, table);
  cert.witnesses["comparison"] = to_json(cmp);
  if (!is_iso(cmp)) {
    auto fib = fibers(cmp);
    for (Index e = 0; e < fib.size(); ++e) {
      if (fib[e].empty()) {
        cert.fail("identified pair not related", {{"pair", pair_json(k.p1(e), k.p2(e))}});
        break;
      }
    }
  }
  // same statement on matrices
  BoolMatrix ker(s.carrier.size(), s.carrier.size());
  for (Index e = 0; e < k.object.size(); ++e) ker.set(k.p1(e), k.p2(e));
  cert.witnesses["matrices_equal"] = ker == s.rel.matrix;
  if (!(ker == s.rel.matrix) && cert.passed) cert.fail("kernel matrix differs", to_json(ker));
  return cert;
}

Setoid kernel_relation(const FinMap& f) {
  const std::size_t n = f.dom().size();
  Relation r{f.dom(), BoolMatrix(n, n)};
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (f(x) == f(y)) r.matrix.set(x, y);
  return Setoid{f.dom(), r};
}

Certificate verify_kernel_effective(const FinMap& f) {
  Certificate cert("exactness.kernel_effective");
  cert.inputs["f"] = to_json(f);
  const Setoid ker = kernel_relation(f);
  const Quotient q = quotient(ker);
  const ImageFactorization im = image_factorization(f);
  std::vector<Index> table(q.object.size());
  for (Index c = 0; c < table.size(); ++c) table[c] = im.surj(q.reps[c]);
  const FinMap cmp(q.object, im.image, table);
  cert.witnesses["kernel_pairs"] = ker.rel.matrix.count();
  cert.witnesses["quotient_size"] = q.object.size();
  cert.witnesses["image_size"] = im.image.size();
  cert.witnesses["comparison"] = to_json(cmp);
  if (!is_iso(cmp)) cert.fail("quotient not isomorphic to image", to_json(cmp));
  else if (!(compose(im.inj, compose(cmp, q.proj)) == f))
    cert.fail("comparison not over cod(f)", to_json(cmp));
  const Certificate eff = verify_effectiveness(ker);
  if (!eff.passed) cert.fail("kernel not effective", eff.witnesses);
  return cert;
}

Setoid setoid_inclusion(const FinSet& a) { return Setoid{a, identity_relation(a)}; }

FinSet q_functor(const Setoid& s) { return quotient(s).object; }

FinMap q_on_map(const SetoidMap& m) {
  const SetoidMap checked = make_setoid_map(m.src, m.dst, m.f0);
  const Quotient qs = quotient(checked.src);
  const Quotient qd = quotient(checked.dst);
  std::vector<Index> table(qs.object.size());
  for (Index c = 0; c < table.size(); ++c) table[c] = qd.proj(checked.f0(qs.reps[c]));
  return FinMap(qs.object, qd.object, std::move(table));
}

FinMap transpose_to_set(const Setoid& s, const FinSet& a, const FinMap& g) {
  const Setoid ia = setoid_inclusion(a);
  const FinMap qg = q_on_map(SetoidMap{s, ia, g});
  const FinMap counit = *is_iso(quotient(ia).proj);
  return compose(counit, qg);
}

FinMap transpose_to_eqrel(const Setoid& s, const FinMap& k) { return compose(k, quotient(s).proj); }

Certificate verify_adjunction_q_i(const Setoid& s, const FinSet& a, std::uint64_t cap) {
  Certificate cert("exactness.adjunction_q_i");
  cert.inputs = {{"carrier", s.carrier.size()}, {"pairs", to_json(s.rel.matrix)}, {"A", a.size()}};
  cert.caps["hom_cap"] = cap;
  const Quotient qs = quotient(s);

  // unit η_S : S -> i(QS)
  const Setoid iqs = setoid_inclusion(qs.object);
  SetoidMap unit{s, iqs, qs.proj};
  try {
    unit = make_setoid_map(s, iqs, qs.proj);
  } catch (const Error& e) {
    cert.fail("unit does not preserve the relation", e.what());
    return cert;
  }
  cert.witnesses["unit"] = to_json(unit.f0);

  // counit ε at QS and at A
  auto counit_at = [&](const FinSet& x) -> std::optional<FinMap> {
    return is_iso(quotient(setoid_inclusion(x)).proj);
  };
  const auto eps_qs = counit_at(qs.object);
  const auto eps_a = counit_at(a);
  if (!eps_qs || !eps_a) {
    cert.fail("counit not an isomorphism", {{"at", eps_qs ? "A" : "QS"}});
    return cert;
  }
  cert.witnesses["counit_A"] = to_json(*eps_a);

  // ε_QS ∘ Q(η_S) = id_QS
  const FinMap left = compose(*eps_qs, q_on_map(unit));
  if (!(left == identity(qs.object))) cert.fail("triangle at QS", to_json(left));
  // i(ε_A) ∘ η_iA = id_iA
  const FinMap right = compose(*eps_a, quotient(setoid_inclusion(a)).proj);
  if (!(right == identity(a))) cert.fail("triangle at iA", to_json(right));

  // Hom_EqRel(S, iA) ≅ Hom_Set(QS, A)
  std::vector<FinMap> eqrel_homs;
  for_each_table(s.carrier.size(), a.size(), cap, [&](const std::vector<Index>& t) {
    for (Index x = 0; x < t.size(); ++x)
      for (Index y = 0; y < t.size(); ++y)
        if (s.rel(x, y) && t[x] != t[y]) return true;
    eqrel_homs.emplace_back(s.carrier, a, t);
    return true;
  });
  const auto set_homs = hom_enumerate(qs.object, a, cap);
  cert.witnesses["hom_eqrel"] = eqrel_homs.size();
  cert.witnesses["hom_set"] = set_homs.size();
  if (eqrel_homs.size() != set_homs.size())
    cert.fail("hom-set sizes differ", {{"hom_eqrel", eqrel_homs.size()}, {"hom_set", set_homs.size()}});
  for (const auto& g : eqrel_homs) {
    const FinMap k = transpose_to_set(s, a, g);
    if (!(transpose_to_eqrel(s, k) == g)) {
      cert.fail("transpose round trip on EqRel side", to_json(g));
      break;
    }
  }
  for (const auto& k : set_homs) {
    const FinMap g = transpose_to_eqrel(s, k);
    if (!(transpose_to_set(s, a, g) == k)) {
      cert.fail("transpose round trip on Set side", to_json(k));
      break;
    }
  }
  cert.witnesses["finite_model_note"] =
      "Q and i are mutually inverse up to iso here because finite surjections split";
  return cert;
}

VVQuotient vv_quotient(const Setoid& s) {
  require_equivalence(s.rel);
  const Quotient q = quotient(s);
  std::map<std::vector<bool>, Index> seen;
  std::vector<std::vector<bool>> rows;
  std::vector<Index> witness;
  for (Index x = 0; x < s.carrier.size(); ++x) {
    auto row = s.rel.matrix.row(x);
    if (seen.emplace(row, rows.size()).second) {
      rows.push_back(row);
      witness.push_back(x);
    }
  }
  std::vector<std::string> decoder;
  for (const auto& row : rows) {
    std::string d = "{";
    for (Index y = 0; y < row.size(); ++y)
      if (row[y]) d += (d.size() > 1 ? "," : "") + s.carrier.describe(y);
    decoder.push_back(d + "}");
  }
  FinSet object(rows.size(), std::move(decoder));
  std::vector<Index> table(rows.size());
  for (Index r = 0; r < rows.size(); ++r) table[r] = q.proj(witness[r]);
  FinMap cmp(object, q.object, std::move(table));
  const bool iso = is_iso(cmp).has_value();
  return VVQuotient{object, std::move(rows), std::move(cmp), iso};
}

TwoModP two_mod_p(bool p) {
  const FinSet two(2, {"0", "1"}, "2");
  Relation rp{two, BoolMatrix(2, 2)};
  if (p) rp.matrix.set(0, 1);
  const Quotient q = quotient(make_setoid(rst_closure(rp)));
  const FinMap section(q.object, two, q.reps);
  const bool recovered = section(q.proj(0)) == section(q.proj(1));
  return TwoModP{q.object, q.proj, section, recovered};
}

Setoid setoid_from_blocks(const std::vector<Index>& blocks) {
  const FinSet base(blocks.size());
  Relation r{base, BoolMatrix(blocks.size(), blocks.size())};
  for (Index x = 0; x < blocks.size(); ++x)
    for (Index y = 0; y < blocks.size(); ++y)
      if (blocks[x] == blocks[y]) r.matrix.set(x, y);
  return Setoid{base, r};
}

std::vector<Setoid> all_equivalence_relations(std::size_t n) {
  std::vector<Setoid> out;
  std::vector<Index> rgs(n, 0);
  // restricted growth strings: rgs[i] <= 1 + max(rgs[0..i))
  auto rec = [&](auto&& self, Index i, Index max_block) -> void {
    if (i == n) {
      out.push_back(setoid_from_blocks(rgs));
      return;
    }
    const Index limit = i == 0 ? 0 : max_block + 1;
    for (Index b = 0; b <= limit; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(max_block, b));
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace pretopos
