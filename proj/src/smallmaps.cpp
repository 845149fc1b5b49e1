#include "pretopos/smallmaps.hpp"

#include <algorithm>

#include "pretopos/colimits.hpp"

namespace pretopos {

namespace {

Json square_json(const Square& s) {
  return {{"top", to_json(s.top)}, {"right", to_json(s.right)},
          {"bottom", to_json(s.bottom)}, {"left", to_json(s.left)}};
}

/// Every map between carriers of size <= max_size.
template <class Visit>
void for_each_small_map(std::size_t max_size, std::uint64_t cap, Visit&& visit) {
  for (std::size_t a = 0; a <= max_size; ++a) {
    const FinSet dom(a);
    for (std::size_t b = 0; b <= max_size; ++b) {
      const FinSet cod(b);
      for_each_table(a, b, cap, [&](const std::vector<Index>& t) {
        visit(FinMap(dom, cod, t));
        return true;
      });
    }
  }
}

}  // namespace

MapClass fiber_bound_class(std::size_t k) {
  return MapClass{"fibers<=" + std::to_string(k), [k](const FinMap& f) {
                    std::vector<std::size_t> count(f.cod().size(), 0);
                    for (Index v : f.table())
                      if (++count[v] > k) return false;
                    return true;
                  }};
}

Certificate verify_stable(const MapClass& s, std::size_t max_size, std::uint64_t cap) {
  Certificate cert("smallmaps.stable");
  cert.inputs = {{"class", s.name}, {"max_size", max_size}};
  cert.caps["hom_cap"] = cap;
  std::uint64_t squares = 0, stability_failures = 0, descent_failures = 0;

  for (std::size_t b = 0; b <= max_size; ++b) {
    const FinSet base(b);
    for (std::size_t a = 0; a <= max_size; ++a) {
      const FinSet top(a);
      for_each_table(a, b, cap, [&](const std::vector<Index>& ft) {
        const FinMap f(top, base, ft);
        const bool small_f = s(f);
        for (std::size_t y = 0; y <= max_size; ++y) {
          const FinSet bottom(y);
          for_each_table(y, b, cap, [&](const std::vector<Index>& ht) {
            const FinMap h(bottom, base, ht);
            const Pullback p = pullback(make_cospan(f, h));
            const FinMap& g = p.p2;
            const bool small_g = s(g);
            ++squares;
            if (small_f && !small_g) {
              ++stability_failures;
              cert.fail("pullback stability", {{"f", to_json(f)}, {"h", to_json(h)}, {"g", to_json(g)}});
            }
            if (is_surjective(h) && small_g && !small_f) {
              ++descent_failures;
              cert.fail("descent", {{"f", to_json(f)}, {"h", to_json(h)}, {"g", to_json(g)}});
            }
            return true;
          });
        }
        return true;
      });
    }
  }

  std::vector<FinMap> maps;
  for_each_small_map(max_size, cap, [&](FinMap f) { maps.push_back(std::move(f)); });
  std::uint64_t sums = 0, sum_failures = 0;
  for (const auto& f : maps) {
    if (!s(f)) continue;
    for (const auto& g : maps) {
      if (!s(g)) continue;
      ++sums;
      const FinMap fg = sum_map(f, g);
      if (!s(fg)) {
        ++sum_failures;
        cert.fail("sum", {{"f", to_json(f)}, {"g", to_json(g)}});
      }
    }
  }
  cert.witnesses["pullback_stability"] = {{"squares", squares}, {"failures", stability_failures}};
  cert.witnesses["descent"] = {{"squares", squares}, {"failures", descent_failures}};
  cert.witnesses["sum"] = {{"pairs", sums}, {"failures", sum_failures}};
  return cert;
}

Certificate verify_locally_full(const MapClass& s, std::size_t max_size, std::uint64_t cap) {
  Certificate cert("smallmaps.locally_full");
  cert.inputs = {{"class", s.name}, {"max_size", max_size}};
  cert.caps["hom_cap"] = cap;
  std::uint64_t pairs = 0;
  for (std::size_t y = 0; y <= max_size; ++y) {
    const FinSet mid(y);
    for (std::size_t z = 0; z <= max_size; ++z) {
      const FinSet last(z);
      for_each_table(y, z, cap, [&](const std::vector<Index>& ft) {
        const FinMap f(mid, last, ft);
        if (!s(f)) return true;
        for (std::size_t x = 0; x <= max_size; ++x) {
          const FinSet first(x);
          for_each_table(x, y, cap, [&](const std::vector<Index>& gt) {
            const FinMap g(first, mid, gt);
            const FinMap fg = compose(f, g);
            ++pairs;
            const bool small_g = s(g);
            const bool small_fg = s(fg);
            if (small_g != small_fg) {
              cert.fail(small_g ? "small g but f∘g not small" : "small f∘g but g not small",
                        {{"g", to_json(g)}, {"f", to_json(f)}, {"f∘g", to_json(fg)}});
            }
            return true;
          });
        }
        return true;
      });
    }
  }
  cert.witnesses["pairs"] = pairs;
  return cert;
}

Certificate is_quasi_pullback(const Square& s) {
  Certificate cert("smallmaps.quasi_pullback");
  cert.inputs = square_json(s);
  const Pullback p = pullback(make_cospan(s.bottom, s.right));
  const FinMap cmp = pullback_comparison(s, p);
  cert.witnesses["comparison"] = to_json(cmp);
  const auto fib = fibers(cmp);
  for (Index k = 0; k < fib.size(); ++k) {
    if (fib[k].empty()) {
      cert.fail("comparison misses a pullback element",
                {{"pair", Json::array({p.p1(k), p.p2(k)})}});
      break;
    }
  }
  return cert;
}

Certificate is_covering_square(const Square& s) {
  Certificate cert = is_quasi_pullback(s);
  cert.kind = "smallmaps.covering_square";
  if (!is_surjective(s.bottom)) {
    const auto fib = fibers(s.bottom);
    auto miss = std::find_if(fib.begin(), fib.end(), [](const auto& v) { return v.empty(); });
    cert.fail("bottom map not surjective", {{"missed", miss - fib.begin()}});
  }
  return cert;
}

CoveringSquare make_covering_square(const Square& s) {
  if (!s.commutes()) throw Error(ErrorKind::NonCommuting, "right∘top != bottom∘left");
  const Certificate c = is_covering_square(s);
  if (!c.passed) throw Error(ErrorKind::NotSurjective, c.witnesses["counterexample"].dump());
  return CoveringSquare{s};
}

Certificate is_collection_square(const CoveringSquare& cs, std::size_t e_bound, std::uint64_t cap) {
  const Square& s = cs.square;
  const FinMap& q = s.top;
  const FinMap& f = s.right;
  const FinMap& p = s.bottom;
  const FinMap& g = s.left;
  Certificate cert("smallmaps.collection_square");
  cert.inputs = square_json(s);
  cert.caps = {{"hom_cap", cap}, {"e_bound", e_bound}};
  cert.witnesses["finite_model_note"] = "every finite surjection splits, so multiple choice holds here";

  const auto fib_f = fibers(f);
  const auto fib_p = fibers(p);
  const auto fib_g = fibers(g);
  std::uint64_t cases = 0, searched = 0, split = 0;

  for (Index a = 0; a < f.cod().size() && cert.passed; ++a) {
    const auto& target = fib_f[a];
    for (std::size_t n = 0; n <= e_bound && cert.passed; ++n) {
      for_each_table(n, target.size(), cap, [&](const std::vector<Index>& e) {
        // only surjections E ->> fib_f(a); e holds positions in target
        std::vector<bool> hit(target.size(), false);
        for (Index v : e) hit[v] = true;
        if (std::find(hit.begin(), hit.end(), false) != hit.end()) return true;
        ++cases;
        // section of e: least preimage of each position
        std::vector<Index> section(target.size());
        for (Index i = n; i-- > 0;) section[e[i]] = i;

        bool found_search = false;
        bool found_split = false;
        for (Index c : fib_p[a]) {
          const auto& dom = fib_g[c];
          std::vector<Index> qc(dom.size());  // positions of q(d) in fib_f(a)
          for (Index i = 0; i < dom.size(); ++i)
            qc[i] = std::lower_bound(target.begin(), target.end(), q(dom[i])) - target.begin();
          if (!found_search) {
            for_each_table(dom.size(), n, cap, [&](const std::vector<Index>& t) {
              for (Index i = 0; i < dom.size(); ++i)
                if (e[t[i]] != qc[i]) return true;
              found_search = true;
              return false;
            });
          }
          if (!found_split) {
            bool ok = true;
            for (Index i = 0; i < dom.size() && ok; ++i) ok = e[section[qc[i]]] == qc[i];
            found_split = ok;
          }
          if (found_search && found_split) break;
        }
        searched += found_search;
        split += found_split;
        if (!found_search || !found_split) {
          cert.fail("no lift through any c over a",
                    {{"a", a}, {"E", n}, {"e", e}, {"search", found_search}, {"split", found_split}});
          return false;
        }
        return true;
      });
    }
  }
  cert.witnesses["cases"] = cases;
  cert.witnesses["lifted_by_search"] = searched;
  cert.witnesses["lifted_by_splitting"] = split;
  return cert;
}

CollectionWitness collection_axiom_witness(const MapClass& s, const FinMap& f, const FinMap& p) {
  if (!is_surjective(p)) throw Error(ErrorKind::NotSurjective, "p must be surjective");
  if (!compatible(p.cod(), f.dom()))
    throw Error(ErrorKind::DomainMismatch, "p must cover the domain of f");
  // choose a section of p; B := A with B -> C the section
  std::vector<Index> section(p.cod().size());
  for (Index c = p.dom().size(); c-- > 0;) section[p(c)] = c;
  const FinMap lift(f.dom(), p.dom(), section);
  const Square sq = make_square(compose(p, lift), f, identity(f.cod()), f);

  Certificate cert("smallmaps.collection_axiom");
  cert.inputs = {{"f", to_json(f)}, {"p", to_json(p)}, {"class", s.name}};
  cert.witnesses["square"] = square_json(sq);
  cert.witnesses["lift"] = to_json(lift);
  if (!s(f)) cert.fail("f is not in the class", to_json(f));
  const Certificate quasi = is_quasi_pullback(sq);
  if (!quasi.passed) cert.fail("not a quasi-pullback", quasi.witnesses["counterexample"]);
  if (!s(sq.left)) cert.fail("left map not in the class", to_json(sq.left));
  if (!is_surjective(sq.bottom)) cert.fail("bottom map not surjective", to_json(sq.bottom));
  return CollectionWitness{sq, lift, std::move(cert)};
}

AmcWitness amc_witness(const FinMap& f, std::size_t e_bound, std::uint64_t cap) {
  const CoveringSquare cs =
      make_covering_square(make_square(identity(f.dom()), f, identity(f.cod()), f));
  Certificate cert = is_collection_square(cs, e_bound, cap);
  cert.kind = "smallmaps.amc";
  return AmcWitness{cs, std::move(cert)};
}

void for_each_covering_square(std::size_t max_size, std::uint64_t cap,
                              const std::function<bool(const CoveringSquare&)>& visit) {
  bool go = true;
  for (std::size_t a = 0; a <= max_size && go; ++a) {
    const FinSet base(a);
    for (std::size_t b = 0; b <= max_size && go; ++b) {
      const FinSet right_top(b);
      for_each_table(b, a, cap, [&](const std::vector<Index>& ft) {
        const FinMap f(right_top, base, ft);
        for (std::size_t c = 0; c <= max_size && go; ++c) {
          const FinSet left_bottom(c);
          for_each_table(c, a, cap, [&](const std::vector<Index>& pt) {
            const FinMap p(left_bottom, base, pt);
            if (!is_surjective(p)) return true;
            const Pullback pb = pullback(make_cospan(p, f));
            // corners D with a surjection onto the pullback
            for (std::size_t d = pb.object.size(); d <= max_size && go; ++d) {
              const FinSet corner(d);
              for_each_table(d, pb.object.size(), cap, [&](const std::vector<Index>& u) {
                const FinMap onto(corner, pb.object, u);
                if (!is_surjective(onto)) return true;
                const Square sq = make_square(compose(pb.p2, onto), f, p, compose(pb.p1, onto));
                go = visit(CoveringSquare{sq});
                return go;
              });
            }
            return go;
          });
        }
        return go;
      });
    }
  }
}

}  // namespace pretopos
