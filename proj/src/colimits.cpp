#include "pretopos/colimits.hpp"

#include <algorithm>

#include "pretopos/fault.hpp"
#include "pretopos/union_find.hpp"

namespace pretopos {

FinSet initial() { return FinSet(0, "0"); }

FinMap from_initial(const FinSet& a) { return FinMap(initial(), a, {}); }

SumObject sum(const FinSet& a, const FinSet& b) {
  std::size_t offset = a.size();
  if (fault::enabled(fault::Mutation::SumOverlap) && !a.empty() && !b.empty()) --offset;
  const std::size_t n = offset + b.size();
  std::vector<std::string> decoder(n);
  std::vector<Index> l(a.size()), r(b.size());
  for (Index i = 0; i < a.size(); ++i) {
    l[i] = i;
    decoder[i] = "inl " + a.describe(i);
  }
  for (Index j = 0; j < b.size(); ++j) {
    r[j] = offset + j;
    decoder[offset + j] = "inr " + b.describe(j);
  }
  FinSet s(n, std::move(decoder));
  return SumObject{s, FinMap(a, s, std::move(l)), FinMap(b, s, std::move(r))};
}

FinMap copair(const SumObject& s, const FinMap& f, const FinMap& g) {
  if (!compatible(f.cod(), g.cod()))
    throw Error(ErrorKind::DomainMismatch, "copairing needs a common codomain");
  std::vector<Index> table(s.object.size(), 0);
  for (Index i = 0; i < f.dom().size(); ++i) table[s.inl(i)] = f(i);
  for (Index j = 0; j < g.dom().size(); ++j) table[s.inr(j)] = g(j);
  return FinMap(s.object, f.cod(), std::move(table));
}

FinMap sum_map(const FinMap& f, const FinMap& g) {
  const SumObject src = sum(f.dom(), g.dom());
  const SumObject dst = sum(f.cod(), g.cod());
  return copair(src, compose(dst.inl, f), compose(dst.inr, g));
}

Certificate verify_sum_disjoint(const SumObject& s) {
  Certificate cert("colimits.sum_disjoint");
  cert.inputs = {{"carrier", s.object.size()}, {"inl", to_json(s.inl)}, {"inr", to_json(s.inr)}};
  if (!is_mono(s.inl)) cert.fail("inl not mono", to_json(s.inl));
  if (!is_mono(s.inr)) cert.fail("inr not mono", to_json(s.inr));
  const Pullback meet = pullback(make_cospan(s.inl, s.inr));
  cert.witnesses["intersection_size"] = meet.object.size();
  if (!meet.object.empty()) {
    cert.fail("injections intersect",
              {{"inl", meet.p1(0)}, {"inr", meet.p2(0)}, {"image", s.inl(meet.p1(0))}});
  }
  std::vector<bool> hit(s.object.size(), false);
  for (Index v : s.inl.table()) hit[v] = true;
  for (Index v : s.inr.table()) hit[v] = true;
  auto miss = std::find(hit.begin(), hit.end(), false);
  if (miss != hit.end())
    cert.fail("injections do not cover", {{"missed", miss - hit.begin()}});
  return cert;
}

Certificate verify_sum_stability(const FinMap& f0, const FinMap& f1, const FinMap& g) {
  Certificate cert("colimits.sum_stability");
  cert.inputs = {{"f0", to_json(f0)}, {"f1", to_json(f1)}, {"g", to_json(g)}};

  const Pullback left0 = pullback(make_cospan(f0, g));
  const Pullback left1 = pullback(make_cospan(f1, g));
  const SumObject lhs = sum(left0.object, left1.object);

  const SumObject a = sum(f0.dom(), f1.dom());
  const FinMap f = copair(a, f0, f1);
  const Pullback rhs = pullback(make_cospan(f, g));
  cert.witnesses["lhs_size"] = lhs.object.size();
  cert.witnesses["rhs_size"] = rhs.object.size();

  // canonical map: inl (a0, x) |-> (inl a0, x), inr (a1, x) |-> (inr a1, x)
  std::vector<Index> table(lhs.object.size(), 0);
  for (Index k = 0; k < left0.object.size(); ++k) {
    Index target = rhs.index_of(a.inl(left0.p1(k)), left0.p2(k));
    if (target == kNoIndex) {
      cert.fail("canonical map undefined", {{"summand", 0}, {"element", lhs.object.describe(lhs.inl(k))}});
      return cert;
    }
    table[lhs.inl(k)] = target;
  }
  for (Index k = 0; k < left1.object.size(); ++k) {
    Index target = rhs.index_of(a.inr(left1.p1(k)), left1.p2(k));
    if (target == kNoIndex) {
      cert.fail("canonical map undefined", {{"summand", 1}, {"element", lhs.object.describe(lhs.inr(k))}});
      return cert;
    }
    table[lhs.inr(k)] = target;
  }
  const FinMap canonical(lhs.object, rhs.object, table);
  cert.witnesses["canonical"] = to_json(canonical);

  // over X: the second projections agree
  const FinMap lhs_to_x = copair(lhs, left0.p2, left1.p2);
  if (!(compose(rhs.p2, canonical) == lhs_to_x))
    cert.fail("canonical map not over X", to_json(canonical));
  if (!is_iso(canonical)) {
    auto fib = fibers(canonical);
    for (Index k = 0; k < fib.size(); ++k) {
      if (fib[k].size() != 1) {
        cert.fail("canonical map not bijective",
                  {{"rhs_element", rhs.object.describe(k)}, {"preimages", fib[k].size()}});
        break;
      }
    }
    if (fib.size() != canonical.dom().size() && cert.passed)
      cert.fail("canonical map not bijective", {{"lhs_size", lhs.object.size()}, {"rhs_size", rhs.object.size()}});
  }
  return cert;
}

CoeqObject coequalizer(const FinMap& f, const FinMap& g) {
  if (!compatible(f.dom(), g.dom()) || !compatible(f.cod(), g.cod()))
    throw Error(ErrorKind::ParallelMismatch, "coequalizer needs a parallel pair");
  const FinSet& b = f.cod();
  UnionFind uf(b.size());
  std::size_t last = f.dom().size();
  if (fault::enabled(fault::Mutation::CoequalizerSkipUnion)) {
    for (Index a = 0; a < f.dom().size(); ++a)
      if (f(a) != g(a)) last = a;
  }
  for (Index a = 0; a < f.dom().size(); ++a) {
    if (a == last) continue;
    uf.unite(f(a), g(a));
  }
  std::vector<Index> label = uf.labels();
  std::vector<Index> reps;
  for (Index x = 0; x < b.size(); ++x)
    if (label[x] == reps.size()) reps.push_back(x);
  std::vector<std::string> decoder;
  decoder.reserve(reps.size());
  for (Index r : reps) decoder.push_back("[" + b.describe(r) + "]");
  FinSet q(reps.size(), std::move(decoder));
  return CoeqObject{q, FinMap(b, q, std::move(label)), std::move(reps)};
}

Certificate verify_coeq_universal(const FinMap& f, const FinMap& g, const CoeqObject& q,
                                  std::size_t max_codomain, std::uint64_t cap) {
  Certificate cert("colimits.coequalizer_universal");
  cert.inputs = {{"f", to_json(f)}, {"g", to_json(g)}, {"proj", to_json(q.proj)}};
  cert.caps = {{"hom_cap", cap}, {"max_codomain", max_codomain}};
  const std::size_t b = f.cod().size();
  const std::size_t n = q.object.size();
  for (std::size_t c = 0; c <= max_codomain; ++c) {
    require_hom_within(b, c, cap);
    require_hom_within(n, c, cap);
  }

  for (Index a = 0; a < f.dom().size(); ++a) {
    if (q.proj(f(a)) != q.proj(g(a))) {
      cert.fail("proj does not coequalize", {{"a", a}, {"f(a)", f(a)}, {"g(a)", g(a)}});
      return cert;
    }
  }

  std::uint64_t cocones = 0;
  for (std::size_t c = 0; c <= max_codomain && cert.passed; ++c) {
    std::vector<std::vector<Index>> mediators;
    for_each_table(n, c, cap, [&](const std::vector<Index>& k) {
      mediators.push_back(k);
      return true;
    });
    for_each_table(b, c, cap, [&](const std::vector<Index>& h) {
      for (Index a = 0; a < f.dom().size(); ++a)
        if (h[f(a)] != h[g(a)]) return true;
      ++cocones;
      std::vector<std::vector<Index>> found;
      for (const auto& k : mediators) {
        bool ok = true;
        for (Index x = 0; x < b && ok; ++x) ok = k[q.proj(x)] == h[x];
        if (ok) found.push_back(k);
      }
      if (found.size() != 1) {
        cert.fail(found.empty() ? "no mediating map" : "mediating map not unique",
                  {{"codomain", c}, {"h", h}, {"mediators", found}});
        return false;
      }
      return true;
    });
  }
  cert.witnesses["cocones_checked"] = cocones;
  return cert;
}

Pushout pushout(const FinMap& f, const FinMap& g) {
  if (!compatible(f.dom(), g.dom()))
    throw Error(ErrorKind::DomainMismatch, "pushout legs need a common domain");
  const SumObject s = sum(f.cod(), g.cod());
  const CoeqObject q = coequalizer(compose(s.inl, f), compose(s.inr, g));
  return Pushout{q.object, compose(q.proj, s.inl), compose(q.proj, s.inr)};
}

MappingCone mapping_cone(const FinMap& f) {
  Pushout p = pushout(bang(f.dom()), f);
  const std::size_t n = p.object.size();
  return MappingCone{std::move(p.object), n};
}

FinSet prop_truncate(const FinSet& a) {
  if (a.empty()) return FinSet(0, "||" + a.name() + "||");
  return FinSet(1, {"|*|"}, "||" + a.name() + "||");
}

FinMap truncation_map(const FinSet& a) {
  return FinMap(a, prop_truncate(a), std::vector<Index>(a.size(), 0));
}

Certificate verify_trunc_universal(const FinSet& a, std::uint64_t cap) {
  Certificate cert("colimits.truncation_universal");
  cert.inputs["size"] = a.size();
  cert.caps["hom_cap"] = cap;
  const FinMap t = truncation_map(a);
  for (std::size_t p = 0; p <= 1; ++p) {
    const FinSet target(p);
    const auto from_trunc = hom_enumerate(t.cod(), target, cap);
    const auto from_a = hom_enumerate(a, target, cap);
    std::vector<int> hits(from_a.size(), 0);
    for (const auto& k : from_trunc) {
      const FinMap pre = compose(k, t);
      auto it = std::find(from_a.begin(), from_a.end(), pre);
      ++hits[it - from_a.begin()];
    }
    for (Index i = 0; i < from_a.size(); ++i) {
      if (hits[i] != 1) {
        cert.fail("precomposition not bijective",
                  {{"prop_size", p}, {"map", to_json(from_a[i])}, {"factorizations", hits[i]}});
        return cert;
      }
    }
  }
  return cert;
}

ImageFactorization image_factorization(const FinMap& f) {
  std::vector<Index> position(f.cod().size(), kNoIndex);
  for (Index v : f.table()) position[v] = 0;
  std::vector<Index> hits;
  std::vector<std::string> decoder;
  for (Index b = 0; b < position.size(); ++b) {
    if (position[b] == kNoIndex) continue;
    position[b] = hits.size();
    hits.push_back(b);
    decoder.push_back(f.cod().describe(b));
  }
  FinSet im(hits.size(), std::move(decoder));
  std::vector<Index> surj(f.dom().size());
  for (Index a = 0; a < surj.size(); ++a) surj[a] = position[f(a)];
  return ImageFactorization{im, FinMap(f.dom(), im, std::move(surj)), FinMap(im, f.cod(), std::move(hits))};
}

Certificate is_cover(const FinMap& f, std::uint64_t cap) {
  Certificate cert("colimits.cover");
  cert.inputs["f"] = to_json(f);
  cert.caps["hom_cap"] = cap;
  const std::size_t b = f.cod().size();
  std::vector<bool> hit(b, false);
  for (Index v : f.table()) hit[v] = true;

  std::uint64_t monos = 0;
  bool brute_cover = true;
  for (std::size_t m = 0; m <= b && brute_cover; ++m) {
    for_each_table(m, b, cap, [&](const std::vector<Index>& t) {
      std::vector<bool> in_image(b, false);
      for (Index v : t) {
        if (in_image[v]) return true;  // not injective
        in_image[v] = true;
      }
      for (Index y = 0; y < b; ++y)
        if (hit[y] && !in_image[y]) return true;  // f does not factor
      ++monos;
      if (m != b) {
        brute_cover = false;
        cert.fail("non-iso mono through which f factors", {{"mono", t}, {"dom", m}, {"cod", b}});
        return false;
      }
      return true;
    });
  }
  const bool image_cover = is_iso(image_factorization(f).inj).has_value();
  cert.witnesses["factoring_monos"] = monos;
  cert.witnesses["cover"] = brute_cover;
  cert.witnesses["image_route_cover"] = image_cover;
  cert.witnesses["routes_agree"] = brute_cover == image_cover;
  return cert;
}

Certificate is_regular_epi(const FinMap& f) {
  Certificate cert("colimits.regular_epi");
  cert.inputs["f"] = to_json(f);
  const Pullback k = kernel_pair(f);
  const CoeqObject q = coequalizer(k.p1, k.p2);
  std::vector<Index> table(q.object.size());
  for (Index c = 0; c < table.size(); ++c) table[c] = f(q.class_reps[c]);
  const FinMap cmp(q.object, f.cod(), table);
  cert.witnesses["comparison"] = to_json(cmp);
  if (!(compose(cmp, q.proj) == f)) {
    cert.fail("comparison does not factor f", to_json(cmp));
    return cert;
  }
  auto fib = fibers(cmp);
  for (Index y = 0; y < fib.size(); ++y) {
    if (fib[y].empty()) {
      cert.fail("comparison not surjective", {{"missed", y}});
      break;
    }
    if (fib[y].size() > 1) {
      cert.fail("comparison not injective", {{"classes", fib[y]}, {"image", y}});
      break;
    }
  }
  return cert;
}

Certificate verify_surj_is_regular_epi(const FinMap& f, std::uint64_t cap) {
  Certificate cert("colimits.surjection_regular_epi");
  cert.inputs["f"] = to_json(f);
  cert.caps["hom_cap"] = cap;
  if (!is_surjective(f)) {
    cert.witnesses["applicable"] = false;
    return cert;
  }
  cert.witnesses["applicable"] = true;
  const Certificate regular = is_regular_epi(f);
  if (!regular.passed) cert.fail("not a regular epi", regular.witnesses);
  const Pullback k = kernel_pair(f);
  const Certificate universal =
      verify_coeq_universal(k.p1, k.p2, coequalizer(k.p1, k.p2), 3, cap);
  if (!universal.passed) cert.fail("kernel pair coequalizer", universal.witnesses);
  cert.witnesses["cocones_checked"] = universal.witnesses.value("cocones_checked", 0);
  return cert;
}

Certificate verify_pullback_of_surjection(const Cospan& c) {
  if (!is_surjective(c.f))
    throw Error(ErrorKind::NotSurjective, "the first cospan leg must be surjective");
  Certificate cert("colimits.pullback_of_surjection");
  cert.inputs = {{"surjection", to_json(c.f)}, {"along", to_json(c.g)}};
  const Pullback p = pullback(c);
  cert.witnesses["pulled_back"] = to_json(p.p2);
  if (!is_surjective(p.p2)) {
    auto fib = fibers(p.p2);
    auto miss = std::find_if(fib.begin(), fib.end(), [](const auto& v) { return v.empty(); });
    cert.fail("pulled-back leg not surjective", {{"missed", miss - fib.begin()}});
    return cert;
  }
  const auto top = fibers(p.p2);
  for (Index y = 0; y < top.size(); ++y) {
    // fib(p2)(y) -> fib(f)(g y) via p1 must be a bijection
    const auto target = fiber(c.f, c.g(y));
    std::vector<Index> image;
    for (Index e : top[y]) image.push_back(p.p1(e));
    std::sort(image.begin(), image.end());
    if (image != target) {
      cert.fail("fiber mismatch", {{"element", y}, {"pulled_back_fiber", image}, {"fiber", target}});
      break;
    }
  }
  return cert;
}

FinMap unique_choice(const FinSet& a, const FinSet& b, const BoolMatrix& r) {
  if (r.rows() != a.size() || r.cols() != b.size())
    throw Error(ErrorKind::LengthMismatch, "relation shape does not match A x B");
  std::vector<Index> table(a.size());
  for (Index i = 0; i < a.size(); ++i) {
    std::size_t count = 0;
    for (Index j = 0; j < b.size(); ++j) {
      if (r.at(i, j)) {
        table[i] = j;
        ++count;
      }
    }
    if (count == 0) throw Error(ErrorKind::NotTotal, "row " + std::to_string(i) + " is empty");
    if (count > 1)
      throw Error(ErrorKind::NotUnique, "row " + std::to_string(i) + " has " +
                                            std::to_string(count) + " entries");
  }
  return FinMap(a, b, std::move(table));
}

Certificate verify_epi_surjective_cone_equivalence(const FinMap& f, std::uint64_t cap) {
  Certificate cert("colimits.epi_surjective_cone");
  cert.inputs["f"] = to_json(f);
  cert.caps["hom_cap"] = cap;
  const Certificate brute = is_epi_bruteforce(f, cap);
  const MappingCone cone = mapping_cone(f);
  const bool epi = brute.passed;
  const bool one_component = cone.components == 1;
  const bool surjective = is_surjective(f);
  cert.witnesses = {{"epi", epi}, {"cone_components", cone.components}, {"surjective", surjective}};
  if (!epi) cert.witnesses["separating_pair"] = brute.witnesses["counterexample"];
  if (epi != one_component || epi != surjective) {
    cert.fail("characterizations disagree",
              {{"epi", epi}, {"cone_components", cone.components}, {"surjective", surjective}});
  }
  return cert;
}

}  // namespace pretopos
