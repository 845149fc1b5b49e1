#include "pretopos/classifiers.hpp"

#include <algorithm>
#include <set>

#include "pretopos/fault.hpp"

namespace pretopos {

namespace {
constexpr const char* kSkeletal = "skeletal model: the universe is replaced by cardinalities 0..N";
}

Omega omega() {
  FinSet o(2, {"false", "true"}, "Ω");
  return Omega{o, FinMap(terminal(), o, {1})};
}

Subobject make_subobject(const FinMap& mono) {
  if (!is_mono(mono)) throw Error(ErrorKind::NotMono, "map is not injective");
  std::vector<Index> hits = mono.table();
  std::sort(hits.begin(), hits.end());
  return Subobject{mono.cod(), mono, std::move(hits)};
}

Subobject subobject_of_subset(const FinSet& ambient, const std::vector<Index>& hits) {
  std::vector<Index> sorted = hits;
  std::sort(sorted.begin(), sorted.end());
  return make_subobject(FinMap(FinSet(sorted.size()), ambient, sorted));
}

FinMap char_of_mono(const Subobject& s) {
  const Omega o = omega();
  std::vector<Index> table(s.ambient.size(), 0);
  for (Index v : s.hits) table[v] = 1;
  return FinMap(s.ambient, o.object, std::move(table));
}

Subobject sub_of_char(const FinMap& chi) {
  if (chi.cod().size() != 2) throw Error(ErrorKind::DomainMismatch, "χ must land in Ω");
  std::vector<Index> hits;
  for (Index b = 0; b < chi.dom().size(); ++b)
    if (chi(b) == 1) hits.push_back(b);
  return subobject_of_subset(chi.dom(), hits);
}

Square classifying_square(const Subobject& s) {
  const Omega o = omega();
  return make_square(bang(s.mono.dom()), o.truth, char_of_mono(s), s.mono);
}

Certificate verify_subobject_classifier(const FinSet& b, std::uint64_t cap) {
  Certificate cert("classifiers.subobject_classifier");
  cert.inputs["B"] = b.size();
  cert.caps["hom_cap"] = cap;
  const Omega o = omega();
  const auto chars = hom_enumerate(b, o.object, cap);
  std::set<std::vector<Index>> classified;
  std::uint64_t subs = 0;
  // subsets by bitmask
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b.size()); ++mask) {
    std::vector<Index> hits;
    for (Index i = 0; i < b.size(); ++i)
      if (mask >> i & 1) hits.push_back(i);
    const Subobject s = subobject_of_subset(b, hits);
    ++subs;
    const FinMap chi = char_of_mono(s);
    classified.insert(chi.table());
    if (!(sub_of_char(chi) == s)) {
      cert.fail("ψ(χ(S)) != S", {{"subset", hits}});
      break;
    }
    const Certificate sq = verify_pullback_square(classifying_square(s));
    if (!sq.passed) {
      cert.fail("classifying square not a pullback", sq.witnesses);
      break;
    }
  }
  for (const auto& chi : chars) {
    if (!(char_of_mono(sub_of_char(chi)) == chi)) {
      cert.fail("χ(ψ(χ)) != χ", to_json(chi));
      break;
    }
  }
  cert.witnesses["subobjects"] = subs;
  cert.witnesses["characteristic_maps"] = chars.size();
  if (subs != chars.size() || classified.size() != chars.size())
    cert.fail("Sub(B) and Hom(B, Ω) differ in size", {{"subobjects", subs}, {"maps", chars.size()}});
  return cert;
}

FinSet pointed_sum(const std::vector<FinSet>& props) {
  std::vector<std::string> decoder;
  for (const auto& p : props)
    for (Index u = 0; u < p.size(); ++u) decoder.push_back("([" + std::to_string(p.size()) + "]," + std::to_string(u) + ")");
  const std::size_t n = decoder.size();
  return FinSet(n, std::move(decoder), "Prop*");
}

Certificate pointed_prop_check() {
  Certificate cert("classifiers.pointed_prop");
  const FinSet sigma = pointed_sum({FinSet(0), FinSet(1)});
  cert.witnesses["size"] = sigma.size();
  if (sigma.size() != 1) cert.fail("Σ P:Prop. P is not a singleton", to_json(sigma));
  else cert.witnesses["element"] = sigma.describe(0);
  return cert;
}

ObjectClassifier object_classifier(std::size_t bound) {
  ObjectClassifier oc;
  oc.bound = bound;
  std::vector<std::string> u_dec, e_dec;
  std::vector<Index> proj;
  for (Index k = 0; k <= bound; ++k) {
    u_dec.push_back("#" + std::to_string(k));
    oc.offset.push_back(proj.size());
    for (Index i = 0; i < k; ++i) {
      proj.push_back(k);
      e_dec.push_back("(" + std::to_string(k) + "," + std::to_string(i) + ")");
    }
  }
  oc.universe = FinSet(bound + 1, std::move(u_dec), "U");
  oc.pointed = FinSet(proj.size(), std::move(e_dec), "E");
  oc.proj = FinMap(oc.pointed, oc.universe, std::move(proj));
  return oc;
}

Classification classify(const FinMap& f, const ObjectClassifier& oc) {
  const auto fib = fibers(f);
  std::vector<Index> chi(f.cod().size());
  std::vector<Index> theta(f.dom().size());
  for (Index b = 0; b < fib.size(); ++b) {
    const std::size_t k = fib[b].size();
    if (k > oc.bound) {
      throw Error(ErrorKind::FiberBoundExceeded, "fiber over " + std::to_string(b) + " has " +
                                                     std::to_string(k) + " elements, bound is " +
                                                     std::to_string(oc.bound));
    }
    chi[b] = k;
    for (Index rank = 0; rank < k; ++rank) {
      Index r = rank;
      if (fault::enabled(fault::Mutation::ClassifierRankOffByOne) && r > 0) --r;
      theta[fib[b][rank]] = oc.index_of(k, r);
    }
  }
  return Classification{FinMap(f.cod(), oc.universe, std::move(chi)),
                        FinMap(f.dom(), oc.pointed, std::move(theta))};
}

Certificate verify_object_classifier_pullback(const FinMap& f, const ObjectClassifier& oc) {
  Certificate cert("classifiers.object_classifier_pullback");
  cert.inputs = {{"f", to_json(f)}, {"bound", oc.bound}};
  cert.witnesses["model"] = kSkeletal;
  const Classification c = classify(f, oc);
  cert.witnesses["chi"] = c.chi.table();
  cert.witnesses["theta"] = c.theta.table();
  const Square sq = make_square(c.theta, oc.proj, c.chi, f);
  if (!sq.commutes()) {
    cert.fail("square does not commute", {{"chi", c.chi.table()}, {"theta", c.theta.table()}});
    return cert;
  }
  const Certificate pb = verify_pullback_square(sq);
  cert.witnesses["comparison"] = pb.witnesses["comparison"];
  cert.witnesses["pullback_size"] = pb.witnesses["pullback_size"];
  if (!pb.passed) cert.fail("not a pullback", pb.witnesses["counterexample"]);
  return cert;
}

SliceObj family_total(const FinMap& family, const ObjectClassifier& oc) {
  if (family.cod().size() != oc.universe.size())
    throw Error(ErrorKind::DomainMismatch, "family must land in U");
  std::vector<Index> proj;
  std::vector<std::string> decoder;
  for (Index b = 0; b < family.dom().size(); ++b) {
    for (Index i = 0; i < family(b); ++i) {
      proj.push_back(b);
      decoder.push_back("(" + std::to_string(b) + "," + std::to_string(i) + ")");
    }
  }
  FinSet total(proj.size(), std::move(decoder));
  return SliceObj{family.dom(), total, FinMap(total, family.dom(), std::move(proj))};
}

Certificate verify_family_equivalence(const FinSet& b, const ObjectClassifier& oc, std::uint64_t cap) {
  Certificate cert("classifiers.family_equivalence");
  cert.inputs = {{"B", b.size()}, {"bound", oc.bound}};
  cert.caps["hom_cap"] = cap;
  cert.witnesses["model"] = kSkeletal;

  // χ(ψ(P)) = P
  std::uint64_t families = 0;
  for_each_table(b.size(), oc.universe.size(), cap, [&](const std::vector<Index>& p) {
    ++families;
    const FinMap family(b, oc.universe, p);
    const SliceObj total = family_total(family, oc);
    const FinMap back = classify(total.proj, oc).chi;
    if (!(back == family)) {
      cert.fail("χ(ψ(P)) != P", {{"family", p}, {"got", back.table()}});
      return false;
    }
    return true;
  });

  // ψ(χ(f)) ≅ f over B for every f : [a] -> B with fibers <= N
  std::uint64_t maps = 0;
  std::set<std::vector<Index>> classes;
  const std::size_t max_dom = oc.bound * b.size();
  for (std::size_t a = 0; a <= max_dom && cert.passed; ++a) {
    const FinSet dom(a);
    for_each_table(a, b.size(), cap, [&](const std::vector<Index>& t) {
      std::vector<std::size_t> count(b.size(), 0);
      for (Index v : t)
        if (++count[v] > oc.bound) return true;
      ++maps;
      std::vector<Index> sorted = t;
      std::sort(sorted.begin(), sorted.end());
      classes.insert(sorted);

      const FinMap f(dom, b, t);
      const SliceObj rebuilt = family_total(classify(f, oc).chi, oc);
      // canonical iso: the r-th element of fib_f(y) goes to (y, r)
      std::vector<Index> start(b.size(), 0);
      for (Index y = 1; y < b.size(); ++y) start[y] = start[y - 1] + count[y - 1];
      std::vector<Index> seen(b.size(), 0);
      std::vector<Index> iso(a);
      for (Index x = 0; x < a; ++x) iso[x] = start[t[x]] + seen[t[x]]++;
      if (rebuilt.total.size() != a) {
        cert.fail("ψ(χ(f)) has the wrong size", {{"f", t}, {"size", rebuilt.total.size()}});
        return false;
      }
      const FinMap m(dom, rebuilt.total, iso);
      if (!is_iso(m) || !(compose(rebuilt.proj, m) == f)) {
        cert.fail("ψ(χ(f)) not isomorphic to f over B", {{"f", t}, {"iso", iso}});
        return false;
      }
      return true;
    });
  }
  cert.witnesses["families"] = families;
  cert.witnesses["maps"] = maps;
  cert.witnesses["iso_classes"] = classes.size();
  if (cert.passed && families != classes.size())
    cert.fail("families and iso-classes differ in number", {{"families", families}, {"iso_classes", classes.size()}});
  return cert;
}

}  // namespace pretopos
