#include <doctest.h>

#include "oracles.hpp"
#include "pretopos/colimits.hpp"
#include "pretopos/limits.hpp"

using namespace pretopos;

TEST_CASE("initial object") {
  CHECK(initial().size() == 0);
  CHECK(from_initial(FinSet(3)).table().empty());
  CHECK(from_initial(FinSet(0)) == identity(FinSet(0)));
}

TEST_CASE("sums") {
  const SumObject s = sum(FinSet(2), FinSet(3));
  CHECK(s.object.size() == 5);
  CHECK(s.inr.table() == std::vector<Index>{2, 3, 4});
  CHECK(s.object.describe(0) == "inl 0");
  CHECK(s.object.describe(2) == "inr 0");
  const SumObject e = sum(FinSet(0), FinSet(2));
  CHECK(is_iso(e.inr).has_value());
  CHECK(verify_sum_disjoint(s).passed);
  CHECK(verify_sum_disjoint(sum(FinSet(0), FinSet(0))).passed);

  // both injections the identity on [1]
  const SumObject fake{FinSet(1), identity(FinSet(1)), identity(FinSet(1))};
  const Certificate c = verify_sum_disjoint(fake);
  CHECK_FALSE(c.passed);
  CHECK(c.witnesses["intersection_size"] == 1);
}

TEST_CASE("copairing and sums of maps") {
  const SumObject s = sum(FinSet(2), FinSet(1));
  const FinMap u = mk_map(FinSet(2), FinSet(2), {1, 0});
  const FinMap v = mk_map(FinSet(1), FinSet(2), {1});
  const FinMap k = copair(s, u, v);
  CHECK(k.table() == std::vector<Index>{1, 0, 1});
  const FinMap fg = sum_map(u, v);
  CHECK(fg.cod().size() == 4);
  CHECK(fg.table() == std::vector<Index>{1, 0, 3});
}

TEST_CASE("sums are stable under pullback") {
  // over [1] this is distributivity
  for (std::size_t a0 = 0; a0 <= 3; ++a0)
    for (std::size_t a1 = 0; a1 <= 3; ++a1)
      for (std::size_t x = 0; x <= 3; ++x) {
        const Certificate c = verify_sum_stability(bang(FinSet(a0)), bang(FinSet(a1)), bang(FinSet(x)));
        REQUIRE(c.passed);
        REQUIRE(c.witnesses["lhs_size"] == a0 * x + a1 * x);
      }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<std::size_t> size(0, 3);
    const std::size_t b = size(rng) + 1;
    const FinMap f0 = oracle::random_map(rng, size(rng), b);
    const FinMap f1 = oracle::random_map(rng, size(rng), b);
    const FinMap g = oracle::random_map(rng, size(rng), b);
    const Certificate c = verify_sum_stability(f0, f1, g);
    REQUIRE(c.passed);
    REQUIRE(c.witnesses["rhs_size"] ==
            oracle::pullback_pairs(f0, g).size() + oracle::pullback_pairs(f1, g).size());
  }
  CHECK(verify_sum_stability(bang(FinSet(2)), bang(FinSet(1)), bang(FinSet(0))).witnesses["lhs_size"] == 0);
}

TEST_CASE("coequalizers") {
  const FinMap f = mk_map(FinSet(1), FinSet(2), {0});
  const FinMap g = mk_map(FinSet(1), FinSet(2), {1});
  CHECK(coequalizer(f, g).object.size() == 1);
  const FinMap f2 = mk_map(FinSet(2), FinSet(3), {0, 1});
  const FinMap g2 = mk_map(FinSet(2), FinSet(3), {1, 2});
  CHECK(coequalizer(f2, g2).object.size() == 1);
  const CoeqObject same = coequalizer(f2, f2);
  CHECK(same.proj == identity(FinSet(3)));
  CHECK(same.class_reps == std::vector<Index>{0, 1, 2});
  try {
    coequalizer(f, f2);
    FAIL("expected ParallelMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParallelMismatch);
  }
}

TEST_CASE("coequalizers match the naive closure for all pairs from size <= 3") {
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (const auto& f : oracle::maps(a, b))
        for (const auto& g : oracle::maps(a, b)) {
          std::vector<std::pair<Index, Index>> pairs;
          for (Index i = 0; i < a; ++i) pairs.emplace_back(f(i), g(i));
          const auto label = oracle::closure_labels(b, pairs);
          const CoeqObject q = coequalizer(f, g);
          REQUIRE(q.object.size() == oracle::count_classes(label));
          REQUIRE(oracle::surjective(q.proj));
          for (Index x = 0; x < b; ++x) {
            REQUIRE(q.class_reps[q.proj(x)] == label[x]);
            for (Index y = 0; y < b; ++y) REQUIRE((q.proj(x) == q.proj(y)) == (label[x] == label[y]));
          }
          REQUIRE(verify_coeq_universal(f, g, q).passed);
        }
}

TEST_CASE("a candidate that is not surjective fails the universal property") {
  const FinMap one = identity(FinSet(1));
  const FinSet two(2);
  const CoeqObject fake{two, mk_map(FinSet(1), two, {0}), {0, 0}};
  const Certificate c = verify_coeq_universal(one, one, fake);
  CHECK_FALSE(c.passed);
  CHECK(c.witnesses["counterexample"]["check"] == "mediating map not unique");
}

TEST_CASE("pushouts and mapping cones") {
  const Pushout p = pushout(from_initial(FinSet(2)), from_initial(FinSet(3)));
  CHECK(p.object.size() == 5);
  CHECK(pushout(bang(FinSet(2)), bang(FinSet(2))).object.size() == 1);
  try {
    pushout(bang(FinSet(2)), bang(FinSet(3)));
    FAIL("expected DomainMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainMismatch);
  }
  CHECK(mapping_cone(identity(FinSet(2))).components == 1);
  CHECK(mapping_cone(mk_map(FinSet(1), FinSet(2), {0})).components == 2);
  CHECK(mapping_cone(from_initial(FinSet(3))).components == 4);
  for (const auto& f : oracle::maps(3, 3)) {
    std::set<Index> image(f.table().begin(), f.table().end());
    const std::size_t expected = f.dom().empty() ? 4 : 1 + (3 - image.size());
    REQUIRE(mapping_cone(f).components == expected);
  }
}

TEST_CASE("propositional truncation") {
  CHECK(prop_truncate(FinSet(0)).size() == 0);
  CHECK(prop_truncate(FinSet(5)).size() == 1);
  for (std::size_t a = 0; a <= 4; ++a) CHECK(verify_trunc_universal(FinSet(a)).passed);
}

TEST_CASE("image factorization") {
  const FinMap f = mk_map(FinSet(3), FinSet(3), {0, 0, 1});
  const ImageFactorization im = image_factorization(f);
  CHECK(im.image.size() == 2);
  CHECK(compose(im.inj, im.surj) == f);
  CHECK(is_iso(image_factorization(mk_map(FinSet(2), FinSet(3), {2, 0})).surj).has_value());
}

TEST_CASE("image factorizations are unique up to a unique iso") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (const auto& f : oracle::maps(a, b)) {
        const ImageFactorization im = image_factorization(f);
        REQUIRE(im.image.size() == std::set<Index>(f.table().begin(), f.table().end()).size());
        const std::size_t n = im.image.size();
        for (const auto& e : oracle::maps(a, n)) {
          if (!oracle::surjective(e)) continue;
          for (const auto& m : oracle::maps(n, b)) {
            if (!oracle::injective(m) || !(compose(m, e) == f)) continue;
            std::size_t links = 0;
            for (const auto& phi : oracle::maps(n, n))
              links += compose(phi, im.surj) == e && compose(m, phi) == im.inj && is_iso(phi).has_value();
            REQUIRE(links == 1);
          }
        }
      }
}

TEST_CASE("covers, regular epis and surjections coincide for sizes <= 4") {
  const FinMap s = mk_map(FinSet(3), FinSet(2), {0, 1, 0});
  CHECK(is_cover(s).passed);
  CHECK(is_regular_epi(s).passed);
  const FinMap m = mk_map(FinSet(1), FinSet(2), {1});
  CHECK_FALSE(is_cover(m).passed);
  CHECK_FALSE(is_regular_epi(m).passed);
  CHECK(is_cover(identity(FinSet(3))).passed);
  CHECK(is_regular_epi(identity(FinSet(3))).passed);
  for (std::size_t a = 0; a <= 4; ++a)
    for (std::size_t b = 0; b <= 4; ++b)
      for (const auto& f : oracle::maps(a, b)) {
        const bool surj = oracle::surjective(f);
        const Certificate cover = is_cover(f);
        REQUIRE(cover.passed == surj);
        REQUIRE(cover.witnesses["routes_agree"] == true);
        REQUIRE(is_regular_epi(f).passed == surj);
        const Certificate reg = verify_surj_is_regular_epi(f);
        REQUIRE(reg.passed);
        REQUIRE(reg.witnesses["applicable"] == surj);
      }
}

TEST_CASE("pullbacks of surjections") {
  const FinMap g = mk_map(FinSet(3), FinSet(2), {0, 1, 1});
  const FinMap h = mk_map(FinSet(2), FinSet(2), {1, 1});
  CHECK(verify_pullback_of_surjection(make_cospan(g, h)).passed);
  const Pullback p = pullback(identity(FinSet(3)), mk_map(FinSet(2), FinSet(3), {2, 0}));
  CHECK(is_iso(p.p2).has_value());
  try {
    verify_pullback_of_surjection(make_cospan(mk_map(FinSet(1), FinSet(2), {0}), h));
    FAIL("expected NotSurjective");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSurjective);
  }
  for (std::size_t x = 0; x <= 3; ++x)
    for (std::size_t a = 0; a <= 3; ++a)
      for (const auto& s : oracle::maps(a, x)) {
        if (!oracle::surjective(s)) continue;
        for (std::size_t y = 0; y <= 3; ++y)
          for (const auto& k : oracle::maps(y, x)) REQUIRE(verify_pullback_of_surjection(make_cospan(s, k)).passed);
      }
}

TEST_CASE("unique choice") {
  BoolMatrix graph(3, 2);
  graph.set(0, 1);
  graph.set(1, 0);
  graph.set(2, 1);
  CHECK(unique_choice(FinSet(3), FinSet(2), graph).table() == std::vector<Index>{1, 0, 1});
  graph.set(1, 1);
  try {
    unique_choice(FinSet(3), FinSet(2), graph);
    FAIL("expected NotUnique");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotUnique);
    CHECK(std::string(e.what()).find("row 1") != std::string::npos);
  }
  BoolMatrix empty_row(2, 2);
  empty_row.set(0, 0);
  try {
    unique_choice(FinSet(2), FinSet(2), empty_row);
    FAIL("expected NotTotal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTotal);
  }
  CHECK(unique_choice(FinSet(0), FinSet(2), BoolMatrix(0, 2)).table().empty());
}

TEST_CASE("epi, surjective and connected cone") {
  const Certificate c = verify_epi_surjective_cone_equivalence(mk_map(FinSet(1), FinSet(2), {0}));
  CHECK(c.passed);
  CHECK(c.witnesses["epi"] == false);
  CHECK(c.witnesses["surjective"] == false);
  CHECK(c.witnesses["cone_components"] == 2);
  const Certificate id = verify_epi_surjective_cone_equivalence(identity(FinSet(2)));
  CHECK(id.witnesses["epi"] == true);
  CHECK(id.witnesses["cone_components"] == 1);
  for (std::size_t a = 0; a <= 4; ++a)
    for (std::size_t b = 0; b <= 4; ++b)
      for (const auto& f : oracle::maps(a, b)) REQUIRE(verify_epi_surjective_cone_equivalence(f).passed);
}
