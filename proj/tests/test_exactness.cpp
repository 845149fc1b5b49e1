#include <doctest.h>

#include "oracles.hpp"
#include "pretopos/colimits.hpp"
#include "pretopos/exactness.hpp"

using namespace pretopos;

TEST_CASE("equivalence relations") {
  const FinSet a(3);
  CHECK(is_equivalence_relation(identity_relation(a)).passed);
  CHECK(is_equivalence_relation(full_relation(a)).passed);
  const Certificate c = is_equivalence_relation(make_relation(FinSet(2), {{0, 1}}));
  CHECK_FALSE(c.passed);
  CHECK(c.witnesses["routes_agree"] == true);
  try {
    make_relation(FinSet(2), {{0, 2}});
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRange);
  }
  try {
    make_setoid(make_relation(FinSet(2), {{0, 1}}));
    FAIL("expected NotEquivalenceRelation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEquivalenceRelation);
  }
}

TEST_CASE("matrix laws agree with the categorical witnesses on every relation on [3]") {
  const FinSet a(3);
  for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
    std::vector<std::pair<Index, Index>> pairs;
    for (Index c = 0; c < 9; ++c)
      if (mask >> c & 1) pairs.emplace_back(c / 3, c % 3);
    const Relation r = make_relation(a, pairs);
    bool refl = true, sym = true, trans = true;
    for (Index x = 0; x < 3; ++x) {
      refl = refl && r(x, x);
      for (Index y = 0; y < 3; ++y) {
        sym = sym && (!r(x, y) || r(y, x));
        for (Index z = 0; z < 3; ++z) trans = trans && (!r(x, y) || !r(y, z) || r(x, z));
      }
    }
    const Certificate c = is_equivalence_relation(r);
    REQUIRE(c.passed == (refl && sym && trans));
    REQUIRE(c.witnesses["routes_agree"] == true);
  }
}

TEST_CASE("closure") {
  const Relation r = make_relation(FinSet(3), {{0, 1}});
  const Relation c = rst_closure(r);
  CHECK(c(1, 0));
  CHECK(c(0, 0));
  CHECK_FALSE(c(0, 2));
  CHECK(rst_closure(make_relation(FinSet(3), {})).matrix == identity_relation(FinSet(3)).matrix);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = rng() % 6;
    std::vector<std::pair<Index, Index>> pairs;
    for (std::size_t k = 0; n > 0 && k < n; ++k) pairs.emplace_back(rng() % n, rng() % n);
    const Relation cl = rst_closure(make_relation(FinSet(n), pairs));
    REQUIRE(rst_closure(cl).matrix == cl.matrix);
    const auto label = oracle::closure_labels(n, pairs);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) REQUIRE(cl(x, y) == (label[x] == label[y]));
  }
}

TEST_CASE("quotients") {
  CHECK(is_iso(quotient(setoid_inclusion(FinSet(3))).proj).has_value());
  CHECK(quotient(make_setoid(full_relation(FinSet(4)))).object.size() == 1);
  const Setoid s = setoid_from_blocks({0, 0, 1});
  const Quotient q = quotient(s);
  CHECK(q.object.size() == 2);
  CHECK(q.reps == std::vector<Index>{0, 2});
}

TEST_CASE("set partitions") {
  for (std::size_t n = 0; n <= 6; ++n) CHECK(all_equivalence_relations(n).size() == oracle::bell(n));
  CHECK(oracle::bell(5) == 52);
}

TEST_CASE("effectiveness") {
  const Certificate c = verify_effectiveness(setoid_from_blocks({0, 0, 1}));
  CHECK(c.passed);
  CHECK(c.witnesses["relation_size"] == 5);
  CHECK(c.witnesses["kernel_pair_size"] == 5);
  CHECK(verify_effectiveness(setoid_inclusion(FinSet(3))).witnesses["kernel_pair_size"] == 3);
  for (std::size_t n = 0; n <= 5; ++n)
    for (const Setoid& s : all_equivalence_relations(n)) {
      const Certificate e = verify_effectiveness(s);
      REQUIRE(e.passed);
      REQUIRE(e.witnesses["relation_size"] == s.rel.matrix.count());
      // the quotient projection is a regular epi
      REQUIRE(is_regular_epi(quotient(s).proj).passed);
    }
}

TEST_CASE("kernels") {
  CHECK(kernel_relation(mk_map(FinSet(2), FinSet(3), {0, 2})).rel.matrix == identity_relation(FinSet(2)).matrix);
  CHECK(kernel_relation(bang(FinSet(3))).rel.matrix == full_relation(FinSet(3)).matrix);
  const FinMap f = mk_map(FinSet(3), FinSet(2), {0, 0, 1});
  CHECK(kernel_relation(f).rel.matrix.count() == 5);
  const Certificate c = verify_kernel_effective(f);
  CHECK(c.passed);
  CHECK(c.witnesses["quotient_size"] == 2);
  for (const auto& g : oracle::maps(4, 3)) REQUIRE(verify_kernel_effective(g).passed);
}

TEST_CASE("the quotient functor") {
  const Setoid s = setoid_from_blocks({0, 1, 0, 1});
  const Setoid t = setoid_from_blocks({0, 0, 1});
  const SetoidMap m = make_setoid_map(s, t, mk_map(FinSet(4), FinSet(3), {0, 2, 1, 2}));
  CHECK(q_on_map(m).table() == std::vector<Index>{0, 1});
  try {
    make_setoid_map(s, t, mk_map(FinSet(4), FinSet(3), {0, 2, 2, 2}));
    FAIL("expected NotPreserving");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPreserving);
  }
  CHECK(q_functor(setoid_inclusion(FinSet(3))).size() == 3);

  // functoriality on composable setoid maps
  std::mt19937_64 rng(3);
  std::size_t composed = 0;
  for (int i = 0; i < 400; ++i) {
    const auto pa = all_equivalence_relations(3);
    const auto pb = all_equivalence_relations(2);
    const Setoid& x = pa[rng() % pa.size()];
    const Setoid& y = pb[rng() % pb.size()];
    const Setoid& z = pa[rng() % pa.size()];
    const FinMap f = oracle::random_map(rng, 3, 2);
    const FinMap g = oracle::random_map(rng, 2, 3);
    SetoidMap mf, mg;
    try {
      mf = make_setoid_map(x, y, f);
      mg = make_setoid_map(y, z, g);
    } catch (const Error&) {
      continue;
    }
    const SetoidMap mgf = make_setoid_map(x, z, compose(g, f));
    REQUIRE(q_on_map(mgf) == compose(q_on_map(mg), q_on_map(mf)));
    ++composed;
  }
  CHECK(composed > 20);

  // i is full and faithful: Hom(A, B) and Hom(iA, iB) have the same size
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b) {
      std::size_t preserving = 0;
      for (const auto& f : oracle::maps(a, b)) {
        try {
          make_setoid_map(setoid_inclusion(FinSet(a)), setoid_inclusion(FinSet(b)), f);
          ++preserving;
        } catch (const Error&) {
        }
      }
      REQUIRE(preserving == oracle::power(b, a));
    }
}

TEST_CASE("Q is left adjoint to the inclusion") {
  const Certificate c = verify_adjunction_q_i(make_setoid(full_relation(FinSet(3))), FinSet(2));
  CHECK(c.passed);
  CHECK(c.witnesses["hom_eqrel"] == 2);
  CHECK(c.witnesses["hom_set"] == 2);
  CHECK(verify_adjunction_q_i(setoid_inclusion(FinSet(2)), FinSet(2)).witnesses["hom_set"] == 4);
  for (std::size_t n = 0; n <= 4; ++n)
    for (const Setoid& s : all_equivalence_relations(n))
      for (std::size_t a = 0; a <= 3; ++a) {
        const Certificate adj = verify_adjunction_q_i(s, FinSet(a));
        REQUIRE(adj.passed);
        // independent count: maps out of the set of classes
        REQUIRE(adj.witnesses["hom_set"] == oracle::power(a, quotient(s).object.size()));
      }
}

TEST_CASE("transposes are natural") {
  // precomposing with a setoid map on the left, postcomposing on the right
  const Setoid s = setoid_from_blocks({0, 1, 0});
  const Setoid t = setoid_from_blocks({0, 0, 1, 1});
  const SetoidMap m = make_setoid_map(s, t, mk_map(FinSet(3), FinSet(4), {0, 2, 1}));
  const FinMap post = mk_map(FinSet(2), FinSet(3), {2, 0});
  for (const auto& k : oracle::maps(2, 2)) {
    // k : Q t -> A, viewed as a setoid map t -> iA
    const FinMap g = transpose_to_eqrel(t, k);
    REQUIRE(transpose_to_set(t, FinSet(2), g) == k);
    REQUIRE(compose(g, m.f0) == transpose_to_eqrel(s, compose(k, q_on_map(m))));
    REQUIRE(compose(post, g) == transpose_to_eqrel(t, compose(post, k)));
  }
}

TEST_CASE("vv quotients") {
  CHECK(vv_quotient(setoid_inclusion(FinSet(3))).object.size() == 3);
  CHECK(vv_quotient(make_setoid(full_relation(FinSet(3)))).object.size() == 1);
  const VVQuotient v = vv_quotient(setoid_from_blocks({0, 0, 1}));
  CHECK(v.object.size() == 2);
  CHECK(v.comparison_is_iso);
  for (std::size_t n = 0; n <= 5; ++n)
    for (const Setoid& s : all_equivalence_relations(n)) REQUIRE(vv_quotient(s).comparison_is_iso);
}

TEST_CASE("2/P") {
  const TwoModP yes = two_mod_p(true);
  const TwoModP no = two_mod_p(false);
  CHECK(yes.object.size() == 1);
  CHECK(no.object.size() == 2);
  CHECK(yes.recovered == true);
  CHECK(no.recovered == false);
}
