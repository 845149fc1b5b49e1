#include <doctest.h>

#include "oracles.hpp"
#include "pretopos/colimits.hpp"
#include "pretopos/limits.hpp"

using namespace pretopos;

TEST_CASE("terminal object") {
  CHECK(terminal().size() == 1);
  CHECK(bang(FinSet(3)).table() == std::vector<Index>{0, 0, 0});
  CHECK(bang(FinSet(0)).table().empty());
  CHECK(bang(FinSet(1)) == identity(FinSet(1)));
}

TEST_CASE("products") {
  const Product p = product(FinSet(2), FinSet(3));
  CHECK(p.object.size() == 6);
  CHECK(p.object.describe(4) == "(1,1)");
  CHECK(p.p1.table() == std::vector<Index>{0, 0, 0, 1, 1, 1});
  CHECK(p.p2.table() == std::vector<Index>{0, 1, 2, 0, 1, 2});
  CHECK(product(FinSet(3), FinSet(0)).object.size() == 0);
}

TEST_CASE("pairing is the unique mediating map for every cone from size <= 3") {
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b) {
      const Product p = product(FinSet(a), FinSet(b));
      for (std::size_t c = 0; c <= 3; ++c)
        for (const auto& u : oracle::maps(c, a))
          for (const auto& v : oracle::maps(c, b)) {
            const FinMap m = pairing(p, u, v);
            REQUIRE(compose(p.p1, m) == u);
            REQUIRE(compose(p.p2, m) == v);
            std::size_t mediators = 0;
            for (const auto& k : oracle::maps(c, a * b))
              mediators += compose(p.p1, k) == u && compose(p.p2, k) == v;
            REQUIRE(mediators == 1);
          }
    }
}

TEST_CASE("equalizers") {
  const FinMap f = mk_map(FinSet(3), FinSet(2), {0, 1, 1});
  CHECK(equalizer(f, f).object.size() == 3);
  const FinMap s = mk_map(FinSet(2), FinSet(2), {0, 1});
  const FinMap t = mk_map(FinSet(2), FinSet(2), {1, 0});
  CHECK(equalizer(s, t).object.size() == 0);
  const FinMap g = mk_map(FinSet(3), FinSet(2), {0, 0, 1});
  const Equalizer e = equalizer(f, g);
  CHECK(e.inclusion.table() == std::vector<Index>{0, 2});
  try {
    equalizer(f, s);
    FAIL("expected ParallelMismatch");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::ParallelMismatch);
  }
  // universal property against every fork from size <= 3
  for (const auto& h : oracle::maps(3, 3)) {
    if (!(compose(f, h) == compose(g, h))) continue;
    std::size_t mediators = 0;
    for (const auto& k : oracle::maps(3, e.object.size())) mediators += compose(e.inclusion, k) == h;
    REQUIRE(mediators == 1);
  }
}

TEST_CASE("pullbacks") {
  const Pullback diag = pullback(identity(FinSet(2)), identity(FinSet(2)));
  CHECK(diag.object.size() == 2);
  CHECK(pullback(bang(FinSet(2)), bang(FinSet(3))).object.size() == 6);
  const FinMap f = mk_map(FinSet(2), FinSet(2), {0, 0});
  const FinMap g = mk_map(FinSet(1), FinSet(2), {0});
  CHECK(pullback(f, g).object.size() == 2);
  CHECK_THROWS_AS(make_cospan(f, bang(FinSet(1))), Error);
}

TEST_CASE("pullback elements match the naive construction") {
  for (std::size_t x = 0; x <= 2; ++x)
    for (std::size_t a = 0; a <= 3; ++a)
      for (std::size_t b = 0; b <= 3; ++b)
        for (const auto& f : oracle::maps(a, x))
          for (const auto& g : oracle::maps(b, x)) {
            const Pullback p = pullback(f, g);
            const auto pairs = oracle::pullback_pairs(f, g);
            REQUIRE(p.object.size() == pairs.size());
            for (Index k = 0; k < pairs.size(); ++k) {
              REQUIRE(p.p1(k) == pairs[k].first);
              REQUIRE(p.p2(k) == pairs[k].second);
              REQUIRE(p.index_of(pairs[k].first, pairs[k].second) == k);
            }
          }
}

TEST_CASE("pullback universal property against cones from size <= 3") {
  for (std::size_t x = 0; x <= 2; ++x)
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b)
        for (const auto& f : oracle::maps(a, x))
          for (const auto& g : oracle::maps(b, x)) {
            const Pullback p = pullback(f, g);
            for (std::size_t c = 0; c <= 3; ++c)
              for (const auto& u : oracle::maps(c, a))
                for (const auto& v : oracle::maps(c, b)) {
                  if (!(compose(f, u) == compose(g, v))) continue;
                  std::size_t mediators = 0;
                  for (const auto& m : oracle::maps(c, p.object.size()))
                    mediators += compose(p.p1, m) == u && compose(p.p2, m) == v;
                  REQUIRE(mediators == 1);
                }
          }
}

TEST_CASE("kernel pairs") {
  const FinMap mono = mk_map(FinSet(2), FinSet(3), {0, 2});
  CHECK(kernel_pair(mono).object.size() == 2);
  CHECK(kernel_pair(mk_map(FinSet(2), FinSet(1), {0, 0})).object.size() == 4);
  CHECK(kernel_pair(mk_map(FinSet(3), FinSet(2), {0, 0, 1})).object.size() == 5);
  for (const auto& f : oracle::maps(4, 3)) {
    std::size_t expected = 0;
    for (const auto& fib : fibers(f)) expected += fib.size() * fib.size();
    REQUIRE(kernel_pair(f).object.size() == expected);
  }
}

TEST_CASE("pullback square recognition") {
  const FinMap f = mk_map(FinSet(2), FinSet(2), {0, 0});
  const FinMap g = mk_map(FinSet(1), FinSet(2), {0});
  const Pullback p = pullback(f, g);
  // corner P, top p2 : P -> B, right g, bottom f, left p1
  CHECK(verify_pullback_square(make_square(p.p2, g, f, p.p1)).passed);

  // sums are disjoint: A <- 0 -> B over A + B
  const SumObject s = sum(FinSet(2), FinSet(1));
  CHECK(verify_pullback_square(make_square(from_initial(FinSet(1)), s.inr, s.inl, from_initial(FinSet(2)))).passed);

  // a doubled corner over a one-point pullback
  const FinMap one = mk_map(FinSet(1), FinSet(1), {0});
  const Square doubled = make_square(bang(FinSet(2)), one, one, bang(FinSet(2)));
  const Certificate c = verify_pullback_square(doubled);
  CHECK_FALSE(c.passed);
  CHECK(c.witnesses["counterexample"]["check"] == "comparison not injective");
  CHECK(c.witnesses["counterexample"]["detail"]["elements"] == Json::array({0, 1}));

  const Square bad = make_square(identity(FinSet(2)), identity(FinSet(2)), identity(FinSet(2)),
                                 mk_map(FinSet(2), FinSet(2), {1, 0}));
  try {
    verify_pullback_square(bad);
    FAIL("expected NonCommuting");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonCommuting);
  }
}

TEST_CASE("pasting pullback squares") {
  // X -> Y -> Z over A -> B -> C with both squares pullbacks
  const FinMap h = mk_map(FinSet(3), FinSet(2), {0, 1, 1});
  const FinMap k = mk_map(FinSet(2), FinSet(2), {1, 1});
  const FinMap r = mk_map(FinSet(2), FinSet(2), {0, 1});
  const Pullback right = pullback(k, r);
  const Square rsq = make_square(right.p2, r, k, right.p1);
  const Pullback left = pullback(h, right.p1);
  const Square lsq = make_square(left.p2, right.p1, h, left.p1);
  REQUIRE(verify_pullback_square(rsq).passed);
  REQUIRE(verify_pullback_square(lsq).passed);
  CHECK(verify_pullback_square(paste_horizontal(lsq, rsq)).passed);
}

TEST_CASE("diagonal injectivity") {
  CHECK(diagonal_injectivity_check(identity(FinSet(3))).passed);
  const Certificate c = diagonal_injectivity_check(mk_map(FinSet(2), FinSet(1), {0, 0}));
  CHECK(c.passed);
  CHECK(c.witnesses["injective"] == false);
  CHECK(diagonal_injectivity_check(mk_map(FinSet(2), FinSet(3), {0, 2})).passed);
}
