#include <doctest.h>

#include "oracles.hpp"
#include "pretopos/colimits.hpp"
#include "pretopos/lcc.hpp"
#include "pretopos/limits.hpp"

using namespace pretopos;

namespace {

std::uint64_t pi_size_oracle(const FinMap& f, const FinMap& h) {
  std::uint64_t total = 0;
  for (Index y = 0; y < f.cod().size(); ++y) {
    std::uint64_t sections = 1;
    for (Index x = 0; x < f.dom().size(); ++x)
      if (f(x) == y) sections *= fiber(h, x).size();
    total += sections;
  }
  return total;
}

std::uint64_t poly_size_oracle(const FinMap& f, std::size_t a) {
  std::uint64_t total = 0;
  for (Index y = 0; y < f.cod().size(); ++y) total += oracle::power(a, fiber(f, y).size());
  return total;
}

}  // namespace

TEST_CASE("slices") {
  const FinMap p = mk_map(FinSet(3), FinSet(2), {0, 1, 1});
  const SliceObj s = make_slice(p);
  CHECK(s.base.size() == 2);
  const SliceMap m = make_slice_map(s, s, identity(FinSet(3)));
  CHECK(m.map == identity(FinSet(3)));
  try {
    make_slice_map(s, s, mk_map(FinSet(3), FinSet(3), {1, 1, 1}));
    FAIL("expected NonCommuting");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonCommuting);
  }
}

TEST_CASE("base change") {
  const FinMap g = mk_map(FinSet(3), FinSet(2), {0, 1, 1});
  const SliceObj same = base_change(identity(FinSet(2)), make_slice(g));
  CHECK(same.total.size() == 3);
  const SliceObj prod = base_change(bang(FinSet(2)), make_slice(bang(FinSet(3))));
  CHECK(prod.total.size() == 6);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const FinMap f = oracle::random_map(rng, rng() % 4, 3);
    const FinMap h = oracle::random_map(rng, rng() % 4, 3);
    const SliceObj b = base_change(f, make_slice(h));
    for (Index x = 0; x < f.dom().size(); ++x) REQUIRE(fiber(b.proj, x).size() == fiber(h, f(x)).size());
  }
}

TEST_CASE("dependent sums") {
  const FinMap h = mk_map(FinSet(3), FinSet(2), {0, 1, 1});
  CHECK(sigma_f(identity(FinSet(2)), make_slice(h)).proj == h);
  CHECK(sigma_f(bang(FinSet(2)), make_slice(from_initial(FinSet(2)))).total.size() == 0);
  CHECK(sigma_f(bang(FinSet(2)), make_slice(h)).total.size() == 3);
}

TEST_CASE("dependent products") {
  const FinMap f = bang(FinSet(2));
  const FinMap h = mk_map(FinSet(3), FinSet(2), {0, 0, 1});
  const PiObject p = pi_f(f, make_slice(h));
  CHECK(p.slice.total.size() == 2);
  CHECK(p.section(1) == std::vector<Index>{1, 2});

  const PiObject same = pi_f(identity(FinSet(2)), make_slice(h));
  CHECK(same.slice.total.size() == 3);
  CHECK(same.slice.proj.table() == h.table());

  const FinMap partial = mk_map(FinSet(1), FinSet(2), {0});
  const PiObject empty_fiber = pi_f(partial, make_slice(mk_map(FinSet(2), FinSet(1), {0, 0})));
  CHECK(empty_fiber.count[1] == 1);

  for (std::size_t x = 0; x <= 2; ++x)
    for (std::size_t y = 0; y <= 2; ++y)
      for (const auto& shape : oracle::maps(x, y))
        for (std::size_t t = 0; t <= 3; ++t)
          for (const auto& g : oracle::maps(t, x))
            REQUIRE(pi_f(shape, make_slice(g)).slice.total.size() == pi_size_oracle(shape, g));
}

TEST_CASE("the Π adjunction for totals <= 3 over bases <= 2") {
  for (std::size_t x = 0; x <= 2; ++x)
    for (std::size_t y = 0; y <= 2; ++y)
      for (const auto& f : oracle::maps(x, y))
        for (std::size_t gt = 0; gt <= 3; ++gt)
          for (const auto& g : oracle::maps(gt, y))
            for (std::size_t ht = 0; ht <= 3; ++ht)
              for (const auto& h : oracle::maps(ht, x)) {
                const Certificate c = verify_pi_adjunction(f, make_slice(g), make_slice(h));
                REQUIRE(c.passed);
                REQUIRE(c.witnesses["hom_pullback_side"] == c.witnesses["hom_pi_side"]);
              }
}

TEST_CASE("Π over a point is currying") {
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t xp = 0; xp <= 2; ++xp)
      for (std::size_t b = 0; b <= 2; ++b) {
        // f = bang(X'), g = A over 1, h = X' x B over X'
        const Product xb = product(FinSet(xp), FinSet(b));
        const Certificate c = verify_pi_adjunction(bang(FinSet(xp)), make_slice(bang(FinSet(a))), make_slice(xb.p1));
        REQUIRE(c.passed);
        REQUIRE(c.witnesses["hom_pi_side"] == oracle::power(b, a * xp));
      }
  const Certificate empty = verify_pi_adjunction(bang(FinSet(2)), make_slice(from_initial(FinSet(1))),
                                                 make_slice(identity(FinSet(2))));
  CHECK(empty.witnesses["hom_pullback_side"] == 1);
  CHECK(empty.witnesses["hom_pi_side"] == 1);
}

TEST_CASE("exponentials") {
  const Exponential e = exponential(FinSet(2), FinSet(3));
  CHECK(e.object.size() == 9);
  CHECK(exponential(FinSet(0), FinSet(3)).object.size() == 1);
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b) {
      const Exponential ex = exponential(FinSet(a), FinSet(b));
      for (std::size_t c = 0; c <= 2; ++c) {
        std::set<std::vector<Index>> curried;
        for (const auto& h : oracle::maps(c * a, b)) {
          const FinMap hm(product(FinSet(c), FinSet(a)).object, FinSet(b), h.table());
          const FinMap k = curry(ex, FinSet(c), hm);
          REQUIRE(uncurry(ex, k) == hm);
          curried.insert(k.table());
        }
        REQUIRE(curried.size() == oracle::power(ex.object.size(), c));
      }
    }
}

TEST_CASE("polynomial functors") {
  const FinMap f = mk_map(FinSet(2), FinSet(2), {1, 1});
  CHECK(poly_apply(f, FinSet(3)).object.size() == 10);
  CHECK(poly_apply(f, FinSet(0)).object.size() == 1);
  CHECK(poly_apply(from_initial(FinSet(3)), FinSet(4)).object.size() == 3);
  for (std::size_t x = 0; x <= 3; ++x)
    for (std::size_t y = 0; y <= 3; ++y)
      for (const auto& shape : oracle::maps(x, y))
        for (std::size_t a = 0; a <= 3; ++a) {
          const PolyObject p = poly_apply(shape, FinSet(a));
          REQUIRE(p.object.size() == poly_size_oracle(shape, a));
          REQUIRE(poly_size(shape, a) == p.object.size());
          REQUIRE(poly_apply_direct(shape, FinSet(a)).object.size() == p.object.size());
        }
}

TEST_CASE("polynomial functors act on maps") {
  const FinMap f = mk_map(FinSet(3), FinSet(2), {0, 1, 1});
  CHECK(poly_on_map(f, identity(FinSet(3))) == identity(poly_apply(f, FinSet(3)).object));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const FinMap m = oracle::random_map(rng, 2, 3);
    const FinMap n = oracle::random_map(rng, 3, 2);
    REQUIRE(poly_on_map(f, compose(n, m)) == compose(poly_on_map(f, n), poly_on_map(f, m)));
  }
  // a constant map makes every branch constant
  const PolyObject target = poly_apply(f, FinSet(2));
  const FinMap constant = mk_map(FinSet(3), FinSet(2), {1, 1, 1});
  const FinMap pc = poly_on_map(f, constant);
  for (Index e = 0; e < pc.dom().size(); ++e)
    for (Index v : target.decode(pc(e)).second) REQUIRE(v == 1);
}

TEST_CASE("W-types") {
  const WResult two = w_type(from_initial(FinSet(2)));
  CHECK(two.status == WStatus::Finite);
  CHECK(two.w->size() == 2);
  CHECK(two.stage == 2);

  const WResult none = w_type(identity(FinSet(1)));
  CHECK(none.status == WStatus::Finite);
  CHECK(none.w->size() == 0);
  CHECK(none.stage == 1);

  const WResult nat = w_type(mk_map(FinSet(1), FinSet(2), {1}), 20);
  CHECK(nat.status == WStatus::DivergedAtCap);
  REQUIRE(nat.stages.size() >= 5);
  for (std::size_t k = 0; k < 5; ++k) CHECK(nat.stages[k] == k);

  const WResult trees = w_type(mk_map(FinSet(2), FinSet(2), {1, 1}), 5000, 4);
  CHECK(trees.status == WStatus::DivergedAtCap);
  for (std::size_t k = 1; k < trees.stages.size(); ++k) CHECK(trees.stages[k] >= trees.stages[k - 1]);
}

TEST_CASE("the finiteness criterion agrees with the chain for |X|,|Y| <= 3") {
  CHECK(w_finiteness_criterion(identity(FinSet(2))) == WFiniteness::Empty);
  CHECK(w_finiteness_criterion(from_initial(FinSet(2))) == WFiniteness::IsY);
  CHECK(w_finiteness_criterion(mk_map(FinSet(1), FinSet(2), {1})) == WFiniteness::Infinite);
  for (std::size_t x = 0; x <= 3; ++x)
    for (std::size_t y = 0; y <= 3; ++y)
      for (const auto& f : oracle::maps(x, y)) {
        const WResult w = w_type(f);
        // an independent reading of the fibers
        bool leaf = false, node = false;
        for (Index c = 0; c < y; ++c) (fiber(f, c).empty() ? leaf : node) = true;
        REQUIRE((w.status == WStatus::Finite) == !(leaf && node));
        if (w.status == WStatus::Finite) {
          REQUIRE(w.w->size() == (leaf ? y : 0));
          REQUIRE(w.stage <= y + 2);
          REQUIRE(is_iso(*w.sup).has_value());
        }
      }
}

TEST_CASE("fold and initiality") {
  const WResult two = w_type(from_initial(FinSet(2)));
  const Algebra self{two.shape, *two.w, *two.pw, *two.sup};
  CHECK(fold(two, self) == identity(*two.w));

  const WResult none = w_type(identity(FinSet(1)));
  const Algebra any = make_algebra(none.shape, FinSet(2), {1, 0});
  CHECK(fold(none, any).table().empty());
  CHECK(verify_initiality(none).passed);

  // X = 0, Y = 2: the unique morphism sends the tree for y to the structure value at y
  for (std::size_t c = 0; c <= 3; ++c)
    for (const auto& s : oracle::maps(2, c)) {
      const Algebra alg = make_algebra(two.shape, FinSet(c), s.table());
      const FinMap h = fold(two, alg);
      for (Index p = 0; p < two.pw->object.size(); ++p)
        REQUIRE(h((*two.sup)(p)) == s(two.pw->decode(p).first));
    }
  const Certificate c = verify_initiality(two, 3);
  CHECK(c.passed);
  CHECK(c.witnesses["carriers"][3]["algebras"] == 9);
}

TEST_CASE("initiality for every finite shape with |X|,|Y| <= 3") {
  for (std::size_t x = 0; x <= 3; ++x)
    for (std::size_t y = 0; y <= 3; ++y)
      for (const auto& f : oracle::maps(x, y)) {
        const WResult w = w_type(f);
        if (w.status == WStatus::Finite) REQUIRE(verify_initiality(w, 4).passed);
      }
}
