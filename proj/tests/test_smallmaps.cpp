#include <doctest.h>

#include "oracles.hpp"
#include "pretopos/colimits.hpp"
#include "pretopos/smallmaps.hpp"

using namespace pretopos;

namespace {

std::size_t largest_fiber(const FinMap& f) {
  std::vector<std::size_t> counts(f.cod().size(), 0);
  std::size_t best = 0;
  for (Index v : f.table()) best = std::max(best, ++counts[v]);
  return best;
}

}  // namespace

TEST_CASE("fiber-bounded classes") {
  CHECK(fiber_bound_class(1)(identity(FinSet(3))));
  CHECK_FALSE(fiber_bound_class(1)(bang(FinSet(2))));
  CHECK(fiber_bound_class(2)(bang(FinSet(2))));
  CHECK(fiber_bound_class(0)(from_initial(FinSet(3))));
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (const auto& f : oracle::maps(a, b))
        for (std::size_t k = 0; k <= 3; ++k) REQUIRE(fiber_bound_class(k)(f) == (largest_fiber(f) <= k));
}

TEST_CASE("stability") {
  const Certificate two = verify_stable(fiber_bound_class(2), 3);
  CHECK(two.passed);
  CHECK(two.witnesses["pullback_stability"]["failures"] == 0);
  CHECK(two.witnesses["descent"]["failures"] == 0);

  const MapClass even{"cod has even size", [](const FinMap& f) { return f.cod().size() % 2 == 0; }};
  const Certificate bad = verify_stable(even, 3);
  CHECK_FALSE(bad.passed);
  CHECK(bad.witnesses["pullback_stability"]["failures"].get<std::uint64_t>() > 0);
  CHECK(bad.witnesses.contains("counterexample"));

  const Certificate zero = verify_stable(fiber_bound_class(0), 3);
  CHECK(zero.witnesses["pullback_stability"]["failures"] == 0);
  CHECK(zero.witnesses["sum"]["failures"] == 0);
}

TEST_CASE("local fullness") {
  CHECK(verify_locally_full(fiber_bound_class(1), 3).passed);
  // g and f both have fibers of two, f∘g has one of three
  const Certificate two = verify_locally_full(fiber_bound_class(2), 3);
  CHECK_FALSE(two.passed);
  CHECK(two.witnesses["counterexample"]["check"] == "small g but f∘g not small");
  const FinMap g = mk_map(FinSet(3), FinSet(2), {0, 0, 1});
  const FinMap f = bang(FinSet(2));
  CHECK(fiber_bound_class(2)(g));
  CHECK(fiber_bound_class(2)(f));
  CHECK_FALSE(fiber_bound_class(2)(compose(f, g)));
}

TEST_CASE("quasi-pullbacks and covering squares") {
  const FinMap f = mk_map(FinSet(2), FinSet(1), {0, 0});
  const Pullback pb = pullback(f, f);
  const Square exact = make_square(pb.p2, f, f, pb.p1);
  CHECK(is_quasi_pullback(exact).passed);
  CHECK(is_covering_square(exact).passed);

  // the diagonal misses the off-diagonal pairs
  const Square diag = make_square(identity(FinSet(2)), f, f, identity(FinSet(2)));
  const Certificate missed = is_quasi_pullback(diag);
  CHECK_FALSE(missed.passed);
  CHECK(missed.witnesses["counterexample"]["check"] == "comparison misses a pullback element");

  // over a non-surjective bottom map
  const FinMap into = mk_map(FinSet(1), FinSet(2), {0});
  const Pullback pi = pullback(into, identity(FinSet(2)));
  const Square partial = make_square(pi.p2, identity(FinSet(2)), into, pi.p1);
  CHECK(is_quasi_pullback(partial).passed);
  CHECK_FALSE(is_covering_square(partial).passed);
  try {
    make_covering_square(partial);
    FAIL("expected NotSurjective");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSurjective);
  }
}

TEST_CASE("collection squares") {
  const FinMap f = mk_map(FinSet(2), FinSet(1), {0, 0});
  const CoveringSquare id = make_covering_square(
      make_square(identity(FinSet(2)), f, identity(FinSet(1)), f));
  const Certificate c = is_collection_square(id);
  CHECK(c.passed);
  CHECK(c.witnesses["lifted_by_search"] == c.witnesses["cases"]);
  CHECK(c.witnesses["lifted_by_splitting"] == c.witnesses["cases"]);

  std::size_t squares = 0;
  for_each_covering_square(2, kDefaultCap, [&](const CoveringSquare& cs) {
    REQUIRE(is_collection_square(cs, 3).passed);
    ++squares;
    return true;
  });
  CHECK(squares > 0);
}

TEST_CASE("the collection axiom") {
  const FinMap p = mk_map(FinSet(4), FinSet(2), {0, 1, 1, 0});
  const FinMap f = mk_map(FinSet(2), FinSet(1), {0, 0});
  const CollectionWitness w = collection_axiom_witness(fiber_bound_class(2), f, p);
  CHECK(w.certificate.passed);
  CHECK(compose(p, w.lift) == identity(FinSet(2)));
  CHECK(w.square.commutes());

  const CollectionWitness trivial = collection_axiom_witness(fiber_bound_class(2), f, identity(FinSet(2)));
  CHECK(trivial.certificate.passed);
  CHECK(trivial.lift == identity(FinSet(2)));

  const CollectionWitness empty =
      collection_axiom_witness(fiber_bound_class(0), from_initial(FinSet(2)), identity(FinSet(0)));
  CHECK(empty.certificate.passed);

  try {
    collection_axiom_witness(fiber_bound_class(2), f, mk_map(FinSet(2), FinSet(2), {0, 0}));
    FAIL("expected NotSurjective");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSurjective);
  }
}

TEST_CASE("multiple choice") {
  CHECK(amc_witness(mk_map(FinSet(3), FinSet(2), {0, 1, 1})).certificate.passed);
  CHECK(amc_witness(identity(FinSet(2))).certificate.passed);
  CHECK(amc_witness(mk_map(FinSet(1), FinSet(2), {1})).certificate.passed);
  CHECK(amc_witness(identity(FinSet(1))).certificate.kind == "smallmaps.amc");
}
