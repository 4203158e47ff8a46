#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mcq/generator.hpp"
#include "mcq/lift.hpp"
#include "mcq/quotient.hpp"
#include "mcq/set_ops.hpp"

using namespace mcq;
using namespace mcq::testing;

namespace {

Int binom(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (Int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("fiberwise projection") {
  Surjection phi{{0, 0, 0, 1, 1, 1}, 2};
  CHECK(project_phi(Point{1, 1, 0, 0, 1, 1}, phi, Point{1, 1}) == Point{3, 3});
  Surjection id{{0, 1}, 2};
  CHECK(project_phi(Point{4, -2}, id, Point{0, 0}) == Point{4, -2});
  CHECK_THROWS_AS(project_phi(Point{1}, phi, Point{0, 0}), UsageError);
  Surjection broken{{0, 0}, 2};
  CHECK_THROWS_AS(broken.validate(), UsageError);
}

TEST_CASE("box lifts") {
  Fixtures f = fixtures();
  // Identity data: the lift is the set itself.
  Surjection id{{0, 1}, 2};
  MConvexSet same = box_lift(f.flag_R, {0, 0}, {2, 2}, id, {0, 0}, Certify::yes);
  CHECK(same == f.flag_R);
  // Unit box over fibers of size two: binomial counts per point.
  MConvexSet w = MConvexSet::make(GroundSet(2), {{2, 0}, {1, 1}, {0, 2}}, Certify::yes);
  Surjection doubled{{0, 0, 1, 1}, 2};
  MConvexSet lifted =
      box_lift(w, {0, 0, 0, 0}, {1, 1, 1, 1}, doubled, {0, 0}, Certify::yes);
  CHECK(lifted.size() == 6);
  CHECK(box_lift_size(w, {0, 0, 0, 0}, {1, 1, 1, 1}, doubled, {0, 0}) == 6);
  // Projecting back recovers the covered part of the original.
  MConvexSet back = project_phi(lifted, w.ground(), doubled, {0, 0});
  CHECK(back == w);
  CHECK_THROWS_AS(box_lift(w, {0, 0, 0, 0}, {0, 1, 1, 1}, doubled, {0, 0}, Certify::no),
                  UsageError);
}

TEST_CASE("matroid lifts") {
  Fixtures f = fixtures();
  // A matroid lifts to itself through singleton fibers.
  MConvexSet m = MConvexSet::make(GroundSet(2), {{1, 0}, {0, 1}}, Certify::yes);
  Lift self = matroid_lift(m, Certify::yes);
  CHECK(self.set == m);
  CHECK(self.cert.phi.domain() == 2);
  Lift l = matroid_lift(f.flag_P, Certify::yes);
  CHECK(l.cert.phi.domain() == 4);
  CHECK(l.set.size() == 6);
  // Cardinality formula: sum of binomial products.
  Int expected = 0;
  for (const Point& x : f.flag_P.points())
    expected += binom(2, x[0] - 2) * binom(2, x[1] - 2);
  CHECK(static_cast<Int>(l.set.size()) == expected);
  // Round trip.
  CHECK(project_phi(l.set, f.flag_P.ground(), l.cert.phi, l.cert.v) == f.flag_P);
}

TEST_CASE("k-polymatroid lifts") {
  Fixtures f = fixtures();
  // k at least the coordinate range: single fibers, a pure translation.
  Lift big = k_polymatroid_lift(f.flag_P, 5, Certify::yes);
  CHECK(big.cert.phi.domain() == 2);
  CHECK(big.set == translate(f.flag_P, {-2, -2}));
  // k = 1 coincides with the matroid lift.
  Lift unit = k_polymatroid_lift(f.flag_P, 1, Certify::yes);
  Lift mat = matroid_lift(f.flag_P, Certify::yes);
  CHECK(unit.set == mat.set);
  CHECK(unit.cert.phi.map == mat.cert.phi.map);
  // Interval caps follow the division with remainder in (0, k]: coordinate
  // ranges (3, 2, 5) at k = 2 decompose as (2,1), (2), (2,2,1).
  std::vector<Point> tp;
  for (Int a = 0; a <= 3; ++a)
    for (Int b = 0; b <= 2; ++b) tp.push_back({a, b, 5 - a - b});
  MConvexSet trans = MConvexSet::make(GroundSet(3), tp, Certify::yes);
  Lift two = k_polymatroid_lift(trans, 2, Certify::yes);
  CHECK(two.cert.box_hi == Point{2, 1, 2, 2, 2, 1});
  CHECK(two.cert.phi.map == std::vector<int>{0, 0, 1, 2, 2, 2});
  CHECK(project_phi(two.set, trans.ground(), two.cert.phi, two.cert.v) == trans);
}

TEST_CASE("compatible lifts") {
  Fixtures f = fixtures();
  CompatibleLifts cl = compatible_lifts(f.flag_P, f.flag_Q, Certify::yes);
  CHECK(cl.cert.phi.domain() == 6);
  CHECK(cl.cert.v == Point{1, 1});
  CHECK(cl.cert.box_lo == Point{0, 0, 0, 0, 0, 0});
  CHECK(cl.cert.box_hi == Point{1, 1, 1, 1, 1, 1});
  CompatibleLifts same = compatible_lifts(f.flag_P, f.flag_P, Certify::yes);
  CHECK(same.m == same.n);
}

TEST_CASE("lifted truncations are matroid truncations") {
  Fixtures f = fixtures();
  for (Int k = 1; k <= 2; ++k) {
    MConvexSet tr = truncate(f.flag_P, k, Verify::off);
    CompatibleLifts cl = compatible_lifts(f.flag_P, tr, Certify::yes);
    MConvexSet mtr = truncate(cl.m, k, Verify::off);
    std::vector<Point> nonneg;
    for (const Point& x : mtr.points()) {
      bool ok = true;
      for (Int c : x)
        if (c < 0) ok = false;
      if (ok) nonneg.push_back(x);
    }
    CHECK(cl.n.points() == PointSet{nonneg});
  }
}

TEST_CASE("lift quotients match base quotients") {
  Rng rng(474);
  int done = 0;
  while (done < 25) {
    int n = 2 + static_cast<int>(rng.uniform(0, 1));
    bool want_quotient = (done % 2 == 0);
    auto [p, q] = want_quotient ? gen_quotient_pair(rng.next(), n, 1)
                                : gen_non_quotient_pair(rng.next(), n, 1);
    MConvexSet ps = submodular_to_set(p), qs = submodular_to_set(q);
    if (compatible_lift_ground(ps, qs) > 12) continue;
    Int ms = 0, ns = 0;
    if (compatible_lift_sizes(ps, qs, ms, ns) > 20000) continue;
    CompatibleLifts cl = compatible_lifts(ps, qs, Certify::yes);
    CHECK(check_exchange(cl.m, cl.n) == check_compliant(p, q));
    // Lifts always project back onto their sources.
    CHECK(project_phi(cl.m, ps.ground(), cl.cert.phi, cl.cert.v) == ps);
    CHECK(project_phi(cl.n, qs.ground(), cl.cert.phi, cl.cert.v) == qs);
    ++done;
  }
}
