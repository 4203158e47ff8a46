#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mcq/generator.hpp"
#include "mcq/quotient.hpp"
#include "mcq/set_ops.hpp"

using namespace mcq;
using namespace mcq::testing;

namespace {
std::vector<Point> pts(const PointSet& s) {
  return std::vector<Point>(s.begin(), s.end());
}
}  // namespace

TEST_CASE("restriction") {
  Fixtures f = fixtures();
  MConvexSet r = restrict_to(f.demo_P, 0b011);
  CHECK(pts(r.points()) == std::vector<Point>{{0, 1}, {1, 0}});
  CHECK(restrict_to(f.demo_P, 0b111) == f.demo_P);
  CHECK_THROWS_AS(restrict_to(f.demo_Q, 0b011), EmptyResultError);
}

TEST_CASE("projection") {
  Fixtures f = fixtures();
  CHECK(project_onto(f.demo_P, 0b011, Certify::yes) == f.proj_R);
  MNatSet full = project_onto(f.demo_P, 0b111, Certify::yes);
  CHECK(full.points() == f.demo_P.points());
  CHECK(layers(full).size() == 1);
  MNatSet q12 = project_onto(f.demo_Q, 0b011, Certify::yes);
  CHECK(q12 == MNatSet::make(GroundSet(2),
                             {{-1, -3}, {-3, -1}, {-1, -1}, {-1, -2}, {-2, -2}, {-2, -1}},
                             Certify::no));
}

TEST_CASE("minkowski sum and translation") {
  Fixtures f = fixtures();
  MConvexSet zero = MConvexSet::make(GroundSet(3), {{0, 0, 0}}, Certify::yes);
  CHECK(minkowski_sum(f.demo_P, zero) == f.demo_P);
  MConvexSet simplex = MConvexSet::make(GroundSet(2), {{1, 0}, {0, 1}}, Certify::yes);
  CHECK(pts(minkowski_sum(simplex, simplex).points()) ==
        std::vector<Point>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(pts(minkowski_sum(f.flag_P, f.flag_Q).points()) ==
        std::vector<Point>{{3, 7}, {4, 6}, {5, 5}, {6, 4}, {7, 3}});
  CHECK(translate(f.demo_P, {0, 0, 0}) == f.demo_P);
  CHECK(translate(f.flag_R, {1, 1}).contains(Point{2, 2}));
  CHECK(translate(f.flag_R, {1, 1}).ground() == f.flag_R.ground());
}

TEST_CASE("minkowski sum adds the submodular tables") {
  Rng rng(31);
  for (int t = 0; t < 25; ++t) {
    int n = 2 + static_cast<int>(rng.uniform(0, 2));
    MConvexSet a = random_mconvex(rng.next(), n, 2);
    MConvexSet b = random_mconvex(rng.next(), n, 2);
    SubmodularFn sum = set_to_submodular(minkowski_sum(a, b));
    SubmodularFn pa = set_to_submodular(a), pb = set_to_submodular(b);
    for (Mask m = 0; m <= a.ground().full_mask(); ++m)
      CHECK(sum.value(m) == pa.value(m) + pb.value(m));
  }
}

TEST_CASE("truncation and elongation") {
  Fixtures f = fixtures();
  MConvexSet tr = truncate(f.demo_P, 1);
  CHECK(tr.contains(Point{1, 1, -2}));
  CHECK(tr.contains(Point{0, 0, 0}));
  CHECK_FALSE(tr.contains(Point{2, 0, -1}));
  MConvexSet origin = MConvexSet::make(GroundSet(2), {{0, 0}}, Certify::yes);
  CHECK(pts(elongate(origin, 1).points()) == std::vector<Point>{{0, 1}, {1, 0}});
  CHECK(truncate(f.flag_P, 1) == f.flag_P_prime);
  CHECK_THROWS_AS(truncate(f.demo_P, 0), UsageError);
}

TEST_CASE("truncation formula equals the point filter") {
  Rng rng(77);
  for (int t = 0; t < 25; ++t) {
    int n = 2 + static_cast<int>(rng.uniform(0, 2));
    MConvexSet p = random_mconvex(rng.next(), n, 2);
    Int k = rng.uniform(1, 3);
    CHECK(pts(truncate(p, k).points()) == truncation_oracle(p, k));
    // Elongation is the truncation of the negated set, reflected back.
    MConvexSet el = elongate(p, k);
    std::vector<Point> neg;
    for (const Point& x : p.points()) {
      Point y = x;
      for (Int& c : y) c = -c;
      neg.push_back(y);
    }
    MConvexSet pneg = MConvexSet::make(p.ground(), neg, Certify::no);
    std::vector<Point> expected;
    for (const Point& z : truncation_oracle(pneg, k)) {
      Point y = z;
      for (Int& c : y) c = -c;
      expected.push_back(y);
    }
    CHECK(el.points() == PointSet{expected});
  }
}

TEST_CASE("box and plank intersections") {
  Fixtures f = fixtures();
  GPolyIntersection plank = intersect_plank(f.proj_R, 0, 1);
  CHECK(plank.set == MNatSet::make(GroundSet(2),
                                   {{-1, 1}, {0, 0}, {1, -1}, {0, 1}, {1, 0}},
                                   Certify::no));
  GPolyIntersection box = intersect_box(f.proj_R, {-1, -1}, {1, 1});
  CHECK(box.set == f.proj_R);
  MNatSet p3 = MNatSet::make(f.demo_P.ground(), pts(f.demo_P.points()), Certify::no);
  GPolyIntersection cut = intersect_box(p3, {0, 0, 0}, {1, 1, 1});
  CHECK(pts(cut.set.points()) ==
        std::vector<Point>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK_THROWS_AS(intersect_box(f.proj_R, {2, 2}, {3, 3}), EmptyResultError);
  CHECK_THROWS_AS(intersect_box(f.proj_R, {1, 1}, {0, 0}), UsageError);
  CHECK_THROWS_AS(intersect_plank(f.proj_R, 4, 9), EmptyResultError);
}

TEST_CASE("box and plank tables match the filter on random instances") {
  Rng rng(99);
  int done = 0;
  while (done < 25) {
    int n = 2 + static_cast<int>(rng.uniform(0, 2));
    MNatSet r = random_mnat(rng.next(), n, 2);
    Point lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      Int a = rng.uniform(-4, 4), b = rng.uniform(-4, 4);
      lo[static_cast<std::size_t>(i)] = std::min(a, b);
      hi[static_cast<std::size_t>(i)] = std::max(a, b);
    }
    try {
      // Verify::on is the assertion under test: formula vs filter agreement.
      intersect_box(r, lo, hi, Verify::on);
      Int alpha = rng.uniform(r.min_sum(), r.max_sum());
      Int beta = rng.uniform(alpha, r.max_sum());
      intersect_plank(r, alpha, beta, Verify::on);
      ++done;
    } catch (const EmptyResultError&) {
      // box missed the set; draw again
    }
  }
}

TEST_CASE("minors of the running example") {
  Fixtures f = fixtures();
  Minor del = deletion(f.demo_P, 0b100);
  CHECK(pts(del.set.points()) == std::vector<Point>{{1, 1}});
  CHECK(del.table.fn().table == std::vector<Int>{0, 1, 1, 2});
  Minor con = contraction(f.demo_P, 0b100);
  CHECK(pts(con.set.points()) == std::vector<Point>{{-1, 0}, {0, -1}});
  CHECK(con.table.value(0b11) == -1);
  Minor mid = basic_minor(f.demo_P, 0b100, 1);
  CHECK(pts(mid.set.points()) == std::vector<Point>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(basic_minor(f.demo_P, 0b100, 5), UsageError);
  CHECK_THROWS_AS(basic_minor(f.demo_P, 0b111, 0), UsageError);
}

TEST_CASE("minor tables equal the formula on random instances") {
  Rng rng(123);
  for (int t = 0; t < 30; ++t) {
    int n = 3 + static_cast<int>(rng.uniform(0, 1));
    MConvexSet p = random_mconvex(rng.next(), n, 2);
    Mask u = static_cast<Mask>(rng.uniform(1, (1 << n) - 2));
    Mask v = p.ground().full_mask() & ~u;
    if (v == 0) continue;
    Int klo = coord_sum(*p.points().begin(), v), khi = klo;
    for (const Point& x : p.points()) {
      klo = std::min(klo, coord_sum(x, v));
      khi = std::max(khi, coord_sum(x, v));
    }
    for (Int k = klo; k <= khi; ++k) {
      Minor m = basic_minor(p, u, k, Verify::on);
      CHECK(set_to_submodular(m.set) == m.table);
    }
    // Minors at decreasing levels form quotients.
    if (khi > klo) {
      Minor top = basic_minor(p, u, khi);
      Minor bottom = basic_minor(p, u, klo);
      CHECK(check_compliant(top.table, bottom.table));
    }
  }
}

TEST_CASE("truncations are the maximal quotients") {
  Rng rng(321);
  for (int t = 0; t < 25; ++t) {
    int n = 2 + static_cast<int>(rng.uniform(0, 2));
    auto [p, q] = gen_quotient_pair(rng.next(), n, 2);
    Int k = p.rank() - q.rank();
    if (k < 1) continue;
    SubmodularFn tr = truncate_table(p, k);
    CHECK(check_compliant(p, tr));
    // Any quotient with the same rank gap sits inside the truncation.
    MConvexSet qs = submodular_to_set(q);
    MConvexSet trs = submodular_to_set(tr);
    for (const Point& x : qs.points()) CHECK(trs.contains(x));
  }
}
