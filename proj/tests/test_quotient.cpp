#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mcq/generator.hpp"
#include "mcq/quotient.hpp"
#include "mcq/set_ops.hpp"

using namespace mcq;
using namespace mcq::testing;

namespace {

// A small non-compliant pair: X = {2}, Y = E violates compliance.
std::pair<SubmodularFn, SubmodularFn> bad_pair() {
  SubmodularFn p = SubmodularFn::make(GroundSet(2), {0, 1, 1, 1}, Certify::yes);
  SubmodularFn q = SubmodularFn::make(GroundSet(2), {0, 1, -1, 0}, Certify::yes);
  return {p, q};
}

}  // namespace

TEST_CASE("compliance") {
  Fixtures f = fixtures();
  CHECK(check_compliant(f.demo_p, f.demo_q));
  CHECK(check_compliant(f.demo_p, f.demo_p));
  auto [p, q] = bad_pair();
  CHECK_FALSE(check_compliant(p, q));
}

TEST_CASE("vertex containment") {
  Fixtures f = fixtures();
  CHECK(check_vertex_containment(f.demo_p, f.demo_q).verdict == Verdict::true_);
  CHECK(check_vertex_containment(f.demo_p, f.demo_p).verdict == Verdict::true_);
  auto [p, q] = bad_pair();
  CHECK(check_vertex_containment(p, q).verdict == Verdict::false_);
  Caps tight;
  tight.perm_n = 1;
  CHECK(check_vertex_containment(p, q, tight).verdict == Verdict::skipped);
}

TEST_CASE("contraction containment agrees with compliance") {
  Fixtures f = fixtures();
  CHECK(check_contraction_containment(f.demo_p, f.demo_q));
  CHECK(check_contraction_containment(f.demo_p, f.demo_p));
  auto [p, q] = bad_pair();
  CHECK_FALSE(check_contraction_containment(p, q));
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    SubmodularFn a = gen_submodular(rng.next(), 3, 2);
    SubmodularFn b = gen_submodular(rng.next(), 3, 2);
    CHECK(check_contraction_containment(a, b) == check_compliant(a, b));
  }
}

TEST_CASE("sandwich set with top and bottom layers") {
  Fixtures f = fixtures();
  CHECK(check_top_bottom(f.demo_p, f.demo_q));
  MNatSet r = gpoly_points(f.demo_p, f.demo_q);
  CHECK(top_layer(r) == f.demo_P);
  CHECK(bottom_layer(r) == f.demo_Q);
  // p = q: the sandwich is the single base layer.
  MNatSet same = gpoly_points(f.demo_p, f.demo_p);
  CHECK(layers(same).size() == 1);
  CHECK(layers(same).front() == f.demo_P);
  auto [p, q] = bad_pair();
  CHECK_FALSE(check_top_bottom(p, q));
}

TEST_CASE("sandwich uniqueness among candidate middles") {
  // Exhaustive: no other point set with the same top and bottom layers is
  // M-natural-convex.
  Rng rng(2024);
  int done = 0;
  while (done < 6) {
    auto [p, q] = gen_quotient_pair(rng.next(), 2, 2);
    if (p.rank() - q.rank() < 2) continue;
    MNatSet r = gpoly_points(p, q);
    MConvexSet top = top_layer(r), bottom = bottom_layer(r);
    // Candidate middles: every lattice point of the bounding box with an
    // intermediate coordinate sum.
    Point lo = *r.points().begin(), hi = lo;
    for (const Point& x : r.points())
      for (std::size_t i = 0; i < x.size(); ++i) {
        lo[i] = std::min(lo[i], x[i]);
        hi[i] = std::max(hi[i], x[i]);
      }
    std::vector<Point> middles;
    for (Int a = lo[0]; a <= hi[0]; ++a)
      for (Int b = lo[1]; b <= hi[1]; ++b) {
        Point z{a, b};
        Int s = coord_sum(z);
        if (s > bottom.rank() && s < top.rank()) middles.push_back(z);
      }
    if (middles.size() > 12) continue;
    std::vector<Point> fixed;
    fixed.insert(fixed.end(), top.points().begin(), top.points().end());
    fixed.insert(fixed.end(), bottom.points().begin(), bottom.points().end());
    int matches = 0;
    for (std::size_t sub = 0; sub < (std::size_t{1} << middles.size()); ++sub) {
      std::vector<Point> cand = fixed;
      for (std::size_t i = 0; i < middles.size(); ++i)
        if (sub & (std::size_t{1} << i)) cand.push_back(middles[i]);
      if (!check_mnat_convex(cand)) continue;
      MNatSet c = MNatSet::make(GroundSet(2), cand, Certify::no);
      if (top_layer(c) == top && bottom_layer(c) == bottom) {
        ++matches;
        CHECK(c == r);
      }
    }
    CHECK(matches == 1);
    ++done;
  }
}

TEST_CASE("single-element lift witness") {
  Fixtures f = fixtures();
  // The shipped one-element lift fixture realizes the pair.
  CHECK(verify_deletion_contraction(f.demo_r, f.demo_p, f.demo_q));
  // The constructed witness verifies as well.
  SubmodularFn wit = deletion_contraction_witness(f.demo_p, f.demo_q);
  CHECK(verify_deletion_contraction(wit, f.demo_p, f.demo_q));
  // p = q: the extra element is a loop.
  SubmodularFn loopwit = deletion_contraction_witness(f.demo_p, f.demo_p);
  for (Mask a = 0; a < 8; ++a)
    CHECK(loopwit.value(a | 0b1000) == loopwit.value(a));
  auto [p, q] = bad_pair();
  CHECK_THROWS_AS(deletion_contraction_witness(p, q), NoWitnessError);
}

TEST_CASE("asymmetric exchange") {
  Fixtures f = fixtures();
  CHECK(check_exchange(f.demo_P, f.demo_Q));
  CHECK(check_exchange(f.demo_P, f.demo_P));
  MConvexSet p = MConvexSet::make(GroundSet(2), {{1, 0}, {0, 1}}, Certify::yes);
  MConvexSet q = MConvexSet::make(GroundSet(2), {{1, -1}}, Certify::yes);
  CHECK_FALSE(check_exchange(p, q));
}

TEST_CASE("induction witness") {
  Fixtures f = fixtures();
  InductionWitness wit = induction_witness(f.demo_p, f.demo_q);
  CHECK(verify_induction(wit, f.demo_p, f.demo_q));
  // The selector picks the bottom layer of the lift.
  CHECK(wit.w.points().points().front() == Point{-6});
  // p = q: a zero selector returns the set itself.
  InductionWitness same = induction_witness(f.demo_p, f.demo_p);
  CHECK(same.w.points().points().front() == Point{0});
  CHECK(verify_induction(same, f.demo_p, f.demo_p));
  // Corrupting the linking set must fail re-verification.
  std::vector<Point> damaged(wit.gamma.carrier().points().begin(),
                             wit.gamma.carrier().points().end());
  damaged.erase(std::remove_if(damaged.begin(), damaged.end(),
                               [&](const Point& x) {
                                 return Point(x.begin(), x.end() - 1) ==
                                        Point{-1, -3, -1};
                               }),
                damaged.end());
  LinkingSet corrupted = LinkingSet::make(wit.gamma.left_ground(),
                                          wit.gamma.right_ground(), damaged, Certify::no);
  CHECK_FALSE(verify_induction(InductionWitness{corrupted, wit.w}, f.demo_p, f.demo_q));
  auto [p, q] = bad_pair();
  CHECK_THROWS_AS(induction_witness(p, q), NoWitnessError);
}

TEST_CASE("green preorder witness") {
  Fixtures f = fixtures();
  GreenWitness wit = green_witness(f.demo_p, f.demo_q);
  CHECK(verify_green(wit, f.demo_p, f.demo_q));
  // p = q: X is the identity on a single point and Delta equals Gamma.
  GreenWitness same = green_witness(f.demo_p, f.demo_p);
  CHECK(same.delta == same.gamma);
  CHECK(verify_green(same, f.demo_p, f.demo_p));
  // A wrong shift k breaks the product's left top layer.
  GreenWitness broken = wit;
  Point xpt(8, 0);
  xpt[3] = -1;  // wrong magnitude
  xpt[7] = 1;
  broken.x = LinkingSet::make(wit.x.left_ground(), wit.x.right_ground(), {xpt},
                              Certify::no);
  CHECK_FALSE(verify_green(broken, f.demo_p, f.demo_q));
}

TEST_CASE("matroid lift quotient") {
  Fixtures f = fixtures();
  CHECK(check_matroid_lift_quotient(f.flag_P, f.flag_Q).verdict == Verdict::true_);
  CHECK(check_matroid_lift_quotient(f.flag_P, f.flag_P).verdict == Verdict::true_);
  MConvexSet p = MConvexSet::make(GroundSet(2), {{1, 0}, {0, 1}}, Certify::yes);
  MConvexSet q = MConvexSet::make(GroundSet(2), {{1, -1}}, Certify::yes);
  CHECK(check_matroid_lift_quotient(p, q).verdict == Verdict::false_);
  Caps tight;
  tight.lift_ground = 2;
  CHECK(check_matroid_lift_quotient(f.flag_P, f.flag_Q, tight).verdict ==
        Verdict::skipped);
}

TEST_CASE("compressed quotient shape") {
  Fixtures f = fixtures();
  CHECK(check_compressed_quotient(f.flag_P, f.flag_Q).verdict == Verdict::true_);
  // A matroid summed with itself: all twos and zeros.
  MConvexSet m = MConvexSet::make(GroundSet(3), {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}},
                                  Certify::yes);
  CHECK(check_compressed_quotient(m, m).verdict == Verdict::true_);
  MConvexSet p = MConvexSet::make(GroundSet(2), {{1, 0}, {0, 1}}, Certify::yes);
  MConvexSet q = MConvexSet::make(GroundSet(2), {{1, -1}}, Certify::yes);
  CHECK(check_compressed_quotient(p, q).verdict == Verdict::false_);
  Caps tight;
  tight.sweep_ground = 3;
  CHECK(check_compressed_quotient(f.flag_P, f.flag_Q, tight).verdict ==
        Verdict::skipped);
}

TEST_CASE("suite agreement on the running example") {
  Fixtures f = fixtures();
  QuotientReport rep = quotient_suite(f.demo_p, f.demo_q);
  CHECK(rep.all_agree());
  CHECK(rep.common_verdict() == true);
  for (int id = 1; id <= 8; ++id)
    CHECK(rep.verdicts.at(id).verdict == Verdict::true_);
  CHECK(rep.witnesses.sandwich.has_value());
  CHECK(rep.witnesses.single_element_lift.has_value());
  CHECK(rep.witnesses.induction.has_value());
  CHECK(rep.witnesses.green.has_value());
}

TEST_CASE("suite on identical singletons") {
  MConvexSet s = MConvexSet::make(GroundSet(2), {{3, -1}}, Certify::yes);
  SubmodularFn t = set_to_submodular(s);
  QuotientReport rep = quotient_suite(t, t);
  CHECK(rep.all_agree());
  CHECK(rep.common_verdict() == true);
}

TEST_CASE("suite agreement on generated pairs") {
  Rng rng(5150);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + static_cast<int>(rng.uniform(0, 2));
    auto [p, q] = gen_quotient_pair(rng.next(), n, 2);
    QuotientReport rep = quotient_suite(p, q);
    CHECK(rep.all_agree());
    CHECK(rep.common_verdict() == true);
  }
  for (int t = 0; t < 30; ++t) {
    int n = 2 + static_cast<int>(rng.uniform(0, 2));
    auto [p, q] = gen_non_quotient_pair(rng.next(), n, 2);
    QuotientReport rep = quotient_suite(p, q);
    CHECK(rep.all_agree());
    CHECK(rep.common_verdict() == false);
  }
}

TEST_CASE("quotient transitivity") {
  Rng rng(606);
  for (int t = 0; t < 25; ++t) {
    int n = 2 + static_cast<int>(rng.uniform(0, 2));
    auto [p, q] = gen_quotient_pair(rng.next(), n, 2);
    Int k = rng.uniform(1, 2);
    SubmodularFn r = truncate_table(q, k);
    CHECK(check_compliant(q, r));
    CHECK(check_compliant(p, r));
  }
  // Minor chains: deeper levels of one projection are chained quotients.
  for (int t = 0; t < 15; ++t) {
    MConvexSet big = random_mconvex(rng.next(), 4, 2);
    Mask u = 0b1000;
    Mask v = big.ground().full_mask() & ~u;
    Int klo = coord_sum(*big.points().begin(), v), khi = klo;
    for (const Point& x : big.points()) {
      klo = std::min(klo, coord_sum(x, v));
      khi = std::max(khi, coord_sum(x, v));
    }
    if (khi - klo < 2) continue;
    SubmodularFn a = basic_minor(big, u, khi).table;
    SubmodularFn b = basic_minor(big, u, khi - 1).table;
    SubmodularFn c = basic_minor(big, u, khi - 2).table;
    CHECK(check_compliant(a, b));
    CHECK(check_compliant(b, c));
    CHECK(check_compliant(a, c));
  }
}
