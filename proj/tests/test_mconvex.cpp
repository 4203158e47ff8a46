#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "mcq/generator.hpp"
#include "mcq/mconvex.hpp"

using namespace mcq;
using namespace mcq::testing;

namespace {
std::vector<Point> pts(const PointSet& s) {
  return std::vector<Point>(s.begin(), s.end());
}
}  // namespace

TEST_CASE("exchange axiom checker") {
  Fixtures f = fixtures();
  CHECK(check_m_convex(pts(f.demo_P.points())));
  CHECK(check_m_convex({Point{5, -2}}));
  // A lattice hole between the remaining points breaks exchange.
  CHECK_FALSE(check_m_convex({Point{0, 1}, Point{2, -1}}));
  CHECK_THROWS_AS(check_m_convex({}), UsageError);
}

TEST_CASE("m-natural axiom checker") {
  Fixtures f = fixtures();
  CHECK(check_mnat_convex(pts(f.proj_R.points())));
  CHECK_FALSE(check_mnat_convex({Point{0, 0}, Point{1, 1}}));
  // Every M-convex set is a single-layer M-natural set.
  CHECK(check_mnat_convex(pts(f.demo_Q.points())));
}

TEST_CASE("submodular table from a set") {
  Fixtures f = fixtures();
  SubmodularFn p = set_to_submodular(f.demo_P);
  CHECK(p == f.demo_p);
  CHECK(p.value(0b001) == 1);
  CHECK(p.value(0b100) == 2);
  CHECK(p.value(0b111) == 1);
  SubmodularFn q = set_to_submodular(f.demo_Q);
  CHECK(q == f.demo_q);
  CHECK(q.value(0b011) == -2);
  CHECK(q.value(0b111) == -5);
  MConvexSet origin = MConvexSet::make(GroundSet(3), {{0, 0, 0}}, Certify::yes);
  for (Mask a = 0; a < 8; ++a) CHECK(set_to_submodular(origin).value(a) == 0);
}

TEST_CASE("set from a submodular table") {
  Fixtures f = fixtures();
  CHECK(submodular_to_set(f.demo_p) == f.demo_P);
  CHECK(submodular_to_set(f.demo_q) == f.demo_Q);
  // Modular table of v = (2, -1): base polytope is the single point v.
  SubmodularFn modular =
      SubmodularFn::make(GroundSet(2), {0, 2, -1, 1}, Certify::yes);
  CHECK(pts(submodular_to_set(modular).points()) == std::vector<Point>{{2, -1}});
}

TEST_CASE("submodularity checker") {
  Fixtures f = fixtures();
  CHECK(check_submodular(f.demo_p.fn()));
  CHECK(check_submodular(SetFn(GroundSet(2), {0, 2, -1, 1})));
  // p(1) = p(2) = 0 with p(12) = 1 is supermodular at the pair {1},{2}.
  CHECK_FALSE(check_submodular(SetFn(GroundSet(2), {0, 0, 0, 1})));
  CHECK_THROWS_AS(
      SubmodularFn::make(GroundSet(2), {0, 0, 0, 1}, Certify::yes), UsageError);
  CHECK_THROWS_AS(
      SubmodularFn::make(GroundSet(2), {1, 1, 1, 1}, Certify::no), UsageError);
}

TEST_CASE("greedy vertices and figure labels") {
  Fixtures f = fixtures();
  // The label word assigns priorities per coordinate; "123" is order (3,2,1).
  CHECK(greedy_vertex(f.demo_p, {2, 1, 0}) == Point{-1, 0, 2});
  CHECK(greedy_vertex(f.demo_p, {0, 1, 2}) == Point{1, 1, -1});
  CHECK(greedy_vertex(f.demo_p, {1, 0, 2}) == Point{1, 1, -1});
  SubmodularFn modular = SubmodularFn::make(GroundSet(2), {0, 2, -1, 1}, Certify::yes);
  CHECK(greedy_vertex(modular, {0, 1}) == Point{2, -1});
  CHECK(greedy_vertex(modular, {1, 0}) == Point{2, -1});
  CHECK_THROWS_AS(greedy_vertex(f.demo_p, {0, 0, 1}), UsageError);
}

TEST_CASE("vertex sets of the running pair") {
  Fixtures f = fixtures();
  PointSet vp = vertex_set(f.demo_p);
  CHECK(vp == PointSet{{Point{1, 1, -1}, Point{1, -1, 1}, Point{-1, 1, 1},
                        Point{-1, 0, 2}, Point{0, -1, 2}}});
  CHECK(vertex_set(f.demo_q).size() == 3);
  SubmodularFn modular = SubmodularFn::make(GroundSet(2), {0, 2, -1, 1}, Certify::yes);
  CHECK(vertex_set(modular) == PointSet{{Point{2, -1}}});
}

TEST_CASE("dual supermodular table") {
  Fixtures f = fixtures();
  SetFn dp = dual(f.demo_p);
  CHECK(dp.value(0b001) == -1);  // p(E) - p({2,3})
  CHECK(dual(dual(f.demo_p)) == f.demo_p.fn());
  SetFn dq = dual(f.demo_q);
  CHECK(dq.value(0b111) == -5);
  CHECK(check_supermodular(dp));
  SetFn modular(GroundSet(2), {0, 2, -1, 1});
  CHECK(dual(modular) == modular);
}

TEST_CASE("layer decomposition") {
  Fixtures f = fixtures();
  std::vector<MConvexSet> ls = layers(f.proj_R);
  REQUIRE(ls.size() == 4);
  CHECK(ls.front().rank() == -1);
  CHECK(ls.back().rank() == 2);
  CHECK(pts(top_layer(f.proj_R).points()) == std::vector<Point>{{1, 1}});
  CHECK(bottom_layer(f.proj_R) ==
        MConvexSet::make(GroundSet(2), {{-1, 0}, {0, -1}}, Certify::no));
  // An M-convex set is its own single layer.
  MNatSet single = MNatSet::make(f.demo_P.ground(), pts(f.demo_P.points()), Certify::yes);
  CHECK(layers(single).size() == 1);
  CHECK(layers(single).front() == f.demo_P);
  // The sandwich of the running pair has the two sets as extreme layers.
  std::vector<Point> sandwich = enumerate_gpolymatroid(f.demo_p.fn(), dual(f.demo_q));
  MNatSet r = MNatSet::make(GroundSet(3), sandwich, Certify::yes);
  CHECK(top_layer(r) == f.demo_P);
  CHECK(bottom_layer(r) == f.demo_Q);
}

TEST_CASE("round trips between sets and tables") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 2 + static_cast<int>(seed % 3);
    SubmodularFn p = gen_submodular(seed * 77 + 5, n, 2);
    MConvexSet s = submodular_to_set(p);
    CHECK(set_to_submodular(s) == p);
    CHECK(submodular_to_set(set_to_submodular(s)) == s);
  }
}

TEST_CASE("greedy vertex equals brute-force argmax") {
  Rng rng(4242);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng.uniform(0, 2));
    SubmodularFn p = gen_submodular(rng.next(), n, 2);
    MConvexSet s = submodular_to_set(p);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    do {
      CHECK(greedy_vertex(p, order) == argmax_oracle(pts(s.points()), order));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("vertex set equals the extreme points of the enumeration") {
  Rng rng(515);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + static_cast<int>(rng.uniform(0, 2));
    SubmodularFn p = gen_submodular(rng.next(), n, 2);
    MConvexSet s = submodular_to_set(p);
    std::vector<Point> extremes;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    do {
      extremes.push_back(argmax_oracle(pts(s.points()), order));
    } while (std::next_permutation(order.begin(), order.end()));
    PointSet verts = vertex_set(p);
    CHECK(verts == PointSet{extremes});
    for (const Point& v : verts.points()) CHECK(s.contains(v));
  }
}

TEST_CASE("layers of generated m-natural sets are m-convex") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    MNatSet r = random_mnat(seed * 13 + 1, 2 + static_cast<int>(seed % 2), 2);
    for (const MConvexSet& layer : layers(r))
      CHECK(check_m_convex(pts(layer.points())));
  }
}
