#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "helpers.hpp"
#include "mcq/generator.hpp"
#include "mcq/io.hpp"
#include "mcq/quotient.hpp"
#include "mcq/selftest.hpp"

using namespace mcq;
using namespace mcq::testing;

#ifndef MCQ_ASSET_DIR
#define MCQ_ASSET_DIR "assets"
#endif

TEST_CASE("generator determinism") {
  SubmodularFn a = gen_submodular(123, 3, 2);
  SubmodularFn b = gen_submodular(123, 3, 2);
  CHECK(a == b);
  CHECK_FALSE(gen_submodular(124, 3, 2) == a);
  auto [p1, q1] = gen_quotient_pair(55, 3, 2);
  auto [p2, q2] = gen_quotient_pair(55, 3, 2);
  CHECK(p1 == p2);
  CHECK(q1 == q2);
  std::string s1 = run_selftest(42, 4, 4, 3, 2, Caps{});
  std::string s2 = run_selftest(42, 4, 4, 3, 2, Caps{});
  CHECK(s1 == s2);
}

TEST_CASE("generator certification") {
  CHECK(check_submodular(gen_submodular(9, 4, 3).fn()));
  // Zero scale: identically zero.
  SubmodularFn zero = gen_submodular(1, 3, 0);
  for (Mask a = 0; a < 8; ++a) CHECK(zero.value(a) == 0);
  auto [p, q] = gen_quotient_pair(77, 3, 2);
  CHECK(check_compliant(p, q));
  auto [np, nq] = gen_non_quotient_pair(77, 3, 2);
  CHECK_FALSE(check_compliant(np, nq));
  CHECK(np.rank() > nq.rank());
  MConvexSet dom = random_mconvex(5, 3, 2);
  MFunc f = gen_m_func(5, dom, 2);
  CHECK(check_m_convex_fn(f.ground(), f.values()));
  MFunc flat = gen_m_func(5, dom, 0);
  for (const auto& [x, v] : flat.values()) CHECK(v == Rat(0));
}

TEST_CASE("a loop in the lift collapses the pair") {
  // One-element lift whose extra element never moves: deletion equals
  // contraction.
  Fixtures f = fixtures();
  const Mask e = 0b1000;
  std::vector<Int> table(16);
  for (Mask a = 0; a < 8; ++a) {
    table[a] = f.demo_p.value(a);
    table[a | e] = f.demo_p.value(a);
  }
  SubmodularFn r = SubmodularFn::make(GroundSet(4), table, Certify::yes);
  std::vector<Int> p(8), q(8);
  for (Mask a = 0; a < 8; ++a) {
    p[a] = r.value(a);
    q[a] = r.value(a | e) - r.value(e);
  }
  CHECK(p == q);
}

TEST_CASE("fixture assets match the committed files") {
  for (const std::string& name : fixture_names()) {
    std::ifstream in(std::string(MCQ_ASSET_DIR) + "/fixtures/v1/" + name + ".json");
    REQUIRE_MESSAGE(in.good(), ("missing asset for " + name).c_str());
    std::string body((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK(body == canonical_dump(fixture_json(name)));
  }
}

TEST_CASE("json round trips") {
  Fixtures f = fixtures();
  CHECK(mconvex_from_json(to_json(f.demo_P), Certify::yes) == f.demo_P);
  CHECK(mnat_from_json(to_json(f.proj_R), Certify::yes) == f.proj_R);
  CHECK(submodular_from_json(to_json(f.demo_p), Certify::yes) == f.demo_p);
  CHECK(mfunc_from_json(to_json(f.twopoint_r), Certify::yes).values() ==
        f.twopoint_r.values());
  LinkingSet gamma = nonregular_fixture();
  LinkingSet back = linking_from_json(to_json(gamma), Certify::no);
  CHECK(back == gamma);
  BipartiteGraph g = bipartite_from_json(to_json(f.k32));
  CHECK(g.edges == f.k32.edges);
  Rng rng(200);
  for (int t = 0; t < 20; ++t) {
    SubmodularFn p = gen_submodular(rng.next(), 3, 2);
    CHECK(submodular_from_json(to_json(p), Certify::no) == p);
    MConvexSet s = submodular_to_set(p);
    CHECK(mconvex_from_json(to_json(s), Certify::no) == s);
    MFunc fn = gen_m_func(rng.next(), s, 2);
    CHECK(mfunc_from_json(to_json(fn), Certify::no).values() == fn.values());
  }
}

TEST_CASE("json validation errors") {
  CHECK_THROWS_AS(mconvex_from_json(Json{{"points", Json::array()}}, Certify::no),
                  UsageError);
  Json missing{{"schema", 1}, {"ground", {{"size", 2}}}, {"table", {{"0", 0}}}};
  CHECK_THROWS_AS(submodular_from_json(missing, Certify::no), UsageError);
  Json riddled = to_json(fixtures().twopoint_f);
  riddled["values"].push_back(riddled["values"][0]);
  CHECK_THROWS_AS(mfunc_from_json(riddled, Certify::no), UsageError);
  CHECK_THROWS_AS(fixture_json("nonexistent"), UsageError);
}

TEST_CASE("canonical dump is stable") {
  Fixtures f = fixtures();
  std::string a = canonical_dump(to_json(f.demo_P));
  std::string b = canonical_dump(to_json(f.demo_P));
  CHECK(a == b);
  CHECK(a.back() == '\n');
}
