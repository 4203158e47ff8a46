#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mcq/flags.hpp"
#include "mcq/generator.hpp"
#include "mcq/quotient.hpp"

using namespace mcq;
using namespace mcq::testing;

TEST_CASE("flag verification") {
  Fixtures f = fixtures();
  CHECK(check_flag({f.flag_R, f.flag_Q, f.flag_P}));
  CHECK(check_flag({f.flag_P}));
  // Larger rank listed below a smaller one: compliance fails.
  CHECK_FALSE(check_flag({f.flag_P, f.flag_Q}));
}

TEST_CASE("completion to a consecutive flag") {
  Fixtures f = fixtures();
  std::vector<MConvexSet> completed = complete_flag({f.flag_R, f.flag_Q, f.flag_P});
  REQUIRE(completed.size() == 5);
  CHECK(completed[0] == f.flag_R);
  CHECK(completed[1] == f.flag_Q_prime);
  CHECK(completed[2] == f.flag_Q);
  CHECK(completed[3] == f.flag_P_prime);
  CHECK(completed[4] == f.flag_P);
  CHECK(check_flag(completed));
  for (std::size_t i = 0; i + 1 < completed.size(); ++i)
    CHECK(completed[i + 1].rank() == completed[i].rank() + 1);
  // Already consecutive input is unchanged.
  CHECK(complete_flag(completed) == completed);
  // The running pair spans seven consecutive layers.
  std::vector<MConvexSet> wide = complete_flag({f.demo_Q, f.demo_P});
  CHECK(wide.size() == 7);
  CHECK(check_flag(wide));
}

TEST_CASE("m-natural completion") {
  Fixtures f = fixtures();
  std::vector<MConvexSet> completed = complete_flag({f.flag_R, f.flag_Q, f.flag_P});
  MnatFlag mn = mnat_completion(completed);
  REQUIRE(mn.layers.size() == 5);
  CHECK(mn.layers[2] == f.flag_Q_tilde);
  CHECK(mn.layers[0] == f.flag_R);
  CHECK(mn.layers[4] == f.flag_P);
  CHECK(is_mnat_flag(mn.layers));
  // Layers of an existing M-natural set complete to themselves.
  std::vector<MConvexSet> tiers = layers(f.proj_R);
  MnatFlag again = mnat_completion(tiers);
  CHECK(again.layers == tiers);
  // Containment of the original flag in its completion, pointwise.
  for (std::size_t i = 0; i < completed.size(); ++i)
    for (const Point& x : completed[i].points()) CHECK(mn.layers[i].contains(x));
}

TEST_CASE("m-natural flag detection") {
  Fixtures f = fixtures();
  std::vector<MConvexSet> completed = complete_flag({f.flag_R, f.flag_Q, f.flag_P});
  CHECK_FALSE(is_mnat_flag(completed));
  CHECK(is_mnat_flag(layers(f.proj_R)));
  CHECK(is_mnat_flag(mnat_completion(completed).layers));
}

TEST_CASE("layers of generated m-natural sets form flags") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    MNatSet r = random_mnat(seed * 31 + 7, 2 + static_cast<int>(seed % 2), 2);
    std::vector<MConvexSet> tiers = layers(r);
    CHECK(check_flag(tiers));
    CHECK(is_mnat_flag(tiers));
  }
}

TEST_CASE("completions of generated flags") {
  Rng rng(808);
  int done = 0;
  while (done < 20) {
    int n = 2 + static_cast<int>(rng.uniform(0, 2));
    auto [p, q] = gen_quotient_pair(rng.next(), n, 2);
    if (p.rank() == q.rank()) continue;
    std::vector<MConvexSet> flag{submodular_to_set(q), submodular_to_set(p)};
    std::vector<MConvexSet> completed = complete_flag(flag);
    CHECK(check_flag(completed));
    MnatFlag mn = mnat_completion(completed);
    CHECK(is_mnat_flag(mn.layers));
    CHECK(check_mnat_convex(std::vector<Point>(mn.union_set.points().begin(),
                                               mn.union_set.points().end())));
    for (std::size_t i = 0; i < completed.size(); ++i)
      for (const Point& x : completed[i].points()) CHECK(mn.layers[i].contains(x));
    ++done;
  }
}
