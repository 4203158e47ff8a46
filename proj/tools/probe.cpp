#include <iostream>

#include "mcq/flags.hpp"
#include "mcq/generator.hpp"
#include "mcq/io.hpp"
#include "mcq/lift.hpp"
#include "mcq/linking.hpp"
#include "mcq/mfunc.hpp"
#include "mcq/quotient.hpp"
#include "mcq/selftest.hpp"
#include "mcq/set_ops.hpp"

using namespace mcq;

int main() {
  Fixtures f = fixtures();
  std::cout << "fixtures certified ok\n";

  // Tables from sets.
  std::cout << "p match: " << (set_to_submodular(f.demo_P) == f.demo_p) << "\n";
  std::cout << "q match: " << (set_to_submodular(f.demo_Q) == f.demo_q) << "\n";
  std::cout << "roundtrip P: " << (submodular_to_set(f.demo_p) == f.demo_P) << "\n";
  std::cout << "roundtrip Q: " << (submodular_to_set(f.demo_q) == f.demo_Q) << "\n";

  // Greedy vertex labels.
  Point v321 = greedy_vertex(f.demo_p, {2, 1, 0});
  Point v123 = greedy_vertex(f.demo_p, {0, 1, 2});
  std::cout << "greedy(3,2,1) = " << Json(v321).dump() << " expect [-1,0,2]\n";
  std::cout << "greedy(1,2,3) = " << Json(v123).dump() << " expect [1,1,-1]\n";
  std::cout << "vertex count p: " << vertex_set(f.demo_p).size() << " expect 5\n";
  std::cout << "vertex count q: " << vertex_set(f.demo_q).size() << " expect 3\n";

  // Projection of P is proj_R.
  MNatSet pr = project_onto(f.demo_P, 0b011, Certify::yes);
  std::cout << "projection matches: " << (pr == f.proj_R) << "\n";

  // Quotient suite on the running pair.
  Caps caps;
  QuotientReport rep = quotient_suite(f.demo_p, f.demo_q, caps);
  for (const auto& [id, res] : rep.verdicts)
    std::cout << "char " << id << ": "
              << (res.verdict == Verdict::true_    ? "true"
                  : res.verdict == Verdict::false_ ? "FALSE"
                                                   : "skipped(" + res.note + ")")
              << "\n";

  // K32 subsets linking set and induction.
  LinkingSet big = from_bipartite_subsets(f.k32);
  std::cout << "k32 subsets points: " << big.carrier().size() << "\n";
  std::cout << "k32 subsets m-convex: " << check_m_convex(std::vector<Point>(
                   big.carrier().points().begin(), big.carrier().points().end()))
            << "\n";
  MConvexSet ind = induce(f.k32_W, big, Certify::yes);
  std::cout << "k32 induction matches: " << (ind == f.k32_induced) << "\n";

  // Matchings variant is the unit-box restriction.
  LinkingSet match = from_bipartite_matchings(f.k32);
  std::cout << "k32 matchings points: " << match.carrier().size() << "\n";

  // Non-regularity fixture.
  LinkingSet gamma = nonregular_fixture();
  std::cout << "nonregular points: " << gamma.carrier().size() << "\n";
  std::cout << "nonregular m-convex: "
            << check_m_convex(std::vector<Point>(gamma.carrier().points().begin(),
                                                 gamma.carrier().points().end()))
            << "\n";
  LinkingSet gg = product(gamma, gamma, Certify::no);
  std::cout << "nonregular product size: " << gg.carrier().size() << "\n";

  // Flags.
  std::vector<MConvexSet> flag{f.flag_R, f.flag_Q, f.flag_P};
  std::cout << "flag check: " << check_flag(flag) << "\n";
  std::vector<MConvexSet> completed = complete_flag(flag);
  std::cout << "completed size: " << completed.size() << " expect 5\n";
  std::cout << "P' match: " << (completed[3] == f.flag_P_prime) << "\n";
  std::cout << "Q' match: " << (completed[1] == f.flag_Q_prime) << "\n";
  std::cout << "completed consecutive flag: " << check_flag(completed) << "\n";
  std::cout << "completed is mnat flag: " << is_mnat_flag(completed) << " expect 0\n";
  MnatFlag mn = mnat_completion(completed);
  std::cout << "Q~ match: " << (mn.layers[2] == f.flag_Q_tilde) << "\n";
  std::cout << "mnat flag layers: " << is_mnat_flag(mn.layers) << " expect 1\n";

  // Truncation agreement.
  MConvexSet tr = truncate(f.flag_P, 1);
  std::cout << "truncate(flag_P) == P': " << (tr == f.flag_P_prime) << "\n";
  MConvexSet tr2 = truncate_via_induction(f.flag_P);
  std::cout << "truncate_via_induction == P': " << (tr2 == f.flag_P_prime) << "\n";

  // Lifts.
  Lift ml = matroid_lift(f.flag_P, Certify::yes);
  std::cout << "matroid lift size: " << ml.set.size() << " expect 6\n";
  CompatibleLifts cl = compatible_lifts(f.flag_P, f.flag_Q, Certify::yes);
  std::cout << "compatible ground: " << cl.cert.phi.domain() << " expect 6\n";
  std::cout << "lift exchange: " << check_exchange(cl.m, cl.n) << "\n";

  // Functions: the two-point chain.
  std::vector<MFunc> chain{f.twopoint_g, f.twopoint_r, f.twopoint_f};
  FlagConstants fc = flag_constants(chain);
  std::cout << "c2 = " << rat_to_string(fc.constants[2]) << " expect -2\n";

  // Atlas on indicators of the running pair.
  MFunc fp = gen_m_func(1, f.demo_P, 0);
  MFunc fq = gen_m_func(2, f.demo_Q, 0);
  MinimizerAtlas atlas = minimizer_atlas(fp, fq, caps);
  std::cout << "atlas entries: " << atlas.entries.size() << "\n";
  CheckResult d = quotient_D(fp, fq, caps);
  std::cout << "quotient_D(indicators): " << (d.verdict == Verdict::true_) << "\n";

  std::cout << run_selftest(42, 5, 5, 3, 2, caps);
  return 0;
}
