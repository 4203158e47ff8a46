#pragma once

#include <cstdint>
#include <map>

#include "mcq/linking.hpp"
#include "mcq/mconvex.hpp"
#include "mcq/mfunc.hpp"

namespace mcq {

/// Deterministic generator state. All draws go through explicit modular
/// arithmetic so outputs are a pure function of (seed, parameters).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next();
  Int uniform(Int lo, Int hi);  // inclusive
  Rng split(std::uint64_t stream);

 private:
  std::uint64_t state_;
};

/// Sum of certified building blocks: modular vectors, budget functions and
/// small matroid rank functions, scaled by `scale`.
SubmodularFn gen_submodular(std::uint64_t seed, int n, Int scale);

/// Compliant pair obtained as deletion and contraction tables of a draw on
/// one extra element.
std::pair<SubmodularFn, SubmodularFn> gen_quotient_pair(std::uint64_t seed, int n,
                                                        Int scale);

/// Rejection-sampled non-compliant pair with rank(p) > rank(q).
std::pair<SubmodularFn, SubmodularFn> gen_non_quotient_pair(std::uint64_t seed, int n,
                                                            Int scale);

/// Separable convex values on a given domain; curvature 0 gives the
/// indicator.
MFunc gen_m_func(std::uint64_t seed, const MConvexSet& p, Int curvature);

/// Named worked-example instances; every fixture passes its type's
/// certification where the source data is itself certified.
struct Fixtures {
  MConvexSet demo_P;        // running example, 8 points in Z^3
  MConvexSet demo_Q;        // companion quotient, 6 points
  SubmodularFn demo_p;      // table of demo_P
  SubmodularFn demo_q;      // table of demo_Q
  SubmodularFn demo_r;      // one-element lift table realizing the pair
  MNatSet proj_R;           // projection of demo_P onto two coordinates
  MConvexSet flag_P;        // two-dimensional flag chain: top
  MConvexSet flag_Q;        // middle
  MConvexSet flag_R;        // bottom
  MConvexSet flag_P_prime;  // completion layer between flag_Q and flag_P
  MConvexSet flag_Q_prime;  // completion layer between flag_R and flag_Q
  MConvexSet flag_Q_tilde;  // middle layer of the full sandwich
  BipartiteGraph k32;       // complete bipartite graph on 3 + 2 nodes
  MConvexSet k32_W;         // induced set on the right side
  MConvexSet k32_induced;   // expected induction through the subsets linking set
  MFunc twopoint_f;         // single point (1,1), value 0
  MFunc twopoint_r;         // middle layer points (1,0), (0,1), value 1 each
  MFunc twopoint_g;         // single point (0,0), value 0
};

Fixtures fixtures();

/// Names accepted by fixture_json / the CLI `fixtures` command.
std::vector<std::string> fixture_names();

}  // namespace mcq
