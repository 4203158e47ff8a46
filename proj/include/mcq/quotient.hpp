#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "mcq/lift.hpp"
#include "mcq/linking.hpp"
#include "mcq/mconvex.hpp"

namespace mcq {

/// Size caps for the factorial and lift-size sweeps. Exceeding a cap yields a
/// skipped verdict, never a guess. Overridable through MCQ_CAPS
/// ("perm=8,lift=16,sweep=9,pairpts=250000,atlas=2000").
struct Caps {
  int perm_n = 8;              // vertex sweeps over n! orders
  int lift_ground = 16;        // |V| for membership-style lift checks
  int sweep_ground = 9;        // |V| when a lifted vertex sweep is requested
  Int lift_pair_points = 250000;  // |M| * |N| bound before materializing lifts
  Int atlas_dom = 2000;        // |dom f| * |dom g| bound for minimizer atlases

  static Caps from_env();
};

enum class Verdict { true_, false_, skipped };

struct CheckResult {
  Verdict verdict = Verdict::skipped;
  std::string note;  // skip reason, or how a negative verdict was decided

  static CheckResult yes() { return {Verdict::true_, ""}; }
  static CheckResult no(std::string n = "") { return {Verdict::false_, std::move(n)}; }
  static CheckResult skip(std::string n) { return {Verdict::skipped, std::move(n)}; }
};

/// (1) compliant functions: q(Y) - q(X) <= p(Y) - p(X) for nested X, Y.
bool check_compliant(const SubmodularFn& p, const SubmodularFn& q);

/// (2) containment of greedy vertices over all n! orders.
CheckResult check_vertex_containment(const SubmodularFn& p, const SubmodularFn& q,
                                     const Caps& caps = {});

/// (3) submodular polyhedron containment for all contractions.
bool check_contraction_containment(const SubmodularFn& p, const SubmodularFn& q);

/// Lattice points of the generalized polymatroid sandwich between q# and p.
MNatSet gpoly_points(const SubmodularFn& p, const SubmodularFn& q);

/// (4) the sandwich set exists, is M-natural-convex, and has B(p), B(q) as
/// top and bottom layers.
bool check_top_bottom(const SubmodularFn& p, const SubmodularFn& q);

/// (5) single-element deletion-contraction witness: a submodular table on
/// E + {e} whose deletion realizes p and contraction realizes q.
SubmodularFn deletion_contraction_witness(const SubmodularFn& p, const SubmodularFn& q);
bool verify_deletion_contraction(const SubmodularFn& witness, const SubmodularFn& p,
                                 const SubmodularFn& q);

/// (6) asymmetric exchange between the point sets.
bool check_exchange(const MConvexSet& p, const MConvexSet& q);

/// (7) induction witness: linking set on E x {e} plus the selector point.
struct InductionWitness {
  LinkingSet gamma;
  MConvexSet w;
};
InductionWitness induction_witness(const SubmodularFn& p, const SubmodularFn& q);
bool verify_induction(const InductionWitness& wit, const SubmodularFn& p,
                      const SubmodularFn& q);

/// (8) Green right-preorder witness: square linking sets with Gamma * X = Delta.
struct GreenWitness {
  LinkingSet gamma;
  LinkingSet delta;
  LinkingSet x;
};
GreenWitness green_witness(const SubmodularFn& p, const SubmodularFn& q);
bool verify_green(const GreenWitness& wit, const SubmodularFn& p, const SubmodularFn& q);

/// (9) compatible matroid lifts form a matroid quotient.
CheckResult check_matroid_lift_quotient(const MConvexSet& p, const MConvexSet& q,
                                        const Caps& caps = {},
                                        std::optional<CompatibleLifts>* out = nullptr);

/// (10) two-level vertex shape of the lifted Minkowski sum over all orders.
CheckResult check_compressed_quotient(const MConvexSet& p, const MConvexSet& q,
                                      const Caps& caps = {},
                                      std::optional<CompatibleLifts>* out = nullptr);

struct QuotientWitnesses {
  std::optional<MNatSet> sandwich;                  // for (4)
  std::optional<SubmodularFn> single_element_lift;  // for (5)
  std::optional<InductionWitness> induction;        // for (7)
  std::optional<GreenWitness> green;                // for (8)
  std::optional<CompatibleLifts> lifts;             // for (9)/(10)
};

struct QuotientReport {
  std::map<int, CheckResult> verdicts;
  QuotientWitnesses witnesses;

  bool all_agree() const;
  std::optional<bool> common_verdict() const;
};

/// Runs the requested characterizations (1..10; empty set means all) and
/// asserts agreement of the non-skipped verdicts.
QuotientReport quotient_suite(const SubmodularFn& p, const SubmodularFn& q,
                              const Caps& caps = {}, std::vector<int> methods = {});

}  // namespace mcq
