#pragma once

#include "mcq/mconvex.hpp"

namespace mcq {

/// Surjection phi: V -> U given as an array of targets; induces the
/// fiberwise coordinate-summing projection.
struct Surjection {
  std::vector<int> map;  // size |V|, entries in [0, codomain)
  int codomain = 0;

  int domain() const { return static_cast<int>(map.size()); }
  std::vector<std::vector<int>> fibers() const;
  void validate() const;
};

/// Data certifying how a lifted set projects back: P = pi_phi(lifted) + v,
/// with the lift confined to the box [box_lo, box_hi] on V.
struct LiftCertificate {
  Surjection phi;
  Point v;       // translation on U
  Point box_lo;  // box on V
  Point box_hi;
};

Point project_phi(const Point& y, const Surjection& phi, const Point& v);
MConvexSet project_phi(const MConvexSet& s, const GroundSet& target,
                       const Surjection& phi, const Point& v);

/// { y in box : pi_phi(y) + v in P }.
MConvexSet box_lift(const MConvexSet& p, const Point& box_lo, const Point& box_hi,
                    const Surjection& phi, const Point& v,
                    Certify certify = Certify::no);

/// Number of box-lift points without materializing them.
Int box_lift_size(const MConvexSet& p, const Point& box_lo, const Point& box_hi,
                  const Surjection& phi, const Point& v);

struct Lift {
  MConvexSet set;
  LiftCertificate cert;
};

/// Canonical matroid lift over unit-interval fibers of size b_i (at least one
/// pinned coordinate when b_i = 0).
Lift matroid_lift(const MConvexSet& p, Certify certify = Certify::no);

/// Canonical k-polymatroid lift with fiber intervals [0,k]^(m_i) x [0,r_i]
/// for b_i = m_i k + r_i, 0 < r_i <= k.
Lift k_polymatroid_lift(const MConvexSet& p, Int k, Certify certify = Certify::no);

struct CompatibleLifts {
  MConvexSet m;  // lift of P
  MConvexSet n;  // lift of Q
  LiftCertificate cert;
};

/// Matroid lifts of P and Q through one shared box, surjection and
/// translation (the joint bounding box of P and Q).
CompatibleLifts compatible_lifts(const MConvexSet& p, const MConvexSet& q,
                                 Certify certify = Certify::no);

/// Ground size |V| the compatible matroid lift of P and Q would use.
int compatible_lift_ground(const MConvexSet& p, const MConvexSet& q);

/// Product of per-point lift counts, for size capping before materializing.
Int compatible_lift_sizes(const MConvexSet& p, const MConvexSet& q, Int& m_size,
                          Int& n_size);

}  // namespace mcq
