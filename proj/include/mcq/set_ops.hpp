#pragma once

#include "mcq/mconvex.hpp"

namespace mcq {

/// Controls the agreement assertion between an operation's submodular-formula
/// route and its point-level filter route. With Verify::on both routes run
/// and a mismatch throws; generators may switch it off for speed.
enum class Verify { off, on };

/// Points of P vanishing outside V, written in the coordinates of V.
MConvexSet restrict_to(const MConvexSet& p, Mask v);

/// Coordinate projection of P onto V.
MNatSet project_onto(const MConvexSet& p, Mask v, Certify certify = Certify::no);

MConvexSet minkowski_sum(const MConvexSet& a, const MConvexSet& b);
MConvexSet translate(const MConvexSet& p, const Point& v);

/// k-fold truncation: lattice points k layers below P in its submodular
/// polyhedron. Computed through the submodular-function formula.
MConvexSet truncate(const MConvexSet& p, Int k, Verify verify = Verify::on);
SubmodularFn truncate_table(const SubmodularFn& p, Int k);

/// k-fold elongation, dually above P in its supermodular polyhedron.
MConvexSet elongate(const MConvexSet& p, Int k, Verify verify = Verify::on);
SubmodularFn elongate_table(const SubmodularFn& p, Int k);

/// Point-level routes, used as the second half of the dual-route agreement.
std::vector<Point> truncate_points(const MConvexSet& p, Int k);
std::vector<Point> elongate_points(const MConvexSet& p, Int k);

/// Result of a box or plank intersection: the point set together with the
/// transformed upper (submodular) and lower (supermodular) tables.
struct GPolyIntersection {
  MNatSet set;
  SetFn upper;
  SetFn lower;
};

GPolyIntersection intersect_box(const MNatSet& r, const Point& a, const Point& b,
                                Verify verify = Verify::on);
GPolyIntersection intersect_plank(const MNatSet& r, Int alpha, Int beta,
                                  Verify verify = Verify::on);

/// Minor of P with respect to U at level k: the layer of the projection onto
/// V = E \ U with x(V) = k. Returned with its submodular table.
struct Minor {
  MConvexSet set;
  SubmodularFn table;
};

Minor basic_minor(const MConvexSet& p, Mask u, Int k, Verify verify = Verify::on);
Minor deletion(const MConvexSet& p, Mask u, Verify verify = Verify::on);
Minor contraction(const MConvexSet& p, Mask u, Verify verify = Verify::on);

/// Ground set restricted to the elements of mask v (labels carried over).
GroundSet subground(const GroundSet& g, Mask v);

/// Coordinates of x selected by mask v, in ascending element order.
Point subpoint(const Point& x, Mask v);

}  // namespace mcq
