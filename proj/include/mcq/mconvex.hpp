#pragma once

#include <vector>

#include "mcq/base.hpp"

namespace mcq {

/// Whether a constructor should run the (possibly expensive) axiom check.
/// Generators build candidates unchecked and certify afterwards; the CLI
/// always certifies.
enum class Certify { no, yes };

bool check_m_convex(const std::vector<Point>& pts);
bool check_mnat_convex(const std::vector<Point>& pts);

/// Finite set of lattice points with constant coordinate sum satisfying the
/// symmetric exchange axiom; the lattice points of an integral generalized
/// permutohedron.
class MConvexSet {
 public:
  static MConvexSet make(GroundSet g, std::vector<Point> pts, Certify certify);

  const GroundSet& ground() const { return ground_; }
  const PointSet& points() const { return points_; }
  Int rank() const { return rank_; }
  bool contains(const Point& p) const { return points_.contains(p); }
  std::size_t size() const { return points_.size(); }

  bool operator==(const MConvexSet& o) const {
    return ground_ == o.ground_ && points_ == o.points_;
  }

 private:
  MConvexSet(GroundSet g, PointSet pts, Int rank)
      : ground_(std::move(g)), points_(std::move(pts)), rank_(rank) {}
  GroundSet ground_;
  PointSet points_;
  Int rank_ = 0;
};

/// Finite set of lattice points satisfying the augmentation axiom across
/// coordinate-sum levels and the exchange axiom within levels; the lattice
/// points of an integral generalized polymatroid.
class MNatSet {
 public:
  static MNatSet make(GroundSet g, std::vector<Point> pts, Certify certify);

  const GroundSet& ground() const { return ground_; }
  const PointSet& points() const { return points_; }
  bool contains(const Point& p) const { return points_.contains(p); }
  std::size_t size() const { return points_.size(); }
  Int min_sum() const { return min_sum_; }
  Int max_sum() const { return max_sum_; }

  bool operator==(const MNatSet& o) const {
    return ground_ == o.ground_ && points_ == o.points_;
  }

 private:
  MNatSet(GroundSet g, PointSet pts, Int lo, Int hi)
      : ground_(std::move(g)), points_(std::move(pts)), min_sum_(lo), max_sum_(hi) {}
  GroundSet ground_;
  PointSet points_;
  Int min_sum_ = 0, max_sum_ = 0;
};

/// Dense integer table on all subsets of a ground set, indexed by bitmask.
/// Used for submodular functions, their supermodular duals and raw tables.
struct SetFn {
  GroundSet ground;
  std::vector<Int> table;  // size 2^n

  Int value(Mask a) const { return table[a]; }

  SetFn() = default;
  SetFn(GroundSet g, std::vector<Int> t) : ground(std::move(g)), table(std::move(t)) {
    if (table.size() != (std::size_t{1} << ground.size))
      throw UsageError("set function table size does not match ground set");
  }

  bool operator==(const SetFn& o) const { return ground == o.ground && table == o.table; }
};

bool check_submodular(const SetFn& f);
bool check_supermodular(const SetFn& f);

/// Integer submodular set function normalized to p(empty) = 0.
class SubmodularFn {
 public:
  static SubmodularFn make(SetFn fn, Certify certify);
  static SubmodularFn make(GroundSet g, std::vector<Int> table, Certify certify) {
    return make(SetFn(std::move(g), std::move(table)), certify);
  }

  const GroundSet& ground() const { return fn_.ground; }
  const SetFn& fn() const { return fn_; }
  Int value(Mask a) const { return fn_.value(a); }
  Int rank() const { return fn_.value(fn_.ground.full_mask()); }

  bool operator==(const SubmodularFn& o) const { return fn_ == o.fn_; }

 private:
  explicit SubmodularFn(SetFn fn) : fn_(std::move(fn)) {}
  SetFn fn_;
};

/// p(A) = max { x(A) : x in P }.
SubmodularFn set_to_submodular(const MConvexSet& p);

/// Lattice points of the base polyhedron B(p).
MConvexSet submodular_to_set(const SubmodularFn& p);

/// Dual supermodular table p#(A) = p(E) - p(E \ A).
SetFn dual(const SubmodularFn& p);
SetFn dual(const SetFn& p);

/// Greedy vertex for an explicit coordinate order; order[0] is maximized
/// first. Orders are 0-indexed internally.
Point greedy_vertex(const SubmodularFn& p, const std::vector<int>& order);

/// Deduplicated greedy vertices over all n! orders.
PointSet vertex_set(const SubmodularFn& p);

/// Partition of an M-natural-convex set by coordinate sum, ascending.
std::vector<MConvexSet> layers(const MNatSet& r);
MConvexSet top_layer(const MNatSet& r);
MConvexSet bottom_layer(const MNatSet& r);

/// Upper table max x(A) and lower table min x(A) of a finite point set;
/// for an M-natural-convex set these are the defining (submodular,
/// supermodular) pair of its generalized polymatroid.
SetFn upper_table(const GroundSet& g, const std::vector<Point>& pts);
SetFn lower_table(const GroundSet& g, const std::vector<Point>& pts);

/// Lattice points of { x : lower(A) <= x(A) <= upper(A) for all A }.
std::vector<Point> enumerate_gpolymatroid(const SetFn& upper, const SetFn& lower);

}  // namespace mcq
