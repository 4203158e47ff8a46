#pragma once

#include <utility>

#include "mcq/mconvex.hpp"
#include "mcq/rational.hpp"

namespace mcq {

/// Bipartite graph on disjoint node sets V (left) and U (right); edges are
/// 0-indexed (v, u) pairs. Weights, when present, are used by the linking
/// function constructions.
struct BipartiteGraph {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Rat> weights;  // empty or one per edge

  void validate() const;
};

/// M-convex set on a split ground set V | U. A stored point is (x, -y) for
/// the linking pair (x <- y): right-side coordinates carry the sign they were
/// given, and induction matches y against the negated right part.
class LinkingSet {
 public:
  static LinkingSet make(GroundSet left, GroundSet right, std::vector<Point> pts,
                         Certify certify);

  const GroundSet& left_ground() const { return left_; }
  const GroundSet& right_ground() const { return right_; }
  const MConvexSet& carrier() const { return carrier_; }
  int width() const { return left_.size + right_.size; }

  Point left_part(const Point& p) const {
    return Point(p.begin(), p.begin() + left_.size);
  }
  Point right_part(const Point& p) const {
    return Point(p.begin() + left_.size, p.end());
  }

  MNatSet left_set(Certify certify = Certify::no) const;
  MNatSet right_set(Certify certify = Certify::no) const;

  bool operator==(const LinkingSet& o) const {
    return left_ == o.left_ && right_ == o.right_ && carrier_ == o.carrier_;
  }

 private:
  LinkingSet(GroundSet l, GroundSet r, MConvexSet c)
      : left_(std::move(l)), right_(std::move(r)), carrier_(std::move(c)) {}
  GroundSet left_, right_;
  MConvexSet carrier_;
};

/// { x : (x, -y) in Gamma for some y in W }.
MConvexSet induce(const MConvexSet& w, const LinkingSet& gamma,
                  Certify certify = Certify::no);
MNatSet induce(const MNatSet& w, const LinkingSet& gamma, Certify certify = Certify::no);

/// Composition { (x, -z) : (x, -y) in Gamma, (y, -z) in Delta for some y }.
LinkingSet product(const LinkingSet& gamma, const LinkingSet& delta,
                   Certify certify = Certify::no);

/// { (x, -x) : a <= x <= b }; acts as the identity on any set inside [a, b].
LinkingSet identity_on_box(const GroundSet& g, const Point& a, const Point& b);

/// Matchings linking set: one stored point (e_A, -e_B) per matching.
LinkingSet from_bipartite_matchings(const BipartiteGraph& g);

/// Edge-subset linking set: the stored points sum (e_v, -e_u) over a subset.
LinkingSet from_bipartite_subsets(const BipartiteGraph& g);

/// Translation and truncation expressed through bounded restrictions of the
/// structured linking sets; must agree with the direct operations.
MConvexSet translate_via_induction(const MConvexSet& p, const Point& v);
MConvexSet truncate_via_induction(const MConvexSet& p);

/// The 7-point counterexample used in the non-regularity argument for the
/// linking-set monoid; shipped as a fixture for product sanity tests.
LinkingSet nonregular_fixture();

}  // namespace mcq
