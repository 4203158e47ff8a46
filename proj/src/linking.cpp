#include "mcq/linking.hpp"

#include <algorithm>
#include <map>

#include "mcq/set_ops.hpp"

namespace mcq {

void BipartiteGraph::validate() const {
  if (left_size < 1 || right_size < 1)
    throw UsageError("bipartite graph needs nonempty node sets");
  for (auto [v, u] : edges)
    if (v < 0 || v >= left_size || u < 0 || u >= right_size)
      throw UsageError("bipartite graph edge endpoint out of range");
  if (!weights.empty() && weights.size() != edges.size())
    throw UsageError("bipartite graph weight count does not match edge count");
}

namespace {

GroundSet joined_ground(const GroundSet& l, const GroundSet& r) {
  if (l.labels.empty() && r.labels.empty()) return GroundSet(l.size + r.size);
  std::vector<std::string> labels;
  for (int i = 0; i < l.size; ++i) labels.push_back(l.element_name(i) + "|L");
  for (int i = 0; i < r.size; ++i) labels.push_back(r.element_name(i) + "|R");
  return GroundSet(l.size + r.size, std::move(labels));
}

}  // namespace

LinkingSet LinkingSet::make(GroundSet left, GroundSet right, std::vector<Point> pts,
                            Certify certify) {
  GroundSet g = joined_ground(left, right);
  MConvexSet carrier = MConvexSet::make(std::move(g), std::move(pts), certify);
  return LinkingSet(std::move(left), std::move(right), std::move(carrier));
}

MNatSet LinkingSet::left_set(Certify certify) const {
  Mask v = (Mask{1} << left_.size) - 1;
  return project_onto(carrier_, v, certify);
}

MNatSet LinkingSet::right_set(Certify certify) const {
  Mask u = ((Mask{1} << width()) - 1) & ~((Mask{1} << left_.size) - 1);
  return project_onto(carrier_, u, certify);
}

namespace {

std::vector<Point> induce_points(const PointSet& w, const LinkingSet& gamma) {
  std::vector<Point> out;
  for (const Point& p : gamma.carrier().points()) {
    Point y = gamma.right_part(p);
    for (Int& c : y) c = -c;
    if (w.contains(y)) out.push_back(gamma.left_part(p));
  }
  if (out.empty()) throw EmptyResultError("induction is empty");
  return out;
}

}  // namespace

MConvexSet induce(const MConvexSet& w, const LinkingSet& gamma, Certify certify) {
  if (w.ground().size != gamma.right_ground().size)
    throw UsageError("induce: W does not live on the right ground set");
  return MConvexSet::make(gamma.left_ground(), induce_points(w.points(), gamma), certify);
}

MNatSet induce(const MNatSet& w, const LinkingSet& gamma, Certify certify) {
  if (w.ground().size != gamma.right_ground().size)
    throw UsageError("induce: W does not live on the right ground set");
  return MNatSet::make(gamma.left_ground(), induce_points(w.points(), gamma), certify);
}

LinkingSet product(const LinkingSet& gamma, const LinkingSet& delta, Certify certify) {
  if (gamma.right_ground().size != delta.left_ground().size)
    throw UsageError("product: middle ground sets do not match");
  // Hash-join on the middle coordinates: Gamma's right value y = -s must
  // appear as Delta's left part.
  std::map<Point, std::vector<Point>> delta_by_left;
  for (const Point& q : delta.carrier().points())
    delta_by_left[delta.left_part(q)].push_back(delta.right_part(q));
  std::vector<Point> out;
  for (const Point& p : gamma.carrier().points()) {
    Point y = gamma.right_part(p);
    for (Int& c : y) c = -c;
    auto it = delta_by_left.find(y);
    if (it == delta_by_left.end()) continue;
    Point x = gamma.left_part(p);
    for (const Point& z : it->second) {
      Point joined = x;
      joined.insert(joined.end(), z.begin(), z.end());
      out.push_back(std::move(joined));
    }
  }
  if (out.empty()) throw EmptyResultError("linking product is empty");
  return LinkingSet::make(gamma.left_ground(), delta.right_ground(), std::move(out),
                          certify);
}

namespace {

// Enumerates the box [a, b] componentwise.
void for_each_box_point(const Point& a, const Point& b,
                        const std::function<void(const Point&)>& f) {
  Point x = a;
  const int n = static_cast<int>(a.size());
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      f(x);
      return;
    }
    for (Int v = a[static_cast<std::size_t>(i)]; v <= b[static_cast<std::size_t>(i)]; ++v) {
      x[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

std::pair<Point, Point> bounding_box(const MConvexSet& p) {
  Point lo = *p.points().begin(), hi = lo;
  for (const Point& x : p.points())
    for (std::size_t i = 0; i < x.size(); ++i) {
      lo[i] = std::min(lo[i], x[i]);
      hi[i] = std::max(hi[i], x[i]);
    }
  return {lo, hi};
}

}  // namespace

LinkingSet identity_on_box(const GroundSet& g, const Point& a, const Point& b) {
  require_width(a, g.size, "identity_on_box");
  require_width(b, g.size, "identity_on_box");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) throw UsageError("identity_on_box: empty box");
  std::vector<Point> pts;
  for_each_box_point(a, b, [&](const Point& x) {
    Point p = x;
    for (Int c : x) p.push_back(-c);
    pts.push_back(std::move(p));
  });
  return LinkingSet::make(g, g, std::move(pts), Certify::no);
}

LinkingSet from_bipartite_matchings(const BipartiteGraph& g) {
  g.validate();
  std::vector<Point> pts;
  const int m = static_cast<int>(g.edges.size());
  std::vector<bool> v_used(static_cast<std::size_t>(g.left_size), false);
  std::vector<bool> u_used(static_cast<std::size_t>(g.right_size), false);
  Point cur(static_cast<std::size_t>(g.left_size + g.right_size), 0);
  auto rec = [&](auto&& self, int e) -> void {
    if (e == m) {
      pts.push_back(cur);
      return;
    }
    self(self, e + 1);  // skip edge e
    auto [v, u] = g.edges[static_cast<std::size_t>(e)];
    if (!v_used[static_cast<std::size_t>(v)] && !u_used[static_cast<std::size_t>(u)]) {
      v_used[static_cast<std::size_t>(v)] = u_used[static_cast<std::size_t>(u)] = true;
      cur[static_cast<std::size_t>(v)] += 1;
      cur[static_cast<std::size_t>(g.left_size + u)] -= 1;
      self(self, e + 1);
      cur[static_cast<std::size_t>(v)] -= 1;
      cur[static_cast<std::size_t>(g.left_size + u)] += 1;
      v_used[static_cast<std::size_t>(v)] = u_used[static_cast<std::size_t>(u)] = false;
    }
  };
  rec(rec, 0);
  return LinkingSet::make(GroundSet(g.left_size), GroundSet(g.right_size), std::move(pts),
                          Certify::no);
}

LinkingSet from_bipartite_subsets(const BipartiteGraph& g) {
  g.validate();
  if (g.edges.size() > 20)
    throw UsageError("from_bipartite_subsets: too many edges for subset enumeration");
  std::vector<Point> pts;
  const std::size_t m = g.edges.size();
  for (std::size_t sub = 0; sub < (std::size_t{1} << m); ++sub) {
    Point cur(static_cast<std::size_t>(g.left_size + g.right_size), 0);
    for (std::size_t e = 0; e < m; ++e)
      if (sub & (std::size_t{1} << e)) {
        cur[static_cast<std::size_t>(g.edges[e].first)] += 1;
        cur[static_cast<std::size_t>(g.left_size + g.edges[e].second)] -= 1;
      }
    pts.push_back(std::move(cur));
  }
  return LinkingSet::make(GroundSet(g.left_size), GroundSet(g.right_size), std::move(pts),
                          Certify::no);
}

MConvexSet translate_via_induction(const MConvexSet& p, const Point& v) {
  require_width(v, p.ground().size, "translate_via_induction");
  auto [lo, hi] = bounding_box(p);
  // Bounded restriction of { (x + v, -x) }: pairs with right value inside the
  // box of P cover every pair induction can use.
  std::vector<Point> pts;
  for_each_box_point(lo, hi, [&](const Point& x) {
    Point stored = point_add(x, v);
    for (Int c : x) stored.push_back(-c);
    pts.push_back(std::move(stored));
  });
  LinkingSet gamma =
      LinkingSet::make(p.ground(), p.ground(), std::move(pts), Certify::no);
  return induce(p, gamma);
}

MConvexSet truncate_via_induction(const MConvexSet& p) {
  auto [lo, hi] = bounding_box(p);
  const int n = p.ground().size;
  std::vector<Point> pts;
  for_each_box_point(lo, hi, [&](const Point& y) {
    for (int i = 0; i < n; ++i) {
      Point stored = y;
      stored[static_cast<std::size_t>(i)] -= 1;
      for (Int c : y) stored.push_back(-c);
      pts.push_back(std::move(stored));
    }
  });
  LinkingSet gamma =
      LinkingSet::make(p.ground(), p.ground(), std::move(pts), Certify::no);
  return induce(p, gamma);
}

LinkingSet nonregular_fixture() {
  std::vector<Point> pts;
  pts.push_back(Point(6, 0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Point p(6, 0);
      p[static_cast<std::size_t>(i)] = 1;
      p[static_cast<std::size_t>(3 + j)] = -1;
      pts.push_back(std::move(p));
    }
  return LinkingSet::make(GroundSet(3), GroundSet(3), std::move(pts), Certify::no);
}

}  // namespace mcq
