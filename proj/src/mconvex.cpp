#include "mcq/mconvex.hpp"

#include <algorithm>
#include <numeric>

namespace mcq {

namespace {

bool exchange_within_layer(const PointSet& s, const Point& x, const Point& y) {
  Mask plus = supp_plus(x, y);
  Mask minus = supp_minus(x, y);
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (!(plus & (Mask{1} << i))) continue;
    bool found = false;
    for (int j = 0; j < static_cast<int>(x.size()) && !found; ++j) {
      if (!(minus & (Mask{1} << j))) continue;
      Point xs = x;
      xs[static_cast<std::size_t>(i)] -= 1;
      xs[static_cast<std::size_t>(j)] += 1;
      if (!s.contains(xs)) continue;
      Point ys = y;
      ys[static_cast<std::size_t>(i)] += 1;
      ys[static_cast<std::size_t>(j)] -= 1;
      if (s.contains(ys)) found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool check_m_convex(const std::vector<Point>& pts) {
  if (pts.empty()) throw UsageError("check_m_convex: empty point set");
  const std::size_t n = pts.front().size();
  for (const Point& p : pts)
    if (p.size() != n) throw UsageError("check_m_convex: point widths differ");
  PointSet s{pts};
  const auto& v = s.points();
  Int sum0 = coord_sum(v.front());
  for (const Point& p : v)
    if (coord_sum(p) != sum0) return false;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (a == b) continue;
      if (!exchange_within_layer(s, v[a], v[b])) return false;
    }
  return true;
}

bool check_mnat_convex(const std::vector<Point>& pts) {
  if (pts.empty()) throw UsageError("check_mnat_convex: empty point set");
  const std::size_t n = pts.front().size();
  for (const Point& p : pts)
    if (p.size() != n) throw UsageError("check_mnat_convex: point widths differ");
  PointSet s{pts};
  const auto& v = s.points();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (a == b) continue;
      const Point& x = v[a];
      const Point& y = v[b];
      Int sx = coord_sum(x), sy = coord_sum(y);
      if (sx > sy) {
        // augmentation: some i with x_i > y_i steps x down and y up inside S
        Mask plus = supp_plus(x, y);
        bool found = false;
        for (int i = 0; i < static_cast<int>(n) && !found; ++i) {
          if (!(plus & (Mask{1} << i))) continue;
          Point xs = x;
          xs[static_cast<std::size_t>(i)] -= 1;
          if (!s.contains(xs)) continue;
          Point ys = y;
          ys[static_cast<std::size_t>(i)] += 1;
          if (s.contains(ys)) found = true;
        }
        if (!found) return false;
      } else if (sx == sy) {
        if (!exchange_within_layer(s, x, y)) return false;
      }
    }
  return true;
}

MConvexSet MConvexSet::make(GroundSet g, std::vector<Point> pts, Certify certify) {
  if (pts.empty()) throw EmptyResultError("M-convex set must be nonempty");
  for (const Point& p : pts) require_width(p, g.size, "MConvexSet");
  PointSet set{std::move(pts)};
  Int rank = coord_sum(set.points().front());
  for (const Point& p : set)
    if (coord_sum(p) != rank)
      throw UsageError("M-convex set: points have differing coordinate sums");
  if (certify == Certify::yes && !check_m_convex(set.points()))
    throw UsageError("point set violates the M-convex exchange axiom");
  return MConvexSet(std::move(g), std::move(set), rank);
}

MNatSet MNatSet::make(GroundSet g, std::vector<Point> pts, Certify certify) {
  if (pts.empty()) throw EmptyResultError("M-natural-convex set must be nonempty");
  for (const Point& p : pts) require_width(p, g.size, "MNatSet");
  PointSet set{std::move(pts)};
  if (certify == Certify::yes && !check_mnat_convex(set.points()))
    throw UsageError("point set violates the M-natural-convex axioms");
  Int lo = coord_sum(set.points().front());
  Int hi = lo;
  for (const Point& p : set) {
    Int s = coord_sum(p);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return MNatSet(std::move(g), std::move(set), lo, hi);
}

bool check_submodular(const SetFn& f) {
  const Mask full = f.ground.full_mask();
  for (Mask a = 0; a <= full; ++a)
    for (Mask b = a; b <= full; ++b)
      if (f.value(a | b) + f.value(a & b) > f.value(a) + f.value(b)) return false;
  return true;
}

bool check_supermodular(const SetFn& f) {
  const Mask full = f.ground.full_mask();
  for (Mask a = 0; a <= full; ++a)
    for (Mask b = a; b <= full; ++b)
      if (f.value(a | b) + f.value(a & b) < f.value(a) + f.value(b)) return false;
  return true;
}

SubmodularFn SubmodularFn::make(SetFn fn, Certify certify) {
  if (fn.value(0) != 0) throw UsageError("submodular table must have value 0 on the empty set");
  if (certify == Certify::yes && !check_submodular(fn))
    throw UsageError("table violates the submodular inequalities");
  return SubmodularFn(std::move(fn));
}

SubmodularFn set_to_submodular(const MConvexSet& p) {
  const int n = p.ground().size;
  const Mask full = p.ground().full_mask();
  std::vector<Int> table(std::size_t{1} << n, 0);
  for (Mask a = 1; a <= full; ++a) {
    bool first = true;
    Int best = 0;
    for (const Point& x : p.points()) {
      Int v = coord_sum(x, a);
      if (first || v > best) best = v;
      first = false;
    }
    table[a] = best;
  }
  return SubmodularFn::make(SetFn(p.ground(), std::move(table)), Certify::no);
}

SetFn upper_table(const GroundSet& g, const std::vector<Point>& pts) {
  const Mask full = g.full_mask();
  std::vector<Int> table(std::size_t{1} << g.size, 0);
  for (Mask a = 1; a <= full; ++a) {
    Int best = coord_sum(pts.front(), a);
    for (const Point& x : pts) best = std::max(best, coord_sum(x, a));
    table[a] = best;
  }
  return SetFn(g, std::move(table));
}

SetFn lower_table(const GroundSet& g, const std::vector<Point>& pts) {
  const Mask full = g.full_mask();
  std::vector<Int> table(std::size_t{1} << g.size, 0);
  for (Mask a = 1; a <= full; ++a) {
    Int best = coord_sum(pts.front(), a);
    for (const Point& x : pts) best = std::min(best, coord_sum(x, a));
    table[a] = best;
  }
  return SetFn(g, std::move(table));
}

std::vector<Point> enumerate_gpolymatroid(const SetFn& upper, const SetFn& lower) {
  const int n = upper.ground.size;
  if (lower.ground.size != n) throw UsageError("enumerate_gpolymatroid: ground sets differ");
  std::vector<Point> out;
  // Per-coordinate box from singleton constraints; depth-first assignment with
  // mask checks as soon as every element of a mask is fixed.
  Point x(static_cast<std::size_t>(n), 0);
  std::vector<Int> sums(std::size_t{1} << n, 0);
  std::vector<std::vector<Mask>> closing(static_cast<std::size_t>(n));
  for (Mask a = 1; a <= upper.ground.full_mask(); ++a) {
    int top = 31 - std::countl_zero(a);
    closing[static_cast<std::size_t>(top)].push_back(a);
  }
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      out.push_back(x);
      return;
    }
    Mask bit = Mask{1} << k;
    Int lo = lower.value(bit), hi = upper.value(bit);
    for (Int v = lo; v <= hi; ++v) {
      x[static_cast<std::size_t>(k)] = v;
      bool upper_hit = false, lower_hit = false;
      for (Mask a : closing[static_cast<std::size_t>(k)]) {
        Int s = sums[a & ~bit] + v;
        sums[a] = s;
        if (s > upper.value(a)) upper_hit = true;
        if (s < lower.value(a)) lower_hit = true;
        if (upper_hit) break;
      }
      if (upper_hit) break;  // larger v only increases every closing mask sum
      if (lower_hit) continue;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

MConvexSet submodular_to_set(const SubmodularFn& p) {
  SetFn lower = dual(p);  // x(E) = p(E) plus upper bounds force x(A) >= p#(A)
  std::vector<Point> pts = enumerate_gpolymatroid(p.fn(), lower);
  if (pts.empty()) throw EmptyResultError("base polyhedron contains no lattice point");
  return MConvexSet::make(p.ground(), std::move(pts), Certify::no);
}

SetFn dual(const SetFn& p) {
  const Mask full = p.ground.full_mask();
  std::vector<Int> table(p.table.size());
  for (Mask a = 0; a <= full; ++a) table[a] = p.value(full) - p.value(full & ~a);
  return SetFn(p.ground, std::move(table));
}

SetFn dual(const SubmodularFn& p) { return dual(p.fn()); }

Point greedy_vertex(const SubmodularFn& p, const std::vector<int>& order) {
  const int n = p.ground().size;
  if (static_cast<int>(order.size()) != n)
    throw UsageError("greedy_vertex: order length does not match ground set");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i : order) {
    if (i < 0 || i >= n || seen[static_cast<std::size_t>(i)])
      throw UsageError("greedy_vertex: order is not a permutation");
    seen[static_cast<std::size_t>(i)] = true;
  }
  Point x(static_cast<std::size_t>(n), 0);
  Mask prefix = 0;
  for (int i : order) {
    Mask next = prefix | (Mask{1} << i);
    x[static_cast<std::size_t>(i)] = p.value(next) - p.value(prefix);
    prefix = next;
  }
  return x;
}

PointSet vertex_set(const SubmodularFn& p) {
  const int n = p.ground().size;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<Point> verts;
  do {
    verts.push_back(greedy_vertex(p, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return PointSet{std::move(verts)};
}

std::vector<MConvexSet> layers(const MNatSet& r) {
  std::vector<MConvexSet> out;
  for (Int s = r.min_sum(); s <= r.max_sum(); ++s) {
    std::vector<Point> layer;
    for (const Point& p : r.points())
      if (coord_sum(p) == s) layer.push_back(p);
    if (!layer.empty())
      out.push_back(MConvexSet::make(r.ground(), std::move(layer), Certify::no));
  }
  return out;
}

MConvexSet top_layer(const MNatSet& r) {
  std::vector<Point> layer;
  for (const Point& p : r.points())
    if (coord_sum(p) == r.max_sum()) layer.push_back(p);
  return MConvexSet::make(r.ground(), std::move(layer), Certify::no);
}

MConvexSet bottom_layer(const MNatSet& r) {
  std::vector<Point> layer;
  for (const Point& p : r.points())
    if (coord_sum(p) == r.min_sum()) layer.push_back(p);
  return MConvexSet::make(r.ground(), std::move(layer), Certify::no);
}

}  // namespace mcq
