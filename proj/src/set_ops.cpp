#include "mcq/set_ops.hpp"

#include <algorithm>

namespace mcq {

GroundSet subground(const GroundSet& g, Mask v) {
  int n = popcount(v);
  if (n == 0) throw UsageError("restriction to the empty ground set");
  if (g.labels.empty()) return GroundSet(n);
  std::vector<std::string> labels;
  for (int i = 0; i < g.size; ++i)
    if (v & (Mask{1} << i)) labels.push_back(g.labels[static_cast<std::size_t>(i)]);
  return GroundSet(n, std::move(labels));
}

Point subpoint(const Point& x, Mask v) {
  Point out;
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (v & (Mask{1} << i)) out.push_back(x[static_cast<std::size_t>(i)]);
  return out;
}

MConvexSet restrict_to(const MConvexSet& p, Mask v) {
  const Mask full = p.ground().full_mask();
  if (v & ~full) throw UsageError("restrict: mask exceeds ground set");
  const Mask u = full & ~v;
  std::vector<Point> pts;
  for (const Point& x : p.points()) {
    bool zero_off_v = true;
    for (int i = 0; i < p.ground().size; ++i)
      if ((u & (Mask{1} << i)) && x[static_cast<std::size_t>(i)] != 0) zero_off_v = false;
    if (zero_off_v) pts.push_back(subpoint(x, v));
  }
  if (pts.empty())
    throw EmptyResultError("restriction is empty: no point of P vanishes off V");
  return MConvexSet::make(subground(p.ground(), v), std::move(pts), Certify::no);
}

MNatSet project_onto(const MConvexSet& p, Mask v, Certify certify) {
  const Mask full = p.ground().full_mask();
  if (v & ~full) throw UsageError("project: mask exceeds ground set");
  std::vector<Point> pts;
  for (const Point& x : p.points()) pts.push_back(subpoint(x, v));
  return MNatSet::make(subground(p.ground(), v), std::move(pts), certify);
}

MConvexSet minkowski_sum(const MConvexSet& a, const MConvexSet& b) {
  if (a.ground().size != b.ground().size)
    throw UsageError("minkowski_sum: ground set sizes differ");
  std::vector<Point> pts;
  pts.reserve(a.size() * b.size());
  for (const Point& x : a.points())
    for (const Point& y : b.points()) pts.push_back(point_add(x, y));
  return MConvexSet::make(a.ground(), std::move(pts), Certify::no);
}

MConvexSet translate(const MConvexSet& p, const Point& v) {
  require_width(v, p.ground().size, "translate");
  std::vector<Point> pts;
  for (const Point& x : p.points()) pts.push_back(point_add(x, v));
  return MConvexSet::make(p.ground(), std::move(pts), Certify::no);
}

SubmodularFn truncate_table(const SubmodularFn& p, Int k) {
  if (k < 1) throw UsageError("truncate: k must be at least 1");
  SetFn fn = p.fn();
  fn.table[fn.ground.full_mask()] -= k;
  return SubmodularFn::make(std::move(fn), Certify::no);
}

SubmodularFn elongate_table(const SubmodularFn& p, Int k) {
  if (k < 1) throw UsageError("elongate: k must be at least 1");
  SetFn fn = p.fn();
  for (Mask a = 1; a <= fn.ground.full_mask(); ++a) fn.table[a] += k;
  return SubmodularFn::make(std::move(fn), Certify::no);
}

std::vector<Point> truncate_points(const MConvexSet& p, Int k) {
  // All points obtainable by subtracting a total of k over the coordinates.
  std::vector<Point> out;
  const int n = p.ground().size;
  for (const Point& x : p.points()) {
    Point y = x;
    auto rec = [&](auto&& self, int i, Int left) -> void {
      if (i == n - 1) {
        y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - left;
        out.push_back(y);
        return;
      }
      for (Int d = 0; d <= left; ++d) {
        y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - d;
        self(self, i + 1, left - d);
      }
    };
    rec(rec, 0, k);
  }
  return out;
}

std::vector<Point> elongate_points(const MConvexSet& p, Int k) {
  std::vector<Point> out;
  const int n = p.ground().size;
  for (const Point& x : p.points()) {
    Point y = x;
    auto rec = [&](auto&& self, int i, Int left) -> void {
      if (i == n - 1) {
        y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + left;
        out.push_back(y);
        return;
      }
      for (Int d = 0; d <= left; ++d) {
        y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + d;
        self(self, i + 1, left - d);
      }
    };
    rec(rec, 0, k);
  }
  return out;
}

MConvexSet truncate(const MConvexSet& p, Int k, Verify verify) {
  SubmodularFn table = truncate_table(set_to_submodular(p), k);
  MConvexSet result = submodular_to_set(table);
  if (verify == Verify::on) {
    PointSet filtered{truncate_points(p, k)};
    if (!(filtered == result.points()))
      throw UsageError("truncate: formula route disagrees with point filter");
  }
  return result;
}

MConvexSet elongate(const MConvexSet& p, Int k, Verify verify) {
  SubmodularFn table = elongate_table(set_to_submodular(p), k);
  MConvexSet result = submodular_to_set(table);
  if (verify == Verify::on) {
    PointSet filtered{elongate_points(p, k)};
    if (!(filtered == result.points()))
      throw UsageError("elongate: formula route disagrees with point filter");
  }
  return result;
}

namespace {

GPolyIntersection finish_intersection(const MNatSet& r, SetFn upper, SetFn lower,
                                      std::vector<Point> filtered, Verify verify,
                                      const char* what) {
  if (filtered.empty())
    throw EmptyResultError(std::string(what) + ": intersection is empty");
  if (verify == Verify::on) {
    PointSet enumerated{enumerate_gpolymatroid(upper, lower)};
    if (!(enumerated == PointSet{filtered}))
      throw UsageError(std::string(what) + ": transformed tables disagree with point filter");
  }
  MNatSet set = MNatSet::make(r.ground(), std::move(filtered), Certify::no);
  return GPolyIntersection{std::move(set), std::move(upper), std::move(lower)};
}

}  // namespace

GPolyIntersection intersect_box(const MNatSet& r, const Point& a, const Point& b,
                                Verify verify) {
  const int n = r.ground().size;
  require_width(a, n, "intersect_box");
  require_width(b, n, "intersect_box");
  for (int i = 0; i < n; ++i)
    if (a[static_cast<std::size_t>(i)] > b[static_cast<std::size_t>(i)])
      throw UsageError("intersect_box: lower corner exceeds upper corner at element " +
                       r.ground().element_name(i));
  std::vector<Point> base(r.points().begin(), r.points().end());
  SetFn p = upper_table(r.ground(), base);
  SetFn q = lower_table(r.ground(), base);
  const Mask full = r.ground().full_mask();
  std::vector<Int> up(std::size_t{1} << n), lo(std::size_t{1} << n);
  for (Mask z = 0; z <= full; ++z) {
    bool first = true;
    Int pmin = 0, qmax = 0;
    for (Mask x = 0; x <= full; ++x) {
      Int pv = p.value(x) - coord_sum(a, x & ~z) + coord_sum(b, z & ~x);
      Int qv = q.value(x) - coord_sum(b, x & ~z) + coord_sum(a, z & ~x);
      if (first) {
        pmin = pv;
        qmax = qv;
        first = false;
      } else {
        pmin = std::min(pmin, pv);
        qmax = std::max(qmax, qv);
      }
    }
    up[z] = pmin;
    lo[z] = qmax;
  }
  std::vector<Point> filtered;
  for (const Point& x : r.points()) {
    bool inside = true;
    for (int i = 0; i < n && inside; ++i)
      inside = a[static_cast<std::size_t>(i)] <= x[static_cast<std::size_t>(i)] &&
               x[static_cast<std::size_t>(i)] <= b[static_cast<std::size_t>(i)];
    if (inside) filtered.push_back(x);
  }
  return finish_intersection(r, SetFn(r.ground(), std::move(up)),
                             SetFn(r.ground(), std::move(lo)), std::move(filtered), verify,
                             "intersect_box");
}

GPolyIntersection intersect_plank(const MNatSet& r, Int alpha, Int beta, Verify verify) {
  if (alpha > beta) throw UsageError("intersect_plank: alpha exceeds beta");
  const int n = r.ground().size;
  std::vector<Point> base(r.points().begin(), r.points().end());
  SetFn p = upper_table(r.ground(), base);
  SetFn q = lower_table(r.ground(), base);
  const Mask full = r.ground().full_mask();
  std::vector<Int> up(std::size_t{1} << n), lo(std::size_t{1} << n);
  for (Mask z = 0; z <= full; ++z) {
    up[z] = std::min(p.value(z), beta - q.value(full & ~z));
    lo[z] = std::max(q.value(z), alpha - p.value(full & ~z));
  }
  std::vector<Point> filtered;
  for (const Point& x : r.points()) {
    Int s = coord_sum(x);
    if (alpha <= s && s <= beta) filtered.push_back(x);
  }
  return finish_intersection(r, SetFn(r.ground(), std::move(up)),
                             SetFn(r.ground(), std::move(lo)), std::move(filtered), verify,
                             "intersect_plank");
}

namespace {

// min(p(A), k + p(A u U) - p(E)) on subsets A of V; this is the plank formula
// applied to the projection's generalized polymatroid.
SubmodularFn minor_table(const SubmodularFn& p, Mask u, Int k) {
  const Mask full = p.ground().full_mask();
  const Mask v = full & ~u;
  GroundSet gv = subground(p.ground(), v);
  std::vector<Int> table(std::size_t{1} << gv.size);
  // Map masks of V to masks of E.
  std::vector<int> v_elems;
  for (int i = 0; i < p.ground().size; ++i)
    if (v & (Mask{1} << i)) v_elems.push_back(i);
  for (Mask a = 0; a < (Mask{1} << gv.size); ++a) {
    Mask a_in_e = 0;
    for (int j = 0; j < gv.size; ++j)
      if (a & (Mask{1} << j)) a_in_e |= Mask{1} << v_elems[static_cast<std::size_t>(j)];
    table[a] = std::min(p.value(a_in_e), k + p.value(a_in_e | u) - p.value(full));
  }
  table[0] = 0;  // min(0, k + p(U) - p(E)) with k >= p(E) - p(U) is 0
  return SubmodularFn::make(SetFn(std::move(gv), std::move(table)), Certify::no);
}

}  // namespace

Minor basic_minor(const MConvexSet& p, Mask u, Int k, Verify verify) {
  const Mask full = p.ground().full_mask();
  if (u & ~full) throw UsageError("minor: mask exceeds ground set");
  if (u == 0 || u == full) throw UsageError("minor: U must be a proper nonempty subset");
  const Mask v = full & ~u;
  Int klo = coord_sum(*p.points().begin(), v), khi = klo;
  for (const Point& x : p.points()) {
    Int s = coord_sum(x, v);
    klo = std::min(klo, s);
    khi = std::max(khi, s);
  }
  if (k < klo || k > khi)
    throw UsageError("minor level " + std::to_string(k) + " outside attainable range [" +
                     std::to_string(klo) + ", " + std::to_string(khi) + "]");
  SubmodularFn table = minor_table(set_to_submodular(p), u, k);
  MConvexSet set = submodular_to_set(table);
  if (verify == Verify::on) {
    std::vector<Point> filtered;
    for (const Point& x : p.points())
      if (coord_sum(x, v) == k) filtered.push_back(subpoint(x, v));
    if (!(PointSet{filtered} == set.points()))
      throw UsageError("minor: formula route disagrees with projection layer");
    if (!(set_to_submodular(set) == table))
      throw UsageError("minor: formula table is not the set's submodular function");
  }
  return Minor{std::move(set), std::move(table)};
}

Minor deletion(const MConvexSet& p, Mask u, Verify verify) {
  const Mask v = p.ground().full_mask() & ~u;
  Int k = 0;
  bool first = true;
  for (const Point& x : p.points()) {
    Int s = coord_sum(x, v);
    k = first ? s : std::max(k, s);
    first = false;
  }
  return basic_minor(p, u, k, verify);
}

Minor contraction(const MConvexSet& p, Mask u, Verify verify) {
  const Mask v = p.ground().full_mask() & ~u;
  Int k = 0;
  bool first = true;
  for (const Point& x : p.points()) {
    Int s = coord_sum(x, v);
    k = first ? s : std::min(k, s);
    first = false;
  }
  return basic_minor(p, u, k, verify);
}

}  // namespace mcq
