#include "mcq/lift.hpp"

#include <algorithm>

namespace mcq {

void Surjection::validate() const {
  if (codomain < 1) throw UsageError("surjection needs a nonempty codomain");
  std::vector<bool> hit(static_cast<std::size_t>(codomain), false);
  for (int t : map) {
    if (t < 0 || t >= codomain) throw UsageError("surjection target out of range");
    hit[static_cast<std::size_t>(t)] = true;
  }
  for (bool h : hit)
    if (!h) throw UsageError("map is not surjective: some fiber is empty");
}

std::vector<std::vector<int>> Surjection::fibers() const {
  std::vector<std::vector<int>> f(static_cast<std::size_t>(codomain));
  for (int j = 0; j < domain(); ++j)
    f[static_cast<std::size_t>(map[static_cast<std::size_t>(j)])].push_back(j);
  return f;
}

Point project_phi(const Point& y, const Surjection& phi, const Point& v) {
  if (static_cast<int>(y.size()) != phi.domain())
    throw UsageError("project_phi: point width does not match surjection domain");
  require_width(v, phi.codomain, "project_phi");
  Point x = v;
  for (int j = 0; j < phi.domain(); ++j)
    x[static_cast<std::size_t>(phi.map[static_cast<std::size_t>(j)])] +=
        y[static_cast<std::size_t>(j)];
  return x;
}

MConvexSet project_phi(const MConvexSet& s, const GroundSet& target,
                       const Surjection& phi, const Point& v) {
  std::vector<Point> pts;
  for (const Point& y : s.points()) pts.push_back(project_phi(y, phi, v));
  return MConvexSet::make(target, std::move(pts), Certify::no);
}

namespace {

struct FiberTask {
  std::vector<int> coords;  // V-indices of the fiber
  Int target = 0;           // required coordinate sum
};

// Enumerate per-fiber interval decompositions, cartesian across fibers.
void enumerate_lifts(const std::vector<FiberTask>& tasks, const Point& lo, const Point& hi,
                     Point& y, std::size_t fiber, std::size_t pos,
                     std::vector<Point>& out, Int remaining) {
  if (fiber == tasks.size()) {
    out.push_back(y);
    return;
  }
  const auto& t = tasks[fiber];
  if (pos == t.coords.size()) {
    if (remaining == 0)
      enumerate_lifts(tasks, lo, hi, y, fiber + 1, 0, out,
                      fiber + 1 < tasks.size() ? tasks[fiber + 1].target : 0);
    return;
  }
  int j = t.coords[pos];
  Int rest_lo = 0, rest_hi = 0;
  for (std::size_t p = pos + 1; p < t.coords.size(); ++p) {
    rest_lo += lo[static_cast<std::size_t>(t.coords[p])];
    rest_hi += hi[static_cast<std::size_t>(t.coords[p])];
  }
  Int from = std::max(lo[static_cast<std::size_t>(j)], remaining - rest_hi);
  Int to = std::min(hi[static_cast<std::size_t>(j)], remaining - rest_lo);
  for (Int val = from; val <= to; ++val) {
    y[static_cast<std::size_t>(j)] = val;
    enumerate_lifts(tasks, lo, hi, y, fiber, pos + 1, out, remaining - val);
  }
}

Int count_fiber_ways(const std::vector<int>& coords, const Point& lo, const Point& hi,
                     Int target, std::size_t pos) {
  if (pos == coords.size()) return target == 0 ? 1 : 0;
  Int total = 0;
  int j = coords[pos];
  for (Int val = lo[static_cast<std::size_t>(j)]; val <= hi[static_cast<std::size_t>(j)];
       ++val)
    total += count_fiber_ways(coords, lo, hi, target - val, pos + 1);
  return total;
}

std::pair<Point, Point> bounds(const MConvexSet& p) {
  Point lo = *p.points().begin(), hi = lo;
  for (const Point& x : p.points())
    for (std::size_t i = 0; i < x.size(); ++i) {
      lo[i] = std::min(lo[i], x[i]);
      hi[i] = std::max(hi[i], x[i]);
    }
  return {lo, hi};
}

void check_box_covers(const MConvexSet& p, const Point& box_lo, const Point& box_hi,
                      const Surjection& phi, const Point& v) {
  auto [plo, phi_hi] = bounds(p);
  auto fibers = phi.fibers();
  for (int i = 0; i < phi.codomain; ++i) {
    Int lo_sum = v[static_cast<std::size_t>(i)], hi_sum = v[static_cast<std::size_t>(i)];
    for (int j : fibers[static_cast<std::size_t>(i)]) {
      lo_sum += box_lo[static_cast<std::size_t>(j)];
      hi_sum += box_hi[static_cast<std::size_t>(j)];
    }
    if (lo_sum > plo[static_cast<std::size_t>(i)] ||
        hi_sum < phi_hi[static_cast<std::size_t>(i)])
      throw UsageError("box_lift: projected box does not cover P at element " +
                       p.ground().element_name(i));
  }
}

}  // namespace

MConvexSet box_lift(const MConvexSet& p, const Point& box_lo, const Point& box_hi,
                    const Surjection& phi, const Point& v, Certify certify) {
  phi.validate();
  if (phi.codomain != p.ground().size)
    throw UsageError("box_lift: surjection codomain does not match the ground set of P");
  require_width(box_lo, phi.domain(), "box_lift");
  require_width(box_hi, phi.domain(), "box_lift");
  for (std::size_t j = 0; j < box_lo.size(); ++j)
    if (box_lo[j] > box_hi[j]) throw UsageError("box_lift: empty box interval");
  check_box_covers(p, box_lo, box_hi, phi, v);
  auto fibers = phi.fibers();
  std::vector<Point> out;
  Point y(static_cast<std::size_t>(phi.domain()), 0);
  for (const Point& x : p.points()) {
    std::vector<FiberTask> tasks;
    for (int i = 0; i < phi.codomain; ++i)
      tasks.push_back(FiberTask{fibers[static_cast<std::size_t>(i)],
                                x[static_cast<std::size_t>(i)] -
                                    v[static_cast<std::size_t>(i)]});
    enumerate_lifts(tasks, box_lo, box_hi, y, 0, 0, out, tasks.front().target);
  }
  if (out.empty()) throw EmptyResultError("box_lift: no lattice point lifts into the box");
  return MConvexSet::make(GroundSet(phi.domain()), std::move(out), certify);
}

Int box_lift_size(const MConvexSet& p, const Point& box_lo, const Point& box_hi,
                  const Surjection& phi, const Point& v) {
  auto fibers = phi.fibers();
  Int total = 0;
  for (const Point& x : p.points()) {
    Int ways = 1;
    for (int i = 0; i < phi.codomain && ways > 0; ++i)
      ways *= count_fiber_ways(fibers[static_cast<std::size_t>(i)], box_lo, box_hi,
                               x[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)],
                               0);
    total += ways;
  }
  return total;
}

namespace {

// Shared scaffolding for the canonical lifts: fibers sized from the
// coordinate ranges b_i, intervals chosen per construction.
struct CanonicalBox {
  Surjection phi;
  Point lo, hi;  // on V
  Point v;       // on U
};

CanonicalBox canonical_matroid_box(const Point& lo_u, const Point& hi_u) {
  CanonicalBox cb;
  cb.v = lo_u;
  cb.phi.codomain = static_cast<int>(lo_u.size());
  for (std::size_t i = 0; i < lo_u.size(); ++i) {
    Int b = hi_u[i] - lo_u[i];
    int fiber = std::max<Int>(b, 1);
    for (int t = 0; t < fiber; ++t) {
      cb.phi.map.push_back(static_cast<int>(i));
      cb.lo.push_back(0);
      cb.hi.push_back(b == 0 ? 0 : 1);
    }
  }
  return cb;
}

}  // namespace

Lift matroid_lift(const MConvexSet& p, Certify certify) {
  auto [lo, hi] = bounds(p);
  CanonicalBox cb = canonical_matroid_box(lo, hi);
  MConvexSet set = box_lift(p, cb.lo, cb.hi, cb.phi, cb.v, certify);
  return Lift{std::move(set), LiftCertificate{cb.phi, cb.v, cb.lo, cb.hi}};
}

Lift k_polymatroid_lift(const MConvexSet& p, Int k, Certify certify) {
  if (k < 1) throw UsageError("k_polymatroid_lift: k must be positive");
  auto [lo, hi] = bounds(p);
  CanonicalBox cb;
  cb.v = lo;
  cb.phi.codomain = p.ground().size;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    Int b = hi[i] - lo[i];
    if (b == 0) {
      cb.phi.map.push_back(static_cast<int>(i));
      cb.lo.push_back(0);
      cb.hi.push_back(0);
      continue;
    }
    // b = m*k + r with 0 < r <= k
    Int m = (b - 1) / k;
    Int r = b - m * k;
    for (Int t = 0; t < m; ++t) {
      cb.phi.map.push_back(static_cast<int>(i));
      cb.lo.push_back(0);
      cb.hi.push_back(k);
    }
    cb.phi.map.push_back(static_cast<int>(i));
    cb.lo.push_back(0);
    cb.hi.push_back(r);
  }
  MConvexSet set = box_lift(p, cb.lo, cb.hi, cb.phi, cb.v, certify);
  return Lift{std::move(set), LiftCertificate{cb.phi, cb.v, cb.lo, cb.hi}};
}

namespace {

std::pair<Point, Point> joint_bounds(const MConvexSet& p, const MConvexSet& q) {
  auto [lo, hi] = bounds(p);
  for (const Point& x : q.points())
    for (std::size_t i = 0; i < x.size(); ++i) {
      lo[i] = std::min(lo[i], x[i]);
      hi[i] = std::max(hi[i], x[i]);
    }
  return {lo, hi};
}

}  // namespace

CompatibleLifts compatible_lifts(const MConvexSet& p, const MConvexSet& q,
                                 Certify certify) {
  if (p.ground().size != q.ground().size)
    throw UsageError("compatible_lifts: ground set sizes differ");
  auto [lo, hi] = joint_bounds(p, q);
  CanonicalBox cb = canonical_matroid_box(lo, hi);
  MConvexSet m = box_lift(p, cb.lo, cb.hi, cb.phi, cb.v, certify);
  MConvexSet n = box_lift(q, cb.lo, cb.hi, cb.phi, cb.v, certify);
  return CompatibleLifts{std::move(m), std::move(n),
                         LiftCertificate{cb.phi, cb.v, cb.lo, cb.hi}};
}

int compatible_lift_ground(const MConvexSet& p, const MConvexSet& q) {
  auto [lo, hi] = joint_bounds(p, q);
  int total = 0;
  for (std::size_t i = 0; i < lo.size(); ++i)
    total += static_cast<int>(std::max<Int>(hi[i] - lo[i], 1));
  return total;
}

Int compatible_lift_sizes(const MConvexSet& p, const MConvexSet& q, Int& m_size,
                          Int& n_size) {
  auto [lo, hi] = joint_bounds(p, q);
  CanonicalBox cb = canonical_matroid_box(lo, hi);
  m_size = box_lift_size(p, cb.lo, cb.hi, cb.phi, cb.v);
  n_size = box_lift_size(q, cb.lo, cb.hi, cb.phi, cb.v);
  return m_size * n_size;
}

}  // namespace mcq
