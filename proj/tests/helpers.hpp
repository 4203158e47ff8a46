#pragma once

// Shared oracles for the test suites. Everything here recomputes expectations
// from first principles (filters, exhaustive enumeration) independently of the
// library code paths it is used to check.

#include <algorithm>
#include <map>
#include <vector>

#include "mcq/generator.hpp"
#include "mcq/mconvex.hpp"
#include "mcq/set_ops.hpp"

namespace mcq::testing {

// All lattice points z <= some x in P with z(E) = rank - k.
inline std::vector<Point> truncation_oracle(const MConvexSet& p, Int k) {
  std::vector<Point> out;
  const int n = p.ground().size;
  for (const Point& x : p.points()) {
    Point y = x;
    auto rec = [&](auto&& self, int i, Int left) -> void {
      if (i == n) {
        if (left == 0) out.push_back(y);
        return;
      }
      for (Int d = 0; d <= left; ++d) {
        y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - d;
        self(self, i + 1, left - d);
      }
      y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
    };
    rec(rec, 0, k);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Unique argmax over the enumerated point set for the strictly decreasing
// generic weights induced by an order (first coordinate weighted highest).
inline Point argmax_oracle(const std::vector<Point>& pts, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::vector<Int> weight(static_cast<std::size_t>(n));
  Int w = 1;
  for (int k = n - 1; k >= 0; --k) {
    weight[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = w;
    w *= static_cast<Int>(2 * n + 2);  // dominating powers: ties impossible
  }
  Point best = pts.front();
  Int best_val = 0;
  bool first = true;
  for (const Point& x : pts) {
    Int val = 0;
    for (int i = 0; i < n; ++i)
      val += weight[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    if (first || val > best_val) {
      best = x;
      best_val = val;
      first = false;
    }
  }
  return best;
}

// Random certified M-convex set through the generator's submodular draw.
inline MConvexSet random_mconvex(std::uint64_t seed, int n, Int scale) {
  return submodular_to_set(gen_submodular(seed, n, scale));
}

// Random certified M-natural set: coordinate projection of a random
// M-convex set one dimension up.
inline MNatSet random_mnat(std::uint64_t seed, int n, Int scale) {
  MConvexSet big = random_mconvex(seed, n + 1, scale);
  return project_onto(big, (Mask{1} << n) - 1, Certify::no);
}

}  // namespace mcq::testing
