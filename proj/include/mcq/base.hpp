#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcq {

using Int = std::int64_t;
using Mask = std::uint32_t;
using Point = std::vector<Int>;

/// Raised when a caller violates an operation's precondition (bad widths,
/// out-of-range parameters, malformed input). CLI maps this to exit code 2.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation would produce an empty point set, which is not a
/// valid M-convex or M-natural-convex set.
struct EmptyResultError : std::runtime_error {
  explicit EmptyResultError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by witness constructors whose precondition (a compliant pair) fails.
struct NoWitnessError : std::runtime_error {
  explicit NoWitnessError(const std::string& what) : std::runtime_error(what) {}
};

/// Ground set of size n with optional distinct element labels.
/// Elements are 0-indexed internally and 1-indexed in I/O and messages.
struct GroundSet {
  int size = 0;
  std::vector<std::string> labels;  // empty or exactly `size` distinct names

  GroundSet() = default;
  explicit GroundSet(int n) : size(n) { validate(); }
  GroundSet(int n, std::vector<std::string> l) : size(n), labels(std::move(l)) { validate(); }

  void validate() const {
    if (size < 1) throw UsageError("ground set size must be at least 1");
    if (size > 30) throw UsageError("ground set size above supported limit of 30");
    if (!labels.empty()) {
      if (static_cast<int>(labels.size()) != size)
        throw UsageError("label count does not match ground set size");
      auto sorted = labels;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw UsageError("ground set labels must be distinct");
    }
  }

  Mask full_mask() const { return (size >= 32) ? ~Mask{0} : ((Mask{1} << size) - 1); }

  std::string element_name(int i) const {
    if (!labels.empty()) return labels[static_cast<std::size_t>(i)];
    return std::to_string(i + 1);
  }

  bool operator==(const GroundSet& o) const { return size == o.size && labels == o.labels; }
};

inline int popcount(Mask m) { return std::popcount(m); }

inline void require_width(const Point& x, int n, const char* where) {
  if (static_cast<int>(x.size()) != n)
    throw UsageError(std::string(where) + ": point width " + std::to_string(x.size()) +
                     " does not match ground set size " + std::to_string(n));
}

/// x(A) = sum of the coordinates of x selected by A.
inline Int coord_sum(const Point& x, Mask a) {
  Int s = 0;
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (a & (Mask{1} << i)) s += x[static_cast<std::size_t>(i)];
  return s;
}

inline Int coord_sum(const Point& x) {
  Int s = 0;
  for (Int v : x) s += v;
  return s;
}

/// Mask of coordinates where x_i > y_i.
inline Mask supp_plus(const Point& x, const Point& y) {
  if (x.size() != y.size()) throw UsageError("supp_plus: point widths differ");
  Mask m = 0;
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (x[static_cast<std::size_t>(i)] > y[static_cast<std::size_t>(i)]) m |= Mask{1} << i;
  return m;
}

inline Mask supp_minus(const Point& x, const Point& y) { return supp_plus(y, x); }

inline Point point_add(const Point& x, const Point& y) {
  Point r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

inline Point point_sub(const Point& x, const Point& y) {
  Point r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

inline Point unit_vector(int n, int i, Int v = 1) {
  Point e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i)] = v;
  return e;
}

/// Deduplicated, lexicographically sorted finite point set with membership
/// queries. All module-level set types store their points in one of these.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
  }

  bool contains(const Point& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
  }
  bool empty() const { return pts_.empty(); }
  std::size_t size() const { return pts_.size(); }
  const std::vector<Point>& points() const { return pts_; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  bool operator==(const PointSet& o) const { return pts_ == o.pts_; }

 private:
  std::vector<Point> pts_;
};

/// Iterates over all submasks of `m` including m itself and 0.
template <typename F>
void for_each_submask(Mask m, F&& f) {
  Mask s = m;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

}  // namespace mcq
