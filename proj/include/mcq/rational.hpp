#pragma once

#include <gmpxx.h>

#include <string>

#include "mcq/base.hpp"

namespace mcq {

/// Exact rational scalar. Canonical form (reduced, positive denominator) is
/// maintained by construction; no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(Int num, Int den = 1) {
  if (den == 0) throw UsageError("rational with zero denominator");
  Rat r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

/// Parses "num", "-num" or "num/den".
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw UsageError("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) throw UsageError("malformed rational literal: " + s);
  if (r.get_den() == 0) throw UsageError("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat dot(const std::vector<Rat>& u, const Point& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += u[i] * static_cast<long>(x[i]);
  return s;
}

}  // namespace mcq
