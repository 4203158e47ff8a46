#include <iostream>
#include "mcq/generator.hpp"
#include "mcq/mfunc.hpp"
#include "mcq/set_ops.hpp"
using namespace mcq;
MConvexSet hyper(int n, Int m) {
  std::vector<Point> pts; Point x(n, 0);
  auto rec = [&](auto&& self, int i, Int left) -> void {
    if (left > n - i) return;
    if (i == n) { if (left == 0) pts.push_back(x); return; }
    x[i] = 0; self(self, i + 1, left);
    if (left > 0) { x[i] = 1; self(self, i + 1, left - 1); x[i] = 0; }
  };
  rec(rec, 0, m);
  return MConvexSet::make(GroundSet(n), pts, Certify::no);
}
int main() {
  MConvexSet h24 = hyper(4, 2);
  ValueMap vals; for (const Point& p : h24.points()) vals.emplace(p, Rat(0));
  Rng rng(7);
  for (int attempt = 0; attempt < 30; ++attempt) {
    ValueMap v = vals;
    std::vector<Point> keys; for (auto& [x, vv] : v) keys.push_back(x);
    std::size_t idx = static_cast<std::size_t>(rng.uniform(0, (Int)keys.size() - 1));
    v[keys[idx]] += rat(rng.uniform(1, 3));
    MFunc cand = MFunc::make(GroundSet(4), v, Certify::no);
    std::cerr << "attempt " << attempt << ": axiom..." << std::flush;
    bool ax = check_m_convex_fn(cand.ground(), cand.values());
    std::cerr << ax << " spv..." << std::flush;
    bool sp = is_sparse_paving_valuated(cand);
    std::cerr << sp << " trunc..." << std::flush;
    MFunc lower = truncation_fn(cand);
    std::cerr << "|" << lower.dom_size() << "| spv2..." << std::flush;
    bool sp2 = is_sparse_paving_valuated(lower);
    std::cerr << sp2 << " D..." << std::flush;
    CheckResult d = quotient_D(cand, lower, Caps{});
    std::cerr << int(d.verdict) << " build..." << std::flush;
    if (ax && sp && sp2 && d.verdict == Verdict::true_) {
      MNatFunc h = sparse_paving_quotient(cand, lower, Caps{});
      std::cerr << "ok |h|=" << h.values().size();
    }
    std::cerr << "\n";
  }
  return 0;
}
