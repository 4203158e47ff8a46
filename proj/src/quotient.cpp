#include "mcq/quotient.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "mcq/set_ops.hpp"

namespace mcq {

Caps Caps::from_env() {
  Caps c;
  const char* raw = std::getenv("MCQ_CAPS");
  if (!raw) return c;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("MCQ_CAPS entry without '=': " + item);
    std::string key = item.substr(0, eq);
    long long val = std::stoll(item.substr(eq + 1));
    if (key == "perm")
      c.perm_n = static_cast<int>(val);
    else if (key == "lift")
      c.lift_ground = static_cast<int>(val);
    else if (key == "sweep")
      c.sweep_ground = static_cast<int>(val);
    else if (key == "pairpts")
      c.lift_pair_points = val;
    else if (key == "atlas")
      c.atlas_dom = val;
    else
      throw UsageError("MCQ_CAPS unknown key: " + key);
  }
  return c;
}

namespace {

void require_same_ground(const SubmodularFn& p, const SubmodularFn& q) {
  if (!(p.ground() == q.ground()))
    throw UsageError("quotient checks need both tables on the same ground set");
}

}  // namespace

bool check_compliant(const SubmodularFn& p, const SubmodularFn& q) {
  require_same_ground(p, q);
  const Mask full = p.ground().full_mask();
  for (Mask y = 0; y <= full; ++y) {
    bool bad = false;
    for_each_submask(y, [&](Mask x) {
      if (q.value(y) - q.value(x) > p.value(y) - p.value(x)) bad = true;
    });
    if (bad) return false;
  }
  return true;
}

CheckResult check_vertex_containment(const SubmodularFn& p, const SubmodularFn& q,
                                     const Caps& caps) {
  require_same_ground(p, q);
  const int n = p.ground().size;
  if (n > caps.perm_n)
    return CheckResult::skip("n! vertex sweep exceeds cap perm=" +
                             std::to_string(caps.perm_n));
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    Point x = greedy_vertex(p, order);
    Point y = greedy_vertex(q, order);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < y[i]) return CheckResult::no();
  } while (std::next_permutation(order.begin(), order.end()));
  return CheckResult::yes();
}

bool check_contraction_containment(const SubmodularFn& p, const SubmodularFn& q) {
  require_same_ground(p, q);
  const Mask full = p.ground().full_mask();
  // S(q/X) inside S(p/X) for every X: q(A|X) - q(X) <= p(A|X) - p(X) on A
  // disjoint from X.
  for (Mask x = 0; x <= full; ++x) {
    Mask rest = full & ~x;
    bool bad = false;
    for_each_submask(rest, [&](Mask a) {
      if (q.value(a | x) - q.value(x) > p.value(a | x) - p.value(x)) bad = true;
    });
    if (bad) return false;
  }
  return true;
}

MNatSet gpoly_points(const SubmodularFn& p, const SubmodularFn& q) {
  require_same_ground(p, q);
  std::vector<Point> pts = enumerate_gpolymatroid(p.fn(), dual(q));
  if (pts.empty()) throw EmptyResultError("generalized polymatroid has no lattice points");
  return MNatSet::make(p.ground(), std::move(pts), Certify::no);
}

bool check_top_bottom(const SubmodularFn& p, const SubmodularFn& q) {
  require_same_ground(p, q);
  std::vector<Point> pts = enumerate_gpolymatroid(p.fn(), dual(q));
  if (pts.empty()) return false;
  if (!check_mnat_convex(pts)) return false;
  MNatSet r = MNatSet::make(p.ground(), std::move(pts), Certify::no);
  return top_layer(r) == submodular_to_set(p) && bottom_layer(r) == submodular_to_set(q);
}

SubmodularFn deletion_contraction_witness(const SubmodularFn& p, const SubmodularFn& q) {
  require_same_ground(p, q);
  if (!check_compliant(p, q))
    throw NoWitnessError("pair is not compliant; no single-element lift exists");
  const int n = p.ground().size;
  const Mask full = p.ground().full_mask();
  const Int t = p.rank() - q.rank();
  std::vector<Int> table(std::size_t{1} << (n + 1));
  for (Mask a = 0; a <= full; ++a) {
    table[a] = p.value(a);
    table[a | (Mask{1} << n)] = t + q.value(a);
  }
  return SubmodularFn::make(SetFn(GroundSet(n + 1), std::move(table)), Certify::no);
}

bool verify_deletion_contraction(const SubmodularFn& witness, const SubmodularFn& p,
                                 const SubmodularFn& q) {
  if (witness.ground().size != p.ground().size + 1) return false;
  if (!check_submodular(witness.fn())) return false;
  // Independent forward direction: realize the big set and take point-level
  // deletion and contraction of the extra element.
  MConvexSet big = submodular_to_set(witness);
  Mask e = Mask{1} << p.ground().size;
  Minor del = deletion(big, e);
  Minor con = contraction(big, e);
  return del.table.fn().table == p.fn().table && con.table.fn().table == q.fn().table;
}

bool check_exchange(const MConvexSet& p, const MConvexSet& q) {
  if (p.ground().size != q.ground().size)
    throw UsageError("check_exchange: ground set sizes differ");
  const int n = p.ground().size;
  for (const Point& x : q.points())
    for (const Point& y : p.points()) {
      Mask plus = supp_plus(x, y), minus = supp_minus(x, y);
      for (int i = 0; i < n; ++i) {
        if (!(plus & (Mask{1} << i))) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          if (!(minus & (Mask{1} << j))) continue;
          Point xs = x;
          xs[static_cast<std::size_t>(i)] -= 1;
          xs[static_cast<std::size_t>(j)] += 1;
          if (!q.contains(xs)) continue;
          Point ys = y;
          ys[static_cast<std::size_t>(i)] += 1;
          ys[static_cast<std::size_t>(j)] -= 1;
          if (p.contains(ys)) found = true;
        }
        if (!found) return false;
      }
    }
  return true;
}

InductionWitness induction_witness(const SubmodularFn& p, const SubmodularFn& q) {
  if (!check_compliant(p, q))
    throw NoWitnessError("pair is not compliant; no induction witness exists");
  MNatSet r = gpoly_points(p, q);
  const Int top = p.rank();
  std::vector<Point> pts;
  for (const Point& x : r.points()) {
    Point lifted = x;
    lifted.push_back(top - coord_sum(x));
    pts.push_back(std::move(lifted));
  }
  LinkingSet gamma =
      LinkingSet::make(p.ground(), GroundSet(1), std::move(pts), Certify::no);
  // Stored right coordinate of the bottom layer is rank(P) - rank(Q); the
  // matching right-side value is its negative.
  MConvexSet w =
      MConvexSet::make(GroundSet(1), {Point{q.rank() - p.rank()}}, Certify::no);
  return InductionWitness{std::move(gamma), std::move(w)};
}

bool verify_induction(const InductionWitness& wit, const SubmodularFn& p,
                      const SubmodularFn& q) {
  MNatSet left = wit.gamma.left_set();
  if (!(top_layer(left) == submodular_to_set(p))) return false;
  try {
    MConvexSet induced = induce(wit.w, wit.gamma);
    return induced == submodular_to_set(q);
  } catch (const EmptyResultError&) {
    return false;
  }
}

GreenWitness green_witness(const SubmodularFn& p, const SubmodularFn& q) {
  if (!check_compliant(p, q))
    throw NoWitnessError("pair is not compliant; no Green witness exists");
  const int n = p.ground().size;
  MNatSet r = gpoly_points(p, q);
  const Int top = p.rank();
  const Int k = p.rank() - q.rank();
  GroundSet side(n + 1);  // E plus one auxiliary element on both sides
  std::vector<Point> gpts;
  for (const Point& x : r.points()) {
    Point pt(static_cast<std::size_t>(2 * (n + 1)), 0);
    for (int i = 0; i < n; ++i) pt[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
    pt[static_cast<std::size_t>(2 * n + 1)] = top - coord_sum(x);
    gpts.push_back(std::move(pt));
  }
  LinkingSet gamma = LinkingSet::make(side, side, std::move(gpts), Certify::no);
  // Single-point linking set moving the auxiliary coordinate by k: stored
  // ((0,-k),(0,k)), i.e. the pair ((0,-k) <- (0,-k)).
  Point xpt(static_cast<std::size_t>(2 * (n + 1)), 0);
  xpt[static_cast<std::size_t>(n)] = -k;
  xpt[static_cast<std::size_t>(2 * n + 1)] = k;
  LinkingSet x = LinkingSet::make(side, side, {xpt}, Certify::no);
  LinkingSet delta = product(gamma, x, Certify::no);
  return GreenWitness{std::move(gamma), std::move(delta), std::move(x)};
}

namespace {

MConvexSet pad_with_zero(const MConvexSet& p) {
  std::vector<Point> pts;
  for (const Point& x : p.points()) {
    Point y = x;
    y.push_back(0);
    pts.push_back(std::move(y));
  }
  return MConvexSet::make(GroundSet(p.ground().size + 1), std::move(pts), Certify::no);
}

}  // namespace

bool verify_green(const GreenWitness& wit, const SubmodularFn& p, const SubmodularFn& q) {
  try {
    LinkingSet recomputed = product(wit.gamma, wit.x, Certify::no);
    if (!(recomputed == wit.delta)) return false;
  } catch (const EmptyResultError&) {
    return false;
  }
  MConvexSet p_set = submodular_to_set(p);
  MConvexSet q_set = submodular_to_set(q);
  // The auxiliary coordinate of the right-hand factor shifts Q's copy; on the
  // left sets, tops must be P and Q padded into E + {aux}.
  if (!(top_layer(wit.gamma.left_set()) == pad_with_zero(p_set))) return false;
  if (!(top_layer(wit.delta.left_set()) == pad_with_zero(q_set))) return false;
  return true;
}

CheckResult check_matroid_lift_quotient(const MConvexSet& p, const MConvexSet& q,
                                        const Caps& caps,
                                        std::optional<CompatibleLifts>* out) {
  if (p.ground().size != q.ground().size)
    throw UsageError("check_matroid_lift_quotient: ground set sizes differ");
  int ground = compatible_lift_ground(p, q);
  if (ground > caps.lift_ground)
    return CheckResult::skip("lift ground set " + std::to_string(ground) +
                             " exceeds cap lift=" + std::to_string(caps.lift_ground));
  Int m_size = 0, n_size = 0;
  Int pair_points = compatible_lift_sizes(p, q, m_size, n_size);
  if (pair_points > caps.lift_pair_points)
    return CheckResult::skip("lift pair size " + std::to_string(pair_points) +
                             " exceeds cap pairpts=" +
                             std::to_string(caps.lift_pair_points));
  CompatibleLifts lifts = compatible_lifts(p, q);
  bool ok = check_exchange(lifts.m, lifts.n);
  if (out) *out = std::move(lifts);
  return ok ? CheckResult::yes() : CheckResult::no();
}

CheckResult check_compressed_quotient(const MConvexSet& p, const MConvexSet& q,
                                      const Caps& caps,
                                      std::optional<CompatibleLifts>* out) {
  if (p.ground().size != q.ground().size)
    throw UsageError("check_compressed_quotient: ground set sizes differ");
  int ground = compatible_lift_ground(p, q);
  if (ground > caps.sweep_ground)
    return CheckResult::skip("lift ground set " + std::to_string(ground) +
                             " exceeds cap sweep=" + std::to_string(caps.sweep_ground));
  CompatibleLifts lifts = compatible_lifts(p, q);
  SubmodularFn tm = set_to_submodular(lifts.m);
  SubmodularFn tn = set_to_submodular(lifts.n);
  const Int two_count = lifts.n.rank();
  const Int one_count = lifts.m.rank() - lifts.n.rank();
  std::vector<int> order(static_cast<std::size_t>(ground));
  std::iota(order.begin(), order.end(), 0);
  bool ok = true;
  do {
    Point vm = greedy_vertex(tm, order);
    Point vn = greedy_vertex(tn, order);
    Int twos = 0, ones = 0, zeros = 0, other = 0;
    for (std::size_t i = 0; i < vm.size(); ++i) {
      Int s = vm[i] + vn[i];
      if (s == 2)
        ++twos;
      else if (s == 1)
        ++ones;
      else if (s == 0)
        ++zeros;
      else
        ++other;
    }
    if (other != 0 || twos != two_count || ones != one_count) {
      ok = false;
      break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (out) *out = std::move(lifts);
  return ok ? CheckResult::yes() : CheckResult::no();
}

bool QuotientReport::all_agree() const {
  std::optional<Verdict> seen;
  for (const auto& [id, res] : verdicts) {
    if (res.verdict == Verdict::skipped) continue;
    if (seen && *seen != res.verdict) return false;
    seen = res.verdict;
  }
  return true;
}

std::optional<bool> QuotientReport::common_verdict() const {
  std::optional<bool> out;
  for (const auto& [id, res] : verdicts) {
    if (res.verdict == Verdict::skipped) continue;
    bool v = res.verdict == Verdict::true_;
    if (out && *out != v) return std::nullopt;
    out = v;
  }
  return out;
}

QuotientReport quotient_suite(const SubmodularFn& p, const SubmodularFn& q,
                              const Caps& caps, std::vector<int> methods) {
  require_same_ground(p, q);
  if (methods.empty()) {
    methods.resize(10);
    std::iota(methods.begin(), methods.end(), 1);
  }
  for (int m : methods)
    if (m < 1 || m > 10)
      throw UsageError("unknown characterization id " + std::to_string(m));

  QuotientReport report;
  const bool compliant = check_compliant(p, q);
  const char* existential_note =
      "no witness for a non-compliant pair; verdict by equivalence with (1)";
  std::optional<MConvexSet> p_set, q_set;
  auto sets = [&]() -> std::pair<const MConvexSet&, const MConvexSet&> {
    if (!p_set) {
      p_set = submodular_to_set(p);
      q_set = submodular_to_set(q);
    }
    return {*p_set, *q_set};
  };

  for (int m : methods) {
    switch (m) {
      case 1:
        report.verdicts[1] = compliant ? CheckResult::yes() : CheckResult::no();
        break;
      case 2:
        report.verdicts[2] = check_vertex_containment(p, q, caps);
        break;
      case 3:
        report.verdicts[3] =
            check_contraction_containment(p, q) ? CheckResult::yes() : CheckResult::no();
        break;
      case 4: {
        bool ok = check_top_bottom(p, q);
        if (ok) report.witnesses.sandwich = gpoly_points(p, q);
        report.verdicts[4] = ok ? CheckResult::yes() : CheckResult::no();
        break;
      }
      case 5: {
        if (!compliant) {
          report.verdicts[5] = CheckResult::no(existential_note);
          break;
        }
        SubmodularFn wit = deletion_contraction_witness(p, q);
        bool ok = verify_deletion_contraction(wit, p, q);
        if (ok) report.witnesses.single_element_lift = wit;
        report.verdicts[5] = ok ? CheckResult::yes() : CheckResult::no("witness failed re-verification");
        break;
      }
      case 6: {
        auto [ps, qs] = sets();
        report.verdicts[6] = check_exchange(ps, qs) ? CheckResult::yes() : CheckResult::no();
        break;
      }
      case 7: {
        if (!compliant) {
          report.verdicts[7] = CheckResult::no(existential_note);
          break;
        }
        InductionWitness wit = induction_witness(p, q);
        bool ok = verify_induction(wit, p, q);
        if (ok) report.witnesses.induction = wit;
        report.verdicts[7] = ok ? CheckResult::yes() : CheckResult::no("witness failed re-verification");
        break;
      }
      case 8: {
        if (!compliant) {
          report.verdicts[8] = CheckResult::no(existential_note);
          break;
        }
        GreenWitness wit = green_witness(p, q);
        bool ok = verify_green(wit, p, q);
        if (ok) report.witnesses.green = wit;
        report.verdicts[8] = ok ? CheckResult::yes() : CheckResult::no("witness failed re-verification");
        break;
      }
      case 9: {
        auto [ps, qs] = sets();
        std::optional<CompatibleLifts> lifts;
        report.verdicts[9] = check_matroid_lift_quotient(ps, qs, caps, &lifts);
        if (lifts && !report.witnesses.lifts) report.witnesses.lifts = std::move(lifts);
        break;
      }
      case 10: {
        auto [ps, qs] = sets();
        std::optional<CompatibleLifts> lifts;
        report.verdicts[10] = check_compressed_quotient(ps, qs, caps, &lifts);
        if (lifts && !report.witnesses.lifts) report.witnesses.lifts = std::move(lifts);
        break;
      }
      default:
        break;
    }
  }
  return report;
}

}  // namespace mcq
