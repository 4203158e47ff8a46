#include "mcq/generator.hpp"

#include <algorithm>

#include "mcq/quotient.hpp"

namespace mcq {

std::uint64_t Rng::next() {
  // splitmix64; stable across platforms and standard libraries.
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Int Rng::uniform(Int lo, Int hi) {
  if (lo > hi) throw UsageError("Rng::uniform: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<Int>(next() % span);
}

Rng Rng::split(std::uint64_t stream) {
  Rng child(state_ ^ (0xd1342543de82ef95ull * (stream + 1)));
  child.next();
  return child;
}

SubmodularFn gen_submodular(std::uint64_t seed, int n, Int scale) {
  if (n < 1) throw UsageError("gen_submodular: n must be positive");
  Rng rng(seed);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Int> table(std::size_t{1} << n, 0);
  if (scale <= 0) return SubmodularFn::make(GroundSet(n), std::move(table), Certify::no);

  auto add_modular = [&]() {
    Point v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      v[static_cast<std::size_t>(i)] = rng.uniform(-scale, scale);
    for (Mask a = 1; a <= full; ++a) table[a] += coord_sum(v, a);
  };
  auto add_budget = [&]() {
    Mask s = static_cast<Mask>(rng.uniform(1, full));
    Int a = rng.uniform(1, scale);
    Int b = rng.uniform(1, scale * 2);
    for (Mask m = 1; m <= full; ++m)
      table[m] += std::min(a * popcount(m & s), b);
  };
  auto add_uniform_rank = [&]() {
    Int r = rng.uniform(1, n);
    Int w = rng.uniform(1, scale);
    for (Mask m = 1; m <= full; ++m)
      table[m] += w * std::min<Int>(popcount(m), r);
  };
  auto add_partition_rank = [&]() {
    std::vector<int> part(static_cast<std::size_t>(n));
    int blocks = static_cast<int>(rng.uniform(1, n));
    for (int i = 0; i < n; ++i)
      part[static_cast<std::size_t>(i)] = static_cast<int>(rng.uniform(0, blocks - 1));
    std::vector<Int> cap(static_cast<std::size_t>(blocks));
    for (int b = 0; b < blocks; ++b) cap[static_cast<std::size_t>(b)] = rng.uniform(1, scale);
    for (Mask m = 1; m <= full; ++m) {
      Int total = 0;
      for (int b = 0; b < blocks; ++b) {
        Int cnt = 0;
        for (int i = 0; i < n; ++i)
          if ((m & (Mask{1} << i)) && part[static_cast<std::size_t>(i)] == b) ++cnt;
        total += std::min(cnt, cap[static_cast<std::size_t>(b)]);
      }
      table[m] += total;
    }
  };

  Int blocks = rng.uniform(1, 3);
  for (Int b = 0; b < blocks; ++b) {
    switch (rng.uniform(0, 3)) {
      case 0: add_modular(); break;
      case 1: add_budget(); break;
      case 2: add_uniform_rank(); break;
      default: add_partition_rank(); break;
    }
  }
  SubmodularFn out = SubmodularFn::make(GroundSet(n), std::move(table), Certify::no);
  if (!check_submodular(out.fn()))
    throw UsageError("gen_submodular produced a non-submodular table");
  return out;
}

std::pair<SubmodularFn, SubmodularFn> gen_quotient_pair(std::uint64_t seed, int n,
                                                        Int scale) {
  SubmodularFn r = gen_submodular(seed, n + 1, scale);
  const Mask e = Mask{1} << n;
  const Mask full_e = (Mask{1} << n) - 1;
  std::vector<Int> p(std::size_t{1} << n), q(std::size_t{1} << n);
  for (Mask a = 0; a <= full_e; ++a) {
    p[a] = r.value(a);
    q[a] = r.value(a | e) - r.value(e);
  }
  SubmodularFn pf = SubmodularFn::make(GroundSet(n), std::move(p), Certify::no);
  SubmodularFn qf = SubmodularFn::make(GroundSet(n), std::move(q), Certify::no);
  if (!check_compliant(pf, qf))
    throw UsageError("gen_quotient_pair produced a non-compliant pair");
  return {std::move(pf), std::move(qf)};
}

std::pair<SubmodularFn, SubmodularFn> gen_non_quotient_pair(std::uint64_t seed, int n,
                                                            Int scale) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    SubmodularFn p = gen_submodular(rng.next(), n, scale);
    SubmodularFn q = gen_submodular(rng.next(), n, scale);
    // Push q strictly below p in rank so failure is never a rank artifact.
    Int gap = p.rank() - q.rank();
    Int want = rng.uniform(1, std::max<Int>(scale, 1));
    Point shift(static_cast<std::size_t>(n), 0);
    Int delta = gap - want;  // make rank(q') = rank(p) - want
    for (int i = 0; i < n; ++i) shift[static_cast<std::size_t>(i)] = delta / n;
    for (Int rem = delta % n, i = 0; rem != 0; ++i) {
      shift[static_cast<std::size_t>(i)] += rem > 0 ? 1 : -1;
      rem += rem > 0 ? -1 : 1;
    }
    SetFn fn = q.fn();
    for (Mask a = 1; a <= fn.ground.full_mask(); ++a) fn.table[a] += coord_sum(shift, a);
    SubmodularFn qs = SubmodularFn::make(std::move(fn), Certify::no);
    if (!check_compliant(p, qs)) return {std::move(p), std::move(qs)};
  }
  throw UsageError("gen_non_quotient_pair: rejection cap of 10000 draws exceeded");
}

MFunc gen_m_func(std::uint64_t seed, const MConvexSet& p, Int curvature) {
  Rng rng(seed);
  const int n = p.ground().size;
  ValueMap values;
  if (curvature <= 0) {
    for (const Point& x : p.points()) values.emplace(x, Rat(0));
  } else {
    // Separable convex: each coordinate gets a random max of affine pieces
    // with rational coefficients.
    std::vector<std::vector<std::pair<Rat, Rat>>> pieces(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      Int count = rng.uniform(1, std::min<Int>(curvature, 4));
      for (Int t = 0; t < count; ++t) {
        Rat slope = rat(rng.uniform(-2 * curvature, 2 * curvature),
                        rng.uniform(1, 3));
        Rat offset = rat(rng.uniform(-2 * curvature, 2 * curvature),
                         rng.uniform(1, 3));
        pieces[static_cast<std::size_t>(i)].push_back({slope, offset});
      }
    }
    for (const Point& x : p.points()) {
      Rat total(0);
      for (int i = 0; i < n; ++i) {
        Rat best = pieces[static_cast<std::size_t>(i)].front().first * rat(x[static_cast<std::size_t>(i)]) +
                   pieces[static_cast<std::size_t>(i)].front().second;
        for (const auto& [a, b] : pieces[static_cast<std::size_t>(i)]) {
          Rat v = a * rat(x[static_cast<std::size_t>(i)]) + b;
          if (v > best) best = v;
        }
        total += best;
      }
      values.emplace(x, total);
    }
  }
  MFunc out = MFunc::make(p.ground(), std::move(values), Certify::no);
  if (!check_m_convex_fn(out.ground(), out.values()))
    throw UsageError("gen_m_func produced a non-M-convex function");
  return out;
}

namespace {

MConvexSet set3(std::vector<Point> pts) {
  return MConvexSet::make(GroundSet(3), std::move(pts), Certify::yes);
}

MConvexSet set2(std::vector<Point> pts) {
  return MConvexSet::make(GroundSet(2), std::move(pts), Certify::yes);
}

}  // namespace

Fixtures fixtures() {
  Fixtures f{
      .demo_P = set3({{1, 1, -1},
                      {1, -1, 1},
                      {-1, 1, 1},
                      {-1, 0, 2},
                      {0, -1, 2},
                      {1, 0, 0},
                      {0, 1, 0},
                      {0, 0, 1}}),
      .demo_Q = set3({{-1, -3, -1}, {-3, -1, -1}, {-1, -1, -3}, {-1, -2, -2},
                      {-2, -2, -1}, {-2, -1, -2}}),
      .demo_p = SubmodularFn::make(GroundSet(3), {0, 1, 1, 2, 2, 2, 2, 1}, Certify::yes),
      .demo_q = SubmodularFn::make(GroundSet(3), {0, -1, -1, -2, -1, -2, -2, -5},
                                   Certify::yes),
      // One extra element with offset c = 0; deletion gives demo_p and
      // contraction gives demo_q.
      .demo_r = SubmodularFn::make(
          GroundSet(4),
          {0, 1, 1, 2, 2, 2, 2, 1, 5, 4, 4, 3, 4, 3, 3, 0}, Certify::yes),
      .proj_R = MNatSet::make(GroundSet(2),
                              {{-1, 0}, {0, -1}, {-1, 1}, {0, 0}, {1, -1}, {0, 1},
                               {1, 0}, {1, 1}},
                              Certify::yes),
      .flag_P = set2({{4, 2}, {3, 3}, {2, 4}}),
      .flag_Q = set2({{3, 1}, {2, 2}, {1, 3}}),
      .flag_R = set2({{2, 0}, {1, 1}, {0, 2}}),
      .flag_P_prime = set2({{4, 1}, {3, 2}, {2, 3}, {1, 4}}),
      .flag_Q_prime = set2({{3, 0}, {2, 1}, {1, 2}, {0, 3}}),
      .flag_Q_tilde = set2({{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}}),
      .k32 = BipartiteGraph{3, 2,
                            {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}},
                            {}},
      .k32_W = set2({{2, 0}, {1, 1}, {0, 2}}),
      .k32_induced = set3({{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1},
                           {0, 0, 2}}),
      .twopoint_f = MFunc::make(GroundSet(2), {{Point{1, 1}, Rat(0)}}, Certify::yes),
      .twopoint_r = MFunc::make(GroundSet(2),
                                {{Point{1, 0}, Rat(1)}, {Point{0, 1}, Rat(1)}},
                                Certify::yes),
      .twopoint_g = MFunc::make(GroundSet(2), {{Point{0, 0}, Rat(0)}}, Certify::yes),
  };
  return f;
}

std::vector<std::string> fixture_names() {
  return {"demo_P",       "demo_Q",       "demo_p",       "demo_q",       "demo_r",
          "proj_R",       "flag_P",       "flag_Q",       "flag_R",       "flag_P_prime",
          "flag_Q_prime", "flag_Q_tilde", "k32",          "k32_W",        "k32_induced",
          "twopoint_f",   "twopoint_r",   "twopoint_g",   "nonregular_gamma"};
}

}  // namespace mcq
