#include <iostream>

#include "mcq/flags.hpp"
#include "mcq/generator.hpp"
#include "mcq/io.hpp"
#include "mcq/lift.hpp"
#include "mcq/mfunc.hpp"
#include "mcq/quotient.hpp"
#include "mcq/set_ops.hpp"

using namespace mcq;

int main() {
  Fixtures f = fixtures();
  Caps caps;

  // Box / plank on proj_R.
  GPolyIntersection plank = intersect_plank(f.proj_R, 0, 1);
  std::cout << "plank pts: " << Json(plank.set.points().points().size()).dump()
            << " expect 5\n";
  GPolyIntersection box =
      intersect_box(f.proj_R, Point{-1, -1}, Point{1, 1});
  std::cout << "box == R: " << (box.set == f.proj_R) << "\n";
  MNatSet p3 = MNatSet::make(f.demo_P.ground(),
                             std::vector<Point>(f.demo_P.points().begin(),
                                                f.demo_P.points().end()),
                             Certify::no);
  GPolyIntersection box3 = intersect_box(p3, Point{0, 0, 0}, Point{1, 1, 1});
  std::cout << "P box points: " << box3.set.size() << " expect 3\n";

  // restrict / project examples.
  MConvexSet rP = restrict_to(f.demo_P, 0b011);
  std::cout << "restrict P: " << Json(to_json(rP)["points"]).dump() << " expect [[0,1],[1,0]]\n";
  try {
    restrict_to(f.demo_Q, 0b011);
    std::cout << "restrict Q: NO ERROR (bad)\n";
  } catch (const EmptyResultError&) {
    std::cout << "restrict Q: empty-result ok\n";
  }

  // 2.38 pair: characterizations 9 and 10 run fully.
  SubmodularFn fp = set_to_submodular(f.flag_P), fq = set_to_submodular(f.flag_Q);
  QuotientReport rep = quotient_suite(fp, fq, caps);
  for (int id : {9, 10})
    std::cout << "flag pair char " << id << ": "
              << (rep.verdicts[id].verdict == Verdict::true_ ? "true" : "OTHER") << "\n";

  // Non-quotient pair: all checkers false.
  MConvexSet badP = MConvexSet::make(GroundSet(2), {{1, 0}, {0, 1}}, Certify::yes);
  MConvexSet badQ = MConvexSet::make(GroundSet(2), {{1, -1}}, Certify::yes);
  QuotientReport bad = quotient_suite(set_to_submodular(badP), set_to_submodular(badQ), caps);
  bool all_false = true;
  for (auto& [id, res] : bad.verdicts)
    if (res.verdict == Verdict::true_) all_false = false;
  std::cout << "bad pair all non-true: " << all_false
            << ", agree: " << bad.all_agree() << "\n";

  // Function hierarchy on a curved gap-1 pair.
  MFunc ff = gen_m_func(7, f.flag_P, 2);
  MFunc gg = truncation_fn(ff, Certify::yes);
  CheckResult a = quotient_A(ff, gg);
  std::optional<InductionFnWitness> bw;
  CheckResult b = quotient_B(ff, gg, &bw);
  bool c = quotient_C(ff, gg);
  CheckResult d = quotient_D(ff, gg, caps);
  std::cout << "A=" << int(a.verdict) << " B=" << int(b.verdict) << " C=" << c
            << " D=" << int(d.verdict) << " (expect 0,0,1,0 with true_=0)\n";

  // Negative pair: tampered truncation values.
  ValueMap vm = gg.values();
  vm.begin()->second += 100;
  MFunc gg_bad = MFunc::make(gg.ground(), vm, Certify::no);
  if (check_m_convex_fn(gg_bad.ground(), gg_bad.values())) {
    CheckResult a2 = quotient_A(ff, gg_bad);
    std::optional<InductionFnWitness> bw2;
    CheckResult b2 = quotient_B(ff, gg_bad, &bw2);
    bool c2 = quotient_C(ff, gg_bad);
    CheckResult d2 = quotient_D(ff, gg_bad, caps);
    std::cout << "tampered: A=" << int(a2.verdict) << " B=" << int(b2.verdict)
              << " C=" << c2 << " D=" << int(d2.verdict) << "\n";
  } else {
    std::cout << "tampered g not m-convex; skip\n";
  }

  // Thm 5.5 negative direction: perturb one value of a certified function.
  ValueMap fv = ff.values();
  fv.begin()->second -= 50;  // deep dent breaks exchange
  bool axiom = check_m_convex_fn(ff.ground(), fv);
  MFunc ffbad = MFunc::make(ff.ground(), fv, Certify::no);
  MinimizerAtlas atlas = minimizer_atlas(ffbad, ffbad, caps);
  bool all_cells_ok = true;
  for (auto& e : atlas.entries)
    if (!check_m_convex(std::vector<Point>(e.fcell.points().begin(), e.fcell.points().end())))
      all_cells_ok = false;
  std::cout << "perturbed axiom=" << axiom << " cells-all-mconvex=" << all_cells_ok
            << " (expect equal)\n";

  // Degenerate atlas.
  MFunc one = MFunc::make(GroundSet(2), {{Point{1, 2}, Rat(0)}}, Certify::yes);
  MFunc two = MFunc::make(GroundSet(2), {{Point{0, 0}, Rat(0)}}, Certify::yes);
  MinimizerAtlas da = minimizer_atlas(one, two, caps);
  std::cout << "degenerate atlas entries: " << da.entries.size() << " u0=";
  for (auto& c : da.entries[0].u) std::cout << rat_to_string(c) << ",";
  std::cout << " expect 1 entry, u=0\n";

  // Weighted bipartite linking function with zero weights matches the
  // unvaluated induction.
  LinkingFn gfn = bipartite_linking_fn(f.k32);
  MFunc w_ind = MFunc::make(GroundSet(2),
                            {{Point{1, 1}, Rat(0)}, {Point{2, 0}, Rat(0)}, {Point{0, 2}, Rat(0)}},
                            Certify::yes);
  MFunc induced = induce_fn(w_ind, gfn, Certify::yes);
  std::cout << "weighted induction dom: " << induced.dom_size() << "\n";

  // Sparse paving: uniform matroids.
  std::vector<Point> u24, u14;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c2 = 0; c2 < 2; ++c2)
        for (int dd = 0; dd < 2; ++dd) {
          Point x{a, b, c2, dd};
          if (coord_sum(x) == 2) u24.push_back(x);
          if (coord_sum(x) == 1) u14.push_back(x);
        }
  ValueMap vf, vg;
  for (auto& x : u24) vf.emplace(x, Rat(0));
  for (auto& x : u14) vg.emplace(x, Rat(0));
  MFunc su = MFunc::make(GroundSet(4), vf, Certify::yes);
  MFunc sv = MFunc::make(GroundSet(4), vg, Certify::yes);
  std::cout << "sparse paving checks: " << is_sparse_paving_valuated(su) << " "
            << is_sparse_paving_valuated(sv) << "\n";
  MNatFunc sp = sparse_paving_quotient(su, sv, caps);
  std::cout << "sparse paving h dom: " << sp.values().size() << "\n";

  return 0;
}
