// Command-line front end: every library operation behind one binary with a
// bit-exact JSON interface. Exit codes: 0 = success / verdict true,
// 1 = verdict false, 2 = usage or validation error (JSON error on stderr).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "mcq/flags.hpp"
#include "mcq/generator.hpp"
#include "mcq/io.hpp"
#include "mcq/lift.hpp"
#include "mcq/linking.hpp"
#include "mcq/mfunc.hpp"
#include "mcq/quotient.hpp"
#include "mcq/selftest.hpp"
#include "mcq/set_ops.hpp"

namespace {

using namespace mcq;

Json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void emit(const Json& j) { std::cout << canonical_dump(j); }

int verdict_exit(bool v) { return v ? 0 : 1; }

int verdict_exit(const CheckResult& r) {
  if (r.verdict == Verdict::skipped)
    throw UsageError("check skipped: " + r.note);
  return verdict_exit(r.verdict == Verdict::true_);
}

Mask parse_elements(const std::string& csv, int n, const char* what) {
  Mask m = 0;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int e = std::stoi(item);
    if (e < 1 || e > n)
      throw UsageError(std::string(what) + ": element " + item + " outside 1.." +
                       std::to_string(n));
    m |= Mask{1} << (e - 1);
  }
  if (m == 0) throw UsageError(std::string(what) + ": empty element list");
  return m;
}

Point parse_point(const std::string& csv) {
  Point p;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) p.push_back(std::stoll(item));
  if (p.empty()) throw UsageError("empty coordinate list");
  return p;
}

std::vector<Rat> parse_tilt(const std::string& csv) {
  std::vector<Rat> u;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) u.push_back(rat_from_string(item));
  return u;
}

std::vector<int> parse_methods(const std::string& s) {
  if (s == "all" || s.empty()) return {};
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

Caps caps_from_flag(const std::string& flag) {
  if (flag.empty()) return Caps::from_env();
  // Same key=value syntax as the MCQ_CAPS environment variable.
  Caps c = Caps::from_env();
  std::stringstream ss(flag);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--caps entry without '=': " + item);
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
      throw UsageError("--caps unknown key: " + key);
  }
  return c;
}

// Layer structure plus vertex coordinates for external plotting.
Json coords_payload(const GroundSet& g, const std::vector<Point>& pts, const Caps& caps) {
  std::map<Int, std::vector<Point>> by_sum;
  for (const Point& p : pts) by_sum[coord_sum(p)].push_back(p);
  Json layers = Json::array();
  for (const auto& [sum, layer] : by_sum)
    layers.push_back(Json{{"sum", sum}, {"points", layer}});
  Json out{{"layers", std::move(layers)}};
  if (g.size <= caps.perm_n && !pts.empty()) {
    bool constant = by_sum.size() == 1;
    if (constant) {
      MConvexSet s = MConvexSet::make(g, pts, Certify::no);
      PointSet vs = vertex_set(set_to_submodular(s));
      Json verts = Json::array();
      for (const Point& v : vs.points()) verts.push_back(v);
      out["vertices"] = std::move(verts);
    }
  }
  return out;
}

MConvexSet load_mconvex(const std::string& path) {
  return mconvex_from_json(load(path), Certify::yes);
}

MNatSet load_mnat(const std::string& path) {
  return mnat_from_json(load(path), Certify::yes);
}

SubmodularFn load_submodular(const std::string& path) {
  return submodular_from_json(load(path), Certify::yes);
}

MFunc load_mfunc(const std::string& path) { return mfunc_from_json(load(path), Certify::yes); }

int run(int argc, char** argv) {
  CLI::App app{"Quotients of M-convex sets and M-convex functions"};
  app.require_subcommand(1);
  bool emit_coords = false;
  std::string caps_flag;
  app.add_flag("--emit-coords", emit_coords,
               "attach layer structure and vertex coordinates to set outputs");
  app.add_option("--caps", caps_flag, "size caps, e.g. perm=8,lift=16,sweep=9");

  int exit_code = 0;

  // check -------------------------------------------------------------
  auto* check = app.add_subcommand("check", "certify an object against its axioms");
  std::string check_kind, check_in;
  check->add_option("kind", check_kind, "m-convex | mnat | submodular | m-func | mnat-func")
      ->required();
  check->add_option("--in", check_in, "input JSON")->required();
  check->callback([&] {
    Json j = load(check_in);
    bool ok = false;
    if (check_kind == "m-convex") {
      MConvexSet s = mconvex_from_json(j, Certify::no);
      ok = check_m_convex(
          std::vector<Point>(s.points().begin(), s.points().end()));
    } else if (check_kind == "mnat") {
      MNatSet s = mnat_from_json(j, Certify::no);
      ok = check_mnat_convex(
          std::vector<Point>(s.points().begin(), s.points().end()));
    } else if (check_kind == "submodular") {
      SubmodularFn p = submodular_from_json(j, Certify::no);
      ok = check_submodular(p.fn());
    } else if (check_kind == "m-func") {
      MFunc f = mfunc_from_json(j, Certify::no);
      ok = check_m_convex_fn(f.ground(), f.values());
    } else if (check_kind == "mnat-func") {
      MNatFunc f = mnatfunc_from_json(j, Certify::no);
      ok = check_mnat_fn(f.ground(), f.values());
    } else {
      throw UsageError("unknown check kind: " + check_kind);
    }
    emit(Json{{"schema", kSchemaVersion}, {"check", check_kind}, {"verdict", ok}});
    exit_code = verdict_exit(ok);
  });

  // convert -----------------------------------------------------------
  auto* convert = app.add_subcommand("convert", "set <-> submodular function");
  std::string convert_dir, convert_in;
  convert->add_option("direction", convert_dir, "set-to-fn | fn-to-set")->required();
  convert->add_option("--in", convert_in)->required();
  convert->callback([&] {
    if (convert_dir == "set-to-fn") {
      emit(to_json(set_to_submodular(load_mconvex(convert_in))));
    } else if (convert_dir == "fn-to-set") {
      MConvexSet s = submodular_to_set(load_submodular(convert_in));
      Json j = to_json(s);
      if (emit_coords)
        j["coords"] = coords_payload(s.ground(),
                                     std::vector<Point>(s.points().begin(), s.points().end()),
                                     caps_from_flag(caps_flag));
      emit(j);
    } else {
      throw UsageError("unknown conversion: " + convert_dir);
    }
  });

  // vertices ----------------------------------------------------------
  auto* vertices = app.add_subcommand("vertices", "greedy vertices over all orders");
  std::string vert_in;
  vertices->add_option("--in", vert_in, "submodular table or M-convex set JSON")->required();
  vertices->callback([&] {
    Json j = load(vert_in);
    SubmodularFn p = j.contains("table") ? submodular_from_json(j, Certify::yes)
                                         : set_to_submodular(mconvex_from_json(j, Certify::yes));
    Caps caps = caps_from_flag(caps_flag);
    if (p.ground().size > caps.perm_n)
      throw UsageError("vertex sweep exceeds cap perm=" + std::to_string(caps.perm_n));
    PointSet vs = vertex_set(p);
    Json verts = Json::array();
    for (const Point& v : vs.points()) verts.push_back(v);
    emit(Json{{"schema", kSchemaVersion}, {"vertices", std::move(verts)}});
  });

  // ops ---------------------------------------------------------------
  auto* ops = app.add_subcommand("ops", "structural operations");
  std::string op_name, op_in, op_b, op_keep, op_vec, op_lo, op_hi, op_drop, op_mode;
  Int op_k = 1, op_alpha = 0, op_beta = 0;
  bool has_alpha = false, has_beta = false, has_k_level = false;
  Int op_level = 0;
  ops->add_option("name", op_name,
                  "restrict | project | sum | translate | truncate | elongate | box | "
                  "plank | minor")
      ->required();
  ops->add_option("--in", op_in);
  ops->add_option("--b", op_b, "second operand for sum");
  ops->add_option("--keep", op_keep, "elements kept, e.g. 1,2");
  ops->add_option("--v", op_vec, "translation vector, e.g. 1,0,-1");
  ops->add_option("--k", op_k, "repetition count for truncate/elongate");
  ops->add_option("--lo", op_lo, "box lower corner");
  ops->add_option("--hi", op_hi, "box upper corner");
  ops->add_option("--alpha", op_alpha)->each([&](const std::string&) { has_alpha = true; });
  ops->add_option("--beta", op_beta)->each([&](const std::string&) { has_beta = true; });
  ops->add_option("--drop", op_drop, "elements removed by the minor, e.g. 3");
  ops->add_option("--mode", op_mode, "deletion | contraction | level (minor)");
  ops->add_option("--level", op_level, "layer for minor --mode level")
      ->each([&](const std::string&) { has_k_level = true; });
  ops->callback([&] {
    Caps caps = caps_from_flag(caps_flag);
    auto emit_set = [&](const MConvexSet& s) {
      Json j = to_json(s);
      if (emit_coords)
        j["coords"] = coords_payload(
            s.ground(), std::vector<Point>(s.points().begin(), s.points().end()), caps);
      emit(j);
    };
    if (op_name == "restrict") {
      MConvexSet p = load_mconvex(op_in);
      emit_set(restrict_to(p, parse_elements(op_keep, p.ground().size, "restrict")));
    } else if (op_name == "project") {
      MConvexSet p = load_mconvex(op_in);
      MNatSet r = project_onto(p, parse_elements(op_keep, p.ground().size, "project"),
                               Certify::no);
      emit(to_json(r));
    } else if (op_name == "sum") {
      emit_set(minkowski_sum(load_mconvex(op_in), load_mconvex(op_b)));
    } else if (op_name == "translate") {
      emit_set(translate(load_mconvex(op_in), parse_point(op_vec)));
    } else if (op_name == "truncate") {
      emit_set(truncate(load_mconvex(op_in), op_k));
    } else if (op_name == "elongate") {
      emit_set(elongate(load_mconvex(op_in), op_k));
    } else if (op_name == "box") {
      GPolyIntersection r =
          intersect_box(load_mnat(op_in), parse_point(op_lo), parse_point(op_hi));
      emit(Json{{"schema", kSchemaVersion},
                {"set", to_json(r.set)},
                {"upper", to_json(r.upper)},
                {"lower", to_json(r.lower)}});
    } else if (op_name == "plank") {
      if (!has_alpha || !has_beta) throw UsageError("plank needs --alpha and --beta");
      GPolyIntersection r = intersect_plank(load_mnat(op_in), op_alpha, op_beta);
      emit(Json{{"schema", kSchemaVersion},
                {"set", to_json(r.set)},
                {"upper", to_json(r.upper)},
                {"lower", to_json(r.lower)}});
    } else if (op_name == "minor") {
      MConvexSet p = load_mconvex(op_in);
      Mask u = parse_elements(op_drop, p.ground().size, "minor");
      Minor m = [&] {
        if (op_mode == "deletion" || op_mode.empty()) return deletion(p, u);
        if (op_mode == "contraction") return contraction(p, u);
        if (op_mode == "level") {
          if (!has_k_level) throw UsageError("minor --mode level needs --level");
          return basic_minor(p, u, op_level);
        }
        throw UsageError("unknown minor mode: " + op_mode);
      }();
      emit(Json{{"schema", kSchemaVersion},
                {"set", to_json(m.set)},
                {"table", to_json(m.table)}});
    } else {
      throw UsageError("unknown operation: " + op_name);
    }
  });

  // quotient ----------------------------------------------------------
  auto* quotient = app.add_subcommand("quotient", "run the characterization suite");
  std::string quo_p, quo_q, quo_methods = "all";
  quotient->add_option("--p", quo_p)->required();
  quotient->add_option("--q", quo_q)->required();
  quotient->add_option("--methods", quo_methods, "all or a comma list of 1..10");
  quotient->callback([&] {
    QuotientReport rep =
        quotient_suite(load_submodular(quo_p), load_submodular(quo_q),
                       caps_from_flag(caps_flag), parse_methods(quo_methods));
    emit(to_json(rep));
    auto common = rep.common_verdict();
    if (!rep.all_agree()) throw UsageError("characterizations disagree");
    exit_code = verdict_exit(common.value_or(true));
  });

  // induce ------------------------------------------------------------
  auto* induce_cmd = app.add_subcommand("induce", "induction of a set through a linking set");
  std::string ind_w, ind_gamma;
  induce_cmd->add_option("--w", ind_w)->required();
  induce_cmd->add_option("--gamma", ind_gamma)->required();
  induce_cmd->callback([&] {
    LinkingSet gamma = linking_from_json(load(ind_gamma), Certify::yes);
    Json wj = load(ind_w);
    std::vector<Point> pts;
    for (const Json& row : wj.at("points")) pts.push_back(row.get<Point>());
    bool constant = true;
    for (const Point& p : pts)
      if (coord_sum(p) != coord_sum(pts.front())) constant = false;
    if (constant) {
      MConvexSet w = mconvex_from_json(wj, Certify::yes);
      emit(to_json(induce(w, gamma, Certify::no)));
    } else {
      MNatSet w = mnat_from_json(wj, Certify::yes);
      emit(to_json(induce(w, gamma, Certify::no)));
    }
  });

  // link-product --------------------------------------------------------
  auto* lp = app.add_subcommand("link-product", "monoid product of two linking sets");
  std::string lp_a, lp_b;
  lp->add_option("--a", lp_a)->required();
  lp->add_option("--b", lp_b)->required();
  lp->callback([&] {
    emit(to_json(product(linking_from_json(load(lp_a), Certify::yes),
                         linking_from_json(load(lp_b), Certify::yes), Certify::yes)));
  });

  // lift ---------------------------------------------------------------
  auto* lift_cmd = app.add_subcommand("lift", "box, matroid and k-polymatroid lifts");
  std::string lift_kind, lift_in, lift_q, lift_phi, lift_v, lift_lo, lift_hi;
  Int lift_k = 1;
  lift_cmd->add_option("kind", lift_kind, "matroid | kpoly | box | compatible")->required();
  lift_cmd->add_option("--in", lift_in);
  lift_cmd->add_option("--q", lift_q, "second set for compatible lifts");
  lift_cmd->add_option("--k", lift_k);
  lift_cmd->add_option("--phi", lift_phi, "surjection targets, 1-indexed, e.g. 1,1,2");
  lift_cmd->add_option("--v", lift_v, "translation on the target ground set");
  lift_cmd->add_option("--lo", lift_lo);
  lift_cmd->add_option("--hi", lift_hi);
  lift_cmd->callback([&] {
    if (lift_kind == "matroid") {
      Lift l = matroid_lift(load_mconvex(lift_in), Certify::yes);
      emit(Json{{"schema", kSchemaVersion},
                {"set", to_json(l.set)},
                {"certificate", to_json(l.cert)}});
    } else if (lift_kind == "kpoly") {
      Lift l = k_polymatroid_lift(load_mconvex(lift_in), lift_k, Certify::yes);
      emit(Json{{"schema", kSchemaVersion},
                {"set", to_json(l.set)},
                {"certificate", to_json(l.cert)}});
    } else if (lift_kind == "box") {
      MConvexSet p = load_mconvex(lift_in);
      Surjection phi;
      for (Int t : parse_point(lift_phi)) phi.map.push_back(static_cast<int>(t) - 1);
      phi.codomain = p.ground().size;
      MConvexSet l = box_lift(p, parse_point(lift_lo), parse_point(lift_hi), phi,
                              parse_point(lift_v), Certify::yes);
      emit(to_json(l));
    } else if (lift_kind == "compatible") {
      CompatibleLifts cl = compatible_lifts(load_mconvex(lift_in), load_mconvex(lift_q),
                                            Certify::yes);
      emit(Json{{"schema", kSchemaVersion},
                {"m", to_json(cl.m)},
                {"n", to_json(cl.n)},
                {"certificate", to_json(cl.cert)}});
    } else {
      throw UsageError("unknown lift kind: " + lift_kind);
    }
  });

  // flag ----------------------------------------------------------------
  auto* flag_cmd = app.add_subcommand("flag", "flags of M-convex sets and function chains");
  std::string flag_action;
  std::vector<std::string> flag_files;
  flag_cmd->add_option("action", flag_action, "check | complete | mnat-complete | constants")
      ->required();
  flag_cmd->add_option("files", flag_files, "members bottom-up (lowest rank first)")
      ->required()
      ->expected(-1);
  flag_cmd->callback([&] {
    if (flag_action == "constants") {
      std::vector<MFunc> chain;
      for (const std::string& path : flag_files) chain.push_back(load_mfunc(path));
      FlagConstants fc = flag_constants(chain);
      Json cs = Json::array();
      for (const Rat& c : fc.constants) cs.push_back(rat_to_string(c));
      emit(Json{{"schema", kSchemaVersion},
                {"constants", std::move(cs)},
                {"h", to_json(fc.h)}});
      return;
    }
    std::vector<MConvexSet> members;
    for (const std::string& path : flag_files) members.push_back(load_mconvex(path));
    if (flag_action == "check") {
      bool ok = check_flag(members);
      emit(Json{{"schema", kSchemaVersion}, {"verdict", ok}});
      exit_code = verdict_exit(ok);
    } else if (flag_action == "complete") {
      std::vector<MConvexSet> full = complete_flag(members);
      Json arr = Json::array();
      for (const MConvexSet& s : full) arr.push_back(to_json(s));
      Json j{{"schema", kSchemaVersion}, {"flag", std::move(arr)}};
      if (emit_coords) {
        std::vector<Point> all;
        for (const MConvexSet& s : full)
          all.insert(all.end(), s.points().begin(), s.points().end());
        j["coords"] = coords_payload(members.front().ground(), all, caps_from_flag(caps_flag));
      }
      emit(j);
    } else if (flag_action == "mnat-complete") {
      MnatFlag mf = mnat_completion(members);
      Json arr = Json::array();
      for (const MConvexSet& s : mf.layers) arr.push_back(to_json(s));
      emit(Json{{"schema", kSchemaVersion},
                {"union", to_json(mf.union_set)},
                {"layers", std::move(arr)}});
    } else {
      throw UsageError("unknown flag action: " + flag_action);
    }
  });

  // fn -------------------------------------------------------------------
  auto* fn = app.add_subcommand("fn", "M-convex function operations");
  std::string fn_action, fn_f, fn_g, fn_u, fn_kind, fn_gamma, fn_r;
  fn->add_option("action", fn_action,
                 "minimizer | atlas | convolve | quotient | induce | truncate | "
                 "elongate | sparse-paving")
      ->required();
  fn->add_option("--f", fn_f);
  fn->add_option("--g", fn_g);
  fn->add_option("--u", fn_u, "tilt, e.g. 1,1/2,-2");
  fn->add_option("--kind", fn_kind, "A | B | C | D for fn quotient");
  fn->add_option("--gamma", fn_gamma, "linking function for fn induce");
  fn->add_option("--r", fn_r, "right-side function for fn induce");
  fn->callback([&] {
    Caps caps = caps_from_flag(caps_flag);
    if (fn_action == "minimizer") {
      MFunc f = load_mfunc(fn_f);
      std::vector<Rat> u = fn_u.empty()
                               ? std::vector<Rat>(static_cast<std::size_t>(f.ground().size), Rat(0))
                               : parse_tilt(fn_u);
      emit(to_json(minimizer(f, u)));
    } else if (fn_action == "atlas") {
      emit(to_json(minimizer_atlas(load_mfunc(fn_f), load_mfunc(fn_g), caps)));
    } else if (fn_action == "convolve") {
      emit(to_json(convolution(load_mfunc(fn_f), load_mfunc(fn_g), Certify::yes)));
    } else if (fn_action == "quotient") {
      MFunc f = load_mfunc(fn_f), g = load_mfunc(fn_g);
      CheckResult res;
      Json extra;
      if (fn_kind == "A") {
        res = quotient_A(f, g);
      } else if (fn_kind == "B") {
        std::optional<InductionFnWitness> wit;
        res = quotient_B(f, g, &wit);
        if (wit)
          extra = Json{{"gamma", to_json(wit->gamma)}, {"r", to_json(wit->r)}};
      } else if (fn_kind == "C") {
        res = quotient_C(f, g) ? CheckResult::yes() : CheckResult::no();
      } else if (fn_kind == "D") {
        res = quotient_D(f, g, caps);
      } else {
        throw UsageError("fn quotient needs --kind A|B|C|D");
      }
      Json j{{"schema", kSchemaVersion},
             {"kind", fn_kind},
             {"verdict", res.verdict == Verdict::true_    ? "true"
                         : res.verdict == Verdict::false_ ? "false"
                                                          : "skipped"}};
      if (!res.note.empty()) j["note"] = res.note;
      if (!extra.is_null()) j["witness"] = std::move(extra);
      emit(j);
      exit_code = verdict_exit(res);
    } else if (fn_action == "induce") {
      emit(to_json(induce_fn(load_mfunc(fn_r), linkingfn_from_json(load(fn_gamma)),
                             Certify::yes)));
    } else if (fn_action == "truncate") {
      emit(to_json(truncation_fn(load_mfunc(fn_f), Certify::yes)));
    } else if (fn_action == "elongate") {
      emit(to_json(elongation_fn(load_mfunc(fn_f), Certify::yes)));
    } else if (fn_action == "sparse-paving") {
      emit(to_json(sparse_paving_quotient(load_mfunc(fn_f), load_mfunc(fn_g), caps)));
    } else {
      throw UsageError("unknown fn action: " + fn_action);
    }
  });

  // gen --------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "seeded certified instance generators");
  std::string gen_kind, gen_domain;
  std::uint64_t gen_seed = 0;
  int gen_n = 3;
  Int gen_scale = 2, gen_curvature = 1;
  gen->add_option("kind", gen_kind,
                  "submodular | quotient-pair | non-quotient-pair | m-func")
      ->required();
  gen->add_option("--seed", gen_seed)->required();
  gen->add_option("--n", gen_n);
  gen->add_option("--scale", gen_scale);
  gen->add_option("--curvature", gen_curvature);
  gen->add_option("--domain", gen_domain, "domain set JSON for m-func");
  gen->callback([&] {
    if (gen_kind == "submodular") {
      emit(to_json(gen_submodular(gen_seed, gen_n, gen_scale)));
    } else if (gen_kind == "quotient-pair") {
      auto [p, q] = gen_quotient_pair(gen_seed, gen_n, gen_scale);
      emit(Json{{"schema", kSchemaVersion}, {"p", to_json(p)}, {"q", to_json(q)}});
    } else if (gen_kind == "non-quotient-pair") {
      auto [p, q] = gen_non_quotient_pair(gen_seed, gen_n, gen_scale);
      emit(Json{{"schema", kSchemaVersion}, {"p", to_json(p)}, {"q", to_json(q)}});
    } else if (gen_kind == "m-func") {
      emit(to_json(gen_m_func(gen_seed, load_mconvex(gen_domain), gen_curvature)));
    } else {
      throw UsageError("unknown generator: " + gen_kind);
    }
  });

  // fixtures -----------------------------------------------------------------
  auto* fixtures_cmd = app.add_subcommand("fixtures", "worked-example instances");
  std::string fixture_name;
  fixtures_cmd->add_option("name", fixture_name, "fixture to print; omit to list");
  fixtures_cmd->callback([&] {
    if (fixture_name.empty()) {
      emit(Json{{"schema", kSchemaVersion}, {"fixtures", fixture_names()}});
    } else {
      emit(fixture_json(fixture_name));
    }
  });

  // selftest -------------------------------------------------------------------
  auto* selftest = app.add_subcommand("selftest", "agreement harness over generated pairs");
  std::uint64_t st_seed = 42;
  int st_pairs = 25, st_n = 3;
  Int st_scale = 2;
  selftest->add_option("--seed", st_seed);
  selftest->add_option("--pairs", st_pairs, "instances per class");
  selftest->add_option("--n", st_n);
  selftest->add_option("--scale", st_scale);
  selftest->callback([&] {
    std::string out =
        run_selftest(st_seed, st_pairs, st_pairs, st_n, st_scale, caps_from_flag(caps_flag));
    std::cout << out;
    Json j = Json::parse(out);
    exit_code = j["ok"].get<bool>() ? 0 : 1;
  });

  // Global options (--emit-coords, --caps) remain matchable after any
  // subcommand name.
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mcq::UsageError& e) {
    std::cerr << Json{{"error", e.what()}, {"kind", "usage"}}.dump() << "\n";
    return 2;
  } catch (const mcq::EmptyResultError& e) {
    std::cerr << Json{{"error", e.what()}, {"kind", "empty-result"}}.dump() << "\n";
    return 2;
  } catch (const mcq::NoWitnessError& e) {
    std::cerr << Json{{"error", e.what()}, {"kind", "no-witness"}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
    return 2;
  }
}
