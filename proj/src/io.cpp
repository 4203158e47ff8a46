#include "mcq/io.hpp"

namespace mcq {

namespace {

Json points_to_json(const PointSet& pts) {
  Json arr = Json::array();
  for (const Point& p : pts) arr.push_back(p);
  return arr;
}

std::vector<Point> points_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("expected an array of points");
  std::vector<Point> pts;
  for (const Json& row : j) {
    if (!row.is_array()) throw UsageError("expected a point as an array of integers");
    pts.push_back(row.get<Point>());
  }
  return pts;
}

void check_schema(const Json& j) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kSchemaVersion)
    throw UsageError("input is missing \"schema\": 1");
}

Json values_to_json(const GroundSet& g, const ValueMap& values) {
  Json arr = Json::array();
  for (const auto& [x, v] : values) {
    Json entry = Json::array();
    entry.push_back(Json(x));
    entry.push_back(rat_to_string(v));
    arr.push_back(std::move(entry));
  }
  (void)g;
  return arr;
}

ValueMap values_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("expected an array of [point, value] pairs");
  ValueMap out;
  for (const Json& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw UsageError("expected [point, value] pairs");
    Point x = entry[0].get<Point>();
    Rat v = rat_from_string(entry[1].get<std::string>());
    if (!out.emplace(std::move(x), std::move(v)).second)
      throw UsageError("duplicate point in function values");
  }
  return out;
}

}  // namespace

Json to_json(const GroundSet& g) {
  Json j{{"size", g.size}};
  if (!g.labels.empty()) j["labels"] = g.labels;
  return j;
}

GroundSet ground_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("size"))
    throw UsageError("ground set needs a \"size\" field");
  int n = j["size"].get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return GroundSet(n, std::move(labels));
}

Json to_json(const MConvexSet& s) {
  return Json{{"schema", kSchemaVersion},
              {"ground", to_json(s.ground())},
              {"points", points_to_json(s.points())}};
}

Json to_json(const MNatSet& s) {
  return Json{{"schema", kSchemaVersion},
              {"ground", to_json(s.ground())},
              {"points", points_to_json(s.points())}};
}

MConvexSet mconvex_from_json(const Json& j, Certify certify) {
  check_schema(j);
  return MConvexSet::make(ground_from_json(j.at("ground")),
                          points_from_json(j.at("points")), certify);
}

MNatSet mnat_from_json(const Json& j, Certify certify) {
  check_schema(j);
  return MNatSet::make(ground_from_json(j.at("ground")),
                       points_from_json(j.at("points")), certify);
}

Json to_json(const SetFn& p) {
  Json table = Json::object();
  for (Mask a = 0; a < p.table.size(); ++a)
    table[std::to_string(a)] = p.table[a];
  return Json{{"schema", kSchemaVersion}, {"ground", to_json(p.ground)},
              {"table", std::move(table)}};
}

Json to_json(const SubmodularFn& p) { return to_json(p.fn()); }

SubmodularFn submodular_from_json(const Json& j, Certify certify) {
  check_schema(j);
  GroundSet g = ground_from_json(j.at("ground"));
  const Json& table = j.at("table");
  if (!table.is_object()) throw UsageError("submodular \"table\" must be an object");
  std::vector<Int> t(std::size_t{1} << g.size, 0);
  std::vector<bool> seen(t.size(), false);
  for (auto it = table.begin(); it != table.end(); ++it) {
    std::size_t mask = std::stoull(it.key());
    if (mask >= t.size()) throw UsageError("table mask out of range: " + it.key());
    t[mask] = it.value().get<Int>();
    seen[mask] = true;
  }
  for (std::size_t a = 0; a < t.size(); ++a)
    if (!seen[a]) throw UsageError("table is missing mask " + std::to_string(a));
  return SubmodularFn::make(std::move(g), std::move(t), certify);
}

Json to_json(const LinkingSet& g) {
  Json j{{"schema", kSchemaVersion},
         {"ground", to_json(GroundSet(g.width()))},
         {"points", points_to_json(g.carrier().points())},
         {"left_size", g.left_ground().size}};
  return j;
}

LinkingSet linking_from_json(const Json& j, Certify certify) {
  check_schema(j);
  if (!j.contains("left_size")) throw UsageError("linking set needs \"left_size\"");
  GroundSet g = ground_from_json(j.at("ground"));
  int left = j["left_size"].get<int>();
  if (left < 1 || left >= g.size)
    throw UsageError("left_size must split the ground set into two nonempty parts");
  return LinkingSet::make(GroundSet(left), GroundSet(g.size - left),
                          points_from_json(j.at("points")), certify);
}

Json to_json(const MFunc& f) {
  return Json{{"schema", kSchemaVersion},
              {"ground", to_json(f.ground())},
              {"values", values_to_json(f.ground(), f.values())}};
}

Json to_json(const MNatFunc& f) {
  return Json{{"schema", kSchemaVersion},
              {"ground", to_json(f.ground())},
              {"values", values_to_json(f.ground(), f.values())}};
}

MFunc mfunc_from_json(const Json& j, Certify certify) {
  check_schema(j);
  return MFunc::make(ground_from_json(j.at("ground")), values_from_json(j.at("values")),
                     certify);
}

MNatFunc mnatfunc_from_json(const Json& j, Certify certify) {
  check_schema(j);
  return MNatFunc::make(ground_from_json(j.at("ground")),
                        values_from_json(j.at("values")), certify);
}

Json to_json(const LinkingFn& f) {
  return Json{{"schema", kSchemaVersion},
              {"ground", to_json(GroundSet(f.width()))},
              {"values", values_to_json(f.left, f.values)},
              {"left_size", f.left.size}};
}

LinkingFn linkingfn_from_json(const Json& j) {
  check_schema(j);
  if (!j.contains("left_size")) throw UsageError("linking function needs \"left_size\"");
  GroundSet g = ground_from_json(j.at("ground"));
  int left = j["left_size"].get<int>();
  if (left < 1 || left >= g.size)
    throw UsageError("left_size must split the ground set into two nonempty parts");
  ValueMap values = values_from_json(j.at("values"));
  for (const auto& [x, v] : values) require_width(x, g.size, "linking function");
  return LinkingFn{GroundSet(left), GroundSet(g.size - left), std::move(values)};
}

Json to_json(const BipartiteGraph& g) {
  Json edges = Json::array();
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    Json entry = Json::array();
    entry.push_back(g.edges[e].first + 1);  // 1-indexed in I/O
    entry.push_back(g.edges[e].second + 1);
    if (!g.weights.empty()) entry.push_back(rat_to_string(g.weights[e]));
    edges.push_back(std::move(entry));
  }
  return Json{{"schema", kSchemaVersion},
              {"left_size", g.left_size},
              {"right_size", g.right_size},
              {"edges", std::move(edges)}};
}

BipartiteGraph bipartite_from_json(const Json& j) {
  check_schema(j);
  BipartiteGraph g;
  g.left_size = j.at("left_size").get<int>();
  g.right_size = j.at("right_size").get<int>();
  for (const Json& entry : j.at("edges")) {
    if (!entry.is_array() || entry.size() < 2)
      throw UsageError("edges must be [v, u] or [v, u, weight] with 1-indexed nodes");
    g.edges.push_back({entry[0].get<int>() - 1, entry[1].get<int>() - 1});
    if (entry.size() == 3) g.weights.push_back(rat_from_string(entry[2].get<std::string>()));
  }
  if (!g.weights.empty() && g.weights.size() != g.edges.size())
    throw UsageError("either all edges carry weights or none");
  g.validate();
  return g;
}

Json to_json(const LiftCertificate& c) {
  Json phi = Json::array();
  for (int t : c.phi.map) phi.push_back(t + 1);  // 1-indexed targets
  return Json{{"phi", std::move(phi)},
              {"v", c.v},
              {"box_lo", c.box_lo},
              {"box_hi", c.box_hi}};
}

Json to_json(const QuotientReport& r) {
  Json verdicts = Json::object();
  for (const auto& [id, res] : r.verdicts) {
    Json v;
    switch (res.verdict) {
      case Verdict::true_: v["verdict"] = "true"; break;
      case Verdict::false_: v["verdict"] = "false"; break;
      case Verdict::skipped: v["verdict"] = "skipped"; break;
    }
    if (!res.note.empty()) v["note"] = res.note;
    verdicts[std::to_string(id)] = std::move(v);
  }
  Json j{{"schema", kSchemaVersion},
         {"verdicts", std::move(verdicts)},
         {"all_agree", r.all_agree()}};
  auto common = r.common_verdict();
  if (common) j["quotient"] = *common;
  Json wit = Json::object();
  if (r.witnesses.sandwich) wit["4"] = to_json(*r.witnesses.sandwich);
  if (r.witnesses.single_element_lift) wit["5"] = to_json(*r.witnesses.single_element_lift);
  if (r.witnesses.induction) {
    wit["7"] = Json{{"gamma", to_json(r.witnesses.induction->gamma)},
                    {"w", to_json(r.witnesses.induction->w)}};
  }
  if (r.witnesses.green) {
    wit["8"] = Json{{"gamma", to_json(r.witnesses.green->gamma)},
                    {"delta", to_json(r.witnesses.green->delta)},
                    {"x", to_json(r.witnesses.green->x)}};
  }
  if (r.witnesses.lifts) {
    wit["lifts"] = Json{{"m", to_json(r.witnesses.lifts->m)},
                        {"n", to_json(r.witnesses.lifts->n)},
                        {"certificate", to_json(r.witnesses.lifts->cert)}};
  }
  if (!wit.empty()) j["witnesses"] = std::move(wit);
  return j;
}

Json to_json(const MinimizerAtlas& a) {
  Json entries = Json::array();
  for (const AtlasEntry& e : a.entries) {
    Json u = Json::array();
    for (const Rat& c : e.u) u.push_back(rat_to_string(c));
    entries.push_back(Json{{"u", std::move(u)},
                           {"fcell", to_json(e.fcell)},
                           {"gcell", to_json(e.gcell)},
                           {"cell", points_to_json(e.cell)}});
  }
  return Json{{"schema", kSchemaVersion}, {"entries", std::move(entries)}};
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json fixture_json(const std::string& name) {
  Fixtures f = fixtures();
  if (name == "demo_P") return to_json(f.demo_P);
  if (name == "demo_Q") return to_json(f.demo_Q);
  if (name == "demo_p") return to_json(f.demo_p);
  if (name == "demo_q") return to_json(f.demo_q);
  if (name == "demo_r") return to_json(f.demo_r);
  if (name == "proj_R") return to_json(f.proj_R);
  if (name == "flag_P") return to_json(f.flag_P);
  if (name == "flag_Q") return to_json(f.flag_Q);
  if (name == "flag_R") return to_json(f.flag_R);
  if (name == "flag_P_prime") return to_json(f.flag_P_prime);
  if (name == "flag_Q_prime") return to_json(f.flag_Q_prime);
  if (name == "flag_Q_tilde") return to_json(f.flag_Q_tilde);
  if (name == "k32") return to_json(f.k32);
  if (name == "k32_W") return to_json(f.k32_W);
  if (name == "k32_induced") return to_json(f.k32_induced);
  if (name == "twopoint_f") return to_json(f.twopoint_f);
  if (name == "twopoint_r") return to_json(f.twopoint_r);
  if (name == "twopoint_g") return to_json(f.twopoint_g);
  if (name == "nonregular_gamma") return to_json(nonregular_fixture());
  throw UsageError("unknown fixture: " + name);
}

}  // namespace mcq
