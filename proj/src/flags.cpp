#include "mcq/flags.hpp"

#include "mcq/quotient.hpp"

namespace mcq {

namespace {

void require_common_ground(const std::vector<MConvexSet>& flag) {
  if (flag.empty()) throw UsageError("flag must contain at least one set");
  for (const auto& s : flag)
    if (s.ground().size != flag.front().ground().size)
      throw UsageError("flag members live on different ground sets");
}

}  // namespace

bool check_flag(const std::vector<MConvexSet>& flag) {
  require_common_ground(flag);
  for (std::size_t i = 0; i + 1 < flag.size(); ++i) {
    // Consecutive compliance suffices; transitivity covers the other pairs.
    if (!check_compliant(set_to_submodular(flag[i + 1]), set_to_submodular(flag[i])))
      return false;
  }
  return true;
}

std::vector<MConvexSet> complete_flag(const std::vector<MConvexSet>& flag) {
  require_common_ground(flag);
  if (!check_flag(flag)) throw UsageError("input is not a flag");
  std::vector<MConvexSet> out;
  out.push_back(flag.front());
  for (std::size_t i = 0; i + 1 < flag.size(); ++i) {
    const MConvexSet& lo = flag[i];
    const MConvexSet& hi = flag[i + 1];
    if (hi.rank() - lo.rank() > 1) {
      MNatSet sandwich =
          gpoly_points(set_to_submodular(hi), set_to_submodular(lo));
      std::vector<MConvexSet> mid = layers(sandwich);
      // First and last layers are lo and hi themselves.
      for (std::size_t t = 1; t + 1 < mid.size(); ++t) out.push_back(mid[t]);
    }
    out.push_back(hi);
  }
  return out;
}

MnatFlag mnat_completion(const std::vector<MConvexSet>& flag) {
  require_common_ground(flag);
  if (!check_flag(flag)) throw UsageError("input is not a flag");
  for (std::size_t i = 0; i + 1 < flag.size(); ++i)
    if (flag[i + 1].rank() != flag[i].rank() + 1)
      throw UsageError("mnat_completion needs a consecutive flag");
  MNatSet sandwich =
      gpoly_points(set_to_submodular(flag.back()), set_to_submodular(flag.front()));
  std::vector<MConvexSet> tiers = layers(sandwich);
  if (tiers.size() != flag.size())
    throw UsageError("sandwich polymatroid layer count does not match the flag");
  for (std::size_t i = 0; i < flag.size(); ++i)
    for (const Point& x : flag[i].points())
      if (!tiers[i].contains(x))
        throw UsageError("flag member escapes its completion layer");
  return MnatFlag{std::move(sandwich), std::move(tiers)};
}

bool is_mnat_flag(const std::vector<MConvexSet>& flag) {
  require_common_ground(flag);
  std::vector<Point> all;
  for (const auto& s : flag)
    all.insert(all.end(), s.points().begin(), s.points().end());
  if (!check_mnat_convex(all)) return false;
  MNatSet u = MNatSet::make(flag.front().ground(), std::move(all), Certify::no);
  std::vector<MConvexSet> tiers = layers(u);
  if (tiers.size() != flag.size()) return false;
  for (std::size_t i = 0; i < flag.size(); ++i)
    if (!(tiers[i] == flag[i])) return false;
  return true;
}

}  // namespace mcq
