#pragma once

#include "mcq/mconvex.hpp"

namespace mcq {

/// A flag is listed bottom-up: ranks ascend along the vector and each set is
/// a quotient of the next one.
bool check_flag(const std::vector<MConvexSet>& flag);

/// Fills every rank gap with the layers of the sandwich polymatroid of the
/// adjacent pair; the result is a consecutive flag containing the input.
std::vector<MConvexSet> complete_flag(const std::vector<MConvexSet>& flag);

struct MnatFlag {
  MNatSet union_set;
  std::vector<MConvexSet> layers;
};

/// Embeds a consecutive flag into the layers of the generalized polymatroid
/// spanned by its top and bottom tables.
MnatFlag mnat_completion(const std::vector<MConvexSet>& flag);

/// Whether the list is exactly the layer decomposition of an
/// M-natural-convex set.
bool is_mnat_flag(const std::vector<MConvexSet>& flag);

}  // namespace mcq
