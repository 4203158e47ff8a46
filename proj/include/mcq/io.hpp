#pragma once

#include <json.hpp>

#include "mcq/generator.hpp"
#include "mcq/lift.hpp"
#include "mcq/linking.hpp"
#include "mcq/mconvex.hpp"
#include "mcq/mfunc.hpp"
#include "mcq/quotient.hpp"

namespace mcq {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const GroundSet& g);
Json to_json(const MConvexSet& s);
Json to_json(const MNatSet& s);
Json to_json(const SubmodularFn& p);
Json to_json(const SetFn& p);
Json to_json(const LinkingSet& g);
Json to_json(const MFunc& f);
Json to_json(const MNatFunc& f);
Json to_json(const LinkingFn& f);
Json to_json(const BipartiteGraph& g);
Json to_json(const QuotientReport& r);
Json to_json(const LiftCertificate& c);
Json to_json(const MinimizerAtlas& a);

GroundSet ground_from_json(const Json& j);
MConvexSet mconvex_from_json(const Json& j, Certify certify);
MNatSet mnat_from_json(const Json& j, Certify certify);
SubmodularFn submodular_from_json(const Json& j, Certify certify);
LinkingSet linking_from_json(const Json& j, Certify certify);
MFunc mfunc_from_json(const Json& j, Certify certify);
MNatFunc mnatfunc_from_json(const Json& j, Certify certify);
LinkingFn linkingfn_from_json(const Json& j);
BipartiteGraph bipartite_from_json(const Json& j);

/// Canonical text form: sorted object keys, canonically ordered arrays, one
/// trailing newline. Runs are byte-reproducible.
std::string canonical_dump(const Json& j);

/// Fixture JSON by name (see fixture_names()).
Json fixture_json(const std::string& name);

}  // namespace mcq
