#pragma once

#include <map>

#include "mcq/linking.hpp"
#include "mcq/mconvex.hpp"
#include "mcq/quotient.hpp"
#include "mcq/rational.hpp"

namespace mcq {

using ValueMap = std::map<Point, Rat>;  // points absent from the map are +infinity

bool check_m_convex_fn(const GroundSet& g, const ValueMap& values);
bool check_mnat_fn(const GroundSet& g, const ValueMap& values);

/// Finite rational-valued function whose effective domain is an M-convex set
/// and which satisfies the quantitative exchange inequality.
class MFunc {
 public:
  static MFunc make(GroundSet g, ValueMap values, Certify certify);

  const GroundSet& ground() const { return ground_; }
  const ValueMap& values() const { return values_; }
  bool defined_at(const Point& x) const { return values_.count(x) != 0; }
  const Rat& at(const Point& x) const;
  Int rank() const { return rank_; }
  std::size_t dom_size() const { return values_.size(); }
  MConvexSet domain(Certify certify = Certify::no) const;

  bool operator==(const MFunc& o) const {
    return ground_ == o.ground_ && values_ == o.values_;
  }

 private:
  MFunc(GroundSet g, ValueMap v, Int rank)
      : ground_(std::move(g)), values_(std::move(v)), rank_(rank) {}
  GroundSet ground_;
  ValueMap values_;
  Int rank_ = 0;
};

/// As MFunc with the M-natural axioms; the domain may span several layers.
class MNatFunc {
 public:
  static MNatFunc make(GroundSet g, ValueMap values, Certify certify);

  const GroundSet& ground() const { return ground_; }
  const ValueMap& values() const { return values_; }
  MNatSet domain(Certify certify = Certify::no) const;
  MFunc layer(Int sum) const;
  MFunc top_layer() const;
  MFunc bottom_layer() const;

 private:
  MNatFunc(GroundSet g, ValueMap v) : ground_(std::move(g)), values_(std::move(v)) {}
  GroundSet ground_;
  ValueMap values_;
};

/// Linking function: an M-convex function on a split ground set V | U, points
/// stored like LinkingSet points (right side negated).
struct LinkingFn {
  GroundSet left;
  GroundSet right;
  ValueMap values;

  int width() const { return left.size + right.size; }
};

/// argmin of f - <u, .> over dom(f); exact rational tilt.
MConvexSet minimizer(const MFunc& f, const std::vector<Rat>& u);
std::vector<Point> minimizer_points(const GroundSet& g, const ValueMap& values,
                                    const std::vector<Rat>& u);

/// Infimal convolution; dom is the sumset.
MFunc convolution(const MFunc& f, const MFunc& g, Certify certify = Certify::no);
ValueMap convolution_values(const ValueMap& f, const ValueMap& g);

struct AtlasEntry {
  std::vector<Rat> u;
  MConvexSet fcell;
  MConvexSet gcell;
  PointSet cell;  // the face of the convolution's subdivision that produced u
};

struct MinimizerAtlas {
  std::vector<AtlasEntry> entries;
};

/// One entry per face of the regular subdivision induced by f [] g, each with
/// a relative-interior normal u and the directly recomputed pair (f^u, g^u).
/// Every distinct pair over all real tilts appears at least once.
MinimizerAtlas minimizer_atlas(const MFunc& f, const MFunc& g, const Caps& caps = {});

/// (A) union of the two layers is an M-natural-convex function; decided only
/// for elementary pairs (rank gap 1).
CheckResult quotient_A(const MFunc& f, const MFunc& g);

struct InductionFnWitness {
  LinkingFn gamma;
  MFunc r;
};

/// (B) induction witness constructed from the union; the existential content
/// is the witness certifying as a linking function.
CheckResult quotient_B(const MFunc& f, const MFunc& g,
                       std::optional<InductionFnWitness>* out = nullptr);
bool verify_induction_fn(const InductionFnWitness& wit, const MFunc& f, const MFunc& g);

/// Induction of r through the linking function gamma.
MFunc induce_fn(const MFunc& r, const LinkingFn& gamma, Certify certify = Certify::no);

/// (C) quantitative exchange between the two functions.
bool quotient_C(const MFunc& f, const MFunc& g);

/// (D) every atlas pair of minimizers is a set quotient.
CheckResult quotient_D(const MFunc& f, const MFunc& g, const Caps& caps = {});

struct FlagConstants {
  std::vector<Rat> constants;
  MNatFunc h;
};

/// Constants c_i making inf(f_i - c_i) an M-natural-convex function for a
/// consecutive chain of elementary quotients with M-natural union of domains.
FlagConstants flag_constants(const std::vector<MFunc>& chain);

MFunc truncation_fn(const MFunc& f, Certify certify = Certify::no);
MFunc elongation_fn(const MFunc& f, Certify certify = Certify::no);

/// Valuated matroid whose argmin is a sparse paving matroid.
bool is_sparse_paving_valuated(const MFunc& f);

/// Explicit M-natural completion for sparse paving quotients: middle layers
/// are full hypersimplices at the smaller of the two argmin values.
MNatFunc sparse_paving_quotient(const MFunc& f, const MFunc& g, const Caps& caps = {});

/// Weighted bipartite linking function: gamma(e_A, -e_B) is the minimum
/// weight of a matching with boundary (A, B).
LinkingFn bipartite_linking_fn(const BipartiteGraph& g);

}  // namespace mcq
