#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "cactus/cartan.hpp"
#include "cactus/commutor.hpp"
#include "cactus/crystal.hpp"
#include "cactus/groups.hpp"

namespace cactus {

// A point of B(lambda_{c_1}) x ... x B(lambda_{c_n}).  colours[k] indexes the
// context's colour family and entries[k] is an element id of that crystal.
struct LabeledPoint {
  std::vector<int> colours;
  std::vector<int> entries;

  bool operator==(const LabeledPoint& o) const { return colours == o.colours && entries == o.entries; }
  bool operator<(const LabeledPoint& o) const {
    return colours != o.colours ? colours < o.colours : entries < o.entries;
  }
};

std::string to_string(const LabeledPoint& p);

// Colour family lambda_0, lambda_1, ... (distinct dominant weights) with
// their crystals and a lazily filled cache of internal cactus maps keyed by
// colour sub-tuple.  Safe to share between threads.
class ActionContext {
 public:
  ActionContext(CartanData cartan, std::vector<Weight> family);

  const CartanData& cartan() const { return cartan_; }
  int colour_count() const { return static_cast<int>(family_.size()); }
  const Weight& weight(int colour) const { return family_.at(static_cast<std::size_t>(colour)); }
  const CrystalGraph& crystal(int colour) const { return *crystals_.at(static_cast<std::size_t>(colour)); }
  int colour_of(const Weight& w) const;  // throws if w is not in the family

  // Reversal B_{c_1} (x) ... (x) B_{c_m} -> B_{c_m} (x) ... (x) B_{c_1} as an id map.
  const std::vector<int>& reversal(const std::vector<int>& colours) const;

  // Every point with the given colour tuple, in id order.
  std::vector<LabeledPoint> points(const std::vector<int>& colours) const;

 private:
  CartanData cartan_;
  std::vector<Weight> family_;
  std::vector<std::shared_ptr<const CrystalGraph>> crystals_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<int>, std::shared_ptr<const std::vector<int>>> reversals_;
};

// One generator of a word of the given kind acting on p (n = p.colours.size()).
LabeledPoint act(const ActionContext& ctx, GroupKind kind, const Generator& g, const LabeledPoint& p);
// Left action: g1 g2 ... gk sends p to g1(g2(...gk(p))).
LabeledPoint act_word(const ActionContext& ctx, const GroupWord& w, const LabeledPoint& p);

// All n-tuples over the colour family, lexicographic.
std::vector<std::vector<int>> all_colour_tuples(int colour_count, int n);
// Distinct rearrangements of one colour tuple (its S_n orbit), lexicographic.
std::vector<std::vector<int>> rearrangements(std::vector<int> colours);

// Point ceiling for exhaustive sweeps: CACTUS_CRYSTAL_MAX_POINTS or 10^6.
std::size_t max_points();

struct RelationFailure {
  std::string family;
  std::string lhs, rhs;
  LabeledPoint point, lhs_image, rhs_image;
};

struct RelationReport {
  GroupKind kind = GroupKind::C;
  int n = 0;
  std::size_t relations = 0;
  std::size_t points = 0;
  bool skipped = false;  // product exceeded the point ceiling
  std::vector<RelationFailure> failures;

  bool passed() const { return !skipped && failures.empty(); }
};

// Checks every defining relation on every point over the listed colour tuples.
// For MC the vC relations are rewritten with t-words for the permutations.
RelationReport verify_relations(const ActionContext& ctx, GroupKind kind, int n,
                                const std::vector<std::vector<int>>& tuples, int threads = 0);

nlohmann::json to_json(const RelationReport& r);

// Closure of p under the generators, sorted.
std::vector<LabeledPoint> orbit(const ActionContext& ctx, GroupKind kind, const std::vector<Generator>& gens,
                                const LabeledPoint& p);

// Permutations as 0-based images on 0..m-1; product (ab)(x) = a(b(x)).
class PermutationGroup {
 public:
  // Closure of the generators; throws std::length_error past `limit` elements.
  explicit PermutationGroup(int degree, std::vector<std::vector<int>> generators, std::size_t limit = 5000000);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const std::vector<int>& p) const;
  bool contains_alternating() const;  // A_m is a subgroup
  const std::vector<std::vector<int>>& generators() const { return generators_; }

 private:
  int degree_;
  std::vector<std::vector<int>> generators_;
  std::vector<std::vector<int>> elements_;  // sorted
};

// Group generated by the action of `gens` on an invariant subset.
// Throws std::domain_error if the subset is not invariant.
PermutationGroup permutation_image(const ActionContext& ctx, GroupKind kind, const std::vector<Generator>& gens,
                                   const std::vector<LabeledPoint>& subset);

}  // namespace cactus
