#pragma once

#include <memory>
#include <vector>

#include <json.hpp>

#include "cactus/crystal.hpp"

namespace cactus {

// A total bijection between the element sets of two crystals.
struct CrystalBijection {
  std::shared_ptr<const CrystalGraph> domain;
  std::shared_ptr<const CrystalGraph> codomain;
  std::vector<int> map;

  int operator()(int b) const { return map.at(static_cast<std::size_t>(b)); }
  bool is_bijective() const;
  CrystalBijection inverse() const;
};

// g after f (apply f first).  Requires f.codomain and g.domain to have equal size.
CrystalBijection compose(const CrystalBijection& g, const CrystalBijection& f);

// True iff `map` intertwines wt, every e_i and every f_i.
bool is_crystal_morphism(const CrystalGraph& domain, const CrystalGraph& codomain, const std::vector<int>& map);

// Schutzenberger involution: highest <-> lowest on each component,
// extended by xi(f_i b) = e_{i*} xi(b).
CrystalBijection schutzenberger(const CrystalGraph& b);

// sigma(b1 (x) b2) = xi_{B2 (x) B1}(xi_{B2} b2 (x) xi_{B1} b1).
CrystalBijection commutor(const CrystalGraph& b1, const CrystalGraph& b2);

// Reversal B1 (x) ... (x) Bm -> Bm (x) ... (x) B1, peeling the first factor:
// sigma^(m) = sigma_{B1, Bm..B2} o (id (x) sigma^(m-1)).
CrystalBijection internal_cactus(const std::vector<const CrystalGraph*>& factors);

// Same map built by peeling the last factor:
// sigma_{B1..B(m-1), Bm} o (sigma^(m-1) (x) id).
CrystalBijection internal_cactus_peel_last(const std::vector<const CrystalGraph*>& factors);

nlohmann::json to_json(const CrystalBijection& s);

}  // namespace cactus
