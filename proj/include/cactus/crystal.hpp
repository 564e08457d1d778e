#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cactus/cartan.hpp"

namespace cactus {

inline constexpr int kAbsent = -1;

// Raised when imported data violates one of the four crystal axioms:
//   (1) e_i b != 0  =>  wt(e_i b) = wt(b) + alpha_i
//   (2) f_i b != 0  =>  wt(f_i b) = wt(b) - alpha_i
//   (3) e_i b != 0  =>  f_i(e_i b) = b
//   (4) f_i b != 0  =>  e_i(f_i b) = b
class CrystalAxiomError : public std::invalid_argument {
 public:
  CrystalAxiomError(int axiom, int element, int node, const std::string& what)
      : std::invalid_argument(what), axiom_(axiom), element_(element), node_(node) {}
  int axiom() const { return axiom_; }
  int element() const { return element_; }
  int node() const { return node_; }

 private:
  int axiom_;
  int element_;
  int node_;
};

// A finite crystal: elements 0..size-1 with weights and partial operators
// e_i, f_i (kAbsent where undefined).  String lengths eps_i / phi_i are cached
// on construction.  Tensor products carry their factor sizes so that an
// element id decodes as a mixed-radix tuple, first factor most significant.
class CrystalGraph {
 public:
  // e and f are indexed [node-1][element].  Throws CrystalAxiomError.
  CrystalGraph(CartanData cartan, std::vector<Weight> wt, std::vector<std::vector<int>> e,
               std::vector<std::vector<int>> f, std::vector<int> factor_sizes = {},
               std::vector<std::string> labels = {});

  const CartanData& cartan() const { return cartan_; }
  int size() const { return static_cast<int>(wt_.size()); }
  int rank() const { return cartan_.rank(); }

  const Weight& wt(int b) const { return wt_.at(static_cast<std::size_t>(b)); }
  int e(int i, int b) const { return e_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(b)]; }
  int f(int i, int b) const { return f_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(b)]; }
  int eps(int i, int b) const { return eps_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(b)]; }
  int phi(int i, int b) const { return phi_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(b)]; }

  const std::vector<int>& factor_sizes() const { return factor_sizes_; }
  int factor_count() const { return static_cast<int>(factor_sizes_.size()); }
  std::vector<int> decode(int b) const;
  int encode(const std::vector<int>& entries) const;

  const std::string& label(int b) const { return labels_.at(static_cast<std::size_t>(b)); }
  bool has_labels() const { return !labels_.empty(); }

  bool highest(int b) const;  // killed by every e_i
  bool lowest(int b) const;   // killed by every f_i

  bool operator==(const CrystalGraph& o) const {
    return cartan_ == o.cartan_ && wt_ == o.wt_ && e_ == o.e_ && f_ == o.f_;
  }

 private:
  CartanData cartan_;
  std::vector<Weight> wt_;
  std::vector<std::vector<int>> e_, f_, eps_, phi_;
  std::vector<int> factor_sizes_;
  std::vector<std::string> labels_;
};

// B(lambda) in type A on semistandard tableaux, ids in breadth-first order
// from the highest element (id 0).
CrystalGraph build_irreducible(const CartanData& cartan, const Weight& lambda);

// Shape (row lengths) of the type A partition with fundamental coordinates lambda.
std::vector<int> shape_of_weight(const Weight& lambda);

CrystalGraph import_graph(const nlohmann::json& j);
nlohmann::json export_graph(const CrystalGraph& b);
std::string export_dot(const CrystalGraph& b);

CrystalGraph tensor(const CrystalGraph& b1, const CrystalGraph& b2);
CrystalGraph tensor_all(const std::vector<const CrystalGraph*>& factors);
CrystalGraph disjoint_union(const CrystalGraph& b1, const CrystalGraph& b2);

struct Component {
  int highest = kAbsent;
  Weight highest_weight;
  std::vector<int> elements;  // ascending ids
};

// Connected components of the e/f graph, ordered by smallest element id.
// Throws std::domain_error if a component does not have exactly one highest element.
std::vector<Component> components(const CrystalGraph& b);

// Elements reachable from b0 (component of b0), ascending.
std::vector<int> component_of(const CrystalGraph& b, int b0);

// Bijection from the component of `from_top` in `a` onto the component of
// `to_top` in `c` sending from_top -> to_top and intertwining wt and all f_i, e_i.
// Returned as (element of a) -> (element of c), kAbsent outside the component.
std::optional<std::vector<int>> match_components(const CrystalGraph& a, int from_top, const CrystalGraph& c,
                                                 int to_top);

enum class Normality { Normal, NotNormal, Unverifiable };
Normality normality(const CrystalGraph& b);
bool is_normal(const CrystalGraph& b);  // throws std::domain_error when unverifiable

// Highest-weight elements of weight mu in B(lambda1) (x) B(lambda2).
std::vector<int> multiplicity_set(const CartanData& cartan, const Weight& lambda1, const Weight& lambda2,
                                  const Weight& mu);
std::vector<int> multiplicity_set(const CrystalGraph& product, const Weight& mu);

}  // namespace cactus
