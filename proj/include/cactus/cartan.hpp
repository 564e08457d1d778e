#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace cactus {

// Weights are coefficient vectors over the fundamental-weight basis.
using Weight = std::vector<int>;

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_neg(const Weight& a);

std::string weight_to_string(const Weight& w);

enum class CartanType { A, Explicit };

// Cartan data of a finite-type root system.  Nodes are 1..rank in the
// public interface; the matrix is stored 0-based with a(i,j) = <alpha_i^v, alpha_j>,
// so alpha_j is column j expressed in fundamental weights.
class CartanData {
 public:
  static CartanData type_a(int rank);
  static CartanData from_matrix(std::vector<std::vector<int>> matrix);

  CartanType type() const { return type_; }
  int rank() const { return static_cast<int>(matrix_.size()); }
  int entry(int i, int j) const;  // 1-based
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }

  Weight zero() const { return Weight(static_cast<std::size_t>(rank()), 0); }
  Weight fundamental(int i) const;
  Weight simple_root(int i) const;

  // i -> i*, where alpha_{i*} = -w0(alpha_i).
  int star(int i) const { return star_.at(static_cast<std::size_t>(check_node(i) - 1)); }

  // Reduced word (1-based nodes) for the longest Weyl group element.
  const std::vector<int>& longest_word() const { return w0_word_; }

  // Simple reflection s_i on a weight.
  Weight reflect(const Weight& w, int i) const;

  int check_node(int i) const;
  void check_weight(const Weight& w) const;

  std::string name() const;

  bool operator==(const CartanData& o) const { return matrix_ == o.matrix_; }
  bool operator!=(const CartanData& o) const { return !(*this == o); }

 private:
  CartanData(CartanType t, std::vector<std::vector<int>> m);
  void compute_longest();

  CartanType type_;
  std::vector<std::vector<int>> matrix_;
  std::vector<int> w0_word_;
  std::vector<int> star_;
};

// <w, alpha_i^v>: the i-th fundamental coordinate.
int pairing(const CartanData& cartan, const Weight& w, int i);
bool is_dominant(const CartanData& cartan, const Weight& w);
inline int star(const CartanData& cartan, int i) { return cartan.star(i); }

// Parses "A2", "A1", ...
CartanData parse_cartan_type(const std::string& text);

nlohmann::json to_json(const CartanData& c);
CartanData cartan_from_json(const nlohmann::json& j);

}  // namespace cactus
