#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cactus/actions.hpp"
#include "cactus/groups.hpp"

namespace cactus {

using Partition = std::vector<int>;  // weakly decreasing, positive parts

// Rows top to bottom (English notation).
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  int size() const;
  bool operator==(const Tableau& o) const { return rows == o.rows; }
  bool operator<(const Tableau& o) const { return rows < o.rows; }
};

bool is_partition(const Partition& p);
bool is_semistandard(const Tableau& t);
bool is_standard(const Tableau& t);

std::string to_string(const Tableau& t);
nlohmann::json to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

std::vector<Partition> partitions(int n);
std::vector<Tableau> standard_tableaux(const Partition& shape);  // sorted
std::vector<Tableau> semistandard_tableaux(const Partition& shape, int max_entry);  // sorted

struct RskPair {
  Tableau P;  // insertion
  Tableau Q;  // recording
};

RskPair rsk(const Permutation& w);
Permutation inverse_rsk(const Tableau& P, const Tableau& Q);

Tableau evacuation(const Tableau& t);
Tableau partial_evacuation(int j, const Tableau& t);  // on the entries 1..j
// s_ij = s_1j s_{1,j-i+1} s_1j, each s_1k a partial evacuation.
Tableau bk_cactus_act(int i, int j, const Tableau& t);
Tableau bender_knuth(int i, const Tableau& t);

// Image of C_n (n = |shape|) acting on Tab(shape) through bk_cactus_act,
// on the sorted list of standard tableaux.
PermutationGroup bk_image(const Partition& shape);

struct BraidWitness {
  Tableau tableau;
  Tableau t121, t212;  // t1 t2 t1 (T) and t2 t1 t2 (T)
};

struct BraidSearch {
  int tableaux = 0;             // semistandard tableaux searched
  bool involutions_hold = true;  // t_i^2 = id for every searched T and i
  std::optional<BraidWitness> witness;  // first witness in search order
};

// Exhaustive over all shapes with <= max_cells cells and entries <= max_entry.
BraidSearch bender_knuth_braid_search(int max_cells = 6, int max_entry = 4);

// Identifies the weight (1,...,1) part of B(omega_1)^n over A_{n-1} with S_n:
// a point whose factors read letters a_1 ... a_n is the permutation pi with
// pi(a_k) = k.  Checks that w in S_n acts as pi -> w pi and records on which
// RSK factor of pi the cactus generators act by bk_cactus_act.
struct CrosscheckReport {
  int n = 0;
  int points = 0;
  bool left_multiplication = true;
  bool acts_on_P = true;  // Q fixed, P moved by bk_cactus_act
  bool acts_on_Q = true;  // P fixed, Q moved by bk_cactus_act
  std::string factor;     // "P", "Q", "both" or "none"
  std::vector<std::string> mismatches;  // first few disagreements

  bool passed() const { return left_multiplication && (acts_on_P || acts_on_Q); }
};

CrosscheckReport rsk_crosscheck(int n);
nlohmann::json to_json(const CrosscheckReport& r);

}  // namespace cactus
