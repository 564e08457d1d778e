#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cactus {

// One-line notation.  For words of kind C, vC and AC a permutation of size n
// has w[a-1] = w(a) on points 1..n.  Projections of MC words live in S_{n+1}
// on points 0..n and are stored 0-based: w[a] = w(a).
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation compose(const Permutation& outer, const Permutation& inner);  // outer o inner
Permutation inverse(const Permutation& w);
bool is_permutation(const Permutation& w);  // values 1..n, each once
Permutation interval_reversal(int n, int i, int j);  // w_ij, 1-based
Permutation long_cycle(int n);  // a -> a+1 mod n
std::vector<Permutation> all_permutations(int n);  // lexicographic
std::string permutation_to_string(const Permutation& w);

enum class GroupKind { C, vC, MC, AC };

std::string to_string(GroupKind k);
GroupKind parse_group_kind(const std::string& s);

enum class GenKind { Cactus, Perm, MirabolicT, AffineS, AffineR };

struct Generator {
  GenKind kind = GenKind::Cactus;
  int i = 0;
  int j = 0;
  Permutation perm;

  static Generator s(int i, int j) { return {GenKind::Cactus, i, j, {}}; }
  static Generator w(Permutation p) { return {GenKind::Perm, 0, 0, std::move(p)}; }
  static Generator t(int i) { return {GenKind::MirabolicT, i, 0, {}}; }
  static Generator affine_s(int i, int j) { return {GenKind::AffineS, i, j, {}}; }
  static Generator r() { return {GenKind::AffineR, 0, 0, {}}; }

  bool operator==(const Generator& o) const { return kind == o.kind && i == o.i && j == o.j && perm == o.perm; }
};

std::string to_string(const Generator& g);

// A word g1 g2 ... gk.  Acting on a set, the word means g1(g2(...gk(x))),
// and permutations multiply as functions: (w1 w2)(a) = w1(w2(a)).
struct GroupWord {
  GroupKind kind = GroupKind::C;
  int n = 0;
  std::vector<Generator> gens;

  GroupWord() = default;
  GroupWord(GroupKind k, int n_, std::vector<Generator> g);  // validates

  GroupWord operator*(const GroupWord& o) const;
  bool operator==(const GroupWord& o) const { return kind == o.kind && n == o.n && gens == o.gens; }
};

std::string to_string(const GroupWord& w);
void validate_generator(GroupKind kind, int n, const Generator& g);
Generator parse_generator(const std::string& token);
GroupWord parse_word(const std::string& text, GroupKind kind, int n);

// Cabling bijection S_{n-(j-i)} -> {translations on [i,j]} in S_n.
Permutation cabling(const Permutation& u, int i, int j, int n);
bool is_translation(const Permutation& w, int i, int j);

struct Relation {
  std::string family;
  GroupWord lhs;
  GroupWord rhs;
};

// Defining relations of C_n, vC_n or the extended affine cactus group.
// MC_n has no presentation available and throws std::invalid_argument.
std::vector<Relation> defining_relations(GroupKind kind, int n);

// Cyclic-interval helpers for the affine group (points 1..n).
std::vector<int> cyclic_interval(int n, int i, int j);
Permutation cyclic_reversal(int n, int i, int j);

GroupWord hom_C_to_vC(const GroupWord& w);
GroupWord hom_MC_to_vC(const GroupWord& w);
GroupWord hom_AC_to_vC(const GroupWord& w);
GroupWord to_virtual(const GroupWord& w);  // dispatches on kind

// Word in t_0, ..., t_{j-1} of C_{n+1} whose projection is the reversal of [0, j]:
// t0 (t1 t0) (t2 t1 t0) ... (t_{j-1} ... t1 t0), for 1 <= j <= n.
GroupWord mc_s0j_word(int j, int n);

Permutation project_to_symmetric(const GroupWord& w);

nlohmann::json to_json(const std::vector<Relation>& rels);

}  // namespace cactus
