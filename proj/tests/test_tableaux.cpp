#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cactus/tableaux.hpp"

using namespace cactus;

namespace {

int longest_run(const Permutation& w, bool increasing) {
  std::vector<int> best(w.size(), 1);
  int out = w.empty() ? 0 : 1;
  for (std::size_t b = 0; b < w.size(); ++b)
    for (std::size_t a = 0; a < b; ++a)
      if ((w[a] < w[b]) == increasing) {
        best[b] = std::max(best[b], best[a] + 1);
        out = std::max(out, best[b]);
      }
  return out;
}

long hook_count(const Partition& shape) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  long num = 1, den = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) {
      int below = 0;
      for (std::size_t rr = r + 1; rr < shape.size() && shape[rr] > c; ++rr) ++below;
      den *= shape[r] - c + below;
    }
  return num / den;
}

Tableau apply_word(const GroupWord& w, Tableau t) {
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) t = bk_cactus_act(it->i, it->j, t);
  return t;
}

// On a standard tableau t_i swaps i and i+1 unless they share a row or column.
Tableau bk_standard(int i, Tableau t) {
  int ri = -1, ci = -1, rj = -1, cj = -1;
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (t.rows[r][c] == i) ri = static_cast<int>(r), ci = static_cast<int>(c);
      if (t.rows[r][c] == i + 1) rj = static_cast<int>(r), cj = static_cast<int>(c);
    }
  if (ri == rj || ci == cj) return t;
  std::swap(t.rows[ri][ci], t.rows[rj][cj]);
  return t;
}

}  // namespace

TEST_CASE("RSK of 213") {
  const auto r = rsk({2, 1, 3});
  CHECK(to_json(r.P).dump() == "[[1,3],[2]]");
  CHECK(to_json(r.Q).dump() == "[[1,3],[2]]");
}

TEST_CASE("RSK shapes follow Greene's theorem and inversion swaps P and Q") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto r = rsk(w);
      REQUIRE(is_standard(r.P));
      REQUIRE(is_standard(r.Q));
      CHECK(r.P.shape() == r.Q.shape());
      CHECK(r.P.shape().front() == longest_run(w, true));
      CHECK(static_cast<int>(r.P.shape().size()) == longest_run(w, false));
      const auto ri = rsk(inverse(w));
      CHECK(ri.P == r.Q);
      CHECK(ri.Q == r.P);
      CHECK(inverse_rsk(r.P, r.Q) == w);
    }
}

TEST_CASE("standard tableaux counts match the hook length formula") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : partitions(n)) CHECK(static_cast<long>(standard_tableaux(p).size()) == hook_count(p));
  CHECK(partitions(6).size() == 11);
  CHECK(semistandard_tableaux({2, 1}, 3).size() == 8);
}

TEST_CASE("evacuation of P(w) is P of the reversed complemented word") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      Permutation sharp(w.size());
      for (int k = 0; k < n; ++k) sharp[k] = n + 1 - w[n - 1 - k];
      const auto r = rsk(w), s = rsk(sharp);
      CHECK(evacuation(r.P) == s.P);
      CHECK(evacuation(r.Q) == s.Q);
      CHECK(partial_evacuation(n, r.P) == evacuation(r.P));
      CHECK(evacuation(evacuation(r.P)) == r.P);
    }
}

TEST_CASE("partial evacuation leaves larger entries alone") {
  const Tableau t{{{1, 2, 5}, {3}, {4}}};
  const auto e = partial_evacuation(4, t);
  CHECK(e == Tableau{{{1, 4, 5}, {2}, {3}}});
  CHECK(partial_evacuation(1, t) == t);
}

TEST_CASE("the tableau cactus action satisfies the C_n relations") {
  for (int n = 3; n <= 6; ++n) {
    const auto rels = defining_relations(GroupKind::C, n);
    for (const auto& p : partitions(n))
      for (const auto& t : standard_tableaux(p))
        for (const auto& r : rels) CHECK(apply_word(r.lhs, t) == apply_word(r.rhs, t));
  }
}

TEST_CASE("Bender-Knuth involutions") {
  for (const auto& t : semistandard_tableaux({3, 2, 1}, 4))
    for (int i = 1; i <= 3; ++i) {
      const auto u = bender_knuth(i, t);
      CHECK(is_semistandard(u));
      CHECK(bender_knuth(i, u) == t);
      auto count = [](const Tableau& x, int v) {
        int c = 0;
        for (const auto& row : x.rows) c += static_cast<int>(std::count(row.begin(), row.end(), v));
        return c;
      };
      CHECK(count(u, i) == count(t, i + 1));
      CHECK(count(u, i + 1) == count(t, i));
    }
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : partitions(n))
      for (const auto& t : standard_tableaux(p))
        for (int i = 1; i < n; ++i) CHECK(bender_knuth(i, t) == bk_standard(i, t));
}

TEST_CASE("Bender-Knuth braid relation fails") {
  const auto s = bender_knuth_braid_search(6, 4);
  CHECK(s.involutions_hold);
  REQUIRE(s.witness.has_value());
  const auto& w = *s.witness;
  CHECK(bender_knuth(1, bender_knuth(2, bender_knuth(1, w.tableau))) == w.t121);
  CHECK(bender_knuth(2, bender_knuth(1, bender_knuth(2, w.tableau))) == w.t212);
  CHECK(w.t121 != w.t212);
}

TEST_CASE("C_5 image on Tab(2,2,1) contains all even permutations") {
  const auto g = bk_image({2, 2, 1});
  CHECK(g.degree() == 5);
  CHECK(g.order() >= 60);
  CHECK(g.contains_alternating());
}

TEST_CASE("crystal action on B(w1)^n at weight (1,...,1) versus RSK") {
  for (int n = 2; n <= 5; ++n) {
    const auto r = rsk_crosscheck(n);
    CHECK(r.passed());
    CHECK(r.left_multiplication);
    CHECK(r.points == static_cast<int>(all_permutations(n).size()));
    if (n >= 3) {
      CHECK(r.factor == "P");
      CHECK(r.acts_on_P);
      CHECK(!r.acts_on_Q);
    }
  }
}

TEST_CASE("tableau JSON") {
  const Tableau t{{{1, 2}, {3}}};
  CHECK(tableau_from_json(to_json(t)) == t);
  CHECK_THROWS(tableau_from_json(nlohmann::json::parse("[[2,1]]")));
}
