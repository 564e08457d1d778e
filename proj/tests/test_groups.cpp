#include <doctest.h>

#include <set>

#include "cactus/groups.hpp"

using namespace cactus;

namespace {

// Permutations that move [i, j] to a block of consecutive values in order.
std::set<Permutation> translations(int n, int i, int j) {
  std::set<Permutation> out;
  for (const auto& w : all_permutations(n)) {
    bool ok = true;
    for (int a = i; a < j; ++a) ok = ok && w[a] == w[a - 1] + 1;
    if (ok) out.insert(w);
  }
  return out;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("permutation helpers") {
  CHECK(interval_reversal(5, 2, 4) == Permutation{1, 4, 3, 2, 5});
  CHECK(long_cycle(4) == Permutation{2, 3, 4, 1});
  CHECK(compose({2, 3, 1}, {2, 1, 3}) == Permutation{3, 2, 1});
  CHECK(inverse({2, 3, 1}) == Permutation{3, 1, 2});
  CHECK(all_permutations(4).size() == 24);
  CHECK(!is_permutation({1, 1, 2}));
}

TEST_CASE("cabling is a bijection onto the translations on [i,j], n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        std::set<Permutation> image;
        for (const auto& u : all_permutations(n - (j - i))) {
          const auto w = cabling(u, i, j, n);
          CHECK(is_translation(w, i, j));
          image.insert(w);
        }
        CHECK(static_cast<long>(image.size()) == factorial(n - (j - i)));  // injective
        CHECK(image == translations(n, i, j));
      }
}

TEST_CASE("word parsing") {
  CHECK(parse_generator("s1_3") == Generator::s(1, 3));
  CHECK(parse_generator("s13") == Generator::s(1, 3));
  CHECK(parse_generator("s{2}_{10}") == Generator::s(2, 10));
  CHECK(parse_generator("t{2}") == Generator::t(2));
  CHECK(parse_generator("r") == Generator::r());
  CHECK(parse_generator("w[2,3,1]") == Generator::w({2, 3, 1}));
  CHECK(parse_word("e", GroupKind::C, 3).gens.empty());
  CHECK_THROWS(parse_word("s1_4", GroupKind::C, 3));
  CHECK_THROWS(parse_word("r", GroupKind::C, 3));
  CHECK_THROWS(parse_word("w[1,2]", GroupKind::vC, 3));
  const auto w = parse_word("s1_2 w[2,1,3]", GroupKind::vC, 3);
  CHECK(parse_word(to_string(w), GroupKind::vC, 3) == w);
}

TEST_CASE("relation counts of C_n") {
  // involution: C(n,2); disjoint and nesting pairs enumerated by brute force
  for (int n = 2; n <= 5; ++n) {
    std::size_t inv = 0, disj = 0, nest = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        ++inv;
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            if (j < k) ++disj;
            if (i <= k && l <= j && !(i == k && j == l)) ++nest;
          }
      }
    std::map<std::string, std::size_t> got;
    for (const auto& r : defining_relations(GroupKind::C, n)) ++got[r.family];
    CHECK(got["involution"] == inv);
    CHECK(got["disjoint"] == disj);
    CHECK(got["nesting"] == nest);
  }
  CHECK_THROWS_AS(defining_relations(GroupKind::MC, 3), std::invalid_argument);
}

TEST_CASE("vC relations contain every cabled conjugation") {
  for (int n = 3; n <= 4; ++n) {
    std::size_t cabled = 0, expect = 0;
    for (const auto& r : defining_relations(GroupKind::vC, n)) cabled += r.family == "cabled-conjugation";
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) expect += static_cast<std::size_t>(factorial(n - (j - i)));
    CHECK(cabled == expect);
  }
}

TEST_CASE("homomorphisms to vC") {
  const auto c = hom_C_to_vC(parse_word("s1_3 s2_3", GroupKind::C, 3));
  CHECK(to_string(c) == "s1_3 s2_3");
  // s_ij with i > j wraps around: s_31 = c s_23 c^-1 in vC_3
  const auto a = hom_AC_to_vC(parse_word("s3_1", GroupKind::AC, 3));
  CHECK(a == parse_word("w[2,3,1] s2_3 w[3,1,2]", GroupKind::vC, 3));
  const auto r = hom_AC_to_vC(parse_word("r", GroupKind::AC, 3));
  CHECK(project_to_symmetric(r) == long_cycle(3));
  CHECK(project_to_symmetric(parse_word("s1_3", GroupKind::C, 3)) == Permutation{3, 2, 1});
}

TEST_CASE("mirabolic s_0j words project to interval reversals, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (int j = 1; j <= n; ++j) {
      const auto w = mc_s0j_word(j, n);
      CHECK(static_cast<int>(w.gens.size()) == j * (j + 1) / 2);
      Permutation expect(static_cast<std::size_t>(n + 1));
      for (int a = 0; a <= n; ++a) expect[a] = a <= j ? j - a : a;
      CHECK(project_to_symmetric(w) == expect);
    }
}

TEST_CASE("projections are homomorphisms") {
  const auto x = parse_word("s1_3 w[2,1,3] s2_3", GroupKind::vC, 3);
  const auto y = parse_word("w[3,1,2] s1_2", GroupKind::vC, 3);
  CHECK(project_to_symmetric(x * y) == compose(project_to_symmetric(x), project_to_symmetric(y)));
}
