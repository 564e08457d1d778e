#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cactus/cartan.hpp"
#include "cactus/crystal.hpp"

using namespace cactus;

namespace {

// alpha_i is column i of the Cartan matrix.
Weight root(const CartanData& c, int i) {
  Weight a(static_cast<std::size_t>(c.rank()));
  for (int k = 0; k < c.rank(); ++k) a[k] = c.matrix()[k][i - 1];
  return a;
}

Weight s(const CartanData& c, const Weight& w, int i) {
  Weight out = w;
  const Weight a = root(c, i);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= w[i - 1] * a[k];
  return out;
}

// Find w0 by exhaustive orbit search of rho (w0 rho = -rho), then read off i*.
std::vector<int> star_by_weyl_orbit(const CartanData& c) {
  const int r = c.rank();
  Weight rho(static_cast<std::size_t>(r), 1), neg(static_cast<std::size_t>(r), -1);
  std::map<Weight, std::vector<int>> word{{rho, {}}};
  std::vector<Weight> queue{rho};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (int i = 1; i <= r; ++i) {
      Weight v = s(c, queue[q], i);
      if (word.count(v)) continue;
      auto w = word[queue[q]];
      w.insert(w.begin(), i);
      word[v] = w;
      queue.push_back(v);
    }
  REQUIRE(word.count(neg));
  const auto w0 = word[neg];
  std::vector<int> out;
  for (int i = 1; i <= r; ++i) {
    Weight a = root(c, i);
    for (auto it = w0.rbegin(); it != w0.rend(); ++it) a = s(c, a, *it);
    for (auto& x : a) x = -x;
    int found = 0;
    for (int j = 1; j <= r; ++j)
      if (root(c, j) == a) found = j;
    out.push_back(found);
  }
  return out;
}

// Weyl dimension formula in type A_r.
long dim_type_a(const Weight& lambda) {
  const int r = static_cast<int>(lambda.size());
  std::vector<int> part(static_cast<std::size_t>(r + 1), 0);
  for (int k = r - 1; k >= 0; --k) part[k] = part[k + 1] + lambda[k];
  long num = 1, den = 1;
  for (int i = 0; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      num *= part[i] - part[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

std::map<Weight, int> character(const CrystalGraph& b) {
  std::map<Weight, int> ch;
  for (int x = 0; x < b.size(); ++x) ++ch[b.wt(x)];
  return ch;
}

// Decompose a character by repeatedly removing the character of a maximal
// dominant weight.
std::multiset<Weight> peel(const CartanData& c, std::map<Weight, int> ch) {
  std::multiset<Weight> out;
  while (!ch.empty()) {
    Weight top;
    int height = -1000000;
    for (const auto& [w, m] : ch) {
      if (m == 0 || !is_dominant(c, w)) continue;
      int h = 0;  // sum of partition-style coordinates orders type A weights
      for (int k = 0; k < c.rank(); ++k) h += (k + 1) * (c.rank() - k) * w[k];
      if (h > height) height = h, top = w;
    }
    out.insert(top);
    for (const auto& [w, m] : character(build_irreducible(c, top))) {
      ch[w] -= m;
      REQUIRE(ch[w] >= 0);
    }
    for (auto it = ch.begin(); it != ch.end();) it = it->second == 0 ? ch.erase(it) : std::next(it);
  }
  return out;
}

std::multiset<Weight> component_weights(const CrystalGraph& b) {
  std::multiset<Weight> out;
  for (const auto& c : components(b)) out.insert(c.highest_weight);
  return out;
}

}  // namespace

TEST_CASE("star matches the Weyl group orbit search") {
  for (int r = 1; r <= 5; ++r) {
    const auto c = CartanData::type_a(r);
    const auto expect = star_by_weyl_orbit(c);
    for (int i = 1; i <= r; ++i) {
      CHECK(c.star(i) == expect[i - 1]);
      CHECK(c.star(i) == r + 1 - i);
    }
  }
  const std::vector<std::vector<std::vector<int>>> others = {
      {{2, -1}, {-2, 2}},                                                   // B2
      {{2, -1}, {-3, 2}},                                                   // G2
      {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}},       // D4
      {{2, -1, 0, 0, 0}, {-1, 2, -1, 0, 0}, {0, -1, 2, -1, -1}, {0, 0, -1, 2, 0}, {0, 0, -1, 0, 2}},  // D5
  };
  for (const auto& m : others) {
    const auto c = CartanData::from_matrix(m);
    const auto expect = star_by_weyl_orbit(c);
    for (int i = 1; i <= c.rank(); ++i) CHECK(c.star(i) == expect[i - 1]);
  }
  const auto d5 = CartanData::from_matrix(others[3]);
  CHECK(d5.star(4) == 5);
  CHECK(d5.star(1) == 1);
}

TEST_CASE("longest word has the length of the positive root count") {
  for (int r = 1; r <= 5; ++r) CHECK(static_cast<int>(CartanData::type_a(r).longest_word().size()) == r * (r + 1) / 2);
}

TEST_CASE("parse_cartan_type") {
  CHECK(parse_cartan_type("A2") == CartanData::type_a(2));
  CHECK_THROWS(parse_cartan_type("Z3"));
  CHECK_THROWS(parse_cartan_type("A0"));
}

TEST_CASE("B(lambda) sizes follow the Weyl dimension formula") {
  for (int r = 1; r <= 3; ++r) {
    const auto c = CartanData::type_a(r);
    std::vector<Weight> lambdas;
    Weight w(static_cast<std::size_t>(r), 0);
    std::function<void(int)> rec = [&](int k) {
      if (k == r) {
        lambdas.push_back(w);
        return;
      }
      for (int v = 0; v <= (r == 1 ? 5 : 2); ++v) {
        w[k] = v;
        rec(k + 1);
      }
    };
    rec(0);
    for (const auto& l : lambdas) {
      const auto b = build_irreducible(c, l);
      CHECK(b.size() == dim_type_a(l));
      CHECK(b.wt(0) == l);
      CHECK(b.highest(0));
      CHECK(components(b).size() == 1);
      CHECK(is_normal(b));
    }
  }
}

TEST_CASE("B(lambda) string lengths agree with the weight") {
  const auto c = CartanData::type_a(2);
  const auto b = build_irreducible(c, {2, 1});
  for (int x = 0; x < b.size(); ++x)
    for (int i = 1; i <= 2; ++i) {
      CHECK(b.phi(i, x) - b.eps(i, x) == pairing(c, b.wt(x), i));
      int len = 0;
      for (int y = x; b.f(i, y) != kAbsent; y = b.f(i, y)) ++len;
      CHECK(len == b.phi(i, x));
    }
}

TEST_CASE("tensor products decompose like their characters") {
  const auto a1 = CartanData::type_a(1);
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      const auto t = tensor(build_irreducible(a1, {p}), build_irreducible(a1, {q}));
      std::multiset<Weight> expect;
      for (int k = 0; k <= std::min(p, q); ++k) expect.insert({p + q - 2 * k});
      CHECK(component_weights(t) == expect);
      CHECK(is_normal(t));
    }
  const auto a2 = CartanData::type_a(2);
  const std::vector<Weight> fam = {{1, 0}, {0, 1}, {1, 1}, {2, 0}};
  for (const auto& l : fam)
    for (const auto& m : fam) {
      const auto t = tensor(build_irreducible(a2, l), build_irreducible(a2, m));
      CHECK(component_weights(t) == peel(a2, character(t)));
      CHECK(is_normal(t));
    }
}

TEST_CASE("tensor convention: the singlet of B(w1) x B(w1) is 2 (x) 1") {
  const auto a1 = CartanData::type_a(1);
  const auto b = build_irreducible(a1, {1});
  REQUIRE(b.label(0) == "[[1]]");
  const auto t = tensor(b, b);
  const auto comps = components(t);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].highest == 0);
  CHECK(comps[1].highest == 2);  // ids are mixed radix: (1, 0) -> 2
  CHECK(comps[1].elements == std::vector<int>{2});
  CHECK(t.f(1, 0) == 1);  // f(1 (x) 1) = 1 (x) 2
  CHECK(t.decode(2) == std::vector<int>{1, 0});
}

TEST_CASE("normality and decomposition of the reference products") {
  const auto a1 = CartanData::type_a(1);
  const auto t1 = tensor(build_irreducible(a1, {1}), build_irreducible(a1, {1}));
  const auto c1 = components(t1);
  REQUIRE(c1.size() == 2);
  CHECK(c1[0].highest_weight == Weight{2});
  CHECK(c1[0].elements.size() == 3);
  CHECK(c1[1].highest_weight == Weight{0});
  CHECK(c1[1].elements.size() == 1);

  const auto a2 = CartanData::type_a(2);
  const auto t2 = tensor(build_irreducible(a2, {1, 0}), build_irreducible(a2, {0, 1}));
  const auto c2 = components(t2);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].highest_weight == Weight{1, 1});
  CHECK(c2[0].elements.size() == 8);
  CHECK(c2[1].highest_weight == Weight{0, 0});
  CHECK(c2[1].elements.size() == 1);
  CHECK(is_normal(t2));
}

TEST_CASE("a disjoint union with a clashing component is still normal, a broken string is not") {
  const auto a1 = CartanData::type_a(1);
  const auto b = build_irreducible(a1, {2});
  CHECK(normality(disjoint_union(b, b)) == Normality::Normal);
  // Two-element crystal with weights 1, -1 but no arrows: highest elements of
  // weight -1 are not dominant.
  CrystalGraph odd(a1, {{1}, {-1}}, {{kAbsent, kAbsent}}, {{kAbsent, kAbsent}});
  CHECK(normality(odd) != Normality::Normal);
}

TEST_CASE("crystal axioms are enforced on import") {
  const auto a1 = CartanData::type_a(1);
  // f(0) = 1 but e(1) missing.
  CHECK_THROWS_AS(CrystalGraph(a1, {{1}, {-1}}, {{kAbsent, kAbsent}}, {{1, kAbsent}}), CrystalAxiomError);
  // wrong weight shift
  CHECK_THROWS_AS(CrystalGraph(a1, {{1}, {1}}, {{kAbsent, 0}}, {{1, kAbsent}}), CrystalAxiomError);
}

TEST_CASE("export and import roundtrip") {
  const auto b = build_irreducible(CartanData::type_a(2), {1, 1});
  const auto back = import_graph(export_graph(b));
  CHECK(back == b);
  CHECK(export_dot(b).find("digraph") != std::string::npos);
}

TEST_CASE("multiplicity sets") {
  const auto a2 = CartanData::type_a(2);
  CHECK(multiplicity_set(a2, {1, 1}, {1, 1}, {1, 1}).size() == 2);
  CHECK(multiplicity_set(a2, {1, 1}, {1, 1}, {0, 0}).size() == 1);
  CHECK(multiplicity_set(a2, {1, 0}, {1, 0}, {0, 1}).size() == 1);
  CHECK(multiplicity_set(a2, {1, 0}, {1, 0}, {1, 1}).empty());
}
