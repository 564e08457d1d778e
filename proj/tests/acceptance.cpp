// Acceptance run: one line per criterion with its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "cactus/actions.hpp"
#include "cactus/category_data.hpp"
#include "cactus/commutor.hpp"
#include "cactus/crystal.hpp"
#include "cactus/groups.hpp"
#include "cactus/tableaux.hpp"

using namespace cactus;

namespace {

struct Outcome {
  bool ok;
  std::string note;
};

bool hexagon(const CrystalGraph& A, const CrystalGraph& B, const CrystalGraph& C) {
  const int nb = B.size(), nc = C.size();
  const auto s_bc = commutor(B, C), s_ab = commutor(A, B);
  const CrystalGraph cb = tensor(C, B), ba = tensor(B, A);
  const auto s_a_cb = commutor(A, cb), s_ba_c = commutor(ba, C);
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < nb; ++y)
      for (int z = 0; z < nc; ++z)
        if (s_a_cb(x * cb.size() + s_bc(y * nc + z)) != s_ba_c(s_ab(x * nb + y) * nc + z)) return false;
  return true;
}

Outcome coboundary() {
  std::size_t pairs = 0, triples = 0;
  for (auto [rank, fam] : {std::pair{1, std::vector<Weight>{{0}, {1}, {2}, {3}}},
                           std::pair{2, std::vector<Weight>{{1, 0}, {0, 1}, {1, 1}}}}) {
    const auto c = CartanData::type_a(rank);
    std::vector<CrystalGraph> bs;
    for (const auto& l : fam) bs.push_back(build_irreducible(c, l));
    for (const auto& x : bs)
      for (const auto& y : bs) {
        const auto s = commutor(x, y), t = commutor(y, x);
        for (int p = 0; p < s.domain->size(); ++p)
          if (t(s(p)) != p) return {false, "involutivity fails"};
        ++pairs;
      }
    for (const auto& x : bs)
      for (const auto& y : bs)
        for (const auto& z : bs) {
          if (!hexagon(x, y, z)) return {false, "hexagon fails"};
          ++triples;
        }
  }
  return {true, std::to_string(pairs) + " pairs, " + std::to_string(triples) + " triples"};
}

struct Run {
  int rank;
  std::vector<Weight> family;
  std::vector<int> sizes;
};

Outcome relations(GroupKind kind, const std::vector<Run>& runs) {
  std::size_t points = 0, rels = 0;
  for (const auto& run : runs) {
    const ActionContext ctx(CartanData::type_a(run.rank), run.family);
    for (int n : run.sizes) {
      const auto r = verify_relations(ctx, kind, n, all_colour_tuples(ctx.colour_count(), n));
      if (!r.passed())
        return {false, to_string(kind) + "_" + std::to_string(n) + ": " + std::to_string(r.failures.size()) + " failures" +
                           (r.skipped ? " (skipped)" : "")};
      points += r.points;
      rels += r.relations;
    }
  }
  return {true, std::to_string(rels) + " relations over " + std::to_string(points) + " points"};
}

Outcome vc_suite() {
  return relations(GroupKind::vC, {{1, {{1}, {2}}, {3, 4}},
                                   {2, {{1, 0}, {0, 1}}, {3}}});
}

Outcome cabling_check() {
  std::size_t cases = 0;
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        std::set<Permutation> image, trans;
        for (const auto& u : all_permutations(n - (j - i))) image.insert(cabling(u, i, j, n));
        for (const auto& w : all_permutations(n)) {
          bool t = true;
          for (int a = i; a < j; ++a) t = t && w[a] == w[a - 1] + 1;
          if (t) trans.insert(w);
        }
        if (image != trans || image.size() != all_permutations(n - (j - i)).size())
          return {false, "n=" + std::to_string(n) + " [" + std::to_string(i) + "," + std::to_string(j) + "]"};
        ++cases;
      }
  return {true, std::to_string(cases) + " intervals"};
}

Outcome crosscheck() {
  std::string factors;
  for (int n = 3; n <= 4; ++n) {
    const auto r = rsk_crosscheck(n);
    if (!r.passed()) return {false, "n=" + std::to_string(n) + " factor " + r.factor};
    factors += (factors.empty() ? "" : ", ") + ("n=" + std::to_string(n) + " acts on " + r.factor);
  }
  return {true, factors};
}

Outcome alternating_image() {
  const auto g = bk_image({2, 2, 1});
  return {g.order() >= 60 && g.contains_alternating(),
          "order " + std::to_string(g.order()) + (g.contains_alternating() ? ", contains A5" : "")};
}

Outcome braid() {
  const auto s = bender_knuth_braid_search(6, 4);
  return {s.involutions_hold && s.witness.has_value(),
          std::to_string(s.tableaux) + " tableaux" + (s.witness ? ", witness " + to_string(s.witness->tableau) : "")};
}

Outcome affine() { return relations(GroupKind::AC, {{1, {{1}, {2}}, {3, 4}}}); }

Outcome mirabolic() {
  for (int n = 1; n <= 6; ++n)
    for (int j = 1; j <= n; ++j) {
      Permutation expect(static_cast<std::size_t>(n + 1));
      for (int a = 0; a <= n; ++a) expect[a] = a <= j ? j - a : a;
      if (project_to_symmetric(mc_s0j_word(j, n)) != expect)
        return {false, "projection j=" + std::to_string(j) + " n=" + std::to_string(n)};
    }
  auto r = relations(GroupKind::MC, {{1, {{1}, {2}}, {3, 4}}});
  r.note = "projections ok; " + r.note;
  return r;
}

Outcome covering() {
  int total = 0;
  for (const auto& d : {from_crystals(CartanData::type_a(1), {{0}, {1}, {2}}),
                        from_crystals(CartanData::type_a(2), {{0, 0}, {1, 0}, {0, 1}, {1, 1}})}) {
    const auto r = roundtrip(d);
    if (!r.passed()) return {false, "roundtrip differs"};
    int caught = 0;
    for (std::uint32_t seed = 1; seed <= 100; ++seed) {
      auto m = d;
      mutate(m, seed);
      caught += !validate(m).passed();
    }
    if (caught != 100) return {false, std::to_string(caught) + "/100 mutations caught"};
    total += caught;
  }
  return {true, "roundtrips identical, " + std::to_string(total) + "/200 mutations caught"};
}

Outcome normality_check() {
  const auto a1 = CartanData::type_a(1), a2 = CartanData::type_a(2);
  const auto c1 = components(tensor(build_irreducible(a1, {1}), build_irreducible(a1, {1})));
  const auto c2 = components(tensor(build_irreducible(a2, {1, 0}), build_irreducible(a2, {0, 1})));
  const bool d1 = c1.size() == 2 && c1[0].highest_weight == Weight{2} && c1[1].highest_weight == Weight{0};
  const bool d2 = c2.size() == 2 && c2[0].highest_weight == Weight{1, 1} && c2[0].elements.size() == 8 &&
                  c2[1].elements.size() == 1;
  int normal = 0, total = 0;
  for (auto [c, fam] : {std::pair{a1, std::vector<Weight>{{0}, {1}, {2}, {3}}},
                        std::pair{a2, std::vector<Weight>{{1, 0}, {0, 1}, {1, 1}}}})
    for (const auto& l : fam)
      for (const auto& m : fam) {
        ++total;
        normal += is_normal(tensor(build_irreducible(c, l), build_irreducible(c, m)));
      }
  return {d1 && d2 && normal == total, "decompositions " + std::string(d1 && d2 ? "ok" : "wrong") + ", " +
                                           std::to_string(normal) + "/" + std::to_string(total) + " products normal"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "coboundary axioms (involutivity, hexagon)", 60, coboundary},
      {2, "vC_n relation suite", 300, vc_suite},
      {3, "cabling bijection", 30, cabling_check},
      {4, "S_n and C_n on B(w1)^n versus RSK", 60, crosscheck},
      {5, "C_5 image on Tab(2,2,1) contains A_5", 10, alternating_image},
      {6, "Bender-Knuth braid failure", 10, braid},
      {7, "extended affine relations", 120, affine},
      {8, "mirabolic consistency", 30, mirabolic},
      {9, "category/covering roundtrip and mutations", 120, covering},
      {10, "normality and decomposition", 30, normality_check},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.ok && secs < c.limit;
    failed += !pass;
    std::printf("%s  %2d  %-44s %8.3f s / %4.0f s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit,
                o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
