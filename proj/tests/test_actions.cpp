#include <doctest.h>

#include <chrono>
#include <cstdlib>
#include <set>

#include "cactus/actions.hpp"

using namespace cactus;

namespace {

ActionContext a1_context() { return ActionContext(CartanData::type_a(1), {{1}, {2}}); }
ActionContext a2_context() { return ActionContext(CartanData::type_a(2), {{1, 0}, {0, 1}}); }

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// Relations checked with the word folded left to right: g1 first.
std::size_t fold_failures(const ActionContext& ctx, GroupKind kind, int n) {
  std::size_t bad = 0;
  const auto rels = defining_relations(kind, n);
  for (const auto& colours : all_colour_tuples(ctx.colour_count(), n))
    for (const auto& p : ctx.points(colours))
      for (const auto& r : rels) {
        auto run = [&](const GroupWord& w) {
          LabeledPoint q = p;
          for (const auto& g : w.gens) q = act(ctx, kind, g, q);
          return q;
        };
        bad += !(run(r.lhs) == run(r.rhs));
      }
  return bad;
}

}  // namespace

TEST_CASE("permutations move factors with their weights") {
  const auto ctx = a1_context();
  const LabeledPoint p{{0, 1, 0}, {1, 2, 0}};
  // w(k) = new position of the factor at k
  const auto q = act(ctx, GroupKind::vC, Generator::w({2, 3, 1}), p);
  CHECK(q.colours == std::vector<int>{0, 0, 1});
  CHECK(q.entries == std::vector<int>{0, 1, 2});
}

TEST_CASE("s_ij is not the permutation w_ij") {
  const auto ctx = ActionContext(CartanData::type_a(1), {{1}});
  bool differ = false;
  for (const auto& p : ctx.points({0, 0}))
    differ = differ || !(act(ctx, GroupKind::vC, Generator::s(1, 2), p) == act(ctx, GroupKind::vC, Generator::w({2, 1}), p));
  CHECK(differ);
}

TEST_CASE("s_1n acts by the internal cactus reversal") {
  const auto ctx = a2_context();
  const std::vector<int> colours{0, 1, 1};
  std::vector<const CrystalGraph*> fs{&ctx.crystal(0), &ctx.crystal(1), &ctx.crystal(1)};
  const auto rev = internal_cactus(fs);
  const auto prod = tensor_all(fs);
  for (const auto& p : ctx.points(colours)) {
    const auto q = act(ctx, GroupKind::C, Generator::s(1, 3), p);
    const auto expect = rev.codomain->decode(rev(prod.encode(p.entries)));
    CHECK(q.colours == std::vector<int>{1, 1, 0});
    CHECK(q.entries == expect);
  }
}

TEST_CASE("vC_n relations act identically: n = 3, 4 over A1, n = 3 over A2") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto a1 = a1_context();
  for (int n = 3; n <= 4; ++n) {
    const auto r = verify_relations(a1, GroupKind::vC, n, all_colour_tuples(2, n));
    CHECK(r.failures.empty());
    CHECK(!r.skipped);
    CHECK(r.points > 0);
  }
  const auto a2 = a2_context();
  const auto r = verify_relations(a2, GroupKind::vC, 3, all_colour_tuples(2, 3));
  CHECK(r.passed());
  CHECK(r.points == 8 * 27);  // 2^3 tuples, 3^3 points each
  CHECK(seconds_since(t0) < 300);
}

TEST_CASE("C_n, AC_n and MC_n relations over A1") {
  const auto ctx = a1_context();
  for (int n = 3; n <= 4; ++n) {
    CHECK(verify_relations(ctx, GroupKind::C, n, all_colour_tuples(2, n)).passed());
    CHECK(verify_relations(ctx, GroupKind::AC, n, all_colour_tuples(2, n)).passed());
    CHECK(verify_relations(ctx, GroupKind::MC, n, all_colour_tuples(2, n)).passed());
  }
}

TEST_CASE("affine relation families are all present") {
  std::set<std::string> fams;
  for (const auto& r : defining_relations(GroupKind::AC, 4)) fams.insert(r.family);
  CHECK(fams == std::set<std::string>{"involution", "disjoint", "nesting", "rotation-order", "rotation-conjugation"});
}

TEST_CASE("folding words left to right breaks the vC and affine relations") {
  const auto ctx = a1_context();
  CHECK(fold_failures(ctx, GroupKind::vC, 3) > 0);
  CHECK(fold_failures(ctx, GroupKind::AC, 3) > 0);
}

TEST_CASE("point ceiling skips oversized sweeps") {
  setenv("CACTUS_CRYSTAL_MAX_POINTS", "10", 1);
  CHECK(max_points() == 10);
  const auto r = verify_relations(a1_context(), GroupKind::C, 3, all_colour_tuples(2, 3));
  CHECK(r.skipped);
  CHECK(!r.passed());
  unsetenv("CACTUS_CRYSTAL_MAX_POINTS");
  CHECK(max_points() == 1000000);
}

TEST_CASE("threads do not change the report") {
  const auto ctx = a1_context();
  const auto one = verify_relations(ctx, GroupKind::vC, 3, all_colour_tuples(2, 3), 1);
  const auto many = verify_relations(ctx, GroupKind::vC, 3, all_colour_tuples(2, 3), 4);
  CHECK(one.points == many.points);
  CHECK(one.relations == many.relations);
  CHECK(to_json(one)["failures"] == to_json(many)["failures"]);
}

TEST_CASE("orbits and permutation images") {
  const auto ctx = ActionContext(CartanData::type_a(1), {{1}});
  const std::vector<Generator> gens{Generator::w({2, 1, 3}), Generator::w({1, 3, 2})};
  const LabeledPoint p{{0, 0, 0}, {0, 0, 1}};
  CHECK(orbit(ctx, GroupKind::vC, gens, p).size() == 3);
  const auto g = permutation_image(ctx, GroupKind::vC, gens, orbit(ctx, GroupKind::vC, gens, p));
  CHECK(g.order() == 6);
  CHECK(g.contains_alternating());
  CHECK_THROWS_AS(permutation_image(ctx, GroupKind::vC, gens, {p}), std::domain_error);
}

TEST_CASE("generators are weight-preserving bijections commuting with e_i and f_i") {
  const auto ctx = a2_context();
  const std::vector<int> colours{0, 1, 0};
  auto product = [&](const std::vector<int>& cs) {
    std::vector<const CrystalGraph*> fs;
    for (int c : cs) fs.push_back(&ctx.crystal(c));
    return tensor_all(fs);
  };
  const auto src = product(colours);
  for (const auto& g : parse_word("s1_2 s2_3 s1_3 w[3,1,2]", GroupKind::vC, 3).gens) {
    const auto image0 = act(ctx, GroupKind::vC, g, ctx.points(colours).front());
    const auto dst = product(image0.colours);
    std::set<int> seen;
    for (const auto& p : ctx.points(colours)) {
      const auto q = act(ctx, GroupKind::vC, g, p);
      REQUIRE(q.colours == image0.colours);
      const int x = src.encode(p.entries), y = dst.encode(q.entries);
      seen.insert(y);
      CHECK(src.wt(x) == dst.wt(y));
      if (g.kind == GenKind::Perm) continue;
      for (int i = 1; i <= 2; ++i) {
        auto image = [&](int x2) {
          if (x2 == kAbsent) return kAbsent;
          return dst.encode(act(ctx, GroupKind::vC, g, LabeledPoint{colours, src.decode(x2)}).entries);
        };
        CHECK(image(src.f(i, x)) == dst.f(i, y));
        CHECK(image(src.e(i, x)) == dst.e(i, y));
      }
    }
    CHECK(static_cast<int>(seen.size()) == src.size());
  }
}
