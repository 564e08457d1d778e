#include <doctest.h>

#include "cactus/category_data.hpp"

using namespace cactus;

namespace {

CategoryData a1_data() { return from_crystals(CartanData::type_a(1), {{0}, {1}, {2}}); }
CategoryData a2_data() { return from_crystals(CartanData::type_a(2), {{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

}  // namespace

TEST_CASE("terminal category") {
  const auto d = terminal_category();
  CHECK(validate(d).passed());
  CHECK(roundtrip(d).passed());
}

TEST_CASE("crystal data validates") {
  for (const auto& d : {a1_data(), a2_data()}) {
    const auto r = validate(d);
    CHECK(r.passed());
    for (const char* axiom : {"structure", "involutivity", "naturality", "monoidal-hexagon", "pentagon", "hexagon"})
      CHECK(r.checked.count(axiom) == 1);
    CHECK(r.checked.at("pentagon") == d.base.size() * d.base.size() * d.base.size() * d.base.size());
  }
}

TEST_CASE("colour levels and multiplicities over A1") {
  const auto d = a1_data();
  // base 0, 1, 2 then 3, 4 appear from products
  CHECK(d.colours.size() >= 5);
  CHECK(d.colours[0] == "0");
  CHECK(d.colours[1] == "1");
  CHECK(d.colour_count() == static_cast<int>(d.cl.size()));
  CHECK(d.mult_size(1, 1, 0) == 1);
  CHECK(d.cl[1].size() == 2);
  CHECK(d.cl[2].size() == 3);
}

TEST_CASE("induced commutor on multiplicity sets is an involution") {
  const auto d = a2_data();
  for (const auto& [k, s] : d.sigma) {
    (void)s;
    const auto ab = induced_commutor(d, k.first, k.second);
    const auto ba = induced_commutor(d, k.second, k.first);
    for (const auto& [ml, l2] : ab) CHECK(ba.at({ml.first, l2}) == ml.second);
  }
}

TEST_CASE("JSON roundtrip") {
  const auto d = a2_data();
  CHECK(category_from_json(to_json(d)) == d);
  CHECK_THROWS(category_from_json(nlohmann::json::parse(R"({"colours": 3})")));
}

TEST_CASE("missing data fails validation") {
  auto d = a1_data();
  d.alpha.erase(d.alpha.begin());
  CHECK(!validate(d).passed());
  auto e = a1_data();
  e.sigma.erase(e.sigma.begin());
  CHECK(!validate(e).passed());
}

TEST_CASE("covering roundtrip is the identity") {
  for (const auto& d : {a1_data(), a2_data()}) {
    const auto r = roundtrip(d);
    CHECK(r.category_identical);
    CHECK(r.covering_identical);
    CHECK(r.covering.passed());
    const auto fs = covering_from_category(d);
    CHECK(category_from_covering(fs) == d);
    CHECK(covering_from_category(category_from_covering(fs)) == fs);
    CHECK(fs.e3_action.count("s1_2") == 1);
    CHECK(fs.x4_action.count("s1_3") == 1);
  }
}

TEST_CASE("a broken covering is reported") {
  auto fs = covering_from_category(a1_data());
  auto it = fs.e2.begin();
  while (it != fs.e2.end() && it->second.transport.size() < 2) ++it;
  REQUIRE(it != fs.e2.end());
  auto& t = it->second.transport;
  REQUIRE(t.size() >= 2);
  std::swap(t.begin()->second, std::next(t.begin())->second);
  const auto r = check_covering(fs);
  const auto back = category_from_covering(fs);
  CHECK((!r.passed() || !validate(back).passed()));
}

TEST_CASE("invalid data is refused by the covering construction") {
  auto d = a1_data();
  mutate(d, 7);
  CHECK_THROWS_AS(covering_from_category(d), std::invalid_argument);
}

TEST_CASE("every single-transposition mutation is detected") {
  for (const auto& d : {a1_data(), a2_data()}) {
    int caught = 0;
    for (std::uint32_t seed = 1; seed <= 100; ++seed) {
      auto m = d;
      mutate(m, seed);
      CHECK(!(m == d));
      caught += !validate(m).passed();
    }
    CHECK(caught == 100);
  }
}
