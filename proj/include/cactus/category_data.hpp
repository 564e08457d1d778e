#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cactus/cartan.hpp"

namespace cactus {

// Finite bijections between sets whose elements are small integer tuples.
using Key = std::vector<int>;
using Bijection = std::map<Key, Key>;

Bijection invert(const Bijection& f);  // throws if not injective

// Elements of the sets below are indices into label lists:
//   CL(c)        -> cl[c]
//   L^mu_{a b}   -> mult[{a, b, mu}]  (absent key = empty set)
// Bijection keys:
//   phi_{ab}     : (mu, l, c)      -> (x, y)
//   sigma_{ab}   : (x, y)          -> (y', x')          on CL(a) x CL(b) -> CL(b) x CL(a)
//   alpha_{abc}  : (g, l, rho, m)  -> (t, v, rho, u)
//                  l in L^g_{ab}, m in L^rho_{gc}; v in L^t_{bc}, u in L^rho_{at}
struct CategoryData {
  std::vector<std::string> colours;
  std::vector<int> base;  // colour list the pentagon and hexagon are checked over
  std::vector<std::vector<std::string>> cl;
  std::map<std::array<int, 3>, std::vector<std::string>> mult;
  std::map<std::pair<int, int>, Bijection> phi;
  std::map<std::pair<int, int>, Bijection> sigma;
  std::map<std::array<int, 3>, Bijection> alpha;

  int colour_count() const { return static_cast<int>(colours.size()); }
  int mult_size(int a, int b, int mu) const;

  bool operator==(const CategoryData&) const = default;
};

nlohmann::json to_json(const CategoryData& d);
CategoryData category_from_json(const nlohmann::json& j);

// Xi = {*}, every set a singleton, every map the identity.
CategoryData terminal_category();

// Colours start from `base`; components of products are appended as new
// colours.  A base colour has level 1 and a new colour the smallest level sum
// of a pair producing it.  Pairs with level sum <= 4 store L, phi and sigma,
// triples with level sum <= 4 store alpha.
CategoryData from_crystals(const CartanData& cartan, const std::vector<Weight>& base);

struct ValidationFailure {
  std::string axiom;     // structure, involutivity, naturality, monoidal-hexagon, pentagon, hexagon
  std::string instance;  // colour tuple
  std::string detail;    // the two mismatching composites, or what is missing
};

struct ValidationReport {
  std::map<std::string, std::size_t> checked;  // instances per axiom
  std::vector<ValidationFailure> failures;
  std::size_t failure_count = 0;  // failures beyond the stored cap are counted only

  bool passed() const { return failure_count == 0; }
};

// Checks every stored instance of the structure, involutivity, naturality and
// monoidal hexagon conditions, the pentagon over base^4 and the coboundary
// hexagon over base^3.  If `colours` is non-empty it replaces data.base.
ValidationReport validate(const CategoryData& d, const std::vector<int>& colours = {});
nlohmann::json to_json(const ValidationReport& r);

// The commutor on multiplicity sets induced by sigma: (mu, l) -> l' with
// phi_{ba}^{-1} sigma_{ab} phi_{ab} (mu, l, c) = (mu, l', c).  Throws
// std::domain_error when sigma is not of this form.
std::map<std::pair<int, int>, int> induced_commutor(const CategoryData& d, int a, int b);

// Swaps the images of two domain elements of one alpha, phi or sigma map
// chosen by the generator.  Returns a description of the mutation.
std::string mutate(CategoryData& d, std::uint32_t seed);

// Truncated operadic covering.  Fibers are index sets with labels; the gluing
// maps send tuples of fiber elements to indices.
struct FiberSystem {
  int truncation = 3;
  std::vector<std::string> colours;
  std::vector<int> base;

  // n = 1: E over (c).
  std::vector<std::vector<std::string>> e1;
  // X over (a, b; mu) with s12 : X(a, b; mu) -> X(b, a; mu), keyed (a, b) with (mu, l) -> l'.
  std::map<std::array<int, 3>, std::vector<std::string>> x3;
  std::map<std::pair<int, int>, std::map<std::pair<int, int>, int>> x3_s12;

  // n = 2, per stored pair (a, b).
  struct Pair {
    std::vector<std::string> at_infinity;  // E over (a, b)
    std::vector<std::string> at_zero;      // fiber at the point where the two marked points collide
    Bijection alpha1;     // (x, y) -> index at infinity
    Bijection beta0;      // (mu, l, c) -> index at zero
    Bijection transport;  // (index at zero) -> (index at infinity)
    Bijection s12;        // (index at infinity over (a,b)) -> (index at infinity over (b,a))

    bool operator==(const Pair&) const = default;
  };
  std::map<std::pair<int, int>, Pair> e2;

  // X over (a, b, c; rho), all rho together, per stored triple.
  struct Triple {
    std::vector<std::string> left;   // y_L : (ab)c
    std::vector<std::string> right;  // y_R : a(bc)
    Bijection gamma_front;  // (g, l, rho, m) -> index at y_L
    Bijection gamma_one;    // (t, v, rho, u) -> index at y_R
    Bijection transport;    // (index at y_L) -> (index at y_R)

    bool operator==(const Triple&) const = default;
  };
  std::map<std::array<int, 3>, Triple> x4;

  // n = 3 over all of base^3: points (a, b, c, x, y, z) with the vC_3 generators.
  std::map<std::string, Bijection> e3_action;  // generator text -> point map
  std::map<std::string, Bijection> x4_action;  // s12, s23, s13 on (a, b, c, g, l, rho, m)

  bool operator==(const FiberSystem&) const = default;
};

FiberSystem covering_from_category(const CategoryData& d);
CategoryData category_from_covering(const FiberSystem& fs);

struct CoveringReport {
  std::map<std::string, std::size_t> checked;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Equivariance of the gluing maps and the cactus relations on E and X fibers.
CoveringReport check_covering(const FiberSystem& fs);
nlohmann::json to_json(const CoveringReport& r);

struct RoundtripReport {
  bool category_identical = false;  // category -> covering -> category
  bool covering_identical = false;  // covering -> category -> covering
  std::vector<std::string> differences;
  CoveringReport covering;

  bool passed() const { return category_identical && covering_identical && covering.passed(); }
};

RoundtripReport roundtrip(const CategoryData& d);
nlohmann::json to_json(const RoundtripReport& r);

}  // namespace cactus
