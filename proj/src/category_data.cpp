#include "cactus/category_data.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cactus/commutor.hpp"
#include "cactus/crystal.hpp"
#include "cactus/groups.hpp"

namespace cactus {

namespace {

std::string key_string(const Key& k) {
  std::ostringstream os;
  os << '[';
  for (std::size_t a = 0; a < k.size(); ++a) os << (a ? "," : "") << k[a];
  os << ']';
  return os.str();
}

std::string tuple_name(const std::vector<std::string>& colours, const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += "; ";
    s += (t[k] >= 0 && t[k] < static_cast<int>(colours.size())) ? colours[t[k]] : "?" + std::to_string(t[k]);
  }
  return s + ")";
}

const Key& lookup(const Bijection& f, const Key& k, const std::string& what) {
  auto it = f.find(k);
  if (it == f.end()) throw std::out_of_range(what + " undefined at " + key_string(k));
  return it->second;
}

}  // namespace

Bijection invert(const Bijection& f) {
  Bijection g;
  for (const auto& [k, v] : f)
    if (!g.emplace(v, k).second) throw std::invalid_argument("invert: map is not injective at " + key_string(v));
  return g;
}

int CategoryData::mult_size(int a, int b, int mu) const {
  auto it = mult.find({a, b, mu});
  return it == mult.end() ? 0 : static_cast<int>(it->second.size());
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json map_json(const Bijection& f) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [k, v] : f) j.push_back({k, v});
  return j;
}

Bijection map_from_json(const nlohmann::json& j) {
  Bijection f;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("map entries must be [from, to] pairs");
    if (!f.emplace(pair[0].get<Key>(), pair[1].get<Key>()).second)
      throw std::invalid_argument("map lists an element twice: " + pair[0].dump());
  }
  return f;
}

}  // namespace

nlohmann::json to_json(const CategoryData& d) {
  nlohmann::json cl = nlohmann::json::array();
  for (std::size_t c = 0; c < d.cl.size(); ++c) cl.push_back({{"colour", c}, {"elements", d.cl[c]}});
  nlohmann::json mult = nlohmann::json::array();
  for (const auto& [k, v] : d.mult) mult.push_back({{"left", k[0]}, {"right", k[1]}, {"colour", k[2]}, {"elements", v}});
  nlohmann::json phi = nlohmann::json::array(), sigma = nlohmann::json::array(), alpha = nlohmann::json::array();
  for (const auto& [k, f] : d.phi) phi.push_back({{"left", k.first}, {"right", k.second}, {"map", map_json(f)}});
  for (const auto& [k, f] : d.sigma) sigma.push_back({{"left", k.first}, {"right", k.second}, {"map", map_json(f)}});
  for (const auto& [k, f] : d.alpha) alpha.push_back({{"colours", k}, {"map", map_json(f)}});
  return {{"colours", d.colours}, {"base", d.base},   {"sets", {{"CL", cl}, {"L", mult}}},
          {"phi", phi},           {"sigma", sigma}, {"alpha", alpha}};
}

CategoryData category_from_json(const nlohmann::json& j) {
  try {
    CategoryData d;
    d.colours = j.at("colours").get<std::vector<std::string>>();
    d.base = j.value("base", std::vector<int>{});
    if (d.base.empty())
      for (int c = 0; c < d.colour_count(); ++c) d.base.push_back(c);
    d.cl.assign(d.colours.size(), {});
    for (const auto& e : j.at("sets").at("CL")) {
      const int c = e.at("colour").get<int>();
      if (c < 0 || c >= d.colour_count()) throw std::invalid_argument("CL entry for unknown colour");
      d.cl[c] = e.at("elements").get<std::vector<std::string>>();
    }
    for (const auto& e : j.at("sets").at("L"))
      d.mult[{e.at("left").get<int>(), e.at("right").get<int>(), e.at("colour").get<int>()}] =
          e.at("elements").get<std::vector<std::string>>();
    for (const auto& e : j.value("phi", nlohmann::json::array()))
      d.phi[{e.at("left").get<int>(), e.at("right").get<int>()}] = map_from_json(e.at("map"));
    for (const auto& e : j.value("sigma", nlohmann::json::array()))
      d.sigma[{e.at("left").get<int>(), e.at("right").get<int>()}] = map_from_json(e.at("map"));
    for (const auto& e : j.value("alpha", nlohmann::json::array()))
      d.alpha[e.at("colours").get<std::array<int, 3>>()] = map_from_json(e.at("map"));
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed category JSON: ") + e.what());
  }
}

CategoryData terminal_category() {
  CategoryData d;
  d.colours = {"*"};
  d.base = {0};
  d.cl = {{"*"}};
  d.mult[{0, 0, 0}] = {"*"};
  d.phi[{0, 0}] = {{{0, 0, 0}, {0, 0}}};
  d.sigma[{0, 0}] = {{{0, 0}, {0, 0}}};
  d.alpha[{0, 0, 0}] = {{{0, 0, 0, 0}, {0, 0, 0, 0}}};
  return d;
}

// ---------------------------------------------------------------------------
// Extraction from crystals

CategoryData from_crystals(const CartanData& cartan, const std::vector<Weight>& base) {
  if (base.empty()) throw std::invalid_argument("from_crystals: need at least one colour");
  CategoryData d;
  std::vector<Weight> weights;
  std::vector<int> level;
  std::vector<std::shared_ptr<const CrystalGraph>> crystals;

  auto colour = [&](const Weight& w, int lvl) {
    for (std::size_t c = 0; c < weights.size(); ++c)
      if (weights[c] == w) return static_cast<int>(c);
    auto b = std::make_shared<const CrystalGraph>(build_irreducible(cartan, w));
    weights.push_back(w);
    level.push_back(lvl);
    crystals.push_back(b);
    d.colours.push_back(weight_to_string(w));
    std::vector<std::string> labels;
    for (int x = 0; x < b->size(); ++x) labels.push_back(b->label(x));
    d.cl.push_back(std::move(labels));
    return static_cast<int>(weights.size()) - 1;
  };
  for (const auto& w : base) {
    const std::size_t before = weights.size();
    d.base.push_back(colour(w, 1));
    if (weights.size() == before) throw std::invalid_argument("from_crystals: repeated colour " + weight_to_string(w));
  }

  auto process_pair = [&](int a, int b, int lvl) {
    const CrystalGraph& ba = *crystals[a];
    const CrystalGraph& bb = *crystals[b];
    const CrystalGraph t = tensor(ba, bb);
    std::vector<Component> comps = components(t);
    std::sort(comps.begin(), comps.end(), [](const Component& x, const Component& y) { return x.highest < y.highest; });
    Bijection& phi = d.phi[{a, b}];
    for (const auto& comp : comps) {
      const int mu = colour(comp.highest_weight, lvl);
      auto& labels = d.mult[{a, b, mu}];
      const int l = static_cast<int>(labels.size());
      const auto [hx, hy] = std::pair{comp.highest / bb.size(), comp.highest % bb.size()};
      labels.push_back(ba.label(hx) + " (x) " + bb.label(hy));
      const CrystalGraph& bm = *crystals[mu];
      auto match = match_components(bm, 0, t, comp.highest);
      if (!match) throw std::logic_error("from_crystals: component is not isomorphic to B(" + d.colours[mu] + ")");
      for (int c = 0; c < bm.size(); ++c) {
        const int e = (*match)[c];
        phi[{mu, l, c}] = {e / bb.size(), e % bb.size()};
      }
    }
    const CrystalBijection s = commutor(ba, bb);
    Bijection& sigma = d.sigma[{a, b}];
    for (int e = 0; e < t.size(); ++e) {
      const int img = s(e);
      sigma[{e / bb.size(), e % bb.size()}] = {img / ba.size(), img % ba.size()};
    }
  };

  for (int lvl = 2; lvl <= 4; ++lvl) {
    const int count = static_cast<int>(weights.size());
    for (int a = 0; a < count; ++a)
      for (int b = 0; b < count; ++b)
        if (level[a] + level[b] == lvl) process_pair(a, b, lvl);
  }

  std::map<std::pair<int, int>, Bijection> inv;
  auto inverse_phi = [&](int a, int b) -> const Bijection& {
    auto it = inv.find({a, b});
    if (it != inv.end()) return it->second;
    return inv.emplace(std::pair{a, b}, invert(d.phi.at({a, b}))).first->second;
  };
  const int count = static_cast<int>(weights.size());
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b)
      for (int c = 0; c < count; ++c) {
        if (level[a] + level[b] + level[c] > 4) continue;
        Bijection& alpha = d.alpha[{a, b, c}];
        const Bijection& phi_ab = d.phi.at({a, b});
        const Bijection& inv_bc = inverse_phi(b, c);
        for (int g = 0; g < count; ++g)
          for (int l = 0; l < d.mult_size(a, b, g); ++l)
            for (int rho = 0; rho < count; ++rho)
              for (int m = 0; m < d.mult_size(g, c, rho); ++m) {
                // Evaluate at the highest element of CL(rho) and read off the right bracketing.
                const Key& gz = d.phi.at({g, c}).at({rho, m, 0});
                const Key& xy = phi_ab.at({g, l, gz[0]});
                const Key& tvt = inv_bc.at({xy[1], gz[1]});
                const Key& rus = inverse_phi(a, tvt[0]).at({xy[0], tvt[2]});
                if (rus[0] != rho || rus[2] != 0)
                  throw std::logic_error("from_crystals: re-bracketing does not preserve highest elements");
                alpha[{g, l, rho, m}] = {tvt[0], tvt[1], rho, rus[1]};
              }
      }
  return d;
}

// ---------------------------------------------------------------------------
// Validation

std::map<std::pair<int, int>, int> induced_commutor(const CategoryData& d, int a, int b) {
  auto ps = d.sigma.find({a, b});
  auto pab = d.phi.find({a, b});
  auto pba = d.phi.find({b, a});
  if (ps == d.sigma.end() || pab == d.phi.end() || pba == d.phi.end())
    throw std::domain_error("missing sigma or phi for " + tuple_name(d.colours, {a, b}));
  const Bijection inv_ba = invert(pba->second);
  std::map<std::pair<int, int>, int> out;
  for (const auto& [k, xy] : pab->second) {
    const Key& yx = lookup(ps->second, xy, "sigma");
    const Key& back = lookup(inv_ba, yx, "phi^-1");
    if (back[0] != k[0] || back[2] != k[2])
      throw std::domain_error("sigma " + tuple_name(d.colours, {a, b}) + " is not natural: " + key_string(k) + " -> " +
                              key_string(back));
    auto [it, fresh] = out.emplace(std::pair{k[0], k[1]}, back[1]);
    if (!fresh && it->second != back[1])
      throw std::domain_error("sigma " + tuple_name(d.colours, {a, b}) + " is not natural: " + key_string(k) +
                              " mixes multiplicity elements");
  }
  return out;
}

namespace {

class Validator {
 public:
  Validator(const CategoryData& d, ValidationReport& r) : d_(d), r_(r) {}

  void fail(const std::string& axiom, const std::vector<int>& tuple, const std::string& detail) {
    ++r_.failure_count;
    if (r_.failures.size() < 200) r_.failures.push_back({axiom, tuple_name(d_.colours, tuple), detail});
  }

  bool colour_ok(int c) const { return c >= 0 && c < d_.colour_count(); }
  int cl_size(int c) const { return static_cast<int>(d_.cl[c].size()); }

  std::set<Key> phi_domain(int a, int b) const {
    std::set<Key> s;
    for (int mu = 0; mu < d_.colour_count(); ++mu)
      for (int l = 0; l < d_.mult_size(a, b, mu); ++l)
        for (int c = 0; c < cl_size(mu); ++c) s.insert({mu, l, c});
    return s;
  }
  std::set<Key> product(int a, int b) const {
    std::set<Key> s;
    for (int x = 0; x < cl_size(a); ++x)
      for (int y = 0; y < cl_size(b); ++y) s.insert({x, y});
    return s;
  }
  std::set<Key> left_bracketed(int a, int b, int c) const {
    std::set<Key> s;
    for (int g = 0; g < d_.colour_count(); ++g)
      for (int l = 0; l < d_.mult_size(a, b, g); ++l)
        for (int rho = 0; rho < d_.colour_count(); ++rho)
          for (int m = 0; m < d_.mult_size(g, c, rho); ++m) s.insert({g, l, rho, m});
    return s;
  }
  std::set<Key> right_bracketed(int a, int b, int c) const {
    std::set<Key> s;
    for (int t = 0; t < d_.colour_count(); ++t)
      for (int v = 0; v < d_.mult_size(b, c, t); ++v)
        for (int rho = 0; rho < d_.colour_count(); ++rho)
          for (int u = 0; u < d_.mult_size(a, t, rho); ++u) s.insert({t, v, rho, u});
    return s;
  }

  // Empty string when f is a bijection from `dom` onto `cod`.
  static std::string bijection_error(const Bijection& f, const std::set<Key>& dom, const std::set<Key>& cod) {
    if (f.size() != dom.size()) return "domain has " + std::to_string(f.size()) + " elements, expected " + std::to_string(dom.size());
    std::set<Key> seen;
    for (const auto& [k, v] : f) {
      if (!dom.count(k)) return "unexpected domain element " + key_string(k);
      if (!cod.count(v)) return "image " + key_string(v) + " of " + key_string(k) + " outside the codomain";
      if (!seen.insert(v).second) return "image " + key_string(v) + " hit twice";
    }
    if (seen.size() != cod.size()) return "not surjective";
    return {};
  }

  bool structure() {
    bool ok = true;
    auto& n = r_.checked["structure"];
    for (int c = 0; c < d_.colour_count(); ++c) {
      ++n;
      if (static_cast<int>(d_.cl.size()) != d_.colour_count() || d_.cl[c].empty()) {
        fail("structure", {c}, "CL is empty");
        ok = false;
      }
    }
    if (!ok) return false;
    for (const auto& [k, v] : d_.mult) {
      ++n;
      if (!colour_ok(k[0]) || !colour_ok(k[1]) || !colour_ok(k[2])) {
        fail("structure", {k[0], k[1], k[2]}, "multiplicity set for unknown colour");
        ok = false;
      }
    }
    for (int c : d_.base)
      if (!colour_ok(c)) {
        fail("structure", {c}, "base colour out of range");
        ok = false;
      }
    if (!ok) return false;
    for (const auto& [k, f] : d_.phi) {
      ++n;
      if (!colour_ok(k.first) || !colour_ok(k.second)) {
        fail("structure", {k.first, k.second}, "phi for unknown colour");
        continue;
      }
      auto e = bijection_error(f, phi_domain(k.first, k.second), product(k.first, k.second));
      if (!e.empty()) fail("structure", {k.first, k.second}, "phi: " + e);
    }
    for (const auto& [k, f] : d_.sigma) {
      ++n;
      if (!colour_ok(k.first) || !colour_ok(k.second)) {
        fail("structure", {k.first, k.second}, "sigma for unknown colour");
        continue;
      }
      std::set<Key> cod;
      for (const auto& p : product(k.second, k.first)) cod.insert(p);
      auto e = bijection_error(f, product(k.first, k.second), cod);
      if (!e.empty()) fail("structure", {k.first, k.second}, "sigma: " + e);
    }
    for (const auto& [k, f] : d_.alpha) {
      ++n;
      if (!colour_ok(k[0]) || !colour_ok(k[1]) || !colour_ok(k[2])) {
        fail("structure", {k[0], k[1], k[2]}, "alpha for unknown colour");
        continue;
      }
      auto e = bijection_error(f, left_bracketed(k[0], k[1], k[2]), right_bracketed(k[0], k[1], k[2]));
      if (e.empty())
        for (const auto& [x, y] : f)
          if (x[2] != y[2]) {
            e = "does not preserve the grading at " + key_string(x);
            break;
          }
      if (!e.empty()) fail("structure", {k[0], k[1], k[2]}, "alpha: " + e);
    }
    return r_.failure_count == 0;
  }

  void involutivity() {
    for (const auto& [k, f] : d_.sigma) {
      ++r_.checked["involutivity"];
      auto back = d_.sigma.find({k.second, k.first});
      if (back == d_.sigma.end()) {
        fail("involutivity", {k.first, k.second}, "sigma for the reversed pair is missing");
        continue;
      }
      for (const auto& [x, y] : f) {
        const Key& z = lookup(back->second, {y[0], y[1]}, "sigma");
        if (z != x) {
          fail("involutivity", {k.first, k.second}, key_string(x) + " -> " + key_string(y) + " -> " + key_string(z));
          break;
        }
      }
    }
  }

  const std::map<std::pair<int, int>, int>* hat(int a, int b) {
    auto it = hats_.find({a, b});
    if (it != hats_.end()) return it->second ? &*it->second : nullptr;
    std::optional<std::map<std::pair<int, int>, int>> h;
    try {
      h = induced_commutor(d_, a, b);
    } catch (const std::exception&) {
    }
    auto& slot = hats_[{a, b}];
    slot = std::move(h);
    return slot ? &*slot : nullptr;
  }

  void naturality() {
    for (const auto& [k, f] : d_.sigma) {
      (void)f;
      ++r_.checked["naturality"];
      try {
        induced_commutor(d_, k.first, k.second);
      } catch (const std::exception& e) {
        fail("naturality", {k.first, k.second}, e.what());
      }
    }
  }

  const Bijection* find_phi(int a, int b) {
    auto it = d_.phi.find({a, b});
    return it == d_.phi.end() ? nullptr : &it->second;
  }
  const Bijection* find_alpha(int a, int b, int c) {
    auto it = d_.alpha.find({a, b, c});
    return it == d_.alpha.end() ? nullptr : &it->second;
  }

  // phi_{ab} x id after phi_{gc} against (id x phi_{bc}) after phi_{at} after alpha.
  void monoidal_hexagon() {
    for (const auto& [k, alpha] : d_.alpha) {
      ++r_.checked["monoidal-hexagon"];
      const int a = k[0], b = k[1], c = k[2];
      const std::vector<int> inst{a, b, c};
      const Bijection* phi_ab = find_phi(a, b);
      const Bijection* phi_bc = find_phi(b, c);
      if (!phi_ab || !phi_bc) {
        fail("monoidal-hexagon", inst, "missing phi");
        continue;
      }
      bool bad = false;
      for (const auto& [x, y] : alpha) {
        const int g = x[0], l = x[1], rho = x[2], m = x[3];
        const Bijection* phi_gc = find_phi(g, c);
        const Bijection* phi_at = find_phi(a, y[0]);
        if (!phi_gc || !phi_at) {
          fail("monoidal-hexagon", inst, "missing phi for an intermediate colour");
          bad = true;
          break;
        }
        for (int z = 0; z < cl_size(rho) && !bad; ++z) {
          const Key& gz = lookup(*phi_gc, {rho, m, z}, "phi");
          const Key& xy = lookup(*phi_ab, {g, l, gz[0]}, "phi");
          const Key left{xy[0], xy[1], gz[1]};
          const Key& xt = lookup(*phi_at, {rho, y[3], z}, "phi");
          const Key& yz = lookup(*phi_bc, {y[0], y[1], xt[1]}, "phi");
          const Key right{xt[0], yz[0], yz[1]};
          if (left != right) {
            fail("monoidal-hexagon", inst,
                 "at " + key_string(x) + " with " + std::to_string(z) + ": " + key_string(left) + " vs " + key_string(right));
            bad = true;
          }
        }
        if (bad) break;
      }
    }
  }

  void pentagon(const std::vector<int>& base) {
    for (int a : base)
      for (int b : base)
        for (int c : base)
          for (int e : base) {
            ++r_.checked["pentagon"];
            const std::vector<int> inst{a, b, c, e};
            try {
              pentagon_instance(a, b, c, e);
            } catch (const std::exception& ex) {
              fail("pentagon", inst, ex.what());
            }
          }
  }

  void pentagon_instance(int a, int b, int c, int e) {
    const Bijection* abc = find_alpha(a, b, c);
    const Bijection* bce = find_alpha(b, c, e);
    if (!abc || !bce) throw std::out_of_range("missing alpha");
    for (int g = 0; g < d_.colour_count(); ++g)
      for (int l1 = 0; l1 < d_.mult_size(a, b, g); ++l1)
        for (int eps = 0; eps < d_.colour_count(); ++eps)
          for (int l2 = 0; l2 < d_.mult_size(g, c, eps); ++l2)
            for (int rho = 0; rho < d_.colour_count(); ++rho)
              for (int l3 = 0; l3 < d_.mult_size(eps, e, rho); ++l3) {
                const Bijection* gce = find_alpha(g, c, e);
                if (!gce) throw std::out_of_range("missing alpha " + tuple_name(d_.colours, {g, c, e}));
                const Key& s1 = lookup(*gce, {eps, l2, rho, l3}, "alpha");  // (kappa, v, rho, u)
                const Bijection* abk = find_alpha(a, b, s1[0]);
                if (!abk) throw std::out_of_range("missing alpha " + tuple_name(d_.colours, {a, b, s1[0]}));
                const Key& s2 = lookup(*abk, {g, l1, rho, s1[3]}, "alpha");  // (eta, v', rho, u')
                const Key one{s1[0], s1[1], s2[0], s2[1], rho, s2[3]};

                const Key& t1 = lookup(*abc, {g, l1, eps, l2}, "alpha");  // (tau, x, eps, w)
                const Bijection* ate = find_alpha(a, t1[0], e);
                if (!ate) throw std::out_of_range("missing alpha " + tuple_name(d_.colours, {a, t1[0], e}));
                const Key& t2 = lookup(*ate, {eps, t1[3], rho, l3}, "alpha");  // (zeta, z, rho, y)
                const Key& t3 = lookup(*bce, {t1[0], t1[1], t2[0], t2[1]}, "alpha");  // (kappa, q, zeta, p)
                const Key two{t3[0], t3[1], t3[2], t3[3], rho, t2[3]};
                if (one != two)
                  throw std::runtime_error("at " + key_string({g, l1, eps, l2, rho, l3}) + ": " + key_string(one) +
                                           " vs " + key_string(two));
              }
  }

  void hexagon(const std::vector<int>& base) {
    for (int a : base)
      for (int b : base)
        for (int c : base) {
          ++r_.checked["hexagon"];
          const std::vector<int> inst{a, b, c};
          try {
            hexagon_instance(a, b, c);
          } catch (const std::exception& ex) {
            fail("hexagon", inst, ex.what());
          }
        }
  }

  void hexagon_instance(int a, int b, int c) {
    const Bijection* abc = find_alpha(a, b, c);
    const Bijection* cba = find_alpha(c, b, a);
    if (!abc || !cba) throw std::out_of_range("missing alpha");
    const Bijection cba_inv = invert(*cba);
    auto need_hat = [&](int p, int q) {
      auto h = hat(p, q);
      if (!h) throw std::out_of_range("no induced commutor for " + tuple_name(d_.colours, {p, q}));
      return h;
    };
    auto apply_hat = [&](const std::map<std::pair<int, int>, int>* h, int mu, int l) {
      auto it = h->find({mu, l});
      if (it == h->end()) throw std::out_of_range("induced commutor undefined");
      return it->second;
    };
    const auto* s_bc = need_hat(b, c);
    const auto* s_ab = need_hat(a, b);
    for (const auto& [x, y] : *abc) {
      const int g = x[0], l = x[1], rho = x[2], m = x[3];
      const int t = y[0], v = y[1], u = y[3];
      const Key one{t, apply_hat(s_bc, t, v), rho, apply_hat(need_hat(a, t), rho, u)};
      const Key mid{g, apply_hat(s_ab, g, l), rho, apply_hat(need_hat(g, c), rho, m)};
      const Key& two = lookup(cba_inv, mid, "alpha^-1");
      if (one != two)
        throw std::runtime_error("at " + key_string(x) + ": " + key_string(one) + " vs " + key_string(two));
    }
  }

 private:
  const CategoryData& d_;
  ValidationReport& r_;
  std::map<std::pair<int, int>, std::optional<std::map<std::pair<int, int>, int>>> hats_;
};

}  // namespace

ValidationReport validate(const CategoryData& d, const std::vector<int>& colours) {
  ValidationReport r;
  Validator v(d, r);
  if (!v.structure()) return r;
  const std::vector<int>& base = colours.empty() ? d.base : colours;
  for (int c : base)
    if (c < 0 || c >= d.colour_count()) throw std::invalid_argument("validate: colour index out of range");
  v.involutivity();
  v.naturality();
  v.monoidal_hexagon();
  v.pentagon(base);
  v.hexagon(base);
  return r;
}

nlohmann::json to_json(const ValidationReport& r) {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : r.failures) fails.push_back({{"axiom", f.axiom}, {"instance", f.instance}, {"detail", f.detail}});
  return {{"checked", r.checked}, {"failure_count", r.failure_count}, {"failures", fails}, {"passed", r.passed()}};
}

std::string mutate(CategoryData& d, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<std::pair<std::string, Bijection*>> maps;
  for (auto& [k, f] : d.alpha)
    if (f.size() >= 2) maps.emplace_back("alpha" + tuple_name(d.colours, {k[0], k[1], k[2]}), &f);
  for (auto& [k, f] : d.phi)
    if (f.size() >= 2) maps.emplace_back("phi" + tuple_name(d.colours, {k.first, k.second}), &f);
  for (auto& [k, f] : d.sigma)
    if (f.size() >= 2) maps.emplace_back("sigma" + tuple_name(d.colours, {k.first, k.second}), &f);
  if (maps.empty()) throw std::invalid_argument("mutate: no map with two or more elements");
  auto& [name, f] = maps[std::uniform_int_distribution<std::size_t>(0, maps.size() - 1)(rng)];
  std::uniform_int_distribution<std::size_t> pick(0, f->size() - 1);
  const std::size_t i = pick(rng);
  std::size_t j = pick(rng);
  while (j == i) j = pick(rng);
  auto x = std::next(f->begin(), static_cast<std::ptrdiff_t>(i));
  auto y = std::next(f->begin(), static_cast<std::ptrdiff_t>(j));
  std::swap(x->second, y->second);
  return name + ": swapped images of " + key_string(x->first) + " and " + key_string(y->first);
}

// ---------------------------------------------------------------------------
// Operadic covering

namespace {

void sigma_hat_all(const CategoryData& d, FiberSystem& fs) {
  for (const auto& [k, f] : d.sigma) {
    (void)f;
    fs.x3_s12[k] = induced_commutor(d, k.first, k.second);
  }
}

int hat_of(const FiberSystem& fs, int a, int b, int mu, int l) {
  return fs.x3_s12.at({a, b}).at({mu, l});
}

Key point(int a, int b, int c, int x, int y, int z) { return {a, b, c, x, y, z}; }

// Positions of a point as (colour, entry) pairs permuted by w: new position w(k) holds old k.
Key permute_point(const Key& p, const Permutation& w) {
  Key q = p;
  for (int k = 0; k < 3; ++k) {
    q[w[k] - 1] = p[k];
    q[3 + w[k] - 1] = p[3 + k];
  }
  return q;
}

}  // namespace

FiberSystem covering_from_category(const CategoryData& d) {
  const ValidationReport rep = validate(d);
  if (!rep.passed())
    throw std::invalid_argument("covering_from_category: data fails validation (" +
                                (rep.failures.empty() ? std::string("?") : rep.failures.front().axiom + " " +
                                                                               rep.failures.front().instance) +
                                ")");
  FiberSystem fs;
  fs.colours = d.colours;
  fs.base = d.base;
  fs.e1 = d.cl;
  fs.x3 = d.mult;
  sigma_hat_all(d, fs);

  auto cl_size = [&](int c) { return static_cast<int>(d.cl[c].size()); };
  for (const auto& [k, phi] : d.phi) {
    const auto [a, b] = k;
    FiberSystem::Pair p;
    for (int x = 0; x < cl_size(a); ++x)
      for (int y = 0; y < cl_size(b); ++y) {
        p.alpha1[{x, y}] = {static_cast<int>(p.at_infinity.size())};
        p.at_infinity.push_back(d.cl[a][x] + " | " + d.cl[b][y]);
      }
    for (const auto& [key, xy] : phi) {
      const int idx = static_cast<int>(p.at_zero.size());
      p.beta0[key] = {idx};
      p.at_zero.push_back(d.mult.at({a, b, key[0]})[key[1]] + " / " + d.cl[key[0]][key[2]]);
      p.transport[{idx}] = p.alpha1.at(xy);
    }
    const Bijection& sigma = d.sigma.at(k);
    for (const auto& [xy, yx] : sigma) p.s12[p.alpha1.at(xy)] = {yx[0] * cl_size(a) + yx[1]};
    fs.e2.emplace(k, std::move(p));
  }

  for (const auto& [k, alpha] : d.alpha) {
    const int a = k[0], b = k[1], c = k[2];
    FiberSystem::Triple t;
    for (const auto& [x, y] : alpha) {
      t.gamma_front[x] = {static_cast<int>(t.left.size())};
      t.left.push_back(d.mult.at({a, b, x[0]})[x[1]] + " ; " + d.mult.at({x[0], c, x[2]})[x[3]]);
    }
    std::vector<Key> right;
    for (const auto& [x, y] : alpha) right.push_back(y);
    std::sort(right.begin(), right.end());
    for (const auto& y : right) {
      t.gamma_one[y] = {static_cast<int>(t.right.size())};
      t.right.push_back(d.mult.at({b, c, y[0]})[y[1]] + " ; " + d.mult.at({a, y[0], y[2]})[y[3]]);
    }
    for (const auto& [x, y] : alpha) t.transport[t.gamma_front.at(x)] = t.gamma_one.at(y);
    fs.x4.emplace(k, std::move(t));
  }

  // vC_3 on E over base^3.
  auto sigma = [&](int a, int b, int x, int y) { return d.sigma.at({a, b}).at({x, y}); };
  std::map<std::pair<int, int>, Bijection> phi_inv;
  auto phi_inverse = [&](int a, int b) -> const Bijection& {
    auto it = phi_inv.find({a, b});
    if (it == phi_inv.end()) it = phi_inv.emplace(std::pair{a, b}, invert(d.phi.at({a, b}))).first;
    return it->second;
  };
  Bijection& s12 = fs.e3_action["s1_2"];
  Bijection& s23 = fs.e3_action["s2_3"];
  Bijection& s13 = fs.e3_action["s1_3"];
  std::vector<Bijection*> perms;
  const auto all = all_permutations(3);
  for (const auto& w : all) perms.push_back(&fs.e3_action["w" + permutation_to_string(w)]);
  for (int a : d.base)
    for (int b : d.base)
      for (int c : d.base)
        for (int x = 0; x < cl_size(a); ++x)
          for (int y = 0; y < cl_size(b); ++y)
            for (int z = 0; z < cl_size(c); ++z) {
              const Key p = point(a, b, c, x, y, z);
              const Key yx = sigma(a, b, x, y);
              s12[p] = point(b, a, c, yx[0], yx[1], z);
              const Key zy = sigma(b, c, y, z);
              s23[p] = point(a, c, b, x, zy[0], zy[1]);
              // sigma_{A, C (x) B} after (id (x) sigma_{B, C}), the composite commutor taken blockwise.
              const Key& tvt = phi_inverse(c, b).at(zy);
              const Key ts = sigma(a, tvt[0], x, tvt[2]);
              const Key& zy2 = d.phi.at({c, b}).at({tvt[0], tvt[1], ts[0]});
              s13[p] = point(c, b, a, zy2[0], zy2[1], ts[1]);
              for (std::size_t w = 0; w < all.size(); ++w) (*perms[w])[p] = permute_point(p, all[w]);
            }

  // C_3 on X over base^3 at y_L: points (a, b, c, g, l, rho, m).
  Bijection& x12 = fs.x4_action["s1_2"];
  Bijection& x23 = fs.x4_action["s2_3"];
  Bijection& x13 = fs.x4_action["s1_3"];
  for (int a : d.base)
    for (int b : d.base)
      for (int c : d.base) {
        const Bijection& abc = d.alpha.at({a, b, c});
        const Bijection acb_inv = invert(d.alpha.at({a, c, b}));
        for (const auto& [x, y] : abc) {
          const int g = x[0], l = x[1], rho = x[2], m = x[3];
          const Key p{a, b, c, g, l, rho, m};
          x12[p] = {b, a, c, g, hat_of(fs, a, b, g, l), rho, m};
          const Key& back = acb_inv.at({y[0], hat_of(fs, b, c, y[0], y[1]), rho, y[3]});
          x23[p] = {a, c, b, back[0], back[1], rho, back[3]};
          x13[p] = {c, b, a, y[0], hat_of(fs, b, c, y[0], y[1]), rho, hat_of(fs, a, y[0], rho, y[3])};
        }
      }
  return fs;
}

CategoryData category_from_covering(const FiberSystem& fs) {
  if (fs.truncation < 3) throw std::invalid_argument("category_from_covering: need truncation level >= 3");
  CategoryData d;
  d.colours = fs.colours;
  d.base = fs.base;
  d.cl = fs.e1;
  d.mult = fs.x3;
  for (const auto& [k, p] : fs.e2) {
    const Bijection inf_inv = invert(p.alpha1);
    Bijection& phi = d.phi[k];
    for (const auto& [key, idx] : p.beta0) phi[key] = lookup(inf_inv, lookup(p.transport, idx, "transport"), "alpha1^-1");
    auto rev = fs.e2.find({k.second, k.first});
    if (rev == fs.e2.end()) throw std::invalid_argument("category_from_covering: missing fiber for reversed pair");
    const Bijection rev_inv = invert(rev->second.alpha1);
    Bijection& sigma = d.sigma[k];
    for (const auto& [xy, idx] : p.alpha1) sigma[xy] = lookup(rev_inv, lookup(p.s12, idx, "s12"), "alpha1^-1");
  }
  for (const auto& [k, t] : fs.x4) {
    const Bijection right_inv = invert(t.gamma_one);
    Bijection& alpha = d.alpha[k];
    for (const auto& [key, idx] : t.gamma_front)
      alpha[key] = lookup(right_inv, lookup(t.transport, idx, "transport"), "gamma1^-1");
  }
  return d;
}

namespace {

Key apply_word(const std::map<std::string, Bijection>& action, const GroupWord& w, Key p) {
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) p = lookup(action.at(to_string(*it)), p, to_string(*it));
  return p;
}

}  // namespace

CoveringReport check_covering(const FiberSystem& fs) {
  CoveringReport r;
  auto note = [&](const std::string& s) {
    if (r.failures.size() < 200) r.failures.push_back(s);
  };

  auto relations = [&](const std::string& label, GroupKind kind, const std::map<std::string, Bijection>& action) {
    if (action.empty()) return;
    const Bijection& any = action.begin()->second;
    for (const auto& rel : defining_relations(kind, 3))
      for (const auto& [p, img] : any) {
        (void)img;
        ++r.checked[label];
        try {
          if (apply_word(action, rel.lhs, p) != apply_word(action, rel.rhs, p)) {
            note(label + ": " + to_string(rel.lhs) + " = " + to_string(rel.rhs) + " fails at " + key_string(p));
            break;
          }
        } catch (const std::exception& e) {
          note(label + ": " + e.what());
          break;
        }
      }
  };
  relations("E3 vC_3 relations", GroupKind::vC, fs.e3_action);
  relations("X4 C_3 relations", GroupKind::C, fs.x4_action);

  std::map<std::pair<int, int>, Bijection> inf_inv;
  auto inf_inverse = [&](int a, int b) -> const Bijection& {
    auto it = inf_inv.find({a, b});
    if (it == inf_inv.end()) it = inf_inv.emplace(std::pair{a, b}, invert(fs.e2.at({a, b}).alpha1)).first;
    return it->second;
  };
  auto decode_inf = [&](int a, int b, const Key& idx) { return lookup(inf_inverse(a, b), idx, "alpha1^-1"); };
  auto e3 = [&](const char* g, const Key& p) { return lookup(fs.e3_action.at(g), p, g); };

  try {
    for (int a : fs.base)
      for (int b : fs.base)
        for (int c : fs.base) {
          const auto& bc = fs.e2.at({b, c});
          const auto& ab = fs.e2.at({a, b});
          const int na = static_cast<int>(fs.e1[a].size()), nc = static_cast<int>(fs.e1[c].size());
          // alpha~_1 : E(a) x E(b, c) -> E(a, b, c)
          for (int x = 0; x < na; ++x)
            for (const auto& [yz, k] : bc.alpha1) {
              ++r.checked["alpha1 equivariance"];
              const Key moved = decode_inf(c, b, lookup(bc.s12, k, "s12"));
              if (e3("s2_3", point(a, b, c, x, yz[0], yz[1])) != point(a, c, b, x, moved[0], moved[1]))
                note("alpha1 not equivariant for s2_3 at " + tuple_name(fs.colours, {a, b, c}));
              if (e3("w[1,3,2]", point(a, b, c, x, yz[0], yz[1])) != point(a, c, b, x, yz[1], yz[0]))
                note("alpha1 not equivariant for w[1,3,2] at " + tuple_name(fs.colours, {a, b, c}));
            }
          // alpha~_2 : E(a, b) x E(c) -> E(a, b, c)
          for (const auto& [xy, k] : ab.alpha1)
            for (int z = 0; z < nc; ++z) {
              ++r.checked["alpha2 equivariance"];
              const Key moved = decode_inf(b, a, lookup(ab.s12, k, "s12"));
              if (e3("s1_2", point(a, b, c, xy[0], xy[1], z)) != point(b, a, c, moved[0], moved[1], z))
                note("alpha2 not equivariant for s1_2 at " + tuple_name(fs.colours, {a, b, c}));
              if (e3("w[2,1,3]", point(a, b, c, xy[0], xy[1], z)) != point(b, a, c, xy[1], xy[0], z))
                note("alpha2 not equivariant for w[2,1,3] at " + tuple_name(fs.colours, {a, b, c}));
            }
          // beta~_0 : X(a, b; mu) x E(mu, c) -> E(a, b, c), through the transport of E(a, b).
          auto glue_front = [&](int p, int q, int mu, int l, int g) {
            const auto& pr = fs.e2.at({p, q});
            return decode_inf(p, q, lookup(pr.transport, lookup(pr.beta0, {mu, l, g}, "beta0"), "transport"));
          };
          for (int mu = 0; mu < static_cast<int>(fs.colours.size()); ++mu) {
            auto it = fs.x3.find({a, b, mu});
            if (it != fs.x3.end())
              for (int l = 0; l < static_cast<int>(it->second.size()); ++l)
                for (const auto& [gz, k] : fs.e2.at({mu, c}).alpha1) {
                  (void)k;
                  ++r.checked["beta0 equivariance"];
                  const Key xy = glue_front(a, b, mu, l, gz[0]);
                  const Key yx = glue_front(b, a, mu, hat_of(fs, a, b, mu, l), gz[0]);
                  if (e3("s1_2", point(a, b, c, xy[0], xy[1], gz[1])) != point(b, a, c, yx[0], yx[1], gz[1]))
                    note("beta0 not equivariant at " + tuple_name(fs.colours, {a, b, c, mu}));
                }
            auto jt = fs.x3.find({b, c, mu});
            if (jt != fs.x3.end())
              for (int l = 0; l < static_cast<int>(jt->second.size()); ++l)
                for (const auto& [xg, k] : fs.e2.at({a, mu}).alpha1) {
                  (void)k;
                  ++r.checked["beta1 equivariance"];
                  const Key yz = glue_front(b, c, mu, l, xg[1]);
                  const Key zy = glue_front(c, b, mu, hat_of(fs, b, c, mu, l), xg[1]);
                  if (e3("s2_3", point(a, b, c, xg[0], yz[0], yz[1])) != point(a, c, b, xg[0], zy[0], zy[1]))
                    note("beta1 not equivariant at " + tuple_name(fs.colours, {a, b, c, mu}));
                }
          }
        }
  } catch (const std::exception& e) {
    note(std::string("gluing maps incomplete: ") + e.what());
  }
  return r;
}

nlohmann::json to_json(const CoveringReport& r) {
  return {{"checked", r.checked}, {"failures", r.failures}, {"passed", r.passed()}};
}

RoundtripReport roundtrip(const CategoryData& d) {
  RoundtripReport r;
  const FiberSystem fs = covering_from_category(d);
  const CategoryData back = category_from_covering(fs);
  r.category_identical = back == d;
  if (back.colours != d.colours || back.base != d.base) r.differences.push_back("colours");
  if (back.cl != d.cl) r.differences.push_back("CL sets");
  if (back.mult != d.mult) r.differences.push_back("multiplicity sets");
  if (back.phi != d.phi) r.differences.push_back("phi");
  if (back.sigma != d.sigma) r.differences.push_back("sigma");
  if (back.alpha != d.alpha) r.differences.push_back("alpha");
  const FiberSystem again = covering_from_category(back);
  r.covering_identical = again == fs;
  if (!r.covering_identical) r.differences.push_back("fiber system");
  r.covering = check_covering(fs);
  return r;
}

nlohmann::json to_json(const RoundtripReport& r) {
  return {{"category_identical", r.category_identical},
          {"covering_identical", r.covering_identical},
          {"differences", r.differences},
          {"covering", to_json(r.covering)},
          {"passed", r.passed()}};
}

}  // namespace cactus
