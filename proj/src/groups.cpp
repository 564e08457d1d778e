#include "cactus/groups.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cactus {

// ---------------------------------------------------------------------------
// Permutations

Permutation identity_permutation(int n) {
  Permutation w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("compose: permutation sizes differ");
  Permutation w(inner.size());
  for (std::size_t a = 0; a < inner.size(); ++a) w[a] = outer.at(static_cast<std::size_t>(inner[a] - 1));
  return w;
}

Permutation inverse(const Permutation& w) {
  Permutation inv(w.size());
  for (std::size_t a = 0; a < w.size(); ++a) inv.at(static_cast<std::size_t>(w[a] - 1)) = static_cast<int>(a) + 1;
  return inv;
}

bool is_permutation(const Permutation& w) {
  std::vector<bool> seen(w.size(), false);
  for (int v : w) {
    if (v < 1 || v > static_cast<int>(w.size()) || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

Permutation interval_reversal(int n, int i, int j) {
  if (i < 1 || j > n || i > j) throw std::invalid_argument("interval_reversal: bad interval");
  Permutation w = identity_permutation(n);
  for (int a = i; a <= j; ++a) w[a - 1] = i + j - a;
  return w;
}

Permutation long_cycle(int n) {
  Permutation w(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) w[a - 1] = a % n + 1;
  return w;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation w = identity_permutation(n);
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::string permutation_to_string(const Permutation& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t a = 0; a < w.size(); ++a) os << (a ? "," : "") << w[a];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Generators and words

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::C: return "C";
    case GroupKind::vC: return "vC";
    case GroupKind::MC: return "MC";
    case GroupKind::AC: return "AC";
  }
  return "?";
}

GroupKind parse_group_kind(const std::string& s) {
  if (s == "C") return GroupKind::C;
  if (s == "vC") return GroupKind::vC;
  if (s == "MC") return GroupKind::MC;
  if (s == "AC" || s == "AC~" || s == "ACt") return GroupKind::AC;
  throw std::invalid_argument("unknown group kind '" + s + "' (expected C, vC, MC or AC)");
}

std::string to_string(const Generator& g) {
  switch (g.kind) {
    case GenKind::Cactus:
    case GenKind::AffineS: return "s" + std::to_string(g.i) + "_" + std::to_string(g.j);
    case GenKind::Perm: return "w" + permutation_to_string(g.perm);
    case GenKind::MirabolicT: return "t" + std::to_string(g.i);
    case GenKind::AffineR: return "r";
  }
  return "?";
}

void validate_generator(GroupKind kind, int n, const Generator& g) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("generator " + to_string(g) + " illegal in " + to_string(kind) + "_" +
                                std::to_string(n) + ": " + why);
  };
  switch (g.kind) {
    case GenKind::Cactus:
      if (kind == GroupKind::AC) fail("affine words use cyclic intervals");
      if (!(1 <= g.i && g.i < g.j && g.j <= n)) fail("need 1 <= i < j <= n");
      break;
    case GenKind::AffineS:
      if (kind != GroupKind::AC) fail("cyclic intervals only in AC");
      if (g.i < 1 || g.i > n || g.j < 1 || g.j > n || g.i == g.j) fail("need i != j in 1..n");
      break;
    case GenKind::Perm:
      if (kind != GroupKind::vC) fail("permutation generators only in vC");
      if (static_cast<int>(g.perm.size()) != n || !is_permutation(g.perm)) fail("not a permutation of 1..n");
      break;
    case GenKind::MirabolicT:
      if (kind != GroupKind::MC) fail("t generators only in MC");
      if (g.i < 0 || g.i > n - 1) fail("need 0 <= i <= n-1");
      break;
    case GenKind::AffineR:
      if (kind != GroupKind::AC) fail("r only in AC");
      break;
  }
}

GroupWord::GroupWord(GroupKind k, int n_, std::vector<Generator> g) : kind(k), n(n_), gens(std::move(g)) {
  if (n < 1) throw std::invalid_argument("group rank n must be >= 1");
  for (auto& gen : gens) {
    // Words of kind AC accept s_ij with i < j written as plain cactus generators.
    if (kind == GroupKind::AC && gen.kind == GenKind::Cactus) gen.kind = GenKind::AffineS;
    validate_generator(kind, n, gen);
  }
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  if (kind != o.kind || n != o.n) throw std::invalid_argument("word product: kind or n mismatch");
  GroupWord out = *this;
  out.gens.insert(out.gens.end(), o.gens.begin(), o.gens.end());
  return out;
}

std::string to_string(const GroupWord& w) {
  if (w.gens.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.gens.size(); ++k) {
    if (k) s += ' ';
    s += to_string(w.gens[k]);
  }
  return s;
}

namespace {

int parse_int(const std::string& s, const std::string& token) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("malformed generator token '" + token + "'");
  return std::stoi(s);
}

std::string strip_braces(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '{' || c == '}'; }), s.end());
  return s;
}

}  // namespace

Generator parse_generator(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty generator token");
  if (token == "r") return Generator::r();
  if (token[0] == 'w') {
    std::string body = token.substr(1);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      throw std::invalid_argument("malformed permutation token '" + token + "'");
    Permutation p;
    std::stringstream ss(body.substr(1, body.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) p.push_back(parse_int(item, token));
    return Generator::w(std::move(p));
  }
  if (token[0] == 't') return Generator::t(parse_int(strip_braces(token.substr(1)), token));
  if (token[0] == 's') {
    std::string body = strip_braces(token.substr(1));
    auto us = body.find('_');
    if (us != std::string::npos) return Generator::s(parse_int(body.substr(0, us), token), parse_int(body.substr(us + 1), token));
    if (body.size() == 2) return Generator::s(parse_int(body.substr(0, 1), token), parse_int(body.substr(1), token));
    throw std::invalid_argument("ambiguous cactus generator '" + token + "'; use s<i>_<j>");
  }
  throw std::invalid_argument("unknown generator token '" + token + "'");
}

GroupWord parse_word(const std::string& text, GroupKind kind, int n) {
  std::vector<Generator> gens;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "e" || tok == "1") continue;
    gens.push_back(parse_generator(tok));
  }
  return GroupWord(kind, n, std::move(gens));
}

// ---------------------------------------------------------------------------
// Cabling

Permutation cabling(const Permutation& u, int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("cabling: need 1 <= i < j <= n");
  const int q = j - i;
  if (static_cast<int>(u.size()) != n - q || !is_permutation(u))
    throw std::invalid_argument("cabling: u must be a permutation of size n-(j-i)");
  const int p = u[i - 1];
  auto lift = [&](int v) { return v < p ? v : v + q; };
  Permutation w(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    if (a < i)
      w[a - 1] = lift(u[a - 1]);
    else if (a <= j)
      w[a - 1] = p + a - i;
    else
      w[a - 1] = lift(u[a - q - 1]);
  }
  if (!is_permutation(w) || !is_translation(w, i, j)) throw std::logic_error("cabling produced an invalid result");
  return w;
}

bool is_translation(const Permutation& w, int i, int j) {
  if (!(1 <= i && i < j && j <= static_cast<int>(w.size()))) throw std::invalid_argument("is_translation: bad interval");
  for (int k = 1; k <= j - i; ++k)
    if (w[i + k - 1] != w[i - 1] + k) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Relations

std::vector<int> cyclic_interval(int n, int i, int j) {
  std::vector<int> out{i};
  for (int a = i; a != j;) {
    a = a % n + 1;
    out.push_back(a);
  }
  return out;
}

Permutation cyclic_reversal(int n, int i, int j) {
  Permutation w = identity_permutation(n);
  auto iv = cyclic_interval(n, i, j);
  for (std::size_t k = 0; k < iv.size(); ++k) w[iv[k] - 1] = iv[iv.size() - 1 - k];
  return w;
}

namespace {

int mod1(int a, int n) { return ((a - 1) % n + n) % n + 1; }

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

// [k,l] is an order-preserving subinterval of [i,j].
bool subinterval(const std::vector<int>& outer, int k, int l) {
  auto pk = std::find(outer.begin(), outer.end(), k);
  auto pl = std::find(outer.begin(), outer.end(), l);
  return pk != outer.end() && pl != outer.end() && pk < pl;
}

void cactus_relations(std::vector<Relation>& out, GroupKind kind, int n) {
  auto S = [&](int i, int j) { return Generator::s(i, j); };
  auto word = [&](std::vector<Generator> g) { return GroupWord(kind, n, std::move(g)); };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({"involution", word({S(i, j), S(i, j)}), word({})});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          out.push_back({"disjoint", word({S(i, j), S(k, l)}), word({S(k, l), S(i, j)})});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i; k <= j; ++k)
        for (int l = k + 1; l <= j; ++l) {
          if (k == i && l == j) continue;
          out.push_back({"nesting", word({S(i, j), S(k, l)}), word({S(i + j - l, i + j - k), S(i, j)})});
        }
}

}  // namespace

std::vector<Relation> defining_relations(GroupKind kind, int n) {
  if (n < 2) throw std::invalid_argument("defining_relations: need n >= 2");
  std::vector<Relation> out;
  switch (kind) {
    case GroupKind::C:
      cactus_relations(out, kind, n);
      break;
    case GroupKind::vC: {
      cactus_relations(out, kind, n);
      auto word = [&](std::vector<Generator> g) { return GroupWord(kind, n, std::move(g)); };
      const auto perms = all_permutations(n);
      out.push_back({"symmetric", word({Generator::w(identity_permutation(n))}), word({})});
      for (const auto& a : perms)
        for (const auto& b : perms)
          out.push_back({"symmetric", word({Generator::w(a), Generator::w(b)}), word({Generator::w(compose(a, b))})});
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (const auto& u : all_permutations(n - (j - i))) {
            Permutation w = cabling(u, i, j, n);
            out.push_back({"cabled-conjugation",
                           word({Generator::w(w), Generator::s(i, j), Generator::w(inverse(w))}),
                           word({Generator::s(w[i - 1], w[j - 1])})});
          }
      break;
    }
    case GroupKind::AC: {
      auto word = [&](std::vector<Generator> g) { return GroupWord(kind, n, std::move(g)); };
      auto S = [](int i, int j) { return Generator::affine_s(i, j); };
      std::vector<std::pair<int, int>> intervals;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (i != j) intervals.emplace_back(i, j);
      for (auto [i, j] : intervals) out.push_back({"involution", word({S(i, j), S(i, j)}), word({})});
      for (std::size_t a = 0; a < intervals.size(); ++a)
        for (std::size_t b = a + 1; b < intervals.size(); ++b) {
          auto [i, j] = intervals[a];
          auto [k, l] = intervals[b];
          if (disjoint(cyclic_interval(n, i, j), cyclic_interval(n, k, l)))
            out.push_back({"disjoint", word({S(i, j), S(k, l)}), word({S(k, l), S(i, j)})});
        }
      for (auto [i, j] : intervals) {
        const auto outer = cyclic_interval(n, i, j);
        for (auto [k, l] : intervals) {
          if (k == i && l == j) continue;
          if (!subinterval(outer, k, l)) continue;
          out.push_back({"nesting", word({S(i, j), S(k, l)}), word({S(mod1(i + j - l, n), mod1(i + j - k, n)), S(i, j)})});
        }
      }
      out.push_back({"rotation-order", word(std::vector<Generator>(static_cast<std::size_t>(n), Generator::r())), word({})});
      for (auto [i, j] : intervals) {
        std::vector<Generator> lhs{Generator::r(), S(i, j)};
        for (int k = 0; k < n - 1; ++k) lhs.push_back(Generator::r());
        out.push_back({"rotation-conjugation", word(std::move(lhs)), word({S(mod1(i + 1, n), mod1(j + 1, n))})});
      }
      break;
    }
    case GroupKind::MC:
      throw std::invalid_argument("no presentation of MC_n is available; check relations through its image in vC_n");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

GroupWord hom_C_to_vC(const GroupWord& w) {
  if (w.kind != GroupKind::C) throw std::invalid_argument("hom_C_to_vC: expected a C_n word");
  return GroupWord(GroupKind::vC, w.n, w.gens);
}

GroupWord hom_MC_to_vC(const GroupWord& w) {
  if (w.kind != GroupKind::MC) throw std::invalid_argument("hom_MC_to_vC: expected an MC_n word");
  std::vector<Generator> out;
  for (const auto& g : w.gens) {
    if (g.kind == GenKind::MirabolicT) {
      if (g.i == 0) throw std::invalid_argument("hom_MC_to_vC: t0 does not lie in MC_n");
      out.push_back(Generator::w(interval_reversal(w.n, g.i, g.i + 1)));
    } else {
      out.push_back(g);
    }
  }
  return GroupWord(GroupKind::vC, w.n, std::move(out));
}

GroupWord hom_AC_to_vC(const GroupWord& w) {
  if (w.kind != GroupKind::AC) throw std::invalid_argument("hom_AC_to_vC: expected an AC_n word");
  const int n = w.n;
  Permutation c = long_cycle(n);
  auto power = [&](int k) {
    Permutation p = identity_permutation(n);
    for (int m = 0; m < ((k % n) + n) % n; ++m) p = compose(c, p);
    return p;
  };
  std::vector<Generator> out;
  for (const auto& g : w.gens) {
    if (g.kind == GenKind::AffineR) {
      out.push_back(Generator::w(c));
    } else if (g.i < g.j) {
      out.push_back(Generator::s(g.i, g.j));
    } else {
      // [i, j] wraps: rotate it down by j to the standard interval [i-j, n].
      const int k = g.j;
      out.push_back(Generator::w(power(k)));
      out.push_back(Generator::s(g.i - k, n));
      out.push_back(Generator::w(power(-k)));
    }
  }
  return GroupWord(GroupKind::vC, n, std::move(out));
}

GroupWord to_virtual(const GroupWord& w) {
  switch (w.kind) {
    case GroupKind::C: return hom_C_to_vC(w);
    case GroupKind::vC: return w;
    case GroupKind::MC: return hom_MC_to_vC(w);
    case GroupKind::AC: return hom_AC_to_vC(w);
  }
  throw std::logic_error("unreachable");
}

GroupWord mc_s0j_word(int j, int n) {
  if (j < 1 || j > n) throw std::invalid_argument("mc_s0j_word: need 1 <= j <= n");
  std::vector<Generator> gens;
  for (int top = 0; top < j; ++top)
    for (int k = top; k >= 0; --k) gens.push_back(Generator::t(k));
  return GroupWord(GroupKind::MC, n, std::move(gens));
}

Permutation project_to_symmetric(const GroupWord& w) {
  if (w.kind == GroupKind::MC) {
    // S_{n+1} on points 0..n, stored 0-based.
    Permutation acc(static_cast<std::size_t>(w.n) + 1);
    std::iota(acc.begin(), acc.end(), 0);
    for (const auto& g : w.gens) {
      Permutation p(acc.size());
      std::iota(p.begin(), p.end(), 0);
      if (g.kind == GenKind::MirabolicT) {
        std::swap(p[g.i], p[g.i + 1]);
      } else {
        for (int a = g.i; a <= g.j; ++a) p[a] = g.i + g.j - a;
      }
      Permutation next(acc.size());
      for (std::size_t a = 0; a < acc.size(); ++a) next[a] = acc[p[a]];
      acc = std::move(next);
    }
    return acc;
  }
  Permutation acc = identity_permutation(w.n);
  for (const auto& g : w.gens) {
    Permutation p;
    switch (g.kind) {
      case GenKind::Cactus: p = interval_reversal(w.n, g.i, g.j); break;
      case GenKind::Perm: p = g.perm; break;
      case GenKind::AffineS: p = cyclic_reversal(w.n, g.i, g.j); break;
      case GenKind::AffineR: p = long_cycle(w.n); break;
      case GenKind::MirabolicT: throw std::logic_error("t generator outside MC");
    }
    acc = compose(acc, p);
  }
  return acc;
}

nlohmann::json to_json(const std::vector<Relation>& rels) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rels) out.push_back({{"family", r.family}, {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}});
  return out;
}

}  // namespace cactus
