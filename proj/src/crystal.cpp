#include "cactus/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cactus {

namespace {

std::string describe(int axiom, int b, int i, const std::string& detail) {
  std::ostringstream os;
  os << "crystal axiom (" << axiom << ") violated at element " << b << ", node " << i << ": " << detail;
  return os.str();
}

}  // namespace

CrystalGraph::CrystalGraph(CartanData cartan, std::vector<Weight> wt, std::vector<std::vector<int>> e,
                           std::vector<std::vector<int>> f, std::vector<int> factor_sizes,
                           std::vector<std::string> labels)
    : cartan_(std::move(cartan)),
      wt_(std::move(wt)),
      e_(std::move(e)),
      f_(std::move(f)),
      factor_sizes_(std::move(factor_sizes)),
      labels_(std::move(labels)) {
  const int n = size();
  const int r = rank();
  if (static_cast<int>(e_.size()) != r || static_cast<int>(f_.size()) != r)
    throw std::invalid_argument("crystal operator tables must have one row per node");
  for (int i = 0; i < r; ++i)
    if (static_cast<int>(e_[i].size()) != n || static_cast<int>(f_[i].size()) != n)
      throw std::invalid_argument("crystal operator table has wrong length");
  for (const auto& w : wt_) cartan_.check_weight(w);
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("label count does not match element count");
  if (factor_sizes_.empty()) factor_sizes_ = {n};
  {
    long long prod = 1;
    for (int s : factor_sizes_) prod *= s;
    if (prod != n) throw std::invalid_argument("factor sizes do not multiply to the element count");
  }

  for (int i = 1; i <= r; ++i) {
    const Weight alpha = cartan_.simple_root(i);
    for (int b = 0; b < n; ++b) {
      int eb = this->e(i, b), fb = this->f(i, b);
      if ((eb != kAbsent && (eb < 0 || eb >= n)) || (fb != kAbsent && (fb < 0 || fb >= n)))
        throw std::invalid_argument("crystal operator target out of range at element " + std::to_string(b));
      if (eb != kAbsent && wt_[eb] != weight_add(wt_[b], alpha))
        throw CrystalAxiomError(1, b, i, describe(1, b, i, "wt(e_i b) != wt(b) + alpha_i"));
      if (fb != kAbsent && wt_[fb] != weight_sub(wt_[b], alpha))
        throw CrystalAxiomError(2, b, i, describe(2, b, i, "wt(f_i b) != wt(b) - alpha_i"));
      if (eb != kAbsent && this->f(i, eb) != b)
        throw CrystalAxiomError(3, b, i, describe(3, b, i, "f_i(e_i b) != b"));
      if (fb != kAbsent && this->e(i, fb) != b)
        throw CrystalAxiomError(4, b, i, describe(4, b, i, "e_i(f_i b) != b"));
    }
  }

  // Weights strictly move along strings, so the axioms above make strings finite.
  eps_.assign(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(n), 0));
  phi_ = eps_;
  for (int i = 1; i <= r; ++i)
    for (int b = 0; b < n; ++b) {
      if (this->e(i, b) == kAbsent) {
        // b starts an i-string; walk it once.
        std::vector<int> chain{b};
        while (this->f(i, chain.back()) != kAbsent) {
          chain.push_back(this->f(i, chain.back()));
          if (static_cast<int>(chain.size()) > n)
            throw CrystalAxiomError(2, b, i, describe(2, b, i, "infinite f_i-string"));
        }
        const int len = static_cast<int>(chain.size());
        for (int k = 0; k < len; ++k) {
          eps_[i - 1][chain[k]] = k;
          phi_[i - 1][chain[k]] = len - 1 - k;
        }
      }
    }
  // Every element lies on a string starting at an e-killed element, unless strings are cyclic.
  for (int i = 1; i <= r; ++i)
    for (int b = 0; b < n; ++b) {
      int top = b;
      int steps = 0;
      while (this->e(i, top) != kAbsent) {
        top = this->e(i, top);
        if (++steps > n) throw CrystalAxiomError(1, b, i, describe(1, b, i, "infinite e_i-string"));
      }
    }
}

std::vector<int> CrystalGraph::decode(int b) const {
  std::vector<int> out(factor_sizes_.size());
  for (std::size_t k = factor_sizes_.size(); k-- > 0;) {
    out[k] = b % factor_sizes_[k];
    b /= factor_sizes_[k];
  }
  return out;
}

int CrystalGraph::encode(const std::vector<int>& entries) const {
  if (entries.size() != factor_sizes_.size()) throw std::invalid_argument("entry count does not match factors");
  int b = 0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k] < 0 || entries[k] >= factor_sizes_[k]) throw std::out_of_range("factor entry out of range");
    b = b * factor_sizes_[k] + entries[k];
  }
  return b;
}

bool CrystalGraph::highest(int b) const {
  for (int i = 1; i <= rank(); ++i)
    if (e(i, b) != kAbsent) return false;
  return true;
}

bool CrystalGraph::lowest(int b) const {
  for (int i = 1; i <= rank(); ++i)
    if (f(i, b) != kAbsent) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Type A irreducible crystals on semistandard tableaux

std::vector<int> shape_of_weight(const Weight& lambda) {
  std::vector<int> rows;
  for (std::size_t m = 0; m < lambda.size(); ++m) {
    int len = 0;
    for (std::size_t k = m; k < lambda.size(); ++k) len += lambda[k];
    if (len > 0) rows.push_back(len);
  }
  return rows;
}

namespace {

using Rows = std::vector<std::vector<int>>;

// Reading word: rows bottom to top, each left to right.
std::vector<std::pair<int, int>> reading_positions(const Rows& t) {
  std::vector<std::pair<int, int>> pos;
  for (std::size_t r = t.size(); r-- > 0;)
    for (std::size_t c = 0; c < t[r].size(); ++c) pos.emplace_back(static_cast<int>(r), static_cast<int>(c));
  return pos;
}

// Signature rule for the tensor convention used throughout: letter i is '+',
// letter i+1 is '-', adjacent "-+" pairs cancel, f_i changes the rightmost
// unpaired '+', e_i the leftmost unpaired '-'.
std::optional<Rows> apply_letter_op(const Rows& t, int i, bool raise) {
  const auto pos = reading_positions(t);
  std::vector<std::size_t> minus_stack;
  std::vector<std::size_t> plus_free;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    int letter = t[pos[k].first][pos[k].second];
    if (letter == i + 1) {
      minus_stack.push_back(k);
    } else if (letter == i) {
      if (!minus_stack.empty())
        minus_stack.pop_back();
      else
        plus_free.push_back(k);
    }
  }
  Rows out = t;
  if (raise) {
    if (minus_stack.empty()) return std::nullopt;
    auto [r, c] = pos[minus_stack.front()];
    out[r][c] = i;
  } else {
    if (plus_free.empty()) return std::nullopt;
    auto [r, c] = pos[plus_free.back()];
    out[r][c] = i + 1;
  }
  return out;
}

std::string rows_label(const Rows& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      if (c) os << ',';
      os << t[r][c];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace

CrystalGraph build_irreducible(const CartanData& cartan, const Weight& lambda) {
  cartan.check_weight(lambda);
  if (!is_dominant(cartan, lambda)) throw std::invalid_argument("weight " + weight_to_string(lambda) + " is not dominant");
  if (cartan.type() != CartanType::A)
    throw std::invalid_argument("build_irreducible supports type A only; use import_graph for other types");
  const int r = cartan.rank();
  const auto shape = shape_of_weight(lambda);
  Rows top;
  for (std::size_t m = 0; m < shape.size(); ++m) top.emplace_back(static_cast<std::size_t>(shape[m]), static_cast<int>(m) + 1);

  std::map<Rows, int> ids;
  std::vector<Rows> elems;
  ids[top] = 0;
  elems.push_back(top);
  std::vector<std::vector<int>> fmap(static_cast<std::size_t>(r));
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (int i = 1; i <= r; ++i) {
      auto next = apply_letter_op(elems[head], i, false);
      int target = kAbsent;
      if (next) {
        auto it = ids.find(*next);
        if (it == ids.end()) {
          target = static_cast<int>(elems.size());
          ids.emplace(*next, target);
          elems.push_back(*next);
        } else {
          target = it->second;
        }
      }
      fmap[i - 1].resize(elems.size(), kAbsent);
      fmap[i - 1][head] = target;
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> emap(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(n), kAbsent));
  for (auto& row : fmap) row.resize(static_cast<std::size_t>(n), kAbsent);
  for (int i = 1; i <= r; ++i)
    for (int b = 0; b < n; ++b) {
      auto up = apply_letter_op(elems[b], i, true);
      if (up) emap[i - 1][b] = ids.at(*up);
    }
  std::vector<Weight> wt(static_cast<std::size_t>(n), cartan.zero());
  std::vector<std::string> labels;
  for (int b = 0; b < n; ++b) {
    std::vector<int> content(static_cast<std::size_t>(r) + 1, 0);
    for (const auto& row : elems[b])
      for (int x : row) ++content[static_cast<std::size_t>(x - 1)];
    for (int k = 0; k < r; ++k) wt[b][k] = content[k] - content[k + 1];
    labels.push_back(rows_label(elems[b]));
  }
  return CrystalGraph(cartan, std::move(wt), std::move(emap), std::move(fmap), {}, std::move(labels));
}

// ---------------------------------------------------------------------------
// Import / export

CrystalGraph import_graph(const nlohmann::json& j) {
  CartanData cartan = cartan_from_json(j.at("cartan"));
  const auto& elements = j.at("elements");
  const int n = static_cast<int>(elements.size());
  std::vector<Weight> wt(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& el : elements) {
    int id = el.at("id").get<int>();
    if (id < 0 || id >= n) throw std::invalid_argument("element id " + std::to_string(id) + " out of range");
    if (seen[id]) throw std::invalid_argument("duplicate element id " + std::to_string(id));
    seen[id] = true;
    wt[id] = el.at("wt").get<Weight>();
  }
  const int r = cartan.rank();
  std::vector<std::vector<int>> e(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(n), kAbsent));
  auto f = e;
  if (j.contains("edges"))
    for (const auto& ed : j.at("edges")) {
      int i = cartan.check_node(ed.at("i").get<int>());
      int from = ed.at("from").get<int>(), to = ed.at("to").get<int>();
      if (from < 0 || from >= n || to < 0 || to >= n) throw std::invalid_argument("edge endpoint out of range");
      f[i - 1][from] = to;
      e[i - 1][to] = from;
    }
  return CrystalGraph(std::move(cartan), std::move(wt), std::move(e), std::move(f));
}

nlohmann::json export_graph(const CrystalGraph& b) {
  nlohmann::json j;
  j["cartan"] = to_json(b.cartan());
  j["elements"] = nlohmann::json::array();
  for (int x = 0; x < b.size(); ++x) {
    nlohmann::json el = {{"id", x}, {"wt", b.wt(x)}};
    if (b.has_labels()) el["label"] = b.label(x);
    j["elements"].push_back(el);
  }
  j["edges"] = nlohmann::json::array();
  for (int i = 1; i <= b.rank(); ++i)
    for (int x = 0; x < b.size(); ++x)
      if (b.f(i, x) != kAbsent) j["edges"].push_back({{"i", i}, {"from", x}, {"to", b.f(i, x)}});
  return j;
}

std::string export_dot(const CrystalGraph& b) {
  static const char* colours[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (int x = 0; x < b.size(); ++x)
    os << "  n" << x << " [label=\"" << x << ':' << weight_to_string(b.wt(x)) << "\"];\n";
  for (int i = 1; i <= b.rank(); ++i)
    for (int x = 0; x < b.size(); ++x)
      if (b.f(i, x) != kAbsent)
        os << "  n" << x << " -> n" << b.f(i, x) << " [label=\"f_" << i << "\", color=" << colours[(i - 1) % 8]
           << "];\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Tensor products and unions

CrystalGraph tensor(const CrystalGraph& b1, const CrystalGraph& b2) {
  if (b1.cartan() != b2.cartan()) throw std::invalid_argument("tensor: mismatched Cartan data");
  const int n1 = b1.size(), n2 = b2.size(), n = n1 * n2, r = b1.rank();
  std::vector<Weight> wt(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> e(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(n), kAbsent));
  auto f = e;
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n2; ++y) {
      const int id = x * n2 + y;
      wt[id] = weight_add(b1.wt(x), b2.wt(y));
      for (int i = 1; i <= r; ++i) {
        if (b1.eps(i, x) > b2.phi(i, y)) {
          int ex = b1.e(i, x);
          e[i - 1][id] = ex == kAbsent ? kAbsent : ex * n2 + y;
        } else {
          int ey = b2.e(i, y);
          e[i - 1][id] = ey == kAbsent ? kAbsent : x * n2 + ey;
        }
        if (b1.eps(i, x) >= b2.phi(i, y)) {
          int fx = b1.f(i, x);
          f[i - 1][id] = fx == kAbsent ? kAbsent : fx * n2 + y;
        } else {
          int fy = b2.f(i, y);
          f[i - 1][id] = fy == kAbsent ? kAbsent : x * n2 + fy;
        }
      }
    }
  std::vector<int> factors = b1.factor_sizes();
  factors.insert(factors.end(), b2.factor_sizes().begin(), b2.factor_sizes().end());
  return CrystalGraph(b1.cartan(), std::move(wt), std::move(e), std::move(f), std::move(factors));
}

CrystalGraph tensor_all(const std::vector<const CrystalGraph*>& factors) {
  if (factors.empty()) throw std::invalid_argument("tensor_all: no factors");
  CrystalGraph acc = *factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) acc = tensor(acc, *factors[k]);
  return acc;
}

CrystalGraph disjoint_union(const CrystalGraph& b1, const CrystalGraph& b2) {
  if (b1.cartan() != b2.cartan()) throw std::invalid_argument("disjoint_union: mismatched Cartan data");
  const int n1 = b1.size(), r = b1.rank();
  std::vector<Weight> wt;
  std::vector<std::vector<int>> e(static_cast<std::size_t>(r)), f(static_cast<std::size_t>(r));
  for (int x = 0; x < b1.size(); ++x) wt.push_back(b1.wt(x));
  for (int x = 0; x < b2.size(); ++x) wt.push_back(b2.wt(x));
  for (int i = 1; i <= r; ++i) {
    for (int x = 0; x < b1.size(); ++x) {
      e[i - 1].push_back(b1.e(i, x));
      f[i - 1].push_back(b1.f(i, x));
    }
    for (int x = 0; x < b2.size(); ++x) {
      e[i - 1].push_back(b2.e(i, x) == kAbsent ? kAbsent : b2.e(i, x) + n1);
      f[i - 1].push_back(b2.f(i, x) == kAbsent ? kAbsent : b2.f(i, x) + n1);
    }
  }
  return CrystalGraph(b1.cartan(), std::move(wt), std::move(e), std::move(f));
}

// ---------------------------------------------------------------------------
// Components and normality

std::vector<int> component_of(const CrystalGraph& b, int b0) {
  std::vector<bool> seen(static_cast<std::size_t>(b.size()), false);
  std::vector<int> stack{b0}, out;
  seen[b0] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (int i = 1; i <= b.rank(); ++i)
      for (int y : {b.e(i, x), b.f(i, x)})
        if (y != kAbsent && !seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Component> components(const CrystalGraph& b) {
  std::vector<Component> out;
  std::vector<bool> done(static_cast<std::size_t>(b.size()), false);
  for (int x = 0; x < b.size(); ++x) {
    if (done[x]) continue;
    Component c;
    c.elements = component_of(b, x);
    for (int y : c.elements) {
      done[y] = true;
      if (b.highest(y)) {
        if (c.highest != kAbsent)
          throw std::domain_error("component containing element " + std::to_string(x) +
                                  " has more than one highest element");
        c.highest = y;
      }
    }
    if (c.highest == kAbsent)
      throw std::domain_error("component containing element " + std::to_string(x) + " has no highest element");
    c.highest_weight = b.wt(c.highest);
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<std::vector<int>> match_components(const CrystalGraph& a, int from_top, const CrystalGraph& c,
                                                 int to_top) {
  if (a.cartan() != c.cartan()) return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(a.size()), kAbsent);
  std::vector<int> inverse(static_cast<std::size_t>(c.size()), kAbsent);
  std::deque<int> queue{from_top};
  map[from_top] = to_top;
  inverse[to_top] = from_top;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    int y = map[x];
    if (a.wt(x) != c.wt(y)) return std::nullopt;
    for (int i = 1; i <= a.rank(); ++i) {
      for (bool up : {false, true}) {
        int x2 = up ? a.e(i, x) : a.f(i, x);
        int y2 = up ? c.e(i, y) : c.f(i, y);
        if ((x2 == kAbsent) != (y2 == kAbsent)) return std::nullopt;
        if (x2 == kAbsent) continue;
        if (map[x2] == kAbsent && inverse[y2] == kAbsent) {
          map[x2] = y2;
          inverse[y2] = x2;
          queue.push_back(x2);
        } else if (map[x2] != y2 || inverse[y2] != x2) {
          return std::nullopt;
        }
      }
    }
  }
  return map;
}

Normality normality(const CrystalGraph& b) {
  std::vector<Component> comps;
  try {
    comps = components(b);
  } catch (const std::domain_error&) {
    return Normality::NotNormal;
  }
  if (b.cartan().type() != CartanType::A) return Normality::Unverifiable;
  std::map<Weight, CrystalGraph> cache;
  for (const auto& comp : comps) {
    if (!is_dominant(b.cartan(), comp.highest_weight)) return Normality::NotNormal;
    auto it = cache.find(comp.highest_weight);
    if (it == cache.end()) it = cache.emplace(comp.highest_weight, build_irreducible(b.cartan(), comp.highest_weight)).first;
    const CrystalGraph& ref = it->second;
    if (static_cast<int>(comp.elements.size()) != ref.size()) return Normality::NotNormal;
    auto m = match_components(b, comp.highest, ref, 0);
    if (!m) return Normality::NotNormal;
    for (int y : comp.elements)
      if ((*m)[y] == kAbsent) return Normality::NotNormal;
  }
  return Normality::Normal;
}

bool is_normal(const CrystalGraph& b) {
  Normality n = normality(b);
  if (n == Normality::Unverifiable)
    throw std::domain_error("normality unverifiable: no reference B(lambda) for " + b.cartan().name());
  return n == Normality::Normal;
}

std::vector<int> multiplicity_set(const CrystalGraph& product, const Weight& mu) {
  std::vector<int> out;
  for (int x = 0; x < product.size(); ++x)
    if (product.highest(x) && product.wt(x) == mu) out.push_back(x);
  return out;
}

std::vector<int> multiplicity_set(const CartanData& cartan, const Weight& lambda1, const Weight& lambda2,
                                  const Weight& mu) {
  cartan.check_weight(mu);
  CrystalGraph b1 = build_irreducible(cartan, lambda1);
  CrystalGraph b2 = build_irreducible(cartan, lambda2);
  return multiplicity_set(tensor(b1, b2), mu);
}

}  // namespace cactus
