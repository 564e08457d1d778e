#include "cactus/actions.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cactus {

std::string to_string(const LabeledPoint& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < p.entries.size(); ++k) os << (k ? "," : "") << 'c' << p.colours[k] << ':' << p.entries[k];
  os << ')';
  return os.str();
}

ActionContext::ActionContext(CartanData cartan, std::vector<Weight> family)
    : cartan_(std::move(cartan)), family_(std::move(family)) {
  if (family_.empty()) throw std::invalid_argument("action context needs at least one colour");
  for (std::size_t a = 0; a < family_.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b)
      if (family_[a] == family_[b]) throw std::invalid_argument("colour family has a repeated weight");
    crystals_.push_back(std::make_shared<const CrystalGraph>(build_irreducible(cartan_, family_[a])));
  }
}

int ActionContext::colour_of(const Weight& w) const {
  for (std::size_t a = 0; a < family_.size(); ++a)
    if (family_[a] == w) return static_cast<int>(a);
  throw std::invalid_argument("weight " + weight_to_string(w) + " is not in the colour family");
}

const std::vector<int>& ActionContext::reversal(const std::vector<int>& colours) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = reversals_.find(colours);
    if (it != reversals_.end()) return *it->second;
  }
  std::vector<const CrystalGraph*> factors;
  for (int c : colours) factors.push_back(&crystal(c));
  auto map = std::make_shared<const std::vector<int>>(internal_cactus(factors).map);
  std::lock_guard<std::mutex> lock(mutex_);
  return *reversals_.emplace(colours, std::move(map)).first->second;
}

std::vector<LabeledPoint> ActionContext::points(const std::vector<int>& colours) const {
  std::vector<LabeledPoint> out;
  LabeledPoint p{colours, std::vector<int>(colours.size(), 0)};
  for (;;) {
    out.push_back(p);
    std::size_t k = colours.size();
    while (k > 0) {
      --k;
      if (++p.entries[k] < crystal(colours[k]).size()) break;
      p.entries[k] = 0;
      if (k == 0) return out;
    }
    if (colours.empty()) return out;
  }
}

namespace {

void check_point(const ActionContext& ctx, const LabeledPoint& p) {
  if (p.colours.size() != p.entries.size()) throw std::invalid_argument("point: colour/entry length mismatch");
  for (std::size_t k = 0; k < p.colours.size(); ++k) {
    if (p.colours[k] < 0 || p.colours[k] >= ctx.colour_count())
      throw std::invalid_argument("point: colour index out of range");
    if (p.entries[k] < 0 || p.entries[k] >= ctx.crystal(p.colours[k]).size())
      throw std::invalid_argument("point: entry out of range for its crystal");
  }
}

LabeledPoint act_virtual(const ActionContext& ctx, const Generator& g, const LabeledPoint& p) {
  const int n = static_cast<int>(p.entries.size());
  if (g.kind == GenKind::Perm) {
    if (static_cast<int>(g.perm.size()) != n) throw std::invalid_argument("permutation size does not match point");
    LabeledPoint q = p;
    for (int k = 1; k <= n; ++k) {
      q.entries[g.perm[k - 1] - 1] = p.entries[k - 1];
      q.colours[g.perm[k - 1] - 1] = p.colours[k - 1];
    }
    return q;
  }
  if (g.kind != GenKind::Cactus) throw std::logic_error("act_virtual: unexpected generator");
  if (g.j > n) throw std::invalid_argument("generator " + to_string(g) + " exceeds point length");
  std::vector<int> sub(p.colours.begin() + (g.i - 1), p.colours.begin() + g.j);
  const std::vector<int>& rev = ctx.reversal(sub);
  int id = 0;
  for (int k = g.i; k <= g.j; ++k) id = id * ctx.crystal(p.colours[k - 1]).size() + p.entries[k - 1];
  int image = rev.at(static_cast<std::size_t>(id));
  LabeledPoint q = p;
  // The codomain is B_{c_j} (x) ... (x) B_{c_i}.
  for (int k = g.i; k <= g.j; ++k) {
    const int src = g.i + g.j - k;  // colour now sitting at position k
    q.colours[k - 1] = p.colours[src - 1];
  }
  for (int k = g.j; k >= g.i; --k) {
    const int size = ctx.crystal(q.colours[k - 1]).size();
    q.entries[k - 1] = image % size;
    image /= size;
  }
  return q;
}

}  // namespace

LabeledPoint act(const ActionContext& ctx, GroupKind kind, const Generator& g, const LabeledPoint& p) {
  check_point(ctx, p);
  const int n = static_cast<int>(p.entries.size());
  GroupWord v = to_virtual(GroupWord(kind, n, {g}));
  LabeledPoint q = p;
  for (auto it = v.gens.rbegin(); it != v.gens.rend(); ++it) q = act_virtual(ctx, *it, q);
  return q;
}

LabeledPoint act_word(const ActionContext& ctx, const GroupWord& w, const LabeledPoint& p) {
  check_point(ctx, p);
  if (static_cast<int>(p.entries.size()) != w.n) throw std::invalid_argument("word rank does not match point length");
  GroupWord v = to_virtual(w);
  LabeledPoint q = p;
  for (auto it = v.gens.rbegin(); it != v.gens.rend(); ++it) q = act_virtual(ctx, *it, q);
  return q;
}

std::vector<std::vector<int>> all_colour_tuples(int colour_count, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.push_back(t);
    int k = n;
    while (k > 0) {
      --k;
      if (++t[k] < colour_count) break;
      t[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<std::vector<int>> rearrangements(std::vector<int> colours) {
  std::sort(colours.begin(), colours.end());
  std::vector<std::vector<int>> out;
  do out.push_back(colours);
  while (std::next_permutation(colours.begin(), colours.end()));
  return out;
}

std::size_t max_points() {
  if (const char* env = std::getenv("CACTUS_CRYSTAL_MAX_POINTS")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument("CACTUS_CRYSTAL_MAX_POINTS is not a number");
    }
  }
  return 1000000;
}

namespace {

// Adjacent transpositions k1, k2, ... with w = w_{k1} w_{k2} ... as functions.
std::vector<int> adjacent_word(Permutation w) {
  std::vector<int> letters;
  const int n = static_cast<int>(w.size());
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 1; a < n; ++a)
      if (w[a - 1] > w[a]) {
        std::swap(w[a - 1], w[a]);
        letters.push_back(a);
        changed = true;
      }
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

GroupWord as_mirabolic(const GroupWord& w) {
  std::vector<Generator> gens;
  for (const auto& g : w.gens) {
    if (g.kind == GenKind::Perm) {
      for (int k : adjacent_word(g.perm)) gens.push_back(Generator::t(k));
    } else {
      gens.push_back(g);
    }
  }
  return GroupWord(GroupKind::MC, w.n, std::move(gens));
}

}  // namespace

RelationReport verify_relations(const ActionContext& ctx, GroupKind kind, int n,
                                const std::vector<std::vector<int>>& tuples, int threads) {
  RelationReport report;
  report.kind = kind;
  report.n = n;
  std::vector<Relation> rels;
  if (kind == GroupKind::MC) {
    for (const auto& r : defining_relations(GroupKind::vC, n))
      rels.push_back({r.family, as_mirabolic(r.lhs), as_mirabolic(r.rhs)});
  } else {
    rels = defining_relations(kind, n);
  }
  report.relations = rels.size();

  std::size_t total = 0;
  for (const auto& t : tuples) {
    if (static_cast<int>(t.size()) != n) throw std::invalid_argument("colour tuple length differs from n");
    std::size_t count = 1;
    for (int c : t) count *= static_cast<std::size_t>(ctx.crystal(c).size());
    total += count;
  }
  if (total > max_points()) {
    report.skipped = true;
    report.points = total;
    return report;
  }
  std::vector<LabeledPoint> pts;
  for (const auto& t : tuples) {
    auto more = ctx.points(t);
    pts.insert(pts.end(), more.begin(), more.end());
  }
  report.points = pts.size();

  std::vector<std::pair<GroupWord, GroupWord>> virt;
  for (const auto& r : rels) virt.emplace_back(to_virtual(r.lhs), to_virtual(r.rhs));
  auto apply = [&](const GroupWord& v, LabeledPoint q) {
    for (auto it = v.gens.rbegin(); it != v.gens.rend(); ++it) q = act_virtual(ctx, *it, q);
    return q;
  };

  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::max(1, std::min<int>(threads, static_cast<int>(pts.size())));
  constexpr std::size_t kFailureCap = 1000;
  std::vector<std::vector<std::pair<std::size_t, RelationFailure>>> found(static_cast<std::size_t>(threads));
  auto worker = [&](int t) {
    for (std::size_t r = 0; r < rels.size(); ++r)
      for (std::size_t k = static_cast<std::size_t>(t); k < pts.size(); k += static_cast<std::size_t>(threads)) {
        LabeledPoint a = apply(virt[r].first, pts[k]);
        LabeledPoint b = apply(virt[r].second, pts[k]);
        if (!(a == b) && found[t].size() < kFailureCap)
          found[t].push_back({r, {rels[r].family, to_string(rels[r].lhs), to_string(rels[r].rhs), pts[k], a, b}});
      }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& th : pool) th.join();

  std::vector<std::pair<std::size_t, RelationFailure>> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.second.point < y.second.point;
  });
  for (auto& f : all) report.failures.push_back(std::move(f.second));
  return report;
}

namespace {

nlohmann::json point_json(const LabeledPoint& p) { return {{"colours", p.colours}, {"entries", p.entries}}; }

}  // namespace

nlohmann::json to_json(const RelationReport& r) {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"family", f.family},
                     {"lhs", f.lhs},
                     {"rhs", f.rhs},
                     {"point", point_json(f.point)},
                     {"lhs_image", point_json(f.lhs_image)},
                     {"rhs_image", point_json(f.rhs_image)}});
  return {{"kind", to_string(r.kind)}, {"n", r.n},           {"relations", r.relations}, {"points", r.points},
          {"skipped", r.skipped},      {"passed", r.passed()}, {"failures", fails}};
}

std::vector<LabeledPoint> orbit(const ActionContext& ctx, GroupKind kind, const std::vector<Generator>& gens,
                                const LabeledPoint& p) {
  std::set<LabeledPoint> seen{p};
  std::deque<LabeledPoint> queue{p};
  while (!queue.empty()) {
    LabeledPoint x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      LabeledPoint y = act(ctx, kind, g, x);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

PermutationGroup::PermutationGroup(int degree, std::vector<std::vector<int>> generators, std::size_t limit)
    : degree_(degree), generators_(std::move(generators)) {
  std::vector<int> id(static_cast<std::size_t>(degree));
  for (int a = 0; a < degree; ++a) id[a] = a;
  for (const auto& g : generators_) {
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != id) throw std::invalid_argument("generator is not a permutation of 0..degree-1");
  }
  std::set<std::vector<int>> seen{id};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    std::vector<int> x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators_) {
      std::vector<int> y(x.size());
      for (std::size_t a = 0; a < x.size(); ++a) y[a] = g[x[a]];
      if (seen.insert(y).second) {
        if (seen.size() > limit) throw std::length_error("permutation group exceeds closure limit");
        queue.push_back(std::move(y));
      }
    }
  }
  elements_.assign(seen.begin(), seen.end());
}

bool PermutationGroup::contains(const std::vector<int>& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermutationGroup::contains_alternating() const {
  // A_m is generated by the 3-cycles (0 1 k).
  for (int k = 2; k < degree_; ++k) {
    std::vector<int> c(static_cast<std::size_t>(degree_));
    for (int a = 0; a < degree_; ++a) c[a] = a;
    c[0] = 1;
    c[1] = k;
    c[k] = 0;
    if (!contains(c)) return false;
  }
  return true;
}

PermutationGroup permutation_image(const ActionContext& ctx, GroupKind kind, const std::vector<Generator>& gens,
                                   const std::vector<LabeledPoint>& subset) {
  std::vector<LabeledPoint> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("permutation_image: subset has repeated points");
  auto index = [&](const LabeledPoint& q) -> int {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), q);
    if (it == sorted.end() || !(*it == q))
      throw std::domain_error("permutation_image: subset is not invariant (image " + to_string(q) + ")");
    return static_cast<int>(it - sorted.begin());
  };
  std::vector<std::vector<int>> perms;
  for (const auto& g : gens) {
    std::vector<int> img(sorted.size());
    for (std::size_t a = 0; a < sorted.size(); ++a) img[a] = index(act(ctx, kind, g, sorted[a]));
    perms.push_back(std::move(img));
  }
  return PermutationGroup(static_cast<int>(subset.size()), std::move(perms));
}

}  // namespace cactus
