#include "cactus/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cactus {

Partition Tableau::shape() const {
  Partition p;
  for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
  return p;
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  return n;
}

bool is_partition(const Partition& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] <= 0 || (k > 0 && p[k] > p[k - 1])) return false;
  return true;
}

bool is_semistandard(const Tableau& t) {
  if (!is_partition(t.shape())) return false;
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      const int v = t.rows[r][c];
      if (v < 1) return false;
      if (c > 0 && t.rows[r][c - 1] > v) return false;
      if (r > 0 && t.rows[r - 1][c] >= v) return false;
    }
  return true;
}

bool is_standard(const Tableau& t) {
  if (!is_semistandard(t)) return false;
  std::vector<int> all;
  for (const auto& r : t.rows) all.insert(all.end(), r.begin(), r.end());
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k] != static_cast<int>(k) + 1) return false;
  return true;
}

std::string to_string(const Tableau& t) { return to_json(t).dump(); }

nlohmann::json to_json(const Tableau& t) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : t.rows) j.push_back(r);
  return j;
}

Tableau tableau_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("tableau JSON must be a list of rows");
  Tableau t;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty()) throw std::invalid_argument("tableau rows must be non-empty lists");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw std::invalid_argument("tableau entries must be integers");
      r.push_back(v.get<int>());
    }
    t.rows.push_back(std::move(r));
  }
  if (!is_semistandard(t)) throw std::invalid_argument("not a semistandard tableau");
  return t;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Tableau> semistandard_tableaux(const Partition& shape, int max_entry) {
  if (!is_partition(shape)) throw std::invalid_argument("not a partition");
  std::vector<Tableau> out;
  Tableau t;
  for (int len : shape) t.rows.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.push_back(t);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      t.rows[r][c] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  if (!is_partition(shape)) throw std::invalid_argument("not a partition");
  std::vector<Tableau> out;
  int n = 0;
  for (int p : shape) n += p;
  Tableau t;
  for (int len : shape) t.rows.emplace_back(static_cast<std::size_t>(len), 0);
  // Fill 1..n; a cell is addable when its left and upper neighbours are filled.
  std::vector<int> filled(shape.size(), 0);
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.push_back(t);
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      if (filled[r] == shape[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      t.rows[r][filled[r]] = next;
      ++filled[r];
      self(self, next + 1);
      --filled[r];
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

RskPair rsk(const Permutation& w) {
  if (!is_permutation(w)) throw std::invalid_argument("rsk: input is not a permutation");
  RskPair out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    int x = w[k];
    std::size_t r = 0;
    for (;; ++r) {
      if (r == out.P.rows.size()) {
        out.P.rows.push_back({x});
        out.Q.rows.push_back({static_cast<int>(k) + 1});
        break;
      }
      auto& row = out.P.rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        out.Q.rows[r].push_back(static_cast<int>(k) + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  return out;
}

Permutation inverse_rsk(const Tableau& P, const Tableau& Q) {
  if (!is_standard(P) || !is_standard(Q) || P.shape() != Q.shape())
    throw std::invalid_argument("inverse_rsk: need two standard tableaux of the same shape");
  Tableau p = P, q = Q;
  const int n = P.size();
  Permutation w(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    std::size_t r = 0;
    while (q.rows[r].back() != k) ++r;
    q.rows[r].pop_back();
    int x = p.rows[r].back();
    p.rows[r].pop_back();
    while (r > 0) {
      --r;
      auto& row = p.rows[r];
      auto it = std::lower_bound(row.begin(), row.end(), x);  // largest entry < x sits just before
      --it;
      std::swap(x, *it);
    }
    if (q.rows.back().empty()) {
      q.rows.pop_back();
      p.rows.pop_back();
    }
    w[k - 1] = x;
  }
  return w;
}

namespace {

void require_standard(const Tableau& t, const char* who) {
  if (!is_standard(t)) throw std::invalid_argument(std::string(who) + ": tableau is not standard");
}

// Removes the top-left entry and slides the hole out; returns the vacated cell.
std::pair<int, int> delete_and_slide(std::vector<std::vector<int>>& rows) {
  int r = 0, c = 0;
  for (;;) {
    const bool right = c + 1 < static_cast<int>(rows[r].size());
    const bool below = r + 1 < static_cast<int>(rows.size()) && c < static_cast<int>(rows[r + 1].size());
    if (!right && !below) break;
    if (right && (!below || rows[r][c + 1] < rows[r + 1][c])) {
      rows[r][c] = rows[r][c + 1];
      ++c;
    } else {
      rows[r][c] = rows[r + 1][c];
      ++r;
    }
  }
  rows[r].pop_back();
  if (rows[r].empty()) rows.pop_back();
  return {r, c};
}

}  // namespace

Tableau evacuation(const Tableau& t) {
  require_standard(t, "evacuation");
  const int n = t.size();
  Tableau out = t;
  std::vector<std::vector<int>> cur = t.rows;
  for (int k = 1; k <= n; ++k) {
    auto [r, c] = delete_and_slide(cur);
    out.rows[r][c] = n + 1 - k;
    for (auto& row : cur)
      for (int& v : row) --v;
  }
  return out;
}

Tableau partial_evacuation(int j, const Tableau& t) {
  require_standard(t, "partial_evacuation");
  if (j < 1 || j > t.size()) throw std::invalid_argument("partial_evacuation: j out of range");
  Tableau sub;
  for (const auto& row : t.rows) {
    std::vector<int> r;
    for (int v : row)
      if (v <= j) r.push_back(v);
    if (!r.empty()) sub.rows.push_back(std::move(r));
  }
  Tableau ev = evacuation(sub);
  Tableau out = t;
  for (std::size_t r = 0; r < ev.rows.size(); ++r)
    for (std::size_t c = 0; c < ev.rows[r].size(); ++c) out.rows[r][c] = ev.rows[r][c];
  return out;
}

Tableau bk_cactus_act(int i, int j, const Tableau& t) {
  require_standard(t, "bk_cactus_act");
  if (!(1 <= i && i < j && j <= t.size())) throw std::invalid_argument("bk_cactus_act: need 1 <= i < j <= n");
  return partial_evacuation(j, partial_evacuation(j - i + 1, partial_evacuation(j, t)));
}

Tableau bender_knuth(int i, const Tableau& t) {
  if (!is_semistandard(t)) throw std::invalid_argument("bender_knuth: tableau is not semistandard");
  if (i < 1) throw std::invalid_argument("bender_knuth: need i >= 1");
  Tableau out = t;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    std::vector<std::size_t> free_cells;
    int count_i = 0;
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      const int v = t.rows[r][c];
      if (v == i) {
        const bool locked = r + 1 < t.rows.size() && c < t.rows[r + 1].size() && t.rows[r + 1][c] == i + 1;
        if (!locked) {
          free_cells.push_back(c);
          ++count_i;
        }
      } else if (v == i + 1) {
        const bool locked = r > 0 && t.rows[r - 1][c] == i;
        if (!locked) free_cells.push_back(c);
      }
    }
    const int count_next = static_cast<int>(free_cells.size()) - count_i;
    for (std::size_t k = 0; k < free_cells.size(); ++k)
      out.rows[r][free_cells[k]] = static_cast<int>(k) < count_next ? i : i + 1;
  }
  return out;
}

PermutationGroup bk_image(const Partition& shape) {
  const auto tabs = standard_tableaux(shape);
  int n = 0;
  for (int p : shape) n += p;
  std::vector<std::vector<int>> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> img(tabs.size());
      for (std::size_t a = 0; a < tabs.size(); ++a) {
        Tableau b = bk_cactus_act(i, j, tabs[a]);
        img[a] = static_cast<int>(std::lower_bound(tabs.begin(), tabs.end(), b) - tabs.begin());
      }
      gens.push_back(std::move(img));
    }
  return PermutationGroup(static_cast<int>(tabs.size()), std::move(gens));
}

BraidSearch bender_knuth_braid_search(int max_cells, int max_entry) {
  BraidSearch out;
  for (int cells = 1; cells <= max_cells; ++cells)
    for (const auto& shape : partitions(cells)) {
      if (static_cast<int>(shape.size()) > max_entry) continue;
      for (const auto& t : semistandard_tableaux(shape, max_entry)) {
        ++out.tableaux;
        for (int i = 1; i < max_entry; ++i)
          if (!(bender_knuth(i, bender_knuth(i, t)) == t)) out.involutions_hold = false;
        if (max_entry < 3 || out.witness) continue;
        Tableau a = bender_knuth(1, bender_knuth(2, bender_knuth(1, t)));
        Tableau b = bender_knuth(2, bender_knuth(1, bender_knuth(2, t)));
        if (!(a == b)) out.witness = BraidWitness{t, a, b};
      }
    }
  return out;
}

CrosscheckReport rsk_crosscheck(int n) {
  if (n < 2) throw std::invalid_argument("rsk_crosscheck: need n >= 2");
  CrosscheckReport rep;
  rep.n = n;
  const CartanData cartan = CartanData::type_a(n - 1);
  ActionContext ctx(cartan, {cartan.fundamental(1)});
  const CrystalGraph& b = ctx.crystal(0);
  std::vector<int> letter(static_cast<std::size_t>(b.size()), 0), element(static_cast<std::size_t>(n) + 1, 0);
  letter[0] = 1;
  for (int m = 1; m < n; ++m) {
    element[m + 1] = b.f(m, element[m]);
    letter[element[m + 1]] = m + 1;
  }
  auto to_perm = [&](const LabeledPoint& p) {
    Permutation pi(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) pi[letter[p.entries[k]] - 1] = k + 1;
    return pi;
  };
  auto note = [&](const std::string& s) {
    if (rep.mismatches.size() < 10) rep.mismatches.push_back(s);
  };
  const auto perms = all_permutations(n);
  for (const auto& pi : perms) {
    LabeledPoint p{std::vector<int>(static_cast<std::size_t>(n), 0), std::vector<int>(static_cast<std::size_t>(n))};
    for (int a = 1; a <= n; ++a) p.entries[pi[a - 1] - 1] = element[a];
    ++rep.points;
    for (const auto& w : perms) {
      const Permutation got = to_perm(act(ctx, GroupKind::vC, Generator::w(w), p));
      if (got != compose(w, pi)) {
        rep.left_multiplication = false;
        note("w" + permutation_to_string(w) + " on " + permutation_to_string(pi) + " gave " + permutation_to_string(got));
      }
    }
    const RskPair before = rsk(pi);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const RskPair after = rsk(to_perm(act(ctx, GroupKind::C, Generator::s(i, j), p)));
        if (!(after.Q == before.Q && after.P == bk_cactus_act(i, j, before.P))) rep.acts_on_P = false;
        if (!(after.P == before.P && after.Q == bk_cactus_act(i, j, before.Q))) rep.acts_on_Q = false;
      }
  }
  rep.factor = rep.acts_on_P ? (rep.acts_on_Q ? "both" : "P") : (rep.acts_on_Q ? "Q" : "none");
  return rep;
}

nlohmann::json to_json(const CrosscheckReport& r) {
  return {{"n", r.n},
          {"points", r.points},
          {"left_multiplication", r.left_multiplication},
          {"acts_on_P", r.acts_on_P},
          {"acts_on_Q", r.acts_on_Q},
          {"factor", r.factor},
          {"mismatches", r.mismatches},
          {"passed", r.passed()}};
}

}  // namespace cactus
