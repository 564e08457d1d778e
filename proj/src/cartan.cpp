#include "cactus/cartan.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cactus {

Weight weight_add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
  Weight r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
  Weight r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

Weight weight_neg(const Weight& a) {
  Weight r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = -a[k];
  return r;
}

std::string weight_to_string(const Weight& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ',';
    os << w[k];
  }
  return os.str();
}

namespace {

struct Fraction {
  long long num = 0;
  long long den = 1;
};

Fraction reduce(long long n, long long d) {
  if (d < 0) { n = -n; d = -d; }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  return {n / g, d / g};
}

// Finds d with d_i a_ij = d_j a_ji and checks the symmetrized matrix is
// positive definite via fraction-free leading principal minors.
void check_finite_type(const std::vector<std::vector<int>>& a) {
  const std::size_t r = a.size();
  std::vector<Fraction> d(r);
  std::vector<bool> seen(r, false);
  for (std::size_t root = 0; root < r; ++root) {
    if (seen[root]) continue;
    d[root] = {1, 1};
    seen[root] = true;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j || a[i][j] == 0) continue;
        // d_j = d_i a_ij / a_ji
        Fraction dj = reduce(d[i].num * a[i][j], d[i].den * a[j][i]);
        if (!seen[j]) {
          d[j] = dj;
          seen[j] = true;
          stack.push_back(j);
        } else if (d[j].num * dj.den != dj.num * d[j].den) {
          throw std::invalid_argument("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  long long lcm = 1;
  for (const auto& f : d) lcm = std::lcm(lcm, f.den);
  std::vector<std::vector<long long>> m(r, std::vector<long long>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m[i][j] = d[i].num * (lcm / d[i].den) * a[i][j];
  // Bareiss elimination; pivots are the leading principal minors.
  long long prev = 1;
  for (std::size_t k = 0; k < r; ++k) {
    if (m[k][k] <= 0) throw std::invalid_argument("Cartan matrix is not of finite type");
    for (std::size_t i = k + 1; i < r; ++i)
      for (std::size_t j = k + 1; j < r; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
}

}  // namespace

CartanData::CartanData(CartanType t, std::vector<std::vector<int>> m) : type_(t), matrix_(std::move(m)) {
  const std::size_t r = matrix_.size();
  if (r == 0) throw std::invalid_argument("Cartan matrix must have rank >= 1");
  for (const auto& row : matrix_)
    if (row.size() != r) throw std::invalid_argument("Cartan matrix must be square");
  for (std::size_t i = 0; i < r; ++i) {
    if (matrix_[i][i] != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (matrix_[i][j] > 0) throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
      if ((matrix_[i][j] == 0) != (matrix_[j][i] == 0))
        throw std::invalid_argument("Cartan matrix must satisfy a_ij = 0 <=> a_ji = 0");
    }
  }
  check_finite_type(matrix_);
  compute_longest();
}

CartanData CartanData::type_a(int rank) {
  if (rank < 1) throw std::invalid_argument("type A rank must be >= 1");
  std::vector<std::vector<int>> m(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) {
    m[i][i] = 2;
    if (i + 1 < rank) m[i][i + 1] = m[i + 1][i] = -1;
  }
  return CartanData(CartanType::A, std::move(m));
}

CartanData CartanData::from_matrix(std::vector<std::vector<int>> matrix) {
  return CartanData(CartanType::Explicit, std::move(matrix));
}

int CartanData::check_node(int i) const {
  if (i < 1 || i > rank()) throw std::out_of_range("node index " + std::to_string(i) + " out of range");
  return i;
}

void CartanData::check_weight(const Weight& w) const {
  if (static_cast<int>(w.size()) != rank())
    throw std::invalid_argument("weight length " + std::to_string(w.size()) + " does not match rank " +
                                std::to_string(rank()));
}

int CartanData::entry(int i, int j) const {
  return matrix_[static_cast<std::size_t>(check_node(i) - 1)][static_cast<std::size_t>(check_node(j) - 1)];
}

Weight CartanData::fundamental(int i) const {
  Weight w = zero();
  w[static_cast<std::size_t>(check_node(i) - 1)] = 1;
  return w;
}

Weight CartanData::simple_root(int i) const {
  check_node(i);
  Weight w = zero();
  for (int k = 1; k <= rank(); ++k) w[static_cast<std::size_t>(k - 1)] = entry(k, i);
  return w;
}

Weight CartanData::reflect(const Weight& w, int i) const {
  check_weight(w);
  const int c = w[static_cast<std::size_t>(check_node(i) - 1)];
  Weight r = w;
  for (int k = 1; k <= rank(); ++k) r[static_cast<std::size_t>(k - 1)] -= c * entry(k, i);
  return r;
}

void CartanData::compute_longest() {
  // Descend from rho to -rho; the recorded reflections form a reduced word for w0.
  Weight w(static_cast<std::size_t>(rank()), 1);
  w0_word_.clear();
  for (;;) {
    int pick = 0;
    for (int i = 1; i <= rank(); ++i)
      if (w[static_cast<std::size_t>(i - 1)] > 0) {
        pick = i;
        break;
      }
    if (pick == 0) break;
    w = reflect(w, pick);
    w0_word_.push_back(pick);
  }
  star_.assign(static_cast<std::size_t>(rank()), 0);
  for (int i = 1; i <= rank(); ++i) {
    Weight a = simple_root(i);
    for (int s : w0_word_) a = reflect(a, s);
    Weight target = weight_neg(a);
    for (int j = 1; j <= rank(); ++j)
      if (simple_root(j) == target) star_[static_cast<std::size_t>(i - 1)] = j;
    if (star_[static_cast<std::size_t>(i - 1)] == 0) throw std::logic_error("w0 does not permute simple roots");
  }
}

std::string CartanData::name() const {
  if (type_ == CartanType::A) return "A" + std::to_string(rank());
  return "explicit(rank " + std::to_string(rank()) + ")";
}

int pairing(const CartanData& cartan, const Weight& w, int i) {
  cartan.check_weight(w);
  return w[static_cast<std::size_t>(cartan.check_node(i) - 1)];
}

bool is_dominant(const CartanData& cartan, const Weight& w) {
  cartan.check_weight(w);
  for (int c : w)
    if (c < 0) return false;
  return true;
}

CartanData parse_cartan_type(const std::string& text) {
  if (text.size() >= 2 && (text[0] == 'A' || text[0] == 'a')) {
    std::size_t used = 0;
    int r = std::stoi(text.substr(1), &used);
    if (used + 1 == text.size()) return CartanData::type_a(r);
  }
  throw std::invalid_argument("unsupported Cartan type '" + text + "' (expected A<rank>)");
}

nlohmann::json to_json(const CartanData& c) {
  if (c.type() == CartanType::A) return {{"type", "A"}, {"rank", c.rank()}};
  return {{"type", "explicit"}, {"matrix", c.matrix()}};
}

CartanData cartan_from_json(const nlohmann::json& j) {
  const std::string t = j.at("type").get<std::string>();
  if (t == "A") return CartanData::type_a(j.at("rank").get<int>());
  if (t == "explicit") return CartanData::from_matrix(j.at("matrix").get<std::vector<std::vector<int>>>());
  throw std::invalid_argument("unknown Cartan type '" + t + "'");
}

}  // namespace cactus
