#include "cactus/commutor.hpp"

#include <deque>
#include <stdexcept>
#include <string>

namespace cactus {

bool CrystalBijection::is_bijective() const {
  if (!domain || !codomain || domain->size() != codomain->size()) return false;
  if (static_cast<int>(map.size()) != domain->size()) return false;
  std::vector<bool> hit(map.size(), false);
  for (int y : map) {
    if (y < 0 || y >= static_cast<int>(map.size()) || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

CrystalBijection CrystalBijection::inverse() const {
  CrystalBijection inv{codomain, domain, std::vector<int>(map.size(), kAbsent)};
  for (std::size_t x = 0; x < map.size(); ++x) inv.map.at(static_cast<std::size_t>(map[x])) = static_cast<int>(x);
  return inv;
}

CrystalBijection compose(const CrystalBijection& g, const CrystalBijection& f) {
  if (f.map.size() != g.map.size()) throw std::invalid_argument("compose: size mismatch");
  CrystalBijection out{f.domain, g.codomain, std::vector<int>(f.map.size())};
  for (std::size_t x = 0; x < f.map.size(); ++x) out.map[x] = g.map.at(static_cast<std::size_t>(f.map[x]));
  return out;
}

bool is_crystal_morphism(const CrystalGraph& domain, const CrystalGraph& codomain, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != domain.size()) return false;
  auto image = [&](int x) { return x == kAbsent ? kAbsent : map[x]; };
  for (int x = 0; x < domain.size(); ++x) {
    int y = map[x];
    if (y < 0 || y >= codomain.size()) return false;
    if (domain.wt(x) != codomain.wt(y)) return false;
    for (int i = 1; i <= domain.rank(); ++i) {
      if (image(domain.e(i, x)) != codomain.e(i, y)) return false;
      if (image(domain.f(i, x)) != codomain.f(i, y)) return false;
    }
  }
  return true;
}

CrystalBijection schutzenberger(const CrystalGraph& b) {
  const CartanData& cartan = b.cartan();
  std::vector<int> xi(static_cast<std::size_t>(b.size()), kAbsent);
  for (const Component& comp : components(b)) {
    int lowest = kAbsent;
    for (int x : comp.elements)
      if (b.lowest(x)) {
        if (lowest != kAbsent)
          throw std::domain_error("schutzenberger: component of element " + std::to_string(comp.highest) +
                                  " has several lowest elements (not normal)");
        lowest = x;
      }
    if (lowest == kAbsent) throw std::domain_error("schutzenberger: component without lowest element");
    xi[comp.highest] = lowest;
    std::deque<int> queue{comp.highest};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int i = 1; i <= b.rank(); ++i) {
        int fx = b.f(i, x);
        if (fx == kAbsent) continue;
        int target = b.e(cartan.star(i), xi[x]);
        if (target == kAbsent)
          throw std::domain_error("schutzenberger: recursion inconsistency at element " + std::to_string(fx) +
                                  " (e_{i*} undefined)");
        if (xi[fx] == kAbsent) {
          xi[fx] = target;
          queue.push_back(fx);
        } else if (xi[fx] != target) {
          throw std::domain_error("schutzenberger: recursion inconsistency at element " + std::to_string(fx));
        }
      }
    }
  }
  for (int x = 0; x < b.size(); ++x) {
    if (xi[x] == kAbsent) throw std::domain_error("schutzenberger: element " + std::to_string(x) + " unreached");
    if (xi[xi[x]] != x) throw std::domain_error("schutzenberger: not an involution at " + std::to_string(x));
    for (int i = 1; i <= b.rank(); ++i)
      if (pairing(cartan, b.wt(xi[x]), i) != -pairing(cartan, b.wt(x), cartan.star(i)))
        throw std::domain_error("schutzenberger: weight rule fails at element " + std::to_string(x));
  }
  auto shared = std::make_shared<const CrystalGraph>(b);
  return CrystalBijection{shared, shared, std::move(xi)};
}

namespace {

void require_not_abnormal(const CrystalGraph& b) {
  if (normality(b) == Normality::NotNormal) throw std::domain_error("commutor: input crystal is not normal");
}

}  // namespace

CrystalBijection commutor(const CrystalGraph& b1, const CrystalGraph& b2) {
  if (b1.cartan() != b2.cartan()) throw std::invalid_argument("commutor: mismatched Cartan data");
  require_not_abnormal(b1);
  require_not_abnormal(b2);
  const CrystalBijection xi1 = schutzenberger(b1);
  const CrystalBijection xi2 = schutzenberger(b2);
  auto domain = std::make_shared<const CrystalGraph>(tensor(b1, b2));
  auto codomain = std::make_shared<const CrystalGraph>(tensor(b2, b1));
  const CrystalBijection xi21 = schutzenberger(*codomain);
  const int n1 = b1.size(), n2 = b2.size();
  std::vector<int> map(static_cast<std::size_t>(n1 * n2));
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n2; ++y) map[x * n2 + y] = xi21(xi2(y) * n1 + xi1(x));
  return CrystalBijection{domain, codomain, std::move(map)};
}

CrystalBijection internal_cactus(const std::vector<const CrystalGraph*>& factors) {
  if (factors.empty()) throw std::invalid_argument("internal_cactus: need at least one factor");
  if (factors.size() == 1) {
    auto b = std::make_shared<const CrystalGraph>(*factors.front());
    std::vector<int> id(static_cast<std::size_t>(b->size()));
    for (int x = 0; x < b->size(); ++x) id[x] = x;
    return CrystalBijection{b, b, std::move(id)};
  }
  const CrystalGraph& first = *factors.front();
  std::vector<const CrystalGraph*> rest(factors.begin() + 1, factors.end());
  const CrystalBijection inner = internal_cactus(rest);  // B2..Bm -> Bm..B2
  const CrystalBijection outer = commutor(first, *inner.codomain);
  const int n1 = first.size(), nr = inner.domain->size();
  auto domain = std::make_shared<const CrystalGraph>(tensor(first, *inner.domain));
  std::vector<int> map(static_cast<std::size_t>(n1 * nr));
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < nr; ++y) map[x * nr + y] = outer(x * nr + inner(y));
  return CrystalBijection{domain, outer.codomain, std::move(map)};
}

CrystalBijection internal_cactus_peel_last(const std::vector<const CrystalGraph*>& factors) {
  if (factors.size() <= 1) return internal_cactus(factors);
  const CrystalGraph& last = *factors.back();
  std::vector<const CrystalGraph*> init(factors.begin(), factors.end() - 1);
  const CrystalBijection inner = internal_cactus_peel_last(init);  // B1..B(m-1) -> B(m-1)..B1
  const CrystalBijection outer = commutor(*inner.codomain, last);  // (B(m-1)..B1) (x) Bm -> Bm (x) (B(m-1)..B1)
  const int ni = inner.domain->size(), nl = last.size();
  auto domain = std::make_shared<const CrystalGraph>(tensor(*inner.domain, last));
  std::vector<int> map(static_cast<std::size_t>(ni * nl));
  for (int x = 0; x < ni; ++x)
    for (int y = 0; y < nl; ++y) map[x * nl + y] = outer(inner(x) * nl + y);
  return CrystalBijection{domain, outer.codomain, std::move(map)};
}

nlohmann::json to_json(const CrystalBijection& s) {
  nlohmann::json pairs = nlohmann::json::array();
  for (std::size_t x = 0; x < s.map.size(); ++x) pairs.push_back({static_cast<int>(x), s.map[x]});
  return pairs;
}

}  // namespace cactus
