#include "keycrystal/crystal.hpp"

namespace kc {

Bracket bracket(const std::vector<std::pair<int, int>>& eps_phi) {
  Bracket r;
  std::vector<std::pair<int, int>> open;  // (factor, unmatched minus count)
  for (std::size_t k = 0; k < eps_phi.size(); ++k) {
    int plus = eps_phi[k].second;
    while (plus > 0 && !open.empty()) {
      int take = std::min(plus, open.back().second);
      plus -= take;
      if ((open.back().second -= take) == 0) open.pop_back();
    }
    if (plus > 0) {
      r.phi += plus;
      r.f_at = static_cast<int>(k);
    }
    if (eps_phi[k].first > 0) open.emplace_back(static_cast<int>(k), eps_phi[k].first);
  }
  for (const auto& [k, n] : open) r.eps += n;
  if (!open.empty()) r.e_at = open.front().first;
  return r;
}

std::vector<int> surviving_plus(const std::vector<std::pair<int, int>>& eps_phi) {
  std::vector<int> out(eps_phi.size(), 0);
  int open = 0;
  for (std::size_t k = 0; k < eps_phi.size(); ++k) {
    int plus = eps_phi[k].second;
    int take = std::min(plus, open);
    open -= take;
    out[k] = plus - take;
    open += eps_phi[k].first;
  }
  return out;
}

WeightPolynomial demazure_operator(const CartanDatum& d, int i, const WeightPolynomial& p) {
  WeightPolynomial out;
  const Weight a = d.alpha(i);
  const int pi = d.pos(i);
  for (const auto& [mu, c] : p.terms()) {
    int k = mu.pair[pi];
    if (k >= 0) {
      Weight x = mu;
      for (int t = 0; t <= k; ++t, x -= a) out.add(x, c);
    } else if (k <= -2) {
      Weight x = mu + a;
      for (int t = 1; t <= -k - 1; ++t, x += a) out.add(x, -c);
    }
  }
  return out;
}

WeightPolynomial demazure_character(const CartanDatum& d, const Weight& lambda, const WeylWord& w) {
  auto p = WeightPolynomial::monomial(lambda);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) p = demazure_operator(d, *it, p);
  return p;
}

}  // namespace kc
