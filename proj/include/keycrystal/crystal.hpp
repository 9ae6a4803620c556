#pragma once

#include <algorithm>
#include <concepts>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "keycrystal/cartan.hpp"
#include "keycrystal/weyl.hpp"

namespace kc {

template <class C>
concept Realization = requires(const C& c, const typename C::Vertex& b, int i) {
  { c.datum() } -> std::convertible_to<const CartanDatum&>;
  { c.highest() } -> std::convertible_to<typename C::Vertex>;
  { c.highest_weight() } -> std::convertible_to<Weight>;
  { c.f(i, b) } -> std::same_as<std::optional<typename C::Vertex>>;
  { c.e(i, b) } -> std::same_as<std::optional<typename C::Vertex>>;
  { c.epsilon(i, b) } -> std::convertible_to<int>;
  { c.phi(i, b) } -> std::convertible_to<int>;
  { c.weight(b) } -> std::convertible_to<Weight>;
} && std::totally_ordered<typename C::Vertex>;

template <class C>
using VertexOf = typename C::Vertex;

// Signature rule for x_1 (x) ... (x) x_k: each factor reads +^phi -^eps, and a -
// cancels against a later +. f acts on the factor of the last surviving +,
// e on the factor of the first surviving -.
struct Bracket {
  int eps = 0;
  int phi = 0;
  int f_at = -1;
  int e_at = -1;
};

Bracket bracket(const std::vector<std::pair<int, int>>& eps_phi);
// Surviving + count of each factor; f^k acts on the last k surviving + in turn.
std::vector<int> surviving_plus(const std::vector<std::pair<int, int>>& eps_phi);

class CrystalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <Realization C>
class Tensor {
 public:
  using Factor = C;
  using Vertex = std::vector<VertexOf<C>>;

  explicit Tensor(std::vector<C> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("empty tensor product");
  }

  const CartanDatum& datum() const { return factors_.front().datum(); }
  std::size_t arity() const { return factors_.size(); }
  const C& factor(std::size_t k) const { return factors_[k]; }
  const std::vector<C>& factors() const { return factors_; }

  Vertex highest() const {
    Vertex v;
    v.reserve(factors_.size());
    for (const auto& c : factors_) v.push_back(c.highest());
    return v;
  }
  Weight highest_weight() const {
    Weight w = datum().zero();
    for (const auto& c : factors_) w += c.highest_weight();
    return w;
  }

  Bracket signature(int i, const Vertex& b) const {
    std::vector<std::pair<int, int>> ep(b.size());
    for (std::size_t k = 0; k < b.size(); ++k)
      ep[k] = {factors_[k].epsilon(i, b[k]), factors_[k].phi(i, b[k])};
    return bracket(ep);
  }
  std::optional<Vertex> f(int i, const Vertex& b) const {
    auto s = signature(i, b);
    if (s.f_at < 0) return std::nullopt;
    Vertex r = b;
    r[s.f_at] = *factors_[s.f_at].f(i, b[s.f_at]);
    return r;
  }
  std::optional<Vertex> e(int i, const Vertex& b) const {
    auto s = signature(i, b);
    if (s.e_at < 0) return std::nullopt;
    Vertex r = b;
    r[s.e_at] = *factors_[s.e_at].e(i, b[s.e_at]);
    return r;
  }
  int epsilon(int i, const Vertex& b) const { return signature(i, b).eps; }
  int phi(int i, const Vertex& b) const { return signature(i, b).phi; }
  Weight weight(const Vertex& b) const {
    Weight w = datum().zero();
    for (std::size_t k = 0; k < b.size(); ++k) w += factors_[k].weight(b[k]);
    return w;
  }

 private:
  std::vector<C> factors_;
};

template <Realization C>
Tensor<C> tensor_power(const C& c, std::size_t m) {
  return Tensor<C>(std::vector<C>(m, c));
}

template <Realization C>
std::optional<VertexOf<C>> f_power(const C& c, int i, VertexOf<C> b, int k) {
  for (int t = 0; t < k; ++t) {
    auto n = c.f(i, b);
    if (!n) return std::nullopt;
    b = std::move(*n);
  }
  return b;
}

template <Realization C>
std::optional<VertexOf<C>> e_power(const C& c, int i, VertexOf<C> b, int k) {
  for (int t = 0; t < k; ++t) {
    auto n = c.e(i, b);
    if (!n) return std::nullopt;
    b = std::move(*n);
  }
  return b;
}

template <Realization C>
VertexOf<C> weyl_act(const C& c, int i, const VertexOf<C>& b) {
  int d = c.phi(i, b) - c.epsilon(i, b);
  if (d > 0) return *f_power(c, i, b, d);
  if (d < 0) return *e_power(c, i, b, -d);
  return b;
}

template <Realization C>
VertexOf<C> weyl_act(const C& c, const WeylWord& w, VertexOf<C> b) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) b = weyl_act(c, *it, b);
  return b;
}

// Raises b with e's until no e applies. Returns the top vertex and the colours
// in the order they were applied, so b = f_{p[0]} ... f_{p[k-1]} top.
template <Realization C>
std::pair<VertexOf<C>, std::vector<int>> climb(const C& c, VertexOf<C> b) {
  std::vector<int> path;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : c.datum().nodes()) {
      if (auto u = c.e(i, b)) {
        b = std::move(*u);
        path.push_back(i);
        moved = true;
        break;
      }
    }
  }
  return {std::move(b), std::move(path)};
}

template <Realization C>
std::optional<VertexOf<C>> replay(const C& c, VertexOf<C> top, const std::vector<int>& path) {
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto n = c.f(*it, top);
    if (!n) return std::nullopt;
    top = std::move(*n);
  }
  return top;
}

template <class V>
struct CrystalGraph {
  struct Arrow {
    std::size_t from;
    std::size_t to;
    int i;
  };
  std::vector<V> vertices;
  std::map<V, std::size_t> index;
  std::vector<Arrow> arrows;
  std::size_t source = 0;

  std::size_t size() const { return vertices.size(); }
  bool contains(const V& v) const { return index.count(v) != 0; }
};

struct Unbounded {
  template <class V>
  bool operator()(const V&) const { return true; }
};

template <Realization C, class Keep = Unbounded>
CrystalGraph<VertexOf<C>> generate(const C& c, Keep keep = {}, std::size_t max_vertices = 2'000'000) {
  CrystalGraph<VertexOf<C>> g;
  auto top = c.highest();
  g.index.emplace(top, 0);
  g.vertices.push_back(top);
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    for (int i : c.datum().nodes()) {
      auto n = c.f(i, g.vertices[k]);
      if (!n || !keep(*n)) continue;
      auto [it, fresh] = g.index.emplace(*n, g.vertices.size());
      if (fresh) {
        if (g.vertices.size() >= max_vertices) throw CrystalError("crystal exceeds vertex limit");
        g.vertices.push_back(*n);
      }
      g.arrows.push_back({k, it->second, i});
    }
  }
  return g;
}

template <class V>
struct OrbitEntry {
  WeylWord word;
  V vertex;
};

// BFS along b_{w lambda} -> f_i^{phi_i} b_{w lambda}; words are minimal coset representatives.
template <Realization C, class Keep = Unbounded>
std::vector<OrbitEntry<VertexOf<C>>> orbit(const C& c, Keep keep = {}) {
  std::vector<OrbitEntry<VertexOf<C>>> out{{WeylWord{}, c.highest()}};
  std::set<VertexOf<C>> seen{c.highest()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i : c.datum().nodes()) {
      int p = c.phi(i, out[k].vertex);
      if (p == 0) continue;
      auto n = *f_power(c, i, out[k].vertex, p);
      if (!keep(n) || !seen.insert(n).second) continue;
      WeylWord w = out[k].word;
      w.letters.insert(w.letters.begin(), i);
      out.push_back({std::move(w), std::move(n)});
    }
  }
  return out;
}

template <Realization C>
bool is_extremal(const C& c, const VertexOf<C>& b) {
  return dominant_conjugate(c.datum(), c.weight(b)) == c.highest_weight();
}

// Reduced word of the minimal w with b = b_{w lambda}; nullopt when b is not extremal.
template <Realization C>
std::optional<WeylWord> orbit_word(const C& c, VertexOf<C> b) {
  if (!is_extremal(c, b)) return std::nullopt;
  WeylWord w;
  auto top = c.highest();
  while (!(b == top)) {
    bool moved = false;
    for (int i : c.datum().nodes()) {
      int eps = c.epsilon(i, b);
      if (eps == 0) continue;
      if (c.phi(i, b) != 0) return std::nullopt;
      b = *e_power(c, i, b, eps);
      w.letters.push_back(i);
      moved = true;
      break;
    }
    if (!moved) return std::nullopt;
  }
  return w;
}

// K_m(b): lift a path from b_lambda to b into B(lambda)^{(x) m}.
template <Realization C>
std::vector<VertexOf<C>> dilatation(const C& c, const VertexOf<C>& b, int m) {
  if (m < 1) throw std::invalid_argument("dilatation needs m >= 1");
  auto [top, path] = climb(c, b);
  if (!(top == c.highest())) throw CrystalError("vertex is not in the component of the highest vertex");
  std::vector<VertexOf<C>> t(m, top);
  std::vector<std::pair<int, int>> ep(m);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    int i = *it;
    for (int k = 0; k < m; ++k) ep[k] = {c.epsilon(i, t[k]), c.phi(i, t[k])};
    auto plus = surviving_plus(ep);
    int left = m;
    for (int k = m - 1; k >= 0 && left > 0; --k) {
      int take = std::min(left, plus[k]);
      if (take == 0) continue;
      auto n = f_power(c, i, t[k], take);
      if (!n) throw CrystalError("dilatation path lift failed");
      t[k] = std::move(*n);
      left -= take;
    }
    if (left > 0) throw CrystalError("dilatation path lift failed");
  }
  return t;
}

// Distinct values of lcm(1..k) up to cap.
inline std::vector<int> dilatation_schedule(int cap) {
  std::vector<int> s;
  long m = 1;
  for (long k = 1; m <= cap; ++k) {
    m = std::lcm(m, k);
    if (m <= cap && (s.empty() || s.back() != m)) s.push_back(static_cast<int>(m));
  }
  return s;
}

template <class V>
struct KeyResult {
  V left;
  V right;
  int m = 0;
  std::vector<V> factors;
};

struct KeyOptions {
  int cap = 5040;
};

template <Realization C>
KeyResult<VertexOf<C>> key_by_dilatation(const C& c, const VertexOf<C>& b, KeyOptions opt = {}) {
  for (int m : dilatation_schedule(opt.cap)) {
    auto t = dilatation(c, b, m);
    bool ok = std::all_of(t.begin(), t.end(), [&](const auto& x) { return is_extremal(c, x); });
    if (ok) return {t.front(), t.back(), m, std::move(t)};
  }
  throw CrystalError("dilatation schedule cap exceeded");
}

template <Realization C>
VertexOf<C> key_right(const C& c, const VertexOf<C>& b, KeyOptions opt = {}) {
  return key_by_dilatation(c, b, opt).right;
}

template <Realization C>
VertexOf<C> key_left(const C& c, const VertexOf<C>& b, KeyOptions opt = {}) {
  return key_by_dilatation(c, b, opt).left;
}

// Crystal isomorphism B(lambda) -> B'(lambda) between two realizations.
template <Realization A, Realization B>
std::optional<VertexOf<B>> transport(const A& a, const B& bc, const VertexOf<A>& x) {
  auto [top, path] = climb(a, x);
  if (!(top == a.highest())) return std::nullopt;
  return replay(bc, bc.highest(), path);
}

// Combinatorial R-matrix on B(lambda) (x) B(mu) -> B(mu) (x) B(lambda) by path transport.
template <Realization C>
std::pair<VertexOf<C>, VertexOf<C>> rmatrix_path_transport(const C& left, const C& right, const VertexOf<C>& u,
                                                           const VertexOf<C>& v) {
  Tensor<C> src({left, right});
  Tensor<C> dst({right, left});
  auto r = transport(src, dst, std::vector<VertexOf<C>>{u, v});
  if (!r) throw CrystalError("vertex not in the principal component");
  return {(*r)[0], (*r)[1]};
}

enum class Side { Left, Right };

struct PathTransportR {
  template <Realization C>
  std::pair<VertexOf<C>, VertexOf<C>> operator()(const C& left, const C& right, const VertexOf<C>& u,
                                                 const VertexOf<C>& v) const {
    return rmatrix_path_transport(left, right, u, v);
  }
};

struct DilatationKey {
  template <Realization C>
  VertexOf<C> operator()(const C& c, const VertexOf<C>& b, Side side) const {
    auto k = key_by_dilatation(c, b);
    return side == Side::Right ? k.right : k.left;
  }
};

// Key of b in B_S(lambda) through factor transport: factor k is moved to the
// end (Right) or the front (Left) and its own key is taken there.
template <Realization C, class RProvider = PathTransportR, class FundKey = DilatationKey>
typename Tensor<C>::Vertex key_reduced(const Tensor<C>& t, const typename Tensor<C>::Vertex& b, Side side,
                                       RProvider R = {}, FundKey K = {}) {
  const std::size_t l = t.arity();
  typename Tensor<C>::Vertex out(l);
  for (std::size_t k = 0; k < l; ++k) {
    auto fs = b;
    std::vector<const C*> cs;
    for (std::size_t j = 0; j < l; ++j) cs.push_back(&t.factor(j));
    if (side == Side::Right) {
      for (std::size_t j = k; j + 1 < l; ++j) {
        auto [v2, u2] = R(*cs[j], *cs[j + 1], fs[j], fs[j + 1]);
        fs[j] = std::move(v2);
        fs[j + 1] = std::move(u2);
        std::swap(cs[j], cs[j + 1]);
      }
      out[k] = K(*cs.back(), fs.back(), side);
    } else {
      for (std::size_t j = k; j-- > 0;) {
        auto [v2, u2] = R(*cs[j], *cs[j + 1], fs[j], fs[j + 1]);
        fs[j] = std::move(v2);
        fs[j + 1] = std::move(u2);
        std::swap(cs[j], cs[j + 1]);
      }
      out[k] = K(*cs.front(), fs.front(), side);
    }
  }
  return out;
}

template <Realization C>
std::set<VertexOf<C>> demazure_enumerate(const C& c, const WeylWord& w) {
  std::set<VertexOf<C>> s{c.highest()};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    std::vector<VertexOf<C>> grow;
    for (const auto& b : s) {
      auto x = c.f(*it, b);
      while (x) {
        grow.push_back(*x);
        x = c.f(*it, *x);
      }
    }
    s.insert(grow.begin(), grow.end());
  }
  return s;
}

// b is in B_w(lambda) iff its right key k is b_{u lambda} with u <= w in W / W_lambda.
template <Realization C>
bool demazure_membership_by_key(const C& c, const VertexOf<C>& k, const WeylWord& w) {
  const auto& d = c.datum();
  auto J = weyl::stabilizer(d, c.highest_weight());
  auto word = orbit_word(c, k);
  if (!word) throw CrystalError("key is not an orbit vertex");
  return weyl::bruhat_leq(d, weyl::project_coset(d, *word, J), weyl::project_coset(d, w, J));
}

template <Realization C>
bool demazure_membership(const C& c, const VertexOf<C>& b, const WeylWord& w, KeyOptions opt = {}) {
  return demazure_membership_by_key(c, key_right(c, b, opt), w);
}

template <Realization C, class Range>
WeightPolynomial character(const C& c, const Range& vertices) {
  WeightPolynomial p;
  for (const auto& b : vertices) p.add(c.weight(b), 1);
  return p;
}

WeightPolynomial demazure_operator(const CartanDatum& d, int i, const WeightPolynomial& p);
WeightPolynomial demazure_character(const CartanDatum& d, const Weight& lambda, const WeylWord& w);

}  // namespace kc
