#include "keycrystal/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kc::weyl {

Weight apply(const CartanDatum& d, const WeylWord& w, Weight g) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) g = reflect(d, *it, g);
  return g;
}

RootVec root_reflect(const CartanDatum& d, int i, RootVec beta) {
  int p = d.pos(i);
  int k = 0;
  for (int m = 0; m < d.size(); ++m) k += beta[m] * d.pairing(d.node(m), i);
  beta[p] -= k;
  return beta;
}

RootVec inverse_image_of_simple(const CartanDatum& d, const WeylWord& w, int i) {
  RootVec beta(d.size(), 0);
  beta[d.pos(i)] = 1;
  for (int j : w.letters) beta = root_reflect(d, j, std::move(beta));
  return beta;
}

bool is_positive(const RootVec& beta) {
  return std::all_of(beta.begin(), beta.end(), [](int x) { return x >= 0; });
}

bool left_ascent(const CartanDatum& d, const WeylWord& w, int i) {
  return is_positive(inverse_image_of_simple(d, w, i));
}

bool right_ascent(const CartanDatum& d, const WeylWord& w, int i) {
  return left_ascent(d, inverse(w), i);
}

WeylWord inverse(const WeylWord& w) {
  WeylWord r = w;
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

WeylWord times_right(const CartanDatum& d, const WeylWord& w, int i) {
  d.pos(i);
  // w(alpha_i) = (w^{-1})^{-1}(alpha_i): positive iff the product lengthens.
  RootVec beta(d.size(), 0);
  beta[d.pos(i)] = 1;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) beta = root_reflect(d, *it, beta);
  WeylWord r = w;
  if (is_positive(beta)) {
    r.letters.push_back(i);
    return r;
  }
  RootVec gamma(d.size(), 0);
  gamma[d.pos(i)] = 1;
  for (std::size_t t = w.letters.size(); t-- > 0;) {
    RootVec simple(d.size(), 0);
    simple[d.pos(w.letters[t])] = 1;
    if (gamma == simple) {
      r.letters.erase(r.letters.begin() + static_cast<long>(t));
      return r;
    }
    gamma = root_reflect(d, w.letters[t], gamma);
  }
  throw std::logic_error("exchange condition failed");
}

WeylWord times_left(const CartanDatum& d, int i, const WeylWord& w) {
  return inverse(times_right(d, inverse(w), i));
}

WeylWord reduce(const CartanDatum& d, const WeylWord& w) {
  WeylWord r;
  for (int i : w.letters) r = times_right(d, r, i);
  return r;
}

WeylWord multiply(const CartanDatum& d, const WeylWord& u, const WeylWord& v) {
  WeylWord r = u;
  for (int i : v.letters) r = times_right(d, r, i);
  return r;
}

bool is_reduced(const CartanDatum& d, const WeylWord& w) { return reduce(d, w).length() == w.length(); }

std::size_t length(const CartanDatum& d, const WeylWord& w) { return reduce(d, w).length(); }

Weight signature(const CartanDatum& d, const WeylWord& w) { return apply(d, w, d.rho()); }

bool equal(const CartanDatum& d, const WeylWord& u, const WeylWord& v) {
  return signature(d, u) == signature(d, v);
}

bool bruhat_leq(const CartanDatum& d, const WeylWord& u, const WeylWord& v) {
  if (v.empty()) return u.empty();
  if (u.length() > v.length()) return false;
  int i = v.letters.front();
  WeylWord sv(std::vector<int>(v.letters.begin() + 1, v.letters.end()));
  if (!u.empty() && !left_ascent(d, u, i)) return bruhat_leq(d, times_left(d, i, u), sv);
  return bruhat_leq(d, u, sv);
}

bool weak_leq(const CartanDatum& d, const WeylWord& u, const WeylWord& v) {
  if (u.length() > v.length()) return false;
  WeylWord x = multiply(d, v, inverse(u));
  return x.length() + u.length() == v.length();
}

std::set<int> stabilizer(const CartanDatum& d, const Weight& lambda) {
  std::set<int> J;
  for (int p = 0; p < d.size(); ++p)
    if (lambda.pair[p] == 0) J.insert(d.node(p));
  return J;
}

WeylWord project_coset(const CartanDatum& d, const WeylWord& w, const std::set<int>& J) {
  WeylWord r = reduce(d, w);
  for (bool changed = true; changed;) {
    changed = false;
    for (int j : J) {
      if (!right_ascent(d, r, j)) {
        r = times_right(d, r, j);
        changed = true;
      }
    }
  }
  return r;
}

bool is_minimal_in_coset(const CartanDatum& d, const WeylWord& w, const std::set<int>& J) {
  return std::all_of(J.begin(), J.end(), [&](int j) { return right_ascent(d, w, j); });
}

bool coset_bruhat_split(const CartanDatum& d, const WeylWord& w, const WeylWord& w2,
                        const Weight& lambda, const Weight& mu) {
  auto J = stabilizer(d, lambda + mu);
  if (!is_minimal_in_coset(d, w, J) || !is_minimal_in_coset(d, w2, J))
    throw std::invalid_argument("coset_bruhat_split: word not minimal in its coset");
  auto Jl = stabilizer(d, lambda);
  auto Jm = stabilizer(d, mu);
  return bruhat_leq(d, project_coset(d, w, Jl), project_coset(d, w2, Jl)) &&
         bruhat_leq(d, project_coset(d, w, Jm), project_coset(d, w2, Jm));
}

std::vector<WeylWord> elements(const CartanDatum& d, std::size_t max_len) {
  std::vector<WeylWord> out{WeylWord{}};
  std::map<Weight, std::size_t> seen{{signature(d, {}), 0}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (int i : d.nodes()) {
        if (!left_ascent(d, out[k], i)) continue;
        WeylWord w = out[k];
        w.letters.insert(w.letters.begin(), i);
        if (seen.emplace(signature(d, w), out.size()).second) out.push_back(w);
      }
    }
    if (end == out.size()) break;
    begin = end;
  }
  return out;
}

std::vector<WeylWord> reduced_words(const CartanDatum& d, const WeylWord& w) {
  WeylWord r = reduce(d, w);
  if (r.empty()) return {WeylWord{}};
  std::vector<WeylWord> out;
  for (int i : d.nodes()) {
    if (left_ascent(d, r, i)) continue;
    for (auto& tail : reduced_words(d, times_left(d, i, r))) {
      tail.letters.insert(tail.letters.begin(), i);
      out.push_back(std::move(tail));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kc::weyl
