#pragma once

#include <set>
#include <vector>

#include "keycrystal/cartan.hpp"

namespace kc {

// A word s_{i_1} ... s_{i_k}; acts on the left, letters applied right to left.
struct WeylWord {
  std::vector<int> letters;

  WeylWord() = default;
  WeylWord(std::initializer_list<int> l) : letters(l) {}
  explicit WeylWord(std::vector<int> l) : letters(std::move(l)) {}

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  auto operator<=>(const WeylWord&) const = default;
};

namespace weyl {

using RootVec = std::vector<int>;  // coordinates on the simple roots, by position

Weight apply(const CartanDatum& d, const WeylWord& w, Weight g);
RootVec root_reflect(const CartanDatum& d, int i, RootVec beta);
// w^{-1}(alpha_i) on the simple-root basis.
RootVec inverse_image_of_simple(const CartanDatum& d, const WeylWord& w, int i);
bool is_positive(const RootVec& beta);

bool left_ascent(const CartanDatum& d, const WeylWord& w, int i);   // l(s_i w) > l(w)
bool right_ascent(const CartanDatum& d, const WeylWord& w, int i);  // l(w s_i) > l(w)

WeylWord inverse(const WeylWord& w);
WeylWord times_right(const CartanDatum& d, const WeylWord& w, int i);  // reduced word of w s_i
WeylWord times_left(const CartanDatum& d, int i, const WeylWord& w);   // reduced word of s_i w
WeylWord reduce(const CartanDatum& d, const WeylWord& w);
WeylWord multiply(const CartanDatum& d, const WeylWord& u, const WeylWord& v);
bool is_reduced(const CartanDatum& d, const WeylWord& w);
std::size_t length(const CartanDatum& d, const WeylWord& w);

// Group equality through the action on a regular dominant weight.
bool equal(const CartanDatum& d, const WeylWord& u, const WeylWord& v);
Weight signature(const CartanDatum& d, const WeylWord& w);

bool bruhat_leq(const CartanDatum& d, const WeylWord& u, const WeylWord& v);
bool weak_leq(const CartanDatum& d, const WeylWord& u, const WeylWord& v);

std::set<int> stabilizer(const CartanDatum& d, const Weight& lambda);
WeylWord project_coset(const CartanDatum& d, const WeylWord& w, const std::set<int>& J);
bool is_minimal_in_coset(const CartanDatum& d, const WeylWord& w, const std::set<int>& J);
bool coset_bruhat_split(const CartanDatum& d, const WeylWord& w, const WeylWord& w2,
                        const Weight& lambda, const Weight& mu);

// One reduced word per element of length <= max_len, in order of length.
std::vector<WeylWord> elements(const CartanDatum& d, std::size_t max_len);
std::vector<WeylWord> reduced_words(const CartanDatum& d, const WeylWord& w);

}  // namespace weyl
}  // namespace kc
