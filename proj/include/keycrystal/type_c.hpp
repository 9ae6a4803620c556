#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "keycrystal/crystal.hpp"

namespace kc::type_c {

// Letters 1 < ... < n < -n < ... < -1, where -k stands for k-bar.
using Column = std::vector<int>;
using Tableau = std::vector<Column>;

int rank_of(int n, int x);
bool less(int n, int x, int y);
void sort_column(int n, Column& c);
bool is_column(int n, const Column& c);

class KNColumnCrystal {
 public:
  using Vertex = Column;

  KNColumnCrystal(int n, int height);

  const CartanDatum& datum() const { return datum_; }
  int n() const { return n_; }
  int height() const { return h_; }
  Vertex highest() const;
  Weight highest_weight() const;

  std::optional<Vertex> f(int i, const Vertex& c) const;
  std::optional<Vertex> e(int i, const Vertex& c) const;
  int epsilon(int i, const Vertex& c) const;
  int phi(int i, const Vertex& c) const;
  Weight weight(const Vertex& c) const;

 private:
  Bracket signature(int i, const Vertex& c) const;
  CartanDatum datum_;
  int n_;
  int h_;
};

using KNCrystal = Tensor<KNColumnCrystal>;
KNCrystal kn_crystal(int n, const std::vector<int>& shape);

std::optional<std::pair<Column, Column>> split_column(int n, const Column& c);
bool is_admissible(int n, const Column& c);
std::pair<Column, Column> column_keys(int n, const Column& c);
Tableau split_form(int n, const Tableau& t);
bool is_type_c_tableau(int n, const Tableau& t);

struct SplitKey {
  Column operator()(const KNColumnCrystal& c, const Column& col, Side side) const {
    auto [l, r] = column_keys(c.n(), col);
    return side == Side::Right ? r : l;
  }
};

Tableau key_right_reduced(int n, const Tableau& t);
Tableau key_left_reduced(int n, const Tableau& t);

bool orbit_test(int n, const Tableau& t);
bool tableau_bruhat(int n, const Tableau& t, const Tableau& u);

std::string letter_str(int x);
std::string pretty(const Tableau& t);

}  // namespace kc::type_c
