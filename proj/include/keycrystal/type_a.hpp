#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "keycrystal/crystal.hpp"

namespace kc::type_a {

using Column = std::vector<int>;
using Tableau = std::vector<Column>;  // columns left to right, entries top to bottom

// B(omega_h) for A_n on strictly increasing columns over {1..n+1}.
class ColumnCrystal {
 public:
  using Vertex = Column;

  ColumnCrystal(int n, int height);

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

  bool valid(const Vertex& c) const;

 private:
  CartanDatum datum_;
  int n_;
  int h_;
};

using TableauCrystal = Tensor<ColumnCrystal>;

TableauCrystal tableau_crystal(int n, const std::vector<int>& shape);
std::vector<int> column_heights(const std::vector<int>& shape);
std::vector<int> shape_of(const Tableau& t);

Tableau from_rows(const std::vector<std::vector<int>>& rows);
std::vector<std::vector<int>> to_rows(const Tableau& t);
bool is_semistandard(const Tableau& t);
std::string pretty(const Tableau& t);

// Is x (x) y in the principal component of B(omega_|x|) (x) B(omega_|y|)?
bool principal_pair(const Column& x, const Column& y);
// R: x (x) y -> y' (x) x' with |y'| = |y|, |x'| = |x|, by jeu de taquin.
std::pair<Column, Column> jdt_rmatrix(const Column& x, const Column& y);

struct JdtR {
  std::pair<Column, Column> operator()(const ColumnCrystal&, const ColumnCrystal&, const Column& u,
                                       const Column& v) const {
    return jdt_rmatrix(u, v);
  }
};

// Keys of B(omega_h) are identities.
struct ColumnKey {
  Column operator()(const ColumnCrystal&, const Column& c, Side) const { return c; }
};

Tableau ls_key_right(int n, const Tableau& t);
Tableau ls_key_left(int n, const Tableau& t);

bool orbit_test(const Tableau& t);
bool tableau_bruhat(const Tableau& t, const Tableau& u);

}  // namespace kc::type_a
