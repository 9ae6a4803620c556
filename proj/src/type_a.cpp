#include "keycrystal/type_a.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kc::type_a {

namespace {

bool has(const Column& c, int x) { return std::binary_search(c.begin(), c.end(), x); }

Column replace(Column c, int from, int to) {
  *std::lower_bound(c.begin(), c.end(), from) = to;
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

ColumnCrystal::ColumnCrystal(int n, int height) : datum_(CartanDatum::finite_a(n)), n_(n), h_(height) {
  if (height < 0 || height > n + 1) throw std::invalid_argument("column height out of range");
}

Column ColumnCrystal::highest() const {
  Column c(h_);
  for (int k = 0; k < h_; ++k) c[k] = k + 1;
  return c;
}

Weight ColumnCrystal::highest_weight() const { return weight(highest()); }

bool ColumnCrystal::valid(const Column& c) const {
  if (static_cast<int>(c.size()) != h_) return false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] < 1 || c[k] > n_ + 1) return false;
    if (k && c[k - 1] >= c[k]) return false;
  }
  return true;
}

int ColumnCrystal::phi(int i, const Column& c) const {
  datum_.pos(i);
  return has(c, i) && !has(c, i + 1) ? 1 : 0;
}

int ColumnCrystal::epsilon(int i, const Column& c) const {
  datum_.pos(i);
  return has(c, i + 1) && !has(c, i) ? 1 : 0;
}

std::optional<Column> ColumnCrystal::f(int i, const Column& c) const {
  if (!phi(i, c)) return std::nullopt;
  return replace(c, i, i + 1);
}

std::optional<Column> ColumnCrystal::e(int i, const Column& c) const {
  if (!epsilon(i, c)) return std::nullopt;
  return replace(c, i + 1, i);
}

Weight ColumnCrystal::weight(const Column& c) const {
  Weight w = datum_.zero();
  for (int i = 1; i <= n_; ++i) w.pair[i - 1] = (has(c, i) ? 1 : 0) - (has(c, i + 1) ? 1 : 0);
  return w;
}

std::vector<int> column_heights(const std::vector<int>& shape) {
  std::vector<int> h;
  if (shape.empty()) return h;
  for (int c = 1; c <= shape.front(); ++c) {
    int k = 0;
    while (k < static_cast<int>(shape.size()) && shape[k] >= c) ++k;
    h.push_back(k);
  }
  return h;
}

std::vector<int> shape_of(const Tableau& t) {
  std::vector<int> rows;
  for (const auto& c : t) {
    if (rows.size() < c.size()) rows.resize(c.size(), 0);
    for (std::size_t r = 0; r < c.size(); ++r) ++rows[r];
  }
  return rows;
}

TableauCrystal tableau_crystal(int n, const std::vector<int>& shape) {
  std::vector<ColumnCrystal> cols;
  for (int h : column_heights(shape)) cols.emplace_back(n, h);
  if (cols.empty()) cols.emplace_back(n, 0);
  return TableauCrystal(std::move(cols));
}

Tableau from_rows(const std::vector<std::vector<int>>& rows) {
  Tableau t;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r && rows[r].size() > rows[r - 1].size()) throw std::invalid_argument("rows must weakly shorten");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (t.size() <= c) t.emplace_back();
      t[c].push_back(rows[r][c]);
    }
  }
  return t;
}

std::vector<std::vector<int>> to_rows(const Tableau& t) {
  std::vector<std::vector<int>> rows;
  for (const auto& c : t) {
    if (rows.size() < c.size()) rows.resize(c.size());
    for (std::size_t r = 0; r < c.size(); ++r) rows[r].push_back(c[r]);
  }
  return rows;
}

bool is_semistandard(const Tableau& t) {
  for (std::size_t k = 0; k < t.size(); ++k) {
    for (std::size_t r = 0; r < t[k].size(); ++r) {
      if (r && t[k][r - 1] >= t[k][r]) return false;
      if (k && (r >= t[k - 1].size() || t[k - 1][r] > t[k][r])) return false;
    }
  }
  return true;
}

std::string pretty(const Tableau& t) {
  std::ostringstream os;
  for (const auto& row : to_rows(t)) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
    os << '\n';
  }
  return os.str();
}

bool principal_pair(const Column& x, const Column& y) {
  const std::size_t a = x.size(), b = y.size();
  if (a >= b) {
    for (std::size_t r = 0; r < b; ++r)
      if (x[r] > y[r]) return false;
  } else {
    for (std::size_t r = 0; r < a; ++r)
      if (x[r] > y[r + (b - a)]) return false;
  }
  return true;
}

std::pair<Column, Column> jdt_rmatrix(const Column& x, const Column& y) {
  if (!principal_pair(x, y)) throw CrystalError("columns not in the principal component");
  const int a = static_cast<int>(x.size()), b = static_cast<int>(y.size());
  if (a == b) return {x, y};
  const int H = std::max(a, b);
  constexpr int kHole = -1;
  std::vector<int> L(H, kHole), R(H, kHole);
  if (a > b) {
    for (int r = 0; r < a; ++r) L[r] = x[r];
    for (int r = 0; r < b; ++r) R[r] = y[r];
    int inner = 0;
    for (int j = 0; j < a - b; ++j) {
      int r = b + j;
      bool right = true;
      for (;;) {
        if (right) {
          int north = r > 0 ? R[r - 1] : kHole;
          int west = r >= inner ? L[r] : kHole;
          if (north == kHole && west == kHole) throw std::logic_error("reverse slide stuck");
          if (north != kHole && north >= west) {
            R[r] = north;
            --r;
          } else {
            R[r] = west;
            right = false;
          }
        } else {
          if (r - 1 >= inner) {
            L[r] = L[r - 1];
            --r;
          } else {
            L[r] = kHole;
            ++inner;
            break;
          }
        }
      }
    }
    return {Column(L.begin() + (a - b), L.end()), Column(R.begin(), R.begin() + a)};
  }
  for (int r = 0; r < a; ++r) L[b - a + r] = x[r];
  for (int r = 0; r < b; ++r) R[r] = y[r];
  int l_begin = b - a, l_end = b, r_end = b;
  for (int j = l_begin - 1; j >= 0; --j) {
    int r = j;
    bool left = true;
    l_begin = j;
    for (;;) {
      if (left) {
        int south = r + 1 < l_end ? L[r + 1] : kHole;
        int east = r < r_end ? R[r] : kHole;
        if (south == kHole && east == kHole) throw std::logic_error("forward slide stuck");
        if (south != kHole && (east == kHole || south <= east)) {
          L[r] = south;
          ++r;
        } else {
          L[r] = east;
          left = false;
        }
      } else {
        if (r + 1 < r_end) {
          R[r] = R[r + 1];
          ++r;
        } else {
          R[r] = kHole;
          --r_end;
          break;
        }
      }
    }
  }
  return {Column(L.begin(), L.begin() + b), Column(R.begin(), R.begin() + a)};
}

Tableau ls_key_right(int n, const Tableau& t) {
  auto tc = tableau_crystal(n, shape_of(t));
  return key_reduced(tc, t, Side::Right, JdtR{}, ColumnKey{});
}

Tableau ls_key_left(int n, const Tableau& t) {
  auto tc = tableau_crystal(n, shape_of(t));
  return key_reduced(tc, t, Side::Left, JdtR{}, ColumnKey{});
}

bool orbit_test(const Tableau& t) {
  for (std::size_t k = 1; k < t.size(); ++k)
    if (!std::includes(t[k - 1].begin(), t[k - 1].end(), t[k].begin(), t[k].end())) return false;
  return true;
}

bool tableau_bruhat(const Tableau& t, const Tableau& u) {
  if (shape_of(t) != shape_of(u)) throw std::invalid_argument("tableau_bruhat: shape mismatch");
  for (std::size_t k = 0; k < t.size(); ++k)
    for (std::size_t r = 0; r < t[k].size(); ++r)
      if (t[k][r] > u[k][r]) return false;
  return true;
}

}  // namespace kc::type_a
