#include "keycrystal/type_c.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "keycrystal/type_a.hpp"

namespace kc::type_c {

int rank_of(int n, int x) { return x > 0 ? x : 2 * n + 1 + x; }

bool less(int n, int x, int y) { return rank_of(n, x) < rank_of(n, y); }

void sort_column(int n, Column& c) {
  std::sort(c.begin(), c.end(), [n](int x, int y) { return less(n, x, y); });
}

bool is_column(int n, const Column& c) {
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0 || c[k] > n || c[k] < -n) return false;
    if (k && !less(n, c[k - 1], c[k])) return false;
  }
  return true;
}

namespace {

bool has(const Column& c, int x) { return std::find(c.begin(), c.end(), x) != c.end(); }

// +1: contributes to phi_i, -1: contributes to eps_i.
int sign(int n, int i, int x) {
  if (i < n) {
    if (x == i || x == -(i + 1)) return 1;
    if (x == i + 1 || x == -i) return -1;
  } else {
    if (x == n) return 1;
    if (x == -n) return -1;
  }
  return 0;
}

int lower(int n, int i, int x) { return i == n ? -n : x + 1; }

int raise(int n, int i, int x) { return i == n ? n : x - 1; }

}  // namespace

KNColumnCrystal::KNColumnCrystal(int n, int height) : datum_(CartanDatum::finite_c(n)), n_(n), h_(height) {
  if (height < 0 || height > n) throw std::invalid_argument("symplectic column height out of range");
}

Column KNColumnCrystal::highest() const {
  Column c(h_);
  for (int k = 0; k < h_; ++k) c[k] = k + 1;
  return c;
}

Weight KNColumnCrystal::highest_weight() const { return weight(highest()); }

Bracket KNColumnCrystal::signature(int i, const Column& c) const {
  datum_.pos(i);
  std::vector<std::pair<int, int>> ep;
  ep.reserve(c.size());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    int s = sign(n_, i, *it);
    ep.emplace_back(s < 0 ? 1 : 0, s > 0 ? 1 : 0);
  }
  return bracket(ep);
}

std::optional<Column> KNColumnCrystal::f(int i, const Column& c) const {
  auto s = signature(i, c);
  if (s.f_at < 0) return std::nullopt;
  Column r = c;
  auto& x = r[r.size() - 1 - s.f_at];
  x = lower(n_, i, x);
  sort_column(n_, r);
  return r;
}

std::optional<Column> KNColumnCrystal::e(int i, const Column& c) const {
  auto s = signature(i, c);
  if (s.e_at < 0) return std::nullopt;
  Column r = c;
  auto& x = r[r.size() - 1 - s.e_at];
  x = raise(n_, i, x);
  sort_column(n_, r);
  return r;
}

int KNColumnCrystal::epsilon(int i, const Column& c) const { return signature(i, c).eps; }
int KNColumnCrystal::phi(int i, const Column& c) const { return signature(i, c).phi; }

Weight KNColumnCrystal::weight(const Column& c) const {
  std::vector<int> eps(n_ + 1, 0);
  for (int x : c) eps[std::abs(x)] += x > 0 ? 1 : -1;
  Weight w = datum_.zero();
  for (int i = 1; i < n_; ++i) w.pair[i - 1] = eps[i] - eps[i + 1];
  w.pair[n_ - 1] = eps[n_];
  return w;
}

KNCrystal kn_crystal(int n, const std::vector<int>& shape) {
  std::vector<KNColumnCrystal> cols;
  for (int h : type_a::column_heights(shape)) cols.emplace_back(n, h);
  if (cols.empty()) cols.emplace_back(n, 0);
  return KNCrystal(std::move(cols));
}

std::optional<std::pair<Column, Column>> split_column(int n, const Column& c) {
  if (!is_column(n, c)) throw std::invalid_argument("not a symplectic column");
  std::vector<int> I;
  for (int z = n; z >= 1; --z)
    if (has(c, z) && has(c, -z)) I.push_back(z);
  std::vector<int> J;
  int bound = n + 1;
  for (int z : I) {
    int t = std::min(bound, z) - 1;
    while (t >= 1 && (has(c, t) || has(c, -t))) --t;
    if (t < 1) return std::nullopt;
    J.push_back(t);
    bound = t;
  }
  Column l = c, r = c;
  for (std::size_t k = 0; k < I.size(); ++k) {
    *std::find(l.begin(), l.end(), I[k]) = J[k];
    *std::find(r.begin(), r.end(), -I[k]) = -J[k];
  }
  sort_column(n, l);
  sort_column(n, r);
  return std::make_pair(l, r);
}

bool is_admissible(int n, const Column& c) { return split_column(n, c).has_value(); }

std::pair<Column, Column> column_keys(int n, const Column& c) {
  auto s = split_column(n, c);
  if (!s) throw CrystalError("inadmissible column");
  return *s;
}

Tableau split_form(int n, const Tableau& t) {
  Tableau out;
  for (const auto& c : t) {
    auto [l, r] = column_keys(n, c);
    out.push_back(l);
    out.push_back(r);
  }
  return out;
}

bool is_type_c_tableau(int n, const Tableau& t) {
  for (const auto& c : t)
    if (!is_column(n, c) || !is_admissible(n, c)) return false;
  auto s = split_form(n, t);
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k].size() > s[k - 1].size()) return false;
    for (std::size_t r = 0; r < s[k].size(); ++r)
      if (less(n, s[k][r], s[k - 1][r])) return false;
  }
  return true;
}

Tableau key_right_reduced(int n, const Tableau& t) {
  std::vector<KNColumnCrystal> cols;
  for (const auto& c : t) cols.emplace_back(n, static_cast<int>(c.size()));
  return key_reduced(KNCrystal(cols), t, Side::Right, PathTransportR{}, SplitKey{});
}

Tableau key_left_reduced(int n, const Tableau& t) {
  std::vector<KNColumnCrystal> cols;
  for (const auto& c : t) cols.emplace_back(n, static_cast<int>(c.size()));
  return key_reduced(KNCrystal(cols), t, Side::Left, PathTransportR{}, SplitKey{});
}

bool orbit_test(int n, const Tableau& t) {
  for (const auto& c : t)
    for (int x : c)
      if (x > 0 && has(c, -x)) return false;
  for (std::size_t k = 1; k < t.size(); ++k)
    for (int x : t[k])
      if (!has(t[k - 1], x)) return false;
  (void)n;
  return true;
}

bool tableau_bruhat(int n, const Tableau& t, const Tableau& u) {
  if (t.size() != u.size()) throw std::invalid_argument("tableau_bruhat: shape mismatch");
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k].size() != u[k].size()) throw std::invalid_argument("tableau_bruhat: shape mismatch");
    for (std::size_t r = 0; r < t[k].size(); ++r)
      if (less(n, u[k][r], t[k][r])) return false;
  }
  return true;
}

std::string letter_str(int x) {
  if (x > 0) return std::to_string(x);
  return std::to_string(-x) + "̄";
}

std::string pretty(const Tableau& t) {
  std::ostringstream os;
  std::size_t h = 0;
  for (const auto& c : t) h = std::max(h, c.size());
  for (std::size_t r = 0; r < h; ++r) {
    bool first = true;
    for (const auto& c : t) {
      if (r >= c.size()) break;
      os << (first ? "" : " ") << letter_str(c[r]);
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace kc::type_c
