#include "keycrystal/cartan.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace kc {

Weight& Weight::operator+=(const Weight& o) {
  if (pair.size() != o.pair.size()) throw std::invalid_argument("weight size mismatch");
  for (std::size_t i = 0; i < pair.size(); ++i) pair[i] += o.pair[i];
  degree += o.degree;
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (pair.size() != o.pair.size()) throw std::invalid_argument("weight size mismatch");
  for (std::size_t i = 0; i < pair.size(); ++i) pair[i] -= o.pair[i];
  degree -= o.degree;
  return *this;
}

Weight operator*(int k, Weight a) {
  for (auto& x : a.pair) x *= k;
  a.degree *= k;
  return a;
}

Weight Weight::operator-() const { return -1 * *this; }

bool Weight::is_zero() const {
  return degree == 0 && std::all_of(pair.begin(), pair.end(), [](int x) { return x == 0; });
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < pair.size(); ++i) os << (i ? "," : "") << pair[i];
  os << ')';
  if (degree != 0) os << "d" << degree;
  return os.str();
}

CartanDatum::CartanDatum(Kind k, int r) : kind_(k), rank_(r) {
  const int n = r;
  if (k == Kind::AffineA) {
    if (r < 2) throw std::invalid_argument("affine type needs e >= 2");
    for (int i = 0; i < r; ++i) nodes_.push_back(i);
  } else {
    if (r < 1) throw std::invalid_argument("rank must be positive");
    for (int i = 1; i <= r; ++i) nodes_.push_back(i);
  }
  a_.assign(n, std::vector<int>(n, 0));
  for (int p = 0; p < n; ++p) a_[p][p] = 2;
  if (k == Kind::AffineA) {
    if (r == 2) {
      a_[0][1] = a_[1][0] = -2;
    } else {
      for (int p = 0; p < n; ++p) {
        a_[p][(p + 1) % n] = -1;
        a_[p][(p + n - 1) % n] = -1;
      }
    }
  } else {
    for (int p = 0; p + 1 < n; ++p) a_[p][p + 1] = a_[p + 1][p] = -1;
    if (k == Kind::FiniteC && n >= 2) a_[n - 2][n - 1] = -2;
  }
}

CartanDatum CartanDatum::finite_a(int n) { return CartanDatum(Kind::FiniteA, n); }
CartanDatum CartanDatum::finite_c(int n) { return CartanDatum(Kind::FiniteC, n); }
CartanDatum CartanDatum::affine_a(int e) { return CartanDatum(Kind::AffineA, e); }

CartanDatum CartanDatum::parse(std::string_view tag) {
  auto colon = tag.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("bad datum tag: " + std::string(tag));
  auto head = tag.substr(0, colon);
  auto tail = tag.substr(colon + 1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), v);
  if (ec != std::errc() || ptr != tail.data() + tail.size())
    throw std::invalid_argument("bad datum tag: " + std::string(tag));
  if (head == "A") return finite_a(v);
  if (head == "C") return finite_c(v);
  if (head == "A~") return affine_a(v);
  throw std::invalid_argument("bad datum tag: " + std::string(tag));
}

std::string CartanDatum::tag() const {
  switch (kind_) {
    case Kind::FiniteA: return "A:" + std::to_string(rank_);
    case Kind::FiniteC: return "C:" + std::to_string(rank_);
    case Kind::AffineA: return "A~:" + std::to_string(rank_);
  }
  return {};
}

bool CartanDatum::has_node(int i) const {
  return std::find(nodes_.begin(), nodes_.end(), i) != nodes_.end();
}

int CartanDatum::pos(int node) const {
  int p = (kind_ == Kind::AffineA) ? node : node - 1;
  if (p < 0 || p >= size()) throw std::out_of_range("unknown node " + std::to_string(node));
  return p;
}

int CartanDatum::cartan(int i, int j) const { return a_[pos(i)][pos(j)]; }

Weight CartanDatum::alpha(int i) const {
  Weight w = zero();
  int p = pos(i);
  for (int q = 0; q < size(); ++q) w.pair[q] = a_[q][p];
  if (kind_ == Kind::AffineA && i == 0) w.degree = 1;
  return w;
}

Weight CartanDatum::omega(int i) const {
  Weight w = zero();
  w.pair[pos(i)] = 1;
  return w;
}

Weight CartanDatum::rho() const {
  Weight w = zero();
  std::fill(w.pair.begin(), w.pair.end(), 1);
  return w;
}

int CartanDatum::level(const Weight& w) const {
  int s = 0;
  for (int x : w.pair) s += x;
  return s;
}

Weight reflect(const CartanDatum& d, int i, const Weight& g) {
  int k = g.pair.at(d.pos(i));
  if (k == 0) return g;
  return g - k * d.alpha(i);
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.pair.begin(), w.pair.end(), [](int x) { return x >= 0; });
}

Weight dominant_conjugate(const CartanDatum& d, Weight w) {
  if (d.kind() == Kind::AffineA && d.level(w) <= 0 && !w.is_zero()) {
    if (d.level(w) < 0 || !is_dominant(w))
      throw std::domain_error("no dominant conjugate for weight of non-positive level");
  }
  for (;;) {
    int bad = -1;
    for (int p = 0; p < d.size(); ++p)
      if (w.pair[p] < 0) { bad = p; break; }
    if (bad < 0) return w;
    w = reflect(d, d.node(bad), w);
  }
}

WeightPolynomial WeightPolynomial::monomial(const Weight& w, long c) {
  WeightPolynomial p;
  p.add(w, c);
  return p;
}

void WeightPolynomial::add(const Weight& w, long c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else if ((it->second += c) == 0) {
    terms_.erase(it);
  }
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

WeightPolynomial WeightPolynomial::shifted(const Weight& s) const {
  WeightPolynomial p;
  for (const auto& [w, c] : terms_) p.add(w + s, c);
  return p;
}

long WeightPolynomial::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

long WeightPolynomial::total() const {
  long t = 0;
  for (const auto& [w, c] : terms_) t += c;
  return t;
}

}  // namespace kc
