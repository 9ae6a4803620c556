#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kc {

enum class Kind { FiniteA, FiniteC, AffineA };

// Pairings <gamma, h_i> indexed by node position, plus the pairing with d.
struct Weight {
  std::vector<int> pair;
  int degree = 0;

  Weight() = default;
  explicit Weight(std::size_t n) : pair(n, 0) {}
  Weight(std::vector<int> p, int d = 0) : pair(std::move(p)), degree(d) {}

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a);
  Weight operator-() const;

  bool is_zero() const;
  auto operator<=>(const Weight&) const = default;
  std::string str() const;
};

class CartanDatum {
 public:
  static CartanDatum finite_a(int n);
  static CartanDatum finite_c(int n);
  static CartanDatum affine_a(int e);
  // "A:n", "C:n", "A~:e"
  static CartanDatum parse(std::string_view tag);

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<int>& nodes() const { return nodes_; }
  bool has_node(int i) const;
  int pos(int node) const;
  int node(int pos) const { return nodes_[pos]; }
  std::string tag() const;

  // a_ij = <alpha_j, h_i>
  int cartan(int i, int j) const;
  // <alpha_i, h_j>
  int pairing(int i, int j) const { return cartan(j, i); }

  Weight zero() const { return Weight(nodes_.size()); }
  Weight alpha(int i) const;
  Weight omega(int i) const;
  Weight rho() const;
  int level(const Weight& w) const;

  bool operator==(const CartanDatum& o) const { return kind_ == o.kind_ && rank_ == o.rank_; }

 private:
  CartanDatum(Kind k, int r);
  Kind kind_;
  int rank_;
  std::vector<int> nodes_;
  std::vector<std::vector<int>> a_;
};

Weight reflect(const CartanDatum& d, int i, const Weight& g);
bool is_dominant(const Weight& w);
// Conjugate into the dominant chamber by simple reflections.
Weight dominant_conjugate(const CartanDatum& d, Weight w);

class WeightPolynomial {
 public:
  WeightPolynomial() = default;
  static WeightPolynomial monomial(const Weight& w, long c = 1);

  void add(const Weight& w, long c);
  WeightPolynomial& operator+=(const WeightPolynomial& o);
  friend WeightPolynomial operator+(WeightPolynomial a, const WeightPolynomial& b) { return a += b; }
  WeightPolynomial shifted(const Weight& w) const;
  long coefficient(const Weight& w) const;
  long total() const;
  std::size_t size() const { return terms_.size(); }
  const std::map<Weight, long>& terms() const { return terms_; }
  bool operator==(const WeightPolynomial& o) const { return terms_ == o.terms_; }

 private:
  std::map<Weight, long> terms_;
};

}  // namespace kc
