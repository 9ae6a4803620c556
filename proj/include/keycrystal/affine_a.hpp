#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "keycrystal/crystal.hpp"
#include "keycrystal/type_a.hpp"

namespace kc::affine {

// e = infinity: no residue arithmetic, colours are the integers.
constexpr int kInfinity = 0;

// Order in which the {A,R}-word of colour i is read. Increasing: positions
// upward, runners l..1 within a position. Decreasing is the exact reverse.
// Both give crystals isomorphic to B(Lambda_s) with the same orbit; the
// component of the empty level-1 symbol consists of the e-regular partitions
// for Increasing and the e-restricted ones for Decreasing.
enum class Reading { Increasing, Decreasing };

using Partition = std::vector<int>;
using Multipartition = std::vector<Partition>;
using Charge = std::vector<int>;

int mod(int x, int e);
int rank(const Partition& p);
int rank(const Multipartition& p);
bool is_partition(const Partition& p);
Partition transpose(const Partition& p);
bool contains(const Partition& big, const Partition& small);
bool is_e_regular(const Partition& p, int e);
std::vector<Partition> partitions(int n);
std::vector<Multipartition> multipartitions(int l, int n);
std::vector<Multipartition> multipartitions_up_to(int l, int n);
std::string str(const Partition& p);
std::string str(const Multipartition& p);

// Cofinite set of beads: every position below lo() is black, beads() lists the
// black positions from lo() upward. The window is kept minimal, so equal sets
// compare equal.
class Symbol {
 public:
  Symbol() = default;
  static Symbol of(const Partition& p, int charge);
  static Symbol from_set(int lo, std::vector<int> beads);

  int charge() const { return lo_ - 1 + static_cast<int>(beads_.size()); }
  Partition partition() const;
  int lo() const { return lo_; }
  int hi() const { return beads_.empty() ? lo_ - 1 : beads_.back(); }
  const std::vector<int>& beads() const { return beads_; }
  bool contains(int x) const;
  std::vector<int> beads_in(int lo, int hi) const;
  Symbol moved(int from, int to) const;
  Symbol shifted(int k) const;
  // {1 - x : x not in S}, the symbol of the transposed partition at charge -s.
  Symbol conjugate() const;
  bool subset_of(const Symbol& o) const;

  auto operator<=>(const Symbol&) const = default;

 private:
  int lo_ = 1;
  std::vector<int> beads_;
};

std::string abacus(const Symbol& s, int lo, int hi);
std::string abacus(const std::vector<Symbol>& runners, int lo, int hi);
std::vector<Symbol> multisymbol(const Multipartition& p, const Charge& s);

// A at x: x black, x+1 white. R at x: x white, x+1 black.
struct Letter {
  int x;
  int runner;
  bool add;
};
std::vector<Letter> letters(const std::vector<Symbol>& runners, int i, int e, Reading r = Reading::Increasing);

Weight residue_weight(const CartanDatum& d, const Multipartition& p, const Charge& s);

class Level1Crystal {
 public:
  using Vertex = Symbol;

  Level1Crystal(int e, int charge, Reading r = Reading::Decreasing);

  const CartanDatum& datum() const { return datum_; }
  int e() const { return e_; }
  int charge() const { return charge_; }
  Reading reading() const { return r_; }
  Vertex highest() const { return Symbol::of({}, charge_); }
  Weight highest_weight() const;

  std::optional<Vertex> f(int i, const Vertex& s) const;
  std::optional<Vertex> e(int i, const Vertex& s) const;
  int epsilon(int i, const Vertex& s) const;
  int phi(int i, const Vertex& s) const;
  Weight weight(const Vertex& s) const;

 private:
  CartanDatum datum_;
  int e_;
  int charge_;
  Reading r_;
};

std::optional<Symbol> level1_f(int i, const Symbol& s, int e, Reading r = Reading::Decreasing);
std::optional<Symbol> level1_e(int i, const Symbol& s, int e, Reading r = Reading::Decreasing);

// ARWord: repeatedly remove every i-node for some i whose word is all R, until
// the empty partition is reached. ARWordPurity only asks every word to be all A
// or all R; it holds on cores but also on some non-cores, e.g. (3) for e = 2.
enum class CoreMode { Hook, ARWord, BetaShift, AbacusInclusion, ARWordPurity };
bool is_e_core(const Partition& p, int e, CoreMode mode);
bool is_e_core(const Partition& p, int e);

// Decreasing: needs an e-restricted partition. Increasing: e-regular, computed through conjugation.
Symbol level1_key_right(const Symbol& s, int e, std::vector<std::pair<int, int>>* steps = nullptr,
                        Reading r = Reading::Decreasing);

class UglovCrystal {
 public:
  using Vertex = Multipartition;

  UglovCrystal(int e, Charge s, Reading r = Reading::Increasing);

  const CartanDatum& datum() const { return datum_; }
  int e() const { return e_; }
  const Charge& charge() const { return s_; }
  Reading reading() const { return r_; }
  Vertex highest() const { return Multipartition(s_.size()); }
  Weight highest_weight() const;

  std::optional<Vertex> f(int i, const Vertex& p) const;
  std::optional<Vertex> e(int i, const Vertex& p) const;
  int epsilon(int i, const Vertex& p) const;
  int phi(int i, const Vertex& p) const;
  Weight weight(const Vertex& p) const;

 private:
  CartanDatum datum_;
  int e_;
  Charge s_;
  Reading r_;
};

std::optional<Multipartition> uglov_f(int i, const Multipartition& p, int e, const Charge& s,
                                      Reading r = Reading::Increasing);
std::optional<Multipartition> uglov_e(int i, const Multipartition& p, int e, const Charge& s,
                                      Reading r = Reading::Increasing);

// Rank-bounded vertex filter for BFS in the infinite crystals.
struct RankAtMost {
  int n;
  bool operator()(const Multipartition& p) const { return rank(p) <= n; }
  bool operator()(const Symbol& s) const { return rank(s.partition()) <= n; }
  template <class V>
  bool operator()(const std::vector<V>& t) const {
    int r = 0;
    for (const auto& x : t) r += rank(x.partition());
    return r <= n;
  }
};

bool is_es_core(const Multipartition& p, int e, const Charge& s);
bool orbit_check(const std::vector<Symbol>& runners, int e);
std::pair<Multipartition, Charge> transpose_core(const Multipartition& p, int e, const Charge& s);

struct BStatistics {
  std::vector<std::vector<int>> b;  // b[i][j]
  bool consistent = true;
};
BStatistics b_statistics(const Multipartition& p, int e, const Charge& s);

bool multipartition_bruhat(const Multipartition& p, const Multipartition& q);

// All addable i-nodes added at once.
Multipartition add_all_addable(const Multipartition& p, int i, int e, const Charge& s);

// Multicharge t with t_j = s_j mod e and t_j - t_{j-1} >= n + e + 1 + extra.
Charge spread_charge(const Charge& s, int e, int n, int extra = 0);

class KleshchevCrystal {
 public:
  using Vertex = Multipartition;

  KleshchevCrystal(int e, Charge s, int window, int extra_spread = 0, Reading r = Reading::Increasing);

  const CartanDatum& datum() const { return uglov_.datum(); }
  const Charge& charge() const { return s_; }
  const Charge& spread() const { return uglov_.charge(); }
  int window() const { return n_; }
  Reading reading() const { return uglov_.reading(); }
  Vertex highest() const { return uglov_.highest(); }
  Weight highest_weight() const;

  std::optional<Vertex> f(int i, const Vertex& p) const;
  std::optional<Vertex> e(int i, const Vertex& p) const;
  int epsilon(int i, const Vertex& p) const;
  int phi(int i, const Vertex& p) const;
  Weight weight(const Vertex& p) const;

 private:
  void check(const Vertex& p) const;
  Charge s_;
  int n_;
  UglovCrystal uglov_;
};

std::optional<Multipartition> kleshchev_f(int i, const Multipartition& p, const Charge& s, int e, int n,
                                          Reading r = Reading::Increasing);
std::optional<Multipartition> kleshchev_e(int i, const Multipartition& p, const Charge& s, int e, int n,
                                          Reading r = Reading::Increasing);

// The same crystal as an explicit tensor product of level-1 crystals, factors in reading
// order: runners 1..l when increasing, l..1 when decreasing.
Tensor<Level1Crystal> kleshchev_tensor(int e, const Charge& s, Reading r = Reading::Increasing);
std::vector<Symbol> tensor_order(const Multipartition& p, const Charge& s, Reading r = Reading::Increasing);
Multipartition from_tensor_order(const std::vector<Symbol>& t, Reading r = Reading::Increasing);
std::vector<Symbol> to_symbols(const Multipartition& p, const Charge& s);
Multipartition to_multipartition(const std::vector<Symbol>& t);

// Two-runner sl_infinity R-matrix: (p1,p2) at charges (c1,c2) -> charges (c2,c1).
Multipartition swap_runners(const Multipartition& p, int c1, int c2, Reading r = Reading::Increasing);

struct RMatrixTrace {
  int k = 0;
  int iterations = 0;
  std::vector<std::pair<Multipartition, Charge>> steps;
};

// R: B(Lambda_{s1}) (x) B(Lambda_{s2}) -> B(Lambda_{s2}) (x) B(Lambda_{s1}) in the Kleshchev realization.
Multipartition fundamental_rmatrix(const Multipartition& b, int s1, int s2, int e, int n,
                                   RMatrixTrace* trace = nullptr, int iterations = -1,
                                   Reading r = Reading::Increasing);

Multipartition higher_level_key_right(const Multipartition& p, const Charge& s, int e, int n,
                                      Reading r = Reading::Increasing);

struct CoreLattice {
  std::vector<Multipartition> nodes;
  std::vector<std::tuple<std::size_t, std::size_t, int>> arrows;  // from, to, colour
};
CoreLattice core_lattice(int e, const Charge& s, int rank_bound);

// sl_infinity on a finite window of colours [lo, hi): runner symbols truncated to
// type A columns, tensored in reading order (runners l..1 for Increasing).
struct InfWindow {
  int lo;
  int hi;
  static InfWindow around(const Charge& s, int rank_bound);
  int n() const { return hi - lo; }
  int node(int colour) const { return colour - lo + 1; }
  int colour(int node) const { return node + lo - 1; }
};
type_a::TableauCrystal window_crystal(const InfWindow& w, const Charge& s, Reading r = Reading::Increasing);
type_a::Tableau to_window(const Multipartition& p, const Charge& s, const InfWindow& w,
                          Reading r = Reading::Increasing);
Multipartition from_window(const type_a::Tableau& t, const Charge& s, const InfWindow& w,
                           Reading r = Reading::Increasing);

std::optional<Multipartition> uglov_f_inf(int j, const Multipartition& p, const Charge& s,
                                          Reading r = Reading::Increasing);
std::optional<Multipartition> uglov_e_inf(int j, const Multipartition& p, const Charge& s,
                                          Reading r = Reading::Increasing);

}  // namespace kc::affine
