#include "keycrystal/affine_a.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kc::affine {

int mod(int x, int e) { return ((x % e) + e) % e; }

int rank(const Partition& p) {
  int r = 0;
  for (int x : p) r += x;
  return r;
}

int rank(const Multipartition& p) {
  int r = 0;
  for (const auto& x : p) r += rank(x);
  return r;
}

bool is_partition(const Partition& p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0) return false;
    if (k && p[k] > p[k - 1]) return false;
  }
  return true;
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int c = 1; c <= p.front(); ++c) {
    int k = 0;
    while (k < static_cast<int>(p.size()) && p[k] >= c) ++k;
    t.push_back(k);
  }
  return t;
}

bool contains(const Partition& big, const Partition& small) {
  if (small.size() > big.size()) return false;
  for (std::size_t k = 0; k < small.size(); ++k)
    if (small[k] > big[k]) return false;
  return true;
}

bool is_e_regular(const Partition& p, int e) {
  if (e == kInfinity) return true;
  for (std::size_t k = 0; k + e <= p.size(); ++k)
    if (p[k] == p[k + e - 1]) return false;
  return true;
}

namespace {

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

void multi_rec(int l, int n, Multipartition& cur, std::vector<Multipartition>& out) {
  if (static_cast<int>(cur.size()) == l - 1) {
    for (const auto& p : partitions(n)) {
      cur.push_back(p);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int k = 0; k <= n; ++k) {
    for (const auto& p : partitions(k)) {
      cur.push_back(p);
      multi_rec(l, n - k, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Multipartition> multipartitions(int l, int n) {
  std::vector<Multipartition> out;
  Multipartition cur;
  multi_rec(l, n, cur, out);
  return out;
}

std::vector<Multipartition> multipartitions_up_to(int l, int n) {
  std::vector<Multipartition> out;
  for (int k = 0; k <= n; ++k) {
    auto m = multipartitions(l, k);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

std::string str(const Partition& p) {
  if (p.empty()) return "∅";
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "." : "") + std::to_string(p[k]);
  return s;
}

std::string str(const Multipartition& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? ", " : "") + str(p[k]);
  return s + ")";
}

Symbol Symbol::of(const Partition& p, int charge) {
  if (!is_partition(p)) throw std::invalid_argument("not a partition");
  Symbol s;
  const int l = static_cast<int>(p.size());
  s.lo_ = charge - l + 1;
  s.beads_.resize(l);
  for (int i = 1; i <= l; ++i) s.beads_[l - i] = p[i - 1] - i + 1 + charge;
  return s;
}

Symbol Symbol::from_set(int lo, std::vector<int> beads) {
  std::sort(beads.begin(), beads.end());
  beads.erase(std::unique(beads.begin(), beads.end()), beads.end());
  beads.erase(beads.begin(), std::lower_bound(beads.begin(), beads.end(), lo));
  std::size_t k = 0;
  while (k < beads.size() && beads[k] == lo) {
    ++lo;
    ++k;
  }
  Symbol s;
  s.lo_ = lo;
  s.beads_.assign(beads.begin() + static_cast<long>(k), beads.end());
  return s;
}

Partition Symbol::partition() const {
  const int c = charge();
  const int l = static_cast<int>(beads_.size());
  Partition p(l);
  for (int i = 1; i <= l; ++i) p[i - 1] = beads_[l - i] - (c - i + 1);
  return p;
}

bool Symbol::contains(int x) const { return x < lo_ || std::binary_search(beads_.begin(), beads_.end(), x); }

std::vector<int> Symbol::beads_in(int lo, int hi) const {
  std::vector<int> v;
  for (int x = lo; x <= hi; ++x)
    if (contains(x)) v.push_back(x);
  return v;
}

Symbol Symbol::moved(int from, int to) const {
  if (!contains(from) || contains(to)) throw std::logic_error("invalid bead move");
  int L = std::min({lo_, from, to}) - 1;
  int H = std::max({hi(), from, to});
  auto v = beads_in(L, H);
  v.erase(std::find(v.begin(), v.end(), from));
  v.push_back(to);
  return from_set(L, std::move(v));
}

Symbol Symbol::shifted(int k) const {
  Symbol s = *this;
  s.lo_ += k;
  for (auto& x : s.beads_) x += k;
  return s;
}

Symbol Symbol::conjugate() const {
  const int L = -hi();
  std::vector<int> beads{L};
  for (int x = lo_; x <= hi(); ++x)
    if (!contains(x)) beads.push_back(1 - x);
  return from_set(L, std::move(beads));
}

bool Symbol::subset_of(const Symbol& o) const {
  if (lo_ > o.lo_) return false;
  return std::all_of(beads_.begin(), beads_.end(), [&](int x) { return o.contains(x); });
}

std::string abacus(const Symbol& s, int lo, int hi) {
  std::string out;
  for (int x = lo; x <= hi; ++x) {
    if (x == 1) out += "|";
    out += s.contains(x) ? "●" : "○";
  }
  return out;
}

std::string abacus(const std::vector<Symbol>& runners, int lo, int hi) {
  std::ostringstream os;
  for (auto it = runners.rbegin(); it != runners.rend(); ++it) os << abacus(*it, lo, hi) << '\n';
  std::string axis;
  for (int x = lo; x <= hi; ++x) {
    if (x == 1) axis += "|";
    axis += x == 0 ? "0" : "-";
  }
  os << axis << '\n';
  return os.str();
}

std::vector<Symbol> multisymbol(const Multipartition& p, const Charge& s) {
  if (p.size() != s.size()) throw std::invalid_argument("multicharge length mismatch");
  std::vector<Symbol> out;
  for (std::size_t k = 0; k < p.size(); ++k) out.push_back(Symbol::of(p[k], s[k]));
  return out;
}

std::vector<Letter> letters(const std::vector<Symbol>& runners, int i, int e, Reading r) {
  std::vector<Letter> out;
  auto scan = [&](int x) {
    for (int k = static_cast<int>(runners.size()) - 1; k >= 0; --k) {
      const auto& s = runners[k];
      bool here = s.contains(x), next = s.contains(x + 1);
      if (here && !next) out.push_back({x, k, true});
      if (!here && next) out.push_back({x, k, false});
    }
  };
  if (e == kInfinity) {
    scan(i);
    if (r == Reading::Decreasing) std::reverse(out.begin(), out.end());
    return out;
  }
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& s : runners) {
    lo = first ? s.lo() - 1 : std::min(lo, s.lo() - 1);
    hi = first ? s.hi() : std::max(hi, s.hi());
    first = false;
  }
  for (int x = lo + mod(i - lo, e); x <= hi; x += e) scan(x);
  if (r == Reading::Decreasing) std::reverse(out.begin(), out.end());
  return out;
}

namespace {

Bracket letter_bracket(const std::vector<Letter>& w) {
  std::vector<std::pair<int, int>> ep;
  ep.reserve(w.size());
  for (const auto& l : w) ep.emplace_back(l.add ? 0 : 1, l.add ? 1 : 0);
  return bracket(ep);
}

std::optional<std::vector<Symbol>> act(std::vector<Symbol> runners, int i, int e, Reading rd, bool lower) {
  auto w = letters(runners, i, e, rd);
  auto b = letter_bracket(w);
  int at = lower ? b.f_at : b.e_at;
  if (at < 0) return std::nullopt;
  const auto& l = w[at];
  auto& s = runners[l.runner];
  s = lower ? s.moved(l.x, l.x + 1) : s.moved(l.x + 1, l.x);
  return runners;
}

Multipartition partitions_of(const std::vector<Symbol>& r) {
  Multipartition p;
  for (const auto& s : r) p.push_back(s.partition());
  return p;
}

}  // namespace

Weight residue_weight(const CartanDatum& d, const Multipartition& p, const Charge& s) {
  const int e = d.rank();
  Weight w = d.zero();
  for (std::size_t k = 0; k < p.size(); ++k) {
    w += d.omega(mod(s[k], e));
    for (std::size_t r = 0; r < p[k].size(); ++r)
      for (int c = 0; c < p[k][r]; ++c) w -= d.alpha(mod(c - static_cast<int>(r) + s[k], e));
  }
  return w;
}

Level1Crystal::Level1Crystal(int e, int charge, Reading r)
    : datum_(CartanDatum::affine_a(e)), e_(e), charge_(charge), r_(r) {}

Weight Level1Crystal::highest_weight() const { return datum_.omega(mod(charge_, e_)); }

std::optional<Symbol> level1_f(int i, const Symbol& s, int e, Reading rd) {
  auto r = act({s}, i, e, rd, true);
  if (!r) return std::nullopt;
  return r->front();
}

std::optional<Symbol> level1_e(int i, const Symbol& s, int e, Reading rd) {
  auto r = act({s}, i, e, rd, false);
  if (!r) return std::nullopt;
  return r->front();
}

std::optional<Symbol> Level1Crystal::f(int i, const Symbol& s) const {
  datum_.pos(i);
  return level1_f(i, s, e_, r_);
}

std::optional<Symbol> Level1Crystal::e(int i, const Symbol& s) const {
  datum_.pos(i);
  return level1_e(i, s, e_, r_);
}

int Level1Crystal::epsilon(int i, const Symbol& s) const { return letter_bracket(letters({s}, i, e_, r_)).eps; }
int Level1Crystal::phi(int i, const Symbol& s) const { return letter_bracket(letters({s}, i, e_, r_)).phi; }

Weight Level1Crystal::weight(const Symbol& s) const {
  return residue_weight(datum_, {s.partition()}, {s.charge()});
}

bool is_e_core(const Partition& p, int e, CoreMode mode) {
  switch (mode) {
    case CoreMode::Hook: {
      auto t = transpose(p);
      for (int r = 0; r < static_cast<int>(p.size()); ++r)
        for (int c = 0; c < p[r]; ++c)
          if (p[r] - c + t[c] - r - 1 == e) return false;
      return true;
    }
    case CoreMode::ARWordPurity: {
      auto s = Symbol::of(p, 0);
      for (int i = 0; i < e; ++i) {
        bool a = false, r = false;
        for (const auto& l : letters({s}, i, e)) (l.add ? a : r) = true;
        if (a && r) return false;
      }
      return true;
    }
    case CoreMode::ARWord: {
      auto s = Symbol::of(p, 0);
      while (!s.partition().empty()) {
        bool moved = false;
        for (int i = 0; i < e && !moved; ++i) {
          auto w = letters({s}, i, e);
          if (w.empty() || std::any_of(w.begin(), w.end(), [](const Letter& l) { return l.add; })) continue;
          for (const auto& l : w) s = s.moved(l.x + 1, l.x);
          moved = true;
        }
        if (!moved) return false;
      }
      return true;
    }
    case CoreMode::BetaShift: {
      auto s = Symbol::of(p, 0);
      return std::all_of(s.beads().begin(), s.beads().end(), [&](int x) { return s.contains(x - e); });
    }
    case CoreMode::AbacusInclusion:
      return Symbol::of(p, 0).subset_of(Symbol::of(p, e));
  }
  return false;
}

bool is_e_core(const Partition& p, int e) {
  bool h = is_e_core(p, e, CoreMode::Hook);
  if (is_e_core(p, e, CoreMode::ARWord) != h || is_e_core(p, e, CoreMode::BetaShift) != h ||
      is_e_core(p, e, CoreMode::AbacusInclusion) != h)
    throw std::logic_error("e-core characterizations disagree on " + str(p));
  return h;
}

Symbol level1_key_right(const Symbol& s0, int e, std::vector<std::pair<int, int>>* steps, Reading rd) {
  if (rd == Reading::Increasing) {
    if (!is_e_regular(s0.partition(), e)) throw std::invalid_argument("level1_key_right needs an e-regular partition");
    std::vector<std::pair<int, int>> conj;
    auto k = level1_key_right(s0.conjugate(), e, steps ? &conj : nullptr, Reading::Decreasing);
    if (steps)
      for (auto [p, q] : conj) steps->emplace_back(1 - p, 1 - q);
    return k.conjugate();
  }
  const Partition p0 = s0.partition();
  if (!is_e_regular(transpose(p0), e))
    throw std::invalid_argument("level1_key_right needs an e-restricted partition");
  Symbol s = s0;
  const int bound = rank(p0) * e + 1;
  for (int iter = 0;; ++iter) {
    if (iter > bound) throw std::logic_error("level1_key_right exceeded its iteration bound");
    int p = 0;
    bool found = false;
    for (int x : s.beads())
      if (!s.contains(x - e)) {
        p = x;
        found = true;
      }
    if (!found) return s;
    int q = p + 1;
    const int limit = s.hi() + 2 * e + 1;
    while (q <= limit && (s.contains(q) || !s.contains(q - e) || mod(q, e) == mod(p, e))) ++q;
    if (q > limit) throw std::logic_error("level1_key_right found no target position");
    if (steps) steps->emplace_back(p, q);
    s = s.moved(p, q);
  }
}

UglovCrystal::UglovCrystal(int e, Charge s, Reading r)
    : datum_(CartanDatum::affine_a(e)), e_(e), s_(std::move(s)), r_(r) {
  if (s_.empty()) throw std::invalid_argument("empty multicharge");
}

Weight UglovCrystal::highest_weight() const { return residue_weight(datum_, highest(), s_); }

std::optional<Multipartition> uglov_f(int i, const Multipartition& p, int e, const Charge& s, Reading rd) {
  auto r = act(multisymbol(p, s), i, e, rd, true);
  if (!r) return std::nullopt;
  return partitions_of(*r);
}

std::optional<Multipartition> uglov_e(int i, const Multipartition& p, int e, const Charge& s, Reading rd) {
  auto r = act(multisymbol(p, s), i, e, rd, false);
  if (!r) return std::nullopt;
  return partitions_of(*r);
}

std::optional<Multipartition> uglov_f_inf(int j, const Multipartition& p, const Charge& s, Reading r) {
  return uglov_f(j, p, kInfinity, s, r);
}

std::optional<Multipartition> uglov_e_inf(int j, const Multipartition& p, const Charge& s, Reading r) {
  return uglov_e(j, p, kInfinity, s, r);
}

std::optional<Multipartition> UglovCrystal::f(int i, const Multipartition& p) const {
  datum_.pos(i);
  return uglov_f(i, p, e_, s_, r_);
}

std::optional<Multipartition> UglovCrystal::e(int i, const Multipartition& p) const {
  datum_.pos(i);
  return uglov_e(i, p, e_, s_, r_);
}

int UglovCrystal::epsilon(int i, const Multipartition& p) const {
  return letter_bracket(letters(multisymbol(p, s_), i, e_, r_)).eps;
}

int UglovCrystal::phi(int i, const Multipartition& p) const {
  return letter_bracket(letters(multisymbol(p, s_), i, e_, r_)).phi;
}

Weight UglovCrystal::weight(const Multipartition& p) const { return residue_weight(datum_, p, s_); }

bool is_es_core(const Multipartition& p, int e, const Charge& s) {
  if (p.size() != s.size()) throw std::invalid_argument("multicharge length mismatch");
  const std::size_t l = p.size();
  if (e == kInfinity) {
    for (std::size_t a = 0; a < l; ++a)
      for (std::size_t b = 0; b < l; ++b)
        if (a != b && s[a] <= s[b] && !Symbol::of(p[a], s[a]).subset_of(Symbol::of(p[b], s[b]))) return false;
    return true;
  }
  if (l == 1) return Symbol::of(p[0], 0).subset_of(Symbol::of(p[0], e));
  for (std::size_t a = 0; a < l; ++a) {
    for (std::size_t b = a + 1; b < l; ++b) {
      int d = mod(s[b] - s[a], e);
      auto la = Symbol::of(p[a], 0);
      auto lb = Symbol::of(p[b], d);
      auto la_e = Symbol::of(p[a], e);
      if (!la.subset_of(lb) || !lb.subset_of(la_e)) return false;
    }
  }
  return true;
}

bool orbit_check(const std::vector<Symbol>& runners, int e) {
  Multipartition p;
  Charge s;
  for (const auto& r : runners) {
    p.push_back(r.partition());
    s.push_back(r.charge());
  }
  return is_es_core(p, e, s);
}

std::pair<Multipartition, Charge> transpose_core(const Multipartition& p, int e, const Charge& s) {
  if (!is_es_core(p, e, s)) throw std::invalid_argument("transpose_core needs an (e,s)-core");
  Multipartition q;
  Charge t;
  for (std::size_t k = p.size(); k-- > 0;) {
    q.push_back(transpose(p[k]));
    t.push_back(-s[k]);
  }
  return {q, t};
}

BStatistics b_statistics(const Multipartition& p, int e, const Charge& s) {
  BStatistics out;
  const std::size_t l = p.size();
  out.b.assign(e, std::vector<int>(l, 0));
  for (std::size_t j = 0; j < l; ++j) {
    auto sym = Symbol::of(p[j], mod(s[j], e));
    for (int i = 0; i < e; ++i) {
      int x = sym.hi() + e;
      while (!(sym.contains(x) && mod(x, e) == i)) --x;
      out.b[i][j] = x;
    }
  }
  for (int i = 0; i < e; ++i) {
    auto [lo, hi] = std::minmax_element(out.b[i].begin(), out.b[i].end());
    if (*hi - *lo > e) out.consistent = false;
  }
  return out;
}

bool multipartition_bruhat(const Multipartition& p, const Multipartition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("multipartition_bruhat: level mismatch");
  for (std::size_t k = 0; k < p.size(); ++k)
    if (!contains(q[k], p[k])) return false;
  return true;
}

Multipartition add_all_addable(const Multipartition& p, int i, int e, const Charge& s) {
  Multipartition q = p;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto& la = p[k];
    const int len = static_cast<int>(la.size());
    for (int r = 0; r <= len; ++r) {
      int cur = r < len ? la[r] : 0;
      if (r > 0 && la[r - 1] <= cur) continue;
      int content = cur - r + s[k];
      bool hit = e == kInfinity ? content == i : mod(content, e) == i;
      if (!hit) continue;
      if (r < len)
        ++q[k][r];
      else
        q[k].push_back(1);
    }
  }
  return q;
}

Charge spread_charge(const Charge& s, int e, int n, int extra) {
  const int gap = n + e + 1 + extra;
  Charge t(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j == 0) {
      t[j] = mod(s[j], e);
    } else {
      t[j] = t[j - 1] + gap;
      t[j] += mod(s[j] - t[j], e);
    }
  }
  return t;
}

KleshchevCrystal::KleshchevCrystal(int e, Charge s, int window, int extra_spread, Reading r)
    : s_(s), n_(window), uglov_(e, spread_charge(s, e, window, extra_spread), r) {}

Weight KleshchevCrystal::highest_weight() const { return residue_weight(datum(), highest(), s_); }

void KleshchevCrystal::check(const Multipartition& p) const {
  if (rank(p) > n_) throw CrystalError("rank window exceeded");
}

std::optional<Multipartition> KleshchevCrystal::f(int i, const Multipartition& p) const {
  check(p);
  return uglov_.f(i, p);
}

std::optional<Multipartition> KleshchevCrystal::e(int i, const Multipartition& p) const {
  check(p);
  return uglov_.e(i, p);
}

int KleshchevCrystal::epsilon(int i, const Multipartition& p) const {
  check(p);
  return uglov_.epsilon(i, p);
}

int KleshchevCrystal::phi(int i, const Multipartition& p) const {
  check(p);
  return uglov_.phi(i, p);
}

Weight KleshchevCrystal::weight(const Multipartition& p) const { return residue_weight(datum(), p, s_); }

std::optional<Multipartition> kleshchev_f(int i, const Multipartition& p, const Charge& s, int e, int n,
                                          Reading r) {
  return KleshchevCrystal(e, s, n, 0, r).f(i, p);
}

std::optional<Multipartition> kleshchev_e(int i, const Multipartition& p, const Charge& s, int e, int n,
                                          Reading r) {
  return KleshchevCrystal(e, s, n, 0, r).e(i, p);
}

Tensor<Level1Crystal> kleshchev_tensor(int e, const Charge& s, Reading r) {
  std::vector<Level1Crystal> f;
  for (int c : s) f.emplace_back(e, c, r);
  if (r == Reading::Decreasing) std::reverse(f.begin(), f.end());
  return Tensor<Level1Crystal>(std::move(f));
}

std::vector<Symbol> tensor_order(const Multipartition& p, const Charge& s, Reading r) {
  auto t = multisymbol(p, s);
  if (r == Reading::Decreasing) std::reverse(t.begin(), t.end());
  return t;
}

Multipartition from_tensor_order(const std::vector<Symbol>& t, Reading r) {
  auto p = partitions_of(t);
  if (r == Reading::Decreasing) std::reverse(p.begin(), p.end());
  return p;
}

std::vector<Symbol> to_symbols(const Multipartition& p, const Charge& s) { return multisymbol(p, s); }

Multipartition to_multipartition(const std::vector<Symbol>& t) { return partitions_of(t); }

namespace {

type_a::Column truncate(const Symbol& s, int lo, int hi) {
  if (s.lo() < lo || s.hi() > hi) throw std::logic_error("symbol exceeds truncation window");
  type_a::Column c;
  for (int x : s.beads_in(lo, hi)) c.push_back(x - lo + 1);
  return c;
}

Symbol untruncate(const type_a::Column& c, int lo) {
  std::vector<int> beads;
  for (int v : c) beads.push_back(v + lo - 1);
  return Symbol::from_set(lo, beads);
}

// Runners at a common position are read l..1 when increasing.
std::vector<Symbol> window_order(const Multipartition& p, const Charge& s, Reading r) {
  auto t = multisymbol(p, s);
  if (r == Reading::Increasing) std::reverse(t.begin(), t.end());
  return t;
}

Multipartition from_window_order(std::vector<Symbol> t, Reading r) {
  if (r == Reading::Increasing) std::reverse(t.begin(), t.end());
  return partitions_of(t);
}

}  // namespace

Multipartition swap_runners(const Multipartition& p, int c1, int c2, Reading rd) {
  if (p.size() != 2) throw std::invalid_argument("swap_runners needs a bipartition");
  const int r = rank(p);
  const int lo = std::min(c1, c2) - r - 2;
  const int hi = std::max(c1, c2) + r + 2;
  auto t = window_order(p, {c1, c2}, rd);
  auto [y2, x2] = type_a::jdt_rmatrix(truncate(t[0], lo, hi), truncate(t[1], lo, hi));
  std::vector<Symbol> syms{untruncate(y2, lo), untruncate(x2, lo)};
  auto out = from_window_order(syms, rd);
  if (window_order(out, {c2, c1}, rd) != syms) throw std::logic_error("swap_runners changed a charge");
  return out;
}

Multipartition fundamental_rmatrix(const Multipartition& b, int s1, int s2, int e, int n, RMatrixTrace* trace,
                                   int iterations, Reading rd) {
  if (b.size() != 2) throw std::invalid_argument("fundamental_rmatrix needs a bipartition");
  if (rank(b) > n) throw CrystalError("rank window exceeded");
  const int gap = n + e + 1;
  int k = 1;
  while (k * e < gap + e) ++k;
  int c1 = mod(s1, e), c2 = mod(s2, e) + k * e;
  const int iters = iterations < 0 ? 2 * k : iterations;
  Multipartition cur = b;
  if (trace) {
    trace->k = k;
    trace->iterations = iters;
    trace->steps.clear();
    trace->steps.push_back({cur, {c1, c2}});
  }
  auto rotate = [&] {
    std::swap(cur[0], cur[1]);
    int t = c1;
    c1 = c2;
    c2 = t + e;
    if (trace) trace->steps.push_back({cur, {c1, c2}});
  };
  for (int it = 0; it < iters; ++it) {
    rotate();
    cur = swap_runners(cur, c1, c2, rd);
    std::swap(c1, c2);
    if (trace) trace->steps.push_back({cur, {c1, c2}});
  }
  rotate();
  if (c2 - c1 < rank(cur) + 2) throw CrystalError("fundamental_rmatrix: final multicharge is not spread");
  return cur;
}

Multipartition higher_level_key_right(const Multipartition& p, const Charge& s, int e, int n, Reading rd) {
  const std::size_t l = p.size();
  Multipartition out(l);
  for (std::size_t k = 0; k < l; ++k) {
    Multipartition fs = p;
    Charge cs = s;
    auto swap_at = [&](std::size_t j) {
      auto r = fundamental_rmatrix({fs[j], fs[j + 1]}, cs[j], cs[j + 1], e, n, nullptr, -1, rd);
      fs[j] = r[0];
      fs[j + 1] = r[1];
      std::swap(cs[j], cs[j + 1]);
    };
    std::size_t last = l - 1;
    if (rd == Reading::Increasing) {
      for (std::size_t j = k; j + 1 < l; ++j) swap_at(j);
    } else {
      for (std::size_t j = k; j-- > 0;) swap_at(j);
      last = 0;
    }
    out[k] = level1_key_right(Symbol::of(fs[last], cs[last]), e, nullptr, rd).partition();
  }
  return out;
}

CoreLattice core_lattice(int e, const Charge& s, int rank_bound) {
  CoreLattice g;
  for (const auto& p : multipartitions_up_to(static_cast<int>(s.size()), rank_bound))
    if (is_es_core(p, e, s)) g.nodes.push_back(p);
  std::map<Multipartition, std::size_t> index;
  for (std::size_t k = 0; k < g.nodes.size(); ++k) index[g.nodes[k]] = k;
  std::vector<int> colours;
  if (e == kInfinity) {
    int lo = *std::min_element(s.begin(), s.end()) - rank_bound - 1;
    int hi = *std::max_element(s.begin(), s.end()) + rank_bound + 1;
    for (int j = lo; j <= hi; ++j) colours.push_back(j);
  } else {
    for (int i = 0; i < e; ++i) colours.push_back(i);
  }
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    for (int i : colours) {
      auto q = add_all_addable(g.nodes[k], i, e, s);
      if (q == g.nodes[k] || rank(q) > rank_bound) continue;
      auto it = index.find(q);
      if (it == index.end()) throw std::logic_error("core lattice: image is not a core");
      g.arrows.emplace_back(k, it->second, i);
    }
  }
  return g;
}

InfWindow InfWindow::around(const Charge& s, int rank_bound) {
  int lo = *std::min_element(s.begin(), s.end()) - rank_bound - 2;
  int hi = *std::max_element(s.begin(), s.end()) + rank_bound + 2;
  return {lo, hi};
}

type_a::TableauCrystal window_crystal(const InfWindow& w, const Charge& s, Reading r) {
  std::vector<type_a::ColumnCrystal> cols;
  for (int c : s) cols.emplace_back(w.n(), c - w.lo + 1);
  if (r == Reading::Increasing) std::reverse(cols.begin(), cols.end());
  return type_a::TableauCrystal(std::move(cols));
}

type_a::Tableau to_window(const Multipartition& p, const Charge& s, const InfWindow& w, Reading r) {
  type_a::Tableau t;
  for (const auto& sym : window_order(p, s, r)) t.push_back(truncate(sym, w.lo, w.hi));
  return t;
}

Multipartition from_window(const type_a::Tableau& t, const Charge& s, const InfWindow& w, Reading r) {
  std::vector<Symbol> syms;
  for (const auto& c : t) syms.push_back(untruncate(c, w.lo));
  auto p = from_window_order(syms, r);
  if (window_order(p, s, r) != syms) throw std::logic_error("window column has the wrong charge");
  return p;
}

}  // namespace kc::affine
