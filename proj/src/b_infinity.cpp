#include "keycrystal/b_infinity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "keycrystal/crystal.hpp"

namespace kc::binf {

using affine::kInfinity;

Multisegment canonical(Multisegment m) {
  for (const auto& s : m)
    if (s.a > s.b) throw std::invalid_argument("segment with a > b");
  std::sort(m.begin(), m.end());
  return m;
}

std::string str(const Segment& s) { return "[" + std::to_string(s.a) + ";" + std::to_string(s.b) + "]"; }

std::string str(const Multisegment& m) {
  if (m.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) out += (k ? "+" : "") + str(m[k]);
  return out;
}

std::string str(const Sequences& L) {
  std::string out;
  for (std::size_t k = 0; k < L.size(); ++k) {
    out += (k ? " " : "") + std::string("L") + std::to_string(k + 1) + "=(";
    for (std::size_t j = 0; j < L[k].size(); ++j) out += (j ? "," : "") + str(L[k][j]);
    out += ")";
  }
  return out;
}

Multisegment parse(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  Multisegment m;
  if (t.empty() || t == "0") return m;
  std::size_t k = 0;
  auto number = [&]() {
    std::size_t used = 0;
    int v = std::stoi(t.substr(k), &used);
    k += used;
    return v;
  };
  while (k < t.size()) {
    if (t[k] != '[') throw std::invalid_argument("segment must start with '['");
    ++k;
    int a = number(), b = a;
    if (k < t.size() && (t[k] == ';' || t[k] == ',')) {
      ++k;
      b = number();
    }
    if (k >= t.size() || t[k] != ']') throw std::invalid_argument("segment must end with ']'");
    ++k;
    m.push_back({a, b});
    if (k < t.size()) {
      if (t[k] != '+') throw std::invalid_argument("segments must be joined by '+'");
      ++k;
    }
  }
  return canonical(std::move(m));
}

bool is_aperiodic(const Multisegment& m, int e) {
  if (e < 2) throw std::invalid_argument("aperiodicity needs e >= 2");
  std::map<int, std::set<int>> residues;
  for (const auto& s : m) residues[s.length()].insert(affine::mod(s.b, e));
  return std::all_of(residues.begin(), residues.end(),
                     [e](const auto& kv) { return static_cast<int>(kv.second.size()) < e; });
}

bool in_finite_class(const Multisegment& m, int e) {
  return std::all_of(m.begin(), m.end(), [e](const Segment& s) { return 1 <= s.a && s.a <= s.b && s.b <= e - 1; });
}

Multisegment pi_embed(const Multipartition& p, const Charge& s) {
  if (p.size() != s.size()) throw std::invalid_argument("multicharge length mismatch");
  Multisegment m;
  for (std::size_t k = 0; k < p.size(); ++k)
    for (std::size_t r = 0; r < p[k].size(); ++r) {
      int i = static_cast<int>(r) + 1;
      m.push_back({1 - i + s[k], p[k][r] - i + s[k]});
    }
  return canonical(std::move(m));
}

namespace {

struct Assign {
  const Multisegment& m;
  const Charge& s;
  std::vector<std::map<int, int>> rows;  // rows[k][i] = length
  std::set<Multipartition> found;

  void run(std::size_t t) {
    if (t == m.size()) {
      Multipartition p(s.size());
      for (std::size_t k = 0; k < s.size(); ++k) {
        int expect = 1;
        for (auto [i, len] : rows[k]) {
          if (i != expect++) return;
          p[k].push_back(len);
        }
      }
      found.insert(p);
      return;
    }
    const auto& seg = m[t];
    for (std::size_t k = s.size(); k-- > 0;) {
      int i = 1 + s[k] - seg.a;
      if (i < 1 || rows[k].count(i)) continue;
      int len = seg.length();
      auto above = rows[k].find(i - 1);
      auto below = rows[k].find(i + 1);
      if (above != rows[k].end() && above->second < len) continue;
      if (below != rows[k].end() && below->second > len) continue;
      rows[k][i] = len;
      run(t + 1);
      rows[k].erase(i);
    }
  }
};

}  // namespace

std::vector<Multipartition> pi_inverse(const Multisegment& m, const Charge& s) {
  Assign a{m, s, std::vector<std::map<int, int>>(s.size()), {}};
  a.run(0);
  return {a.found.begin(), a.found.end()};
}

Construction build_sequences(const Multisegment& m0, int l) {
  auto m = canonical(m0);
  Construction c;
  c.L.assign(l, {});
  std::size_t end = m.size();
  while (end > 0) {
    std::size_t begin = end;
    while (begin > 0 && m[begin - 1].b == m[end - 1].b) --begin;
    const int r = static_cast<int>(end - begin);
    const int b = m[end - 1].b;
    if (r > l) {
      c.stop_reason = std::to_string(r) + " segments end at " + std::to_string(b) + ", more than l";
      return c;
    }
    for (int k = 1; k <= r; ++k) {
      const Segment seg = m[begin + k - 1];
      auto& target = c.L[l - r + k - 1];
      if (!target.empty() && !(target.front().a == seg.a + 1 && target.front().b > b)) {
        c.stop_reason = str(seg) + " cannot be prepended to " + str(target.front());
        return c;
      }
      target.insert(target.begin(), seg);
    }
    c.stages.push_back(c.L);
    end = begin;
  }
  c.completed = true;
  return c;
}

Multipartition sequences_to_multipartition(const Sequences& L) {
  Multipartition p;
  for (const auto& seq : L) {
    affine::Partition la;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) la.push_back(it->length());
    p.push_back(la);
  }
  return p;
}

namespace {

bool sequence_charge_matches(const Sequences& L, const Charge& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s[i] - s[j] != static_cast<int>(L[i].size()) - static_cast<int>(L[j].size())) return false;
  return true;
}

}  // namespace

OrbitResult orbit_membership(const Multisegment& m0, int e, const Charge& s) {
  auto m = canonical(m0);
  const int l = static_cast<int>(s.size());
  OrbitResult res;
  res.construction = build_sequences(m, l);
  if (res.construction.completed) res.sequence_charge_test = sequence_charge_matches(res.construction.L, s);

  for (const auto& p : pi_inverse(m, s)) {
    if (affine::is_es_core(p, e, s)) {
      res.accepted = true;
      res.exact = true;
      res.lambda = p;
      res.charge = s;
      return res;
    }
  }
  if (!res.construction.completed) {
    res.reason = res.construction.stop_reason;
    return res;
  }
  const auto& L = res.construction.L;
  bool have = false;
  for (int k = 0; k < l; ++k) {
    if (L[k].empty()) continue;
    int c = L[k].back().a - s[k];
    if (have && c != res.shift) {
      res.reason = "top rows are not a common shift of the multicharge";
      return res;
    }
    res.shift = c;
    have = true;
  }
  if (e != kInfinity && affine::mod(res.shift, e) != 0) {
    res.reason = "shift " + std::to_string(res.shift) + " changes the residue class of the multicharge";
    return res;
  }
  Charge t = s;
  for (auto& x : t) x += res.shift;
  auto p = sequences_to_multipartition(L);
  if (!affine::is_es_core(p, e, t)) {
    res.reason = "reconstructed multipartition is not a core";
    return res;
  }
  res.accepted = true;
  res.lambda = p;
  res.charge = t;
  return res;
}

OrbitResult orbit_membership_any_charge(const Multisegment& m0, int e, int l) {
  auto m = canonical(m0);
  OrbitResult res;
  res.construction = build_sequences(m, l);
  if (!res.construction.completed) {
    res.reason = res.construction.stop_reason;
    return res;
  }
  const auto& L = res.construction.L;
  std::optional<int> base;
  for (int k = 0; k < l; ++k) {
    if (L[k].empty()) continue;
    int c = L[k].back().a - static_cast<int>(L[k].size());
    if (base && *base != c) {
      res.reason = "row counts are not compatible with a single multicharge";
      return res;
    }
    base = c;
  }
  Charge s(l);
  for (int k = 0; k < l; ++k) s[k] = static_cast<int>(L[k].size()) + base.value_or(0);
  auto p = sequences_to_multipartition(L);
  res.sequence_charge_test = true;
  res.charge = s;
  if (!affine::is_es_core(p, e, s)) {
    res.reason = "reconstructed multipartition is not a core";
    return res;
  }
  res.accepted = true;
  res.exact = true;
  res.lambda = p;
  return res;
}

bool binfty_demazure_membership(const Multisegment& m, const WeylWord& w, const Charge& s, int e) {
  auto pre = pi_inverse(canonical(m), s);
  if (e != kInfinity) {
    affine::UglovCrystal U(e, s);
    for (const auto& p : pre)
      if (climb(U, p).first == U.highest()) return demazure_membership(U, p, w);
    throw std::invalid_argument("multisegment is not in the image of the embedding");
  }
  for (const auto& p : pre) {
    auto win = affine::InfWindow::around(s, affine::rank(p));
    for (int j : w.letters) {
      win.lo = std::min(win.lo, j);
      win.hi = std::max(win.hi, j + 1);
    }
    auto W = affine::window_crystal(win, s);
    auto t = affine::to_window(p, s, win);
    if (!(climb(W, t).first == W.highest())) continue;
    WeylWord local;
    for (int j : w.letters) local.letters.push_back(win.node(j));
    return demazure_membership(W, t, local);
  }
  throw std::invalid_argument("multisegment is not in the image of the embedding");
}

}  // namespace kc::binf
