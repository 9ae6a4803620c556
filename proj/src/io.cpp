#include "keycrystal/io.hpp"

#include <cctype>
#include <stdexcept>

namespace kc::io {

namespace {

std::string strip(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  return t;
}

std::vector<std::string> split(const std::string& t, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : t) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

}  // namespace

std::vector<int> parse_ints(std::string_view text) {
  auto t = strip(text);
  std::vector<int> out;
  if (t.empty()) return out;
  for (const auto& part : split(t, ',')) out.push_back(to_int(part));
  return out;
}

std::vector<std::vector<int>> parse_rows(std::string_view text) {
  auto t = strip(text);
  std::vector<std::vector<int>> rows;
  if (t.empty()) return rows;
  for (const auto& r : split(t, '/')) rows.push_back(parse_ints(r));
  return rows;
}

affine::Multipartition parse_multipartition(std::string_view text) {
  auto t = strip(text);
  affine::Multipartition p;
  for (const auto& comp : split(t, '|')) {
    affine::Partition la;
    if (!comp.empty() && comp != "-")
      for (const auto& part : split(comp, '.')) la.push_back(to_int(part));
    if (!affine::is_partition(la)) throw std::invalid_argument("not a partition: " + comp);
    p.push_back(la);
  }
  return p;
}

WeylWord parse_word(std::string_view text) {
  auto t = strip(text);
  if (t == "e" || t == "id") return WeylWord{};
  return WeylWord(parse_ints(t));
}

int parse_e(std::string_view text) {
  auto t = strip(text);
  if (t == "inf" || t == "infinity") return affine::kInfinity;
  int e = to_int(t);
  if (e < 2) throw std::invalid_argument("e must be at least 2");
  return e;
}

json weight_json(const CartanDatum& d, const Weight& w) {
  json pairs = json::object();
  for (int i : d.nodes()) pairs[std::to_string(i)] = w.pair[d.pos(i)];
  json out{{"pairings", pairs}};
  if (d.kind() == Kind::AffineA) out["degree"] = w.degree;
  return out;
}

json polynomial_json(const CartanDatum& d, const WeightPolynomial& p) {
  json out = json::array();
  for (const auto& [w, c] : p.terms()) out.push_back({{"weight", weight_json(d, w)}, {"coefficient", c}});
  return out;
}

json word_json(const WeylWord& w) { return w.letters; }

json symbol_json(const affine::Symbol& s) {
  return {{"charge", s.charge()}, {"lo", s.lo()}, {"beads", s.beads()}};
}

json multipartition_json(const affine::Multipartition& p) { return p; }

json multisegment_json(const binf::Multisegment& m) {
  json out = json::array();
  for (const auto& s : m) out.push_back({s.a, s.b});
  return out;
}

json sequences_json(const binf::Sequences& L) {
  json out = json::array();
  for (const auto& seq : L) out.push_back(multisegment_json(seq));
  return out;
}

}  // namespace kc::io
