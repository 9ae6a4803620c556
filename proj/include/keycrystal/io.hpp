#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "keycrystal/affine_a.hpp"
#include "keycrystal/b_infinity.hpp"
#include "keycrystal/cartan.hpp"
#include "keycrystal/crystal.hpp"

namespace kc::io {

using nlohmann::json;

inline constexpr const char* kSchema = "keycrystal/1";

std::vector<int> parse_ints(std::string_view text);
// Rows separated by '/', entries by ','.
std::vector<std::vector<int>> parse_rows(std::string_view text);
// Components separated by '|', parts by '.', "-" or "" for the empty partition.
affine::Multipartition parse_multipartition(std::string_view text);
WeylWord parse_word(std::string_view text);
// "inf" -> affine::kInfinity.
int parse_e(std::string_view text);

json weight_json(const CartanDatum& d, const Weight& w);
json polynomial_json(const CartanDatum& d, const WeightPolynomial& p);
json word_json(const WeylWord& w);
json symbol_json(const affine::Symbol& s);
json multipartition_json(const affine::Multipartition& p);
json multisegment_json(const binf::Multisegment& m);
json sequences_json(const binf::Sequences& L);

template <class V>
json graph_json(const CrystalGraph<V>& g, const std::function<json(const V&)>& label,
                const std::function<json(int)>& colour = [](int i) { return json(i); }) {
  json out{{"schema", kSchema}, {"source", g.source}};
  json vs = json::array();
  for (std::size_t k = 0; k < g.size(); ++k) vs.push_back({{"id", k}, {"label", label(g.vertices[k])}});
  json as = json::array();
  for (const auto& a : g.arrows) as.push_back({{"from", a.from}, {"to", a.to}, {"colour", colour(a.i)}});
  out["vertices"] = vs;
  out["arrows"] = as;
  return out;
}

template <class V>
std::string graph_dot(const CrystalGraph<V>& g, const std::function<std::string(const V&)>& label,
                      const std::function<std::string(int)>& colour = [](int i) { return std::to_string(i); }) {
  std::ostringstream os;
  os << "digraph crystal {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t k = 0; k < g.size(); ++k) os << "  v" << k << " [label=" << json(label(g.vertices[k])).dump() << "];\n";
  for (const auto& a : g.arrows) os << "  v" << a.from << " -> v" << a.to << " [label=\"" << colour(a.i) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace kc::io
