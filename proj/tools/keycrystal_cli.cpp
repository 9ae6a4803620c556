#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "keycrystal/affine_a.hpp"
#include "keycrystal/b_infinity.hpp"
#include "keycrystal/crystal.hpp"
#include "keycrystal/io.hpp"
#include "keycrystal/type_a.hpp"
#include "keycrystal/type_c.hpp"

using namespace kc;
using io::json;

namespace {

struct Job {
  std::string type;
  std::string weight;
  std::string charges;
  std::string word;
  std::string tableau;
  std::string multipartition;
  std::string segments;
  std::string e = "inf";
  std::string method = "dilatation";
  std::string mode = "enumerate";
  std::string format = "json";
  std::string reading;
  std::string realization = "uglov";
  std::string output;
  int rank_bound = -1;
  int window = -1;
  int level = -1;
  bool lattice = false;
  bool list = false;
  bool embed = false;
};

class Negative : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Job& job, const std::string& text) {
  if (job.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(job.output);
  if (!f) throw std::runtime_error("cannot write " + job.output);
  f << text;
}

void emit(const Job& job, const json& j) { emit(job, j.dump(2) + "\n"); }

bool is_infinite(const std::string& type) { return type == "A~:inf" || type == "A~:infinity"; }

affine::Reading reading_of(const Job& job, int level) {
  if (job.reading == "increasing") return affine::Reading::Increasing;
  if (job.reading == "decreasing") return affine::Reading::Decreasing;
  if (!job.reading.empty()) throw std::invalid_argument("--reading must be increasing or decreasing");
  return level == 1 ? affine::Reading::Decreasing : affine::Reading::Increasing;
}

int required_bound(const Job& job) {
  if (job.rank_bound < 0) throw std::invalid_argument("--rank-bound is required for affine and infinite types");
  return job.rank_bound;
}

json rows_json(const std::vector<std::vector<int>>& rows) { return rows; }

template <class Crystal, class Label>
json finite_graph(const Crystal& c, const Job& job, Label label) {
  auto g = generate(c);
  return io::graph_json<typename Crystal::Vertex>(g, label);
}

int cmd_crystal(const Job& job) {
  if (is_infinite(job.type)) {
    auto s = io::parse_ints(job.charges);
    int bound = required_bound(job);
    auto win = affine::InfWindow::around(s, bound);
    auto rd = reading_of(job, static_cast<int>(s.size()));
    auto W = affine::window_crystal(win, s, rd);
    auto keep = [&](const type_a::Tableau& t) { return affine::rank(affine::from_window(t, s, win, rd)) <= bound; };
    auto g = generate(W, keep);
    auto label = [&](const type_a::Tableau& t) { return affine::str(affine::from_window(t, s, win, rd)); };
    auto colour = [&](int node) { return win.colour(node); };
    if (job.format == "dot") {
      emit(job, io::graph_dot<type_a::Tableau>(g, label, [&](int i) { return std::to_string(colour(i)); }));
    } else {
      auto j = io::graph_json<type_a::Tableau>(g, [&](const type_a::Tableau& t) { return json(label(t)); },
                                               [&](int i) { return json(colour(i)); });
      j["type"] = job.type;
      j["charges"] = s;
      emit(job, j);
    }
    return 0;
  }
  auto d = CartanDatum::parse(job.type);
  if (d.kind() == Kind::AffineA) {
    auto s = io::parse_ints(job.charges);
    int bound = required_bound(job);
    auto rd = reading_of(job, static_cast<int>(s.size()));
    auto label = [](const affine::Multipartition& p) { return affine::str(p); };
    CrystalGraph<affine::Multipartition> g;
    if (job.realization == "kleshchev") {
      affine::KleshchevCrystal K(d.rank(), s, std::max(bound, 1), 0, rd);
      g = generate(K, affine::RankAtMost{bound});
    } else {
      affine::UglovCrystal U(d.rank(), s, rd);
      g = generate(U, affine::RankAtMost{bound});
    }
    if (job.format == "dot") {
      emit(job, io::graph_dot<affine::Multipartition>(g, label));
    } else {
      auto j = io::graph_json<affine::Multipartition>(g, [&](const affine::Multipartition& p) { return json(label(p)); });
      j["type"] = job.type;
      j["charges"] = s;
      j["realization"] = job.realization;
      emit(job, j);
    }
    return 0;
  }
  auto shape = io::parse_ints(job.weight);
  auto rows_label = [](const std::vector<int>& dummy) { return dummy; };
  (void)rows_label;
  if (d.kind() == Kind::FiniteA) {
    auto C = type_a::tableau_crystal(d.rank(), shape);
    auto g = generate(C);
    if (job.format == "dot") {
      emit(job, io::graph_dot<type_a::Tableau>(g, [](const type_a::Tableau& t) { return type_a::pretty(t); }));
    } else {
      auto j = io::graph_json<type_a::Tableau>(g, [](const type_a::Tableau& t) { return rows_json(type_a::to_rows(t)); });
      j["type"] = job.type;
      j["shape"] = shape;
      emit(job, j);
    }
    return 0;
  }
  auto C = type_c::kn_crystal(d.rank(), shape);
  auto g = generate(C);
  if (job.format == "dot") {
    emit(job, io::graph_dot<type_c::Tableau>(g, [](const type_c::Tableau& t) { return type_c::pretty(t); }));
  } else {
    auto j = io::graph_json<type_c::Tableau>(g, [](const type_c::Tableau& t) { return rows_json(type_a::to_rows(t)); });
    j["type"] = job.type;
    j["shape"] = shape;
    emit(job, j);
  }
  return 0;
}

struct KeyPair {
  json left;
  json right;
  std::string shown;
};

template <class V>
void record(json& out, std::vector<std::pair<std::string, std::pair<V, V>>>& all, const std::string& name, V left,
            V right, const std::function<json(const V&)>& to_json) {
  out["methods"][name] = {{"left", to_json(left)}, {"right", to_json(right)}};
  all.push_back({name, {std::move(left), std::move(right)}});
}

template <class V>
void agree_or_throw(const std::vector<std::pair<std::string, std::pair<V, V>>>& all) {
  for (std::size_t k = 1; k < all.size(); ++k)
    if (!(all[k].second == all[0].second))
      throw std::runtime_error("key methods disagree: " + all[0].first + " vs " + all[k].first);
}

bool wants(const Job& job, const std::string& m) { return job.method == m || job.method == "crosscheck"; }

int cmd_key(const Job& job) {
  static const std::set<std::string> methods{"dilatation", "reduction", "specialized", "crosscheck"};
  if (!methods.count(job.method)) throw std::invalid_argument("unknown --method " + job.method);
  json out{{"schema", io::kSchema}, {"type", job.type}, {"method", job.method}, {"methods", json::object()}};
  std::string pretty;

  if (!is_infinite(job.type) && CartanDatum::parse(job.type).kind() != Kind::AffineA) {
    auto d = CartanDatum::parse(job.type);
    auto rows = io::parse_rows(job.tableau);
    auto T = type_a::from_rows(rows);
    auto shape = type_a::shape_of(T);
    std::function<json(const type_a::Tableau&)> tj = [](const type_a::Tableau& t) { return rows_json(type_a::to_rows(t)); };
    std::vector<std::pair<std::string, std::pair<type_a::Tableau, type_a::Tableau>>> all;
    auto run = [&](const auto& C, auto specialized_l, auto specialized_r, auto fund) {
      if (wants(job, "dilatation")) {
        auto k = key_by_dilatation(C, T);
        record(out, all, "dilatation", k.left, k.right, tj);
        out["methods"]["dilatation"]["m"] = k.m;
      }
      if (wants(job, "reduction")) {
        auto l = key_reduced(C, T, Side::Left, PathTransportR{}, fund);
        auto r = key_reduced(C, T, Side::Right, PathTransportR{}, fund);
        record(out, all, "reduction", l, r, tj);
      }
      if (wants(job, "specialized")) record(out, all, "specialized", specialized_l(), specialized_r(), tj);
    };
    if (d.kind() == Kind::FiniteA) {
      auto C = type_a::tableau_crystal(d.rank(), shape);
      if (!type_a::is_semistandard(T)) throw std::invalid_argument("tableau is not semistandard");
      run(C, [&] { return type_a::ls_key_left(d.rank(), T); }, [&] { return type_a::ls_key_right(d.rank(), T); },
          DilatationKey{});
    } else {
      auto C = type_c::kn_crystal(d.rank(), shape);
      if (!type_c::is_type_c_tableau(d.rank(), T)) throw std::invalid_argument("not a symplectic tableau");
      run(C, [&] { return type_c::key_left_reduced(d.rank(), T); },
          [&] { return type_c::key_right_reduced(d.rank(), T); }, DilatationKey{});
    }
    agree_or_throw(all);
    out["left"] = tj(all.front().second.first);
    out["right"] = tj(all.front().second.second);
    if (job.format == "pretty-tableau") {
      auto show = d.kind() == Kind::FiniteA ? type_a::pretty(all.front().second.first)
                                            : type_c::pretty(all.front().second.first);
      auto show_r = d.kind() == Kind::FiniteA ? type_a::pretty(all.front().second.second)
                                              : type_c::pretty(all.front().second.second);
      emit(job, "left key\n" + show + "right key\n" + show_r);
      return 0;
    }
    emit(job, out);
    return 0;
  }

  if (is_infinite(job.type)) throw std::invalid_argument("key for A~:inf: use the demazure command");
  const int e = CartanDatum::parse(job.type).rank();
  auto s = io::parse_ints(job.charges);
  auto p = io::parse_multipartition(job.multipartition);
  if (p.size() != s.size()) throw std::invalid_argument("multipartition level differs from the multicharge");
  auto rd = reading_of(job, static_cast<int>(s.size()));
  std::function<json(const affine::Multipartition&)> mj = [](const affine::Multipartition& q) { return json(q); };
  std::vector<std::pair<std::string, std::pair<affine::Multipartition, affine::Multipartition>>> all;

  if (s.size() == 1) {
    affine::Level1Crystal L(e, s[0], rd);
    auto b = affine::Symbol::of(p[0], s[0]);
    auto one = [](const affine::Symbol& x) { return affine::Multipartition{x.partition()}; };
    KeyResult<affine::Symbol> dk;
    bool have_dk = false;
    if (wants(job, "dilatation") || wants(job, "specialized")) {
      dk = key_by_dilatation(L, b);
      have_dk = true;
    }
    if (wants(job, "dilatation")) {
      record(out, all, "dilatation", one(dk.left), one(dk.right), mj);
      out["methods"]["dilatation"]["m"] = dk.m;
    }
    if (wants(job, "reduction")) {
      Tensor<affine::Level1Crystal> T({L});
      auto l = key_reduced(T, {b}, Side::Left);
      auto r = key_reduced(T, {b}, Side::Right);
      record(out, all, "reduction", one(l[0]), one(r[0]), mj);
    }
    if (wants(job, "specialized")) {
      std::vector<std::pair<int, int>> steps;
      auto r = affine::level1_key_right(b, e, &steps, rd);
      record(out, all, "specialized", one(have_dk ? dk.left : b), one(r), mj);
      out["methods"]["specialized"]["steps"] = steps;
      out["methods"]["specialized"]["left_from"] = "dilatation";
    }
  } else {
    int n = job.window > 0 ? job.window : 4 * affine::rank(p) + 2 * e + 4;
    affine::KleshchevCrystal K(e, s, n, 0, rd);
    if (wants(job, "dilatation")) {
      auto k = key_by_dilatation(K, p);
      record(out, all, "dilatation", k.left, k.right, mj);
      out["methods"]["dilatation"]["m"] = k.m;
    }
    if (wants(job, "reduction")) {
      auto T = affine::kleshchev_tensor(e, s, rd);
      auto t = affine::tensor_order(p, s, rd);
      auto l = key_reduced(T, t, Side::Left);
      auto r = key_reduced(T, t, Side::Right);
      record(out, all, "reduction", affine::from_tensor_order(l, rd), affine::from_tensor_order(r, rd), mj);
    }
    if (wants(job, "specialized")) {
      auto r = affine::higher_level_key_right(p, s, e, n, rd);
      auto l = key_by_dilatation(K, p).left;
      record(out, all, "specialized", l, r, mj);
      out["methods"]["specialized"]["left_from"] = "dilatation";
    }
    out["window"] = n;
  }
  agree_or_throw(all);
  out["charges"] = s;
  out["reading"] = rd == affine::Reading::Increasing ? "increasing" : "decreasing";
  out["left"] = mj(all.front().second.first);
  out["right"] = mj(all.front().second.second);
  emit(job, out);
  return 0;
}

template <class C>
json enumerate_json(const C& c, const WeylWord& w, const std::function<json(const VertexOf<C>&)>& label) {
  json list = json::array();
  for (const auto& b : demazure_enumerate(c, w)) list.push_back(label(b));
  return list;
}

int cmd_demazure(const Job& job) {
  auto w = io::parse_word(job.word);
  json out{{"schema", io::kSchema}, {"type", job.type}, {"word", io::word_json(w)}, {"mode", job.mode}};
  bool negative = false;
  if (is_infinite(job.type)) {
    auto s = io::parse_ints(job.charges);
    auto rd = reading_of(job, static_cast<int>(s.size()));
    int bound = job.rank_bound >= 0 ? job.rank_bound : 0;
    auto win = affine::InfWindow::around(s, bound + static_cast<int>(w.length()));
    for (int j : w.letters) {
      win.lo = std::min(win.lo, j);
      win.hi = std::max(win.hi, j + 1);
    }
    auto W = affine::window_crystal(win, s, rd);
    WeylWord local;
    for (int j : w.letters) local.letters.push_back(win.node(j));
    if (job.mode == "member") {
      auto p = io::parse_multipartition(job.multipartition);
      bool in = demazure_membership(W, affine::to_window(p, s, win, rd), local);
      out["member"] = in;
      negative = !in;
    } else {
      json list = json::array();
      for (const auto& t : demazure_enumerate(W, local)) list.push_back(affine::str(affine::from_window(t, s, win, rd)));
      out["vertices"] = list;
      out["size"] = list.size();
    }
  } else {
    auto d = CartanDatum::parse(job.type);
    if (d.kind() == Kind::AffineA) {
      auto s = io::parse_ints(job.charges);
      affine::UglovCrystal U(d.rank(), s, reading_of(job, static_cast<int>(s.size())));
      if (job.mode == "member") {
        bool in = demazure_membership(U, io::parse_multipartition(job.multipartition), w);
        out["member"] = in;
        negative = !in;
      } else if (job.mode == "character") {
        auto set = demazure_enumerate(U, w);
        out["character"] = io::polynomial_json(d, character(U, set));
        out["size"] = set.size();
      } else {
        auto list = enumerate_json<affine::UglovCrystal>(
            U, w, [](const affine::Multipartition& p) { return json(affine::str(p)); });
        out["size"] = list.size();
        out["vertices"] = list;
      }
    } else {
      auto shape = io::parse_ints(job.weight);
      auto go = [&](const auto& C) {
        using V = VertexOf<std::decay_t<decltype(C)>>;
        if (job.mode == "member") {
          auto T = type_a::from_rows(io::parse_rows(job.tableau));
          bool in = demazure_membership(C, T, w);
          out["member"] = in;
          negative = !in;
        } else if (job.mode == "character") {
          auto set = demazure_enumerate(C, w);
          auto enumerated = character(C, set);
          auto formula = demazure_character(d, C.highest_weight(), w);
          out["character"] = io::polynomial_json(d, formula);
          out["agrees_with_enumeration"] = enumerated == formula;
          if (!(enumerated == formula)) throw std::runtime_error("character mismatch");
        } else {
          json list = json::array();
          for (const V& b : demazure_enumerate(C, w)) list.push_back(type_a::to_rows(b));
          out["size"] = list.size();
          out["vertices"] = list;
        }
      };
      if (d.kind() == Kind::FiniteA)
        go(type_a::tableau_crystal(d.rank(), shape));
      else
        go(type_c::kn_crystal(d.rank(), shape));
    }
  }
  emit(job, out);
  return negative ? 2 : 0;
}

int cmd_core(const Job& job) {
  const int e = io::parse_e(job.e);
  auto s = io::parse_ints(job.charges);
  if (s.empty()) throw std::invalid_argument("--charges is required");
  json out{{"schema", io::kSchema}, {"e", e == affine::kInfinity ? json("inf") : json(e)}, {"charges", s}};
  if (job.lattice) {
    auto g = affine::core_lattice(e, s, required_bound(job));
    if (job.format == "dot") {
      CrystalGraph<affine::Multipartition> cg;
      cg.vertices = g.nodes;
      for (auto [a, b, i] : g.arrows) cg.arrows.push_back({a, b, i});
      emit(job, io::graph_dot<affine::Multipartition>(cg, [](const affine::Multipartition& p) { return affine::str(p); }));
      return 0;
    }
    json nodes = json::array();
    for (const auto& p : g.nodes) nodes.push_back(affine::str(p));
    json arrows = json::array();
    for (auto [a, b, i] : g.arrows) arrows.push_back({{"from", a}, {"to", b}, {"colour", i}});
    out["nodes"] = nodes;
    out["arrows"] = arrows;
    emit(job, out);
    return 0;
  }
  if (job.list) {
    json cores = json::array();
    for (const auto& p : affine::multipartitions_up_to(static_cast<int>(s.size()), required_bound(job)))
      if (affine::is_es_core(p, e, s)) cores.push_back(affine::str(p));
    out["cores"] = cores;
    out["count"] = cores.size();
    emit(job, out);
    return 0;
  }
  auto p = io::parse_multipartition(job.multipartition);
  if (p.size() != s.size()) throw std::invalid_argument("multipartition level differs from the multicharge");
  bool core = affine::is_es_core(p, e, s);
  if (job.format == "ascii-abacus") {
    auto syms = affine::multisymbol(p, s);
    int lo = 0, hi = 1;
    for (const auto& x : syms) {
      lo = std::min(lo, x.lo() - 2);
      hi = std::max(hi, x.hi() + 2);
    }
    emit(job, affine::abacus(syms, lo, hi) + (core ? "core\n" : "not a core\n"));
    return core ? 0 : 2;
  }
  out["multipartition"] = affine::str(p);
  out["core"] = core;
  json runners = json::array();
  for (const auto& x : affine::multisymbol(p, s)) runners.push_back(io::symbol_json(x));
  out["symbols"] = runners;
  if (e != affine::kInfinity) {
    auto bs = affine::b_statistics(p, e, s);
    out["b_statistics"] = {{"b", bs.b}, {"consistent", bs.consistent}};
    if (s.size() == 1) {
      auto rd = reading_of(job, 1);
      auto sym = affine::Symbol::of(p[0], s[0]);
      bool domain = rd == affine::Reading::Decreasing ? affine::is_e_regular(affine::transpose(p[0]), e)
                                                      : affine::is_e_regular(p[0], e);
      if (domain) {
        std::vector<std::pair<int, int>> steps;
        auto k = affine::level1_key_right(sym, e, &steps, rd);
        out["key_right"] = {{"partition", k.partition()}, {"symbol", io::symbol_json(k)}, {"steps", steps}};
      }
    }
  }
  if (core) {
    auto [q, t] = affine::transpose_core(p, e, s);
    out["transpose"] = {{"multipartition", affine::str(q)}, {"charges", t}};
  }
  emit(job, out);
  return core ? 0 : 2;
}

int cmd_multisegment(const Job& job) {
  const int e = io::parse_e(job.e);
  json out{{"schema", io::kSchema}, {"e", e == affine::kInfinity ? json("inf") : json(e)}};
  if (job.embed) {
    auto s = io::parse_ints(job.charges);
    auto m = binf::pi_embed(io::parse_multipartition(job.multipartition), s);
    out["multisegment"] = binf::str(m);
    out["segments"] = io::multisegment_json(m);
    emit(job, out);
    return 0;
  }
  auto m = binf::parse(job.segments);
  out["multisegment"] = binf::str(m);
  if (e != affine::kInfinity) out["aperiodic"] = binf::is_aperiodic(m, e);
  if (!job.word.empty()) {
    auto s = io::parse_ints(job.charges);
    bool in = binf::binfty_demazure_membership(m, io::parse_word(job.word), s, e);
    out["word"] = io::word_json(io::parse_word(job.word));
    out["member"] = in;
    emit(job, out);
    return in ? 0 : 2;
  }
  binf::OrbitResult r;
  if (!job.charges.empty()) {
    r = binf::orbit_membership(m, e, io::parse_ints(job.charges));
  } else {
    if (job.level < 1) throw std::invalid_argument("give --charges or --level");
    r = binf::orbit_membership_any_charge(m, e, job.level);
  }
  json stages = json::array();
  for (const auto& st : r.construction.stages) stages.push_back(io::sequences_json(st));
  out["construction"] = {{"completed", r.construction.completed},
                         {"stop_reason", r.construction.stop_reason},
                         {"stages", stages}};
  out["accepted"] = r.accepted;
  out["sequence_charge_test"] = r.sequence_charge_test;
  if (r.accepted) {
    out["multipartition"] = affine::str(r.lambda);
    out["charges"] = r.charge;
    out["shift"] = r.shift;
    out["exact"] = r.exact;
  } else {
    out["reason"] = r.reason;
  }
  emit(job, out);
  return r.accepted ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Keys and Demazure crystals"};
  app.require_subcommand(1);
  Job job;

  auto common = [&](CLI::App* c) {
    c->add_option("--type", job.type, "A:n | C:n | A~:e | A~:inf");
    c->add_option("--weight", job.weight, "partition for finite types, e.g. 2,1");
    c->add_option("--charges", job.charges, "multicharge, e.g. 0,1");
    c->add_option("--rank-bound", job.rank_bound, "rank bound for infinite crystals");
    c->add_option("--format", job.format, "json | dot | ascii-abacus | pretty-tableau");
    c->add_option("--reading", job.reading, "increasing | decreasing");
    c->add_option("-o,--output", job.output, "output file");
  };

  auto* crystal = app.add_subcommand("crystal", "export a crystal graph");
  common(crystal);
  crystal->add_option("--realization", job.realization, "uglov | kleshchev");

  auto* key = app.add_subcommand("key", "left and right keys of a vertex");
  common(key);
  key->add_option("--tableau", job.tableau, "rows separated by '/', bars as negative entries");
  key->add_option("--multipartition", job.multipartition, "components separated by '|', parts by '.'");
  key->add_option("--method", job.method, "dilatation | reduction | specialized | crosscheck");
  key->add_option("--window", job.window, "rank window of the Kleshchev realization");

  auto* dem = app.add_subcommand("demazure", "Demazure crystals and characters");
  common(dem);
  dem->add_option("--word", job.word, "Weyl group word, e.g. 1,2,1 (e for the identity)");
  dem->add_option("--mode", job.mode, "enumerate | member | character");
  dem->add_option("--tableau", job.tableau, "vertex for --mode member");
  dem->add_option("--multipartition", job.multipartition, "vertex for --mode member");

  auto* core = app.add_subcommand("core", "(e,s)-cores, b-statistics, lattice, level-1 key");
  common(core);
  core->add_option("--e", job.e, "e >= 2 or inf");
  core->add_option("--multipartition", job.multipartition, "multipartition to test");
  core->add_flag("--lattice", job.lattice, "export the lattice of cores");
  core->add_flag("--list", job.list, "list cores up to the rank bound");

  auto* ms = app.add_subcommand("multisegment", "aperiodicity, embedding and orbit membership");
  common(ms);
  ms->add_option("--e", job.e, "e >= 2 or inf");
  ms->add_option("--segments", job.segments, "e.g. [2;3]+[4]");
  ms->add_option("--level", job.level, "level when no multicharge is given");
  ms->add_option("--word", job.word, "Weyl word for B(infinity) Demazure membership");
  ms->add_option("--multipartition", job.multipartition, "input of --embed");
  ms->add_flag("--embed", job.embed, "compute the embedding of --multipartition");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*crystal) return cmd_crystal(job);
    if (*key) return cmd_key(job);
    if (*dem) return cmd_demazure(job);
    if (*core) return cmd_core(job);
    if (*ms) return cmd_multisegment(job);
  } catch (const Negative& n) {
    std::cerr << n.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}
