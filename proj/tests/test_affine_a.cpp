#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "keycrystal/affine_a.hpp"

using namespace kc;
using namespace kc::affine;

TEST_CASE("partition helpers") {
  CHECK(partitions(5).size() == 7);
  CHECK(multipartitions(2, 2).size() == 5);
  CHECK(transpose({3, 1}) == Partition{2, 1, 1});
  CHECK(is_e_regular({2, 2, 1}, 3));
  CHECK_FALSE(is_e_regular({1, 1, 1}, 3));
  CHECK(str(Multipartition{{2, 1}, {}}) == "(2.1, ∅)");
}

TEST_CASE("symbols") {
  auto s = Symbol::of({5, 3, 3, 2}, 0);
  CHECK(s.beads_in(-5, 5) == std::vector<int>{-5, -4, -1, 1, 2, 5});
  CHECK(s.charge() == 0);
  CHECK(s.partition() == Partition{5, 3, 3, 2});
  CHECK(Symbol::of({}, 3) == Symbol::of({}, 3).shifted(0));
  CHECK(s.shifted(2).charge() == 2);
  CHECK(s.conjugate() == Symbol::of(transpose({5, 3, 3, 2}), 0));
  CHECK(Symbol::of({2, 1}, 4).conjugate().charge() == -4);
  CHECK_THROWS(s.moved(3, 4));
  CHECK(Symbol::of({1}, 0).subset_of(Symbol::of({}, 1)));
}

TEST_CASE("abacus rendering") {
  auto a = abacus(Symbol::of({2}, 0), -2, 3);
  CHECK(a.find("●") != std::string::npos);
  CHECK(a.find("○") != std::string::npos);
}

TEST_CASE("level-1 components") {
  for (int e : {2, 3})
    for (Reading rd : {Reading::Increasing, Reading::Decreasing}) {
      Level1Crystal B(e, 0, rd);
      std::set<Partition> comp;
      for (const auto& s : generate(B, RankAtMost{8}).vertices) comp.insert(s.partition());
      std::set<Partition> expect;
      for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions(n))
          if (rd == Reading::Increasing ? is_e_regular(p, e) : is_e_regular(transpose(p), e)) expect.insert(p);
      CHECK(comp == expect);
    }
}

TEST_CASE("e-core characterizations") {
  CHECK(is_e_core({}, 3));
  CHECK(is_e_core({8, 6, 4, 2}, 3));
  CHECK_FALSE(is_e_core({3}, 2));
  CHECK(is_e_core({3}, 2, CoreMode::ARWordPurity));
  CHECK(is_e_core({3, 2, 1}, 2));
  for (int e : {2, 3, 4})
    for (int n = 0; n <= 10; ++n)
      for (const auto& p : partitions(n)) {
        bool core = is_e_core(p, e);
        if (core) CHECK(is_e_core(p, e, CoreMode::ARWordPurity));
      }
}

TEST_CASE("level-1 key") {
  std::vector<std::pair<int, int>> steps;
  auto k = level1_key_right(Symbol::of({5, 3, 3, 2}, 0), 3, &steps);
  CHECK(k.partition() == Partition{8, 6, 4, 2});
  CHECK(steps.size() == 1);
  CHECK_THROWS_AS(level1_key_right(Symbol::of({3}, 0), 3, nullptr, Reading::Decreasing), std::invalid_argument);
  CHECK_THROWS_AS(level1_key_right(Symbol::of({1, 1, 1}, 0), 3, nullptr, Reading::Increasing),
                  std::invalid_argument);
  for (const auto& p : partitions(6))
    if (is_e_regular(p, 3)) {
      auto s = Symbol::of(p, 1);
      CHECK(level1_key_right(s, 3, nullptr, Reading::Increasing) ==
            key_by_dilatation(Level1Crystal(3, 1, Reading::Increasing), s).right);
    }
}

TEST_CASE("orbit equals the (e,s)-cores") {
  for (int e : {2, 3})
    for (const auto& s : std::vector<Charge>{{0}, {0, 1}, {1, 0}, {0, 2}, {0, 1, 3}})
      for (Reading rd : {Reading::Increasing, Reading::Decreasing}) {
        const int n = s.size() == 3 ? 4 : 6;
        UglovCrystal U(e, s, rd);
        std::set<Multipartition> orb;
        for (const auto& x : orbit(U, RankAtMost{n})) orb.insert(x.vertex);
        std::set<Multipartition> cores;
        for (const auto& p : multipartitions_up_to(static_cast<int>(s.size()), n))
          if (is_es_core(p, e, s)) cores.insert(p);
        CHECK(orb == cores);
      }
}

TEST_CASE("orbit equals the cores for e = infinity") {
  const Charge s{0, 2};
  auto win = InfWindow::around(s, 5);
  auto W = window_crystal(win, s);
  std::set<Multipartition> orb;
  for (const auto& x : orbit(W, [&](const type_a::Tableau& t) { return rank(from_window(t, s, win)) <= 5; }))
    orb.insert(from_window(x.vertex, s, win));
  std::set<Multipartition> cores;
  for (const auto& p : multipartitions_up_to(2, 5))
    if (is_es_core(p, kInfinity, s)) cores.insert(p);
  CHECK(orb == cores);
}

TEST_CASE("Uglov and Kleshchev crystals have the same rank generating function") {
  for (Reading rd : {Reading::Increasing, Reading::Decreasing}) {
    UglovCrystal U(3, {0, 1}, rd);
    KleshchevCrystal K(3, {0, 1}, 8, 0, rd);
    std::map<int, int> u, k;
    for (const auto& p : generate(U, RankAtMost{6}).vertices) ++u[rank(p)];
    for (const auto& p : generate(K, RankAtMost{6}).vertices) ++k[rank(p)];
    CHECK(u == k);
  }
}

TEST_CASE("window crystal matches the sl_infinity operators") {
  const Charge s{0, 1};
  for (Reading rd : {Reading::Increasing, Reading::Decreasing}) {
    auto win = InfWindow::around(s, 4);
    auto W = window_crystal(win, s, rd);
    for (const auto& p : multipartitions_up_to(2, 4)) {
      auto t = to_window(p, s, win, rd);
      CHECK(from_window(t, s, win, rd) == p);
      for (int j = win.lo + 1; j < win.hi - 1; ++j) {
        auto a = uglov_f_inf(j, p, s, rd);
        auto b = W.f(win.node(j), t);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(from_window(*b, s, win, rd) == *a);
      }
    }
  }
}

TEST_CASE("spread multicharges") {
  auto t = spread_charge({0, 1, 2}, 3, 5);
  CHECK(t.size() == 3);
  for (std::size_t j = 1; j < t.size(); ++j) {
    CHECK(t[j] - t[j - 1] >= 5 + 3 + 1);
    CHECK(mod(t[j], 3) == static_cast<int>(j));
  }
  KleshchevCrystal K(3, {0, 1}, 2);
  CHECK_THROWS_AS(K.f(0, {{1, 1, 1}, {}}), CrystalError);
}

TEST_CASE("cores: transposition, b-statistics, lattice") {
  const Charge s{0, 1};
  for (const auto& p : multipartitions_up_to(2, 6))
    if (is_es_core(p, 3, s)) {
      auto [q, t] = transpose_core(p, 3, s);
      CHECK(is_es_core(q, 3, t));
      auto back = transpose_core(q, 3, t);
      CHECK(back.first == p);
      CHECK(b_statistics(p, 3, s).consistent);
    }
  auto g = core_lattice(3, s, 6);
  for (auto [a, b, i] : g.arrows) {
    CHECK(rank(g.nodes[b]) > rank(g.nodes[a]));
    CHECK(multipartition_bruhat(g.nodes[a], g.nodes[b]));
  }
  CHECK(add_all_addable({{}, {}}, 0, 3, s) == Multipartition{{1}, {}});
}

TEST_CASE("runner swap and fundamental R-matrix") {
  for (const auto& p : multipartitions_up_to(2, 4)) {
    auto q = swap_runners(p, 0, 9);
    CHECK(rank(q) == rank(p));
  }
  RMatrixTrace tr;
  auto r = fundamental_rmatrix({{1}, {}}, 0, 1, 3, 4, &tr);
  CHECK(tr.iterations == 2 * tr.k);
  CHECK(rank(r) == 1);
  CHECK_THROWS(fundamental_rmatrix({{1}, {}, {}}, 0, 1, 3, 4));
}

TEST_CASE("higher-level key in both readings") {
  for (Reading rd : {Reading::Increasing, Reading::Decreasing}) {
    const Charge s{0, 1, 0};
    KleshchevCrystal K(3, s, 30, 0, rd);
    for (const auto& p : generate(K, RankAtMost{3}).vertices)
      CHECK(higher_level_key_right(p, s, 3, 30, rd) == key_by_dilatation(K, p).right);
  }
}
