#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "syt/orders.hpp"

using syt::OrderKind;
using syt::Perm;
using syt::Poset;
using syt::Tableau;

TEST_CASE("weak order at n = 3 is the four-element diamond") {
  Poset p = syt::weak_order_poset(3);
  REQUIRE(p.size() == 4);
  auto rels = p.relation_pairs();
  std::vector<std::pair<std::string, std::string>> expect = {
      {"1 2 3", "1 2|3"}, {"1 2 3", "1 3|2"}, {"1 2 3", "1|2|3"},
      {"1 2|3", "1|2|3"}, {"1 3|2", "1|2|3"}};
  std::sort(expect.begin(), expect.end());
  CHECK(rels == expect);
}

TEST_CASE("taking the closure is essential for the weak order") {
  // R < S < T on five letters even though no word of C_R sits below a word
  // of C_T; the pair (2,4) is inverted throughout C_R but nowhere in C_T
  Poset p = syt::weak_order_poset(5);
  CHECK(p.leq("1 2 5|3 4", "1 4 5|2|3"));
  CHECK(p.leq("1 4 5|2|3", "1 4|2 5|3"));
  CHECK(p.leq("1 2 5|3 4", "1 4|2 5|3"));
  bool direct = false;
  for (const Perm& r : syt::knuth_class(Tableau::parse("1 2 5|3 4")))
    for (const Perm& t : syt::knuth_class(Tableau::parse("1 4|2 5|3")))
      if (syt::weak_leq(r, t)) direct = true;
  CHECK_FALSE(direct);
}

TEST_CASE("chain order comparisons") {
  Tableau t = Tableau::parse("1 3 6|2 4|5");
  Tableau s = Tableau::parse("1 3 4|2 6|5");
  CHECK(syt::chain_leq(t, t));
  CHECK(syt::chain_leq(s, t));
  CHECK_FALSE(syt::chain_leq(t, s));
  CHECK(t.outer_shape() == s.outer_shape());
  SECTION("the single row is chain-minimal") {
    Tableau row = Tableau::parse("1 2 3 4 5");
    for (const Tableau& x : syt::enumerate_syt(5)) CHECK(syt::chain_leq(row, x));
  }
  CHECK_THROWS_AS(syt::chain_leq(t, Tableau::parse("1 2|3")), syt::error);
}

TEST_CASE("weak, kl and chain coincide up to n = 5") {
  for (int n = 2; n <= 5; ++n) {
    Poset w = syt::weak_order_poset(n);
    CHECK(w.same_order_as(syt::chain_order_poset(n)));
    CHECK(w.same_order_as(syt::kl_order_on_tableaux(n)));
  }
}

TEST_CASE("order dispatch and caching") {
  const Poset& a = syt::order_poset(OrderKind::weak, 3);
  const Poset& b = syt::order_poset(OrderKind::weak, 3);
  CHECK(&a == &b);
  CHECK(syt::order_poset(OrderKind::chain, 2).size() == 2);
  CHECK(syt::order_poset(OrderKind::kl, 5).same_order_as(syt::order_poset(OrderKind::weak, 5)));
  CHECK_THROWS_AS(syt::order_poset(OrderKind::kl, 7), syt::error);  // needs allow_big
  CHECK_THROWS_AS(syt::order_poset(OrderKind::kl, 8, {1, syt::DescentConvention::autodetect, true}),
                  syt::error);
}

TEST_CASE("multithreaded chain build is identical to serial") {
  Poset serial = syt::chain_order_poset(6, 1);
  Poset parallel = syt::chain_order_poset(6, 2);
  CHECK(serial.same_order_as(parallel));
}

TEST_CASE("inclusion report across the three orders") {
  SECTION("equality below six") {
    for (int n = 3; n <= 5; ++n) {
      auto rep = syt::sandwich_report(n);
      CHECK(rep.kl_minus_weak.empty());
      CHECK(rep.chain_minus_kl.empty());
    }
  }
  SECTION("the four extra kl pairs and the chain-only pair at n = 6") {
    auto rep = syt::sandwich_report(6);
    std::vector<std::pair<std::string, std::string>> expect = {
        {"1 2 3|4 5 6", "1 2 5|3 6|4"},
        {"1 2 3|4 5 6", "1 3 6|2 4|5"},
        {"1 2 5|3 4|6", "1 4|2 5|3 6"},
        {"1 3 4|2 6|5", "1 4|2 5|3 6"}};
    CHECK(rep.kl_minus_weak == expect);
    std::set<std::pair<std::string, std::string>> cm(rep.chain_minus_kl.begin(),
                                                     rep.chain_minus_kl.end());
    CHECK(cm.count({"1 3 4|2 6|5", "1 3 6|2 4|5"}) == 1);
  }
}

TEST_CASE("descent map is order-preserving into the Boolean algebra") {
  CHECK(syt::verify_descent_map(OrderKind::weak, 6));
  CHECK(syt::verify_descent_map(OrderKind::chain, 6));
  CHECK(syt::verify_descent_map(OrderKind::kl, 5));
}

TEST_CASE("weak covers add at most one descent; the hook chain is saturated") {
  for (int n = 3; n <= 6; ++n) {
    CHECK(syt::verify_weak_cover_descents(n).ok);
    // hooks with first row 1..k and first column k+1..n, read top down
    const Poset& p = syt::order_poset(OrderKind::weak, n);
    std::set<std::pair<std::size_t, std::size_t>> covers(p.covers().begin(), p.covers().end());
    std::vector<std::string> hooks;
    for (int k = n; k >= 1; --k) {
      std::vector<std::vector<int>> rows{{}};
      for (int v = 1; v <= k; ++v) rows[0].push_back(v);
      for (int v = k + 1; v <= n; ++v) rows.push_back({v});
      hooks.push_back(Tableau::straight(rows).str());
    }
    CHECK(hooks.size() == static_cast<std::size_t>(n));
    for (std::size_t i = 0; i + 1 < hooks.size(); ++i)
      CHECK(covers.count({p.index(hooks[i]), p.index(hooks[i + 1])}) == 1);
  }
}

TEST_CASE("bounds, shape map, transpose and evacuation on all three orders") {
  for (int n = 3; n <= 5; ++n) {
    for (OrderKind kind : {OrderKind::weak, OrderKind::kl, OrderKind::chain}) {
      const Poset& p = syt::order_poset(kind, n);
      CHECK(Tableau::parse(p.label(p.bottom())).outer_shape().rows() == 1);
      CHECK(Tableau::parse(p.label(p.top())).outer_shape().row(0) == 1);
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) {
          if (!p.leq(i, j)) continue;
          Tableau a = Tableau::parse(p.label(i)), b = Tableau::parse(p.label(j));
          CHECK(syt::opposite_dominance_leq(a.outer_shape(), b.outer_shape()));
          CHECK(p.leq(syt::transpose(b).str(), syt::transpose(a).str()));
          CHECK(p.leq(syt::evacuate(a).str(), syt::evacuate(b).str()));
        }
    }
  }
}

TEST_CASE("segment restriction is order-preserving for all three orders") {
  for (int n = 4; n <= 5; ++n) {
    for (OrderKind kind : {OrderKind::weak, OrderKind::kl, OrderKind::chain}) {
      const Poset& p = syt::order_poset(kind, n);
      for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y) {
          if (!p.leq(x, y)) continue;
          Tableau a = Tableau::parse(p.label(x)), b = Tableau::parse(p.label(y));
          for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
              const Poset& q = syt::order_poset(kind, j - i + 1);
              CHECK(q.leq(syt::restrict_standardize(a, i, j).str(),
                          syt::restrict_standardize(b, i, j).str()));
            }
        }
    }
  }
}

TEST_CASE("mobius of the full interval alternates") {
  for (int n = 3; n <= 6; ++n) {
    const Poset& w = syt::order_poset(OrderKind::weak, n);
    CHECK(w.mobius(w.bottom(), w.top()) == (n % 2 ? 1 : -1));
  }
}

TEST_CASE("chain extremes against the dominance lattice") {
  const Poset& w5 = syt::order_poset(OrderKind::weak, 5);
  CHECK(w5.chain_extremes().shortest_saturated == 5);
  const Poset& w6 = syt::order_poset(OrderKind::weak, 6);
  CHECK(w6.chain_extremes().longest ==
        static_cast<std::size_t>(oracle::dominance_longest_chain_brute(6)));
  CHECK(oracle::dominance_longest_chain_brute(6) == 9);
  CHECK(static_cast<std::size_t>(oracle::dominance_longest_chain_brute(6)) ==
        syt::dominance_order_poset(6).chain_extremes().longest);
}

TEST_CASE("dual Knuth translation inside a segment can break weak and chain order") {
  const Poset& c6 = syt::order_poset(OrderKind::chain, 6);
  const Poset& w6 = syt::order_poset(OrderKind::weak, 6);
  SECTION("chain order") {
    Tableau hi = Tableau::parse("1 3 6|2 4|5"), lo = Tableau::parse("1 3 4|2 6|5");
    CHECK(c6.leq(lo.str(), hi.str()));
    Tableau hi2 = syt::dual_knuth_move(hi, 4), lo2 = syt::dual_knuth_move(lo, 4);
    CHECK(hi2 == Tableau::parse("1 3 5|2 4|6"));
    CHECK(lo2 == Tableau::parse("1 3 5|2 6|4"));
    CHECK_FALSE(c6.leq(lo2.str(), hi2.str()));
  }
  SECTION("weak order") {
    Tableau lo = Tableau::parse("1 2 4|3 5 6"), hi = Tableau::parse("1 2 4|3 6|5");
    CHECK(w6.leq(lo.str(), hi.str()));
    Tableau lo2 = syt::dual_knuth_move(lo, 3), hi2 = syt::dual_knuth_move(hi, 3);
    CHECK(lo2 == Tableau::parse("1 2 3|4 5 6"));
    CHECK(hi2 == Tableau::parse("1 2 5|3 6|4"));
    CHECK_FALSE(w6.leq(lo2.str(), hi2.str()));
  }
}

TEST_CASE("chain order fails extension by inserting the missing letter") {
  Tableau t_acute = Tableau::parse("1 3 7|2 5|6");
  Tableau s_acute = Tableau::parse("1 3 5|2 7|6");
  const Poset& c6 = syt::order_poset(OrderKind::chain, 6);
  CHECK(c6.leq(syt::standardize(s_acute).str(), syt::standardize(t_acute).str()));
  const Poset& c7 = syt::order_poset(OrderKind::chain, 7);
  CHECK_FALSE(c7.leq(syt::insert_letter(s_acute, 4).str(), syt::insert_letter(t_acute, 4).str()));
}

TEST_CASE("replacing the inner tableau can break chain order") {
  const Poset& c6 = syt::order_poset(OrderKind::chain, 6);
  CHECK(c6.leq("1 2 5|3 4|6", "1 2 5|3 6|4"));
  CHECK_FALSE(c6.leq("1 3 5|2 4|6", "1 3 5|2 6|4"));
}
