#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "syt/skew.hpp"

using syt::OrderKind;
using syt::Partition;
using syt::Poset;
using syt::Tableau;

TEST_CASE("skew enumeration") {
  SECTION("empty inner shape reduces to straight tableaux") {
    auto sk = syt::enumerate_skew_syt(Partition(), 4);
    auto st = syt::enumerate_syt(4);
    REQUIRE(sk.size() == st.size());
    for (std::size_t i = 0; i < sk.size(); ++i) CHECK(sk[i] == st[i]);
  }
  SECTION("one inner cell, one entry") {
    auto sk = syt::enumerate_skew_syt(Partition::parse("1"), 1);
    REQUIRE(sk.size() == 2);
    CHECK(sk[0].str() == ". 1");
    CHECK(sk[1].str() == ".|1");
  }
  CHECK(syt::enumerate_skew_syt(Partition::parse("2,2"), 2).size() == 6);
  CHECK(syt::enumerate_skew_syt(Partition::parse("2,1"), 2).size() == 8);
}

TEST_CASE("superstandard filler and lifts") {
  CHECK(syt::superstandard(Partition::parse("2,2")) == Tableau::parse("1 2|3 4"));
  CHECK(syt::superstandard(Partition::parse("2,1")) == Tableau::parse("1 2|3"));
  Tableau u = Tableau::parse(". . 1|. 2");
  Tableau lifted = syt::lift_skew(u, syt::superstandard(Partition::parse("2,1")));
  CHECK(lifted == Tableau::parse("1 2 4|3 5"));
  CHECK(syt::skew_part(lifted, 3) == u);
}

TEST_CASE("fixed-inner subposets are the stated intervals") {
  SECTION("one extra cell over a rectangle is a two-chain") {
    Poset p = syt::fixed_inner_poset(Tableau::parse("1 2|3 4"), 1, OrderKind::weak);
    CHECK(p.size() == 2);
    auto ce = p.chain_extremes();
    CHECK(ce.longest == 2);
    CHECK(p.mobius(p.bottom(), p.top()) == -1);
  }
  SECTION("one extra cell over a non-rectangle is a saturated three-chain") {
    Poset p = syt::fixed_inner_poset(Tableau::parse("1 2|3"), 1, OrderKind::weak);
    CHECK(p.size() == 3);
    auto ce = p.chain_extremes();
    CHECK(ce.shortest_saturated == 3);
    CHECK(ce.longest == 3);
    CHECK(p.mobius(p.bottom(), p.top()) == 0);
  }
  SECTION("one-cell inner tableau recovers the full poset") {
    Poset p = syt::fixed_inner_poset(Tableau::parse("1"), 3, OrderKind::weak);
    CHECK(p.size() == syt::enumerate_syt(4).size());
  }
}

TEST_CASE("skew order needs the inner translation property") {
  CHECK_THROWS_AS(syt::skew_order_poset(Partition::parse("2,1"), 2, OrderKind::weak), syt::error);
  try {
    syt::skew_order_poset(Partition::parse("2,1"), 2, OrderKind::chain);
  } catch (const syt::error& e) {
    CHECK(e.kind() == "InnerTranslationUnsupported");
  }
}

TEST_CASE("skew orders over the kl base") {
  SECTION("empty inner shape is the plain order") {
    Poset p = syt::skew_order_poset(Partition(), 4, OrderKind::kl);
    CHECK(p.same_order_as(syt::order_poset(OrderKind::kl, 4)));
  }
  SECTION("rectangular inner shape: two parallel chains, top mobius one") {
    Poset p = syt::skew_order_poset(Partition::parse("2,2"), 2, OrderKind::kl);
    REQUIRE(p.size() == 6);
    CHECK(p.mobius(p.bottom(), p.top()) == 1);
    // the proper part splits into two chains
    std::set<std::size_t> proper;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (i != p.bottom() && i != p.top()) proper.insert(i);
    CHECK(proper.size() == 4);
    std::size_t comparable_pairs = 0;
    for (std::size_t a : proper)
      for (std::size_t b : proper)
        if (a != b && p.leq(a, b)) ++comparable_pairs;
    CHECK(comparable_pairs == 2);
  }
  SECTION("non-rectangular inner shape: top mobius zero") {
    Poset p = syt::skew_order_poset(Partition::parse("2,1"), 2, OrderKind::kl);
    REQUIRE(p.size() == 8);
    CHECK(p.mobius(p.bottom(), p.top()) == 0);
  }
}

TEST_CASE("suspension map triple between consecutive fixed-inner posets") {
  for (const char* r : {"1", "1 2|3"})
    for (int n : {2, 3}) {
      auto rep = syt::suspension_maps(Tableau::parse(r), n, OrderKind::weak);
      CHECK(rep.ideal_filter_split);
      CHECK(rep.images_ok);
      CHECK(rep.sections_ok);
      CHECK(rep.squeeze_ok);
      CHECK(rep.fibers_ok);
      CHECK(rep.maps_order_preserving);
    }
  CHECK_THROWS_AS(syt::suspension_maps(Tableau::parse("1"), 1, OrderKind::weak), syt::error);
}

TEST_CASE("top mobius of skew posets follows the rectangle dichotomy") {
  SECTION("fixed-inner route, weak base") {
    CHECK(syt::verify_skew_mobius(syt::superstandard(Partition::parse("1")), 2, OrderKind::weak)
              .computed == 1);
    CHECK(syt::verify_skew_mobius(syt::superstandard(Partition::parse("1")), 3, OrderKind::weak)
              .computed == -1);
    CHECK(syt::verify_skew_mobius(syt::superstandard(Partition::parse("2,2")), 2, OrderKind::weak)
              .computed == 1);
    CHECK(syt::verify_skew_mobius(syt::superstandard(Partition::parse("2,1")), 2, OrderKind::weak)
              .computed == 0);
    CHECK(syt::verify_skew_mobius(syt::superstandard(Partition::parse("2,1")), 3, OrderKind::weak)
              .computed == 0);
  }
  SECTION("skew-poset route, kl base") {
    CHECK(syt::verify_skew_mobius(Partition::parse("2,2"), 2, OrderKind::kl).computed == 1);
    CHECK(syt::verify_skew_mobius(Partition::parse("2,1"), 2, OrderKind::kl).computed == 0);
  }
}

TEST_CASE("fixed-inner posets with equal inner shapes are isomorphic under kl") {
  Tableau r1 = Tableau::parse("1 2|3"), r2 = Tableau::parse("1 3|2");
  for (int n = 1; n <= 3; ++n) {
    Poset p1 = syt::fixed_inner_poset(r1, n, OrderKind::kl);
    Poset p2 = syt::fixed_inner_poset(r2, n, OrderKind::kl);
    CHECK(syt::poset_isomorphic(p1, p2));
    // the isomorphism is entry replacement on the inner part
    const Poset& big = syt::order_poset(OrderKind::kl, 3 + n);
    auto replace = [&](const std::string& lab) {
      Tableau t = Tableau::parse(lab);
      std::vector<std::vector<int>> rows = t.rows();
      // swap the entries 2 and 3 (the difference between r1 and r2)
      for (auto& row : rows)
        for (int& v : row) {
          if (v == 2) v = 3;
          else if (v == 3) v = 2;
        }
      for (auto& row : rows) std::sort(row.begin(), row.end());
      return Tableau::straight(rows).str();
    };
    for (std::size_t a = 0; a < p1.size(); ++a)
      for (std::size_t b = 0; b < p1.size(); ++b)
        CHECK(p1.leq(a, b) ==
              big.leq(replace(p1.label(a)), replace(p1.label(b))));
    (void)p2;
  }
}

TEST_CASE("seven-cell fixed-inner posets over the two three-cell fillers are isomorphic") {
  syt::OrderOptions big;
  big.allow_big = true;
  Poset p1 = syt::fixed_inner_poset(Tableau::parse("1 2|3"), 4, OrderKind::kl, big);
  Poset p2 = syt::fixed_inner_poset(Tableau::parse("1 3|2"), 4, OrderKind::kl, big);
  CHECK(p1.size() == p2.size());
  CHECK(syt::poset_isomorphic(p1, p2));
}

TEST_CASE("stepwise dual Knuth replacement of the inner part preserves kl order") {
  Tableau r1 = Tableau::parse("1 2|3");
  Poset p1 = syt::fixed_inner_poset(r1, 3, OrderKind::kl);
  const Poset& big = syt::order_poset(OrderKind::kl, 6);
  // r1 -> r2 by the single dual Knuth move at 1; apply it inside each element
  for (std::size_t a = 0; a < p1.size(); ++a)
    for (std::size_t b = 0; b < p1.size(); ++b) {
      Tableau ma = syt::dual_knuth_move(Tableau::parse(p1.label(a)), 1);
      Tableau mb = syt::dual_knuth_move(Tableau::parse(p1.label(b)), 1);
      CHECK(p1.leq(a, b) == big.leq(ma.str(), mb.str()));
    }
}
