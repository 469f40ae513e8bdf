// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion also carries a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "syt/hopf.hpp"
#include "syt/kl.hpp"
#include "syt/orders.hpp"
#include "syt/poset.hpp"
#include "syt/skew.hpp"

using syt::OrderKind;
using syt::Partition;
using syt::Perm;
using syt::Poset;
using syt::Tableau;

namespace {

int failures = 0;

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
};

void run(const Criterion& c, const std::function<void(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && dt > c.budget_seconds) {
    ok = false;
    detail = "over time budget";
  }
  if (!ok) ++failures;
  std::printf("%s criterion %2d [%6.2fs/%.0fs] %s%s%s\n", ok ? "PASS" : "FAIL", c.id, dt,
              c.budget_seconds, c.title.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

long long expected_top_mobius(int n) { return n % 2 ? 1 : -1; }  // (-1)^(n-3)

}  // namespace

int main() {
  syt::OrderOptions opts;

  run({1, "weak, kl and chain orders coincide for n = 2..5", 10}, [&](std::string& detail) {
    for (int n = 2; n <= 5; ++n) {
      const Poset& w = syt::order_poset(OrderKind::weak, n, opts);
      require(w.same_order_as(syt::order_poset(OrderKind::kl, n, opts)),
              "kl differs from weak at n = " + std::to_string(n));
      require(w.same_order_as(syt::order_poset(OrderKind::chain, n, opts)),
              "chain differs from weak at n = " + std::to_string(n));
    }
    detail = "relation sets identical";
  });

  run({2, "divergence at n = 6 is exactly the known four kl pairs", 120}, [&](std::string& detail) {
    auto rep = syt::sandwich_report(6, opts);
    std::vector<std::pair<std::string, std::string>> expect = {
        {"1 2 3|4 5 6", "1 2 5|3 6|4"},
        {"1 2 3|4 5 6", "1 3 6|2 4|5"},
        {"1 2 5|3 4|6", "1 4|2 5|3 6"},
        {"1 3 4|2 6|5", "1 4|2 5|3 6"}};
    require(rep.kl_minus_weak == expect, "kl minus weak is not the expected four pairs");
    bool has = false;
    for (const auto& p : rep.chain_minus_kl)
      if (p == std::make_pair(std::string("1 3 4|2 6|5"), std::string("1 3 6|2 4|5"))) has = true;
    require(has, "chain minus kl misses the equal-shape pair");
    detail = "kl adds 4 pairs; chain adds " + std::to_string(rep.chain_minus_kl.size()) + " more";
  });

  run({3, "product of classes equals the gluing interval for all sizes <= 6", 60},
      [&](std::string& detail) {
        auto prod = syt::pr_product(Tableau::parse("1 2|3"), Tableau::parse("1|2"));
        std::set<std::string> got;
        for (const auto& t : prod.tableaux) got.insert(t.str());
        require(got == std::set<std::string>{"1 2 4|3 5", "1 2 4|3|5", "1 2|3 4|5", "1 2|3|4|5"},
                "five-cell example product is wrong");
        int checked = 0;
        for (int k = 1; k <= 5; ++k)
          for (int l = 1; l + k <= 6; ++l)
            for (const Tableau& a : syt::enumerate_syt(k))
              for (const Tableau& b : syt::enumerate_syt(l))
                for (OrderKind kind : {OrderKind::weak, OrderKind::kl, OrderKind::chain}) {
                  auto rep = syt::verify_product_interval(a, b, kind, opts);
                  require(rep.ok, "product/interval mismatch for " + a.str() + " * " + b.str() +
                                      " under " + syt::order_name(kind));
                  ++checked;
                }
        detail = std::to_string(checked) + " products verified";
      });

  run({4, "top-to-bottom mobius alternates: weak/chain n = 3..7, kl n = 3..6", 60},
      [&](std::string& detail) {
        for (int n = 3; n <= 7; ++n)
          for (OrderKind kind : {OrderKind::weak, OrderKind::chain}) {
            const Poset& p = syt::order_poset(kind, n, opts);
            long long mu = p.mobius(p.bottom(), p.top());
            require(mu == expected_top_mobius(n),
                    syt::order_name(kind) + " n = " + std::to_string(n) + " gives " +
                        std::to_string(mu));
          }
        for (int n = 3; n <= 6; ++n) {
          const Poset& p = syt::order_poset(OrderKind::kl, n, opts);
          long long mu = p.mobius(p.bottom(), p.top());
          require(mu == expected_top_mobius(n),
                  "kl n = " + std::to_string(n) + " gives " + std::to_string(mu));
        }
        detail = "all values equal (-1)^(n-3)";
      });

  run({5, "eight-cell posets contain intervals of mobius -2 (weak) and +2 (chain)", 1800},
      [&](std::string& detail) {
        auto scan = [&](OrderKind kind, long long target) {
          const Poset& p = syt::order_poset(kind, 8, opts);
          for (std::size_t x = 0; x < p.size(); ++x) {
            const auto& row = p.mobius_row(x);
            for (std::size_t y = 0; y < p.size(); ++y)
              if (p.leq(x, y) && row[y] == target)
                return "[" + p.label(x) + ", " + p.label(y) + "]";
          }
          throw std::runtime_error("no interval of mobius " + std::to_string(target) + " in " +
                                   syt::order_name(kind));
        };
        std::string w = scan(OrderKind::weak, -2);
        std::string c = scan(OrderKind::chain, +2);
        detail = "weak: " + w + "; chain: " + c;
      });

  run({6, "skew top mobius follows the rectangle dichotomy", 300}, [&](std::string& detail) {
    struct Inst {
      const char* mu;
      int n;
    };
    for (Inst inst : {Inst{"1", 2}, Inst{"1", 3}, Inst{"2,2", 2}, Inst{"2,1", 2}, Inst{"2,1", 3}}) {
      auto rep = syt::verify_skew_mobius(syt::superstandard(Partition::parse(inst.mu)), inst.n,
                                         OrderKind::weak, opts);
      require(rep.computed == rep.expected, "weak-base mismatch");
    }
    for (Inst inst : {Inst{"2,2", 2}, Inst{"2,1", 2}}) {
      auto rep =
          syt::verify_skew_mobius(Partition::parse(inst.mu), inst.n, OrderKind::kl, opts);
      require(rep.computed == rep.expected, "kl-base mismatch");
    }
    detail = "7 instances: (-1)^(n-2) when rectangular, 0 otherwise";
  });

  run({7, "suspension map triple satisfies all four hypotheses", 30}, [&](std::string& detail) {
    int count = 0;
    for (const char* r : {"1", "1 2|3"})
      for (int n : {2, 3}) {
        syt::suspension_maps(Tableau::parse(r), n, OrderKind::weak, opts);
        ++count;
      }
    detail = std::to_string(count) + " instances verified";
  });

  run({8, "descent/shape maps order-preserving; transpose reverses, evacuation preserves", 300},
      [&](std::string& detail) {
        for (int n = 2; n <= 6; ++n)
          for (OrderKind kind : {OrderKind::weak, OrderKind::kl, OrderKind::chain}) {
            require(syt::verify_descent_map(kind, n, opts),
                    "descent map fails for " + syt::order_name(kind) + " at n = " +
                        std::to_string(n));
            const Poset& p = syt::order_poset(kind, n, opts);
            for (std::size_t i = 0; i < p.size(); ++i)
              for (std::size_t j = 0; j < p.size(); ++j) {
                if (!p.leq(i, j)) continue;
                Tableau a = Tableau::parse(p.label(i)), b = Tableau::parse(p.label(j));
                require(syt::opposite_dominance_leq(a.outer_shape(), b.outer_shape()),
                        "shape map fails");
                require(p.leq(syt::transpose(b).str(), syt::transpose(a).str()),
                        "transpose is not order-reversing");
                require(p.leq(syt::evacuate(a).str(), syt::evacuate(b).str()),
                        "evacuation is not order-preserving");
              }
          }
        detail = "all orders, n <= 6";
      });

  run({9, "shortest weak chains have size n; longest chains match the dominance lattice", 600},
      [&](std::string& detail) {
        // brute-force longest chain of (Par_n, <=op_dom) by exhaustive extension
        auto dominance_longest = [](int n) {
          auto parts = syt::enumerate_partitions(n);
          std::vector<std::vector<std::size_t>> above(parts.size());
          for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = 0; b < parts.size(); ++b)
              if (a != b && syt::opposite_dominance_leq(parts[a], parts[b])) above[a].push_back(b);
          std::size_t best = 0;
          std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t len) {
            best = std::max(best, len);
            for (std::size_t w : above[v]) rec(w, len + 1);
          };
          for (std::size_t v = 0; v < parts.size(); ++v) rec(v, 1);
          return best;
        };
        std::vector<std::string> bad;
        for (int n = 3; n <= 7; ++n) {
          std::size_t dom = dominance_longest(n);
          const Poset& w = syt::order_poset(OrderKind::weak, n, opts);
          auto ce = w.chain_extremes();
          if (ce.shortest_saturated != static_cast<std::size_t>(n))
            bad.push_back("weak shortest at n=" + std::to_string(n) + " is " +
                          std::to_string(ce.shortest_saturated));
          if (ce.longest != dom)
            bad.push_back("weak longest at n=" + std::to_string(n) + " is " +
                          std::to_string(ce.longest) + " vs dominance " + std::to_string(dom));
          if (n <= 6) {
            const Poset& k = syt::order_poset(OrderKind::kl, n, opts);
            std::size_t kl = k.chain_extremes().longest;
            if (kl != dom)
              bad.push_back("kl longest at n=" + std::to_string(n) + " is " + std::to_string(kl) +
                            " vs dominance " + std::to_string(dom));
          }
          const Poset& c = syt::order_poset(OrderKind::chain, n, opts);
          std::size_t cl = c.chain_extremes().longest;
          if (cl != dom)
            bad.push_back("chain longest at n=" + std::to_string(n) + " is " +
                          std::to_string(cl) + " vs dominance " + std::to_string(dom));
        }
        if (!bad.empty()) {
          std::string msg;
          for (const auto& b : bad) msg += (msg.empty() ? "" : "; ") + b;
          throw std::runtime_error(msg);
        }
        detail = "weak 3..7, kl 3..6, chain 3..7 all match";
      });

  run({10, "kl engine health: cells, degree bound, constant term, pivot independence", 300},
      [&](std::string& detail) {
        for (int n = 2; n <= 6; ++n) syt::kl_order_on_tableaux(n);  // throws on cell mismatch
        syt::KlTable a(5, syt::KlPivot::smallest), b(5, syt::KlPivot::largest);
        bool all_ok = true;
        syt::for_each_perm(5, [&](const std::vector<int>& uw) {
          Perm u(uw);
          syt::for_each_perm(5, [&](const std::vector<int>& ww) {
            Perm w(ww);
            const auto& p = a.polynomial(u, w);
            if (p != b.polynomial(u, w)) all_ok = false;
            if (!(u == w) && !p.is_zero()) {
              if (p.coeff(0) != 1) all_ok = false;
              if (2 * p.degree() > syt::length(w) - syt::length(u) - 1) all_ok = false;
            }
          });
        });
        require(all_ok, "an S_5 invariant failed");
        detail = "cells = Knuth classes for n <= 6; descent convention: " +
                 syt::convention_name(syt::resolve_kl_convention(syt::DescentConvention::autodetect));
      });

  run({11, "counterexample regression", 30}, [&](std::string& detail) {
    const Poset& c6 = syt::order_poset(OrderKind::chain, 6, opts);
    const Poset& w6 = syt::order_poset(OrderKind::weak, 6, opts);
    const Poset& c7 = syt::order_poset(OrderKind::chain, 7, opts);
    // equal shapes, still strictly chain-comparable
    require(c6.leq("1 3 4|2 6|5", "1 3 6|2 4|5") && !c6.leq("1 3 6|2 4|5", "1 3 4|2 6|5"),
            "equal-shape chain comparison lost");
    // chain order loses comparability after inserting the missing letter
    Tableau t_acute = Tableau::parse("1 3 7|2 5|6"), s_acute = Tableau::parse("1 3 5|2 7|6");
    require(c6.leq(syt::standardize(s_acute).str(), syt::standardize(t_acute).str()),
            "six-cell standardized pair should compare in chain order");
    require(!c7.leq(syt::insert_letter(s_acute, 4).str(), syt::insert_letter(t_acute, 4).str()),
            "insertion should break the chain comparison");
    // dual Knuth translation breaks chain order
    require(c6.leq("1 3 4|2 6|5", "1 3 6|2 4|5") && !c6.leq("1 3 5|2 6|4", "1 3 5|2 4|6"),
            "chain translation counterexample lost");
    // and weak order
    require(w6.leq("1 2 4|3 5 6", "1 2 4|3 6|5") && !w6.leq("1 2 3|4 5 6", "1 2 5|3 6|4"),
            "weak translation counterexample lost");
    // replacing the inner tableau breaks chain order
    require(c6.leq("1 2 5|3 4|6", "1 2 5|3 6|4") && !c6.leq("1 3 5|2 4|6", "1 3 5|2 6|4"),
            "inner replacement counterexample lost");
    detail = "all five counterexample families reproduce";
  });

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all criteria passed\n");
  return failures ? 1 : 0;
}
