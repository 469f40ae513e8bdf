#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "syt/error.hpp"
#include "syt/orders.hpp"
#include "syt/permutation.hpp"
#include "syt/poset.hpp"
#include "syt/rsk.hpp"
#include "syt/tableau.hpp"

namespace syt {

namespace detail {

inline std::vector<int> shifted_word(const Tableau& s, int k) {
  std::vector<int> w = s.reading_word();
  for (int& x : w) x += k;
  return w;
}

}  // namespace detail

// T/S: slide S (shifted up by |T|) onto T from the left; realized as the
// insertion tableau of the concatenated reading words. Restricting T/S to
// [1,|T|] gives back T and the rest standardizes to S.
inline Tableau slash(const Tableau& t, const Tableau& s) {
  std::vector<int> word = t.reading_word();
  std::vector<int> tail = detail::shifted_word(s, t.size());
  word.insert(word.end(), tail.begin(), tail.end());
  return insertion_tableau(word);
}

// T\S: slide S onto T from the bottom; the shifted word goes first.
inline Tableau backslash(const Tableau& t, const Tableau& s) {
  std::vector<int> word = detail::shifted_word(s, t.size());
  std::vector<int> tail = t.reading_word();
  word.insert(word.end(), tail.begin(), tail.end());
  return insertion_tableau(word);
}

// Product of plactic classes: shuffle every u in C_T with every shifted w in
// C_S and collect the insertion tableaux. The shuffle words themselves are
// kept for cross-checks; they are pairwise distinct.
struct PrProduct {
  std::vector<Tableau> tableaux;            // distinct, sorted by canonical string
  std::vector<std::vector<int>> words;      // all shuffle words
};

inline PrProduct pr_product(const Tableau& t, const Tableau& s) {
  int k = t.size(), l = s.size();
  if (k + l > 8) throw error("BadRange", "pr_product limited to |T| + |S| <= 8");
  std::vector<std::vector<int>> left, right;
  if (k == 0) left.push_back({});
  else
    for (const Perm& u : knuth_class(t)) left.push_back(u.word());
  if (l == 0) right.push_back({});
  else
    for (const Perm& w : knuth_class(s)) {
      std::vector<int> shifted = w.word();
      for (int& x : shifted) x += k;
      right.push_back(std::move(shifted));
    }
  PrProduct out;
  std::set<std::string> seen;
  for (const auto& u : left)
    for (const auto& w : right)
      for (auto& sh : shuffles(u, w)) {
        Tableau p = insertion_tableau(sh);
        if (seen.insert(p.str()).second) out.tableaux.push_back(p);
        out.words.push_back(std::move(sh));
      }
  std::sort(out.tableaux.begin(), out.tableaux.end(),
            [](const Tableau& a, const Tableau& b) { return a.str() < b.str(); });
  return out;
}

struct ProductIntervalReport {
  bool ok = true;
  std::vector<std::string> product_only;   // in the product, not in [T/S, T\S]
  std::vector<std::string> interval_only;
};

// The tableau set of T * S must equal the interval [T/S, T\S] of the chosen
// order on SYT_{|T|+|S|}.
inline ProductIntervalReport verify_product_interval(const Tableau& t, const Tableau& s,
                                                     OrderKind kind,
                                                     const OrderOptions& opts = {}) {
  PrProduct prod = pr_product(t, s);
  const Poset& p = order_poset(kind, t.size() + s.size(), opts);
  std::size_t lo = p.index(slash(t, s).str());
  std::size_t hi = p.index(backslash(t, s).str());
  std::set<std::string> interval;
  for (std::size_t z = 0; z < p.size(); ++z)
    if (p.leq(lo, z) && p.leq(z, hi)) interval.insert(p.label(z));
  ProductIntervalReport rep;
  std::set<std::string> product;
  for (const auto& x : prod.tableaux) product.insert(x.str());
  for (const auto& x : product)
    if (!interval.count(x)) rep.product_only.push_back(x);
  for (const auto& x : interval)
    if (!product.count(x)) rep.interval_only.push_back(x);
  rep.ok = rep.product_only.empty() && rep.interval_only.empty();
  return rep;
}

}  // namespace syt
