#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syt/error.hpp"
#include "syt/orders.hpp"
#include "syt/partition.hpp"
#include "syt/poset.hpp"
#include "syt/tableau.hpp"

namespace syt {

// All skew standard tableaux on [n] with inner shape mu (outer shape free).
inline std::vector<Tableau> enumerate_skew_syt(const Partition& mu, int n) {
  if (n < 1 || mu.size() + n > 8)
    throw error("BadRange", "enumerate_skew_syt limited to |mu| + n <= 8");
  std::vector<Tableau> out;
  for (const Partition& lam : enumerate_partitions(mu.size() + n)) {
    if (!contains(lam, mu)) continue;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(lam.rows()));
    std::function<void(int)> rec = [&](int v) {
      if (v > n) {
        std::vector<std::vector<int>> trimmed = rows;
        out.push_back(Tableau::skew(mu, std::move(trimmed)));
        return;
      }
      for (int r = 0; r < lam.rows(); ++r) {
        int col = mu.row(r) + static_cast<int>(rows[static_cast<std::size_t>(r)].size());
        if (col >= lam.row(r)) continue;
        if (r > 0 && col >= mu.row(r - 1) + static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()))
          continue;  // cell above not filled yet (and not inner)
        rows[static_cast<std::size_t>(r)].push_back(v);
        rec(v + 1);
        rows[static_cast<std::size_t>(r)].pop_back();
      }
    };
    rec(1);
  }
  return out;
}

// Row-superstandard filling of mu: rows filled 1,2,... left to right, top to
// bottom. The canonical choice of inner tableau for lifts.
inline Tableau superstandard(const Partition& mu) {
  std::vector<std::vector<int>> rows;
  int v = 1;
  for (int r = 0; r < mu.rows(); ++r) {
    std::vector<int> row;
    for (int c = 0; c < mu.row(r); ++c) row.push_back(v++);
    rows.push_back(std::move(row));
  }
  return Tableau::straight(std::move(rows));
}

// Fill the inner shape of U with R and shift U's entries above R's alphabet;
// the result is a straight standard tableau on [|R| + n].
inline Tableau lift_skew(const Tableau& u, const Tableau& r) {
  if (!r.is_straight()) throw error("InvalidTableau", "inner filler must be straight");
  if (r.outer_shape() != u.inner_shape())
    throw error("SizeMismatch", "inner filler shape " + r.outer_shape().str() +
                                    " does not match inner shape " + u.inner_shape().str());
  int k = r.size();
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < u.rows().size(); ++i) {
    std::vector<int> row;
    if (static_cast<int>(i) < r.outer_shape().rows())
      row = r.rows()[i];
    for (int v : u.rows()[i]) row.push_back(v + k);
    rows.push_back(std::move(row));
  }
  return Tableau::straight(std::move(rows));
}

// Inverse of lift_skew: the skew part of T above the first k values.
inline Tableau skew_part(const Tableau& t, int k) {
  Tableau seg = restrict_segment(t, k + 1, t.size());
  return standardize(seg);
}

// 0-hat: R with k+1..k+n across the first row; 1-hat: down the first column.
inline Tableau fixed_inner_bottom(const Tableau& r, int n) {
  Tableau t = r;
  for (int i = 0; i < n; ++i) t = extend_row(t);
  return t;
}

inline Tableau fixed_inner_top(const Tableau& r, int n) {
  Tableau t = r;
  for (int i = 0; i < n; ++i) t = extend_col(t);
  return t;
}

// Induced subposet of (SYT_m, base) on {T : T_{[1,k]} = R}; verified to equal
// the interval [0-hat_{R,n}, 1-hat_{R,n}].
inline Poset fixed_inner_poset(const Tableau& r, int n, OrderKind base,
                               const OrderOptions& opts = {}) {
  if (!r.is_straight() || !r.is_standard())
    throw error("InvalidTableau", "fixed_inner_poset needs a straight standard inner tableau");
  int k = r.size(), m = k + n;
  const Poset& big = order_poset(base, m, opts);
  std::vector<std::size_t> sel;
  for (std::size_t i = 0; i < big.size(); ++i)
    if (restrict_initial(Tableau::parse(big.label(i)), k) == r) sel.push_back(i);
  Poset sub = big.induced(sel);
  Poset iv = big.interval(fixed_inner_bottom(r, n).str(), fixed_inner_top(r, n).str());
  if (!sub.same_order_as(iv))
    throw error("IntervalMismatch",
                "SYT_m^R differs from [0-hat, 1-hat] in the " + order_name(base) + " order");
  return sub;
}

// Def-6.5-style order on SYT_n^mu. Only bases with the inner translation
// property are admitted, i.e. kl; U <= V iff their R-lifts compare, with R
// the row-superstandard filling (the choice of R does not matter and, when mu
// has more than one filling, this is verified against a second R).
inline Poset skew_order_poset(const Partition& mu, int n, OrderKind base,
                              const OrderOptions& opts = {}) {
  if (base != OrderKind::kl)
    throw error("InnerTranslationUnsupported",
                "the " + order_name(base) +
                    " order lacks the inner translation property; skew orders need base kl");
  if (mu.empty()) return order_poset(OrderKind::kl, n, opts);
  int m = mu.size() + n;
  const Poset& big = order_poset(OrderKind::kl, m, opts);
  std::vector<Tableau> skews = enumerate_skew_syt(mu, n);
  auto build_with = [&](const Tableau& r) {
    std::vector<std::string> labels;
    std::vector<std::size_t> lifted;
    labels.reserve(skews.size());
    for (const auto& u : skews) {
      labels.push_back(u.str());
      lifted.push_back(big.index(lift_skew(u, r).str()));
    }
    std::vector<detail::Bitset> rows(skews.size(), detail::Bitset(skews.size()));
    for (std::size_t a = 0; a < skews.size(); ++a)
      for (std::size_t b = 0; b < skews.size(); ++b)
        if (big.leq(lifted[a], lifted[b])) rows[a].set(b);
    return poset_from_leq_rows(std::move(labels), std::move(rows));
  };
  Tableau r0 = superstandard(mu);
  Poset p = build_with(r0);
  auto fillers = enumerate_syt_of_shape(mu);
  if (fillers.size() > 1) {
    const Tableau& alt = fillers[0] == r0 ? fillers[1] : fillers[0];
    Poset p2 = build_with(alt);
    if (!p.same_order_as(p2) || !poset_isomorphic(p, p2))
      throw error("CellMismatch", "skew order depends on the inner filling R");
  }
  return p;
}

// The suspension map triple between P = [0,1]_{R,n} and Q = [0,1]_{R,n-1}:
// f restricts to the initial segment, i appends m to row 1, j appends m to
// column 1. All four hypotheses are checked mechanically.
struct SuspensionReport {
  std::size_t p_size = 0, q_size = 0;
  bool ideal_filter_split = true;   // I ideal, J filter, P = I disjoint-union J
  bool images_ok = true;            // (i)  im(i) in I, im(j) in J
  bool sections_ok = true;          // (ii) f o i = f o j = id
  bool squeeze_ok = true;           // (iii) i(f(T)) <= T <= j(f(T))
  bool fibers_ok = true;            // (iv) fiber conditions at 0-hat, 1-hat
  bool maps_order_preserving = true;
};

inline SuspensionReport suspension_maps(const Tableau& r, int n, OrderKind base,
                                        const OrderOptions& opts = {}) {
  if (n < 2) throw error("BadRange", "suspension_maps needs n >= 2");
  int k = r.size(), m = k + n;
  Poset P = fixed_inner_poset(r, n, base, opts);
  Poset Q = fixed_inner_poset(r, n - 1, base, opts);
  if (Q.size() < 2) throw error("HypothesisFailed", "Q must have distinct bottom and top");
  SuspensionReport rep;
  rep.p_size = P.size();
  rep.q_size = Q.size();
  std::size_t np = P.size(), nq = Q.size();
  std::vector<std::size_t> f(np);
  std::vector<char> inJ(np);
  for (std::size_t a = 0; a < np; ++a) {
    Tableau t = Tableau::parse(P.label(a));
    f[a] = Q.index(restrict_initial(t, m - 1).str());
    auto des = descent_set(t);
    inJ[a] = std::binary_search(des.begin(), des.end(), m - 1) ? 1 : 0;
  }
  std::vector<std::size_t> gi(nq), gj(nq);
  for (std::size_t b = 0; b < nq; ++b) {
    Tableau t = Tableau::parse(Q.label(b));
    gi[b] = P.index(extend_row(t).str());
    gj[b] = P.index(extend_col(t).str());
  }
  for (std::size_t a = 0; a < np && rep.maps_order_preserving; ++a)
    for (std::size_t b = 0; b < np; ++b)
      if (P.leq(a, b) && !Q.leq(f[a], f[b])) {
        rep.maps_order_preserving = false;
        break;
      }
  for (std::size_t a = 0; a < nq && rep.maps_order_preserving; ++a)
    for (std::size_t b = 0; b < nq; ++b)
      if (Q.leq(a, b) && (!P.leq(gi[a], gi[b]) || !P.leq(gj[a], gj[b]))) {
        rep.maps_order_preserving = false;
        break;
      }
  // I = {m-1 not a descent} must be an ideal, J its complement a filter
  for (std::size_t a = 0; a < np && rep.ideal_filter_split; ++a)
    for (std::size_t b = 0; b < np; ++b)
      if (P.leq(a, b) && !inJ[b] && inJ[a]) {
        rep.ideal_filter_split = false;
        break;
      }
  for (std::size_t b = 0; b < nq; ++b) {
    if (inJ[gi[b]] || !inJ[gj[b]]) rep.images_ok = false;
    if (f[gi[b]] != b || f[gj[b]] != b) rep.sections_ok = false;
  }
  for (std::size_t a = 0; a < np; ++a)
    if (!P.leq(gi[f[a]], a) || !P.leq(a, gj[f[a]])) rep.squeeze_ok = false;
  std::size_t bq = Q.bottom(), tq = Q.top(), bp = P.bottom(), tp = P.top();
  for (std::size_t a = 0; a < np; ++a) {
    if (f[a] == bq && a != bp && !inJ[a]) rep.fibers_ok = false;
    if (f[a] == tq && a != tp && inJ[a]) rep.fibers_ok = false;
  }
  if (!(rep.ideal_filter_split && rep.images_ok && rep.sections_ok && rep.squeeze_ok &&
        rep.fibers_ok && rep.maps_order_preserving)) {
    std::string what;
    if (!rep.maps_order_preserving) what = "a map is not order-preserving";
    else if (!rep.ideal_filter_split) what = "descent split is not ideal/filter";
    else if (!rep.images_ok) what = "image condition (i)";
    else if (!rep.sections_ok) what = "section condition (ii)";
    else if (!rep.squeeze_ok) what = "squeeze condition (iii)";
    else what = "fiber condition (iv)";
    throw error("HypothesisFailed", what + " for R = " + r.str() + ", n = " + std::to_string(n));
  }
  return rep;
}

struct SkewMobiusReport {
  std::string inner;        // mu or R
  int n = 0;
  OrderKind base = OrderKind::weak;
  bool rectangular = false;
  long long computed = 0;
  long long expected = 0;   // (-1)^(n-2) if rectangular else 0
  std::size_t poset_size = 0;
};

namespace detail {

inline SkewMobiusReport skew_mobius_for(const Poset& p, const std::string& inner_desc,
                                        bool rectangular, int n, OrderKind base) {
  SkewMobiusReport rep;
  rep.inner = inner_desc;
  rep.n = n;
  rep.base = base;
  rep.rectangular = rectangular;
  rep.poset_size = p.size();
  rep.expected = rectangular ? (n % 2 == 0 ? 1 : -1) : 0;
  rep.computed = p.mobius(p.bottom(), p.top());
  if (rep.computed != rep.expected)
    throw error("MobiusMismatch", "mu(0,1) = " + std::to_string(rep.computed) + " for " +
                                      inner_desc + ", n = " + std::to_string(n) + ", base " +
                                      order_name(base) + "; expected " +
                                      std::to_string(rep.expected));
  return rep;
}

}  // namespace detail

// Skew poset route (Def-6.5 order; base must be kl).
inline SkewMobiusReport verify_skew_mobius(const Partition& mu, int n, OrderKind base,
                                           const OrderOptions& opts = {}) {
  Poset p = skew_order_poset(mu, n, base, opts);
  return detail::skew_mobius_for(p, "mu = " + mu.str(), is_rectangular(mu), n, base);
}

// Fixed-inner-tableau route (any base between weak and chain).
inline SkewMobiusReport verify_skew_mobius(const Tableau& r, int n, OrderKind base,
                                           const OrderOptions& opts = {}) {
  Poset p = fixed_inner_poset(r, n, base, opts);
  return detail::skew_mobius_for(p, "R = " + r.str(), is_rectangular(r.outer_shape()), n, base);
}

}  // namespace syt
