#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "syt/error.hpp"
#include "syt/kl.hpp"
#include "syt/partition.hpp"
#include "syt/permutation.hpp"
#include "syt/poset.hpp"
#include "syt/rsk.hpp"
#include "syt/tableau.hpp"

namespace syt {

enum class OrderKind { weak, kl, chain };

inline std::string order_name(OrderKind k) {
  switch (k) {
    case OrderKind::weak: return "weak";
    case OrderKind::kl: return "kl";
    default: return "chain";
  }
}

inline OrderKind parse_order_kind(const std::string& s) {
  if (s == "weak") return OrderKind::weak;
  if (s == "kl") return OrderKind::kl;
  if (s == "chain") return OrderKind::chain;
  throw error("BadRange", "unknown order '" + s + "' (weak|kl|chain)");
}

namespace detail {

template <typename Fn>
inline void parallel_for(int threads, std::size_t count, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    fn(std::size_t{0}, count);
    return;
  }
  std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  std::size_t chunk = (count + nt - 1) / nt;
  for (std::size_t t = 0; t < nt; ++t) {
    std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

// Weak order on SYT_n: transitive closure of {(P(u), P(u s_i))} over the
// right-multiplication covers of the weak Bruhat order on S_n.
inline Poset weak_order_poset(int n) {
  if (n < 1 || n > 8) throw error("BadRange", "weak_order_poset supports 1 <= n <= 8");
  std::vector<Tableau> tabs = enumerate_syt(n);
  std::vector<std::string> labels;
  labels.reserve(tabs.size());
  std::map<std::string, std::size_t> at;
  for (const auto& t : tabs) {
    at[t.str()] = labels.size();
    labels.push_back(t.str());
  }
  // insertion tableau per permutation, then map covers through it
  std::vector<std::size_t> ptab;
  {
    std::vector<std::size_t>& dst = ptab;
    for_each_perm(n, [&](const std::vector<int>& w) {
      dst.push_back(at.at(insertion_tableau(w).str()));
    });
  }
  auto rank = [n](const std::vector<int>& w) {
    static const std::size_t fact[9] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};
    std::size_t r = 0;
    for (int i = 0; i < n; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n; ++j)
        if (w[static_cast<std::size_t>(j)] < w[static_cast<std::size_t>(i)]) ++smaller;
      r += static_cast<std::size_t>(smaller) * fact[n - 1 - i];
    }
    return r;
  };
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::size_t urank = 0;
  for_each_perm(n, [&](const std::vector<int>& u) {
    std::vector<int> v = u;
    for (int i = 0; i + 1 < n; ++i) {
      if (v[static_cast<std::size_t>(i)] < v[static_cast<std::size_t>(i + 1)]) {
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 1)]);
        std::size_t a = ptab[urank], b = ptab[rank(v)];
        if (a != b) edges.emplace(a, b);
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 1)]);
      }
    }
    ++urank;
  });
  std::vector<std::pair<std::string, std::string>> rels;
  rels.reserve(edges.size());
  for (const auto& [a, b] : edges) rels.emplace_back(labels[a], labels[b]);
  return Poset::build(std::move(labels), rels);
}

namespace detail {

// shapes of st(T_{[i,j]}) for all segments, as ids into partitions_of(j-i+1)
struct SegmentShapes {
  int n;
  std::vector<std::vector<int>> shape_id;  // [i-1][j-i] -> id
};

struct ChainContext {
  int n;
  std::vector<std::vector<std::vector<char>>> dom;  // per size m: dom[a][b] = a <=op b
  std::map<std::string, int> shape_ids[11];

  explicit ChainContext(int n_) : n(n_) {
    for (int m = 1; m <= n; ++m) {
      auto parts = enumerate_partitions(m);
      auto& ids = shape_ids[m];
      for (std::size_t i = 0; i < parts.size(); ++i) ids[parts[i].str()] = static_cast<int>(i);
      std::vector<std::vector<char>> d(parts.size(), std::vector<char>(parts.size()));
      for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = 0; b < parts.size(); ++b)
          d[a][b] = opposite_dominance_leq(parts[a], parts[b]) ? 1 : 0;
      dom.push_back(std::move(d));
    }
  }

  const std::vector<std::vector<char>>& dom_of(int m) const {
    return dom[static_cast<std::size_t>(m - 1)];
  }

  SegmentShapes segments(const Tableau& t) const {
    SegmentShapes s;
    s.n = n;
    auto word = t.reading_word();
    s.shape_id.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      auto& row = s.shape_id[static_cast<std::size_t>(i - 1)];
      row.resize(static_cast<std::size_t>(n - i + 1));
      for (int j = i; j <= n; ++j) {
        std::vector<int> sub;
        for (int v : word)
          if (i <= v && v <= j) sub.push_back(v);
        Partition sh = insertion_tableau(sub).outer_shape();
        row[static_cast<std::size_t>(j - i)] = shape_ids[j - i + 1].at(sh.str());
      }
    }
    return s;
  }

  bool leq(const SegmentShapes& a, const SegmentShapes& b) const {
    // full range first: the cheapest frequent rejector
    if (!dom_of(n)[static_cast<std::size_t>(a.shape_id[0][static_cast<std::size_t>(n - 1)])]
                  [static_cast<std::size_t>(b.shape_id[0][static_cast<std::size_t>(n - 1)])])
      return false;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (i == 1 && j == n) continue;
        if (!dom_of(j - i + 1)[static_cast<std::size_t>(
                a.shape_id[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - i)])]
                              [static_cast<std::size_t>(
                b.shape_id[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - i)])])
          return false;
      }
    return true;
  }
};

}  // namespace detail

// S <=_chain T: opposite dominance of st-restriction shapes on all segments.
inline bool chain_leq(const Tableau& s, const Tableau& t) {
  if (s.size() != t.size()) throw error("SizeMismatch", "chain_leq needs equal sizes");
  if (!s.is_straight() || !t.is_straight())
    throw error("InvalidTableau", "chain_leq needs straight tableaux");
  int n = s.size();
  detail::ChainContext ctx(n);
  return ctx.leq(ctx.segments(s), ctx.segments(t));
}

inline Poset chain_order_poset(int n, int threads = 1) {
  if (n < 1 || n > 8) throw error("BadRange", "chain_order_poset supports 1 <= n <= 8");
  std::vector<Tableau> tabs = enumerate_syt(n);
  std::size_t N = tabs.size();
  detail::ChainContext ctx(n);
  std::vector<detail::SegmentShapes> segs;
  segs.reserve(N);
  for (const auto& t : tabs) segs.push_back(ctx.segments(t));
  std::vector<detail::Bitset> rows(N, detail::Bitset(N));
  detail::parallel_for(threads, N, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t a = lo; a < hi; ++a)
      for (std::size_t b = 0; b < N; ++b)
        if (a == b || ctx.leq(segs[a], segs[b])) rows[a].set(b);
  });
  std::vector<std::string> labels;
  labels.reserve(N);
  for (const auto& t : tabs) labels.push_back(t.str());
  return poset_from_leq_rows(std::move(labels), std::move(rows));
}

struct OrderOptions {
  int threads = 1;
  DescentConvention convention = DescentConvention::autodetect;
  bool allow_big = false;
};

// Cached dispatch over the three builders. KL is heavy: n = 7 requires
// allow_big, n = 8 is refused outright (the S_8 table is never materialized).
inline const Poset& order_poset(OrderKind kind, int n, const OrderOptions& opts = {}) {
  if (kind == OrderKind::kl) {
    if (n > 7) throw error("BadRange", "kl order is limited to n <= 7");
    if (n == 7 && !opts.allow_big)
      throw error("AllowBigRequired",
                  "kl at n = 7 computes Kazhdan-Lusztig polynomials for all 5040 permutations; "
                  "pass --allow-big to proceed");
  }
  DescentConvention conv =
      kind == OrderKind::kl ? resolve_kl_convention(opts.convention) : DescentConvention::right;
  static std::mutex m;
  static std::map<std::tuple<int, int, int>, Poset> cache;
  std::tuple<int, int, int> key{static_cast<int>(kind), n, static_cast<int>(conv)};
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Poset built = kind == OrderKind::weak    ? weak_order_poset(n)
                : kind == OrderKind::chain ? chain_order_poset(n, opts.threads)
                                           : kl_order_on_tableaux(n, conv);
  std::lock_guard<std::mutex> lock(m);
  return cache.emplace(std::move(key), std::move(built)).first->second;
}

// Inclusion report weak <= kl <= chain with the exact difference pairs; the
// geometric order is only known to sit between kl and chain.
struct SandwichReport {
  int n = 0;
  std::vector<std::pair<std::string, std::string>> kl_minus_weak;
  std::vector<std::pair<std::string, std::string>> chain_minus_kl;
  std::size_t weak_pairs = 0, kl_pairs = 0, chain_pairs = 0;
};

inline SandwichReport sandwich_report(int n, const OrderOptions& opts = {}) {
  if (n > 7) throw error("BadRange", "sandwich_report is limited by the kl engine to n <= 7");
  const Poset& w = order_poset(OrderKind::weak, n, opts);
  const Poset& k = order_poset(OrderKind::kl, n, opts);
  const Poset& c = order_poset(OrderKind::chain, n, opts);
  auto wr = w.relation_pairs(), kr = k.relation_pairs(), cr = c.relation_pairs();
  SandwichReport rep;
  rep.n = n;
  rep.weak_pairs = wr.size();
  rep.kl_pairs = kr.size();
  rep.chain_pairs = cr.size();
  for (const auto& p : wr)
    if (!std::binary_search(kr.begin(), kr.end(), p))
      throw error("InclusionViolated", "weak pair (" + p.first + ", " + p.second + ") missing from kl");
  for (const auto& p : kr) {
    if (!std::binary_search(cr.begin(), cr.end(), p))
      throw error("InclusionViolated", "kl pair (" + p.first + ", " + p.second + ") missing from chain");
    if (!std::binary_search(wr.begin(), wr.end(), p)) rep.kl_minus_weak.push_back(p);
  }
  for (const auto& p : cr)
    if (!std::binary_search(kr.begin(), kr.end(), p)) rep.chain_minus_kl.push_back(p);
  return rep;
}

// labels for the Boolean algebra 2^[k]: "{}", "{1}", "{1,3}", ...
inline std::string subset_label(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

inline Poset boolean_algebra_poset(int k) {
  if (k < 0 || k > 20) throw error("BadRange", "boolean_algebra_poset supports 0 <= k <= 20");
  std::size_t N = std::size_t{1} << k;
  std::vector<std::string> labels(N);
  for (std::size_t m = 0; m < N; ++m) {
    std::vector<int> xs;
    for (int i = 0; i < k; ++i)
      if (m >> i & 1) xs.push_back(i + 1);
    labels[m] = subset_label(xs);
  }
  std::vector<detail::Bitset> rows(N, detail::Bitset(N));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      if ((a & ~b) == 0) rows[a].set(b);
  return poset_from_leq_rows(std::move(labels), std::move(rows));
}

// (Par_n, <=^op_dom) with partition labels
inline Poset dominance_order_poset(int n) {
  auto parts = enumerate_partitions(n);
  std::vector<std::string> labels;
  labels.reserve(parts.size());
  for (const auto& p : parts) labels.push_back(p.str());
  std::vector<detail::Bitset> rows(parts.size(), detail::Bitset(parts.size()));
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = 0; b < parts.size(); ++b)
      if (opposite_dominance_leq(parts[a], parts[b])) rows[a].set(b);
  return poset_from_leq_rows(std::move(labels), std::move(rows));
}

// Des is order-preserving into (2^[n-1], subset)
inline bool verify_descent_map(OrderKind kind, int n, const OrderOptions& opts = {}) {
  const Poset& p = order_poset(kind, n, opts);
  Poset b = boolean_algebra_poset(n - 1);
  return is_order_preserving(
      [](const std::string& l) { return subset_label(descent_set(Tableau::parse(l))); }, p, b);
}

struct CoverDescentReport {
  bool ok = true;
  std::string cover_lo, cover_hi;  // witness when a cover adds two descents
};

// Every weak-order cover adds at most one new descent.
inline CoverDescentReport verify_weak_cover_descents(int n, const OrderOptions& opts = {}) {
  const Poset& p = order_poset(OrderKind::weak, n, opts);
  CoverDescentReport rep;
  for (const auto& [i, j] : p.covers()) {
    auto di = descent_set(Tableau::parse(p.label(i)));
    auto dj = descent_set(Tableau::parse(p.label(j)));
    std::vector<int> added;
    std::set_difference(dj.begin(), dj.end(), di.begin(), di.end(), std::back_inserter(added));
    if (added.size() >= 2) {
      rep.ok = false;
      rep.cover_lo = p.label(i);
      rep.cover_hi = p.label(j);
      return rep;
    }
  }
  return rep;
}

}  // namespace syt
