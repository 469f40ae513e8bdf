#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "syt/error.hpp"

namespace syt {

namespace detail {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t size() const { return bits_; }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }

  bool operator==(const Bitset& o) const { return bits_ == o.bits_ && w_ == o.w_; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t m = w_[k];
      while (m) {
        fn((k << 6) + static_cast<std::size_t>(__builtin_ctzll(m)));
        m &= m - 1;
      }
    }
  }

  bool subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace detail

// Finite labelled poset. Labels are opaque canonical strings supplied by the
// producer; this class never inspects them. The closed relation is stored
// densely as bit rows up to kDenseLimit elements; beyond that only the input
// adjacency is kept and reachability rows are cached on demand.
class Poset {
 public:
  static constexpr std::size_t kDenseLimit = 4096;

  Poset() : cache_(std::make_unique<Cache>()) {}

  Poset(const Poset& o)
      : labels_(o.labels_), index_(o.index_), dense_(o.dense_), up_(o.up_), adj_(o.adj_),
        cache_(std::make_unique<Cache>()) {}

  Poset& operator=(const Poset& o) {
    if (this != &o) {
      labels_ = o.labels_;
      index_ = o.index_;
      dense_ = o.dense_;
      up_ = o.up_;
      adj_ = o.adj_;
      cache_ = std::make_unique<Cache>();
    }
    return *this;
  }

  Poset(Poset&&) = default;
  Poset& operator=(Poset&&) = default;

  // Reflexive-transitive closure of the given relation; rejects cycles.
  static Poset build(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& relations) {
    Poset p;
    p.labels_ = std::move(elements);
    p.init_index();
    std::vector<std::vector<std::size_t>> adj(p.size());
    for (const auto& [a, b] : relations) {
      std::size_t i = p.index(a), j = p.index(b);
      if (i != j) adj[i].push_back(j);
    }
    for (auto& v : adj) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    p.check_acyclic(adj);
    p.adj_ = std::move(adj);
    if (p.size() <= kDenseLimit) p.densify();
    return p;
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& elements() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  bool contains(const std::string& l) const { return index_.count(l) != 0; }

  std::size_t index(const std::string& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw error("UnmappedElement", "no element labelled '" + l + "'");
    return it->second;
  }

  bool leq(std::size_t a, std::size_t b) const {
    if (dense_) return up_[a].test(b);
    return reach_row(a).test(b);
  }

  bool leq(const std::string& a, const std::string& b) const { return leq(index(a), index(b)); }

  const detail::Bitset& up_row(std::size_t a) const {
    return dense_ ? up_[a] : reach_row(a);
  }

  // Hasse diagram: pairs (a,b) with a < b and nothing strictly between.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const {
    std::lock_guard<std::mutex> lock(cache_->m);
    if (!cache_->covers_done) {
      std::vector<std::pair<std::size_t, std::size_t>> cov;
      for (std::size_t i = 0; i < size(); ++i) {
        std::vector<std::size_t> above;
        up_row(i).for_each([&](std::size_t z) {
          if (z != i) above.push_back(z);
        });
        for (std::size_t j : above) {
          bool is_cover = true;
          for (std::size_t z : above) {
            if (z != j && leq(z, j)) {
              is_cover = false;
              break;
            }
          }
          if (is_cover) cov.emplace_back(i, j);
        }
      }
      std::sort(cov.begin(), cov.end());
      cache_->covers = std::move(cov);
      cache_->covers_done = true;
    }
    return cache_->covers;
  }

  // mu(x,y) by dynamic programming over [x, .); rows memoized per source.
  long long mobius(std::size_t x, std::size_t y) const {
    if (!leq(x, y)) throw error("NotComparable", label(x) + " is not below " + label(y));
    return mobius_row(x)[y];
  }

  long long mobius(const std::string& x, const std::string& y) const {
    return mobius(index(x), index(y));
  }

  // full mu(x, -) row; entries are meaningful for z >= x and zero elsewhere
  const std::vector<long long>& mobius_row(std::size_t x) const {
    std::lock_guard<std::mutex> lock(cache_->mobius_m);
    auto it = cache_->mobius_rows.find(x);
    if (it != cache_->mobius_rows.end()) return it->second;
    std::vector<std::size_t> above;
    up_row(x).for_each([&](std::size_t z) { above.push_back(z); });
    std::vector<std::pair<std::size_t, std::size_t>> keyed;  // (|[x,z]|, z)
    keyed.reserve(above.size());
    for (std::size_t z : above) {
      std::size_t c = 0;
      for (std::size_t v : above)
        if (leq(v, z)) ++c;
      keyed.emplace_back(c, z);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<long long> mu(size(), 0);
    for (const auto& [c, z] : keyed) {
      if (z == x) {
        mu[z] = 1;
        continue;
      }
      long long s = 0;
      for (std::size_t v : above)
        if (v != z && leq(v, z)) s += mu[v];
      mu[z] = -s;
    }
    return cache_->mobius_rows.emplace(x, std::move(mu)).first->second;
  }

  // Induced subposet on {z : x <= z <= y}.
  Poset interval(std::size_t x, std::size_t y) const {
    if (!leq(x, y)) throw error("NotComparable", label(x) + " is not below " + label(y));
    std::vector<std::size_t> sel;
    for (std::size_t z = 0; z < size(); ++z)
      if (leq(x, z) && leq(z, y)) sel.push_back(z);
    return induced(sel);
  }

  Poset interval(const std::string& x, const std::string& y) const {
    return interval(index(x), index(y));
  }

  Poset induced(const std::vector<std::size_t>& sel) const {
    Poset p;
    for (std::size_t g : sel) p.labels_.push_back(labels_[g]);
    p.init_index();
    p.dense_ = true;
    p.up_.assign(sel.size(), detail::Bitset(sel.size()));
    for (std::size_t a = 0; a < sel.size(); ++a)
      for (std::size_t b = 0; b < sel.size(); ++b)
        if (leq(sel[a], sel[b])) p.up_[a].set(b);
    return p;
  }

  std::size_t bottom() const {
    bounds();
    return cache_->bottom;
  }

  std::size_t top() const {
    bounds();
    return cache_->top;
  }

  struct ChainExtremes {
    std::size_t shortest_saturated;  // elements on a shortest saturated 0-1 chain
    std::size_t longest;             // elements on a longest chain
  };

  ChainExtremes chain_extremes() const {
    std::size_t b = bottom(), t = top();
    const auto& cov = covers();
    std::vector<std::vector<std::size_t>> next(size());
    for (const auto& [i, j] : cov) next[i].push_back(j);
    std::vector<std::size_t> dist(size(), 0);
    std::vector<std::size_t> queue{b};
    dist[b] = 1;
    for (std::size_t head = 0; head < queue.size() && dist[t] == 0; ++head) {
      std::size_t v = queue[head];
      for (std::size_t w : next[v])
        if (dist[w] == 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    if (dist[t] == 0) throw error("NotBounded", "top not reachable from bottom by covers");
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> below_count(size(), 0);
    for (std::size_t i = 0; i < size(); ++i)
      up_row(i).for_each([&](std::size_t j) { ++below_count[j]; });
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t bb) {
      return below_count[a] < below_count[bb];
    });
    std::vector<std::size_t> best(size(), 1);
    for (std::size_t v : order)
      for (std::size_t w : next[v]) best[w] = std::max(best[w], best[v] + 1);
    return {dist[t], *std::max_element(best.begin(), best.end())};
  }

  // strict relation pairs as labels, sorted (handy for set comparisons)
  std::vector<std::pair<std::string, std::string>> relation_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < size(); ++i)
      up_row(i).for_each([&](std::size_t j) {
        if (j != i) out.emplace_back(label(i), label(j));
      });
    std::sort(out.begin(), out.end());
    return out;
  }

  bool same_order_as(const Poset& o) const {
    if (size() != o.size()) return false;
    auto a = elements(), b = o.elements();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    return relation_pairs() == o.relation_pairs();
  }

 private:
  struct Cache {
    std::mutex m;
    bool covers_done = false;
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    bool bounds_done = false;
    std::size_t bottom = 0, top = 0;
    std::mutex reach_m;
    std::unordered_map<std::size_t, detail::Bitset> reach_rows;
    std::mutex mobius_m;
    std::unordered_map<std::size_t, std::vector<long long>> mobius_rows;
  };

  void init_index() {
    index_.clear();
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (!index_.emplace(labels_[i], i).second)
        throw error("InvalidPoset", "duplicate label '" + labels_[i] + "'");
  }

  void check_acyclic(const std::vector<std::vector<std::size_t>>& adj) const {
    std::vector<int> state(size(), 0);
    for (std::size_t s = 0; s < size(); ++s) {
      if (state[s]) continue;
      std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
      state[s] = 1;
      while (!stack.empty()) {
        auto& [v, k] = stack.back();
        if (k < adj[v].size()) {
          std::size_t w = adj[v][k++];
          if (state[w] == 1)
            throw error("CycleDetected", label(v) + " <= " + label(w) + " <= " + label(v));
          if (state[w] == 0) {
            state[w] = 1;
            stack.emplace_back(w, 0);
          }
        } else {
          state[v] = 2;
          stack.pop_back();
        }
      }
    }
  }

  void densify() {
    up_.assign(size(), detail::Bitset(size()));
    std::vector<std::size_t> order;
    topo_order(order);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      std::size_t v = *it;
      up_[v].set(v);
      for (std::size_t w : adj_[v]) up_[v] |= up_[w];
    }
    dense_ = true;
    adj_.clear();
  }

  void topo_order(std::vector<std::size_t>& order) const {
    std::vector<std::size_t> indeg(size(), 0);
    for (const auto& vs : adj_)
      for (std::size_t w : vs) ++indeg[w];
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < size(); ++v)
      if (indeg[v] == 0) queue.push_back(v);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t v = queue[head];
      order.push_back(v);
      for (std::size_t w : adj_[v])
        if (--indeg[w] == 0) queue.push_back(w);
    }
  }

  const detail::Bitset& reach_row(std::size_t a) const {
    std::lock_guard<std::mutex> lock(cache_->reach_m);
    auto it = cache_->reach_rows.find(a);
    if (it != cache_->reach_rows.end()) return it->second;
    detail::Bitset r(size());
    std::vector<std::size_t> stack{a};
    r.set(a);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj_[v])
        if (!r.test(w)) {
          r.set(w);
          stack.push_back(w);
        }
    }
    return cache_->reach_rows.emplace(a, std::move(r)).first->second;
  }

  void bounds() const {
    std::lock_guard<std::mutex> lock(cache_->m);
    if (cache_->bounds_done) return;
    if (size() == 0) throw error("NotBounded", "empty poset");
    std::size_t nb = 0, nt = 0;
    std::vector<std::size_t> below_count(size(), 0);
    for (std::size_t i = 0; i < size(); ++i) {
      const auto& row = up_row(i);
      if (row.count() == size()) {
        cache_->bottom = i;
        ++nb;
      }
      row.for_each([&](std::size_t j) { ++below_count[j]; });
    }
    for (std::size_t i = 0; i < size(); ++i)
      if (below_count[i] == size()) {
        cache_->top = i;
        ++nt;
      }
    if (nb != 1 || nt != 1) throw error("NotBounded", "poset lacks a unique bottom or top");
    cache_->bounds_done = true;
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  bool dense_ = false;
  std::vector<detail::Bitset> up_;
  std::vector<std::vector<std::size_t>> adj_;
  mutable std::unique_ptr<Cache> cache_;

  friend Poset poset_from_leq_rows(std::vector<std::string>, std::vector<detail::Bitset>);
};

// Trusted fast path for relations that are already reflexive-transitive
// closed (antisymmetry is still re-checked).
inline Poset poset_from_leq_rows(std::vector<std::string> labels,
                                 std::vector<detail::Bitset> rows) {
  Poset p;
  p.labels_ = std::move(labels);
  p.init_index();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!rows[i].test(i)) rows[i].set(i);
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (rows[i].test(j) && rows[j].test(i))
        throw error("CycleDetected", p.label(i) + " <= " + p.label(j) + " <= " + p.label(i));
  }
  p.dense_ = true;
  p.up_ = std::move(rows);
  return p;
}

// f maps p's labels into q's labels; true iff x <= y implies f(x) <= f(y).
inline bool is_order_preserving(const std::function<std::string(const std::string&)>& f,
                                const Poset& p, const Poset& q) {
  std::vector<std::size_t> img(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::string fi = f(p.label(i));
    if (!q.contains(fi))
      throw error("UnmappedElement", "'" + p.label(i) + "' maps to unknown '" + fi + "'");
    img[i] = q.index(fi);
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.leq(i, j) && !q.leq(img[i], img[j])) return false;
  return true;
}

// Order-isomorphism test by backtracking over degree-signature classes;
// intended for posets of up to a few hundred elements.
inline bool poset_isomorphic(const Poset& p, const Poset& q) {
  std::size_t n = p.size();
  if (n != q.size()) return false;
  auto tuple_of = [](const Poset& r, std::size_t i) {
    std::size_t up = 0, down = 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r.leq(i, j)) ++up;
      if (r.leq(j, i)) ++down;
    }
    std::size_t cu = 0, cd = 0;
    for (const auto& [a, b] : r.covers()) {
      if (a == i) ++cu;
      if (b == i) ++cd;
    }
    return std::make_tuple(up, down, cu, cd);
  };
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> tp(n), tq(n);
  for (std::size_t i = 0; i < n; ++i) tp[i] = tuple_of(p, i);
  for (std::size_t i = 0; i < n; ++i) tq[i] = tuple_of(q, i);
  {
    auto a = tp, b = tq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<std::vector<std::size_t>> cand(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (tp[i] == tq[j]) cand[i].push_back(j);
    if (cand[i].empty()) return false;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return cand[a].size() < cand[b].size(); });
  std::vector<long long> match(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == n) return true;
    std::size_t i = order[k];
    for (std::size_t j : cand[i]) {
      if (used[j]) continue;
      bool ok = true;
      for (std::size_t k2 = 0; k2 < k && ok; ++k2) {
        std::size_t i2 = order[k2];
        std::size_t j2 = static_cast<std::size_t>(match[i2]);
        if (p.leq(i, i2) != q.leq(j, j2) || p.leq(i2, i) != q.leq(j2, j)) ok = false;
      }
      if (!ok) continue;
      match[i] = static_cast<long long>(j);
      used[j] = 1;
      if (rec(k + 1)) return true;
      match[i] = -1;
      used[j] = 0;
    }
    return false;
  };
  return rec(0);
}

}  // namespace syt
