#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "syt/error.hpp"

namespace syt {

// Element of S_n in one-line notation; w(i) for 1 <= i <= n.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> word) : w_(std::move(word)) {
    std::vector<bool> seen(w_.size() + 1, false);
    for (int x : w_) {
      if (x < 1 || x > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(x)])
        throw error("InvalidPermutation", "word is not a bijection on [n]");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static Perm identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return Perm(std::move(w));
  }

  static Perm longest(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return Perm(std::move(w));
  }

  // "31425" for n <= 9, comma-separated beyond
  static Perm parse(const std::string& text) {
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
      std::size_t pos = 0;
      while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        w.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
      }
    } else {
      for (char c : text) {
        if (c < '1' || c > '9') throw error("InvalidPermutation", "bad character in one-line notation");
        w.push_back(c - '0');
      }
    }
    return Perm(std::move(w));
  }

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& word() const { return w_; }

  Perm inverse() const {
    std::vector<int> inv(w_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i)-1)] = i;
    return Perm(std::move(inv));
  }

  std::string str() const {
    std::string out;
    bool commas = size() > 9;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (commas && i) out += ',';
      out += std::to_string(w_[i]);
    }
    return out;
  }

  bool operator==(const Perm& o) const { return w_ == o.w_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  bool operator<(const Perm& o) const { return w_ < o.w_; }

 private:
  std::vector<int> w_;
};

// position of value v in u (1-based)
inline int position_of(const Perm& u, int v) {
  for (int i = 1; i <= u.size(); ++i)
    if (u(i) == v) return i;
  throw error("InvalidPermutation", "value not present");
}

// Inv_L(u) = {(i,j): i<j, i appears after j}
inline std::vector<std::pair<int, int>> inversions_left(const Perm& u) {
  int n = u.size();
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(u(i))] = i;
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(j)]) out.emplace_back(i, j);
  return out;
}

namespace detail {

// left inversion set as a bitmask over value pairs; fits u64 for n <= 11
inline std::uint64_t inv_mask(const Perm& u) {
  int n = u.size();
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(u(i))] = i;
  std::uint64_t m = 0;
  int k = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++k)
      if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(j)])
        m |= std::uint64_t{1} << k;
  return m;
}

}  // namespace detail

inline int length(const Perm& u) {
  int n = u.size(), l = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (u(i) > u(j)) ++l;
  return l;
}

// u <=_weak w iff Inv_L(u) included in Inv_L(w)
inline bool weak_leq(const Perm& u, const Perm& w) {
  if (u.size() != w.size()) throw error("SizeMismatch", "weak_leq needs equal sizes");
  if (u.size() > 11) {
    auto a = inversions_left(u), b = inversions_left(w);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }
  return (detail::inv_mask(u) & ~detail::inv_mask(w)) == 0;
}

// Bruhat order by the sorted-prefix criterion: for every prefix length j the
// sorted prefix of u is entrywise <= that of w.
inline bool bruhat_leq(const Perm& u, const Perm& w) {
  int n = u.size();
  if (n != w.size()) throw error("SizeMismatch", "bruhat_leq needs equal sizes");
  std::vector<int> su, sw;
  su.reserve(static_cast<std::size_t>(n));
  sw.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    su.insert(std::upper_bound(su.begin(), su.end(), u(j)), u(j));
    sw.insert(std::upper_bound(sw.begin(), sw.end(), w(j)), w(j));
    for (int i = 0; i < j; ++i)
      if (su[static_cast<std::size_t>(i)] > sw[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

// Des_R(u): positions i with u(i) > u(i+1)
inline std::vector<int> descents_right(const Perm& u) {
  std::vector<int> out;
  for (int i = 1; i < u.size(); ++i)
    if (u(i) > u(i + 1)) out.push_back(i);
  return out;
}

// Des_L(u): values i appearing after i+1; equals Inv_L(u) on adjacent pairs
inline std::vector<int> descents_left(const Perm& u) {
  int n = u.size();
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(u(i))] = i;
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(i + 1)]) out.push_back(i);
  return out;
}

// Visits permutations of [n] in lexicographic order.
template <typename Fn>
inline void for_each_perm(int n, Fn&& fn) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  do {
    fn(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

// Right-multiplication covers of the weak order: (u, u*s_i) over ascents of u.
template <typename Fn>
inline void for_each_weak_cover(int n, Fn&& fn) {
  for_each_perm(n, [&](const std::vector<int>& w) {
    std::vector<int> v = w;
    for (int i = 0; i + 1 < n; ++i) {
      if (v[static_cast<std::size_t>(i)] < v[static_cast<std::size_t>(i + 1)]) {
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 1)]);
        fn(w, v);
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 1)]);
      }
    }
  });
}

inline std::vector<std::pair<Perm, Perm>> weak_covers(int n) {
  if (n > 8) throw error("BadRange", "weak_covers limited to n <= 8");
  std::vector<std::pair<Perm, Perm>> out;
  for_each_weak_cover(n, [&](const std::vector<int>& u, const std::vector<int>& w) {
    out.emplace_back(Perm(u), Perm(w));
  });
  return out;
}

// Weak-order maximum of the left-descent class {u : Des_L(u) = d}.
// Split [n] into runs broken exactly at d; list the runs in reverse, each
// ascending. Cross-run value pairs are then all inverted, which dominates any
// other member of the class.
inline Perm descent_class_max(const std::vector<int>& d, int n) {
  std::vector<bool> brk(static_cast<std::size_t>(n), false);
  for (int i : d) {
    if (i < 1 || i >= n) throw error("BadRange", "descent position out of [n-1]");
    brk[static_cast<std::size_t>(i)] = true;
  }
  std::vector<std::vector<int>> runs;
  std::vector<int> cur{1};
  for (int i = 1; i < n; ++i) {
    if (brk[static_cast<std::size_t>(i)]) {
      runs.push_back(cur);
      cur.clear();
    }
    cur.push_back(i + 1);
  }
  runs.push_back(cur);
  std::vector<int> w;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return Perm(std::move(w));
}

// All interleavings of two words on disjoint alphabets.
inline std::vector<std::vector<int>> shuffles(const std::vector<int>& a,
                                              const std::vector<int>& b) {
  {
    std::set<int> sa(a.begin(), a.end());
    for (int x : b)
      if (sa.count(x)) throw error("AlphabetOverlap", "shuffle factors share letter " + std::to_string(x));
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == a.size() && j == b.size()) {
      out.push_back(cur);
      return;
    }
    if (i < a.size()) {
      cur.push_back(a[i]);
      rec(i + 1, j);
      cur.pop_back();
    }
    if (j < b.size()) {
      cur.push_back(b[j]);
      rec(i, j + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

enum class W0Side { left, right, both };

// w0*u reverses values, u*w0 reverses positions.
inline Perm apply_w0(const Perm& u, W0Side side) {
  int n = u.size();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    switch (side) {
      case W0Side::left: w[static_cast<std::size_t>(i - 1)] = n + 1 - u(i); break;
      case W0Side::right: w[static_cast<std::size_t>(i - 1)] = u(n + 1 - i); break;
      case W0Side::both: w[static_cast<std::size_t>(i - 1)] = n + 1 - u(n + 1 - i); break;
    }
  }
  return Perm(std::move(w));
}

// Order-preserving relabel of a distinct-letter word onto 1..k.
inline Perm standardize_word(const std::vector<int>& word) {
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  out.reserve(word.size());
  for (int x : word) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    out.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return Perm(std::move(out));
}

// st(u_{[i,j]}): keep letters in [i,j], subtract i-1.
inline Perm restrict_standardize_word(const Perm& u, int i, int j) {
  if (!(1 <= i && i <= j && j <= u.size())) throw error("BadRange", "segment out of range");
  std::vector<int> sub;
  for (int p = 1; p <= u.size(); ++p)
    if (i <= u(p) && u(p) <= j) sub.push_back(u(p) - i + 1);
  return Perm(std::move(sub));
}

}  // namespace syt
