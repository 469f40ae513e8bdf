#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "syt/error.hpp"
#include "syt/permutation.hpp"
#include "syt/poset.hpp"
#include "syt/qpolynomial.hpp"
#include "syt/rsk.hpp"
#include "syt/tableau.hpp"

namespace syt {

// Which descent set drives the preorder generating relation. autodetect picks
// the one whose cells coincide with Knuth classes on small n (and reports it).
enum class DescentConvention { right, left, autodetect };

inline std::string convention_name(DescentConvention c) {
  switch (c) {
    case DescentConvention::right: return "right";
    case DescentConvention::left: return "left";
    default: return "auto";
  }
}

inline DescentConvention parse_convention(const std::string& s) {
  if (s == "right") return DescentConvention::right;
  if (s == "left") return DescentConvention::left;
  if (s == "auto") return DescentConvention::autodetect;
  throw error("BadRange", "unknown descent convention '" + s + "'");
}

// Pivot generator for the recursion; the polynomials do not depend on it.
enum class KlPivot { smallest, largest };

// Full table of Kazhdan-Lusztig polynomials P_{u,w} for S_n, built bottom-up
// over w by length. Rows are stored sparsely per w (only Bruhat-comparable u)
// with the distinct polynomials deduplicated in a pool.
class KlTable {
 public:
  explicit KlTable(int n, KlPivot pivot = KlPivot::smallest) : n_(n), pivot_(pivot) {
    if (n < 1 || n > 7) throw error("BadRange", "KlTable supports 1 <= n <= 7");
    init_perms();
    build();
  }

  int n() const { return n_; }
  std::uint32_t perm_count() const { return static_cast<std::uint32_t>(words_.size()); }
  KlPivot pivot() const { return pivot_; }

  std::uint32_t rank_of(const Perm& u) const {
    if (u.size() != n_) throw error("SizeMismatch", "permutation size does not match table");
    return rank_word(u.word());
  }

  Perm perm_at(std::uint32_t i) const { return Perm(words_[i]); }
  int length_at(std::uint32_t i) const { return lengths_[i]; }

  // P_{u,w}; the zero polynomial when u is not below w in Bruhat order.
  const QPolynomial& polynomial(const Perm& u, const Perm& w) const {
    return polynomial_at(rank_of(u), rank_of(w));
  }

  const QPolynomial& polynomial_at(std::uint32_t u, std::uint32_t w) const {
    static const QPolynomial kZero = QPolynomial::zero();
    static const QPolynomial kOne = QPolynomial::one();
    if (u == w) return kOne;
    const auto& row = row_u_[w];
    auto it = std::lower_bound(row.begin(), row.end(), u);
    if (it == row.end() || *it != u) return kZero;
    return pool_[row_poly_[w][static_cast<std::size_t>(it - row.begin())]];
  }

  // mu-bar: top allowed coefficient when l(u,w) is odd, else 0.
  long long mu_bar(const Perm& u, const Perm& w) const {
    return mu_bar_at(rank_of(u), rank_of(w));
  }

  long long mu_bar_at(std::uint32_t u, std::uint32_t w) const {
    if (u == w) return 0;
    int ld = lengths_[w] - lengths_[u];
    if (ld <= 0 || ld % 2 == 0) return 0;
    return polynomial_at(u, w).coeff((ld - 1) / 2);
  }

  // per-w list of (v, mu_bar(v,w)) with nonzero mu_bar
  const std::vector<std::pair<std::uint32_t, long long>>& mu_list(std::uint32_t w) const {
    return mu_[w];
  }

  void save(std::ostream& out, DescentConvention convention) const {
    auto put32 = [&](std::uint32_t x) { out.write(reinterpret_cast<const char*>(&x), 4); };
    auto put64 = [&](std::int64_t x) { out.write(reinterpret_cast<const char*>(&x), 8); };
    out.write("SYTKLTB1", 8);
    put32(1);  // format version
    put32(static_cast<std::uint32_t>(n_));
    out.put(pivot_ == KlPivot::smallest ? 0 : 1);
    out.put(convention == DescentConvention::right ? 'R'
                                                   : convention == DescentConvention::left ? 'L' : 'A');
    put32(static_cast<std::uint32_t>(pool_.size()));
    for (const auto& p : pool_) {
      put32(static_cast<std::uint32_t>(p.coeffs().size()));
      for (long long c : p.coeffs()) put64(c);
    }
    for (std::uint32_t w = 0; w < perm_count(); ++w) {
      put32(static_cast<std::uint32_t>(row_u_[w].size()));
      for (std::size_t k = 0; k < row_u_[w].size(); ++k) {
        put32(row_u_[w][k]);
        put32(row_poly_[w][k]);
      }
      put32(static_cast<std::uint32_t>(mu_[w].size()));
      for (const auto& [v, m] : mu_[w]) {
        put32(v);
        put64(m);
      }
    }
  }

  // Returns the table plus the convention byte recorded by the writer.
  static std::pair<KlTable, DescentConvention> load(std::istream& in) {
    auto get32 = [&]() {
      std::uint32_t x = 0;
      in.read(reinterpret_cast<char*>(&x), 4);
      return x;
    };
    auto get64 = [&]() {
      std::int64_t x = 0;
      in.read(reinterpret_cast<char*>(&x), 8);
      return x;
    };
    char magic[8];
    in.read(magic, 8);
    if (!in || std::string(magic, 8) != "SYTKLTB1")
      throw error("InvalidCache", "not a KL table cache");
    if (get32() != 1) throw error("InvalidCache", "unsupported cache version");
    int n = static_cast<int>(get32());
    KlPivot pivot = in.get() == 0 ? KlPivot::smallest : KlPivot::largest;
    int convc = in.get();
    DescentConvention conv = convc == 'R' ? DescentConvention::right
                                          : convc == 'L' ? DescentConvention::left
                                                         : DescentConvention::autodetect;
    KlTable t(n, pivot, FromCache{});
    std::uint32_t pool_size = get32();
    t.pool_.reserve(pool_size);
    for (std::uint32_t i = 0; i < pool_size; ++i) {
      std::uint32_t len = get32();
      std::vector<long long> c(len);
      for (auto& x : c) x = get64();
      t.pool_.push_back(QPolynomial(std::move(c)));
    }
    std::uint32_t N = t.perm_count();
    t.row_u_.resize(N);
    t.row_poly_.resize(N);
    t.mu_.resize(N);
    for (std::uint32_t w = 0; w < N; ++w) {
      std::uint32_t len = get32();
      t.row_u_[w].resize(len);
      t.row_poly_[w].resize(len);
      for (std::uint32_t k = 0; k < len; ++k) {
        t.row_u_[w][k] = get32();
        t.row_poly_[w][k] = get32();
      }
      std::uint32_t ml = get32();
      t.mu_[w].resize(ml);
      for (auto& [v, m] : t.mu_[w]) {
        v = get32();
        m = get64();
      }
    }
    if (!in) throw error("InvalidCache", "truncated KL table cache");
    return {std::move(t), conv};
  }

  bool bruhat_at(std::uint32_t u, std::uint32_t w) const {
    if (bruhat_.empty()) return u == w || bruhat_leq(perm_at(u), perm_at(w));
    return bruhat_[w].test(u);
  }

 private:
  struct FromCache {};

  KlTable(int n, KlPivot pivot, FromCache) : n_(n), pivot_(pivot) {
    if (n < 1 || n > 7) throw error("BadRange", "KlTable supports 1 <= n <= 7");
    init_perms();
  }

  void init_perms() {
    for_each_perm(n_, [&](const std::vector<int>& w) { words_.push_back(w); });
    lengths_.resize(words_.size());
    des_l_.resize(words_.size());
    for (std::uint32_t i = 0; i < perm_count(); ++i) {
      const auto& w = words_[i];
      int l = 0;
      std::uint32_t dl = 0;
      std::vector<int> pos(static_cast<std::size_t>(n_) + 1);
      for (int p = 0; p < n_; ++p) pos[static_cast<std::size_t>(w[static_cast<std::size_t>(p)])] = p;
      for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
          if (w[static_cast<std::size_t>(a)] > w[static_cast<std::size_t>(b)]) ++l;
      for (int v = 1; v < n_; ++v)
        if (pos[static_cast<std::size_t>(v)] > pos[static_cast<std::size_t>(v + 1)])
          dl |= std::uint32_t{1} << (v - 1);
      lengths_[i] = l;
      des_l_[i] = dl;
    }
    // rank of s_v * w (values v, v+1 swapped), for every generator
    smul_.assign(static_cast<std::size_t>(n_ - 1),
                 std::vector<std::uint32_t>(words_.size()));
    for (std::uint32_t i = 0; i < perm_count(); ++i)
      for (int v = 1; v < n_; ++v) {
        std::vector<int> m = words_[i];
        for (auto& x : m) {
          if (x == v) x = v + 1;
          else if (x == v + 1) x = v;
        }
        smul_[static_cast<std::size_t>(v - 1)][i] = rank_word(m);
      }
  }

  std::uint32_t rank_word(const std::vector<int>& w) const {
    // Lehmer code -> lexicographic rank
    std::uint32_t r = 0;
    static const std::uint32_t fact[9] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};
    for (int i = 0; i < n_; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n_; ++j)
        if (w[static_cast<std::size_t>(j)] < w[static_cast<std::size_t>(i)]) ++smaller;
      r += static_cast<std::uint32_t>(smaller) * fact[n_ - 1 - i];
    }
    return r;
  }

  // sorted prefixes of each word, concatenated: prefix j occupies [j(j+1)/2, ...)
  bool bruhat_words(const std::vector<int>& pu, const std::vector<int>& pw) const {
    for (std::size_t k = 0; k < pu.size(); ++k)
      if (pu[k] > pw[k]) return false;
    return true;
  }

  void build() {
    std::uint32_t N = perm_count();
    std::vector<std::vector<int>> prefixes(N);
    for (std::uint32_t i = 0; i < N; ++i) {
      std::vector<int> sorted;
      auto& flat = prefixes[i];
      for (int v : words_[i]) {
        sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), v), v);
        flat.insert(flat.end(), sorted.begin(), sorted.end());
      }
    }
    bruhat_.assign(N, detail::Bitset(N));
    for (std::uint32_t w = 0; w < N; ++w) {
      for (std::uint32_t u = 0; u < N; ++u)
        if (lengths_[u] <= lengths_[w] && (u == w || bruhat_words(prefixes[u], prefixes[w])))
          bruhat_[w].set(u);
    }
    prefixes.clear();
    prefixes.shrink_to_fit();
    row_u_.resize(N);
    row_poly_.resize(N);
    mu_.resize(N);
    std::map<std::vector<long long>, std::uint32_t> pool_ids;
    auto intern = [&](const QPolynomial& p) {
      auto it = pool_ids.find(p.coeffs());
      if (it != pool_ids.end()) return it->second;
      std::uint32_t id = static_cast<std::uint32_t>(pool_.size());
      pool_.push_back(p);
      pool_ids.emplace(p.coeffs(), id);
      return id;
    };
    std::vector<std::uint32_t> order(N);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return lengths_[a] != lengths_[b] ? lengths_[a] < lengths_[b] : a < b;
    });
    // dense scratch of pool ids for the row of y = s*w (sentinel = absent)
    constexpr std::uint32_t kAbsent = 0xffffffffu;
    std::vector<std::uint32_t> scratch(N, kAbsent);
    for (std::uint32_t w : order) {
      if (lengths_[w] == 0) continue;
      int s = 0;
      {
        std::uint32_t dl = des_l_[w];
        s = pivot_ == KlPivot::smallest ? __builtin_ctz(dl) + 1
                                        : 31 - __builtin_clz(dl) + 1;
      }
      std::uint32_t y = smul_[static_cast<std::size_t>(s - 1)][w];
      for (std::size_t k = 0; k < row_u_[y].size(); ++k) scratch[row_u_[y][k]] = row_poly_[y][k];
      auto poly_uy = [&](std::uint32_t u) -> const QPolynomial& {
        static const QPolynomial kZero = QPolynomial::zero();
        static const QPolynomial kOne = QPolynomial::one();
        if (u == y) return kOne;
        std::uint32_t id = scratch[u];
        return id == kAbsent ? kZero : pool_[id];
      };
      // correction terms: v with s in D_L(v) and nonzero mu_bar(v, y)
      std::vector<std::pair<std::uint32_t, long long>> mus;
      for (const auto& [v, m] : mu_[y])
        if (des_l_[v] >> (s - 1) & 1) mus.emplace_back(v, m);
      auto& row_u = row_u_[w];
      auto& row_poly = row_poly_[w];
      auto& mylist = mu_[w];
      bruhat_[w].for_each([&](std::size_t uz) {
        std::uint32_t u = static_cast<std::uint32_t>(uz);
        if (u == w) return;
        std::uint32_t su = smul_[static_cast<std::size_t>(s - 1)][u];
        bool c = des_l_[u] >> (s - 1) & 1;
        QPolynomial p = c ? poly_uy(su) + poly_uy(u).shifted(1)
                          : poly_uy(su).shifted(1) + poly_uy(u);
        for (const auto& [v, m] : mus) {
          if (v == u) {
            p -= QPolynomial::one().scaled(m).shifted((lengths_[w] - lengths_[v]) / 2);
          } else if (bruhat_[v].test(u)) {
            const QPolynomial& puv = polynomial_at(u, v);
            if (!puv.is_zero())
              p -= puv.scaled(m).shifted((lengths_[w] - lengths_[v]) / 2);
          }
        }
        row_u.push_back(u);
        row_poly.push_back(intern(p));
        int ld = lengths_[w] - lengths_[u];
        if (ld % 2 == 1) {
          long long mb = p.coeff((ld - 1) / 2);
          if (mb != 0) mylist.emplace_back(u, mb);
        }
      });
      for (std::size_t k = 0; k < row_u_[y].size(); ++k) scratch[row_u_[y][k]] = kAbsent;
    }
  }

  int n_;
  KlPivot pivot_;
  std::vector<std::vector<int>> words_;
  std::vector<int> lengths_;
  std::vector<std::uint32_t> des_l_;
  std::vector<std::vector<std::uint32_t>> smul_;
  std::vector<detail::Bitset> bruhat_;
  std::vector<QPolynomial> pool_;
  std::vector<std::vector<std::uint32_t>> row_u_;
  std::vector<std::vector<std::uint32_t>> row_poly_;
  std::vector<std::vector<std::pair<std::uint32_t, long long>>> mu_;
};

namespace detail {

inline std::uint32_t des_mask_right(const std::vector<int>& w) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) m |= std::uint32_t{1} << i;
  return m;
}

inline std::uint32_t des_mask_left(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(w[static_cast<std::size_t>(p)])] = p;
  std::uint32_t m = 0;
  for (int v = 1; v < n; ++v)
    if (pos[static_cast<std::size_t>(v)] > pos[static_cast<std::size_t>(v + 1)])
      m |= std::uint32_t{1} << (v - 1);
  return m;
}

}  // namespace detail

// Generating edges of the opposite KL preorder on S_n: u -> w whenever
// mu_bar(u,w) or mu_bar(w,u) is nonzero and D(w) - D(u) is nonempty, with D
// the chosen descent set.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> kl_preorder_edges_indexed(
    const KlTable& table, DescentConvention convention) {
  if (convention == DescentConvention::autodetect)
    throw error("BadRange", "convention must be resolved before edge generation");
  std::uint32_t N = table.perm_count();
  std::vector<std::uint32_t> des(N);
  for (std::uint32_t i = 0; i < N; ++i) {
    auto w = table.perm_at(i).word();
    des[i] = convention == DescentConvention::right ? detail::des_mask_right(w)
                                                    : detail::des_mask_left(w);
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t w = 0; w < N; ++w)
    for (const auto& [u, m] : table.mu_list(w)) {
      (void)m;
      if (des[w] & ~des[u]) edges.emplace_back(u, w);
      if (des[u] & ~des[w]) edges.emplace_back(w, u);
    }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

inline std::vector<std::pair<Perm, Perm>> kl_preorder_edges(const KlTable& table,
                                                            DescentConvention convention) {
  std::vector<std::pair<Perm, Perm>> out;
  for (const auto& [u, w] : kl_preorder_edges_indexed(table, convention))
    out.emplace_back(table.perm_at(u), table.perm_at(w));
  return out;
}

namespace detail {

// iterative Tarjan; returns component ids with the property that an edge
// between components points to a smaller id (sinks get the smallest ids)
inline std::vector<std::uint32_t> strongly_connected_components(
    std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t& count) {
  std::vector<std::uint32_t> index(n, 0), low(n, 0), sccid(n, 0);
  std::vector<char> visited(n, 0), onstack(n, 0);
  std::vector<std::uint32_t> stack;
  std::uint32_t next_index = 1, next_scc = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> work;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (visited[s]) continue;
    work.emplace_back(s, 0);
    while (!work.empty()) {
      auto& [v, k] = work.back();
      if (k == 0) {
        visited[v] = 1;
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        onstack[v] = 1;
      }
      bool descended = false;
      while (k < adj[v].size()) {
        std::uint32_t w = adj[v][k++];
        if (!visited[w]) {
          work.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (onstack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        for (;;) {
          std::uint32_t w = stack.back();
          stack.pop_back();
          onstack[w] = 0;
          sccid[w] = next_scc;
          if (w == v) break;
        }
        ++next_scc;
      }
      std::uint32_t vv = v;
      work.pop_back();
      if (!work.empty()) low[work.back().first] = std::min(low[work.back().first], low[vv]);
    }
  }
  count = next_scc;
  return sccid;
}

}  // namespace detail

// Resolves autodetect by checking cells == Knuth classes on n = 4 and 5.
inline DescentConvention resolve_kl_convention(DescentConvention requested);

// The partial order on SYT_n induced by the opposite KL preorder: SCCs of the
// generating relation must be exactly the Knuth classes, the condensation
// gives the order on tableaux.
inline Poset kl_order_on_tableaux(int n, DescentConvention convention = DescentConvention::autodetect,
                                  const KlTable* table = nullptr) {
  convention = resolve_kl_convention(convention);
  std::optional<KlTable> own;
  if (!table) {
    own.emplace(n);
    table = &*own;
  }
  if (table->n() != n) throw error("SizeMismatch", "table is for a different n");
  std::uint32_t N = table->perm_count();
  auto edges = kl_preorder_edges_indexed(*table, convention);
  std::vector<std::vector<std::uint32_t>> adj(N);
  for (const auto& [a, b] : edges) adj[a].push_back(b);
  std::uint32_t scc_count = 0;
  auto sccid = detail::strongly_connected_components(N, adj, scc_count);
  // cells must be Knuth classes
  std::vector<std::string> cell_tab(scc_count);
  for (std::uint32_t i = 0; i < N; ++i) {
    std::string p = rsk(table->perm_at(i)).p.str();
    std::string& slot = cell_tab[sccid[i]];
    if (slot.empty()) slot = p;
    else if (slot != p)
      throw error("CellMismatch", "cell mixes insertion tableaux " + slot + " and " + p +
                                      " under the " + convention_name(convention) + " convention");
  }
  {
    std::set<std::string> distinct(cell_tab.begin(), cell_tab.end());
    if (distinct.size() != scc_count)
      throw error("CellMismatch", "two cells share an insertion tableau under the " +
                                      convention_name(convention) + " convention");
  }
  // condensation reachability; edge c->d implies d has the smaller id
  std::vector<detail::Bitset> up(scc_count, detail::Bitset(scc_count));
  std::vector<std::vector<std::uint32_t>> sadj(scc_count);
  for (const auto& [a, b] : edges)
    if (sccid[a] != sccid[b]) sadj[sccid[a]].push_back(sccid[b]);
  for (std::uint32_t c = 0; c < scc_count; ++c) {
    up[c].set(c);
    for (std::uint32_t d : sadj[c]) up[c] |= up[d];
  }
  std::vector<Tableau> tabs = enumerate_syt(n);
  std::vector<std::string> labels;
  labels.reserve(tabs.size());
  for (const auto& t : tabs) labels.push_back(t.str());
  if (tabs.size() != scc_count) throw error("CellMismatch", "cell count differs from |SYT_n|");
  std::map<std::string, std::uint32_t> label_at;
  for (std::uint32_t i = 0; i < labels.size(); ++i) label_at[labels[i]] = i;
  std::vector<detail::Bitset> rows(labels.size(), detail::Bitset(labels.size()));
  for (std::uint32_t c = 0; c < scc_count; ++c) {
    std::uint32_t ci = label_at.at(cell_tab[c]);
    up[c].for_each([&](std::size_t d) {
      rows[ci].set(label_at.at(cell_tab[d]));
    });
  }
  return poset_from_leq_rows(std::move(labels), std::move(rows));
}

namespace detail {

inline bool kl_cells_match_knuth(int n, DescentConvention conv) {
  try {
    kl_order_on_tableaux(n, conv);
    return true;
  } catch (const error& e) {
    if (e.kind() == "CellMismatch") return false;
    throw;
  }
}

}  // namespace detail

inline DescentConvention resolve_kl_convention(DescentConvention requested) {
  if (requested != DescentConvention::autodetect) return requested;
  static DescentConvention chosen = [] {
    for (int n = 4; n <= 5; ++n)
      if (!detail::kl_cells_match_knuth(n, DescentConvention::right)) {
        if (!detail::kl_cells_match_knuth(n, DescentConvention::left))
          throw error("CellMismatch", "neither descent convention matches Knuth classes");
        return DescentConvention::left;
      }
    return DescentConvention::right;
  }();
  return chosen;
}

}  // namespace syt
