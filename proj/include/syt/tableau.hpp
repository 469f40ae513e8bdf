#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "syt/error.hpp"
#include "syt/partition.hpp"

namespace syt {

// Standard or skew-standard Young tableau. Row r of the outer shape consists
// of inner.row(r) unfilled cells followed by the entries rows()[r]. Entries
// are distinct positive integers, strictly increasing along rows and columns.
class Tableau {
 public:
  Tableau() = default;

  static Tableau straight(std::vector<std::vector<int>> rows) {
    return Tableau(Partition(), std::move(rows));
  }

  static Tableau skew(Partition inner, std::vector<std::vector<int>> rows) {
    return Tableau(std::move(inner), std::move(rows));
  }

  // "1 2 5|3 4"; inner cells spelled "." as in ". . 1|. 2"
  static Tableau parse(const std::string& text) {
    std::vector<int> inner;
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    bool any_inner = false;
    while (pos <= text.size()) {
      std::size_t next = text.find('|', pos);
      if (next == std::string::npos) next = text.size();
      std::string rowtext = text.substr(pos, next - pos);
      std::vector<int> row;
      int holes = 0;
      std::size_t p = 0;
      while (p < rowtext.size()) {
        while (p < rowtext.size() && rowtext[p] == ' ') ++p;
        if (p >= rowtext.size()) break;
        std::size_t q = rowtext.find(' ', p);
        if (q == std::string::npos) q = rowtext.size();
        std::string tok = rowtext.substr(p, q - p);
        if (tok == ".") {
          if (!row.empty()) throw error("InvalidTableau", "inner cell after an entry");
          ++holes;
        } else {
          row.push_back(std::stoi(tok));
        }
        p = q;
      }
      inner.push_back(holes);
      any_inner = any_inner || holes > 0;
      rows.push_back(std::move(row));
      if (next == text.size()) break;
      pos = next + 1;
    }
    while (!inner.empty() && inner.back() == 0) {
      if (inner.size() > rows.size()) inner.pop_back();
      else break;
    }
    std::vector<int> trimmed(inner.begin(), inner.begin() + static_cast<long>(rows.size()));
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    return Tableau(any_inner ? Partition(trimmed) : Partition(), std::move(rows));
  }

  int size() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
  }

  bool empty() const { return rows_.empty(); }
  bool is_straight() const { return inner_.empty(); }
  const Partition& inner_shape() const { return inner_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  Partition outer_shape() const {
    std::vector<int> parts;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      parts.push_back(inner_.row(static_cast<int>(r)) + static_cast<int>(rows_[r].size()));
    return Partition(std::move(parts));
  }

  // true iff entries are exactly 1..n
  bool is_standard() const {
    std::vector<int> vals = entries();
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (vals[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  std::vector<int> entries() const {
    std::vector<int> vals;
    for (const auto& r : rows_) vals.insert(vals.end(), r.begin(), r.end());
    std::sort(vals.begin(), vals.end());
    return vals;
  }

  // 1-based row index of a value
  int row_of(int v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (int x : rows_[r])
        if (x == v) return static_cast<int>(r) + 1;
    throw error("InvalidTableau", "value " + std::to_string(v) + " not present");
  }

  // bottom row first, left to right within rows; P(reading word) reproduces
  // a straight tableau
  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
      w.insert(w.end(), it->begin(), it->end());
    return w;
  }

  std::string str() const {
    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r) out += '|';
      int holes = inner_.row(static_cast<int>(r));
      for (int h = 0; h < holes; ++h) {
        if (h) out += ' ';
        out += '.';
      }
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        if (c || holes) out += ' ';
        out += std::to_string(rows_[r][c]);
      }
    }
    return out;
  }

  bool operator==(const Tableau& o) const { return inner_ == o.inner_ && rows_ == o.rows_; }
  bool operator!=(const Tableau& o) const { return !(*this == o); }
  bool operator<(const Tableau& o) const {
    if (inner_ != o.inner_) return inner_ < o.inner_;
    return rows_ < o.rows_;
  }

 private:
  Tableau(Partition inner, std::vector<std::vector<int>> rows)
      : inner_(std::move(inner)), rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty() &&
           inner_.row(static_cast<int>(rows_.size()) - 1) == 0)
      rows_.pop_back();
    validate();
  }

  void validate() const {
    if (static_cast<int>(rows_.size()) < inner_.rows())
      throw error("InvalidTableau", "inner shape taller than outer");
    std::set<int> seen;
    int prev_len = -1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      int off = inner_.row(static_cast<int>(r));
      int len = off + static_cast<int>(rows_[r].size());
      if (prev_len >= 0 && len > prev_len)
        throw error("InvalidTableau", "outer shape not a partition");
      if (r > 0 && off > inner_.row(static_cast<int>(r) - 1))
        throw error("InvalidTableau", "inner shape not a partition");
      prev_len = len;
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        int v = rows_[r][c];
        if (v <= 0) throw error("InvalidTableau", "entries must be positive");
        if (!seen.insert(v).second) throw error("InvalidTableau", "repeated entry");
        if (c > 0 && rows_[r][c - 1] >= v)
          throw error("InvalidTableau", "row not strictly increasing");
        if (r > 0) {
          int col = off + static_cast<int>(c);
          int up_off = inner_.row(static_cast<int>(r) - 1);
          int up_idx = col - up_off;
          if (up_idx >= 0) {
            if (up_idx >= static_cast<int>(rows_[r - 1].size()))
              throw error("InvalidTableau", "cell with no cell above");
            if (rows_[r - 1][static_cast<std::size_t>(up_idx)] >= v)
              throw error("InvalidTableau", "column not strictly increasing");
          }
        }
      }
    }
  }

  Partition inner_;
  std::vector<std::vector<int>> rows_;
};

// Row-inserts a value; the workhorse shared by RSK and the restriction ops.
// Returns the (row, col) of the cell that was added.
inline std::pair<int, int> tableau_insert(std::vector<std::vector<int>>& rows, int x) {
  int cur = x;
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({cur});
      return {static_cast<int>(r), 0};
    }
    auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), cur);
    if (it == row.end()) {
      row.push_back(cur);
      return {static_cast<int>(r), static_cast<int>(row.size()) - 1};
    }
    std::swap(cur, *it);
  }
}

// insertion tableau of a word (letters distinct)
inline Tableau insertion_tableau(const std::vector<int>& word) {
  std::vector<std::vector<int>> rows;
  for (int x : word) tableau_insert(rows, x);
  return Tableau::straight(std::move(rows));
}

inline std::vector<Tableau> enumerate_syt_of_shape(const Partition& shape) {
  int n = shape.size();
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.push_back(Tableau::straight(rows));
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      auto& row = rows[static_cast<std::size_t>(r)];
      if (static_cast<int>(row.size()) >= shape.row(r)) continue;
      if (r > 0 && rows[static_cast<std::size_t>(r - 1)].size() <= row.size()) continue;
      row.push_back(v);
      rec(v + 1);
      row.pop_back();
    }
  };
  rec(1);
  return out;
}

// All straight-shape SYT with n cells; shapes largest-first, fillings in DFS
// order, so the single row always comes first and the single column last.
inline std::vector<Tableau> enumerate_syt(int n) {
  if (n < 1 || n > 10) throw error("BadRange", "enumerate_syt supports 1 <= n <= 10");
  std::vector<Tableau> out;
  for (const Partition& shape : enumerate_partitions(n)) {
    auto tabs = enumerate_syt_of_shape(shape);
    out.insert(out.end(), tabs.begin(), tabs.end());
  }
  return out;
}

// Des(t) = {i : i+1 in a strictly lower row}; entries must be 1..n.
inline std::vector<int> descent_set(const Tableau& t) {
  if (!t.is_standard()) throw error("InvalidTableau", "descent_set needs entries 1..n");
  int n = t.size();
  std::vector<int> rowof(static_cast<std::size_t>(n) + 1);
  {
    const auto& rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int v : rows[r]) rowof[static_cast<std::size_t>(v)] = static_cast<int>(r) + 1;
  }
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (rowof[static_cast<std::size_t>(i + 1)] > rowof[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

// Skew restriction t_{[i,j]}: cells with values in [i,j], original values.
// Inner shape is the region occupied by values < i.
inline Tableau restrict_segment(const Tableau& t, int i, int j) {
  if (!t.is_straight()) throw error("InvalidTableau", "restrict_segment needs a straight tableau");
  if (!(1 <= i && i <= j && j <= t.size())) throw error("BadRange", "segment out of range");
  std::vector<int> inner;
  std::vector<std::vector<int>> rows;
  for (const auto& row : t.rows()) {
    int holes = 0;
    std::vector<int> keep;
    for (int v : row) {
      if (v < i) ++holes;
      else if (v <= j) keep.push_back(v);
    }
    inner.push_back(holes);
    rows.push_back(std::move(keep));
  }
  while (!rows.empty() && rows.back().empty() && inner.back() == 0) {
    rows.pop_back();
    inner.pop_back();
  }
  while (!rows.empty() && rows.back().empty() && inner.back() > 0) {
    rows.pop_back();
    inner.pop_back();
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  return Tableau::skew(Partition(inner), std::move(rows));
}

// Order-preserving relabel of the entries onto 1..n (shape kept).
inline Tableau standardize(const Tableau& t) {
  std::vector<int> vals = t.entries();
  std::map<int, int> rank;
  for (std::size_t i = 0; i < vals.size(); ++i) rank[vals[i]] = static_cast<int>(i) + 1;
  std::vector<std::vector<int>> rows;
  for (const auto& row : t.rows()) {
    std::vector<int> rr;
    for (int v : row) rr.push_back(rank[v]);
    rows.push_back(std::move(rr));
  }
  return t.is_straight() ? Tableau::straight(std::move(rows))
                         : Tableau::skew(t.inner_shape(), std::move(rows));
}

// st(T_{[i,j]}) by the reading-word route: restrict the row word, shift, and
// re-insert. The jeu-de-taquin route below is the independent slow path.
inline Tableau restrict_standardize(const Tableau& t, int i, int j) {
  if (!t.is_straight()) throw error("InvalidTableau", "restrict_standardize needs a straight tableau");
  if (!(1 <= i && i <= j && j <= t.size())) throw error("BadRange", "segment out of range");
  std::vector<int> word;
  for (int v : t.reading_word())
    if (i <= v && v <= j) word.push_back(v - i + 1);
  return insertion_tableau(word);
}

// Jeu-de-taquin rectification of a skew tableau (values kept).
inline Tableau rectify_jdt(const Tableau& skew) {
  std::vector<int> inner;
  for (int r = 0; r < skew.inner_shape().rows(); ++r) inner.push_back(skew.inner_shape().row(r));
  std::vector<int> outer;
  std::vector<std::vector<int>> grid;  // full rows, 0 for inner cells
  for (std::size_t r = 0; r < skew.rows().size(); ++r) {
    int off = r < inner.size() ? inner[r] : 0;
    std::vector<int> row(static_cast<std::size_t>(off), 0);
    row.insert(row.end(), skew.rows()[r].begin(), skew.rows()[r].end());
    outer.push_back(static_cast<int>(row.size()));
    grid.push_back(std::move(row));
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  auto inner_at = [&](std::size_t r) { return r < inner.size() ? inner[r] : 0; };
  while (!inner.empty()) {
    // deepest inner corner
    std::size_t r = inner.size() - 1;
    int c = inner[r] - 1;
    // slide the hole to the outer boundary, moving the smaller neighbor in
    int hr = static_cast<int>(r), hc = c;
    for (;;) {
      bool has_right = hc + 1 < outer[static_cast<std::size_t>(hr)] &&
                       grid[static_cast<std::size_t>(hr)][static_cast<std::size_t>(hc + 1)] != 0;
      bool has_below = hr + 1 < static_cast<int>(grid.size()) &&
                       hc < outer[static_cast<std::size_t>(hr + 1)] &&
                       grid[static_cast<std::size_t>(hr + 1)][static_cast<std::size_t>(hc)] != 0;
      if (!has_right && !has_below) break;
      bool take_right =
          has_right && (!has_below || grid[static_cast<std::size_t>(hr)][static_cast<std::size_t>(hc + 1)] <
                                          grid[static_cast<std::size_t>(hr + 1)][static_cast<std::size_t>(hc)]);
      if (take_right) {
        grid[static_cast<std::size_t>(hr)][static_cast<std::size_t>(hc)] =
            grid[static_cast<std::size_t>(hr)][static_cast<std::size_t>(hc + 1)];
        ++hc;
      } else {
        grid[static_cast<std::size_t>(hr)][static_cast<std::size_t>(hc)] =
            grid[static_cast<std::size_t>(hr + 1)][static_cast<std::size_t>(hc)];
        ++hr;
      }
      grid[static_cast<std::size_t>(hr)][static_cast<std::size_t>(hc)] = 0;
    }
    // the vacated cell leaves the outer shape; the starting corner leaves mu
    outer[static_cast<std::size_t>(hr)] -= 1;
    grid[static_cast<std::size_t>(hr)].resize(static_cast<std::size_t>(outer[static_cast<std::size_t>(hr)]));
    inner[r] -= 1;
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    while (!grid.empty() && grid.back().empty()) {
      grid.pop_back();
      outer.pop_back();
    }
  }
  (void)inner_at;
  return Tableau::straight(std::move(grid));
}

// st(T_{[i,j]}) by jeu-de-taquin slides; oracle for restrict_standardize.
inline Tableau restrict_standardize_jdt(const Tableau& t, int i, int j) {
  Tableau sk = restrict_segment(t, i, j);
  return standardize(rectify_jdt(sk));
}

inline Tableau transpose(const Tableau& t) {
  if (!t.is_straight()) throw error("InvalidTableau", "transpose needs a straight tableau");
  std::vector<std::vector<int>> cols;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (cols.size() <= c) cols.emplace_back();
      cols[c].push_back(row[c]);
    }
  }
  return Tableau::straight(std::move(cols));
}

// Schutzenberger evacuation by repeated delete-minimum slides.
inline Tableau evacuate(const Tableau& t) {
  if (!t.is_straight()) throw error("InvalidTableau", "evacuate needs a straight tableau");
  if (!t.is_standard()) throw error("InvalidTableau", "evacuate needs entries 1..n");
  std::map<std::pair<int, int>, int> cells;
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c)
      cells[{static_cast<int>(r), static_cast<int>(c)}] = t.rows()[r][c];
  std::map<std::pair<int, int>, int> evac;
  int m = static_cast<int>(cells.size());
  while (!cells.empty()) {
    std::pair<int, int> hole{0, 0};
    cells.erase(hole);
    for (;;) {
      auto right = cells.find({hole.first, hole.second + 1});
      auto below = cells.find({hole.first + 1, hole.second});
      if (right == cells.end() && below == cells.end()) break;
      bool take_right = right != cells.end() &&
                        (below == cells.end() || right->second < below->second);
      auto chosen = take_right ? right : below;
      cells[hole] = chosen->second;
      hole = chosen->first;
      cells.erase(chosen);
    }
    evac[hole] = m--;
  }
  int nrows = 0;
  for (const auto& kv : evac) nrows = std::max(nrows, kv.first.first + 1);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(nrows));
  for (const auto& kv : evac) rows[static_cast<std::size_t>(kv.first.first)].push_back(kv.second);
  return Tableau::straight(std::move(rows));
}

// Omega_1: append n+1 at the right end of row 1.
inline Tableau extend_row(const Tableau& t) {
  if (!t.is_straight()) throw error("InvalidTableau", "extend_row needs a straight tableau");
  int n = t.size();
  auto rows = t.rows();
  if (rows.empty()) rows.emplace_back();
  rows[0].push_back(n + 1);
  return Tableau::straight(std::move(rows));
}

// Omega_2: append n+1 at the bottom of column 1.
inline Tableau extend_col(const Tableau& t) {
  if (!t.is_straight()) throw error("InvalidTableau", "extend_col needs a straight tableau");
  int n = t.size();
  auto rows = t.rows();
  rows.push_back({n + 1});
  return Tableau::straight(std::move(rows));
}

inline bool dual_knuth_applicable(const Tableau& t, int i) {
  if (i < 1 || i + 2 > t.size()) return false;
  int ri = t.row_of(i), rj = t.row_of(i + 1), rk = t.row_of(i + 2);
  bool d1 = rj > ri;   // i in Des
  bool d2 = rk > rj;   // i+1 in Des
  return d1 != d2;
}

// Single dual Knuth relation on the entry triple {i, i+1, i+2}: swaps either
// {i, i+1} or {i+1, i+2} depending on the row-index pattern. Works on skew
// tableaux as well; the result has the same shape.
inline Tableau dual_knuth_move(const Tableau& t, int i) {
  if (i < 1 || i + 2 > t.size())
    throw error("NotApplicable", "dual Knuth move needs i, i+1, i+2 present");
  int ri = t.row_of(i), rj = t.row_of(i + 1), rk = t.row_of(i + 2);
  bool d1 = rj > ri;
  bool d2 = rk > rj;
  if (d1 == d2)
    throw error("NotApplicable", "exactly one of i, i+1 must be a descent");
  int a, b;
  if (d2) {  // i+1 in Des, i not
    if (rk > ri && ri >= rj) { a = i + 1; b = i + 2; }
    else { a = i; b = i + 1; }
  } else {   // i in Des, i+1 not
    if (rj > ri && ri >= rk) { a = i + 1; b = i + 2; }
    else { a = i; b = i + 1; }
  }
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& row : rows)
    for (int& v : row) {
      if (v == a) v = b;
      else if (v == b) v = a;
    }
  for (auto& row : rows) std::sort(row.begin(), row.end());
  Tableau out = t.is_straight() ? Tableau::straight(std::move(rows))
                                : Tableau::skew(t.inner_shape(), std::move(rows));
  if (out.outer_shape() != t.outer_shape())
    throw error("NotApplicable", "dual Knuth move changed the shape");
  return out;
}

// BFS over single dual Knuth relations; equals shape equality.
inline bool dual_knuth_equivalent(const Tableau& s, const Tableau& t) {
  if (!s.is_straight() || !t.is_straight())
    throw error("InvalidTableau", "dual_knuth_equivalent needs straight tableaux");
  if (s.size() != t.size()) throw error("SizeMismatch", "tableaux of different sizes");
  if (s == t) return true;
  int n = s.size();
  std::set<std::string> seen{s.str()};
  std::vector<Tableau> queue{s};
  while (!queue.empty()) {
    Tableau cur = queue.back();
    queue.pop_back();
    for (int i = 1; i + 2 <= n; ++i) {
      if (!dual_knuth_applicable(cur, i)) continue;
      Tableau next = dual_knuth_move(cur, i);
      if (next == t) return true;
      if (seen.insert(next.str()).second) queue.push_back(next);
    }
  }
  return false;
}

// Initial segment T_{[1,k]}; always a straight tableau.
inline Tableau restrict_initial(const Tableau& t, int k) {
  if (!t.is_straight()) throw error("InvalidTableau", "restrict_initial needs a straight tableau");
  if (k < 0 || k > t.size()) throw error("BadRange", "initial segment out of range");
  std::vector<std::vector<int>> rows;
  for (const auto& row : t.rows()) {
    std::vector<int> keep;
    for (int v : row)
      if (v <= k) keep.push_back(v);
    if (!keep.empty()) rows.push_back(std::move(keep));
  }
  return Tableau::straight(std::move(rows));
}

}  // namespace syt
