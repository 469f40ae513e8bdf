#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "syt/error.hpp"
#include "syt/permutation.hpp"
#include "syt/tableau.hpp"

namespace syt {

struct RskPair {
  Tableau p;  // insertion tableau
  Tableau q;  // recording tableau
};

// Row-insertion RSK on a distinct-letter word.
inline RskPair rsk(const std::vector<int>& word) {
  {
    std::set<int> seen;
    for (int x : word)
      if (!seen.insert(x).second)
        throw error("RepeatedLetter", "letter " + std::to_string(x) + " repeats");
  }
  std::vector<std::vector<int>> prows, qrows;
  int step = 0;
  for (int x : word) {
    auto cell = tableau_insert(prows, x);
    if (cell.first == static_cast<int>(qrows.size())) qrows.emplace_back();
    qrows[static_cast<std::size_t>(cell.first)].push_back(++step);
  }
  return {Tableau::straight(std::move(prows)), Tableau::straight(std::move(qrows))};
}

inline RskPair rsk(const Perm& u) { return rsk(u.word()); }

// Words one elementary Knuth move away:
//   y x z ~ y z x   (x < y < z)
//   x z y ~ z x y   (x < y < z)
inline std::vector<std::vector<int>> knuth_neighbors(const std::vector<int>& word) {
  std::vector<std::vector<int>> out;
  for (std::size_t a = 0; a + 2 < word.size(); ++a) {
    int p = word[a], q = word[a + 1], r = word[a + 2];
    if ((q < p && p < r) || (r < p && p < q)) {  // yxz <-> yzx
      std::vector<int> w = word;
      std::swap(w[a + 1], w[a + 2]);
      out.push_back(std::move(w));
    }
    if ((p < r && r < q) || (q < r && r < p)) {  // xzy <-> zxy
      std::vector<int> w = word;
      std::swap(w[a], w[a + 1]);
      out.push_back(std::move(w));
    }
  }
  return out;
}

// C_T = {u : P(u) = T}, generated by BFS over Knuth moves from the row word.
// Sorted lexicographically.
inline std::vector<Perm> knuth_class(const Tableau& t) {
  if (!t.is_straight() || !t.is_standard())
    throw error("InvalidTableau", "knuth_class needs a straight standard tableau");
  if (t.size() > 8) throw error("BadRange", "knuth_class limited to n <= 8");
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> stack{t.reading_word()};
  seen.insert(stack.back());
  while (!stack.empty()) {
    std::vector<int> cur = std::move(stack.back());
    stack.pop_back();
    for (auto& nb : knuth_neighbors(cur))
      if (seen.insert(nb).second) stack.push_back(nb);
  }
  std::vector<Perm> out;
  out.reserve(seen.size());
  for (const auto& w : seen) out.push_back(Perm(w));
  return out;
}

// t^{down i}: row-insert the missing letter i into a tableau on [n] \ {i}.
inline Tableau insert_letter(const Tableau& t, int i) {
  if (!t.is_straight()) throw error("InvalidTableau", "insert_letter needs a straight tableau");
  std::vector<int> vals = t.entries();
  int n = t.size() + 1;
  if (i < 1 || i > n || std::binary_search(vals.begin(), vals.end(), i))
    throw error("AlphabetError", "letter " + std::to_string(i) + " must be the missing one");
  for (std::size_t k = 0; k < vals.size(); ++k) {
    int expect = static_cast<int>(k) + 1 + (static_cast<int>(k) + 1 >= i ? 1 : 0);
    if (vals[k] != expect)
      throw error("AlphabetError", "tableau is not on [n] minus one letter");
  }
  auto rows = t.rows();
  tableau_insert(rows, i);
  return Tableau::straight(std::move(rows));
}

}  // namespace syt
