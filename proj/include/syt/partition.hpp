#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "syt/error.hpp"

namespace syt {

// Integer partition: weakly decreasing positive parts. The empty partition is
// allowed (inner shape of a straight tableau).
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
        throw error("InvalidPartition", "parts must be weakly decreasing and positive");
    }
  }

  static Partition parse(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      parts.push_back(std::stoi(text.substr(pos, next - pos)));
      pos = next + 1;
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // length of row r (0-based); 0 beyond the last row
  int row(int r) const {
    return r >= 0 && r < rows() ? parts_[static_cast<std::size_t>(r)] : 0;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  Partition conjugate() const {
    std::vector<int> out;
    for (int c = 0; c < row(0); ++c) {
      int h = 0;
      while (h < rows() && row(h) > c) ++h;
      out.push_back(h);
    }
    return Partition(std::move(out));
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

// lambda <=^op_dom mu: every prefix sum of lambda is >= that of mu.
inline bool opposite_dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw error("SizeMismatch", "dominance compares partitions of equal size, got " +
                                    lambda.str() + " vs " + mu.str());
  int pl = 0, pm = 0;
  int k = std::max(lambda.rows(), mu.rows());
  for (int i = 0; i < k; ++i) {
    pl += lambda.row(i);
    pm += mu.row(i);
    if (pl < pm) return false;
  }
  return true;
}

inline bool is_rectangular(const Partition& p) {
  for (int r = 1; r < p.rows(); ++r)
    if (p.row(r) != p.row(0)) return false;
  return true;
}

// mu fits inside lambda part-wise
inline bool contains(const Partition& lambda, const Partition& mu) {
  for (int r = 0; r < mu.rows(); ++r)
    if (mu.row(r) > lambda.row(r)) return false;
  return true;
}

namespace detail {
inline void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int first = std::min(n, maxpart); first >= 1; --first) {
    cur.push_back(first);
    partitions_rec(n - first, first, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

// All partitions of n, largest-first lexicographic: (4),(3,1),(2,2),(2,1,1),(1,1,1,1).
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw error("BadRange", "enumerate_partitions needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::partitions_rec(n, n, cur, out);
  return out;
}

}  // namespace syt
