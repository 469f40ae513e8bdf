#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace syt {

// Integer-coefficient polynomial in q, exact arithmetic, trailing zeros trimmed.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPolynomial zero() { return QPolynomial(); }
  static QPolynomial one() { return QPolynomial({1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  long long coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : 0;
  }

  const std::vector<long long>& coeffs() const { return c_; }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  QPolynomial& operator-=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<long long> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return QPolynomial(std::move(out));
  }

  // multiply by q^k
  QPolynomial shifted(int k) const {
    if (is_zero()) return zero();
    std::vector<long long> out(static_cast<std::size_t>(k), 0);
    out.insert(out.end(), c_.begin(), c_.end());
    return QPolynomial(std::move(out));
  }

  QPolynomial scaled(long long s) const {
    std::vector<long long> out = c_;
    for (auto& x : out) x *= s;
    return QPolynomial(std::move(out));
  }

  bool operator==(const QPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const QPolynomial& o) const { return !(*this == o); }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      long long a = c_[k];
      if (a == 0) continue;
      if (!out.empty()) out += a > 0 ? " + " : " - ";
      else if (a < 0) out += "-";
      long long mag = a > 0 ? a : -a;
      if (k == 0) out += std::to_string(mag);
      else {
        if (mag != 1) out += std::to_string(mag) + "*";
        out += k == 1 ? "q" : "q^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<long long> c_;
};

}  // namespace syt
