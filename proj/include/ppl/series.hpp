#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ppl/polynomial.hpp"

namespace ppl {

/// Power series in x truncated after x^order, with Laurent-polynomial
/// coefficients in t. Coefficients past the order are unknown.
class TruncSeries {
 public:
  TruncSeries() = default;
  explicit TruncSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw PrecondError("series order must be nonnegative");
  }
  TruncSeries(int order, std::vector<Laurent> coeffs) : TruncSeries(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = std::move(coeffs[k]);
  }

  [[nodiscard]] int order() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const Laurent& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  Laurent& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  [[nodiscard]] const std::vector<Laurent>& coeffs() const { return c_; }

  [[nodiscard]] TruncSeries truncated(int order) const {
    TruncSeries out(std::min(order, this->order()));
    for (int k = 0; k <= out.order(); ++k) out[k] = (*this)[k];
    return out;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) out[k] = a[k] + b[k];
    return out;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) out[k] = a[k] - b[k];
    return out;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= out.order(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

  [[nodiscard]] std::string str() const {
    std::string s;
    for (int k = 0; k <= order(); ++k) {
      if ((*this)[k].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + (*this)[k].str() + ")";
      if (k > 0) s += "x^" + std::to_string(k);
    }
    return (s.empty() ? "0" : s) + " + O(x^" + std::to_string(order() + 1) + ")";
  }

 private:
  std::vector<Laurent> c_;
};

/// 1/f; requires f_0 = 1.
inline TruncSeries reciprocal(const TruncSeries& f) {
  if (!(f[0] == Laurent(1))) throw PrecondError("reciprocal requires constant term 1");
  TruncSeries g(f.order());
  g[0] = Laurent(1);
  for (int k = 1; k <= f.order(); ++k) {
    Laurent acc;
    for (int j = 1; j <= k; ++j) acc += f[j] * g[k - j];
    g[k] = -acc;
  }
  return g;
}

/// exp(f); requires f_0 = 0. Uses k g_k = sum_j j f_j g_{k-j}.
inline TruncSeries exp(const TruncSeries& f) {
  if (!f[0].is_zero()) throw PrecondError("exp requires zero constant term");
  TruncSeries g(f.order());
  g[0] = Laurent(1);
  for (int k = 1; k <= f.order(); ++k) {
    Laurent acc;
    for (int j = 1; j <= k; ++j) acc += f[j] * g[k - j] * Rational(j);
    g[k] = acc * Rational(1, k);
  }
  return g;
}

/// f(g(x)); requires g_0 = 0.
inline TruncSeries compose(const TruncSeries& f, const TruncSeries& g) {
  if (!g[0].is_zero()) throw PrecondError("compose requires inner constant term 0");
  const int order = std::min(f.order(), g.order());
  TruncSeries out(order);
  TruncSeries power(order);
  power[0] = Laurent(1);
  for (int j = 0; j <= order; ++j) {
    if (!f[j].is_zero())
      for (int k = 0; k <= order; ++k) out[k] += f[j] * power[k];
    power = power * g.truncated(order);
  }
  return out;
}

/// Compositional inverse g with f(g(x)) = x; requires f_0 = 0 and f_1 a unit.
inline TruncSeries compositional_inverse(const TruncSeries& f) {
  if (!f[0].is_zero()) throw PrecondError("compositional inverse requires zero constant term");
  if (f.order() < 1 || !f[1].is_unit()) throw PrecondError("compositional inverse requires invertible linear term");
  const int order = f.order();
  const Laurent inv1 = f[1].inverse();
  TruncSeries g(order);
  if (order >= 1) g[1] = inv1;
  for (int k = 2; k <= order; ++k) {
    // [x^k] f(g) with g_k = 0 collects the terms from f_2, f_3, ...
    TruncSeries partial = g.truncated(k);
    Laurent acc;
    TruncSeries power = partial;
    for (int j = 2; j <= k; ++j) {
      power = power * partial;
      acc += f[j] * power[k];
    }
    g[k] = -(acc * inv1);
  }
  return g;
}

}  // namespace ppl
