#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ppl/rational.hpp"

namespace ppl {

/// Dense univariate polynomial over Q, ascending coefficients, no trailing zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(const Rational& a) { return UniPoly(std::vector<Rational>{a}); }
  static UniPoly monomial(const Rational& a, int degree) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    c.back() = a;
    return UniPoly(std::move(c));
  }
  /// t + a
  static UniPoly linear(const Rational& a) { return UniPoly{a, 1}; }

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
  [[nodiscard]] Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
  }
  [[nodiscard]] Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  [[nodiscard]] Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Rational& a) {
    if (a == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= a;
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  [[nodiscard]] UniPoly pow(unsigned e) const {
    UniPoly result = constant(1);
    UniPoly base = *this;
    while (e) {
      if (e & 1U) result *= base;
      base *= base;
      e >>= 1U;
    }
    return result;
  }

  [[nodiscard]] UniPoly derivative() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<long>(i));
    return UniPoly(std::move(out));
  }

  /// p(a*t + b)
  [[nodiscard]] UniPoly compose_affine(const Rational& a, const Rational& b) const {
    UniPoly out;
    const UniPoly inner{b, a};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * inner + constant(*it);
    return out;
  }

  /// t^n p(1/t); requires deg p <= n.
  [[nodiscard]] UniPoly reversed(int n) const {
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= degree(); ++i) out[static_cast<std::size_t>(n - i)] = c_[static_cast<std::size_t>(i)];
    return UniPoly(std::move(out));
  }

  [[nodiscard]] UniPoly monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
  }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw PrecondError("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly{}, a};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational lead = b.leading();
    for (int i = a.degree(); i >= db; --i) {
      const Rational f = rem[static_cast<std::size_t>(i)] / lead;
      quo[static_cast<std::size_t>(i - db)] = f;
      if (f == 0) continue;
      for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
  }

  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  [[nodiscard]] std::string str(char var = 't') const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Rational& a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      Rational mag = abs(a);
      if (!first) os << (a < 0 ? " - " : " + ");
      else if (a < 0) os << "-";
      first = false;
      const bool unit = mag == 1 && i > 0;
      if (!unit) os << to_string(mag);
      if (i > 0) os << (unit ? "" : "*") << var;
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Dense bivariate polynomial; coefficient (i, j) multiplies x^i y^j.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<std::vector<Rational>> rows) : c_(std::move(rows)) { trim(); }

  /// pu(x) * pv(y)
  static BiPoly outer(const UniPoly& pu, const UniPoly& pv) {
    std::vector<std::vector<Rational>> rows(pu.coeffs().size(), std::vector<Rational>(pv.coeffs().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] = pu.coeffs()[i] * pv.coeffs()[j];
    return BiPoly(std::move(rows));
  }
  static BiPoly monomial(const Rational& a, int i, int j) {
    BiPoly p;
    p.add_term(i, j, a);
    return p;
  }

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] int degree_x() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] int degree_y() const {
    std::size_t w = 0;
    for (const auto& r : c_) w = std::max(w, r.size());
    return static_cast<int>(w) - 1;
  }
  [[nodiscard]] int total_degree() const {
    int d = -1;
    for (int i = 0; i <= degree_x(); ++i)
      for (int j = 0; j < static_cast<int>(c_[static_cast<std::size_t>(i)].size()); ++j)
        if (coeff(i, j) != 0) d = std::max(d, i + j);
    return d;
  }
  [[nodiscard]] Rational coeff(int i, int j) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(c_.size())) return 0;
    const auto& row = c_[static_cast<std::size_t>(i)];
    if (j >= static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(j)];
  }
  /// Full rectangular matrix (degree_x+1) x (degree_y+1), zero padded.
  [[nodiscard]] std::vector<std::vector<Rational>> matrix() const {
    const int w = degree_y() + 1;
    std::vector<std::vector<Rational>> out(c_.size(), std::vector<Rational>(static_cast<std::size_t>(std::max(w, 0))));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < c_[i].size(); ++j) out[i][j] = c_[i][j];
    return out;
  }

  void add_term(int i, int j, const Rational& a) {
    if (a == 0) return;
    if (static_cast<int>(c_.size()) <= i) c_.resize(static_cast<std::size_t>(i) + 1);
    auto& row = c_[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) <= j) row.resize(static_cast<std::size_t>(j) + 1);
    row[static_cast<std::size_t>(j)] += a;
    trim();
  }

  BiPoly& operator+=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      if (o.c_[i].size() > c_[i].size()) c_[i].resize(o.c_[i].size());
      for (std::size_t j = 0; j < o.c_[i].size(); ++j) c_[i][j] += o.c_[i][j];
    }
    trim();
    return *this;
  }
  BiPoly& operator*=(const Rational& a) {
    for (auto& r : c_)
      for (auto& x : r) x *= a;
    trim();
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) {
    BiPoly nb = b;
    nb *= Rational(-1);
    return a += nb;
  }
  friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (int i = 0; i <= a.degree_x(); ++i)
      for (int j = 0; j < static_cast<int>(a.c_[static_cast<std::size_t>(i)].size()); ++j) {
        const Rational& x = a.c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (x == 0) continue;
        for (int k = 0; k <= b.degree_x(); ++k)
          for (int l = 0; l < static_cast<int>(b.c_[static_cast<std::size_t>(k)].size()); ++l) {
            const Rational& y = b.c_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
            if (y != 0) out.add_raw(i + k, j + l, x * y);
          }
      }
    out.trim();
    return out;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

  [[nodiscard]] Rational eval(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    for (int i = degree_x(); i >= 0; --i) {
      Rational row = 0;
      const auto& r = c_[static_cast<std::size_t>(i)];
      for (auto it = r.rbegin(); it != r.rend(); ++it) row = row * y + *it;
      acc = acc * x + row;
    }
    return acc;
  }

  /// p(a*x + b, c*y + d)
  [[nodiscard]] BiPoly substitute_affine(const Rational& a, const Rational& b, const Rational& c,
                                         const Rational& d) const {
    const UniPoly lx{b, a};
    const UniPoly ly{d, c};
    std::vector<UniPoly> px{UniPoly::constant(1)};
    std::vector<UniPoly> py{UniPoly::constant(1)};
    for (int i = 1; i <= degree_x(); ++i) px.push_back(px.back() * lx);
    for (int j = 1; j <= degree_y(); ++j) py.push_back(py.back() * ly);
    BiPoly out;
    for (int i = 0; i <= degree_x(); ++i)
      for (int j = 0; j < static_cast<int>(c_[static_cast<std::size_t>(i)].size()); ++j) {
        const Rational& k = c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (k != 0) out += outer(px[static_cast<std::size_t>(i)], py[static_cast<std::size_t>(j)]) * k;
      }
    return out;
  }

  /// p(y, x)
  [[nodiscard]] BiPoly swapped() const {
    BiPoly out;
    for (int i = 0; i <= degree_x(); ++i)
      for (int j = 0; j < static_cast<int>(c_[static_cast<std::size_t>(i)].size()); ++j)
        out.add_raw(j, i, c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    out.trim();
    return out;
  }

  /// (xy)^n p(1/x, 1/y); requires both partial degrees <= n.
  [[nodiscard]] BiPoly reflected(int n) const {
    if (degree_x() > n || degree_y() > n) throw PrecondError("reflected: degree exceeds bound");
    BiPoly out;
    for (int i = 0; i <= degree_x(); ++i)
      for (int j = 0; j < static_cast<int>(c_[static_cast<std::size_t>(i)].size()); ++j)
        out.add_raw(n - i, n - j, c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    out.trim();
    return out;
  }

  /// p(t, 0)
  [[nodiscard]] UniPoly restrict_y_zero() const {
    std::vector<Rational> out;
    for (const auto& r : c_) out.push_back(r.empty() ? Rational(0) : r[0]);
    return UniPoly(std::move(out));
  }
  /// p(0, t)
  [[nodiscard]] UniPoly restrict_x_zero() const {
    return c_.empty() ? UniPoly{} : UniPoly(c_[0]);
  }
  /// p(t, t)
  [[nodiscard]] UniPoly diagonal() const {
    std::vector<Rational> out(static_cast<std::size_t>(std::max(0, degree_x() + degree_y() + 1)));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < c_[i].size(); ++j) out[i + j] += c_[i][j];
    return UniPoly(std::move(out));
  }

 private:
  void add_raw(int i, int j, const Rational& a) {
    if (static_cast<int>(c_.size()) <= i) c_.resize(static_cast<std::size_t>(i) + 1);
    auto& row = c_[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) <= j) row.resize(static_cast<std::size_t>(j) + 1);
    row[static_cast<std::size_t>(j)] += a;
  }
  void trim() {
    for (auto& r : c_)
      while (!r.empty() && r.back() == 0) r.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
  }
  std::vector<std::vector<Rational>> c_;
};

/// Laurent polynomial in t: sum of c[k] t^(low + k).
class Laurent {
 public:
  Laurent() = default;
  Laurent(const Rational& a) : c_{a} { normalize(); }  // NOLINT(google-explicit-constructor)
  Laurent(int low, std::vector<Rational> coeffs) : low_(low), c_(std::move(coeffs)) { normalize(); }
  explicit Laurent(const UniPoly& p, int shift = 0) : low_(shift), c_(p.coeffs()) { normalize(); }

  static Laurent monomial(const Rational& a, int exponent) { return Laurent(exponent, {a}); }

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] int low() const { return low_; }
  [[nodiscard]] int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] Rational coeff(int e) const {
    const int k = e - low_;
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
  }
  [[nodiscard]] bool is_unit() const { return c_.size() == 1; }
  [[nodiscard]] Laurent inverse() const {
    if (!is_unit()) throw PrecondError("Laurent polynomial is not a unit");
    return monomial(Rational(1) / c_[0], -low_);
  }
  /// t -> t^2
  [[nodiscard]] Laurent square_variable() const {
    std::vector<Rational> out(c_.empty() ? 0 : 2 * c_.size() - 1);
    for (std::size_t k = 0; k < c_.size(); ++k) out[2 * k] = c_[k];
    return Laurent(2 * low_, std::move(out));
  }
  [[nodiscard]] Rational eval(const Rational& t) const {
    Rational acc = 0;
    for (int e = high(); e >= low_ && !c_.empty(); --e) acc = acc * t + coeff(e);
    return acc * pow(t, low_);
  }

  Laurent& operator+=(const Laurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
    for (int e = lo; e <= hi; ++e) out[static_cast<std::size_t>(e - lo)] = coeff(e) + o.coeff(e);
    low_ = lo;
    c_ = std::move(out);
    normalize();
    return *this;
  }
  Laurent& operator*=(const Rational& a) {
    for (auto& x : c_) x *= a;
    normalize();
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a) { return a *= Rational(-1); }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a += -b; }
  friend Laurent operator*(Laurent a, const Rational& s) { return a *= s; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Laurent(a.low_ + b.low_, std::move(out));
  }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.low_ == b.low_ && a.c_ == b.c_; }

  [[nodiscard]] std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = high(); e >= low_; --e) {
      const Rational a = coeff(e);
      if (a == 0) continue;
      if (!first) os << (a < 0 ? " - " : " + ");
      else if (a < 0) os << "-";
      first = false;
      const Rational mag = abs(a);
      if (e == 0 || mag != 1) os << to_string(mag);
      if (e != 0) os << (mag != 1 ? "*" : "") << "t" << (e != 1 ? "^" + std::to_string(e) : "");
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  int low_ = 0;
  std::vector<Rational> c_;
};

}  // namespace ppl
