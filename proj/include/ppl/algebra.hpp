#pragma once

// Exact polynomial toolkit: interpolation, binomial bases, h*-vectors,
// gamma and magic expansions, Sturm real-rootedness, the g-theorem test,
// and one floating-point root diagnostic.

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ppl/polynomial.hpp"

namespace ppl {

/// Unique polynomial of degree < points.size() through the given nodes.
inline UniPoly interpolate(std::span<const std::pair<Rational, Rational>> points) {
  if (points.empty()) throw PrecondError("interpolate needs at least one point");
  const std::size_t m = points.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (points[i].first == points[j].first)
        throw DuplicateNode("duplicate interpolation node " + to_string(points[i].first));
  // Newton divided differences.
  std::vector<Rational> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
  UniPoly result = UniPoly::constant(dd[m - 1]);
  for (std::size_t k = m - 1; k-- > 0;) result = result * UniPoly::linear(-points[k].first) + UniPoly::constant(dd[k]);
  return result;
}

inline UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  return interpolate(std::span<const std::pair<Rational, Rational>>(points));
}

enum class BinomShift { rising, upper };

/// rising: C(t+a-1, a) = t(t+1)...(t+a-1)/a!; upper: C(t+a, a) = (t+1)...(t+a)/a!.
inline UniPoly binom_poly(int a, BinomShift shift) {
  if (a < 0) throw PrecondError("binom_poly needs a >= 0");
  UniPoly p = UniPoly::constant(1);
  const int first = shift == BinomShift::rising ? 0 : 1;
  for (int k = 0; k < a; ++k) p *= UniPoly::linear(first + k);
  return p * (Rational(1) / Rational(factorial(static_cast<unsigned>(a))));
}

/// C(t + shift, n) as a polynomial in t.
inline UniPoly binom_shifted(int shift, int n) {
  UniPoly p = UniPoly::constant(1);
  for (int k = 0; k < n; ++k) p *= UniPoly::linear(shift - k);
  return p * (Rational(1) / Rational(factorial(static_cast<unsigned>(n))));
}

/// Numerator of sum_m ehr(m) t^m over (1-t)^(dim+1).
inline UniPoly hstar_from_ehrhart(const UniPoly& ehr, int dim) {
  if (ehr.degree() > dim) throw PrecondError("Ehrhart polynomial degree exceeds dimension");
  if (ehr.eval(0) != 1) throw PrecondError("Ehrhart polynomial must satisfy ehr(0) = 1");
  std::vector<Rational> h(static_cast<std::size_t>(dim) + 1);
  for (int i = 0; i <= dim; ++i) {
    Rational acc = 0;
    for (int j = 0; j <= i; ++j) {
      const BigInt b = binomial(dim + 1, static_cast<unsigned long>(j));
      const Rational term = Rational(b) * ehr.eval(i - j);
      if (j % 2 == 0) acc += term;
      else acc -= term;
    }
    if (!is_integer(acc) || acc < 0)
      throw NonIntegralHStar("h* coefficient " + std::to_string(i) + " is " + to_string(acc));
    h[static_cast<std::size_t>(i)] = acc;
  }
  return UniPoly(std::move(h));
}

/// Inverse of hstar_from_ehrhart: sum_i h_i C(t + dim - i, dim).
inline UniPoly ehrhart_from_hstar(const UniPoly& hstar, int dim) {
  UniPoly out;
  for (int i = 0; i <= hstar.degree(); ++i)
    if (hstar.coeff(i) != 0) out += binom_shifted(dim - i, dim) * hstar.coeff(i);
  return out;
}

inline bool is_palindromic(const UniPoly& p, int n) {
  if (p.degree() > n) return false;
  for (int i = 0; i <= n; ++i)
    if (p.coeff(i) != p.coeff(n - i)) return false;
  return true;
}

/// gamma_i with h = sum gamma_i t^i (1+t)^(n-2i); nullopt when not palindromic.
inline std::optional<std::vector<Rational>> gamma_vector(const UniPoly& h, int n) {
  if (!is_palindromic(h, n)) return std::nullopt;
  std::vector<Rational> gamma;
  UniPoly rest = h;
  const UniPoly one_plus_t{1, 1};
  for (int i = 0; i <= n / 2; ++i) {
    const Rational g = rest.coeff(i);
    gamma.push_back(g);
    rest -= UniPoly::monomial(g, i) * one_plus_t.pow(static_cast<unsigned>(n - 2 * i));
  }
  if (!rest.is_zero()) throw InternalError("gamma expansion left a remainder");
  return gamma;
}

inline UniPoly gamma_expand(std::span<const Rational> gamma, int n) {
  UniPoly out;
  const UniPoly one_plus_t{1, 1};
  for (std::size_t i = 0; i < gamma.size(); ++i)
    out += UniPoly::monomial(gamma[i], static_cast<int>(i)) * one_plus_t.pow(static_cast<unsigned>(n - 2 * static_cast<int>(i)));
  return out;
}

/// c_i with ehr = sum c_i t^i (1+t)^(d-i).
inline std::vector<Rational> magic_coefficients(const UniPoly& ehr, int d) {
  if (ehr.degree() > d) throw PrecondError("magic_coefficients: degree exceeds d");
  std::vector<Rational> c;
  UniPoly rest = ehr;
  const UniPoly one_plus_t{1, 1};
  for (int i = 0; i <= d; ++i) {
    const Rational ci = rest.coeff(i);
    c.push_back(ci);
    rest -= UniPoly::monomial(ci, i) * one_plus_t.pow(static_cast<unsigned>(d - i));
  }
  return c;
}

inline UniPoly magic_expand(std::span<const Rational> c, int d) {
  UniPoly out;
  const UniPoly one_plus_t{1, 1};
  for (std::size_t i = 0; i < c.size(); ++i)
    out += UniPoly::monomial(c[i], static_cast<int>(i)) * one_plus_t.pow(static_cast<unsigned>(d - static_cast<int>(i)));
  return out;
}

/// p / gcd(p, p')
inline UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  const UniPoly g = UniPoly::gcd(p, p.derivative());
  return UniPoly::divmod(p, g).first.monic();
}

inline int sign(const Rational& q) { return sgn(q); }

/// Number of distinct real roots of p, by a Sturm sequence.
inline int count_distinct_real_roots(const UniPoly& p) {
  const UniPoly q = squarefree_part(p);
  if (q.degree() <= 0) return 0;
  std::vector<UniPoly> chain{q, q.derivative()};
  while (chain.back().degree() > 0) {
    UniPoly r = UniPoly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  auto changes = [&](bool at_plus_infinity) {
    int count = 0;
    int prev = 0;
    for (const auto& f : chain) {
      int s = sign(f.leading());
      if (!at_plus_infinity && f.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return changes(false) - changes(true);
}

/// True iff p splits into real linear factors (multiplicities allowed).
inline bool is_real_rooted(const UniPoly& p) {
  if (p.is_zero()) throw PrecondError("is_real_rooted of the zero polynomial");
  const UniPoly q = squarefree_part(p);
  return count_distinct_real_roots(q) == q.degree();
}

inline bool is_unimodal_palindromic(std::span<const std::int64_t> h) {
  const int n = static_cast<int>(h.size()) - 1;
  for (int i = 0; i <= n; ++i)
    if (h[static_cast<std::size_t>(i)] != h[static_cast<std::size_t>(n - i)]) return false;
  for (int i = 1; i <= n / 2; ++i)
    if (h[static_cast<std::size_t>(i)] < h[static_cast<std::size_t>(i - 1)]) return false;
  return true;
}

/// a^<i>: Macaulay pseudo-power from the i-binomial representation of a.
inline BigInt macaulay_pseudo_power(const BigInt& a, int i) {
  if (a < 0 || i < 1) throw PrecondError("macaulay_pseudo_power needs a >= 0, i >= 1");
  BigInt rest = a;
  BigInt out = 0;
  for (int level = i; level >= 1 && rest > 0; --level) {
    long k = level;
    while (binomial(k + 1, static_cast<unsigned long>(level)) <= rest) ++k;
    rest -= binomial(k, static_cast<unsigned long>(level));
    out += binomial(k + 1, static_cast<unsigned long>(level + 1));
  }
  return out;
}

/// g-theorem test: palindromic, and the g-vector is an M-sequence.
inline bool is_polytopal_h(std::span<const std::int64_t> h) {
  if (h.empty() || h[0] != 1) throw PrecondError("is_polytopal_h needs h_0 = 1");
  const int n = static_cast<int>(h.size()) - 1;
  for (int i = 0; i <= n; ++i)
    if (h[static_cast<std::size_t>(i)] != h[static_cast<std::size_t>(n - i)]) return false;
  std::vector<BigInt> g{1};
  for (int i = 1; i <= n / 2; ++i) {
    g.emplace_back(static_cast<long>(h[static_cast<std::size_t>(i)] - h[static_cast<std::size_t>(i - 1)]));
    if (g.back() < 0) return false;
  }
  for (int i = 1; i + 1 < static_cast<int>(g.size()); ++i)
    if (g[static_cast<std::size_t>(i + 1)] > macaulay_pseudo_power(g[static_cast<std::size_t>(i)], i)) return false;
  return true;
}

/// Numeric roots of p (floating point, Aberth iteration on the squarefree part).
inline std::vector<std::complex<double>> numeric_roots(const UniPoly& p, int max_iter = 2000) {
  const UniPoly q = squarefree_part(p);
  const int d = q.degree();
  if (d <= 0) return {};
  std::vector<std::complex<long double>> a(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) a[static_cast<std::size_t>(i)] = static_cast<long double>(q.coeff(i).get_d());
  auto eval = [&](std::complex<long double> z, std::complex<long double>& deriv) {
    std::complex<long double> v = 0;
    deriv = 0;
    for (int i = d; i >= 0; --i) {
      deriv = deriv * z + v;
      v = v * z + a[static_cast<std::size_t>(i)];
    }
    return v;
  };
  // Cauchy bound for the initial circle.
  long double radius = 0;
  for (int i = 0; i < d; ++i) radius = std::max(radius, std::abs(a[static_cast<std::size_t>(i)]));
  radius = 1 + radius;
  std::vector<std::complex<long double>> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const long double angle = 2.0L * 3.14159265358979323846L * k / d + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius * 0.5L, angle);
  }
  bool converged = false;
  for (int it = 0; it < max_iter && !converged; ++it) {
    converged = true;
    for (int k = 0; k < d; ++k) {
      std::complex<long double> deriv;
      const auto zk = z[static_cast<std::size_t>(k)];
      const auto v = eval(zk, deriv);
      if (std::abs(v) == 0) continue;
      const auto ratio = v / deriv;
      std::complex<long double> sum = 0;
      for (int j = 0; j < d; ++j)
        if (j != k) sum += 1.0L / (zk - z[static_cast<std::size_t>(j)]);
      const auto step = ratio / (1.0L - ratio * sum);
      z[static_cast<std::size_t>(k)] = zk - step;
      if (std::abs(step) > 1e-17L * std::max<long double>(1, std::abs(zk))) converged = false;
    }
  }
  if (!converged) throw ConvergenceFailure("Aberth iteration did not converge");
  std::vector<std::complex<double>> out;
  for (const auto& r : z) out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  return out;
}

/// Numeric diagnostic: every complex root lies on Re(z) = -1/2.
inline bool roots_on_critical_line(const UniPoly& p, double tol = 1e-9) {
  if (p.is_zero()) throw PrecondError("roots_on_critical_line of the zero polynomial");
  if (tol <= 0) throw PrecondError("tolerance must be positive");
  for (const auto& z : numeric_roots(p))
    if (std::abs(z.real() + 0.5) > tol * std::max(1.0, std::abs(z))) return false;
  return true;
}

}  // namespace ppl
