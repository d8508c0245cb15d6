#pragma once

#include <vector>

#include "ppl/lattice.hpp"
#include "ppl/polynomial.hpp"

namespace ppl {

struct MTriangle {
  BiPoly poly;  // x^a y^b with a <= b
  int n = 0;
};

/// Sum over p <= q with q - p in {0,1}^E of (-1)^|q-p| x^|p| y^|q|.
inline MTriangle m_triangle(const PointPoset& P) {
  const int n = P.dim();
  std::vector<std::vector<Rational>> rows;
  auto add = [&](int a, int b, int v) {
    if (static_cast<int>(rows.size()) <= a) rows.resize(static_cast<std::size_t>(a) + 1);
    auto& row = rows[static_cast<std::size_t>(a)];
    if (static_cast<int>(row.size()) <= b) row.resize(static_cast<std::size_t>(b) + 1);
    row[static_cast<std::size_t>(b)] += v;
  };
  std::vector<int> q(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < P.size(); ++i) {
    auto p = P.point(i);
    for (Mask S = 0; S < (Mask{1} << n); ++S) {
      for (int e = 0; e < n; ++e) q[static_cast<std::size_t>(e)] = p[static_cast<std::size_t>(e)] + ((S >> e) & 1);
      if (S != 0 && P.find(q) < 0) continue;
      const int k = popcount(S);
      add(P.rank(i), P.rank(i) + k, k % 2 == 0 ? 1 : -1);
    }
  }
  return {BiPoly(rows), n};
}

/// x <- (1-y)/(1-xy), y <- 1-xy: x^a y^b becomes (1-y)^a (1-xy)^(b-a).
inline BiPoly transmute(const BiPoly& M) {
  BiPoly out;
  const auto mat = M.matrix();
  for (std::size_t a = 0; a < mat.size(); ++a)
    for (std::size_t b = 0; b < mat[a].size(); ++b) {
      const Rational& c = mat[a][b];
      if (c == 0) continue;
      if (a > b) throw SupportError("M-triangle term x^" + std::to_string(a) + " y^" + std::to_string(b));
      BiPoly one_minus_y = BiPoly::outer(UniPoly::constant(1), UniPoly{1, -1}.pow(static_cast<unsigned>(a)));
      BiPoly one_minus_xy;
      const std::size_t k = b - a;
      for (std::size_t j = 0; j <= k; ++j) {
        Rational coef(binomial(static_cast<long>(k), j));
        if (j % 2 == 1) coef = -coef;
        one_minus_xy += BiPoly::monomial(coef, static_cast<int>(j), static_cast<int>(j));
      }
      out += one_minus_y * one_minus_xy * c;
    }
  return out;
}

inline MTriangle transmute(const MTriangle& M) { return {transmute(M.poly), M.n}; }

/// (xy)^n Mbar(1/x, 1/y) = Mbar(y, x) for the transmuted triangle Mbar.
inline bool m_duality_check(const BiPoly& transmuted, int n) { return transmuted.reflected(n) == transmuted.swapped(); }

inline bool m_duality_check(const Preorder& tau) {
  return m_duality_check(transmute(m_triangle(PointPoset(tau, 1, 0)).poly), tau.size());
}

/// Coefficient of x^0 y^n.
inline Rational corner(const BiPoly& transmuted, int n) { return transmuted.coeff(0, n); }

/// Rows from y^n down to y^0; row y^b lists the coefficients of x^0..x^b.
inline std::vector<std::vector<Rational>> display_rows(const BiPoly& p, int n) {
  std::vector<std::vector<Rational>> rows;
  for (int b = n; b >= 0; --b) {
    rows.emplace_back();
    for (int a = 0; a <= b; ++a) rows.back().push_back(p.coeff(a, b));
  }
  return rows;
}

}  // namespace ppl
