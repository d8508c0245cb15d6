#pragma once

// Example families: builders, closed forms, golden tables and the
// generating-function identities between them.

#include <optional>
#include <string>
#include <vector>

#include "ppl/algebra.hpp"
#include "ppl/lattice.hpp"
#include "ppl/series.hpp"

namespace ppl {

enum class Family { zigzag, antichain_sum, grid, grid_open, grid_half, double_chain, k_chain, comb };

inline const std::vector<std::pair<Family, std::string>>& family_names() {
  static const std::vector<std::pair<Family, std::string>> names{
      {Family::zigzag, "zigzag"},       {Family::antichain_sum, "antichain_sum"}, {Family::grid, "grid"},
      {Family::grid_open, "grid_open"}, {Family::grid_half, "grid_half"},         {Family::double_chain, "double_chain"},
      {Family::k_chain, "k_chain"},     {Family::comb, "comb"}};
  return names;
}

inline std::string family_name(Family f) {
  for (const auto& [g, s] : family_names())
    if (g == f) return s;
  return "?";
}

inline Family parse_family(const std::string& s) {
  for (const auto& [g, name] : family_names())
    if (name == s) return g;
  throw BadParameters("unknown family '" + s + "'");
}

struct FamilySpec {
  Family name = Family::zigzag;
  int n = 1;
  int m = 0;  // antichain_sum: size of the lower antichain
  int k = 0;  // k_chain: vertex size
};

namespace detail {

/// Subposet of C_rows x C_2 on the listed cells (i, j), componentwise order.
inline Preorder grid_cells(const std::vector<std::pair<int, int>>& cells) {
  std::vector<std::vector<int>> sets;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < cells.size(); ++a) {
    sets.push_back({static_cast<int>(a)});
    for (std::size_t b = 0; b < cells.size(); ++b)
      if (a != b && cells[a].first <= cells[b].first && cells[a].second <= cells[b].second)
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return Preorder::build(sets, pairs);
}

inline std::vector<std::pair<int, int>> grid_product(int rows) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < 2; ++j) cells.emplace_back(i, j);
  return cells;
}

inline void need(bool ok, const std::string& what) {
  if (!ok) throw BadParameters(what);
}

}  // namespace detail

inline int family_size(const FamilySpec& s) {
  switch (s.name) {
    case Family::zigzag: return s.n;
    case Family::antichain_sum: return s.m + s.n;
    case Family::grid:
    case Family::grid_open:
    case Family::double_chain:
    case Family::comb: return 2 * s.n;
    case Family::grid_half: return 2 * s.n - 1;
    case Family::k_chain: return s.n * s.k;
  }
  return 0;
}

inline Preorder build_family(const FamilySpec& s) {
  detail::need(s.n >= 1, "n must be positive");
  if (s.name == Family::antichain_sum) detail::need(s.m >= 1, "antichain_sum needs m >= 1");
  if (s.name == Family::k_chain) detail::need(s.k >= 1, "k_chain needs k >= 1");
  detail::need(family_size(s) <= kMaxGroundSize, "family instance exceeds " + std::to_string(kMaxGroundSize) + " elements");
  switch (s.name) {
    case Family::zigzag: {
      std::vector<std::vector<int>> sets;
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < s.n; ++i) sets.push_back({i});
      // 1-based i: i < i+1 for odd i, i > i+1 for even i
      for (int i = 1; i < s.n; ++i) {
        if (i % 2 == 1) pairs.emplace_back(i - 1, i);
        else pairs.emplace_back(i, i - 1);
      }
      return Preorder::build(sets, pairs);
    }
    case Family::antichain_sum: return combine(CombineKind::ordinal_sum, antichain(s.m), antichain(s.n));
    case Family::grid: return detail::grid_cells(detail::grid_product(s.n));
    case Family::grid_open: {
      auto cells = detail::grid_product(s.n + 1);
      cells.erase(cells.begin());
      cells.pop_back();
      return detail::grid_cells(cells);
    }
    case Family::grid_half: {
      auto cells = detail::grid_product(s.n);
      cells.pop_back();
      return detail::grid_cells(cells);
    }
    case Family::double_chain: return chain_of(std::vector<int>(static_cast<std::size_t>(s.n), 2));
    case Family::k_chain: return chain_of(std::vector<int>(static_cast<std::size_t>(s.n), s.k));
    case Family::comb: {
      Preorder t = chain(2);
      for (int i = 1; i < s.n; ++i) t = combine(CombineKind::ordinal_sum, antichain(1), combine(CombineKind::disjoint_union, t, antichain(1)));
      return t;
    }
  }
  throw BadParameters("unknown family");
}

/// h(tau, t) and the point count of Q_tau.
struct FamilyData {
  UniPoly h;
  BigInt count;
};

inline FamilyData family_data(const Preorder& tau) {
  PointPoset P(tau, 1, 0);
  std::vector<Rational> c;
  for (auto v : h_vector(P)) c.emplace_back(static_cast<long>(v));
  return {UniPoly(c), BigInt(static_cast<unsigned long>(P.size()))};
}

inline FamilyData family_data(const FamilySpec& s) { return family_data(build_family(s)); }

// ---------------------------------------------------------------------------
// Closed forms.

inline UniPoly delannoy(int n) {
  if (n < 0) throw PrecondError("negative index");
  UniPoly prev = UniPoly::constant(1), cur{1, 1};
  if (n == 0) return prev;
  for (int i = 2; i <= n; ++i) {
    UniPoly next = cur * UniPoly{1, 1} + prev * UniPoly::monomial(1, 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Double sum over k, l of C(k+l,k) C(m,k) C(n,l) t^(m-k+l), checked against
/// its gamma form sum_i C(m,i) C(n,i) t^i (1+t)^(m+n-2i).
inline UniPoly antichain_sum_h(int m, int n) {
  if (m < 1 || n < 1) throw PrecondError("antichain sizes must be positive");
  UniPoly h;
  for (int k = 0; k <= m; ++k)
    for (int l = 0; l <= n; ++l)
      h += UniPoly::monomial(Rational(binomial(k + l, static_cast<unsigned long>(k)) * binomial(m, static_cast<unsigned long>(k)) *
                                      binomial(n, static_cast<unsigned long>(l))),
                             m - k + l);
  UniPoly g;
  for (int i = 0; i <= std::min(m, n); ++i)
    g += UniPoly::monomial(Rational(binomial(m, static_cast<unsigned long>(i)) * binomial(n, static_cast<unsigned long>(i))), i) *
         UniPoly{1, 1}.pow(static_cast<unsigned>(m + n - 2 * i));
  if (g != h) throw InternalError("antichain sum: gamma form disagrees for m=" + std::to_string(m) + ", n=" + std::to_string(n));
  return h;
}

enum class NarayanaType { A, B };

inline UniPoly narayana(NarayanaType type, int n) {
  if (n < 0) throw PrecondError("negative index");
  std::vector<Rational> c;
  for (int i = 0; i <= n; ++i) {
    const auto ni = static_cast<unsigned long>(i);
    if (type == NarayanaType::A) c.push_back(Rational(binomial(n, ni) * binomial(n + 1, ni)) / (i + 1));
    else c.emplace_back(binomial(n, ni) * binomial(n, ni));
  }
  return UniPoly(c);
}

// ---------------------------------------------------------------------------
// Golden tables: point counts and h-vectors for n = 1..4.

struct TableRow {
  int n;
  long count;
  std::vector<long> h;
};

inline const std::vector<TableRow>& golden_table(Family f) {
  // C_n x C_2, OEIS A158266
  static const std::vector<TableRow> grid{{1, 5, {1, 3, 1}},
                                          {2, 38, {1, 9, 18, 9, 1}},
                                          {3, 352, {1, 18, 86, 142, 86, 18, 1}},
                                          {4, 3659, {1, 30, 260, 882, 1313, 882, 260, 30, 1}}};
  // C_{n+1} x C_2 minus min and max, OEIS A370955
  static const std::vector<TableRow> grid_open{{1, 4, {1, 2, 1}},
                                               {2, 29, {1, 7, 13, 7, 1}},
                                               {3, 265, {1, 15, 65, 103, 65, 15, 1}},
                                               {4, 2745, {1, 26, 206, 659, 961, 659, 206, 26, 1}}};
  // C_n x C_2 minus max, OEIS A000888
  static const std::vector<TableRow> grid_half{{1, 2, {1, 1}},
                                               {2, 12, {1, 5, 5, 1}},
                                               {3, 100, {1, 12, 37, 37, 12, 1}},
                                               {4, 980, {1, 22, 138, 329, 329, 138, 22, 1}}};
  // OEIS A066357
  static const std::vector<TableRow> double_chain{{1, 6, {1, 4, 1}},
                                                  {2, 53, {1, 12, 27, 12, 1}},
                                                  {3, 554, {1, 24, 134, 236, 134, 24, 1}},
                                                  {4, 6362, {1, 40, 410, 1540, 2380, 1540, 410, 40, 1}}};
  // OEIS A034015
  static const std::vector<TableRow> comb{{1, 5, {1, 3, 1}},
                                          {2, 33, {1, 8, 15, 8, 1}},
                                          {3, 249, {1, 15, 61, 95, 61, 15, 1}},
                                          {4, 2033, {1, 24, 166, 484, 683, 484, 166, 24, 1}}};
  static const std::vector<TableRow> none;
  switch (f) {
    case Family::grid: return grid;
    case Family::grid_open: return grid_open;
    case Family::grid_half: return grid_half;
    case Family::double_chain: return double_chain;
    case Family::comb: return comb;
    default: return none;
  }
}

struct TableEntry {
  std::string family;
  std::string params;
  std::string expected;
  std::string got;
  bool ok = false;
};

namespace detail {

inline std::string list_str(const UniPoly& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? "," : "") + to_string(p.coeffs()[i]);
  return s + ")";
}

inline UniPoly from_longs(const std::vector<long>& v) {
  std::vector<Rational> c(v.begin(), v.end());
  return UniPoly(c);
}

}  // namespace detail

/// Compares enumerated data with the tables and closed forms. Mismatches are
/// entries with ok = false.
inline std::vector<TableEntry> family_table_check(int max_table_n = 4, int max_zigzag = 10, int max_antichain = 7) {
  std::vector<TableEntry> out;
  auto add = [&](Family f, std::string params, const std::string& expected, const std::string& got) {
    out.push_back({family_name(f), std::move(params), expected, got, expected == got});
  };
  for (Family f : {Family::grid, Family::grid_open, Family::grid_half, Family::double_chain, Family::comb})
    for (const auto& row : golden_table(f)) {
      if (row.n > max_table_n) continue;
      const auto d = family_data(FamilySpec{f, row.n});
      const std::string p = "n=" + std::to_string(row.n);
      add(f, p + " count", std::to_string(row.count), d.count.get_str());
      add(f, p + " h", detail::list_str(detail::from_longs(row.h)), detail::list_str(d.h));
      if (f == Family::grid_half)
        add(f, p + " narayana", detail::list_str(narayana(NarayanaType::A, row.n - 1) * narayana(NarayanaType::B, row.n)),
            detail::list_str(d.h));
    }
  for (int n = 1; n <= max_zigzag; ++n) {
    const UniPoly d = delannoy(n);
    add(Family::zigzag, "n=" + std::to_string(n) + " h", detail::list_str(d), detail::list_str(family_data(FamilySpec{Family::zigzag, n}).h));
    if (n >= 2) {
      const Rational pell = 2 * delannoy(n - 1).eval(1) + delannoy(n - 2).eval(1);
      add(Family::zigzag, "n=" + std::to_string(n) + " pell", to_string(pell), to_string(d.eval(1)));
    }
  }
  for (int total = 2; total <= max_antichain; ++total)
    for (int m = 1; m < total; ++m) {
      const int n = total - m;
      add(Family::antichain_sum, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " h", detail::list_str(antichain_sum_h(m, n)),
          detail::list_str(family_data(FamilySpec{Family::antichain_sum, n, m}).h));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Generating-function identities.

enum class SeriesIdentity { grid_inverse, grid_exp, double_chain_inverse, k_chain_exp, comb_compositional };

inline const std::vector<std::pair<SeriesIdentity, std::string>>& series_names() {
  static const std::vector<std::pair<SeriesIdentity, std::string>> names{{SeriesIdentity::grid_inverse, "grid_inverse"},
                                                                         {SeriesIdentity::grid_exp, "grid_exp"},
                                                                         {SeriesIdentity::double_chain_inverse, "double_chain_inverse"},
                                                                         {SeriesIdentity::k_chain_exp, "k_chain_exp"},
                                                                         {SeriesIdentity::comb_compositional, "comb_compositional"}};
  return names;
}

inline SeriesIdentity parse_series_identity(const std::string& s) {
  for (const auto& [id, name] : series_names())
    if (name == s) return id;
  throw BadParameters("unknown series identity '" + s + "'");
}

struct SeriesCheck {
  TruncSeries lhs, rhs;  // Laurent-coefficient sides
  TruncSeries lhs_count, rhs_count;  // same identity on point counts
  [[nodiscard]] bool ok() const { return lhs == rhs && lhs_count == rhs_count; }
};

namespace detail {

/// Centre h(t) of degree 2n (or nk) at t^0.
inline Laurent centred(const UniPoly& h, int shift) { return Laurent(h, -shift); }

inline TruncSeries at_one(const TruncSeries& s) {
  TruncSeries out(s.order());
  for (int k = 0; k <= s.order(); ++k) out[k] = Laurent(s[k].eval(1));
  return out;
}

inline TruncSeries one(int K) {
  TruncSeries s(K);
  s[0] = Laurent(1);
  return s;
}

/// 1 + x + sum_{n>=1} sign * h(f_n) t^-n x^(n+1), from family data.
inline TruncSeries shifted_family_series(Family f, int K, int sign, bool leading_one) {
  TruncSeries s(K);
  if (leading_one) s[0] = Laurent(1);
  if (K >= 1) s[1] = Laurent(leading_one ? sign : 1);
  for (int n = 1; n + 1 <= K; ++n) s[n + 1] = centred(family_data(FamilySpec{f, n}).h, n) * Rational(sign);
  return s;
}

}  // namespace detail

inline SeriesCheck series_identity_check(SeriesIdentity id, int K, int k = 2) {
  if (K < 1) throw PrecondError("series order must be positive");
  SeriesCheck out;
  switch (id) {
    case SeriesIdentity::grid_inverse: {
      if (2 * (K - 1) > 10) throw PrecondError("grid data needed beyond 10 elements");
      const TruncSeries F = detail::shifted_family_series(Family::grid, K, 1, true);
      const TruncSeries G = detail::shifted_family_series(Family::grid_open, K, -1, true);
      out.lhs = F * G;
      out.rhs = detail::one(K);
      out.lhs_count = detail::at_one(F) * detail::at_one(G);
      out.rhs_count = detail::one(K);
      break;
    }
    case SeriesIdentity::grid_exp: {
      if (2 * (K - 1) > 10) throw PrecondError("grid data needed beyond 10 elements");
      const TruncSeries F = detail::shifted_family_series(Family::grid, K, 1, true);
      TruncSeries S(K);
      for (int n = 1; n <= K; ++n) {
        std::vector<Rational> c;
        for (int i = 0; i < n; ++i) c.emplace_back(binomial(n, static_cast<unsigned long>(i)) * binomial(n - 1, static_cast<unsigned long>(i)));
        const UniPoly sn(c);
        S[n] = Laurent(sn) * Laurent(sn.reversed(n - 1), -(n - 1)) * (Rational(1) / n);
      }
      out.lhs = F;
      out.rhs = exp(S);
      out.lhs_count = detail::at_one(F);
      out.rhs_count = exp(detail::at_one(S));
      break;
    }
    case SeriesIdentity::double_chain_inverse: {
      if (2 * (K - 1) > 10) throw PrecondError("double chain data needed beyond 10 elements");
      const TruncSeries H = detail::shifted_family_series(Family::double_chain, K, 1, true);
      TruncSeries D(K), Dc(K);
      D[0] = Dc[0] = Laurent(1);
      for (int n = 1; n <= K; ++n) {
        D[n] = -Laurent(narayana(NarayanaType::A, 2 * n - 2), -(n - 1));
        Dc[n] = Laurent(-Rational(binomial(4 * n - 2, static_cast<unsigned long>(2 * n - 1))) / (2 * n));
      }
      out.lhs = H * D;
      out.rhs = detail::one(K);
      out.lhs_count = detail::at_one(H) * Dc;
      out.rhs_count = detail::one(K);
      break;
    }
    case SeriesIdentity::k_chain_exp: {
      if (k < 1 || K * k > 8) throw PrecondError("k_chain identity needs order * k <= 8");
      TruncSeries L(K), S(K);
      L[0] = Laurent(1);
      for (int n = 1; n <= K; ++n) {
        L[n] = Laurent(family_data(FamilySpec{Family::k_chain, n, 0, k}).h).square_variable() * Laurent::monomial(1, -n * k);
        S[n] = Laurent(narayana(NarayanaType::B, k * n)).square_variable() * Laurent::monomial(Rational(1) / n, -k * n);
      }
      out.lhs = L;
      out.rhs = exp(S);
      out.lhs_count = detail::at_one(L);
      out.rhs_count = exp(detail::at_one(S));
      break;
    }
    case SeriesIdentity::comb_compositional: {
      if (2 * (K - 1) > 10) throw PrecondError("comb data needed beyond 10 elements");
      const TruncSeries C = detail::shifted_family_series(Family::comb, K, 1, false);
      TruncSeries T(K), Tc(K);
      for (int n = 1; n <= K; ++n) {
        UniPoly geom;
        for (int i = 0; i <= n - 2; ++i) geom += UniPoly::monomial(1, i);
        const Rational sign = n % 2 == 1 ? 1 : -1;
        T[n] = (Laurent(1) + Laurent(UniPoly{1, 1}.pow(static_cast<unsigned>(n)) * geom, -(n - 1))) * sign;
        Tc[n] = Laurent(sign * (1 + pow(Rational(2), n) * (n - 1)));
      }
      out.lhs = C;
      out.rhs = compositional_inverse(T);
      out.lhs_count = detail::at_one(C);
      out.rhs_count = compositional_inverse(Tc);
      break;
    }
  }
  return out;
}

}  // namespace ppl
