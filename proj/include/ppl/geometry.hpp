#pragma once

// Small exact polytope toolkit: H-to-V conversion, f-vectors, and the
// reflexive polytope R_tau with its polar R_tau^vee.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ppl/algebra.hpp"
#include "ppl/ehrhart.hpp"
#include "ppl/lattice.hpp"

namespace ppl {

/// { x : a_i . x <= b_i }
struct HPolytope {
  int dim = 0;
  std::vector<std::vector<std::int64_t>> a;
  std::vector<std::int64_t> b;

  void add(std::vector<std::int64_t> row, std::int64_t rhs) {
    if (static_cast<int>(row.size()) != dim) throw PrecondError("inequality has the wrong dimension");
    a.push_back(std::move(row));
    b.push_back(rhs);
  }
  [[nodiscard]] std::size_t rows() const { return a.size(); }
};

struct VPolytope {
  std::vector<std::vector<Rational>> vertices;
};

namespace detail {

using IMatrix = std::vector<std::vector<std::int64_t>>;

/// Fraction-free determinant (Bareiss).
inline std::int64_t determinant(IMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 v = static_cast<__int128>(m[i][j]) * m[k][k] - static_cast<__int128>(m[i][k]) * m[k][j];
        m[i][j] = static_cast<std::int64_t>(v / prev);
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Rank of a set of rational vectors.
inline int rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(r)]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[static_cast<std::size_t>(r)][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[static_cast<std::size_t>(r)][j];
    }
    ++r;
  }
  return r;
}

/// Dimension of the affine hull of a point set (-1 when empty).
inline int affine_dimension(const std::vector<std::vector<Rational>>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<Rational>> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return rank(std::move(diffs));
}

/// Calls f(subset) for every k-subset of {0..m-1}.
template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void check_bounded(const HPolytope& H) {
  const std::size_t n = static_cast<std::size_t>(H.dim);
  std::vector<std::vector<Rational>> all;
  for (const auto& row : H.a) all.emplace_back(row.begin(), row.end());
  if (rank(all) < H.dim) throw UnboundedError("inequality normals do not span the space");
  // A pointed recession cone is generated by rays tight at n-1 independent rows.
  for_each_subset(H.rows(), n - 1, [&](const std::vector<std::size_t>& s) {
    std::vector<std::int64_t> d(n);
    bool nonzero = false;
    for (std::size_t col = 0; col < n; ++col) {
      IMatrix minor;
      for (std::size_t r : s) {
        std::vector<std::int64_t> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != col) row.push_back(H.a[r][c]);
        minor.push_back(std::move(row));
      }
      d[col] = determinant(std::move(minor)) * (col % 2 == 0 ? 1 : -1);
      nonzero = nonzero || d[col] != 0;
    }
    if (!nonzero) return;
    for (int sgn : {1, -1}) {
      bool ray = true;
      for (const auto& row : H.a) {
        __int128 dot = 0;
        for (std::size_t c = 0; c < n; ++c) dot += static_cast<__int128>(row[c]) * d[c] * sgn;
        if (dot > 0) {
          ray = false;
          break;
        }
      }
      if (ray) throw UnboundedError("polytope has a recession direction");
    }
  });
}

}  // namespace detail

/// Exact vertices: solve every nonsingular n-subset of inequalities, keep the feasible solutions.
inline VPolytope vertex_enumeration(const HPolytope& H) {
  const std::size_t n = static_cast<std::size_t>(H.dim);
  if (n == 0) throw PrecondError("vertex enumeration needs dimension >= 1");
  detail::check_bounded(H);
  std::set<std::vector<Rational>> found;
  detail::for_each_subset(H.rows(), n, [&](const std::vector<std::size_t>& s) {
    detail::IMatrix A;
    for (std::size_t r : s) A.push_back(H.a[r]);
    std::int64_t det = detail::determinant(A);
    if (det == 0) return;
    // Cramer: x_c = det_c / det.
    std::vector<std::int64_t> num(n);
    for (std::size_t c = 0; c < n; ++c) {
      detail::IMatrix Ac = A;
      for (std::size_t i = 0; i < n; ++i) Ac[i][c] = H.b[s[i]];
      num[c] = detail::determinant(std::move(Ac));
    }
    if (det < 0) {
      det = -det;
      for (auto& v : num) v = -v;
    }
    for (std::size_t r = 0; r < H.rows(); ++r) {
      __int128 dot = 0;
      for (std::size_t c = 0; c < n; ++c) dot += static_cast<__int128>(H.a[r][c]) * num[c];
      if (dot > static_cast<__int128>(H.b[r]) * det) return;
    }
    std::vector<Rational> x(n);
    for (std::size_t c = 0; c < n; ++c) {
      x[c] = Rational(num[c], det);
      x[c].canonicalize();
    }
    found.insert(std::move(x));
  });
  VPolytope V{{found.begin(), found.end()}};
  // Re-verify every vertex in exact rational arithmetic.
  for (const auto& v : V.vertices)
    for (std::size_t r = 0; r < H.rows(); ++r) {
      Rational dot = 0;
      for (std::size_t c = 0; c < n; ++c) dot += Rational(H.a[r][c]) * v[c];
      if (dot > H.b[r]) throw InternalError("vertex violates an inequality");
    }
  return V;
}

/// (f_-1, f_0, ..., f_n).
inline std::vector<std::int64_t> f_vector(const HPolytope& H) {
  const int n = H.dim;
  const VPolytope V = vertex_enumeration(H);
  const std::size_t nv = V.vertices.size();
  using VSet = std::vector<bool>;
  auto points_of = [&](const VSet& s) {
    std::vector<std::vector<Rational>> pts;
    for (std::size_t i = 0; i < nv; ++i)
      if (s[i]) pts.push_back(V.vertices[i]);
    return pts;
  };
  std::set<VSet> facets;
  for (std::size_t r = 0; r < H.rows(); ++r) {
    VSet tight(nv, false);
    for (std::size_t i = 0; i < nv; ++i) {
      Rational dot = 0;
      for (int c = 0; c < n; ++c) dot += Rational(H.a[r][static_cast<std::size_t>(c)]) * V.vertices[i][static_cast<std::size_t>(c)];
      tight[i] = dot == H.b[r];
    }
    if (detail::affine_dimension(points_of(tight)) == n - 1) facets.insert(tight);
  }
  std::set<VSet> faces;
  std::vector<VSet> queue{VSet(nv, true)};
  faces.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& f : facets) {
      VSet meet(nv);
      for (std::size_t i = 0; i < nv; ++i) meet[i] = queue[head][i] && f[i];
      if (faces.insert(meet).second) queue.push_back(meet);
    }
  }
  std::vector<std::int64_t> fv(static_cast<std::size_t>(n) + 2, 0);
  for (const auto& face : faces) {
    const int d = detail::affine_dimension(points_of(face));
    ++fv[static_cast<std::size_t>(d + 1)];
  }
  std::int64_t euler = 0;
  for (std::size_t i = 0; i < fv.size(); ++i) euler += (i % 2 == 0 ? 1 : -1) * fv[i];
  if (euler != 0) throw InternalError("f-vector violates Euler's relation");
  return fv;
}

/// Q_tau(r, s) as an H-polytope: x >= 0 plus every nonempty ideal.
inline HPolytope preorder_polytope(const Preorder& tau, long r, long s) {
  HPolytope H;
  H.dim = tau.size();
  for (int e = 0; e < H.dim; ++e) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(H.dim), 0);
    row[static_cast<std::size_t>(e)] = -1;
    H.add(row, 0);
  }
  for (const auto& c : polytope_constraints(tau, r, s)) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(H.dim), 0);
    for (int e = 0; e < H.dim; ++e)
      if (c.elements & bit(e)) row[static_cast<std::size_t>(e)] = 1;
    H.add(row, c.budget);
  }
  return H;
}

struct ReflexivePair {
  HPolytope R;      // x_e >= -1 and sum_I x_e <= 1 for nonempty ideals I
  VPolytope Rvee;   // conv(-e_e, 1_I)
};

inline ReflexivePair reflexive_pair(const Preorder& tau) {
  const int n = tau.size();
  ReflexivePair out;
  out.R.dim = n;
  for (int e = 0; e < n; ++e) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(n), 0);
    row[static_cast<std::size_t>(e)] = -1;
    out.R.add(row, 1);
    std::vector<Rational> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(e)] = -1;
    out.Rvee.vertices.push_back(std::move(v));
  }
  for (Mask I : order_ideals(tau).ideals) {
    if (I == 0) continue;
    std::vector<std::int64_t> row(static_cast<std::size_t>(n), 0);
    std::vector<Rational> v(static_cast<std::size_t>(n), 0);
    for (int e = 0; e < n; ++e)
      if (I & bit(e)) {
        row[static_cast<std::size_t>(e)] = 1;
        v[static_cast<std::size_t>(e)] = 1;
      }
    out.R.add(row, 1);
    out.Rvee.vertices.push_back(std::move(v));
  }
  // 0 must be the only interior lattice point of R: strict inequalities force x = 0.
  const PointPoset shifted(tau, 1, 1);
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    auto y = shifted.point(i);
    bool interior = true;
    for (std::size_t r = 0; r < out.R.rows() && interior; ++r) {
      std::int64_t dot = 0;
      for (int e = 0; e < n; ++e) dot += out.R.a[r][static_cast<std::size_t>(e)] * (y[static_cast<std::size_t>(e)] - 1);
      interior = dot < out.R.b[r];
    }
    bool zero = std::all_of(y.begin(), y.end(), [](int v) { return v == 1; });
    if (interior != zero) throw InternalError("R does not have 0 as its unique interior lattice point");
  }
  return out;
}

/// Lattice points of m R^vee for m = 0..mmax, via max_w <x, w> <= m over the vertices w of R.
inline std::vector<BigInt> rvee_point_counts(const ReflexivePair& pair, int mmax) {
  const int n = pair.R.dim;
  const VPolytope W = vertex_enumeration(pair.R);
  // Integer form of each vertex: <x, num> <= m * den.
  std::vector<std::vector<std::int64_t>> num;
  std::vector<std::int64_t> den;
  for (const auto& w : W.vertices) {
    BigInt l = 1;
    for (const auto& c : w) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<std::int64_t> row;
    for (const auto& c : w) row.push_back(to_int64(BigInt(c * Rational(l))));
    num.push_back(std::move(row));
    den.push_back(to_int64(l));
  }
  std::vector<BigInt> counts;
  for (int m = 0; m <= mmax; ++m) {
    std::vector<int> x(static_cast<std::size_t>(n), -m);
    std::vector<std::int64_t> dot(num.size(), 0);
    for (std::size_t w = 0; w < num.size(); ++w)
      for (int e = 0; e < n; ++e) dot[w] += num[w][static_cast<std::size_t>(e)] * -m;
    long count = 0;
    for (;;) {
      bool inside = true;
      for (std::size_t w = 0; w < num.size() && inside; ++w) inside = dot[w] <= m * den[w];
      count += inside;
      int e = n - 1;
      while (e >= 0 && x[static_cast<std::size_t>(e)] == m) {
        for (std::size_t w = 0; w < num.size(); ++w) dot[w] -= num[w][static_cast<std::size_t>(e)] * 2 * m;
        x[static_cast<std::size_t>(e--)] = -m;
      }
      if (e < 0) break;
      ++x[static_cast<std::size_t>(e)];
      for (std::size_t w = 0; w < num.size(); ++w) dot[w] += num[w][static_cast<std::size_t>(e)];
    }
    counts.emplace_back(count);
  }
  return counts;
}

inline EhrhartRecord ehrhart_Rvee(const Preorder& tau) {
  const int n = tau.size();
  const auto counts = rvee_point_counts(reflexive_pair(tau), n);
  std::vector<std::pair<Rational, Rational>> pts;
  for (int m = 0; m <= n; ++m) pts.emplace_back(Rational(m), Rational(counts[static_cast<std::size_t>(m)]));
  EhrhartRecord rec;
  rec.tau_key = canonical_key(tau);
  rec.route = EhrhartRoute::box_scan;
  rec.ehr = interpolate(pts);
  rec.hstar = hstar_from_ehrhart(rec.ehr, n);
  rec.nvol = normalized_volume(rec.ehr, n);
  if (rec.hstar.degree() != n || !is_palindromic(rec.hstar, n)) throw NotPalindromic("h* of R^vee is not palindromic");
  return rec;
}

struct ReflexiveChecks {
  bool rtau_a;
  std::optional<bool> rtau_b;  // nullopt when tau is not an ordinal sum
};

/// rtau_a: h*(R_tau^vee) = h*(R_tau*^vee); rtau_b: h* is multiplicative over every ordinal-sum split.
inline ReflexiveChecks reflexive_conjecture_checks(const Preorder& tau) {
  const UniPoly h = ehrhart_Rvee(tau).hstar;
  ReflexiveChecks out{h == ehrhart_Rvee(tau.dual()).hstar, std::nullopt};
  for (const auto& [lo, hi] : ordinal_sum_splits(tau)) {
    const bool ok = h == ehrhart_Rvee(lo).hstar * ehrhart_Rvee(hi).hstar;
    out.rtau_b = out.rtau_b.value_or(true) && ok;
  }
  return out;
}

}  // namespace ppl
