#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "ppl/preorder.hpp"
#include "ppl/rational.hpp"

namespace oracle {

using ppl::Mask;

/// Isomorphism classes of preorders on n labeled points (all reflexive transitive
/// relations, deduplicated under all n! relabelings).
inline int count_preorder_classes(int n) {
  const int pairs = n * (n - 1);
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) idx.emplace_back(i, j);
  std::set<std::vector<int>> classes;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (long code = 0; code < (1L << pairs); ++code) {
    std::vector<std::vector<int>> r(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) r[i][i] = 1;
    for (int b = 0; b < pairs; ++b)
      if (code & (1L << b)) r[idx[b].first][idx[b].second] = 1;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        for (int k = 0; k < n && transitive; ++k)
          if (r[i][j] && r[j][k] && !r[i][k]) transitive = false;
    if (!transitive) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.push_back(r[perm[i]][perm[j]]);
      if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return static_cast<int>(classes.size());
}

/// Isomorphism test by trying every bijection of elements.
inline bool isomorphic(const ppl::Preorder& a, const ppl::Preorder& b) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  auto rel = [](const ppl::Preorder& t, int x, int y) { return t.leq(t.vertex_of(x), t.vertex_of(y)); };
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (rel(a, x, y) != rel(b, perm[x], perm[y])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Ideals as element subsets closed downward, found by scanning all 2^n subsets.
inline std::vector<Mask> brute_ideals(const ppl::Preorder& t) {
  std::vector<Mask> out;
  for (Mask s = 1; s < (Mask{1} << t.size()); ++s) {
    bool ok = true;
    for (int x = 0; x < t.size() && ok; ++x)
      for (int y = 0; y < t.size() && ok; ++y)
        if ((s & ppl::bit(y)) && t.leq(t.vertex_of(x), t.vertex_of(y)) && !(s & ppl::bit(x))) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

/// Lattice points of Q(r, s) by scanning a box and testing every ideal.
inline std::vector<std::vector<int>> brute_points(const ppl::Preorder& t, long r, long s) {
  const int n = t.size();
  const auto ideals = brute_ideals(t);
  const int hi = static_cast<int>(r * n + s);
  std::vector<std::vector<int>> out;
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  for (;;) {
    bool ok = true;
    for (Mask I : ideals) {
      long sum = 0;
      for (int e = 0; e < n; ++e)
        if (I & ppl::bit(e)) sum += x[static_cast<std::size_t>(e)];
      if (sum > r * ppl::popcount(I) + s) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
    int e = n - 1;
    while (e >= 0 && x[static_cast<std::size_t>(e)] == hi) x[static_cast<std::size_t>(e--)] = 0;
    if (e < 0) break;
    ++x[static_cast<std::size_t>(e)];
  }
  return out;
}

inline bool dominated(const std::vector<int>& p, const std::vector<int>& q) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > q[i]) return false;
  return true;
}

/// k-multichains by the pairwise-dominance recurrence.
inline ppl::BigInt pairwise_multichains(const std::vector<std::vector<int>>& pts, int k) {
  if (k == 0) return 1;
  std::vector<ppl::BigInt> f(pts.size(), ppl::BigInt(1));
  for (int j = 1; j < k; ++j) {
    std::vector<ppl::BigInt> g(pts.size(), ppl::BigInt(0));
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = 0; b < pts.size(); ++b)
        if (dominated(pts[b], pts[a])) g[a] += f[b];
    f = std::move(g);
  }
  ppl::BigInt total = 0;
  for (const auto& v : f) total += v;
  return total;
}

/// Weighted version: sum over k-multichains of q^(sum of coordinate sums).
inline ppl::Rational pairwise_weighted(const std::vector<std::vector<int>>& pts, int k, const ppl::Rational& q) {
  auto w = [&](const std::vector<int>& p) {
    int r = 0;
    for (int v : p) r += v;
    return ppl::pow(q, r);
  };
  if (k == 0) return 1;
  std::vector<ppl::Rational> f;
  for (const auto& p : pts) f.push_back(w(p));
  for (int j = 1; j < k; ++j) {
    std::vector<ppl::Rational> g(pts.size(), ppl::Rational(0));
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = 0; b < pts.size(); ++b)
        if (dominated(pts[b], pts[a])) g[a] += f[b];
    for (std::size_t a = 0; a < pts.size(); ++a) g[a] *= w(pts[a]);
    f = std::move(g);
  }
  ppl::Rational total = 0;
  for (const auto& v : f) total += v;
  return total;
}

/// M-triangle from the recursive definition of the Moebius function:
/// mu(p,p) = 1, mu(p,q) = -sum_{p <= r < q} mu(p,r). Returns coefficients keyed (rank p, rank q).
inline std::map<std::pair<int, int>, long> recursive_m_triangle(const std::vector<std::vector<int>>& pts) {
  const std::size_t m = pts.size();
  auto rank = [&](std::size_t i) {
    int r = 0;
    for (int v : pts[i]) r += v;
    return r;
  };
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank(a) < rank(b); });
  std::map<std::pair<int, int>, long> out;
  for (std::size_t p = 0; p < m; ++p) {
    std::vector<long> mu(m, 0);
    for (std::size_t q : order) {
      if (!dominated(pts[p], pts[q])) continue;
      if (q == p) {
        mu[q] = 1;
      } else {
        long acc = 0;
        for (std::size_t r = 0; r < m; ++r)
          if (r != q && dominated(pts[p], pts[r]) && dominated(pts[r], pts[q])) acc += mu[r];
        mu[q] = -acc;
      }
      if (mu[q] != 0) out[{rank(p), rank(q)}] += mu[q];
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Every word in E^n in which each ideal I occurs at least |I| times.
inline std::vector<std::vector<int>> brute_words(const ppl::Preorder& t) {
  const int n = t.size();
  const auto ideals = brute_ideals(t);
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= n;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < n; ++i, c /= n) w[i] = static_cast<int>(c % n);
    bool ok = true;
    for (Mask I : ideals) {
      int hits = 0;
      for (int x : w) hits += (I >> x) & 1;
      if (hits < ppl::popcount(I)) ok = false;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

/// Descent counts of all permutations of the multiset c, by explicit generation.
inline std::vector<long> permutation_descents(const std::vector<int>& c) {
  std::vector<int> w;
  for (std::size_t e = 0; e < c.size(); ++e) w.insert(w.end(), static_cast<std::size_t>(c[e]), static_cast<int>(e));
  std::vector<long> out(w.size() + 1, 0);
  do {
    int d = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
    ++out[static_cast<std::size_t>(d)];
  } while (std::next_permutation(w.begin(), w.end()));
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace oracle
