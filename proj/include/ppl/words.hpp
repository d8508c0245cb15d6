#pragma once

// Word classes of W_tau and the word-based h* formulas.

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "ppl/algebra.hpp"
#include "ppl/lattice.hpp"

namespace ppl {

struct WordClass {
  std::vector<int> content;
  BigInt count;
  UniPoly descent_polynomial;
};

/// Identity ranking of E.
inline std::vector<int> natural_order(int n) {
  std::vector<int> r(static_cast<std::size_t>(n));
  std::iota(r.begin(), r.end(), 0);
  return r;
}

inline BigInt multinomial(std::span<const int> c) {
  BigInt out = 1;
  unsigned long total = 0;
  for (int v : c) {
    for (int i = 1; i <= v; ++i) {
      ++total;
      out *= total;
      out /= static_cast<unsigned long>(i);
    }
  }
  return out;
}

/// Sum over permutations w of the multiset c of t^des(w); letters compared by rank.
inline UniPoly descent_polynomial(std::span<const int> c, const std::vector<int>& rank) {
  const int n = static_cast<int>(c.size());
  std::map<std::pair<std::vector<int>, int>, UniPoly> memo;
  std::vector<int> rest(c.begin(), c.end());
  // f(rest, last): words on rest following the letter last (-1 at the start).
  auto f = [&](auto&& self, int last) -> UniPoly {
    bool empty = true;
    for (int v : rest) empty = empty && v == 0;
    if (empty) return UniPoly::constant(1);
    auto key = std::make_pair(rest, last);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    UniPoly out;
    for (int e = 0; e < n; ++e) {
      auto& re = rest[static_cast<std::size_t>(e)];
      if (re == 0) continue;
      --re;
      UniPoly sub = self(self, e);
      ++re;
      if (last >= 0 && rank[static_cast<std::size_t>(last)] > rank[static_cast<std::size_t>(e)]) sub = sub * UniPoly::monomial(1, 1);
      out += sub;
    }
    memo.emplace(std::move(key), out);
    return out;
  };
  return f(f, -1);
}

inline UniPoly descent_polynomial(std::span<const int> c) { return descent_polynomial(c, natural_order(static_cast<int>(c.size()))); }

namespace detail {

/// Calls visit(a) for every point a of P_{tau*}.
template <class Visit>
void for_each_dual_point(const Preorder& tau, Visit&& visit) {
  detail::walk_points(tau.size(), polytope_constraints(tau.dual(), 1, 0), [&](std::vector<int>& x, long last) {
    for (long v = 0; v <= last; ++v) {
      x.back() = static_cast<int>(v);
      visit(std::as_const(x));
    }
    x.back() = 0;
  });
}

inline int total(std::span<const int> c) { return std::accumulate(c.begin(), c.end(), 0); }

}  // namespace detail

/// One class per content c in P_{tau*} with |c| = n.
inline std::vector<WordClass> words_W(const Preorder& tau, const std::vector<int>& rank) {
  std::vector<WordClass> out;
  detail::for_each_dual_point(tau, [&](const std::vector<int>& c) {
    if (detail::total(c) != tau.size()) return;
    out.push_back({c, multinomial(c), descent_polynomial(c, rank)});
  });
  return out;
}

inline std::vector<WordClass> words_W(const Preorder& tau) { return words_W(tau, natural_order(tau.size())); }

inline BigInt count_words(const Preorder& tau) {
  BigInt total = 0;
  detail::for_each_dual_point(tau, [&](const std::vector<int>& c) {
    if (detail::total(c) == tau.size()) total += multinomial(c);
  });
  return total;
}

/// sum over W_tau of t^(n-1-des(w)).
inline UniPoly hstar_words_descent(const Preorder& tau, const std::vector<int>& rank) {
  UniPoly out;
  const int n = tau.size();
  for (const auto& wc : words_W(tau, rank)) out += wc.descent_polynomial.reversed(n - 1);
  return out;
}

inline UniPoly hstar_words_descent(const Preorder& tau) { return hstar_words_descent(tau, natural_order(tau.size())); }

/// Ranking that puts the smallest element of the minimum vertex first.
inline std::vector<int> asc_star_order(const Preorder& tau) {
  const auto v = tau.minimum_vertex();
  if (!v) throw NoMinimumVertex("preorder " + canonical_key(tau) + " has no minimum vertex");
  const int first = std::countr_zero(tau.vertex_mask(*v));
  std::vector<int> rank(static_cast<std::size_t>(tau.size()));
  int next = 1;
  for (int e = 0; e < tau.size(); ++e) rank[static_cast<std::size_t>(e)] = e == first ? 0 : next++;
  return rank;
}

/// sum over W_tau of t^asc*(w), with w_0 the first letter in the asc* order.
inline UniPoly hstar_asc_star(const Preorder& tau) {
  const auto rank = asc_star_order(tau);
  const int n = tau.size();
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& wc : words_W(tau, rank)) {
    // letters stored as ranks so next_permutation walks every word once
    std::vector<int> word;
    for (int e = 0; e < n; ++e) word.insert(word.end(), static_cast<std::size_t>(wc.content[static_cast<std::size_t>(e)]), rank[static_cast<std::size_t>(e)]);
    std::sort(word.begin(), word.end());
    do {
      int asc = 0, prev = 0;
      for (int w : word) {
        if (prev < w) ++asc;
        prev = w;
      }
      ++coeffs[static_cast<std::size_t>(asc)];
    } while (std::next_permutation(word.begin(), word.end()));
  }
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  return UniPoly(c);
}

/// (1-t)^n + t * sum over nonzero a in P_{tau*} of (1-t)^(n-|a|) D_a(t).
inline UniPoly hstar_filter_formula(const Preorder& tau) {
  const int n = tau.size();
  const UniPoly one_minus_t{1, -1};
  std::map<std::vector<int>, UniPoly> cache;  // D_a only depends on the sorted content
  std::vector<UniPoly> by_size(static_cast<std::size_t>(n) + 1);
  detail::for_each_dual_point(tau, [&](const std::vector<int>& a) {
    const int k = detail::total(a);
    if (k == 0) return;
    std::vector<int> key;
    for (int v : a)
      if (v > 0) key.push_back(v);
    std::sort(key.begin(), key.end());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, descent_polynomial(key)).first;
    by_size[static_cast<std::size_t>(k)] += it->second;
  });
  UniPoly sum;
  for (int k = 1; k <= n; ++k) sum += one_minus_t.pow(static_cast<unsigned>(n - k)) * by_size[static_cast<std::size_t>(k)];
  return one_minus_t.pow(static_cast<unsigned>(n)) + UniPoly::monomial(1, 1) * sum;
}

/// hstar_words_descent agrees under every given ranking of E.
inline bool total_order_independence(const Preorder& tau, const std::vector<std::vector<int>>& orders) {
  if (orders.size() < 2) throw PrecondError("need at least two orders");
  const UniPoly base = hstar_words_descent(tau, orders.front());
  for (std::size_t i = 1; i < orders.size(); ++i)
    if (hstar_words_descent(tau, orders[i]) != base) return false;
  return true;
}

}  // namespace ppl
