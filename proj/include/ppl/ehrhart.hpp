#pragma once

// Ehrhart polynomials of Q_tau (two routes), zeta and q-zeta data of the
// point posets, the nabla matrix, and the double Ehrhart polynomial.

#include <map>
#include <string>
#include <vector>

#include "ppl/algebra.hpp"
#include "ppl/lattice.hpp"

namespace ppl {

namespace detail {

/// Points of P_{tau*} grouped by their sorted coordinate multiset.
inline std::map<std::vector<int>, long> dual_point_multisets(const Preorder& tau) {
  std::map<std::vector<int>, long> groups;
  detail::walk_points(tau.size(), polytope_constraints(tau.dual(), 1, 0), [&](std::vector<int>& x, long last) {
    for (long v = 0; v <= last; ++v) {
      x.back() = static_cast<int>(v);
      std::vector<int> key = x;
      std::sort(key.begin(), key.end());
      ++groups[key];
    }
    x.back() = 0;
  });
  return groups;
}

inline const UniPoly& cached_binom(int a, BinomShift shift) {
  thread_local std::map<std::pair<int, int>, UniPoly> cache;
  const auto key = std::make_pair(a, static_cast<int>(shift));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, binom_poly(a, shift)).first;
  return it->second;
}

}  // namespace detail

/// sum over a in P_{tau*} of prod_e C(t + a_e - 1, a_e).
inline UniPoly ehrhart_dual_formula(const Preorder& tau) {
  UniPoly total;
  for (const auto& [a, count] : detail::dual_point_multisets(tau)) {
    UniPoly term = UniPoly::constant(count);
    for (int v : a)
      if (v > 0) term *= detail::cached_binom(v, BinomShift::rising);
    total += term;
  }
  return total;
}

/// Interpolates #(Q_tau(mr, ms) cap Z^n) at m = 0..n.
inline UniPoly ehrhart_interpolation(const Preorder& tau, long r, long s) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (long m = 0; m <= tau.size(); ++m) pts.emplace_back(Rational(m), Rational(count_points(tau, m * r, m * s)));
  return interpolate(pts);
}

/// Z(P, m+1) = number of m-multichains; nodes t = 1..N+2 with N the top rank.
inline UniPoly zeta_polynomial(const PointPoset& P) {
  const int top = P.max_rank();
  const auto counts = multichain_counts(P, top + 1);
  std::vector<std::pair<Rational, Rational>> pts;
  for (int m = 0; m <= top + 1; ++m) pts.emplace_back(Rational(m + 1), Rational(counts[static_cast<std::size_t>(m)]));
  UniPoly z = interpolate(pts);
  if (z.degree() > top) throw InternalError("zeta interpolant exceeds the rank bound");
  return z;
}

struct QZetaSides {
  Rational lhs;  // Z_q(P, [-1]_q)
  Rational rhs;  // (-1)^n sum over maximal a of q^(-cov(a))
};

inline Rational q_integer(long m, const Rational& q) { return (pow(q, m) - 1) / (q - 1); }

inline QZetaSides qzeta_sides(const PointPoset& P, const Rational& q) {
  if (q <= 0 || q == 1) throw PrecondError("q samples must be positive and different from 1");
  const int n = P.dim();
  const int top = P.max_rank();
  // Nodes m = 2..top+3: one more than the degree bound needs.
  const auto sums = weighted_multichain_sums(P, top + 2, q);
  std::vector<std::pair<Rational, Rational>> pts;
  for (int m = 2; m <= top + 3; ++m) pts.emplace_back(q_integer(m, q), sums[static_cast<std::size_t>(m - 1)]);
  UniPoly z;
  try {
    z = interpolate(pts);
  } catch (const DuplicateNode&) {
    throw NodeCollision("q-integers collide at q = " + to_string(q));
  }
  if (z.degree() > top) throw InternalError("q-zeta interpolant exceeds the rank bound");
  QZetaSides out{z.eval(Rational(-1) / q), 0};
  for (std::size_t i = 0; i < P.size(); ++i)
    if (P.is_maximal(i)) out.rhs += pow(q, -cover_count(P, P.point(i)));
  if (n % 2 == 1) out.rhs = -out.rhs;
  return out;
}

inline std::vector<Rational> default_q_samples() {
  return {Rational(2), Rational(3), Rational(1, 2), Rational(5, 3), Rational(7)};
}

inline bool qzeta_check(const Preorder& tau, const std::vector<Rational>& samples) {
  const PointPoset P(tau, 1, 0);
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i] == samples[j]) throw PrecondError("q samples must be distinct");
  for (const auto& q : samples) {
    const auto sides = qzeta_sides(P, q);
    if (sides.lhs != sides.rhs) return false;
  }
  return true;
}

/// nabla(k, l) = number of k-multichains among lattice points of l Q_tau.
using NablaBlock = std::vector<std::vector<BigInt>>;

inline NablaBlock nabla_block(const Preorder& tau, int K, int L) {
  if (K < 0 || L < 0) throw PrecondError("nabla block bounds must be nonnegative");
  NablaBlock out(static_cast<std::size_t>(K) + 1, std::vector<BigInt>(static_cast<std::size_t>(L) + 1));
  for (int l = 0; l <= L; ++l) {
    const PointPoset P(tau, l, 0);
    const auto counts = multichain_counts(P, K);
    for (int k = 0; k <= K; ++k) out[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = counts[static_cast<std::size_t>(k)];
  }
  return out;
}

inline NablaBlock transpose(const NablaBlock& m) {
  if (m.empty()) return m;
  NablaBlock t(m[0].size(), std::vector<BigInt>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

/// sum over a in P_{tau*} of C(v + n - |a|, n - |a|) prod_e C(u + a_e - 1, a_e); x = u, y = v.
inline BiPoly double_ehrhart(const Preorder& tau) {
  const int n = tau.size();
  BiPoly total;
  for (const auto& [a, count] : detail::dual_point_multisets(tau)) {
    UniPoly pu = UniPoly::constant(count);
    int norm = 0;
    for (int v : a) {
      norm += v;
      if (v > 0) pu *= detail::cached_binom(v, BinomShift::rising);
    }
    total += BiPoly::outer(pu, detail::cached_binom(n - norm, BinomShift::upper));
  }
  return total;
}

/// E(-u, -v) = (-1)^n E(u - 1, v - 1).
inline bool double_reciprocity_check(const BiPoly& E, int n) {
  BiPoly lhs = E.substitute_affine(-1, 0, -1, 0);
  BiPoly rhs = E.substitute_affine(1, -1, 1, -1);
  if (n % 2 == 1) rhs = rhs * Rational(-1);
  return lhs == rhs;
}

inline bool double_reciprocity_check(const Preorder& tau) { return double_reciprocity_check(double_ehrhart(tau), tau.size()); }

inline BigInt normalized_volume(const UniPoly& ehr, int n) {
  const Rational v = ehr.coeff(n) * Rational(factorial(static_cast<unsigned>(n)));
  if (!is_integer(v)) throw InternalError("normalized volume is not an integer");
  return v.get_num();
}

inline BigInt normalized_volume(const Preorder& tau) { return normalized_volume(ehrhart_dual_formula(tau), tau.size()); }

enum class EhrhartRoute { dual_formula, interpolation, box_scan };

inline const char* route_name(EhrhartRoute r) {
  switch (r) {
    case EhrhartRoute::dual_formula: return "dual_formula";
    case EhrhartRoute::interpolation: return "interpolation";
    case EhrhartRoute::box_scan: return "box_scan";
  }
  return "?";
}

struct EhrhartRecord {
  std::string tau_key;
  UniPoly ehr;
  UniPoly hstar;
  BigInt nvol;
  EhrhartRoute route;
};

inline EhrhartRecord ehrhart_record(const Preorder& tau, EhrhartRoute route = EhrhartRoute::dual_formula) {
  EhrhartRecord rec;
  rec.tau_key = canonical_key(tau);
  rec.route = route;
  rec.ehr = route == EhrhartRoute::dual_formula ? ehrhart_dual_formula(tau) : ehrhart_interpolation(tau, 1, 0);
  rec.hstar = hstar_from_ehrhart(rec.ehr, tau.size());
  rec.nvol = normalized_volume(rec.ehr, tau.size());
  return rec;
}

}  // namespace ppl
