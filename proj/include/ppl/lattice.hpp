#pragma once

// Lattice points of Q_tau(r, s) = { x >= 0 : sum_{e in I} x_e <= r|I| + s for all ideals I }.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ppl/preorder.hpp"
#include "ppl/rational.hpp"

namespace ppl {

struct Constraint {
  Mask elements;
  long budget;
};

/// Inequalities needed to cut out Q_tau(r, s). With s = 0 the connected
/// ideals suffice; otherwise every nonempty ideal is kept.
inline std::vector<Constraint> polytope_constraints(const Preorder& tau, long r, long s) {
  if (r < 0 || s < 0) throw PrecondError("dilation parameters must be nonnegative");
  const auto fam = order_ideals(tau);
  std::vector<Constraint> out;
  for (std::size_t i = 0; i < fam.ideals.size(); ++i) {
    const Mask m = fam.ideals[i];
    if (m == 0) continue;
    if (s == 0 && !fam.connected[i]) continue;
    out.push_back({m, r * popcount(m) + s});
  }
  return out;
}

namespace detail {

/// Depth-first walk over coordinates; calls leaf(coords, last_max) for each
/// assignment of coords[0..n-2] with the admissible range of the last coordinate.
template <class Leaf>
void walk_points(int n, const std::vector<Constraint>& cons, Leaf&& leaf) {
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  std::vector<long> used(cons.size(), 0);
  auto cap = [&](int e) {
    long best = -1;
    for (std::size_t c = 0; c < cons.size(); ++c)
      if (cons[c].elements & bit(e)) {
        const long room = cons[c].budget - used[c];
        if (best < 0 || room < best) best = room;
      }
    return best;
  };
  auto rec = [&](auto&& self, int e) -> void {
    const long hi = cap(e);
    if (hi < 0) throw UnboundedError("coordinate " + std::to_string(e + 1) + " is unconstrained");
    if (e == n - 1) {
      leaf(x, hi);
      return;
    }
    for (long v = 0; v <= hi; ++v) {
      x[static_cast<std::size_t>(e)] = static_cast<int>(v);
      self(self, e + 1);
      for (std::size_t c = 0; c < cons.size(); ++c)
        if (cons[c].elements & bit(e)) ++used[c];
    }
    for (std::size_t c = 0; c < cons.size(); ++c)
      if (cons[c].elements & bit(e)) used[c] -= hi + 1;
    x[static_cast<std::size_t>(e)] = 0;
  };
  rec(rec, 0);
}

}  // namespace detail

/// Number of lattice points of Q_tau(r, s) without storing them.
inline BigInt count_points(const Preorder& tau, long r, long s) {
  const auto cons = polytope_constraints(tau, r, s);
  BigInt total = 0;
  unsigned long chunk = 0;
  detail::walk_points(tau.size(), cons, [&](const std::vector<int>&, long last) {
    chunk += static_cast<unsigned long>(last + 1);
    if (chunk > (1UL << 60)) {
      total += chunk;
      chunk = 0;
    }
  });
  total += chunk;
  return total;
}

/// The lattice points of Q_tau(r, s) under the componentwise order.
class PointPoset {
 public:
  PointPoset(const Preorder& tau, long r, long s)
      : n_(tau.size()), r_(r), s_(s), tau_key_(canonical_key(tau)) {
    const auto fam = order_ideals(tau);
    for (Mask m : fam.ideals)
      if (m != 0) ideals_.push_back(m);
    const auto cons = polytope_constraints(tau, r, s);
    detail::walk_points(n_, cons, [&](std::vector<int>& x, long last) {
      for (long v = 0; v <= last; ++v) {
        x.back() = static_cast<int>(v);
        coords_.insert(coords_.end(), x.begin(), x.end());
      }
      x.back() = 0;
    });
    const std::size_t count = size();
    rank_.resize(count);
    lower_.assign(count * static_cast<std::size_t>(n_), -1);
    upper_.assign(count * static_cast<std::size_t>(n_), -1);
    std::vector<int> q(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < count; ++i) {
      auto p = point(i);
      int sum = 0;
      for (int v : p) sum += v;
      rank_[i] = sum;
      std::copy(p.begin(), p.end(), q.begin());
      for (int e = 0; e < n_; ++e) {
        auto& qe = q[static_cast<std::size_t>(e)];
        if (qe > 0) {
          --qe;
          lower_[i * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e)] = find(q);
          ++qe;
        }
        ++qe;
        upper_[i * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e)] = find(q);
        --qe;
      }
    }
  }

  [[nodiscard]] int dim() const { return n_; }
  [[nodiscard]] long r() const { return r_; }
  [[nodiscard]] long s() const { return s_; }
  [[nodiscard]] const std::string& tau_key() const { return tau_key_; }
  [[nodiscard]] std::size_t size() const { return n_ == 0 ? 0 : coords_.size() / static_cast<std::size_t>(n_); }
  [[nodiscard]] std::span<const int> point(std::size_t i) const {
    return {coords_.data() + i * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  [[nodiscard]] int rank(std::size_t i) const { return rank_[i]; }
  [[nodiscard]] int max_rank() const { return rank_.empty() ? 0 : *std::max_element(rank_.begin(), rank_.end()); }
  /// Index of p - e_e, or -1.
  [[nodiscard]] long lower(std::size_t i, int e) const { return lower_[i * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e)]; }
  /// Index of p + e_e, or -1.
  [[nodiscard]] long upper(std::size_t i, int e) const { return upper_[i * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e)]; }
  [[nodiscard]] const std::vector<Mask>& ideals() const { return ideals_; }

  [[nodiscard]] bool is_maximal(std::size_t i) const {
    for (int e = 0; e < n_; ++e)
      if (upper(i, e) >= 0) return false;
    return true;
  }

  /// Index of a point, or -1 when absent.
  [[nodiscard]] long find(std::span<const int> p) const {
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      auto m = point(mid);
      if (std::lexicographical_compare(m.begin(), m.end(), p.begin(), p.end())) lo = mid + 1;
      else hi = mid;
    }
    if (lo < size()) {
      auto m = point(lo);
      if (std::equal(m.begin(), m.end(), p.begin(), p.end())) return static_cast<long>(lo);
    }
    return -1;
  }

 private:
  int n_;
  long r_, s_;
  std::string tau_key_;
  std::vector<Mask> ideals_;
  std::vector<int> coords_;
  std::vector<int> rank_;
  std::vector<long> lower_, upper_;
};

using Point = std::vector<int>;

/// h_i = number of points with exactly i nonzero coordinates.
inline std::vector<std::int64_t> h_vector(const PointPoset& P) {
  if (P.r() != 1 || P.s() != 0) throw PrecondError("h_vector needs the (1, 0) point poset");
  std::vector<std::int64_t> h(static_cast<std::size_t>(P.dim()) + 1, 0);
  for (std::size_t i = 0; i < P.size(); ++i) {
    int nz = 0;
    for (int v : P.point(i)) nz += v != 0;
    ++h[static_cast<std::size_t>(nz)];
  }
  return h;
}

inline std::vector<Point> maximal_elements(const PointPoset& P) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < P.size(); ++i)
    if (P.is_maximal(i)) out.emplace_back(P.point(i).begin(), P.point(i).end());
  return out;
}

/// Points with sum_{e in I} x_e < |I| for every nonempty ideal I.
inline std::vector<Point> upper_boundary_complement(const PointPoset& P) {
  if (P.r() != 1 || P.s() != 0) throw PrecondError("upper_boundary_complement needs the (1, 0) point poset");
  std::vector<Point> out;
  for (std::size_t i = 0; i < P.size(); ++i) {
    auto p = P.point(i);
    bool strict = true;
    for (Mask I : P.ideals()) {
      int sum = 0;
      for (int e = 0; e < P.dim(); ++e)
        if (I & bit(e)) sum += p[static_cast<std::size_t>(e)];
      if (sum >= popcount(I)) {
        strict = false;
        break;
      }
    }
    if (strict) out.emplace_back(p.begin(), p.end());
  }
  return out;
}

/// Number of elements covered by p; the nonzero-coordinate count and the
/// neighbour table must agree.
inline int cover_count(const PointPoset& P, std::span<const int> p) {
  const long idx = P.find(p);
  if (idx < 0) throw PointNotInPoset("point is not in the poset");
  int shortcut = 0, adjacency = 0;
  for (int e = 0; e < P.dim(); ++e) {
    shortcut += p[static_cast<std::size_t>(e)] != 0;
    adjacency += P.lower(static_cast<std::size_t>(idx), e) >= 0;
  }
  if (shortcut != adjacency) throw InternalError("cover count routes disagree");
  return shortcut;
}

/// g(q) = sum_{p <= q} f(p), by prefix sums along each axis. Relies on P being downward closed.
template <class T>
void box_prefix_sum(const PointPoset& P, std::vector<T>& f) {
  for (int e = 0; e < P.dim(); ++e)
    for (std::size_t i = 0; i < P.size(); ++i) {
      const long j = P.lower(i, e);
      if (j >= 0) f[i] += f[static_cast<std::size_t>(j)];
    }
}

/// Number of multichains p_1 <= ... <= p_k in P.
inline BigInt multichain_count(const PointPoset& P, int k) {
  if (k < 0) throw PrecondError("multichain length must be nonnegative");
  if (k == 0) return 1;
  std::vector<BigInt> f(P.size(), BigInt(1));
  for (int j = 1; j < k; ++j) box_prefix_sum(P, f);
  BigInt total = 0;
  for (const auto& v : f) total += v;
  return total;
}

/// counts[k] = number of k-multichains, k = 0..kmax.
inline std::vector<BigInt> multichain_counts(const PointPoset& P, int kmax) {
  std::vector<BigInt> counts{BigInt(1)};
  std::vector<BigInt> f(P.size(), BigInt(1));
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) box_prefix_sum(P, f);
    BigInt total = 0;
    for (const auto& v : f) total += v;
    counts.push_back(total);
  }
  return counts;
}

/// sums[k] = sum over k-multichains of q^(sum of ranks), k = 0..kmax.
inline std::vector<Rational> weighted_multichain_sums(const PointPoset& P, int kmax, const Rational& q) {
  std::vector<Rational> weight(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) weight[i] = pow(q, P.rank(i));
  std::vector<Rational> sums{Rational(1)};
  std::vector<Rational> f = weight;
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) {
      box_prefix_sum(P, f);
      for (std::size_t i = 0; i < P.size(); ++i) f[i] *= weight[i];
    }
    Rational total = 0;
    for (const auto& v : f) total += v;
    sums.push_back(total);
  }
  return sums;
}

/// Sum over k-multichains of q^(sum of ranks).
inline Rational weighted_multichain_sum(const PointPoset& P, int k, const Rational& q) {
  if (k < 0) throw PrecondError("multichain length must be nonnegative");
  if (k == 0) return 1;
  std::vector<Rational> weight(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) weight[i] = pow(q, P.rank(i));
  std::vector<Rational> f = weight;
  for (int j = 1; j < k; ++j) {
    box_prefix_sum(P, f);
    for (std::size_t i = 0; i < P.size(); ++i) f[i] *= weight[i];
  }
  Rational total = 0;
  for (const auto& v : f) total += v;
  return total;
}

/// CSV: x_1..x_n, rank, is_maximal.
inline void write_points_csv(const PointPoset& P, std::ostream& out) {
  for (int e = 0; e < P.dim(); ++e) out << "x_" << e + 1 << ',';
  out << "rank,is_maximal\n";
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (int v : P.point(i)) out << v << ',';
    out << P.rank(i) << ',' << (P.is_maximal(i) ? 1 : 0) << '\n';
  }
}

}  // namespace ppl
