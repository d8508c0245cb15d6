#pragma once

// Finite preorders: a partition of {0..n-1} into vertices plus a partial
// order on the vertices. Labels are 0-based here; reports print them 1-based.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ppl/errors.hpp"

namespace ppl {

using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 30;
inline constexpr int kMaxEnumerationSize = 7;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }

struct IdealFamily {
  std::vector<Mask> ideals;      // element masks, sorted
  std::vector<bool> connected;   // parallel to ideals; the empty ideal is not connected
};

class Preorder {
 public:
  Preorder() = default;

  /// vertex_sets: element lists (0-based); pairs (u, v) mean vertex u precedes vertex v.
  static Preorder build(const std::vector<std::vector<int>>& vertex_sets,
                        const std::vector<std::pair<int, int>>& pairs) {
    int n = 0;
    for (const auto& vs : vertex_sets) n += static_cast<int>(vs.size());
    if (n == 0) throw OverlapError("preorder has no elements");
    if (n > kMaxGroundSize) throw SizeLimit("ground set larger than " + std::to_string(kMaxGroundSize));
    const int k = static_cast<int>(vertex_sets.size());
    std::vector<Mask> masks(static_cast<std::size_t>(k), 0);
    Mask seen = 0;
    for (int v = 0; v < k; ++v) {
      if (vertex_sets[static_cast<std::size_t>(v)].empty()) throw OverlapError("empty vertex");
      for (int e : vertex_sets[static_cast<std::size_t>(v)]) {
        if (e < 0 || e >= n) throw OverlapError("element " + std::to_string(e) + " out of range");
        if (seen & bit(e)) throw OverlapError("element " + std::to_string(e) + " in two vertices");
        seen |= bit(e);
        masks[static_cast<std::size_t>(v)] |= bit(e);
      }
    }
    // Sort vertices by smallest element; remember where each input vertex went.
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::countr_zero(masks[static_cast<std::size_t>(a)]) < std::countr_zero(masks[static_cast<std::size_t>(b)]);
    });
    std::vector<int> where(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) where[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    Preorder p;
    p.n_ = n;
    for (int i = 0; i < k; ++i) p.vertices_.push_back(masks[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
    p.up_.assign(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < k; ++v) p.up_[static_cast<std::size_t>(v)] = bit(v);
    for (auto [a, b] : pairs) {
      if (a < 0 || a >= k || b < 0 || b >= k) throw InputError("relation refers to unknown vertex");
      if (a == b) continue;
      p.up_[static_cast<std::size_t>(where[static_cast<std::size_t>(a)])] |= bit(where[static_cast<std::size_t>(b)]);
    }
    p.close_and_finish();
    return p;
  }

  /// Build from normalized vertex masks and an up-set matrix (already in vertex order).
  static Preorder from_masks(int n, std::vector<Mask> vertices, std::vector<Mask> up) {
    Preorder p;
    p.n_ = n;
    p.vertices_ = std::move(vertices);
    p.up_ = std::move(up);
    p.close_and_finish();
    return p;
  }

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] int num_vertices() const { return static_cast<int>(vertices_.size()); }
  [[nodiscard]] Mask full_mask() const { return n_ >= 32 ? ~Mask{0} : (bit(n_) - 1); }
  [[nodiscard]] const std::vector<Mask>& vertices() const { return vertices_; }
  [[nodiscard]] Mask vertex_mask(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] int vertex_size(int v) const { return popcount(vertex_mask(v)); }
  [[nodiscard]] int vertex_of(int element) const { return element_vertex_[static_cast<std::size_t>(element)]; }

  /// Vertices w with v <= w (vertex bitmask, includes v).
  [[nodiscard]] Mask up(int v) const { return up_[static_cast<std::size_t>(v)]; }
  /// Vertices w with w <= v.
  [[nodiscard]] Mask down(int v) const { return down_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] bool leq(int u, int v) const { return (up(u) & bit(v)) != 0; }
  [[nodiscard]] const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  /// Element mask of a union of vertices given as a vertex bitmask.
  [[nodiscard]] Mask elements_of(Mask vertex_set) const {
    Mask out = 0;
    for (Mask m = vertex_set; m; m &= m - 1) out |= vertices_[static_cast<std::size_t>(std::countr_zero(m))];
    return out;
  }

  /// Element mask of down(e): everything weakly below element e.
  [[nodiscard]] Mask down_elements(int element) const { return elements_of(down(vertex_of(element))); }
  [[nodiscard]] Mask up_elements(int element) const { return elements_of(up(vertex_of(element))); }

  [[nodiscard]] Preorder dual() const {
    Preorder p = *this;
    std::swap(p.up_, p.down_);
    for (auto& [a, b] : p.covers_) std::swap(a, b);
    std::sort(p.covers_.begin(), p.covers_.end());
    return p;
  }

  [[nodiscard]] std::optional<int> minimum_vertex() const {
    for (int v = 0; v < num_vertices(); ++v)
      if (popcount(up(v)) == num_vertices()) return v;
    return std::nullopt;
  }

  /// Relabel elements: element e becomes perm[e].
  [[nodiscard]] Preorder relabeled(const std::vector<int>& perm) const {
    std::vector<std::vector<int>> sets;
    for (Mask vm : vertices_) {
      std::vector<int> s;
      for (Mask m = vm; m; m &= m - 1) s.push_back(perm[static_cast<std::size_t>(std::countr_zero(m))]);
      sets.push_back(std::move(s));
    }
    return build(sets, relation_pairs());
  }

  /// Sub-preorder on a set of vertices; elements relabeled consecutively in their old order.
  [[nodiscard]] Preorder restricted(Mask vertex_set) const {
    const Mask elems = elements_of(vertex_set);
    std::vector<int> newlabel(static_cast<std::size_t>(n_), -1);
    int next = 0;
    for (int e = 0; e < n_; ++e)
      if (elems & bit(e)) newlabel[static_cast<std::size_t>(e)] = next++;
    std::vector<int> vids;
    for (Mask m = vertex_set; m; m &= m - 1) vids.push_back(std::countr_zero(m));
    std::vector<std::vector<int>> sets;
    for (int v : vids) {
      std::vector<int> s;
      for (Mask m = vertex_mask(v); m; m &= m - 1) s.push_back(newlabel[static_cast<std::size_t>(std::countr_zero(m))]);
      sets.push_back(std::move(s));
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < vids.size(); ++i)
      for (std::size_t j = 0; j < vids.size(); ++j)
        if (i != j && leq(vids[i], vids[j])) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return build(sets, pairs);
  }

  /// All strict relation pairs (u, v), u < v in the order.
  [[nodiscard]] std::vector<std::pair<int, int>> relation_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < num_vertices(); ++u)
      for (int v = 0; v < num_vertices(); ++v)
        if (u != v && leq(u, v)) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Preorder& a, const Preorder& b) {
    return a.n_ == b.n_ && a.vertices_ == b.vertices_ && a.up_ == b.up_;
  }

 private:
  void close_and_finish() {
    const int k = num_vertices();
    for (int w = 0; w < k; ++w)
      for (int u = 0; u < k; ++u)
        if (up_[static_cast<std::size_t>(u)] & bit(w)) up_[static_cast<std::size_t>(u)] |= up_[static_cast<std::size_t>(w)];
    down_.assign(static_cast<std::size_t>(k), 0);
    for (int u = 0; u < k; ++u)
      for (int v = 0; v < k; ++v)
        if (up_[static_cast<std::size_t>(u)] & bit(v)) down_[static_cast<std::size_t>(v)] |= bit(u);
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v)
        if (leq(u, v) && leq(v, u))
          throw CycleError("vertices " + std::to_string(u + 1) + " and " + std::to_string(v + 1) + " are mutually related");
    covers_.clear();
    for (int u = 0; u < k; ++u)
      for (int v = 0; v < k; ++v)
        if (u != v && leq(u, v) && (up(u) & down(v)) == (bit(u) | bit(v))) covers_.emplace_back(u, v);
    element_vertex_.assign(static_cast<std::size_t>(n_), -1);
    for (int v = 0; v < k; ++v)
      for (Mask m = vertices_[static_cast<std::size_t>(v)]; m; m &= m - 1)
        element_vertex_[static_cast<std::size_t>(std::countr_zero(m))] = v;
  }

  int n_ = 0;
  std::vector<Mask> vertices_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<int> element_vertex_;
};

// ---------------------------------------------------------------------------
// Constructors for common shapes.

enum class CombineKind { disjoint_union, ordinal_sum };

inline Preorder combine(CombineKind kind, const Preorder& a, const Preorder& b) {
  std::vector<std::vector<int>> sets;
  for (Mask vm : a.vertices()) {
    std::vector<int> s;
    for (Mask m = vm; m; m &= m - 1) s.push_back(std::countr_zero(m));
    sets.push_back(std::move(s));
  }
  for (Mask vm : b.vertices()) {
    std::vector<int> s;
    for (Mask m = vm; m; m &= m - 1) s.push_back(std::countr_zero(m) + a.size());
    sets.push_back(std::move(s));
  }
  const int ka = a.num_vertices();
  std::vector<std::pair<int, int>> pairs = a.relation_pairs();
  for (auto [u, v] : b.relation_pairs()) pairs.emplace_back(u + ka, v + ka);
  if (kind == CombineKind::ordinal_sum)
    for (int u = 0; u < ka; ++u)
      for (int v = 0; v < b.num_vertices(); ++v) pairs.emplace_back(u, v + ka);
  return Preorder::build(sets, pairs);
}

/// Vertices of the given sizes, no relations.
inline Preorder antichain_of(const std::vector<int>& sizes) {
  std::vector<std::vector<int>> sets;
  int next = 0;
  for (int s : sizes) {
    std::vector<int> v;
    for (int i = 0; i < s; ++i) v.push_back(next++);
    sets.push_back(std::move(v));
  }
  return Preorder::build(sets, {});
}

inline Preorder antichain(int n) { return antichain_of(std::vector<int>(static_cast<std::size_t>(n), 1)); }

/// Chain of vertices with the given sizes, bottom first.
inline Preorder chain_of(const std::vector<int>& sizes) {
  std::vector<std::vector<int>> sets;
  std::vector<std::pair<int, int>> pairs;
  int next = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::vector<int> v;
    for (int j = 0; j < sizes[i]; ++j) v.push_back(next++);
    sets.push_back(std::move(v));
    if (i > 0) pairs.emplace_back(static_cast<int>(i) - 1, static_cast<int>(i));
  }
  return Preorder::build(sets, pairs);
}

inline Preorder chain(int n) { return chain_of(std::vector<int>(static_cast<std::size_t>(n), 1)); }

// ---------------------------------------------------------------------------
// Ideals.

inline IdealFamily order_ideals(const Preorder& tau) {
  const int k = tau.num_vertices();
  std::vector<std::pair<Mask, bool>> found;
  for (Mask s = 0; s < (Mask{1} << k); ++s) {
    bool ideal = true;
    for (Mask m = s; m && ideal; m &= m - 1)
      if ((tau.down(std::countr_zero(m)) & ~s) != 0) ideal = false;
    if (!ideal) continue;
    bool connected = false;
    if (s != 0) {
      // Flood fill along covers inside s.
      Mask reached = bit(std::countr_zero(s));
      for (bool grew = true; grew;) {
        grew = false;
        for (auto [u, v] : tau.covers())
          if ((s & bit(u)) && (s & bit(v)) && ((reached & bit(u)) != 0) != ((reached & bit(v)) != 0)) {
            reached |= bit(u) | bit(v);
            grew = true;
          }
      }
      connected = reached == s;
    }
    found.emplace_back(tau.elements_of(s), connected);
  }
  std::sort(found.begin(), found.end());
  IdealFamily fam;
  for (auto& [m, c] : found) {
    fam.ideals.push_back(m);
    fam.connected.push_back(c);
  }
  return fam;
}

/// Proper nonempty ideals I (element masks) with every vertex of I below every vertex outside I.
inline std::vector<Mask> ordinal_sum_cuts(const Preorder& tau) {
  std::vector<Mask> cuts;
  const Mask all = (Mask{1} << tau.num_vertices()) - 1;
  for (Mask s = 1; s < all; ++s) {
    bool ok = true;
    for (Mask m = s; m && ok; m &= m - 1)
      if ((tau.up(std::countr_zero(m)) | s) != all) ok = false;
    if (ok) cuts.push_back(s);
  }
  return cuts;
}

/// All ways to write tau as an ordinal sum (lower, upper).
inline std::vector<std::pair<Preorder, Preorder>> ordinal_sum_splits(const Preorder& tau) {
  std::vector<std::pair<Preorder, Preorder>> out;
  const Mask all = (Mask{1} << tau.num_vertices()) - 1;
  for (Mask s : ordinal_sum_cuts(tau)) out.emplace_back(tau.restricted(s), tau.restricted(all & ~s));
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism.

namespace detail {

/// Stable vertex colours: (size, |down|, |up|, covers) refined by neighbour colours.
inline std::vector<int> vertex_colours(const Preorder& tau) {
  const int k = tau.num_vertices();
  std::vector<int> lower_covers(static_cast<std::size_t>(k), 0), upper_covers(static_cast<std::size_t>(k), 0);
  for (auto [u, v] : tau.covers()) {
    ++upper_covers[static_cast<std::size_t>(u)];
    ++lower_covers[static_cast<std::size_t>(v)];
  }
  using Sig = std::vector<int>;
  std::vector<Sig> sig(static_cast<std::size_t>(k));
  for (int v = 0; v < k; ++v)
    sig[static_cast<std::size_t>(v)] = {tau.vertex_size(v), popcount(tau.down(v)), popcount(tau.up(v)),
                                        lower_covers[static_cast<std::size_t>(v)], upper_covers[static_cast<std::size_t>(v)]};
  std::vector<int> colour(static_cast<std::size_t>(k));
  int classes = 0;
  for (;;) {
    std::vector<Sig> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < k; ++v)
      colour[static_cast<std::size_t>(v)] =
          static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) - sorted.begin());
    if (static_cast<int>(sorted.size()) == classes) break;
    classes = static_cast<int>(sorted.size());
    for (int v = 0; v < k; ++v) {
      Sig below, above;
      for (int w = 0; w < k; ++w) {
        if (w == v) continue;
        if (tau.leq(w, v)) below.push_back(colour[static_cast<std::size_t>(w)]);
        if (tau.leq(v, w)) above.push_back(colour[static_cast<std::size_t>(w)]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      Sig s{colour[static_cast<std::size_t>(v)], -1};
      s.insert(s.end(), below.begin(), below.end());
      s.push_back(-2);
      s.insert(s.end(), above.begin(), above.end());
      sig[static_cast<std::size_t>(v)] = std::move(s);
    }
  }
  return colour;
}

struct CanonSearch {
  const Preorder& tau;
  std::vector<int> colour;
  std::vector<int> slot_colour;  // required colour at each position
  std::vector<int> perm;         // perm[pos] = vertex
  std::vector<int> current;      // serialization so far
  std::vector<int> best;
  std::vector<int> best_perm;
  bool have_best = false;

  void segment(int pos, int v, std::vector<int>& out) const {
    out.push_back(tau.vertex_size(v));
    for (int j = 0; j < pos; ++j) {
      const int w = perm[static_cast<std::size_t>(j)];
      out.push_back((tau.leq(w, v) ? 1 : 0) + (tau.leq(v, w) ? 2 : 0));
    }
  }

  bool twins(int a, int b) const {
    const Mask strip = bit(a) | bit(b);
    return tau.vertex_size(a) == tau.vertex_size(b) && (tau.up(a) & ~strip) == (tau.up(b) & ~strip) &&
           (tau.down(a) & ~strip) == (tau.down(b) & ~strip);
  }

  void run(int pos, Mask used) {
    const int k = tau.num_vertices();
    if (pos == k) {
      if (!have_best || current < best) {
        best = current;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < k; ++v) {
      if ((used & bit(v)) || colour[static_cast<std::size_t>(v)] != slot_colour[static_cast<std::size_t>(pos)]) continue;
      bool redundant = false;
      for (int t : tried)
        if (twins(t, v)) redundant = true;
      if (redundant) continue;
      tried.push_back(v);
      perm[static_cast<std::size_t>(pos)] = v;
      const std::size_t mark = current.size();
      segment(pos, v, current);
      // Prune when this prefix is already worse than the best full serialization.
      bool worse = false;
      if (have_best) {
        const auto len = current.size();
        worse = std::lexicographical_compare(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(len), current.begin(),
                                             current.end());
      }
      if (!worse) run(pos + 1, used | bit(v));
      current.resize(mark);
    }
  }
};

/// Canonical vertex order: perm[pos] = vertex of tau placed at pos.
inline std::pair<std::vector<int>, std::vector<int>> canonical_order(const Preorder& tau) {
  CanonSearch search{tau, vertex_colours(tau), {}, {}, {}, {}, {}, false};
  const int k = tau.num_vertices();
  search.slot_colour = search.colour;
  std::sort(search.slot_colour.begin(), search.slot_colour.end());
  search.perm.assign(static_cast<std::size_t>(k), -1);
  search.run(0, 0);
  return {search.best_perm, search.best};
}

}  // namespace detail

/// Equal for two preorders exactly when they are isomorphic.
inline std::string canonical_key(const Preorder& tau) {
  const auto [perm, ser] = detail::canonical_order(tau);
  const int k = tau.num_vertices();
  std::string sizes, rel;
  std::size_t idx = 0;
  for (int pos = 0; pos < k; ++pos) {
    if (pos) sizes += ',';
    sizes += std::to_string(ser[idx++]);
    for (int j = 0; j < pos; ++j) rel += static_cast<char>('0' + ser[idx++]);
  }
  return sizes + "/" + rel;
}

/// Isomorphic copy with vertices in canonical order and consecutive element labels.
inline Preorder canonical_form(const Preorder& tau) {
  const auto perm = detail::canonical_order(tau).first;
  std::vector<std::vector<int>> sets;
  int next = 0;
  for (int v : perm) {
    std::vector<int> s;
    for (int i = 0; i < tau.vertex_size(v); ++i) s.push_back(next++);
    sets.push_back(std::move(s));
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = 0; j < perm.size(); ++j)
      if (i != j && tau.leq(perm[i], perm[j])) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Preorder::build(sets, pairs);
}

// ---------------------------------------------------------------------------
// Enumeration up to isomorphism.

/// Posets on k points (singleton vertices), one per isomorphism class.
inline std::vector<Preorder> enumerate_posets(int k) {
  if (k < 1) throw PrecondError("enumerate_posets needs k >= 1");
  if (k > kMaxEnumerationSize) throw SizeLimit("poset enumeration limited to " + std::to_string(kMaxEnumerationSize));
  std::vector<Preorder> level{antichain(1)};
  for (int size = 2; size <= k; ++size) {
    std::map<std::string, Preorder> next;
    for (const Preorder& p : level) {
      // The new vertex sits above the ideal generated by some antichain: loop over all ideals.
      const int m = p.num_vertices();
      for (Mask s = 0; s < (Mask{1} << m); ++s) {
        bool ideal = true;
        for (Mask t = s; t && ideal; t &= t - 1)
          if ((p.down(std::countr_zero(t)) & ~s) != 0) ideal = false;
        if (!ideal) continue;
        std::vector<Mask> up(static_cast<std::size_t>(m) + 1);
        std::vector<Mask> verts(static_cast<std::size_t>(m) + 1);
        for (int v = 0; v < m; ++v) {
          up[static_cast<std::size_t>(v)] = p.up(v) | ((s & bit(v)) ? bit(m) : 0);
          verts[static_cast<std::size_t>(v)] = bit(v);
        }
        up[static_cast<std::size_t>(m)] = bit(m);
        verts[static_cast<std::size_t>(m)] = bit(m);
        Preorder q = Preorder::from_masks(m + 1, verts, up);
        next.emplace(canonical_key(q), std::move(q));
      }
    }
    level.clear();
    for (auto& [key, q] : next) level.push_back(std::move(q));
  }
  return level;
}

/// Preorders on n elements, one canonical representative per isomorphism class, sorted by key.
inline std::vector<Preorder> enumerate_preorders(int n, int max_size = kMaxEnumerationSize) {
  if (n < 1) throw PrecondError("enumerate_preorders needs n >= 1");
  if (n > max_size || n > kMaxEnumerationSize)
    throw SizeLimit("preorder enumeration limited to size " + std::to_string(std::min(max_size, kMaxEnumerationSize)));
  std::map<std::string, Preorder> found;
  for (int k = 1; k <= n; ++k) {
    const auto posets = enumerate_posets(k);
    // Compositions of n into k parts: choose k-1 cut points among the n-1 gaps.
    for (Mask cuts = 0; cuts < (Mask{1} << (n - 1)); ++cuts) {
      if (popcount(cuts) != k - 1) continue;
      std::vector<std::vector<int>> sets(1);
      for (int e = 0; e < n; ++e) {
        sets.back().push_back(e);
        if (e + 1 < n && (cuts & bit(e))) sets.emplace_back();
      }
      for (const Preorder& p : posets) {
        Preorder q = canonical_form(Preorder::build(sets, p.relation_pairs()));
        found.emplace(canonical_key(q), std::move(q));
      }
    }
  }
  std::vector<Preorder> out;
  for (auto& [key, q] : found) out.push_back(std::move(q));
  return out;
}

}  // namespace ppl
