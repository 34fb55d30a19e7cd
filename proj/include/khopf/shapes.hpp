#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <set>
#include <vector>

#include "integer.hpp"

namespace khopf {

using Partition = std::vector<int>;
using Composition = std::vector<int>;

/// Subset of [n-1], stored increasing.
struct DescentSet {
  int n = 0;
  std::vector<int> elems;
  friend auto operator<=>(DescentSet const&, DescentSet const&) = default;
};

struct Cell {
  int r = 0;
  int c = 0;
  int diagonal() const { return c - r; }
  friend auto operator<=>(Cell const&, Cell const&) = default;
};

inline int size(std::vector<int> const& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

inline bool is_partition(Partition const& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

inline bool is_composition(Composition const& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x > 0; });
}

inline Partition trimmed(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline int part(Partition const& p, int i) { return i >= 1 && i <= int(p.size()) ? p[i - 1] : 0; }

inline bool contains(Partition const& lambda, Partition const& mu) {
  if (mu.size() > lambda.size()) return false;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > lambda[i]) return false;
  return true;
}

inline Partition conjugate(Partition const& p) {
  Partition q;
  if (p.empty()) return q;
  for (int j = 1; j <= p[0]; ++j) {
    int len = 0;
    while (len < int(p.size()) && p[len] >= j) ++len;
    q.push_back(len);
  }
  return q;
}

inline DescentSet descents(Composition const& a) {
  if (!is_composition(a)) throw DomainError("composition has a non-positive part");
  DescentSet d;
  d.n = size(a);
  int s = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    s += a[i];
    d.elems.push_back(s);
  }
  return d;
}

inline Composition composition_of(DescentSet const& d) {
  Composition a;
  if (d.n == 0) {
    if (!d.elems.empty()) throw DomainError("descent set of an empty composition must be empty");
    return a;
  }
  int prev = 0;
  for (int e : d.elems) {
    if (e <= prev || e >= d.n) throw DomainError("descent set must be an increasing subset of [n-1]");
    a.push_back(e - prev);
    prev = e;
  }
  a.push_back(d.n - prev);
  return a;
}

inline bool subset_of(DescentSet const& a, DescentSet const& b) {
  return std::includes(b.elems.begin(), b.elems.end(), a.elems.begin(), a.elems.end());
}

/// All compositions of n, ordered by descent-set bitmask.
inline std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) return {Composition{}};
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    DescentSet d{n, {}};
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) d.elems.push_back(i);
    out.push_back(composition_of(d));
  }
  return out;
}

inline std::vector<Composition> compositions_up_to(int n) {
  std::vector<Composition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& a : compositions_of(k)) out.push_back(std::move(a));
  return out;
}

namespace detail {
inline void partitions_rec(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// Partitions of n in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  detail::partitions_rec(n, n, cur, out);
  return out;
}

inline std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(std::move(p));
  return out;
}

/// Partitions contained in lambda.
inline std::vector<Partition> subpartitions(Partition const& lambda) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, std::size_t i, int cap) -> void {
    out.push_back(trimmed(cur));
    if (i >= lambda.size()) return;
    for (int v = 1; v <= std::min(cap, lambda[i]); ++v) {
      cur.push_back(v);
      self(self, i + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 0, lambda.empty() ? 0 : lambda[0]);
  return out;
}

/// lambda / mu with mu contained in lambda. Rows are numbered from 1 at the top.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition o, Partition i = {}) : outer(trimmed(std::move(o))), inner(trimmed(std::move(i))) {
    if (!is_partition(outer) || !is_partition(inner)) throw DomainError("skew shape needs partitions");
    if (!khopf::contains(outer, inner)) throw DomainError("inner shape not contained in outer shape");
  }

  int rows() const { return int(outer.size()); }
  int row_start(int r) const { return part(inner, r) + 1; }
  int row_end(int r) const { return part(outer, r); }
  bool contains(Cell const& x) const { return x.r >= 1 && x.r <= rows() && x.c >= row_start(x.r) && x.c <= row_end(x.r); }
  int size() const { return khopf::size(outer) - khopf::size(inner); }
  bool straight() const { return inner.empty(); }

  /// Cells in row-major order.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= rows(); ++r)
      for (int c = row_start(r); c <= row_end(r); ++c) out.push_back({r, c});
    return out;
  }

  friend auto operator<=>(SkewShape const&, SkewShape const&) = default;
};

/// Canonical skew shape for a set of cells that is a translate of a skew diagram:
/// top row becomes row 1 and the leftmost cell sits in column 1.
inline SkewShape skew_from_cells(std::vector<Cell> cs) {
  if (cs.empty()) return SkewShape{};
  int rmin = cs[0].r, rmax = cs[0].r, cmin = cs[0].c;
  for (auto const& x : cs) {
    rmin = std::min(rmin, x.r);
    rmax = std::max(rmax, x.r);
    cmin = std::min(cmin, x.c);
  }
  int nrows = rmax - rmin + 1;
  std::vector<int> lo(nrows, 0), hi(nrows, -1), cnt(nrows, 0);
  for (auto const& x : cs) {
    int i = x.r - rmin;
    int c = x.c - cmin + 1;
    if (cnt[i] == 0) {
      lo[i] = hi[i] = c;
    } else {
      lo[i] = std::min(lo[i], c);
      hi[i] = std::max(hi[i], c);
    }
    ++cnt[i];
  }
  Partition outer(nrows), inner(nrows);
  for (int i = nrows - 1; i >= 0; --i) {
    if (cnt[i] == 0) {
      int below = outer[i + 1];
      outer[i] = inner[i] = below;
      continue;
    }
    if (cnt[i] != hi[i] - lo[i] + 1) throw DomainError("cells do not form a skew diagram");
    outer[i] = hi[i];
    inner[i] = lo[i] - 1;
  }
  SkewShape s(outer, inner);
  std::set<Cell> want;
  for (auto const& x : cs) want.insert({x.r - rmin + 1, x.c - cmin + 1});
  auto got = s.cells();
  if (std::set<Cell>(got.begin(), got.end()) != want) throw DomainError("cells do not form a skew diagram");
  return s;
}

inline SkewShape normalized(SkewShape const& s) { return skew_from_cells(s.cells()); }

/// Ribbon of a composition: bottom row has alpha_1 boxes, top row alpha_k,
/// consecutive rows share exactly one column.
inline SkewShape ribbon(Composition const& a) {
  if (!is_composition(a)) throw DomainError("ribbon needs a composition");
  int k = int(a.size());
  Partition outer(k), inner(k);
  int start = 1;
  for (int j = 0; j < k; ++j) {
    int row = k - 1 - j;
    inner[row] = start - 1;
    outer[row] = start + a[j] - 1;
    start += a[j] - 1;
  }
  return SkewShape(outer, inner);
}

enum class Glue { right, above, coincide };

namespace detail {
inline Cell upper_right(SkewShape const& s) {
  for (int r = 1; r <= s.rows(); ++r)
    if (s.row_end(r) >= s.row_start(r)) return {r, s.row_end(r)};
  throw DomainError("empty shape has no corner cell");
}
inline Cell lower_left(SkewShape const& s) {
  for (int r = s.rows(); r >= 1; --r)
    if (s.row_end(r) >= s.row_start(r)) return {r, s.row_start(r)};
  throw DomainError("empty shape has no corner cell");
}
}  // namespace detail

/// Glue tau onto rho: right puts tau's lower-left cell just right of rho's
/// upper-right cell, above puts it just above, coincide identifies the two.
inline SkewShape ribbon_glue(SkewShape const& rho, SkewShape const& tau, Glue mode) {
  if (rho.size() == 0 || tau.size() == 0) throw DomainError("glue needs nonempty shapes");
  Cell ur = detail::upper_right(rho);
  Cell ll = detail::lower_left(tau);
  Cell target = ur;
  if (mode == Glue::right) target.c += 1;
  if (mode == Glue::above) target.r -= 1;
  int dr = target.r - ll.r, dc = target.c - ll.c;
  std::vector<Cell> cs = rho.cells();
  std::set<Cell> seen(cs.begin(), cs.end());
  for (auto const& x : tau.cells()) {
    Cell y{x.r + dr, x.c + dc};
    if (seen.count(y)) {
      if (mode == Glue::coincide && y == ur) continue;
      throw DomainError("glued shapes overlap");
    }
    cs.push_back(y);
  }
  return skew_from_cells(cs);
}

inline Composition glue(Composition const& a, Composition const& b, Glue mode) {
  if (a.empty() || b.empty()) throw DomainError("glue needs nonempty compositions");
  Composition r(a.begin(), a.end() - 1);
  switch (mode) {
    case Glue::right:
      r.push_back(a.back() + b.front());
      break;
    case Glue::above:
      r.push_back(a.back());
      r.push_back(b.front());
      break;
    case Glue::coincide:
      r.push_back(a.back() + b.front() - 1);
      break;
  }
  r.insert(r.end(), b.begin() + 1, b.end());
  return r;
}

/// Addable cells of lambda, top to bottom.
inline std::vector<Cell> outer_corners(Partition const& lambda) {
  std::vector<Cell> out;
  int l = int(lambda.size());
  for (int i = 1; i <= l + 1; ++i)
    if (i == 1 || part(lambda, i - 1) > part(lambda, i)) out.push_back({i, part(lambda, i) + 1});
  return out;
}

/// Removable cells of lambda that are not cells of nu, top to bottom.
inline std::vector<Cell> inner_corners(Partition const& lambda, Partition const& nu = {}) {
  std::vector<Cell> out;
  for (int i = 1; i <= int(lambda.size()); ++i)
    if (part(lambda, i) > part(lambda, i + 1) && part(lambda, i) > part(nu, i)) out.push_back({i, part(lambda, i)});
  return out;
}

inline Partition with_cell_added(Partition p, Cell const& x) {
  if (x.r == int(p.size()) + 1) p.push_back(0);
  p[x.r - 1] += 1;
  return p;
}

/// All skew shapes lambda/mu with 1 <= |lambda/mu| <= max_cells and lambda inside a
/// max_cells x max_cells box, normalized and deduplicated.
inline std::vector<SkewShape> skew_shapes_up_to(int max_cells) {
  std::set<SkewShape> found;
  auto box = Partition(max_cells, max_cells);
  for (auto const& lam : subpartitions(box)) {
    for (auto const& mu : subpartitions(lam)) {
      int n = khopf::size(lam) - khopf::size(mu);
      if (n >= 1 && n <= max_cells) found.insert(normalized(SkewShape(lam, mu)));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace khopf
