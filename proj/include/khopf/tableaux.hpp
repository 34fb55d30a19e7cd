#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "poly.hpp"
#include "shapes.hpp"

namespace khopf {

/// Filling of a skew shape; entries are aligned with shape.cells() (row-major).
template <class Entry>
struct Tableau {
  SkewShape shape;
  std::vector<Entry> entries;

  Entry const& at(Cell const& x) const { return entries.at(index(x)); }
  std::size_t index(Cell const& x) const {
    std::size_t i = 0;
    for (int r = 1; r < x.r; ++r) i += std::max(0, shape.row_end(r) - shape.row_start(r) + 1);
    return i + std::size_t(x.c - shape.row_start(x.r));
  }
  friend bool operator==(Tableau const&, Tableau const&) = default;
};

using IntTableau = Tableau<int>;
using SetTableau = Tableau<std::vector<int>>;

/// Valued-set tableau: integer filling plus, per cell, whether it joins the
/// group of the cell directly above (equal values only).
struct ValuedSetTableau {
  IntTableau filling;
  std::vector<char> joins_above;

  std::vector<std::vector<Cell>> groups() const {
    auto cs = filling.shape.cells();
    std::map<Cell, std::size_t> group_of;
    std::vector<std::vector<Cell>> out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (joins_above[i]) {
        auto g = group_of.at({cs[i].r - 1, cs[i].c});
        out[g].push_back(cs[i]);
        group_of[cs[i]] = g;
      } else {
        group_of[cs[i]] = out.size();
        out.push_back({cs[i]});
      }
    }
    return out;
  }
  friend bool operator==(ValuedSetTableau const&, ValuedSetTableau const&) = default;
};

enum class TableauKind { ssyt, svt, rpp, weak_svt, valued_set, elegant };

struct FillBounds {
  int max_entry = 0;
  /// Total weight degree; required for set-valued kinds.
  std::optional<int> max_letters;
};

namespace detail {

/// Neighbour indices of each cell in row-major order (-1 if absent).
struct Neighbours {
  std::vector<Cell> cells;
  std::vector<int> left, above;
  explicit Neighbours(SkewShape const& s) : cells(s.cells()) {
    std::map<Cell, int> idx;
    for (std::size_t i = 0; i < cells.size(); ++i) idx[cells[i]] = int(i);
    for (auto const& x : cells) {
      auto l = idx.find({x.r, x.c - 1});
      auto a = idx.find({x.r - 1, x.c});
      left.push_back(l == idx.end() ? -1 : l->second);
      above.push_back(a == idx.end() ? -1 : a->second);
    }
  }
};

template <class F>
void for_each_int_filling(SkewShape const& shape, int max_entry, bool row_strict, bool col_strict,
                          std::function<int(Cell const&)> const& upper, F&& f) {
  Neighbours nb(shape);
  IntTableau t{shape, std::vector<int>(nb.cells.size(), 0)};
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == nb.cells.size()) {
      f(std::as_const(t));
      return;
    }
    int lo = 1;
    if (nb.left[i] >= 0) lo = std::max(lo, t.entries[nb.left[i]] + (row_strict ? 1 : 0));
    if (nb.above[i] >= 0) lo = std::max(lo, t.entries[nb.above[i]] + (col_strict ? 1 : 0));
    int hi = upper ? std::min(max_entry, upper(nb.cells[i])) : max_entry;
    for (int v = lo; v <= hi; ++v) {
      t.entries[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

/// Nonempty subsets (or multisets) of [lo, hi] with at most budget elements, lexicographic.
template <class F>
void for_each_letter_set(int lo, int hi, int budget, bool multiset, F&& f) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    for (int v = from; v <= hi; ++v) {
      if (int(cur.size()) >= budget) return;
      cur.push_back(v);
      f(std::as_const(cur));
      self(self, multiset ? v : v + 1);
      cur.pop_back();
    }
  };
  rec(rec, lo);
}

inline int require_letters(FillBounds const& b) {
  if (!b.max_letters) throw DomainError("set-valued enumeration needs a letter bound");
  return *b.max_letters;
}

}  // namespace detail

/// Semistandard tableaux: rows weak, columns strict.
template <class F>
void for_each_ssyt(SkewShape const& shape, int max_entry, F&& f) {
  detail::for_each_int_filling(shape, max_entry, false, true, {}, f);
}

/// Reverse plane partitions: rows and columns weak.
template <class F>
void for_each_rpp(SkewShape const& shape, int max_entry, F&& f) {
  detail::for_each_int_filling(shape, max_entry, false, false, {}, f);
}

/// Semistandard fillings whose entries in row i lie in [1, i-1].
template <class F>
void for_each_elegant(SkewShape const& shape, F&& f) {
  int rows = shape.rows();
  detail::for_each_int_filling(shape, std::max(0, rows - 1), false, true, [](Cell const& x) { return x.r - 1; }, f);
}

/// Set-valued tableaux: max of a cell <= min of its right neighbour, max < min of the cell below.
template <class F>
void for_each_svt(SkewShape const& shape, FillBounds const& b, F&& f) {
  int budget = detail::require_letters(b);
  detail::Neighbours nb(shape);
  SetTableau t{shape, std::vector<std::vector<int>>(nb.cells.size())};
  auto rec = [&](auto&& self, std::size_t i, int used) -> void {
    if (i == nb.cells.size()) {
      f(std::as_const(t));
      return;
    }
    int remaining_cells = int(nb.cells.size() - i) - 1;
    int lo = 1;
    if (nb.left[i] >= 0) lo = std::max(lo, t.entries[nb.left[i]].back());
    if (nb.above[i] >= 0) lo = std::max(lo, t.entries[nb.above[i]].back() + 1);
    detail::for_each_letter_set(lo, b.max_entry, budget - used - remaining_cells, false, [&](std::vector<int> const& s) {
      t.entries[i] = s;
      self(self, i + 1, used + int(s.size()));
    });
  };
  rec(rec, 0, 0);
}

/// Weak set-valued tableaux: multiset entries, min > max of left cell, min >= max of cell above.
template <class F>
void for_each_weak_svt(SkewShape const& shape, FillBounds const& b, F&& f) {
  int budget = detail::require_letters(b);
  detail::Neighbours nb(shape);
  SetTableau t{shape, std::vector<std::vector<int>>(nb.cells.size())};
  auto rec = [&](auto&& self, std::size_t i, int used) -> void {
    if (i == nb.cells.size()) {
      f(std::as_const(t));
      return;
    }
    int remaining_cells = int(nb.cells.size() - i) - 1;
    int lo = 1;
    if (nb.left[i] >= 0) lo = std::max(lo, t.entries[nb.left[i]].back() + 1);
    if (nb.above[i] >= 0) lo = std::max(lo, t.entries[nb.above[i]].back());
    detail::for_each_letter_set(lo, b.max_entry, budget - used - remaining_cells, true, [&](std::vector<int> const& s) {
      t.entries[i] = s;
      self(self, i + 1, used + int(s.size()));
    });
  };
  rec(rec, 0, 0);
}

/// Valued-set tableaux: rows strict, columns weak, with a grouping of equal
/// vertical runs; at most max_letters groups.
template <class F>
void for_each_valued_set(SkewShape const& shape, FillBounds const& b, F&& f) {
  int budget = detail::require_letters(b);
  detail::Neighbours nb(shape);
  ValuedSetTableau t{{shape, std::vector<int>(nb.cells.size(), 0)}, std::vector<char>(nb.cells.size(), 0)};
  auto rec = [&](auto&& self, std::size_t i, int groups) -> void {
    if (i == nb.cells.size()) {
      f(std::as_const(t));
      return;
    }
    int lo = 1;
    if (nb.left[i] >= 0) lo = std::max(lo, t.filling.entries[nb.left[i]] + 1);
    if (nb.above[i] >= 0) lo = std::max(lo, t.filling.entries[nb.above[i]]);
    for (int v = lo; v <= b.max_entry; ++v) {
      t.filling.entries[i] = v;
      bool can_join = nb.above[i] >= 0 && t.filling.entries[nb.above[i]] == v;
      if (can_join) {
        t.joins_above[i] = 1;
        self(self, i + 1, groups);
      }
      if (groups + 1 <= budget) {
        t.joins_above[i] = 0;
        self(self, i + 1, groups + 1);
      }
    }
    t.joins_above[i] = 0;
  };
  rec(rec, 0, 0);
}

template <class T, class Visit>
std::vector<T> collect(Visit&& visit) {
  std::vector<T> out;
  visit([&](T const& t) { out.push_back(t); });
  return out;
}

// ---------------------------------------------------------------- weights

/// Letter counts, index i holds the multiplicity of letter i+1.
inline std::vector<int> weight(IntTableau const& t, TableauKind kind) {
  std::vector<int> w;
  auto bump = [&](int v) {
    if (int(w.size()) < v) w.resize(v, 0);
    ++w[v - 1];
  };
  if (kind == TableauKind::rpp) {
    std::map<int, std::set<int>> by_col;
    auto cs = t.shape.cells();
    for (std::size_t i = 0; i < cs.size(); ++i) by_col[cs[i].c].insert(t.entries[i]);
    for (auto const& [c, vals] : by_col)
      for (int v : vals) bump(v);
  } else {
    for (int v : t.entries) bump(v);
  }
  return w;
}

inline std::vector<int> weight(SetTableau const& t) {
  std::vector<int> w;
  for (auto const& s : t.entries)
    for (int v : s) {
      if (int(w.size()) < v) w.resize(v, 0);
      ++w[v - 1];
    }
  return w;
}

inline std::vector<int> weight(ValuedSetTableau const& t) {
  std::vector<int> w;
  for (std::size_t i = 0; i < t.filling.entries.size(); ++i) {
    if (t.joins_above[i]) continue;
    int v = t.filling.entries[i];
    if (int(w.size()) < v) w.resize(v, 0);
    ++w[v - 1];
  }
  return w;
}

// ---------------------------------------------------------------- validity

inline bool is_valid(IntTableau const& t, TableauKind kind) {
  detail::Neighbours nb(t.shape);
  if (t.entries.size() != nb.cells.size()) return false;
  for (std::size_t i = 0; i < nb.cells.size(); ++i) {
    int v = t.entries[i];
    if (v < 1) return false;
    int l = nb.left[i] >= 0 ? t.entries[nb.left[i]] : 0;
    int a = nb.above[i] >= 0 ? t.entries[nb.above[i]] : 0;
    switch (kind) {
      case TableauKind::ssyt:
      case TableauKind::elegant:
        if (v < l || (nb.above[i] >= 0 && v <= a)) return false;
        if (kind == TableauKind::elegant && v > nb.cells[i].r - 1) return false;
        break;
      case TableauKind::rpp:
        if (v < l || v < a) return false;
        break;
      default:
        return false;
    }
  }
  return true;
}

inline bool is_valid(SetTableau const& t, TableauKind kind) {
  detail::Neighbours nb(t.shape);
  if (t.entries.size() != nb.cells.size()) return false;
  bool weak = kind == TableauKind::weak_svt;
  if (!weak && kind != TableauKind::svt) return false;
  for (std::size_t i = 0; i < nb.cells.size(); ++i) {
    auto const& s = t.entries[i];
    if (s.empty() || s.front() < 1) return false;
    for (std::size_t j = 1; j < s.size(); ++j)
      if (weak ? s[j] < s[j - 1] : s[j] <= s[j - 1]) return false;
    if (nb.left[i] >= 0) {
      int m = t.entries[nb.left[i]].back();
      if (weak ? s.front() <= m : s.front() < m) return false;
    }
    if (nb.above[i] >= 0) {
      int m = t.entries[nb.above[i]].back();
      if (weak ? s.front() < m : s.front() <= m) return false;
    }
  }
  return true;
}

inline bool is_valid(ValuedSetTableau const& t) {
  detail::Neighbours nb(t.filling.shape);
  auto const& e = t.filling.entries;
  if (e.size() != nb.cells.size() || t.joins_above.size() != e.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 1) return false;
    if (nb.left[i] >= 0 && e[i] <= e[nb.left[i]]) return false;
    if (nb.above[i] >= 0 && e[i] < e[nb.above[i]]) return false;
    if (t.joins_above[i] && (nb.above[i] < 0 || e[nb.above[i]] != e[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------- counts

inline Integer kostka(Partition const& lambda, Partition const& content) {
  Integer n = 0;
  SkewShape s(lambda);
  if (s.size() != size(content)) return 0;
  for_each_ssyt(s, int(content.size()), [&](IntTableau const& t) {
    auto w = weight(t, TableauKind::ssyt);
    w.resize(content.size(), 0);
    if (w == content) ++n;
  });
  return n;
}

inline Integer elegant_count(Partition const& lambda, Partition const& mu) {
  if (!contains(lambda, mu)) return 0;
  Integer n = 0;
  for_each_elegant(SkewShape(lambda, mu), [&](IntTableau const&) { ++n; });
  return n;
}

// ---------------------------------------------------------------- RSK-based bijection

/// Straight-shape tableau stored by rows.
using RowTableau = std::vector<std::vector<int>>;

inline Partition shape_of(RowTableau const& t) {
  Partition p;
  for (auto const& r : t)
    if (!r.empty()) p.push_back(int(r.size()));
  return p;
}

/// Row insertion; returns the new cell.
inline Cell rsk_insert(RowTableau& t, int x) {
  for (std::size_t r = 0;; ++r) {
    if (r == t.size()) t.emplace_back();
    auto& row = t[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {int(r) + 1, int(row.size())};
    }
    std::swap(*it, x);
  }
}

/// Reverse row insertion from a corner cell; returns the ejected letter.
inline int rsk_remove(RowTableau& t, Cell const& corner) {
  int r = corner.r - 1;
  if (r >= int(t.size()) || int(t[r].size()) != corner.c) throw DomainError("reverse insertion needs a row end");
  if (r + 1 < int(t.size()) && int(t[r + 1].size()) >= corner.c) throw DomainError("reverse insertion needs a corner");
  int y = t[r].back();
  t[r].pop_back();
  for (int q = r - 1; q >= 0; --q) {
    auto& row = t[q];
    auto it = std::lower_bound(row.begin(), row.end(), y);
    --it;
    std::swap(*it, y);
  }
  while (!t.empty() && t.back().empty()) t.pop_back();
  return y;
}

inline RowTableau to_rows(IntTableau const& t) {
  RowTableau rows(t.shape.rows());
  auto cs = t.shape.cells();
  for (std::size_t i = 0; i < cs.size(); ++i) rows[cs[i].r - 1].push_back(t.entries[i]);
  return rows;
}

inline IntTableau from_rows(RowTableau const& rows) {
  IntTableau t{SkewShape(shape_of(rows)), {}};
  for (auto const& r : rows) t.entries.insert(t.entries.end(), r.begin(), r.end());
  return t;
}

struct SchurPair {
  IntTableau S;  ///< semistandard, straight shape mu
  IntTableau U;  ///< elegant filling of lambda/mu
  friend bool operator==(SchurPair const&, SchurPair const&) = default;
};

/// Reverse plane partition of straight shape lambda -> (semistandard S, elegant U),
/// with x^T = x^S.
inline SchurPair gschur_forward(IntTableau const& T) {
  if (!T.shape.straight() || !is_valid(T, TableauKind::rpp)) throw DomainError("gschur needs a straight reverse plane partition");
  auto const& lam = T.shape.outer;
  int m = int(lam.size());
  if (m == 0) return {T, T};
  RowTableau Trows = to_rows(T);
  RowTableau S{Trows[m - 1]};
  std::map<Cell, int> U;
  for (int k = m - 1; k >= 1; --k) {
    auto const& row = Trows[k - 1];
    auto const& below = Trows[k];
    std::vector<int> reduced;
    for (int c = 1; c <= int(row.size()); ++c)
      if (c > int(below.size()) || row[c - 1] != below[c - 1]) reduced.push_back(row[c - 1]);
    Partition old_shape = shape_of(S);
    std::map<Cell, int> nextU;
    for (auto const& [x, v] : U) nextU[{x.r + 1, x.c}] = v + 1;
    std::set<Cell> added;
    for (int x : reduced) added.insert(rsk_insert(S, x));
    std::vector<Cell> strip;
    for (int c = part(old_shape, 1) + 1; c <= lam[k - 1]; ++c) strip.push_back({1, c});
    for (int r = 1; r <= int(old_shape.size()); ++r)
      for (int c = part(old_shape, r + 1) + 1; c <= part(old_shape, r); ++c) strip.push_back({r + 1, c});
    for (auto const& h : strip)
      if (!added.count(h)) nextU[h] = 1;
    U = std::move(nextU);
  }
  IntTableau St = from_rows(S);
  SkewShape ushape(lam, St.shape.outer);
  IntTableau Ut{ushape, {}};
  for (auto const& x : ushape.cells()) Ut.entries.push_back(U.at(x));
  return {St, Ut};
}

/// Inverse of gschur_forward. U.shape.outer is the shape of the result.
inline IntTableau gschur_backward(SchurPair const& p) {
  if (!p.S.shape.straight() || !is_valid(p.S, TableauKind::ssyt)) throw DomainError("S must be semistandard of straight shape");
  if (!is_valid(p.U, TableauKind::elegant)) throw DomainError("U must be an elegant filling");
  if (p.U.shape.inner != p.S.shape.outer) throw DomainError("U must fill lambda/shape(S)");
  Partition lam = p.U.shape.outer;
  int m = int(lam.size());
  RowTableau S = to_rows(p.S);
  std::map<Cell, int> U;
  auto ucells = p.U.shape.cells();
  for (std::size_t i = 0; i < ucells.size(); ++i) U[ucells[i]] = p.U.entries[i];
  RowTableau Trows;
  for (int k = 1; k < m; ++k) {
    Trows.push_back(S.empty() ? std::vector<int>{} : S[0]);
    int width = S.empty() ? 0 : int(S[0].size());
    std::vector<Cell> active;
    for (int c = 1; c <= width; ++c) {
      int h = 0;
      while (h < int(S.size()) && int(S[h].size()) >= c) ++h;
      auto it = U.find({h + 1, c});
      if (it == U.end() || it->second != 1) active.push_back({h, c});
    }
    for (auto it = active.rbegin(); it != active.rend(); ++it) rsk_remove(S, *it);
    std::map<Cell, int> nextU;
    for (auto const& [x, v] : U) {
      if (v == 1) continue;
      if (x.r == 1) throw DomainError("elegant filling has an entry above 0 in its top row");
      nextU[{x.r - 1, x.c}] = v - 1;
    }
    U = std::move(nextU);
  }
  if (!U.empty() || S.size() > 1) throw DomainError("pair is not in the image of the bijection");
  Trows.push_back(S.empty() ? std::vector<int>{} : S[0]);
  IntTableau T{SkewShape(lam), {}};
  for (int r = 0; r < m; ++r) {
    if (int(Trows[r].size()) != lam[r]) throw DomainError("pair is not in the image of the bijection");
    T.entries.insert(T.entries.end(), Trows[r].begin(), Trows[r].end());
  }
  if (!is_valid(T, TableauKind::rpp)) throw DomainError("pair is not in the image of the bijection");
  return T;
}

}  // namespace khopf
