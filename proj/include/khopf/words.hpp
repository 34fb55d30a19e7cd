#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "integer.hpp"
#include "shapes.hpp"

namespace khopf {

/// Word over positive integers. An m-permutation of [n] uses every letter of
/// [n] and never repeats a letter in adjacent positions.
using Word = std::vector<int>;

/// Ordered list of disjoint nonempty sorted blocks. An M-permutation of [n]
/// covers [n] and no block contains both i and i+1.
using Block = std::vector<int>;
using SetComposition = std::vector<Block>;

using WordSum = LinComb<Word>;
using SetCompSum = LinComb<SetComposition>;

/// Word-indexed element that is only known for words of length <= cap.
struct WordElement {
  WordSum terms;
  std::optional<int> cap;
  friend bool operator==(WordElement const&, WordElement const&) = default;
};

// ---------------------------------------------------------------- m-words

inline int alphabet_size(Word const& w) { return w.empty() ? 0 : *std::max_element(w.begin(), w.end()); }

inline bool has_adjacent_repeat(Word const& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return true;
  return false;
}

inline bool is_mperm(Word const& w) {
  if (has_adjacent_repeat(w)) return false;
  int n = alphabet_size(w);
  std::vector<bool> seen(n + 1, false);
  for (int x : w) {
    if (x < 1) return false;
    seen[x] = true;
  }
  for (int i = 1; i <= n; ++i)
    if (!seen[i]) return false;
  return true;
}

inline void require_mperm(Word const& w) {
  if (!is_mperm(w)) throw DomainError("not an m-permutation");
}

inline Word collapse_runs(Word const& w) {
  Word r;
  for (int x : w)
    if (r.empty() || r.back() != x) r.push_back(x);
  return r;
}

inline Word shifted(Word w, int n) {
  for (auto& x : w) x += n;
  return w;
}

inline DescentSet descent_set(Word const& w) {
  DescentSet d{int(w.size()), {}};
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.elems.push_back(int(i) + 1);
  return d;
}

inline Composition descent_composition(Word const& w) { return composition_of(descent_set(w)); }

/// Permutation whose descent set is D(a): increasing runs of sizes a_1, a_2, ...
/// carrying successively smaller values.
inline Word canonical_word(Composition const& a) {
  if (!is_composition(a)) throw DomainError("canonical word needs a composition");
  int n = size(a);
  Word w;
  int top = n;
  for (int part : a) {
    for (int v = top - part + 1; v <= top; ++v) w.push_back(v);
    top -= part;
  }
  return w;
}

/// Relabel letters by rank so that the letters used form an initial segment.
inline Word standardize(Word const& w) {
  if (has_adjacent_repeat(w)) throw DomainError("cannot standardize a word with equal adjacent letters");
  std::vector<int> vals(w.begin(), w.end());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  Word r;
  r.reserve(w.size());
  for (int x : w) r.push_back(int(std::lower_bound(vals.begin(), vals.end(), x) - vals.begin()) + 1);
  return r;
}

/// All multishuffles of u and v of length <= cap, with multiplicities.
/// Letters are first treated as distinct placeholders and then substituted.
inline WordSum multishuffle(Word const& u, Word const& v, int cap) {
  WordSum out;
  int k = int(u.size()), l = int(v.size());
  Word cur;
  // last: 0 nothing placed, 1 a letter of u, 2 a letter of v
  auto rec = [&](auto&& self, int i, int j, int last) -> void {
    if (i == k && j == l) out.add(cur, 1);
    int len = int(cur.size());
    if (len + (k - i) + (l - j) + ((i == k && j == l) ? 1 : 0) > cap) return;
    if (i >= 1 && last == 2) {
      cur.push_back(u[i - 1]);
      self(self, i, j, 1);
      cur.pop_back();
    }
    if (i < k) {
      cur.push_back(u[i]);
      self(self, i + 1, j, 1);
      cur.pop_back();
    }
    if (j >= 1 && last == 1) {
      cur.push_back(v[j - 1]);
      self(self, i, j, 2);
      cur.pop_back();
    }
    if (j < l) {
      cur.push_back(v[j]);
      self(self, i, j + 1, 2);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

/// Sum of cuts and overlapping cuts: 2l+1 tensor terms.
inline Tensor<Word> cuut(Word const& w) {
  Tensor<Word> t;
  int l = int(w.size());
  for (int k = 0; k <= l; ++k) t.add({Word(w.begin(), w.begin() + k), Word(w.begin() + k, w.end())}, 1);
  for (int k = 1; k <= l; ++k) t.add({Word(w.begin(), w.begin() + k), Word(w.begin() + k - 1, w.end())}, 1);
  return t;
}

/// Product of the small multi-Malvenuto-Reutenauer algebra, window of length <= cap.
inline WordElement mmr_product(Word const& w, Word const& u, int cap) {
  require_mperm(w);
  require_mperm(u);
  return {multishuffle(w, shifted(u, alphabet_size(w)), cap), cap};
}

inline WordElement mmr_product(WordElement const& a, WordElement const& b, int cap) {
  WordElement r{{}, cap};
  for (auto const& [x, cx] : a.terms)
    for (auto const& [y, cy] : b.terms) r.terms += (cx * cy) * mmr_product(x, y, cap).terms;
  if (a.cap) r.cap = std::min(*r.cap, *a.cap);
  if (b.cap) r.cap = std::min(*r.cap, *b.cap);
  return r;
}

inline Tensor<Word> mmr_coproduct(Word const& w) {
  require_mperm(w);
  Tensor<Word> t;
  for (auto const& [k, c] : cuut(w)) t.add({standardize(k.first), standardize(k.second)}, c);
  return t;
}

/// Unique factorization into irreducible m-permutations.
inline std::vector<Word> factor(Word const& w) {
  require_mperm(w);
  std::vector<Word> out;
  std::size_t start = 0;
  int base = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    bool split = p + 1 == w.size();
    if (!split) {
      int mx = 0, cnt = 0;
      std::set<int> seen;
      for (std::size_t q = start; q <= p; ++q) {
        mx = std::max(mx, w[q]);
        seen.insert(w[q]);
      }
      cnt = int(seen.size());
      int mn = *std::min_element(w.begin() + p + 1, w.end());
      split = *seen.begin() == base + 1 && mx == base + cnt && mn > mx;
    }
    if (split) {
      Word piece(w.begin() + start, w.begin() + p + 1);
      int m = alphabet_size(piece);
      out.push_back(shifted(piece, -base));
      base = m;
      start = p + 1;
    }
  }
  return out;
}

/// All m-permutations of length n, lexicographic.
inline std::vector<Word> mperms_of_length(int n) {
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self) -> void {
    if (int(cur.size()) == n) {
      if (is_mperm(cur)) out.push_back(cur);
      return;
    }
    for (int x = 1; x <= n; ++x) {
      if (!cur.empty() && cur.back() == x) continue;
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

// ---------------------------------------------------------------- M-words

inline int ground_size(SetComposition const& w) {
  int n = 0;
  for (auto const& b : w) n += int(b.size());
  return n;
}

inline int max_letter(SetComposition const& w) {
  int m = 0;
  for (auto const& b : w)
    for (int x : b) m = std::max(m, x);
  return m;
}

inline bool is_set_composition(SetComposition const& w) {
  std::set<int> seen;
  for (auto const& b : w) {
    if (b.empty()) return false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] < 1) return false;
      if (i > 0 && b[i] <= b[i - 1]) return false;
      if (!seen.insert(b[i]).second) return false;
    }
  }
  return true;
}

/// Set composition of exactly [n].
inline bool is_full_set_composition(SetComposition const& w) {
  return is_set_composition(w) && max_letter(w) == ground_size(w);
}

inline bool is_Mperm(SetComposition const& w) {
  if (!is_full_set_composition(w)) return false;
  for (auto const& b : w)
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
      if (b[i + 1] == b[i] + 1) return false;
  return true;
}

inline void require_Mperm(SetComposition const& w) {
  if (!is_Mperm(w)) throw DomainError("not an M-permutation");
}

inline SetComposition canonical(SetComposition w) {
  for (auto& b : w) std::sort(b.begin(), b.end());
  return w;
}

/// Standardization of a set composition: sorted neighbours in one block merge,
/// then the surviving letters are relabelled 1..k.
inline SetComposition standardize(SetComposition const& w) {
  if (!is_set_composition(w)) throw DomainError("not a set composition");
  std::vector<std::pair<int, int>> lb;  // letter, block
  for (std::size_t i = 0; i < w.size(); ++i)
    for (int x : w[i]) lb.push_back({x, int(i)});
  std::sort(lb.begin(), lb.end());
  SetComposition r(w.size());
  int label = 0;
  for (std::size_t t = 0; t < lb.size(); ++t) {
    if (t > 0 && lb[t].second == lb[t - 1].second) continue;
    r[lb[t].second].push_back(++label);
  }
  return r;
}

inline SetComposition restrict_to(SetComposition const& w, int lo, int hi) {
  SetComposition r;
  for (auto const& b : w) {
    Block nb;
    for (int x : b)
      if (x >= lo && x <= hi) nb.push_back(x);
    if (!nb.empty()) r.push_back(nb);
  }
  return r;
}

inline SetComposition shifted(SetComposition w, int n) {
  for (auto& b : w)
    for (auto& x : b) x += n;
  return w;
}

/// Semishuffle: interleave blocks of u and v, optionally fusing a block of each.
inline SetCompSum semishuffle(SetComposition const& u, SetComposition const& v) {
  SetCompSum out;
  SetComposition cur;
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == u.size() && j == v.size()) {
      out.add(cur, 1);
      return;
    }
    if (i < u.size()) {
      cur.push_back(u[i]);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < v.size()) {
      cur.push_back(v[j]);
      self(self, i, j + 1);
      cur.pop_back();
    }
    if (i < u.size() && j < v.size()) {
      Block b = u[i];
      b.insert(b.end(), v[j].begin(), v[j].end());
      std::sort(b.begin(), b.end());
      cur.push_back(b);
      self(self, i + 1, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Product of the big multi-Malvenuto-Reutenauer algebra via semishuffle and standardization.
inline SetCompSum mmr_big_product(SetComposition const& w, SetComposition const& u) {
  require_Mperm(w);
  require_Mperm(u);
  SetCompSum out;
  for (auto const& [x, c] : semishuffle(w, shifted(u, ground_size(w)))) out.add(standardize(x), c);
  return out;
}

inline SetCompSum mmr_big_product(SetCompSum const& a, SetCompSum const& b) {
  SetCompSum out;
  for (auto const& [x, cx] : a)
    for (auto const& [y, cy] : b) out += (cx * cy) * mmr_big_product(x, y);
  return out;
}

inline Tensor<SetComposition> mmr_big_coproduct(SetComposition const& w) {
  require_Mperm(w);
  Tensor<SetComposition> t;
  for (std::size_t k = 0; k <= w.size(); ++k)
    t.add({standardize(SetComposition(w.begin(), w.begin() + k)), standardize(SetComposition(w.begin() + k, w.end()))}, 1);
  return t;
}

/// M-permutation v -> m-permutation whose p-th letter is the block of v containing p.
inline Word invert(SetComposition const& w) {
  if (!is_full_set_composition(w)) throw DomainError("inverse needs a set composition of [n]");
  Word u(ground_size(w));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (int x : w[i]) u[x - 1] = int(i) + 1;
  return u;
}

inline SetComposition invert(Word const& u) {
  int k = alphabet_size(u);
  SetComposition w(k);
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u[p] < 1) throw DomainError("letters must be positive");
    w[u[p] - 1].push_back(int(p) + 1);
  }
  for (auto const& b : w)
    if (b.empty()) throw DomainError("inverse needs every letter of [k]");
  return w;
}

inline std::vector<SetComposition> Mperms_of_size(int n) {
  std::vector<SetComposition> out;
  for (auto const& u : mperms_of_length(n)) out.push_back(invert(u));
  std::sort(out.begin(), out.end());
  return out;
}

/// Product via its defining restriction property, by search over candidates.
inline SetCompSum mmr_big_product_by_restriction(SetComposition const& w, SetComposition const& u) {
  require_Mperm(w);
  require_Mperm(u);
  int m = ground_size(w), n = ground_size(u);
  SetCompSum out;
  if (m == 0 || n == 0) {
    out.add(m == 0 ? u : w, 1);
    return out;
  }
  for (auto const& v : Mperms_of_size(m + n))
    if (restrict_to(v, 1, m) == w && restrict_to(v, m + 1, m + n) == shifted(u, m)) out.add(v, 1);
  for (auto const& v : Mperms_of_size(m + n - 1))
    if (restrict_to(v, 1, m) == w && restrict_to(v, m, m + n - 1) == shifted(u, m - 1)) out.add(v, 1);
  return out;
}

inline Tensor<SetComposition> tensor_product(Tensor<SetComposition> const& a, Tensor<SetComposition> const& b) {
  Tensor<SetComposition> out;
  for (auto const& [x, cx] : a)
    for (auto const& [y, cy] : b) {
      auto left = mmr_big_product(x.first, y.first);
      auto right = mmr_big_product(x.second, y.second);
      for (auto const& [l, cl] : left)
        for (auto const& [r, cr] : right) out.add({l, r}, cx * cy * cl * cr);
    }
  return out;
}

/// Antipode of the big algebra: alternating sum over splittings into nonempty
/// consecutive pieces, each standardized and multiplied in order.
inline SetCompSum mmr_antipode(SetComposition const& w) {
  require_Mperm(w);
  SetCompSum out;
  int l = int(w.size());
  if (l == 0) {
    out.add({}, 1);
    return out;
  }
  for (unsigned mask = 0; mask < (1u << (l - 1)); ++mask) {
    SetCompSum prod;
    prod.add({}, 1);
    int pieces = 0;
    int start = 0;
    for (int p = 1; p <= l; ++p) {
      if (p == l || (mask & (1u << (p - 1)))) {
        SetCompSum f;
        f.add(standardize(SetComposition(w.begin() + start, w.begin() + p)), 1);
        prod = mmr_big_product(prod, f);
        ++pieces;
        start = p;
      }
    }
    out += Integer(pieces % 2 ? -1 : 1) * prod;
  }
  return out;
}

inline std::vector<SetComposition> factor(SetComposition const& w) {
  require_Mperm(w);
  std::vector<SetComposition> out;
  std::size_t start = 0;
  int count = 0, mx = 0, base = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    count += int(w[k].size());
    mx = std::max(mx, w[k].back());
    if (mx == count) {
      out.push_back(shifted(SetComposition(w.begin() + start, w.begin() + k + 1), -base));
      base = count;
      start = k + 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------- weak order

namespace detail {
inline std::vector<SetComposition> weak_covers(SetComposition const& x) {
  std::vector<SetComposition> out;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i].back() < x[i + 1].front()) {
      SetComposition y(x.begin(), x.begin() + i);
      Block b = x[i];
      b.insert(b.end(), x[i + 1].begin(), x[i + 1].end());
      y.push_back(b);
      y.insert(y.end(), x.begin() + i + 2, x.end());
      out.push_back(y);
    }
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t t = 1; t < x[i].size(); ++t) {
      SetComposition y(x.begin(), x.begin() + i);
      y.push_back(Block(x[i].begin() + t, x[i].end()));
      y.push_back(Block(x[i].begin(), x[i].begin() + t));
      y.insert(y.end(), x.begin() + i + 1, x.end());
      out.push_back(y);
    }
  }
  return out;
}

/// Set compositions of [N] that standardize to the M-permutation c.
inline std::vector<SetComposition> expansions(SetComposition const& c, int N) {
  int n = ground_size(c);
  std::vector<SetComposition> out;
  if (n == 0) {
    if (N == 0) out.push_back({});
    return out;
  }
  std::vector<int> runs(n, 1);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      runs[i] = 1 + left;
      std::vector<int> start(n + 1, 1);
      for (int a = 0; a < n; ++a) start[a + 1] = start[a] + runs[a];
      SetComposition x;
      for (auto const& b : c) {
        Block nb;
        for (int letter : b)
          for (int q = 0; q < runs[letter - 1]; ++q) nb.push_back(start[letter - 1] + q);
        x.push_back(nb);
      }
      out.push_back(x);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      runs[i] = 1 + e;
      self(self, i + 1, left - e);
    }
  };
  if (N >= n) rec(rec, 0, N - n);
  return out;
}
}  // namespace detail

/// M-permutations reachable from w in the weak order when every intermediate
/// set composition has ground set of size <= n_bound.
inline std::set<SetComposition> weak_order_upset(SetComposition const& w, int n_bound) {
  require_Mperm(w);
  std::set<SetComposition> seen{w};
  std::deque<SetComposition> queue{w};
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    for (int N = ground_size(c); N <= n_bound; ++N)
      for (auto const& x : detail::expansions(c, N))
        for (auto const& y : detail::weak_covers(x)) {
          auto s = standardize(y);
          if (seen.insert(s).second) queue.push_back(s);
        }
  }
  return seen;
}

/// True when v is reachable from w within the bound.
inline bool weak_order_reached(SetComposition const& w, SetComposition const& v, int n_bound) {
  require_Mperm(v);
  return weak_order_upset(w, n_bound).count(v) > 0;
}

/// w <= v in the weak order on M-permutations. Bounded search cannot certify a
/// negative answer, so an unreached v raises UndecidedAtBound.
inline bool weak_order_leq(SetComposition const& w, SetComposition const& v, std::optional<int> n_bound = {}) {
  int bound = n_bound.value_or(ground_size(w) + ground_size(v));
  if (weak_order_reached(w, v, bound)) return true;
  throw UndecidedAtBound("weak order search exhausted ground sets up to " + std::to_string(bound));
}

}  // namespace khopf
