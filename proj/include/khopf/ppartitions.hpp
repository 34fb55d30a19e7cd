#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "poly.hpp"
#include "series.hpp"
#include "shapes.hpp"
#include "tableaux.hpp"
#include "words.hpp"

namespace khopf {

/// Finite poset on elements 0..n-1 generated by pairs (s, t) meaning s < t,
/// with a bijective labelling theta onto [n]. Stores the covering pairs.
class LabeledPoset {
 public:
  LabeledPoset() = default;
  LabeledPoset(int n, std::vector<std::pair<int, int>> covers, std::vector<int> theta)
      : n_(n), covers_(std::move(covers)), theta_(std::move(theta)) {
    if (int(theta_.size()) != n_) throw DomainError("labelling size does not match poset size");
    std::vector<int> sorted(theta_);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n_; ++i)
      if (sorted[i] != i + 1) throw DomainError("labelling must be a bijection onto [n]");
    less_.assign(n_, std::vector<char>(n_, 0));
    below_.assign(n_, {});
    for (auto [s, t] : covers_) {
      if (s < 0 || t < 0 || s >= n_ || t >= n_ || s == t) throw DomainError("cover relation out of range");
      less_[s][t] = 1;
      below_[t].push_back(s);
    }
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i)
        if (less_[i][k])
          for (int j = 0; j < n_; ++j)
            if (less_[k][j]) less_[i][j] = 1;
    for (int i = 0; i < n_; ++i)
      if (less_[i][i]) throw DomainError("cover relation has a cycle");
    // keep only covering pairs
    covers_.clear();
    for (auto& b : below_) b.clear();
    for (int s = 0; s < n_; ++s)
      for (int t = 0; t < n_; ++t) {
        if (!less_[s][t]) continue;
        bool cover = true;
        for (int z = 0; z < n_ && cover; ++z)
          if (less_[s][z] && less_[z][t]) cover = false;
        if (cover) {
          covers_.push_back({s, t});
          below_[t].push_back(s);
        }
      }
    std::vector<int> indeg(n_, 0);
    for (int t = 0; t < n_; ++t) indeg[t] = int(below_[t].size());
    std::vector<std::vector<int>> above(n_);
    for (auto [s, t] : covers_) above[s].push_back(t);
    std::vector<int> ready;
    for (int i = 0; i < n_; ++i)
      if (!indeg[i]) ready.push_back(i);
    while (!ready.empty()) {
      std::sort(ready.rbegin(), ready.rend());
      int x = ready.back();
      ready.pop_back();
      order_.push_back(x);
      for (int t : above[x])
        if (--indeg[t] == 0) ready.push_back(t);
    }
  }

  int size() const { return n_; }
  std::vector<std::pair<int, int>> const& covers() const { return covers_; }
  std::vector<int> const& theta() const { return theta_; }
  bool less(int s, int t) const { return less_[s][t]; }
  /// Elements covered by t.
  std::vector<int> const& lower_covers(int t) const { return below_[t]; }
  /// A linear extension.
  std::vector<int> const& topological_order() const { return order_; }

  int element_with_label(int label) const {
    for (int i = 0; i < n_; ++i)
      if (theta_[i] == label) return i;
    throw DomainError("no element carries that label");
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<int> theta_;
  std::vector<std::vector<char>> less_;
  std::vector<std::vector<int>> below_;
  std::vector<int> order_;
};

/// Poset of cells of a skew shape (a cell is below its right and lower
/// neighbours) labelled bottom row first, left to right within rows.
inline LabeledPoset shape_poset(SkewShape const& s) {
  auto cs = s.cells();
  std::map<Cell, int> idx;
  for (std::size_t i = 0; i < cs.size(); ++i) idx[cs[i]] = int(i);
  std::vector<std::pair<int, int>> covers;
  for (auto const& x : cs) {
    auto r = idx.find({x.r, x.c + 1});
    if (r != idx.end()) covers.push_back({idx[x], r->second});
    auto d = idx.find({x.r + 1, x.c});
    if (d != idx.end()) covers.push_back({idx[x], d->second});
  }
  std::vector<int> theta(cs.size());
  int label = 0;
  for (int r = s.rows(); r >= 1; --r)
    for (int c = s.row_start(r); c <= s.row_end(r); ++c) theta[idx[{r, c}]] = ++label;
  return LabeledPoset(int(cs.size()), covers, theta);
}

/// Chain c_1 < ... < c_l labelled compatibly with a word without equal
/// adjacent letters (only the descents of the word matter).
inline LabeledPoset chain_poset(Word const& w) {
  if (has_adjacent_repeat(w)) throw DomainError("chain labels need distinct adjacent letters");
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < int(w.size()); ++i) covers.push_back({i, i + 1});
  return LabeledPoset(int(w.size()), covers, canonical_word(descent_composition(w)));
}

using SetFilling = std::vector<std::vector<int>>;

inline bool is_svpp(LabeledPoset const& P, SetFilling const& s) {
  if (int(s.size()) != P.size()) return false;
  for (auto const& a : s) {
    if (a.empty() || a.front() < 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
      if (a[i] <= a[i - 1]) return false;
  }
  for (auto [x, y] : P.covers()) {
    bool weak = P.theta()[x] < P.theta()[y];
    if (weak ? s[x].back() > s[y].front() : s[x].back() >= s[y].front()) return false;
  }
  return true;
}

/// Set-valued (P, theta)-partitions with values in [max_entry] using at most
/// max_letters letters in total.
template <class F>
void for_each_svpp(LabeledPoset const& P, int max_letters, int max_entry, F&& f) {
  int n = P.size();
  SetFilling s(n);
  auto const& order = P.topological_order();
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      f(std::as_const(s));
      return;
    }
    int x = order[i];
    int lo = 1;
    for (int y : P.lower_covers(x)) lo = std::max(lo, s[y].back() + (P.theta()[y] > P.theta()[x] ? 1 : 0));
    detail::for_each_letter_set(lo, max_entry, max_letters - used - (n - i - 1), false, [&](std::vector<int> const& v) {
      s[x] = v;
      self(self, i + 1, used + int(v.size()));
    });
  };
  rec(rec, 0, 0);
}

inline std::vector<SetFilling> enumerate_svpp(LabeledPoset const& P, int max_letters, int max_entry) {
  std::vector<SetFilling> out;
  for_each_svpp(P, max_letters, max_entry, [&](SetFilling const& s) { out.push_back(s); });
  return out;
}

inline std::vector<int> letter_counts(SetFilling const& s) {
  std::vector<int> w;
  for (auto const& a : s)
    for (int v : a) {
      if (int(w.size()) < v) w.resize(v, 0);
      ++w[v - 1];
    }
  return w;
}

/// Generating function of set-valued (P, theta)-partitions in the window.
inline TruncPoly gen_Ktilde(LabeledPoset const& P, int nvars, int maxdeg) {
  TruncPoly p(nvars, maxdeg);
  for_each_svpp(P, maxdeg, nvars, [&](SetFilling const& s) {
    Exponent e;
    weight_exponent(letter_counts(s), nvars, e);
    p.add(e, 1);
  });
  return p;
}

/// Generating function of ordinary (P, theta)-partitions in the window.
inline TruncPoly gen_K(LabeledPoset const& P, int nvars, int maxdeg) {
  TruncPoly p(nvars, maxdeg);
  if (P.size() > maxdeg) return p;
  for_each_svpp(P, P.size(), nvars, [&](SetFilling const& s) {
    Exponent e;
    weight_exponent(letter_counts(s), nvars, e);
    p.add(e, 1);
  });
  return p;
}

/// Words theta(e^{-1}(1)) ... theta(e^{-1}(N)) over linear multi-extensions e, sorted.
inline std::vector<Word> multi_jordan_holder(LabeledPoset const& P, int N) {
  int n = P.size();
  std::vector<Word> out;
  if (N < n) return out;
  std::vector<int> uses(n, 0), closed(n, 0);
  Word elems;
  int unused = n;
  auto rec = [&](auto&& self) -> void {
    int p = int(elems.size());
    if (p == N) {
      if (unused == 0) {
        Word w;
        for (int x : elems) w.push_back(P.theta()[x]);
        out.push_back(w);
      }
      return;
    }
    if (N - p < unused) return;
    for (int x = 0; x < n; ++x) {
      if (closed[x] || (!elems.empty() && elems.back() == x)) continue;
      bool ok = true;
      for (int y = 0; y < n && ok; ++y)
        if (P.less(y, x) && !uses[y]) ok = false;
      if (!ok) continue;
      std::vector<int> newly;
      for (int y = 0; y < n; ++y)
        if (P.less(y, x) && !closed[y]) {
          closed[y] = 1;
          newly.push_back(y);
        }
      if (uses[x]++ == 0) --unused;
      elems.push_back(x);
      self(self);
      elems.pop_back();
      if (--uses[x] == 0) ++unused;
      for (int y : newly) closed[y] = 0;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of words of multi_jordan_holder(P, N) with a descent at i, for i = 1..N-1.
inline std::vector<Integer> descent_profile(LabeledPoset const& P, int N) {
  std::vector<Integer> d(std::max(0, N - 1), 0);
  for (auto const& w : multi_jordan_holder(P, N))
    for (int i : descent_set(w).elems) d[i - 1] += 1;
  return d;
}

/// Whether w is the word of a linear multi-extension of P.
inline bool is_multi_extension_word(LabeledPoset const& P, Word const& w) {
  int n = P.size();
  if (has_adjacent_repeat(w)) return false;
  std::vector<int> first(n, -1), last(n, -1);
  for (int p = 0; p < int(w.size()); ++p) {
    if (w[p] < 1 || w[p] > n) return false;
    int x = P.element_with_label(w[p]);
    if (first[x] < 0) first[x] = p;
    last[x] = p;
  }
  for (int x = 0; x < n; ++x)
    if (first[x] < 0) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (P.less(x, y) && last[x] > first[y]) return false;
  return true;
}

struct MultiExtensionPair {
  Word word;                 ///< word of a linear multi-extension
  SetFilling chain_values;   ///< set-valued partition of the chain labelled by word
  friend bool operator==(MultiExtensionPair const&, MultiExtensionPair const&) = default;
};

/// Splits a set-valued (P, theta)-partition into a multi-extension word and a
/// set-valued partition of the chain labelled by that word.
inline MultiExtensionPair multippart_forward(LabeledPoset const& P, SetFilling const& sigma) {
  if (!is_svpp(P, sigma)) throw DomainError("not a set-valued (P,theta)-partition");
  int top = 0;
  for (auto const& a : sigma) top = std::max(top, a.back());
  Word ws;
  std::vector<int> source;  // value r that contributed each letter
  for (int r = 1; r <= top; ++r) {
    Word part;
    for (int x = 0; x < P.size(); ++x)
      if (std::binary_search(sigma[x].begin(), sigma[x].end(), r)) part.push_back(P.theta()[x]);
    std::sort(part.begin(), part.end());
    for (int l : part) {
      ws.push_back(l);
      source.push_back(r);
    }
  }
  MultiExtensionPair out;
  for (std::size_t p = 0; p < ws.size(); ++p) {
    if (p == 0 || ws[p] != ws[p - 1]) {
      out.word.push_back(ws[p]);
      out.chain_values.emplace_back();
    }
    auto& vals = out.chain_values.back();
    if (vals.empty() || vals.back() != source[p]) vals.push_back(source[p]);
  }
  return out;
}

inline SetFilling multippart_backward(LabeledPoset const& P, MultiExtensionPair const& pr) {
  if (!is_multi_extension_word(P, pr.word)) throw DomainError("word is not a linear multi-extension word");
  if (!is_svpp(chain_poset(pr.word), pr.chain_values)) throw DomainError("chain values are not a set-valued partition");
  SetFilling sigma(P.size());
  for (std::size_t j = 0; j < pr.word.size(); ++j) {
    auto& s = sigma[P.element_with_label(pr.word[j])];
    s.insert(s.end(), pr.chain_values[j].begin(), pr.chain_values[j].end());
  }
  for (auto& s : sigma) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return sigma;
}

/// Balanced: the coefficients of M_{(1^i,2,1^{n-2-i})} agree in each degree n.
inline bool is_balanced(BasisElement const& f) {
  LinComb<Composition> m;
  if (f.basis == "M") {
    m = f.coeffs;
  } else if (f.basis == "L") {
    m = fundamental_to_monomial(f.coeffs);
  } else {
    throw DomainError("balance test needs an L or M expansion");
  }
  std::set<int> degrees;
  for (auto const& [a, c] : m) degrees.insert(size(a));
  for (int n : degrees) {
    if (n < 2) continue;
    std::optional<Integer> ref;
    for (int i = 0; i <= n - 2; ++i) {
      Composition a(i, 1);
      a.push_back(2);
      a.insert(a.end(), n - 2 - i, 1);
      Integer c = m.coeff(a);
      if (ref && *ref != c) return false;
      ref = c;
    }
  }
  return true;
}

}  // namespace khopf
