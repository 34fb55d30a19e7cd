#pragma once

// Brute-force reference implementations used only by the tests. They follow
// the defining conditions directly and share no code paths with the library
// routines they check.

#include <array>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <khopf/khopf.hpp>

namespace oracle {

using namespace khopf;

inline constexpr unsigned default_seed = 20240611u;

/// Multishuffles by exhaustive search over placeholder words.
inline WordSum multishuffle(Word const& u, Word const& v, int cap) {
  int k = int(u.size()), l = int(v.size());
  int alpha = k + l;  // placeholders 0..k-1 for u, k..k+l-1 for v
  WordSum out;
  std::vector<int> ph;
  auto check = [&]() {
    for (std::size_t i = 0; i + 1 < ph.size(); ++i)
      if (ph[i] == ph[i + 1]) return false;
    auto restricted_ok = [&](int lo, int hi) {
      std::vector<int> r;
      for (int x : ph)
        if (x >= lo && x < hi) r.push_back(x);
      std::vector<int> runs;
      for (int x : r)
        if (runs.empty() || runs.back() != x) runs.push_back(x);
      if (int(runs.size()) != hi - lo) return false;
      for (int i = 0; i < hi - lo; ++i)
        if (runs[i] != lo + i) return false;
      return true;
    };
    return restricted_ok(0, k) && restricted_ok(k, k + l);
  };
  auto rec = [&](auto&& self) -> void {
    if (check()) {
      Word w;
      for (int x : ph) w.push_back(x < k ? u[x] : v[x - k]);
      out.add(w, 1);
    }
    if (int(ph.size()) == cap) return;
    for (int x = 0; x < alpha; ++x) {
      ph.push_back(x);
      self(self);
      ph.pop_back();
    }
  };
  rec(rec);
  return out;
}

/// Standardization of a set composition by applying the two local rules in a random order.
inline SetComposition standardize_by_rules(SetComposition w, std::mt19937& rng) {
  while (true) {
    std::set<int> letters;
    std::map<int, int> block;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (int x : w[i]) {
        letters.insert(x);
        block[x] = int(i);
      }
    int top = letters.empty() ? 0 : *letters.rbegin();
    std::vector<std::pair<int, int>> moves;  // (rule, i)
    for (int i = 1; i < top; ++i) {
      if (letters.count(i) && letters.count(i + 1) && block[i] == block[i + 1]) moves.push_back({1, i});
      if (!letters.count(i)) moves.push_back({2, i});
    }
    if (moves.empty()) return w;
    auto [rule, i] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    if (rule == 1) {
      auto& b = w[block[i + 1]];
      b.erase(std::find(b.begin(), b.end(), i + 1));
      for (auto& bb : w)
        for (auto& x : bb)
          if (x > i + 1) --x;
    } else {
      for (auto& bb : w)
        for (auto& x : bb)
          if (x > i) --x;
    }
  }
}

/// Linear multi-extension words by trying every map [N] -> P.
inline std::vector<Word> multi_jordan_holder(LabeledPoset const& P, int N) {
  int n = P.size();
  std::vector<Word> out;
  std::vector<int> f(N, 0);
  long long total = 1;
  for (int i = 0; i < N; ++i) total *= n;
  for (long long code = 0; code < total && n > 0; ++code) {
    long long c = code;
    for (int i = 0; i < N; ++i) {
      f[i] = int(c % n);
      c /= n;
    }
    bool ok = true;
    std::vector<int> mn(n, N), mx(n, -1);
    for (int i = 0; i < N; ++i) {
      mn[f[i]] = std::min(mn[f[i]], i);
      mx[f[i]] = std::max(mx[f[i]], i);
      if (i + 1 < N && f[i] == f[i + 1]) ok = false;
    }
    for (int x = 0; x < n && ok; ++x)
      if (mx[x] < 0) ok = false;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (P.less(x, y) && mx[x] >= mn[y]) ok = false;
    if (!ok) continue;
    Word w;
    for (int i = 0; i < N; ++i) w.push_back(P.theta()[f[i]]);
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Set-valued (P,theta)-partitions by trying every assignment of nonempty subsets.
inline std::vector<std::vector<std::vector<int>>> svpp(LabeledPoset const& P, int max_letters, int max_entry) {
  int n = P.size();
  std::vector<std::vector<int>> subsets;
  for (unsigned m = 1; m < (1u << max_entry); ++m) {
    std::vector<int> s;
    for (int i = 0; i < max_entry; ++i)
      if (m & (1u << i)) s.push_back(i + 1);
    subsets.push_back(s);
  }
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<std::vector<int>> s(n);
    int letters = 0;
    for (int i = 0; i < n; ++i) {
      s[i] = subsets[pick[i]];
      letters += int(s[i].size());
    }
    bool ok = letters <= max_letters;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        if (!P.less(x, y)) continue;
        bool is_cover = true;
        for (int z = 0; z < n; ++z)
          if (P.less(x, z) && P.less(z, y)) is_cover = false;
        if (!is_cover) continue;
        if (P.theta()[x] < P.theta()[y] ? s[x].back() > s[y].front() : s[x].back() >= s[y].front()) ok = false;
      }
    if (ok) out.push_back(s);
    int i = 0;
    while (i < n && ++pick[i] == subsets.size()) pick[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Number of semistandard tableaux of shape lambda with entries <= n (hook-content formula).
inline Integer hook_content(Partition const& lambda, int n) {
  Integer num = 1, den = 1;
  auto conj = conjugate(lambda);
  for (int i = 1; i <= int(lambda.size()); ++i)
    for (int j = 1; j <= lambda[i - 1]; ++j) {
      num *= n + j - i;
      den *= (lambda[i - 1] - j) + (conj[j - 1] - i) + 1;
    }
  return num / den;
}

/// Random labelled poset on n elements: random DAG on a random order, random labelling.
inline LabeledPoset random_poset(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> rel;
  std::bernoulli_distribution coin(0.4);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) rel.push_back({perm[i], perm[j]});
  std::vector<int> theta(n);
  for (int i = 0; i < n; ++i) theta[i] = i + 1;
  std::shuffle(theta.begin(), theta.end(), rng);
  return LabeledPoset(n, rel, theta);
}

/// Every partial order on {0..n-1} labelled by theta(i) = i+1. Up to isomorphism
/// this is every labelled poset on n elements.
inline std::vector<LabeledPoset> labelled_posets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.push_back({i, j});
  std::vector<int> ident(n);
  for (int i = 0; i < n; ++i) ident[i] = i + 1;
  std::vector<LabeledPoset> out;
  for (unsigned long m = 0; m < (1ul << pairs.size()); ++m) {
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    std::vector<std::pair<int, int>> list;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (m & (1ul << k)) {
        rel[pairs[k].first][pairs[k].second] = 1;
        list.push_back(pairs[k]);
      }
    bool order = true;
    for (int a = 0; a < n && order; ++a)
      for (int b = 0; b < n && order; ++b) {
        if (rel[a][b] && rel[b][a]) order = false;
        for (int c = 0; c < n && order; ++c)
          if (rel[a][b] && rel[b][c] && !rel[a][c]) order = false;
      }
    if (order) out.push_back(LabeledPoset(n, list, ident));
  }
  return out;
}

}  // namespace oracle
