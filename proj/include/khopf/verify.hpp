#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hopf.hpp"
#include "io.hpp"
#include "operators.hpp"
#include "ppartitions.hpp"
#include "series.hpp"
#include "shapes.hpp"
#include "tableaux.hpp"
#include "words.hpp"

namespace khopf::verify {

struct Result {
  std::string module;
  std::string property;
  bool ok = true;
  std::string detail;
};

struct Options {
  /// 0 = small, 1 = medium
  int size = 0;
  unsigned seed = 20240611u;
};

namespace detail {

inline Result run(std::string module, std::string property, std::function<std::string()> const& body) {
  Result r{std::move(module), std::move(property), true, {}};
  try {
    r.detail = body();
    r.ok = r.detail.empty();
  } catch (std::exception const& e) {
    r.ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

inline std::string show(std::vector<int> const& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline bool connected(SkewShape const& s) {
  auto cs = s.cells();
  if (cs.empty()) return true;
  std::set<std::pair<int, int>> left;
  for (auto const& x : cs) left.insert({x.r, x.c});
  std::vector<std::pair<int, int>> stack{*left.begin()};
  left.erase(left.begin());
  while (!stack.empty()) {
    auto [r, c] = stack.back();
    stack.pop_back();
    for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      auto it = left.find({r + dr, c + dc});
      if (it == left.end()) continue;
      stack.push_back(*it);
      left.erase(it);
    }
  }
  return left.empty();
}

inline bool has_square(SkewShape const& s) {
  for (auto const& x : s.cells())
    if (s.contains({x.r + 1, x.c}) && s.contains({x.r, x.c + 1}) && s.contains({x.r + 1, x.c + 1})) return true;
  return false;
}

/// Standardization by random application of the two reduction rules: merge i+1 into the
/// block of i when they share a block, or close the gap left by a missing letter i.
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
    std::vector<std::pair<int, int>> moves;
    for (int i = 1; i < top; ++i) {
      if (letters.count(i) && letters.count(i + 1) && block[i] == block[i + 1]) moves.push_back({1, i});
      if (!letters.count(i)) moves.push_back({2, i});
    }
    if (moves.empty()) return w;
    auto [rule, i] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    if (rule == 1) {
      auto& b = w[block[i + 1]];
      b.erase(std::find(b.begin(), b.end(), i + 1));
    }
    int above = rule == 1 ? i + 1 : i;
    for (auto& bb : w)
      for (auto& x : bb)
        if (x > above) --x;
  }
}

/// Every partial order on {0..n-1} contained in the numeric order, i.e. every poset up to
/// relabelling, with its natural linear extension as element order.
inline std::vector<std::vector<std::pair<int, int>>> natural_orders(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<std::vector<std::pair<int, int>>> out;
  for (unsigned m = 0; m < (1u << pairs.size()); ++m) {
    std::set<std::pair<int, int>> rel;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (m & (1u << k)) rel.insert(pairs[k]);
    bool transitive = true;
    for (auto [a, b] : rel)
      for (auto [c, d] : rel)
        if (b == c && !rel.count({a, d})) transitive = false;
    if (transitive) out.emplace_back(rel.begin(), rel.end());
  }
  return out;
}

inline TruncPoly elementary(int k, int nvars, int maxdeg) {
  TruncPoly p(nvars, maxdeg);
  if (k > maxdeg || k > nvars) return p;
  std::vector<int> pick(nvars, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do p.add(pick, 1);
  while (std::next_permutation(pick.begin(), pick.end()));
  return p;
}

inline bool symmetric(TruncPoly const& p) {
  for (auto const& [e, c] : p.terms())
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      auto f = e;
      std::swap(f[i], f[i + 1]);
      if (p.coeff(f) != c) return false;
    }
  return true;
}

/// Coefficient of x^e depends only on the nonzero parts of e read left to right.
inline bool quasisymmetric(TruncPoly const& p) {
  std::map<std::vector<int>, std::pair<Integer, std::size_t>> seen;
  for (auto const& [e, c] : p.terms()) {
    std::vector<int> flat;
    for (int x : e)
      if (x) flat.push_back(x);
    auto [it, fresh] = seen.insert({flat, {c, 0}});
    if (!fresh && it->second.first != c) return false;
    ++it->second.second;
  }
  for (auto const& [flat, cc] : seen)
    if (Integer(cc.second) != binomial(p.nvars(), int(flat.size()))) return false;
  return true;
}

inline PartitionVector operator_step(Engine e, int i, PartitionVector const& x) {
  return e == Engine::diagonal ? apply_v(i, x) : apply_u(i, x);
}

}  // namespace detail

inline std::vector<Result> shapes_suite(Options const& o) {
  std::vector<Result> out;
  int n = 5 + o.size;
  out.push_back(detail::run("shapes", "composition/descent-set round trip", [&]() -> std::string {
    for (auto const& a : compositions_up_to(n))
      if (composition_of(descents(a)) != a) return "fails at " + detail::show(a);
    return {};
  }));
  out.push_back(detail::run("shapes", "ribbon glue matches composition glue", [&]() -> std::string {
    for (auto const& a : compositions_up_to(n - 1))
      for (auto const& b : compositions_up_to(n - 1)) {
        if (a.empty() || b.empty() || size(a) + size(b) > n) continue;
        for (auto mode : {Glue::right, Glue::above, Glue::coincide})
          if (ribbon_glue(ribbon(a), ribbon(b), mode) != normalized(ribbon(glue(a, b, mode))))
            return "fails at " + detail::show(a) + " " + detail::show(b);
      }
    return {};
  }));
  out.push_back(detail::run("shapes", "ribbon has one cell per letter", [&]() -> std::string {
    for (auto const& a : compositions_up_to(n))
      if (!a.empty() && ribbon(a).size() != size(a)) return "fails at " + detail::show(a);
    return {};
  }));
  out.push_back(detail::run("shapes", "compositions and descent sets are mutually inverse", [&]() -> std::string {
    int big = o.size ? 12 : 9;
    for (auto const& a : compositions_of(big))
      if (composition_of(descents(a)) != a) return "fails at " + detail::show(a);
    return {};
  }));
  out.push_back(detail::run("shapes", "ribbons are connected and 2x2-free", [&]() -> std::string {
    for (auto const& a : compositions_up_to(o.size ? 10 : 7)) {
      if (a.empty()) continue;
      auto r = ribbon(a);
      if (!detail::connected(r) || detail::has_square(r)) return "fails at " + detail::show(a);
    }
    return {};
  }));
  out.push_back(detail::run("shapes", "ribbon glue size identities", [&]() -> std::string {
    std::mt19937 rng(o.seed);
    auto pool = compositions_up_to(5);
    std::uniform_int_distribution<std::size_t> pick(1, pool.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      auto const& a = pool[pick(rng)];
      auto const& b = pool[pick(rng)];
      auto ra = ribbon(a), rb = ribbon(b);
      if (ribbon_glue(ra, rb, Glue::right).size() != ra.size() + rb.size()) return "right glue";
      if (ribbon_glue(ra, rb, Glue::above).size() != ra.size() + rb.size()) return "glue above";
      if (ribbon_glue(ra, rb, Glue::coincide).size() != ra.size() + rb.size() - 1) return "coincident glue";
    }
    return {};
  }));
  return out;
}

inline std::vector<Result> words_suite(Options const& o) {
  std::vector<Result> out;
  int m = 2 + o.size;
  std::mt19937 rng(o.seed);
  std::vector<Word> small;
  for (int l = 0; l <= m; ++l)
    for (auto const& w : mperms_of_length(l)) small.push_back(w);
  std::vector<SetComposition> big;
  for (int l = 0; l <= m; ++l)
    for (auto const& w : Mperms_of_size(l)) big.push_back(w);
  out.push_back(detail::run("words", "mMR bialgebra compatibility", [&]() -> std::string {
    int cap = 2 * m + 1;
    for (auto const& w : small)
      for (auto const& u : small) {
        Tensor<Word> lhs;
        for (auto const& [z, c] : mmr_product(w, u, cap).terms)
          for (auto const& [t, ct] : mmr_coproduct(z)) lhs.add(t, c * ct);
        Tensor<Word> rhs;
        for (auto const& [a, ca] : mmr_coproduct(w))
          for (auto const& [b, cb] : mmr_coproduct(u))
            for (auto const& [x, cx] : mmr_product(a.first, b.first, cap).terms)
              for (auto const& [y, cy] : mmr_product(a.second, b.second, cap).terms) rhs.add({x, y}, ca * cb * cx * cy);
        auto keep = [&](std::pair<Word, Word> const& k) { return int(k.first.size() + k.second.size()) <= cap; };
        if (!(lhs.filtered(keep) == rhs.filtered(keep))) return "fails at " + detail::show(w) + " " + detail::show(u);
      }
    return {};
  }));
  out.push_back(detail::run("words", "MMR product routes agree", [&]() -> std::string {
    for (auto const& w : big)
      for (auto const& u : big)
        if (!(mmr_big_product(w, u) == mmr_big_product_by_restriction(w, u))) return "routes disagree";
    return {};
  }));
  out.push_back(detail::run("words", "MMR antipode axiom", [&]() -> std::string {
    for (auto const& w : big) {
      SetCompSum acc;
      for (auto const& [t, c] : mmr_big_coproduct(w)) {
        SetCompSum right;
        right.add(t.second, 1);
        acc += c * mmr_big_product(mmr_antipode(t.first), right);
      }
      SetCompSum expect;
      if (w.empty()) expect.add({}, 1);
      if (!(acc == expect)) return "antipode fails";
    }
    return {};
  }));
  out.push_back(detail::run("words", "standardization commutes with inversion", [&]() -> std::string {
    std::uniform_int_distribution<int> len(1, 6), letter(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
      Word u;
      int l = len(rng);
      while (int(u.size()) < l) {
        int x = letter(rng);
        if (u.empty() || u.back() != x) u.push_back(x);
      }
      SetComposition inv;
      std::vector<int> vals(u.begin(), u.end());
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      for (int v : vals) {
        Block b;
        for (std::size_t p = 0; p < u.size(); ++p)
          if (u[p] == v) b.push_back(int(p) + 1);
        inv.push_back(b);
      }
      if (invert(standardize(u)) != standardize(inv)) return "fails";
    }
    return {};
  }));
  out.push_back(detail::run("words", "factorization reassembles", [&]() -> std::string {
    for (auto const& w : big) {
      SetComposition back;
      int base = 0;
      for (auto const& f : factor(w)) {
        auto s = shifted(f, base);
        back.insert(back.end(), s.begin(), s.end());
        base += ground_size(f);
      }
      if (back != w) return "fails";
    }
    return {};
  }));
  out.push_back(detail::run("words", "multishuffle is commutative and associative", [&]() -> std::string {
    int len = 3 + o.size, cap = 2 * len;
    std::uniform_int_distribution<int> l(0, len), letter(1, 3);
    auto random_word = [&] {
      Word w;
      int n = l(rng);
      while (int(w.size()) < n) {
        int x = letter(rng);
        if (w.empty() || w.back() != x) w.push_back(x);
      }
      return w;
    };
    for (int trial = 0; trial < 15; ++trial) {
      auto u = random_word(), v = random_word(), w = random_word();
      if (!(multishuffle(u, v, cap) == multishuffle(v, u, cap))) return "not commutative";
      WordSum left, right;
      for (auto const& [x, c] : multishuffle(u, v, cap))
        for (auto const& [y, d] : multishuffle(x, w, cap)) left.add(y, c * d);
      for (auto const& [x, c] : multishuffle(v, w, cap))
        for (auto const& [y, d] : multishuffle(u, x, cap)) right.add(y, c * d);
      if (!(left == right)) return "not associative";
    }
    return {};
  }));
  out.push_back(detail::run("words", "MMR bialgebra compatibility", [&]() -> std::string {
    for (auto const& w : big)
      for (auto const& u : big) {
        if (ground_size(w) + ground_size(u) > 3 + o.size) continue;
        Tensor<SetComposition> lhs;
        for (auto const& [z, c] : mmr_big_product(w, u))
          for (auto const& [t, d] : mmr_big_coproduct(z)) lhs.add(t, c * d);
        if (!(lhs == tensor_product(mmr_big_coproduct(w), mmr_big_coproduct(u)))) return "fails";
      }
    return {};
  }));
  out.push_back(detail::run("words", "MMR product is associative", [&]() -> std::string {
    std::uniform_int_distribution<std::size_t> pick(0, big.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      auto const& x = big[pick(rng)];
      auto const& y = big[pick(rng)];
      auto const& z = big[pick(rng)];
      SetCompSum sx, sz;
      sx.add(x, 1);
      sz.add(z, 1);
      if (!(mmr_big_product(mmr_big_product(x, y), sz) == mmr_big_product(sx, mmr_big_product(y, z)))) return "fails";
    }
    return {};
  }));
  out.push_back(detail::run("words", "mMR and MMR structure constants transpose", [&]() -> std::string {
    int cap = 2 * m + 1;
    for (auto const& u : small)
      for (auto const& v : small) {
        for (auto const& [w, c] : mmr_product(u, v, cap).terms)
          if (mmr_big_coproduct(invert(w)).coeff({invert(u), invert(v)}) != c) return "product vs coproduct";
        for (auto const& [z, c] : mmr_big_product(invert(u), invert(v)))
          if (mmr_coproduct(invert(z)).coeff({u, v}) != c) return "coproduct vs product";
      }
    for (auto const& w : small) {
      for (auto const& [t, c] : mmr_coproduct(w))
        if (mmr_big_product(invert(t.first), invert(t.second)).coeff(invert(w)) != c) return "missing product term";
      for (auto const& [t, c] : mmr_big_coproduct(invert(w))) {
        if (int(invert(t.first).size() + invert(t.second).size()) > cap) continue;
        if (mmr_product(invert(t.first), invert(t.second), cap).terms.coeff(w) != c) return "missing coproduct term";
      }
    }
    return {};
  }));
  out.push_back(detail::run("words", "set composition standardization is confluent", [&]() -> std::string {
    std::uniform_int_distribution<int> blocks(1, 4), letter(1, 12);
    for (int trial = 0; trial < 100; ++trial) {
      std::set<int> used;
      SetComposition w;
      for (int b = blocks(rng); b > 0; --b) {
        Block blk;
        for (int t = 1 + letter(rng) % 3; t > 0; --t) {
          int x = letter(rng);
          if (used.insert(x).second) blk.push_back(x);
        }
        if (!blk.empty()) w.push_back(blk);
      }
      w = canonical(w);
      auto expect = standardize(w);
      for (int rep = 0; rep < 3; ++rep)
        if (canonical(detail::standardize_by_rules(w, rng)) != expect) return "rule orders disagree";
    }
    return {};
  }));
  out.push_back(detail::run("words", "irreducible factorization is unique", [&]() -> std::string {
    for (int n = 0; n <= 3 + o.size; ++n)
      for (auto const& w : Mperms_of_size(n)) {
        std::size_t found = 0;
        std::vector<SetComposition> cur, first;
        auto rec = [&](auto&& self, std::size_t start, int base) -> void {
          if (start == w.size()) {
            if (found++ == 0) first = cur;
            return;
          }
          for (std::size_t end = start + 1; end <= w.size(); ++end) {
            auto sh = shifted(SetComposition(w.begin() + start, w.begin() + end), -base);
            if (!is_full_set_composition(sh)) continue;
            bool irreducible = true;
            for (std::size_t k = 1; k < sh.size(); ++k)
              if (is_full_set_composition(SetComposition(sh.begin(), sh.begin() + k))) irreducible = false;
            if (!irreducible) continue;
            cur.push_back(sh);
            self(self, end, base + ground_size(sh));
            cur.pop_back();
          }
        };
        rec(rec, 0, 0);
        if (found != 1 || factor(w) != first) return "not unique";
      }
    return {};
  }));
  return out;
}

inline std::vector<Result> tableaux_suite(Options const& o) {
  std::vector<Result> out;
  int n = 4 + o.size;
  out.push_back(detail::run("tableaux", "gschur bijection round trip", [&]() -> std::string {
    for (auto const& lam : partitions_up_to(n)) {
      std::string err;
      for_each_rpp(SkewShape(lam), 3, [&](IntTableau const& t) {
        if (!err.empty()) return;
        auto p = gschur_forward(t);
        if (weight(p.S, TableauKind::ssyt) != weight(t, TableauKind::rpp)) err = "weight mismatch";
        if (!(gschur_backward(p) == t)) err = "round trip fails at " + detail::show(lam);
      });
      if (!err.empty()) return err;
    }
    return {};
  }));
  out.push_back(detail::run("tableaux", "enumerated fillings are valid", [&]() -> std::string {
    for (auto const& lam : partitions_up_to(3)) {
      SkewShape s(lam);
      bool ok = true;
      for_each_svt(s, {3, 5}, [&](SetTableau const& t) { ok = ok && is_valid(t, TableauKind::svt); });
      for_each_weak_svt(s, {3, 5}, [&](SetTableau const& t) { ok = ok && is_valid(t, TableauKind::weak_svt); });
      for_each_valued_set(s, {3, 5}, [&](ValuedSetTableau const& t) { ok = ok && is_valid(t); });
      if (!ok) return "invalid filling for " + detail::show(lam);
    }
    return {};
  }));
  out.push_back(detail::run("tableaux", "reverse plane partitions sum to elegant-weighted Schur functions", [&]() -> std::string {
    int k = 3 + o.size;
    for (auto const& lam : partitions_up_to(n)) {
      if (lam.empty()) continue;
      int D = size(lam);
      TruncPoly lhs(k, D), rhs(k, D);
      for_each_rpp(SkewShape(lam), k, [&](IntTableau const& t) {
        auto w = weight(t, TableauKind::rpp);
        Exponent e(k, 0);
        std::copy(w.begin(), w.end(), e.begin());
        lhs.add(e, 1);
      });
      for (auto const& mu : subpartitions(lam)) rhs += elegant_count(lam, mu) * schur(mu, k, D);
      if (!(lhs == rhs)) return "fails at " + detail::show(lam);
    }
    return {};
  }));
  out.push_back(detail::run("tableaux", "signed set-valued fillings of one box give alternating elementaries", [&]() -> std::string {
    int D = 4;
    TruncPoly lhs(D, D), rhs(D, D);
    for_each_svt(SkewShape({1}), {D, D}, [&](SetTableau const& t) {
      Exponent e(D, 0);
      for (int x : t.entries[0]) e[x - 1] += 1;
      lhs.add(e, t.entries[0].size() % 2 ? 1 : -1);
    });
    for (int k = 1; k <= D; ++k) rhs += Integer(k % 2 ? 1 : -1) * detail::elementary(k, D, D);
    if (!(lhs == rhs) || !(G_poly(SkewShape({1}), D, D) == rhs)) return "fails";
    return {};
  }));
  return out;
}

inline std::vector<Result> series_suite(Options const& o) {
  std::vector<Result> out;
  int n = 3 + o.size;
  out.push_back(detail::run("series", "g expands with elegant counts", [&]() -> std::string {
    for (auto const& lam : partitions_up_to(n)) {
      if (lam.empty()) continue;
      int D = size(lam);
      auto b = expand_symmetric(g_poly(SkewShape(lam), D, D), "s", {});
      for (auto const& mu : subpartitions(lam))
        if (b.coeffs.coeff(mu) != elegant_count(lam, mu)) return "fails at " + detail::show(lam);
    }
    return {};
  }));
  out.push_back(detail::run("series", "Ktilde lowest component is Schur", [&]() -> std::string {
    for (auto const& lam : partitions_up_to(n)) {
      int D = size(lam) + 1;
      if (!(Ktilde_poly(SkewShape(lam), D, D).homogeneous(size(lam)) == schur(lam, D, D))) return "fails at " + detail::show(lam);
    }
    return {};
  }));
  out.push_back(detail::run("series", "omega exchanges Ktilde and J", [&]() -> std::string {
    for (auto const& lam : partitions_up_to(n - 1)) {
      int D = size(lam) + 2;
      auto k = expand_symmetric(Ktilde_poly(SkewShape(lam), D, D), "s", D);
      auto j = expand_symmetric(J_poly(SkewShape(lam), D, D), "s", D);
      if (!(omega(k) == j)) return "fails at " + detail::show(lam);
    }
    return {};
  }));
  out.push_back(detail::run("series", "generated quasisymmetric windows are quasisymmetric", [&]() -> std::string {
    int D = n + 1;
    for (auto const& a : compositions_up_to(D)) {
      if (!detail::quasisymmetric(monomial_qsym(a, D, D))) return "M fails at " + detail::show(a);
      if (!detail::quasisymmetric(fundamental_qsym(a, D, D))) return "L fails at " + detail::show(a);
    }
    return {};
  }));
  out.push_back(detail::run("series", "expansion reconstructs the window", [&]() -> std::string {
    int D = n + 1;
    for (auto const& a : compositions_up_to(D)) {
      auto f = fundamental_qsym(a, D, D) + monomial_qsym(a, D, D);
      TruncPoly back(D, D);
      for (auto const& [b, c] : expand_quasisymmetric(f, "M", D).coeffs) back += c * monomial_qsym(b, D, D);
      if (!(back == f)) return "M fails at " + detail::show(a);
      TruncPoly backL(D, D);
      for (auto const& [b, c] : expand_quasisymmetric(f, "L", D).coeffs) backL += c * fundamental_qsym(b, D, D);
      if (!(backL == f)) return "L fails at " + detail::show(a);
    }
    for (auto const& lam : partitions_up_to(n)) {
      auto f = g_poly(SkewShape(lam), D, D) + G_poly(SkewShape(lam), D, D);
      TruncPoly back(D, D);
      for (auto const& [mu, c] : expand_symmetric(f, "s", D).coeffs) back += c * schur(mu, D, D);
      if (!(back == f)) return "s fails at " + detail::show(lam);
    }
    return {};
  }));
  out.push_back(detail::run("series", "Grothendieck windows are symmetric", [&]() -> std::string {
    for (auto const& s : skew_shapes_up_to(n)) {
      int D = s.size() + 1;
      for (auto const& f : {G_poly(s, D, D), g_poly(s, D, D), J_poly(s, D, D), j_poly(s, D, D)})
        if (!detail::symmetric(f)) return "not symmetric";
    }
    return {};
  }));
  return out;
}

inline std::vector<Result> ppartitions_suite(Options const& o) {
  std::vector<Result> out;
  int cells = 3 + o.size;
  out.push_back(detail::run("ppartitions", "descent profile is constant", [&]() -> std::string {
    for (auto const& s : skew_shapes_up_to(cells)) {
      auto P = shape_poset(s);
      for (int N = s.size(); N <= s.size() + 1; ++N) {
        auto d = descent_profile(P, N);
        for (auto const& x : d)
          if (x != d.front()) return "profile not constant";
      }
    }
    return {};
  }));
  out.push_back(detail::run("ppartitions", "multi-extension bijection round trip", [&]() -> std::string {
    auto P = shape_poset(SkewShape({2, 1}));
    for (auto const& s : enumerate_svpp(P, 5, 3)) {
      auto pr = multippart_forward(P, s);
      if (!is_multi_extension_word(P, pr.word)) return "word is not a multi-extension";
      if (multippart_backward(P, pr) != s) return "round trip fails";
    }
    return {};
  }));
  out.push_back(detail::run("ppartitions", "generating function splits over multi-extensions", [&]() -> std::string {
    auto P = shape_poset(SkewShape({2, 1}));
    int D = 5;
    TruncPoly rhs(D, D);
    for (int N = 3; N <= D; ++N)
      for (auto const& w : multi_jordan_holder(P, N)) rhs += ltilde_poly(descent_composition(w), D, D);
    if (!(gen_Ktilde(P, D, D) == rhs)) return "fails";
    return {};
  }));
  out.push_back(detail::run("ppartitions", "set-valued generating function splits for every labelled poset", [&]() -> std::string {
    int nmax = 3 + o.size, D = nmax + 2;
    std::map<Composition, TruncPoly> window;
    auto L = [&](Composition const& a) -> TruncPoly const& {
      auto it = window.find(a);
      if (it == window.end()) it = window.emplace(a, ltilde_poly(a, D, D)).first;
      return it->second;
    };
    for (int k = 1; k <= nmax; ++k)
      for (auto const& rel : detail::natural_orders(k)) {
        std::vector<int> theta(k);
        for (int i = 0; i < k; ++i) theta[i] = i + 1;
        do {
          LabeledPoset P(k, rel, theta);
          TruncPoly rhs(D, D);
          for (int N = k; N <= D; ++N)
            for (auto const& w : multi_jordan_holder(P, N)) rhs += L(descent_composition(w));
          if (!(gen_Ktilde(P, D, D) == rhs)) return "fails";
        } while (std::next_permutation(theta.begin(), theta.end()));
      }
    return {};
  }));
  out.push_back(detail::run("ppartitions", "singleton values give ordinary P-partitions", [&]() -> std::string {
    int nmax = 3 + o.size, D = nmax + 1;
    for (int k = 1; k <= nmax; ++k)
      for (auto const& rel : detail::natural_orders(k)) {
        std::vector<int> theta(k);
        for (int i = 0; i < k; ++i) theta[i] = i + 1;
        do {
          LabeledPoset P(k, rel, theta);
          TruncPoly rhs(D, D);
          for (auto const& w : multi_jordan_holder(P, k)) rhs += fundamental_qsym(descent_composition(w), D, D);
          if (!(gen_K(P, D, D) == rhs)) return "fails";
        } while (std::next_permutation(theta.begin(), theta.end()));
      }
    return {};
  }));
  return out;
}

inline std::vector<Result> hopf_suite(Options const& o) {
  std::vector<Result> out;
  int n = 2 + o.size;
  out.push_back(detail::run("hopf", "Ltilde product matches polynomial product", [&]() -> std::string {
    int D = 4;
    for (auto const& a : compositions_up_to(n))
      for (auto const& b : compositions_up_to(n)) {
        if (size(a) + size(b) > D) continue;
        TruncPoly rhs(D, D);
        for (auto const& [g, c] : ltilde_product(a, b, D).coeffs) rhs += c * ltilde_poly(g, D, D);
        if (!(ltilde_poly(a, D, D) * ltilde_poly(b, D, D) == rhs)) return "fails at " + detail::show(a) + detail::show(b);
      }
    return {};
  }));
  out.push_back(detail::run("hopf", "pump composition law", [&]() -> std::string {
    for (auto const& a : compositions_up_to(3)) {
      if (a.empty()) continue;
      BasisElement f{"L", {{a, 1}}, {}};
      for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
          auto lhs = pump(pump(f, i), j);
          auto rhs = pump(f, i + j);
          rhs.coeffs *= binomial(i + j, i);
          if (!(lhs.coeffs == rhs.coeffs)) return "fails at " + detail::show(a);
        }
    }
    return {};
  }));
  out.push_back(detail::run("hopf", "Rtilde product matches M-permutation product", [&]() -> std::string {
    for (auto const& a : compositions_up_to(n))
      for (auto const& b : compositions_up_to(n)) {
        if (a.empty() || b.empty()) continue;
        SetCompSum lhs;
        for (auto const& [x, cx] : rtilde(a))
          for (auto const& [y, cy] : rtilde(b)) lhs += (cx * cy) * mmr_big_product(x, y);
        SetCompSum rhs;
        for (auto const& [g, c] : rtilde_product(a, b).coeffs) rhs += c * rtilde(g);
        if (!(lhs == rhs)) return "fails at " + detail::show(a) + detail::show(b);
      }
    return {};
  }));
  out.push_back(detail::run("hopf", "Rtilde to F expansion round trip", [&]() -> std::string {
    for (auto const& a : compositions_up_to(n + 2)) {
      if (a.empty()) continue;
      auto back = rtilde_from_F(rtilde_in_F(a));
      LinComb<std::vector<int>> expect;
      expect.add(a, 1);
      if (!(back.coeffs == expect)) return "fails at " + detail::show(a);
    }
    return {};
  }));
  out.push_back(detail::run("hopf", "Ltilde product is independent of representatives", [&]() -> std::string {
    std::mt19937 rng(o.seed);
    int cap = 6;
    auto pick = [&](Composition const& c) {
      std::vector<Word> cands;
      Word p(size(c));
      for (int i = 0; i < size(c); ++i) p[i] = i + 1;
      do
        if (descent_composition(p) == c) cands.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      return cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
    };
    for (auto const& a : compositions_up_to(n + 1))
      for (auto const& b : compositions_up_to(n + 1)) {
        if (a.empty() || b.empty()) continue;
        auto reference = ltilde_product(a, b, cap).coeffs;
        for (int rep = 0; rep < 3; ++rep) {
          auto u = pick(a), v = pick(b);
          LinComb<Composition> got;
          for (auto const& [w, c] : multishuffle(u, shifted(v, alphabet_size(u)), cap)) got.add(descent_composition(w), c);
          if (!(got == reference)) return "fails at " + detail::show(a) + detail::show(b);
        }
      }
    return {};
  }));
  out.push_back(detail::run("hopf", "Ltilde bialgebra compatibility", [&]() -> std::string {
    int cap = 5;
    auto within = [&](std::pair<Composition, Composition> const& k) { return size(k.first) + size(k.second) <= cap; };
    auto mul = [&](Composition const& p, Composition const& q) {
      LinComb<Composition> r;
      if (p.empty() || q.empty()) r.add(p.empty() ? q : p, 1);
      else r = ltilde_product(p, q, cap).coeffs;
      return r;
    };
    for (auto const& a : compositions_up_to(2))
      for (auto const& b : compositions_up_to(2)) {
        if (a.empty() || b.empty()) continue;
        Tensor<Composition> lhs, rhs;
        for (auto const& [g, c] : ltilde_product(a, b, cap).coeffs)
          for (auto const& [t, d] : ltilde_coproduct(g)) lhs.add(t, c * d);
        for (auto const& [x, cx] : ltilde_coproduct(a))
          for (auto const& [y, cy] : ltilde_coproduct(b))
            for (auto const& [l, cl] : mul(x.first, y.first))
              for (auto const& [r, cr] : mul(x.second, y.second)) rhs.add({l, r}, cx * cy * cl * cr);
        if (!(lhs.filtered(within) == rhs.filtered(within))) return "fails at " + detail::show(a) + detail::show(b);
      }
    return {};
  }));
  out.push_back(detail::run("hopf", "Rtilde product is dual to the Ltilde coproduct", [&]() -> std::string {
    int top = 3 + o.size;
    for (int k = 1; k <= top; ++k)
      for (auto const& g : compositions_of(k)) {
        auto cop = ltilde_coproduct(g);
        for (auto const& a : compositions_up_to(k))
          for (auto const& b : compositions_up_to(k)) {
            if (size(a) + size(b) < k || size(a) + size(b) > k + 1) continue;
            if (rtilde_product(a, b).coeffs.coeff(g) != cop.coeff({a, b})) return "fails at " + detail::show(g);
          }
      }
    return {};
  }));
  out.push_back(detail::run("hopf", "pumps preserve balance", [&]() -> std::string {
    std::mt19937 rng(o.seed);
    for (int trial = 0; trial < 10; ++trial) {
      int D = std::uniform_int_distribution<int>(1, 3 + o.size)(rng);
      auto lams = partitions_of(D);
      auto lam = lams[std::uniform_int_distribution<std::size_t>(0, lams.size() - 1)(rng)];
      auto f = expand_quasisymmetric(g_poly(SkewShape(lam), D, D).homogeneous(D), "M", {});
      if (!is_balanced(f)) return "symmetric input not balanced";
      for (int i = 1; i <= 2; ++i)
        if (!is_balanced(pump(f, i))) return "pump breaks balance at " + detail::show(lam);
    }
    return {};
  }));
  return out;
}

inline std::vector<Result> operators_suite(Options const& o) {
  std::vector<Result> out;
  int n = 3 + o.size;
  out.push_back(detail::run("operators", "operator and tableau generating functions agree", [&]() -> std::string {
    for (auto const& lam : partitions_up_to(n)) {
      SkewShape s(lam);
      int D = size(lam) + 1;
      if (!(gf_via_operators(Engine::diagonal, Form::A, s, D, D) == Ktilde_poly(s, D, D))) return "Ktilde at " + detail::show(lam);
      if (!(gf_via_operators(Engine::diagonal, Form::B, s, D, D) == J_poly(s, D, D))) return "J at " + detail::show(lam);
      if (!(gf_via_operators(Engine::column, Form::A, s, D, D) == g_poly(s, D, D))) return "g at " + detail::show(lam);
      if (!(gf_via_operators(Engine::column, Form::B, s, D, D) == j_poly(s, D, D))) return "j at " + detail::show(lam);
    }
    return {};
  }));
  out.push_back(detail::run("operators", "column operator relations", [&]() -> std::string {
    int S = 7;
    for (auto const& lam : partitions_up_to(3)) {
      PartitionVector x{{{lam, 1}}, S};
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 4; ++j)
          for (int k = j + 1; k <= 5; ++k) {
            if (!(apply_word(Engine::column, {i, k, j}, x) == apply_word(Engine::column, {k, i, j}, x))) return "first relation";
            if (!(apply_word(Engine::column, {j, i, k}, x) == apply_word(Engine::column, {j, k, i}, x))) return "second relation";
          }
      for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 5; ++j) {
          auto lhs = apply_word(Engine::column, {j, i, i}, x);
          lhs.terms += apply_word(Engine::column, {j, i, j}, x).terms;
          auto rhs = apply_word(Engine::column, {i, j, i}, x);
          rhs.terms += apply_word(Engine::column, {j, j, i}, x).terms;
          if (!(lhs == rhs)) return "third relation";
        }
    }
    return {};
  }));
  out.push_back(detail::run("operators", "omega relations", [&]() -> std::string {
    for (auto const& lam : partitions_up_to(n)) {
      int D = size(lam) + 2;
      SkewShape s(lam);
      if (!(omega(expand_symmetric(Ktilde_poly(s, D, D), "s", D)) == expand_symmetric(J_poly(s, D, D), "s", D)))
        return "Ktilde/J at " + detail::show(lam);
      if (!(omega(expand_symmetric(g_poly(s, D, D), "s", {})) == expand_symmetric(j_poly(s, D, D), "s", {})))
        return "g/j at " + detail::show(lam);
    }
    return {};
  }));
  out.push_back(detail::run("operators", "diagonal operator relations", [&]() -> std::string {
    int S = 9;
    for (auto const& lam : partitions_up_to(4)) {
      PartitionVector x{{{lam, 1}}, S};
      for (int i = -4; i <= 4; ++i) {
        auto vi = apply_v(i, x);
        if (!(apply_v(i, vi) == vi)) return "not idempotent";
        if (!apply_word(Engine::diagonal, {i, i + 1, i}, x).terms.empty()) return "braid word not zero";
        if (!apply_word(Engine::diagonal, {i + 1, i, i + 1}, x).terms.empty()) return "braid word not zero";
        for (int j = i + 2; j <= 4; ++j)
          if (!(apply_word(Engine::diagonal, {i, j}, x) == apply_word(Engine::diagonal, {j, i}, x))) return "far pair";
      }
    }
    return {};
  }));
  out.push_back(detail::run("operators", "elementary and complete operator series are inverse", [&]() -> std::string {
    for (Engine e : {Engine::diagonal, Engine::column})
      for (auto const& lam : partitions_up_to(2 + o.size)) {
        int S = size(lam) + 4;
        int lo = e == Engine::diagonal ? -S : 1;
        PartitionVector x{{{lam, 1}}, S};
        // h_k: indices weakly increasing left to right, so the largest acts first
        std::vector<PartitionVector> h(5, PartitionVector{{}, S});
        h[0] = x;
        for (int i = S; i >= lo; --i)
          for (int j = 1; j <= 4; ++j) h[j].terms += detail::operator_step(e, i, h[j - 1]).terms;
        for (int m = 1; m <= 4; ++m) {
          LinComb<Partition> total;
          for (int k = 0; k <= m; ++k)
            total += Integer(k % 2 ? -1 : 1) * apply_elementary(e, m - k, lo, S, h[k]).terms;
          if (!total.empty()) return "nonzero in degree " + std::to_string(m);
        }
      }
    return {};
  }));
  out.push_back(detail::run("operators", "Cauchy expansions of the operator products", [&]() -> std::string {
    int D = 3 + o.size;
    for (Engine e : {Engine::diagonal, Engine::column}) {
      int lo = e == Engine::diagonal ? -D : 1;
      // s_mu(u) applied to the empty shape through the dual Jacobi-Trudi determinant in e_k(u)
      std::map<Partition, LinComb<Partition>> su;
      for (auto const& mu : partitions_up_to(D)) {
        auto mc = conjugate(mu);
        int len = int(mc.size());
        std::vector<int> perm(len);
        for (int i = 0; i < len; ++i) perm[i] = i;
        LinComb<Partition> acc;
        do {
          int inv = 0;
          for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j) inv += perm[i] > perm[j];
          PartitionVector y{{{Partition{}, 1}}, D};
          bool zero = false;
          for (int i = 0; i < len && !zero; ++i) {
            int k = mc[i] - i + perm[i];
            if (k < 0) zero = true;
            else if (k > 0) y = apply_elementary(e, k, lo, D, y);
          }
          if (!zero) acc += Integer(inv % 2 ? -1 : 1) * y.terms;
        } while (std::next_permutation(perm.begin(), perm.end()));
        su[mu] = acc;
      }
      for (auto const& lam : partitions_up_to(D)) {
        if (lam.empty()) continue;
        TruncPoly a(D, D), b(D, D);
        for (auto const& [mu, v] : su) {
          auto c = v.coeff(lam);
          if (c == 0) continue;
          a += c * schur(conjugate(mu), D, D);
          b += c * schur(mu, D, D);
        }
        if (!(gf_via_operators(e, Form::A, SkewShape(lam), D, D) == a)) return "A form at " + detail::show(lam);
        if (!(gf_via_operators(e, Form::B, SkewShape(lam), D, D) == b)) return "B form at " + detail::show(lam);
      }
    }
    return {};
  }));
  return out;
}

inline std::vector<Result> cli_suite(Options const&) {
  std::vector<Result> out;
  out.push_back(detail::run("cli", "JSON outputs re-parse to equal values", [&]() -> std::string {
    auto again = [](json const& j) { return json::parse(j.dump()); };
    auto b = ltilde_product({2, 1}, {1}, 5);
    auto b2 = basis_element_from_json(again(to_json(b)));
    if (b2.basis != b.basis || b2.cap != b.cap || !(b2.coeffs == b.coeffs)) return "basis element";
    auto w = mmr_product(Word{1, 2}, Word{1}, 4);
    auto w2 = word_element_from_json(again(to_json(w)));
    if (!(w2.terms == w.terms) || w2.cap != w.cap) return "word element";
    auto r = rtilde({2, 2});
    if (!(set_comp_sum_from_json(again(to_json(r))) == r)) return "set composition sum";
    auto p = Ktilde_poly(SkewShape({2, 1}), 3, 4);
    if (!(trunc_poly_from_json(again(to_json(p))) == p)) return "polynomial window";
    std::string err;
    for_each_svt(SkewShape({2, 1}), {3, 4}, [&](SetTableau const& t) {
      if (!(set_tableau_from_json(again(to_json(t, TableauKind::svt))) == t)) err = "set-valued tableau";
    });
    for_each_valued_set(SkewShape({2, 2}), {2, 4}, [&](ValuedSetTableau const& t) {
      auto t2 = valued_set_from_json(again(to_json(t)));
      if (!(t2.filling == t.filling) || t2.joins_above != t.joins_above) err = "valued-set tableau";
    });
    auto P = shape_poset(SkewShape({3, 2}, {1}));
    auto P2 = poset_from_json(again(to_json(P)));
    if (P2.covers() != P.covers() || P2.theta() != P.theta()) err = "poset";
    return err;
  }));
  return out;
}

inline std::vector<std::string> suite_names() {
  return {"shapes", "words", "tableaux", "series", "ppartitions", "hopf", "operators", "cli"};
}

inline std::vector<Result> run_suite(std::string const& name, Options const& o) {
  if (name == "shapes") return shapes_suite(o);
  if (name == "words") return words_suite(o);
  if (name == "tableaux") return tableaux_suite(o);
  if (name == "series") return series_suite(o);
  if (name == "ppartitions") return ppartitions_suite(o);
  if (name == "hopf") return hopf_suite(o);
  if (name == "operators") return operators_suite(o);
  if (name == "cli") return cli_suite(o);
  if (name == "all") {
    std::vector<Result> all;
    for (auto const& s : suite_names()) {
      auto r = run_suite(s, o);
      all.insert(all.end(), r.begin(), r.end());
    }
    return all;
  }
  throw DomainError("unknown suite " + name);
}

}  // namespace khopf::verify
