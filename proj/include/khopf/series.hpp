#pragma once

#include <map>
#include <set>
#include <optional>
#include <string>

#include "poly.hpp"
#include "shapes.hpp"
#include "tableaux.hpp"

namespace khopf {

/// Coefficients in a named basis. Labels are compositions or partitions.
/// A present cap means only labels of size <= cap are known.
struct BasisElement {
  std::string basis;
  LinComb<std::vector<int>> coeffs;
  std::optional<int> cap;
  friend bool operator==(BasisElement const&, BasisElement const&) = default;
};

inline BasisElement truncated(BasisElement b, int cap) {
  b.coeffs = b.coeffs.filtered([&](std::vector<int> const& l) { return size(l) <= cap; });
  b.cap = b.cap ? std::min(*b.cap, cap) : cap;
  return b;
}

// ---------------------------------------------------------------- quasisymmetric

inline TruncPoly monomial_qsym(Composition const& a, int nvars, int maxdeg) {
  if (!is_composition(a)) throw DomainError("monomial quasisymmetric function needs a composition");
  TruncPoly p(nvars, maxdeg);
  int k = int(a.size());
  Exponent e(nvars, 0);
  auto rec = [&](auto&& self, int j, int from) -> void {
    if (j == k) {
      p.add(e, 1);
      return;
    }
    for (int i = from; i <= nvars - (k - j); ++i) {
      e[i] = a[j];
      self(self, j + 1, i + 1);
      e[i] = 0;
    }
  };
  if (size(a) <= maxdeg) rec(rec, 0, 0);
  return p;
}

/// Compositions whose descent set contains that of a.
inline std::vector<Composition> refinements(Composition const& a) {
  std::vector<Composition> out;
  auto d = descents(a);
  for (auto const& b : compositions_of(d.n))
    if (subset_of(d, descents(b))) out.push_back(b);
  return out;
}

/// Compositions whose descent set is contained in that of a.
inline std::vector<Composition> coarsenings(Composition const& a) {
  std::vector<Composition> out;
  auto d = descents(a);
  for (auto const& b : compositions_of(d.n))
    if (subset_of(descents(b), d)) out.push_back(b);
  return out;
}

inline TruncPoly fundamental_qsym(Composition const& a, int nvars, int maxdeg) {
  TruncPoly p(nvars, maxdeg);
  for (auto const& b : refinements(a)) p += monomial_qsym(b, nvars, maxdeg);
  return p;
}

/// Coefficients in the monomial quasisymmetric basis; throws if f is not quasisymmetric.
inline LinComb<Composition> qsym_monomial_coefficients(TruncPoly const& f) {
  if (f.nvars() < f.maxdeg()) throw TruncationError("quasisymmetric expansion needs nvars >= maxdeg");
  LinComb<Composition> out;
  for (auto const& [e, c] : f.terms()) {
    Composition a;
    for (int x : e)
      if (x) a.push_back(x);
    Exponent lead(f.nvars(), 0);
    std::copy(a.begin(), a.end(), lead.begin());
    if (lead == e) out.add(a, c);
  }
  TruncPoly back(f.nvars(), f.maxdeg());
  for (auto const& [a, c] : out) back += c * monomial_qsym(a, f.nvars(), f.maxdeg());
  if (!(back == f)) throw DomainError("series is not quasisymmetric");
  return out;
}

/// c^L_b = sum over a coarser than b of (-1)^(|D(b)|-|D(a)|) c^M_a.
inline LinComb<Composition> monomial_to_fundamental(LinComb<Composition> const& m) {
  LinComb<Composition> out;
  std::set<int> sizes;
  for (auto const& [a, c] : m) sizes.insert(size(a));
  for (int n : sizes)
    for (auto const& b : compositions_of(n)) {
      Integer acc = 0;
      int db = int(descents(b).elems.size());
      for (auto const& a : coarsenings(b)) {
        int da = int(descents(a).elems.size());
        acc += ((db - da) % 2 ? -1 : 1) * m.coeff(a);
      }
      out.add(b, acc);
    }
  return out;
}

inline LinComb<Composition> fundamental_to_monomial(LinComb<Composition> const& l) {
  LinComb<Composition> out;
  for (auto const& [a, c] : l)
    for (auto const& b : refinements(a)) out.add(b, c);
  return out;
}

// ---------------------------------------------------------------- symmetric

inline TruncPoly skew_schur(SkewShape const& s, int nvars, int maxdeg) {
  TruncPoly p(nvars, maxdeg);
  if (s.size() > maxdeg) return p;
  for_each_ssyt(s, nvars, [&](IntTableau const& t) {
    Exponent e;
    weight_exponent(weight(t, TableauKind::ssyt), nvars, e);
    p.add(e, 1);
  });
  return p;
}

inline TruncPoly schur(Partition const& lambda, int nvars, int maxdeg) { return skew_schur(SkewShape(lambda), nvars, maxdeg); }

inline TruncPoly monomial_sym(Partition const& lambda, int nvars, int maxdeg) {
  TruncPoly p(nvars, maxdeg);
  Composition a(lambda.rbegin(), lambda.rend());
  do {
    p += monomial_qsym(a, nvars, maxdeg);
  } while (std::next_permutation(a.begin(), a.end()));
  return p;
}

/// Coefficients in the monomial symmetric basis; throws if f is not symmetric.
inline LinComb<Partition> sym_monomial_coefficients(TruncPoly const& f) {
  if (f.nvars() < f.maxdeg()) throw TruncationError("symmetric expansion needs nvars >= maxdeg");
  LinComb<Partition> out;
  for (auto const& [e, c] : f.terms())
    if (std::is_sorted(e.rbegin(), e.rend())) out.add(trimmed(e), c);
  TruncPoly back(f.nvars(), f.maxdeg());
  for (auto const& [p, c] : out) back += c * monomial_sym(p, f.nvars(), f.maxdeg());
  if (!(back == f)) throw DomainError("series is not symmetric");
  return out;
}

/// Kostka numbers K_{lambda,mu} for all partitions mu of |lambda|.
inline std::map<Partition, Integer> const& kostka_row(Partition const& lambda) {
  static std::map<Partition, std::map<Partition, Integer>> cache;
  auto it = cache.find(lambda);
  if (it != cache.end()) return it->second;
  std::map<Partition, Integer> row;
  int n = size(lambda);
  for_each_ssyt(SkewShape(lambda), n, [&](IntTableau const& t) {
    auto w = weight(t, TableauKind::ssyt);
    if (std::is_sorted(w.rbegin(), w.rend())) {
      auto p = trimmed(w);
      if (is_partition(p)) row[p] += 1;
    }
  });
  return cache.emplace(lambda, std::move(row)).first->second;
}

inline LinComb<Partition> schur_to_monomial(LinComb<Partition> const& s) {
  LinComb<Partition> out;
  for (auto const& [lam, c] : s)
    for (auto const& [mu, k] : kostka_row(lam)) out.add(mu, c * k);
  return out;
}

/// Schur coefficients by repeatedly removing the lexicographically largest
/// (hence dominance-maximal) monomial term.
inline LinComb<Partition> monomial_to_schur(LinComb<Partition> m) {
  LinComb<Partition> out;
  while (!m.empty()) {
    // group by size, pick the lex largest partition of the smallest size
    Partition best;
    int best_size = -1;
    for (auto const& [p, c] : m) {
      int sz = size(p);
      if (best_size < 0 || sz < best_size || (sz == best_size && p > best)) {
        best = p;
        best_size = sz;
      }
    }
    Integer c = m.coeff(best);
    out.add(best, c);
    for (auto const& [mu, k] : kostka_row(best)) m.add(mu, -c * k);
  }
  return out;
}

inline BasisElement expand_symmetric(TruncPoly const& f, std::string const& basis, std::optional<int> cap) {
  auto m = sym_monomial_coefficients(f);
  BasisElement b{basis, {}, cap};
  if (basis == "m") {
    for (auto const& [p, c] : m) b.coeffs.add(p, c);
  } else if (basis == "s") {
    for (auto const& [p, c] : monomial_to_schur(m)) b.coeffs.add(p, c);
  } else {
    throw DomainError("unknown symmetric basis " + basis);
  }
  return b;
}

inline BasisElement expand_quasisymmetric(TruncPoly const& f, std::string const& basis, std::optional<int> cap) {
  auto m = qsym_monomial_coefficients(f);
  BasisElement b{basis, {}, cap};
  if (basis == "M") {
    for (auto const& [a, c] : m) b.coeffs.add(a, c);
  } else if (basis == "L") {
    for (auto const& [a, c] : monomial_to_fundamental(m)) b.coeffs.add(a, c);
  } else {
    throw DomainError("unknown quasisymmetric basis " + basis);
  }
  return b;
}

/// Involution exchanging s_lambda and s_lambda'.
inline BasisElement omega(BasisElement const& f) {
  if (f.basis != "s") throw DomainError("omega acts on Schur expansions");
  BasisElement r{"s", {}, f.cap};
  for (auto const& [p, c] : f.coeffs) r.coeffs.add(conjugate(p), c);
  return r;
}

/// Hall inner product of two Schur expansions. A truncated operand is only
/// usable against a finite operand whose labels lie inside its cap.
inline Integer hall_pair(BasisElement const& a, BasisElement const& b) {
  if (a.basis != "s" || b.basis != "s") throw DomainError("Hall pairing needs Schur expansions");
  if (a.cap && b.cap) throw TruncationError("pairing two truncated series is not exact");
  auto check = [](BasisElement const& trunc, BasisElement const& fin) {
    if (!trunc.cap) return;
    for (auto const& [p, c] : fin.coeffs)
      if (size(p) > *trunc.cap) throw TruncationError("finite operand reaches beyond the truncation cap");
  };
  check(a, b);
  check(b, a);
  Integer s = 0;
  for (auto const& [p, c] : a.coeffs) s += c * b.coeffs.coeff(p);
  return s;
}

// ---------------------------------------------------------------- tableau generating functions

/// Set-valued tableaux, unsigned: the multi-Schur function Ktilde.
inline TruncPoly Ktilde_poly(SkewShape const& s, int nvars, int maxdeg) {
  TruncPoly p(nvars, maxdeg);
  for_each_svt(s, {nvars, maxdeg}, [&](SetTableau const& t) {
    Exponent e;
    weight_exponent(weight(t), nvars, e);
    p.add(e, 1);
  });
  return p;
}

/// Stable Grothendieck function: set-valued tableaux with sign (-1)^(|T|-|shape|).
inline TruncPoly G_poly(SkewShape const& s, int nvars, int maxdeg) { return Ktilde_poly(s, nvars, maxdeg).sign_twisted(s.size()); }

/// Dual stable Grothendieck function: reverse plane partitions weighted by columns.
inline TruncPoly g_poly(SkewShape const& s, int nvars, int maxdeg) {
  TruncPoly p(nvars, maxdeg);
  for_each_rpp(s, nvars, [&](IntTableau const& t) {
    Exponent e;
    weight_exponent(weight(t, TableauKind::rpp), nvars, e);
    p.add(e, 1);
  });
  return p;
}

inline TruncPoly gtilde_poly(SkewShape const& s, int nvars, int maxdeg) { return g_poly(s, nvars, maxdeg).sign_twisted(s.size()); }

/// Weak set-valued tableaux: the function J.
inline TruncPoly J_poly(SkewShape const& s, int nvars, int maxdeg) {
  TruncPoly p(nvars, maxdeg);
  for_each_weak_svt(s, {nvars, maxdeg}, [&](SetTableau const& t) {
    Exponent e;
    weight_exponent(weight(t), nvars, e);
    p.add(e, 1);
  });
  return p;
}

/// Valued-set tableaux: the function j.
inline TruncPoly j_poly(SkewShape const& s, int nvars, int maxdeg) {
  TruncPoly p(nvars, maxdeg);
  for_each_valued_set(s, {nvars, maxdeg}, [&](ValuedSetTableau const& t) {
    Exponent e;
    weight_exponent(weight(t), nvars, e);
    p.add(e, 1);
  });
  return p;
}

}  // namespace khopf
