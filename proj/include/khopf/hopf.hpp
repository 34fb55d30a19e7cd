#pragma once

#include <map>
#include <vector>

#include "ppartitions.hpp"
#include "series.hpp"
#include "shapes.hpp"
#include "words.hpp"

namespace khopf {

// ---------------------------------------------------------------- multi-fundamental basis

/// Product of multi-fundamental quasisymmetric functions, labels of size <= cap.
inline BasisElement ltilde_product(Composition const& a, Composition const& b, int cap) {
  Word u = canonical_word(a);
  Word v = shifted(canonical_word(b), size(a));
  BasisElement r{"Ltilde", {}, cap};
  for (auto const& [w, c] : multishuffle(u, v, cap)) r.coeffs.add(descent_composition(w), c);
  return r;
}

inline BasisElement ltilde_product(BasisElement const& x, BasisElement const& y, int cap) {
  if (x.basis != "Ltilde" || y.basis != "Ltilde") throw DomainError("product expects Ltilde expansions");
  int c = cap;
  if (x.cap) c = std::min(c, *x.cap);
  if (y.cap) c = std::min(c, *y.cap);
  BasisElement r{"Ltilde", {}, c};
  for (auto const& [a, ca] : x.coeffs)
    for (auto const& [b, cb] : y.coeffs) r.coeffs += (ca * cb) * ltilde_product(a, b, c).coeffs;
  return r;
}

inline Tensor<Composition> ltilde_coproduct(Composition const& a) {
  Tensor<Composition> t;
  for (auto const& [k, c] : cuut(canonical_word(a))) t.add({descent_composition(k.first), descent_composition(k.second)}, c);
  return t;
}

/// Window of the multi-fundamental quasisymmetric function as a chain generating function.
inline TruncPoly ltilde_poly(Composition const& a, int nvars, int maxdeg) {
  return gen_Ktilde(chain_poset(canonical_word(a)), nvars, maxdeg);
}

/// Morphism from the small multi-Malvenuto-Reutenauer algebra: w -> Ltilde of its descent composition.
inline BasisElement psi(WordElement const& x) {
  BasisElement r{"Ltilde", {}, x.cap};
  for (auto const& [w, c] : x.terms) r.coeffs.add(descent_composition(w), c);
  return r;
}

// ---------------------------------------------------------------- pumping

/// Image of L_a (or M_a) under the i-th pump: sum over E of |T(D,E)| L_{C(E)}.
inline LinComb<Composition> pump_label(Composition const& a, int i) {
  LinComb<Composition> out;
  int n = size(a);
  if (i < 0) throw DomainError("pump index must be nonnegative");
  if (n == 0) {
    if (i == 0) out.add({}, 1);
    return out;
  }
  auto D = descents(a).elems;
  int m = n + i - 1;
  std::vector<int> img;
  auto rec = [&](auto&& self, int next) -> void {
    if (int(img.size()) == n - 1) {
      std::vector<char> in_image(m + 1, 0);
      for (int x : img) in_image[x] = 1;
      DescentSet E{n + i, {}};
      std::vector<char> mark(m + 1, 0);
      for (int d : D) mark[img[d - 1]] = 1;
      for (int x = 1; x <= m; ++x)
        if (mark[x] || !in_image[x]) E.elems.push_back(x);
      out.add(composition_of(E), 1);
      return;
    }
    for (int x = next; x <= m - (n - 1 - int(img.size())) + 1; ++x) {
      img.push_back(x);
      self(self, x + 1);
      img.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline BasisElement pump(BasisElement const& f, int i) {
  if (f.basis != "L" && f.basis != "M") throw DomainError("pump acts on L or M expansions");
  std::optional<int> deg;
  for (auto const& [a, c] : f.coeffs) {
    if (deg && *deg != size(a)) throw DomainError("pump needs a homogeneous element");
    deg = size(a);
  }
  BasisElement r{f.basis, {}, {}};
  for (auto const& [a, c] : f.coeffs) r.coeffs += c * pump_label(a, i);
  return r;
}

/// L-expansion of the multi-fundamental function through degree maxdeg.
inline BasisElement ltilde_in_L(Composition const& a, int maxdeg) {
  BasisElement r{"L", {}, maxdeg};
  for (int i = 0; size(a) + i <= maxdeg; ++i) r.coeffs += pump_label(a, i);
  return r;
}

/// Multi-monomial function as a finite Ltilde combination.
inline BasisElement mtilde(Composition const& a) {
  BasisElement r{"Ltilde", {}, {}};
  int da = int(descents(a).elems.size());
  // signed sum over refinements, so the lowest component inverts L into M
  for (auto const& b : refinements(a)) {
    int db = int(descents(b).elems.size());
    r.coeffs.add(b, (db - da) % 2 ? -1 : 1);
  }
  return r;
}

inline BasisElement mtilde_in_L(Composition const& a, int maxdeg) {
  BasisElement r{"L", {}, maxdeg};
  for (auto const& [b, c] : mtilde(a).coeffs) r.coeffs += c * ltilde_in_L(b, maxdeg).coeffs;
  return r;
}

// ---------------------------------------------------------------- multi-ribbon basis

/// Type of an M-permutation: composition of the descent set of its inverse.
inline Composition type_of(SetComposition const& w) {
  require_Mperm(w);
  return descent_composition(invert(w));
}

/// Sum of all M-permutations of [|a|] of type a.
inline SetCompSum rtilde(Composition const& a) {
  if (!is_composition(a)) throw DomainError("multi-ribbon needs a composition");
  SetCompSum r;
  for (auto const& w : Mperms_of_size(size(a)))
    if (type_of(w) == a) r.add(w, 1);
  return r;
}

inline BasisElement rtilde_product(Composition const& a, Composition const& b) {
  BasisElement r{"Rtilde", {}, {}};
  if (a.empty() || b.empty()) {
    r.coeffs.add(a.empty() ? b : a, 1);
    return r;
  }
  r.coeffs.add(glue(a, b, Glue::right), 1);
  r.coeffs.add(glue(a, b, Glue::above), 1);
  r.coeffs.add(glue(a, b, Glue::coincide), 1);
  return r;
}

inline BasisElement rtilde_product(BasisElement const& x, BasisElement const& y) {
  if (x.basis != "Rtilde" || y.basis != "Rtilde") throw DomainError("product expects Rtilde expansions");
  BasisElement r{"Rtilde", {}, {}};
  for (auto const& [a, ca] : x.coeffs)
    for (auto const& [b, cb] : y.coeffs) r.coeffs += (ca * cb) * rtilde_product(a, b).coeffs;
  return r;
}

/// Expansion as noncommutative polynomial in F_k = Rtilde_(k); keys list the k's.
inline LinComb<std::vector<int>> rtilde_in_F(Composition const& a) {
  static std::map<Composition, LinComb<std::vector<int>>> cache;
  if (!is_composition(a)) throw DomainError("multi-ribbon needs a composition");
  auto it = cache.find(a);
  if (it != cache.end()) return it->second;
  LinComb<std::vector<int>> r;
  if (a.size() <= 1) {
    r.add(a, 1);
  } else {
    Composition head(a.begin(), a.end() - 1);
    for (auto const& [word, c] : rtilde_in_F(head)) {
      auto w = word;
      w.push_back(a.back());
      r.add(w, c);
    }
    Composition merged(a.begin(), a.end() - 2);
    merged.push_back(a[a.size() - 2] + a.back());
    r -= rtilde_in_F(merged);
    merged.back() -= 1;
    r -= rtilde_in_F(merged);
  }
  cache.emplace(a, r);
  return r;
}

/// Rtilde_(k_1) ... Rtilde_(k_m) expanded in the multi-ribbon basis.
inline BasisElement rtilde_from_F(LinComb<std::vector<int>> const& f) {
  BasisElement r{"Rtilde", {}, {}};
  for (auto const& [ks, c] : f) {
    BasisElement prod{"Rtilde", {{Composition{}, 1}}, {}};
    for (int k : ks) prod = rtilde_product(prod, BasisElement{"Rtilde", {{Composition{k}, 1}}, {}});
    r.coeffs += c * prod.coeffs;
  }
  return r;
}

// ---------------------------------------------------------------- dual stable Grothendieck ribbons

/// g_rho g_tau = g_{rho right tau} + g_{rho above tau} - g_{rho coincide tau}.
inline LinComb<SkewShape> g_ribbon_product(SkewShape const& rho, SkewShape const& tau) {
  LinComb<SkewShape> r;
  r.add(ribbon_glue(rho, tau, Glue::right), 1);
  r.add(ribbon_glue(rho, tau, Glue::above), 1);
  r.add(ribbon_glue(rho, tau, Glue::coincide), -1);
  return r;
}

/// Same product in the sign-twisted normalization, where all three terms are positive.
inline LinComb<SkewShape> gtilde_ribbon_product(SkewShape const& rho, SkewShape const& tau) {
  LinComb<SkewShape> r;
  r.add(ribbon_glue(rho, tau, Glue::right), 1);
  r.add(ribbon_glue(rho, tau, Glue::above), 1);
  r.add(ribbon_glue(rho, tau, Glue::coincide), 1);
  return r;
}

}  // namespace khopf
