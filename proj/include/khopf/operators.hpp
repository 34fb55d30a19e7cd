#pragma once

#include <map>
#include <optional>
#include <vector>

#include "poly.hpp"
#include "series.hpp"
#include "shapes.hpp"

namespace khopf {

/// Finite combination of partitions; terms above max_size are discarded.
struct PartitionVector {
  LinComb<Partition> terms;
  int max_size = 0;
  friend bool operator==(PartitionVector const&, PartitionVector const&) = default;
};

/// Diagonal operator v_i relative to a fixed inner shape nu.
inline PartitionVector apply_v(int i, PartitionVector const& x, Partition const& nu = {}) {
  PartitionVector r{{}, x.max_size};
  for (auto const& [lam, c] : x.terms) {
    if (!contains(lam, nu)) throw DomainError("term does not contain the inner shape");
    bool done = false;
    for (auto const& cell : outer_corners(lam))
      if (cell.diagonal() == i) {
        if (size(lam) + 1 <= x.max_size) r.terms.add(with_cell_added(lam, cell), c);
        done = true;
      }
    if (done) continue;
    for (auto const& cell : inner_corners(lam, nu))
      if (cell.diagonal() == i) r.terms.add(lam, c);
  }
  return r;
}

/// Column operator u_i: add one or more cells to column i.
inline PartitionVector apply_u(int i, PartitionVector const& x) {
  if (i < 1) throw DomainError("column index must be positive");
  PartitionVector r{{}, x.max_size};
  for (auto const& [lam, c] : x.terms) {
    auto col = conjugate(lam);
    int here = part(col, i);
    int room = i == 1 ? x.max_size - size(lam) : part(col, i - 1) - here;
    room = std::min(room, x.max_size - size(lam));
    for (int k = 1; k <= room; ++k) {
      Partition nc = col;
      if (int(nc.size()) < i) nc.resize(i, 0);
      nc[i - 1] += k;
      r.terms.add(conjugate(trimmed(nc)), c);
    }
  }
  return r;
}

enum class Engine { diagonal, column };
enum class Form { A, B };

namespace detail {

using PolyState = std::map<Partition, LinComb<Exponent>>;

inline int exponent_degree(Exponent const& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

/// One operator step multiplied by x_k, keeping shapes inside lambda and degree <= maxdeg.
template <class Op>
PolyState step(PolyState const& st, int k, int maxdeg, Partition const& lambda, Op&& op) {
  PolyState out;
  for (auto const& [mu, poly] : st) {
    PartitionVector pv{{{mu, 1}}, size(lambda)};
    auto img = op(pv);
    for (auto const& [nu, c] : img.terms) {
      if (!contains(lambda, nu)) continue;
      auto& dst = out[nu];
      for (auto const& [e, ce] : poly) {
        if (exponent_degree(e) + 1 > maxdeg) continue;
        Exponent f(e);
        f[k] += 1;
        dst.add(f, c * ce);
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

inline void accumulate(PolyState& into, PolyState const& add) {
  for (auto const& [mu, poly] : add) into[mu] += poly;
}

}  // namespace detail

/// Coefficient of lambda in  ...F(x_2)F(x_1) nu, where F is the A or B product
/// of the chosen operator family, as a polynomial window.
///   diagonal A: ...(1+x v_1)(1+x v_0)(1+x v_{-1})...      -> Ktilde_{lambda/nu}
///   diagonal B: ...(1-x v_{-1})^{-1}(1-x v_0)^{-1}(1-x v_1)^{-1}... -> J_{lambda/nu}
///   column A:   ...(1+x u_2)(1+x u_1)                      -> g_{lambda/nu}
///   column B:   ...(1-x u_1)^{-1}(1-x u_2)^{-1}...           -> j_{lambda/nu}
inline TruncPoly gf_via_operators(Engine engine, Form form, SkewShape const& shape, int nvars, int maxdeg) {
  if (nvars < 1 || maxdeg < 0) throw TruncationError("operator window needs at least one variable");
  Partition const& lambda = shape.outer;
  Partition const& nu = shape.inner;
  std::vector<int> indices;
  if (engine == Engine::diagonal) {
    int lo = 1 - int(lambda.size()), hi = lambda.empty() ? 0 : lambda[0] - 1;
    for (int i = lo; i <= hi; ++i) indices.push_back(i);
  } else {
    for (int i = 1; i <= part(lambda, 1); ++i) indices.push_back(i);
  }
  // rightmost factor acts first
  if (form == Form::B) std::reverse(indices.begin(), indices.end());
  detail::PolyState st;
  st[nu].add(Exponent(nvars, 0), 1);
  for (int k = 0; k < nvars; ++k) {
    for (int i : indices) {
      auto op = [&](PartitionVector const& pv) {
        return engine == Engine::diagonal ? apply_v(i, pv, nu) : apply_u(i, pv);
      };
      if (form == Form::A) {
        detail::accumulate(st, detail::step(st, k, maxdeg, lambda, op));
      } else {
        auto term = detail::step(st, k, maxdeg, lambda, op);
        detail::PolyState acc = st;
        while (!term.empty()) {
          detail::accumulate(acc, term);
          term = detail::step(term, k, maxdeg, lambda, op);
        }
        st = std::move(acc);
      }
    }
  }
  TruncPoly p(nvars, maxdeg);
  auto it = st.find(lambda);
  if (it != st.end())
    for (auto const& [e, c] : it->second) p.add(e, c);
  return p;
}

/// Stable Grothendieck window through the diagonal engine with the degree sign twist.
inline TruncPoly G_via_operators(SkewShape const& shape, int nvars, int maxdeg) {
  return gf_via_operators(Engine::diagonal, Form::A, shape, nvars, maxdeg).sign_twisted(shape.size());
}

/// Applies the word of operators right to left (last index acts first).
inline PartitionVector apply_word(Engine engine, std::vector<int> const& word, PartitionVector x, Partition const& nu = {}) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = engine == Engine::diagonal ? apply_v(*it, x, nu) : apply_u(*it, x);
  return x;
}

/// Elementary symmetric polynomial e_k in the operators with indices in [lo, hi]:
/// sum over a_1 > ... > a_k of op_{a_1} ... op_{a_k}.
inline PartitionVector apply_elementary(Engine engine, int k, int lo, int hi, PartitionVector const& x, Partition const& nu = {}) {
  // layer[j] = sum over chosen increasing index sets of size j applied so far
  std::vector<PartitionVector> layer(k + 1, PartitionVector{{}, x.max_size});
  layer[0] = x;
  for (int i = lo; i <= hi; ++i)
    for (int j = k; j >= 1; --j) {
      auto img = engine == Engine::diagonal ? apply_v(i, layer[j - 1], nu) : apply_u(i, layer[j - 1]);
      layer[j].terms += img.terms;
    }
  return layer[k];
}

// ---------------------------------------------------------------- K-theory of Grassmannians

/// Coefficients c_{lambda,mu}^nu of G_lambda G_mu = sum c G_nu restricted to nu
/// inside the k x (n-k) rectangle.
inline LinComb<Partition> grassmann_constants(Partition const& lambda, Partition const& mu, int k, int n) {
  if (k < 0 || k > n) throw DomainError("Grassmannian needs 0 <= k <= n");
  Partition rect(k, n - k);
  if (!contains(trimmed(rect), lambda) || !contains(trimmed(rect), mu)) throw DomainError("shape does not fit in the rectangle");
  int D = k * (n - k);
  LinComb<Partition> out;
  if (size(lambda) + size(mu) > D) return out;
  int nvars = std::max(D, 1);
  auto prod = G_poly(SkewShape(lambda), nvars, D) * G_poly(SkewShape(mu), nvars, D);
  auto rest = expand_symmetric(prod, "s", D).coeffs;
  std::map<Partition, LinComb<Partition>> g_in_s;
  while (!rest.empty()) {
    Partition nu;
    int best = -1;
    for (auto const& [p, c] : rest)
      if (best < 0 || size(p) < best || (size(p) == best && p < nu)) {
        nu = p;
        best = size(p);
      }
    Integer c = rest.coeff(nu);
    out.add(nu, c);
    auto gs = expand_symmetric(G_poly(SkewShape(nu), nvars, D), "s", D).coeffs;
    rest -= c * gs;
  }
  return out.filtered([&](Partition const& p) { return contains(trimmed(rect), p); });
}

}  // namespace khopf
