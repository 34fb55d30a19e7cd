#pragma once

#include <algorithm>
#include <vector>

#include "integer.hpp"

namespace khopf {

using Exponent = std::vector<int>;

/// Polynomial in x_1..x_nvars with exact coefficients, known in total degree <= maxdeg.
class TruncPoly {
 public:
  TruncPoly() = default;
  TruncPoly(int nvars, int maxdeg) : nvars_(nvars), maxdeg_(maxdeg) {
    if (nvars < 0 || maxdeg < 0) throw DomainError("window bounds must be nonnegative");
  }

  static TruncPoly one(int nvars, int maxdeg) {
    TruncPoly p(nvars, maxdeg);
    p.add(Exponent(nvars, 0), 1);
    return p;
  }

  int nvars() const { return nvars_; }
  int maxdeg() const { return maxdeg_; }
  LinComb<Exponent> const& terms() const { return terms_; }

  static int degree(Exponent const& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }

  /// Adds c x^e; monomials above the window are dropped.
  void add(Exponent const& e, Integer const& c) {
    if (int(e.size()) != nvars_) throw DomainError("exponent length does not match variable count");
    if (degree(e) > maxdeg_) return;
    terms_.add(e, c);
  }

  Integer coeff(Exponent const& e) const {
    if (degree(e) > maxdeg_) throw TruncationError("coefficient outside the degree window");
    return terms_.coeff(e);
  }

  TruncPoly& operator+=(TruncPoly const& o) {
    check_compatible(o);
    terms_ += o.terms_;
    return *this;
  }
  TruncPoly& operator-=(TruncPoly const& o) {
    check_compatible(o);
    terms_ -= o.terms_;
    return *this;
  }
  TruncPoly& operator*=(Integer const& s) {
    terms_ *= s;
    return *this;
  }
  friend TruncPoly operator+(TruncPoly a, TruncPoly const& b) { return a += b; }
  friend TruncPoly operator-(TruncPoly a, TruncPoly const& b) { return a -= b; }
  friend TruncPoly operator*(Integer const& s, TruncPoly a) { return a *= s; }

  friend TruncPoly operator*(TruncPoly const& a, TruncPoly const& b) {
    a.check_compatible(b);
    TruncPoly r(a.nvars_, a.maxdeg_);
    for (auto const& [ea, ca] : a.terms_) {
      int da = degree(ea);
      for (auto const& [eb, cb] : b.terms_) {
        if (da + degree(eb) > a.maxdeg_) continue;
        Exponent e(ea);
        for (int i = 0; i < a.nvars_; ++i) e[i] += eb[i];
        r.terms_.add(e, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(TruncPoly const& a, TruncPoly const& b) {
    return a.nvars_ == b.nvars_ && a.maxdeg_ == b.maxdeg_ && a.terms_ == b.terms_;
  }

  /// Same polynomial viewed in a smaller degree window.
  TruncPoly truncated(int maxdeg) const {
    if (maxdeg > maxdeg_) throw TruncationError("cannot widen a truncation window");
    TruncPoly r(nvars_, maxdeg);
    for (auto const& [e, c] : terms_)
      if (degree(e) <= maxdeg) r.terms_.add(e, c);
    return r;
  }

  TruncPoly homogeneous(int d) const {
    TruncPoly r(nvars_, maxdeg_);
    for (auto const& [e, c] : terms_)
      if (degree(e) == d) r.terms_.add(e, c);
    return r;
  }

  /// Multiplies the degree-d part by (-1)^(d - base).
  TruncPoly sign_twisted(int base) const {
    TruncPoly r(nvars_, maxdeg_);
    for (auto const& [e, c] : terms_) r.terms_.add(e, (degree(e) - base) % 2 ? Integer(-c) : c);
    return r;
  }

  /// Renames x_i to x_{i+offset} inside a window with total_vars variables.
  TruncPoly relabelled(int offset, int total_vars) const {
    if (offset < 0 || offset + nvars_ > total_vars) throw DomainError("relabelled variables out of range");
    TruncPoly r(total_vars, maxdeg_);
    for (auto const& [e, c] : terms_) {
      Exponent f(total_vars, 0);
      std::copy(e.begin(), e.end(), f.begin() + offset);
      r.terms_.add(f, c);
    }
    return r;
  }

  bool is_zero() const { return terms_.empty(); }

 private:
  void check_compatible(TruncPoly const& o) const {
    if (nvars_ != o.nvars_ || maxdeg_ != o.maxdeg_) throw DomainError("polynomials live in different windows");
  }

  int nvars_ = 0;
  int maxdeg_ = 0;
  LinComb<Exponent> terms_;
};

/// Exponent vector counting letter occurrences; letters beyond nvars make it invalid.
inline bool weight_exponent(std::vector<int> const& letter_counts, int nvars, Exponent& out) {
  out.assign(nvars, 0);
  for (std::size_t i = 0; i < letter_counts.size(); ++i) {
    if (letter_counts[i] == 0) continue;
    if (int(i) >= nvars) return false;
    out[i] = letter_counts[i];
  }
  return true;
}

}  // namespace khopf
