#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace khopf {

using Integer = boost::multiprecision::cpp_int;

/// Input outside the domain of an operation (invalid shape, bad word, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A requested coefficient lies outside a truncation window.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Weak order search exhausted its ground-set bound.
struct UndecidedAtBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Finite formal linear combination with exact integer coefficients.
/// Zero coefficients are never stored.
template <class Key, class Compare = std::less<Key>>
class LinComb {
 public:
  using map_type = std::map<Key, Integer, Compare>;

  LinComb() = default;
  LinComb(std::initializer_list<std::pair<const Key, Integer>> init) {
    for (auto const& [k, c] : init) add(k, c);
  }

  void add(Key const& k, Integer const& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coeff(Key const& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  LinComb& operator+=(LinComb const& o) {
    for (auto const& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(LinComb const& o) {
    for (auto const& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(Integer const& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }
  friend LinComb operator+(LinComb a, LinComb const& b) { return a += b; }
  friend LinComb operator-(LinComb a, LinComb const& b) { return a -= b; }
  friend LinComb operator*(Integer const& s, LinComb a) { return a *= s; }
  friend bool operator==(LinComb const& a, LinComb const& b) { return a.terms_ == b.terms_; }

  template <class Pred>
  LinComb filtered(Pred&& keep) const {
    LinComb r;
    for (auto const& [k, c] : terms_)
      if (keep(k)) r.terms_.emplace(k, c);
    return r;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  map_type const& terms() const { return terms_; }

 private:
  map_type terms_;
};

template <class K>
using Tensor = LinComb<std::pair<K, K>>;

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace khopf
