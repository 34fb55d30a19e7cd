#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hopf.hpp"
#include "operators.hpp"
#include "ppartitions.hpp"
#include "series.hpp"
#include "shapes.hpp"
#include "tableaux.hpp"
#include "words.hpp"

namespace khopf {

using json = nlohmann::json;

// ---------------------------------------------------------------- text forms

namespace detail {
inline std::string strip(std::string const& s) {
  std::string r;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) r.push_back(ch);
  return r;
}

inline std::vector<int> parse_int_list(std::string const& body, std::string const& what) {
  std::vector<int> out;
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      throw ParseError("malformed " + what + ": '" + body + "'");
    out.push_back(std::stoi(item));
  }
  return out;
}

inline std::string join(std::vector<int> const& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::string bracketed(std::string const& s, char open, char close, std::string const& what) {
  if (s.size() < 2 || s.front() != open || s.back() != close) throw ParseError("malformed " + what + ": '" + s + "'");
  return s.substr(1, s.size() - 2);
}
}  // namespace detail

inline Partition parse_partition(std::string const& text) {
  auto p = detail::parse_int_list(detail::bracketed(detail::strip(text), '[', ']', "partition"), "partition");
  if (!is_partition(p)) throw ParseError("not a partition: '" + text + "'");
  return p;
}

inline Composition parse_composition(std::string const& text) {
  auto a = detail::parse_int_list(detail::bracketed(detail::strip(text), '(', ')', "composition"), "composition");
  if (!is_composition(a)) throw ParseError("not a composition: '" + text + "'");
  return a;
}

inline SkewShape parse_skew(std::string const& text) {
  auto s = detail::strip(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return SkewShape(parse_partition(s));
  try {
    return SkewShape(parse_partition(s.substr(0, slash)), parse_partition(s.substr(slash + 1)));
  } catch (DomainError const& e) {
    throw ParseError(e.what());
  }
}

/// Word as digits ("121") or comma separated letters ("1,10,2").
inline Word parse_word(std::string const& text) {
  auto s = detail::strip(text);
  if (s.find(',') != std::string::npos) return detail::parse_int_list(s, "word");
  Word w;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0') throw ParseError("malformed word: '" + text + "'");
    w.push_back(ch - '0');
  }
  return w;
}

inline SetComposition parse_set_composition(std::string const& text) {
  auto body = detail::bracketed(detail::strip(text), '[', ']', "set composition");
  SetComposition w;
  std::size_t i = 0;
  while (i < body.size()) {
    if (body[i] == '(') {
      auto close = body.find(')', i);
      if (close == std::string::npos) throw ParseError("unbalanced block in '" + text + "'");
      w.push_back(detail::parse_int_list(body.substr(i + 1, close - i - 1), "block"));
      i = close + 1;
    } else {
      auto comma = body.find(',', i);
      auto item = body.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
      w.push_back(detail::parse_int_list(item, "block"));
      i = comma == std::string::npos ? body.size() : comma;
    }
    if (i < body.size()) {
      if (body[i] != ',') throw ParseError("malformed set composition: '" + text + "'");
      ++i;
    }
  }
  for (auto& b : w) std::sort(b.begin(), b.end());
  if (!is_set_composition(w)) throw ParseError("not a set composition: '" + text + "'");
  return w;
}

inline std::string format_partition(Partition const& p) { return "[" + detail::join(p) + "]"; }
inline std::string format_composition(Composition const& a) { return "(" + detail::join(a) + ")"; }

inline std::string format_skew(SkewShape const& s) {
  if (s.inner.empty()) return format_partition(s.outer);
  return format_partition(s.outer) + "/" + format_partition(s.inner);
}

inline std::string format_word(Word const& w) {
  bool digits = std::all_of(w.begin(), w.end(), [](int x) { return x >= 1 && x <= 9; });
  if (!digits) return detail::join(w);
  std::string s;
  for (int x : w) s.push_back(char('0' + x));
  return s;
}

inline std::string format_set_composition(SetComposition const& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    if (w[i].size() == 1) {
      s += std::to_string(w[i][0]);
    } else {
      s += "(" + detail::join(w[i]) + ")";
    }
  }
  return s + "]";
}

/// Labels of these bases are partitions; all others are compositions.
inline bool partition_labelled(std::string const& basis) {
  return basis == "s" || basis == "m" || basis == "g" || basis == "G" || basis == "gtilde" || basis == "Ktilde" ||
         basis == "J" || basis == "j";
}

inline std::string format_label(std::string const& basis, std::vector<int> const& label) {
  return partition_labelled(basis) ? format_partition(label) : format_composition(label);
}

inline std::vector<int> parse_label(std::string const& basis, std::string const& text) {
  return partition_labelled(basis) ? parse_partition(text) : parse_composition(text);
}

// ---------------------------------------------------------------- JSON

inline json integer_json(Integer const& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(c));
  return json(c.str());
}

inline Integer integer_from_json(json const& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw ParseError("coefficient must be an integer");
}

inline json cap_json(std::optional<int> cap) { return cap ? json(*cap) : json(nullptr); }
inline std::optional<int> cap_from_json(json const& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

inline json to_json(WordElement const& x) {
  json terms = json::object();
  for (auto const& [w, c] : x.terms) terms[format_word(w)] = integer_json(c);
  return {{"cap", cap_json(x.cap)}, {"terms", terms}};
}

inline WordElement word_element_from_json(json const& j) {
  WordElement x;
  x.cap = cap_from_json(j.at("cap"));
  for (auto const& [k, v] : j.at("terms").items()) x.terms.add(parse_word(k), integer_from_json(v));
  return x;
}

inline json to_json(SetCompSum const& x, std::optional<int> cap = {}) {
  json terms = json::object();
  for (auto const& [w, c] : x) terms[format_set_composition(w)] = integer_json(c);
  return {{"cap", cap_json(cap)}, {"terms", terms}};
}

inline SetCompSum set_comp_sum_from_json(json const& j) {
  SetCompSum x;
  for (auto const& [k, v] : j.at("terms").items()) x.add(parse_set_composition(k), integer_from_json(v));
  return x;
}

template <class K, class Fmt>
json tensor_json(Tensor<K> const& t, Fmt&& fmt, std::optional<int> cap = {}) {
  json terms = json::array();
  for (auto const& [k, c] : t) terms.push_back(json::array({fmt(k.first), fmt(k.second), integer_json(c)}));
  return {{"cap", cap_json(cap)}, {"terms", terms}};
}

inline json to_json(BasisElement const& b) {
  json coeffs = json::object();
  for (auto const& [l, c] : b.coeffs) coeffs[format_label(b.basis, l)] = integer_json(c);
  return {{"basis", b.basis}, {"cap", cap_json(b.cap)}, {"coeffs", coeffs}};
}

inline BasisElement basis_element_from_json(json const& j) {
  BasisElement b;
  b.basis = j.at("basis").get<std::string>();
  b.cap = cap_from_json(j.at("cap"));
  for (auto const& [k, v] : j.at("coeffs").items()) b.coeffs.add(parse_label(b.basis, k), integer_from_json(v));
  return b;
}

inline json to_json(TruncPoly const& p) {
  json terms = json::object();
  for (auto const& [e, c] : p.terms()) terms["[" + detail::join(e) + "]"] = integer_json(c);
  return {{"nvars", p.nvars()}, {"maxdeg", p.maxdeg()}, {"terms", terms}};
}

inline TruncPoly trunc_poly_from_json(json const& j) {
  TruncPoly p(j.at("nvars").get<int>(), j.at("maxdeg").get<int>());
  for (auto const& [k, v] : j.at("terms").items()) {
    auto e = detail::parse_int_list(detail::bracketed(detail::strip(k), '[', ']', "exponent"), "exponent");
    p.add(e, integer_from_json(v));
  }
  return p;
}

inline std::string kind_name(TableauKind k) {
  switch (k) {
    case TableauKind::ssyt: return "ssyt";
    case TableauKind::svt: return "svt";
    case TableauKind::rpp: return "rpp";
    case TableauKind::weak_svt: return "weak_svt";
    case TableauKind::valued_set: return "valued_set";
    case TableauKind::elegant: return "elegant";
  }
  return "";
}

inline TableauKind parse_kind(std::string const& s) {
  for (auto k : {TableauKind::ssyt, TableauKind::svt, TableauKind::rpp, TableauKind::weak_svt, TableauKind::valued_set,
                 TableauKind::elegant})
    if (kind_name(k) == s) return k;
  throw ParseError("unknown tableau kind '" + s + "'");
}

inline json to_json(IntTableau const& t, TableauKind kind) {
  json cells = json::array();
  auto cs = t.shape.cells();
  for (std::size_t i = 0; i < cs.size(); ++i) cells.push_back({{"r", cs[i].r}, {"c", cs[i].c}, {"v", t.entries[i]}});
  return {{"shape", format_skew(t.shape)}, {"kind", kind_name(kind)}, {"cells", cells}};
}

inline json to_json(SetTableau const& t, TableauKind kind) {
  json cells = json::array();
  auto cs = t.shape.cells();
  for (std::size_t i = 0; i < cs.size(); ++i) cells.push_back({{"r", cs[i].r}, {"c", cs[i].c}, {"v", t.entries[i]}});
  return {{"shape", format_skew(t.shape)}, {"kind", kind_name(kind)}, {"cells", cells}};
}

inline json to_json(ValuedSetTableau const& t) {
  json j = to_json(t.filling, TableauKind::valued_set);
  json groups = json::array();
  for (auto const& g : t.groups()) {
    json cells = json::array();
    for (auto const& x : g) cells.push_back(json::array({x.r, x.c}));
    groups.push_back(cells);
  }
  j["groups"] = groups;
  return j;
}

namespace detail {
template <class Entry>
Tableau<Entry> tableau_from_json(json const& j) {
  Tableau<Entry> t{parse_skew(j.at("shape").get<std::string>()), {}};
  auto cs = t.shape.cells();
  t.entries.resize(cs.size());
  std::vector<char> seen(cs.size(), 0);
  for (auto const& cell : j.at("cells")) {
    Cell x{cell.at("r").get<int>(), cell.at("c").get<int>()};
    if (!t.shape.contains(x)) throw ParseError("cell outside the shape");
    auto i = t.index(x);
    t.entries[i] = cell.at("v").get<Entry>();
    seen[i] = 1;
  }
  if (std::count(seen.begin(), seen.end(), 0)) throw ParseError("tableau has unfilled cells");
  return t;
}
}  // namespace detail

inline IntTableau int_tableau_from_json(json const& j) { return detail::tableau_from_json<int>(j); }
inline SetTableau set_tableau_from_json(json const& j) { return detail::tableau_from_json<std::vector<int>>(j); }

inline ValuedSetTableau valued_set_from_json(json const& j) {
  ValuedSetTableau t{int_tableau_from_json(j), {}};
  t.joins_above.assign(t.filling.entries.size(), 0);
  for (auto const& g : j.at("groups")) {
    std::vector<Cell> cells;
    for (auto const& x : g) cells.push_back({x.at(0).get<int>(), x.at(1).get<int>()});
    std::sort(cells.begin(), cells.end());
    for (std::size_t i = 1; i < cells.size(); ++i) {
      if (cells[i].c != cells[0].c || cells[i].r != cells[i - 1].r + 1) throw ParseError("group is not a vertical run");
      t.joins_above[t.filling.index(cells[i])] = 1;
    }
  }
  if (!is_valid(t)) throw ParseError("not a valued-set tableau");
  return t;
}

inline json to_json(LabeledPoset const& P) {
  json covers = json::array();
  for (auto [s, t] : P.covers()) covers.push_back(json::array({s + 1, t + 1}));
  return {{"n", P.size()}, {"covers", covers}, {"theta", P.theta()}};
}

inline LabeledPoset poset_from_json(json const& j) {
  std::vector<std::pair<int, int>> covers;
  for (auto const& c : j.at("covers")) covers.push_back({c.at(0).get<int>() - 1, c.at(1).get<int>() - 1});
  return LabeledPoset(j.at("n").get<int>(), covers, j.at("theta").get<std::vector<int>>());
}

}  // namespace khopf
