// Command-line front end. Prints JSON on standard output.
// Exit status: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include <khopf/khopf.hpp>
#include <khopf/verify.hpp>

using namespace khopf;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

SkewShape parse_shape(std::string const& text) {
  if (text.find('/') != std::string::npos) return parse_skew(text);
  return SkewShape(parse_partition(text));
}

json read_json_arg(std::string const& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("cannot open " + text.substr(1));
    return json::parse(in);
  }
  return json::parse(text);
}

bool is_setcomp_text(std::string const& s) { return !s.empty() && detail::strip(s)[0] == '['; }

/// Polynomial window of a named series on a skew shape.
TruncPoly series_poly(std::string const& of, SkewShape const& s, int nvars, int maxdeg) {
  if (of == "g") return g_poly(s, nvars, maxdeg);
  if (of == "gtilde") return gtilde_poly(s, nvars, maxdeg);
  if (of == "G") return G_poly(s, nvars, maxdeg);
  if (of == "Ktilde") return Ktilde_poly(s, nvars, maxdeg);
  if (of == "J") return J_poly(s, nvars, maxdeg);
  if (of == "j") return j_poly(s, nvars, maxdeg);
  if (of == "s") return skew_schur(s, nvars, maxdeg);
  throw UsageError("unknown series " + of);
}

/// Whether the series is a finite sum (polynomial degree bounded by the shape size).
bool finite_series(std::string const& of) { return of == "g" || of == "gtilde" || of == "j" || of == "s"; }

json basis_json(BasisElement const& b) {
  json coeffs = json::object();
  for (auto const& [l, c] : b.coeffs) coeffs[format_label(b.basis, l)] = integer_json(c);
  json out = {{b.basis, coeffs}};
  if (b.cap) out["cap"] = *b.cap;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in combinatorial Hopf algebras of K-theoretic type"};
  app.require_subcommand(1);
  unsigned seed = 20240611u;
  app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();

  // expand
  auto* expand = app.add_subcommand("expand", "Expand a series in a classical basis");
  std::string ex_basis, ex_of, ex_label;
  std::optional<int> ex_cap, ex_nvars;
  expand->add_option("--basis", ex_basis, "Target basis: s, m, M, L")->required();
  expand->add_option("--of", ex_of, "Series: g, gtilde, G, Ktilde, J, j, s, Ltilde, Mtilde")->required();
  expand->add_option("--label", ex_label, "Shape \"[2,1]\", \"[3,2]/[1]\" or composition \"(2,1)\"")->required();
  expand->add_option("--cap", ex_cap, "Degree cap for infinite series (default size+3)");
  expand->add_option("--nvars", ex_nvars, "Number of variables (default cap)");

  // product
  auto* product = app.add_subcommand("product", "Product of two basis elements");
  std::string pr_basis, pr_left, pr_right;
  std::optional<int> pr_cap;
  product->add_option("--basis", pr_basis, "Ltilde, Rtilde, mMR, MMR, g, gtilde")->required();
  product->add_option("--left", pr_left)->required();
  product->add_option("--right", pr_right)->required();
  product->add_option("--cap", pr_cap, "Cap for infinite products");

  // coproduct
  auto* coproduct = app.add_subcommand("coproduct", "Coproduct of a basis element");
  std::string co_basis, co_label;
  coproduct->add_option("--basis", co_basis, "Ltilde, mMR, MMR")->required();
  coproduct->add_option("--label", co_label)->required();

  // pump
  auto* pumpc = app.add_subcommand("pump", "Apply the i-th pump to L_a or M_a");
  std::string pu_basis = "L", pu_label;
  int pu_index = 0;
  pumpc->add_option("--basis", pu_basis, "L or M")->capture_default_str();
  pumpc->add_option("--label", pu_label)->required();
  pumpc->add_option("--index", pu_index)->required();

  // pair
  auto* pair = app.add_subcommand("pair", "Hall pairing of two series on shapes");
  std::string pa_lof, pa_left, pa_rof, pa_right;
  std::optional<int> pa_cap;
  pair->add_option("--left-of", pa_lof, "g, gtilde, s, ...")->required();
  pair->add_option("--left", pa_left)->required();
  pair->add_option("--right-of", pa_rof, "G, Ktilde, s, ...")->required();
  pair->add_option("--right", pa_right)->required();
  pair->add_option("--cap", pa_cap, "Cap for infinite operands");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate tableaux or set-valued poset partitions");
  std::string en_kind, en_shape, en_poset;
  int en_entry = 0;
  std::optional<int> en_letters;
  enumerate->add_option("--kind", en_kind, "ssyt, svt, rpp, weak_svt, valued_set, elegant, svpp")->required();
  enumerate->add_option("--shape", en_shape);
  enumerate->add_option("--poset", en_poset, "Poset JSON (or @file) for svpp");
  enumerate->add_option("--max-entry", en_entry);
  enumerate->add_option("--max-letters", en_letters);

  // mjh
  auto* mjh = app.add_subcommand("mjh", "Words of linear multi-extensions");
  std::string mj_shape, mj_poset;
  int mj_length = 0;
  bool mj_profile = false;
  mjh->add_option("--shape", mj_shape);
  mjh->add_option("--poset", mj_poset, "Poset JSON (or @file)");
  mjh->add_option("--length", mj_length)->required();
  mjh->add_flag("--profile", mj_profile, "Print the descent profile instead of the words");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Generating function through the operator engines");
  std::string or_series, or_shape;
  int or_nvars = 0, or_maxdeg = 0;
  oracle->add_option("--series", or_series, "Ktilde, G, J, g, j")->required();
  oracle->add_option("--shape", or_shape)->required();
  oracle->add_option("--nvars", or_nvars)->required();
  oracle->add_option("--maxdeg", or_maxdeg)->required();

  // antipode
  auto* antipode = app.add_subcommand("antipode", "Antipode of an M-permutation");
  std::string an_label;
  antipode->add_option("--label", an_label)->required();

  // factor
  auto* factorc = app.add_subcommand("factor", "Irreducible factorization of an m- or M-permutation");
  std::string fa_label;
  factorc->add_option("--label", fa_label)->required();

  // order
  auto* order = app.add_subcommand("order", "Weak order comparison of M-permutations");
  std::string od_left, od_right;
  std::optional<int> od_bound;
  order->add_option("--left", od_left)->required();
  order->add_option("--right", od_right)->required();
  order->add_option("--bound", od_bound, "Ground set bound (default sum of sizes)");

  // grassmann
  auto* grass = app.add_subcommand("grassmann", "Structure constants of G_lambda G_mu inside a k x (n-k) box");
  std::string gr_left, gr_right;
  int gr_k = 0, gr_n = 0;
  grass->add_option("--left", gr_left)->required();
  grass->add_option("--right", gr_right)->required();
  grass->add_option("-k", gr_k)->required();
  grass->add_option("-n", gr_n)->required();

  // verify
  auto* verifyc = app.add_subcommand("verify", "Run invariant suites");
  std::string ve_suite = "all", ve_size = "small";
  verifyc->add_option("--suite", ve_suite)->capture_default_str();
  verifyc->add_option("--size", ve_size, "small or medium")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    json out;
    if (*expand) {
      if (ex_of == "Ltilde" || ex_of == "Mtilde") {
        auto a = parse_composition(ex_label);
        int cap = ex_cap.value_or(size(a) + 3);
        if (ex_basis != "L" && ex_basis != "M") throw UsageError("multi-fundamental series expand in L or M");
        auto b = ex_of == "Ltilde" ? ltilde_in_L(a, cap) : mtilde_in_L(a, cap);
        if (ex_basis == "M") b = BasisElement{"M", fundamental_to_monomial(b.coeffs), b.cap};
        out = basis_json(b);
      } else {
        auto s = parse_shape(ex_label);
        bool fin = finite_series(ex_of);
        int cap = fin ? s.size() : ex_cap.value_or(s.size() + 3);
        int nvars = ex_nvars.value_or(std::max(cap, 1));
        auto poly = series_poly(ex_of, s, nvars, cap);
        std::optional<int> mark = fin ? std::nullopt : std::optional<int>(cap);
        BasisElement b;
        if (ex_basis == "s" || ex_basis == "m") {
          b = expand_symmetric(poly, ex_basis, mark);
        } else if (ex_basis == "M" || ex_basis == "L") {
          b = expand_quasisymmetric(poly, ex_basis, mark);
        } else {
          throw UsageError("unknown basis " + ex_basis);
        }
        out = basis_json(b);
      }
    } else if (*product) {
      if (pr_basis == "Ltilde") {
        auto a = parse_composition(pr_left), b = parse_composition(pr_right);
        out = to_json(ltilde_product(a, b, pr_cap.value_or(size(a) + size(b) + 3)));
      } else if (pr_basis == "Rtilde") {
        out = to_json(rtilde_product(parse_composition(pr_left), parse_composition(pr_right)));
      } else if (pr_basis == "mMR") {
        auto w = parse_word(pr_left), u = parse_word(pr_right);
        out = to_json(mmr_product(w, u, pr_cap.value_or(int(w.size() + u.size()) + 1)));
      } else if (pr_basis == "MMR") {
        out = to_json(mmr_big_product(parse_set_composition(pr_left), parse_set_composition(pr_right)));
      } else if (pr_basis == "g" || pr_basis == "gtilde") {
        auto r = pr_basis == "g" ? g_ribbon_product(parse_shape(pr_left), parse_shape(pr_right))
                                 : gtilde_ribbon_product(parse_shape(pr_left), parse_shape(pr_right));
        json coeffs = json::object();
        for (auto const& [s, c] : r) coeffs[format_skew(s)] = integer_json(c);
        out = {{"basis", pr_basis}, {"cap", nullptr}, {"coeffs", coeffs}};
      } else {
        throw UsageError("unknown basis " + pr_basis);
      }
    } else if (*coproduct) {
      if (co_basis == "Ltilde") {
        out = tensor_json(ltilde_coproduct(parse_composition(co_label)), format_composition);
      } else if (co_basis == "mMR") {
        out = tensor_json(mmr_coproduct(parse_word(co_label)), format_word);
      } else if (co_basis == "MMR") {
        out = tensor_json(mmr_big_coproduct(parse_set_composition(co_label)), format_set_composition);
      } else {
        throw UsageError("unknown basis " + co_basis);
      }
    } else if (*pumpc) {
      if (pu_basis != "L" && pu_basis != "M") throw UsageError("pump acts on L or M");
      BasisElement f{pu_basis, {}, {}};
      f.coeffs.add(parse_composition(pu_label), 1);
      out = to_json(pump(f, pu_index));
    } else if (*pair) {
      auto left = parse_shape(pa_left), right = parse_shape(pa_right);
      auto side = [&](std::string const& of, SkewShape const& s) {
        bool fin = finite_series(of);
        int cap = fin ? s.size() : pa_cap.value_or(std::max(left.size(), right.size()) + 3);
        auto poly = series_poly(of, s, std::max(cap, 1), cap);
        return expand_symmetric(poly, "s", fin ? std::nullopt : std::optional<int>(cap));
      };
      auto a = side(pa_lof, left), b = side(pa_rof, right);
      out = {{"value", integer_json(hall_pair(a, b))}};
    } else if (*enumerate) {
      out = json::array();
      if (en_kind == "svpp") {
        if (en_poset.empty()) throw UsageError("svpp needs --poset");
        auto P = poset_from_json(read_json_arg(en_poset));
        for (auto const& s : enumerate_svpp(P, en_letters.value_or(P.size()), en_entry)) out.push_back(s);
      } else {
        if (en_shape.empty()) throw UsageError("enumerate needs --shape");
        auto s = parse_shape(en_shape);
        auto kind = parse_kind(en_kind);
        FillBounds b{en_entry, en_letters};
        switch (kind) {
          case TableauKind::ssyt: for_each_ssyt(s, en_entry, [&](IntTableau const& t) { out.push_back(to_json(t, kind)); }); break;
          case TableauKind::rpp: for_each_rpp(s, en_entry, [&](IntTableau const& t) { out.push_back(to_json(t, kind)); }); break;
          case TableauKind::elegant: for_each_elegant(s, [&](IntTableau const& t) { out.push_back(to_json(t, kind)); }); break;
          case TableauKind::svt: for_each_svt(s, b, [&](SetTableau const& t) { out.push_back(to_json(t, kind)); }); break;
          case TableauKind::weak_svt: for_each_weak_svt(s, b, [&](SetTableau const& t) { out.push_back(to_json(t, kind)); }); break;
          case TableauKind::valued_set: for_each_valued_set(s, b, [&](ValuedSetTableau const& t) { out.push_back(to_json(t)); }); break;
        }
      }
    } else if (*mjh) {
      LabeledPoset P;
      if (!mj_poset.empty()) {
        P = poset_from_json(read_json_arg(mj_poset));
      } else if (!mj_shape.empty()) {
        P = shape_poset(parse_shape(mj_shape));
      } else {
        throw UsageError("mjh needs --shape or --poset");
      }
      if (mj_profile) {
        out = json::array();
        for (auto const& c : descent_profile(P, mj_length)) out.push_back(integer_json(c));
      } else {
        out = json::array();
        for (auto const& w : multi_jordan_holder(P, mj_length)) out.push_back(format_word(w));
      }
    } else if (*oracle) {
      auto s = parse_shape(or_shape);
      TruncPoly p;
      if (or_series == "Ktilde") p = gf_via_operators(Engine::diagonal, Form::A, s, or_nvars, or_maxdeg);
      else if (or_series == "G") p = G_via_operators(s, or_nvars, or_maxdeg);
      else if (or_series == "J") p = gf_via_operators(Engine::diagonal, Form::B, s, or_nvars, or_maxdeg);
      else if (or_series == "g") p = gf_via_operators(Engine::column, Form::A, s, or_nvars, or_maxdeg);
      else if (or_series == "j") p = gf_via_operators(Engine::column, Form::B, s, or_nvars, or_maxdeg);
      else throw UsageError("unknown series " + or_series);
      out = to_json(p);
    } else if (*antipode) {
      out = to_json(mmr_antipode(parse_set_composition(an_label)));
    } else if (*factorc) {
      out = json::array();
      if (is_setcomp_text(fa_label)) {
        for (auto const& f : factor(parse_set_composition(fa_label))) out.push_back(format_set_composition(f));
      } else {
        for (auto const& f : factor(parse_word(fa_label))) out.push_back(format_word(f));
      }
    } else if (*order) {
      auto w = parse_set_composition(od_left), v = parse_set_composition(od_right);
      int bound = od_bound.value_or(ground_size(w) + ground_size(v));
      out = {{"leq", weak_order_leq(w, v, bound)}, {"bound", bound}};
    } else if (*grass) {
      json coeffs = json::object();
      for (auto const& [nu, c] : grassmann_constants(parse_partition(gr_left), parse_partition(gr_right), gr_k, gr_n))
        coeffs[format_partition(nu)] = integer_json(c);
      out = {{"G", coeffs}};
    } else if (*verifyc) {
      verify::Options o;
      if (ve_size == "small") o.size = 0;
      else if (ve_size == "medium") o.size = 1;
      else throw UsageError("size must be small or medium");
      o.seed = seed;
      auto results = verify::run_suite(ve_suite, o);
      bool all_ok = true;
      for (auto const& r : results) {
        std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << r.module << ": " << r.property;
        if (!r.ok) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        all_ok = all_ok && r.ok;
      }
      std::cout << results.size() << " checks, " << (all_ok ? "all passed" : "failures present") << ", seed " << seed << "\n";
      return all_ok ? 0 : 1;
    }
    std::cout << out.dump() << "\n";
    return 0;
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (json::exception const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (UndecidedAtBound const& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return 1;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
