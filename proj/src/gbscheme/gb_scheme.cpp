#include "gbscheme/gb_scheme.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "polycore/division.hpp"
#include "polycore/errors.hpp"
#include "polycore/ordered_poly.hpp"
#include "polycore/polyio.hpp"

namespace bbs::gbscheme {

using polycore::OrderedPoly;
using polycore::VariableUniverse;

namespace {

CIndex key(size_t i0, size_t j0) { return {static_cast<int>(i0 + 1), static_cast<int>(j0 + 1)}; }

std::vector<std::string> x_names(const OrderIdealData& O) {
  const auto& names = O.universe()->names();
  return {names.begin(), names.begin() + static_cast<long>(O.universe()->x_count())};
}

std::int64_t v_degree(const Term& t, const std::vector<std::int64_t>& V) {
  std::int64_t d = 0;
  for (size_t k = 0; k < V.size(); ++k) d += V[k] * t[k];
  return d;
}

// A term of O's x-universe lifted into a universe whose first variables are
// the same x-variables.
Term lift(const Term& t, size_t nvars) {
  Term r(nvars);
  for (size_t v = 0; v < t.size(); ++v) r.set(v, t[v]);
  return r;
}

TermOrdering sigma_on(const OrderIdealData& O, const TermOrdering& sigma) {
  return sigma.rebased(O.universe());
}

}  // namespace

bool SchemeVars::in_S(CIndex k) const { return std::binary_search(S_O.begin(), S_O.end(), k, [](CIndex a, CIndex b) {
    return a.j != b.j ? a.j < b.j : a.i < b.i;
  }); }

SchemeVars split_variables(const OrderIdealData& O, const TermOrdering& sigma_in) {
  TermOrdering sigma = sigma_on(O, sigma_in);
  SchemeVars sv;
  sv.mu = O.mu();
  sv.nu = O.nu();
  sv.eta = O.eta();
  for (size_t j = 0; j < O.nu(); ++j)
    for (size_t i = 0; i < O.mu(); ++i) {
      bool s = sigma.greater(O.border()[j], O.terms()[i]);
      (s ? sv.S_O : sv.L_O).push_back(key(i, j));
      if (j < O.eta()) (s ? sv.S_cO : sv.L_cO).push_back(key(i, j));
    }
  return sv;
}

UniversePtr gb_scheme_universe(const SchemeVars& sv) { return VariableUniverse::make({}, sv.S_cO); }

std::vector<Polynomial> generic_gb_prebasis(const OrderIdealData& O, const TermOrdering& sigma) {
  SchemeVars sv = split_variables(O, sigma);
  UniversePtr u = borderscheme::scheme_universe(O);
  std::vector<Polynomial> out;
  for (size_t j = 0; j < O.nu(); ++j) {
    std::vector<Polynomial::Entry> entries{{lift(O.border()[j], u->size()), Rational(1)}};
    for (size_t i = 0; i < O.mu(); ++i) {
      if (!sv.in_S(key(i, j))) continue;
      Term t = lift(O.terms()[i], u->size());
      t.set(u->c_index(key(i, j)), 1);
      entries.emplace_back(std::move(t), Rational(-1));
    }
    out.push_back(Polynomial::from_entries(u, std::move(entries)));
  }
  return out;
}

WeightSystem weights_from_V(const OrderIdealData& O, const TermOrdering& sigma, std::vector<std::int64_t> V) {
  if (V.size() != O.n()) throw PreconditionError("V needs one weight per x-variable");
  for (auto v : V)
    if (v <= 0) throw PreconditionError("V must be positive");
  SchemeVars sv = split_variables(O, sigma);
  WeightSystem ws;
  ws.V = std::move(V);
  for (CIndex k : sv.S_O) {
    std::int64_t w = v_degree(O.border()[static_cast<size_t>(k.j - 1)], ws.V) -
                     v_degree(O.terms()[static_cast<size_t>(k.i - 1)], ws.V);
    if (w <= 0)
      throw PreconditionError("V does not separate " + polycore::c_name(k) + ": deg_V(b_j) - deg_V(t_i) = " +
                              std::to_string(w));
    ws.Wbar.emplace(k, w);
    if (static_cast<size_t>(k.j) <= sv.eta) ws.W.emplace(k, w);
  }
  return ws;
}

namespace {

bool separates(const std::vector<std::pair<Term, Term>>& pairs, const std::vector<std::int64_t>& V) {
  return std::all_of(pairs.begin(), pairs.end(),
                     [&V](const auto& p) { return v_degree(p.first, V) > v_degree(p.second, V); });
}

// Every vector in [1, m]^n with some entry equal to m, in lexicographic order.
bool scan_max(size_t n, std::int64_t m, const std::vector<std::pair<Term, Term>>& pairs,
              std::vector<std::int64_t>& out) {
  std::vector<std::int64_t> v(n, 1);
  while (true) {
    if (std::find(v.begin(), v.end(), m) != v.end() && separates(pairs, v)) {
      out = v;
      return true;
    }
    size_t k = n;
    while (k > 0 && v[k - 1] == m) v[--k] = 1;
    if (k == 0) return false;
    ++v[k - 1];
  }
}

}  // namespace

WeightSystem find_weights(const OrderIdealData& O, const TermOrdering& sigma_in) {
  TermOrdering sigma = sigma_on(O, sigma_in);
  SchemeVars sv = split_variables(O, sigma);
  std::vector<std::pair<Term, Term>> pairs;
  for (CIndex k : sv.S_O)
    pairs.emplace_back(O.border()[static_cast<size_t>(k.j - 1)], O.terms()[static_cast<size_t>(k.i - 1)]);
  const size_t n = O.n();
  unsigned maxdeg = 0;
  for (const Term& b : O.border()) maxdeg = std::max(maxdeg, b.degree());
  const std::int64_t cap = 4 * static_cast<std::int64_t>(O.mu()) * maxdeg;
  // The exhaustive scan visits cap^n vectors; keep it to desk scale.
  double budget = 1;
  for (size_t k = 0; k < n; ++k) budget *= static_cast<double>(cap);
  std::vector<std::int64_t> V;
  if (budget <= 5e6)
    for (std::int64_t m = 1; m <= cap; ++m)
      if (scan_max(n, m, pairs, V)) return weights_from_V(O, sigma, V);

  // sum_k N^(R-k) row_k + (1, .., 1) follows sigma on the finitely many pairs
  // once N is large enough.
  const auto& rows = sigma.rows();
  for (std::int64_t N = 2; N < (std::int64_t{1} << 20); N *= 2) {
    V.assign(n, 1);
    bool overflow = false;
    std::int64_t scale = 1;
    for (size_t r = rows.size(); r-- > 0;) {
      for (auto [v, w] : rows[r].entries) V[v] += scale * w;
      if (scale > std::numeric_limits<std::int64_t>::max() / N / 64) {
        overflow = r > 0;
        break;
      }
      scale *= N;
    }
    if (overflow) break;
    if (std::all_of(V.begin(), V.end(), [](std::int64_t x) { return x > 0; }) && separates(pairs, V))
      return weights_from_V(O, sigma, V);
  }
  throw InvariantViolation("no positive weight vector separates the border from O");
}

TermOrdering sigma_bar_ordering(const OrderIdealData& O, const TermOrdering& sigma, const WeightSystem& ws) {
  UniversePtr u = borderscheme::scheme_universe(O);
  std::vector<std::int64_t> weights(u->size(), 0);
  for (size_t v = 0; v < O.n(); ++v) weights[v] = ws.V.at(v);
  for (const auto& [k, w] : ws.Wbar) weights[u->c_index(k)] = w;
  return TermOrdering::sigma_bar(u, std::move(weights), sigma_on(O, sigma));
}

namespace {

// Splits sum_k coeff_k * xterm_k * cterm_k into O-coefficients over `target`
// (a c-only universe). Throws InvariantViolation when an x-part lies outside O.
std::vector<Polynomial> o_coefficients(const OrderedPoly& r, const OrderIdealData& O, const VariableUniverse& src,
                                       const UniversePtr& target) {
  const size_t nx = O.n();
  std::vector<size_t> map(src.size(), 0);
  for (size_t v = nx; v < src.size(); ++v) map[v] = target->find(src.name(v)).value_or(target->size());
  std::vector<std::vector<Polynomial::Entry>> parts(O.mu());
  for (const auto& [t, c] : r.terms) {
    Term xs(nx);
    for (size_t v = 0; v < nx; ++v) xs.set(v, t[v]);
    auto i = O.index_of(xs);
    if (!i) throw InvariantViolation("reduction left the term " + polycore::format_term(xs, *O.universe()) +
                                     " outside the span of O");
    Term cs(target->size());
    for (size_t v = nx; v < src.size(); ++v) {
      if (!t[v]) continue;
      if (map[v] == target->size()) throw InvariantViolation("coefficient mentions '" + src.name(v) + "'");
      cs.set(map[v], t[v]);
    }
    parts[*i].emplace_back(std::move(cs), c);
  }
  std::vector<Polynomial> out;
  for (auto& p : parts) out.push_back(Polynomial::from_entries(target, std::move(p)));
  return out;
}

std::vector<OrderedPoly> ordered_corner_prebasis(const OrderIdealData& O, const TermOrdering& sigma,
                                                 const TermOrdering& sbar) {
  auto gstar = generic_gb_prebasis(O, sigma);
  std::vector<OrderedPoly> out;
  for (size_t j = 0; j < O.eta(); ++j) {
    out.push_back(polycore::order_terms(gstar[j], sbar));
    if (out.back().lead() != lift(O.border()[j], sbar.universe()->size()))
      throw InvariantViolation("leading term of g_j* under sigma-bar is not b_j");
  }
  return out;
}

}  // namespace

std::map<CIndex, Polynomial> h_polynomials(const OrderIdealData& O, const TermOrdering& sigma,
                                           const WeightSystem& ws) {
  SchemeVars sv = split_variables(O, sigma);
  UniversePtr target = gb_scheme_universe(sv);
  TermOrdering sbar = sigma_bar_ordering(O, sigma, ws);
  const UniversePtr& u = sbar.universe();
  auto corners = ordered_corner_prebasis(O, sigma, sbar);
  std::vector<polycore::Divisor> divs;
  for (const auto& g : corners) divs.push_back(polycore::make_divisor(g));
  std::vector<std::int64_t> wv = w_vector(target, ws);

  std::map<CIndex, Polynomial> h;
  for (size_t j = O.eta(); j < O.nu(); ++j) {
    OrderedPoly b;
    b.terms.emplace_back(lift(O.border()[j], u->size()), Rational(1));
    OrderedPoly r = polycore::reduce(std::move(b), divs, sbar);
    auto coeffs = o_coefficients(r, O, *u, target);
    for (size_t i = 0; i < O.mu(); ++i) {
      CIndex k = key(i, j);
      if (!sv.in_S(k)) {
        if (!coeffs[i].is_zero())
          throw InvariantViolation("remainder of b_j has a t_i-coefficient with b_j <= t_i at " + polycore::c_name(k));
        continue;
      }
      if (!coeffs[i].is_zero()) {
        auto hom = polycore::is_homogeneous(coeffs[i], wv);
        if (!hom.homogeneous || *hom.degree != ws.Wbar.at(k))
          throw InvariantViolation("h at " + polycore::c_name(k) + " is not W-homogeneous of degree Wbar = " +
                                   std::to_string(ws.Wbar.at(k)));
      }
      h.emplace(k, std::move(coeffs[i]));
    }
  }
  return h;
}

Route parse_route(const std::string& name) {
  std::string n;
  for (char ch : name) n.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (n == "substitution") return Route::Substitution;
  if (n == "reduction") return Route::Reduction;
  if (n == "elimination" || n == "elimination-oracle" || n == "eliminationoracle") return Route::EliminationOracle;
  throw ParseError("unknown route '" + name + "' (expected substitution, reduction or elimination)");
}

std::string route_name(Route r) {
  switch (r) {
    case Route::Substitution: return "substitution";
    case Route::Reduction: return "reduction";
    case Route::EliminationOracle: return "elimination";
  }
  return "unknown";
}

namespace {

void add_unique(std::vector<Polynomial>& gens, std::set<std::vector<Polynomial::Entry>>& seen, Polynomial p) {
  if (p.is_zero()) return;
  std::vector<Polynomial::Entry> sig(p.terms().begin(), p.terms().end());
  if (seen.insert(std::move(sig)).second) gens.push_back(std::move(p));
}

Ideal substitution_route(const OrderIdealData& O, const TermOrdering& sigma, const SchemeVars& sv,
                         const UniversePtr& target) {
  Ideal B = borderscheme::border_scheme_ideal(O);
  const UniversePtr& cu = B.universe();
  std::map<size_t, Polynomial> rules;
  for (CIndex k : sv.L_O) rules.emplace(cu->c_index(k), Polynomial(cu));
  for (auto& [k, h] : h_polynomials(O, sigma, find_weights(O, sigma))) rules.emplace(cu->c_index(k), h.rebase(cu));
  std::vector<Polynomial> gens;
  std::set<std::vector<Polynomial::Entry>> seen;
  Ideal substituted = gbengine::substitution_eliminate(B, rules);
  for (const auto& g : substituted.generators()) add_unique(gens, seen, g.rebase(target));
  return Ideal(target, std::move(gens));
}

Ideal reduction_route(const OrderIdealData& O, const TermOrdering& sigma, const UniversePtr& target,
                      polycore::DivisorSelection reducer) {
  WeightSystem ws = find_weights(O, sigma);
  TermOrdering sbar = sigma_bar_ordering(O, sigma, ws);
  const UniversePtr& u = sbar.universe();
  auto corners = ordered_corner_prebasis(O, sigma, sbar);
  std::vector<polycore::Divisor> divs;
  for (const auto& g : corners) divs.push_back(polycore::make_divisor(g));
  std::vector<Polynomial> gens;
  std::set<std::vector<Polynomial::Entry>> seen;
  for (size_t a = 0; a < corners.size(); ++a)
    for (size_t b = a + 1; b < corners.size(); ++b) {
      Term l = Term::lcm(corners[a].lead(), corners[b].lead());
      OrderedPoly s;
      Term ma = l.quotient(corners[a].lead());
      for (size_t k = 1; k < corners[a].terms.size(); ++k)
        s.terms.emplace_back(corners[a].terms[k].first * ma, corners[a].terms[k].second);
      std::vector<Polynomial::Entry> tail(corners[b].terms.begin() + 1, corners[b].terms.end());
      polycore::subtract_multiple(s.terms, 0, Rational(1), l.quotient(corners[b].lead()), tail, sbar);
      OrderedPoly r = polycore::reduce(std::move(s), divs, sbar, reducer);
      for (auto& c : o_coefficients(r, O, *u, target)) add_unique(gens, seen, std::move(c));
    }
  return Ideal(target, std::move(gens));
}

Ideal elimination_route(const OrderIdealData& O, const TermOrdering& sigma, const SchemeVars& sv,
                        const UniversePtr& target, const GbOptions& opts) {
  Ideal B = borderscheme::border_scheme_ideal(O);
  const UniversePtr& cu = B.universe();
  std::vector<Polynomial> gens = B.generators();
  for (CIndex k : sv.L_O) gens.push_back(Polynomial::variable(cu, cu->c_index(k)));
  std::vector<size_t> keep;
  std::vector<std::int64_t> weights(cu->size(), 0);
  for (auto [k, w] : find_weights(O, sigma).W) {
    keep.push_back(cu->c_index(k));
    weights[cu->c_index(k)] = w;
  }
  std::sort(keep.begin(), keep.end());
  Ideal E = gbengine::eliminate(Ideal(cu, std::move(gens)), keep, opts, w_graded_ordering(cu, weights));
  std::vector<Polynomial> out;
  for (const auto& g : E.generators()) out.push_back(g.rebase(target));
  return Ideal(target, std::move(out));
}

}  // namespace

Ideal gb_scheme_ideal(const OrderIdealData& O, const TermOrdering& sigma, Route route, const SchemeOptions& opts) {
  SchemeVars sv = split_variables(O, sigma);
  UniversePtr target = gb_scheme_universe(sv);
  switch (route) {
    case Route::Substitution: return substitution_route(O, sigma, sv, target);
    case Route::Reduction: return reduction_route(O, sigma, target, opts.reducer);
    case Route::EliminationOracle: return elimination_route(O, sigma, sv, target, opts.gb);
  }
  throw InvariantViolation("unknown route");
}

bool HomogeneityReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

std::optional<Polynomial> homogeneity_witness(const Ideal& I, const std::vector<std::int64_t>& weights,
                                              const GbOptions& opts) {
  const UniversePtr& u = I.universe();
  for (size_t v = 0; v < u->size(); ++v)
    if (weights.at(v) <= 0) throw PreconditionError("weight of '" + u->name(v) + "' must be positive");
  bool generators_ok = std::all_of(I.generators().begin(), I.generators().end(), [&weights](const Polynomial& g) {
    return polycore::is_homogeneous(g, weights).homogeneous;
  });
  if (generators_ok) return std::nullopt;
  TermOrdering graded = TermOrdering::weighted(weights, TermOrdering::degrevlex(u));
  for (const auto& g : gbengine::groebner_basis(I, graded, opts).polys)
    if (!polycore::is_homogeneous(g, weights).homogeneous) return g;
  return std::nullopt;
}

std::vector<std::int64_t> w_vector(const UniversePtr& u, const WeightSystem& ws) {
  std::vector<std::int64_t> w(u->size(), 0);
  for (size_t v = 0; v < u->size(); ++v) {
    switch (u->block(v)) {
      case VariableUniverse::Block::X: w[v] = ws.V.at(v); break;
      case VariableUniverse::Block::C: {
        auto it = ws.Wbar.find(u->c_key(v));
        if (it != ws.Wbar.end()) w[v] = it->second;
        break;
      }
      case VariableUniverse::Block::T: break;
    }
  }
  return w;
}

HomogeneityReport verify_homogeneity(const OrderIdealData& O, const TermOrdering& sigma, const WeightSystem& ws,
                                     const GbOptions& opts) {
  SchemeVars sv = split_variables(O, sigma);
  auto xs = x_names(O);
  Ideal IG = gb_scheme_ideal(O, sigma, Route::Substitution, {polycore::DivisorSelection::First, opts});
  auto gstar = generic_gb_prebasis(O, sigma);

  // Restrict a weight system to a universe; W for (b)/(c), Wbar for (d)/(e).
  auto weights_for = [&ws](const UniversePtr& u, bool bar) {
    std::vector<std::int64_t> w(u->size(), 0);
    for (size_t v = 0; v < u->size(); ++v) {
      if (u->block(v) == VariableUniverse::Block::X) {
        w[v] = ws.V.at(v);
        continue;
      }
      const auto& m = bar ? ws.Wbar : ws.W;
      auto it = m.find(u->c_key(v));
      if (it == m.end()) throw PreconditionError("weight system has no entry for " + u->name(v));
      w[v] = it->second;
    }
    return w;
  };

  HomogeneityReport rep;
  auto run = [&](std::string claim, std::string what, const Ideal& I, bool bar) {
    ClaimResult c{std::move(claim), std::move(what), false, std::nullopt};
    c.witness = homogeneity_witness(I, weights_for(I.universe(), bar), opts);
    c.pass = !c.witness;
    rep.claims.push_back(std::move(c));
  };

  run("b", "I(G) is W-homogeneous", IG, false);

  UniversePtr xc = VariableUniverse::make(xs, sv.S_cO);
  std::vector<Polynomial> gc;
  for (const auto& g : IG.generators()) gc.push_back(g.rebase(xc));
  for (size_t j = 0; j < O.eta(); ++j) gc.push_back(gstar[j].rebase(xc));
  run("c", "I(G) + (g_1*, ..., g_eta*) is (V,W)-homogeneous", Ideal(xc, std::move(gc)), false);

  Ideal B = borderscheme::border_scheme_ideal(O);
  const UniversePtr& cu = B.universe();
  std::map<size_t, Polynomial> kill;
  for (CIndex k : sv.L_O) kill.emplace(cu->c_index(k), Polynomial(cu));
  UniversePtr su = VariableUniverse::make({}, sv.S_O);
  std::vector<Polynomial> gd;
  for (const auto& g : B.generators()) {
    Polynomial r = g.substitute(kill);
    if (!r.is_zero()) gd.push_back(r.rebase(su));
  }
  run("d", "image of I(B_O) modulo L is Wbar-homogeneous", Ideal(su, gd), true);

  UniversePtr xsu = VariableUniverse::make(xs, sv.S_O);
  std::vector<Polynomial> ge;
  for (const auto& g : gd) ge.push_back(g.rebase(xsu));
  for (const auto& g : gstar) ge.push_back(g.rebase(xsu));
  run("e", "that image plus (g_1*, ..., g_nu*) is (V,Wbar)-homogeneous", Ideal(xsu, std::move(ge)), true);
  return rep;
}

bool is_sigma_cornercut(const OrderIdealData& O, const TermOrdering& sigma_in) {
  TermOrdering sigma = sigma_on(O, sigma_in);
  for (const Term& b : O.corners())
    for (const Term& t : O.terms())
      if (!sigma.greater(b, t)) return false;
  return true;
}

bool is_V_cornercut(const OrderIdealData& O, const std::vector<std::int64_t>& V) {
  for (const Term& b : O.corners())
    for (const Term& t : O.terms())
      if (v_degree(b, V) <= v_degree(t, V)) return false;
  return true;
}

bool has_maxdeg_border(const OrderIdealData& O, const std::vector<std::int64_t>& V) {
  for (const Term& b : O.corners())
    for (const Term& t : O.terms())
      if (v_degree(b, V) < v_degree(t, V)) return false;
  return true;
}

namespace {

// A variable v and coefficient a with f = a*v + g, v not in g.
std::optional<std::pair<size_t, Rational>> solvable_variable(const Polynomial& f) {
  for (size_t v : f.variables()) {
    size_t occurrences = 0;
    std::optional<Rational> a;
    for (const auto& [t, c] : f.terms()) {
      if (!t[v]) continue;
      ++occurrences;
      if (t[v] == 1 && t.degree() == 1) a = c;
    }
    if (occurrences == 1 && a) return std::make_pair(v, *a);
  }
  return std::nullopt;
}

// Weight first, then lower standard degree first, then DegRevLex: a variable
// occurring linearly in a homogeneous element becomes its leading term.

}  // namespace

TermOrdering w_graded_ordering(const UniversePtr& u, const std::vector<std::int64_t>& weights) {
  if (weights.size() != u->size()) throw PreconditionError("one weight per variable is required");
  TermOrdering::Row w, neg;
  std::vector<size_t> ranked;
  for (size_t v = 0; v < u->size(); ++v) {
    if (weights[v] < 0) throw PreconditionError("negative weight on '" + u->name(v) + "'");
    if (weights[v] == 0) continue;
    w.entries.emplace_back(v, weights[v]);
    neg.entries.emplace_back(v, -1);
    ranked.push_back(v);
  }
  std::vector<TermOrdering::Row> rows{std::move(w), std::move(neg)};
  TermOrdering drl = TermOrdering::degrevlex(u, ranked);
  rows.insert(rows.end(), drl.rows().begin(), drl.rows().end());
  return TermOrdering::matrix(u, std::move(rows), std::move(ranked));
}

AffineCell affine_cell_detect(const Ideal& J, const std::vector<std::int64_t>& weights, const GbOptions& opts) {
  const UniversePtr& u = J.universe();
  if (weights.size() != u->size()) throw PreconditionError("one weight per variable is required");
  if (auto w = homogeneity_witness(J, weights, opts))
    throw PreconditionError("ideal is not homogeneous for the given weights: " + polycore::format_polynomial(*w));

  std::vector<Polynomial> gens = J.generators();
  std::vector<bool> gone(u->size(), false);
  std::vector<std::string> order;
  bool tried_basis = false;
  while (!gens.empty()) {
    std::optional<size_t> pick;
    std::pair<size_t, Rational> lin;
    for (size_t k = 0; k < gens.size() && !pick; ++k)
      if (auto s = solvable_variable(gens[k])) {
        pick = k;
        lin = *s;
      }
    if (!pick) {
      if (tried_basis) break;
      gens = gbengine::buchberger(gens, w_graded_ordering(u, weights), opts);
      tried_basis = true;
      continue;
    }
    tried_basis = false;
    auto [v, a] = lin;
    Polynomial value = (Polynomial::monomial(u, Term::variable(u->size(), v), a) - gens[*pick]).scale(1 / a);
    std::map<size_t, Polynomial> rule{{v, value}};
    std::vector<Polynomial> next;
    for (size_t m = 0; m < gens.size(); ++m) {
      if (m == *pick) continue;
      Polynomial g = gens[m].substitute(rule);
      if (!g.is_zero()) next.push_back(std::move(g));
    }
    gens = std::move(next);
    gone[v] = true;
    order.push_back(u->name(v));
  }
  std::vector<size_t> keep;
  for (size_t v = 0; v < u->size(); ++v)
    if (!gone[v]) keep.push_back(v);
  UniversePtr target = polycore::sub_universe(*u, keep);
  std::vector<Polynomial> residual;
  for (const auto& g : gens) residual.push_back(g.rebase(target));
  AffineCell cell{residual.empty(), {}, std::move(order), Ideal(target, std::move(residual))};
  for (size_t v : keep) cell.free_variables.push_back(u->name(v));
  return cell;
}

PointFromIdeal point_from_ideal(const Ideal& I, const TermOrdering& sigma_in, const GbOptions& opts) {
  const UniversePtr& u = I.universe();
  if (u->c_count() || u->has_t()) throw PreconditionError("point_from_ideal needs an ideal in the x-variables only");
  TermOrdering sigma = sigma_in.rebased(u);
  auto gb = gbengine::groebner_basis(I, sigma, opts);
  std::vector<Term> lts;
  for (const auto& g : gb.polys) lts.push_back(polycore::leading_term(g, sigma));
  auto M = gbengine::minimalize(u, std::move(lts));
  auto O = gbengine::complement_order_ideal(M);
  if (!O) throw PreconditionError("ideal is not zero-dimensional");
  SchemePoint p(O->mu(), O->nu());
  for (size_t j = 0; j < O->nu(); ++j) {
    Polynomial nf = gbengine::reduce_modulo(Polynomial::monomial(u, O->border()[j]), gb.polys, sigma);
    for (const auto& [t, c] : nf.terms()) {
      auto i = O->index_of(t);
      if (!i) throw InvariantViolation("normal form escapes the span of O");
      p.set(key(*i, j), c);
    }
  }
  SchemeVars sv = split_variables(*O, sigma);
  for (CIndex k : sv.L_O)
    if (p.at(k) != 0) throw InvariantViolation("nonzero coordinate at " + polycore::c_name(k) + " in L");
  return {std::move(*O), std::move(p)};
}

SchemePoint expand_point(const OrderIdealData& O, const TermOrdering& sigma, const SchemePoint& p) {
  if (p.mu() != O.mu() || p.nu() != O.nu()) throw PreconditionError("scheme point does not match the order ideal grid");
  SchemeVars sv = split_variables(O, sigma);
  UniversePtr gu = gb_scheme_universe(sv);
  SchemePoint full(O.mu(), O.nu());
  for (CIndex k : sv.S_cO) full.set(k, p.at(k));
  auto values = full.assignment(*gu);
  for (const auto& [k, h] : h_polynomials(O, sigma, find_weights(O, sigma))) {
    Polynomial e = h.evaluate(values);
    full.set(k, e.is_zero() ? Rational(0) : e.terms()[0].second);
  }
  auto check = borderscheme::check_border_basis_point(O, full);
  if (!check.on_scheme) {
    auto cu = borderscheme::coefficient_universe(O);
    std::map<size_t, Polynomial> kill;
    for (CIndex k : sv.L_O) kill.emplace(cu->c_index(k), Polynomial(cu));
    throw PreconditionError("not a point of the Groebner basis scheme: generator " +
                            polycore::format_polynomial(check.witness->substitute(kill)) + " does not vanish");
  }
  return full;
}

std::vector<Polynomial> ideal_from_point(const OrderIdealData& O, const TermOrdering& sigma_in, const SchemePoint& p) {
  TermOrdering sigma = sigma_on(O, sigma_in);
  SchemePoint full = expand_point(O, sigma, p);
  auto all = borderscheme::specialize_prebasis(O, full);
  std::vector<Polynomial> out(all.begin(), all.begin() + static_cast<long>(O.eta()));
  std::sort(out.begin(), out.end(), [&sigma](const Polynomial& a, const Polynomial& b) {
    return sigma.greater(polycore::leading_term(a, sigma), polycore::leading_term(b, sigma));
  });
  return out;
}

DeformationFamily deform(const OrderIdealData& O, const TermOrdering& sigma, const WeightSystem& ws,
                         const SchemePoint& p) {
  SchemePoint full = expand_point(O, sigma, p);
  UniversePtr u = polycore::with_parameter(*O.universe(), "t");
  const size_t t = u->t_index();
  DeformationFamily fam{u, full, {}};
  for (size_t j = 0; j < O.nu(); ++j) {
    std::vector<Polynomial::Entry> entries{{lift(O.border()[j], u->size()), Rational(1)}};
    for (size_t i = 0; i < O.mu(); ++i) {
      CIndex k = key(i, j);
      if (full.at(k) == 0) continue;
      auto w = ws.Wbar.find(k);
      if (w == ws.Wbar.end()) throw InvariantViolation("nonzero coordinate outside S_O at " + polycore::c_name(k));
      Term m = lift(O.terms()[i], u->size());
      m.set(t, static_cast<polycore::Exponent>(w->second));
      entries.emplace_back(std::move(m), -full.at(k));
    }
    fam.generators.push_back(Polynomial::from_entries(u, std::move(entries)));
  }
  return fam;
}

Ideal fiber(const DeformationFamily& family, const OrderIdealData& O, const Rational& t0) {
  std::map<size_t, Rational> at{{family.universe->t_index(), t0}};
  std::vector<Polynomial> gens;
  for (const auto& g : family.generators) gens.push_back(g.evaluate(at).rebase(O.universe()));
  return Ideal(O.universe(), std::move(gens));
}

FiberCheck check_fiber(const Ideal& I, const OrderIdealData& O, const TermOrdering& sigma_in, const GbOptions& opts) {
  const UniversePtr& u = I.universe();
  TermOrdering sigma = sigma_in.rebased(u);
  auto gb = gbengine::groebner_basis(I, sigma, opts);
  FiberCheck fc;
  if (gb.polys.size() == 1 && gb.polys.front().is_constant()) return fc;
  std::vector<Term> lts;
  for (const auto& g : gb.polys) lts.push_back(polycore::leading_term(g, sigma));
  auto Q = gbengine::complement_order_ideal(gbengine::minimalize(u, std::move(lts)));
  if (!Q) return fc;
  fc.dimension = Q->mu();
  std::vector<std::vector<Rational>> rows;
  for (const Term& t : O.terms()) {
    Polynomial nf = gbengine::reduce_modulo(Polynomial::monomial(u, t), gb.polys, sigma);
    std::vector<Rational> row;
    for (const Term& s : Q->terms()) row.push_back(nf.coefficient(s));
    rows.push_back(std::move(row));
  }
  fc.rank = borderscheme::matrix_rank(std::move(rows));
  fc.basis_is_O = fc.dimension == O.mu() && fc.rank == O.mu();
  return fc;
}

}  // namespace bbs::gbscheme
