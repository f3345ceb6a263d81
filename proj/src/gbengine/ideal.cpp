#include "gbengine/ideal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "polycore/errors.hpp"
#include "polycore/division.hpp"
#include "polycore/ordered_poly.hpp"

namespace bbs::gbengine {

using polycore::OrderedPoly;
using bbs::Rational;

Ideal::Ideal(UniversePtr u, std::vector<Polynomial> generators) : u_(std::move(u)) {
  for (auto& g : generators) {
    polycore::require_same_universe(u_, g.universe());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::with_basis(GroebnerBasis gb) const {
  Ideal copy(*this);
  copy.cache_ = std::move(gb);
  return copy;
}

MonomialIdeal minimalize(const UniversePtr& u, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a > b;
  });
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  MonomialIdeal m{u, {}};
  for (const Term& t : terms)
    if (std::none_of(m.generators.begin(), m.generators.end(), [&t](const Term& g) { return g.divides(t); }))
      m.generators.push_back(t);
  return m;
}

GroebnerBasis groebner_basis(const Ideal& I, const TermOrdering& ord, const GbOptions& opts) {
  polycore::require_same_universe(I.universe(), ord.universe());
  if (I.cached_basis() && I.cached_basis()->ordering == ord) return *I.cached_basis();
  return {ord, buchberger(I.generators(), ord, opts)};
}

Ideal with_groebner_basis(const Ideal& I, const TermOrdering& ord, const GbOptions& opts) {
  return I.with_basis(groebner_basis(I, ord, opts));
}

Polynomial reduce_modulo(const Polynomial& f, std::span<const Polynomial> basis, const TermOrdering& ord) {
  std::vector<OrderedPoly> ordered;
  ordered.reserve(basis.size());
  for (const auto& g : basis) ordered.push_back(polycore::order_terms(g, ord));
  std::vector<polycore::Divisor> divs;
  for (const auto& g : ordered) divs.push_back(polycore::make_divisor(g));
  return polycore::to_polynomial(polycore::reduce(polycore::order_terms(f, ord), divs, ord), f.universe());
}

Polynomial normal_form(const Polynomial& f, const Ideal& I, const TermOrdering& ord, const GbOptions& opts) {
  polycore::require_same_universe(I.universe(), f.universe());
  return reduce_modulo(f, groebner_basis(I, ord, opts).polys, ord);
}

TermOrdering default_ordering(const UniversePtr& u) { return TermOrdering::degrevlex(u); }

bool ideal_contains(const Ideal& I, const Polynomial& f, const GbOptions& opts) {
  return normal_form(f, I, default_ordering(I.universe()), opts).is_zero();
}

bool same_ideal(const Ideal& a, const Ideal& b, const GbOptions& opts) {
  polycore::require_same_universe(a.universe(), b.universe());
  TermOrdering ord = default_ordering(a.universe());
  return groebner_basis(a, ord, opts).polys == groebner_basis(b, ord, opts).polys;
}

MonomialIdeal leading_term_ideal(const Ideal& I, const TermOrdering& ord, const GbOptions& opts) {
  std::vector<Term> lts;
  for (const auto& g : groebner_basis(I, ord, opts).polys) lts.push_back(polycore::leading_term(g, ord));
  return minimalize(I.universe(), std::move(lts));
}

std::optional<orderideal::OrderIdealData> complement_order_ideal(const MonomialIdeal& M) {
  const size_t n = M.universe->size();
  for (const Term& g : M.generators)
    if (g.is_one()) throw PreconditionError("the unit ideal has an empty complement");
  for (size_t v = 0; v < n; ++v) {
    bool pure = std::any_of(M.generators.begin(), M.generators.end(), [v](const Term& g) {
      auto s = g.support();
      return s.size() == 1 && s[0] == v;
    });
    if (!pure) return std::nullopt;
  }
  auto outside = [&M](const Term& t) {
    return std::none_of(M.generators.begin(), M.generators.end(), [&t](const Term& g) { return g.divides(t); });
  };
  std::set<Term> seen{Term(n)};
  std::deque<Term> queue{Term(n)};
  while (!queue.empty()) {
    Term t = queue.front();
    queue.pop_front();
    for (size_t v = 0; v < n; ++v) {
      Term next = t * Term::variable(n, v);
      if (outside(next) && seen.insert(next).second) queue.push_back(next);
    }
  }
  return orderideal::validate_order_ideal(M.universe, {seen.begin(), seen.end()});
}

Ideal eliminate(const Ideal& I, const std::vector<size_t>& keep, const GbOptions& opts,
                const std::optional<TermOrdering>& inner) {
  const UniversePtr& u = I.universe();
  std::vector<bool> kept(u->size(), false);
  for (size_t v : keep) kept.at(v) = true;
  std::vector<size_t> block;
  for (size_t v = 0; v < u->size(); ++v)
    if (!kept[v]) block.push_back(v);
  UniversePtr target = polycore::sub_universe(*u, keep);
  TermOrdering ord = TermOrdering::elimination(u, block);
  if (inner) {
    for (size_t v : keep)
      if (!inner->covers(v)) throw OrderingDomainError("inner ordering does not rank '" + u->name(v) + "'");
    std::vector<TermOrdering::Row> rows;
    if (!block.empty()) rows = TermOrdering::degrevlex(u, block).rows();
    rows.insert(rows.end(), inner->rows().begin(), inner->rows().end());
    std::vector<size_t> all(u->size());
    std::iota(all.begin(), all.end(), size_t{0});
    ord = TermOrdering::matrix(u, std::move(rows), std::move(all));
  }
  std::vector<Polynomial> out;
  for (const auto& g : groebner_basis(I, ord, opts).polys)
    if (std::none_of(block.begin(), block.end(), [&g](size_t v) { return g.mentions(v); }))
      out.push_back(g.rebase(target));
  return Ideal(target, std::move(out));
}

Ideal substitution_eliminate(const Ideal& I, const std::map<size_t, Polynomial>& rules) {
  for (const auto& [v, value] : rules)
    for (const auto& [w, other] : rules)
      if (value.mentions(w))
        throw PreconditionError("substitution value for '" + I.universe()->name(v) + "' mentions rule variable '" +
                                I.universe()->name(w) + "'");
  std::vector<Polynomial> out;
  for (const auto& g : I.generators()) out.push_back(g.substitute(rules));
  return Ideal(I.universe(), std::move(out));
}

namespace {

// Smallest number of variables meeting every support set, by branch and bound.
size_t min_hitting_set(const std::vector<std::vector<size_t>>& supports, std::vector<bool>& chosen, size_t used,
                       size_t best) {
  if (used >= best) return best;
  const std::vector<size_t>* open = nullptr;
  for (const auto& s : supports) {
    if (std::none_of(s.begin(), s.end(), [&chosen](size_t v) { return chosen[v]; })) {
      if (!open || s.size() < open->size()) open = &s;
    }
  }
  if (!open) return used;
  if (used + 1 >= best) return best;
  for (size_t v : *open) {
    chosen[v] = true;
    best = std::min(best, min_hitting_set(supports, chosen, used + 1, best));
    chosen[v] = false;
  }
  return best;
}

}  // namespace

size_t monomial_dimension(const MonomialIdeal& M) {
  const size_t n = M.universe->size();
  std::vector<std::vector<size_t>> supports;
  for (const Term& g : M.generators) {
    if (g.is_one()) throw PreconditionError("the unit ideal has no dimension");
    supports.push_back(g.support());
  }
  std::vector<bool> chosen(n, false);
  return n - min_hitting_set(supports, chosen, 0, n + 1);
}

size_t krull_dimension(const Ideal& I, const GbOptions& opts) {
  return monomial_dimension(leading_term_ideal(I, default_ordering(I.universe()), opts));
}

namespace {

// The coefficient a when f = a*v + g with v not in g.
std::optional<Rational> linear_variable(const Polynomial& f, size_t v) {
  size_t occurrences = 0;
  std::optional<Rational> a;
  for (const auto& [t, c] : f.terms()) {
    if (!t[v]) continue;
    ++occurrences;
    if (t[v] == 1 && t.degree() == 1) a = c;
  }
  if (occurrences != 1) return std::nullopt;
  return a;
}

}  // namespace

LinearReduction linear_preprocess(const Ideal& I) {
  const UniversePtr& u = I.universe();
  std::vector<Polynomial> gens = I.generators();
  std::vector<bool> gone(u->size(), false);
  std::vector<std::string> order;
  std::map<size_t, Polynomial> solved;
  while (true) {
    // Among all solvable (generator, variable) pairs take the one whose
    // value has the lowest degree, then the fewest terms.
    std::optional<size_t> pick;
    std::pair<size_t, Rational> best;
    std::pair<unsigned, size_t> best_cost;
    for (size_t k = 0; k < gens.size(); ++k) {
      for (size_t v : gens[k].variables()) {
        auto lin = linear_variable(gens[k], v);
        if (!lin) continue;
        std::pair<unsigned, size_t> cost{0, gens[k].size()};
        for (const auto& [t, c] : gens[k].terms())
          if (!t[v]) cost.first = std::max(cost.first, t.degree());
        if (!pick || cost < best_cost) {
          pick = k;
          best = {v, *lin};
          best_cost = cost;
        }
      }
    }
    if (!pick) break;
    auto [v, a] = best;
    Polynomial value = (Polynomial::monomial(u, Term::variable(u->size(), v), a) - gens[*pick]).scale(1 / a);
    std::map<size_t, Polynomial> rule{{v, value}};
    std::vector<Polynomial> next;
    for (size_t m = 0; m < gens.size(); ++m) {
      if (m == *pick) continue;
      Polynomial g = gens[m].substitute(rule);
      if (!g.is_zero()) next.push_back(std::move(g));
    }
    for (auto& [w, val] : solved) val = val.substitute(rule);
    solved.emplace(v, value);
    gone[v] = true;
    order.push_back(u->name(v));
    gens = std::move(next);
  }
  std::vector<size_t> keep;
  for (size_t v = 0; v < u->size(); ++v)
    if (!gone[v]) keep.push_back(v);
  UniversePtr target = polycore::sub_universe(*u, keep);
  std::vector<Polynomial> rebased;
  for (const auto& g : gens) rebased.push_back(g.rebase(target));
  LinearReduction r{Ideal(target, std::move(rebased)), std::move(order), {}};
  for (const auto& [v, val] : solved) r.solved.emplace(u->name(v), val.rebase(target));
  return r;
}

}  // namespace bbs::gbengine
