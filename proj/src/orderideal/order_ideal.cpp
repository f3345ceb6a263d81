#include "orderideal/order_ideal.hpp"

#include <algorithm>
#include <set>

#include "polycore/errors.hpp"
#include "polycore/polyio.hpp"
#include "polycore/polynomial.hpp"

namespace bbs::orderideal {

bool index_before(const Term& a, const Term& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a > b;
}

std::optional<size_t> OrderIdealData::index_of(const Term& t) const {
  auto it = std::find(terms_.begin(), terms_.end(), t);
  if (it == terms_.end()) return std::nullopt;
  return static_cast<size_t>(it - terms_.begin());
}

std::optional<size_t> OrderIdealData::border_index_of(const Term& b) const {
  auto it = std::find(border_.begin(), border_.end(), b);
  if (it == border_.end()) return std::nullopt;
  return static_cast<size_t>(it - border_.begin());
}

unsigned OrderIdealData::max_degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.degree());
  return d;
}

std::vector<Term> border(const std::vector<Term>& order_ideal, size_t nvars) {
  std::set<Term> inside(order_ideal.begin(), order_ideal.end());
  std::set<Term> out;
  for (const Term& t : order_ideal)
    for (size_t k = 0; k < nvars; ++k) {
      Term b = t * Term::variable(nvars, k);
      if (!inside.count(b)) out.insert(b);
    }
  std::vector<Term> result(out.begin(), out.end());
  std::sort(result.begin(), result.end(), index_before);
  return result;
}

std::vector<Term> corners(const std::vector<Term>& order_ideal, size_t nvars) {
  std::set<Term> inside(order_ideal.begin(), order_ideal.end());
  std::vector<Term> result;
  for (const Term& b : border(order_ideal, nvars)) {
    bool corner = true;
    for (size_t k = 0; k < nvars && corner; ++k)
      if (b[k] > 0) corner = inside.count(b.quotient(Term::variable(nvars, k))) > 0;
    if (corner) result.push_back(b);
  }
  return result;
}

std::vector<Term> minimal_border_terms(const std::vector<Term>& border_terms) {
  std::vector<Term> result;
  for (const Term& b : border_terms) {
    bool minimal = std::none_of(border_terms.begin(), border_terms.end(),
                                [&b](const Term& other) { return other != b && other.divides(b); });
    if (minimal) result.push_back(b);
  }
  std::sort(result.begin(), result.end(), index_before);
  return result;
}

OrderIdealData validate_order_ideal(const UniversePtr& u, std::vector<Term> terms) {
  const size_t n = u->size();
  if (n == 0) throw PreconditionError("an order ideal needs at least one variable");
  if (terms.empty()) throw PreconditionError("an order ideal must be nonempty");
  for (const Term& t : terms)
    if (t.size() != n) throw UniverseMismatch("order ideal term has the wrong number of variables");
  std::sort(terms.begin(), terms.end(), index_before);
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  std::set<Term> inside(terms.begin(), terms.end());
  for (const Term& t : terms)
    for (size_t k = n; k-- > 0;) {
      if (!t[k]) continue;
      Term d = t.quotient(Term::variable(n, k));
      if (!inside.count(d))
        throw PreconditionError("not an order ideal: " + polycore::format_term(t, *u) + " is present but its divisor " +
                                polycore::format_term(d, *u) + " is missing");
    }

  OrderIdealData o;
  o.u_ = u;
  o.terms_ = std::move(terms);
  std::vector<Term> all = border(o.terms_, n);
  std::vector<Term> cs = corners(o.terms_, n);
  o.eta_ = cs.size();
  o.border_ = cs;
  for (const Term& b : all)
    if (std::find(cs.begin(), cs.end(), b) == cs.end()) o.border_.push_back(b);
  return o;
}

std::vector<Term> parse_order_ideal(const std::string& text, const UniversePtr& u) {
  std::vector<Term> terms;
  for (const auto& p : polycore::parse_polynomial_list(text, u)) {
    if (p.size() != 1 || p.terms()[0].second != 1)
      throw ParseError("order ideal entries must be monomials with coefficient 1, got '" +
                       polycore::format_polynomial(p) + "'");
    terms.push_back(p.terms()[0].first);
  }
  return terms;
}

std::string format_order_ideal(const std::vector<Term>& terms, const polycore::VariableUniverse& u) {
  std::string s;
  for (size_t k = 0; k < terms.size(); ++k) {
    if (k) s += ", ";
    s += polycore::format_term(terms[k], u);
  }
  return s;
}

}  // namespace bbs::orderideal
