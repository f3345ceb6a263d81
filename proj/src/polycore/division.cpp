#include "polycore/division.hpp"

#include "polycore/errors.hpp"

namespace bbs::polycore {

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, const TermOrdering& ord,
                      DivisorSelection selection) {
  const UniversePtr& u = f.universe();
  std::vector<OrderedPoly> ds;
  ds.reserve(divisors.size());
  for (const Polynomial& d : divisors) {
    require_same_universe(u, d.universe());
    if (d.is_zero()) throw PreconditionError("division by the zero polynomial");
    ds.push_back(order_terms(d, ord));
  }
  std::vector<Divisor> handles;
  for (const auto& d : ds) handles.push_back(make_divisor(d));

  std::vector<std::vector<Polynomial::Entry>> q(ds.size());
  StepObserver record = [&q](size_t k, const Rational& c, const Term& m) { q[k].emplace_back(m, c); };
  OrderedPoly r = reduce(order_terms(f, ord), handles, ord, selection, &record);

  DivisionResult result{{}, to_polynomial(r, u)};
  for (auto& entries : q) result.quotients.push_back(Polynomial::from_entries(u, std::move(entries)));
  return result;
}

Term leading_term(const Polynomial& f, const TermOrdering& ord) {
  if (f.is_zero()) throw PreconditionError("leading term of the zero polynomial");
  const Term* best = &f.terms()[0].first;
  for (const auto& e : f.terms())
    if (ord.greater(e.first, *best)) best = &e.first;
  return *best;
}

Rational leading_coefficient(const Polynomial& f, const TermOrdering& ord) { return f.coefficient(leading_term(f, ord)); }

}  // namespace bbs::polycore
