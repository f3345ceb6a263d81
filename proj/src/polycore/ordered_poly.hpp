#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "polycore/ordering.hpp"
#include "polycore/polynomial.hpp"

namespace bbs::polycore {

// Terms sorted descending by a term ordering: the working representation of
// division and of the Groebner engine.
struct OrderedPoly {
  std::vector<Polynomial::Entry> terms;

  bool empty() const { return terms.empty(); }
  const Term& lead() const { return terms.front().first; }
  const Rational& lead_coeff() const { return terms.front().second; }
};

OrderedPoly order_terms(const Polynomial& p, const TermOrdering& ord);
Polynomial to_polynomial(const OrderedPoly& p, const UniversePtr& u);
void make_monic(OrderedPoly& p);

// h[start..] -= c * m * g, keeping h sorted. Terms before `start` are untouched.
void subtract_multiple(std::vector<Polynomial::Entry>& h, size_t start, const Rational& c, const Term& m,
                       const std::vector<Polynomial::Entry>& g, const TermOrdering& ord);

enum class DivisorSelection { First, Last };

struct Divisor {
  const OrderedPoly* poly;
  std::uint64_t mask;
};
Divisor make_divisor(const OrderedPoly& p);

// Called once per reduction step with (divisor index, coefficient, multiplier term).
using StepObserver = std::function<void(size_t, const Rational&, const Term&)>;

// Full multivariate division: every term of the result is irreducible by the
// leading terms of `divisors`. With `top_only`, stops at the first irreducible
// leading term.
OrderedPoly reduce(OrderedPoly h, std::span<const Divisor> divisors, const TermOrdering& ord,
                   DivisorSelection selection = DivisorSelection::First, const StepObserver* observer = nullptr,
                   bool top_only = false);

}  // namespace bbs::polycore
