#pragma once

#include <span>
#include <vector>

#include "polycore/ordered_poly.hpp"

namespace bbs::polycore {

struct DivisionResult {
  std::vector<Polynomial> quotients;  // one per divisor
  Polynomial remainder;
};

// f = sum q_i d_i + r, no term of r divisible by any LT(d_i). Among several
// divisors whose leading term divides the current term, `selection` picks the
// lowest (First) or highest (Last) index.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, const TermOrdering& ord,
                      DivisorSelection selection = DivisorSelection::First);

Term leading_term(const Polynomial& f, const TermOrdering& ord);  // f nonzero
Rational leading_coefficient(const Polynomial& f, const TermOrdering& ord);

}  // namespace bbs::polycore
