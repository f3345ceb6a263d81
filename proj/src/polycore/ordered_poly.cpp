#include "polycore/ordered_poly.hpp"

#include <algorithm>

#include "polycore/errors.hpp"

namespace bbs::polycore {

OrderedPoly order_terms(const Polynomial& p, const TermOrdering& ord) {
  OrderedPoly r;
  r.terms.assign(p.terms().begin(), p.terms().end());
  std::sort(r.terms.begin(), r.terms.end(),
            [&ord](const Polynomial::Entry& a, const Polynomial::Entry& b) { return ord.greater(a.first, b.first); });
  return r;
}

Polynomial to_polynomial(const OrderedPoly& p, const UniversePtr& u) { return Polynomial::from_entries(u, p.terms); }

void make_monic(OrderedPoly& p) {
  if (p.empty() || p.lead_coeff() == 1) return;
  Rational inv = 1 / p.lead_coeff();
  for (auto& e : p.terms) e.second *= inv;
}

void subtract_multiple(std::vector<Polynomial::Entry>& h, size_t start, const Rational& c, const Term& m,
                       const std::vector<Polynomial::Entry>& g, const TermOrdering& ord) {
  std::vector<Polynomial::Entry> out;
  out.reserve(h.size() + g.size());
  for (size_t i = 0; i < start; ++i) out.push_back(std::move(h[i]));
  size_t i = start, j = 0;
  Term gt;
  bool have_gt = false;
  while (i < h.size() || j < g.size()) {
    if (j < g.size() && !have_gt) {
      gt = g[j].first * m;
      have_gt = true;
    }
    auto cmp = j == g.size() ? std::strong_ordering::greater
               : i == h.size() ? std::strong_ordering::less
                               : ord.compare(h[i].first, gt);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(std::move(h[i++]));
    } else if (cmp == std::strong_ordering::less) {
      out.emplace_back(std::move(gt), -(c * g[j].second));
      have_gt = false;
      ++j;
    } else {
      Rational v = h[i].second - c * g[j].second;
      if (v != 0) out.emplace_back(std::move(h[i].first), std::move(v));
      have_gt = false;
      ++i;
      ++j;
    }
  }
  h = std::move(out);
}

Divisor make_divisor(const OrderedPoly& p) {
  if (p.empty()) throw PreconditionError("division by the zero polynomial");
  return {&p, p.lead().support_mask()};
}

OrderedPoly reduce(OrderedPoly h, std::span<const Divisor> divisors, const TermOrdering& ord,
                   DivisorSelection selection, const StepObserver* observer, bool top_only) {
  size_t pos = 0;
  while (pos < h.terms.size()) {
    const Term& t = h.terms[pos].first;
    std::uint64_t tmask = t.support_mask();
    size_t found = divisors.size();
    for (size_t k = 0; k < divisors.size(); ++k) {
      size_t idx = selection == DivisorSelection::First ? k : divisors.size() - 1 - k;
      const Divisor& d = divisors[idx];
      if ((d.mask & ~tmask) == 0 && d.poly->lead().divides(t)) {
        found = idx;
        break;
      }
    }
    if (found == divisors.size()) {
      if (top_only) break;
      ++pos;
      continue;
    }
    const OrderedPoly& g = *divisors[found].poly;
    Rational c = h.terms[pos].second / g.lead_coeff();
    Term m = t.quotient(g.lead());
    if (observer) (*observer)(found, c, m);
    subtract_multiple(h.terms, pos, c, m, g.terms, ord);
  }
  return h;
}

}  // namespace bbs::polycore
