#include <doctest.h>

#include <set>

#include "orderideal/order_ideal.hpp"
#include "polycore/errors.hpp"
#include "polycore/polyio.hpp"
#include "support/generators.hpp"

using namespace bbs;
using namespace bbs::orderideal;
using polycore::VariableUniverse;

namespace {

UniversePtr vars(size_t n) { return VariableUniverse::make(VariableUniverse::default_x_names(n)); }

OrderIdealData make(const std::string& text, size_t n = 2) {
  auto u = vars(n);
  return validate_order_ideal(u, parse_order_ideal(text, u));
}

std::string fmt(const std::vector<Term>& ts, const OrderIdealData& O) { return format_order_ideal(ts, *O.universe()); }

std::set<Term> as_set(const std::vector<Term>& ts) { return {ts.begin(), ts.end()}; }

}  // namespace

TEST_CASE("indexing of the four-term order ideal") {
  auto O = make("x*y, 1, y, x");
  CHECK(O.mu() == 4);
  CHECK(O.nu() == 4);
  CHECK(O.eta() == 2);
  CHECK(fmt(O.terms(), O) == "1, x, y, x*y");
  CHECK(fmt(O.border(), O) == "x^2, y^2, x^2*y, x*y^2");
  CHECK(fmt(O.corners(), O) == "x^2, y^2");
}

TEST_CASE("divisor closure is enforced") {
  auto u = vars(2);
  try {
    validate_order_ideal(u, parse_order_ideal("1, x*y", u));
    FAIL("accepted a set that is not divisor-closed");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("divisor x") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_order_ideal("1, 2*x", u), ParseError);
}

TEST_CASE("small order ideals") {
  auto one = make("1");
  CHECK(fmt(one.border(), one) == "x, y");
  CHECK(one.eta() == 2);

  auto lin = make("1, x, y");
  CHECK(fmt(lin.border(), lin) == "x^2, x*y, y^2");
  CHECK(lin.eta() == 3);

  auto sq = make("1, x, y, x^2, y^2");
  CHECK(sq.nu() == 5);
  CHECK(sq.eta() == 3);
  auto u = sq.universe();
  CHECK(as_set(sq.corners()) == as_set(parse_order_ideal("x*y, y^3, x^3", u)));
  CHECK(as_set(sq.border()) == as_set(parse_order_ideal("x*y, y^3, x^3, x*y^2, x^2*y", u)));
}

TEST_CASE("segments have one corner per variable") {
  for (size_t n = 1; n <= 3; ++n) {
    for (size_t mu = 1; mu <= 5; ++mu) {
      std::vector<Term> seg;
      for (size_t k = 0; k < mu; ++k) seg.push_back(Term::variable(n, n - 1, static_cast<polycore::Exponent>(k)));
      auto O = validate_order_ideal(vars(n), seg);
      CHECK(O.eta() == n);
    }
  }
}

TEST_CASE("border and corner invariants on random order ideals") {
  testgen::Rng rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    size_t n = static_cast<size_t>(testgen::uniform(rng, 1, 3));
    size_t mu = static_cast<size_t>(testgen::uniform(rng, 1, 12));
    auto O = validate_order_ideal(vars(n), testgen::random_order_ideal(rng, n, mu));
    CHECK(O.mu() == mu);
    CHECK(O.nu() >= O.eta());
    CHECK(O.eta() >= 1);
    std::set<Term> expected;
    for (const Term& t : O.terms())
      for (size_t v = 0; v < n; ++v) {
        Term b = t * Term::variable(n, v);
        if (!O.contains(b)) expected.insert(b);
      }
    CHECK(as_set(O.border()) == expected);
    for (const Term& b : O.border()) CHECK_FALSE(O.contains(b));
    CHECK(as_set(O.corners()) == as_set(minimal_border_terms(O.border())));
    CHECK(as_set(O.corners()) == as_set(corners(O.terms(), n)));
    for (size_t k = 1; k < O.mu(); ++k) CHECK(index_before(O.terms()[k - 1], O.terms()[k]));
  }
}
