#include <doctest.h>

#include "gbscheme/gb_scheme.hpp"
#include "polycore/errors.hpp"
#include "polycore/polyio.hpp"
#include "support/generators.hpp"

using namespace bbs;
using namespace bbs::gbscheme;
using polycore::format_polynomial;
using polycore::format_polynomial_list;
using polycore::parse_polynomial_list;
using polycore::VariableUniverse;

namespace {

UniversePtr xy() { return VariableUniverse::make({"x", "y"}); }

OrderIdealData make(const std::string& text, size_t n = 2) {
  auto u = VariableUniverse::make(VariableUniverse::default_x_names(n));
  return orderideal::validate_order_ideal(u, orderideal::parse_order_ideal(text, u));
}

TermOrdering ord(const OrderIdealData& O, TermOrdering::Kind k) { return TermOrdering::of_kind(k, O.universe()); }

constexpr auto Lex = TermOrdering::Kind::Lex;
constexpr auto DegLex = TermOrdering::Kind::DegLex;
constexpr auto DRL = TermOrdering::Kind::DegRevLex;

std::vector<std::string> names(const std::vector<CIndex>& ks) {
  std::vector<std::string> out;
  for (CIndex k : ks) out.push_back(polycore::c_name(k));
  return out;
}

}  // namespace

TEST_CASE("variable split") {
  auto O = make("1, x, y, x*y");
  auto sv = split_variables(O, ord(O, DRL));
  CHECK(names(sv.L_O) == std::vector<std::string>{"c[4,2]"});
  CHECK(names(sv.L_cO) == std::vector<std::string>{"c[4,2]"});
  CHECK(sv.s() == 7);
  auto lin = make("1, x, y");
  CHECK(split_variables(lin, ord(lin, DegLex)).L_O.empty());
  auto one = make("1");
  CHECK(split_variables(one, ord(one, Lex)).L_O.empty());
  auto sq = make("1, x, y, x^2, y^2");
  CHECK(names(split_variables(sq, ord(sq, DegLex)).L_O) == std::vector<std::string>{"c[4,1]"});
}

TEST_CASE("generic Groebner prebasis") {
  auto O = make("1, x, y, x*y");
  auto gs = generic_gb_prebasis(O, ord(O, DRL));
  auto g = borderscheme::generic_prebasis(O);
  CHECK(format_polynomial(gs[1]) == "y^2 - c[2,2]*x - c[3,2]*y - c[1,2]");
  CHECK(gs[0] == g[0]);
  auto lin = make("1, x, y");
  CHECK(generic_gb_prebasis(lin, ord(lin, DegLex)) == borderscheme::generic_prebasis(lin));
}

TEST_CASE("weight systems") {
  auto O = make("1, x, y, x*y");
  auto ws = find_weights(O, ord(O, DRL));
  CHECK(ws.V == std::vector<std::int64_t>{3, 2});
  std::map<CIndex, std::int64_t> W{{{1, 1}, 6}, {{2, 1}, 3}, {{3, 1}, 4}, {{4, 1}, 1},
                                   {{1, 2}, 4}, {{2, 2}, 1}, {{3, 2}, 2}};
  CHECK(ws.W == W);
  for (auto [k, w] : ws.W) CHECK(ws.Wbar.at(k) == w);

  auto seg = make("1, y, y^2");
  CHECK(find_weights(seg, ord(seg, Lex)).V == std::vector<std::int64_t>{3, 1});
  auto one = make("1");
  auto w1 = find_weights(one, ord(one, DegLex));
  CHECK(w1.V == std::vector<std::int64_t>{1, 1});
  for (auto [k, w] : w1.W) CHECK(w == 1);
  CHECK_THROWS_AS(weights_from_V(O, ord(O, DRL), {1, 1}), PreconditionError);
}

TEST_CASE("weights exist on random instances") {
  testgen::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    size_t n = static_cast<size_t>(testgen::uniform(rng, 1, 3));
    auto u = VariableUniverse::make(VariableUniverse::default_x_names(n));
    auto O = orderideal::validate_order_ideal(u, testgen::random_order_ideal(rng, n, 6));
    for (auto k : {Lex, DegLex, DRL}) {
      auto sigma = TermOrdering::of_kind(k, u);
      auto ws = find_weights(O, sigma);
      auto sv = split_variables(O, sigma);
      CHECK(ws.W.size() == sv.S_cO.size());
      CHECK(ws.Wbar.size() == sv.S_O.size());
      for (auto [key, w] : ws.Wbar) CHECK(w > 0);
    }
  }
}

TEST_CASE("homogeneity claims") {
  auto O = make("1, x, y, x*y");
  auto sigma = ord(O, DRL);
  auto rep = verify_homogeneity(O, sigma, find_weights(O, sigma));
  CHECK(rep.claims.size() == 4);
  CHECK(rep.all_pass());
  auto one = make("1");
  CHECK(verify_homogeneity(one, ord(one, Lex), find_weights(one, ord(one, Lex))).all_pass());

  auto lin = make("1, x, y");
  auto dl = ord(lin, DegLex);
  auto ws = find_weights(lin, dl);
  CHECK(verify_homogeneity(lin, dl, ws).all_pass());
  ws.W[{1, 1}] += 1;
  auto bad = verify_homogeneity(lin, dl, ws);
  CHECK_FALSE(bad.claims[0].pass);
  CHECK(bad.claims[0].claim == "b");
  CHECK(bad.claims[0].witness.has_value());
}

TEST_CASE("h polynomials") {
  auto O = make("1, x, y, x*y");
  auto sigma = ord(O, DRL);
  auto ws = find_weights(O, sigma);
  auto h = h_polynomials(O, sigma, ws);
  CHECK(h.size() == 8);
  // c_ij - h_ij lies in L + I(B_O).
  auto B = borderscheme::border_scheme_ideal(O);
  auto cu = B.universe();
  auto gens = B.generators();
  for (CIndex k : split_variables(O, sigma).L_O) gens.push_back(Polynomial::variable(cu, cu->c_index(k)));
  Ideal BL(cu, gens);
  for (const auto& [k, hij] : h) CHECK(gbengine::ideal_contains(BL, Polynomial::variable(cu, cu->c_index(k)) - hij.rebase(cu)));

  auto lin = make("1, x, y");
  CHECK(h_polynomials(lin, ord(lin, DegLex), find_weights(lin, ord(lin, DegLex))).empty());
  auto one = make("1");
  CHECK(h_polynomials(one, ord(one, Lex), find_weights(one, ord(one, Lex))).empty());
}

TEST_CASE("Groebner scheme ideals") {
  auto one = make("1");
  CHECK(gb_scheme_ideal(one, ord(one, DRL), Route::Substitution).generators().empty());
  for (const char* text : {"1, y", "1, y, y^2"}) {
    auto seg = make(text);
    for (auto r : {Route::Substitution, Route::Reduction, Route::EliminationOracle})
      CHECK(gb_scheme_ideal(seg, ord(seg, Lex), r).generators().empty());
  }
  auto lin = make("1, x, y");
  auto B = borderscheme::border_scheme_ideal(lin);
  for (auto r : {Route::Substitution, Route::Reduction, Route::EliminationOracle}) {
    auto IG = gb_scheme_ideal(lin, ord(lin, DegLex), r);
    CHECK(gbengine::same_ideal(IG, Ideal(IG.universe(), [&] {
                                 std::vector<Polynomial> g;
                                 for (const auto& p : B.generators()) g.push_back(p.rebase(IG.universe()));
                                 return g;
                               }())));
  }
  CHECK(parse_route("reduction") == Route::Reduction);
  CHECK(route_name(Route::EliminationOracle) == "elimination");
  CHECK_THROWS_AS(parse_route("magic"), ParseError);
}

TEST_CASE("routes agree on small instances") {
  for (const char* text : {"1, x, y, x*y", "1, x, x^2, y", "1, x, y, x^2"}) {
    auto O = make(text);
    for (auto k : {Lex, DegLex, DRL}) {
      auto sigma = ord(O, k);
      auto sub = gb_scheme_ideal(O, sigma, Route::Substitution);
      auto red = gb_scheme_ideal(O, sigma, Route::Reduction);
      auto last = gb_scheme_ideal(O, sigma, Route::Reduction, {polycore::DivisorSelection::Last, {}});
      CHECK(gbengine::same_ideal(sub, red));
      CHECK(gbengine::same_ideal(sub, last));
      if (split_variables(O, sigma).s() <= 12) CHECK(gbengine::same_ideal(sub, gb_scheme_ideal(O, sigma, Route::EliminationOracle)));
    }
  }
}

TEST_CASE("cornercut predicates") {
  auto O = make("1, x, y, x*y");
  CHECK_FALSE(is_sigma_cornercut(O, ord(O, DRL)));
  auto seg = make("1, y");
  CHECK(is_sigma_cornercut(seg, ord(seg, Lex)));
  auto lin = make("1, x, y");
  for (auto k : {DegLex, DRL}) CHECK(is_sigma_cornercut(lin, ord(lin, k)));
  CHECK(is_V_cornercut(lin, {1, 1}));
  CHECK(has_maxdeg_border(lin, {1, 1}));
  CHECK_FALSE(is_V_cornercut(O, {1, 1}));
}

TEST_CASE("affine cell detection") {
  auto z = VariableUniverse::make({}, {{1, 1}, {2, 1}, {3, 1}});
  auto cell = affine_cell_detect(Ideal(z, {}), {1, 1, 1});
  CHECK(cell.affine);
  CHECK(cell.free_variables.size() == 3);
  auto cone = affine_cell_detect(Ideal(z, parse_polynomial_list("c[1,1]^2 - c[2,1]*c[3,1]", z)), {1, 1, 1});
  CHECK_FALSE(cone.affine);
  CHECK(cone.residual.generators().size() == 1);
  CHECK_THROWS_AS(affine_cell_detect(Ideal(z, parse_polynomial_list("c[1,1]^2 - c[2,1]", z)), {1, 1, 1}),
                  PreconditionError);

  auto sq = make("1, x, y, x^2, y^2");
  auto sigma = ord(sq, DegLex);
  auto J = gb_scheme_ideal(sq, sigma, Route::Substitution);
  CHECK(J.universe()->size() == 14);
  auto sqcell = affine_cell_detect(J, w_vector(J.universe(), find_weights(sq, sigma)));
  CHECK(sqcell.affine);
  CHECK(sqcell.free_variables.size() == 9);
}

TEST_CASE("point from an ideal") {
  auto u = xy();
  Ideal I(u, parse_polynomial_list("x - y, y^2 - 1", u));
  auto pf = point_from_ideal(I, TermOrdering::deglex(u));
  CHECK(orderideal::format_order_ideal(pf.O.terms(), *u) == "1, y");
  CHECK(orderideal::format_order_ideal(pf.O.border(), *u) == "x, y^2, x*y");
  CHECK(pf.point.at({1, 1}) == 0);
  CHECK(pf.point.at({2, 1}) == 1);
  CHECK(pf.point.at({1, 2}) == 1);
  CHECK(pf.point.at({2, 2}) == 0);
  CHECK(pf.point.at({1, 3}) == 1);
  CHECK(pf.point.at({2, 3}) == 0);
  CHECK_THROWS_AS(point_from_ideal(Ideal(u, parse_polynomial_list("x*y", u)), TermOrdering::deglex(u)),
                  PreconditionError);
}

TEST_CASE("origin and off-scheme points") {
  for (const char* text : {"1", "1, x, y, x*y", "1, x, y, x^2, y^2"}) {
    auto O = make(text);
    for (auto k : {Lex, DegLex, DRL}) {
      auto sigma = ord(O, k);
      auto zero = borderscheme::SchemePoint::zeros(O);
      CHECK(expand_point(O, sigma, zero).is_zero());
      auto basis = ideal_from_point(O, sigma, zero);
      CHECK(basis.size() == O.eta());
      for (const auto& g : basis) CHECK(g.size() == 1);
    }
  }
  auto lin = make("1, x, y");
  borderscheme::SchemePoint p(3, 3);
  p.set({1, 2}, 1);
  CHECK_THROWS_AS(expand_point(lin, ord(lin, DegLex), p), PreconditionError);
}

TEST_CASE("round trips through random ideals of points") {
  testgen::Rng rng(59);
  auto u = xy();
  int done = 0;
  for (int trial = 0; trial < 12; ++trial) {
    auto pts = testgen::distinct_points(rng, 2, static_cast<size_t>(testgen::uniform(rng, 1, 5)));
    // Vanishing ideal generated by products of coordinate differences.
    auto x = Polynomial::variable(u, 0), yv = Polynomial::variable(u, 1);
    Polynomial f = Polynomial::constant(u, 1);
    for (const auto& p : pts) f *= x - Polynomial::constant(u, p[0]);
    std::vector<Polynomial> gens{f};
    for (const auto& p : pts) {
      Polynomial g = yv - Polynomial::constant(u, p[1]);
      for (const auto& q : pts)
        if (q[0] != p[0]) g *= x - Polynomial::constant(u, q[0]);
      gens.push_back(g);
    }
    for (auto k : {Lex, DegLex, DRL}) {
      auto sigma = TermOrdering::of_kind(k, u);
      Ideal I(u, gens);
      auto pf = point_from_ideal(I, sigma);
      auto back = ideal_from_point(pf.O, sigma, pf.point);
      CHECK(back == gbengine::groebner_basis(I, sigma).polys);
      auto again = point_from_ideal(Ideal(u, back), sigma);
      CHECK(again.point == pf.point);
      auto fc = check_fiber(Ideal(u, back), pf.O, sigma);
      CHECK(fc.dimension == pf.O.mu());
      CHECK(fc.rank == pf.O.mu());
      CHECK(fc.basis_is_O);
      ++done;
    }
  }
  CHECK(done == 36);
}

TEST_CASE("deformation to the monomial ideal") {
  auto u = xy();
  Ideal I(u, parse_polynomial_list("x - y, y^2 - 1", u));
  auto sigma = TermOrdering::lex(u);
  auto pf = point_from_ideal(I, sigma);
  auto ws = find_weights(pf.O, sigma);
  CHECK(ws.V == std::vector<std::int64_t>{2, 1});
  auto fam = deform(pf.O, sigma, ws, pf.point);
  CHECK(format_polynomial_list(std::vector<Polynomial>(fam.generators.begin(), fam.generators.begin() + 2)) ==
        "x - y*t, y^2 - t^2");
  CHECK(format_polynomial_list(gbengine::groebner_basis(fiber(fam, pf.O, 0), sigma).polys) == "x, y^2");
  CHECK(gbengine::groebner_basis(fiber(fam, pf.O, 1), sigma).polys == ideal_from_point(pf.O, sigma, pf.point));
  CHECK(format_polynomial_list(gbengine::groebner_basis(fiber(fam, pf.O, 2), sigma).polys) == "x - 2*y, y^2 - 4");
  auto origin = deform(pf.O, sigma, ws, borderscheme::SchemePoint::zeros(pf.O));
  CHECK(format_polynomial_list(origin.generators) == "x, y^2, x*y");
}
