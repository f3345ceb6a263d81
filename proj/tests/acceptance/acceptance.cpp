// Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion; exits
// nonzero if any fails. Arguments select a subset, e.g. `acceptance 1 3`.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "borderscheme/border_scheme.hpp"
#include "gbengine/ideal.hpp"
#include "gbscheme/gb_scheme.hpp"
#include "polycore/division.hpp"
#include "polycore/errors.hpp"
#include "polycore/polyio.hpp"
#include "support/generators.hpp"

using namespace bbs;
using namespace bbs::gbscheme;
using polycore::format_polynomial;
using polycore::VariableUniverse;

namespace {

using Clock = std::chrono::steady_clock;
using Kind = TermOrdering::Kind;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  Outcome() { detail << std::fixed << std::setprecision(3); }
  bool pass = true;
  std::ostringstream detail;

  // Records a failed expectation; the first few are kept in the detail.
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass || failures < 3) detail << " [" << what << "]";
    pass = false;
    ++failures;
  }
  int failures = 0;
};

OrderIdealData make(const std::string& text, size_t n) {
  auto u = VariableUniverse::make(VariableUniverse::default_x_names(n));
  return orderideal::validate_order_ideal(u, orderideal::parse_order_ideal(text, u));
}

// Order ideals with n <= 3 and mu <= 6.
std::vector<OrderIdealData> corpus() {
  const std::vector<std::pair<const char*, size_t>> list{
      {"1", 1},
      {"1, x, x^2", 1},
      {"1", 2},
      {"1, y", 2},
      {"1, y, y^2", 2},
      {"1, x, y", 2},
      {"1, x, y, x*y", 2},
      {"1, x, x^2, y", 2},
      {"1, x, y, x^2, y^2", 2},
      {"1, x, y, x^2, x*y", 2},
      {"1, x, x^2, x^3, y, x*y", 2},
      {"1, x, y, z", 3},
      {"1, x, y, z, x*y", 3},
      {"1, z, z^2, y", 3},
  };
  std::vector<OrderIdealData> out;
  for (auto [text, n] : list) out.push_back(make(text, n));
  return out;
}

std::string label(const OrderIdealData& O) { return "{" + orderideal::format_order_ideal(O.terms(), *O.universe()) + "}"; }

const std::vector<Kind> kKinds{Kind::Lex, Kind::DegLex, Kind::DegRevLex};

// 1. The example after the definition of L_{O,sigma}.
Outcome criterion1() {
  Outcome o;
  auto t0 = Clock::now();
  auto O = make("1, x, y, x*y", 2);
  auto sigma = TermOrdering::degrevlex(O.universe());
  auto sv = split_variables(O, sigma);
  o.expect(sv.L_cO == std::vector<polycore::CIndex>{{4, 2}}, "L_{O,sigma} is not {c[4,2]}");
  auto g = generic_gb_prebasis(O, sigma);
  auto expected = polycore::parse_polynomial("y^2 - (c[1,2] + c[2,2]*x + c[3,2]*y)", g[1].universe());
  o.expect(g[1] == expected, "g2* = " + format_polynomial(g[1]));
  double s = seconds_since(t0);
  o.expect(s < 1.0, "took " + std::to_string(s) + " s");
  o.detail << " L = {c[4,2]}, g2* = " << format_polynomial(g[1]) << " (" << s << " s)";
  return o;
}

// 2. The square example.
Outcome criterion2() {
  Outcome o;
  auto t0 = Clock::now();
  const double budget = 600;
  auto O = make("1, x, y, x^2, y^2", 2);
  const auto& u = *O.universe();
  o.expect(orderideal::format_order_ideal(O.corners(), u) == "x*y, x^3, y^3", "corners");
  o.expect(O.eta() == 3 && O.nu() == 5, "eta or nu");

  auto sigma = TermOrdering::deglex(O.universe());
  auto J = gb_scheme_ideal(O, sigma, Route::Substitution);
  auto cell = affine_cell_detect(J, w_vector(J.universe(), find_weights(O, sigma)));
  o.expect(cell.affine && cell.free_variables.size() == 9,
           "affine cell: " + std::to_string(cell.free_variables.size()) + " free variables");
  o.detail << " corners {xy, x^3, y^3}, eta = 3, nu = 5, G_{O,DegLex} = A^" << cell.free_variables.size() << ";";

  auto red = gbengine::linear_preprocess(borderscheme::border_scheme_ideal(O));
  o.detail << " I(B_O) preprocessed to " << red.ideal.universe()->size() << " variables, "
           << red.ideal.generators().size() << " generators;";
  gbengine::GbOptions opts;
  opts.max_seconds = budget - seconds_since(t0);
  try {
    size_t d = gbengine::krull_dimension(red.ideal, opts);
    o.expect(d == 10, "dim(B_O) = " + std::to_string(d));
    o.detail << " dim(B_O) = " << d;
  } catch (const ResourceLimit& e) {
    o.expect(false, std::string("dim(B_O) not computed: ") + e.what());
  }
  o.detail << " (" << seconds_since(t0) << " s)";
  return o;
}

// 3. Segments in two variables under Lex.
Outcome criterion3() {
  Outcome o;
  auto t0 = Clock::now();
  for (const char* text : {"1, y, y^2", "1, y"}) {
    auto O = make(text, 2);
    auto sigma = TermOrdering::lex(O.universe());
    auto I = gb_scheme_ideal(O, sigma, Route::Substitution);
    auto gb = gbengine::groebner_basis(I, gbengine::default_ordering(I.universe()));
    bool zero = gb.polys.empty();
    size_t vars = I.universe()->size();
    o.expect(zero && vars == O.mu() * 2, std::string(text) + ": I(G) is not (0) in mu*n variables");
    o.detail << " {" << text << "}: I(G) = (0), G = A^" << vars << ";";
  }
  double s = seconds_since(t0);
  o.expect(s < 5.0, "took " + std::to_string(s) + " s");
  o.detail << " (" << s << " s)";
  return o;
}

// 4. Commuting-matrix test against the Groebner basis oracle.
Outcome criterion4() {
  Outcome o;
  auto t0 = Clock::now();
  testgen::Rng rng(20240601);
  size_t total = 0, on = 0;
  const size_t per_ideal = 240;
  for (const auto& O : corpus()) {
    size_t n = O.n();
    std::vector<SchemePoint> samples{SchemePoint::zeros(O)};
    while (samples.size() < per_ideal) {
      switch (samples.size() % 4) {
        case 0:
        case 1: {
          auto p = testgen::border_point_of_points(O, testgen::distinct_points(rng, n, O.mu()));
          if (!p) continue;
          if (samples.size() % 4 == 1) {
            // Perturb one coordinate.
            polycore::CIndex k{int(testgen::uniform(rng, 1, long(O.mu()))), int(testgen::uniform(rng, 1, long(O.nu())))};
            p->set(k, p->at(k) + testgen::small_rational(rng, 2, 2));
          }
          samples.push_back(*p);
          break;
        }
        case 2:
          samples.push_back(testgen::random_scheme_point(rng, O, 0.3));
          break;
        default:
          samples.push_back(testgen::random_scheme_point(rng, O, 0.05));
      }
    }
    for (const auto& p : samples) {
      bool fast = borderscheme::is_border_basis_point(O, p);
      bool oracle = borderscheme::oracle_is_border_basis(O, p).is_border_basis;
      o.expect(fast == oracle, label(O) + " disagreement at " + borderscheme::point_to_json(p).dump());
      on += oracle;
      ++total;
    }
  }
  double s = seconds_since(t0);
  o.expect(s < 300, "took " + std::to_string(s) + " s");
  o.detail << " " << corpus().size() << " order ideals, " << total << " points (" << on << " on B_O), " << o.failures
           << " disagreements (" << s << " s)";
  return o;
}

// 5. Substitution, Reduction (both reducer policies) and Elimination agree.
Outcome criterion5() {
  Outcome o;
  auto t0 = Clock::now();
  size_t instances = 0, with_elim = 0;
  for (const auto& O : corpus()) {
    for (Kind k : kKinds) {
      auto sigma = TermOrdering::of_kind(k, O.universe());
      std::string where = label(O) + " " + sigma.kind_name();
      auto sub = gb_scheme_ideal(O, sigma, Route::Substitution);
      auto ord = w_graded_ordering(sub.universe(), w_vector(sub.universe(), find_weights(O, sigma)));
      auto reference = gbengine::groebner_basis(sub, ord).polys;
      auto same = [&](const Ideal& I) { return gbengine::groebner_basis(I, ord).polys == reference; };
      for (auto pol : {polycore::DivisorSelection::First, polycore::DivisorSelection::Last})
        o.expect(same(gb_scheme_ideal(O, sigma, Route::Reduction, {pol, {}})), where + " reduction route");
      if (split_variables(O, sigma).s() <= 12) {
        o.expect(same(gb_scheme_ideal(O, sigma, Route::EliminationOracle)), where + " elimination route");
        ++with_elim;
      }
      ++instances;
    }
  }
  o.detail << " " << instances << " instances, " << with_elim << " also by elimination, " << o.failures
           << " disagreements (" << seconds_since(t0) << " s)";
  return o;
}

// 6. Homogeneity claims (b)-(e) and a mutated-weight control.
Outcome criterion6() {
  Outcome o;
  auto t0 = Clock::now();
  size_t instances = 0;
  for (const auto& O : corpus()) {
    for (Kind k : kKinds) {
      auto sigma = TermOrdering::of_kind(k, O.universe());
      auto rep = verify_homogeneity(O, sigma, find_weights(O, sigma));
      for (const auto& c : rep.claims) o.expect(c.pass, label(O) + " " + sigma.kind_name() + " claim " + c.claim);
      ++instances;
    }
  }
  auto O = make("1, x, y", 2);
  auto sigma = TermOrdering::deglex(O.universe());
  auto ws = find_weights(O, sigma);
  ws.W[{1, 1}] += 1;
  ws.Wbar[{1, 1}] += 1;
  auto rep = verify_homogeneity(O, sigma, ws);
  bool control = !rep.claims.empty() && rep.claims[0].claim == "b" && !rep.claims[0].pass;
  o.expect(control, "mutated W passes claim (b)");
  o.detail << " " << instances << " instances pass (b)-(e); mutated W on {1, x, y} DegLex fails (b)";
  if (control && rep.claims[0].witness) o.detail << " with witness " << format_polynomial(*rep.claims[0].witness);
  o.detail << " (" << seconds_since(t0) << " s)";
  return o;
}

// Round-trip points shared by criteria 7-9.
struct Trip {
  OrderIdealData O;
  TermOrdering sigma;
  SchemePoint point;
};

std::vector<Trip>& trips() {
  static std::vector<Trip> t;
  return t;
}

// A zero-dimensional ideal (f, g): f and g are products of generic linear
// forms plus a perturbation of lower degree.
Ideal generated_ideal(testgen::Rng& rng, const polycore::UniversePtr& u, long a, long b) {
  auto product = [&](long d) {
    Polynomial p = Polynomial::constant(u, 1);
    for (long k = 0; k < d; ++k) p *= testgen::random_linear_form(rng, u);
    // Perturbation terms of total degree below d.
    for (int k = 0; k < 2; ++k) {
      polycore::Term t = testgen::random_term(rng, 2, static_cast<unsigned>(d - 1));
      if (t.degree() < static_cast<unsigned>(d)) p += Polynomial::monomial(u, t, testgen::small_rational(rng, 3, 2));
    }
    return p;
  };
  return Ideal(u, {product(a), product(b)});
}

// 7. ideal -> point -> ideal and point -> ideal -> point.
Outcome criterion7() {
  Outcome o;
  auto t0 = Clock::now();
  testgen::Rng rng(7);
  auto u = VariableUniverse::make({"x", "y"});
  const std::vector<std::pair<long, long>> shapes{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 2}, {3, 1},
                                                  {1, 4}, {1, 5}, {2, 3}, {3, 2}, {1, 6}};
  size_t done = 0, skipped = 0;
  std::map<size_t, size_t> by_mu;
  trips().clear();
  for (size_t k = 0; done < 60 && k < 200; ++k) {
    auto [a, b] = shapes[k % shapes.size()];
    auto I = generated_ideal(rng, u, a, b);
    auto sigma = TermOrdering::of_kind(kKinds[k % 3], u);
    auto gb = gbengine::groebner_basis(I, sigma).polys;
    if (gb.size() == 1 && gb[0].is_constant()) {
      ++skipped;
      continue;
    }
    std::optional<PointFromIdeal> pf;
    try {
      pf = point_from_ideal(I, sigma);
    } catch (const PreconditionError&) {
      ++skipped;
      continue;
    }
    if (pf->O.mu() > 6) {
      ++skipped;
      continue;
    }
    std::string where = polycore::format_polynomial_list(I.generators()) + " " + sigma.kind_name();
    auto back = ideal_from_point(pf->O, sigma, pf->point);
    o.expect(back == gb, where + ": ideal -> point -> ideal");
    auto again = point_from_ideal(Ideal(u, back), sigma);
    o.expect(again.point == pf->point && again.O == pf->O, where + ": point -> ideal -> point");
    trips().push_back({pf->O, sigma, pf->point});
    ++by_mu[pf->O.mu()];
    ++done;
  }
  o.expect(done >= 50, "only " + std::to_string(done) + " ideals");
  o.detail << " " << done << " ideals (";
  for (auto [mu, count] : by_mu) o.detail << count << " with mu = " << mu << ", ";
  o.detail << skipped << " skipped), both round trips exact (" << seconds_since(t0) << " s)";
  return o;
}

const std::vector<Rational> kFibers{Rational(1), Rational(2), Rational(1, 2), Rational(-1)};

// 8. Special fiber (cO) and leading terms of the general fibers.
Outcome criterion8() {
  Outcome o;
  auto t0 = Clock::now();
  if (trips().empty()) criterion7();
  for (const auto& tr : trips()) {
    auto fam = deform(tr.O, tr.sigma, find_weights(tr.O, tr.sigma), tr.point);
    std::vector<Polynomial> corners;
    for (const auto& c : tr.O.corners()) corners.push_back(Polynomial::monomial(tr.O.universe(), c));
    std::sort(corners.begin(), corners.end(), [&](const Polynomial& p, const Polynomial& q) {
      return tr.sigma.greater(polycore::leading_term(p, tr.sigma), polycore::leading_term(q, tr.sigma));
    });
    std::string where = label(tr.O) + " " + tr.sigma.kind_name();
    o.expect(gbengine::groebner_basis(fiber(fam, tr.O, 0), tr.sigma).polys == corners, where + ": fiber(0) != (cO)");
    for (const Rational& t : kFibers) {
      auto gb = gbengine::groebner_basis(fiber(fam, tr.O, t), tr.sigma).polys;
      std::vector<Polynomial> lts;
      for (const auto& g : gb) lts.push_back(Polynomial::monomial(tr.O.universe(), polycore::leading_term(g, tr.sigma)));
      o.expect(lts == corners, where + ": LT(fiber(" + to_string(t) + ")) != (cO)");
    }
  }
  o.detail << " " << trips().size() << " families, fiber(0) = (cO) and LT(fiber(t)) = (cO) for t in {1, 2, 1/2, -1} ("
           << seconds_since(t0) << " s)";
  return o;
}

// 9. Every fiber has a quotient of dimension mu with basis O.
Outcome criterion9() {
  Outcome o;
  auto t0 = Clock::now();
  if (trips().empty()) criterion7();
  size_t fibers = 0;
  for (const auto& tr : trips()) {
    auto fam = deform(tr.O, tr.sigma, find_weights(tr.O, tr.sigma), tr.point);
    std::vector<Rational> ts{Rational(0)};
    ts.insert(ts.end(), kFibers.begin(), kFibers.end());
    for (const Rational& t : ts) {
      auto fc = check_fiber(fiber(fam, tr.O, t), tr.O, tr.sigma);
      o.expect(fc.dimension == tr.O.mu() && fc.rank == tr.O.mu() && fc.basis_is_O,
               label(tr.O) + " fiber(" + to_string(t) + "): dimension " + std::to_string(fc.dimension) + ", rank " +
                   std::to_string(fc.rank));
      ++fibers;
    }
  }
  o.detail << " " << fibers << " fibers with quotient dimension mu and basis O (" << seconds_since(t0) << " s)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9};
  std::set<int> selected;
  for (int k = 1; k < argc; ++k) selected.insert(std::atoi(argv[k]));
  int failed = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    int id = static_cast<int>(k + 1);
    if (!selected.empty() && !selected.count(id)) continue;
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::printf("%s criterion %d:%s\n", o.pass ? "PASS" : "FAIL", id, o.detail.str().c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
