#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "borderscheme/border_scheme.hpp"
#include "gbengine/ideal.hpp"
#include "polycore/ordered_poly.hpp"
#include "polycore/ordering.hpp"

namespace bbs::gbscheme {

using borderscheme::SchemePoint;
using gbengine::GbOptions;
using gbengine::Ideal;
using orderideal::OrderIdealData;
using polycore::CIndex;
using polycore::Polynomial;
using polycore::Term;
using polycore::TermOrdering;
using polycore::UniversePtr;

// Split of the c-grid by whether b_j >_sigma t_i.
struct SchemeVars {
  size_t mu = 0, nu = 0, eta = 0;
  std::vector<CIndex> S_O;   // b_j >_sigma t_i, sorted by (j, i)
  std::vector<CIndex> L_O;   // the rest: forced to zero
  std::vector<CIndex> S_cO;  // S_O in columns 1..eta
  std::vector<CIndex> L_cO;  // L_O in columns 1..eta
  size_t s() const { return S_cO.size(); }
  bool in_S(CIndex k) const;
};

// `sigma` is a term ordering on O's x-universe.
SchemeVars split_variables(const OrderIdealData& O, const TermOrdering& sigma);

// K[S_cO]: the ring of I(G_{O,sigma}).
UniversePtr gb_scheme_universe(const SchemeVars& sv);

// g_j* = b_j - sum_{b_j > t_i} c[i,j] t_i for j = 1..nu, over scheme_universe(O).
std::vector<Polynomial> generic_gb_prebasis(const OrderIdealData& O, const TermOrdering& sigma);

struct WeightSystem {
  std::vector<std::int64_t> V;            // one per x-variable
  std::map<CIndex, std::int64_t> W;       // on S_cO
  std::map<CIndex, std::int64_t> Wbar;    // on S_O, extends W
};

// V satisfies deg_V(b_j) > deg_V(t_i) whenever b_j >_sigma t_i; W and Wbar by
// the difference formula deg_V(b_j) - deg_V(t_i).
WeightSystem find_weights(const OrderIdealData& O, const TermOrdering& sigma);
// Weights for an explicit V (PreconditionError if V violates the inequalities).
WeightSystem weights_from_V(const OrderIdealData& O, const TermOrdering& sigma, std::vector<std::int64_t> V);

// sigma-bar over scheme_universe(O): (V, Wbar)-degree, then sigma on the
// x-part, then DegRevLex on S_O; L-variables are not ranked.
TermOrdering sigma_bar_ordering(const OrderIdealData& O, const TermOrdering& sigma, const WeightSystem& ws);

// h_ij for every (i, j) in S_O with j > eta, over gb_scheme_universe: the
// t_i-coefficients of the sigma-bar remainder of b_j modulo g_1*..g_eta*.
std::map<CIndex, Polynomial> h_polynomials(const OrderIdealData& O, const TermOrdering& sigma,
                                           const WeightSystem& ws);

enum class Route { Substitution, Reduction, EliminationOracle };
Route parse_route(const std::string& name);
std::string route_name(Route r);

struct SchemeOptions {
  polycore::DivisorSelection reducer = polycore::DivisorSelection::First;  // Reduction route
  GbOptions gb;
};

// I(G_{O,sigma}) in K[S_cO]. Generators are not interreduced.
Ideal gb_scheme_ideal(const OrderIdealData& O, const TermOrdering& sigma, Route route,
                      const SchemeOptions& opts = {});

struct ClaimResult {
  std::string claim;  // "b", "c", "d", "e"
  std::string description;
  bool pass = false;
  std::optional<Polynomial> witness;
};

struct HomogeneityReport {
  std::vector<ClaimResult> claims;
  bool all_pass() const;
};

// Claims: (b) I(G) is W-homogeneous; (c) I(G) + (g_1*..g_eta*) is
// (V,W)-homogeneous; (d) I(B_O) modulo L is Wbar-homogeneous; (e) that image
// plus (g_1*..g_nu*) is (V,Wbar)-homogeneous.
HomogeneityReport verify_homogeneity(const OrderIdealData& O, const TermOrdering& sigma, const WeightSystem& ws,
                                     const GbOptions& opts = {});

// Generator-wise check, then (if needed) the reduced basis under a
// weight-graded ordering; returns the first non-homogeneous witness, if any.
std::optional<Polynomial> homogeneity_witness(const Ideal& I, const std::vector<std::int64_t>& weights,
                                              const GbOptions& opts = {});

bool is_sigma_cornercut(const OrderIdealData& O, const TermOrdering& sigma);
bool is_V_cornercut(const OrderIdealData& O, const std::vector<std::int64_t>& V);
// deg_V of every border term exceeds deg_V of every term of O.
bool has_maxdeg_border(const OrderIdealData& O, const std::vector<std::int64_t>& V);

struct AffineCell {
  bool affine = false;
  std::vector<std::string> free_variables;  // surviving variables
  std::vector<std::string> eliminated;      // in elimination order
  Ideal residual;                           // over the surviving variables
};

// Repeatedly removes a variable c via a member c - g of J with c not in g.
// `weights` has one positive entry per universe variable; J must be
// homogeneous for them (PreconditionError otherwise).
AffineCell affine_cell_detect(const Ideal& J, const std::vector<std::int64_t>& weights, const GbOptions& opts = {});
// W of find_weights as a weight vector over gb_scheme_universe.
std::vector<std::int64_t> w_vector(const UniversePtr& u, const WeightSystem& ws);
// Ranks the variables of positive weight: weighted degree, then lower total
// degree, then DegRevLex. Reduced bases of W-homogeneous ideals stay small.
TermOrdering w_graded_ordering(const UniversePtr& u, const std::vector<std::int64_t>& weights);

struct PointFromIdeal {
  OrderIdealData O;
  SchemePoint point;  // full grid
};

// O = O_sigma(I) and the border-basis coordinates of I.
PointFromIdeal point_from_ideal(const Ideal& I, const TermOrdering& sigma, const GbOptions& opts = {});

// Full-grid point: S_cO values from p, zero on L, h_ij(p) elsewhere.
// PreconditionError (with a violated generator) if the result is not on B_O.
SchemePoint expand_point(const OrderIdealData& O, const TermOrdering& sigma, const SchemePoint& p);

// Reduced sigma-Groebner basis g_1*(p)..g_eta*(p), sorted by leading term
// descending. Only the S_cO coordinates of p are read.
std::vector<Polynomial> ideal_from_point(const OrderIdealData& O, const TermOrdering& sigma, const SchemePoint& p);

struct DeformationFamily {
  UniversePtr universe;  // O's x-variables plus the parameter t
  SchemePoint point;     // full grid
  std::vector<Polynomial> generators;
};

// b_j - sum t^{Wbar(i,j)} a_ij t_i for j = 1..nu; only the S_cO coordinates
// of p are read.
DeformationFamily deform(const OrderIdealData& O, const TermOrdering& sigma, const WeightSystem& ws,
                         const SchemePoint& p);
// The fiber at t = t0 over O's x-universe.
Ideal fiber(const DeformationFamily& family, const OrderIdealData& O, const Rational& t0);

struct FiberCheck {
  size_t dimension = 0;  // K-dimension of the quotient, 0 if infinite
  size_t rank = 0;       // rank of the normal forms of O
  bool basis_is_O = false;
};

// The quotient by I has dimension mu with the residues of O as a basis.
FiberCheck check_fiber(const Ideal& I, const OrderIdealData& O, const TermOrdering& sigma, const GbOptions& opts = {});

}  // namespace bbs::gbscheme
