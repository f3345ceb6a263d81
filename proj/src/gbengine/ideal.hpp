#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "orderideal/order_ideal.hpp"
#include "polycore/ordering.hpp"
#include "polycore/polynomial.hpp"

namespace bbs::gbengine {

using polycore::Polynomial;
using polycore::Term;
using polycore::TermOrdering;
using polycore::UniversePtr;

enum class PairSelection {
  Normal,  // smallest lcm degree first, ties by the ordering, then age
  Fifo,    // oldest pair first
  Sugar,   // smallest sugar degree first, ties as Normal
};

// Safety cutoffs. Hitting one raises ResourceLimit naming it.
struct GbOptions {
  size_t max_basis_size = 20000;
  unsigned max_degree = 200;
  size_t max_reductions = 5'000'000;
  double max_seconds = 0;  // wall clock per basis computation; 0 means none
  PairSelection selection = PairSelection::Normal;
};

// Reduced Groebner basis: monic, auto-reduced, sorted by leading term,
// descending in `ordering`.
struct GroebnerBasis {
  TermOrdering ordering;
  std::vector<Polynomial> polys;
};

class Ideal {
 public:
  Ideal(UniversePtr u, std::vector<Polynomial> generators);

  const UniversePtr& universe() const { return u_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool has_zero_generators() const { return gens_.empty(); }
  const std::optional<GroebnerBasis>& cached_basis() const { return cache_; }
  // A copy carrying `gb` as its cached reduced basis.
  Ideal with_basis(GroebnerBasis gb) const;

 private:
  UniversePtr u_;
  std::vector<Polynomial> gens_;
  std::optional<GroebnerBasis> cache_;
};

struct MonomialIdeal {
  UniversePtr universe;
  std::vector<Term> generators;  // minimal, pairwise non-dividing
};

MonomialIdeal minimalize(const UniversePtr& u, std::vector<Term> terms);

// The unique reduced Groebner basis of the ideal spanned by `gens`.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const TermOrdering& ord,
                                   const GbOptions& opts = {});
// Uses the ideal's cache when it was computed for `ord`.
GroebnerBasis groebner_basis(const Ideal& I, const TermOrdering& ord, const GbOptions& opts = {});
Ideal with_groebner_basis(const Ideal& I, const TermOrdering& ord, const GbOptions& opts = {});

// Normal form modulo a polynomial list that is already a Groebner basis.
Polynomial reduce_modulo(const Polynomial& f, std::span<const Polynomial> basis, const TermOrdering& ord);
Polynomial normal_form(const Polynomial& f, const Ideal& I, const TermOrdering& ord, const GbOptions& opts = {});
bool ideal_contains(const Ideal& I, const Polynomial& f, const GbOptions& opts = {});

// Reduced bases under DegRevLex over the universe are compared.
bool same_ideal(const Ideal& a, const Ideal& b, const GbOptions& opts = {});
TermOrdering default_ordering(const UniversePtr& u);

MonomialIdeal leading_term_ideal(const Ideal& I, const TermOrdering& ord, const GbOptions& opts = {});
// nullopt when the complement is infinite (ideal not zero-dimensional).
// Throws PreconditionError for the unit ideal.
std::optional<orderideal::OrderIdealData> complement_order_ideal(const MonomialIdeal& M);

// I intersected with K[keep], by a block ordering eliminating the rest.
// `inner` ranks the kept variables (DegRevLex when absent).
Ideal eliminate(const Ideal& I, const std::vector<size_t>& keep, const GbOptions& opts = {},
                const std::optional<TermOrdering>& inner = {});
// Generators with every rule applied. Each rule variable y must satisfy
// y - rule(y) in I (caller's responsibility); rule values may not mention any
// rule variable.
Ideal substitution_eliminate(const Ideal& I, const std::map<size_t, Polynomial>& rules);

// Dimension of K[vars]/M: number of variables minus a minimum set of
// variables meeting the support of every generator.
size_t monomial_dimension(const MonomialIdeal& M);
// Krull dimension of K[universe]/I. PreconditionError for the unit ideal.
size_t krull_dimension(const Ideal& I, const GbOptions& opts = {});

// Repeatedly takes a generator a*v + g with v absent from g, substitutes
// v -> -g/a everywhere and drops v. The quotient rings are isomorphic.
struct LinearReduction {
  Ideal ideal;                                // in the smaller universe
  std::vector<std::string> eliminated;        // in elimination order
  std::map<std::string, Polynomial> solved;   // eliminated var -> value, in the smaller universe
};
LinearReduction linear_preprocess(const Ideal& I);

}  // namespace bbs::gbengine
