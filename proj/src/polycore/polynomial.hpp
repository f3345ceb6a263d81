#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polycore/rational.hpp"
#include "polycore/term.hpp"
#include "polycore/universe.hpp"

namespace bbs::polycore {

// Sparse polynomial with exact rational coefficients over a named universe.
// Terms are kept sorted (descending, plain exponent-vector order) with no zero
// coefficients, so equality is structural.
class Polynomial {
 public:
  using Entry = std::pair<Term, Rational>;

  explicit Polynomial(UniversePtr u) : u_(std::move(u)) {}

  static Polynomial constant(UniversePtr u, const Rational& c);
  static Polynomial variable(UniversePtr u, size_t v);
  static Polynomial variable(UniversePtr u, std::string_view name);
  static Polynomial monomial(UniversePtr u, Term t, Rational c = 1);
  // Entries may be unsorted and contain repeats or zeros; they are normalized.
  static Polynomial from_entries(UniversePtr u, std::vector<Entry> entries);

  const UniversePtr& universe() const { return u_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  std::span<const Entry> terms() const { return terms_; }
  Rational coefficient(const Term& t) const;
  bool is_constant() const;
  unsigned total_degree() const;
  std::vector<size_t> variables() const;
  bool mentions(size_t v) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scale(const Rational& c) const;
  Polynomial mul_term(const Term& t, const Rational& c = 1) const;
  Polynomial pow(unsigned k) const;

  // Ring homomorphism fixing every variable not in `rules`. Rule values must
  // live in the same universe.
  Polynomial substitute(const std::map<size_t, Polynomial>& rules) const;
  // Substitute constants for some variables.
  Polynomial evaluate(const std::map<size_t, Rational>& values) const;
  // The same polynomial in another universe, variables matched by name. Any
  // variable actually used must exist in `target`.
  Polynomial rebase(UniversePtr target) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  UniversePtr u_;
  std::vector<Entry> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

struct Homogeneity {
  bool homogeneous = false;
  std::optional<std::int64_t> degree;  // unset for the zero polynomial
};

// Weighted homogeneity; `weights` has one entry per universe variable and must
// be positive on every variable occurring in f (else PreconditionError).
Homogeneity is_homogeneous(const Polynomial& f, std::span<const std::int64_t> weights);

// Maps variable names to positions in u; unmentioned variables get 0.
std::vector<std::int64_t> weight_vector(const VariableUniverse& u, const std::map<std::string, std::int64_t>& by_name);

}  // namespace bbs::polycore
