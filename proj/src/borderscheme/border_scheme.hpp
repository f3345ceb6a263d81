#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gbengine/ideal.hpp"
#include "orderideal/order_ideal.hpp"
#include "polycore/polynomial.hpp"

namespace bbs::borderscheme {

using gbengine::Ideal;
using orderideal::OrderIdealData;
using polycore::CIndex;
using polycore::Polynomial;
using polycore::UniversePtr;

// x-variables of O followed by the full c-grid c[1,1]..c[mu,nu].
UniversePtr scheme_universe(const OrderIdealData& O);
// The full c-grid alone.
UniversePtr coefficient_universe(const OrderIdealData& O);

// g_j = b_j - sum_i c[i,j] t_i, j = 1..nu, over scheme_universe(O).
std::vector<Polynomial> generic_prebasis(const OrderIdealData& O);

// mu x mu matrix with entries in coefficient_universe(O).
class GenericMatrix {
 public:
  GenericMatrix(size_t size, UniversePtr u);
  size_t size() const { return size_; }
  // 0-based row, column.
  const Polynomial& at(size_t r, size_t c) const { return entries_[r * size_ + c]; }
  Polynomial& at(size_t r, size_t c) { return entries_[r * size_ + c]; }
  GenericMatrix operator*(const GenericMatrix& o) const;
  GenericMatrix operator-(const GenericMatrix& o) const;

 private:
  size_t size_;
  std::vector<Polynomial> entries_;
};

// Multiplication by x_k (0-based axis) on <O> rewritten with the generic prebasis.
GenericMatrix multiplication_matrix(const OrderIdealData& O, size_t k);

// Entries of A_k A_l - A_l A_k for k < l, row-major per pair, zeros and
// repeats dropped. The zero ideal when n = 1.
Ideal border_scheme_ideal(const OrderIdealData& O);

// Dense assignment c[i,j] -> a_ij over the mu x nu grid (1-based keys).
class SchemePoint {
 public:
  SchemePoint(size_t mu, size_t nu);
  static SchemePoint zeros(const OrderIdealData& O) { return SchemePoint(O.mu(), O.nu()); }

  size_t mu() const { return mu_; }
  size_t nu() const { return nu_; }
  const Rational& at(CIndex key) const;
  void set(CIndex key, Rational value);
  bool is_zero() const;
  // Values keyed by variable index of a universe whose c-block is a subset
  // of the grid.
  std::map<size_t, Rational> assignment(const polycore::VariableUniverse& u) const;

  friend bool operator==(const SchemePoint&, const SchemePoint&) = default;

 private:
  size_t index(CIndex key) const;
  size_t mu_, nu_;
  std::vector<Rational> values_;  // column-major: (j - 1) * mu + (i - 1)
};

// {"c": {"i,j": "p/q"}}, zero entries omitted.
nlohmann::json point_to_json(const SchemePoint& p);
// Absent keys mean 0. ParseError on malformed keys or values, PreconditionError
// on keys outside the grid.
SchemePoint point_from_json(const nlohmann::json& j, size_t mu, size_t nu);

struct PointCheck {
  bool on_scheme = false;
  // For a violation: the axis pair, the 0-based entry and the symbolic
  // commutator entry that fails to vanish.
  std::optional<Polynomial> witness;
  size_t k = 0, l = 0, row = 0, col = 0;
};

// All specialized commutators vanish.
PointCheck check_border_basis_point(const OrderIdealData& O, const SchemePoint& p);
bool is_border_basis_point(const OrderIdealData& O, const SchemePoint& p);

// b_j - sum_i a_ij t_i over O's x-universe.
std::vector<Polynomial> specialize_prebasis(const OrderIdealData& O, const SchemePoint& p);

struct OracleVerdict {
  bool is_border_basis = false;
  std::string diagnostic;
};

// Groebner-basis ground truth: the specialized ideal is zero-dimensional with
// quotient dimension mu and the residues of O are linearly independent.
OracleVerdict oracle_is_border_basis(const OrderIdealData& O, const SchemePoint& p,
                                     const gbengine::GbOptions& opts = {});

// Rank of the rows over the exact rationals (Gaussian elimination).
size_t matrix_rank(std::vector<std::vector<Rational>> rows);

}  // namespace bbs::borderscheme
