#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polycore/term.hpp"
#include "polycore/universe.hpp"

namespace bbs::polycore {

// A term ordering, represented internally as an integer weight matrix: terms
// are compared row by row on the weighted degree, first difference decides.
// Every named kind below is built as such a matrix, so comparison is a single
// code path. Only the variables the ordering "covers" may appear in compared
// terms; anything else raises OrderingDomainError.
class TermOrdering {
 public:
  enum class Kind { Lex, DegLex, DegRevLex, Weighted, Elimination, SigmaBar, Matrix };

  struct Row {
    std::vector<std::pair<size_t, std::int64_t>> entries;  // (variable, weight)
    friend bool operator==(const Row&, const Row&) = default;
  };

  // `precedence` lists the covered variables from largest to smallest; empty
  // means every universe variable in index order.
  static TermOrdering lex(UniversePtr u, std::vector<size_t> precedence = {});
  static TermOrdering deglex(UniversePtr u, std::vector<size_t> precedence = {});
  // Higher total degree wins; ties go to the LAST precedence variable with a
  // nonzero exponent difference, the smaller exponent winning.
  static TermOrdering degrevlex(UniversePtr u, std::vector<size_t> precedence = {});
  static TermOrdering of_kind(Kind kind, UniversePtr u, std::vector<size_t> precedence = {});

  // Weighted degree first (one weight per universe variable, positive on every
  // variable the tiebreak covers), then the tiebreak.
  static TermOrdering weighted(std::vector<std::int64_t> weights, const TermOrdering& tiebreak);

  // Block ordering eliminating `block`: `outer` on the block decides first,
  // then `inner` on the remaining variables.
  static TermOrdering elimination(UniversePtr u, std::vector<size_t> block, Kind inner = Kind::DegRevLex,
                                  Kind outer = Kind::DegRevLex);

  // deg_(V,W) first; equal degrees with different x-parts are compared by
  // `sigma_x` (an ordering on the x-variables, matched by name); equal x-parts
  // fall to DegRevLex on the weighted c-variables in (j, i) order. `weights`
  // has one entry per universe variable; c-variables with weight 0 are not
  // covered.
  static TermOrdering sigma_bar(UniversePtr u, std::vector<std::int64_t> weights, const TermOrdering& sigma_x);

  static TermOrdering matrix(UniversePtr u, std::vector<Row> rows, std::vector<size_t> covered);

  std::strong_ordering compare(const Term& a, const Term& b) const;
  bool greater(const Term& a, const Term& b) const { return compare(a, b) == std::strong_ordering::greater; }
  bool less(const Term& a, const Term& b) const { return compare(a, b) == std::strong_ordering::less; }

  Kind kind() const { return kind_; }
  std::string kind_name() const;
  const UniversePtr& universe() const { return u_; }
  const std::vector<Row>& rows() const { return rows_; }
  bool covers(size_t v) const { return covered_.at(v); }
  std::vector<size_t> covered() const;

  // Descriptive parameters (meaning depends on kind).
  const std::vector<size_t>& precedence() const { return precedence_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  const std::vector<size_t>& block() const { return block_; }
  const std::vector<TermOrdering>& parts() const { return parts_; }

  // The same ordering over another universe, variables matched by name.
  TermOrdering rebased(UniversePtr target) const;

  friend bool operator==(const TermOrdering& a, const TermOrdering& b);

 private:
  TermOrdering(UniversePtr u, Kind kind) : u_(std::move(u)), kind_(kind) {}
  void set_covered(const std::vector<size_t>& vars);

  UniversePtr u_;
  Kind kind_;
  std::vector<Row> rows_;
  std::vector<bool> covered_;
  std::vector<size_t> uncovered_;

  std::vector<size_t> precedence_;
  std::vector<std::int64_t> weights_;
  std::vector<size_t> block_;
  std::vector<TermOrdering> parts_;
};

TermOrdering::Kind parse_ordering_kind(const std::string& name);

}  // namespace bbs::polycore
