#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycore/term.hpp"
#include "polycore/universe.hpp"

namespace bbs::orderideal {

using polycore::Term;
using polycore::UniversePtr;

// Indexing ascending by degree; within one degree x_1-heavy terms
// come first (descending Lex, x_1 > ... > x_n). Gives t = 1, x, y, xy and
// b = x^2, y^2, x^2y, xy^2 for the order ideal {1, x, y, xy}.
bool index_before(const Term& a, const Term& b);

// A finite order ideal O = {t_1..t_mu} with its border b_1..b_nu, corners
// first (b_1..b_eta are the minimal generators of the complement).
class OrderIdealData {
 public:
  const UniversePtr& universe() const { return u_; }
  size_t n() const { return u_->size(); }
  size_t mu() const { return terms_.size(); }
  size_t nu() const { return border_.size(); }
  size_t eta() const { return eta_; }

  const std::vector<Term>& terms() const { return terms_; }
  const std::vector<Term>& border() const { return border_; }
  std::vector<Term> corners() const { return {border_.begin(), border_.begin() + static_cast<long>(eta_)}; }

  // 0-based positions; nullopt when absent.
  std::optional<size_t> index_of(const Term& t) const;
  std::optional<size_t> border_index_of(const Term& b) const;
  bool contains(const Term& t) const { return index_of(t).has_value(); }
  unsigned max_degree() const;

  friend bool operator==(const OrderIdealData& a, const OrderIdealData& b) {
    return a.terms_ == b.terms_ && a.border_ == b.border_;
  }

 private:
  friend OrderIdealData validate_order_ideal(const UniversePtr& u, std::vector<Term> terms);
  UniversePtr u_;
  std::vector<Term> terms_;
  std::vector<Term> border_;
  size_t eta_ = 0;
};

// Throws PreconditionError naming the offending term and its missing divisor.
OrderIdealData validate_order_ideal(const UniversePtr& u, std::vector<Term> terms);

// (x_1 O u ... u x_n O) \ O, sorted by index_before.
std::vector<Term> border(const std::vector<Term>& order_ideal, size_t nvars);
// Border terms whose every degree-one-lower divisor lies in O.
std::vector<Term> corners(const std::vector<Term>& order_ideal, size_t nvars);
// Divisibility-minimal border terms (the minimal generators of T^n \ O).
std::vector<Term> minimal_border_terms(const std::vector<Term>& border_terms);

// "1, x, y, x*y" over an x-universe.
std::vector<Term> parse_order_ideal(const std::string& text, const UniversePtr& u);
std::string format_order_ideal(const std::vector<Term>& terms, const polycore::VariableUniverse& u);

}  // namespace bbs::orderideal
