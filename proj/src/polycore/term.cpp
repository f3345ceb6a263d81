#include "polycore/term.hpp"

#include <algorithm>
#include <limits>

#include "polycore/errors.hpp"

namespace bbs::polycore {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  unsigned s = unsigned(a) + unsigned(b);
  if (s > std::numeric_limits<Exponent>::max())
    throw ResourceLimit("max_exponent", "exponent exceeds " + std::to_string(std::numeric_limits<Exponent>::max()));
  return static_cast<Exponent>(s);
}

}  // namespace

Term Term::variable(size_t nvars, size_t v, Exponent power) {
  Term t(nvars);
  t.e_.at(v) = power;
  return t;
}

Term Term::of(std::initializer_list<Exponent> exps) {
  Term t(exps.size());
  size_t v = 0;
  for (Exponent e : exps) t.e_[v++] = e;
  return t;
}

unsigned Term::degree() const {
  unsigned d = 0;
  for (Exponent e : e_) d += e;
  return d;
}

std::int64_t Term::weighted_degree(std::span<const std::int64_t> weights) const {
  std::int64_t d = 0;
  for (size_t v = 0; v < e_.size(); ++v)
    if (e_[v]) d += weights[v] * e_[v];
  return d;
}

bool Term::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](Exponent e) { return e == 0; });
}

std::vector<size_t> Term::support() const {
  std::vector<size_t> s;
  for (size_t v = 0; v < e_.size(); ++v)
    if (e_[v]) s.push_back(v);
  return s;
}

std::uint64_t Term::support_mask() const {
  std::uint64_t m = 0;
  for (size_t v = 0; v < e_.size(); ++v)
    if (e_[v]) m |= std::uint64_t{1} << (v % 64);
  return m;
}

bool Term::divides(const Term& other) const {
  for (size_t v = 0; v < e_.size(); ++v)
    if (e_[v] > other.e_[v]) return false;
  return true;
}

Term Term::operator*(const Term& other) const {
  Term r(*this);
  for (size_t v = 0; v < e_.size(); ++v) r.e_[v] = checked_add(e_[v], other.e_[v]);
  return r;
}

Term Term::quotient(const Term& divisor) const {
  Term r(*this);
  for (size_t v = 0; v < e_.size(); ++v) {
    if (divisor.e_[v] > e_[v]) throw InvariantViolation("term quotient with non-divisor");
    r.e_[v] = static_cast<Exponent>(e_[v] - divisor.e_[v]);
  }
  return r;
}

Term Term::pow(unsigned k) const {
  Term r(e_.size());
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Term Term::lcm(const Term& a, const Term& b) {
  Term r(a);
  for (size_t v = 0; v < r.e_.size(); ++v) r.e_[v] = std::max(a.e_[v], b.e_[v]);
  return r;
}

Term Term::gcd(const Term& a, const Term& b) {
  Term r(a);
  for (size_t v = 0; v < r.e_.size(); ++v) r.e_[v] = std::min(a.e_[v], b.e_[v]);
  return r;
}

bool Term::coprime(const Term& a, const Term& b) {
  for (size_t v = 0; v < a.e_.size(); ++v)
    if (a.e_[v] && b.e_[v]) return false;
  return true;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
}

size_t TermHash::operator()(const Term& t) const {
  size_t h = 1469598103934665603ull;
  for (Exponent e : t.exponents()) h = (h ^ e) * 1099511628211ull;
  return h;
}

}  // namespace bbs::polycore
