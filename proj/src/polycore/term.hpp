#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bbs::polycore {

using Exponent = std::uint16_t;

// Power product over a fixed universe, stored densely (one exponent per
// universe variable). Absent variables have exponent 0.
class Term {
 public:
  Term() = default;
  explicit Term(size_t nvars) : e_(nvars, 0) {}

  static Term variable(size_t nvars, size_t v, Exponent power = 1);
  static Term of(std::initializer_list<Exponent> exps);

  size_t size() const { return e_.size(); }
  Exponent operator[](size_t v) const { return e_[v]; }
  void set(size_t v, Exponent e) { e_[v] = e; }

  unsigned degree() const;
  std::int64_t weighted_degree(std::span<const std::int64_t> weights) const;
  bool is_one() const;
  std::vector<size_t> support() const;
  // Bit v % 64 set for every variable v in the support; fast divisibility reject.
  std::uint64_t support_mask() const;

  bool divides(const Term& other) const;
  Term operator*(const Term& other) const;
  Term quotient(const Term& divisor) const;  // requires divisor.divides(*this)
  Term pow(unsigned k) const;

  static Term lcm(const Term& a, const Term& b);
  static Term gcd(const Term& a, const Term& b);
  static bool coprime(const Term& a, const Term& b);

  std::span<const Exponent> exponents() const { return {e_.data(), e_.size()}; }

  friend bool operator==(const Term& a, const Term& b) { return a.e_ == b.e_; }
  // Plain lexicographic comparison of exponent vectors; the canonical storage
  // order of Polynomial. Not an ordering choice visible to algorithms.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  boost::container::small_vector<Exponent, 24> e_;
};

struct TermHash {
  size_t operator()(const Term& t) const;
};

}  // namespace bbs::polycore
