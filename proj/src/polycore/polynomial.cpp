#include "polycore/polynomial.hpp"

#include <algorithm>

#include "polycore/errors.hpp"

namespace bbs::polycore {

namespace {

bool desc(const Polynomial::Entry& a, const Polynomial::Entry& b) { return a.first > b.first; }

std::vector<Polynomial::Entry> normalize(std::vector<Polynomial::Entry> entries) {
  std::sort(entries.begin(), entries.end(), desc);
  std::vector<Polynomial::Entry> out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else
      out.push_back(std::move(e));
  }
  std::erase_if(out, [](const Polynomial::Entry& e) { return e.second == 0; });
  return out;
}

std::vector<Polynomial::Entry> merge(const std::vector<Polynomial::Entry>& a, const std::vector<Polynomial::Entry>& b,
                                     bool subtract) {
  std::vector<Polynomial::Entry> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(UniversePtr u, const Rational& c) {
  Polynomial p(u);
  if (c != 0) p.terms_.emplace_back(Term(u->size()), c);
  return p;
}

Polynomial Polynomial::variable(UniversePtr u, size_t v) {
  if (v >= u->size()) throw UniverseMismatch("variable index out of range");
  return monomial(u, Term::variable(u->size(), v), 1);
}

Polynomial Polynomial::variable(UniversePtr u, std::string_view name) {
  size_t v = u->index(name);
  return variable(std::move(u), v);
}

Polynomial Polynomial::monomial(UniversePtr u, Term t, Rational c) {
  if (t.size() != u->size()) throw UniverseMismatch("term length differs from universe size");
  Polynomial p(std::move(u));
  if (c != 0) p.terms_.emplace_back(std::move(t), std::move(c));
  return p;
}

Polynomial Polynomial::from_entries(UniversePtr u, std::vector<Entry> entries) {
  for (const auto& e : entries)
    if (e.first.size() != u->size()) throw UniverseMismatch("term length differs from universe size");
  Polynomial p(std::move(u));
  p.terms_ = normalize(std::move(entries));
  return p;
}

Rational Polynomial::coefficient(const Term& t) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                             [](const Entry& e, const Term& key) { return e.first > key; });
  if (it != terms_.end() && it->first == t) return it->second;
  return 0;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& e : terms_) d = std::max(d, e.first.degree());
  return d;
}

std::vector<size_t> Polynomial::variables() const {
  std::vector<bool> seen(u_->size(), false);
  for (const auto& e : terms_)
    for (size_t v = 0; v < e.first.size(); ++v)
      if (e.first[v]) seen[v] = true;
  std::vector<size_t> vs;
  for (size_t v = 0; v < seen.size(); ++v)
    if (seen[v]) vs.push_back(v);
  return vs;
}

bool Polynomial::mentions(size_t v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Entry& e) { return e.first[v] != 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& e : r.terms_) e.second = -e.second;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_universe(u_, o.u_);
  Polynomial r(u_);
  r.terms_ = merge(terms_, o.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_universe(u_, o.u_);
  Polynomial r(u_);
  r.terms_ = merge(terms_, o.terms_, true);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_universe(u_, o.u_);
  const Polynomial& small = size() <= o.size() ? *this : o;
  const Polynomial& large = size() <= o.size() ? o : *this;
  Polynomial r(u_);
  // Multiplying by a term preserves the storage order, so each partial product
  // is already sorted and can be merged.
  for (const auto& [t, c] : small.terms_) r.terms_ = merge(r.terms_, large.mul_term(t, c).terms_, false);
  return r;
}

Polynomial Polynomial::scale(const Rational& c) const {
  Polynomial r(u_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& e : r.terms_) e.second *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Term& t, const Rational& c) const {
  Polynomial r(u_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& e : terms_) r.terms_.emplace_back(e.first * t, e.second * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(u_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Polynomial Polynomial::substitute(const std::map<size_t, Polynomial>& rules) const {
  for (const auto& [v, p] : rules) {
    if (v >= u_->size()) throw UniverseMismatch("substitution names a variable outside the universe");
    require_same_universe(u_, p.universe());
  }
  // Cache powers of each substituted polynomial.
  std::map<std::pair<size_t, unsigned>, Polynomial> powers;
  auto power_of = [&](size_t v, unsigned k) -> const Polynomial& {
    auto key = std::make_pair(v, k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, rules.at(v).pow(k)).first->second;
  };
  std::vector<Entry> acc;
  for (const auto& [t, c] : terms_) {
    Term kept = t;
    Polynomial factor = constant(u_, c);
    for (const auto& [v, p] : rules) {
      if (!t[v]) continue;
      kept.set(v, 0);
      factor = factor * power_of(v, t[v]);
    }
    for (const auto& [ft, fc] : factor.terms_) acc.emplace_back(ft * kept, fc);
  }
  return from_entries(u_, std::move(acc));
}

Polynomial Polynomial::evaluate(const std::map<size_t, Rational>& values) const {
  std::vector<Entry> acc;
  acc.reserve(terms_.size());
  for (const auto& [t, c] : terms_) {
    Term kept = t;
    Rational coeff = c;
    for (const auto& [v, val] : values) {
      if (!t[v]) continue;
      kept.set(v, 0);
      Rational p = 1;
      for (unsigned k = 0; k < t[v]; ++k) p *= val;
      coeff *= p;
    }
    acc.emplace_back(std::move(kept), std::move(coeff));
  }
  return from_entries(u_, std::move(acc));
}

Polynomial Polynomial::rebase(UniversePtr target) const {
  if (same_universe(u_, target)) {
    Polynomial r(*this);
    r.u_ = std::move(target);
    return r;
  }
  std::vector<std::optional<size_t>> map(u_->size());
  for (size_t v = 0; v < u_->size(); ++v) map[v] = target->find(u_->name(v));
  std::vector<Entry> out;
  out.reserve(terms_.size());
  for (const auto& [t, c] : terms_) {
    Term nt(target->size());
    for (size_t v = 0; v < t.size(); ++v) {
      if (!t[v]) continue;
      if (!map[v]) throw UniverseMismatch("variable '" + u_->name(v) + "' does not exist in the target universe");
      nt.set(*map[v], t[v]);
    }
    out.emplace_back(std::move(nt), c);
  }
  return from_entries(std::move(target), std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_universe(a.u_, b.u_) && a.terms_ == b.terms_;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scale(c); }

Homogeneity is_homogeneous(const Polynomial& f, std::span<const std::int64_t> weights) {
  if (weights.size() != f.universe()->size()) throw PreconditionError("weight vector length differs from universe size");
  for (size_t v : f.variables())
    if (weights[v] <= 0) throw PreconditionError("no positive weight for variable '" + f.universe()->name(v) + "'");
  if (f.is_zero()) return {true, std::nullopt};
  std::int64_t d = f.terms()[0].first.weighted_degree(weights);
  for (const auto& e : f.terms())
    if (e.first.weighted_degree(weights) != d) return {false, std::nullopt};
  return {true, d};
}

std::vector<std::int64_t> weight_vector(const VariableUniverse& u, const std::map<std::string, std::int64_t>& by_name) {
  std::vector<std::int64_t> w(u.size(), 0);
  for (const auto& [name, value] : by_name) w[u.index(name)] = value;
  return w;
}

}  // namespace bbs::polycore
