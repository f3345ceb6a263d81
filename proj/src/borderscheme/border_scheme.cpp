#include "borderscheme/border_scheme.hpp"

#include <algorithm>
#include <set>

#include "polycore/division.hpp"
#include "polycore/errors.hpp"

namespace bbs::borderscheme {

using polycore::Term;
using polycore::VariableUniverse;

namespace {

std::vector<CIndex> grid(const OrderIdealData& O) {
  std::vector<CIndex> keys;
  for (size_t j = 1; j <= O.nu(); ++j)
    for (size_t i = 1; i <= O.mu(); ++i) keys.push_back({static_cast<int>(i), static_cast<int>(j)});
  return keys;
}

std::vector<std::string> x_names(const OrderIdealData& O) {
  const auto& names = O.universe()->names();
  return {names.begin(), names.begin() + static_cast<long>(O.universe()->x_count())};
}

// Where x_k * t_i lands: (true, index in O) or (false, index in the border).
std::pair<bool, size_t> product_position(const OrderIdealData& O, size_t k, size_t i) {
  Term m = O.terms()[i] * Term::variable(O.n(), k);
  if (auto in = O.index_of(m)) return {true, *in};
  auto b = O.border_index_of(m);
  if (!b) throw InvariantViolation("x_k * t_i is neither in O nor in its border");
  return {false, *b};
}

CIndex key(size_t i0, size_t j0) { return {static_cast<int>(i0 + 1), static_cast<int>(j0 + 1)}; }

}  // namespace

UniversePtr scheme_universe(const OrderIdealData& O) { return VariableUniverse::make(x_names(O), grid(O)); }

UniversePtr coefficient_universe(const OrderIdealData& O) { return VariableUniverse::make({}, grid(O)); }

std::vector<Polynomial> generic_prebasis(const OrderIdealData& O) {
  UniversePtr u = scheme_universe(O);
  const size_t nx = O.n();
  std::vector<Polynomial> out;
  for (size_t j = 0; j < O.nu(); ++j) {
    std::vector<Polynomial::Entry> entries;
    Term b(u->size());
    for (size_t v = 0; v < nx; ++v) b.set(v, O.border()[j][v]);
    entries.emplace_back(b, Rational(1));
    for (size_t i = 0; i < O.mu(); ++i) {
      Term t(u->size());
      for (size_t v = 0; v < nx; ++v) t.set(v, O.terms()[i][v]);
      t.set(u->c_index(key(i, j)), 1);
      entries.emplace_back(t, Rational(-1));
    }
    out.push_back(Polynomial::from_entries(u, std::move(entries)));
  }
  return out;
}

GenericMatrix::GenericMatrix(size_t size, UniversePtr u) : size_(size), entries_(size * size, Polynomial(u)) {}

GenericMatrix GenericMatrix::operator*(const GenericMatrix& o) const {
  GenericMatrix r(size_, entries_.front().universe());
  for (size_t a = 0; a < size_; ++a)
    for (size_t k = 0; k < size_; ++k) {
      const Polynomial& left = at(a, k);
      if (left.is_zero()) continue;
      for (size_t b = 0; b < size_; ++b)
        if (!o.at(k, b).is_zero()) r.at(a, b) += left * o.at(k, b);
    }
  return r;
}

GenericMatrix GenericMatrix::operator-(const GenericMatrix& o) const {
  GenericMatrix r(*this);
  for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
  return r;
}

GenericMatrix multiplication_matrix(const OrderIdealData& O, size_t k) {
  if (k >= O.n()) throw PreconditionError("axis index out of range");
  UniversePtr cu = coefficient_universe(O);
  GenericMatrix A(O.mu(), cu);
  for (size_t i = 0; i < O.mu(); ++i) {
    auto [inside, pos] = product_position(O, k, i);
    if (inside) {
      A.at(pos, i) = Polynomial::constant(cu, 1);
    } else {
      for (size_t r = 0; r < O.mu(); ++r) A.at(r, i) = Polynomial::variable(cu, cu->c_index(key(r, pos)));
    }
  }
  return A;
}

Ideal border_scheme_ideal(const OrderIdealData& O) {
  UniversePtr cu = coefficient_universe(O);
  std::vector<GenericMatrix> mats;
  for (size_t k = 0; k < O.n(); ++k) mats.push_back(multiplication_matrix(O, k));
  std::vector<Polynomial> gens;
  std::set<std::vector<Polynomial::Entry>> seen;
  for (size_t k = 0; k < O.n(); ++k)
    for (size_t l = k + 1; l < O.n(); ++l) {
      GenericMatrix C = mats[k] * mats[l] - mats[l] * mats[k];
      for (size_t r = 0; r < O.mu(); ++r)
        for (size_t c = 0; c < O.mu(); ++c) {
          const Polynomial& e = C.at(r, c);
          if (e.is_zero()) continue;
          std::vector<Polynomial::Entry> sig(e.terms().begin(), e.terms().end());
          if (seen.insert(std::move(sig)).second) gens.push_back(e);
        }
    }
  return Ideal(cu, std::move(gens));
}

SchemePoint::SchemePoint(size_t mu, size_t nu) : mu_(mu), nu_(nu), values_(mu * nu) {}

size_t SchemePoint::index(CIndex key) const {
  if (key.i < 1 || key.j < 1 || static_cast<size_t>(key.i) > mu_ || static_cast<size_t>(key.j) > nu_)
    throw PreconditionError("coordinate " + polycore::c_name(key) + " is outside the " + std::to_string(mu_) + "x" +
                            std::to_string(nu_) + " grid");
  return static_cast<size_t>(key.j - 1) * mu_ + static_cast<size_t>(key.i - 1);
}

const Rational& SchemePoint::at(CIndex key) const { return values_[index(key)]; }

void SchemePoint::set(CIndex key, Rational value) { values_[index(key)] = std::move(value); }

bool SchemePoint::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return q == 0; });
}

std::map<size_t, Rational> SchemePoint::assignment(const VariableUniverse& u) const {
  std::map<size_t, Rational> out;
  for (size_t v = u.x_count(); v < u.x_count() + u.c_count(); ++v) out.emplace(v, at(u.c_key(v)));
  return out;
}

nlohmann::json point_to_json(const SchemePoint& p) {
  nlohmann::json c = nlohmann::json::object();
  for (size_t j = 1; j <= p.nu(); ++j)
    for (size_t i = 1; i <= p.mu(); ++i) {
      CIndex k{static_cast<int>(i), static_cast<int>(j)};
      if (p.at(k) != 0) c[std::to_string(i) + "," + std::to_string(j)] = to_string(p.at(k));
    }
  return {{"c", c}};
}

SchemePoint point_from_json(const nlohmann::json& j, size_t mu, size_t nu) {
  SchemePoint p(mu, nu);
  if (!j.is_object() || !j.contains("c") || !j["c"].is_object())
    throw ParseError("scheme point must be an object with a \"c\" map");
  for (const auto& [k, v] : j["c"].items()) {
    auto comma = k.find(',');
    if (comma == std::string::npos) throw ParseError("scheme point key '" + k + "' is not of the form \"i,j\"");
    int i = 0, jj = 0;
    try {
      size_t used_i = 0, used_j = 0;
      i = std::stoi(k.substr(0, comma), &used_i);
      jj = std::stoi(k.substr(comma + 1), &used_j);
      if (used_i != comma || used_j != k.size() - comma - 1) throw std::invalid_argument(k);
    } catch (const std::logic_error&) {
      throw ParseError("scheme point key '" + k + "' is not of the form \"i,j\"");
    }
    Rational q;
    if (v.is_string()) q = parse_rational(v.get<std::string>());
    else if (v.is_number_integer()) q = Rational(v.get<long>());
    else throw ParseError("scheme point value for '" + k + "' must be a rational string");
    p.set({i, jj}, q);
  }
  return p;
}

namespace {

using Dense = std::vector<std::vector<Rational>>;

Dense numeric_matrix(const OrderIdealData& O, size_t k, const SchemePoint& p) {
  Dense A(O.mu(), std::vector<Rational>(O.mu()));
  for (size_t i = 0; i < O.mu(); ++i) {
    auto [inside, pos] = product_position(O, k, i);
    if (inside) A[pos][i] = 1;
    else
      for (size_t r = 0; r < O.mu(); ++r) A[r][i] = p.at(key(r, pos));
  }
  return A;
}

}  // namespace

PointCheck check_border_basis_point(const OrderIdealData& O, const SchemePoint& p) {
  if (p.mu() != O.mu() || p.nu() != O.nu()) throw PreconditionError("scheme point does not match the order ideal grid");
  const size_t mu = O.mu();
  std::vector<Dense> mats;
  for (size_t k = 0; k < O.n(); ++k) mats.push_back(numeric_matrix(O, k, p));
  for (size_t k = 0; k < O.n(); ++k)
    for (size_t l = k + 1; l < O.n(); ++l)
      for (size_t r = 0; r < mu; ++r)
        for (size_t c = 0; c < mu; ++c) {
          Rational s = 0;
          for (size_t m = 0; m < mu; ++m) s += mats[k][r][m] * mats[l][m][c] - mats[l][r][m] * mats[k][m][c];
          if (s != 0) {
            GenericMatrix C = multiplication_matrix(O, k) * multiplication_matrix(O, l) -
                              multiplication_matrix(O, l) * multiplication_matrix(O, k);
            return {false, C.at(r, c), k, l, r, c};
          }
        }
  return {true, std::nullopt};
}

bool is_border_basis_point(const OrderIdealData& O, const SchemePoint& p) {
  return check_border_basis_point(O, p).on_scheme;
}

std::vector<Polynomial> specialize_prebasis(const OrderIdealData& O, const SchemePoint& p) {
  if (p.mu() != O.mu() || p.nu() != O.nu()) throw PreconditionError("scheme point does not match the order ideal grid");
  const UniversePtr& u = O.universe();
  std::vector<Polynomial> out;
  for (size_t j = 0; j < O.nu(); ++j) {
    std::vector<Polynomial::Entry> entries{{O.border()[j], Rational(1)}};
    for (size_t i = 0; i < O.mu(); ++i) entries.emplace_back(O.terms()[i], -p.at(key(i, j)));
    out.push_back(Polynomial::from_entries(u, std::move(entries)));
  }
  return out;
}

size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
  size_t rank = 0;
  const size_t cols = rows.empty() ? 0 : rows.front().size();
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

OracleVerdict oracle_is_border_basis(const OrderIdealData& O, const SchemePoint& p, const gbengine::GbOptions& opts) {
  const UniversePtr& u = O.universe();
  Ideal I(u, specialize_prebasis(O, p));
  auto ord = gbengine::default_ordering(u);
  auto gb = gbengine::groebner_basis(I, ord, opts);
  if (gb.polys.size() == 1 && gb.polys.front().is_constant()) return {false, "the specialized ideal is the unit ideal"};
  auto M = gbengine::minimalize(u, [&] {
    std::vector<Term> lts;
    for (const auto& g : gb.polys) lts.push_back(polycore::leading_term(g, ord));
    return lts;
  }());
  auto Q = gbengine::complement_order_ideal(M);
  if (!Q) return {false, "the specialized ideal is not zero-dimensional"};
  if (Q->mu() != O.mu())
    return {false, "quotient dimension " + std::to_string(Q->mu()) + " differs from mu = " + std::to_string(O.mu())};
  std::vector<std::vector<Rational>> rows;
  for (const Term& t : O.terms()) {
    Polynomial nf = gbengine::reduce_modulo(Polynomial::monomial(u, t), gb.polys, ord);
    std::vector<Rational> row;
    for (const Term& s : Q->terms()) row.push_back(nf.coefficient(s));
    rows.push_back(std::move(row));
  }
  size_t rank = matrix_rank(std::move(rows));
  if (rank != O.mu())
    return {false, "residues of O span only " + std::to_string(rank) + " of " + std::to_string(O.mu()) + " dimensions"};
  return {true, "quotient has basis O"};
}

}  // namespace bbs::borderscheme
