#include "polycore/ordering.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "polycore/errors.hpp"

namespace bbs::polycore {

namespace {

std::vector<size_t> all_variables(const VariableUniverse& u) {
  std::vector<size_t> v(u.size());
  std::iota(v.begin(), v.end(), size_t{0});
  return v;
}

void check_precedence(const VariableUniverse& u, const std::vector<size_t>& prec) {
  std::set<size_t> seen;
  for (size_t v : prec) {
    if (v >= u.size()) throw OrderingDomainError("precedence names a variable outside the universe");
    if (!seen.insert(v).second) throw OrderingDomainError("precedence repeats variable '" + u.name(v) + "'");
  }
}

TermOrdering::Row unit_row(size_t v, std::int64_t sign) { return {{{v, sign}}}; }

TermOrdering::Row sum_row(const std::vector<size_t>& vars) {
  TermOrdering::Row r;
  for (size_t v : vars) r.entries.emplace_back(v, 1);
  return r;
}

std::vector<TermOrdering::Row> basic_rows(TermOrdering::Kind kind, const std::vector<size_t>& prec) {
  using Kind = TermOrdering::Kind;
  std::vector<TermOrdering::Row> rows;
  switch (kind) {
    case Kind::Lex:
      for (size_t v : prec) rows.push_back(unit_row(v, 1));
      break;
    case Kind::DegLex:
      rows.push_back(sum_row(prec));
      for (size_t k = 0; k + 1 < prec.size(); ++k) rows.push_back(unit_row(prec[k], 1));
      break;
    case Kind::DegRevLex:
      rows.push_back(sum_row(prec));
      for (size_t k = prec.size(); k-- > 1;) rows.push_back(unit_row(prec[k], -1));
      break;
    default:
      throw OrderingDomainError("not a basic ordering kind");
  }
  return rows;
}

}  // namespace

void TermOrdering::set_covered(const std::vector<size_t>& vars) {
  covered_.assign(u_->size(), false);
  for (size_t v : vars) covered_.at(v) = true;
  uncovered_.clear();
  for (size_t v = 0; v < covered_.size(); ++v)
    if (!covered_[v]) uncovered_.push_back(v);
}

std::vector<size_t> TermOrdering::covered() const {
  std::vector<size_t> c;
  for (size_t v = 0; v < covered_.size(); ++v)
    if (covered_[v]) c.push_back(v);
  return c;
}

TermOrdering TermOrdering::of_kind(Kind kind, UniversePtr u, std::vector<size_t> precedence) {
  if (precedence.empty()) precedence = all_variables(*u);
  check_precedence(*u, precedence);
  TermOrdering o(std::move(u), kind);
  o.rows_ = basic_rows(kind, precedence);
  o.set_covered(precedence);
  o.precedence_ = std::move(precedence);
  return o;
}

TermOrdering TermOrdering::lex(UniversePtr u, std::vector<size_t> precedence) {
  return of_kind(Kind::Lex, std::move(u), std::move(precedence));
}

TermOrdering TermOrdering::deglex(UniversePtr u, std::vector<size_t> precedence) {
  return of_kind(Kind::DegLex, std::move(u), std::move(precedence));
}

TermOrdering TermOrdering::degrevlex(UniversePtr u, std::vector<size_t> precedence) {
  return of_kind(Kind::DegRevLex, std::move(u), std::move(precedence));
}

TermOrdering TermOrdering::weighted(std::vector<std::int64_t> weights, const TermOrdering& tiebreak) {
  const auto& u = tiebreak.universe();
  if (weights.size() != u->size()) throw OrderingDomainError("weight vector length differs from universe size");
  TermOrdering o(u, Kind::Weighted);
  Row w;
  for (size_t v : tiebreak.covered()) {
    if (weights[v] <= 0) throw OrderingDomainError("non-positive weight on '" + u->name(v) + "'");
    w.entries.emplace_back(v, weights[v]);
  }
  o.rows_.push_back(std::move(w));
  o.rows_.insert(o.rows_.end(), tiebreak.rows_.begin(), tiebreak.rows_.end());
  o.set_covered(tiebreak.covered());
  o.weights_ = std::move(weights);
  o.parts_.push_back(tiebreak);
  return o;
}

TermOrdering TermOrdering::elimination(UniversePtr u, std::vector<size_t> block, Kind inner, Kind outer) {
  check_precedence(*u, block);
  std::vector<bool> in_block(u->size(), false);
  for (size_t v : block) in_block[v] = true;
  std::vector<size_t> rest;
  for (size_t v = 0; v < u->size(); ++v)
    if (!in_block[v]) rest.push_back(v);
  TermOrdering o(u, Kind::Elimination);
  if (!block.empty()) {
    o.parts_.push_back(of_kind(outer, u, block));
    o.rows_ = o.parts_.back().rows_;
  }
  if (!rest.empty()) {
    o.parts_.push_back(of_kind(inner, u, rest));
    o.rows_.insert(o.rows_.end(), o.parts_.back().rows_.begin(), o.parts_.back().rows_.end());
  }
  o.set_covered(all_variables(*u));
  o.block_ = std::move(block);
  return o;
}

TermOrdering TermOrdering::sigma_bar(UniversePtr u, std::vector<std::int64_t> weights, const TermOrdering& sigma_x) {
  if (weights.size() != u->size()) throw OrderingDomainError("weight vector length differs from universe size");
  for (size_t v : sigma_x.covered())
    if (sigma_x.universe()->block(v) != VariableUniverse::Block::X)
      throw OrderingDomainError("sigma_x must rank x-variables only");
  TermOrdering sx = sigma_x.rebased(u);

  std::vector<size_t> covered;
  std::vector<size_t> cvars;
  Row w;
  for (size_t v = 0; v < u->size(); ++v) {
    bool is_x = u->block(v) == VariableUniverse::Block::X;
    if (is_x && weights[v] <= 0) throw OrderingDomainError("non-positive weight on '" + u->name(v) + "'");
    if (weights[v] < 0) throw OrderingDomainError("negative weight on '" + u->name(v) + "'");
    if (weights[v] == 0) continue;
    if (!is_x) cvars.push_back(v);
    covered.push_back(v);
    w.entries.emplace_back(v, weights[v]);
  }
  for (size_t v = 0; v < u->x_count(); ++v)
    if (!sx.covers(v)) throw OrderingDomainError("sigma_x does not rank '" + u->name(v) + "'");

  TermOrdering o(u, Kind::SigmaBar);
  o.rows_.push_back(std::move(w));
  o.rows_.insert(o.rows_.end(), sx.rows_.begin(), sx.rows_.end());
  if (!cvars.empty()) {
    auto tb = basic_rows(Kind::DegRevLex, cvars);
    o.rows_.insert(o.rows_.end(), tb.begin(), tb.end());
  }
  o.set_covered(covered);
  o.weights_ = std::move(weights);
  o.parts_.push_back(std::move(sx));
  return o;
}

TermOrdering TermOrdering::matrix(UniversePtr u, std::vector<Row> rows, std::vector<size_t> covered) {
  check_precedence(*u, covered);
  TermOrdering o(std::move(u), Kind::Matrix);
  for (const Row& r : rows)
    for (auto [v, w] : r.entries)
      if (v >= o.u_->size()) throw OrderingDomainError("matrix row names a variable outside the universe");
  o.rows_ = std::move(rows);
  o.set_covered(covered);
  o.precedence_ = std::move(covered);
  return o;
}

std::strong_ordering TermOrdering::compare(const Term& a, const Term& b) const {
  for (size_t v : uncovered_)
    if (a[v] || b[v])
      throw OrderingDomainError("variable '" + u_->name(v) + "' is not ranked by this " + kind_name() + " ordering");
  for (const Row& r : rows_) {
    std::int64_t d = 0;
    for (const auto& [v, w] : r.entries) d += w * (std::int64_t(a[v]) - std::int64_t(b[v]));
    if (d != 0) return d > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  // Rows of every constructed ordering separate distinct terms; this is only
  // reachable for degenerate user matrices.
  return a <=> b;
}

std::string TermOrdering::kind_name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::DegLex: return "deglex";
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Weighted: return "weighted";
    case Kind::Elimination: return "elimination";
    case Kind::SigmaBar: return "sigmabar";
    case Kind::Matrix: return "matrix";
  }
  return "unknown";
}

TermOrdering TermOrdering::rebased(UniversePtr target) const {
  if (same_universe(u_, target)) {
    TermOrdering o(*this);
    o.u_ = std::move(target);
    return o;
  }
  std::vector<size_t> map(u_->size());
  for (size_t v = 0; v < u_->size(); ++v) map[v] = target->index(u_->name(v));
  auto remap = [&](const std::vector<size_t>& vs) {
    std::vector<size_t> r;
    for (size_t v : vs) r.push_back(map[v]);
    return r;
  };
  TermOrdering o(target, kind_);
  for (const Row& r : rows_) {
    Row nr;
    for (auto [v, w] : r.entries) nr.entries.emplace_back(map[v], w);
    o.rows_.push_back(std::move(nr));
  }
  o.set_covered(remap(covered()));
  o.precedence_ = remap(precedence_);
  o.block_ = remap(block_);
  if (!weights_.empty()) {
    o.weights_.assign(target->size(), 0);
    for (size_t v = 0; v < u_->size(); ++v) o.weights_[map[v]] = weights_[v];
  }
  for (const TermOrdering& p : parts_) o.parts_.push_back(p.rebased(target));
  return o;
}

bool operator==(const TermOrdering& a, const TermOrdering& b) {
  return same_universe(a.u_, b.u_) && a.rows_ == b.rows_ && a.covered_ == b.covered_;
}

TermOrdering::Kind parse_ordering_kind(const std::string& name) {
  std::string n;
  for (char ch : name) n.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (n == "lex") return TermOrdering::Kind::Lex;
  if (n == "deglex") return TermOrdering::Kind::DegLex;
  if (n == "degrevlex" || n == "drl") return TermOrdering::Kind::DegRevLex;
  throw ParseError("unknown term ordering '" + name + "' (expected lex, deglex or degrevlex)");
}

}  // namespace bbs::polycore
