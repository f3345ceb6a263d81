#include <algorithm>
#include <chrono>

#include "gbengine/ideal.hpp"
#include "polycore/errors.hpp"
#include "polycore/ordered_poly.hpp"

namespace bbs::gbengine {

using polycore::Divisor;
using polycore::OrderedPoly;

namespace {

using Clock = std::chrono::steady_clock;

struct Element {
  OrderedPoly poly;
  Term lead;
  std::uint64_t mask = 0;
  bool active = true;
  std::uint64_t sugar = 0;
};

struct Pair {
  size_t i, j;  // i < j
  Term lcm;
  unsigned degree;       // total degree of lcm, for the cutoff
  std::uint64_t weight;  // grade of lcm
  std::uint64_t sugar;
  size_t age;
};

class Engine {
 public:
  Engine(const TermOrdering& ord, const GbOptions& opts) : ord_(ord), opts_(opts) {
    set_grading();
    if (opts.max_seconds > 0)
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(opts.max_seconds));
  }

  void add_generator(const Polynomial& f) {
    if (f.is_zero()) return;
    insert(reduce_active(polycore::order_terms(f, ord_)), 0);
  }

  void run() {
    while (!pairs_.empty()) {
      Pair p = pop_pair();
      if (p.degree > opts_.max_degree)
        throw ResourceLimit("max_degree", "S-pair of degree " + std::to_string(p.degree) + " exceeds cutoff " +
                                              std::to_string(opts_.max_degree));
      auto h = reduce_active(s_polynomial(p));
      insert(std::move(h), p.sugar);
    }
  }

  std::vector<OrderedPoly> reduced_basis() const {
    std::vector<const Element*> act;
    for (const auto& e : basis_)
      if (e.active) act.push_back(&e);
    std::vector<OrderedPoly> out;
    for (const Element* e : act) {
      std::vector<Divisor> others;
      for (const Element* o : act)
        if (o != e) others.push_back({&o->poly, o->mask});
      OrderedPoly tail;
      tail.terms.assign(e->poly.terms.begin() + 1, e->poly.terms.end());
      OrderedPoly red = polycore::reduce(std::move(tail), others, ord_);
      OrderedPoly g;
      g.terms.push_back(e->poly.terms.front());
      g.terms.insert(g.terms.end(), std::make_move_iterator(red.terms.begin()),
                     std::make_move_iterator(red.terms.end()));
      polycore::make_monic(g);
      out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(),
              [this](const OrderedPoly& a, const OrderedPoly& b) { return ord_.greater(a.lead(), b.lead()); });
    return out;
  }

 private:
  OrderedPoly reduce_active(OrderedPoly h) {
    std::vector<Divisor> divs;
    for (const auto& e : basis_)
      if (e.active) divs.push_back({&e.poly, e.mask});
    size_t steps = 0;
    polycore::StepObserver count = [this, &steps](size_t, const Rational&, const Term&) {
      if (++steps % 64 == 0) check_clock();
    };
    OrderedPoly r = polycore::reduce(std::move(h), divs, ord_, polycore::DivisorSelection::First, &count);
    reductions_ += steps;
    if (reductions_ > opts_.max_reductions)
      throw ResourceLimit("max_reductions", "more than " + std::to_string(opts_.max_reductions) + " reduction steps");
    check_clock();
    return r;
  }

  // Pairs are ranked by the first row of the ordering when it is a positive
  // grading of the covered variables, by total degree otherwise.
  void set_grading() {
    const auto& u = *ord_.universe();
    grading_.assign(u.size(), 0);
    bool positive = !ord_.rows().empty();
    if (positive)
      for (auto [v, w] : ord_.rows().front().entries) grading_[v] = w;
    for (size_t v = 0; v < u.size() && positive; ++v)
      if (ord_.covers(v) && grading_[v] <= 0) positive = false;
    if (!positive) grading_.assign(u.size(), 1);
  }

  std::uint64_t grade(const Term& t) const {
    std::uint64_t g = 0;
    for (size_t v = 0; v < t.size(); ++v)
      if (t[v]) g += static_cast<std::uint64_t>(grading_[v]) * t[v];
    return g;
  }

  void check_clock() const {
    if (deadline_ && Clock::now() > *deadline_)
      throw ResourceLimit("max_seconds", "basis computation ran longer than " + std::to_string(opts_.max_seconds) + " s");
  }

  OrderedPoly s_polynomial(const Pair& p) const {
    const Element& a = basis_[p.i];
    const Element& b = basis_[p.j];
    OrderedPoly s;
    s.terms.reserve(a.poly.terms.size() + b.poly.terms.size());
    Term ma = p.lcm.quotient(a.lead);
    for (size_t k = 1; k < a.poly.terms.size(); ++k)
      s.terms.emplace_back(a.poly.terms[k].first * ma, a.poly.terms[k].second);
    polycore::subtract_multiple(s.terms, 0, Rational(1), p.lcm.quotient(b.lead),
                                std::vector<polycore::Polynomial::Entry>(b.poly.terms.begin() + 1, b.poly.terms.end()),
                                ord_);
    return s;
  }

  Pair pop_pair() {
    size_t best = 0;
    if (opts_.selection != PairSelection::Fifo) {
      bool by_sugar = opts_.selection == PairSelection::Sugar;
      for (size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& c = pairs_[k];
        const Pair& b = pairs_[best];
        std::uint64_t cd = by_sugar ? c.sugar : c.weight, bd = by_sugar ? b.sugar : b.weight;
        if (cd != bd) {
          if (cd < bd) best = k;
          continue;
        }
        auto cmp = ord_.compare(c.lcm, b.lcm);
        if (cmp == std::strong_ordering::less || (cmp == std::strong_ordering::equal && c.age < b.age)) best = k;
      }
    } else {
      for (size_t k = 1; k < pairs_.size(); ++k)
        if (pairs_[k].age < pairs_[best].age) best = k;
    }
    Pair p = std::move(pairs_[best]);
    pairs_[best] = std::move(pairs_.back());
    pairs_.pop_back();
    return p;
  }

  Pair make_pair(size_t i, size_t j) {
    Term l = Term::lcm(basis_[i].lead, basis_[j].lead);
    unsigned d = l.degree();
    std::uint64_t w = grade(l);
    std::uint64_t sugar = std::max(basis_[i].sugar + w - grade(basis_[i].lead), basis_[j].sugar + w - grade(basis_[j].lead));
    return {std::min(i, j), std::max(i, j), std::move(l), d, w, sugar, next_age_++};
  }

  // Gebauer-Moeller update with Buchberger's product and chain criteria.
  void insert(OrderedPoly h, std::uint64_t sugar) {
    if (h.empty()) return;
    polycore::make_monic(h);
    for (const auto& t : h.terms) sugar = std::max(sugar, grade(t.first));
    size_t hi = basis_.size();
    Element e{std::move(h), {}, 0, true, sugar};
    e.lead = e.poly.lead();
    e.mask = e.lead.support_mask();
    basis_.push_back(std::move(e));
    if (basis_.size() > opts_.max_basis_size)
      throw ResourceLimit("max_basis_size", "basis grew beyond " + std::to_string(opts_.max_basis_size) + " elements");
    const Term& lh = basis_[hi].lead;

    std::vector<Pair> candidates;
    for (size_t g = 0; g < hi; ++g)
      if (basis_[g].active) candidates.push_back(make_pair(g, hi));

    std::vector<Pair> kept;
    for (size_t k = 0; k < candidates.size(); ++k) {
      const Pair& c = candidates[k];
      size_t g = c.i;
      if (Term::coprime(lh, basis_[g].lead)) {
        kept.push_back(c);
        continue;
      }
      bool dominated = false;
      for (size_t m = k + 1; m < candidates.size() && !dominated; ++m)
        dominated = candidates[m].lcm.divides(c.lcm);
      for (size_t m = 0; m < kept.size() && !dominated; ++m) dominated = kept[m].lcm.divides(c.lcm);
      if (!dominated) kept.push_back(c);
    }

    std::vector<Pair> next;
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && Term::lcm(basis_[p.i].lead, lh) != p.lcm &&
                  Term::lcm(basis_[p.j].lead, lh) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& c : kept)
      if (!Term::coprime(lh, basis_[c.i].lead)) next.push_back(std::move(c));
    pairs_ = std::move(next);

    for (size_t g = 0; g < hi; ++g)
      if (basis_[g].active && lh.divides(basis_[g].lead)) basis_[g].active = false;
  }

  const TermOrdering& ord_;
  const GbOptions& opts_;
  std::vector<Element> basis_;
  std::vector<Pair> pairs_;
  size_t next_age_ = 0;
  size_t reductions_ = 0;
  std::optional<Clock::time_point> deadline_;
  std::vector<std::int64_t> grading_;
};

}  // namespace

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const TermOrdering& ord, const GbOptions& opts) {
  if (gens.empty()) return {};
  const UniversePtr& u = gens.front().universe();
  for (const auto& g : gens) polycore::require_same_universe(u, g.universe());
  Engine engine(ord, opts);
  for (const auto& g : gens) engine.add_generator(g);
  engine.run();
  std::vector<Polynomial> out;
  for (const auto& g : engine.reduced_basis()) out.push_back(polycore::to_polynomial(g, u));
  return out;
}

}  // namespace bbs::gbengine
