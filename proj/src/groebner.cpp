#include "reeskit/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <tuple>
#include <stdexcept>
#include <string>

#include "reeskit/errors.hpp"

namespace reeskit {

namespace {

std::uint64_t divmask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) mask |= std::uint64_t{1} << (i % 64);
  return mask;
}

// Leading-monomial index over a set of divisors.
class DivisorTable {
public:
  void add(const Poly* p) {
    polys_.push_back(p);
    masks_.push_back(divmask(p->leading_monomial()));
    active_.push_back(true);
  }
  void deactivate(std::size_t i) { active_[i] = false; }
  bool active(std::size_t i) const { return active_[i]; }
  std::size_t size() const { return polys_.size(); }
  const Poly& operator[](std::size_t i) const { return *polys_[i]; }

  const Poly* find(const Monomial& m, std::size_t skip = SIZE_MAX) const {
    const std::uint64_t mask = divmask(m);
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (!active_[i] || i == skip) continue;
      if ((masks_[i] & ~mask) != 0) continue;
      if (polys_[i]->leading_monomial().divides(m)) return polys_[i];
    }
    return nullptr;
  }

private:
  std::vector<const Poly*> polys_;
  std::vector<std::uint64_t> masks_;
  std::vector<bool> active_;
};

// work[start+1..] - c*q*tail(g), as a fresh decreasing term vector.
std::vector<Term> subtract_multiple(std::vector<Term>& work, std::size_t start, const Rational& c,
                                    const Monomial& q, const Poly& g, const MonomialOrder& order) {
  std::span<const Term> b = g.terms().subspan(1);
  std::vector<Term> out;
  out.reserve(work.size() - start + b.size());
  std::size_t i = start + 1, j = 0;
  while (i < work.size() && j < b.size()) {
    Monomial bm = b[j].mono * q;
    const int cmp = order.compare(work[i].mono, bm);
    if (cmp > 0) {
      out.push_back(std::move(work[i++]));
    } else if (cmp < 0) {
      out.push_back({std::move(bm), -(b[j].coeff * c)});
      ++j;
    } else {
      Rational s = work[i].coeff - b[j].coeff * c;
      if (!s.is_zero()) out.push_back({std::move(bm), std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < work.size(); ++i) out.push_back(std::move(work[i]));
  for (; j < b.size(); ++j) out.push_back({b[j].mono * q, -(b[j].coeff * c)});
  return out;
}

Poly reduce_by_table(const Poly& f, const DivisorTable& table, std::size_t skip = SIZE_MAX) {
  const auto& order = f.ring()->order();
  std::vector<Term> work(f.terms().begin(), f.terms().end());
  std::vector<Term> result;
  std::size_t start = 0;
  while (start < work.size()) {
    const Term& lt = work[start];
    const Poly* g = table.find(lt.mono, skip);
    if (g == nullptr) {
      result.push_back(std::move(work[start]));
      ++start;
      continue;
    }
    Monomial q = quotient(lt.mono, g->leading_monomial());
    Rational c = lt.coeff / g->leading_coeff();
    work = subtract_multiple(work, start, c, q, *g, order);
    start = 0;
  }
  return Poly::from_sorted_terms(f.ring(), std::move(result));
}

long weighted_degree(const Monomial& m, const std::vector<int>& weights) {
  long d = 0;
  for (std::size_t i = 0; i < m.size() && i < weights.size(); ++i) d += long(weights[i]) * m[i];
  return d;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
public:
  Buchberger(RingPtr ring, const GroebnerOptions& options) : ring_(std::move(ring)), options_(options) {}

  GroebnerBasis run(std::span<const Poly> gens) {
    std::vector<Poly> inputs;
    for (const auto& g : gens) {
      if (g.ring() != ring_ && !g.ring()->same_as(*ring_)) throw ContextMismatch("generators from different rings");
      if (!g.is_zero()) inputs.push_back(g.monic());
    }
    if (inputs.empty()) return GroebnerBasis(ring_, {});
    for (const auto& g : inputs)
      if (g.is_constant()) return GroebnerBasis(ring_, {Poly::constant(ring_, 1)});

    check_homogeneity_ = !options_.homogeneity_weights.empty();
    if (check_homogeneity_) {
      for (const auto& g : inputs)
        if (!g.is_homogeneous(options_.homogeneity_weights)) check_homogeneity_ = false;
    }
    if (options_.degree_bound && !check_homogeneity_)
      throw InvalidArgument("degree-truncated basis needs homogeneous input for the given weights");

    // Smaller inputs first keeps the early reductions cheap.
    std::stable_sort(inputs.begin(), inputs.end(), [&](const Poly& a, const Poly& b) {
      return ring_->order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (auto& g : inputs) {
      Poly h = reduce_by_table(g, table_);
      if (!h.is_zero()) insert(h.monic());
    }

    while (!pairs_.empty()) {
      const std::size_t best = select_pair();
      Pair p = std::move(pairs_[best]);
      pairs_[best] = std::move(pairs_.back());
      pairs_.pop_back();
      Poly s = s_polynomial(basis_[p.i], basis_[p.j]);
      Poly h = reduce_by_table(s, table_);
      if (h.is_zero()) continue;
      h = h.monic();
      if (h.is_constant()) return GroebnerBasis(ring_, {Poly::constant(ring_, 1)});
      insert(std::move(h));
    }
    return finish();
  }

private:
  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      const int c = ring_->order().compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    return best;
  }

  void insert(Poly h) {
    if (h.total_degree() > options_.max_degree)
      throw ResourceCapExceeded("Groebner basis element of degree " + std::to_string(h.total_degree()) +
                                " exceeds the degree cap " + std::to_string(options_.max_degree));
    if (basis_.size() + 1 > options_.max_basis)
      throw ResourceCapExceeded("Groebner basis exceeds the size cap " + std::to_string(options_.max_basis));
    if (check_homogeneity_ && !h.is_homogeneous(options_.homogeneity_weights))
      throw std::logic_error("homogeneity lost during Buchberger reduction: " + h.str());

    const std::size_t k = basis_.size();
    basis_.push_back(std::move(h));
    const Monomial& lh = basis_[k].leading_monomial();

    // Gebauer-Moeller update.
    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < k; ++j)
      if (table_.active(j)) candidates.push_back(j);
    std::vector<Monomial> lcms;
    lcms.reserve(candidates.size());
    for (auto j : candidates) lcms.push_back(lcm(lh, basis_[j].leading_monomial()));

    std::vector<bool> keep(candidates.size(), false);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (coprime(lh, basis_[candidates[a]].leading_monomial())) {
        keep[a] = true;
        continue;
      }
      bool dominated = false;
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        if (b == a) continue;
        // b is still pending (b > a) or was kept (b < a).
        if (b < a && !keep[b]) continue;
        dominated = lcms[b].divides(lcms[a]);
      }
      keep[a] = !dominated;
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + candidates.size());
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm) && !(lcm(basis_[p.i].leading_monomial(), lh) == p.lcm) &&
          !(lcm(basis_[p.j].leading_monomial(), lh) == p.lcm))
        continue;
      next.push_back(std::move(p));
    }
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!keep[a]) continue;
      if (coprime(lh, basis_[candidates[a]].leading_monomial())) continue;
      if (skip_by_bound(lcms[a])) {
        truncated_ = true;
        continue;
      }
      next.push_back({candidates[a], k, std::move(lcms[a])});
    }
    pairs_ = std::move(next);

    for (std::size_t j = 0; j < k; ++j)
      if (table_.active(j) && lh.divides(basis_[j].leading_monomial())) table_.deactivate(j);
    table_.add(&basis_[k]);
  }

  bool skip_by_bound(const Monomial& m) const {
    return options_.degree_bound && weighted_degree(m, options_.homogeneity_weights) > *options_.degree_bound;
  }

  GroebnerBasis finish() {
    std::vector<std::size_t> minimal;
    for (std::size_t j = 0; j < basis_.size(); ++j)
      if (table_.active(j)) minimal.push_back(j);
    DivisorTable reducers;
    for (auto j : minimal) reducers.add(&basis_[j]);
    std::vector<Poly> out;
    out.reserve(minimal.size());
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      const Poly& g = basis_[minimal[a]];
      // Keep the leading term, reduce the tail by every other element.
      Poly tail = Poly::from_sorted_terms(ring_, {g.terms().begin() + 1, g.terms().end()});
      Poly reduced_tail = reduce_by_table(tail, reducers, a);
      std::vector<Term> terms{g.leading_term()};
      terms.insert(terms.end(), reduced_tail.terms().begin(), reduced_tail.terms().end());
      out.push_back(Poly::from_sorted_terms(ring_, std::move(terms)).monic());
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
      return ring_->order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return GroebnerBasis(ring_, std::move(out), truncated_);
  }

  RingPtr ring_;
  const GroebnerOptions& options_;
  std::deque<Poly> basis_;
  DivisorTable table_;
  std::vector<Pair> pairs_;
  bool check_homogeneity_ = false;
  bool truncated_ = false;
};

}  // namespace

Poly s_polynomial(const Poly& f, const Poly& g) {
  require_same_ring(f, g);
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Poly a = f.mul_term(quotient(l, f.leading_monomial()), g.leading_coeff());
  return a.sub_mul(f.leading_coeff(), quotient(l, g.leading_monomial()), g);
}

Poly reduce_full(const Poly& f, std::span<const Poly> divisors) {
  DivisorTable table;
  for (const auto& d : divisors) {
    require_same_ring(f, d);
    if (!d.is_zero()) table.add(&d);
  }
  return reduce_by_table(f, table);
}

Poly GroebnerBasis::normal_form(const Poly& f) const {
  if (f.ring() != ring_ && !f.ring()->same_as(*ring_))
    throw ContextMismatch("normal form: polynomial ring or order differs from the basis");
  DivisorTable table;
  for (const auto& g : elements_) table.add(&g);
  return reduce_by_table(f, table);
}

bool GroebnerBasis::self_check() const {
  for (const auto& g : elements_)
    if (g.is_zero() || !g.leading_coeff().is_one()) return false;
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    for (std::size_t b = 0; b < elements_.size(); ++b) {
      if (a == b) continue;
      for (const auto& t : elements_[b].terms())
        if (elements_[a].leading_monomial().divides(t.mono)) return false;
    }
  }
  for (std::size_t a = 0; a < elements_.size(); ++a)
    for (std::size_t b = a + 1; b < elements_.size(); ++b)
      if (!normal_form(s_polynomial(elements_[a], elements_[b])).is_zero()) return false;
  return true;
}

GroebnerBasis reduced_groebner(std::span<const Poly> gens, const GroebnerOptions& options) {
  if (gens.empty()) throw InvalidArgument("reduced_groebner needs at least one generator to fix the ring");
  return Buchberger(gens.front().ring(), options).run(gens);
}

GroebnerBasis reduced_groebner(std::span<const Poly> gens, const RingPtr& ring, const GroebnerOptions& options) {
  std::vector<Poly> moved;
  moved.reserve(gens.size());
  for (const auto& g : gens) moved.push_back(g.with_ring(ring));
  return Buchberger(ring, options).run(moved);
}

std::vector<Poly> eliminate_variables(std::span<const Poly> gens, std::size_t k, const RingPtr& target,
                                      const GroebnerOptions& options) {
  if (gens.empty()) return {};
  const RingPtr& source = gens.front().ring();
  if (k > source->nvars() || source->nvars() - k != target->nvars())
    throw InvalidArgument("elimination target has the wrong number of variables");
  for (std::size_t i = 0; i < target->nvars(); ++i)
    if (target->vars()[i] != source->vars()[k + i]) throw ContextMismatch("elimination target variables differ");
  auto elim_ring = make_ring(source->vars(), MonomialOrder::elimination(static_cast<int>(k), target->order()));
  GroebnerBasis gb = reduced_groebner(gens, elim_ring, options);
  std::vector<int> var_map(source->nvars(), -1);
  for (std::size_t i = k; i < source->nvars(); ++i) var_map[i] = static_cast<int>(i - k);
  std::vector<Poly> out;
  for (const auto& g : gb.elements())
    if (g.free_of(0, k)) out.push_back(g.map_vars(target, var_map));
  return out;
}

}  // namespace reeskit
