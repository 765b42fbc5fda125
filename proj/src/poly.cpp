#include "reeskit/poly.hpp"

#include <algorithm>
#include <ostream>

#include "reeskit/errors.hpp"

namespace reeskit {

PolyRing::PolyRing(std::vector<std::string> vars, MonomialOrder order)
    : vars_(std::move(vars)), order_(std::move(order)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw InvalidArgument("duplicate variable '" + vars_[i] + "'");
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(vars), std::move(order));
}

void require_same_ring(const Poly& a, const Poly& b) {
  if (a.ring() == b.ring()) return;
  if (!a.ring()->same_as(*b.ring())) throw ContextMismatch("polynomials from different rings");
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw InvalidArgument("variable index out of range");
  Monomial::Storage exps(ring->nvars(), 0);
  exps[index] = 1;
  return monomial(ring, Monomial(std::span<const Exponent>(exps.data(), exps.size())), 1);
}

Poly Poly::monomial(RingPtr ring, Monomial m, Rational c) {
  if (m.size() != ring->nvars()) throw ContextMismatch("monomial length does not match ring");
  Poly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  for (const auto& t : terms)
    if (t.mono.size() != ring->nvars()) throw ContextMismatch("monomial length does not match ring");
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return Poly(std::move(ring), std::move(out));
}

long Poly::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, t.mono.degree());
  return d;
}

long Poly::degree_in(std::size_t first, std::size_t last) const {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, t.mono.degree_in(first, last));
  return d;
}

bool Poly::is_homogeneous(std::span<const int> weights) const {
  std::optional<long> deg;
  for (const auto& t : terms_) {
    long d = 0;
    for (std::size_t i = 0; i < t.mono.size() && i < weights.size(); ++i) d += long(weights[i]) * t.mono[i];
    if (deg && *deg != d) return false;
    deg = d;
  }
  return true;
}

bool Poly::free_of(std::size_t first, std::size_t last) const {
  for (const auto& t : terms_)
    if (t.mono.degree_in(first, last) != 0) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

// Merges a and sign*b (both sorted decreasing).
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, const MonomialOrder& order,
                              bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = order.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(negate_b ? Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Rational s = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(negate_b ? Term{b[j].mono, -b[j].coeff} : b[j]);
  return out;
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  return Poly(a.ring_, merge_terms(a.terms_, b.terms_, a.ring_->order(), false));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  return Poly(a.ring_, merge_terms(a.terms_, b.terms_, a.ring_->order(), true));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
  if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  std::vector<Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prods.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Poly::from_terms(a.ring_, std::move(prods));
}

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return Poly(ring_);
  Poly out(*this);
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return Poly(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * m, t.coeff * c});
  return Poly(ring_, std::move(out));
}

Poly Poly::sub_mul(const Rational& c, const Monomial& m, const Poly& g) const {
  require_same_ring(*this, g);
  const auto& order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& a = terms_;
  const auto& b = g.terms_;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].mono * m;
    const int cmp = order.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(bm), -(b[j].coeff * c)});
      ++j;
    } else {
      Rational s = a[i].coeff - b[j].coeff * c;
      if (!s.is_zero()) out.push_back({std::move(bm), std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono * m, -(b[j].coeff * c)});
  return Poly(ring_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return scaled(leading_coeff().inverse());
}

Poly Poly::with_ring(RingPtr target) const {
  if (target->vars() != ring_->vars()) throw ContextMismatch("with_ring requires identical variables");
  if (target == ring_ || target->order() == ring_->order()) return Poly(std::move(target), terms_);
  return from_terms(std::move(target), terms_);
}

Poly Poly::map_vars(RingPtr target, std::span<const int> var_map) const {
  if (var_map.size() != ring_->nvars()) throw InvalidArgument("variable map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  Monomial::Storage exps;
  for (const auto& t : terms_) {
    exps.assign(target->nvars(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (var_map[i] < 0) throw InvalidArgument("variable '" + ring_->vars()[i] + "' has no image");
      exps[static_cast<std::size_t>(var_map[i])] += t.mono[i];
    }
    out.push_back({Monomial(std::span<const Exponent>(exps.data(), exps.size())), t.coeff});
  }
  return from_terms(std::move(target), std::move(out));
}

Poly Poly::substitute_zero(std::size_t first, std::size_t last) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.degree_in(first, last) == 0) out.push_back(t);
  return Poly(ring_, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ != b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars()[i];
      if (t.mono[i] != 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += c.str();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.str() + "*" + mono;
    }
  }
  return out;
}

Poly pow(const Poly& f, unsigned e) {
  Poly result = Poly::constant(f.ring(), 1);
  Poly base = f;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
  require_same_ring(f, g);
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  Poly rem = f;
  std::vector<Term> quot;
  const Monomial& lg = g.leading_monomial();
  const Rational lc_inv = g.leading_coeff().inverse();
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!lg.divides(lt.mono)) return std::nullopt;
    Monomial q = quotient(lt.mono, lg);
    Rational c = lt.coeff * lc_inv;
    rem = rem.sub_mul(c, q, g);
    quot.push_back({std::move(q), std::move(c)});
  }
  return Poly::from_terms(f.ring(), std::move(quot));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace reeskit
