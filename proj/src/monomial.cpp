#include "reeskit/monomial.hpp"

#include <algorithm>
#include <functional>

#include "reeskit/errors.hpp"

namespace reeskit {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw ResourceCapExceeded("exponent overflow");
  return out;
}

void require_same_length(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw ContextMismatch("monomials over different variable counts");
}

int compare_degrevlex(std::span<const Exponent> a, std::span<const Exponent> b) {
  long da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int compare_lex(std::span<const Exponent> a, std::span<const Exponent> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {
  recompute_degree();
}

Monomial::Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {
  recompute_degree();
}

void Monomial::recompute_degree() {
  degree_ = 0;
  for (auto e : exps_) {
    if (e < 0) throw InvalidArgument("negative exponent in monomial");
    degree_ = checked_add(degree_, e);
  }
}

Exponent Monomial::degree_in(std::size_t first, std::size_t last) const noexcept {
  Exponent d = 0;
  for (std::size_t i = first; i < last && i < exps_.size(); ++i) d += exps_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_ || exps_.size() != other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  Monomial out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = checked_add(a.exps_[i], b.exps_[i]);
  out.degree_ = checked_add(a.degree_, b.degree_);
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  Monomial out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  out.recompute_degree();
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  Monomial out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  out.recompute_degree();
  return out;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw InvalidArgument("monomial quotient is not exact");
  Monomial out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = a.exps_[i] - b.exps_[i];
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  return true;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : exps_) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
  return h;
}

MonomialOrder MonomialOrder::elimination(int k, const MonomialOrder& rest) {
  if (k < 0) throw InvalidArgument("elimination block size must be non-negative");
  return MonomialOrder(Kind::elimination, k, std::make_shared<const MonomialOrder>(rest));
}

MonomialOrder MonomialOrder::tgraded(int m, const MonomialOrder& inner) {
  if (m < 0) throw InvalidArgument("T-block size must be non-negative");
  return MonomialOrder(Kind::tgraded, m, std::make_shared<const MonomialOrder>(inner));
}

MonomialOrder MonomialOrder::from_name(const std::string& name) {
  if (name == "lex") return lex();
  if (name == "degrevlex" || name == "grevlex") return degrevlex();
  throw InvalidArgument("unknown monomial order '" + name + "' (expected lex or degrevlex)");
}

int MonomialOrder::compare(std::span<const Exponent> a, std::span<const Exponent> b) const noexcept {
  switch (kind_) {
    case Kind::lex:
      return compare_lex(a, b);
    case Kind::degrevlex:
      return compare_degrevlex(a, b);
    case Kind::elimination: {
      const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(block_), a.size());
      if (int c = compare_degrevlex(a.first(k), b.first(k)); c != 0) return c;
      return inner_->compare(a.subspan(k), b.subspan(k));
    }
    case Kind::tgraded: {
      const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(block_), a.size());
      long ta = 0, tb = 0;
      for (std::size_t i = a.size() - m; i < a.size(); ++i) {
        ta += a[i];
        tb += b[i];
      }
      if (ta != tb) return ta < tb ? -1 : 1;
      return inner_->compare(a, b);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::degrevlex:
      return "degrevlex";
    case Kind::elimination:
      return "elimination(" + std::to_string(block_) + "," + inner_->name() + ")";
    case Kind::tgraded:
      return "tgraded(" + std::to_string(block_) + "," + inner_->name() + ")";
  }
  return "?";
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) noexcept {
  if (a.kind_ != b.kind_ || a.block_ != b.block_) return false;
  if (!a.inner_ || !b.inner_) return a.inner_ == b.inner_;
  return *a.inner_ == *b.inner_;
}

}  // namespace reeskit
