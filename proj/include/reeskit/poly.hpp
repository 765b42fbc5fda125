#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reeskit/monomial.hpp"
#include "reeskit/rational.hpp"

namespace reeskit {

/// Ordered variable names plus the active monomial order of a polynomial ring
/// Q[x_1..x_k]. Shared between polynomials via RingPtr.
class PolyRing {
public:
  PolyRing(std::vector<std::string> vars, MonomialOrder order);

  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool same_as(const PolyRing& other) const { return vars_ == other.vars_ && order_ == other.order_; }

private:
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::degrevlex());

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Canonical sparse polynomial over Q. Terms are stored in strictly
/// decreasing order under the ring's monomial order; zero coefficients are
/// never stored, so the zero polynomial has no terms.
class Poly {
public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, Monomial m, Rational c = 1);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusts the caller: terms already strictly decreasing with no zero coefficients.
  static Poly from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
    return Poly(std::move(ring), std::move(terms));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  // Leading data; undefined on the zero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  /// Largest total degree of a term; -1 for zero.
  long total_degree() const;
  /// Largest degree in variable indices [first, last); -1 for zero.
  long degree_in(std::size_t first, std::size_t last) const;
  /// True when every term has the same weighted degree.
  bool is_homogeneous(std::span<const int> weights) const;
  /// Variables [first,last) do not occur.
  bool free_of(std::size_t first, std::size_t last) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;
  Poly mul_term(const Monomial& m, const Rational& c) const;
  /// this - c*m*g, computed with a single merge.
  Poly sub_mul(const Rational& c, const Monomial& m, const Poly& g) const;
  /// Divides by the leading coefficient. Zero stays zero.
  Poly monic() const;

  /// Same polynomial under another ring with identical variables
  /// (typically a different order): terms are re-sorted.
  Poly with_ring(RingPtr target) const;
  /// Re-embeds into `target`: variable i of this ring becomes variable
  /// var_map[i] of target; var_map[i] == -1 requires the variable to be absent.
  Poly map_vars(RingPtr target, std::span<const int> var_map) const;
  /// Sets variables [first,last) to zero.
  Poly substitute_zero(std::size_t first, std::size_t last) const;

  friend bool operator==(const Poly& a, const Poly& b);

  /// Terms in decreasing order, coefficients in lowest terms: "x^2*y - 3/2*z".
  std::string str() const;

private:
  Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Throws ContextMismatch unless both rings have the same variables and order.
void require_same_ring(const Poly& a, const Poly& b);

/// f^e by repeated squaring, with f^0 = 1 (including 0^0).
Poly pow(const Poly& f, unsigned e);

/// Exact quotient f/g in the polynomial ring, or nullopt if g does not divide f.
std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace reeskit
