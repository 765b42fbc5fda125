#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reeskit/groebner.hpp"
#include "reeskit/poly.hpp"

namespace reeskit {

/// A = Q[vars]/a. The quotient ideal a is optional; when present its
/// generators live in the polynomial ring over the same variables and its
/// reduced basis is computed once at construction.
class RingCtx {
public:
  static RingCtx polynomial(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::degrevlex());
  static RingCtx polynomial(RingPtr ring);

  /// Adds generators to the quotient ideal: returns Q[vars]/(a + (extra)).
  RingCtx with_quotient(std::span<const Poly> extra) const;
  /// The ambient polynomial ring Q[vars] (quotient dropped).
  RingCtx ambient() const { return polynomial(ring()); }

  const RingPtr& ring() const noexcept;
  const std::vector<std::string>& vars() const noexcept { return ring()->vars(); }
  std::size_t nvars() const noexcept { return ring()->nvars(); }
  const MonomialOrder& order() const noexcept { return ring()->order(); }
  const std::vector<Poly>& quotient_gens() const noexcept;
  bool has_quotient() const noexcept { return !quotient_gens().empty(); }
  /// Reduced basis of a (empty for the polynomial ring).
  const GroebnerBasis& quotient_basis() const noexcept;

  Poly parse(std::string_view text) const;
  std::vector<Poly> parse_list(std::string_view text, char sep = ',') const;
  Poly var(std::string_view name) const;
  Poly constant(const Rational& c) const { return Poly::constant(ring(), c); }
  /// Normal form modulo a.
  Poly reduce(const Poly& f) const { return quotient_basis().normal_form(f); }
  bool is_zero(const Poly& f) const { return reduce(f).is_zero(); }

  /// Same variables, order and quotient ideal.
  bool same_as(const RingCtx& other) const;
  void require_same(const RingCtx& other) const;

  std::string describe() const;

private:
  struct Data;
  explicit RingCtx(std::shared_ptr<const Data> data) : d_(std::move(data)) {}
  std::shared_ptr<const Data> d_;
};

/// Finitely generated ideal of a RingCtx, stored through its preimage in the
/// ambient polynomial ring: the reduced basis is taken of gens + a. The
/// generator list is never empty; the zero ideal is [0]. Copies share the
/// lazily filled basis and power caches.
class Ideal {
public:
  Ideal(RingCtx ctx, std::vector<Poly> gens);
  static Ideal zero(const RingCtx& ctx) { return Ideal(ctx, {}); }
  static Ideal unit(const RingCtx& ctx) { return Ideal(ctx, {ctx.constant(1)}); }
  static Ideal parse(const RingCtx& ctx, std::string_view text) { return Ideal(ctx, ctx.parse_list(text)); }

  const RingCtx& ctx() const noexcept;
  const std::vector<Poly>& gens() const noexcept;
  /// Reduced basis of the preimage (gens + a) under the ring order.
  const GroebnerBasis& groebner() const;

  bool contains(const Poly& f) const;
  bool is_zero() const;  // equal to a
  bool is_unit() const;

  /// I^n with I^0 = (1); every lower power is memoized on this ideal.
  Ideal power(unsigned n) const;

  std::string str() const;

private:
  struct State;
  std::shared_ptr<State> s_;
};

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, unsigned n);
/// I intersect J, via t*I + (1-t)*J with t eliminated (on preimages).
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
/// (I : g) = ((I + a) intersect (g)) / g in the ambient ring.
Ideal ideal_colon(const Ideal& I, const Poly& g);
/// (I : J) as the intersection of (I : g) over the generators of J.
Ideal ideal_colon(const Ideal& I, const Ideal& J);
bool ideal_member(const Poly& f, const Ideal& I);
/// J is contained in I.
bool ideal_contains(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);
/// Minimal-looking generator list: reduced modulo a, monic, deduplicated, and
/// members of the span of the others dropped when that is a monomial check.
std::vector<Poly> tidy_generators(const RingCtx& ctx, std::span<const Poly> gens);

/// I intersect Q[x_{k+1}..x_n] for I in a polynomial context; the result
/// lives in the contracted context over the remaining variables.
Ideal eliminate(const Ideal& I, std::size_t first_k);

/// (a : f) = a, i.e. f is a non zero divisor on A. False when f = 0 in A.
bool is_regular_element(const Poly& f, const RingCtx& ctx);

struct RegularSearch {
  std::optional<Poly> element;
  bool budget_exhausted = false;
};

/// Looks for a regular element of I among the generators, then generators of
/// I^2, I^3, then `trials` deterministic Q-combinations of the generators.
RegularSearch is_regular_ideal(const Ideal& I, int trials = 16);

/// Coefficients of the k-th deterministic linear-combination trial (k >= 1)
/// over m generators: 1, k, k^2, ...
std::vector<Rational> combination_coefficients(int k, std::size_t m);

/// y/x with x regular in the context.
class Fraction {
public:
  Fraction(RingCtx ctx, Poly num, Poly den);

  const RingCtx& ctx() const noexcept { return ctx_; }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator+(const Fraction& a, const Fraction& b);
  std::string str() const;

private:
  RingCtx ctx_;
  Poly num_;
  Poly den_;
};

}  // namespace reeskit
