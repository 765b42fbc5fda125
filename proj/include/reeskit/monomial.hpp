#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>

#include <boost/container/small_vector.hpp>

namespace reeskit {

using Exponent = std::int32_t;

/// Power product x_1^{a_1} ... x_k^{a_k}. The exponent vector length equals
/// the variable count of the owning ring; the total degree is cached.
/// Exponent arithmetic is checked and throws ResourceCapExceeded on overflow.
class Monomial {
public:
  using Storage = boost::container::small_vector<Exponent, 10>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return {exps_.data(), exps_.size()}; }
  Exponent degree() const noexcept { return degree_; }
  /// Sum of exponents over variable indices [first, last).
  Exponent degree_in(std::size_t first, std::size_t last) const noexcept;
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  /// Multiplication, lcm, gcd and exact quotient require equal lengths.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  /// a / b, requires b | a.
  friend Monomial quotient(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

  std::size_t hash() const noexcept;

private:
  void recompute_degree();

  Storage exps_;
  Exponent degree_ = 0;
};

/// A total, multiplicative well-order on monomials of a fixed variable count.
///
///  - lex: first differing exponent decides, larger wins.
///  - degrevlex: total degree, then the last differing exponent, smaller wins.
///  - elimination(k, rest): degrevlex on the first k variables, ties broken by
///    `rest` applied to the remaining variables. Any monomial involving one of
///    the first k variables exceeds every monomial free of them.
///  - tgraded(m, inner): degree in the trailing block of m variables first,
///    then `inner` on the full exponent vector.
class MonomialOrder {
public:
  enum class Kind { lex, degrevlex, elimination, tgraded };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0, nullptr); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0, nullptr); }
  static MonomialOrder elimination(int k, const MonomialOrder& rest = degrevlex());
  static MonomialOrder tgraded(int m, const MonomialOrder& inner = degrevlex());
  /// "lex" or "degrevlex"; throws InvalidArgument otherwise.
  static MonomialOrder from_name(const std::string& name);

  Kind kind() const noexcept { return kind_; }
  int block() const noexcept { return block_; }
  const MonomialOrder* inner() const noexcept { return inner_.get(); }

  /// Returns <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(std::span<const Exponent> a, std::span<const Exponent> b) const noexcept;
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a.exponents(), b.exponents());
  }
  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) noexcept;

private:
  MonomialOrder(Kind kind, int block, std::shared_ptr<const MonomialOrder> inner)
      : kind_(kind), block_(block), inner_(std::move(inner)) {}

  Kind kind_;
  int block_;
  std::shared_ptr<const MonomialOrder> inner_;
};

}  // namespace reeskit
