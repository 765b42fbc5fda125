#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "reeskit/poly.hpp"

namespace reeskit {

struct GroebnerOptions {
  std::size_t max_basis = 4096;
  long max_degree = 256;
  /// When non-empty and every input is homogeneous for these variable weights,
  /// every intermediate basis element is checked to stay homogeneous.
  std::vector<int> homogeneity_weights;
  /// With homogeneity_weights set: S-pairs whose lcm has weighted degree above
  /// this bound are skipped, giving a basis that is only valid up to the bound.
  std::optional<long> degree_bound;
};

/// Reduced Groebner basis: monic, auto-reduced, sorted by increasing leading
/// monomial. An empty element list is the zero ideal.
class GroebnerBasis {
public:
  GroebnerBasis(RingPtr ring, std::vector<Poly> elements, bool truncated = false)
      : ring_(std::move(ring)), elements_(std::move(elements)), truncated_(truncated) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return ring_->order(); }
  const std::vector<Poly>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }
  bool truncated() const noexcept { return truncated_; }

  /// Unique remainder of f; throws ContextMismatch for a foreign ring.
  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }

  /// Buchberger criterion: every S-polynomial reduces to zero, and the basis
  /// is reduced (monic, no leading monomial divides a term of another element).
  bool self_check() const;

private:
  RingPtr ring_;
  std::vector<Poly> elements_;
  bool truncated_;
};

Poly s_polynomial(const Poly& f, const Poly& g);

/// Full reduction of f by the given divisors (any order of divisors; result
/// has no term divisible by a divisor's leading monomial).
Poly reduce_full(const Poly& f, std::span<const Poly> divisors);

/// Buchberger's algorithm (normal selection, Gebauer-Moeller criteria) under
/// the ring order of the generators. Throws ResourceCapExceeded past the caps.
GroebnerBasis reduced_groebner(std::span<const Poly> gens, const GroebnerOptions& options = {});

/// Same, after moving the generators to `ring` (same variables, new order).
GroebnerBasis reduced_groebner(std::span<const Poly> gens, const RingPtr& ring,
                               const GroebnerOptions& options = {});

/// Generators of (gens) intersected with Q[x_{k+1}..x_n]: the reduced basis
/// under elimination(k, target order), filtered to the elements free of the
/// first k variables and re-embedded into `target`, whose variables must be
/// x_{k+1}..x_n in that order. The result is a reduced basis in `target`.
std::vector<Poly> eliminate_variables(std::span<const Poly> gens, std::size_t k, const RingPtr& target,
                                      const GroebnerOptions& options = {});

}  // namespace reeskit
