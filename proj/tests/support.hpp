#pragma once

#include <random>
#include <string>
#include <vector>

#include "reeskit/ideal.hpp"

namespace reeskit::testing {

inline Poly random_poly(const RingPtr& ring, std::mt19937& rng, int max_terms = 5, int max_exp = 4, int coeff = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms), e(0, max_exp), c(-coeff, coeff), d(1, 3);
  std::vector<Term> terms;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<Exponent> exps(ring->nvars());
    for (auto& x : exps) x = e(rng);
    terms.push_back({Monomial(std::span<const Exponent>(exps)), Rational(c(rng), d(rng))});
  }
  return Poly::from_terms(ring, std::move(terms));
}

inline Monomial random_monomial(std::size_t nvars, std::mt19937& rng, int max_exp = 6) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<Exponent> exps(nvars);
  for (auto& x : exps) x = e(rng);
  return Monomial(std::span<const Exponent>(exps));
}

/// Small ideal with 1..3 generators of low degree, mostly binomials.
inline Ideal random_small_ideal(const RingCtx& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<int> ngens(1, 3);
  std::vector<Poly> gens;
  const int k = ngens(rng);
  for (int i = 0; i < k; ++i) {
    Poly g = random_poly(ctx.ring(), rng, 2, 3, 3);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  return Ideal(ctx, gens);
}

}  // namespace reeskit::testing
