#include "reeskit/rees.hpp"

#include <algorithm>
#include <stdexcept>

#include "reeskit/errors.hpp"

namespace reeskit {

namespace {

std::string fresh_name(std::string base, const PolyRing& ring) {
  while (ring.index_of(base)) base += "_";
  return base;
}

std::vector<int> t_weights(std::size_t base_vars, std::size_t t_count) {
  std::vector<int> w(base_vars, 0);
  w.resize(base_vars + t_count, 1);
  return w;
}

}  // namespace

Poly ReesPresentation::evaluate(const Poly& f) const {
  const std::size_t k = base.nvars();
  const RingPtr& target = base.ring();
  std::vector<std::vector<Poly>> powers(t_count);
  Poly out(target);
  for (const auto& term : f.terms()) {
    Monomial::Storage exps(term.mono.exponents().begin(), term.mono.exponents().begin() + static_cast<long>(k));
    Poly value = Poly::monomial(target, Monomial(std::span<const Exponent>(exps.data(), exps.size())), term.coeff);
    for (std::size_t i = 0; i < t_count; ++i) {
      const auto e = static_cast<std::size_t>(term.mono[k + i]);
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Poly::constant(target, 1));
      while (cache.size() <= e) cache.push_back(cache.back() * ideal_gens[i]);
      value = value * cache[e];
    }
    out = out + value;
  }
  return out;
}

bool ReesPresentation::substitution_check() const {
  for (const auto& f : kernel)
    if (!base.is_zero(evaluate(f))) return false;
  return true;
}

ReesPresentation rees_kernel(const Ideal& I) {
  const RingCtx& base = I.ctx();
  const std::size_t k = base.nvars();
  const std::size_t m = I.gens().size();

  std::vector<std::string> kvars = base.vars();
  for (std::size_t i = 0; i < m; ++i) kvars.push_back(fresh_name("T" + std::to_string(i + 1), *base.ring()));
  auto kernel_ring = make_ring(kvars, MonomialOrder::tgraded(static_cast<int>(m)));

  std::vector<std::string> evars{fresh_name("t", *kernel_ring)};
  evars.insert(evars.end(), kvars.begin(), kvars.end());
  auto elim_ring = make_ring(evars, MonomialOrder::degrevlex());

  std::vector<int> base_map(k);
  for (std::size_t i = 0; i < k; ++i) base_map[i] = static_cast<int>(i + 1);
  const Poly t = Poly::variable(elim_ring, 0);

  std::vector<Poly> gens;
  for (std::size_t i = 0; i < m; ++i)
    gens.push_back(Poly::variable(elim_ring, k + 1 + i) - t * I.gens()[i].map_vars(elim_ring, base_map));
  for (const auto& q : base.quotient_basis().elements()) gens.push_back(q.map_vars(elim_ring, base_map));

  GroebnerOptions options;
  options.homogeneity_weights = {1};
  auto tw = t_weights(k, m);
  options.homogeneity_weights.insert(options.homogeneity_weights.end(), tw.begin(), tw.end());

  ReesPresentation pres{base, I.gens(), kernel_ring, m, {}, {}};
  pres.kernel = eliminate_variables(gens, 1, kernel_ring, options);
  for (const auto& f : pres.kernel) {
    if (!f.is_homogeneous(tw)) throw std::logic_error("Rees kernel element is not T-homogeneous: " + f.str());
    pres.degree_profile[pres.t_degree(f)].push_back(f);
  }
  return pres;
}

long relation_type_of_kernel(std::span<const Poly> basis, const RingPtr& ring, std::size_t t_count) {
  const std::size_t nv = ring->nvars();
  const auto weights = t_weights(nv - t_count, t_count);
  std::map<long, std::vector<Poly>> profile;
  for (const auto& f : basis) {
    if (!f.is_homogeneous(weights)) throw std::logic_error("kernel element is not T-homogeneous: " + f.str());
    profile[f.degree_in(nv - t_count, nv)].push_back(f);
  }
  // Descending: the first degree with a new minimal generator is the answer.
  for (auto it = profile.rbegin(); it != profile.rend(); ++it) {
    const long n = it->first;
    if (n < 2) break;
    std::vector<Poly> lower;
    for (const auto& [d, elems] : profile) {
      if (d >= n) break;
      lower.insert(lower.end(), elems.begin(), elems.end());
    }
    if (lower.empty()) return n;
    GroebnerOptions options;
    options.homogeneity_weights = weights;
    options.degree_bound = n;
    GroebnerBasis gb = reduced_groebner(lower, ring, options);
    for (const auto& f : it->second)
      if (!gb.normal_form(f.with_ring(ring)).is_zero()) return n;
  }
  return 1;
}

long relation_type(const ReesPresentation& pres) {
  return relation_type_of_kernel(pres.kernel, pres.ring, pres.t_count);
}

long relation_type(const Ideal& I) {
  if (I.is_zero()) throw InvalidArgument("relation type of the zero ideal");
  return relation_type(rees_kernel(I));
}

bool is_origin_ideal(const Ideal& J) {
  if (J.is_unit()) return false;
  for (std::size_t i = 0; i < J.ctx().nvars(); ++i)
    if (!J.contains(Poly::variable(J.ctx().ring(), i))) return false;
  return true;
}

long relation_type_mod(const Ideal& I, const Ideal& J, ModRoute route) {
  I.ctx().require_same(J.ctx());
  if (I.is_zero()) throw InvalidArgument("relation type of the zero ideal");
  if (route == ModRoute::automatic) {
    if (J.is_zero()) return relation_type(I);
    route = is_origin_ideal(J) ? ModRoute::fiber : ModRoute::quotient;
  }
  ReesPresentation pres = rees_kernel(I);
  const std::size_t k = I.ctx().nvars();
  const std::size_t m = pres.t_count;

  if (route == ModRoute::fiber) {
    if (!is_origin_ideal(J)) throw InvalidArgument("fiber route needs J to be the ideal of the origin");
    std::vector<std::string> tvars(pres.ring->vars().begin() + static_cast<long>(k), pres.ring->vars().end());
    auto fiber_ring = make_ring(tvars, MonomialOrder::degrevlex());
    std::vector<int> map(k + m, -1);
    for (std::size_t i = 0; i < m; ++i) map[k + i] = static_cast<int>(i);
    std::vector<Poly> gens;
    for (const auto& f : pres.kernel) {
      Poly g = f.substitute_zero(0, k);
      if (!g.is_zero()) gens.push_back(g.map_vars(fiber_ring, map));
    }
    if (gens.empty()) return 1;
    GroebnerBasis gb = reduced_groebner(gens);
    return relation_type_of_kernel(gb.elements(), fiber_ring, m);
  }

  std::vector<Poly> gens = pres.kernel;
  std::vector<int> map(k);
  for (std::size_t i = 0; i < k; ++i) map[i] = static_cast<int>(i);
  for (const auto& j : J.gens())
    if (!j.is_zero()) gens.push_back(j.map_vars(pres.ring, map));
  GroebnerOptions options;
  options.homogeneity_weights = t_weights(k, m);
  GroebnerBasis gb = reduced_groebner(gens, options);
  return relation_type_of_kernel(gb.elements(), pres.ring, m);
}

bool effective_relation_2gen(const Poly& x, const Poly& y, unsigned n, const Ideal& J) {
  const RingCtx& ctx = J.ctx();
  if (n < 2) throw InvalidArgument("effective relations start in degree 2");
  if (!is_regular_element(x, ctx)) throw InvalidArgument("effective_relation_2gen: " + x.str() + " is not regular");
  const Ideal I(ctx, {x, y});
  const Ideal xi(ctx, {x});
  const Ideal lhs = ideal_colon(ideal_product(xi, I.power(n - 1)), pow(y, n));
  Ideal rhs = ideal_colon(ideal_product(xi, I.power(n - 2)), pow(y, n - 1));
  if (!J.is_zero()) {
    const Ideal with_j = ideal_colon(ideal_product(ideal_product(xi, J), I.power(n - 1)), pow(y, n));
    rhs = ideal_sum(rhs, ideal_intersect(with_j, J));
  }
  return ideal_contains(rhs, lhs);
}

}  // namespace reeskit
