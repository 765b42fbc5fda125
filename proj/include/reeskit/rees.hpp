#pragma once

#include <map>
#include <span>
#include <vector>

#include "reeskit/ideal.hpp"

namespace reeskit {

/// Presentation of the Rees algebra of I = (g_1..g_m) over A = Q[vars]/a:
/// the kernel of Q[vars, T_1..T_m] -> A[t], T_i -> g_i t, as a reduced
/// basis under tgraded(m, degrevlex). The kernel is homogeneous in the total
/// T-degree; its T-degree 0 part is a.
struct ReesPresentation {
  RingCtx base;
  std::vector<Poly> ideal_gens;
  RingPtr ring;  // base variables followed by T_1..T_m
  std::size_t t_count = 0;
  std::vector<Poly> kernel;
  std::map<long, std::vector<Poly>> degree_profile;

  long t_degree(const Poly& f) const { return f.degree_in(ring->nvars() - t_count, ring->nvars()); }
  /// F(vars, g_1..g_m) in the base ring; a kernel element maps into a.
  Poly evaluate(const Poly& f) const;
  /// Every kernel element vanishes in A under T_i -> g_i.
  bool substitution_check() const;
};

ReesPresentation rees_kernel(const Ideal& I);

/// Largest T-degree n >= 2 in which the T-homogeneous ideal generated by
/// `basis` has a minimal generator, or 1 when there is none. `basis` must be
/// a reduced basis in `ring` whose trailing t_count variables are the T block.
long relation_type_of_kernel(std::span<const Poly> basis, const RingPtr& ring, std::size_t t_count);

long relation_type(const Ideal& I);
long relation_type(const ReesPresentation& pres);

enum class ModRoute {
  automatic,  // fiber route when J is the maximal ideal at the origin, else quotient route
  quotient,   // kernel + J extended, analysed T-degreewise with the variables kept
  fiber,      // variables set to zero, analysed in Q[T] (J must be the origin ideal)
};

/// rt_J(I): relation type of the Rees algebra of I modulo J, sum I^n/JI^n.
long relation_type_mod(const Ideal& I, const Ideal& J, ModRoute route = ModRoute::automatic);

/// J is proper and contains every variable.
bool is_origin_ideal(const Ideal& J);

/// For I = (x, y) with x regular: true iff E_J(I)_n = 0, decided through
/// (xI^{n-1} : y^n) contained in ((xJI^{n-1} : y^n) meet J) + (xI^{n-2} : y^{n-1}).
bool effective_relation_2gen(const Poly& x, const Poly& y, unsigned n, const Ideal& J);

}  // namespace reeskit
