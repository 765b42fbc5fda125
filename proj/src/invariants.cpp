#include "reeskit/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "reeskit/errors.hpp"
#include "reeskit/rees.hpp"

namespace reeskit {

std::string SearchOutcome::str() const {
  if (resolved_) return std::to_string(value_);
  return "unresolved(cap=" + std::to_string(cap_) + ")";
}

SearchOutcome is_reduction(const Ideal& J, const Ideal& I, int cap) {
  I.ctx().require_same(J.ctx());
  if (!ideal_contains(I, J)) throw InvalidArgument("reduction candidate " + J.str() + " is not contained in " + I.str());
  for (int n = 0; n <= cap; ++n) {
    const Ideal lower = ideal_product(J, I.power(static_cast<unsigned>(n)));
    if (ideal_contains(lower, I.power(static_cast<unsigned>(n) + 1)))
      return SearchOutcome::resolved(n, "I^" + std::to_string(n + 1) + " = J*I^" + std::to_string(n));
  }
  return SearchOutcome::unresolved(cap, "I^(n+1) != J*I^n for n <= " + std::to_string(cap));
}

SearchOutcome reduction_number(const Ideal& I, const Ideal& J, int cap) { return is_reduction(J, I, cap); }

namespace {

std::vector<Poly> principal_candidates(const Ideal& I, int trials) {
  std::vector<Poly> out;
  for (const auto& g : I.gens())
    if (!I.ctx().is_zero(g)) out.push_back(g);
  const auto& gens = I.gens();
  if (gens.size() < 2) return out;
  for (int k = 1; k <= trials; ++k) {
    auto coeffs = combination_coefficients(k, gens.size());
    Poly g(I.ctx().ring());
    for (std::size_t i = 0; i < gens.size(); ++i) g = g + gens[i].scaled(coeffs[i]);
    if (!I.ctx().is_zero(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<PrincipalReduction> principal_reductions(const Ideal& I, std::size_t limit, int cap, int trials) {
  std::vector<PrincipalReduction> found;
  std::vector<Ideal> seen;
  for (const auto& g : principal_candidates(I, trials)) {
    if (found.size() >= limit) break;
    if (!is_regular_element(g, I.ctx())) continue;
    Ideal principal(I.ctx(), {g});
    bool duplicate = false;
    for (const auto& s : seen) duplicate = duplicate || ideal_equal(s, principal);
    if (duplicate) continue;
    SearchOutcome rn = is_reduction(principal, I, cap);
    if (!rn.is_resolved()) continue;
    if (!found.empty() && found.front().rn.value() != rn.value())
      throw std::logic_error("principal reductions " + found.front().element.str() + " and " + g.str() +
                             " give different reduction numbers");
    seen.push_back(principal);
    found.push_back({g, rn});
  }
  return found;
}

std::optional<PrincipalReduction> find_principal_reduction(const Ideal& I, int cap, int trials) {
  auto found = principal_reductions(I, 1, cap, trials);
  if (found.empty()) return std::nullopt;
  return found.front();
}

SearchOutcome integral_degree_fraction(const Poly& y, const Poly& x, const RingCtx& ctx, int cap) {
  if (!is_regular_element(x, ctx)) throw InvalidArgument("denominator " + x.str() + " is not regular");
  const Ideal I(ctx, {x, y});
  const Ideal xi(ctx, {x});
  Poly yn = Poly::constant(ctx.ring(), 1);
  for (int n = 1; n <= cap; ++n) {
    yn = ctx.reduce(yn * y);
    // x I^{n-1} : y^n is the unit ideal exactly when y^n lies in x I^{n-1}.
    const Ideal lower = ideal_product(xi, I.power(static_cast<unsigned>(n - 1)));
    if (lower.contains(yn))
      return SearchOutcome::resolved(n, "y^" + std::to_string(n) + " in x*(x,y)^" + std::to_string(n - 1));
  }
  return SearchOutcome::unresolved(cap);
}

SearchOutcome integral_degree_fraction(const Fraction& f, int cap) {
  return integral_degree_fraction(f.num(), f.den(), f.ctx(), cap);
}

std::optional<long> IntegralDegreeEstimate::lower_bound() const {
  if (fraction_bound && ideal_bound) return std::max(*fraction_bound, *ideal_bound);
  return fraction_bound ? fraction_bound : ideal_bound;
}

IntegralDegreeEstimate integral_degree_sup_estimate(const RingCtx& ctx, std::span<const Fraction> fractions,
                                                    std::span<const Ideal> ideals, int cap) {
  IntegralDegreeEstimate est;
  for (const auto& f : fractions) {
    ctx.require_same(f.ctx());
    SearchOutcome id = integral_degree_fraction(f, cap);
    std::string line = "id(" + f.str() + ") = " + id.str();
    if (id.is_resolved()) {
      est.fraction_bound = std::max(est.fraction_bound.value_or(0), id.value());
      const Ideal I(ctx, {f.den(), f.num()});
      const Ideal X(ctx, {f.den()});
      SearchOutcome rn = reduction_number(I, X, cap);
      line += ", rn+1 = " + (rn.is_resolved() ? std::to_string(rn.value() + 1) : rn.str());
      if (!rn.is_resolved() || rn.value() + 1 != id.value()) {
        est.tie_holds = false;
        line += " (tie broken)";
      }
    }
    est.lines.push_back(std::move(line));
  }
  for (const auto& I : ideals) {
    ctx.require_same(I.ctx());
    auto pr = find_principal_reduction(I, cap);
    if (!pr) {
      est.lines.push_back("rn(" + I.str() + "): no principal reduction within budget");
      continue;
    }
    est.ideal_bound = std::max(est.ideal_bound.value_or(0), pr->rn.value() + 1);
    est.lines.push_back("rn(" + I.str() + ") = " + pr->rn.str() + " via (" + pr->element.str() + ")");
  }
  return est;
}

bool artin_rees_vanishes(const Ideal& a, const Ideal& I, const Ideal& J, unsigned n) {
  if (n == 0) throw InvalidArgument("Artin-Rees modules start at n = 1");
  const Ideal top = ideal_intersect(I.power(n), a);
  Ideal rhs = ideal_product(I, ideal_intersect(I.power(n - 1), a));
  if (!J.is_zero()) rhs = ideal_sum(rhs, ideal_intersect(ideal_product(J, I.power(n)), a));
  return ideal_contains(rhs, top);
}

ArtinReesReport artin_rees_number(const Ideal& a, const Ideal& I, const Ideal& J, int cap) {
  const RingCtx& ctx = I.ctx();
  ctx.require_same(a.ctx());
  ctx.require_same(J.ctx());
  ArtinReesReport report;
  try {
    const RingCtx quotient = ctx.with_quotient(a.gens());
    const Ideal Ia(quotient, I.gens());
    const Ideal Ja(quotient, J.gens());
    if (Ia.is_zero()) {
      report.rt_bound = 1;
    } else {
      report.rt_bound = relation_type_mod(Ia, Ja);
    }
  } catch (const ResourceCapExceeded&) {
    report.rt_bound.reset();
  } catch (const InvalidArgument&) {
    // a is the unit ideal: A/a = 0, no bound.
    report.rt_bound.reset();
  }
  report.exact = report.rt_bound.has_value();
  report.window_end = report.exact ? *report.rt_bound + 1 : cap;

  // Reuse I^n meet a between consecutive degrees.
  std::optional<Ideal> prev_meet = ideal_intersect(I.power(0), a);
  long last = 0;
  for (long n = 1; n <= report.window_end; ++n) {
    const Ideal meet = ideal_intersect(I.power(static_cast<unsigned>(n)), a);
    Ideal rhs = ideal_product(I, *prev_meet);
    if (!J.is_zero()) rhs = ideal_sum(rhs, ideal_intersect(ideal_product(J, I.power(static_cast<unsigned>(n))), a));
    if (!ideal_contains(rhs, meet)) {
      report.nonvanishing.push_back(n);
      last = n;
    }
    prev_meet = meet;
  }
  const std::string window = "E_n checked for n = 1.." + std::to_string(report.window_end);
  if (report.exact || last < report.window_end)
    report.s_value = SearchOutcome::resolved(last, window);
  else
    report.s_value = SearchOutcome::unresolved(cap, window);
  if (!report.exact && last < report.window_end) report.s_value = SearchOutcome::resolved(last, window + " (window-limited)");
  return report;
}

bool d_sequence_check(std::span<const Poly> seq, const RingCtx& ctx, std::string* diagnostic) {
  auto fail = [&](std::string why) {
    if (diagnostic) *diagnostic = std::move(why);
    return false;
  };
  if (seq.empty()) throw InvalidArgument("d-sequence check needs a non-empty sequence");
  for (std::size_t j = 0; j < seq.size(); ++j) {
    std::vector<Poly> others;
    for (std::size_t k = 0; k < seq.size(); ++k)
      if (k != j) others.push_back(seq[k]);
    if (Ideal(ctx, others).contains(seq[j]))
      return fail("element " + seq[j].str() + " lies in the ideal of the others");
  }
  const Ideal all(ctx, {seq.begin(), seq.end()});
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Ideal Ji(ctx, {seq.begin(), seq.begin() + static_cast<long>(i)});
    const Ideal lhs = ideal_intersect(ideal_colon(Ji, seq[i]), all);
    if (!ideal_contains(Ji, lhs))
      return fail("(J_" + std::to_string(i) + " : " + seq[i].str() + ") meet J != J_" + std::to_string(i));
  }
  return true;
}

bool vv_check(std::span<const Poly> prefix, const Ideal& I, unsigned n) {
  if (prefix.empty()) return true;
  const Ideal P(I.ctx(), {prefix.begin(), prefix.end()});
  if (!ideal_contains(I, P)) throw InvalidArgument("Valabrega-Valla prefix is not contained in I");
  return ideal_contains(ideal_product(P, I.power(n)), ideal_intersect(P, I.power(n + 1)));
}

bool filter_condition(std::span<const Poly> xs, std::size_t i, const Ideal& I, unsigned n) {
  if (i == 0 || i > xs.size() || n == 0) throw InvalidArgument("filter condition index out of range");
  const RingCtx& ctx = I.ctx();
  const Ideal prev(ctx, {xs.begin(), xs.begin() + static_cast<long>(i - 1)});
  const Ideal In = I.power(n);
  const Ideal lhs = ideal_intersect(ideal_colon(ideal_product(prev, In), xs[i - 1]), In);
  const Ideal rhs = ideal_product(prev, I.power(n - 1));
  return ideal_contains(rhs, lhs);
}

RegReport reg_rees(const Ideal& I, const Ideal& J, int cap) {
  RegReport report;
  SearchOutcome rn = reduction_number(I, J, cap);
  if (!rn.is_resolved()) throw InvalidArgument("J is not a reduction of I within cap " + std::to_string(cap));
  report.rn = rn.value();
  const auto& xs = J.gens();
  if (xs.size() == 1 && is_regular_element(xs[0], I.ctx())) {
    report.exact = true;
    report.window_end = report.rn;
    report.reg = SearchOutcome::resolved(report.rn, "single regular generator: reg = rn");
    return report;
  }
  report.window_end = report.rn + cap;
  long last_failure = 0;
  for (long n = report.rn + 1; n <= report.window_end; ++n) {
    for (std::size_t i = 1; i <= xs.size(); ++i) {
      if (!filter_condition(xs, i, I, static_cast<unsigned>(n))) {
        last_failure = n;
        break;
      }
    }
  }
  const std::string window = "filter condition checked for n in (" + std::to_string(report.rn) + ", " +
                             std::to_string(report.window_end) + "]";
  if (last_failure == report.window_end)
    report.reg = SearchOutcome::unresolved(cap, window);
  else
    report.reg = SearchOutcome::resolved(std::max(report.rn, last_failure), window);
  return report;
}

CdsReport check_theorem_cds(const Ideal& I, std::span<const Poly> jgens, int cap) {
  const RingCtx& ctx = I.ctx();
  CdsReport report;
  if (jgens.empty()) throw InvalidArgument("check_theorem_cds needs reduction generators");
  const Ideal J(ctx, {jgens.begin(), jgens.end()});
  if (!ideal_contains(I, J)) throw InvalidArgument("reduction generators are not contained in I");
  report.rn = reduction_number(I, J, cap);
  if (!report.rn.is_resolved()) throw InvalidArgument("reduction number unresolved within cap " + std::to_string(cap));
  const long r = report.rn.value();
  const std::size_t s = jgens.size();

  std::string why;
  report.d_sequence = d_sequence_check(jgens, ctx, &why);
  if (!report.d_sequence) report.notes.push_back("(i) fails: " + why);

  report.regular_prefix = true;
  for (std::size_t i = 0; i + 1 < s; ++i) {
    const RingCtx step = ctx.with_quotient(std::span<const Poly>(jgens.data(), i));
    if (!is_regular_element(jgens[i], step)) {
      report.regular_prefix = false;
      report.notes.push_back("(ii) fails: " + jgens[i].str() + " is not regular modulo the previous elements");
      break;
    }
  }

  report.vv_condition = true;
  for (std::size_t i = 1; i < s; ++i) {
    if (!vv_check(jgens.first(i), I, static_cast<unsigned>(r))) {
      report.vv_condition = false;
      report.vv_failure = i;
      report.notes.push_back("(iii) fails at i = " + std::to_string(i) + ": (x_1..x_i) meet I^" +
                             std::to_string(r + 1) + " != (x_1..x_i) I^" + std::to_string(r));
      break;
    }
  }

  if (!report.hypotheses_hold()) return report;
  report.rt = relation_type(I);
  report.reg = reg_rees(I, J, cap);
  const bool rt_ok = *report.rt <= r + 1;
  const bool reg_ok = report.reg->reg.is_resolved() && report.reg->reg.value() == r;
  report.conclusion_holds = rt_ok && reg_ok;
  if (!rt_ok) report.notes.push_back("conclusion violated: rt(I) = " + std::to_string(*report.rt) + " > rn + 1");
  if (!reg_ok) report.notes.push_back("conclusion violated: reg = " + report.reg->reg.str() + " != rn");
  return report;
}

}  // namespace reeskit
