#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reeskit/ideal.hpp"

namespace reeskit {

inline constexpr int kDefaultCap = 32;

/// Result of a capped semi-decision: either a resolved integer with a
/// reproducible witness, or "unresolved" at the cap.
class SearchOutcome {
public:
  static SearchOutcome resolved(long value, std::string witness = {}) {
    return SearchOutcome(true, value, 0, std::move(witness));
  }
  static SearchOutcome unresolved(int cap, std::string witness = {}) {
    return SearchOutcome(false, 0, cap, std::move(witness));
  }

  bool is_resolved() const noexcept { return resolved_; }
  /// Only meaningful when resolved.
  long value() const noexcept { return value_; }
  int cap() const noexcept { return cap_; }
  const std::string& witness() const noexcept { return witness_; }

  /// "<n>" or "unresolved(cap=<c>)".
  std::string str() const;

  friend bool operator==(const SearchOutcome& a, const SearchOutcome& b) {
    return a.resolved_ == b.resolved_ && a.value_ == b.value_ && a.cap_ == b.cap_;
  }

private:
  SearchOutcome(bool resolved, long value, int cap, std::string witness)
      : resolved_(resolved), value_(value), cap_(cap), witness_(std::move(witness)) {}

  bool resolved_;
  long value_;
  int cap_;
  std::string witness_;
};

/// Least n <= cap with I^{n+1} = J I^n. Throws InvalidArgument unless J is in I.
SearchOutcome is_reduction(const Ideal& J, const Ideal& I, int cap = kDefaultCap);
/// rn_J(I), the same search as is_reduction.
SearchOutcome reduction_number(const Ideal& I, const Ideal& J, int cap = kDefaultCap);

struct PrincipalReduction {
  Poly element;
  SearchOutcome rn;
};

/// First regular g (generators, then deterministic combinations) such that
/// (g) is a reduction of I within the cap.
std::optional<PrincipalReduction> find_principal_reduction(const Ideal& I, int cap = kDefaultCap, int trials = 16);

/// Up to `limit` principal reductions generating distinct ideals. Their
/// reduction numbers must coincide; a mismatch throws std::logic_error.
std::vector<PrincipalReduction> principal_reductions(const Ideal& I, std::size_t limit, int cap = kDefaultCap,
                                                     int trials = 16);

/// id_A(y/x): least n <= cap with x (x,y)^{n-1} : y^n = A. x must be regular.
SearchOutcome integral_degree_fraction(const Poly& y, const Poly& x, const RingCtx& ctx, int cap = kDefaultCap);
SearchOutcome integral_degree_fraction(const Fraction& f, int cap = kDefaultCap);

/// Sampled lower bounds for the integral degree d_A of the integral closure.
struct IntegralDegreeEstimate {
  std::optional<long> fraction_bound;  // max id over resolved fractions
  std::optional<long> ideal_bound;     // max rn + 1 over ideals with a principal reduction
  bool tie_holds = true;               // id(y/x) = rn_(x)((x,y)) + 1 on every resolved fraction
  std::vector<std::string> lines;

  std::optional<long> lower_bound() const;
};

IntegralDegreeEstimate integral_degree_sup_estimate(const RingCtx& ctx, std::span<const Fraction> fractions,
                                                    std::span<const Ideal> ideals, int cap = kDefaultCap);

/// E_J(a, A; I)_n = 0, i.e. I^n meet a = I (I^{n-1} meet a) + (J I^n) meet a.
bool artin_rees_vanishes(const Ideal& a, const Ideal& I, const Ideal& J, unsigned n);

struct ArtinReesReport {
  SearchOutcome s_value = SearchOutcome::unresolved(0);
  std::optional<long> rt_bound;  // rt_J(I; A/a) when it could be computed
  long window_end = 0;           // E_n checked for n = 1..window_end
  bool exact = false;            // true when rt_bound was available
  std::vector<long> nonvanishing;
};

/// s_J(a, A; I). Exact when rt_J(I; A/a) is computable (E_n vanishes past it),
/// otherwise limited to the window 1..cap.
ArtinReesReport artin_rees_number(const Ideal& a, const Ideal& I, const Ideal& J, int cap = kDefaultCap);

/// (J_i : x_{i+1}) meet J = J_i for i = 0..s-1, after checking that no x_j
/// lies in the ideal of the others. `diagnostic` receives the first failure.
bool d_sequence_check(std::span<const Poly> seq, const RingCtx& ctx, std::string* diagnostic = nullptr);

/// (prefix) meet I^{n+1} = (prefix) I^n. Vacuously true for an empty prefix.
bool vv_check(std::span<const Poly> prefix, const Ideal& I, unsigned n);

/// Filter-regular condition at degree n for the i-th element (1-based):
/// [(x_1..x_{i-1}) I^n : x_i] meet I^n = (x_1..x_{i-1}) I^{n-1}.
bool filter_condition(std::span<const Poly> xs, std::size_t i, const Ideal& I, unsigned n);

struct RegReport {
  SearchOutcome reg = SearchOutcome::unresolved(0);
  long rn = 0;
  bool exact = false;   // single regular generator: reg = rn with no window
  long window_end = 0;  // filter condition checked for n in (rn, window_end]
};

/// reg of the Rees algebra through its reduction-number characterisation.
/// Throws InvalidArgument when J is not a reduction within the cap.
RegReport reg_rees(const Ideal& I, const Ideal& J, int cap = kDefaultCap);

struct CdsReport {
  SearchOutcome rn = SearchOutcome::unresolved(0);
  bool d_sequence = false;
  bool regular_prefix = false;
  bool vv_condition = false;
  std::optional<std::size_t> vv_failure;  // first i with (x_1..x_i) meet I^{r+1} != (x_1..x_i) I^r
  std::optional<long> rt;
  std::optional<RegReport> reg;
  bool hypotheses_hold() const { return d_sequence && regular_prefix && vv_condition; }
  /// Meaningful only when the hypotheses hold.
  bool conclusion_holds = false;
  std::vector<std::string> notes;
};

/// Evaluates the d-sequence / regular prefix / Valabrega-Valla hypotheses for
/// J = (jgens) and, when they hold, checks rt(I) <= rn + 1 and reg = rn.
CdsReport check_theorem_cds(const Ideal& I, std::span<const Poly> jgens, int cap = kDefaultCap);

}  // namespace reeskit
