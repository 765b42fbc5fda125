#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reeskit/ideal.hpp"
#include "reeskit/invariants.hpp"
#include "reeskit/report.hpp"

namespace reeskit {

/// Where an expected value comes from.
enum class Source {
  published,   // stated for the example family in the literature
  oracle,      // independent computation (semigroup arithmetic, hand GB)
  definition,  // immediate from the definitions
};

std::string to_string(Source s);

struct Expectation {
  std::string key;
  std::string expected;
  Source source;
  std::string reason;  // the claim being checked, in words; must be non-empty
  std::function<std::string()> compute;
  /// Value the computation is known to give when it disagrees with `expected`
  /// for a documented reason; such a match is reported as a divergence.
  std::optional<std::string> known_divergence = std::nullopt;
};

enum class Outcome { pass, fail, expected_divergence, unresolved };

std::string to_string(Outcome o);

struct ExpectationResult {
  std::string key;
  std::string expected;
  std::string got;
  Source source;
  std::string reason;
  Outcome outcome;
};

struct ExampleResult {
  std::string name;
  int n = 0;
  std::string model;
  std::vector<ExpectationResult> results;

  Outcome outcome() const;
  Report report(bool explain = false) const;
};

struct CorpusEntry {
  std::string name;
  int n_min;
  int n_max;
  std::function<std::string(int)> model;
  std::function<std::vector<Expectation>(int n, int cap)> expectations;
};

/// Registry in fixed declaration order.
const std::vector<CorpusEntry>& corpus_registry();
/// Throws InvalidArgument for an unknown name.
const CorpusEntry& find_example(const std::string& name);
/// One line per entry, "<name> n∈[a,b]".
std::string list_examples();
/// Throws InvalidArgument for an unknown name or n out of range, and
/// std::logic_error for an expectation without a stated reason.
ExampleResult run_example(const std::string& name, int n, int cap = kDefaultCap);

/// Q[vars]/ker(v_i -> t^{exps[i]}), the coordinate ring of a monomial curve.
RingCtx monomial_curve_ring(std::span<const int> exps, std::vector<std::string> vars);

}  // namespace reeskit
