#include "reeskit/corpus.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

#include "reeskit/errors.hpp"
#include "reeskit/rees.hpp"

namespace reeskit {

std::string to_string(Source s) {
  switch (s) {
    case Source::published: return "published";
    case Source::oracle: return "oracle";
    case Source::definition: return "definition";
  }
  return "?";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::expected_divergence: return "expected-divergence";
    case Outcome::unresolved: return "unresolved";
  }
  return "?";
}

Outcome ExampleResult::outcome() const {
  bool unresolved = false, divergent = false;
  for (const auto& r : results) {
    if (r.outcome == Outcome::fail) return Outcome::fail;
    unresolved = unresolved || r.outcome == Outcome::unresolved;
    divergent = divergent || r.outcome == Outcome::expected_divergence;
  }
  if (unresolved) return Outcome::unresolved;
  return divergent ? Outcome::expected_divergence : Outcome::pass;
}

Report ExampleResult::report(bool explain) const {
  Report rep;
  rep.add("example", name);
  rep.add("n", std::to_string(n));
  if (explain) rep.add("model", model);
  for (const auto& r : results) {
    switch (r.outcome) {
      case Outcome::pass: rep.add(r.key, r.got); break;
      case Outcome::fail: rep.expect(r.key, r.expected, r.got); break;
      case Outcome::expected_divergence:
        rep.add(r.key, r.got);
        rep.add("divergence." + r.key, "expected " + r.expected + " (" + to_string(r.source) + ")");
        break;
      case Outcome::unresolved:
        rep.add(r.key, r.got);
        rep.mark_unresolved();
        break;
    }
    if (explain) rep.add("source." + r.key, to_string(r.source) + ": " + r.reason);
  }
  return rep;
}

RingCtx monomial_curve_ring(std::span<const int> exps, std::vector<std::string> vars) {
  if (exps.size() != vars.size() || exps.empty()) throw InvalidArgument("monomial curve: one exponent per variable");
  std::vector<std::string> all{"t_"};
  all.insert(all.end(), vars.begin(), vars.end());
  const RingCtx big = RingCtx::polynomial(all);
  std::vector<Poly> gens;
  const Poly t = big.var("t_");
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] <= 0) throw InvalidArgument("monomial curve exponents must be positive");
    gens.push_back(big.var(vars[i]) - pow(t, static_cast<unsigned>(exps[i])));
  }
  const Ideal kernel = eliminate(Ideal(big, gens), 1);
  const RingCtx base = RingCtx::polynomial(vars);
  if (kernel.is_zero()) return base;
  std::vector<Poly> moved;
  for (const auto& g : kernel.gens()) moved.push_back(g.with_ring(base.ring()));
  return base.with_quotient(moved);
}

namespace {

std::string num(long v) { return std::to_string(v); }
std::string p(const std::string& base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); }

template <class T>
std::function<T()> memo(std::function<T()> f) {
  auto cell = std::make_shared<std::optional<T>>();
  return [cell, f = std::move(f)]() -> T {
    if (!*cell) *cell = f();
    return **cell;
  };
}

std::vector<Expectation> huneke(int n, int cap) {
  const RingCtx R = RingCtx::polynomial({"x", "y"});
  const Ideal I = Ideal::parse(R, p("x", n) + "," + p("y", n) + "," + p("x", n - 1) + "*y");
  const Ideal J = Ideal::parse(R, p("x", n) + "," + p("y", n));
  std::vector<Expectation> out;
  out.push_back({"rn", num(n - 1), Source::published, "(x^n, y^n) reduces (x^n, y^n, x^(n-1) y) with reduction number n-1",
                 [=] { return reduction_number(I, J, cap).str(); }});
  Expectation iii{"hypothesis_iii", "fails", Source::published,
                  "(x^n, y^n) violates the Valabrega-Valla condition (x^n) meet I^n = x^n I^(n-1)",
                  [=] {
                    const CdsReport rep = check_theorem_cds(I, J.gens(), cap);
                    return std::string(rep.vv_condition ? "holds" : "fails");
                  }};
  // For n = 2, I = (x,y)^2 and (x^2) meet (x,y)^4 = x^2 (x,y)^2.
  if (n == 2) iii.known_divergence = "holds";
  out.push_back(std::move(iii));
  return out;
}

std::vector<Expectation> wang(int n, int cap) {
  const RingCtx R = RingCtx::polynomial({"x", "y", "z"});
  const Ideal I = Ideal::parse(R, p("x", n) + "," + p("y", n) + "," + p("x", n - 1) + "*y+" + p("z", n));
  const Ideal a = Ideal::parse(R, "z");
  const Ideal m = Ideal::parse(R, "x,y,z");
  const RingCtx A = R.with_quotient(a.gens());
  const Ideal IA(A, I.gens());
  const Ideal mA(A, m.gens());
  auto ar = memo<ArtinReesReport>([=] { return artin_rees_number(a, I, m, cap); });
  const std::string reason = "Wang's ideals I_n = (x^n, y^n, x^(n-1) y + z^n) with a = (z)";
  std::vector<Expectation> out;
  out.push_back({"rt", "1", Source::published, reason + ": rt(I_n) = 1", [=] { return num(relation_type(I)); }});
  out.push_back({"rt_quotient", num(n), Source::published, reason + ": rt(I_n; A/a) = n",
                 [=] { return num(relation_type(IA)); }});
  out.push_back({"rt_fiber_quotient", num(n), Source::published, reason + ": rt_m(I_n; A/a) = n",
                 [=] { return num(relation_type_mod(IA, mA)); }});
  out.push_back({"s_fiber", num(n), Source::published, reason + ": s_m(a, A; I_n) = n",
                 [=] { return ar().s_value.str(); }});
  out.push_back({"ar_regime", "exact", Source::definition, "the rt_m(I_n; A/a) bound is computable",
                 [=] { return std::string(ar().exact ? "exact" : "window"); }});
  return out;
}

std::vector<Expectation> eisenbud_hochster(int n, int cap) {
  const RingCtx R = RingCtx::polynomial({"x", "y"});
  const Ideal a = Ideal::parse(R, p("x", n) + "-" + p("y", n + 1));
  const Ideal I = Ideal::parse(R, "x,y");
  const Ideal zero = Ideal::zero(R);
  auto ar = memo<ArtinReesReport>([=] { return artin_rees_number(a, I, zero, cap); });
  const RingCtx A = R.with_quotient(a.gens());
  std::vector<Expectation> out;
  out.push_back({"gap_strict", "true", Source::oracle,
                 "f = x^n - y^(n+1) lies in I^n but not I^(n+1), so I^n meet (f) = (f) is not I (I^(n-1) meet (f)) = f I",
                 [=] { return format_bool(!artin_rees_vanishes(a, I, zero, static_cast<unsigned>(n))); }});
  out.push_back({"s", num(n), Source::oracle, "I^k meet (f) = f I^(k-n) for k >= n, so s(a, A; I) = n",
                 [=] { return ar().s_value.str(); }});
  out.push_back({"ar_regime", "exact", Source::definition, "rt(I; A/a) is computable",
                 [=] { return std::string(ar().exact ? "exact" : "window"); }});
  out.push_back({"rt_quotient", num(n), Source::oracle,
                 "A/a is the monomial curve k[t^(n+1), t^n] and x/y = t has integral degree n",
                 [=] { return num(relation_type(Ideal(A, I.gens()))); }});
  return out;
}

std::vector<Expectation> sally_vasconcelos(int n, int cap) {
  std::vector<int> exps;
  std::vector<std::string> vars;
  for (int i = 0; i <= n; ++i) {
    exps.push_back(n + 1 + i);
    vars.push_back("u" + std::to_string(i));
  }
  const RingCtx A = monomial_curve_ring(exps, vars);
  const Poly x = A.var("u0"), y = A.var("u1");
  const Ideal pair(A, {x, y});
  const Ideal px(A, {x});
  std::vector<Expectation> out;
  Expectation id{"id", num(n), Source::published,
                 "u1/u0 = t is integral over k[t^(n+1), ..., t^(2n+1)] of integral degree n",
                 [=] { return integral_degree_fraction(y, x, A, cap).str(); }};
  // Semigroup arithmetic: the least i with i in <n+1, ..., 2n+1> is n+1.
  id.known_divergence = num(n + 1);
  out.push_back(std::move(id));
  out.push_back({"rn_pair", num(n), Source::oracle, "rn_(u0)((u0, u1)) = id(u1/u0) - 1 = n by semigroup arithmetic",
                 [=] { return reduction_number(pair, px, cap).str(); }});
  out.push_back({"rt_pair", num(n + 1), Source::oracle, "rt((u0, u1)) = id(u1/u0) = n + 1 by semigroup arithmetic",
                 [=] { return num(relation_type(pair)); }});
  return out;
}

long rt_by_colons(const Poly& x, const Poly& y, const Ideal& zero, long window) {
  long rt = 1;
  for (long k = 2; k <= window; ++k)
    if (!effective_relation_2gen(x, y, static_cast<unsigned>(k), zero)) rt = k;
  return rt;
}

std::vector<Expectation> veronese(int n, int) {
  const RingCtx R = RingCtx::polynomial({"x", "y"});
  std::string gens;
  for (int i = 0; i <= n; ++i) {
    if (i) gens += ",";
    std::string term;
    if (n - i) term = p("x", n - i);
    if (i) term += (term.empty() ? "" : "*") + p("y", i);
    gens += term;
  }
  const Ideal I = Ideal::parse(R, gens);
  const Ideal m = Ideal::parse(R, "x,y");
  std::vector<Expectation> out;
  out.push_back({"rt", "2", Source::oracle, "(x, y)^n is presented by linear syzygies and quadratic Veronese relations",
                 [=] { return num(relation_type(I)); }});
  out.push_back({"rt_fiber", "2", Source::oracle, "the Veronese ring is defined by quadrics",
                 [=] { return num(relation_type_mod(I, m)); }});
  out.push_back({"pair_routes_agree", "true", Source::definition,
                 "for two-generated subideals the kernel degree analysis and the colon criterion agree",
                 [=] {
                   const Ideal zero = Ideal::zero(R);
                   const auto& g = I.gens();
                   for (std::size_t i = 0; i < g.size(); ++i)
                     for (std::size_t j = i + 1; j < g.size(); ++j) {
                       const long rt = relation_type(Ideal(R, {g[i], g[j]}));
                       if (rt != rt_by_colons(g[i], g[j], zero, rt + 2)) return std::string("false");
                     }
                   return std::string("true");
                 }});
  return out;
}

std::vector<Expectation> node_dseq(int, int) {
  const RingCtx A = RingCtx::polynomial({"x", "y", "z"}).with_quotient(RingCtx::polynomial({"x", "y", "z"}).parse_list("x*z"));
  const Poly x = A.var("x"), y = A.var("y");
  std::vector<Expectation> out;
  out.push_back({"dseq_xy", "false", Source::oracle, "(0 : x) meet (x, y) contains y z, which is nonzero",
                 [=] {
                   const std::vector<Poly> seq{x, y};
                   return format_bool(d_sequence_check(seq, A));
                 }});
  out.push_back({"dseq_yx", "true", Source::oracle, "y is regular and (y : x) meet (x, y) = (y)",
                 [=] {
                   const std::vector<Poly> seq{y, x};
                   return format_bool(d_sequence_check(seq, A));
                 }});
  out.push_back({"regular_x", "false", Source::definition, "x z = 0 with z nonzero",
                 [=] { return format_bool(is_regular_element(x, A)); }});
  out.push_back({"regular_y", "true", Source::oracle, "(xz : y) = (xz)", [=] { return format_bool(is_regular_element(y, A)); }});
  return out;
}

std::vector<CorpusEntry> build_registry() {
  std::vector<CorpusEntry> r;
  r.push_back({"huneke", 2, 5,
               [](int n) { return "Q[x,y], I = (x^" + num(n) + ", y^" + num(n) + ", x^" + num(n - 1) + "*y), J = (x^" + num(n) + ", y^" + num(n) + ")"; },
               huneke});
  r.push_back({"wang", 2, 4,
               [](int n) { return "Q[x,y,z], a = (z), I = (x^" + num(n) + ", y^" + num(n) + ", x^" + num(n - 1) + "*y + z^" + num(n) + "), m = (x,y,z)"; },
               wang});
  r.push_back({"eisenbud-hochster", 2, 5,
               [](int n) { return "Q[x,y], a = (x^" + num(n) + " - y^" + num(n + 1) + "), I = (x,y)"; }, eisenbud_hochster});
  r.push_back({"sally-vasconcelos", 2, 3,
               [](int n) { return "Q[u0..u" + num(n) + "]/ker(u_i -> t^(" + num(n + 1) + "+i)), fraction u1/u0"; },
               sally_vasconcelos});
  r.push_back({"veronese", 2, 3, [](int n) { return "Q[x,y], I = (x,y)^" + num(n); }, veronese});
  r.push_back({"node-dseq", 1, 1, [](int) { return std::string("Q[x,y,z]/(x*z), sequences (x,y) and (y,x)"); }, node_dseq});
  return r;
}

}  // namespace

const std::vector<CorpusEntry>& corpus_registry() {
  static const std::vector<CorpusEntry> registry = build_registry();
  return registry;
}

const CorpusEntry& find_example(const std::string& name) {
  for (const auto& e : corpus_registry())
    if (e.name == name) return e;
  throw InvalidArgument("unknown example '" + name + "'");
}

std::string list_examples() {
  std::ostringstream os;
  for (const auto& e : corpus_registry()) os << e.name << " n∈[" << e.n_min << "," << e.n_max << "]\n";
  return os.str();
}

ExampleResult run_example(const std::string& name, int n, int cap) {
  const CorpusEntry& entry = find_example(name);
  if (n < entry.n_min || n > entry.n_max)
    throw InvalidArgument(name + ": n = " + std::to_string(n) + " outside [" + std::to_string(entry.n_min) + "," +
                          std::to_string(entry.n_max) + "]");
  ExampleResult result;
  result.name = name;
  result.n = n;
  result.model = entry.model(n);
  for (auto& e : entry.expectations(n, cap)) {
    if (e.reason.empty()) throw std::logic_error(name + ": expectation '" + e.key + "' has no stated reason");
    std::string got;
    try {
      got = e.compute();
    } catch (const ResourceCapExceeded& ex) {
      got = "unresolved(" + std::string(ex.what()) + ")";
    } catch (const std::exception& ex) {
      got = "error(" + std::string(ex.what()) + ")";
    }
    Outcome o;
    if (got == e.expected)
      o = Outcome::pass;
    else if (e.known_divergence && got == *e.known_divergence)
      o = Outcome::expected_divergence;
    else if (got.starts_with("unresolved"))
      o = Outcome::unresolved;
    else
      o = Outcome::fail;
    result.results.push_back({e.key, e.expected, got, e.source, e.reason, o});
  }
  return result;
}

}  // namespace reeskit
