#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "reeskit/corpus.hpp"
#include "reeskit/errors.hpp"
#include "reeskit/invariants.hpp"
#include "reeskit/parse.hpp"
#include "reeskit/rees.hpp"
#include "reeskit/report.hpp"

using namespace reeskit;

namespace {

struct Globals {
  std::string vars;
  std::string mod;
  std::string order = "degrevlex";
  int cap = kDefaultCap;
  bool explain = false;
};

RingCtx make_ctx(const Globals& g) {
  if (g.vars.empty()) throw InvalidArgument("--vars is required");
  RingCtx ctx = RingCtx::polynomial(parse_var_list(g.vars), MonomialOrder::from_name(g.order));
  if (!g.mod.empty()) ctx = ctx.with_quotient(ctx.ambient().parse_list(g.mod, ';'));
  return ctx;
}

Ideal parse_ideal(const RingCtx& ctx, const std::string& text, const char* flag) {
  if (text.empty()) throw InvalidArgument(std::string(flag) + " is required");
  return Ideal::parse(ctx, text);
}

void record(Report& rep, const std::string& key, const SearchOutcome& v, const std::optional<long>& expect) {
  if (expect) rep.expect(key, std::to_string(*expect), v.str());
  else rep.add(key, v.str());
  if (!v.is_resolved()) rep.mark_unresolved();
}

void record(Report& rep, const std::string& key, long v, const std::optional<long>& expect) {
  record(rep, key, SearchOutcome::resolved(v), expect);
}

int emit(const Report& rep) {
  std::cout << rep.str();
  return rep.exit_code();
}

void add_profile(Report& rep, const ReesPresentation& pres) {
  for (const auto& [deg, polys] : pres.degree_profile) {
    std::string line;
    for (std::size_t i = 0; i < polys.size(); ++i) line += (i ? ", " : "") + polys[i].str();
    rep.add("profile." + std::to_string(deg), line);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reeskit: reduction numbers, relation type and Artin-Rees numbers over Q"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--vars", g.vars, "Comma-separated variable names");
  app.add_option("--mod", g.mod, "Quotient generators separated by ';'");
  app.add_option("--order", g.order, "Monomial order: lex or degrevlex")->capture_default_str();
  app.add_option("--cap", g.cap, "Search cap for semi-decisions")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_flag("--explain", g.explain, "Print supporting detail");

  std::string ideal, modulo, reduction, num, den, sub, seq, example;
  std::optional<long> expect;
  int n = 0;
  bool all = false;

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal (with the quotient ideal added)");
  gb->add_option("--ideal", ideal, "Comma-separated generators")->required();

  auto* rt = app.add_subcommand("rt", "Relation type rt(I), or rt_J(I) with --modulo");
  rt->add_option("--ideal", ideal)->required();
  rt->add_option("--modulo", modulo, "Generators of J");
  rt->add_option("--expect", expect);

  auto* rn = app.add_subcommand("rn", "Reduction number rn_J(I); searches a principal reduction without --reduction");
  rn->add_option("--ideal", ideal)->required();
  rn->add_option("--reduction", reduction, "Generators of J");
  rn->add_option("--expect", expect);

  auto* id = app.add_subcommand("id", "Integral degree of the fraction num/den");
  id->add_option("--num", num)->required();
  id->add_option("--den", den)->required();
  id->add_option("--expect", expect);

  auto* ar = app.add_subcommand("ar", "Artin-Rees number s_J(a, A; I)");
  ar->add_option("--sub", sub, "Generators of the ideal a")->required();
  ar->add_option("--ideal", ideal)->required();
  ar->add_option("--modulo", modulo, "Generators of J (default 0)");
  ar->add_option("--expect", expect);

  auto* reg = app.add_subcommand("reg", "Regularity of the Rees algebra through the filter-regular condition");
  reg->add_option("--ideal", ideal)->required();
  reg->add_option("--reduction", reduction)->required();
  reg->add_option("--expect", expect);

  auto* dseq = app.add_subcommand("dseq", "d-sequence check");
  dseq->add_option("--seq", seq, "Comma-separated sequence x_1,...,x_s")->required();

  auto* cds = app.add_subcommand("cds", "d-sequence reduction hypotheses and rt/reg conclusions");
  cds->add_option("--ideal", ideal)->required();
  cds->add_option("--reduction", reduction)->required();

  auto* verify = app.add_subcommand("verify", "Run corpus examples");
  verify->add_option("name", example, "Example name");
  verify->add_option("--n", n, "Family parameter");
  verify->add_flag("--all", all, "Run every example at every parameter");

  auto* list = app.add_subcommand("list", "List corpus examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*list) {
      std::cout << list_examples();
      return 0;
    }
    if (*verify) {
      if (all == !example.empty()) throw InvalidArgument("verify needs either <name> --n k or --all");
      if (!all) {
        if (!verify->count("--n")) throw InvalidArgument("verify " + example + " needs --n");
        return emit(run_example(example, n, g.cap).report(g.explain));
      }
      int worst = 0;
      bool first = true;
      for (const auto& entry : corpus_registry()) {
        for (int k = entry.n_min; k <= entry.n_max; ++k) {
          if (!first) std::cout << "\n";
          first = false;
          const int code = emit(run_example(entry.name, k, g.cap).report(g.explain));
          if (code == 2 || (code == 3 && worst == 0)) worst = code;
        }
      }
      std::cout << "\noverall = " << (worst == 0 ? "pass" : worst == 2 ? "fail" : "unresolved") << "\n";
      return worst;
    }

    const RingCtx ctx = make_ctx(g);
    Report rep;

    if (*gb) {
      const Ideal I = parse_ideal(ctx, ideal, "--ideal");
      for (const auto& f : I.groebner().elements()) std::cout << f.str() << "\n";
      return 0;
    }
    if (*rt) {
      const Ideal I = parse_ideal(ctx, ideal, "--ideal");
      if (modulo.empty()) {
        record(rep, "rt", relation_type(I), expect);
      } else {
        record(rep, "rt_mod", relation_type_mod(I, Ideal::parse(ctx, modulo)), expect);
      }
      if (g.explain) add_profile(rep, rees_kernel(I));
      return emit(rep);
    }
    if (*rn) {
      const Ideal I = parse_ideal(ctx, ideal, "--ideal");
      if (!reduction.empty()) {
        record(rep, "rn", reduction_number(I, Ideal::parse(ctx, reduction), g.cap), expect);
        return emit(rep);
      }
      const auto pr = find_principal_reduction(I, g.cap);
      if (!pr) {
        rep.add("reduction", "none found within search budget");
        rep.mark_unresolved();
        return emit(rep);
      }
      rep.add("reduction", "(" + pr->element.str() + ")");
      record(rep, "rn", pr->rn, expect);
      return emit(rep);
    }
    if (*id) {
      const SearchOutcome v = integral_degree_fraction(ctx.parse(num), ctx.parse(den), ctx, g.cap);
      record(rep, "id", v, expect);
      if (g.explain && v.is_resolved()) rep.add("witness", v.witness());
      return emit(rep);
    }
    if (*ar) {
      const Ideal a = Ideal::parse(ctx, sub);
      const Ideal I = parse_ideal(ctx, ideal, "--ideal");
      const Ideal J = modulo.empty() ? Ideal::zero(ctx) : Ideal::parse(ctx, modulo);
      const ArtinReesReport r = artin_rees_number(a, I, J, g.cap);
      record(rep, "s", r.s_value, expect);
      rep.add("rt_bound", r.rt_bound ? std::to_string(*r.rt_bound) : "none");
      rep.add("regime", r.exact ? "exact" : "window");
      rep.add("window", "1.." + std::to_string(r.window_end));
      if (g.explain) {
        std::string nv;
        for (std::size_t i = 0; i < r.nonvanishing.size(); ++i) nv += (i ? ", " : "") + std::to_string(r.nonvanishing[i]);
        rep.add("nonvanishing", "[" + nv + "]");
      }
      return emit(rep);
    }
    if (*reg) {
      const RegReport r = reg_rees(parse_ideal(ctx, ideal, "--ideal"), Ideal::parse(ctx, reduction), g.cap);
      record(rep, "reg", r.reg, expect);
      rep.add("rn", std::to_string(r.rn));
      rep.add("regime", r.exact ? "exact" : "window");
      if (!r.exact) rep.add("window", "(" + std::to_string(r.rn) + ", " + std::to_string(r.window_end) + "]");
      return emit(rep);
    }
    if (*dseq) {
      const auto xs = ctx.parse_list(seq);
      std::string why;
      const bool ok = d_sequence_check(xs, ctx, &why);
      rep.add("dseq", format_bool(ok));
      if (!ok) rep.add("reason", why);
      return emit(rep);
    }
    if (*cds) {
      const Ideal I = parse_ideal(ctx, ideal, "--ideal");
      const auto xs = ctx.parse_list(reduction);
      const CdsReport r = check_theorem_cds(I, xs, g.cap);
      rep.add("rn", r.rn.str());
      rep.add("d_sequence", format_bool(r.d_sequence));
      rep.add("regular_prefix", format_bool(r.regular_prefix));
      rep.add("vv_condition", format_bool(r.vv_condition));
      if (r.hypotheses_hold()) {
        rep.add("rt", std::to_string(*r.rt));
        rep.add("reg", r.reg->reg.str());
        rep.add("conclusion", format_bool(r.conclusion_holds));
        if (!r.conclusion_holds) rep.mark_failed();
      }
      for (std::size_t i = 0; i < r.notes.size(); ++i) rep.add("note." + std::to_string(i + 1), r.notes[i]);
      return emit(rep);
    }
  } catch (const ResourceCapExceeded& e) {
    std::cout << "error = " << e.what() << "\nstatus = unresolved\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "reeskit: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
