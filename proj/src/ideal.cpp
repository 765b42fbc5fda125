#include "reeskit/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "reeskit/errors.hpp"
#include "reeskit/parse.hpp"

namespace reeskit {

struct RingCtx::Data {
  RingPtr ring;
  std::vector<Poly> quotient;
  GroebnerBasis quotient_basis;
};

RingCtx RingCtx::polynomial(std::vector<std::string> vars, MonomialOrder order) {
  return polynomial(make_ring(std::move(vars), std::move(order)));
}

RingCtx RingCtx::polynomial(RingPtr ring) {
  GroebnerBasis empty(ring, {});
  return RingCtx(std::make_shared<const Data>(Data{std::move(ring), {}, std::move(empty)}));
}

RingCtx RingCtx::with_quotient(std::span<const Poly> extra) const {
  std::vector<Poly> gens = d_->quotient;
  for (const auto& f : extra) {
    if (f.ring() != ring() && !f.ring()->same_as(*ring()))
      throw ContextMismatch("quotient generator from a different ring");
    if (!f.is_zero()) gens.push_back(f);
  }
  if (gens.empty()) return *this;
  GroebnerBasis gb = reduced_groebner(gens);
  if (gb.is_unit()) throw InvalidArgument("quotient by the unit ideal");
  return RingCtx(std::make_shared<const Data>(Data{ring(), std::move(gens), std::move(gb)}));
}

const RingPtr& RingCtx::ring() const noexcept { return d_->ring; }
const std::vector<Poly>& RingCtx::quotient_gens() const noexcept { return d_->quotient; }
const GroebnerBasis& RingCtx::quotient_basis() const noexcept { return d_->quotient_basis; }

Poly RingCtx::parse(std::string_view text) const { return parse_poly(text, ring()); }

std::vector<Poly> RingCtx::parse_list(std::string_view text, char sep) const {
  return parse_poly_list(text, ring(), sep);
}

Poly RingCtx::var(std::string_view name) const {
  auto idx = ring()->index_of(name);
  if (!idx) throw InvalidArgument("unknown variable '" + std::string(name) + "'");
  return Poly::variable(ring(), *idx);
}

bool RingCtx::same_as(const RingCtx& other) const {
  if (d_ == other.d_) return true;
  if (!ring()->same_as(*other.ring())) return false;
  const auto& a = quotient_basis().elements();
  const auto& b = other.quotient_basis().elements();
  return a == b;
}

void RingCtx::require_same(const RingCtx& other) const {
  if (!same_as(other)) throw ContextMismatch("ideals from different ring contexts");
}

std::string RingCtx::describe() const {
  std::ostringstream os;
  os << "QQ[";
  for (std::size_t i = 0; i < vars().size(); ++i) os << (i ? "," : "") << vars()[i];
  os << "]";
  if (has_quotient()) {
    os << "/(";
    const auto& q = quotient_basis().elements();
    for (std::size_t i = 0; i < q.size(); ++i) os << (i ? ", " : "") << q[i].str();
    os << ")";
  }
  return os.str();
}

struct Ideal::State {
  State(RingCtx c, std::vector<Poly> g) : ctx(std::move(c)), gens(std::move(g)) {}
  RingCtx ctx;
  std::vector<Poly> gens;
  std::once_flag gb_once;
  std::optional<GroebnerBasis> gb;
  std::mutex powers_mu;
  std::vector<std::optional<Ideal>> powers;
};

std::vector<Poly> tidy_generators(const RingCtx& ctx, std::span<const Poly> gens) {
  std::vector<Poly> out;
  for (const auto& g : gens) {
    if (g.ring() != ctx.ring() && !g.ring()->same_as(*ctx.ring()))
      throw ContextMismatch("generator from a different ring");
    Poly r = ctx.reduce(g).monic();
    if (r.is_zero()) continue;
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  // Drop monomial generators that are multiples of other monomial generators.
  std::vector<Poly> kept;
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool redundant = false;
    if (out[i].size() == 1) {
      for (std::size_t j = 0; j < out.size() && !redundant; ++j) {
        if (i == j || out[j].size() != 1) continue;
        const auto& mj = out[j].leading_monomial();
        const auto& mi = out[i].leading_monomial();
        if (mj.divides(mi) && (!(mj == mi) || j < i)) redundant = true;
      }
    }
    if (!redundant) kept.push_back(out[i]);
  }
  return kept;
}

Ideal::Ideal(RingCtx ctx, std::vector<Poly> gens) {
  auto tidy = tidy_generators(ctx, gens);
  if (tidy.empty()) tidy.push_back(Poly(ctx.ring()));
  s_ = std::make_shared<State>(std::move(ctx), std::move(tidy));
}

const RingCtx& Ideal::ctx() const noexcept { return s_->ctx; }
const std::vector<Poly>& Ideal::gens() const noexcept { return s_->gens; }

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(s_->gb_once, [this] {
    std::vector<Poly> all = s_->gens;
    const auto& q = s_->ctx.quotient_basis().elements();
    all.insert(all.end(), q.begin(), q.end());
    s_->gb = reduced_groebner(all);
  });
  return *s_->gb;
}

bool Ideal::contains(const Poly& f) const { return groebner().contains(f); }

bool Ideal::is_zero() const { return groebner().elements() == ctx().quotient_basis().elements(); }

bool Ideal::is_unit() const { return groebner().is_unit(); }

Ideal Ideal::power(unsigned n) const {
  if (n == 0) return unit(ctx());
  if (n == 1) return *this;
  std::optional<Ideal> prev;
  {
    std::lock_guard lock(s_->powers_mu);
    if (s_->powers.size() > n && s_->powers[n]) return *s_->powers[n];
  }
  prev = power(n - 1);
  std::vector<Poly> prods;
  for (const auto& a : prev->gens())
    for (const auto& b : gens()) prods.push_back(a * b);
  Ideal result(ctx(), std::move(prods));
  std::lock_guard lock(s_->powers_mu);
  if (s_->powers.size() <= n) s_->powers.resize(n + 1);
  if (!s_->powers[n]) s_->powers[n] = result;
  return *s_->powers[n];
}

std::string Ideal::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens().size(); ++i) out += (i ? ", " : "") + gens()[i].str();
  return out + ")";
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  I.ctx().require_same(J.ctx());
  std::vector<Poly> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ctx(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  I.ctx().require_same(J.ctx());
  std::vector<Poly> gens;
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) gens.push_back(a * b);
  return Ideal(I.ctx(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, unsigned n) { return I.power(n); }

namespace {

// Ambient-ring generators of the preimage gens + a.
std::vector<Poly> preimage_gens(const Ideal& I) {
  std::vector<Poly> out;
  for (const auto& g : I.gens())
    if (!g.is_zero()) out.push_back(g);
  const auto& q = I.ctx().quotient_basis().elements();
  out.insert(out.end(), q.begin(), q.end());
  return out;
}

}  // namespace

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  const RingCtx& ctx = I.ctx();
  ctx.require_same(J.ctx());
  if (I.is_zero() || J.is_zero()) return Ideal::zero(ctx);
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;

  std::vector<std::string> vars{"t_"};
  while (ctx.ring()->index_of(vars[0])) vars[0] += "_";
  vars.insert(vars.end(), ctx.vars().begin(), ctx.vars().end());
  auto big = make_ring(vars, ctx.order());
  std::vector<int> shift(ctx.nvars());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = static_cast<int>(i + 1);
  const Poly t = Poly::variable(big, 0);
  const Poly one_minus_t = Poly::constant(big, 1) - t;

  std::vector<Poly> gens;
  for (const auto& f : preimage_gens(I)) gens.push_back(t * f.map_vars(big, shift));
  for (const auto& g : preimage_gens(J)) gens.push_back(one_minus_t * g.map_vars(big, shift));
  return Ideal(ctx, eliminate_variables(gens, 1, ctx.ring()));
}

Ideal ideal_colon(const Ideal& I, const Poly& g) {
  const RingCtx& ctx = I.ctx();
  if (g.ring() != ctx.ring() && !g.ring()->same_as(*ctx.ring())) throw ContextMismatch("colon element ring");
  if (ctx.is_zero(g)) return Ideal::unit(ctx);
  if (I.contains(g)) return Ideal::unit(ctx);
  const RingCtx ambient = ctx.ambient();
  Ideal lifted(ambient, preimage_gens(I));
  Ideal principal(ambient, {g});
  Ideal meet = ideal_intersect(lifted, principal);
  std::vector<Poly> quotients;
  for (const auto& h : meet.gens()) {
    if (h.is_zero()) continue;
    auto q = divide_exact(h, g);
    if (!q) throw std::logic_error("colon: intersection generator not divisible by " + g.str());
    quotients.push_back(std::move(*q));
  }
  return Ideal(ctx, std::move(quotients));
}

Ideal ideal_colon(const Ideal& I, const Ideal& J) {
  I.ctx().require_same(J.ctx());
  std::optional<Ideal> out;
  for (const auto& g : J.gens()) {
    if (I.ctx().is_zero(g)) continue;
    Ideal c = ideal_colon(I, g);
    out = out ? ideal_intersect(*out, c) : c;
  }
  if (!out) throw InvalidArgument("colon by the zero ideal");
  return *out;
}

bool ideal_member(const Poly& f, const Ideal& I) {
  if (f.ring() != I.ctx().ring() && !f.ring()->same_as(*I.ctx().ring()))
    throw ContextMismatch("membership test across rings");
  return I.contains(f);
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  I.ctx().require_same(J.ctx());
  for (const auto& g : J.gens())
    if (!I.contains(g)) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  I.ctx().require_same(J.ctx());
  return I.groebner().elements() == J.groebner().elements();
}

Ideal eliminate(const Ideal& I, std::size_t first_k) {
  const RingCtx& ctx = I.ctx();
  if (ctx.has_quotient()) throw InvalidArgument("eliminate expects a polynomial-ring context");
  if (first_k >= ctx.nvars()) throw InvalidArgument("eliminate: first_k out of range");
  std::vector<std::string> rest(ctx.vars().begin() + static_cast<long>(first_k), ctx.vars().end());
  MonomialOrder order = ctx.order();
  if (order.kind() != MonomialOrder::Kind::lex && order.kind() != MonomialOrder::Kind::degrevlex)
    order = MonomialOrder::degrevlex();
  RingCtx target = RingCtx::polynomial(std::move(rest), order);
  return Ideal(target, eliminate_variables(preimage_gens(I), first_k, target.ring()));
}

bool is_regular_element(const Poly& f, const RingCtx& ctx) {
  if (ctx.is_zero(f)) return false;
  if (!ctx.has_quotient()) return true;
  return ideal_colon(Ideal::zero(ctx), f).is_zero();
}

std::vector<Rational> combination_coefficients(int k, std::size_t m) {
  std::vector<Rational> out;
  Rational c = 1;
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back(c);
    c *= Rational(k);
  }
  return out;
}

RegularSearch is_regular_ideal(const Ideal& I, int trials) {
  const RingCtx& ctx = I.ctx();
  for (unsigned n = 1; n <= 3; ++n) {
    for (const auto& g : I.power(n).gens())
      if (is_regular_element(g, ctx)) return {g, false};
  }
  const auto& gens = I.gens();
  for (int k = 1; k <= trials; ++k) {
    auto coeffs = combination_coefficients(k, gens.size());
    Poly g(ctx.ring());
    for (std::size_t i = 0; i < gens.size(); ++i) g = g + gens[i].scaled(coeffs[i]);
    if (is_regular_element(g, ctx)) return {g, false};
  }
  return {std::nullopt, true};
}

Fraction::Fraction(RingCtx ctx, Poly num, Poly den)
    : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
  if (!is_regular_element(den_, ctx_)) throw InvalidArgument("fraction denominator " + den_.str() + " is not regular");
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  a.ctx_.require_same(b.ctx_);
  return Fraction(a.ctx_, a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  a.ctx_.require_same(b.ctx_);
  return Fraction(a.ctx_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

std::string Fraction::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

}  // namespace reeskit
