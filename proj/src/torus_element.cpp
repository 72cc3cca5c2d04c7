#include "nctorus/torus_element.hpp"

#include <ostream>

namespace nctorus {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void require_same(const ThetaContext& a, const ThetaContext& b) {
  if (!(a == b)) {
    throw ContextMismatch("elements live over different phases: " + to_string(a) + " vs " + to_string(b));
  }
}

std::string monomial_text(Bidegree d) {
  std::string s;
  if (d.r != 0) s += d.r == 1 ? "u" : "u^" + std::to_string(d.r);
  if (d.s != 0) {
    if (!s.empty()) s += "*";
    s += d.s == 1 ? "v" : "v^" + std::to_string(d.s);
  }
  return s;
}

}  // namespace

ThetaContext ThetaContext::rational(std::int64_t period) {
  if (period < 1) throw std::invalid_argument("forced period must be positive");
  ThetaContext c;
  c.forced_period = period;
  return c;
}

ThetaContext ThetaContext::cover(std::int64_t m, std::int64_t n, std::int64_t k) const {
  ThetaContext c;
  c.scale = scale * m * n;
  c.shift = floor_mod(shift + scale * k, c.scale);
  c.forced_period = forced_period * m * n;
  return c;
}

double ThetaContext::angle(double theta) const {
  return (theta + static_cast<double>(shift)) / static_cast<double>(scale);
}

std::string to_string(const ThetaContext& ctx) {
  std::string s = "(theta+" + std::to_string(ctx.shift) + ")/" + std::to_string(ctx.scale);
  if (ctx.is_rational()) s += " [Q^" + std::to_string(ctx.forced_period) + "=1]";
  return s;
}

std::pair<PhaseScalar, Bidegree> monomial_product(Bidegree a, Bidegree b) {
  return {PhaseScalar::q_power(-a.s * b.r), a + b};
}

TorusElement::TorusElement(const PhaseScalar& c, ThetaContext ctx) : ctx_(ctx) { add_term({0, 0}, c); }

TorusElement TorusElement::monomial(Bidegree deg, const PhaseScalar& c, ThetaContext ctx) {
  TorusElement e(ctx);
  e.add_term(deg, c);
  return e;
}

PhaseScalar TorusElement::coeff(Bidegree deg) const {
  auto it = coeffs_.find(deg);
  return it == coeffs_.end() ? PhaseScalar() : it->second;
}

void TorusElement::normalize_scalar(PhaseScalar& c) const {
  if (ctx_.is_rational()) c = c.specialize_period(ctx_.forced_period);
}

void TorusElement::add_term(Bidegree deg, const PhaseScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(deg, c);
  if (!inserted) it->second += c;
  normalize_scalar(it->second);
  if (it->second.is_zero()) coeffs_.erase(it);
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  require_same(ctx_, o.ctx_);
  for (const auto& [d, c] : o.coeffs_) add_term(d, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  require_same(ctx_, o.ctx_);
  for (const auto& [d, c] : o.coeffs_) add_term(d, -c);
  return *this;
}

TorusElement TorusElement::operator-() const {
  TorusElement r(ctx_);
  for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(d, -c);
  return r;
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
  require_same(a.ctx_, b.ctx_);
  TorusElement r(a.ctx_);
  for (const auto& [da, ca] : a.coeffs_) {
    for (const auto& [db, cb] : b.coeffs_) {
      auto [phase, deg] = monomial_product(da, db);
      r.add_term(deg, ca * cb * phase);
    }
  }
  return r;
}

TorusElement operator*(const PhaseScalar& c, const TorusElement& a) {
  TorusElement r(a.ctx_);
  for (const auto& [d, x] : a.coeffs_) r.add_term(d, c * x);
  return r;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
  return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
}

bool TorusElement::is_unit_monomial() const {
  return coeffs_.size() == 1 && coeffs_.begin()->second.is_monomial();
}

TorusElement TorusElement::inverse() const {
  if (!is_unit_monomial()) throw std::domain_error("not invertible in the polynomial algebra: " + str());
  const auto& [deg, c] = *coeffs_.begin();
  // (c u^r v^s)^-1 = v^-s u^-r c^-1 = c^-1 Q^{-rs} u^-r v^-s
  return monomial(-deg, c.inverse() * PhaseScalar::q_power(-deg.r * deg.s), ctx_);
}

TorusElement TorusElement::pow(std::int64_t e) const {
  TorusElement base = e < 0 ? inverse() : *this;
  std::int64_t k = e < 0 ? -e : e;
  TorusElement r(PhaseScalar(1), ctx_);
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

std::string TorusElement::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const Bidegree d = it->first;
    PhaseScalar c = it->second;
    const auto flat = c.flatten();
    bool neg = flat.size() == 1 && flat[0].r < 0;
    if (neg) c = -c;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    const std::string mono = monomial_text(d);
    if (mono.empty()) {
      out += flat.size() > 1 && coeffs_.size() > 1 ? "(" + c.str() + ")" : c.str();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += (flat.size() > 1 ? "(" + c.str() + ")" : c.str()) + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const TorusElement& a) { return os << a.str(); }

TorusElement multiply(const TorusElement& a, const TorusElement& b) { return a * b; }

TorusElement star(const TorusElement& a) {
  TorusElement r(a.context());
  for (const auto& [d, c] : a.coeffs()) r.add_term(-d, c.conj() * PhaseScalar::q_power(-d.r * d.s));
  return r;
}

PhaseScalar trace(const TorusElement& a) { return a.coeff({0, 0}); }

PhaseScalar trace_norm_sq(const TorusElement& a) { return trace(star(a) * a); }

TorusElement homogeneous_component(const TorusElement& a, Bidegree rs) {
  return TorusElement::monomial(rs, a.coeff(rs), a.context());
}

TorusElement torus_act(const TorusElement& a, const Rational& s, const Rational& t) {
  TorusElement r(a.context());
  for (const auto& [d, c] : a.coeffs()) {
    const Rational angle = s * Rational(static_cast<long>(d.r)) + t * Rational(static_cast<long>(d.s));
    r.add_term(d, c * PhaseScalar::root(angle));
  }
  return r;
}

bool is_unitary(const TorusElement& a) {
  const TorusElement one(PhaseScalar(1), a.context());
  return a * star(a) == one && star(a) * a == one;
}

bool is_proportional_to_unitary(const TorusElement& a) {
  if (a.is_zero()) return false;
  const TorusElement left = a * star(a);
  const TorusElement right = star(a) * a;
  if (!(left == right) || left.support_size() != 1 || left.coeffs().begin()->first != Bidegree{0, 0}) return false;
  const PhaseScalar& c = left.coeffs().begin()->second;
  if (!c.is_monomial() || c.terms().begin()->first != 0) return false;
  const Cyclotomic& val = c.terms().begin()->second;
  return val.minimized().is_rational() && val.minimized().coeffs()[0] > 0;
}

}  // namespace nctorus
