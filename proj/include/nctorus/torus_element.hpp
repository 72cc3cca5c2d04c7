#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "nctorus/phase_scalar.hpp"

namespace nctorus {

/// Identifies which formal phase a TorusElement's scalars are written in.
///
/// Every context is an affine rescaling of the root parameter theta:
/// theta_ctx = (theta + shift) / scale, so Q_ctx = exp(2 pi i theta_ctx).
/// Covering an (S, K) context by (m, n, k) gives (S*mn, K + S*k mod S*mn),
/// and the base phase rewrites as Q_ctx = Q_cover^{mn}.
///
/// A nonzero forced_period p imposes Q_ctx^p = 1 (rational theta). The
/// algebra still works there but the Galois verifier refuses such contexts.
struct ThetaContext {
  std::int64_t scale = 1;
  std::int64_t shift = 0;
  std::int64_t forced_period = 0;

  static ThetaContext base() { return {}; }
  static ThetaContext rational(std::int64_t period);

  bool is_rational() const { return forced_period != 0; }
  ThetaContext cover(std::int64_t m, std::int64_t n, std::int64_t k) const;
  /// theta_ctx for a numeric root theta.
  double angle(double theta) const;

  friend bool operator==(const ThetaContext&, const ThetaContext&) = default;
};

std::string to_string(const ThetaContext& ctx);

/// Thrown when elements from different phase contexts are combined.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Bidegree {
  std::int64_t r = 0;
  std::int64_t s = 0;

  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.r + b.r, a.s + b.s}; }
  friend Bidegree operator-(Bidegree a) { return {-a.r, -a.s}; }
};

/// u^{i1} v^{j1} * u^{i2} v^{j2} = Q^{-j1*i2} u^{i1+i2} v^{j1+j2}.
std::pair<PhaseScalar, Bidegree> monomial_product(Bidegree a, Bidegree b);

/// Finite sum of a_ij u^i v^j in normal form (u powers left of v powers).
class TorusElement {
 public:
  using Coeffs = std::map<Bidegree, PhaseScalar>;

  TorusElement() = default;
  explicit TorusElement(ThetaContext ctx) : ctx_(ctx) {}
  TorusElement(const PhaseScalar& c, ThetaContext ctx = {});

  static TorusElement monomial(Bidegree deg, const PhaseScalar& c = 1, ThetaContext ctx = {});
  static TorusElement u(ThetaContext ctx = {}) { return monomial({1, 0}, 1, ctx); }
  static TorusElement v(ThetaContext ctx = {}) { return monomial({0, 1}, 1, ctx); }

  const ThetaContext& context() const { return ctx_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }
  /// Coefficient at deg (zero when absent).
  PhaseScalar coeff(Bidegree deg) const;

  /// Adds c * u^r v^s.
  void add_term(Bidegree deg, const PhaseScalar& c);

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  TorusElement operator-() const;
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator*(const PhaseScalar& c, const TorusElement& a);
  TorusElement& operator*=(const TorusElement& o) { return *this = *this * o; }
  friend bool operator==(const TorusElement& a, const TorusElement& b);

  /// Integer power; negative exponents need a unit monomial.
  TorusElement pow(std::int64_t e) const;
  /// Inverse of c * u^r v^s with c a unit scalar; throws std::domain_error otherwise.
  TorusElement inverse() const;
  bool is_unit_monomial() const;

  /// Text form, terms in descending (i, j) order, e.g. "u^2 + (1+Q^-1)*u*v + v^2".
  std::string str() const;

 private:
  void normalize_scalar(PhaseScalar& c) const;

  ThetaContext ctx_;
  Coeffs coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TorusElement& a);

TorusElement multiply(const TorusElement& a, const TorusElement& b);

/// (a_ij u^i v^j)* = conj(a_ij) Q^{-ij} u^{-i} v^{-j}.
TorusElement star(const TorusElement& a);

/// The tracial state: coefficient of u^0 v^0.
PhaseScalar trace(const TorusElement& a);

/// trace(star(a) * a), the square of the trace norm.
PhaseScalar trace_norm_sq(const TorusElement& a);

/// The (r, s)-isotypic part under the torus action, a_rs u^r v^s.
TorusElement homogeneous_component(const TorusElement& a, Bidegree rs);

/// Action of the torus point (exp(2 pi i s), exp(2 pi i t)): u -> z1 u, v -> z2 v.
TorusElement torus_act(const TorusElement& a, const Rational& s, const Rational& t);

bool is_unitary(const TorusElement& a);

/// Checks a*star(a) == c == star(a)*a for a scalar c with rational (positive) value.
bool is_proportional_to_unitary(const TorusElement& a);

}  // namespace nctorus
