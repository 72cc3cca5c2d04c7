#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nctorus {

using Rational = mpq_class;

/// Thrown when an operation would need a cyclotomic conductor larger than
/// the configured limit.
class ConductorOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest conductor any scalar may reach. Default 4096.
std::int64_t conductor_limit();
void set_conductor_limit(std::int64_t limit);

/// Element of Q(zeta_N) stored over the power basis zeta_N^0 .. zeta_N^{phi(N)-1},
/// reduced modulo the N-th cyclotomic polynomial.
class Cyclotomic {
 public:
  Cyclotomic();  // zero, conductor 1
  explicit Cyclotomic(Rational r);
  /// r * exp(2 pi i c); c is reduced mod 1 and its denominator becomes the conductor.
  static Cyclotomic root(const Rational& c, const Rational& r = 1);

  std::int64_t conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;

  Cyclotomic promoted(std::int64_t conductor) const;
  /// Rewrites the value in the smallest conductor hosting it (never 2 mod 4).
  Cyclotomic minimized() const;
  /// Galois automorphism zeta -> zeta^a, gcd(a, N) = 1.
  Cyclotomic galois(std::int64_t a) const;
  Cyclotomic conj() const;
  /// Product of all Galois conjugates; a rational number.
  Rational norm() const;
  Cyclotomic inverse() const;

  std::complex<double> evaluate() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic operator-() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(std::int64_t conductor, std::vector<Rational> coeffs);

  std::int64_t conductor_;
  std::vector<Rational> coeffs_;
};

/// Exact scalar in R = Q(zeta)[Q, Q^-1] where Q = exp(2 pi i theta) is a
/// formal transcendental. Stored as d -> cyclotomic coefficient of Q^d; a
/// zero coefficient is never stored, so zero is the empty map.
class PhaseScalar {
 public:
  PhaseScalar() = default;
  PhaseScalar(long r) : PhaseScalar(Rational(r)) {}  // NOLINT
  PhaseScalar(const Rational& r);                     // NOLINT
  PhaseScalar(const Cyclotomic& c, std::int64_t d = 0);

  /// r * exp(2 pi i c) * Q^d.
  static PhaseScalar term(const Rational& r, const Rational& c, std::int64_t d);
  static PhaseScalar root(const Rational& c) { return term(1, c, 0); }
  static PhaseScalar q_power(std::int64_t d) { return term(1, 0, d); }

  const std::map<std::int64_t, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when exactly one power of Q carries a coefficient; those are the units.
  bool is_monomial() const { return terms_.size() == 1; }
  std::int64_t conductor() const;

  PhaseScalar conj() const;
  /// Inverse of a unit c * Q^d; throws std::domain_error otherwise.
  PhaseScalar inverse() const;
  /// Substitutes Q -> Q^factor (factor may be negative).
  PhaseScalar scale_q(std::int64_t factor) const;
  /// Substitutes Q -> zeta_period, i.e. imposes Q^period = 1.
  PhaseScalar specialize_period(std::int64_t period) const;
  /// Value at Q = exp(2 pi i angle).
  std::complex<double> evaluate(double angle) const;

  PhaseScalar& operator+=(const PhaseScalar& o);
  PhaseScalar& operator-=(const PhaseScalar& o);
  PhaseScalar& operator*=(const PhaseScalar& o);
  friend PhaseScalar operator+(PhaseScalar a, const PhaseScalar& b) { return a += b; }
  friend PhaseScalar operator-(PhaseScalar a, const PhaseScalar& b) { return a -= b; }
  friend PhaseScalar operator*(PhaseScalar a, const PhaseScalar& b) { return a *= b; }
  PhaseScalar operator-() const;
  friend bool operator==(const PhaseScalar& a, const PhaseScalar& b);

  /// A flattened (r, c, d) triple: r * z(c) * Q^d with c a reduced fraction in [0, 1).
  struct Term {
    Rational r;
    Rational c;
    std::int64_t d;
  };
  /// Terms in canonical order (d descending, then c ascending) after
  /// minimizing each coefficient's conductor.
  std::vector<Term> flatten() const;
  /// Canonical text, e.g. "3/2*z(1/6)*Q^2" or "1+Q^-1".
  std::string str() const;

 private:
  void add_term(std::int64_t d, const Cyclotomic& c);

  std::map<std::int64_t, Cyclotomic> terms_;
};

inline bool scalar_is_zero(const PhaseScalar& a) { return a.is_zero(); }

std::ostream& operator<<(std::ostream& os, const PhaseScalar& a);

/// c reduced mod 1 into [0, 1).
Rational frac(const Rational& c);

}  // namespace nctorus
