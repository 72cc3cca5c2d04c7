#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nctorus/covering.hpp"

namespace nctorus {

/// Raised when a path cannot be lifted uniquely at its sampling resolution,
/// or a precondition on its endpoints fails.
class LiftError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Angle arithmetic on the circle R/Z for exact (Rational) and real (double) samples.
template <class T>
struct AngleOps;

template <>
struct AngleOps<Rational> {
  static Rational reduce(const Rational& x) { return frac(x); }
  static Rational from_ratio(std::int64_t p, std::int64_t q) {
    Rational r(static_cast<long>(p), static_cast<unsigned long>(q));
    r.canonicalize();
    return r;
  }
  static std::int64_t nearest_int(const Rational& x) {
    mpz_class q;
    Rational shifted = x + Rational(1, 2);
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return q.get_si();
  }
  static double to_double(const Rational& x) { return x.get_d(); }
  static bool same_point(const Rational& a, const Rational& b) { return frac(a - b) == 0; }
};

template <>
struct AngleOps<double> {
  static constexpr double kTolerance = 1e-12;
  static double reduce(double x) {
    double r = x - std::floor(x);
    return r >= 1.0 ? 0.0 : r;
  }
  static double from_ratio(std::int64_t p, std::int64_t q) { return static_cast<double>(p) / static_cast<double>(q); }
  static std::int64_t nearest_int(double x) { return static_cast<std::int64_t>(std::floor(x + 0.5)); }
  static double to_double(double x) { return x; }
  static bool same_point(double a, double b) {
    const double d = reduce(a - b);
    return std::min(d, 1.0 - d) < kTolerance;
  }
};

/// Signed circle difference b - a, chosen in (-1/2, 1/2].
template <class T>
T circle_diff(const T& a, const T& b) {
  using Ops = AngleOps<T>;
  T d = Ops::reduce(b - a);
  if (d > T(1) / T(2)) d -= T(1);
  return d;
}

template <class T>
T circle_abs(const T& a, const T& b) {
  T d = circle_diff(a, b);
  return d < T(0) ? T(-d) : d;
}

template <class T>
struct AnglePoint {
  T s{};
  T t{};
};

/// A sampled path on the torus R^2/Z^2.
template <class T>
struct AnglePath {
  std::vector<AnglePoint<T>> samples;

  bool closed() const {
    using Ops = AngleOps<T>;
    return !samples.empty() && Ops::same_point(samples.front().s, samples.back().s) &&
           Ops::same_point(samples.front().t, samples.back().t);
  }
};

using ExactPath = AnglePath<Rational>;
using RealPath = AnglePath<double>;

/// Closed loop winding (p, q) times around the torus, based at (0, 0),
/// with `samples` points including both endpoints.
template <class T>
AnglePath<T> winding_loop(std::int64_t p, std::int64_t q, std::int64_t samples) {
  using Ops = AngleOps<T>;
  if (samples < 2) throw std::invalid_argument("a loop needs at least two samples");
  AnglePath<T> path;
  const std::int64_t steps = samples - 1;
  for (std::int64_t i = 0; i <= steps; ++i) {
    path.samples.push_back({Ops::reduce(Ops::from_ratio(p * i, steps)), Ops::reduce(Ops::from_ratio(q * i, steps))});
  }
  return path;
}

/// Follows a by b; b must start where a ends. The shared sample is kept once.
template <class T>
AnglePath<T> concatenate(const AnglePath<T>& a, const AnglePath<T>& b) {
  using Ops = AngleOps<T>;
  if (a.samples.empty()) return b;
  if (b.samples.empty()) return a;
  if (!Ops::same_point(a.samples.back().s, b.samples.front().s) ||
      !Ops::same_point(a.samples.back().t, b.samples.front().t)) {
    throw std::invalid_argument("paths do not meet");
  }
  AnglePath<T> r = a;
  r.samples.insert(r.samples.end(), b.samples.begin() + 1, b.samples.end());
  return r;
}

/// Largest admissible per-coordinate step for a (m, n) lift: min(1/(2m), 1/(2n)), exclusive.
template <class T>
T step_bound(std::int64_t m, std::int64_t n) {
  using Ops = AngleOps<T>;
  return Ops::from_ratio(1, 2 * std::max(m, n));
}

template <class T>
void check_step_bound(const AnglePath<T>& base, std::int64_t m, std::int64_t n) {
  const T bound = step_bound<T>(m, n);
  for (std::size_t i = 1; i < base.samples.size(); ++i) {
    if (!(circle_abs(base.samples[i - 1].s, base.samples[i].s) < bound) ||
        !(circle_abs(base.samples[i - 1].t, base.samples[i].t) < bound)) {
      throw LiftError("step " + std::to_string(i) + " exceeds the unique-lift bound for (m, n) = (" +
                      std::to_string(m) + ", " + std::to_string(n) + ")");
    }
  }
}

/// Lifts a base path through (s, t) -> (m s, n t) starting at `start`.
/// Each base increment is taken as the representative in (-1/2, 1/2] and
/// divided by m (resp. n); lifted samples are reduced into [0, 1).
template <class T>
AnglePath<T> lift_path(const AnglePath<T>& base, std::int64_t m, std::int64_t n, const AnglePoint<T>& start) {
  using Ops = AngleOps<T>;
  if (m < 1 || n < 1) throw std::invalid_argument("lift needs m, n >= 1");
  if (base.samples.empty()) throw LiftError("empty path");
  if (!Ops::same_point(T(m) * start.s, base.samples.front().s) || !Ops::same_point(T(n) * start.t, base.samples.front().t)) {
    throw LiftError("start point does not project to the first sample");
  }
  check_step_bound(base, m, n);
  AnglePath<T> lifted;
  lifted.samples.reserve(base.samples.size());
  T s = start.s;
  T t = start.t;
  lifted.samples.push_back({Ops::reduce(s), Ops::reduce(t)});
  for (std::size_t i = 1; i < base.samples.size(); ++i) {
    s += circle_diff(base.samples[i - 1].s, base.samples[i].s) / T(m);
    t += circle_diff(base.samples[i - 1].t, base.samples[i].t) / T(n);
    lifted.samples.push_back({Ops::reduce(s), Ops::reduce(t)});
  }
  return lifted;
}

/// The lift start lying over the first sample in the fundamental sheet.
template <class T>
AnglePoint<T> canonical_start(const AnglePath<T>& base, std::int64_t m, std::int64_t n) {
  if (base.samples.empty()) throw LiftError("empty path");
  return {base.samples.front().s / T(m), base.samples.front().t / T(n)};
}

/// Deck transformation carrying the lift's start to its end, for a closed path.
template <class T>
DeckElement deck_of_loop(const AnglePath<T>& loop, std::int64_t m, std::int64_t n) {
  using Ops = AngleOps<T>;
  if (!loop.closed()) throw LiftError("deck_of_loop needs a closed path");
  const auto lifted = lift_path(loop, m, n, canonical_start(loop, m, n));
  const auto& a = lifted.samples.front();
  const auto& b = lifted.samples.back();
  const std::int64_t da = Ops::nearest_int(T(m) * Ops::reduce(b.s - a.s));
  const std::int64_t db = Ops::nearest_int(T(n) * Ops::reduce(b.t - a.t));
  return DeckElement::make(da, db, m, n);
}

/// Automorphism u' -> exp(2 pi i s) u', v' -> exp(2 pi i t) v' of the cover.
template <class T>
struct GeneratorScaling {
  T s{};
  T t{};

  std::complex<double> w1() const { return std::polar(1.0, 2.0 * M_PI * AngleOps<T>::to_double(s)); }
  std::complex<double> w2() const { return std::polar(1.0, 2.0 * M_PI * AngleOps<T>::to_double(t)); }
  bool is_identity() const { return AngleOps<T>::same_point(s, T(0)) && AngleOps<T>::same_point(t, T(0)); }
};

/// Exact action on a cover element; available for exact angles only.
inline TorusElement apply(const GeneratorScaling<Rational>& alpha, const TorusElement& x) {
  return torus_act(x, alpha.s, alpha.t);
}

/// Lifts the base path of torus automorphisms u -> z1 u, v -> z2 v to a
/// continuous path of automorphisms of the cover with w1^m = z1, w2^n = z2.
template <class T>
std::vector<GeneratorScaling<T>> lift_automorphism_path(const AnglePath<T>& base, const CoveringSpec& cov) {
  const auto lifted = lift_path(base, cov.m, cov.n, canonical_start(base, cov.m, cov.n));
  std::vector<GeneratorScaling<T>> out;
  out.reserve(lifted.samples.size());
  for (const auto& p : lifted.samples) out.push_back({p.s, p.t});
  return out;
}

/// Parses "s t" pairs, one per line; '#' starts a comment. Values may be
/// fractions "p/q" (exact) or decimals.
ExactPath parse_exact_path(const std::string& text);
RealPath parse_real_path(const std::string& text);
/// True when every number in the text is an integer or p/q fraction.
bool is_exact_path_text(const std::string& text);

std::string format_path(const ExactPath& path);
std::string format_path(const RealPath& path);

}  // namespace nctorus
