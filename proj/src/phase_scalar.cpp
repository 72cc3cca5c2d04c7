#include "nctorus/phase_scalar.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace nctorus {

namespace {

std::atomic<std::int64_t> g_conductor_limit{4096};

using IntPoly = std::vector<std::int64_t>;  // low degree first

// Everything needed to work in Q(zeta_N): phi(N) and the reduced
// coordinates of every power zeta^e, 0 <= e < N.
struct FieldData {
  std::int64_t n = 1;
  std::int64_t phi = 1;
  IntPoly cyclotomic_poly;
  std::vector<IntPoly> powers;
};

IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    if (c == 0) continue;
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::shared_ptr<const FieldData> field(std::int64_t n);

IntPoly compute_cyclotomic_poly(std::int64_t n) {
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_divide_exact(std::move(p), field(d)->cyclotomic_poly);
  }
  return p;
}

std::shared_ptr<const FieldData> build_field(std::int64_t n) {
  auto f = std::make_shared<FieldData>();
  f->n = n;
  f->cyclotomic_poly = compute_cyclotomic_poly(n);
  f->phi = static_cast<std::int64_t>(f->cyclotomic_poly.size()) - 1;
  const auto phi = static_cast<std::size_t>(f->phi);
  f->powers.reserve(static_cast<std::size_t>(n));
  IntPoly cur(phi, 0);
  cur[0] = 1;
  for (std::int64_t e = 0; e < n; ++e) {
    f->powers.push_back(cur);
    // multiply by x, then reduce the x^phi term with the monic polynomial
    IntPoly next(phi, 0);
    const std::int64_t top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = 0;
    for (std::size_t i = 0; i < phi; ++i) next[i] -= top * f->cyclotomic_poly[i];
    cur = std::move(next);
  }
  return f;
}

std::shared_ptr<const FieldData> field(std::int64_t n) {
  static std::mutex mu;
  static std::unordered_map<std::int64_t, std::shared_ptr<const FieldData>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // built outside the lock: construction recurses into field(d) for d | n
  auto f = build_field(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(f)).first->second;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t l = std::lcm(a, b);
  if (l > g_conductor_limit.load()) {
    throw ConductorOverflow("cyclotomic conductor " + std::to_string(l) +
                            " exceeds limit " + std::to_string(g_conductor_limit.load()));
  }
  return l;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// Accumulates coeff * zeta^e into v (power basis of f).
void add_power(std::vector<Rational>& v, const FieldData& f, std::int64_t e, const Rational& coeff) {
  const auto& pw = f.powers[static_cast<std::size_t>(mod(e, f.n))];
  for (std::size_t i = 0; i < pw.size(); ++i) {
    if (pw[i] != 0) v[i] += coeff * Rational(static_cast<long>(pw[i]));
  }
}

// Solves A y = b exactly; returns false if inconsistent.
bool solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& y) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return false;
  }
  y.assign(cols, 0);
  for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = b[i];
  return true;
}

}  // namespace

std::int64_t conductor_limit() { return g_conductor_limit.load(); }

void set_conductor_limit(std::int64_t limit) {
  if (limit < 1) throw std::invalid_argument("conductor limit must be positive");
  g_conductor_limit.store(limit);
}

Rational frac(const Rational& c) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
  Rational r = c - Rational(q);
  r.canonicalize();
  return r;
}

// --- Cyclotomic -------------------------------------------------------------

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1, 0) {}

Cyclotomic::Cyclotomic(Rational r) : conductor_(1), coeffs_{std::move(r)} {}

Cyclotomic::Cyclotomic(std::int64_t conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::root(const Rational& c, const Rational& r) {
  const Rational f = frac(c);
  if (!f.get_den().fits_slong_p() || f.get_den().get_si() > g_conductor_limit.load()) {
    throw ConductorOverflow("root of unity order exceeds conductor limit");
  }
  const std::int64_t n = f.get_den().get_si();
  const std::int64_t p = f.get_num().get_si();
  const auto fd = field(n);
  std::vector<Rational> v(static_cast<std::size_t>(fd->phi), 0);
  add_power(v, *fd, p, r);
  return Cyclotomic(n, std::move(v));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return x == 0; });
}

bool Cyclotomic::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& x) { return x == 0; });
}

Cyclotomic Cyclotomic::promoted(std::int64_t conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor % conductor_ != 0) {
    throw std::invalid_argument("cannot promote conductor " + std::to_string(conductor_) + " to " +
                                std::to_string(conductor));
  }
  const auto fd = field(conductor);
  const std::int64_t step = conductor / conductor_;
  std::vector<Rational> v(static_cast<std::size_t>(fd->phi), 0);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) {
    if (coeffs_[p] != 0) add_power(v, *fd, static_cast<std::int64_t>(p) * step, coeffs_[p]);
  }
  return Cyclotomic(conductor, std::move(v));
}

Cyclotomic Cyclotomic::minimized() const {
  if (is_rational()) return Cyclotomic(coeffs_[0]);
  const auto fd = field(conductor_);
  for (std::int64_t m = 1; m < conductor_; ++m) {
    if (conductor_ % m != 0 || m % 4 == 2) continue;
    const auto sub = field(m);
    const std::int64_t step = conductor_ / m;
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(fd->phi),
                                         std::vector<Rational>(static_cast<std::size_t>(sub->phi), 0));
    for (std::int64_t p = 0; p < sub->phi; ++p) {
      const auto& pw = fd->powers[static_cast<std::size_t>(mod(p * step, conductor_))];
      for (std::size_t i = 0; i < pw.size(); ++i) a[i][static_cast<std::size_t>(p)] = static_cast<long>(pw[i]);
    }
    std::vector<Rational> y;
    if (solve_exact(std::move(a), coeffs_, y)) return Cyclotomic(m, std::move(y));
  }
  // N = 2 mod 4 never reaches here: m = N/2 hosts the same field
  return *this;
}

Cyclotomic Cyclotomic::galois(std::int64_t a) const {
  if (std::gcd(a, conductor_) != 1) throw std::invalid_argument("galois exponent not coprime to conductor");
  const auto fd = field(conductor_);
  std::vector<Rational> v(coeffs_.size(), 0);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) {
    if (coeffs_[p] != 0) add_power(v, *fd, a * static_cast<std::int64_t>(p), coeffs_[p]);
  }
  return Cyclotomic(conductor_, std::move(v));
}

Cyclotomic Cyclotomic::conj() const { return galois(conductor_ - 1 == 0 ? 1 : conductor_ - 1); }

Rational Cyclotomic::norm() const {
  Cyclotomic prod(Rational(1));
  prod = prod.promoted(conductor_);
  for (std::int64_t a = 1; a <= conductor_; ++a) {
    if (std::gcd(a, conductor_) == 1) prod *= galois(a);
  }
  return prod.coeffs_[0];
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // x^-1 = (product of the other conjugates) / N(x)
  Cyclotomic others = Cyclotomic(Rational(1)).promoted(conductor_);
  for (std::int64_t a = 2; a <= conductor_; ++a) {
    if (std::gcd(a, conductor_) == 1) others *= galois(a);
  }
  const Rational n = (others * *this).coeffs_[0];
  for (auto& c : others.coeffs_) c /= n;
  return others;
}

std::complex<double> Cyclotomic::evaluate() const {
  std::complex<double> z = 0;
  for (std::size_t p = 0; p < coeffs_.size(); ++p) {
    if (coeffs_[p] == 0) continue;
    const double angle = 2.0 * M_PI * static_cast<double>(p) / static_cast<double>(conductor_);
    z += coeffs_[p].get_d() * std::polar(1.0, angle);
  }
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const std::int64_t n = checked_lcm(conductor_, o.conductor_);
  if (n != conductor_) *this = promoted(n);
  const Cyclotomic& rhs = o.conductor_ == n ? o : o.promoted(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  const std::int64_t n = checked_lcm(conductor_, o.conductor_);
  const Cyclotomic a = promoted(n);
  const Cyclotomic b = o.promoted(n);
  const auto fd = field(n);
  std::vector<Rational> full(static_cast<std::size_t>(n), 0);
  for (std::size_t p = 0; p < a.coeffs_.size(); ++p) {
    if (a.coeffs_[p] == 0) continue;
    for (std::size_t q = 0; q < b.coeffs_.size(); ++q) {
      if (b.coeffs_[q] == 0) continue;
      full[(p + q) % static_cast<std::size_t>(n)] += a.coeffs_[p] * b.coeffs_[q];
    }
  }
  std::vector<Rational> v(static_cast<std::size_t>(fd->phi), 0);
  for (std::size_t e = 0; e < full.size(); ++e) {
    if (full[e] != 0) add_power(v, *fd, static_cast<std::int64_t>(e), full[e]);
  }
  conductor_ = n;
  coeffs_ = std::move(v);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const std::int64_t n = std::lcm(a.conductor_, b.conductor_);
  return a.promoted(n).coeffs_ == b.promoted(n).coeffs_;
}

// --- PhaseScalar ------------------------------------------------------------

PhaseScalar::PhaseScalar(const Rational& r) {
  if (r != 0) terms_.emplace(0, Cyclotomic(r));
}

PhaseScalar::PhaseScalar(const Cyclotomic& c, std::int64_t d) {
  if (!c.is_zero()) terms_.emplace(d, c);
}

PhaseScalar PhaseScalar::term(const Rational& r, const Rational& c, std::int64_t d) {
  return PhaseScalar(Cyclotomic::root(c, r), d);
}

bool PhaseScalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == Cyclotomic(Rational(1));
}

std::int64_t PhaseScalar::conductor() const {
  std::int64_t n = 1;
  for (const auto& [d, c] : terms_) n = std::lcm(n, c.conductor());
  return n;
}

void PhaseScalar::add_term(std::int64_t d, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(d, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PhaseScalar PhaseScalar::conj() const {
  PhaseScalar r;
  for (const auto& [d, c] : terms_) r.terms_.emplace(-d, c.conj());
  return r;
}

PhaseScalar PhaseScalar::inverse() const {
  if (!is_monomial()) throw std::domain_error("phase scalar " + str() + " is not a unit");
  const auto& [d, c] = *terms_.begin();
  return PhaseScalar(c.inverse(), -d);
}

PhaseScalar PhaseScalar::scale_q(std::int64_t factor) const {
  PhaseScalar r;
  for (const auto& [d, c] : terms_) r.add_term(d * factor, c);
  return r;
}

PhaseScalar PhaseScalar::specialize_period(std::int64_t period) const {
  if (period < 1) throw std::invalid_argument("period must be positive");
  PhaseScalar r;
  for (const auto& [d, c] : terms_) r.add_term(0, c * Cyclotomic::root(Rational(d, period)));
  return r;
}

std::complex<double> PhaseScalar::evaluate(double angle) const {
  std::complex<double> z = 0;
  for (const auto& [d, c] : terms_) {
    z += c.evaluate() * std::polar(1.0, 2.0 * M_PI * static_cast<double>(d) * angle);
  }
  return z;
}

PhaseScalar& PhaseScalar::operator+=(const PhaseScalar& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

PhaseScalar& PhaseScalar::operator-=(const PhaseScalar& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

PhaseScalar& PhaseScalar::operator*=(const PhaseScalar& o) {
  PhaseScalar r;
  for (const auto& [d1, c1] : terms_) {
    for (const auto& [d2, c2] : o.terms_) r.add_term(d1 + d2, c1 * c2);
  }
  *this = std::move(r);
  return *this;
}

PhaseScalar PhaseScalar::operator-() const {
  PhaseScalar r;
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

bool operator==(const PhaseScalar& a, const PhaseScalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

namespace {

// r * exp(2 pi i c) with r > 0, when the value is a rational multiple of a single root of unity.
std::optional<std::pair<Rational, Rational>> as_single_root(const Cyclotomic& c) {
  const std::int64_t n = c.conductor();
  const std::int64_t order = n % 2 == 1 ? 2 * n : n;
  for (std::int64_t e = 0; e < order; ++e) {
    Rational angle(static_cast<long>(e), static_cast<unsigned long>(order));
    angle.canonicalize();
    const Cyclotomic rotated = c * Cyclotomic::root(-angle);
    if (!rotated.is_rational()) continue;
    const Rational r = rotated.coeffs().empty() ? Rational(0) : rotated.coeffs()[0];
    if (r > 0) return std::make_pair(r, angle);
  }
  return std::nullopt;
}

}  // namespace

std::vector<PhaseScalar::Term> PhaseScalar::flatten() const {
  std::vector<Term> out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Cyclotomic c = it->second.minimized();
    if (c.is_rational()) {
      out.push_back(Term{c.coeffs()[0], Rational(0), it->first});
      continue;
    }
    if (const auto single = as_single_root(c)) {
      out.push_back(Term{single->first, single->second, it->first});
      continue;
    }
    for (std::size_t p = 0; p < c.coeffs().size(); ++p) {
      if (c.coeffs()[p] == 0) continue;
      Rational angle(static_cast<long>(p), static_cast<unsigned long>(c.conductor()));
      angle.canonicalize();
      out.push_back(Term{c.coeffs()[p], angle, it->first});
    }
  }
  return out;
}

namespace {

std::string term_body(const Rational& r_abs, const Rational& c, std::int64_t d) {
  std::vector<std::string> parts;
  if (r_abs != 1 || (c == 0 && d == 0)) parts.push_back(r_abs.get_str());
  if (c != 0) parts.push_back("z(" + c.get_str() + ")");
  if (d == 1) parts.push_back("Q");
  else if (d != 0) parts.push_back("Q^" + std::to_string(d));
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
  return s;
}

}  // namespace

std::string PhaseScalar::str() const {
  const auto terms = flatten();
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const bool neg = t.r < 0;
    if (i == 0) s += neg ? "-" : "";
    else s += neg ? "-" : "+";
    s += term_body(neg ? Rational(-t.r) : t.r, t.c, t.d);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const PhaseScalar& a) { return os << a.str(); }

}  // namespace nctorus
