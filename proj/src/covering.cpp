#include "nctorus/covering.hpp"

#include <stdexcept>

namespace nctorus {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t n) { return a - n * floor_div(a, n); }

void require_cover(const CoveringSpec& cov, const TorusElement& x) {
  if (!(x.context() == cov.cover)) {
    throw ContextMismatch("element is not over the covering phase " + to_string(cov.cover));
  }
}

}  // namespace

CoveringSpec make_covering(std::int64_t m, std::int64_t n, std::int64_t k, ThetaContext base) {
  if (m < 1 || n < 1) throw std::invalid_argument("covering needs m, n >= 1");
  if (k < 0 || k >= m * n) {
    throw std::invalid_argument("k = " + std::to_string(k) + " outside [0, " + std::to_string(m * n) + ")");
  }
  CoveringSpec c;
  c.m = m;
  c.n = n;
  c.k = k;
  c.base = base;
  c.cover = base.cover(m, n, k);
  return c;
}

DeckElement DeckElement::make(std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t n) {
  return {floor_mod(a, m), floor_mod(b, n), m, n};
}

DeckElement operator+(const DeckElement& x, const DeckElement& y) {
  if (x.m != y.m || x.n != y.n) throw std::invalid_argument("deck elements from different groups");
  return DeckElement::make(x.a + y.a, x.b + y.b, x.m, x.n);
}

std::vector<DeckElement> deck_group(const CoveringSpec& cov) {
  std::vector<DeckElement> g;
  g.reserve(static_cast<std::size_t>(cov.degree()));
  for (std::int64_t a = 0; a < cov.m; ++a) {
    for (std::int64_t b = 0; b < cov.n; ++b) g.push_back({a, b, cov.m, cov.n});
  }
  return g;
}

DeckElement deck_element(const CoveringSpec& cov, std::int64_t a, std::int64_t b) {
  return DeckElement::make(a, b, cov.m, cov.n);
}

TorusElement embed(const CoveringSpec& cov, const TorusElement& a) {
  if (!(a.context() == cov.base)) throw ContextMismatch("element is not over the base phase " + to_string(cov.base));
  TorusElement r(cov.cover);
  for (const auto& [d, c] : a.coeffs()) r.add_term({cov.m * d.r, cov.n * d.s}, c.scale_q(cov.degree()));
  return r;
}

TorusElement deck_act(const DeckElement& g, const TorusElement& x) {
  if (g.a == 0 && g.b == 0) return x;
  return torus_act(x, Rational(static_cast<long>(g.a), static_cast<unsigned long>(g.m)),
                   Rational(static_cast<long>(g.b), static_cast<unsigned long>(g.n)));
}

TorusElement fixed_point_sum(const CoveringSpec& cov, const TorusElement& x) {
  require_cover(cov, x);
  TorusElement sum(cov.cover);
  for (const auto& g : deck_group(cov)) sum += deck_act(g, x);
  return sum;
}

TorusElement fixed_point_project(const CoveringSpec& cov, const TorusElement& x) {
  return PhaseScalar(Rational(1, static_cast<unsigned long>(cov.degree()))) * fixed_point_sum(cov, x);
}

std::vector<Bidegree> basis_over_invariants(const CoveringSpec& cov) {
  std::vector<Bidegree> b;
  for (std::int64_t i = 0; i < cov.m; ++i) {
    for (std::int64_t j = 0; j < cov.n; ++j) b.push_back({i, j});
  }
  return b;
}

std::map<Bidegree, TorusElement> decompose_over_invariants(const CoveringSpec& cov, const TorusElement& x) {
  require_cover(cov, x);
  std::map<Bidegree, TorusElement> parts;
  for (const auto& [d, c] : x.coeffs()) {
    const std::int64_t q = floor_div(d.r, cov.m);
    const std::int64_t r = d.r - q * cov.m;
    const std::int64_t p = floor_div(d.s, cov.n);
    const std::int64_t s = d.s - p * cov.n;
    // u'^{mq+r} v'^{np+s} = u'^{mq} (u'^r v'^{np}) v'^s = Q'^{r*np} u'^{mq} v'^{np} u'^r v'^s
    auto [it, inserted] = parts.try_emplace(Bidegree{r, s}, TorusElement(cov.cover));
    it->second.add_term({q * cov.m, p * cov.n}, c * PhaseScalar::q_power(r * p * cov.n));
  }
  for (auto it = parts.begin(); it != parts.end();) {
    it = it->second.is_zero() ? parts.erase(it) : std::next(it);
  }
  return parts;
}

TorusElement reassemble(const CoveringSpec& cov, const std::map<Bidegree, TorusElement>& parts) {
  TorusElement x(cov.cover);
  for (const auto& [beta, c] : parts) x += c * TorusElement::monomial(beta, 1, cov.cover);
  return x;
}

TorusElement restrict_to_base(const CoveringSpec& cov, const TorusElement& x) {
  require_cover(cov, x);
  TorusElement r(cov.base);
  const std::int64_t mn = cov.degree();
  for (const auto& [d, c] : x.coeffs()) {
    if (floor_mod(d.r, cov.m) != 0 || floor_mod(d.s, cov.n) != 0) {
      throw std::domain_error("element is not deck-invariant");
    }
    PhaseScalar base_c;
    for (const auto& [e, z] : c.terms()) {
      if (floor_mod(e, mn) != 0) throw std::domain_error("coefficient is not a base-phase scalar");
      base_c += PhaseScalar(z, e / mn);
    }
    r.add_term({d.r / cov.m, d.s / cov.n}, base_c);
  }
  return r;
}

std::string to_string(CoveringKind kind) {
  switch (kind) {
    case CoveringKind::connected: return "connected";
    case CoveringKind::disconnected: return "disconnected";
    case CoveringKind::mixed: return "mixed";
  }
  return "?";
}

std::vector<CoveringDescriptor> classify_coverings(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("covering degree must be positive");
  std::vector<CoveringDescriptor> out;
  for (std::int64_t d1 = 1; d1 <= d; ++d1) {
    if (d % d1 != 0) continue;
    const std::int64_t mn = d / d1;
    for (std::int64_t m = 1; m <= mn; ++m) {
      if (mn % m != 0) continue;
      for (std::int64_t k = 0; k < mn; ++k) {
        CoveringKind kind = CoveringKind::connected;
        if (d1 > 1) kind = mn > 1 ? CoveringKind::mixed : CoveringKind::disconnected;
        out.push_back({kind, m, mn / m, k, d1});
      }
    }
  }
  return out;
}

}  // namespace nctorus
