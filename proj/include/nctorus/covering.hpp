#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nctorus/torus_element.hpp"

namespace nctorus {

/// The connected covering A_theta -> A_theta' with u -> u'^m, v -> v'^n and
/// theta' = (theta + k) / (mn). Deck group Z_m x Z_n.
struct CoveringSpec {
  std::int64_t m = 1;
  std::int64_t n = 1;
  std::int64_t k = 0;
  ThetaContext base;
  ThetaContext cover;

  std::int64_t degree() const { return m * n; }
  /// Numeric theta' for a numeric root theta.
  double theta_prime(double theta) const { return cover.angle(theta); }
};

/// Throws std::invalid_argument unless m, n >= 1 and 0 <= k < mn.
CoveringSpec make_covering(std::int64_t m, std::int64_t n, std::int64_t k,
                           ThetaContext base = ThetaContext::base());

/// (a mod m, b mod n): acts by u' -> zeta_m^a u', v' -> zeta_n^b v'.
struct DeckElement {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t m = 1;
  std::int64_t n = 1;

  static DeckElement make(std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t n);
  friend DeckElement operator+(const DeckElement& x, const DeckElement& y);
  friend bool operator==(const DeckElement&, const DeckElement&) = default;
  friend auto operator<=>(const DeckElement&, const DeckElement&) = default;
};

/// All mn deck elements, ordered by (a, b).
std::vector<DeckElement> deck_group(const CoveringSpec& cov);
DeckElement deck_element(const CoveringSpec& cov, std::int64_t a, std::int64_t b);

TorusElement embed(const CoveringSpec& cov, const TorusElement& a);

TorusElement deck_act(const DeckElement& g, const TorusElement& x);

/// (1/|G|) sum_g g.x : the conditional expectation onto the invariants.
TorusElement fixed_point_project(const CoveringSpec& cov, const TorusElement& x);
/// sum_g g.x without normalization.
TorusElement fixed_point_sum(const CoveringSpec& cov, const TorusElement& x);

/// {(i, j) : 0 <= i < m, 0 <= j < n}, ordered by (i, j).
std::vector<Bidegree> basis_over_invariants(const CoveringSpec& cov);

/// x = sum_beta c_beta * u'^i v'^j with every c_beta invariant. Returned
/// coefficients live over the cover phase; see restrict_to_base.
std::map<Bidegree, TorusElement> decompose_over_invariants(const CoveringSpec& cov, const TorusElement& x);
TorusElement reassemble(const CoveringSpec& cov, const std::map<Bidegree, TorusElement>& parts);

/// Inverse of embed on its image. Throws std::domain_error when x is not
/// invariant or carries a cover-phase power not divisible by mn.
TorusElement restrict_to_base(const CoveringSpec& cov, const TorusElement& x);

enum class CoveringKind { connected, disconnected, mixed };

std::string to_string(CoveringKind kind);

/// A degree-d covering: a disconnected factor of d1 sheets composed with the
/// connected (m, n, k) covering, d1 * m * n = d.
struct CoveringDescriptor {
  CoveringKind kind = CoveringKind::connected;
  std::int64_t m = 1;
  std::int64_t n = 1;
  std::int64_t k = 0;
  std::int64_t d1 = 1;

  friend bool operator==(const CoveringDescriptor&, const CoveringDescriptor&) = default;
};

/// Ordered by d1 ascending, then m, then k.
std::vector<CoveringDescriptor> classify_coverings(std::int64_t d);

}  // namespace nctorus
