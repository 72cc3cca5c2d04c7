#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nctorus/covering.hpp"
#include "nctorus/direct_sum.hpp"

namespace nctorus {

/// Raised when Galois verification is requested over a rational-theta phase.
class RationalThetaRefused : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// can(a1 (x) a2) = (g -> a1 * g.a2).
using CanValue = std::map<DeckElement, TorusElement>;

CanValue can_apply(const CoveringSpec& cov, const TorusElement& left, const TorusElement& right);

/// An element of A (x)_{A^G} A kept in right-reduced form sum_beta L_beta (x) u'^i v'^j,
/// beta = (i, j) ranging over basis_over_invariants.
class TensorExpression {
 public:
  explicit TensorExpression(const CoveringSpec& cov);
  /// Reduces a (x) b using a*x (x) b = a (x) x*b for invariant x.
  static TensorExpression simple(const CoveringSpec& cov, const TorusElement& a, const TorusElement& b);

  const CoveringSpec& covering() const { return cov_; }
  const std::map<Bidegree, TorusElement>& left_coeffs() const { return left_; }

  TensorExpression& operator+=(const TensorExpression& o);
  friend TensorExpression operator+(TensorExpression a, const TensorExpression& b) { return a += b; }
  friend bool operator==(const TensorExpression& a, const TensorExpression& b);

  /// e.g. "(u^2 + v^3) (x) 1 + u (x) u"
  std::string str() const;

 private:
  void add(const Bidegree& beta, const TorusElement& left);

  CoveringSpec cov_;
  std::map<Bidegree, TorusElement> left_;
};

/// eta(a) = 1 (x) embed(a), reduced.
TensorExpression unit_map(const CoveringSpec& cov, const TorusElement& a);
/// epsilon(a (x) b) = a * b.
TorusElement counit_map(const TensorExpression& t);

using ScalarMatrix = std::vector<std::vector<PhaseScalar>>;

struct EliminationResult {
  std::size_t rank = 0;
  PhaseScalar determinant;  // zero unless the matrix is square of full rank
};

/// Exact Gaussian elimination over R. Every pivot must be a unit c*Q^d;
/// throws std::logic_error if a column has nonzero entries but no unit.
EliminationResult eliminate(ScalarMatrix m);

/// One diagonal block of the can matrix: matrix(row, col) * unit_factor(col)
/// is the coefficient of the row's basis vector in can(col's tensor).
struct CanBlock {
  std::string degree_class;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  ScalarMatrix matrix;
  /// Invariant monomial (cover bidegree) multiplying column col on the right.
  std::vector<Bidegree> unit_factors;
  PhaseScalar determinant;
  std::size_t rank = 0;

  friend bool operator==(const CanBlock&, const CanBlock&) = default;
};

struct CanCertificate {
  std::string subject;
  std::vector<CanBlock> blocks;
  std::size_t dimension = 0;
  std::size_t rank = 0;
  bool verdict = false;

  friend bool operator==(const CanCertificate&, const CanCertificate&) = default;
};

/// Certifies that can is bijective for the connected covering: (mn)^2 x (mn)^2
/// over A^G, split into mn blocks by total degree class.
CanCertificate can_matrix(const CoveringSpec& cov);

/// Same for the direct sum over the diagonal, tensor basis e_g (x) e_h.
CanCertificate can_matrix_direct_sum(const std::shared_ptr<const FiniteGroup>& group);

std::string label(const Bidegree& b);

}  // namespace nctorus
