#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nctorus/torus_element.hpp"

namespace nctorus {

/// A finite group given by its multiplication table; elements are 0..order-1.
class FiniteGroup {
 public:
  /// Validates closure, associativity, identity and inverses.
  explicit FiniteGroup(std::vector<std::vector<int>> table, std::string name = "");

  static FiniteGroup cyclic(int n);
  /// Z_{n1} x Z_{n2} x ..., element index is mixed-radix with the last factor fastest.
  static FiniteGroup product_of_cyclics(const std::vector<int>& orders);
  static FiniteGroup symmetric3();
  /// Presets: "Z<n>", "Z<a>xZ<b>...", "S3".
  static FiniteGroup parse(const std::string& spec);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int g, int h) const { return table_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
  int inverse(int g) const { return inverse_[static_cast<std::size_t>(g)]; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::string name_;
};

/// Degree of a homogeneous element of the direct sum: one bidegree per slot.
using MultiDegree = std::vector<Bidegree>;

/// Element of the |G|-fold direct sum of A_theta, slot g holding x_g.
class DirectSumElement {
 public:
  DirectSumElement(std::shared_ptr<const FiniteGroup> group, ThetaContext ctx = {});
  DirectSumElement(std::shared_ptr<const FiniteGroup> group, std::vector<TorusElement> slots);

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  const std::vector<TorusElement>& slots() const { return slots_; }
  const TorusElement& slot(int g) const { return slots_[static_cast<std::size_t>(g)]; }
  TorusElement& slot(int g) { return slots_[static_cast<std::size_t>(g)]; }
  const ThetaContext& context() const { return slots_.front().context(); }
  bool is_zero() const;

  DirectSumElement& operator+=(const DirectSumElement& o);
  DirectSumElement& operator-=(const DirectSumElement& o);
  friend DirectSumElement operator+(DirectSumElement a, const DirectSumElement& b) { return a += b; }
  friend DirectSumElement operator-(DirectSumElement a, const DirectSumElement& b) { return a -= b; }
  friend DirectSumElement operator*(const DirectSumElement& a, const DirectSumElement& b);
  friend bool operator==(const DirectSumElement& a, const DirectSumElement& b);

  std::string str() const;

 private:
  void require_same_group(const DirectSumElement& o) const;

  std::shared_ptr<const FiniteGroup> group_;
  std::vector<TorusElement> slots_;
};

DirectSumElement star(const DirectSumElement& x);

/// (h.x)_g = x_{h^-1 g}.
DirectSumElement group_act(int h, const DirectSumElement& x);
/// (h.deg)_g = deg_{h^-1 g}.
MultiDegree group_act(const FiniteGroup& group, int h, const MultiDegree& deg);

/// a -> (a, ..., a).
DirectSumElement diagonal_embed(std::shared_ptr<const FiniteGroup> group, const TorusElement& a);
bool is_invariant(const DirectSumElement& x);
/// Inverse of diagonal_embed; throws std::domain_error off the diagonal.
TorusElement diagonal_part(const DirectSumElement& x);

/// e_g: 1 in slot g, 0 elsewhere. Indexed by g.
std::vector<DirectSumElement> idempotents(const std::shared_ptr<const FiniteGroup>& group, ThetaContext ctx = {});

/// u_g = e_g * diag(u), v_g = e_g * diag(v).
DirectSumElement slot_u(const std::shared_ptr<const FiniteGroup>& group, int g, ThetaContext ctx = {});
DirectSumElement slot_v(const std::shared_ptr<const FiniteGroup>& group, int g, ThetaContext ctx = {});

/// sum_h h.x, the unnormalized averaging map.
DirectSumElement orbit_sum(const DirectSumElement& x);

/// Splits x into pieces homogeneous for the slotwise torus action. A piece's
/// degree carries the monomial's bidegree in its slot and (0,0) elsewhere;
/// constants of all slots share the zero degree.
std::map<MultiDegree, DirectSumElement> homogeneous_split(const DirectSumElement& x);
bool is_homogeneous(const DirectSumElement& x, const MultiDegree& deg);
MultiDegree operator+(const MultiDegree& a, const MultiDegree& b);

struct DecompositionCheck {
  std::string identity;
  std::size_t instances = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

struct DecompositionReport {
  std::string group;
  std::int64_t degree_bound = 0;
  std::vector<DecompositionCheck> checks;
  bool passed() const;
};

/// Checks the decomposition B = sum_g e_g B and the slot relations on all
/// monomials with |i|, |j| <= degree_bound.
DecompositionReport verify_decomposition(const std::shared_ptr<const FiniteGroup>& group, std::int64_t degree_bound);

}  // namespace nctorus
