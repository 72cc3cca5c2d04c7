#include "nctorus/galois.hpp"

#include <future>
#include <optional>

namespace nctorus {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::string deck_label(const DeckElement& g) { return "g" + label({g.a, g.b}); }

void refuse_rational(const ThetaContext& ctx) {
  if (ctx.is_rational()) {
    throw RationalThetaRefused("Galois verification needs irrational theta; phase " + to_string(ctx) +
                               " has a forced period");
  }
}

}  // namespace

std::string label(const Bidegree& b) { return "(" + std::to_string(b.r) + "," + std::to_string(b.s) + ")"; }

CanValue can_apply(const CoveringSpec& cov, const TorusElement& left, const TorusElement& right) {
  CanValue out;
  for (const auto& g : deck_group(cov)) out.emplace(g, left * deck_act(g, right));
  return out;
}

// --- TensorExpression --------------------------------------------------------

TensorExpression::TensorExpression(const CoveringSpec& cov) : cov_(cov) {}

void TensorExpression::add(const Bidegree& beta, const TorusElement& left) {
  auto [it, inserted] = left_.try_emplace(beta, TorusElement(cov_.cover));
  it->second += left;
  if (it->second.is_zero()) left_.erase(it);
}

TensorExpression TensorExpression::simple(const CoveringSpec& cov, const TorusElement& a, const TorusElement& b) {
  TensorExpression t(cov);
  for (const auto& [beta, c] : decompose_over_invariants(cov, b)) t.add(beta, a * c);
  return t;
}

TensorExpression& TensorExpression::operator+=(const TensorExpression& o) {
  if (!(cov_.cover == o.cov_.cover) || cov_.m != o.cov_.m || cov_.n != o.cov_.n) {
    throw ContextMismatch("tensor expressions over different coverings");
  }
  for (const auto& [beta, l] : o.left_) add(beta, l);
  return *this;
}

bool operator==(const TensorExpression& a, const TensorExpression& b) {
  return a.cov_.m == b.cov_.m && a.cov_.n == b.cov_.n && a.cov_.cover == b.cov_.cover && a.left_ == b.left_;
}

std::string TensorExpression::str() const {
  if (left_.empty()) return "0";
  std::string s;
  for (const auto& [beta, l] : left_) {
    if (!s.empty()) s += " + ";
    const std::string right = TorusElement::monomial(beta, 1, cov_.cover).str();
    s += (l.support_size() > 1 ? "(" + l.str() + ")" : l.str()) + " (x) " + right;
  }
  return s;
}

TensorExpression unit_map(const CoveringSpec& cov, const TorusElement& a) {
  return TensorExpression::simple(cov, TorusElement(PhaseScalar(1), cov.cover), embed(cov, a));
}

TorusElement counit_map(const TensorExpression& t) {
  TorusElement out(t.covering().cover);
  for (const auto& [beta, l] : t.left_coeffs()) out += l * TorusElement::monomial(beta, 1, t.covering().cover);
  return out;
}

// --- exact linear algebra ----------------------------------------------------

EliminationResult eliminate(ScalarMatrix m) {
  EliminationResult res;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  PhaseScalar det(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    bool nonzero = false;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      nonzero = true;
      if (m[i][c].is_monomial()) {
        p = i;
        break;
      }
    }
    if (!nonzero) {
      det = PhaseScalar();
      continue;
    }
    if (p == rows) throw std::logic_error("elimination needs a non-unit pivot in column " + std::to_string(c));
    if (p != r) {
      std::swap(m[p], m[r]);
      det = -det;
    }
    const PhaseScalar pivot = m[r][c];
    const PhaseScalar inv = pivot.inverse();
    det *= pivot;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const PhaseScalar f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) {
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
      }
    }
    ++r;
  }
  res.rank = r;
  res.determinant = (rows == cols && r == rows) ? det : PhaseScalar();
  return res;
}

// --- certificates ------------------------------------------------------------

namespace {

CanBlock connected_block(const CoveringSpec& cov, const Bidegree& gamma) {
  CanBlock block;
  block.degree_class = label(gamma);
  const auto group = deck_group(cov);
  const auto basis = basis_over_invariants(cov);
  for (const auto& g : group) block.row_labels.push_back(deck_label(g));
  block.matrix.assign(group.size(), std::vector<PhaseScalar>(basis.size()));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Bidegree alpha = basis[col];
    const Bidegree beta{floor_mod(gamma.r - alpha.r, cov.m), floor_mod(gamma.s - alpha.s, cov.n)};
    block.col_labels.push_back(label(alpha) + "(x)" + label(beta));
    const CanValue value = can_apply(cov, TorusElement::monomial(alpha, 1, cov.cover),
                                     TorusElement::monomial(beta, 1, cov.cover));
    std::optional<Bidegree> unit;
    for (std::size_t row = 0; row < group.size(); ++row) {
      const auto parts = decompose_over_invariants(cov, value.at(group[row]));
      if (parts.size() != 1 || parts.begin()->first != gamma || parts.begin()->second.support_size() != 1) {
        throw std::logic_error("can image of a basis tensor left its degree class");
      }
      const auto& [w, scalar] = *parts.begin()->second.coeffs().begin();
      if (unit && *unit != w) throw std::logic_error("column does not factor through a single invariant unit");
      unit = w;
      block.matrix[row][col] = scalar;
    }
    block.unit_factors.push_back(*unit);
  }
  const auto elim = eliminate(block.matrix);
  block.rank = elim.rank;
  block.determinant = elim.determinant;
  return block;
}

}  // namespace

CanCertificate can_matrix(const CoveringSpec& cov) {
  refuse_rational(cov.cover);
  CanCertificate cert;
  cert.subject = "connected m=" + std::to_string(cov.m) + " n=" + std::to_string(cov.n) + " k=" + std::to_string(cov.k);
  const auto classes = basis_over_invariants(cov);
  const auto mn = static_cast<std::size_t>(cov.degree());
  cert.dimension = mn * mn;
  // blocks are independent; build them concurrently and merge in class order
  std::vector<std::future<CanBlock>> pending;
  pending.reserve(classes.size());
  for (const auto& gamma : classes) pending.push_back(std::async(std::launch::async, connected_block, cov, gamma));
  cert.verdict = true;
  for (auto& f : pending) {
    CanBlock b = f.get();
    cert.rank += b.rank;
    cert.verdict = cert.verdict && !b.determinant.is_zero();
    cert.blocks.push_back(std::move(b));
  }
  cert.verdict = cert.verdict && cert.rank == cert.dimension;
  return cert;
}

CanCertificate can_matrix_direct_sum(const std::shared_ptr<const FiniteGroup>& group) {
  const FiniteGroup& G = *group;
  const int n = G.order();
  const ThetaContext ctx;
  const auto e = idempotents(group, ctx);
  CanCertificate cert;
  cert.subject = "disconnected group=" + G.name();
  cert.dimension = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  cert.verdict = true;
  for (int k = 0; k < n; ++k) {
    CanBlock block;
    block.degree_class = "e" + std::to_string(k);
    for (int s = 0; s < n; ++s) block.row_labels.push_back("s" + std::to_string(s));
    block.matrix.assign(static_cast<std::size_t>(n), std::vector<PhaseScalar>(static_cast<std::size_t>(n)));
    // domain tensors e_g (x) e_h whose image can have an e_k component: only g = k
    for (int h = 0; h < n; ++h) {
      block.col_labels.push_back("e" + std::to_string(k) + "(x)e" + std::to_string(h));
      block.unit_factors.push_back({0, 0});
      for (int s = 0; s < n; ++s) {
        const DirectSumElement image = e[static_cast<std::size_t>(k)] * group_act(s, e[static_cast<std::size_t>(h)]);
        // coefficient of e_k over the diagonal, read off slot k
        for (int slot = 0; slot < n; ++slot) {
          if (slot != k && !image.slot(slot).is_zero()) throw std::logic_error("image leaked out of e_k B");
        }
        const TorusElement& c = image.slot(k);
        if (c.support_size() > 1 || (!c.is_zero() && c.coeffs().begin()->first != Bidegree{0, 0})) {
          throw std::logic_error("non-scalar coefficient in direct-sum can matrix");
        }
        block.matrix[static_cast<std::size_t>(s)][static_cast<std::size_t>(h)] = trace(c);
      }
    }
    const auto elim = eliminate(block.matrix);
    block.rank = elim.rank;
    block.determinant = elim.determinant;
    cert.rank += block.rank;
    cert.verdict = cert.verdict && !block.determinant.is_zero();
    cert.blocks.push_back(std::move(block));
  }
  cert.verdict = cert.verdict && cert.rank == cert.dimension;
  return cert;
}

}  // namespace nctorus
