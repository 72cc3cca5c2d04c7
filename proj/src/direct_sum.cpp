#include "nctorus/direct_sum.hpp"

#include <algorithm>
#include <array>
#include <regex>
#include <stdexcept>

namespace nctorus {

// --- FiniteGroup -------------------------------------------------------------

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
  const int n = order();
  if (n == 0) throw std::invalid_argument("group must be nonempty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("multiplication table is not square");
    for (int x : row) {
      if (x < 0 || x >= n) throw std::invalid_argument("multiplication table entry out of range");
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("multiplication table has no identity");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw std::invalid_argument("multiplication is not associative");
      }
    }
  }
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (mul(g, h) == identity_ && mul(h, g) == identity_) inverse_[static_cast<std::size_t>(g)] = h;
    }
    if (inverse_[static_cast<std::size_t>(g)] < 0) throw std::invalid_argument("element without inverse");
  }
  if (name_.empty()) name_ = "G" + std::to_string(n);
}

FiniteGroup FiniteGroup::cyclic(int n) { return product_of_cyclics({n}); }

FiniteGroup FiniteGroup::product_of_cyclics(const std::vector<int>& orders) {
  if (orders.empty()) throw std::invalid_argument("need at least one cyclic factor");
  int n = 1;
  std::string name;
  for (int o : orders) {
    if (o < 1) throw std::invalid_argument("cyclic order must be positive");
    n *= o;
    name += (name.empty() ? "Z" : "xZ") + std::to_string(o);
  }
  auto digits = [&](int g) {
    std::vector<int> d(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      d[i] = g % orders[i];
      g /= orders[i];
    }
    return d;
  };
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      const auto dg = digits(g);
      const auto dh = digits(h);
      int idx = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + (dg[i] + dh[i]) % orders[i];
      table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] = idx;
    }
  }
  return FiniteGroup(std::move(table), name);
}

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int g = 0; g < 6; ++g) {
    for (int h = 0; h < 6; ++h) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = perms[static_cast<std::size_t>(g)][static_cast<std::size_t>(perms[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)])];
      table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] = index(c);
    }
  }
  return FiniteGroup(std::move(table), "S3");
}

FiniteGroup FiniteGroup::parse(const std::string& spec) {
  if (spec == "S3") return symmetric3();
  static const std::regex factor_re(R"(Z(\d+))");
  static const std::regex product_re(R"(Z\d+(xZ\d+)*)");
  if (!std::regex_match(spec, product_re)) throw std::invalid_argument("unknown group spec '" + spec + "'");
  std::vector<int> orders;
  for (auto it = std::sregex_iterator(spec.begin(), spec.end(), factor_re); it != std::sregex_iterator(); ++it) {
    orders.push_back(std::stoi((*it)[1].str()));
  }
  return product_of_cyclics(orders);
}

// --- DirectSumElement --------------------------------------------------------

DirectSumElement::DirectSumElement(std::shared_ptr<const FiniteGroup> group, ThetaContext ctx)
    : group_(std::move(group)), slots_(static_cast<std::size_t>(group_->order()), TorusElement(ctx)) {}

DirectSumElement::DirectSumElement(std::shared_ptr<const FiniteGroup> group, std::vector<TorusElement> slots)
    : group_(std::move(group)), slots_(std::move(slots)) {
  if (static_cast<int>(slots_.size()) != group_->order()) {
    throw std::invalid_argument("direct sum needs one slot per group element");
  }
  for (const auto& s : slots_) {
    if (!(s.context() == slots_.front().context())) throw ContextMismatch("direct sum slots over different phases");
  }
}

void DirectSumElement::require_same_group(const DirectSumElement& o) const {
  if (group_ != o.group_ && group_->table() != o.group_->table()) {
    throw std::invalid_argument("direct sum elements over different groups");
  }
}

bool DirectSumElement::is_zero() const {
  return std::all_of(slots_.begin(), slots_.end(), [](const TorusElement& s) { return s.is_zero(); });
}

DirectSumElement& DirectSumElement::operator+=(const DirectSumElement& o) {
  require_same_group(o);
  for (std::size_t i = 0; i < slots_.size(); ++i) slots_[i] += o.slots_[i];
  return *this;
}

DirectSumElement& DirectSumElement::operator-=(const DirectSumElement& o) {
  require_same_group(o);
  for (std::size_t i = 0; i < slots_.size(); ++i) slots_[i] -= o.slots_[i];
  return *this;
}

DirectSumElement operator*(const DirectSumElement& a, const DirectSumElement& b) {
  a.require_same_group(b);
  DirectSumElement r = a;
  for (std::size_t i = 0; i < r.slots_.size(); ++i) r.slots_[i] = a.slots_[i] * b.slots_[i];
  return r;
}

bool operator==(const DirectSumElement& a, const DirectSumElement& b) { return a.slots_ == b.slots_; }

std::string DirectSumElement::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < slots_.size(); ++i) s += (i ? ", " : "") + slots_[i].str();
  return s + ")";
}

DirectSumElement star(const DirectSumElement& x) {
  DirectSumElement r = x;
  for (int g = 0; g < x.group().order(); ++g) r.slot(g) = star(x.slot(g));
  return r;
}

DirectSumElement group_act(int h, const DirectSumElement& x) {
  const FiniteGroup& G = x.group();
  DirectSumElement r = x;
  const int hinv = G.inverse(h);
  for (int g = 0; g < G.order(); ++g) r.slot(g) = x.slot(G.mul(hinv, g));
  return r;
}

MultiDegree group_act(const FiniteGroup& group, int h, const MultiDegree& deg) {
  MultiDegree r(deg.size());
  const int hinv = group.inverse(h);
  for (int g = 0; g < group.order(); ++g) r[static_cast<std::size_t>(g)] = deg[static_cast<std::size_t>(group.mul(hinv, g))];
  return r;
}

DirectSumElement diagonal_embed(std::shared_ptr<const FiniteGroup> group, const TorusElement& a) {
  const auto n = static_cast<std::size_t>(group->order());
  return DirectSumElement(std::move(group), std::vector<TorusElement>(n, a));
}

bool is_invariant(const DirectSumElement& x) {
  for (int h = 0; h < x.group().order(); ++h) {
    if (!(group_act(h, x) == x)) return false;
  }
  return true;
}

TorusElement diagonal_part(const DirectSumElement& x) {
  for (const auto& s : x.slots()) {
    if (!(s == x.slots().front())) throw std::domain_error("element is not on the diagonal");
  }
  return x.slots().front();
}

std::vector<DirectSumElement> idempotents(const std::shared_ptr<const FiniteGroup>& group, ThetaContext ctx) {
  std::vector<DirectSumElement> es;
  for (int g = 0; g < group->order(); ++g) {
    DirectSumElement e(group, ctx);
    e.slot(g) = TorusElement(PhaseScalar(1), ctx);
    es.push_back(std::move(e));
  }
  return es;
}

DirectSumElement slot_u(const std::shared_ptr<const FiniteGroup>& group, int g, ThetaContext ctx) {
  return idempotents(group, ctx)[static_cast<std::size_t>(g)] * diagonal_embed(group, TorusElement::u(ctx));
}

DirectSumElement slot_v(const std::shared_ptr<const FiniteGroup>& group, int g, ThetaContext ctx) {
  return idempotents(group, ctx)[static_cast<std::size_t>(g)] * diagonal_embed(group, TorusElement::v(ctx));
}

DirectSumElement orbit_sum(const DirectSumElement& x) {
  DirectSumElement r(x.group_ptr(), x.context());
  for (int h = 0; h < x.group().order(); ++h) r += group_act(h, x);
  return r;
}

MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multidegrees of different length");
  MultiDegree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::map<MultiDegree, DirectSumElement> homogeneous_split(const DirectSumElement& x) {
  std::map<MultiDegree, DirectSumElement> pieces;
  const int n = x.group().order();
  for (int g = 0; g < n; ++g) {
    for (const auto& [d, c] : x.slot(g).coeffs()) {
      MultiDegree deg(static_cast<std::size_t>(n));
      deg[static_cast<std::size_t>(g)] = d;
      auto [it, inserted] = pieces.try_emplace(deg, x.group_ptr(), x.context());
      it->second.slot(g).add_term(d, c);
    }
  }
  return pieces;
}

bool is_homogeneous(const DirectSumElement& x, const MultiDegree& deg) {
  if (static_cast<int>(deg.size()) != x.group().order()) return false;
  for (int g = 0; g < x.group().order(); ++g) {
    for (const auto& [d, c] : x.slot(g).coeffs()) {
      if (d != deg[static_cast<std::size_t>(g)]) return false;
    }
  }
  return true;
}

bool DecompositionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const DecompositionCheck& c) { return c.passed(); });
}

namespace {

class Checker {
 public:
  explicit Checker(std::string name) { check_.identity = std::move(name); }
  void expect(bool ok, const std::string& what) {
    ++check_.instances;
    if (!ok) check_.violations.push_back(what);
  }
  DecompositionCheck take() { return std::move(check_); }

 private:
  DecompositionCheck check_;
};

std::string gname(int g) { return "g" + std::to_string(g); }

}  // namespace

DecompositionReport verify_decomposition(const std::shared_ptr<const FiniteGroup>& group, std::int64_t degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be >= 1");
  const FiniteGroup& G = *group;
  const int n = G.order();
  const ThetaContext ctx;
  DecompositionReport report;
  report.group = G.name();
  report.degree_bound = degree_bound;

  const auto e = idempotents(group, ctx);
  const DirectSumElement one = diagonal_embed(group, TorusElement(PhaseScalar(1), ctx));
  std::vector<DirectSumElement> us, vs;
  for (int g = 0; g < n; ++g) {
    us.push_back(slot_u(group, g, ctx));
    vs.push_back(slot_v(group, g, ctx));
  }
  std::vector<TorusElement> monomials;
  for (std::int64_t i = -degree_bound; i <= degree_bound; ++i) {
    for (std::int64_t j = -degree_bound; j <= degree_bound; ++j) monomials.push_back(TorusElement::monomial({i, j}, 1, ctx));
  }

  {
    Checker c("idempotents: e_g^2 = e_g = e_g^*, e_g e_h = 0 (g != h), sum e_g = 1");
    DirectSumElement sum(group, ctx);
    for (int g = 0; g < n; ++g) {
      c.expect(e[g] * e[g] == e[g] && star(e[g]) == e[g], "e_" + gname(g) + " not a projection");
      for (int h = 0; h < n; ++h) {
        if (h != g) c.expect((e[g] * e[h]).is_zero(), "e_" + gname(g) + " e_" + gname(h) + " != 0");
      }
      sum += e[g];
    }
    c.expect(sum == one, "sum of idempotents != 1");
    report.checks.push_back(c.take());
  }
  {
    Checker c("idempotent action: e_{g1 g2} = g1 e_{g2}");
    for (int g1 = 0; g1 < n; ++g1) {
      for (int g2 = 0; g2 < n; ++g2) {
        c.expect(group_act(g1, e[g2]) == e[G.mul(g1, g2)], gname(g1) + " . e_" + gname(g2));
      }
    }
    report.checks.push_back(c.take());
  }
  {
    Checker c("e_u = u_g and u_g u_g^* = e_g");
    const auto du = diagonal_embed(group, TorusElement::u(ctx));
    const auto dv = diagonal_embed(group, TorusElement::v(ctx));
    for (int g = 0; g < n; ++g) {
      c.expect(e[g] * du == us[g] && e[g] * dv == vs[g], "e_g u != u_g for " + gname(g));
      c.expect(us[g] * star(us[g]) == e[g] && star(us[g]) * us[g] == e[g], "u_" + gname(g) + " not a partial unitary");
      c.expect(vs[g] * star(vs[g]) == e[g] && star(vs[g]) * vs[g] == e[g], "v_" + gname(g) + " not a partial unitary");
    }
    report.checks.push_back(c.take());
  }
  {
    Checker c("summand relation: u_g v_g = Q v_g u_g");
    const PhaseScalar q = PhaseScalar::q_power(1);
    for (int g = 0; g < n; ++g) {
      DirectSumElement rhs = vs[g] * us[g];
      for (int h = 0; h < n; ++h) rhs.slot(h) = q * rhs.slot(h);
      c.expect(us[g] * vs[g] == rhs, "relation fails in slot " + gname(g));
    }
    report.checks.push_back(c.take());
  }
  {
    Checker c("(u_g1 + ... + u_gn)(u_g1^* + ... + u_gn^*) = 1, same for v");
    DirectSumElement su(group, ctx), sv(group, ctx);
    for (int g = 0; g < n; ++g) {
      su += us[g];
      sv += vs[g];
    }
    c.expect(su * star(su) == one, "u sum");
    c.expect(sv * star(sv) == one, "v sum");
    c.expect(orbit_sum(us[G.identity()]) == diagonal_embed(group, TorusElement::u(ctx)), "p(u_g1) != u");
    report.checks.push_back(c.take());
  }
  {
    Checker c("orthogonality of u_g, u_g^*, v_g, v_g^* across distinct slots");
    for (int g1 = 0; g1 < n; ++g1) {
      for (int g2 = 0; g2 < n; ++g2) {
        if (g1 == g2) continue;
        const std::array<const DirectSumElement*, 2> a{&us[g1], &vs[g1]};
        const std::array<const DirectSumElement*, 2> b{&us[g2], &vs[g2]};
        for (const auto* x : a) {
          for (const auto* y : b) {
            for (int sx = 0; sx < 2; ++sx) {
              for (int sy = 0; sy < 2; ++sy) {
                const DirectSumElement lhs = sx ? star(*x) : *x;
                const DirectSumElement rhs = sy ? star(*y) : *y;
                c.expect((lhs * rhs).is_zero(), "nonzero product between " + gname(g1) + " and " + gname(g2));
              }
            }
          }
        }
      }
    }
    report.checks.push_back(c.take());
  }
  {
    Checker c("summands are independent: e_h (e_g B) = 0 for h != g");
    for (const auto& m : monomials) {
      const auto dm = diagonal_embed(group, m);
      for (int g = 0; g < n; ++g) {
        const auto piece = e[g] * dm;
        for (int h = 0; h < n; ++h) {
          if (h != g) c.expect((e[h] * piece).is_zero(), "overlap at " + m.str());
        }
      }
    }
    report.checks.push_back(c.take());
  }
  {
    Checker c("summands span: sum_g e_g x = x");
    for (std::size_t idx = 0; idx < monomials.size(); ++idx) {
      std::vector<TorusElement> slots;
      for (int g = 0; g < n; ++g) slots.push_back(monomials[(idx + static_cast<std::size_t>(g)) % monomials.size()]);
      const DirectSumElement x(group, slots);
      DirectSumElement sum(group, ctx);
      for (int g = 0; g < n; ++g) sum += e[g] * x;
      c.expect(sum == x, "span fails at " + x.str());
    }
    report.checks.push_back(c.take());
  }
  {
    Checker c("A_theta -> e_g B, a -> e_g (a, ..., a) is a *-homomorphism");
    for (const auto& a : monomials) {
      for (const auto& b : monomials) {
        const TorusElement ab = a * b;
        for (int g = 0; g < n; ++g) {
          const auto ea = e[g] * diagonal_embed(group, a);
          const auto eb = e[g] * diagonal_embed(group, b);
          if (!(ea * eb == e[g] * diagonal_embed(group, ab))) c.expect(false, "product " + a.str() + " * " + b.str());
          else c.expect(true, "");
        }
      }
      for (int g = 0; g < n; ++g) {
        c.expect(star(e[g] * diagonal_embed(group, a)) == e[g] * diagonal_embed(group, star(a)), "star " + a.str());
      }
    }
    report.checks.push_back(c.take());
  }
  {
    Checker c("diagonal is the invariant subalgebra");
    for (const auto& m : monomials) {
      c.expect(is_invariant(diagonal_embed(group, m)), "diagonal not invariant at " + m.str());
      for (int g = 0; g < n && n > 1; ++g) c.expect(!is_invariant(e[g] * diagonal_embed(group, m)), "slot piece invariant");
    }
    report.checks.push_back(c.take());
  }
  return report;
}

}  // namespace nctorus
