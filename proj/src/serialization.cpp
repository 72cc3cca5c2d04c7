#include "nctorus/serialization.hpp"

#include <sstream>

namespace nctorus {

namespace {

Rational rational_from(const json& j) {
  Rational r(j.get<std::string>());
  r.canonicalize();
  return r;
}

CoveringKind kind_from(const std::string& s) {
  if (s == "connected") return CoveringKind::connected;
  if (s == "disconnected") return CoveringKind::disconnected;
  if (s == "mixed") return CoveringKind::mixed;
  throw std::invalid_argument("unknown covering type '" + s + "'");
}

}  // namespace

json to_json(const PhaseScalar& a) {
  json out = json::array();
  for (const auto& t : a.flatten()) out.push_back({{"r", t.r.get_str()}, {"c", t.c.get_str()}, {"d", t.d}});
  return out;
}

PhaseScalar scalar_from_json(const json& j) {
  PhaseScalar a;
  for (const auto& t : j) a += PhaseScalar::term(rational_from(t.at("r")), rational_from(t.at("c")), t.at("d").get<std::int64_t>());
  return a;
}

json to_json(const ThetaContext& ctx) {
  return {{"scale", ctx.scale}, {"shift", ctx.shift}, {"period", ctx.forced_period}};
}

ThetaContext context_from_json(const json& j) {
  ThetaContext c;
  c.scale = j.at("scale").get<std::int64_t>();
  c.shift = j.at("shift").get<std::int64_t>();
  c.forced_period = j.value("period", std::int64_t{0});
  return c;
}

json to_json(const TorusElement& a) {
  json terms = json::array();
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) {
    terms.push_back({{"i", it->first.r}, {"j", it->first.s}, {"coeff", to_json(it->second)}});
  }
  return {{"context", to_json(a.context())}, {"terms", terms}};
}

TorusElement element_from_json(const json& j) {
  TorusElement a(context_from_json(j.at("context")));
  for (const auto& t : j.at("terms")) {
    a.add_term({t.at("i").get<std::int64_t>(), t.at("j").get<std::int64_t>()}, scalar_from_json(t.at("coeff")));
  }
  return a;
}

json to_json(const CoveringDescriptor& d) {
  return {{"type", to_string(d.kind)}, {"m", d.m}, {"n", d.n}, {"k", d.k}, {"d1", d.d1}};
}

CoveringDescriptor descriptor_from_json(const json& j) {
  CoveringDescriptor d;
  d.kind = kind_from(j.at("type").get<std::string>());
  d.m = j.at("m").get<std::int64_t>();
  d.n = j.at("n").get<std::int64_t>();
  d.k = j.at("k").get<std::int64_t>();
  d.d1 = j.at("d1").get<std::int64_t>();
  return d;
}

std::vector<json> certificate_records(const CanCertificate& cert) {
  std::vector<json> out;
  out.push_back({{"record", "certificate"},
                 {"subject", cert.subject},
                 {"dimension", cert.dimension},
                 {"rank", cert.rank},
                 {"verdict", cert.verdict},
                 {"blocks", cert.blocks.size()}});
  for (const auto& b : cert.blocks) {
    json matrix = json::array();
    for (const auto& row : b.matrix) {
      json r = json::array();
      for (const auto& x : row) r.push_back(to_json(x));
      matrix.push_back(std::move(r));
    }
    json units = json::array();
    for (const auto& w : b.unit_factors) units.push_back({w.r, w.s});
    out.push_back({{"record", "block"},
                   {"class", b.degree_class},
                   {"rows", b.row_labels},
                   {"cols", b.col_labels},
                   {"size", b.matrix.size()},
                   {"matrix", std::move(matrix)},
                   {"unit_factors", std::move(units)},
                   {"rank", b.rank},
                   {"determinant", to_json(b.determinant)},
                   {"determinant_text", b.determinant.str()}});
  }
  return out;
}

CanCertificate certificate_from_records(const std::vector<json>& records) {
  if (records.empty() || records.front().at("record") != "certificate") {
    throw std::invalid_argument("certificate stream must start with a certificate record");
  }
  const json& head = records.front();
  CanCertificate cert;
  cert.subject = head.at("subject").get<std::string>();
  cert.dimension = head.at("dimension").get<std::size_t>();
  cert.rank = head.at("rank").get<std::size_t>();
  cert.verdict = head.at("verdict").get<bool>();
  const auto count = head.at("blocks").get<std::size_t>();
  if (records.size() != count + 1) throw std::invalid_argument("certificate block count mismatch");
  for (std::size_t i = 1; i < records.size(); ++i) {
    const json& r = records[i];
    if (r.at("record") != "block") throw std::invalid_argument("expected a block record");
    CanBlock b;
    b.degree_class = r.at("class").get<std::string>();
    b.row_labels = r.at("rows").get<std::vector<std::string>>();
    b.col_labels = r.at("cols").get<std::vector<std::string>>();
    for (const auto& row : r.at("matrix")) {
      std::vector<PhaseScalar> out;
      for (const auto& x : row) out.push_back(scalar_from_json(x));
      b.matrix.push_back(std::move(out));
    }
    for (const auto& w : r.at("unit_factors")) b.unit_factors.push_back({w.at(0).get<std::int64_t>(), w.at(1).get<std::int64_t>()});
    b.rank = r.at("rank").get<std::size_t>();
    b.determinant = scalar_from_json(r.at("determinant"));
    cert.blocks.push_back(std::move(b));
  }
  return cert;
}

std::string render_text(const CanCertificate& cert) {
  std::ostringstream out;
  out << "certificate: " << cert.subject << "\n";
  if (cert.subject.starts_with("connected")) out << "  Q denotes the cover phase exp(2 pi i theta')\n";
  out << "  dimension " << cert.dimension << ", rank " << cert.rank << ", " << cert.blocks.size() << " blocks\n";
  for (const auto& b : cert.blocks) {
    out << "  block " << b.degree_class << "  " << b.matrix.size() << "x" << (b.matrix.empty() ? 0 : b.matrix[0].size())
        << "  rank " << b.rank << "  det = " << b.determinant.str() << "\n";
  }
  out << "verdict: " << (cert.verdict ? "can is an isomorphism" : "can is NOT an isomorphism") << "\n";
  return out.str();
}

std::string render_text(const CoveringDescriptor& d) {
  std::ostringstream out;
  out << to_string(d.kind) << " d1=" << d.d1 << " m=" << d.m << " n=" << d.n << " k=" << d.k;
  if (d.m * d.n > 1) out << "  theta' = (theta + " << d.k << ")/" << d.m * d.n;
  return out.str();
}

std::string render_text(const DecompositionReport& report) {
  std::ostringstream out;
  out << "decomposition check: group " << report.group << ", degree bound " << report.degree_bound << "\n";
  for (const auto& c : report.checks) {
    out << "  [" << (c.passed() ? "ok" : "FAIL") << "] " << c.identity << " (" << c.instances << " instances)\n";
    for (const auto& v : c.violations) out << "      " << v << "\n";
  }
  return out.str();
}

}  // namespace nctorus
