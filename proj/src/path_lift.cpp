#include "nctorus/path_lift.hpp"

#include <iomanip>
#include <regex>
#include <sstream>

namespace nctorus {

namespace {

const std::regex& exact_number() {
  static const std::regex re(R"(-?\d+(/\d+)?)");
  return re;
}

template <class F>
void for_each_pair(const std::string& text, F&& f) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> b) || (ls >> extra)) {
      throw std::invalid_argument("path line " + std::to_string(lineno) + ": expected two angles");
    }
    f(a, b, lineno);
  }
}

Rational parse_rational(const std::string& s, std::size_t lineno) {
  if (!std::regex_match(s, exact_number())) {
    throw std::invalid_argument("path line " + std::to_string(lineno) + ": '" + s + "' is not a fraction");
  }
  Rational r(s);
  r.canonicalize();
  return r;
}

double parse_double(const std::string& s, std::size_t lineno) {
  if (std::regex_match(s, exact_number())) return parse_rational(s, lineno).get_d();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw std::invalid_argument("path line " + std::to_string(lineno) + ": bad number '" + s + "'");
  return v;
}

}  // namespace

bool is_exact_path_text(const std::string& text) {
  bool exact = true;
  for_each_pair(text, [&](const std::string& a, const std::string& b, std::size_t) {
    exact = exact && std::regex_match(a, exact_number()) && std::regex_match(b, exact_number());
  });
  return exact;
}

ExactPath parse_exact_path(const std::string& text) {
  ExactPath p;
  for_each_pair(text, [&](const std::string& a, const std::string& b, std::size_t ln) {
    p.samples.push_back({frac(parse_rational(a, ln)), frac(parse_rational(b, ln))});
  });
  return p;
}

RealPath parse_real_path(const std::string& text) {
  RealPath p;
  for_each_pair(text, [&](const std::string& a, const std::string& b, std::size_t ln) {
    p.samples.push_back({AngleOps<double>::reduce(parse_double(a, ln)), AngleOps<double>::reduce(parse_double(b, ln))});
  });
  return p;
}

std::string format_path(const ExactPath& path) {
  std::string out;
  for (const auto& p : path.samples) out += p.s.get_str() + " " + p.t.get_str() + "\n";
  return out;
}

std::string format_path(const RealPath& path) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (const auto& p : path.samples) out << p.s << ' ' << p.t << '\n';
  return out.str();
}

}  // namespace nctorus
