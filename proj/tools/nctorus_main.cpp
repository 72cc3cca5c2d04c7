// nctorus: coverings of the noncommutative torus from the command line.
//
//   nctorus enumerate <d> [--type connected|disconnected|mixed] [--m M --n N]
//   nctorus verify <m> <n> <k> [--rational-period P]
//   nctorus verify --group <Zn|ZaxZb|S3>
//   nctorus eval "<expression>"
//   nctorus lift <path-file|-> <m> <n> [--start S T]
//
// --format structured switches every command to JSON lines.
//
// Exit codes: 0 success, 1 verdict false, 2 usage error, 3 rational-theta refusal.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nctorus/covering.hpp"
#include "nctorus/direct_sum.hpp"
#include "nctorus/expression.hpp"
#include "nctorus/galois.hpp"
#include "nctorus/path_lift.hpp"
#include "nctorus/serialization.hpp"

namespace {

using namespace nctorus;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;

struct Options {
  std::string format = "text";

  std::int64_t degree = 0;
  std::string type_filter;
  std::optional<std::int64_t> filter_m;
  std::optional<std::int64_t> filter_n;

  std::vector<std::int64_t> mnk;
  std::string group;
  std::int64_t rational_period = 0;

  std::string expression;

  std::string path_file;
  std::int64_t lift_m = 1;
  std::int64_t lift_n = 1;
  std::vector<std::string> start;
};

bool structured(const Options& o) { return o.format == "structured"; }

int run_enumerate(const Options& o) {
  if (o.degree < 1) {
    std::cerr << "error: degree must be positive\n";
    return kExitUsage;
  }
  std::vector<CoveringDescriptor> shown;
  for (const auto& d : classify_coverings(o.degree)) {
    if (!o.type_filter.empty() && to_string(d.kind) != o.type_filter) continue;
    if (o.filter_m && d.m != *o.filter_m) continue;
    if (o.filter_n && d.n != *o.filter_n) continue;
    shown.push_back(d);
  }
  if (structured(o)) {
    for (const auto& d : shown) std::cout << to_json(d).dump() << "\n";
    std::cout << json{{"record", "summary"}, {"degree", o.degree}, {"count", shown.size()}}.dump() << "\n";
  } else {
    for (const auto& d : shown) std::cout << render_text(d) << "\n";
    std::cout << shown.size() << " covering(s) of degree " << o.degree << "\n";
  }
  return kExitOk;
}

int run_verify(const Options& o) {
  CanCertificate cert;
  std::optional<DecompositionReport> report;
  try {
    if (!o.group.empty()) {
      auto group = std::make_shared<const FiniteGroup>(FiniteGroup::parse(o.group));
      cert = can_matrix_direct_sum(group);
      report = verify_decomposition(group, 2);
    } else {
      if (o.mnk.size() != 3) {
        std::cerr << "error: verify needs <m> <n> <k> or --group\n";
        return kExitUsage;
      }
      const ThetaContext base = o.rational_period > 0 ? ThetaContext::rational(o.rational_period) : ThetaContext::base();
      cert = can_matrix(make_covering(o.mnk[0], o.mnk[1], o.mnk[2], base));
    }
  } catch (const RationalThetaRefused& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (structured(o)) {
    for (const auto& r : certificate_records(cert)) std::cout << r.dump() << "\n";
  } else {
    std::cout << render_text(cert);
    if (report) std::cout << render_text(*report);
  }
  const bool ok = cert.verdict && (!report || report->passed());
  return ok ? kExitOk : kExitVerdictFalse;
}

int run_eval(const Options& o) {
  try {
    const TorusElement value = evaluate_expression(o.expression);
    if (structured(o)) {
      std::cout << json{{"record", "element"}, {"text", value.str()}, {"value", to_json(value)}}.dump() << "\n";
    } else {
      std::cout << value.str() << "\n";
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    std::cerr << "  " << o.expression << "\n  " << std::string(e.position(), ' ') << "^\n";
    return kExitUsage;
  }
  return kExitOk;
}

template <class T>
int emit_lift(const Options& o, const AnglePath<T>& base, const AnglePoint<T>& start) {
  const auto lifted = lift_path(base, o.lift_m, o.lift_n, start);
  std::optional<DeckElement> deck;
  if (base.closed()) deck = deck_of_loop(base, o.lift_m, o.lift_n);
  if (structured(o)) {
    for (const auto& p : lifted.samples) {
      std::ostringstream s, t;
      s << std::setprecision(17) << p.s;
      t << std::setprecision(17) << p.t;
      std::cout << json{{"record", "sample"}, {"s", s.str()}, {"t", t.str()}}.dump() << "\n";
    }
    json summary{{"record", "summary"}, {"samples", lifted.samples.size()}, {"closed", base.closed()}};
    if (deck) summary["deck"] = {deck->a, deck->b};
    std::cout << summary.dump() << "\n";
  } else {
    std::cout << format_path(lifted);
    if (deck) std::cout << "# deck element (" << deck->a << ", " << deck->b << ") in Z_" << o.lift_m << " x Z_" << o.lift_n << "\n";
  }
  return kExitOk;
}

int run_lift(const Options& o) {
  std::string text;
  if (o.path_file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.path_file);
    if (!in) {
      std::cerr << "error: cannot open " << o.path_file << "\n";
      return kExitUsage;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    std::string start_text = o.start.empty() ? "" : o.start[0] + " " + o.start[1] + "\n";
    if (is_exact_path_text(text) && is_exact_path_text(start_text)) {
      const auto base = parse_exact_path(text);
      const auto start = o.start.empty() ? canonical_start(base, o.lift_m, o.lift_n) : parse_exact_path(start_text).samples.at(0);
      return emit_lift(o, base, start);
    }
    const auto base = parse_real_path(text);
    const auto start = o.start.empty() ? canonical_start(base, o.lift_m, o.lift_n) : parse_real_path(start_text).samples.at(0);
    return emit_lift(o, base, start);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with coverings of the noncommutative torus"};
  app.require_subcommand(1, 1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  auto* enumerate = app.add_subcommand("enumerate", "List all coverings of a given degree");
  enumerate->add_option("degree", opt.degree, "Covering degree d")->required();
  enumerate->add_option("--type", opt.type_filter, "Only this kind")->check(CLI::IsMember({"connected", "disconnected", "mixed"}));
  enumerate->add_option("--m", opt.filter_m, "Only this m");
  enumerate->add_option("--n", opt.filter_n, "Only this n");

  auto* verify = app.add_subcommand("verify", "Certify that the canonical map is an isomorphism");
  verify->add_option("mnk", opt.mnk, "m n k of a connected covering")->expected(0, 3);
  verify->add_option("--group", opt.group, "Deck group of a disconnected covering (Zn, ZaxZb, S3)");
  verify->add_option("--rational-period", opt.rational_period, "Force Q^P = 1 (rational theta)");

  auto* eval = app.add_subcommand("eval", "Evaluate an expression in u, v, U, V, Q, z(c)");
  eval->add_option("expression", opt.expression)->required();

  auto* lift = app.add_subcommand("lift", "Lift a sampled torus path through an (m, n) covering");
  lift->add_option("path", opt.path_file, "Path file, '-' for stdin")->required();
  lift->add_option("m", opt.lift_m)->required()->check(CLI::PositiveNumber);
  lift->add_option("n", opt.lift_n)->required()->check(CLI::PositiveNumber);
  lift->add_option("--start", opt.start, "Lifted start point S T")->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (enumerate->parsed()) return run_enumerate(opt);
  if (verify->parsed()) return run_verify(opt);
  if (eval->parsed()) return run_eval(opt);
  return run_lift(opt);
}
