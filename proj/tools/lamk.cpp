// Command-line front end for the lamk library.
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lamk/errors.hpp"
#include "lamk/expression.hpp"
#include "lamk/filtration.hpp"
#include "lamk/model_io.hpp"
#include "lamk/operations.hpp"
#include "lamk/report.hpp"
#include "lamk/verify.hpp"

using namespace lamk;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::string model;
  std::string expr;
  std::string op;
  int n = 1;
  std::string level;
  std::string kind = "both";
  std::string suite = "all";
  std::string format = "text";
  int max_n = 4;
  int max_q = -1;
  int truncation = -1;
  std::uint64_t seed = 1;
  int samples = 4;
  int ud = 1, uq = 1, un = 2;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

const Filtration& pick(const std::string& kind, const Filtration& gamma, const Filtration& top) {
  return kind == "gamma" ? gamma : top;
}

// "gamma:2" / "top:3" -> (kind, q)
std::pair<std::string, int> parse_level(const std::string& level) {
  const auto colon = level.find(':');
  if (colon != std::string::npos) {
    const std::string kind = level.substr(0, colon);
    const std::string num = level.substr(colon + 1);
    if ((kind == "gamma" || kind == "top") && !num.empty() && num.find_first_not_of("0123456789") == std::string::npos)
      return {kind, std::stoi(num)};
  }
  throw InputError("bad level '" + level + "' (expected gamma:<q>, top:<q> or zero)");
}

int run_eval(const Options& o) {
  const SchemeModel s = load_model(o.model);
  const RingElement x = s.element(o.expr);
  RingElement result = x;
  if (o.op == "lambda")
    result = lambda_op(x, o.n, s.model);
  else if (o.op == "gamma")
    result = gamma_op(x, o.n, s.model);
  else if (o.op == "psi")
    result = adams_op(x, o.n, s.model);
  else if (!o.op.empty())
    throw InputError("unknown operation '" + o.op + "' (expected lambda, gamma or psi)");
  if (o.format == "json") {
    nlohmann::ordered_json j{{"model", s.name}, {"op", o.op}, {"n", o.n}, {"expr", o.expr},
                             {"result", result.to_string()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << result.to_string() << "\n";
  }
  return 0;
}

int run_member(const Options& o) {
  const SchemeModel s = load_model(o.model);
  const RingElement x = s.element(o.expr);
  bool member;
  if (o.level == "zero") {
    member = x.is_zero();
  } else {
    const auto [kind, q] = parse_level(o.level);
    const int depth = std::max(q, s.dimension + 1);
    const auto f = kind == "gamma" ? gamma_filtration(s.model, s.name, depth, std::max(depth, s.dimension + 1))
                                   : top_filtration(s, depth);
    member = filtration_member(x, f.level(q));
  }
  std::cout << (member ? "true" : "false") << "\n";
  return 0;
}

std::string lattice_text(const RingHandle& ring, const IntegerLattice& l) {
  if (l.is_zero()) return "0";
  std::string s;
  for (const auto& row : l.basis()) s += (s.empty() ? "" : ", ") + from_vector(ring, row).to_string();
  return "<" + s + ">";
}

int run_filtration(const Options& o) {
  const SchemeModel s = load_model(o.model);
  const int q_max = o.max_q < 0 ? s.dimension + 1 : o.max_q;
  std::vector<Filtration> fs;
  if (o.kind == "gamma" || o.kind == "both") fs.push_back(gamma_filtration(s, q_max));
  if (o.kind == "top" || o.kind == "both") fs.push_back(top_filtration(s, q_max));
  if (fs.empty()) throw InputError("unknown filtration kind '" + o.kind + "' (expected gamma, top or both)");
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& f : fs)
    for (int q = 0; q <= q_max; ++q) {
      const auto& l = f.level(q);
      if (o.format == "json") {
        std::vector<std::string> basis;
        for (const auto& row : l.basis()) basis.push_back(from_vector(s.ring(), row).to_string());
        out.push_back({{"level", f.level_name(q)}, {"rank", l.rank()}, {"basis", basis}});
      } else {
        std::cout << f.level_name(q) << " rank " << l.rank() << " " << lattice_text(s.ring(), l) << "\n";
      }
    }
  if (o.format == "json") std::cout << out.dump(2) << "\n";
  return 0;
}

int run_gr(const Options& o) {
  const SchemeModel s = load_model(o.model);
  const int q_max = o.max_q < 0 ? s.dimension + 1 : o.max_q;
  const auto gamma = gamma_filtration(s, q_max + 1);
  const auto top = top_filtration(s, q_max + 1);
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int q = 0; q <= q_max; ++q) {
    for (const std::string kind : {"gamma", "top"}) {
      if (o.kind != "both" && o.kind != kind) continue;
      const auto piece = graded_piece(pick(kind, gamma, top), q);
      if (o.format == "json")
        out.push_back({{"kind", kind}, {"q", q}, {"group", piece.group.to_string()}, {"rank", piece.rational_rank}});
      else
        std::cout << "Gr^" << q << " " << kind << ": " << piece.group.to_string() << "\n";
    }
  }
  if (o.format == "json") std::cout << out.dump(2) << "\n";
  return 0;
}

int run_verify(const Options& o) {
  CheckBounds b;
  b.max_n = o.max_n;
  b.max_q = o.max_q;
  b.truncation = o.truncation;
  b.seed = o.seed;
  b.samples = o.samples;
  b.universal_d = o.ud;
  b.universal_q = o.uq;
  b.universal_n = o.un;
  const auto format = parse_report_format(o.format);
  const auto ids = split_list(o.suite);
  if (ids.empty()) throw InputError("empty --suite");
  std::vector<CheckReport> reports;
  if (ids == std::vector<std::string>{"universal_congruence"} && o.model.empty()) {
    reports.push_back(check_universal_congruence(o.ud, o.uq, o.un, o.truncation >= 0 ? o.truncation : o.uq + o.ud + 2));
  } else {
    if (o.model.empty()) throw InputError("verify needs --model");
    reports = run_suite(load_model(o.model), ids, b);
  }
  std::cout << render_report(reports, format);
  return any_failed(reports) ? kExitFail : 0;
}

int run_catalog(const Options& o) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& name : builtin_names()) {
    const SchemeModel s = load_model(name);
    std::string vars;
    for (const auto& v : s.ring()->names()) vars += (vars.empty() ? "" : ",") + v;
    if (o.format == "json")
      out.push_back({{"name", name}, {"dimension", s.dimension}, {"rank", s.ring()->rank()}, {"generators", vars},
                     {"cycles", s.cycles.size()}});
    else
      std::cout << name << "  dimension " << s.dimension << "  rank " << s.ring()->rank() << "  generators " << vars
                << "  cycles " << s.cycles.size() << "\n";
  }
  if (o.format == "json") std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lamk: lambda-rings, Adams operations and filtrations on Grothendieck groups"};
  app.require_subcommand(1);
  Options o;

  const auto add_model = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--model", o.model, "builtin name (P3, P2xP1, ...) or JSON model file");
    if (required) opt->required();
  };
  const auto add_format = [&](CLI::App* c, const std::string& def) {
    o.format = def;
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* eval = app.add_subcommand("eval", "normal form of an expression, optionally after an operation");
  add_model(eval, true);
  eval->add_option("--expr", o.expr, "expression in the model's generators")->required();
  eval->add_option("--op", o.op, "lambda, gamma or psi")->check(CLI::IsMember({"lambda", "gamma", "psi"}));
  eval->add_option("--n", o.n, "operation index")->check(CLI::NonNegativeNumber);
  eval->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"json", "text"}));

  auto* filt = app.add_subcommand("filtration", "lattice bases of the filtration levels");
  add_model(filt, true);
  filt->add_option("--kind", o.kind, "gamma, top or both")->check(CLI::IsMember({"gamma", "top", "both"}));
  filt->add_option("--max-q", o.max_q, "highest level shown");
  filt->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"json", "text"}));

  auto* member = app.add_subcommand("member", "membership of an element in a filtration level");
  add_model(member, true);
  member->add_option("--level", o.level, "gamma:<q>, top:<q> or zero")->required();
  member->add_option("--expr", o.expr, "expression in the model's generators")->required();

  auto* gr = app.add_subcommand("gr", "graded pieces Fil^q / Fil^{q+1} as abelian groups");
  add_model(gr, true);
  gr->add_option("--kind", o.kind, "gamma, top or both")->check(CLI::IsMember({"gamma", "top", "both"}));
  gr->add_option("--max-q", o.max_q, "highest q shown");
  gr->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "run verification checks");
  add_model(verify, false);
  verify->add_option("--suite", o.suite, "all, or comma-separated check ids");
  verify->add_option("--max-n", o.max_n, "largest operation index")->check(CLI::PositiveNumber);
  verify->add_option("--max-q", o.max_q, "largest filtration level (default: dimension)");
  verify->add_option("--truncation", o.truncation, "universal check: gamma-weight truncation (default: q + d + 2)");
  verify->add_option("--seed", o.seed, "seed for sampled elements");
  verify->add_option("--samples", o.samples, "sampled sums per level")->check(CLI::NonNegativeNumber);
  verify->add_option("--d", o.ud, "universal check: rank bound of N");
  verify->add_option("--q", o.uq, "universal check: filtration level of x");
  verify->add_option("--n", o.un, "universal check: lambda index");
  add_format(verify, "text");

  auto* catalog = app.add_subcommand("catalog", "list builtin models");
  catalog->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*eval) return run_eval(o);
    if (*filt) return run_filtration(o);
    if (*member) return run_member(o);
    if (*gr) return run_gr(o);
    if (*verify) return run_verify(o);
    if (*catalog) return run_catalog(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const LoadError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DivisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
