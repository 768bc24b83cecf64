#include "catbij/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "catbij/alpha.hpp"
#include "catbij/beta.hpp"
#include "catbij/classical.hpp"
#include "catbij/codec.hpp"
#include "catbij/errors.hpp"
#include "catbij/verify.hpp"

namespace catbij {

namespace {

// Bad flag values that CLI11 cannot catch on its own; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Family family_arg(const std::string& code) {
  if (auto f = family_from_code(code)) return *f;
  throw UsageError("unknown family '" + code + "' (expected T, S, A, B or P)");
}

bool constructible(Family f) { return f == Family::Tree || f == Family::Tiling || f == Family::Arcs; }

std::string enumerated(Family family, const Term& term) {
  switch (family) {
    case Family::Binary: return format(tiling_to_binary(eval<StaircaseTiling>(term)));
    case Family::Planar: return format(arcs_to_planar(eval<ArcTree>(term)));
    default: return format(eval(family, term));
  }
}

Term term_of_any(const AnyShape& shape) {
  const Family f = family_of(shape);
  if (f == Family::Binary) return term_of(induced(f, Family::Tiling, shape));
  if (f == Family::Planar) return term_of(induced(f, Family::Arcs, shape));
  return term_of(shape);
}

struct Args {
  std::string family;
  int n = 0;
  int limit = -1;
  std::string via;
  std::string from;
  std::string to;
  std::string input;
  std::string mode;
  std::string out_path;
  int max_n = 12;
  int jobs = 1;
};

int cmd_count(const Args& a, std::ostream& out) {
  if (a.n < 0) throw UsageError("--n must be non-negative");
  if (a.family != "terms") family_arg(a.family);
  out << catalan(a.n) << "\n";
  return 0;
}

int cmd_enum(const Args& a, std::ostream& out) {
  if (a.n < 0) throw UsageError("--n must be non-negative");
  if (a.n > kMaxEnumSize) throw UsageError("enum supports n <= " + std::to_string(kMaxEnumSize));
  const bool terms = a.family == "terms";
  const Family family = terms ? Family::Tree : family_arg(a.family);
  const auto& all = enum_terms(a.n);
  std::size_t count = all.size();
  if (a.limit >= 0 && static_cast<std::size_t>(a.limit) < count) count = static_cast<std::size_t>(a.limit);
  for (std::size_t i = 0; i < count; ++i) out << (terms ? format(all[i]) : enumerated(family, all[i])) << "\n";
  return 0;
}

int cmd_map(const Args& a, std::ostream& out) {
  if (a.via == "alpha") {
    if (a.from.empty() || a.to.empty()) throw UsageError("map --via alpha needs --from and --to");
    const Family from = family_arg(a.from);
    const Family to = family_arg(a.to);
    const AnyShape x = parse(from, a.input);
    out << format(constructible(from) && constructible(to) ? alpha(to, x) : induced(from, to, x)) << "\n";
    return 0;
  }
  // beta: the direction follows --from when given, otherwise the literal.
  Family from = Family::Tree;
  if (!a.from.empty()) {
    from = family_arg(a.from);
  } else {
    const auto pos = a.input.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && a.input[pos] == 'S') from = Family::Tiling;
  }
  const Family to = a.to.empty() ? (from == Family::Tree ? Family::Tiling : Family::Tree) : family_arg(a.to);
  if (!((from == Family::Tree && to == Family::Tiling) || (from == Family::Tiling && to == Family::Tree)))
    throw UsageError("beta maps between T and S only");
  if (from == Family::Tree)
    out << format(beta(parse_tree(a.input))) << "\n";
  else
    out << format(beta_inv(parse_tiling(a.input))) << "\n";
  return 0;
}

int cmd_term(const Args& a, std::ostream& out) {
  out << format(term_of_any(parse(family_arg(a.family), a.input))) << "\n";
  return 0;
}

int cmd_render(const Args& a, std::ostream& out) {
  const RenderMode mode = a.mode == "svg" ? RenderMode::Svg : RenderMode::Ascii;
  const std::string text = render(parse(family_arg(a.family), a.input), mode);
  if (a.out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + a.out_path + " for writing");
  file << text;
  if (!file) throw std::runtime_error("failed writing " + a.out_path);
  return 0;
}

int cmd_verify(const Args& a, std::ostream& out) {
  if (a.max_n < 0) throw UsageError("--max-n must be non-negative");
  if (a.max_n >= kMaxEnumSize)
    throw UsageError("verify supports --max-n <= " + std::to_string(kMaxEnumSize - 1));
  if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
  SuiteOptions options;
  options.max_n = a.max_n;
  options.jobs = a.jobs;
  const auto results = run_suite(options);
  out << format_report_table(results) << format_check_lines(results);
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Catalan families and the bijections between them", "catbij"};
  app.require_subcommand(1);
  Args a;
  const auto families = CLI::IsMember({"T", "S", "A", "B", "P"});
  const auto families_or_terms = CLI::IsMember({"T", "S", "A", "B", "P", "terms"});

  auto* count = app.add_subcommand("count", "print the Catalan number c_n");
  count->add_option("--family", a.family, "T, S, A, B, P or terms")->required()->check(families_or_terms);
  count->add_option("--n", a.n, "size")->required();

  auto* enumerate = app.add_subcommand("enum", "list every shape of size n in term order");
  enumerate->add_option("--family", a.family, "T, S, A, B, P or terms")->required()->check(families_or_terms);
  enumerate->add_option("--n", a.n, "size")->required();
  enumerate->add_option("--limit", a.limit, "print at most K lines")->check(CLI::NonNegativeNumber);

  auto* map = app.add_subcommand("map", "apply a bijection to a literal");
  map->add_option("--via", a.via, "alpha or beta")->required()->check(CLI::IsMember({"alpha", "beta"}));
  map->add_option("--from", a.from, "source family")->check(families);
  map->add_option("--to", a.to, "target family")->check(families);
  map->add_option("--input", a.input, "shape literal")->required();

  auto* term = app.add_subcommand("term", "print the construction term of a shape");
  term->add_option("--family", a.family, "T, S, A, B or P")->required()->check(families);
  term->add_option("--input", a.input, "shape literal")->required();

  auto* render_cmd = app.add_subcommand("render", "draw a shape as ASCII art or SVG");
  render_cmd->add_option("--family", a.family, "T, S, A, B or P")->required()->check(families);
  render_cmd->add_option("--input", a.input, "shape literal")->required();
  render_cmd->add_option("--mode", a.mode, "ascii or svg")->required()->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("--out", a.out_path, "write to this file instead of standard output");

  auto* verify = app.add_subcommand("verify", "run the exhaustive property suite");
  verify->add_option("--max-n", a.max_n, "largest size checked exhaustively (default 12)");
  verify->add_option("--jobs", a.jobs, "worker threads (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (count->parsed()) return cmd_count(a, out);
    if (enumerate->parsed()) return cmd_enum(a, out);
    if (map->parsed()) return cmd_map(a, out);
    if (term->parsed()) return cmd_term(a, out);
    if (render_cmd->parsed()) return cmd_render(a, out);
    if (verify->parsed()) return cmd_verify(a, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace catbij
