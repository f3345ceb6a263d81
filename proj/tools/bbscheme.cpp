#include <bbscheme.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

namespace {

constexpr int kExitIo = 4;

struct Options {
  std::string order_ideal;
  unsigned nvars = 0;
  std::string sigma = "degrevlex";
  std::string format = "text";
  size_t max_basis = 0;
  unsigned max_degree = 0;
  size_t max_reductions = 0;

  std::string route = "substitution";
  std::string cross_check;
  std::string reducer = "first";
  std::string point;
  std::string at;
  std::string ideal;
  std::string preprocess;
};

int exit_code(bbs_status s) {
  switch (s) {
    case BBS_OK: return 0;
    case BBS_CHECK_FAILED: return 1;
    case BBS_PRECONDITION: return 2;
    case BBS_RESOURCE_LIMIT: return 3;
    case BBS_PARSE_ERROR:
    case BBS_INVALID_ARGUMENT: return kExitIo;
    case BBS_INTERNAL: return 5;
  }
  return 5;
}

// Inline JSON or a path to a JSON file.
bool load_point(const std::string& arg, std::string& out) {
  if (!arg.empty() && arg.front() == '{') {
    out = arg;
    return true;
  }
  std::ifstream in(arg);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) { bbs_session_new(&s_); }
  ~Runner() { bbs_session_free(s_); }
  Runner(const Runner&) = delete;
  Runner& operator=(const Runner&) = delete;

  // Applies the shared settings; `need_O` requires -O.
  bool setup(bool need_O) {
    if (!step(bbs_session_set_ordering(s_, o_.sigma.c_str()))) return false;
    if (!step(bbs_session_set_format(s_, o_.format == "json" ? BBS_FORMAT_JSON : BBS_FORMAT_TEXT))) return false;
    if (!step(bbs_session_set_cutoffs(s_, o_.max_basis, o_.max_degree, o_.max_reductions))) return false;
    if (o_.order_ideal.empty()) {
      if (!need_O) return true;
      std::cerr << "error: this command needs an order ideal (-O)\n";
      code_ = kExitIo;
      return false;
    }
    return step(bbs_session_set_order_ideal(s_, o_.order_ideal.c_str(), o_.nvars));
  }

  // Prints the result (also for failed checks) and maps the status.
  int finish(bbs_status st, bbs_result* r) {
    if (r) std::fputs(bbs_result_text(r), stdout);
    bbs_result_free(r);
    if (st != BBS_OK) report(st);
    return exit_code(st);
  }

  bbs_session* session() { return s_; }
  int code() const { return code_; }

 private:
  bool step(bbs_status st) {
    if (st == BBS_OK) return true;
    report(st);
    code_ = exit_code(st);
    return false;
  }
  void report(bbs_status st) {
    std::string msg = bbs_session_error(s_);
    std::cerr << "error: " << bbs_status_name(st) << (msg.empty() ? "" : ": " + msg) << "\n";
  }

  const Options& o_;
  bbs_session* s_ = nullptr;
  int code_ = 0;
};

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

int run(const std::string& cmd, const Options& o) {
  Runner r(o);
  bool needs_O = cmd != "round-trip" && cmd != "dimension";
  if (!r.setup(needs_O)) return r.code();
  bbs_session* s = r.session();
  bbs_result* out = nullptr;

  std::string point;
  if (cmd == "check-point" || cmd == "deform") {
    if (o.point.empty()) {
      std::cerr << "error: --point is required\n";
      return kExitIo;
    }
    if (!load_point(o.point, point)) {
      std::cerr << "error: cannot read point file '" << o.point << "'\n";
      return kExitIo;
    }
  }

  bbs_status st = BBS_INVALID_ARGUMENT;
  if (cmd == "validate") st = bbs_validate(s, &out);
  else if (cmd == "border-scheme") st = bbs_border_scheme(s, &out);
  else if (cmd == "gb-scheme") st = bbs_gb_scheme(s, o.route.c_str(), opt(o.cross_check), o.reducer.c_str(), &out);
  else if (cmd == "weights") st = bbs_weights(s, &out);
  else if (cmd == "check-point") st = bbs_check_point(s, point.c_str(), &out);
  else if (cmd == "round-trip") st = bbs_round_trip(s, o.ideal.c_str(), &out);
  else if (cmd == "deform") st = bbs_deform(s, point.c_str(), opt(o.at), &out);
  else if (cmd == "affine-cell") st = bbs_affine_cell(s, &out);
  else if (cmd == "dimension") st = bbs_dimension(s, o.ideal.c_str(), o.preprocess == "linear", &out);
  return r.finish(st, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Border basis and Groebner basis schemes of zero-dimensional ideals"};
  app.require_subcommand(1);
  Options o;

  app.add_option("-O,--order-ideal", o.order_ideal, "order ideal, e.g. \"1, x, y, x*y\"");
  app.add_option("-n,--nvars", o.nvars, "number of variables (default: inferred from the names)");
  app.add_option("--sigma", o.sigma, "term ordering: lex, deglex or degrevlex (x1 > x2 > ...)")
      ->check(CLI::IsMember({"lex", "deglex", "degrevlex", "drl"}, CLI::ignore_case));
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-basis", o.max_basis, "Buchberger cutoff: basis size");
  app.add_option("--max-degree", o.max_degree, "Buchberger cutoff: S-pair degree");
  app.add_option("--max-reductions", o.max_reductions, "Buchberger cutoff: reduction steps");

  const std::vector<std::string> routes{"substitution", "reduction", "elimination"};
  app.add_subcommand("validate", "check an order ideal and list its border and corners");
  app.add_subcommand("border-scheme", "generic border prebasis and the ideal I(B_O)");
  auto* gb = app.add_subcommand("gb-scheme", "the ideal I(G_{O,sigma}) of the Groebner basis scheme");
  gb->add_option("--route", o.route, "construction route")->check(CLI::IsMember(routes));
  gb->add_option("--cross-check", o.cross_check, "second route whose reduced basis is compared")
      ->check(CLI::IsMember(routes));
  gb->add_option("--reducer", o.reducer, "divisor choice in the reduction route")
      ->check(CLI::IsMember({"first", "last"}));
  app.add_subcommand("weights", "weights V, W, Wbar and the homogeneity claims");
  auto* cp = app.add_subcommand("check-point", "test whether a point lies on B_O");
  cp->add_option("--point", o.point, "point JSON {\"c\": {\"i,j\": \"p/q\"}} or a file holding it")->required();
  auto* rt = app.add_subcommand("round-trip", "ideal -> point -> ideal and point -> ideal -> point");
  rt->add_option("--ideal", o.ideal, "comma-separated generators of a zero-dimensional ideal")->required();
  auto* df = app.add_subcommand("deform", "deformation family to the monomial ideal of the corners");
  df->add_option("--point", o.point, "point JSON or a file holding it")->required();
  df->add_option("--at", o.at, "report the fiber at this value of t");
  app.add_subcommand("affine-cell", "detect whether G_{O,sigma} is an affine space");
  auto* dim = app.add_subcommand("dimension", "Krull dimension of a quotient ring");
  dim->add_option("--ideal", o.ideal, "border-scheme, gb-scheme or a polynomial list")->required();
  dim->add_option("--preprocess", o.preprocess, "eliminate variables with linear generators first")
      ->check(CLI::IsMember({"linear", "none"}));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitIo;
  }
  return run(app.get_subcommands().front()->get_name(), o);
}
