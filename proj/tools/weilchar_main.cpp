// Command-line front end: evaluate the Weil character by formula or
// oracle, run the verification battery, and emit value tables.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "weilchar/json_io.hpp"
#include "weilchar/weil.hpp"

namespace {

using namespace weilchar;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::string read_module_arg(const std::string& arg) {
  // inline JSON or a path to a JSON file
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open module file: " + arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json eval_element(const WeilContext& ctx, const SpElement& g, const std::string& method) {
  json out;
  ModuleHom alpha = ModuleHom::identity(ctx.space.v).sub(g.hom);
  out["order_of_g"] = element_order(g);
  out["displacement"] = image(alpha).order();
  out["method"] = method;
  if (method == "formula" || method == "both") {
    CharacterValue cv = closed_value(ctx, g);
    out["c"] = cv.c;
    out["eps"] = cv.eps.str();
    out["complex"] = format_complex(cv.to_complex());
  }
  if (method == "oracle" || method == "both") {
    Oracle oracle(ctx);
    cplx tr = oracle.trace(g);
    out["oracle"] = format_complex(tr);
    if (method == "oracle") out["complex"] = format_complex(tr);
    if (method == "both") {
      CharacterValue cv = closed_value(ctx, g);
      out["residual"] = std::abs(tr - cv.to_complex());
    }
  }
  return out;
}

int run_eval(const std::string& module_arg, const std::string& g_arg, i64 lambda_s,
             const std::string& method) {
  SymplecticSpace space = parse_module_json(read_module_arg(module_arg));
  WeilContext ctx(space, AdditiveCharacter(space.v.ring, lambda_s));
  SpElement g = SpElement::make(space, ModuleHom(space.v, space.v, parse_matrix_json(g_arg)));
  std::cout << eval_element(ctx, g, method).dump() << "\n";
  return kExitPass;
}

int run_verify(const std::string& module_arg, i64 lambda_s, unsigned long long seed, int samples) {
  SymplecticSpace space = parse_module_json(read_module_arg(module_arg));
  WeilContext ctx(space, AdditiveCharacter(space.v.ring, lambda_s));
  Report report = verify_identities(ctx, seed, samples);
  for (const auto& check : report.checks) std::cout << check_to_json(check) << "\n";
  json summary;
  summary["checks"] = report.checks.size();
  summary["failures"] = report.failures();
  std::cout << summary.dump() << "\n";
  return report.all_pass() ? kExitPass : kExitVerifyFail;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  return out + "\"";
}

void print_table_row(std::ostream& os, const WeilContext& ctx, const SpElement& g) {
  CharacterValue cv = closed_value(ctx, g);
  os << csv_quote(format_matrix(g.hom.mat)) << "," << element_order(g) << "," << cv.c << ","
     << cv.eps.str() << "," << format_complex(cv.to_complex()) << "\n";
}

int run_table(const std::string& module_arg, i64 lambda_s, bool enumerate, int sample_count,
              unsigned long long seed) {
  SymplecticSpace space = parse_module_json(read_module_arg(module_arg));
  WeilContext ctx(space, AdditiveCharacter(space.v.ring, lambda_s));
  std::cout << "g,order,c,eps,psi\n";
  if (enumerate) {
    if (space.v.order() > 81)
      throw std::invalid_argument("table: enumeration limited to |V| <= 3^4");
    for (const auto& g : enumerate_sp(space)) print_table_row(std::cout, ctx, g);
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < sample_count; ++i) print_table_row(std::cout, ctx, sp_random(space, rng, 3));
  }
  return kExitPass;
}

int run_selftest(unsigned long long seed) {
  struct Fixture {
    i64 m;
    std::vector<i64> pairs;
    int samples;
  };
  std::vector<Fixture> fixtures = {{3, {3}, 12}, {9, {3, 9}, 10}, {15, {15}, 8}};
  bool ok = true;
  for (const auto& f : fixtures) {
    SymplecticSpace space = hyperbolic_space(Ring(f.m), f.pairs);
    WeilContext ctx(space, AdditiveCharacter(space.v.ring, 1));
    Report report = verify_identities(ctx, seed, f.samples);
    json line;
    line["fixture_m"] = f.m;
    line["divisors"] = space.v.divisors;
    line["checks"] = report.checks.size();
    line["failures"] = report.failures();
    std::cout << line.dump() << "\n";
    if (!report.all_pass()) {
      ok = false;
      for (const auto& check : report.checks)
        if (!check.pass) std::cout << check_to_json(check) << "\n";
    }
  }
  return ok ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weil representation character values for finite symplectic modules over Z/m"};
  app.require_subcommand(0, 1);

  bool selftest = false;
  app.add_flag("--selftest", selftest, "run the identity battery on built-in fixtures");
  unsigned long long seed = 42;
  app.add_option("--seed", seed, "random seed");

  std::string module_arg, g_arg, method = "formula", format = "json";
  i64 lambda_s = 1;
  int samples = 50;

  CLI::App* eval = app.add_subcommand("eval", "evaluate psi(g)");
  eval->add_option("--module", module_arg, "module JSON (inline or path)")->required();
  eval->add_option("--g", g_arg, "element matrix JSON")->required();
  eval->add_option("--lambda-s", lambda_s, "character twist (unit mod m)");
  eval->add_option("--method", method, "formula|oracle|both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}));

  CLI::App* verify = app.add_subcommand("verify", "run the identity battery");
  verify->add_option("--module", module_arg, "module JSON (inline or path)")->required();
  verify->add_option("--lambda-s", lambda_s, "character twist (unit mod m)");
  verify->add_option("--samples", samples, "random elements per fixture");

  CLI::App* table = app.add_subcommand("table", "CSV table of character values");
  table->add_option("--module", module_arg, "module JSON (inline or path)")->required();
  table->add_option("--lambda-s", lambda_s, "character twist (unit mod m)");
  bool enumerate = false;
  table->add_flag("--enumerate", enumerate, "all of Sp(V) (|V| <= 3^4)");
  int sample_count = 10;
  table->add_option("--sample", sample_count, "number of sampled rows");
  std::string fmt = "csv";
  table->add_option("--format", fmt, "csv")->check(CLI::IsMember({"csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (selftest) return run_selftest(seed);
    if (eval->parsed()) return run_eval(module_arg, g_arg, lambda_s, method);
    if (verify->parsed()) return run_verify(module_arg, lambda_s, seed, samples);
    if (table->parsed()) return run_table(module_arg, lambda_s, enumerate, sample_count, seed);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
