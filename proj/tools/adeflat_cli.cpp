#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "adeflat/adeflat.h"

namespace fs = std::filesystem;

namespace {

struct Globals {
  bool json = false;
  std::string out;
  double tol = 1e-5;
  long seed = 1;
  std::string convention = "corrected";
  int oval = 0;
};

// Owns the context and the current result.
struct Runner {
  adeflat_context* ctx = nullptr;
  adeflat_result* res = nullptr;
  Runner() { adeflat_context_create(&ctx); }
  ~Runner() {
    adeflat_result_destroy(res);
    adeflat_context_destroy(ctx);
  }
};

int exit_code(adeflat_status s) {
  switch (s) {
    case ADEFLAT_OK: return 0;
    case ADEFLAT_E_USAGE: return 1;
    case ADEFLAT_E_INTERNAL: return 1;
    default: return 2;
  }
}

std::string file_stem(const std::string& kind, const std::string& cls) {
  std::string s = kind + "_" + cls;
  for (char& ch : s)
    if (ch == '(' || ch == ')') ch = '_';
  return s;
}

bool write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
  return static_cast<bool>(f);
}

int emit(Runner& r, adeflat_status st, const Globals& g, const std::string& cls) {
  if (!r.res) {
    std::cerr << "error (" << adeflat_status_name(st) << "): " << adeflat_last_error(r.ctx) << "\n";
    return exit_code(st);
  }
  const std::string kind = adeflat_result_kind(r.res);
  const std::string pretty = adeflat_result_json(r.res, 2);
  if (g.json) {
    std::cout << pretty << "\n";
  } else {
    std::cout << kind << " " << cls << ": " << (adeflat_result_passed(r.res) ? "passed" : "FAILED") << "\n";
    const std::string compact = adeflat_result_json(r.res, -1);
    std::cout << (compact.size() > 2000 ? compact.substr(0, 2000) + " ..." : compact) << "\n";
  }
  if (!g.out.empty()) {
    std::error_code ec;
    fs::create_directories(g.out, ec);
    const fs::path dir(g.out);
    const std::string stem = file_stem(kind, cls);
    bool ok = write_file(dir / (stem + ".json"), pretty + "\n");
    for (int i = 0; i < adeflat_result_csv_count(r.res); ++i)
      ok = write_file(dir / (std::string(adeflat_result_csv_name(r.res, i)) + ".csv"), adeflat_result_csv_text(r.res, i)) && ok;
    if (!ok) {
      std::cerr << "error: cannot write to " << g.out << "\n";
      return 1;
    }
    if (!g.json) std::cout << "wrote " << (dir / (stem + ".json")).string() << "\n";
  }
  if (st == ADEFLAT_E_VERIFY) std::cerr << "verification failed\n";
  return exit_code(st);
}

std::string exact_text(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

adeflat_status configure(Runner& r, const Globals& g) {
  const std::pair<const char*, std::string> opts[] = {{"tol", exact_text(g.tol)},
                                                       {"seed", std::to_string(g.seed)},
                                                       {"convention", g.convention},
                                                       {"oval", std::to_string(g.oval)}};
  for (const auto& [k, v] : opts) {
    const adeflat_status st = adeflat_set_option(r.ctx, k, v.c_str());
    if (st != ADEFLAT_OK) return st;
  }
  return ADEFLAT_OK;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flat coordinates, Gauss-Manin systems and Abelian-integral bounds for ADE singularities", "adeflat"};
  app.set_version_flag("--version", adeflat_version());
  app.set_config("--config", "adeflat.conf", "key = value defaults (subcommand keys as 'proof.check.samples')");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Print the full JSON report");
  app.add_option("--out", g.out, "Directory for the JSON report and CSV tables")->envname("ADEFLAT_OUTPUT_DIR");
  app.add_option("--tol", g.tol, "Gate for the numeric period residuals")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for random sample points");
  app.add_option("--convention", g.convention, "Lattice convention")->check(CLI::IsMember({"corrected", "printed"}));
  app.add_option("--oval", g.oval, "Oval index when several real ovals exist")->check(CLI::NonNegativeNumber);

  std::string cls;
  int k1 = 0, k2 = 0, K = 1, samples = 10;
  std::string s_values;
  std::vector<std::string> monomials;
  std::string kind;
  int k_max = 20, table_n = 8;

  auto* catalog = app.add_subcommand("catalog", "Singularity catalog");
  catalog->require_subcommand(1);
  auto* show = catalog->add_subcommand("show", "H, mu, weights, basis and discriminant");
  show->add_option("class", cls, "A<mu>, D<mu>, E6, E7 or E8")->required();

  auto* flat = app.add_subcommand("flatcoords", "Forward and inverse flat-coordinate maps");
  flat->add_option("class", cls)->required();

  auto* gm = app.add_subcommand("gm", "Gauss-Manin system");
  gm->require_subcommand(1);
  auto* derive = gm->add_subcommand("derive", "Lambda, S_tilde, P, Delta, c and the Dubrovin coefficients");
  derive->add_option("class", cls)->required();
  auto* reduce = gm->add_subcommand("reduce", "Coefficients of x^k1 y^k2 over the basis periods");
  reduce->add_option("class", cls)->required();
  reduce->add_option("k1", k1)->required()->check(CLI::NonNegativeNumber);
  reduce->add_option("k2", k2)->required()->check(CLI::NonNegativeNumber);

  auto* proof = app.add_subcommand("proof", "Minor and eigen-shift checks");
  proof->require_subcommand(1);
  auto* check = proof->add_subcommand("check", "Minors, orthogonality and eigen gaps at random points");
  check->add_option("class", cls)->required();
  check->add_option("--K", K, "Degree of the form")->check(CLI::PositiveNumber);
  check->add_option("--samples", samples)->check(CLI::PositiveNumber);

  auto* periods = app.add_subcommand("periods", "Numeric periods over real ovals");
  periods->require_subcommand(1);
  auto* eval = periods->add_subcommand("eval", "Periods of given numerators");
  eval->add_option("class", cls)->required();
  eval->add_option("--s", s_values, "Parameter values: -3,0 (A2: s10, s00) or s10=-3,s00=0")->required()->allow_extra_args(false);
  eval->add_option("--monomials", monomials, "Numerators over x, y, e.g. 1,x,x^2*y")->required()->delimiter(',');
  auto* verify = periods->add_subcommand("verify", "Finite-difference check of the Gauss-Manin identities");
  verify->add_option("class", cls)->required();
  verify->add_option("--s", s_values)->required()->allow_extra_args(false);

  auto* bound = app.add_subcommand("bound", "Zero-multiplicity bound with comparison table");
  bound->add_option("class", cls)->required();
  bound->add_option("--K", K)->required();
  bound->add_option("--k-max", k_max, "Length of the bound-vs-K curve")->check(CLI::PositiveNumber);
  bound->add_option("--table-n", table_n, "Rows of the comparison table")->check(CLI::PositiveNumber);

  auto* schema = app.add_subcommand("schema", "Print the JSON schema of a report kind");
  schema->add_option("kind", kind)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Runner r;
  if (!r.ctx) return 1;
  adeflat_status st = configure(r, g);
  if (st != ADEFLAT_OK) {
    std::cerr << "error: " << adeflat_last_error(r.ctx) << "\n";
    return exit_code(st);
  }

  if (schema->parsed()) {
    const char* text = nullptr;
    st = adeflat_schema(r.ctx, kind.c_str(), &text);
    if (st != ADEFLAT_OK) {
      std::cerr << "error: " << adeflat_last_error(r.ctx) << "\n";
      return exit_code(st);
    }
    std::cout << text << "\n";
    return 0;
  }

  if (show->parsed()) st = adeflat_catalog_show(r.ctx, cls.c_str(), &r.res);
  else if (flat->parsed()) st = adeflat_flatcoords(r.ctx, cls.c_str(), &r.res);
  else if (derive->parsed()) st = adeflat_gm_derive(r.ctx, cls.c_str(), &r.res);
  else if (reduce->parsed()) st = adeflat_gm_reduce(r.ctx, cls.c_str(), k1, k2, &r.res);
  else if (check->parsed()) st = adeflat_proof_check(r.ctx, cls.c_str(), K, samples, &r.res);
  else if (eval->parsed()) st = adeflat_periods_eval(r.ctx, cls.c_str(), s_values.c_str(), join(monomials).c_str(), &r.res);
  else if (verify->parsed()) st = adeflat_periods_verify(r.ctx, cls.c_str(), s_values.c_str(), &r.res);
  else if (bound->parsed()) {
    adeflat_set_option(r.ctx, "k_max", std::to_string(k_max).c_str());
    adeflat_set_option(r.ctx, "table_n", std::to_string(table_n).c_str());
    st = adeflat_bound(r.ctx, cls.c_str(), K, &r.res);
  }
  if (st == ADEFLAT_E_USAGE && !r.res) {
    std::cerr << "error: " << adeflat_last_error(r.ctx) << "\n\n" << app.help();
    return 1;
  }
  return emit(r, st, g, cls);
}
