#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "frontier/frontier.hpp"
#include "periods/periods.hpp"

namespace adeflat {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct CsvTable {
  std::string name;  // file stem, e.g. "bound_A2"
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string text() const;
};

struct Report {
  std::string kind;  // "catalog", "flatcoords", ...
  Json json;
  std::vector<CsvTable> csv;
  bool passed = true;
};

struct RunOptions {
  double tol = 1e-5;          // numeric gate for periods verify
  std::uint64_t seed = 1;
  LatticeConvention convention = LatticeConvention::Corrected;
  int oval = 0;
  int k_max = 20;             // bound: length of the bound-vs-K curve
  int table_n = 8;            // bound: rows of the comparison table
  int product_rule_ell = 3;   // proof check: Sigma^(l) oracle up to this l (mu <= 4 only)
};

/// Caches spec, flat map and Gauss-Manin data per class.
class Session {
 public:
  explicit Session(RunOptions opt = {}) : opt_(opt) {}
  const RunOptions& options() const { return opt_; }
  RunOptions& options() { return opt_; }

  const SingularitySpec& spec(const SingularityClass& c);
  const FlatMap& flat(const SingularityClass& c);
  const GMStructure& gm(const SingularityClass& c);

 private:
  struct Entry {
    std::unique_ptr<SingularitySpec> spec;
    std::unique_ptr<FlatMap> flat;
    std::unique_ptr<GMStructure> gm;
  };
  Entry& entry(const SingularityClass& c);
  RunOptions opt_;
  std::map<std::string, Entry> cache_;
};

Report report_catalog(Session& s, const SingularityClass& c);
Report report_flatcoords(Session& s, const SingularityClass& c);
Report report_gm_derive(Session& s, const SingularityClass& c);
Report report_gm_reduce(Session& s, const SingularityClass& c, int k1, int k2);
Report report_proof_check(Session& s, const SingularityClass& c, int K, int samples);
/// Monomials are polynomial texts over x, y (and the s-variables).
Report report_periods_eval(Session& s, const SingularityClass& c, const std::vector<Rational>& sv,
                           const std::vector<std::string>& monomials);
Report report_periods_verify(Session& s, const SingularityClass& c, const std::vector<Rational>& sv);
Report report_bound(Session& s, const SingularityClass& c, int K);

/// JSON Schema (draft 2020-12) of the report kind; throws std::invalid_argument for an unknown kind.
Json schema_for(const std::string& kind);
std::vector<std::string> report_kinds();

/// Comma-separated rationals ("-3,0", "1/2,-0.25").
std::vector<Rational> parse_rational_list(const std::string& text);
/// Order of plain --s values: the basis order reversed (A2: s10, s00).
std::vector<std::string> s_input_order(const SingularitySpec& spec);
/// Plain values in s_input_order, or name=value pairs ("s10=-3,s00=0"); result in basis order.
std::vector<Rational> parse_s_values(const SingularitySpec& spec, const std::string& text);

Json matrix_json(const PolyMatrix& m);
Json rationals_json(const std::vector<Rational>& v);

}  // namespace adeflat
