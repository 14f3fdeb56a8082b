#include <doctest.h>

#include <regex>

#include "frontier/frontier.hpp"
#include "frontier/reports.hpp"

using namespace adeflat;

namespace {

BoundReport B(const char* cls, int K) { return bound(SingularityClass::parse(cls), K); }

bool type_ok(const Json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

// The subset of JSON Schema the report schemas use.
void validate(const Json& v, const Json& schema, const std::string& path, std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || type_ok(v, t.get<std::string>());
    } else {
      ok = type_ok(v, schema["type"].get<std::string>());
    }
    if (!ok) {
      errors.push_back(path + ": type");
      return;
    }
  }
  if (schema.contains("const") && v != schema["const"]) errors.push_back(path + ": const");
  if (schema.contains("pattern") && !std::regex_search(v.get<std::string>(), std::regex(schema["pattern"].get<std::string>())))
    errors.push_back(path + ": pattern");
  if (schema.contains("required"))
    for (const auto& k : schema["required"])
      if (!v.contains(k.get<std::string>())) errors.push_back(path + ": missing " + k.get<std::string>());
  if (schema.contains("properties"))
    for (const auto& [k, sub] : schema["properties"].items())
      if (v.contains(k)) validate(v[k], sub, path + "/" + k, errors);
  if (schema.contains("items") && v.is_array())
    for (std::size_t i = 0; i < v.size(); ++i) validate(v[i], schema["items"], path + "/" + std::to_string(i), errors);
}

}  // namespace

TEST_CASE("curl reduction") {
  auto cr = [](const char* p, const char* q) { return curl_reduce(MultiPoly::parse(p, {"x", "y"}), MultiPoly::parse(q, {"x", "y"})); };
  CHECK(cr("0", "x") == MultiPoly::parse("1"));
  CHECK(cr("y", "0") == MultiPoly::parse("-1"));
  CHECK(cr("x^2*y", "x*y^2") == MultiPoly::parse("-x^2 + y^2"));
  CHECK(cr("x", "y").is_zero());
}

TEST_CASE("bound values") {
  CHECK(B("A2", 3).N_bound == 3);
  CHECK(B("E8", 2).N_bound == 7);
  for (const char* c : {"A1", "A2", "A5", "D4", "D7", "E6", "E7", "E8"}) {
    CAPTURE(c);
    const BoundReport r = B(c, 1);
    CHECK(r.N_bound == r.mu - 1);
    CHECK(r.v0 == 0);
  }
  CHECK_THROWS_AS(B("A2", 0), std::invalid_argument);
  CHECK(quartic_reference(5) == 324);
  CHECK(B("A2", 3).M == 4);
}

TEST_CASE("bound is monotone and below the envelope") {
  std::string why;
  CHECK_MESSAGE(bound_monotone(8, 20, &why), why);
  for (int mu = 2; mu <= 8; ++mu)
    for (const char* fam : {"A", "D", "E"}) {
      const std::string name = std::string(fam) + std::to_string(mu);
      SingularityClass c;
      try {
        c = SingularityClass::parse(name);
      } catch (const std::invalid_argument&) {
        continue;
      }
      for (int K = 1; K <= 20; ++K) CHECK(bound(c, K).N_bound <= mu * K - 1);
    }
}

TEST_CASE("comparison table") {
  const auto rows = comparison_table(8);
  REQUIRE(rows.size() == 8);
  const ComparisonRow& r5 = rows[4];
  CHECK(r5.n == 5);
  CHECK(r5.envelope == 19);
  CHECK(r5.quadratic == 24);
  CHECK(r5.quartic == 324);
  CHECK(r5.worst_bound == 14);
  CHECK(r5.worst_bound < 324);
  for (const auto& r : rows) {
    CHECK(r.worst_bound <= r.envelope);
    CHECK(BigInt(r.envelope) <= r.quartic);
  }
}

TEST_CASE("s-value parsing") {
  Session s;
  const SingularitySpec& a2 = s.spec(SingularityClass::parse("A2"));
  CHECK(s_input_order(a2) == std::vector<std::string>{"s10", "s00"});
  CHECK(parse_s_values(a2, "-3,0") == std::vector<Rational>{0, -3});
  CHECK(parse_s_values(a2, "s10=-3,s00=1/2") == std::vector<Rational>{Rational(1, 2), -3});
  CHECK(parse_s_values(a2, "-3, 0.25") == std::vector<Rational>{Rational(1, 4), -3});
  CHECK_THROWS_AS(parse_s_values(a2, "1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_s_values(a2, "s10=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_s_values(a2, "s99=1,s00=2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational_list("1,,2"), std::invalid_argument);
}

TEST_CASE("reports satisfy their schemas and round-trip") {
  Session s;
  const SingularityClass a2 = SingularityClass::parse("A2");
  std::vector<Report> reports = {
      report_catalog(s, a2),
      report_flatcoords(s, SingularityClass::parse("A3")),
      report_gm_derive(s, a2),
      report_gm_reduce(s, a2, 2, 2),
      report_proof_check(s, a2, 3, 4),
      report_periods_eval(s, a2, {0, -3}, {"1", "x^2*y"}),
      report_periods_verify(s, a2, {0, -3}),
      report_bound(s, a2, 3),
  };
  REQUIRE(reports.size() == report_kinds().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const Report& r = reports[i];
    CAPTURE(r.kind);
    CHECK(r.kind == report_kinds()[i]);
    CHECK(r.passed);
    std::vector<std::string> errors;
    validate(r.json, schema_for(r.kind), "", errors);
    CHECK_MESSAGE(errors.empty(), (errors.empty() ? "" : errors.front()));
    CHECK(Json::parse(r.json.dump()) == r.json);
    for (const auto& t : r.csv) {
      CHECK(!t.text().empty());
      CHECK(t.text().find(t.header.front()) == 0);
    }
  }
  CHECK_THROWS_AS(schema_for("nope"), std::invalid_argument);
}

TEST_CASE("bound report tables") {
  Session s;
  s.options().k_max = 20;
  s.options().table_n = 5;
  const Report r = report_bound(s, SingularityClass::parse("E8"), 2);
  CHECK(r.json["N_bound"] == 7);
  CHECK(r.json["curve"].size() == 20);
  CHECK(r.json["comparison"].size() == 5);
  REQUIRE(r.csv.size() == 2);
  CHECK(r.csv[1].name == "comparison");
}
