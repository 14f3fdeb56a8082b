#include "adeflat/adeflat.h"

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "frontier/reports.hpp"

struct adeflat_context {
  adeflat::Session session;
  std::string error;
  std::string scratch;
};

struct adeflat_result {
  adeflat::Report report;
  std::string json_cache;
  std::vector<std::string> csv_text;
};

namespace {

using adeflat::Report;
using adeflat::Session;
using adeflat::SingularityClass;

adeflat_status guarded(adeflat_context* ctx, const std::function<adeflat_status()>& fn) {
  if (!ctx) return ADEFLAT_E_USAGE;
  ctx->error.clear();
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    ctx->error = e.what();
    return ADEFLAT_E_USAGE;
  } catch (const adeflat::ParseError& e) {
    ctx->error = e.what();
    return ADEFLAT_E_USAGE;
  } catch (const adeflat::PeriodError& e) {
    ctx->error = e.what();
    return ADEFLAT_E_NUMERIC;
  } catch (const adeflat::AlgebraError& e) {
    ctx->error = e.what();
    return ADEFLAT_E_ALGEBRA;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return ADEFLAT_E_INTERNAL;
  } catch (...) {
    ctx->error = "unknown failure";
    return ADEFLAT_E_INTERNAL;
  }
}

adeflat_status run(adeflat_context* ctx, adeflat_result** out, const std::function<Report(Session&)>& fn) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("null result pointer");
    *out = nullptr;
    auto* r = new adeflat_result{fn(ctx->session), {}, {}};
    for (const auto& t : r->report.csv) r->csv_text.push_back(t.text());
    *out = r;
    if (!r->report.passed) {
      ctx->error = "verification failed";
      return ADEFLAT_E_VERIFY;
    }
    return ADEFLAT_OK;
  });
}

SingularityClass cls_of(const char* text) {
  if (!text) throw std::invalid_argument("missing class");
  return SingularityClass::parse(text);
}

std::string str_of(const char* text, const char* what) {
  if (!text) throw std::invalid_argument(std::string("missing ") + what);
  return text;
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double d = 0;
  try {
    d = std::stod(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != v.size() || v.empty()) throw std::invalid_argument("option " + key + ": not a number '" + v + "'");
  return d;
}

long parse_long(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long n = 0;
  try {
    n = std::stol(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != v.size() || v.empty()) throw std::invalid_argument("option " + key + ": not an integer '" + v + "'");
  return n;
}

}  // namespace

extern "C" {

const char* adeflat_version(void) { return "0.1.0"; }

int adeflat_schema_version(void) { return adeflat::kSchemaVersion; }

const char* adeflat_status_name(adeflat_status s) {
  switch (s) {
    case ADEFLAT_OK: return "ok";
    case ADEFLAT_E_USAGE: return "usage";
    case ADEFLAT_E_VERIFY: return "verification failed";
    case ADEFLAT_E_ALGEBRA: return "algebra";
    case ADEFLAT_E_NUMERIC: return "numeric";
    case ADEFLAT_E_INTERNAL: return "internal";
  }
  return "unknown";
}

adeflat_status adeflat_context_create(adeflat_context** out) {
  if (!out) return ADEFLAT_E_USAGE;
  try {
    *out = new adeflat_context{};
  } catch (...) {
    *out = nullptr;
    return ADEFLAT_E_INTERNAL;
  }
  return ADEFLAT_OK;
}

void adeflat_context_destroy(adeflat_context* ctx) { delete ctx; }

const char* adeflat_last_error(const adeflat_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

adeflat_status adeflat_set_option(adeflat_context* ctx, const char* key, const char* value) {
  return guarded(ctx, [&] {
    const std::string k = str_of(key, "option key"), v = str_of(value, "option value");
    auto& o = ctx->session.options();
    if (k == "tol") {
      o.tol = parse_double(k, v);
      if (!(o.tol > 0)) throw std::invalid_argument("tol must be positive");
    } else if (k == "seed") {
      o.seed = static_cast<std::uint64_t>(parse_long(k, v));
    } else if (k == "convention") {
      adeflat::LatticeConvention c;
      if (v == "corrected") c = adeflat::LatticeConvention::Corrected;
      else if (v == "printed") c = adeflat::LatticeConvention::Printed;
      else throw std::invalid_argument("convention must be corrected or printed");
      if (c != o.convention) {
        adeflat::RunOptions keep = o;
        keep.convention = c;
        ctx->session = Session(keep);
      }
    } else if (k == "oval") {
      o.oval = static_cast<int>(parse_long(k, v));
    } else if (k == "k_max") {
      o.k_max = static_cast<int>(parse_long(k, v));
    } else if (k == "table_n") {
      o.table_n = static_cast<int>(parse_long(k, v));
    } else if (k == "product_rule_ell") {
      o.product_rule_ell = static_cast<int>(parse_long(k, v));
    } else {
      throw std::invalid_argument("unknown option '" + k + "'");
    }
    return ADEFLAT_OK;
  });
}

adeflat_status adeflat_catalog_show(adeflat_context* ctx, const char* cls, adeflat_result** out) {
  return run(ctx, out, [&](Session& s) { return adeflat::report_catalog(s, cls_of(cls)); });
}

adeflat_status adeflat_flatcoords(adeflat_context* ctx, const char* cls, adeflat_result** out) {
  return run(ctx, out, [&](Session& s) { return adeflat::report_flatcoords(s, cls_of(cls)); });
}

adeflat_status adeflat_gm_derive(adeflat_context* ctx, const char* cls, adeflat_result** out) {
  return run(ctx, out, [&](Session& s) { return adeflat::report_gm_derive(s, cls_of(cls)); });
}

adeflat_status adeflat_gm_reduce(adeflat_context* ctx, const char* cls, int k1, int k2, adeflat_result** out) {
  return run(ctx, out, [&](Session& s) { return adeflat::report_gm_reduce(s, cls_of(cls), k1, k2); });
}

adeflat_status adeflat_proof_check(adeflat_context* ctx, const char* cls, int K, int samples, adeflat_result** out) {
  return run(ctx, out, [&](Session& s) { return adeflat::report_proof_check(s, cls_of(cls), K, samples); });
}

adeflat_status adeflat_periods_eval(adeflat_context* ctx, const char* cls, const char* s, const char* monomials,
                                    adeflat_result** out) {
  return run(ctx, out, [&](Session& sess) {
    std::vector<std::string> mons;
    std::stringstream ss(str_of(monomials, "monomials"));
    std::string item;
    while (std::getline(ss, item, ',')) mons.push_back(item);
    if (mons.empty()) throw std::invalid_argument("no monomials given");
    const SingularityClass c = cls_of(cls);
    return adeflat::report_periods_eval(sess, c, adeflat::parse_s_values(sess.spec(c), str_of(s, "s")), mons);
  });
}

adeflat_status adeflat_periods_verify(adeflat_context* ctx, const char* cls, const char* s, adeflat_result** out) {
  return run(ctx, out, [&](Session& sess) {
    const SingularityClass c = cls_of(cls);
    return adeflat::report_periods_verify(sess, c, adeflat::parse_s_values(sess.spec(c), str_of(s, "s")));
  });
}

adeflat_status adeflat_bound(adeflat_context* ctx, const char* cls, int K, adeflat_result** out) {
  return run(ctx, out, [&](Session& s) { return adeflat::report_bound(s, cls_of(cls), K); });
}

adeflat_status adeflat_schema(adeflat_context* ctx, const char* kind, const char** out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("null output pointer");
    ctx->scratch = adeflat::schema_for(str_of(kind, "kind")).dump(2);
    *out = ctx->scratch.c_str();
    return ADEFLAT_OK;
  });
}

adeflat_status adeflat_poly_canonical(adeflat_context* ctx, const char* text, const char** out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("null output pointer");
    ctx->scratch = adeflat::MultiPoly::parse(str_of(text, "polynomial")).to_string();
    *out = ctx->scratch.c_str();
    return ADEFLAT_OK;
  });
}

const char* adeflat_result_kind(const adeflat_result* r) { return r ? r->report.kind.c_str() : ""; }

const char* adeflat_result_json(adeflat_result* r, int indent) {
  if (!r) return "";
  r->json_cache = r->report.json.dump(indent < 0 ? -1 : indent);
  return r->json_cache.c_str();
}

int adeflat_result_passed(const adeflat_result* r) { return r && r->report.passed ? 1 : 0; }

int adeflat_result_csv_count(const adeflat_result* r) { return r ? static_cast<int>(r->csv_text.size()) : 0; }

const char* adeflat_result_csv_name(const adeflat_result* r, int i) {
  if (!r || i < 0 || i >= static_cast<int>(r->csv_text.size())) return nullptr;
  return r->report.csv[i].name.c_str();
}

const char* adeflat_result_csv_text(const adeflat_result* r, int i) {
  if (!r || i < 0 || i >= static_cast<int>(r->csv_text.size())) return nullptr;
  return r->csv_text[i].c_str();
}

void adeflat_result_destroy(adeflat_result* r) { delete r; }

}  // extern "C"
