#include "hig/hig.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"
#include "io/format.hpp"
#include "io/parse.hpp"

struct hig_context {
  hig::CurvSpacePtr space;
};

namespace {

constexpr int kMaxN = 64;

thread_local std::string last_error;

char* copy_out(const std::string& s) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf == nullptr) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

hig_status fail(hig_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
hig_status guarded(char** out, const std::function<std::string()>& body) {
  if (out == nullptr) return fail(HIG_ERR_INVALID_ARGUMENT, "output pointer is NULL");
  *out = nullptr;
  try {
    *out = copy_out(body());
    last_error.clear();
    return HIG_OK;
  } catch (const hig::ParseError& e) {
    return fail(HIG_ERR_PARSE, e.what());
  } catch (const hig::RangeError& e) {
    return fail(HIG_ERR_RANGE, e.what());
  } catch (const hig::DomainError& e) {
    return fail(HIG_ERR_DOMAIN, e.what());
  } catch (const hig::InconsistencyError& e) {
    return fail(HIG_ERR_INTERNAL, std::string("internal inconsistency: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HIG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(HIG_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " is NULL");
}

std::string dump(const hig::Json& j) { return j.dump(2); }

hig::Quotient quotient_of(hig_ring ring) {
  if (ring == HIG_RING_VAL) return hig::Quotient::Val;
  if (ring == HIG_RING_TILDE) return hig::Quotient::Tilde;
  throw std::invalid_argument("unknown ring");
}

const char* ring_name(hig_ring ring) { return ring == HIG_RING_VAL ? "val" : "tilde"; }

hig::Json dims_json(const std::vector<std::size_t>& dims) {
  hig::Json out = hig::Json::array();
  for (std::size_t d : dims) out.push_back(d);
  return out;
}

}  // namespace

extern "C" {

hig_status hig_context_create(int n, hig_context** out) {
  if (out == nullptr) return fail(HIG_ERR_INVALID_ARGUMENT, "output pointer is NULL");
  *out = nullptr;
  if (n < 1 || n > kMaxN) {
    return fail(HIG_ERR_INVALID_ARGUMENT,
                "n must be between 1 and " + std::to_string(kMaxN) + ", got " + std::to_string(n));
  }
  try {
    *out = new hig_context{hig::CurvSpace::create(n)};
    return HIG_OK;
  } catch (const std::exception& e) {
    return fail(HIG_ERR_INTERNAL, e.what());
  }
}

void hig_context_destroy(hig_context* ctx) { delete ctx; }

int hig_context_n(const hig_context* ctx) { return ctx == nullptr ? 0 : ctx->space->n(); }

const char* hig_last_error(void) { return last_error.c_str(); }

const char* hig_status_name(hig_status status) {
  switch (status) {
    case HIG_OK: return "ok";
    case HIG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HIG_ERR_PARSE: return "parse error";
    case HIG_ERR_DOMAIN: return "domain error";
    case HIG_ERR_RANGE: return "range error";
    case HIG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void hig_free_string(char* s) { std::free(s); }

hig_status hig_dims(const hig_context* ctx, char** out) {
  return guarded(out, [&] {
    require(ctx, "context");
    const auto& rings = *ctx->space->rings();
    return dump(hig::Json{{"val", dims_json(rings.dimensions(hig::Quotient::Val))},
                          {"tilde", dims_json(rings.dimensions(hig::Quotient::Tilde))},
                          {"curv", ctx->space->basis()->size()}});
  });
}

hig_status hig_basis(const hig_context* ctx, char** out) {
  return guarded(out, [&] {
    require(ctx, "context");
    hig::Json labels = hig::Json::array();
    for (const hig::Label& l : ctx->space->basis()->labels()) {
      labels.push_back(hig::label_to_json(l, false));
    }
    return dump(hig::Json{{"n", ctx->space->n()}, {"labels", std::move(labels)}});
  });
}

hig_status hig_reduce(const hig_context* ctx, hig_ring ring, const char* expr, char** out) {
  return guarded(out, [&] {
    require(ctx, "context");
    require(expr, "expression");
    const hig::WeightedPoly p = hig::parse_poly(expr);
    const auto nf = ctx->space->rings()->normal_form(quotient_of(ring), p);
    return dump(hig::Json{{"n", ctx->space->n()},
                          {"ring", ring_name(ring)},
                          {"normal_form", nf.to_string()}});
  });
}

hig_status hig_mul(const hig_context* ctx, hig_ring ring, const char* a, const char* b,
                   char** out) {
  return guarded(out, [&] {
    require(ctx, "context");
    require(a, "left operand");
    require(b, "right operand");
    const hig::Quotient q = quotient_of(ring);
    const auto& rings = *ctx->space->rings();
    const hig::WeightedPoly x = rings.normal_form(q, hig::parse_poly(a));
    const hig::WeightedPoly y = rings.normal_form(q, hig::parse_poly(b));
    return dump(hig::Json{{"n", ctx->space->n()},
                          {"ring", ring_name(ring)},
                          {"product", rings.normal_form(q, x * y).to_string()}});
  });
}

hig_status hig_dual_mul(const hig_context* ctx, const char* x, const char* y, char** out) {
  return guarded(out, [&] {
    require(ctx, "context");
    require(x, "left operand");
    require(y, "right operand");
    const hig::DualAlgebra& algebra = ctx->space->dual();
    const hig::DualElement a = hig::parse_dual_element(x, algebra);
    const hig::DualElement b = hig::parse_dual_element(y, algebra);
    return dump(hig::element_to_json(algebra.multiply(a, b)));
  });
}

hig_status hig_kinematic_local(const hig_context* ctx, hig_format format, char** out) {
  return guarded(out, [&] {
    require(ctx, "context");
    const hig::LocalKinematic k = hig::local_kinematic(ctx->space->dual());
    switch (format) {
      case HIG_FORMAT_JSON: return dump(hig::local_kinematic_json(k));
      case HIG_FORMAT_CSV: return hig::local_kinematic_csv(k);
      case HIG_FORMAT_LATEX: return hig::local_kinematic_latex(k);
    }
    throw std::invalid_argument("unknown output format");
  });
}

hig_status hig_kinematic_global(const hig_context* ctx, hig_format format, char** out) {
  return guarded(out, [&] {
    require(ctx, "context");
    const hig::GlobalKinematic k = hig::global_kinematic(ctx->space->rings());
    switch (format) {
      case HIG_FORMAT_JSON: return dump(hig::global_kinematic_json(k));
      case HIG_FORMAT_CSV: return hig::global_kinematic_csv(k);
      case HIG_FORMAT_LATEX: return hig::global_kinematic_latex(k);
    }
    throw std::invalid_argument("unknown output format");
  });
}

hig_status hig_globalize(const hig_context* ctx, const char* phi, char** out) {
  return guarded(out, [&] {
    require(ctx, "context");
    require(phi, "curvature measure");
    const hig::CurvElement x = hig::parse_curv_element(phi, ctx->space->basis());
    return dump(hig::Json{{"n", ctx->space->n()},
                          {"valuation", ctx->space->globalize(x).poly().to_string()}});
  });
}

hig_status hig_module_mul(const hig_context* ctx, const char* valuation, const char* phi,
                          char** out) {
  return guarded(out, [&] {
    require(ctx, "context");
    require(valuation, "valuation");
    require(phi, "curvature measure");
    const hig::WeightedPoly p = hig::parse_poly(valuation);
    if (p.has_v()) throw hig::DomainError("valuations are polynomials in t and s only");
    const hig::CurvElement x = hig::parse_curv_element(phi, ctx->space->basis());
    return dump(hig::element_to_json(
        ctx->space->module_mul(hig::ValElement(ctx->space->rings(), p), x)));
  });
}

hig_status hig_tlambda(const hig_context* ctx, const char* lambda, char** out) {
  return guarded(out, [&] {
    require(ctx, "context");
    require(lambda, "lambda");
    const hig::LambdaContext lc(ctx->space, hig::parse_rational(lambda));
    const hig::DualPresentation pres = lc.t_lambda_presentation();
    return dump(hig::Json{{"n", lc.n()},
                          {"lambda", hig::rational_to_string(lc.lambda())},
                          {"element", hig::element_to_json(lc.t_lambda_bar())},
                          {"presentation",
                           {{"p1", pres.p1.poly().to_string()}, {"p2", pres.p2.poly().to_string()}}}});
  });
}

hig_status hig_image_check(const hig_context* ctx, const char* lambda, const char* p1,
                           const char* p2, char** out) {
  return guarded(out, [&] {
    require(ctx, "context");
    require(lambda, "lambda");
    require(p1, "p1");
    require(p2, "p2");
    const hig::LambdaContext lc(ctx->space, hig::parse_rational(lambda));
    const hig::WeightedPoly a = hig::parse_poly(p1);
    const hig::WeightedPoly b = hig::parse_poly(p2);
    if (a.has_v() || b.has_v()) throw hig::DomainError("p1 and p2 must not contain v");
    const hig::ImageCheck r = lc.image_membership({hig::ValElement(lc.rings(), a), b});
    hig::Json j{{"n", lc.n()},
                {"lambda", hig::rational_to_string(lc.lambda())},
                {"member", r.member},
                {"defect", r.defect.poly().to_string()}};
    j["preimage"] = r.preimage ? hig::Json(r.preimage->to_string()) : hig::Json(nullptr);
    return dump(j);
  });
}

hig_status hig_angular_check(const hig_context* ctx, const char* lambda, hig_angular_kind kind,
                             const char* expr, char** out) {
  return guarded(out, [&] {
    require(ctx, "context");
    require(lambda, "lambda");
    require(expr, "expression");
    const hig::LambdaContext lc(ctx->space, hig::parse_rational(lambda));
    hig::AngularityReport report{false, std::nullopt, hig::ValElement::zero(lc.rings())};
    if (kind == HIG_ANGULAR_DUAL) {
      report = hig::is_angular_dual(lc.dual(), hig::parse_dual_element(expr, lc.dual()));
    } else if (kind == HIG_ANGULAR_VALUATION) {
      const hig::WeightedPoly p = hig::parse_poly(expr);
      if (p.has_v()) throw hig::DomainError("valuations are polynomials in t and s only");
      report = hig::is_angular_valuation(p, lc);
    } else {
      throw std::invalid_argument("unknown angularity target");
    }
    hig::Json j = hig::report_to_json(report);
    j["n"] = lc.n();
    j["lambda"] = hig::rational_to_string(lc.lambda());
    return dump(j);
  });
}

}  // extern "C"
