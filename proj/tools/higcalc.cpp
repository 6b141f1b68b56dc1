// higcalc: command-line front end over the hig C API.
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "hig/hig.h"

namespace {

struct Options {
  int n = 0;
  std::string lambda = "0/1";
  std::string format = "json";
  std::string ring = "val";
  std::string kind = "valuation";
  std::vector<std::string> args;
};

using ContextPtr = std::unique_ptr<hig_context, decltype(&hig_context_destroy)>;

int report(hig_status status) {
  std::cerr << "higcalc: " << hig_status_name(status) << ": " << hig_last_error() << "\n";
  return 1;
}

// Prints the string result of a C API call.
template <class Call>
int emit(Call&& call) {
  char* out = nullptr;
  const hig_status status = call(&out);
  if (status != HIG_OK) return report(status);
  std::string text(out);
  hig_free_string(out);
  std::cout << text;
  if (text.empty() || text.back() != '\n') std::cout << '\n';
  return 0;
}

hig_format format_of(const std::string& f) {
  if (f == "csv") return HIG_FORMAT_CSV;
  if (f == "latex") return HIG_FORMAT_LATEX;
  return HIG_FORMAT_JSON;
}

int need_args(const std::string& verb, const Options& o, std::size_t count) {
  if (o.args.size() == count) return 0;
  std::cerr << "higcalc: " << verb << " expects " << count << " expression argument"
            << (count == 1 ? "" : "s") << ", got " << o.args.size() << "\n";
  return 1;
}

int dispatch(const std::string& verb, const Options& o) {
  hig_context* raw = nullptr;
  if (hig_status status = hig_context_create(o.n, &raw); status != HIG_OK) return report(status);
  const ContextPtr ctx(raw, &hig_context_destroy);
  const hig_ring ring = o.ring == "tilde" ? HIG_RING_TILDE : HIG_RING_VAL;
  const hig_format format = format_of(o.format);
  const char* lam = o.lambda.c_str();
  auto arg = [&o](std::size_t i) { return o.args[i].c_str(); };

  static const std::map<std::string, std::size_t> arity{
      {"dims", 0},         {"basis", 0},           {"reduce", 1},
      {"mul", 2},          {"dual-mul", 2},        {"kinematic-local", 0},
      {"kinematic-global", 0}, {"globalize", 1},   {"module-mul", 2},
      {"tlambda", 0},      {"image-check", 2},     {"angular-check", 1}};
  if (int rc = need_args(verb, o, arity.at(verb)); rc != 0) return rc;

  if (verb == "dims") return emit([&](char** out) { return hig_dims(ctx.get(), out); });
  if (verb == "basis") return emit([&](char** out) { return hig_basis(ctx.get(), out); });
  if (verb == "reduce") {
    return emit([&](char** out) { return hig_reduce(ctx.get(), ring, arg(0), out); });
  }
  if (verb == "mul") {
    return emit([&](char** out) { return hig_mul(ctx.get(), ring, arg(0), arg(1), out); });
  }
  if (verb == "dual-mul") {
    return emit([&](char** out) { return hig_dual_mul(ctx.get(), arg(0), arg(1), out); });
  }
  if (verb == "kinematic-local") {
    return emit([&](char** out) { return hig_kinematic_local(ctx.get(), format, out); });
  }
  if (verb == "kinematic-global") {
    return emit([&](char** out) { return hig_kinematic_global(ctx.get(), format, out); });
  }
  if (verb == "globalize") {
    return emit([&](char** out) { return hig_globalize(ctx.get(), arg(0), out); });
  }
  if (verb == "module-mul") {
    return emit([&](char** out) { return hig_module_mul(ctx.get(), arg(0), arg(1), out); });
  }
  if (verb == "tlambda") return emit([&](char** out) { return hig_tlambda(ctx.get(), lam, out); });
  if (verb == "image-check") {
    return emit(
        [&](char** out) { return hig_image_check(ctx.get(), lam, arg(0), arg(1), out); });
  }
  const hig_angular_kind kind = o.kind == "dual" ? HIG_ANGULAR_DUAL : HIG_ANGULAR_VALUATION;
  return emit([&](char** out) { return hig_angular_check(ctx.get(), lam, kind, arg(0), out); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hermitian integral geometry: rings, dual curvature measures, "
               "kinematic formulas and angularity."};
  app.require_subcommand(1);

  struct Verb {
    const char* name;
    const char* help;
    const char* args_help;
  };
  const Verb verbs[] = {
      {"dims", "dimensions of Val, the tilde ring and Curv", nullptr},
      {"basis", "the Delta/N basis labels", nullptr},
      {"reduce", "normal form of a polynomial", "POLY"},
      {"mul", "product in Val or the tilde ring", "POLY POLY"},
      {"dual-mul", "product of dual curvature measures", "DUAL DUAL"},
      {"kinematic-local", "local kinematic coefficient tensor", nullptr},
      {"kinematic-global", "global kinematic coefficients over Val", nullptr},
      {"globalize", "globalization of a curvature measure", "CURV"},
      {"module-mul", "valuation times curvature measure", "POLY CURV"},
      {"tlambda", "tbar_lambda in the dual algebra", nullptr},
      {"image-check", "is p1 + p2 wbar a valuation on the space form?", "P1 P2"},
      {"angular-check", "angularity of a valuation or dual element", "EXPR"},
  };

  Options opts;
  std::string chosen;
  for (const Verb& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("--n", opts.n, "complex dimension n >= 1")->required();
    sub->add_option("--lambda", opts.lambda, "curvature parameter p/q")->capture_default_str();
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "latex"}))
        ->capture_default_str();
    sub->add_option("--ring", opts.ring, "quotient ring")
        ->check(CLI::IsMember({"val", "tilde"}))
        ->capture_default_str();
    sub->add_option("--kind", opts.kind, "angular-check target")
        ->check(CLI::IsMember({"valuation", "dual"}))
        ->capture_default_str();
    if (v.args_help != nullptr) sub->add_option("args", opts.args, v.args_help);
    sub->callback([&chosen, name = std::string(v.name)] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  return dispatch(chosen, opts);
}
