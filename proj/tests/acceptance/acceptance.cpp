// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
// Usage: acceptance <path-to-higcalc>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "io/format.hpp"
#include "io/parse.hpp"
#include "support/checks.hpp"

using namespace hig;
using namespace hig::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates failure counts per labelled case.
class Report {
 public:
  void expect(Failures failures, const std::string& where) {
    total_ += failures;
    if (failures != 0 && first_.empty()) first_ = where + ": " + std::to_string(failures);
    ++cases_;
  }
  void expect_true(bool ok, const std::string& where) { expect(ok ? 0 : 1, where); }
  Outcome outcome() const {
    std::string d = std::to_string(cases_) + " cases";
    if (total_ != 0) d += ", " + std::to_string(total_) + " violations, first at " + first_;
    return {total_ == 0, d};
  }

 private:
  Failures total_ = 0;
  std::size_t cases_ = 0;
  std::string first_;
};

std::string lambda_name(const Rational& l) { return "lambda=" + l.get_str(); }

Outcome criterion1() {
  Report r;
  for (int n = 1; n <= 6; ++n) r.expect(presentation_relations(*DualAlgebra::create(n)), "n=" + std::to_string(n));
  return r.outcome();
}

Outcome criterion2() {
  Report r;
  for (int n = 1; n <= 5; ++n) r.expect(table_matches_presentation(*DualAlgebra::create(n)), "n=" + std::to_string(n));
  return r.outcome();
}

Outcome criterion3() {
  Report r;
  for (int n = 2; n <= 5; ++n) r.expect(vbar_characterization(*DualAlgebra::create(n)), "n=" + std::to_string(n));
  return r.outcome();
}

Outcome criterion4() {
  Report r;
  for (int n = 1; n <= 6; ++n) r.expect(transpose_consistency(*CurvSpace::create(n)), "n=" + std::to_string(n));
  return r.outcome();
}

Outcome criterion5() {
  Report r;
  for (int n = 1; n <= 4; ++n) {
    const auto cs = CurvSpace::create(n);
    const auto kin = local_kinematic(cs->dual());
    const std::string at = "n=" + std::to_string(n);
    r.expect(kinematic_cocommutative(kin), at + " cocommutative");
    r.expect(kinematic_coassociative(kin), at + " coassociative");
    r.expect(kinematic_global_compatibility(*cs, kin, global_kinematic(cs->rings())), at + " global");
  }
  return r.outcome();
}

Outcome criterion6() {
  Report r;
  for (int n = 3; n <= 6; ++n) r.expect(h0_kernel_elements(*CurvSpace::create(n)), "kernel n=" + std::to_string(n));
  for (int n = 2; n <= 5; ++n) {
    const auto cs = CurvSpace::create(n);
    r.expect(h0_tensor_vanishes(*cs, local_kinematic(cs->dual())), "tensor n=" + std::to_string(n));
  }
  return r.outcome();
}

Outcome criterion7() {
  Report r;
  for (int n = 1; n <= 5; ++n) {
    const auto rings = RingContext::create(n);
    r.expect(pairing_matches_reduction(rings), "reduction n=" + std::to_string(n));
    r.expect(partial_integration(rings), "partial integration n=" + std::to_string(n));
  }
  const auto r1 = RingContext::create(1);
  const auto r2 = RingContext::create(2);
  r.expect_true(r1->pd_pair(T(), T()) == Scalar::pi_power(-1, 2), "n=1 <t,t>");
  r.expect_true(r2->top_evaluation(pow(T(), 4)) == Scalar::pi_power(-2, 12), "n=2 ev(t^4)");
  r.expect_true(r2->top_evaluation(T() * T() * S()) == Scalar::pi_power(-2, 4), "n=2 ev(t^2 s)");
  r.expect_true(r2->top_evaluation(S() * S()) == Scalar::pi_power(-2, 2), "n=2 ev(s^2)");
  return r.outcome();
}

Outcome criterion8() {
  Report r;
  for (int n = 3; n <= 6; ++n) r.expect(ell_en_special_values(*CurvSpace::create(n)), "n=" + std::to_string(n));
  return r.outcome();
}

Outcome criterion9() {
  Report r;
  for (int n = 2; n <= 4; ++n) {
    const auto cs = CurvSpace::create(n);
    r.expect_true(t_lambda_derivative_at_zero(cs) == expected_t_lambda_derivative(cs->dual()),
                  "derivative n=" + std::to_string(n));
    for (const Rational& lambda : sample_lambdas()) {
      r.expect(t_lambda_pipeline(LambdaContext(cs, lambda)), "n=" + std::to_string(n) + " " + lambda_name(lambda));
    }
  }
  return r.outcome();
}

Outcome criterion10() {
  Report r;
  std::size_t checked = 0;
  for (int n = 2; n <= 5; ++n) {
    const auto cs = CurvSpace::create(n);
    for (const Rational& lambda : sample_lambdas()) {
      const AngularityTally tally = angularity_agreement(LambdaContext(cs, lambda), 20261014 + n, 100);
      checked += tally.checked;
      r.expect(tally.disagreements, "n=" + std::to_string(n) + " " + lambda_name(lambda));
    }
  }
  const LambdaContext ctx4 = LambdaContext::create(4, Rational(0));
  const WeightedPoly example = pow(T(), 4) - rational_poly(6) * S() * T() * T() + rational_poly(6) * S() * S();
  r.expect_true(is_angular_valuation(example, ctx4).angular, "n=4 example angular");
  Matrix m(2, 3);
  const ScalarVector a = ValElement(ctx4.rings(), example).coordinates(4);
  const ScalarVector b = ValElement(ctx4.rings(), pow(T(), 4)).coordinates(4);
  for (std::size_t j = 0; j < 3; ++j) {
    m(0, j) = a[j];
    m(1, j) = b[j];
  }
  r.expect_true(rank(m) == 2, "n=4 example not proportional to t^4");
  const AngularityReport s = is_angular_valuation(S(), LambdaContext::create(3, Rational(0)));
  r.expect_true(!s.angular && s.residue.poly() == rational_poly(1, 10) * pow(T(), 5), "n=3 p=s residue");
  Outcome out = r.outcome();
  out.detail += ", " + std::to_string(checked) + " verdict triples";
  return out;
}

std::string run_cli(const std::string& cli, const std::string& args) {
  const std::string command = "'" + cli + "' " + args;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  if (pclose(pipe) != 0) out += "\n<nonzero exit>";
  return out;
}

// Re-parses every emitted piece of the output and checks it re-emits to the
// same text.
class RoundTrip {
 public:
  explicit RoundTrip(int n) : algebra_(DualAlgebra::create(n)) {}

  Failures walk(const Json& j) {
    Failures bad = 0;
    if (j.is_array()) {
      for (const Json& x : j) bad += walk(x);
      return bad;
    }
    if (!j.is_object()) return 0;
    if (j.contains("terms") && j.contains("n") && is_element(j["terms"])) bad += element(j);
    if (j.contains("basis") && j.contains("k")) bad += label(j);
    for (const auto& [key, value] : j.items()) {
      if (value.is_string()) bad += text(key, value.get<std::string>());
      else bad += walk(value);
    }
    return bad;
  }

  std::size_t pieces() const { return pieces_; }

 private:
  static bool is_element(const Json& terms) {
    return terms.is_array() && (terms.empty() || terms[0].contains("basis"));
  }

  Failures label(const Json& j) {
    ++pieces_;
    const bool dual = j["basis"] == "DeltaStar" || j["basis"] == "NStar";
    const Json emitted = label_to_json(label_from_json(j, dual), dual);
    Failures bad = 0;
    for (const auto& [key, value] : emitted.items()) bad += !j.contains(key) || j[key] != value;
    return bad;
  }

  Failures element(const Json& j) {
    ++pieces_;
    const bool dual = !j["terms"].empty() && (j["terms"][0]["basis"] == "DeltaStar" || j["terms"][0]["basis"] == "NStar");
    if (dual) return element_to_json(dual_element_from_json(j, algebra_->basis())) != j;
    return element_to_json(curv_element_from_json(j, algebra_->basis())) != j;
  }

  Failures text(const std::string& key, const std::string& value) {
    static const std::vector<std::string> polys{"normal_form", "product", "valuation", "p1",
                                                "p2", "defect", "preimage", "residue"};
    static const std::vector<std::string> monomials{"source", "left", "right"};
    ++pieces_;
    if (key == "coeff") return parse_scalar(value).to_string() != value;
    if (key == "lambda") return parse_rational(value).get_str() != value && parse_rational(value).get_str() + "/1" != value;
    if (std::find(polys.begin(), polys.end(), key) != polys.end()) return parse_poly(value).to_string() != value;
    if (std::find(monomials.begin(), monomials.end(), key) != monomials.end()) {
      const WeightedPoly p = parse_poly(value);
      if (p.terms().size() != 1 || p.terms().begin()->second != Scalar(1)) return 1;
      return monomial_to_string(p.terms().begin()->first) != value;
    }
    if (key == "basis") return 0;
    --pieces_;
    return 0;
  }

  DualAlgebraPtr algebra_;
  std::size_t pieces_ = 0;
};

Outcome criterion11(const std::string& cli) {
  Report r;
  const std::string first = run_cli(cli, "kinematic-local --n 3");
  const std::string second = run_cli(cli, "kinematic-local --n 3");
  r.expect_true(!first.empty() && first == second, "kinematic-local byte identity");
  for (const char* format : {"csv", "latex"}) {
    const std::string args = std::string("kinematic-local --n 3 --format ") + format;
    r.expect_true(run_cli(cli, args) == run_cli(cli, args), std::string("byte identity ") + format);
  }

  const std::vector<std::string> commands{
      "kinematic-local --n 3",
      "kinematic-global --n 3",
      "basis --n 3",
      "reduce --n 3 \"s^3 + t u\"",
      "reduce --n 3 --ring tilde \"s\"",
      "mul --n 3 \"t + pi s\" \"t^2 - s\"",
      "dual-mul --n 3 \"v + t\" \"s * NStar(3,1) + DeltaStar(4,2)\"",
      "globalize --n 3 \"6/pi * Delta(2,1) + N(3,1)\"",
      "module-mul --n 3 \"t - s\" \"Delta(0,0) + 2 * N(1,0)\"",
      "tlambda --n 3 --lambda 1/2",
      "tlambda --n 3 --lambda -1",
      "image-check --n 3 --lambda 1/2 \"1\" \"0\"",
      "image-check --n 3 --lambda 1/2 \"t\" \"1/8\"",
      "angular-check --n 3 \"s\"",
      "angular-check --n 3 --kind dual \"v\"",
  };
  std::size_t pieces = 0;
  for (const std::string& args : commands) {
    const std::string out = run_cli(cli, args);
    RoundTrip rt(3);
    try {
      r.expect(rt.walk(Json::parse(out)), args);
    } catch (const std::exception& e) {
      r.expect(1, args + " (" + e.what() + ")");
    }
    pieces += rt.pieces();
  }
  Outcome out = r.outcome();
  out.detail += ", " + std::to_string(pieces) + " emitted pieces re-parsed";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path-to-higcalc>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"presentation relations vanish, n=1..6", criterion1},
      {"presentation product equals table product, n=1..5", criterion2},
      {"vbar table characterization, n=2..5", criterion3},
      {"module formulas are transposed dual tables, n=1..6", criterion4},
      {"kinematic coalgebra and globalization, n=1..4", criterion5},
      {"H0' kernel elements n=3..6 and (H0' x H0') K = 0 n=2..5", criterion6},
      {"pairing rule, reduction and partial integration, n=1..5", criterion7},
      {"special values of l and n maps, n=3..6", criterion8},
      {"t_lambda pipeline and Q invertibility, n=2..4", criterion9},
      {"angularity three-way agreement and examples, n=2..5", criterion10},
      {"CLI determinism and round trips", [&] { return criterion11(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
         << o.detail << "; " << static_cast<long>(secs * 1000) << " ms]";
    std::cout << line.str() << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
