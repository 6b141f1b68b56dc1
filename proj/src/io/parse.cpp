#include "io/parse.hpp"

#include <cctype>
#include <map>
#include <utility>

#include "core/errors.hpp"

namespace hig {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    const char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) ++i;
      out.push_back({Tok::Number, std::string(in.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < in.size() && std::isalpha(static_cast<unsigned char>(in[i]))) ++i;
      out.push_back({Tok::Ident, std::string(in.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                         std::to_string(i));
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", in.size()});
  return out;
}

struct LabelKey {
  bool dual;
  Label label;
  friend auto operator<=>(const LabelKey& a, const LabelKey& b) {
    if (a.dual != b.dual) return a.dual <=> b.dual;
    return a.label <=> b.label;
  }
  friend bool operator==(const LabelKey&, const LabelKey&) = default;
};

// A label-free polynomial plus a combination of labels with polynomial
// coefficients.
struct Value {
  WeightedPoly poly;
  std::map<LabelKey, WeightedPoly> labeled;

  bool has_labels() const { return !labeled.empty(); }

  void clean() {
    std::erase_if(labeled, [](const auto& kv) { return kv.second.is_zero(); });
  }
};

Value operator+(Value a, const Value& b) {
  a.poly += b.poly;
  for (const auto& [k, c] : b.labeled) a.labeled[k] += c;
  a.clean();
  return a;
}

Value scale(Value a, const WeightedPoly& f) {
  a.poly = a.poly * f;
  for (auto& [k, c] : a.labeled) c = c * f;
  a.clean();
  return a;
}

Value negate(Value a) { return scale(std::move(a), WeightedPoly(-1)); }

std::optional<Scalar> as_constant(const WeightedPoly& p) {
  if (p.is_zero()) return Scalar();
  if (p.terms().size() == 1 && p.terms().begin()->first == Monomial{}) {
    return p.terms().begin()->second;
  }
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Value parse_all() {
    Value v = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  void expect(Tok kind, const char* what) {
    if (!accept(kind)) fail(std::string("expected ") + what);
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(peek().pos));
  }

  Value expr() {
    Value v = term();
    while (true) {
      if (accept(Tok::Plus)) {
        v = v + term();
      } else if (accept(Tok::Minus)) {
        v = v + negate(term());
      } else {
        return v;
      }
    }
  }

  bool starts_factor() const {
    const Tok k = peek().kind;
    return k == Tok::Number || k == Tok::Ident || k == Tok::LParen;
  }

  Value term() {
    Value v = unary();
    while (true) {
      if (accept(Tok::Star)) {
        v = multiply(v, unary());
      } else if (accept(Tok::Slash)) {
        v = divide(v, unary());
      } else if (starts_factor()) {
        v = multiply(v, unary());
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept(Tok::Minus)) return negate(unary());
    if (accept(Tok::Plus)) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (!accept(Tok::Caret)) return base;
    const bool paren = accept(Tok::LParen);
    const bool negative = accept(Tok::Minus);
    if (peek().kind != Tok::Number) fail("expected integer exponent");
    const std::string digits = next().text;
    if (paren) expect(Tok::RParen, "')'");
    if (digits.size() > 6) fail("exponent too large");
    const int e = std::stoi(digits);
    if (base.has_labels()) fail("basis labels cannot be raised to a power");
    if (!negative) return Value{pow(base.poly, static_cast<unsigned>(e)), {}};
    const auto c = as_constant(base.poly);
    if (!c || !c->is_monomial()) {
      throw DomainError("negative exponent needs a nonzero constant monomial base");
    }
    return Value{WeightedPoly(Scalar(1) / pow(*c, static_cast<unsigned>(e))), {}};
  }

  Value atom() {
    if (accept(Tok::LParen)) {
      Value v = expr();
      expect(Tok::RParen, "')'");
      return v;
    }
    if (peek().kind == Tok::Number) {
      const mpz_class z(next().text);
      return Value{WeightedPoly(Scalar(Rational(z))), {}};
    }
    if (peek().kind != Tok::Ident) fail("expected a number, variable or label");
    const std::string id = next().text;
    if (id == "t") return Value{WeightedPoly::t(), {}};
    if (id == "s") return Value{WeightedPoly::s(), {}};
    if (id == "v") return Value{WeightedPoly::v(), {}};
    if (id == "u") return Value{WeightedPoly::u(), {}};
    if (id == "pi") return Value{WeightedPoly(Scalar::pi_power(1, Rational(1))), {}};
    if (id == "Delta" || id == "N" || id == "DeltaStar" || id == "NStar") {
      const bool dual = id.ends_with("Star");
      const BasisKind kind = id.starts_with("Delta") ? BasisKind::Delta : BasisKind::N;
      expect(Tok::LParen, "'(' after label");
      const int k = signed_int();
      expect(Tok::Comma, "','");
      const int q = signed_int();
      expect(Tok::RParen, "')'");
      Value v;
      v.labeled[{dual, {kind, k, q}}] = WeightedPoly(1);
      return v;
    }
    throw ParseError("unknown identifier '" + id + "'");
  }

  int signed_int() {
    const bool negative = accept(Tok::Minus);
    if (peek().kind != Tok::Number) fail("expected integer");
    const std::string digits = next().text;
    if (digits.size() > 6) fail("index too large");
    const int value = std::stoi(digits);
    return negative ? -value : value;
  }

  static Value multiply(const Value& a, const Value& b) {
    if (a.has_labels() && b.has_labels()) {
      throw DomainError("product of two basis labels is not defined here");
    }
    if (a.has_labels()) return scale(a, b.poly);
    return scale(b, a.poly);
  }

  Value divide(const Value& a, const Value& b) {
    const auto c = b.has_labels() ? std::nullopt : as_constant(b.poly);
    if (!c) throw DomainError("division only by nonzero constants");
    if (c->is_zero()) throw DomainError("division by zero");
    return scale(a, WeightedPoly(Scalar(1) / *c));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Value parse_value(std::string_view text) { return Parser(text).parse_all(); }

void require_kind(const Value& v, bool dual) {
  for (const auto& [key, c] : v.labeled) {
    if (key.dual != dual) {
      throw ParseError(dual ? "expected DeltaStar/NStar labels" : "expected Delta/N labels");
    }
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw ParseError("empty rational");
  std::string s(text.substr(first, last - first + 1));
  const std::string original = s;
  if (s.front() == '+') s.erase(0, 1);
  // [-]digits[/digits]
  std::size_t i = s.empty() || s.front() != '-' ? 0 : 1;
  const std::size_t num_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  bool ok = i > num_start;
  if (ok && i < s.size()) {
    ok = s[i] == '/';
    const std::size_t den_start = ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    ok = ok && i > den_start && i == s.size();
  }
  if (!ok) throw ParseError("malformed rational '" + original + "'");
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("malformed rational '" + original + "'");
  if (r.get_den() == 0) throw ParseError("rational with zero denominator '" + original + "'");
  r.canonicalize();
  return r;
}

Scalar parse_scalar(std::string_view text) {
  const Value v = parse_value(text);
  if (v.has_labels()) throw ParseError("expected a scalar, found basis labels");
  const auto c = as_constant(v.poly);
  if (!c) throw ParseError("expected a scalar, found a polynomial");
  return *c;
}

WeightedPoly parse_poly(std::string_view text) {
  Value v = parse_value(text);
  if (v.has_labels()) throw ParseError("expected a polynomial, found basis labels");
  return std::move(v.poly);
}

CurvElement parse_curv_element(std::string_view text, const CurvBasisPtr& basis) {
  const Value v = parse_value(text);
  require_kind(v, false);
  if (!v.poly.is_zero()) throw ParseError("curvature measure has a term without a basis label");
  CurvElement out(basis);
  for (const auto& [key, c] : v.labeled) {
    const auto k = as_constant(c);
    if (!k) throw ParseError("curvature measure coefficients must be constants");
    out.add(key.label, *k);
  }
  return out;
}

DualElement parse_dual_element(std::string_view text, const DualAlgebra& algebra) {
  const Value v = parse_value(text);
  require_kind(v, true);
  DualElement out = algebra.evaluate(v.poly);
  for (const auto& [key, c] : v.labeled) {
    out += algebra.apply_polynomial(c, algebra.element(key.label));
  }
  return out;
}

}  // namespace hig
