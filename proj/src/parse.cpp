#include "sqf/parse.hpp"

#include <cctype>
#include <functional>
#include <sstream>

#include "sqf/errors.hpp"

namespace sqf {

namespace {

constexpr unsigned kMaxExponent = 1u << 12;

// Recursive-descent parser evaluating directly into a ring R.
template <class R>
class Parser {
 public:
  using Constant = std::function<R(std::int64_t)>;
  using Variable = std::function<R(char, std::size_t)>;

  Parser(std::string_view text, Constant constant, Variable variable)
      : s_(text), constant_(std::move(constant)), variable_(std::move(variable)) {}

  R parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    R r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  R expr() {
    R r = accept('-') ? constant_(0) - term() : term();
    while (true) {
      if (accept('+')) {
        r = r + term();
      } else if (accept('-')) {
        r = r - term();
      } else {
        return r;
      }
    }
  }

  R term() {
    R r = factor();
    while (accept('*')) r = r * factor();
    return r;
  }

  R factor() {
    R base = primary();
    if (!accept('^')) return base;
    skip();
    const std::size_t at = pos_;
    const std::uint64_t e = integer();
    if (e > kMaxExponent) throw ParseError("exponent too large", at);
    return pow(base, static_cast<unsigned>(e));
  }

  std::uint64_t integer() {
    skip();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (std::uint64_t{1} << 58)) throw ParseError("integer too large", start);
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", start);
    return v;
  }

  R primary() {
    skip();
    if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      R r = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant_(static_cast<std::int64_t>(integer()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ - start != 1)
        throw ParseError("unknown variable '" + std::string(s_.substr(start, pos_ - start)) + "'", start);
      return variable_(c, start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Constant constant_;
  Variable variable_;
};

[[noreturn]] void unknown_variable(char v, std::size_t at) {
  throw ParseError(std::string("unknown variable '") + v + "'", at);
}

Code generator_or_throw(const FieldPtr& field, char v, std::size_t at) {
  if (field->degree() == 1) unknown_variable(v, at);
  return field->generator();
}

// Number of nonzero terms a coefficient prints as.
std::size_t term_count(const FieldElement& a) {
  std::size_t n = 0;
  for (auto c : a.coords()) n += c != 0;
  return n;
}

std::size_t term_count(const Poly& a) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    // A multi-term field coefficient still prints as one parenthesised factor.
    n += 1;
  }
  return n;
}

// Text for coefficient c multiplying a monomial `mono` (nonempty).
template <class C>
std::string scaled_monomial(const C& c, bool c_is_one, const std::string& c_text, const std::string& mono) {
  if (c_is_one) return mono;
  if (term_count(c) > 1) return "(" + c_text + ")*" + mono;
  return c_text + "*" + mono;
}

std::string power(char v, std::size_t k) {
  std::string s(1, v);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

}  // namespace

std::vector<std::uint32_t> parse_modulus(std::string_view text, std::uint32_t p) {
  auto fp = Field::make(p);
  Parser<Poly> parser(
      text, [&](std::int64_t v) { return Poly::constant(fp, fp->from_int(v)); },
      [&](char v, std::size_t at) -> Poly {
        if (v != 'u') unknown_variable(v, at);
        return Poly::t(fp);
      });
  Poly m = parser.parse();
  return {m.coeffs().begin(), m.coeffs().end()};
}

FieldElement parse_field_element(std::string_view text, const FieldPtr& field) {
  Poly a = parse_poly(text, field);
  if (a.degree() > 0) throw InvalidArgument("expected a field element, found a polynomial in t");
  return a.coeff(0);
}

Poly parse_poly(std::string_view text, const FieldPtr& field) {
  Parser<Poly> parser(
      text, [&](std::int64_t v) { return Poly::constant(field, field->from_int(v)); },
      [&](char v, std::size_t at) -> Poly {
        if (v == 't') return Poly::t(field);
        if (v == 'u') return Poly::constant(field, generator_or_throw(field, v, at));
        unknown_variable(v, at);
      });
  return parser.parse();
}

BiPoly parse_bipoly(std::string_view text, const FieldPtr& field) {
  Parser<BiPoly> parser(
      text, [&](std::int64_t v) { return BiPoly::from_poly(Poly::constant(field, field->from_int(v))); },
      [&](char v, std::size_t at) -> BiPoly {
        if (v == 'x') return BiPoly::x(field);
        if (v == 't') return BiPoly::from_poly(Poly::t(field));
        if (v == 'u') return BiPoly::from_poly(Poly::constant(field, generator_or_throw(field, v, at)));
        unknown_variable(v, at);
      });
  return parser.parse();
}

std::string format(const FieldElement& a) { return a.field()->format(a.code()); }

std::string format(const Poly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const FieldElement c = a.coeff(k);
    const std::string ct = format(c);
    if (k == 0) {
      os << (term_count(c) > 1 ? "(" + ct + ")" : ct);
    } else {
      os << scaled_monomial(c, a[k] == 1, ct, power('t', k));
    }
  }
  return os.str();
}

std::string format(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const Poly& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string ct = format(c);
    if (i == 0) {
      os << ct;
    } else {
      const bool multi = term_count(c) > 1 || (c.degree() == 0 && term_count(c.coeff(0)) > 1);
      if (c.is_one()) {
        os << power('x', i);
      } else if (multi && c.degree() > 0) {
        os << "(" << ct << ")*" << power('x', i);
      } else {
        os << ct << "*" << power('x', i);
      }
    }
  }
  return os.str();
}

}  // namespace sqf
