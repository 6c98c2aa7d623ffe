#include "rescycle/parser.hpp"

#include <cctype>

#include "rescycle/errors.hpp"

namespace rescycle {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
  Rational number;

  explicit Lexer(const std::string& s) : src(s) { advance(); }

  [[noreturn]] void err(const std::string& what) const {
    fail(ErrKind::Parse, what + " at offset " + std::to_string(pos) + " in '" + src + "'");
  }

  void advance() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == src.size()) {
      tok = Tok::End;
      return;
    }
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      // a '/' continues the literal only when digits follow (`3/4`); otherwise
      // it is the reciprocal marker inside pv/res atoms
      if (pos + 1 < src.size() && src[pos] == '/' &&
          std::isdigit(static_cast<unsigned char>(src[pos + 1]))) {
        ++pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      }
      number = Rational(src.substr(start, pos - start));
      tok = Tok::Number;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        ++pos;
      ident = src.substr(start, pos - start);
      tok = Tok::Ident;
      return;
    }
    ++pos;
    switch (c) {
      case '+': tok = Tok::Plus; return;
      case '-': tok = Tok::Minus; return;
      case '*': tok = Tok::Star; return;
      case '^': tok = Tok::Caret; return;
      case '/': tok = Tok::Slash; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      default: --pos; err(std::string("unexpected character '") + c + "'");
    }
  }

  void expect(Tok t, const char* what) {
    if (tok != t) err(std::string("expected ") + what);
    advance();
  }
};

struct Parser {
  Lexer lx;
  const VarTable& vars;

  Parser(const std::string& s, const VarTable& v) : lx(s), vars(v) {}

  CurrentSum parse() {
    CurrentSum v = expr();
    if (lx.tok != Tok::End) lx.err("trailing input");
    return v;
  }

  CurrentSum expr() {
    CurrentSum v = term();
    while (lx.tok == Tok::Plus || lx.tok == Tok::Minus) {
      bool minus = lx.tok == Tok::Minus;
      lx.advance();
      CurrentSum r = term();
      v += minus ? negate(r) : r;
    }
    return v;
  }

  CurrentSum term() {
    CurrentSum v = unary();
    while (lx.tok == Tok::Star) {
      lx.advance();
      v = current_mul(v, unary());
    }
    return v;
  }

  CurrentSum unary() {
    if (lx.tok == Tok::Minus) {
      lx.advance();
      return negate(unary());
    }
    return power();
  }

  CurrentSum power() {
    CurrentSum v = atom();
    while (lx.tok == Tok::Caret) {
      lx.advance();
      if (lx.tok == Tok::Number) {
        if (!is_integer(lx.number) || lx.number < 0) lx.err("exponent must be a nonnegative integer");
        int n = static_cast<int>(numerator(lx.number));
        lx.advance();
        CurrentSum p = current_from_form(Form::one());
        for (int i = 0; i < n; ++i) p = current_mul(p, v);
        v = std::move(p);
      } else {
        v = current_mul(v, atom());
      }
    }
    return v;
  }

  // the `1/x^k` inside pv(...) and res(...)
  std::pair<int, int> reciprocal() {
    if (lx.tok != Tok::Number || lx.number != 1) lx.err("expected '1/'");
    lx.advance();
    lx.expect(Tok::Slash, "'/'");
    int var = var_index();
    int exp = 1;
    if (lx.tok == Tok::Caret) {
      lx.advance();
      if (lx.tok != Tok::Number || !is_integer(lx.number) || lx.number < 1)
        lx.err("expected a positive integer exponent");
      exp = static_cast<int>(numerator(lx.number));
      lx.advance();
    }
    return {var, exp};
  }

  int var_index() {
    if (lx.tok != Tok::Ident) lx.err("expected a variable name");
    int i = vars.index(lx.ident);
    if (i < 0) lx.err("unknown variable '" + lx.ident + "'");
    lx.advance();
    return i;
  }

  CurrentSum atom() {
    switch (lx.tok) {
      case Tok::Number: {
        Rational r = lx.number;
        lx.advance();
        return current_from_form(Form::scalar(RatFun(r)));
      }
      case Tok::LParen: {
        lx.advance();
        CurrentSum v = expr();
        lx.expect(Tok::RParen, "')'");
        return v;
      }
      case Tok::Ident: {
        std::string name = lx.ident;
        if (name == "bar" || name == "d" || name == "dbar" || name == "pv" || name == "res") {
          lx.advance();
          lx.expect(Tok::LParen, "'('");
          CurrentSum v;
          if (name == "bar") {
            v = current_from_form(Form::scalar(RatFun(Poly::barvariable(var_index()))));
          } else if (name == "pv") {
            auto [var, exp] = reciprocal();
            v = pv_current(var, exp);
          } else if (name == "res") {
            auto [var, exp] = reciprocal();
            v = res_current(var, exp);
          } else {
            CurrentSum inner = expr();
            if (name == "dbar") {
              v = dbar_current(inner);
            } else {
              Form f = current_as_form(inner);
              auto [holo, anti] = exterior_d(f);
              v = current_from_form(holo + anti);
            }
          }
          lx.expect(Tok::RParen, "')'");
          return v;
        }
        return current_from_form(Form::scalar(RatFun(Poly::variable(var_index()))));
      }
      default: lx.err("expected an atom");
    }
  }
};

} // namespace

Form current_as_form(const CurrentSum& c) {
  Form out;
  for (const auto& t : c.terms()) {
    if (t.tpi != 0 || !t.res.empty() || t.opaque)
      fail(ErrKind::Parse, "expression is a genuine current, not a form");
    Poly denext = Poly::constant(1);
    for (const auto& [v, e] : t.pv) denext *= Poly::monomial(Monomial::var(v, e), Rational(1));
    for (const auto& [key, cf] : t.smooth.coeffs()) {
      Form piece = Form::generator(key, cf * RatFun(Poly::constant(1), denext));
      out += piece;
    }
  }
  return out;
}

CurrentSum parse_current(const std::string& text, const VarTable& vars) {
  try {
    return Parser(text, vars).parse();
  } catch (const Error& e) {
    if (e.kind() == ErrKind::Parse) throw;
    // rewrite failures inside literal expressions are input errors
    fail(ErrKind::Parse, std::string("invalid expression '") + text + "': " + e.what());
  }
}

Form parse_form(const std::string& text, const VarTable& vars) {
  return current_as_form(parse_current(text, vars));
}

Poly parse_poly(const std::string& text, const VarTable& vars) {
  Form f = parse_form(text, vars);
  if (f.is_zero()) return Poly::zero();
  auto s = f.as_scalar();
  if (!s) fail(ErrKind::Parse, "expected a polynomial, found a form: " + text);
  if (!s->is_polynomial()) fail(ErrKind::Parse, "expected a polynomial, found a quotient: " + text);
  auto dc = s->den().as_constant();
  return s->num().scaled(Rational(1) / *dc);
}

Monomial parse_monomial(const std::string& text, const VarTable& vars) {
  // grammar-level failures in parse_poly stay parse errors; a well-formed
  // polynomial that is not a monomial is outside the supported fragment
  Poly p = parse_poly(text, vars);
  auto st = p.as_single_term();
  if (!st || st->second != 1 || !st->first.holomorphic())
    fail(ErrKind::Fragment, "unsupported non-monomial expression: " + text);
  return st->first;
}

} // namespace rescycle
