#include "distprod/expr.hpp"

#include <cctype>
#include <optional>

namespace distprod {

ParseError::ParseError(const std::string& message, SourcePos pos)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      detail_(message) {}

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void bump() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) bump();
    current_ = Token{Tok::end, "", {line_, col_}};
    if (i_ >= src_.size()) return;
    const char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current_.kind = Tok::number;
      while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
        current_.text += src_[i_];
        bump();
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      current_.kind = Tok::ident;
      while (i_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[i_]))) {
        current_.text += src_[i_];
        bump();
      }
      return;
    }
    switch (c) {
      case '+': current_.kind = Tok::plus; break;
      case '-': current_.kind = Tok::minus; break;
      case '*': current_.kind = Tok::star; break;
      case '/': current_.kind = Tok::slash; break;
      case '^': current_.kind = Tok::caret; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", current_.pos);
    }
    current_.text = std::string(1, c);
    bump();
  }

  std::string_view src_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Token current_;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::end) return "end of input";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  ExprAst parse_expr() {
    ExprAst ast;
    bool negative = false;
    if (lex_.peek().kind == Tok::minus) {
      lex_.take();
      negative = true;
    } else if (lex_.peek().kind == Tok::plus) {
      lex_.take();
    }
    ast.terms.push_back(parse_term(negative));
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      negative = lex_.take().kind == Tok::minus;
      ast.terms.push_back(parse_term(negative));
    }
    if (lex_.peek().kind != Tok::end) throw ParseError("expected '+' or '-', found " + describe(lex_.peek()), lex_.peek().pos);
    return ast;
  }

 private:
  static bool starts_item(const Token& t) { return t.kind == Tok::number || t.kind == Tok::ident; }

  ExprTerm parse_term(bool negative) {
    ExprTerm term;
    term.pos = lex_.peek().pos;
    if (!starts_item(lex_.peek())) throw ParseError("expected a term, found " + describe(lex_.peek()), lex_.peek().pos);
    if (negative) term.coeff = ValuePoly(-1);
    parse_item(term);
    while (true) {
      if (lex_.peek().kind == Tok::star) {
        lex_.take();
        if (!starts_item(lex_.peek()))
          throw ParseError("expected a factor after '*', found " + describe(lex_.peek()), lex_.peek().pos);
      } else if (!starts_item(lex_.peek())) {
        break;
      }
      parse_item(term);
    }
    return term;
  }

  std::optional<long long> parse_power(bool allow_negative, const std::string& symbol) {
    if (lex_.peek().kind != Tok::caret) return std::nullopt;
    lex_.take();
    bool negative = false;
    if (lex_.peek().kind == Tok::minus) {
      const SourcePos at = lex_.take().pos;
      if (!allow_negative) throw ParseError("negative power of " + symbol, at);
      negative = true;
    }
    const Token num = lex_.take();
    if (num.kind != Tok::number) throw ParseError("expected an integer power, found " + describe(num), num.pos);
    if (num.text.size() > 9) throw ParseError("power too large", num.pos);
    long long k = std::stoll(num.text);
    return negative ? -k : k;
  }

  void parse_item(ExprTerm& term) {
    const Token t = lex_.take();
    if (t.kind == Tok::number) {
      std::string text = t.text;
      if (lex_.peek().kind == Tok::slash) {
        lex_.take();
        const Token den = lex_.take();
        if (den.kind != Tok::number) throw ParseError("expected a denominator, found " + describe(den), den.pos);
        if (den.text.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", den.pos);
        text += "/" + den.text;
      }
      term.coeff *= ValuePoly(parse_rational(text));
      return;
    }
    const std::string& name = t.text;
    std::uint32_t* factor = nullptr;
    if (name == "D") factor = &term.factors.m;
    else if (name == "dD") factor = &term.factors.n;
    else if (name == "ddD") factor = &term.factors.p;
    else if (name == "delta") factor = &term.factors.q;

    if (factor != nullptr) {
      *factor += static_cast<std::uint32_t>(parse_power(false, name).value_or(1));
      return;
    }
    if (name == "w") {
      term.coeff *= ValuePoly::omega(static_cast<std::int32_t>(parse_power(true, name).value_or(1)));
    } else if (name == "d0" || name == "a" || name == "g") {
      const Symbol s = name == "d0" ? Symbol::d0 : name == "a" ? Symbol::a : Symbol::g;
      term.coeff *= ValuePoly::symbol(s, static_cast<std::int32_t>(parse_power(false, name).value_or(1)));
    } else {
      throw ParseError("unknown symbol '" + name + "'", t.pos);
    }
  }

  Lexer lex_;
};

}  // namespace

ExprAst parse(std::string_view text) {
  Parser p(text);
  return p.parse_expr();
}

IntegrandSum lower(const ExprAst& ast) {
  IntegrandSum out;
  for (const auto& t : ast.terms) out.push_back({t.factors, t.coeff});
  return normalize(out);
}

}  // namespace distprod
