#include "kholo/expr.hpp"

#include <cctype>

#include "kholo/error.hpp"

namespace kholo {

namespace {

constexpr std::size_t kMaxNesting = 200;

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const auto line = line_, col = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += advance();
        out.push_back({Tok::Int, digits, line, col});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string ident;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ident += advance();
        out.push_back({Tok::Ident, ident, line, col});
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
        default:
          throw Error(ErrorKind::SyntaxError, at(line, col) + "unexpected character '" + printable(c) + "'");
      }
      advance();
      out.push_back({kind, std::string(1, c), line, col});
    }
  }

  static std::string at(std::size_t line, std::size_t col) {
    return "line " + std::to_string(line) + ", column " + std::to_string(col) + ": ";
  }

 private:
  static std::string printable(char c) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isprint(u)) return std::string(1, c);
    static const char* hex = "0123456789abcdef";
    return std::string("\\x") + hex[u >> 4] + hex[u & 15];
  }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expr parse() {
    Expr e = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, Lexer::at(peek().line, peek().column) + msg);
  }

  static Expr node(Expr::Op op, const Token& at) {
    Expr e;
    e.op = op;
    e.line = at.line;
    e.column = at.column;
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = take();
      Expr e = node(op.kind == Tok::Plus ? Expr::Op::Add : Expr::Op::Sub, op);
      e.args.push_back(std::move(lhs));
      e.args.push_back(term());
      lhs = std::move(e);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (peek().kind == Tok::Star) {
      const Token& op = take();
      Expr e = node(Expr::Op::Mul, op);
      e.args.push_back(std::move(lhs));
      e.args.push_back(factor());
      lhs = std::move(e);
    }
    return lhs;
  }

  Expr factor() {
    Expr base = atom();
    if (peek().kind != Tok::Caret) return base;
    const Token& caret = take();
    Expr e = node(Expr::Op::Pow, caret);
    e.exponent = exponent();
    e.args.push_back(std::move(base));
    return e;
  }

  std::uint64_t exponent() {
    bool paren = false;
    if (peek().kind == Tok::LParen) {
      take();
      paren = true;
    }
    if (peek().kind == Tok::Minus)
      throw Error(ErrorKind::NegativeExponent, Lexer::at(peek().line, peek().column) + "negative exponent");
    if (peek().kind != Tok::Int) fail("expected a non-negative integer exponent");
    const Token& tok = take();
    if (tok.text.size() > 7 || std::stoull(tok.text) > kMaxDegree)
      throw Error(ErrorKind::DegreeOverflow, Lexer::at(tok.line, tok.column) + "exponent too large");
    const auto value = std::stoull(tok.text);
    if (paren) {
      if (peek().kind != Tok::RParen) fail("expected ')'");
      take();
    }
    return value;
  }

  Expr atom() {
    if (++depth_ > kMaxNesting) fail("expression nested too deeply");
    struct Guard {
      std::size_t& d;
      ~Guard() { --d; }
    } guard{depth_};

    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Int: {
        take();
        Expr e = node(Expr::Op::Constant, tok);
        mpz_class num(tok.text, 10);
        if (peek().kind == Tok::Slash) {
          take();
          if (peek().kind != Tok::Int) fail("expected denominator");
          const Token& den = take();
          mpz_class d(den.text, 10);
          if (d == 0) throw Error(ErrorKind::DivisionByZero, Lexer::at(den.line, den.column) + "zero denominator");
          e.constant = GaussianRational(Rational(num, d));
        } else {
          e.constant = GaussianRational(Rational(num));
        }
        return e;
      }
      case Tok::Ident: {
        take();
        if (tok.text == "i") {
          Expr e = node(Expr::Op::Constant, tok);
          e.constant = GaussianRational::i();
          return e;
        }
        Expr e = node(Expr::Op::Variable, tok);
        e.name = tok.text;
        return e;
      }
      case Tok::LParen: {
        take();
        Expr e = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        take();
        return e;
      }
      case Tok::Minus: {
        take();
        Expr e = node(Expr::Op::Neg, tok);
        e.args.push_back(factor());
        return e;
      }
      case Tok::End: fail("unexpected end of input");
      default: fail("unexpected '" + tok.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

std::size_t resolve(const std::string& name, const VarSpace& space, const Expr& at) {
  if (auto idx = space.find(name)) return *idx;
  if (name.size() == 1 && std::string_view("xyzw").find(name[0]) != std::string_view::npos) {
    auto one = space.find(name + "1");
    if (one && !space.find(name + "2")) return *one;
  }
  throw Error(ErrorKind::UnknownVariable, Lexer::at(at.line, at.column) + "unknown variable '" + name + "'");
}

std::string monomial_text(const Exponents& e, const VarSpace& space) {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += space[v].name;
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

}  // namespace

Expr parse_expr(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.run());
  return parser.parse();
}

SparsePoly lower(const Expr& expr, const VarSpace& space) {
  switch (expr.op) {
    case Expr::Op::Constant: return SparsePoly::constant(space, expr.constant);
    case Expr::Op::Variable: return SparsePoly::variable(space, resolve(expr.name, space, expr));
    case Expr::Op::Neg: return -lower(expr.args[0], space);
    case Expr::Op::Add: return lower(expr.args[0], space) + lower(expr.args[1], space);
    case Expr::Op::Sub: return lower(expr.args[0], space) - lower(expr.args[1], space);
    case Expr::Op::Mul: return lower(expr.args[0], space) * lower(expr.args[1], space);
    case Expr::Op::Pow: return pow(lower(expr.args[0], space), static_cast<std::uint32_t>(expr.exponent));
  }
  return SparsePoly(space);
}

SparsePoly parse_poly(std::string_view text, const VarSpace& space) { return lower(parse_expr(text), space); }

GaussianRational parse_gaussian(std::string_view text) {
  const SparsePoly p = parse_poly(text, VarSpace());
  return p.constant_term();
}

std::string print_poly(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string mono = monomial_text(e, p.space());
    bool negative = false;
    std::string body;
    if (c.is_real()) {
      negative = c.re().sign() < 0;
      const Rational a = c.re().abs();
      if (mono.empty())
        body = a.to_string();
      else
        body = a.is_one() ? mono : a.to_string() + "*" + mono;
    } else if (c.re().is_zero()) {
      negative = c.im().sign() < 0;
      const Rational b = c.im().abs();
      if (mono.empty())
        body = b.is_one() ? "i" : b.to_string() + "*i";
      else
        body = b.is_one() ? "i*" + mono : "(" + b.to_string() + "*i)*" + mono;
    } else {
      body = "(" + to_string(c) + ")";
      if (!mono.empty()) body += "*" + mono;
    }
    if (first)
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace kholo
