#include "ratel/parser.hpp"

#include <cctype>

namespace ratel {
namespace parser {

namespace {

constexpr int kMaxExponent = 4096;
constexpr long kMaxDegree = 100000;

struct Token {
  enum class Kind { Int, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  size_t offset;
  Int value;     // Kind::Int
  char var = 0;  // Kind::Var
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  Token tok_;

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) pos_++;
    tok_.offset = pos_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::End;
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) pos_++;
      tok_.kind = Token::Kind::Int;
      tok_.value = Int(std::string(text_.substr(start, pos_ - start)), 10);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (c != 'x' && c != 'y')
        throw ParseError(pos_, std::string("unknown variable '") + c + "' (only x and y)");
      tok_.kind = Token::Kind::Var;
      tok_.var = c;
      pos_++;
      return;
    }
    switch (c) {
      case '+': tok_.kind = Token::Kind::Plus; break;
      case '-': tok_.kind = Token::Kind::Minus; break;
      case '*': tok_.kind = Token::Kind::Star; break;
      case '/': tok_.kind = Token::Kind::Slash; break;
      case '^': tok_.kind = Token::Kind::Caret; break;
      case '(': tok_.kind = Token::Kind::LParen; break;
      case ')': tok_.kind = Token::Kind::RParen; break;
      default:
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }
    pos_++;
  }
};

ExprPtr make(Expr::Kind k) {
  auto e = std::make_unique<Expr>();
  e->kind = k;
  return e;
}

ExprPtr make_bin(Expr::Kind k, ExprPtr a, ExprPtr b) {
  auto e = make(k);
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  ExprPtr run() {
    ExprPtr e = expr();
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::End)
      throw ParseError(t.offset, "expected an operator ('+', '-', '*', '/', '^') or end of input");
    return e;
  }

 private:
  Lexer lex_;

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      Token::Kind k = lex_.peek().kind;
      if (k != Token::Kind::Plus && k != Token::Kind::Minus) return e;
      lex_.take();
      e = make_bin(k == Token::Kind::Plus ? Expr::Kind::Add : Expr::Kind::Sub, std::move(e),
                   term());
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    for (;;) {
      Token::Kind k = lex_.peek().kind;
      if (k != Token::Kind::Star && k != Token::Kind::Slash) return e;
      lex_.take();
      e = make_bin(k == Token::Kind::Star ? Expr::Kind::Mul : Expr::Kind::Div, std::move(e),
                   factor());
    }
  }

  ExprPtr factor() {
    if (lex_.peek().kind == Token::Kind::Minus) {
      lex_.take();
      auto e = make(Expr::Kind::Neg);
      e->a = factor();
      return e;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    // collect the ^-chain, then fold the literal exponents right to left
    std::vector<Int> exps;
    size_t caret_off = 0;
    while (lex_.peek().kind == Token::Kind::Caret) {
      caret_off = lex_.take().offset;
      const Token& t = lex_.peek();
      if (t.kind != Token::Kind::Int)
        throw ParseError(t.offset, "expected a nonnegative integer exponent after '^'");
      exps.push_back(lex_.take().value);
    }
    if (exps.empty()) return base;
    Int e = exps.back();
    for (int i = static_cast<int>(exps.size()) - 2; i >= 0; i--) {
      if (e > kMaxExponent || (exps[i] > 1 && e * sizeinbase2(exps[i]) > 64))
        throw ParseError(caret_off,
                         "exponent too large (max " + std::to_string(kMaxExponent) + ")");
      Int b;
      mpz_pow_ui(b.get_mpz_t(), exps[i].get_mpz_t(), e.get_ui());
      e = b;
    }
    if (e > kMaxExponent)
      throw ParseError(caret_off,
                       "exponent too large (max " + std::to_string(kMaxExponent) + ")");
    auto node = make(Expr::Kind::Pow);
    node->a = std::move(base);
    node->exp = static_cast<int>(e.get_si());
    return node;
  }

  static long sizeinbase2(const Int& n) {
    return static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
  }

  ExprPtr atom() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Token::Kind::Int: {
        auto e = make(Expr::Kind::Int);
        e->value = lex_.take().value;
        return e;
      }
      case Token::Kind::Var: {
        auto e = make(Expr::Kind::Var);
        e->var = lex_.take().var;
        return e;
      }
      case Token::Kind::LParen: {
        lex_.take();
        ExprPtr e = expr();
        const Token& r = lex_.peek();
        if (r.kind != Token::Kind::RParen) throw ParseError(r.offset, "expected ')'");
        lex_.take();
        return e;
      }
      default:
        throw ParseError(t.offset, "expected an integer, 'x', 'y', '-' or '('");
    }
  }
};

long max_degree(const RFunc& f) {
  long d = 0;
  for (const BPoly* p : {&f.num(), &f.den()}) {
    d = std::max(d, static_cast<long>(std::max(p->deg_x(), 0)));
    d = std::max(d, static_cast<long>(std::max(p->deg_y(), 0)));
  }
  return d;
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

RFunc to_rfunc(const Expr& ast) {
  switch (ast.kind) {
    case Expr::Kind::Int: return RFunc(BPoly(Rat(ast.value)));
    case Expr::Kind::Var:
      return RFunc(ast.var == 'x' ? BPoly::xvar() : BPoly::yvar());
    case Expr::Kind::Add: return to_rfunc(*ast.a) + to_rfunc(*ast.b);
    case Expr::Kind::Sub: return to_rfunc(*ast.a) - to_rfunc(*ast.b);
    case Expr::Kind::Mul: return to_rfunc(*ast.a) * to_rfunc(*ast.b);
    case Expr::Kind::Neg: return -to_rfunc(*ast.a);
    case Expr::Kind::Div: {
      RFunc d = to_rfunc(*ast.b);
      if (d.is_zero_rf()) throw InputError("division by the zero rational function");
      return to_rfunc(*ast.a) * RFunc(d.den(), d.num());
    }
    case Expr::Kind::Pow: {
      RFunc b = to_rfunc(*ast.a);
      unsigned e = static_cast<unsigned>(ast.exp);
      if (e == 0) return RFunc(BPoly(Rat(1)));
      if (max_degree(b) * e > kMaxDegree)
        throw InputError("expression degree exceeds the supported bound");
      return RFunc(b.num().pow(e), b.den().pow(e));
    }
  }
  throw InternalError("unhandled expression node");
}

RFunc parse_rfunc(std::string_view text) { return to_rfunc(*parse(text)); }

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Int: return a.value == b.value;
    case Expr::Kind::Var: return a.var == b.var;
    case Expr::Kind::Neg: return expr_equal(*a.a, *b.a);
    case Expr::Kind::Pow: return a.exp == b.exp && expr_equal(*a.a, *b.a);
    default: return expr_equal(*a.a, *b.a) && expr_equal(*a.b, *b.b);
  }
}

std::string to_text(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Int: return e.value.get_str();
    case Expr::Kind::Var: return std::string(1, e.var);
    case Expr::Kind::Neg: return "(-" + to_text(*e.a) + ")";
    case Expr::Kind::Pow: return "(" + to_text(*e.a) + ")^" + std::to_string(e.exp);
    case Expr::Kind::Add: return "(" + to_text(*e.a) + "+" + to_text(*e.b) + ")";
    case Expr::Kind::Sub: return "(" + to_text(*e.a) + "-" + to_text(*e.b) + ")";
    case Expr::Kind::Mul: return "(" + to_text(*e.a) + "*" + to_text(*e.b) + ")";
    case Expr::Kind::Div: return "(" + to_text(*e.a) + "/" + to_text(*e.b) + ")";
  }
  throw InternalError("unhandled expression node");
}

namespace {

std::string rat_str(const Rat& r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return s;
}

// one term |c|*x^i*y^j without sign; "1" only when the monomial is empty
std::string term_str(const Rat& c, int i, int j) {
  Rat a = abs(c);
  std::string mono;
  if (i > 0) mono = i == 1 ? "x" : "x^" + std::to_string(i);
  if (j > 0) {
    if (!mono.empty()) mono += "*";
    mono += j == 1 ? "y" : "y^" + std::to_string(j);
  }
  if (mono.empty()) return rat_str(a);
  if (a == 1) return mono;
  return rat_str(a) + "*" + mono;
}

int term_count(const BPoly& p) {
  int n = 0;
  for (int j = 0; j <= p.deg_y(); j++)
    for (int i = 0; i <= p.coeff_y(j).degree(); i++)
      if (p.coeff_y(j)[i] != 0) n++;
  return n;
}

// leading coefficient in the print order: highest y-degree, then x-degree
Rat lead_coeff(const BPoly& p) {
  if (p.is_zero_b()) return Rat(0);
  return p.lc_y().lc();
}

}  // namespace

std::string print_poly(const BPoly& p) {
  if (p.is_zero_b()) return "0";
  std::string out;
  for (int j = p.deg_y(); j >= 0; j--) {
    const UPoly& row = p.coeff_y(j);
    for (int i = row.degree(); i >= 0; i--) {
      const Rat& c = row[i];
      if (c == 0) continue;
      if (out.empty())
        out = (c < 0 ? "-" : "") + term_str(c, i, j);
      else
        out += (c < 0 ? " - " : " + ") + term_str(c, i, j);
    }
  }
  return out;
}

std::string print_canonical(const RFunc& f) {
  if (f.is_zero_rf()) return "0";
  if (f.is_poly()) return print_poly(f.num());
  BPoly num = f.num(), den = f.den();
  if (lead_coeff(num) < 0) {
    num = -num;
    den = -den;
  }
  std::string ns = print_poly(num);
  if (term_count(num) > 1) ns = "(" + ns + ")";
  return ns + "/(" + print_poly(den) + ")";
}

std::string print_canonical(const DiffOp& L) { return ratel::to_string(L); }

}  // namespace parser
}  // namespace ratel
