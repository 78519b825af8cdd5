#include "imprec/parser.hpp"

#include <cctype>
#include <optional>

#include "imprec/errors.hpp"

namespace imprec {

namespace {

enum class Tok { Ident, Int, Arrow, Semi, LParen, RParen, LBrack, RBrack, Comma, Colon, Slash, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& cur() const { return cur_; }
  const Token& ahead() {
    if (!next_) next_ = lex();
    return *next_;
  }
  void advance() {
    if (next_) {
      cur_ = *next_;
      next_.reset();
    } else {
      cur_ = lex();
    }
  }

 private:
  Token lex() {
    skip();
    const int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        text += src_[pos_];
        step();
      }
      return {Tok::Ident, text, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      std::string text;
      if (c == '-') {
        text += c;
        step();
      }
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        text += src_[pos_];
        step();
      }
      return {Tok::Int, text, line, col};
    }
    if (c == '<' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
      step();
      step();
      return {Tok::Arrow, "<-", line, col};
    }
    step();
    switch (c) {
      case ';':
        return {Tok::Semi, ";", line, col};
      case '(':
        return {Tok::LParen, "(", line, col};
      case ')':
        return {Tok::RParen, ")", line, col};
      case '[':
        return {Tok::LBrack, "[", line, col};
      case ']':
        return {Tok::RBrack, "]", line, col};
      case ',':
        return {Tok::Comma, ",", line, col};
      case ':':
        return {Tok::Colon, ":", line, col};
      case '/':
        return {Tok::Slash, "/", line, col};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

  void skip() {
    for (;;) {
      while (pos_ < src_.size() &&
             std::isspace(static_cast<unsigned char>(src_[pos_])))
        step();
      if (pos_ + 1 < src_.size() && src_[pos_] == '-' && src_[pos_ + 1] == '-') {
        while (pos_ < src_.size() && src_[pos_] != '\n') step();
        continue;
      }
      break;
    }
  }

  void step() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token cur_{Tok::End, "", 1, 1};
  std::optional<Token> next_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  TermPtr run() {
    TermPtr t = term();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " (found '" + (lex_.cur().kind == Tok::End ? "<eof>" : lex_.cur().text) +
                         "')",
                     lex_.cur().line, lex_.cur().col);
  }

  void expect(Tok kind, const std::string& what) {
    if (lex_.cur().kind != kind) fail("expected " + what);
    lex_.advance();
  }

  bool at_keyword(const std::string& kw) const {
    return lex_.cur().kind == Tok::Ident && lex_.cur().text == kw;
  }

  std::string ident() {
    if (lex_.cur().kind != Tok::Ident) fail("expected an identifier");
    const std::string name = lex_.cur().text;
    for (const char* kw : {"if", "then", "else", "bernoulli", "choose", "knight", "flip", "true",
                           "false", "r", "g", "b", "inj", "of"})
      if (name == kw) fail("'" + name + "' is reserved");
    lex_.advance();
    return name;
  }

  long long nat() {
    if (lex_.cur().kind != Tok::Int) fail("expected a number");
    const long long v = std::stoll(lex_.cur().text);
    if (v < 0) fail("expected a nonnegative number");
    lex_.advance();
    return v;
  }

  Rational rat() {
    if (lex_.cur().kind != Tok::Int) fail("expected a rational");
    const Integer num{lex_.cur().text};
    lex_.advance();
    if (lex_.cur().kind == Tok::Slash) {
      lex_.advance();
      if (lex_.cur().kind != Tok::Int) fail("expected a denominator");
      const Integer den{lex_.cur().text};
      lex_.advance();
      if (den <= 0) fail("denominator must be positive");
      return Rational(num, den);
    }
    return Rational(num);
  }

  TermPtr term() {
    if (at_keyword("if")) {
      lex_.advance();
      TermPtr c = term();
      if (!at_keyword("then")) fail("expected 'then'");
      lex_.advance();
      TermPtr t = term();
      if (!at_keyword("else")) fail("expected 'else'");
      lex_.advance();
      TermPtr e = term();
      return mk_if(std::move(c), std::move(t), std::move(e));
    }
    if (lex_.cur().kind == Tok::Ident && lex_.ahead().kind == Tok::Arrow) {
      const std::string var = ident();
      lex_.advance();  // <-
      TermPtr bound = term();
      expect(Tok::Semi, "';'");
      TermPtr body = term();
      return mk_let(var, std::move(bound), std::move(body));
    }
    return atom();
  }

  TermPtr atom() {
    if (at_keyword("bernoulli")) {
      lex_.advance();
      return mk_bernoulli();
    }
    if (at_keyword("choose")) {
      lex_.advance();
      expect(Tok::LBrack, "'['");
      RatVector weights{rat()};
      while (lex_.cur().kind == Tok::Comma) {
        lex_.advance();
        weights.push_back(rat());
      }
      expect(Tok::RBrack, "']'");
      return mk_choose(std::move(weights));
    }
    if (at_keyword("knight")) {
      lex_.advance();
      expect(Tok::LParen, "'('");
      const std::string name = ident();
      int arity = 2;
      if (lex_.cur().kind == Tok::Colon) {
        lex_.advance();
        arity = static_cast<int>(nat());
      }
      expect(Tok::RParen, "')'");
      return mk_knight(name, arity);
    }
    if (at_keyword("flip")) {
      lex_.advance();
      expect(Tok::LParen, "'('");
      const std::string site = ident();
      expect(Tok::RParen, "')'");
      expect(Tok::LParen, "'('");
      TermPtr body = term();
      expect(Tok::RParen, "')'");
      return mk_flip(site, std::move(body));
    }
    if (at_keyword("true")) {
      lex_.advance();
      return mk_true();
    }
    if (at_keyword("false")) {
      lex_.advance();
      return mk_false();
    }
    if (at_keyword("r")) {
      lex_.advance();
      return mk_r();
    }
    if (at_keyword("g")) {
      lex_.advance();
      return mk_g();
    }
    if (at_keyword("b")) {
      lex_.advance();
      return mk_b();
    }
    if (at_keyword("inj")) {
      lex_.advance();
      const long long index = nat();
      if (!at_keyword("of")) fail("expected 'of'");
      lex_.advance();
      const long long of = nat();
      if (of < 1 || index < 1 || index > of) fail("injection index out of range");
      return mk_inj(static_cast<int>(index), static_cast<int>(of));
    }
    if (lex_.cur().kind == Tok::LParen) {
      lex_.advance();
      std::vector<TermPtr> items{term()};
      while (lex_.cur().kind == Tok::Comma) {
        lex_.advance();
        items.push_back(term());
      }
      expect(Tok::RParen, "')'");
      if (items.size() == 1) return items.front();
      return mk_pair(std::move(items));
    }
    if (lex_.cur().kind == Tok::Ident) return mk_var(ident());
    fail("expected a term");
  }

  Lexer lex_;
};

}  // namespace

TermPtr parse(std::string_view source) { return Parser(source).run(); }

}  // namespace imprec
