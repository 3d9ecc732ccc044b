// Recursive-descent parser for the formula grammar.

#include <cctype>
#include <string>

#include "penalty/error.hpp"
#include "penalty/logic.hpp"

namespace penalty {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line ? what + " at " + std::to_string(line) + ":" + std::to_string(column)
                              : what),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { kIdent, kTop, kBottom, kNot, kAnd, kOr, kImplies, kIff, kLParen, kRParen, kEnd };

const char* describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "atom";
    case Tok::kTop: return "'T'";
    case Tok::kBottom: return "'F'";
    case Tok::kNot: return "'!'";
    case Tok::kAnd: return "'&'";
    case Tok::kOr: return "'|'";
    case Tok::kImplies: return "'->'";
    case Tok::kIff: return "'<->'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    default: return "end of input";
  }
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t{Tok::kEnd, {}, line_, column_};
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    auto take = [&](Tok k, std::size_t n) {
      t.kind = k;
      t.text = std::string(text_.substr(pos_, n));
      advance(n);
      return t;
    };
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t n = 1;
      while (pos_ + n < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_ + n])) || text_[pos_ + n] == '_')) {
        ++n;
      }
      auto word = text_.substr(pos_, n);
      if (word == "T") return take(Tok::kTop, n);
      if (word == "F") return take(Tok::kBottom, n);
      return take(Tok::kIdent, n);
    }
    switch (c) {
      case '!': return take(Tok::kNot, 1);
      case '&': return take(Tok::kAnd, 1);
      case '|': return take(Tok::kOr, 1);
      case '(': return take(Tok::kLParen, 1);
      case ')': return take(Tok::kRParen, 1);
      case '-':
        if (text_.substr(pos_, 2) == "->") return take(Tok::kImplies, 2);
        break;
      case '<':
        if (text_.substr(pos_, 3) == "<->") return take(Tok::kIff, 3);
        break;
      default:
        break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance(1);
  }
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Formula parse() {
    if (tok_.kind == Tok::kEnd) throw ParseError("empty formula", tok_.line, tok_.column);
    Formula f = parse_iff();
    if (tok_.kind != Tok::kEnd) unexpected("end of input");
    return f;
  }

 private:
  void shift() { tok_ = lexer_.next(); }

  [[noreturn]] void unexpected(const char* wanted) {
    throw ParseError(std::string("expected ") + wanted + ", found " + describe(tok_.kind),
                     tok_.line, tok_.column);
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (tok_.kind == Tok::kIff) {
      shift();
      f = Formula::equivalence(f, parse_imp());
    }
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (tok_.kind == Tok::kImplies) {
      shift();
      return Formula::implication(f, parse_imp());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (tok_.kind == Tok::kOr) {
      shift();
      f = Formula::disjunction(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (tok_.kind == Tok::kAnd) {
      shift();
      f = Formula::conjunction(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    switch (tok_.kind) {
      case Tok::kNot:
        shift();
        return Formula::negation(parse_unary());
      case Tok::kTop:
        shift();
        return Formula::top();
      case Tok::kBottom:
        shift();
        return Formula::bottom();
      case Tok::kIdent: {
        Formula f = Formula::atom(tok_.text);
        shift();
        return f;
      }
      case Tok::kLParen: {
        shift();
        Formula f = parse_iff();
        if (tok_.kind != Tok::kRParen) unexpected("')'");
        shift();
        return f;
      }
      default:
        unexpected("formula");
    }
  }

  Lexer lexer_;
  Token tok_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace penalty
