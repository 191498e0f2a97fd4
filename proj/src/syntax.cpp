#include <cctype>
#include <string>

#include "medv/errors.hpp"
#include "medv/formula.hpp"

namespace medv {

namespace {

enum class Tok { Ident, Bot, Not, And, Or, Arrow, LParen, RParen, Semi, Turnstile, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Bot: return "'bot'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Semi: return "';'";
    case Tok::Turnstile: return "'|-'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const auto start = pos_;
    if (pos_ == text_.size()) return {Tok::End, {}, start};
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      return {word == "bot" ? Tok::Bot : Tok::Ident, std::move(word), start};
    }
    ++pos_;
    switch (c) {
      case '~': return {Tok::Not, "~", start};
      case '&': return {Tok::And, "&", start};
      case '(': return {Tok::LParen, "(", start};
      case ')': return {Tok::RParen, ")", start};
      case ';': return {Tok::Semi, ";", start};
      case '|':
        if (pos_ < text_.size() && text_[pos_] == '-') {
          ++pos_;
          return {Tok::Turnstile, "|-", start};
        }
        return {Tok::Or, "|", start};
      case '-':
        if (pos_ < text_.size() && text_[pos_] == '>') {
          ++pos_;
          return {Tok::Arrow, "->", start};
        }
        break;
      default:
        break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  Formula formula() {
    Formula left = chain();
    if (peek_.kind != Tok::Arrow) return left;
    advance();
    return Formula::implies(std::move(left), formula());
  }

  const Token& peek() const { return peek_; }

  void expect(Tok kind) {
    if (peek_.kind != kind)
      throw ParseError(std::string("expected ") + describe(kind) + ", found " +
                           describe(peek_.kind),
                       peek_.pos);
    advance();
  }

  void advance() { peek_ = lexer_.next(); }

private:
  Formula chain() {
    Formula out = unary();
    if (peek_.kind != Tok::And && peek_.kind != Tok::Or) return out;
    const Tok op = peek_.kind;
    while (peek_.kind == Tok::And || peek_.kind == Tok::Or) {
      if (peek_.kind != op)
        throw AmbiguityError("'&' and '|' mixed without parentheses", peek_.pos);
      advance();
      Formula rhs = unary();
      out = op == Tok::And ? Formula::conj(std::move(out), std::move(rhs))
                           : Formula::disj(std::move(out), std::move(rhs));
    }
    return out;
  }

  Formula unary() {
    if (peek_.kind == Tok::Not) {
      advance();
      return Formula::negation(unary());
    }
    return atom();
  }

  Formula atom() {
    switch (peek_.kind) {
      case Tok::Bot:
        advance();
        return Formula::bottom();
      case Tok::Ident: {
        auto name = std::move(peek_.text);
        advance();
        return Formula::var(std::move(name));
      }
      case Tok::LParen: {
        advance();
        Formula inner = formula();
        expect(Tok::RParen);
        return inner;
      }
      default:
        throw ParseError(std::string("expected formula, found ") + describe(peek_.kind),
                         peek_.pos);
    }
  }

  Lexer lexer_;
  Token peek_{Tok::End, {}, 0};
};

bool is_tight(const Formula& f) { return !f.is_binary() || f.is_negation(); }

void emit(const Formula& f, std::string& out);

void emit_wrapped(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  emit(f, out);
  if (parens) out += ')';
}

void emit(const Formula& f, std::string& out) {
  switch (f.connective()) {
    case Connective::Bottom:
      out += "bot";
      return;
    case Connective::Var:
      out += f.name();
      return;
    case Connective::And:
    case Connective::Or: {
      const auto op = f.connective();
      const auto l = f.left();
      const auto r = f.right();
      emit_wrapped(l, !is_tight(l) && l.connective() != op, out);
      out += op == Connective::And ? " & " : " | ";
      emit_wrapped(r, !is_tight(r), out);
      return;
    }
    case Connective::Implies: {
      const auto l = f.left();
      if (f.is_negation()) {
        out += '~';
        emit_wrapped(l, !is_tight(l), out);
        return;
      }
      const auto r = f.right();
      emit_wrapped(l, !is_tight(l), out);
      out += " -> ";
      emit_wrapped(r, !is_tight(r) && r.connective() != Connective::Implies, out);
      return;
    }
  }
}

}  // namespace

Formula parse(std::string_view text) {
  Parser p(text);
  Formula out = p.formula();
  if (p.peek().kind != Tok::End)
    throw ParseError(std::string("unexpected ") + describe(p.peek().kind), p.peek().pos);
  return out;
}

Sequent parse_sequent(std::string_view text) {
  Parser p(text);
  std::vector<Formula> premises;
  if (p.peek().kind == Tok::Turnstile) {
    p.advance();
    Formula conclusion = p.formula();
    p.expect(Tok::End);
    return {std::move(premises), std::move(conclusion)};
  }
  Formula first = p.formula();
  if (p.peek().kind == Tok::End) return {std::move(premises), std::move(first)};
  premises.push_back(std::move(first));
  while (p.peek().kind == Tok::Semi) {
    p.advance();
    premises.push_back(p.formula());
  }
  p.expect(Tok::Turnstile);
  Formula conclusion = p.formula();
  p.expect(Tok::End);
  return {std::move(premises), std::move(conclusion)};
}

std::string render(const Formula& f) {
  std::string out;
  emit(f, out);
  return out;
}

std::string render(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.premises.size(); ++i) {
    if (i) out += " ; ";
    out += render(s.premises[i]);
  }
  out += s.premises.empty() ? "|- " : " |- ";
  out += render(s.conclusion);
  return out;
}

}  // namespace medv
