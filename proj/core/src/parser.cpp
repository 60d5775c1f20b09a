#include "ltlcore/parser.hpp"

#include <cctype>
#include <sstream>

namespace ltlcore {

ParseError::ParseError(int line, int col, std::string message, std::vector<std::string> expected)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "parse error at " << line << ":" << col << ": " << message;
        if (!expected.empty()) {
          os << " (expected";
          for (const auto& e : expected) os << ' ' << e;
          os << ')';
        }
        return os.str();
      }()),
      line_(line),
      col_(col),
      expected_(std::move(expected)) {}

namespace {

enum class Tok : std::uint8_t {
  Prop, True, False, Not, And, Or, Implies, Next, Future, Globally, Until, WeakUntil,
  LParen, RParen, End,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Prop: return "proposition";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Not: return "'!'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Next: return "'X'";
    case Tok::Future: return "'F'";
    case Tok::Globally: return "'G'";
    case Tok::Until: return "'U'";
    case Tok::WeakUntil: return "'W'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok tok;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      bump(text_[pos_]);
      ++pos_;
    }
    int line = line_, col = col_;
    if (pos_ >= text_.size()) {
      cur_ = {Tok::End, "", line, col};
      return;
    }
    char c = text_[pos_];
    auto single = [&](Tok t) {
      cur_ = {t, std::string(1, c), line, col};
      bump(c);
      ++pos_;
    };
    switch (c) {
      case '!': single(Tok::Not); return;
      case '&': single(Tok::And); return;
      case '|': single(Tok::Or); return;
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          cur_ = {Tok::Implies, "->", line, col};
          bump('-');
          bump('>');
          pos_ += 2;
          return;
        }
        throw ParseError(line, col, "stray '-'", {"'->'"});
      case 'X': single(Tok::Next); return;
      case 'F': single(Tok::Future); return;
      case 'G': single(Tok::Globally); return;
      case 'U': single(Tok::Until); return;
      case 'W': single(Tok::WeakUntil); return;
      default: break;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        bump(text_[pos_]);
        ++pos_;
      }
      std::string word(text_.substr(start, pos_ - start));
      if (word == "true") {
        cur_ = {Tok::True, word, line, col};
      } else if (word == "false") {
        cur_ = {Tok::False, word, line, col};
      } else {
        cur_ = {Tok::Prop, word, line, col};
      }
      return;
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'",
                     {"proposition", "'('", "'!'", "'X'", "'F'", "'G'", "'true'", "'false'"});
  }

  void bump(char c) {
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_{Tok::End, "", 1, 1};
};

using Ptr = std::unique_ptr<RawNode>;

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Ptr run() {
    Ptr f = implies();
    if (lex_.peek().tok != Tok::End) {
      fail("trailing input", {tok_name(Tok::End)});
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) {
    const Token& t = lex_.peek();
    throw ParseError(t.line, t.col, msg + " (got " + std::string(tok_name(t.tok)) + ")",
                     std::move(expected));
  }

  Ptr implies() {
    Ptr lhs = disjunction();
    if (lex_.peek().tok == Tok::Implies) {
      lex_.take();
      Ptr rhs = implies();  // right-associative
      Ptr n = RawNode::make(RawNode::Op::Implies);
      n->children.push_back(std::move(lhs));
      n->children.push_back(std::move(rhs));
      return n;
    }
    return lhs;
  }

  Ptr disjunction() {
    Ptr lhs = conjunction();
    if (lex_.peek().tok != Tok::Or) return lhs;
    Ptr n = RawNode::make(RawNode::Op::Or);
    n->children.push_back(std::move(lhs));
    while (lex_.peek().tok == Tok::Or) {
      lex_.take();
      n->children.push_back(conjunction());
    }
    return n;
  }

  Ptr conjunction() {
    Ptr lhs = until();
    if (lex_.peek().tok != Tok::And) return lhs;
    Ptr n = RawNode::make(RawNode::Op::And);
    n->children.push_back(std::move(lhs));
    while (lex_.peek().tok == Tok::And) {
      lex_.take();
      n->children.push_back(until());
    }
    return n;
  }

  Ptr until() {
    Ptr lhs = unary();
    Tok t = lex_.peek().tok;
    if (t == Tok::Until || t == Tok::WeakUntil) {
      lex_.take();
      Ptr rhs = until();  // right-associative
      Ptr n = RawNode::make(t == Tok::Until ? RawNode::Op::Until : RawNode::Op::WeakUntil);
      n->children.push_back(std::move(lhs));
      n->children.push_back(std::move(rhs));
      return n;
    }
    return lhs;
  }

  Ptr unary() {
    const Token& t = lex_.peek();
    switch (t.tok) {
      case Tok::Not:
      case Tok::Next:
      case Tok::Future:
      case Tok::Globally: {
        Token op = lex_.take();
        RawNode::Op o = op.tok == Tok::Not      ? RawNode::Op::Not
                        : op.tok == Tok::Next   ? RawNode::Op::Next
                        : op.tok == Tok::Future ? RawNode::Op::Future
                                                : RawNode::Op::Globally;
        Ptr n = RawNode::make(o);
        n->line = op.line;
        n->col = op.col;
        n->children.push_back(unary());
        return n;
      }
      default:
        return atom();
    }
  }

  Ptr atom() {
    const Token& t = lex_.peek();
    switch (t.tok) {
      case Tok::True: {
        Token tk = lex_.take();
        Ptr n = RawNode::make(RawNode::Op::True);
        n->line = tk.line;
        n->col = tk.col;
        return n;
      }
      case Tok::False: {
        Token tk = lex_.take();
        Ptr n = RawNode::make(RawNode::Op::False);
        n->line = tk.line;
        n->col = tk.col;
        return n;
      }
      case Tok::Prop: {
        Token tk = lex_.take();
        Ptr n = RawNode::make(RawNode::Op::Prop);
        n->name = tk.text;
        n->line = tk.line;
        n->col = tk.col;
        return n;
      }
      case Tok::LParen: {
        lex_.take();
        Ptr inner = implies();
        if (lex_.peek().tok != Tok::RParen) {
          fail("unbalanced parenthesis", {tok_name(Tok::RParen)});
        }
        lex_.take();
        return inner;
      }
      default:
        fail("expected a formula",
             {"proposition", "'true'", "'false'", "'('", "'!'", "'X'", "'F'", "'G'"});
    }
  }

  Lexer lex_;
};

}  // namespace

std::unique_ptr<RawNode> parse_raw(std::string_view text) { return Parser(text).run(); }

FormulaId parse(std::string_view text, FormulaArena& arena) {
  return to_nnf(*parse_raw(text), arena);
}

}  // namespace ltlcore
