#include "etabench/parser.hpp"

#include <cctype>
#include <unordered_map>

namespace etabench {

namespace {

enum class Tok {
  Def,
  LetKw,
  UnivKw,
  UnitTyKw,
  UnitValKw,
  Ident,
  Colon,
  ColonEq,
  Semi,
  Lambda,
  Dot,
  Proj1,
  Proj2,
  Arrow,
  Star,
  LParen,
  RParen,
  Comma,
  Eof,
};

const char* tokName(Tok t) {
  switch (t) {
    case Tok::Def: return "'def'";
    case Tok::LetKw: return "'let'";
    case Tok::UnivKw: return "'U'";
    case Tok::UnitTyKw: return "'Unit'";
    case Tok::UnitValKw: return "'tt'";
    case Tok::Ident: return "identifier";
    case Tok::Colon: return "':'";
    case Tok::ColonEq: return "':='";
    case Tok::Semi: return "';'";
    case Tok::Lambda: return "'\\'";
    case Tok::Dot: return "'.'";
    case Tok::Proj1: return "'.1'";
    case Tok::Proj2: return "'.2'";
    case Tok::Arrow: return "'->'";
    case Tok::Star: return "'*'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Eof: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

struct ParseFail {
  Diagnostic diag;
};

[[noreturn]] void bail(std::string msg, Span span) {
  throw ParseFail{Diagnostic{Severity::Error, std::move(msg), span}};
}

bool identStart(char c) {
  return c == '_' || std::isalpha(static_cast<unsigned char>(c));
}
bool identCont(char c) {
  return c == '_' || c == '\'' || std::isalnum(static_cast<unsigned char>(c));
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::uint32_t i = 0;
  const auto n = static_cast<std::uint32_t>(src.size());
  auto push = [&](Tok k, std::uint32_t b, std::uint32_t e) {
    out.push_back(Token{k, std::string(src.substr(b, e - b)), Span{b, e}});
  };
  while (i < n) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < n && src[i + 1] == '-') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    std::uint32_t b = i;
    if (identStart(c)) {
      while (i < n && identCont(src[i])) ++i;
      std::string_view word = src.substr(b, i - b);
      Tok k = Tok::Ident;
      if (word == "def") k = Tok::Def;
      else if (word == "let") k = Tok::LetKw;
      else if (word == "U") k = Tok::UnivKw;
      else if (word == "Unit") k = Tok::UnitTyKw;
      else if (word == "tt") k = Tok::UnitValKw;
      push(k, b, i);
      continue;
    }
    switch (c) {
      case ':':
        if (i + 1 < n && src[i + 1] == '=') {
          i += 2;
          push(Tok::ColonEq, b, i);
        } else {
          ++i;
          push(Tok::Colon, b, i);
        }
        continue;
      case ';': ++i; push(Tok::Semi, b, i); continue;
      case '\\': ++i; push(Tok::Lambda, b, i); continue;
      case '.':
        if (i + 1 < n && src[i + 1] == '1') {
          i += 2;
          push(Tok::Proj1, b, i);
        } else if (i + 1 < n && src[i + 1] == '2') {
          i += 2;
          push(Tok::Proj2, b, i);
        } else {
          ++i;
          push(Tok::Dot, b, i);
        }
        continue;
      case '-':
        if (i + 1 < n && src[i + 1] == '>') {
          i += 2;
          push(Tok::Arrow, b, i);
          continue;
        }
        bail("stray '-' (expected '->' or '--')", Span{b, b + 1});
      case '*': ++i; push(Tok::Star, b, i); continue;
      case '(': ++i; push(Tok::LParen, b, i); continue;
      case ')': ++i; push(Tok::RParen, b, i); continue;
      case ',': ++i; push(Tok::Comma, b, i); continue;
      default:
        bail("unsupported character", Span{b, b + 1});
    }
  }
  // point end-of-input diagnostics at the last byte
  out.push_back(Token{Tok::Eof, "", Span{n > 0 ? n - 1 : 0, n > 0 ? n : 1}});
  return out;
}

template <typename Node>
RawPtr mk(Span span, Node node) {
  return std::make_shared<RawTerm>(RawTerm{span, std::move(node)});
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  RawProgram program() {
    RawProgram prog;
    std::unordered_map<std::string, Span> seen;
    while (peek().kind != Tok::Eof) {
      expect(Tok::Def, "expected 'def'");
      Token name = expect(Tok::Ident, "expected definition name");
      if (auto it = seen.find(name.text); it != seen.end()) {
        bail("duplicate definition of '" + name.text + "'", name.span);
      }
      seen.emplace(name.text, name.span);
      expect(Tok::Colon, "expected ':' after definition name");
      RawPtr type = expr();
      expect(Tok::ColonEq, "expected ':=' after definition type");
      RawPtr body = expr();
      prog.decls.push_back(
          RawDecl{name.text, name.span, std::move(type), std::move(body)});
    }
    return prog;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& advance() { return toks_[pos_++]; }
  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      bail(std::string(what) + ", found " + tokName(peek().kind), peek().span);
    }
    return advance();
  }
  Span upTo(std::uint32_t begin) const {
    std::uint32_t end = pos_ > 0 ? toks_[pos_ - 1].span.end : begin + 1;
    return Span{begin, end > begin ? end : begin + 1};
  }

  bool atAtomStart() const {
    switch (peek().kind) {
      case Tok::Ident:
      case Tok::UnivKw:
      case Tok::UnitTyKw:
      case Tok::UnitValKw:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  RawPtr expr() {
    std::uint32_t begin = peek().span.begin;
    if (peek().kind == Tok::Lambda) {
      advance();
      std::vector<Token> binders;
      binders.push_back(expect(Tok::Ident, "expected binder after '\\'"));
      while (peek().kind == Tok::Ident) binders.push_back(advance());
      expect(Tok::Dot, "expected '.' after lambda binders");
      RawPtr body = expr();
      Span span = upTo(begin);
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        body = mk(span, raw::Lam{it->text, std::move(body)});
      }
      return body;
    }
    if (peek().kind == Tok::LetKw) {
      advance();
      Token name = expect(Tok::Ident, "expected binder after 'let'");
      expect(Tok::Colon, "expected ':' in let");
      RawPtr type = expr();
      expect(Tok::ColonEq, "expected ':=' in let");
      RawPtr bound = expr();
      expect(Tok::Semi, "expected ';' after let binding");
      RawPtr body = expr();
      return mk(upTo(begin), raw::Let{name.text, std::move(type),
                                      std::move(bound), std::move(body)});
    }
    // dependent binder group: "(x : A) -> B" or "(x : A) * B"
    if (peek().kind == Tok::LParen && peek(1).kind == Tok::Ident &&
        peek(2).kind == Tok::Colon) {
      advance();
      Token name = advance();
      advance();  // ':'
      RawPtr dom = expr();
      expect(Tok::RParen, "expected ')' after dependent binder");
      if (peek().kind == Tok::Arrow) {
        advance();
        RawPtr cod = expr();
        return mk(upTo(begin), raw::Pi{name.text, std::move(dom),
                                       std::move(cod)});
      }
      if (peek().kind == Tok::Star) {
        advance();
        RawPtr second = expr();
        return mk(upTo(begin), raw::Sigma{name.text, std::move(dom),
                                          std::move(second)});
      }
      bail("expected '->' or '*' after dependent binder", peek().span);
    }
    RawPtr t = app();
    if (peek().kind == Tok::Arrow) {
      advance();
      RawPtr cod = expr();
      return mk(upTo(begin), raw::Pi{"", std::move(t), std::move(cod)});
    }
    if (peek().kind == Tok::Star) {
      advance();
      RawPtr second = expr();
      return mk(upTo(begin), raw::Sigma{"", std::move(t), std::move(second)});
    }
    return t;
  }

  RawPtr app() {
    std::uint32_t begin = peek().span.begin;
    RawPtr f = proj();
    while (atAtomStart()) {
      RawPtr a = proj();
      f = mk(upTo(begin), raw::App{std::move(f), std::move(a)});
    }
    return f;
  }

  RawPtr proj() {
    std::uint32_t begin = peek().span.begin;
    RawPtr t = atom();
    for (;;) {
      if (peek().kind == Tok::Proj1) {
        advance();
        t = mk(upTo(begin), raw::Fst{std::move(t)});
      } else if (peek().kind == Tok::Proj2) {
        advance();
        t = mk(upTo(begin), raw::Snd{std::move(t)});
      } else {
        return t;
      }
    }
  }

  RawPtr atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Ident:
        advance();
        return mk(tok.span, raw::Var{tok.text});
      case Tok::UnivKw:
        advance();
        return mk(tok.span, raw::Univ{});
      case Tok::UnitTyKw:
        advance();
        return mk(tok.span, raw::UnitType{});
      case Tok::UnitValKw:
        advance();
        return mk(tok.span, raw::UnitVal{});
      case Tok::LParen: {
        std::uint32_t begin = tok.span.begin;
        advance();
        RawPtr e = expr();
        if (peek().kind == Tok::Comma) {
          advance();
          RawPtr e2 = expr();
          expect(Tok::RParen, "expected ')' after pair");
          return mk(upTo(begin), raw::Pair{std::move(e), std::move(e2)});
        }
        expect(Tok::RParen, "expected ')'");
        return mk(upTo(begin), e->node);
      }
      default:
        bail(std::string("expected expression, found ") + tokName(tok.kind),
             tok.span);
    }
  }
};

}  // namespace

ParseResult parseProgram(std::string_view src) {
  ParseResult res;
  try {
    Parser p(lex(src));
    res.program = p.program();
  } catch (const ParseFail& f) {
    res.diagnostics.push_back(f.diag);
  }
  return res;
}

std::string formatDiagnostic(const Diagnostic& d, std::string_view src) {
  std::uint32_t line = 1, col = 1;
  for (std::uint32_t i = 0; i < d.span.begin && i < src.size(); ++i) {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  const char* sev = d.severity == Severity::Error ? "error" : "warning";
  return std::string(sev) + ": " + d.message + " at " + std::to_string(line) +
         ":" + std::to_string(col);
}

}  // namespace etabench
