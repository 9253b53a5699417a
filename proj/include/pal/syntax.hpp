// ASCII concrete syntax for PAL formulas.
//
//   F ::= F <-> F | F -> F | F '|' F | F & F
//       | ~F | K agent F | E F | C F | C(F | F) | [!F] F
//       | atom | top | (F)
//
// Binding, tightest first: prefix operators, &, |, -> (right), <-> (right).
// & and | associate to the left.  Identifiers are a letter followed by
// letters or digits; K, E, C and top are reserved.
//
// "C(" always opens the relativized form when the text up to the first
// top-level '|' parses as a conjunction; otherwise the parenthesis belongs
// to the operand of plain C.  The guard of C(F | G) is therefore written
// at conjunction strength: C((p | q) | r).

#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pal/error.hpp"
#include "pal/formula.hpp"

namespace pal {

struct ParseError : Error {
  ParseError(std::size_t offset, std::string message, std::set<std::string> expected = {})
      : Error(describe(offset, message, expected)),
        offset_(offset),
        message_(std::move(message)),
        expected_(std::move(expected)) {}

  // 0-based byte offset into the input.
  std::size_t offset() const { return offset_; }
  const std::string& message() const { return message_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  static std::string describe(std::size_t offset, const std::string& message,
                              const std::set<std::string>& expected) {
    std::ostringstream os;
    os << "parse error at offset " << offset << ": " << message;
    if (!expected.empty()) {
      os << " (expected one of:";
      for (const auto& e : expected) os << ' ' << e;
      os << ')';
    }
    return os.str();
  }

  std::size_t offset_;
  std::string message_;
  std::set<std::string> expected_;
};

namespace detail {

enum class Tok { ident, top, k, e, c, tilde, amp, bar, arrow, iff, lparen, rparen, lbrack, bang, rbrack, end };

inline const char* spell(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::top: return "top";
    case Tok::k: return "K";
    case Tok::e: return "E";
    case Tok::c: return "C";
    case Tok::tilde: return "~";
    case Tok::amp: return "&";
    case Tok::bar: return "|";
    case Tok::arrow: return "->";
    case Tok::iff: return "<->";
    case Tok::lparen: return "(";
    case Tok::rparen: return ")";
    case Tok::lbrack: return "[";
    case Tok::bang: return "!";
    case Tok::rbrack: return "]";
    case Tok::end: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

inline bool ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) != 0; }
inline bool ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) != 0; }

inline std::vector<Token> tokenize(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    const char ch = in[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t at = i;
    if (ident_start(ch)) {
      while (i < in.size() && ident_char(in[i])) ++i;
      std::string word(in.substr(at, i - at));
      Tok kind = Tok::ident;
      if (word == "K") kind = Tok::k;
      else if (word == "E") kind = Tok::e;
      else if (word == "C") kind = Tok::c;
      else if (word == "top") kind = Tok::top;
      out.push_back({kind, at, std::move(word)});
      continue;
    }
    auto single = [&](Tok kind) {
      out.push_back({kind, at, std::string(1, ch)});
      ++i;
    };
    switch (ch) {
      case '~': single(Tok::tilde); break;
      case '&': single(Tok::amp); break;
      case '|': single(Tok::bar); break;
      case '(': single(Tok::lparen); break;
      case ')': single(Tok::rparen); break;
      case '[': single(Tok::lbrack); break;
      case '!': single(Tok::bang); break;
      case ']': single(Tok::rbrack); break;
      case '-':
        if (in.substr(i, 2) != "->") throw ParseError(at, "unknown operator '-'", {"->"});
        out.push_back({Tok::arrow, at, "->"});
        i += 2;
        break;
      case '<':
        if (in.substr(i, 3) != "<->") throw ParseError(at, "unknown operator '<'", {"<->"});
        out.push_back({Tok::iff, at, "<->"});
        i += 3;
        break;
      default: {
        const auto c = static_cast<unsigned char>(ch);
        std::string shown = (c >= 0x20 && c < 0x7f) ? std::string(1, ch) : "\\x" + [&] {
          std::ostringstream os;
          os << std::hex << static_cast<int>(c);
          return os.str();
        }();
        throw ParseError(at, "unknown operator '" + shown + "'");
      }
    }
  }
  out.push_back({Tok::end, in.size(), {}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Formula parse_all() {
    Formula f = parse_iff();
    if (peek().kind == Tok::rparen)
      throw ParseError(peek().offset, "unbalanced parenthesis: unexpected ')'");
    if (peek().kind != Tok::end)
      throw ParseError(peek().offset, "unexpected '" + peek().text + "'",
                       {"&", "|", "->", "<->", spell(Tok::end)});
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  void expect(Tok kind, const char* context) {
    if (peek().kind == kind) {
      ++pos_;
      return;
    }
    if (kind == Tok::rparen)
      throw ParseError(peek().offset, std::string("unbalanced parenthesis: missing ')' ") + context,
                       {spell(kind)});
    throw ParseError(peek().offset, std::string("expected '") + spell(kind) + "' " + context, {spell(kind)});
  }

  Formula parse_iff() {
    Formula lhs = parse_imp();
    if (peek().kind != Tok::iff) return lhs;
    ++pos_;
    return iff(lhs, parse_iff());
  }

  Formula parse_imp() {
    Formula lhs = parse_disj();
    if (peek().kind != Tok::arrow) return lhs;
    ++pos_;
    return imp(lhs, parse_imp());
  }

  Formula parse_disj() {
    Formula lhs = parse_conj();
    while (peek().kind == Tok::bar) {
      ++pos_;
      lhs = disj(lhs, parse_conj());
    }
    return lhs;
  }

  Formula parse_conj() {
    Formula lhs = parse_unary();
    while (peek().kind == Tok::amp) {
      ++pos_;
      lhs = conj(lhs, parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    switch (peek().kind) {
      case Tok::tilde:
        ++pos_;
        return neg(parse_unary());
      case Tok::k: {
        ++pos_;
        if (peek().kind != Tok::ident)
          throw ParseError(peek().offset, "expected agent name after 'K'", {spell(Tok::ident)});
        std::string agent = take().text;
        return knows(std::move(agent), parse_unary());
      }
      case Tok::e:
        ++pos_;
        return everyone(parse_unary());
      case Tok::c: {
        ++pos_;
        if (peek().kind == Tok::lparen) {
          if (auto rel = try_relativized()) return *rel;
        }
        return ck(parse_unary());
      }
      case Tok::lbrack: {
        ++pos_;
        expect(Tok::bang, "after '['");
        Formula announced = parse_iff();
        expect(Tok::rbrack, "to close announcement");
        return announce(announced, parse_unary());
      }
      default:
        return parse_primary();
    }
  }

  // At "C (": C(guard | body) if the guard parses at conjunction strength
  // and is followed by '|'; otherwise rewinds.
  std::optional<Formula> try_relativized() {
    const std::size_t mark = pos_;
    ++pos_;
    try {
      Formula guard = parse_conj();
      if (peek().kind == Tok::bar) {
        ++pos_;
        Formula body = parse_iff();
        expect(Tok::rparen, "to close C(...)");
        return rck(guard, body);
      }
    } catch (const ParseError&) {
    }
    pos_ = mark;
    return std::nullopt;
  }

  Formula parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::ident:
        ++pos_;
        return atom(t.text);
      case Tok::top:
        ++pos_;
        return top();
      case Tok::lparen: {
        ++pos_;
        Formula f = parse_iff();
        expect(Tok::rparen, "to match '('");
        return f;
      }
      case Tok::rparen:
        throw ParseError(t.offset, "unbalanced parenthesis: unexpected ')'", operand_starts());
      case Tok::end:
        throw ParseError(t.offset, "unexpected end of input", operand_starts());
      default:
        throw ParseError(t.offset, "unexpected '" + t.text + "'", operand_starts());
    }
  }

  static std::set<std::string> operand_starts() {
    return {spell(Tok::ident), "top", "~", "K", "E", "C", "[", "("};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength used by the printer.
inline int level(const Formula& f) {
  switch (f.op()) {
    case Op::iff: return 1;
    case Op::imp: return 2;
    case Op::disj: return 3;
    case Op::conj: return 4;
    case Op::neg: case Op::knows: case Op::everyone: case Op::ck: case Op::announce: return 5;
    case Op::rck: case Op::atom: case Op::top: return 6;
  }
  return 6;
}

inline void render_into(std::string& out, const Formula& f, int min_level);

inline void render_wrapped(std::string& out, const Formula& f, int min_level) {
  if (level(f) < min_level) {
    out += '(';
    render_into(out, f, 0);
    out += ')';
  } else {
    render_into(out, f, 0);
  }
}

inline void render_into(std::string& out, const Formula& f, int /*min_level*/) {
  auto binary = [&](const char* sym, int lvl, bool right_assoc) {
    render_wrapped(out, f.lhs(), right_assoc ? lvl + 1 : lvl);
    out += sym;
    render_wrapped(out, f.rhs(), right_assoc ? lvl : lvl + 1);
  };
  switch (f.op()) {
    case Op::atom: out += f.name(); break;
    case Op::top: out += "top"; break;
    case Op::neg:
      out += '~';
      render_wrapped(out, f.lhs(), 5);
      break;
    case Op::knows:
      out += "K ";
      out += f.name();
      out += ' ';
      render_wrapped(out, f.lhs(), 5);
      break;
    case Op::everyone:
      out += "E ";
      render_wrapped(out, f.lhs(), 5);
      break;
    case Op::conj: binary(" & ", 4, false); break;
    case Op::disj: binary(" | ", 3, false); break;
    case Op::imp: binary(" -> ", 2, true); break;
    case Op::iff: binary(" <-> ", 1, true); break;
    case Op::announce:
      out += "[!";
      render_into(out, f.lhs(), 0);
      out += "] ";
      render_wrapped(out, f.rhs(), 5);
      break;
    case Op::rck:
      if (f.lhs().op() == Op::top) {
        render_into(out, ck(f.rhs()), 0);
        break;
      }
      out += "C(";
      render_wrapped(out, f.lhs(), 4);
      out += " | ";
      render_into(out, f.rhs(), 0);
      out += ')';
      break;
    case Op::ck: {
      out += "C ";
      const Formula& body = f.lhs();
      // "C (p | q)" would read back as C(p | q); double the parentheses.
      if (body.op() == Op::disj || body.op() == Op::imp || body.op() == Op::iff) {
        out += "((";
        render_into(out, body, 0);
        out += "))";
      } else {
        render_wrapped(out, body, 5);
      }
      break;
    }
  }
}

}  // namespace detail

inline Formula parse(std::string_view text) { return detail::Parser(text).parse_all(); }

// Minimal-parenthesis rendering; parse(render(f)) == f.
inline std::string render(const Formula& f) {
  std::string out;
  detail::render_into(out, f, 0);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << render(f); }

}  // namespace pal
