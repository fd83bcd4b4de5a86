#include "core/sexpr.hpp"

#include "core/errors.hpp"

namespace tamp {

bool Sexpr::headIs(std::string_view head) const {
  return isList() && !items.empty() && items.front().isAtom() &&
         items.front().text == head;
}

namespace {

struct Reader {
  std::string_view src;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= src.size(); }

  char peek() const { return src[pos]; }

  void advance() {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skipWs() {
    while (!eof()) {
      char c = peek();
      if (c == ';') {
        while (!eof() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  Sexpr readForm() {
    skipWs();
    if (eof()) throw SyntaxError(line, col, "unexpected end of input");
    int l = line, c = col;
    if (peek() == '(') {
      advance();
      Sexpr node;
      node.kind = Sexpr::Kind::List;
      node.line = l;
      node.col = c;
      for (;;) {
        skipWs();
        if (eof()) throw SyntaxError(l, c, "unterminated list");
        if (peek() == ')') {
          advance();
          return node;
        }
        node.items.push_back(readForm());
      }
    }
    if (peek() == ')') throw SyntaxError(l, c, "unexpected ')'");
    Sexpr node;
    node.kind = Sexpr::Kind::Atom;
    node.line = l;
    node.col = c;
    while (!eof()) {
      char ch = peek();
      if (ch == '(' || ch == ')' || ch == ';' || ch == ' ' || ch == '\t' ||
          ch == '\r' || ch == '\n')
        break;
      node.text.push_back(ch);
      advance();
    }
    return node;
  }
};

}  // namespace

std::vector<Sexpr> parseSexprs(std::string_view src) {
  Reader r{src};
  std::vector<Sexpr> forms;
  for (;;) {
    r.skipWs();
    if (r.eof()) return forms;
    forms.push_back(r.readForm());
  }
}

Sexpr parseSexpr(std::string_view src) {
  auto forms = parseSexprs(src);
  if (forms.size() != 1)
    throw SyntaxError(1, 1, "expected exactly one top-level form, got " +
                                std::to_string(forms.size()));
  return std::move(forms.front());
}

}  // namespace tamp
