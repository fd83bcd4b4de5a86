#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tamp {

/// Parsed S-expression node. Atoms keep their literal text; lists keep
/// children in order. Every node records where it started, for error
/// messages further up the pipeline.
struct Sexpr {
  enum class Kind { Atom, List };

  Kind kind = Kind::Atom;
  std::string text;           // atom text (lowercased except numbers? no: verbatim)
  std::vector<Sexpr> items;   // list children
  int line = 0;
  int col = 0;

  bool isAtom() const { return kind == Kind::Atom; }
  bool isList() const { return kind == Kind::List; }
  /// True for a list whose first child is the given atom.
  bool headIs(std::string_view head) const;
};

/// Reads all top-level forms. Comments run from ';' to end of line.
/// Throws SyntaxError on unbalanced parentheses or stray tokens.
std::vector<Sexpr> parseSexprs(std::string_view src);

/// Convenience: requires exactly one top-level form.
Sexpr parseSexpr(std::string_view src);

}  // namespace tamp
