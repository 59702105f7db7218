#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zlab {

class FiniteZroupoid;
using Element = int;

/// A term over the signature <->, 0>.
///
/// Only three node kinds are ever stored: variables, the constant 0 and
/// the binary arrow. The derived operations x' and x ^ y are expanded by
/// the factory functions below and re-folded only by the sugared printer.
/// Terms are immutable and share subtrees, so copies are cheap.
class Term {
 public:
  enum class Kind : std::uint8_t { Variable, Zero, Arrow };

  static Term var(std::string name);
  static Term zero();
  static Term arrow(Term left, Term right);
  /// t' := t -> 0
  static Term prime(Term t);
  /// s ^ t := (s -> t')'
  static Term meet(Term s, Term t);

  Kind kind() const noexcept;
  bool is_var() const noexcept { return kind() == Kind::Variable; }
  bool is_zero() const noexcept { return kind() == Kind::Zero; }
  bool is_arrow() const noexcept { return kind() == Kind::Arrow; }

  /// Variable name. Empty for non-variables.
  const std::string& name() const noexcept;
  /// Children of an arrow. Precondition: is_arrow().
  const Term& left() const noexcept;
  const Term& right() const noexcept;

  /// Number of variable occurrences.
  std::size_t length() const noexcept;
  /// Arrow nesting depth; variables and 0 have depth 0.
  std::size_t depth() const noexcept;

  friend bool operator==(const Term& a, const Term& b) noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Order of the variable alphabet: x < y < z < t < u < v < w, then any other
/// name lexicographically.
bool variable_less(std::string_view a, std::string_view b);

struct VariableList {
  /// Distinct variables in order of first occurrence.
  std::vector<std::string> distinct;
  /// Every occurrence, left to right.
  std::vector<std::string> occurrences;
};

VariableList variables_of(const Term& t);

/// Parses the surface syntax:
///
///   term := '0' | var | term "'" | '(' term '->' term ')' | '(' term '^' term ')'
///
/// Outermost parentheses are optional. `->` and `^` never chain without
/// parentheses. The Unicode forms `→`, `′` and `∧` are accepted as well.
Term parse_term(std::string_view text);

enum class RenderStyle { expanded, sugared };
enum class Notation { ascii, unicode };

std::string render_term(const Term& t, RenderStyle style = RenderStyle::sugared,
                        Notation notation = Notation::ascii);

using Environment = std::map<std::string, Element, std::less<>>;

Element eval_term(const Term& t, const FiniteZroupoid& alg, const Environment& env);

/// Substitutes `replacement` for every occurrence of variable `name`.
Term substitute(const Term& t, std::string_view name, const Term& replacement);

/// Postfix encoding of a term against a fixed list of variable slots.
/// Used by the satisfaction checker and the model search, which evaluate
/// the same term under very many assignments.
struct Program {
  enum class Op : std::uint8_t { PushVar, PushZero, Apply };
  struct Instr {
    Op op;
    std::uint8_t slot;
  };
  std::vector<Instr> code;
  std::size_t max_stack = 0;
};

/// `slots` must contain every variable of `t`.
Program compile(const Term& t, std::span<const std::string> slots);

/// Evaluates a compiled term on a complete table (row-major, `size` x `size`).
Element run(const Program& p, std::span<const Element> table, std::size_t size,
            std::span<const Element> env);

}  // namespace zlab
