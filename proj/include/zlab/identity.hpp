#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "zlab/term.hpp"

namespace zlab {

struct BracketPair {
  int p = 0;
  int q = 0;
  friend bool operator==(const BracketPair&, const BracketPair&) = default;
};

/// An equation lhs ≈ rhs together with its naming metadata.
///
/// Identities built by the enumerator carry the (nmXpq) name, the word
/// letter and the bracketing pair. Hand-entered identities such as the
/// implication axiom only carry a free-form name and have
/// `weak_associative == false`.
struct Identity {
  Term lhs;
  Term rhs;
  std::string name;
  std::optional<std::string> alias;
  int length = 0;
  int var_count = 0;
  std::optional<char> word_letter;
  std::optional<BracketPair> brackets;
  bool weak_associative = false;

  /// Alias when one exists (LALT, FLEX, RALT), otherwise the name.
  const std::string& display_name() const { return alias ? *alias : name; }

  /// Structural equality of both sides; names are ignored.
  bool same_equation(const Identity& other) const {
    return lhs == other.lhs && rhs == other.rhs;
  }
};

/// Builds a hand-entered identity and fills in length, variable count and
/// the weak-associative flag (same variable occurrence sequence on both
/// sides, different trees).
Identity make_identity(std::string name, Term lhs, Term rhs);

/// Parses "lhs ≈ rhs" (or "lhs = rhs") into a hand-entered identity.
Identity parse_identity(std::string_view text, std::string name = {});

/// "lhs ≈ rhs" in sugared syntax.
std::string render_identity(const Identity& id, RenderStyle style = RenderStyle::sugared,
                            Notation notation = Notation::ascii);

}  // namespace zlab
