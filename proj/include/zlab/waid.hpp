#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zlab/identity.hpp"
#include "zlab/term.hpp"

namespace zlab {

/// A word of `length` variable occurrences using exactly `var_count`
/// distinct variables, stored as a restricted-growth string: letters[i] is
/// the index of the variable at position i, and variable k+1 first appears
/// after variable k.
struct Word {
  int length = 0;
  int var_count = 0;
  std::vector<int> letters;
  /// 'A', 'B', ... in lexicographic order of the restricted-growth strings.
  char letter_name = '?';

  friend bool operator==(const Word&, const Word&) = default;
};

/// A full binary tree with `arity` leaves. Leaves are the placeholder
/// variable `a`, so render_term(shape.tree) reads "a -> (a -> a)".
struct BracketShape {
  int arity = 0;
  /// 1-based position in the listing for this arity.
  int index = 0;
  Term tree;
};

inline constexpr int kMaxBracketArity = 8;

/// All bracketings of a word of length n, 1 <= n <= 8.
///
/// Ordered by the size of the root's left subtree (smallest first), then
/// recursively by the left subtree's position, then the right subtree's.
/// For n = 3 and n = 4 this is exactly the standard numbering:
///   1: a -> (a -> (a -> a))      4: (a -> (a -> a)) -> a
///   2: a -> ((a -> a) -> a)      5: ((a -> a) -> a) -> a
///   3: (a -> a) -> (a -> a)
/// Larger arities follow the same rule; that order is a local convention.
const std::vector<BracketShape>& bracketings(int n);

/// Restricted-growth words of length n with exactly m symbols, 1 <= m <= n <= 8,
/// in lexicographic order and labelled A, B, C, ...
std::vector<Word> words(int n, int m);

/// Variable names used when a word with m distinct variables is turned into
/// terms. Four-variable words use t, x, y, z (in that order); everything
/// else uses x, y, z.
std::vector<std::string> word_variables(int m);

/// Replaces the leaves of `shape`, left to right, by `leaves`.
Term instantiate(const BracketShape& shape, std::span<const std::string> leaves);

/// Resolves an (nmXpq) name or one of its aliases:
///   LALT, FLEX, RALT          -> 32A12, 32B12, 32C12
///   Bol-Moufang short forms   -> A23 means 43A23
/// Throws NameError on malformed names, p >= q, or out-of-range parts.
Identity identity_from_name(std::string_view name);

/// Canonical (nmXpq) name of a weak associative identity. The pair is
/// normalised so that p < q. Throws NameError when `id` is not weak
/// associative or both sides use the same bracketing.
std::string name_of(const Identity& id);

/// Canonical name for an alias, or the input unchanged.
std::string resolve_alias(std::string_view name);

/// Traditional alias of a canonical name, if it has one.
std::optional<std::string> alias_of(std::string_view canonical);

/// Every (nmXpq) identity with 3 <= n <= max_len, ordered by (n, m, X, p, q).
/// Lengths 1 and 2 admit no non-trivial identity. max_len must be 3 or 4.
std::vector<Identity> enumerate_waids(int max_len = 4);

}  // namespace zlab
