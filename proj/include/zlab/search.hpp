#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "zlab/algebra.hpp"
#include "zlab/identity.hpp"

namespace zlab {

inline constexpr std::size_t kDefaultSizeCap = 4;
inline constexpr std::size_t kExtendedSizeCap = 5;

/// What to search for: all tables of one size that satisfy every
/// `must_satisfy` identity and violate every `must_fail` identity.
struct SearchSpec {
  std::size_t size = 1;
  std::vector<Identity> must_satisfy;
  std::vector<Identity> must_fail;
  bool iso_reduce = true;
  std::optional<std::size_t> limit;
  /// Largest size accepted. Raise to kExtendedSizeCap (or beyond) explicitly.
  std::size_t size_cap = kDefaultSizeCap;
  unsigned threads = 1;

  /// Appends every identity of `v`, base first.
  SearchSpec& satisfy(const VarietyDescriptor& v);
  SearchSpec& satisfy(const Identity& id);
  SearchSpec& fail(const Identity& id);
};

/// Lexicographically least row-major table over all relabellings that fix 0.
struct CanonicalForm {
  std::size_t size = 0;
  std::vector<Element> cells;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const FiniteZroupoid& alg);

bool are_isomorphic(const FiniteZroupoid& a, const FiniteZroupoid& b);

/// Exhaustive depth-first search over Cayley tables, filling cells row-major.
///
/// Every identity in must_satisfy is ground once for all assignments; a
/// ground instance is re-evaluated whenever the cell it is blocked on gets a
/// value, so it is checked as soon as all cells it reads are known.
/// must_fail is checked on complete tables only.
///
/// With iso_reduce the result holds one table per 0-fixing isomorphism class
/// (the canonical form itself), sorted ascending. Without it, tables come in
/// lexicographic order. Output does not depend on `threads`.
///
/// Throws RangeError when size is 0 or above spec.size_cap, and
/// std::invalid_argument when an identity is both required and forbidden.
std::vector<FiniteZroupoid> enumerate_models(const SearchSpec& spec);

/// Smallest S-model that satisfies `id_in` and violates `id_out`, searching
/// sizes 1..max_size; ties go to the least canonical form.
std::optional<FiniteZroupoid> find_separator(const Identity& id_in, const Identity& id_out,
                                             std::size_t max_size, unsigned threads = 1,
                                             std::size_t size_cap = kDefaultSizeCap);

}  // namespace zlab
