#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zlab/identity.hpp"
#include "zlab/term.hpp"

namespace zlab {

/// A finite zroupoid on {0, ..., n-1}. Element 0 interprets the constant 0.
class FiniteZroupoid {
 public:
  /// `table` is row-major: table[a * size + b] = a -> b. Throws DataError if
  /// the size is zero, the table has the wrong length, or an entry is out of range.
  FiniteZroupoid(std::string name, std::size_t size, std::vector<Element> table);

  static FiniteZroupoid from_rows(std::string name,
                                  const std::vector<std::vector<Element>>& rows);

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t size() const noexcept { return size_; }
  Element at(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * size_ + static_cast<std::size_t>(b)];
  }
  std::span<const Element> table() const noexcept { return table_; }
  std::vector<std::vector<Element>> rows() const;

  /// Tables are equal (names ignored).
  bool same_table(const FiniteZroupoid& other) const {
    return size_ == other.size_ && table_ == other.table_;
  }

 private:
  std::string name_;
  std::size_t size_;
  std::vector<Element> table_;
};

/// Outcome of checking one identity (or a conjunction of them).
struct SatisfactionReport {
  bool holds = true;
  /// Violating assignment in variable first-occurrence order. Empty when holds.
  std::vector<std::pair<std::string, Element>> witness;
  Element lhs_value = 0;
  Element rhs_value = 0;
  /// Name of the identity that failed (member_of only).
  std::string failed;

  explicit operator bool() const noexcept { return holds; }
};

/// Checks `id` under all size^k assignments, lexicographically with the first
/// variable most significant, and reports the first violation.
SatisfactionReport satisfies(const FiniteZroupoid& alg, const Identity& id);

/// A variety given by defining identities relative to a base variety.
struct VarietyDescriptor {
  std::string name;
  /// Name of the base variety; empty for an absolute definition.
  std::string base;
  std::vector<Identity> defining;
};

/// Registered varieties:
///   I      (I), 0'' ≈ 0                    absolute
///   I20    x'' ≈ x                          relative to I
///   I10    x'' ≈ x'                         relative to I
///   MC     x ^ y ≈ y ^ x                    relative to I
///   C      x -> y ≈ y -> x                  relative to I
///   S      x'' ≈ x, x ^ y ≈ y ^ x           relative to I
///   SL     x' ≈ x, x -> y ≈ y -> x          relative to I
///   DM     (x -> y) -> x ≈ x                relative to I
///   KL     (x -> x) -> (y -> y) ≈ y -> y    relative to DM
///   BA     x -> x ≈ 0'                      relative to DM
///   T      x ≈ y                            relative to S (the trivial variety)
/// plus every (nmXpq) name or alias, relative to S.
const VarietyDescriptor& variety(std::string_view name);
std::vector<std::string> registered_variety_names();

/// Descriptor for a weak associative identity, relative to S.
VarietyDescriptor waid_variety(const Identity& id);

/// The full list of identities a member must satisfy, base identities first.
std::vector<Identity> flatten(const VarietyDescriptor& v);

/// Conjunction over flatten(v); the first failing identity is reported.
SatisfactionReport member_of(const FiniteZroupoid& alg, const VarietyDescriptor& v);

/// The named algebras: T1, 2_s, 2_b, A3, A4.
const std::map<std::string, FiniteZroupoid, std::less<>>& catalog();

/// Looks up a catalog algebra; throws NameError.
const FiniteZroupoid& catalog_algebra(std::string_view name);

/// Relabels elements by `perm` (perm[0] must be 0): result[perm[a]][perm[b]] = perm[a->b].
FiniteZroupoid relabel(const FiniteZroupoid& alg, std::span<const Element> perm);

}  // namespace zlab
