#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zlab/algebra.hpp"
#include "zlab/identity.hpp"
#include "zlab/search.hpp"

namespace zlab {

// ---------------------------------------------------------------------------
// Expected data

struct ExpectedEntry {
  enum class Source {
    /// Stated equal to the block's key by a known equality chain.
    chain,
    /// Bol-Moufang identity whose block is not listed in those chains;
    /// frozen from model computation and re-checked by the full classification.
    computed,
  };
  std::string name;
  Source source = Source::chain;
};

struct ExpectedBlock {
  /// SL, 43A12, 43A23, 42A12, 43F25 or S.
  std::string key;
  std::vector<ExpectedEntry> members;
};

/// The six-block classification of the 155 weak associative identities
/// relative to S, and the covering relation of the resulting poset with the
/// trivial variety T and Boolean algebras BA adjoined.
struct ExpectedClassification {
  std::vector<ExpectedBlock> blocks;
  /// Traditional names that live in a block under another canonical name.
  std::vector<std::pair<std::string, std::string>> aliases;
  /// (lower, upper) pairs.
  std::vector<std::pair<std::string, std::string>> hasse_edges;

  /// Block key for a canonical name or alias.
  std::optional<std::string> block_of(std::string_view name) const;
  std::size_t member_count() const;
};

const ExpectedClassification& expected_classification();

// ---------------------------------------------------------------------------
// Partition

struct Block {
  /// Expected key when the block matches one expected block exactly,
  /// otherwise the representative.
  std::string label;
  /// Lexicographically least member name.
  std::string representative;
  std::vector<std::string> members;
  /// One character per model, '1' when the identity holds there.
  std::string fingerprint;
  Identity representative_identity;
};

struct PartitionReport {
  std::vector<Block> blocks;
  std::vector<FiniteZroupoid> models;
  /// Disagreements with the expected classification, restricted to the
  /// identities that were classified. Empty means agreement.
  std::vector<std::string> diff;
  /// True when every one of the 155 expected names took part.
  bool compared_full = false;

  const Block* find_block(std::string_view label) const;
  /// Block holding the identity with this canonical name or alias.
  const Block* block_containing(std::string_view name) const;
};

/// Groups identities by their satisfaction pattern over `models`.
/// Every model must be in S (DataError otherwise).
PartitionReport induced_partition(std::span<const Identity> ids,
                                  std::span<const FiniteZroupoid> models, unsigned threads = 1);

/// All S-models of size 1..max_size, one per isomorphism class, ascending by
/// size then canonical form. Models isomorphic to a catalog algebra take its name.
std::vector<FiniteZroupoid> symmetric_models_up_to(std::size_t max_size, unsigned threads = 1,
                                                   std::size_t size_cap = kDefaultSizeCap);

/// Renames every model isomorphic to a catalog algebra after it.
void adopt_catalog_names(std::vector<FiniteZroupoid>& models);

PartitionReport classify_up_to(std::size_t max_size, std::span<const Identity> ids,
                               unsigned threads = 1, std::size_t size_cap = kDefaultSizeCap);

// ---------------------------------------------------------------------------
// Poset

struct Poset {
  struct Node {
    std::string label;
    std::string fingerprint;
    bool landmark = false;
  };
  std::vector<Node> nodes;
  /// leq[i][j]: every model of node i is a model of node j.
  std::vector<std::vector<bool>> leq;
  /// Covering pairs (lower, upper) as node indices.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
  /// Landmarks dropped because their model set equals an existing node's.
  std::vector<std::string> merged_landmarks;

  std::optional<std::size_t> index_of(std::string_view label) const;
  bool less_equal(std::string_view a, std::string_view b) const;
  /// Greatest lower bound, if it exists among the nodes.
  std::optional<std::string> meet(std::string_view a, std::string_view b) const;
  /// Covering pairs by label, sorted.
  std::vector<std::pair<std::string, std::string>> hasse_labels() const;
};

/// Block V1 <= V2 iff every model satisfying V1's representative satisfies
/// V2's. With `with_landmarks`, T (x ≈ y) and BA are added as extra nodes.
Poset inclusion_poset(const PartitionReport& report, std::span<const FiniteZroupoid> models,
                      bool with_landmarks = false);
Poset inclusion_poset(const PartitionReport& report, bool with_landmarks = false);

/// Deterministic DOT digraph, edges drawn bottom to top, one rank per height.
std::string hasse_dot(const Poset& poset);

}  // namespace zlab
