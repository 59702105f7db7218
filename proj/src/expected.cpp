#include <algorithm>

#include "zlab/classify.hpp"
#include "zlab/waid.hpp"

namespace zlab {

namespace {

using Src = ExpectedEntry::Source;

struct RawBlock {
  const char* key;
  std::vector<const char*> chain;
  std::vector<const char*> computed;
};

// Equality chains, one per block, in chain order. The three
// length-3 two-variable laws appear under their canonical names
// (32A12 = LALT, 32B12 = FLEX, 32C12 = RALT).
const std::vector<RawBlock>& raw_blocks() {
  static const std::vector<RawBlock> blocks = {
      {"SL",
       {"32A12", "32B12", "32C12", "33A12", "42A14", "42B14", "42B24", "42B34", "42B45",
        "42C14", "42C24", "42C34", "42C45", "42D14", "42D34", "42E12", "42E14", "42E23",
        "42E24", "42E34", "42E35", "42E45", "42F15", "42F23", "42F24", "42F45", "42G23",
        "42G24", "42G35", "42G45", "42E15", "42G14", "42F13", "42F14", "42F34", "44A12",
        "44A13", "44A14", "44A15", "44A23", "44A24", "44A34", "44A35", "44A45"},
       {"43A13", "43A14", "43A15", "43A24", "43A34", "43A45", "43B12", "43B14", "43B15",
        "43B23", "43B24", "43B34", "43B35", "43B45", "43C12", "43C13", "43C14", "43C15",
        "43C23", "43C24", "43C34", "43C35", "43C45", "43D13", "43D14", "43D15", "43D23",
        "43D24", "43D34", "43D45", "43E12", "43E13", "43E14", "43E15", "43E23", "43E24",
        "43E34", "43E35", "43E45", "43F12", "43F14", "43F15", "43F23", "43F24", "43F34",
        "43F35", "43F45"}},
      {"43A12",
       {"43A12", "42C12", "42C13", "42C15", "42D12", "42F35", "42D15", "42E13", "42F12",
        "42G13"},
       {"43B13", "43D12", "43D35", "43F13"}},
      {"43A23",
       {"43A23", "31A12", "41A14", "41A34", "41A45", "41A24", "44A25", "42A24", "42A34",
        "42A45", "42B13", "42B15", "42B23", "42B25", "42D24", "42D45", "42F25", "42G15",
        "42G34", "42G12"},
       {"43A25", "43C25", "43D25", "43E25"}},
      {"42A12", {"42A12", "42A13", "42A15", "42D23", "42D35"}, {}},
      {"43F25", {"43F25", "42B35", "42B12", "42C23", "42C25", "42C35", "42G25", "42D13"},
       {"43A35"}},
      {"S",
       {"41A23", "41A13", "41A15", "41A35", "41A25", "41A12", "42A23", "42A25", "42A35",
        "42D25", "42E25"},
       {"43B25"}},
  };
  return blocks;
}

ExpectedClassification build() {
  ExpectedClassification c;
  for (const auto& raw : raw_blocks()) {
    ExpectedBlock b{raw.key, {}};
    for (const char* n : raw.chain) b.members.push_back({n, Src::chain});
    for (const char* n : raw.computed) b.members.push_back({n, Src::computed});
    c.blocks.push_back(std::move(b));
  }
  c.aliases = {{"LALT", "32A12"}, {"FLEX", "32B12"}, {"RALT", "32C12"}};
  c.hasse_edges = {
      {"T", "BA"},       {"T", "SL"},       {"BA", "43A12"},    {"SL", "43A12"},
      {"SL", "43A23"},   {"43A12", "42A12"}, {"43A12", "43F25"}, {"43A23", "43F25"},
      {"42A12", "S"},    {"43F25", "S"},
  };
  return c;
}

}  // namespace

std::optional<std::string> ExpectedClassification::block_of(std::string_view name) const {
  const std::string canonical = resolve_alias(name);
  for (const auto& b : blocks)
    for (const auto& m : b.members)
      if (m.name == canonical) return b.key;
  return std::nullopt;
}

std::size_t ExpectedClassification::member_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.members.size();
  return n;
}

const ExpectedClassification& expected_classification() {
  static const ExpectedClassification c = build();
  return c;
}

}  // namespace zlab
