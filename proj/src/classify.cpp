#include "zlab/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "zlab/error.hpp"
#include "zlab/waid.hpp"

namespace zlab {

namespace {

std::string fingerprint_of(const Identity& id, std::span<const FiniteZroupoid> models) {
  std::string bits(models.size(), '0');
  for (std::size_t m = 0; m < models.size(); ++m)
    if (satisfies(models[m], id).holds) bits[m] = '1';
  return bits;
}

std::string fingerprint_of(const VarietyDescriptor& v, std::span<const FiniteZroupoid> models) {
  std::string bits(models.size(), '0');
  for (std::size_t m = 0; m < models.size(); ++m)
    if (member_of(models[m], v).holds) bits[m] = '1';
  return bits;
}

std::size_t popcount(const std::string& bits) {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), '1'));
}

/// Every '1' of a is also a '1' of b.
bool subset(const std::string& a, const std::string& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == '1' && b[i] != '1') return false;
  return true;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

void require_symmetric(std::span<const FiniteZroupoid> models) {
  const auto& s = variety("S");
  for (const auto& m : models) {
    const auto r = member_of(m, s);
    if (!r.holds)
      throw DataError("model '" + m.name() + "' is not in S (fails " + r.failed + ")");
  }
}

void compute_diff(PartitionReport& report, std::span<const Identity> ids) {
  const auto& expected = expected_classification();
  std::set<std::string> seen;
  for (const auto& id : ids) seen.insert(id.name);

  std::size_t known = 0;
  for (const auto& b : expected.blocks)
    for (const auto& m : b.members)
      if (seen.contains(m.name)) ++known;
  report.compared_full = known == expected.member_count();

  std::map<std::string, std::set<std::string>> expected_to_computed;
  for (const auto& block : report.blocks) {
    std::set<std::string> keys;
    for (const auto& name : block.members) {
      const auto key = expected.block_of(name);
      if (!key) {
        report.diff.push_back("identity " + name + " is not in the expected table");
        continue;
      }
      keys.insert(*key);
      expected_to_computed[*key].insert(block.label);
    }
    if (keys.size() > 1)
      report.diff.push_back("block " + block.label + " merges expected blocks " +
                            join({keys.begin(), keys.end()}));
  }
  for (const auto& [key, labels] : expected_to_computed)
    if (labels.size() > 1)
      report.diff.push_back("expected block " + key + " is split across " +
                            join({labels.begin(), labels.end()}));
}

}  // namespace

const Block* PartitionReport::find_block(std::string_view label) const {
  for (const auto& b : blocks)
    if (b.label == label) return &b;
  return nullptr;
}

const Block* PartitionReport::block_containing(std::string_view name) const {
  const std::string canonical = resolve_alias(name);
  for (const auto& b : blocks)
    if (std::find(b.members.begin(), b.members.end(), canonical) != b.members.end()) return &b;
  return nullptr;
}

PartitionReport induced_partition(std::span<const Identity> ids,
                                  std::span<const FiniteZroupoid> models, unsigned threads) {
  require_symmetric(models);

  std::vector<std::string> prints(ids.size());
  const unsigned workers = std::max(
      1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, ids.size()))));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < ids.size(); i += workers) prints[i] = fingerprint_of(ids[i], models);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < ids.size(); ++i) groups[prints[i]].push_back(i);

  const auto& expected = expected_classification();
  PartitionReport report;
  report.models.assign(models.begin(), models.end());
  for (auto& [print, members] : groups) {
    std::vector<std::string> names;
    for (std::size_t i : members) names.push_back(ids[i].name);
    std::sort(names.begin(), names.end());
    const std::size_t rep = *std::min_element(members.begin(), members.end(), [&](auto a, auto b) {
      return ids[a].name < ids[b].name;
    });

    // Adopt an expected key only when the member sets coincide exactly.
    std::string label = names.front();
    for (const auto& eb : expected.blocks) {
      std::vector<std::string> want;
      for (const auto& m : eb.members) want.push_back(m.name);
      std::sort(want.begin(), want.end());
      if (want == names) label = eb.key;
    }
    report.blocks.push_back(Block{label, names.front(), std::move(names), print, ids[rep]});
  }
  std::sort(report.blocks.begin(), report.blocks.end(), [](const Block& a, const Block& b) {
    const auto pa = popcount(a.fingerprint), pb = popcount(b.fingerprint);
    if (pa != pb) return pa < pb;
    return a.representative < b.representative;
  });
  compute_diff(report, ids);
  return report;
}

void adopt_catalog_names(std::vector<FiniteZroupoid>& models) {
  std::map<CanonicalForm, std::string> named;
  for (const auto& [name, alg] : catalog()) named.emplace(canonical_form(alg), name);
  for (auto& m : models)
    if (auto it = named.find(canonical_form(m)); it != named.end()) m.set_name(it->second);
}

std::vector<FiniteZroupoid> symmetric_models_up_to(std::size_t max_size, unsigned threads,
                                                   std::size_t size_cap) {
  if (max_size == 0) throw RangeError("max size must be at least 1");
  if (max_size > size_cap)
    throw RangeError("max size " + std::to_string(max_size) + " exceeds the cap of " +
                     std::to_string(size_cap));
  std::vector<FiniteZroupoid> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    SearchSpec spec;
    spec.size = n;
    spec.size_cap = size_cap;
    spec.threads = threads;
    spec.satisfy(variety("S"));
    for (auto& m : enumerate_models(spec)) out.push_back(std::move(m));
  }
  adopt_catalog_names(out);
  return out;
}

PartitionReport classify_up_to(std::size_t max_size, std::span<const Identity> ids,
                               unsigned threads, std::size_t size_cap) {
  const auto models = symmetric_models_up_to(max_size, threads, size_cap);
  return induced_partition(ids, models, threads);
}

std::optional<std::size_t> Poset::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].label == label) return i;
  return std::nullopt;
}

bool Poset::less_equal(std::string_view a, std::string_view b) const {
  const auto i = index_of(a), j = index_of(b);
  if (!i || !j) throw NameError("unknown poset node '" + std::string(!i ? a : b) + "'");
  return leq[*i][*j];
}

std::optional<std::string> Poset::meet(std::string_view a, std::string_view b) const {
  const auto i = index_of(a), j = index_of(b);
  if (!i || !j) throw NameError("unknown poset node '" + std::string(!i ? a : b) + "'");
  std::vector<std::size_t> lower;
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (leq[k][*i] && leq[k][*j]) lower.push_back(k);
  for (std::size_t g : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](std::size_t k) { return leq[k][g]; }))
      return nodes[g].label;
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> Poset::hasse_labels() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [lo, hi] : hasse) out.emplace_back(nodes[lo].label, nodes[hi].label);
  std::sort(out.begin(), out.end());
  return out;
}

Poset inclusion_poset(const PartitionReport& report, std::span<const FiniteZroupoid> models,
                      bool with_landmarks) {
  require_symmetric(models);
  Poset poset;
  for (const auto& b : report.blocks)
    poset.nodes.push_back({b.label, fingerprint_of(b.representative_identity, models), false});

  if (with_landmarks) {
    for (const char* name : {"T", "BA"}) {
      std::string print = fingerprint_of(variety(name), models);
      const bool dup = std::any_of(poset.nodes.begin(), poset.nodes.end(),
                                   [&](const Poset::Node& n) { return n.fingerprint == print; });
      if (dup)
        poset.merged_landmarks.emplace_back(name);
      else
        poset.nodes.push_back({name, std::move(print), true});
    }
  }

  const std::size_t n = poset.nodes.size();
  poset.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      poset.leq[i][j] = subset(poset.nodes[i].fingerprint, poset.nodes[j].fingerprint);

  // Nodes whose model sets coincide would make this a preorder; blocks have
  // distinct fingerprints by construction, so strict order is a != b.
  auto lt = [&](std::size_t a, std::size_t b) { return a != b && poset.leq[a][b]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!lt(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (lt(i, k) && lt(k, j)) covered = false;
      if (covered) poset.hasse.emplace_back(i, j);
    }
  return poset;
}

Poset inclusion_poset(const PartitionReport& report, bool with_landmarks) {
  return inclusion_poset(report, report.models, with_landmarks);
}

std::string hasse_dot(const Poset& poset) {
  const std::size_t n = poset.nodes.size();
  // Height = length of the longest chain of covers below a node.
  std::vector<std::size_t> height(n, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [lo, hi] : poset.hasse)
      if (height[hi] < height[lo] + 1) {
        height[hi] = height[lo] + 1;
        changed = true;
      }
  }
  std::map<std::size_t, std::vector<std::string>> ranks;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    ranks[height[i]].push_back(poset.nodes[i].label);
    labels.push_back(poset.nodes[i].label);
  }
  std::sort(labels.begin(), labels.end());

  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const auto& l : labels) out << "  \"" << l << "\";\n";
  for (auto& [h, row] : ranks) {
    std::sort(row.begin(), row.end());
    out << "  { rank=same;";
    for (const auto& l : row) out << " \"" << l << "\";";
    out << " }\n";
  }
  for (const auto& [lo, hi] : poset.hasse_labels())
    out << "  \"" << lo << "\" -> \"" << hi << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace zlab
