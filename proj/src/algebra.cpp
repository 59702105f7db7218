#include "zlab/algebra.hpp"

#include <algorithm>
#include <mutex>

#include "zlab/error.hpp"
#include "zlab/waid.hpp"

namespace zlab {

FiniteZroupoid::FiniteZroupoid(std::string name, std::size_t size, std::vector<Element> table)
    : name_(std::move(name)), size_(size), table_(std::move(table)) {
  if (size_ == 0) throw DataError("algebra '" + name_ + "' has an empty carrier");
  if (table_.size() != size_ * size_)
    throw DataError("algebra '" + name_ + "' needs " + std::to_string(size_ * size_) +
                    " table entries, got " + std::to_string(table_.size()));
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] < 0 || static_cast<std::size_t>(table_[i]) >= size_)
      throw DataError("algebra '" + name_ + "' entry [" + std::to_string(i / size_) + "][" +
                      std::to_string(i % size_) + "] = " + std::to_string(table_[i]) +
                      " is out of range");
}

FiniteZroupoid FiniteZroupoid::from_rows(std::string name,
                                         const std::vector<std::vector<Element>>& rows) {
  std::vector<Element> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.size())
      throw DataError("algebra '" + name + "' table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteZroupoid(std::move(name), rows.size(), std::move(flat));
}

std::vector<std::vector<Element>> FiniteZroupoid::rows() const {
  std::vector<std::vector<Element>> out(size_);
  for (std::size_t a = 0; a < size_; ++a)
    out[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * size_),
                  table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * size_));
  return out;
}

SatisfactionReport satisfies(const FiniteZroupoid& alg, const Identity& id) {
  std::vector<std::string> slots = variables_of(id.lhs).distinct;
  for (auto& v : variables_of(id.rhs).distinct)
    if (std::find(slots.begin(), slots.end(), v) == slots.end()) slots.push_back(std::move(v));
  const Program lhs = compile(id.lhs, slots);
  const Program rhs = compile(id.rhs, slots);
  const std::size_t n = alg.size();
  const auto table = alg.table();
  std::vector<Element> env(slots.size(), 0);
  for (;;) {
    const Element l = run(lhs, table, n, env);
    const Element r = run(rhs, table, n, env);
    if (l != r) {
      SatisfactionReport rep;
      rep.holds = false;
      for (std::size_t i = 0; i < slots.size(); ++i) rep.witness.emplace_back(slots[i], env[i]);
      rep.lhs_value = l;
      rep.rhs_value = r;
      rep.failed = id.name;
      return rep;
    }
    // Odometer, last variable fastest.
    std::size_t i = env.size();
    while (i > 0) {
      --i;
      if (static_cast<std::size_t>(++env[i]) < n) break;
      env[i] = 0;
      if (i == 0) return {};
    }
    if (env.empty()) return {};
  }
}

namespace {

Identity axiom(std::string name, std::string_view text) {
  return parse_identity(text, std::move(name));
}

std::map<std::string, VarietyDescriptor, std::less<>> build_registry() {
  std::map<std::string, VarietyDescriptor, std::less<>> r;
  auto add = [&r](std::string name, std::string base, std::vector<Identity> ids) {
    r.emplace(name, VarietyDescriptor{name, std::move(base), std::move(ids)});
  };
  const Identity involutive = axiom("I20", "x'' ≈ x");
  const Identity meet_comm = axiom("MC", "x ^ y ≈ y ^ x");
  const Identity commutative = axiom("C", "x -> y ≈ y -> x");
  add("I", "",
      {axiom("I", "(x -> y) -> z ≈ ((z' -> x) -> (y -> z)')'"), axiom("I0", "0'' ≈ 0")});
  add("I20", "I", {involutive});
  add("I10", "I", {axiom("I10", "x'' ≈ x'")});
  add("MC", "I", {meet_comm});
  add("C", "I", {commutative});
  add("S", "I", {involutive, meet_comm});
  add("SL", "I", {axiom("SL1", "x' ≈ x"), commutative});
  add("DM", "I", {axiom("DM", "(x -> y) -> x ≈ x")});
  add("KL", "DM", {axiom("KL", "(x -> x) -> (y -> y) ≈ y -> y")});
  add("BA", "DM", {axiom("BA", "x -> x ≈ 0'")});
  add("T", "S", {axiom("T", "x ≈ y")});
  return r;
}

struct Registry {
  std::mutex mu;
  std::map<std::string, VarietyDescriptor, std::less<>> entries = build_registry();
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

VarietyDescriptor waid_variety(const Identity& id) {
  return VarietyDescriptor{id.display_name(), "S", {id}};
}

const VarietyDescriptor& variety(std::string_view name) {
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  if (auto it = reg.entries.find(name); it != reg.entries.end()) return it->second;
  Identity id = [&] {
    try {
      return identity_from_name(name);
    } catch (const NameError&) {
      throw NameError("unknown variety '" + std::string(name) + "'");
    }
  }();
  VarietyDescriptor v = waid_variety(id);
  v.name = std::string(name);
  return reg.entries.emplace(std::string(name), std::move(v)).first->second;
}

std::vector<std::string> registered_variety_names() {
  return {"I", "I20", "I10", "MC", "C", "S", "SL", "DM", "KL", "BA", "T"};
}

std::vector<Identity> flatten(const VarietyDescriptor& v) {
  std::vector<Identity> out;
  if (!v.base.empty()) out = flatten(variety(v.base));
  out.insert(out.end(), v.defining.begin(), v.defining.end());
  return out;
}

SatisfactionReport member_of(const FiniteZroupoid& alg, const VarietyDescriptor& v) {
  for (const auto& id : flatten(v)) {
    auto rep = satisfies(alg, id);
    if (!rep.holds) return rep;
  }
  return {};
}

const std::map<std::string, FiniteZroupoid, std::less<>>& catalog() {
  static const auto algebras = [] {
    std::map<std::string, FiniteZroupoid, std::less<>> m;
    auto add = [&m](const std::string& name, const std::vector<std::vector<Element>>& rows) {
      m.emplace(name, FiniteZroupoid::from_rows(name, rows));
    };
    add("T1", {{0}});
    add("2_s", {{0, 1}, {1, 1}});
    add("2_b", {{1, 1}, {0, 1}});
    add("A3", {{2, 2, 2}, {1, 1, 2}, {0, 1, 2}});
    add("A4", {{0, 1, 2, 3}, {2, 3, 2, 3}, {1, 1, 3, 3}, {3, 3, 3, 3}});
    return m;
  }();
  return algebras;
}

const FiniteZroupoid& catalog_algebra(std::string_view name) {
  const auto& c = catalog();
  const auto it = c.find(name);
  if (it == c.end()) throw NameError("no catalog algebra named '" + std::string(name) + "'");
  return it->second;
}

FiniteZroupoid relabel(const FiniteZroupoid& alg, std::span<const Element> perm) {
  const std::size_t n = alg.size();
  std::vector<bool> seen(n, false);
  for (Element v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
      throw DataError("relabelling is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (perm.size() != n || perm[0] != 0)
    throw DataError("relabelling must be a permutation fixing 0");
  std::vector<Element> out(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out[static_cast<std::size_t>(perm[a]) * n + static_cast<std::size_t>(perm[b])] =
          perm[static_cast<std::size_t>(alg.at(static_cast<Element>(a), static_cast<Element>(b)))];
  return FiniteZroupoid(alg.name(), n, std::move(out));
}

}  // namespace zlab
