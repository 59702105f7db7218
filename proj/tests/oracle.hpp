#pragma once

// Independent reference implementations used to cross-check the library.
// Nothing here calls the search engine or the canonical-form code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "zlab/algebra.hpp"
#include "zlab/term.hpp"

namespace oracle {

using zlab::Element;
using zlab::FiniteZroupoid;
using zlab::Term;

/// Direct recursive evaluation with the environment as a plain vector
/// indexed by position in `vars`.
inline Element eval(const Term& t, const std::vector<Element>& table, std::size_t n,
                    const std::vector<std::string>& vars, const std::vector<Element>& env) {
  if (t.is_zero()) return 0;
  if (t.is_var()) {
    const auto it = std::find(vars.begin(), vars.end(), t.name());
    return env[static_cast<std::size_t>(it - vars.begin())];
  }
  const Element a = eval(t.left(), table, n, vars, env);
  const Element b = eval(t.right(), table, n, vars, env);
  return table[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
}

inline void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t.is_var()) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
  } else if (t.is_arrow()) {
    collect_vars(t.left(), out);
    collect_vars(t.right(), out);
  }
}

/// Generate-and-test satisfaction over every assignment.
inline bool holds(const std::vector<Element>& table, std::size_t n, const Term& lhs,
                  const Term& rhs) {
  std::vector<std::string> vars;
  collect_vars(lhs, vars);
  collect_vars(rhs, vars);
  std::vector<Element> env(vars.size(), 0);
  for (;;) {
    if (eval(lhs, table, n, vars, env) != eval(rhs, table, n, vars, env)) return false;
    std::size_t i = 0;
    while (i < env.size() && ++env[i] == static_cast<Element>(n)) env[i++] = 0;
    if (i == env.size()) return true;
  }
}

struct Law {
  Term lhs;
  Term rhs;
};

/// Every n x n table satisfying all laws, in lexicographic order.
inline std::vector<std::vector<Element>> naive_models(std::size_t n, const std::vector<Law>& laws) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> table(n * n, 0);
  for (;;) {
    bool ok = true;
    for (const auto& law : laws)
      if (!holds(table, n, law.lhs, law.rhs)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(table);
    // Odometer with the last cell fastest keeps the output lexicographic.
    std::size_t i = table.size();
    while (i > 0 && ++table[i - 1] == static_cast<Element>(n)) table[--i] = 0;
    if (i == 0) return out;
  }
}

/// Is there a 0-fixing bijection p with p(a->b) = p(a) -> p(b)?
inline bool isomorphic(const std::vector<Element>& a, const std::vector<Element>& b,
                       std::size_t n) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        ok = b[static_cast<std::size_t>(p[x]) * n + static_cast<std::size_t>(p[y])] ==
             p[static_cast<std::size_t>(a[x * n + y])];
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

/// Greedy grouping by pairwise isomorphism tests; returns one table per class.
inline std::vector<std::vector<Element>> iso_classes(const std::vector<std::vector<Element>>& all,
                                                     std::size_t n) {
  std::vector<std::vector<Element>> reps;
  for (const auto& t : all) {
    const bool seen = std::any_of(reps.begin(), reps.end(),
                                  [&](const auto& r) { return isomorphic(t, r, n); });
    if (!seen) reps.push_back(t);
  }
  return reps;
}

/// Random term over the variables x, y, z, t and 0 with depth at most `depth`.
inline Term random_term(std::mt19937& rng, int depth) {
  static const char* const vars[] = {"x", "y", "z", "t"};
  std::uniform_int_distribution<int> pick(0, 9);
  const int r = pick(rng);
  if (depth == 0 || r < 3) {
    if (r == 0) return Term::zero();
    return Term::var(vars[std::uniform_int_distribution<int>(0, 3)(rng)]);
  }
  Term left = random_term(rng, depth - 1);
  // Bias towards zero on the right so primes and meets appear often.
  Term right = pick(rng) < 3 ? Term::zero() : random_term(rng, depth - 1);
  return Term::arrow(std::move(left), std::move(right));
}

/// FNV-1a over a sequence of tables, used to compare outputs across runs.
inline std::uint64_t hash_models(const std::vector<FiniteZroupoid>& models) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& m : models) {
    mix(m.size());
    for (Element e : m.table()) mix(static_cast<std::uint64_t>(e));
  }
  return h;
}

}  // namespace oracle
