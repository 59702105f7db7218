#include "zlab/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "zlab/error.hpp"

namespace zlab {

SearchSpec& SearchSpec::satisfy(const VarietyDescriptor& v) {
  for (auto& id : flatten(v)) must_satisfy.push_back(std::move(id));
  return *this;
}

SearchSpec& SearchSpec::satisfy(const Identity& id) {
  must_satisfy.push_back(id);
  return *this;
}

SearchSpec& SearchSpec::fail(const Identity& id) {
  must_fail.push_back(id);
  return *this;
}

CanonicalForm canonical_form(const FiniteZroupoid& alg) {
  const std::size_t n = alg.size();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best{n, {alg.table().begin(), alg.table().end()}};
  std::vector<Element> cand(n * n);
  while (std::next_permutation(perm.begin() + 1, perm.end())) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        cand[static_cast<std::size_t>(perm[a]) * n + static_cast<std::size_t>(perm[b])] =
            perm[static_cast<std::size_t>(
                alg.at(static_cast<Element>(a), static_cast<Element>(b)))];
    if (cand < best.cells) best.cells = cand;
  }
  return best;
}

bool are_isomorphic(const FiniteZroupoid& a, const FiniteZroupoid& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

namespace {

constexpr Element kUnset = -1;

/// All ground instances of the required identities at one size.
struct Ground {
  std::size_t n = 0;
  std::vector<Program> programs;  // lhs, rhs pairs
  struct Instance {
    std::uint32_t program;  // index of lhs; rhs is program + 1
    std::uint32_t env;      // offset into envs
  };
  std::vector<Instance> instances;
  std::vector<Element> envs;
};

Ground ground(const std::vector<Identity>& ids, std::size_t n) {
  Ground g;
  g.n = n;
  for (const auto& id : ids) {
    std::vector<std::string> slots = variables_of(id.lhs).distinct;
    for (auto& v : variables_of(id.rhs).distinct)
      if (std::find(slots.begin(), slots.end(), v) == slots.end()) slots.push_back(std::move(v));
    const auto base = static_cast<std::uint32_t>(g.programs.size());
    g.programs.push_back(compile(id.lhs, slots));
    g.programs.push_back(compile(id.rhs, slots));
    const std::size_t k = slots.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= n;
    std::vector<Element> env(k, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      for (std::size_t i = k; i-- > 0;) {
        env[i] = static_cast<Element>(rest % n);
        rest /= n;
      }
      g.instances.push_back({base, static_cast<std::uint32_t>(g.envs.size())});
      g.envs.insert(g.envs.end(), env.begin(), env.end());
    }
  }
  return g;
}

/// Evaluates on a partial table. Returns the first unassigned cell the
/// evaluation needs, or -1 with `value` set.
int partial_eval(const Program& p, const Element* env, const std::vector<Element>& table,
                 std::size_t n, Element& value) {
  Element stack[64];
  std::vector<Element> big;
  Element* st = stack;
  if (p.max_stack > 64) {
    big.resize(p.max_stack);
    st = big.data();
  }
  std::size_t top = 0;
  for (const auto& ins : p.code) {
    switch (ins.op) {
      case Program::Op::PushVar:
        st[top++] = env[ins.slot];
        break;
      case Program::Op::PushZero:
        st[top++] = 0;
        break;
      case Program::Op::Apply: {
        const Element b = st[--top];
        const std::size_t cell = static_cast<std::size_t>(st[top - 1]) * n +
                                 static_cast<std::size_t>(b);
        const Element v = table[cell];
        if (v == kUnset) return static_cast<int>(cell);
        st[top - 1] = v;
        break;
      }
    }
  }
  value = st[0];
  return -1;
}

class Engine {
 public:
  Engine(const Ground& g, const std::vector<Identity>& must_fail)
      : g_(g), must_fail_(must_fail), n_(g.n), table_(g.n * g.n, kUnset), watchers_(g.n * g.n) {}

  /// Places every instance on the watch list of the first cell it needs.
  /// Returns false if some instance is already violated with no cell set.
  bool init() {
    for (std::uint32_t i = 0; i < g_.instances.size(); ++i) {
      const int r = check(i);
      if (r == kConflict) return false;
      if (r >= 0) watchers_[static_cast<std::size_t>(r)].push_back(i);
    }
    return true;
  }

  /// Explores every completion of cells [cell, n*n) and appends solutions.
  /// Returns false once `limit` solutions have been collected.
  bool search(std::size_t cell, std::vector<std::vector<Element>>& out,
              std::optional<std::size_t> limit) {
    if (cell == table_.size()) {
      if (violates_all_forbidden()) {
        out.push_back(table_);
        if (limit && out.size() >= *limit) return false;
      }
      return true;
    }
    for (Element v = 0; v < static_cast<Element>(n_); ++v) {
      const std::size_t mark = trail_.size();
      const bool ok = assign(cell, v);
      bool go_on = true;
      if (ok) go_on = search(cell + 1, out, limit);
      undo(cell, mark);
      if (!go_on) return false;
    }
    return true;
  }

  bool assign(std::size_t cell, Element v) {
    table_[cell] = v;
    // watchers_[cell] is not modified while it is walked: every push goes to
    // a cell that is still unassigned.
    const auto& list = watchers_[cell];
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::uint32_t inst = list[k];
      const int r = check(inst);
      if (r == kConflict) return false;
      if (r >= 0) {
        watchers_[static_cast<std::size_t>(r)].push_back(inst);
        trail_.push_back(static_cast<std::uint32_t>(r));
      }
    }
    return true;
  }

  void undo(std::size_t cell, std::size_t mark) {
    while (trail_.size() > mark) {
      watchers_[trail_.back()].pop_back();
      trail_.pop_back();
    }
    table_[cell] = kUnset;
  }

 private:
  static constexpr int kSatisfied = -1;
  static constexpr int kConflict = -2;

  int check(std::uint32_t i) const {
    const auto& inst = g_.instances[i];
    const Element* env = g_.envs.data() + inst.env;
    Element l = 0, r = 0;
    const int bl = partial_eval(g_.programs[inst.program], env, table_, n_, l);
    if (bl >= 0) return bl;
    const int br = partial_eval(g_.programs[inst.program + 1], env, table_, n_, r);
    if (br >= 0) return br;
    return l == r ? kSatisfied : kConflict;
  }

  bool violates_all_forbidden() const {
    if (must_fail_.empty()) return true;
    const FiniteZroupoid alg("candidate", n_, table_);
    return std::all_of(must_fail_.begin(), must_fail_.end(),
                       [&](const Identity& id) { return !satisfies(alg, id).holds; });
  }

  const Ground& g_;
  const std::vector<Identity>& must_fail_;
  std::size_t n_;
  std::vector<Element> table_;
  std::vector<std::vector<std::uint32_t>> watchers_;
  std::vector<std::uint32_t> trail_;
};

void validate(const SearchSpec& spec) {
  if (spec.size == 0) throw RangeError("model size must be at least 1");
  if (spec.size > spec.size_cap)
    throw RangeError("model size " + std::to_string(spec.size) + " exceeds the cap of " +
                     std::to_string(spec.size_cap) + "; raise the cap explicitly");
  for (const auto& a : spec.must_satisfy)
    for (const auto& b : spec.must_fail)
      if (a.same_equation(b))
        throw std::invalid_argument("identity '" + b.name +
                                    "' is both required and forbidden");
}

}  // namespace

std::vector<FiniteZroupoid> enumerate_models(const SearchSpec& spec) {
  validate(spec);
  const std::size_t n = spec.size;
  const Ground g = ground(spec.must_satisfy, n);

  // One bucket per value of cell (0,0); workers take buckets round-robin.
  const std::optional<std::size_t> worker_limit =
      spec.iso_reduce ? std::nullopt : spec.limit;
  std::vector<std::vector<std::vector<Element>>> buckets(n);
  const unsigned workers =
      std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(n)));
  auto run_worker = [&](unsigned w) {
    Engine engine(g, spec.must_fail);
    if (!engine.init()) return;
    std::size_t found = 0;
    for (std::size_t v = w; v < n; v += workers) {
      if (worker_limit && found >= *worker_limit) break;
      if (engine.assign(0, static_cast<Element>(v))) {
        std::optional<std::size_t> remaining;
        if (worker_limit) remaining = *worker_limit - found;
        engine.search(1, buckets[v], remaining);
      }
      engine.undo(0, 0);
      found += buckets[v].size();
    }
  };
  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (auto& t : pool) t.join();
  }

  std::vector<FiniteZroupoid> out;
  if (spec.iso_reduce) {
    std::set<CanonicalForm> classes;
    for (auto& bucket : buckets)
      for (auto& table : bucket)
        classes.insert(canonical_form(FiniteZroupoid("", n, std::move(table))));
    for (const auto& c : classes) out.emplace_back("", n, c.cells);
    if (spec.limit && out.size() > *spec.limit)
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(*spec.limit), out.end());
  } else {
    for (auto& bucket : buckets)
      for (auto& table : bucket) {
        if (spec.limit && out.size() >= *spec.limit) break;
        out.emplace_back("", n, std::move(table));
      }
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].set_name("m" + std::to_string(n) + "." + std::to_string(i));
  return out;
}

std::optional<FiniteZroupoid> find_separator(const Identity& id_in, const Identity& id_out,
                                             std::size_t max_size, unsigned threads,
                                             std::size_t size_cap) {
  if (max_size > size_cap)
    throw RangeError("separator search size " + std::to_string(max_size) +
                     " exceeds the cap of " + std::to_string(size_cap));
  if (id_in.same_equation(id_out)) return std::nullopt;
  for (std::size_t n = 1; n <= max_size; ++n) {
    SearchSpec spec;
    spec.size = n;
    spec.size_cap = size_cap;
    spec.threads = threads;
    spec.satisfy(variety("S")).satisfy(id_in).fail(id_out);
    auto models = enumerate_models(spec);
    if (!models.empty()) {
      auto& m = models.front();
      m.set_name("separator-" + std::to_string(n));
      return std::move(m);
    }
  }
  return std::nullopt;
}

}  // namespace zlab
