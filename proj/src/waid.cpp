#include "zlab/waid.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <regex>

#include "zlab/error.hpp"

namespace zlab {

namespace {

std::vector<BracketShape> build_shapes(int n) {
  std::vector<BracketShape> out;
  if (n == 1) {
    out.push_back({1, 1, Term::var("a")});
    return out;
  }
  for (int k = 1; k < n; ++k) {
    const auto& lefts = bracketings(k);
    const auto& rights = bracketings(n - k);
    for (const auto& l : lefts)
      for (const auto& r : rights)
        out.push_back({n, static_cast<int>(out.size()) + 1, Term::arrow(l.tree, r.tree)});
  }
  return out;
}

void rgs_rec(int n, int m, std::vector<int>& cur, int used, std::vector<Word>& out) {
  const int pos = static_cast<int>(cur.size());
  if (pos == n) {
    if (used == m) out.push_back({n, m, cur, '?'});
    return;
  }
  // Not enough positions left to introduce the remaining symbols.
  if (m - used > n - pos) return;
  for (int v = 0; v <= std::min(used, m - 1); ++v) {
    cur.push_back(v);
    rgs_rec(n, m, cur, std::max(used, v + 1), out);
    cur.pop_back();
  }
}

void fill_leaves(const Term& t, std::span<const std::string> leaves, std::size_t& next,
                 Term& out) {
  if (t.is_arrow()) {
    Term l = Term::zero(), r = Term::zero();
    fill_leaves(t.left(), leaves, next, l);
    fill_leaves(t.right(), leaves, next, r);
    out = Term::arrow(std::move(l), std::move(r));
    return;
  }
  out = Term::var(leaves[next++]);
}

Term shape_of(const Term& t) {
  if (t.is_arrow()) return Term::arrow(shape_of(t.left()), shape_of(t.right()));
  return Term::var("a");
}

int shape_index(const Term& t) {
  const Term shape = shape_of(t);
  for (const auto& s : bracketings(static_cast<int>(t.length())))
    if (s.tree == shape) return s.index;
  throw NameError("no bracketing index for term " + render_term(t));
}

const std::array<std::pair<std::string_view, std::string_view>, 3> kAliases = {{
    {"LALT", "32A12"},
    {"FLEX", "32B12"},
    {"RALT", "32C12"},
}};

}  // namespace

const std::vector<BracketShape>& bracketings(int n) {
  if (n < 1 || n > kMaxBracketArity)
    throw RangeError("bracketing arity " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxBracketArity));
  static std::array<std::vector<BracketShape>, kMaxBracketArity + 1> cache;
  static std::array<std::once_flag, kMaxBracketArity + 1> once;
  std::call_once(once[n], [n] { cache[n] = build_shapes(n); });
  return cache[n];
}

std::vector<Word> words(int n, int m) {
  if (n < 1 || n > kMaxBracketArity)
    throw RangeError("word length " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxBracketArity));
  if (m < 1 || m > n)
    throw RangeError("variable count " + std::to_string(m) + " outside 1.." + std::to_string(n));
  std::vector<Word> out;
  std::vector<int> cur;
  rgs_rec(n, m, cur, 0, out);
  for (std::size_t i = 0; i < out.size() && i < 26; ++i)
    out[i].letter_name = static_cast<char>('A' + i);
  return out;
}

std::vector<std::string> word_variables(int m) {
  // The four-variable word is written <t, x, y, z>.
  if (m == 4) return {"t", "x", "y", "z"};
  static const std::array<std::string_view, 7> names = {"x", "y", "z", "t", "u", "v", "w"};
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i)
    out.emplace_back(i < static_cast<int>(names.size()) ? std::string(names[i])
                                                       : "x" + std::to_string(i));
  return out;
}

Term instantiate(const BracketShape& shape, std::span<const std::string> leaves) {
  if (leaves.size() != static_cast<std::size_t>(shape.arity))
    throw RangeError("shape of arity " + std::to_string(shape.arity) + " given " +
                     std::to_string(leaves.size()) + " leaves");
  std::size_t next = 0;
  Term out = Term::zero();
  fill_leaves(shape.tree, leaves, next, out);
  return out;
}

std::string resolve_alias(std::string_view name) {
  for (const auto& [alias, canonical] : kAliases)
    if (name == alias) return std::string(canonical);
  static const std::regex bol_moufang("[A-F][1-5][1-5]");
  if (std::regex_match(name.begin(), name.end(), bol_moufang)) return "43" + std::string(name);
  return std::string(name);
}

std::optional<std::string> alias_of(std::string_view canonical) {
  for (const auto& [alias, name] : kAliases)
    if (canonical == name) return std::string(alias);
  return std::nullopt;
}

Identity identity_from_name(std::string_view raw) {
  const std::string name = resolve_alias(raw);
  static const std::regex pattern("([1-9])([1-9])([A-Z])([1-9])([1-9])");
  std::smatch m;
  if (!std::regex_match(name, m, pattern))
    throw NameError("malformed identity name '" + std::string(raw) + "'");
  const int n = std::stoi(m[1]);
  const int vars = std::stoi(m[2]);
  const int letter = m[3].str()[0] - 'A';
  const int p = std::stoi(m[4]);
  const int q = std::stoi(m[5]);
  if (p >= q)
    throw NameError("identity name '" + name + "' must have bracketing numbers p < q");
  if (n > kMaxBracketArity || vars > n)
    throw NameError("identity name '" + name + "' has no words of that length/variable count");
  const auto ws = words(n, vars);
  if (letter >= static_cast<int>(ws.size()))
    throw NameError("word letter " + m[3].str() + " out of range for " + m[1].str() +
                    m[2].str() + " (only " + std::to_string(ws.size()) + " words)");
  const auto& shapes = bracketings(n);
  if (q > static_cast<int>(shapes.size()))
    throw NameError("bracketing number " + std::to_string(q) + " out of range for length " +
                    std::to_string(n));
  const auto vnames = word_variables(vars);
  std::vector<std::string> leaves;
  for (int v : ws[letter].letters) leaves.push_back(vnames[v]);

  Identity id = make_identity(name, instantiate(shapes[p - 1], leaves),
                              instantiate(shapes[q - 1], leaves));
  id.alias = alias_of(name);
  id.word_letter = ws[letter].letter_name;
  id.brackets = BracketPair{p, q};
  return id;
}

std::string name_of(const Identity& id) {
  if (!id.weak_associative)
    throw NameError("'" + id.name + "' is not a weak associative identity");
  const auto vars = variables_of(id.lhs);
  const int n = static_cast<int>(vars.occurrences.size());
  const int m = static_cast<int>(vars.distinct.size());
  if (n > kMaxBracketArity) throw NameError("identity too long to name");
  std::vector<int> rgs;
  for (const auto& v : vars.occurrences)
    rgs.push_back(static_cast<int>(
        std::find(vars.distinct.begin(), vars.distinct.end(), v) - vars.distinct.begin()));
  const auto ws = words(n, m);
  const auto w = std::find_if(ws.begin(), ws.end(), [&](const Word& x) { return x.letters == rgs; });
  const int pos = static_cast<int>(w - ws.begin());
  int p = shape_index(id.lhs);
  int q = shape_index(id.rhs);
  if (p == q) throw NameError("both sides of '" + id.name + "' use the same bracketing");
  if (p > q) std::swap(p, q);
  if (pos >= 26 || q > 9) throw NameError("identity has no single-character name parts");
  std::string out;
  out += static_cast<char>('0' + n);
  out += static_cast<char>('0' + m);
  out += static_cast<char>('A' + pos);
  out += static_cast<char>('0' + p);
  out += static_cast<char>('0' + q);
  return out;
}

std::vector<Identity> enumerate_waids(int max_len) {
  if (max_len < 3 || max_len > 4)
    throw RangeError("max_len " + std::to_string(max_len) + " outside 3..4");
  std::vector<Identity> out;
  for (int n = 3; n <= max_len; ++n) {
    const auto& shapes = bracketings(n);
    const int count = static_cast<int>(shapes.size());
    for (int m = 1; m <= n; ++m)
      for (const auto& w : words(n, m))
        for (int p = 1; p <= count; ++p)
          for (int q = p + 1; q <= count; ++q) {
            std::string name;
            name += static_cast<char>('0' + n);
            name += static_cast<char>('0' + m);
            name += w.letter_name;
            name += static_cast<char>('0' + p);
            name += static_cast<char>('0' + q);
            out.push_back(identity_from_name(name));
          }
  }
  return out;
}

}  // namespace zlab
