#include "zlab/term.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "zlab/algebra.hpp"
#include "zlab/error.hpp"
#include "zlab/identity.hpp"

namespace zlab {

struct Term::Node {
  Kind kind;
  std::string name;
  Term left;
  Term right;
  std::size_t length;
  std::size_t depth;
};

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Variable, std::move(name), Term(nullptr), Term(nullptr), 1, 0}));
}

Term Term::zero() {
  static const Term z(std::make_shared<const Node>(
      Node{Kind::Zero, {}, Term(nullptr), Term(nullptr), 0, 0}));
  return z;
}

Term Term::arrow(Term left, Term right) {
  const std::size_t len = left.length() + right.length();
  const std::size_t dep = 1 + std::max(left.depth(), right.depth());
  return Term(std::make_shared<const Node>(
      Node{Kind::Arrow, {}, std::move(left), std::move(right), len, dep}));
}

Term Term::prime(Term t) { return arrow(std::move(t), zero()); }

Term Term::meet(Term s, Term t) { return prime(arrow(std::move(s), prime(std::move(t)))); }

Term::Kind Term::kind() const noexcept { return node_->kind; }
const std::string& Term::name() const noexcept { return node_->name; }
const Term& Term::left() const noexcept { return node_->left; }
const Term& Term::right() const noexcept { return node_->right; }
std::size_t Term::length() const noexcept { return node_->length; }
std::size_t Term::depth() const noexcept { return node_->depth; }

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.length() != b.length()) return false;
  switch (a.kind()) {
    case Term::Kind::Variable:
      return a.name() == b.name();
    case Term::Kind::Zero:
      return true;
    case Term::Kind::Arrow:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

namespace {

constexpr std::array<std::string_view, 7> kAlphabet = {"x", "y", "z", "t", "u", "v", "w"};

std::size_t alphabet_rank(std::string_view name) {
  const auto it = std::find(kAlphabet.begin(), kAlphabet.end(), name);
  return static_cast<std::size_t>(it - kAlphabet.begin());
}

void collect(const Term& t, VariableList& out) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      out.occurrences.push_back(t.name());
      if (std::find(out.distinct.begin(), out.distinct.end(), t.name()) == out.distinct.end())
        out.distinct.push_back(t.name());
      break;
    case Term::Kind::Zero:
      break;
    case Term::Kind::Arrow:
      collect(t.left(), out);
      collect(t.right(), out);
      break;
  }
}

// ---------------------------------------------------------------------------
// Parser

enum class Tok { Zero, Var, Prime, Arrow, Meet, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, start, {}};
    const char c = src_[pos_];
    if (c == '0') {
      ++pos_;
      return {Tok::Zero, start, "0"};
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      return {Tok::Var, start, std::string(src_.substr(start, pos_ - start))};
    }
    switch (c) {
      case '\'':
        ++pos_;
        return {Tok::Prime, start, "'"};
      case '^':
        ++pos_;
        return {Tok::Meet, start, "^"};
      case '(':
        ++pos_;
        return {Tok::LParen, start, "("};
      case ')':
        ++pos_;
        return {Tok::RParen, start, ")"};
      case '-':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
          pos_ += 2;
          return {Tok::Arrow, start, "->"};
        }
        break;
      default:
        break;
    }
    if (match("→")) return {Tok::Arrow, start, "→"};
    if (match("′")) return {Tok::Prime, start, "′"};
    if (match("∧")) return {Tok::Meet, start, "∧"};
    throw SyntaxError("unknown symbol '" + std::string(1, c) + "'", start);
  }

 private:
  bool match(std::string_view s) {
    if (src_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  Term parse_all() {
    Term t = binary();
    if (cur_.kind == Tok::RParen) throw SyntaxError("unbalanced ')'", cur_.pos);
    if (cur_.kind != Tok::End) throw SyntaxError("unexpected '" + cur_.text + "'", cur_.pos);
    return t;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  static bool is_binary(Tok k) { return k == Tok::Arrow || k == Tok::Meet; }

  Term binary() {
    Term lhs = postfix();
    if (!is_binary(cur_.kind)) return lhs;
    const Tok op = cur_.kind;
    advance();
    Term rhs = postfix();
    if (is_binary(cur_.kind))
      throw SyntaxError("ambiguous chain '" + cur_.text + "', add parentheses", cur_.pos);
    return op == Tok::Arrow ? Term::arrow(std::move(lhs), std::move(rhs))
                            : Term::meet(std::move(lhs), std::move(rhs));
  }

  Term postfix() {
    Term t = primary();
    while (cur_.kind == Tok::Prime) {
      t = Term::prime(std::move(t));
      advance();
    }
    return t;
  }

  Term primary() {
    switch (cur_.kind) {
      case Tok::Zero:
        advance();
        return Term::zero();
      case Tok::Var: {
        Term v = Term::var(cur_.text);
        advance();
        return v;
      }
      case Tok::LParen: {
        const std::size_t open = cur_.pos;
        advance();
        Term t = binary();
        if (cur_.kind != Tok::RParen) {
          if (cur_.kind == Tok::End) throw SyntaxError("unbalanced '('", open);
          throw SyntaxError("expected ')' but found '" + cur_.text + "'", cur_.pos);
        }
        advance();
        return t;
      }
      case Tok::End:
        throw SyntaxError("unexpected end of input", cur_.pos);
      case Tok::RParen:
        throw SyntaxError("unbalanced ')'", cur_.pos);
      default:
        throw SyntaxError("unexpected '" + cur_.text + "'", cur_.pos);
    }
  }

  Lexer lexer_;
  Token cur_{Tok::End, 0, {}};
};

// ---------------------------------------------------------------------------
// Printer

struct Symbols {
  std::string_view arrow, prime, meet;
};

constexpr Symbols kAscii{" -> ", "'", " ^ "};
constexpr Symbols kUnicode{" → ", "′", " ∧ "};

void render_into(const Term& t, bool top, RenderStyle style, const Symbols& sym,
                 std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      out += t.name();
      return;
    case Term::Kind::Zero:
      out += '0';
      return;
    case Term::Kind::Arrow:
      break;
  }
  if (style == RenderStyle::sugared && t.right().is_zero()) {
    const Term& body = t.left();
    // (s -> (u -> 0)) -> 0 is s ^ u
    if (body.is_arrow() && body.right().is_arrow() && body.right().right().is_zero()) {
      if (!top) out += '(';
      render_into(body.left(), false, style, sym, out);
      out += sym.meet;
      render_into(body.right().left(), false, style, sym, out);
      if (!top) out += ')';
      return;
    }
    render_into(body, false, style, sym, out);
    out += sym.prime;
    return;
  }
  if (!top) out += '(';
  render_into(t.left(), false, style, sym, out);
  out += sym.arrow;
  render_into(t.right(), false, style, sym, out);
  if (!top) out += ')';
}

Element eval_rec(const Term& t, const FiniteZroupoid& alg, const Environment& env) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      const auto it = env.find(t.name());
      if (it == env.end()) throw EvalError("unbound variable '" + t.name() + "'");
      if (it->second < 0 || static_cast<std::size_t>(it->second) >= alg.size())
        throw EvalError("value " + std::to_string(it->second) + " of '" + t.name() +
                        "' is outside an algebra of size " + std::to_string(alg.size()));
      return it->second;
    }
    case Term::Kind::Zero:
      return 0;
    case Term::Kind::Arrow:
      break;
  }
  const Element a = eval_rec(t.left(), alg, env);
  const Element b = eval_rec(t.right(), alg, env);
  return alg.at(a, b);
}

bool contains_zero(const Term& t) {
  if (t.is_zero()) return true;
  return t.is_arrow() && (contains_zero(t.left()) || contains_zero(t.right()));
}

void compile_into(const Term& t, std::span<const std::string> slots, Program& p,
                  std::size_t& height) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      const auto it = std::find(slots.begin(), slots.end(), t.name());
      if (it == slots.end()) throw EvalError("unbound variable '" + t.name() + "'");
      p.code.push_back({Program::Op::PushVar, static_cast<std::uint8_t>(it - slots.begin())});
      ++height;
      break;
    }
    case Term::Kind::Zero:
      p.code.push_back({Program::Op::PushZero, 0});
      ++height;
      break;
    case Term::Kind::Arrow:
      compile_into(t.left(), slots, p, height);
      compile_into(t.right(), slots, p, height);
      p.code.push_back({Program::Op::Apply, 0});
      --height;
      break;
  }
  p.max_stack = std::max(p.max_stack, height);
}

}  // namespace

bool variable_less(std::string_view a, std::string_view b) {
  const std::size_t ra = alphabet_rank(a);
  const std::size_t rb = alphabet_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

VariableList variables_of(const Term& t) {
  VariableList out;
  collect(t, out);
  return out;
}

Term parse_term(std::string_view text) { return Parser(text).parse_all(); }

std::string render_term(const Term& t, RenderStyle style, Notation notation) {
  std::string out;
  render_into(t, true, style, notation == Notation::ascii ? kAscii : kUnicode, out);
  return out;
}

Element eval_term(const Term& t, const FiniteZroupoid& alg, const Environment& env) {
  return eval_rec(t, alg, env);
}

Term substitute(const Term& t, std::string_view name, const Term& replacement) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return t.name() == name ? replacement : t;
    case Term::Kind::Zero:
      return t;
    case Term::Kind::Arrow:
      return Term::arrow(substitute(t.left(), name, replacement),
                         substitute(t.right(), name, replacement));
  }
  return t;
}

Program compile(const Term& t, std::span<const std::string> slots) {
  Program p;
  std::size_t height = 0;
  compile_into(t, slots, p, height);
  return p;
}

Element run(const Program& p, std::span<const Element> table, std::size_t size,
            std::span<const Element> env) {
  constexpr std::size_t kInline = 32;
  std::array<Element, kInline> inline_stack{};
  std::vector<Element> heap_stack;
  Element* stack = inline_stack.data();
  if (p.max_stack > kInline) {
    heap_stack.resize(p.max_stack);
    stack = heap_stack.data();
  }
  std::size_t top = 0;
  for (const auto& ins : p.code) {
    switch (ins.op) {
      case Program::Op::PushVar:
        stack[top++] = env[ins.slot];
        break;
      case Program::Op::PushZero:
        stack[top++] = 0;
        break;
      case Program::Op::Apply: {
        const Element b = stack[--top];
        const Element a = stack[top - 1];
        stack[top - 1] = table[static_cast<std::size_t>(a) * size + static_cast<std::size_t>(b)];
        break;
      }
    }
  }
  return stack[0];
}

// ---------------------------------------------------------------------------
// Identity helpers

Identity make_identity(std::string name, Term lhs, Term rhs) {
  Identity id{std::move(lhs), std::move(rhs), std::move(name), {}, 0, 0, {}, {}, false};
  const auto lv = variables_of(id.lhs);
  const auto rv = variables_of(id.rhs);
  id.length = static_cast<int>(lv.occurrences.size());
  auto all = lv.distinct;
  for (const auto& v : rv.distinct)
    if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  id.var_count = static_cast<int>(all.size());
  // Weak associative: constant-free, same occurrence sequence, only bracketing differs.
  id.weak_associative = !contains_zero(id.lhs) && !contains_zero(id.rhs) &&
                        !lv.occurrences.empty() && lv.occurrences == rv.occurrences &&
                        !(id.lhs == id.rhs);
  return id;
}

Identity parse_identity(std::string_view text, std::string name) {
  std::size_t split = text.find("≈");
  std::size_t width = std::string_view("≈").size();
  if (split == std::string_view::npos) {
    split = text.find('=');
    width = 1;
  }
  if (split == std::string_view::npos) throw SyntaxError("identity needs '≈' or '='", 0);
  Term lhs = parse_term(text.substr(0, split));
  Term rhs = [&] {
    try {
      return parse_term(text.substr(split + width));
    } catch (const SyntaxError& e) {
      throw SyntaxError("right-hand side malformed", split + width + e.position());
    }
  }();
  if (name.empty()) name = std::string(text);
  return make_identity(std::move(name), std::move(lhs), std::move(rhs));
}

std::string render_identity(const Identity& id, RenderStyle style, Notation notation) {
  return render_term(id.lhs, style, notation) + " ≈ " + render_term(id.rhs, style, notation);
}

}  // namespace zlab
