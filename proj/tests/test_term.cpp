#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "zlab/algebra.hpp"
#include "zlab/error.hpp"
#include "zlab/identity.hpp"
#include "zlab/term.hpp"

using namespace zlab;

namespace {

Term x() { return Term::var("x"); }
Term y() { return Term::var("y"); }
Term z() { return Term::var("z"); }
Term zero() { return Term::zero(); }
Term arr(Term a, Term b) { return Term::arrow(std::move(a), std::move(b)); }

std::size_t syntax_error_position(std::string_view text) {
  try {
    parse_term(text);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  FAIL("no syntax error for: " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse: literals and sugar expand to arrows and zero") {
  CHECK(parse_term("0") == zero());
  CHECK(parse_term("x") == x());
  CHECK(parse_term("x'") == arr(x(), zero()));
  CHECK(parse_term("x''") == arr(arr(x(), zero()), zero()));
  CHECK(parse_term("x ^ y") == arr(arr(x(), arr(y(), zero())), zero()));
  CHECK(parse_term("x -> y") == arr(x(), y()));
  CHECK(parse_term("(x -> y)") == arr(x(), y()));
  CHECK(parse_term("x->(y->z)") == arr(x(), arr(y(), z())));
  CHECK(parse_term("  ( x -> y ) -> z ") == arr(arr(x(), y()), z()));
  CHECK(parse_term("(x -> y)'") == arr(arr(x(), y()), zero()));
}

TEST_CASE("parse: unicode symbols") {
  CHECK(parse_term("x → y") == parse_term("x -> y"));
  CHECK(parse_term("x′") == parse_term("x'"));
  CHECK(parse_term("x ∧ y′") == parse_term("x ^ y'"));
}

TEST_CASE("parse: factory sugar agrees with the parser") {
  CHECK(Term::prime(x()) == parse_term("x'"));
  CHECK(Term::meet(x(), y()) == parse_term("x ^ y"));
  CHECK(Term::meet(x(), y()) == parse_term("(x -> y')'"));
}

TEST_CASE("parse: errors carry positions") {
  CHECK_THROWS_AS(parse_term("x -> y -> z"), SyntaxError);
  CHECK_THROWS_AS(parse_term("x ^ y ^ z"), SyntaxError);
  CHECK_THROWS_AS(parse_term("x -> y ^ z"), SyntaxError);
  CHECK_THROWS_AS(parse_term("(x -> y"), SyntaxError);
  CHECK_THROWS_AS(parse_term("x -> y)"), SyntaxError);
  CHECK_THROWS_AS(parse_term(""), SyntaxError);
  CHECK_THROWS_AS(parse_term("x -> "), SyntaxError);
  CHECK_THROWS_AS(parse_term("x + y"), SyntaxError);
  CHECK_THROWS_AS(parse_term("X"), SyntaxError);
  CHECK(syntax_error_position("x + y") == 2);
  CHECK(syntax_error_position("x -> y)") == 6);
}

TEST_CASE("render: expanded and sugared") {
  const Term p = arr(x(), zero());
  CHECK(render_term(p, RenderStyle::sugared) == "x'");
  CHECK(render_term(p, RenderStyle::expanded) == "x -> 0");
  CHECK(render_term(Term::meet(x(), y())) == "x ^ y");
  CHECK(render_term(Term::meet(x(), y()), RenderStyle::expanded) == "(x -> (y -> 0)) -> 0");
  CHECK(render_term(parse_term("x -> ((y -> x) -> z)")) == "x -> ((y -> x) -> z)");
  CHECK(render_term(parse_term("(x -> y)'")) == "(x -> y)'");
  CHECK(render_term(parse_term("x -> y"), RenderStyle::sugared, Notation::unicode) == "x → y");
  CHECK(render_term(zero()) == "0");
  CHECK(render_term(parse_term("0'")) == "0'");
}

TEST_CASE("render: parse(render(t)) == t on random terms") {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 2000; ++i) {
    const Term t = oracle::random_term(rng, 6);
    for (auto style : {RenderStyle::expanded, RenderStyle::sugared})
      for (auto notation : {Notation::ascii, Notation::unicode}) {
        const std::string s = render_term(t, style, notation);
        INFO(s);
        REQUIRE(parse_term(s) == t);
      }
  }
}

TEST_CASE("variables_of") {
  const auto v = variables_of(parse_term("x -> ((y -> x) -> z)"));
  CHECK(v.distinct == std::vector<std::string>{"x", "y", "z"});
  CHECK(variables_of(zero()).distinct.empty());
  const auto w = variables_of(parse_term("(x -> x) -> y"));
  CHECK(w.distinct == std::vector<std::string>{"x", "y"});
  CHECK(w.occurrences == std::vector<std::string>{"x", "x", "y"});
}

TEST_CASE("variable alphabet order") {
  CHECK(variable_less("x", "y"));
  CHECK(variable_less("z", "t"));
  CHECK(variable_less("t", "u"));
  CHECK(variable_less("w", "a"));
  CHECK_FALSE(variable_less("y", "x"));
}

TEST_CASE("eval_term on catalog algebras") {
  const auto& a3 = catalog_algebra("A3");
  CHECK(eval_term(parse_term("0'"), a3, {}) == 2);
  CHECK(eval_term(parse_term("0''"), a3, {}) == 0);
  CHECK(eval_term(parse_term("x -> x"), catalog_algebra("2_b"), {{"x", 1}}) == 1);
  CHECK_THROWS_AS(eval_term(parse_term("x -> y"), a3, {{"x", 1}}), EvalError);
  CHECK_THROWS_AS(eval_term(x(), a3, {{"x", 3}}), EvalError);
}

TEST_CASE("eval respects substitution") {
  std::mt19937 rng(7);
  const auto& a4 = catalog_algebra("A4");
  for (int i = 0; i < 300; ++i) {
    const Term t = oracle::random_term(rng, 4);
    const Term s = oracle::random_term(rng, 3);
    Environment env{{"x", 1}, {"y", 2}, {"z", 3}, {"t", 0}};
    Environment shifted = env;
    shifted["x"] = eval_term(s, a4, env);
    CHECK(eval_term(substitute(t, "x", s), a4, env) == eval_term(t, a4, shifted));
  }
}

TEST_CASE("compiled programs agree with recursive evaluation") {
  std::mt19937 rng(99);
  const auto& a4 = catalog_algebra("A4");
  const std::vector<std::string> slots{"x", "y", "z", "t"};
  for (int i = 0; i < 300; ++i) {
    const Term t = oracle::random_term(rng, 6);
    const Program p = compile(t, slots);
    const std::vector<Element> env{3, 1, 2, 0};
    CHECK(run(p, a4.table(), 4, env) ==
          eval_term(t, a4, {{"x", 3}, {"y", 1}, {"z", 2}, {"t", 0}}));
  }
}

TEST_CASE("identities: parse and weak associative flag") {
  const auto id = parse_identity("x -> (y -> z) = (x -> y) -> z", "assoc");
  CHECK(id.weak_associative);
  CHECK(id.length == 3);
  CHECK(id.var_count == 3);
  CHECK(render_identity(id) == "x -> (y -> z) ≈ (x -> y) -> z");
  CHECK(parse_identity("x ^ y ≈ y ^ x").weak_associative == false);
  CHECK(parse_identity("x'' = x").weak_associative == false);
  CHECK_THROWS_AS(parse_identity("x -> y"), SyntaxError);
  CHECK_THROWS_AS(parse_identity("x = (y"), SyntaxError);
}

TEST_CASE("length and depth") {
  CHECK(x().depth() == 0);
  CHECK(zero().depth() == 0);
  CHECK(parse_term("x'").depth() == 1);
  CHECK(parse_term("x ^ y").depth() == 3);
  CHECK(parse_term("x -> ((y -> x) -> z)").length() == 4);
  CHECK(parse_term("0''").length() == 0);
}
