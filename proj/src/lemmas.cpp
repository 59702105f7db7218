#include "zlab/lemmas.hpp"

#include <algorithm>

namespace zlab {

namespace {

struct Spec {
  const char* name;
  LemmaClause::Kind kind;
  const char* hypothesis;
  std::vector<const char*> extra;
  std::vector<const char*> conclusion;
};

using K = LemmaClause::Kind;

// Five terms that coincide once 0 -> x ≈ x holds.
constexpr const char* kT1 = "((x -> y) -> z) -> t";
constexpr const char* kT2 = "z -> ((y -> x) -> t)";
constexpr const char* kT3 = "(y -> x) -> (z -> t)";
constexpr const char* kT4 = "((z -> y) -> x) -> t";
constexpr const char* kT5 = "(y -> z) -> (x -> t)";

std::vector<Spec> clause_specs() {
  std::vector<Spec> s = {
      {"mc-i10-is-sl", K::implies, "MC", {"x'' ≈ x'"}, {"x -> y ≈ y -> x", "x' ≈ x"}},
      {"involution-equivalents", K::equivalent, "I", {},
       {"0' -> x ≈ x", "x'' ≈ x", "(x -> x')' ≈ x", "x' -> x ≈ x"}},

      {"i20.quasi-commute-1", K::implies, "I20", {}, {"x' -> 0' ≈ 0 -> x"}},
      {"i20.quasi-commute-2", K::implies, "I20", {}, {"0 -> x' ≈ x -> 0'"}},

      {"i20.01", K::implies, "I20", {}, {"(x -> 0') -> y ≈ (x -> y') -> y"}},
      {"i20.02", K::implies, "I20", {}, {"((0 -> x) -> y) -> x ≈ y -> x"}},
      {"i20.03", K::implies, "I20", {}, {"(x -> (y -> x)')' ≈ (x -> y) -> x"}},
      {"i20.04", K::implies, "I20", {}, {"(y -> x) -> y ≈ (0 -> x) -> y"}},
      {"i20.05", K::implies, "I20", {}, {"(0 -> x) -> (x -> y) ≈ x -> (x -> y)"}},
      {"i20.06", K::implies, "I20", {}, {"(0 -> x) -> (0 -> y) ≈ x -> (0 -> y)"}},
      {"i20.07", K::implies, "I20", {}, {"x -> y ≈ x -> (x -> y)"}},
      {"i20.08", K::implies, "I20", {}, {"0 -> (0 -> x)' ≈ 0 -> x'"}},
      {"i20.09", K::implies, "I20", {}, {"0 -> (x -> y) ≈ x -> (0 -> y)"}},
      {"i20.10", K::implies, "I20", {}, {"0 -> (x -> y')' ≈ 0 -> (x' -> y)"}},
      {"i20.11", K::implies, "I20", {}, {"x -> (y -> x') ≈ y -> x'"}},
      {"i20.12", K::implies, "I20", {}, {"(x -> y) -> (y -> x) ≈ y -> x"}},
      {"i20.13", K::implies, "I20", {}, {"(x -> y) -> (y -> z) ≈ (0 -> x') -> (y -> z)"}},
      {"i20.14", K::implies, "I20", {}, {"(x -> y)' -> y ≈ x -> y"}},
      {"i20.15", K::implies, "I20", {}, {"(x -> y) -> ((0 -> y) -> z) ≈ (x -> y) -> z"}},
      {"i20.16", K::implies, "I20", {},
       {"(x -> y) -> ((z -> y) -> (u -> z)) ≈ (x -> y) -> (u -> z)"}},

      {"i20.zero-fixed-point", K::implies, "I20", {"0 ≈ 0'"}, {"0 -> x ≈ x"}},
      {"i20.prime-distributes", K::implies, "I20", {"0 -> x ≈ x"}, {"(x -> y)' ≈ x' -> y'"}},

      {"s.exchange", K::implies, "S", {}, {"x -> (y -> z) ≈ y -> (x -> z)"}},
      {"s.contraposition", K::implies, "S", {}, {"x' -> y ≈ y' -> x"}},

      {"s.zero-is-square.1", K::implies, "S", {"0 -> x ≈ x -> x"},
       {"0 -> (x -> x) ≈ x -> x"}},
      {"s.zero-is-square.2", K::implies, "S", {"0 -> x ≈ x -> x"}, {"0 -> x' ≈ 0 -> x"}},

      {"s.square-fixed.1", K::implies, "S", {"0 -> (x -> x) ≈ x -> x"},
       {"(x -> x) -> y' ≈ ((x -> x) -> y)'"}},
      {"s.square-fixed.2", K::implies, "S", {"0 -> (x -> x) ≈ x -> x"},
       {"(x -> x) -> (y -> z) ≈ ((x -> x) -> y) -> z"}},
      {"s.square-fixed.3", K::implies, "S", {"0 -> (x -> x) ≈ x -> x"},
       {"(x -> y) -> (x -> y) ≈ (x -> x) -> (y -> y)"}},

      {"s.idempotent-is-sl", K::implies, "S", {"x -> x ≈ x"}, {"x' ≈ x"}},
      {"s.left-unit.31A12", K::implies, "S", {"0 -> x ≈ x"},
       {"x -> (x -> x) ≈ (x -> x) -> x"}},
      {"s.left-unit.five-terms", K::implies, "S", {"0 -> x ≈ x"}, {}},
      {"s.left-unit.mixed", K::implies, "S", {"0 -> x ≈ x"},
       {"x -> ((x -> x) -> y) ≈ (x -> (x -> x)) -> y"}},

      {"s.01", K::implies, "S", {}, {"(x -> x) -> (x -> x) ≈ x -> (x -> (x -> x))"}},
      {"s.02", K::implies, "S", {}, {"((x -> x) -> x) -> x ≈ x -> (x -> (x -> x))"}},
      {"s.03", K::implies, "S", {}, {"(x -> y) -> (y -> z) ≈ ((y -> x) -> y) -> z"}},
      {"s.04", K::implies, "S", {}, {"y -> ((x -> y) -> z) ≈ ((y -> x) -> y) -> z"}},
      {"s.05", K::implies, "S", {}, {"(x -> x) -> (x -> y) ≈ x -> ((x -> x) -> y)"}},
      {"s.06", K::implies, "S", {}, {"x -> ((x -> x) -> y) ≈ ((x -> x) -> x) -> y"}},
      {"s.07", K::implies, "S", {}, {"x -> ((y -> x) -> x) ≈ ((x -> y) -> x) -> x"}},
      {"s.08", K::implies, "S", {}, {"x -> ((y -> x) -> y) ≈ ((x -> y) -> x) -> y"}},
  };
  return s;
}

std::vector<LemmaClause> build() {
  std::vector<LemmaClause> out;
  for (const auto& spec : clause_specs()) {
    LemmaClause c;
    c.name = spec.name;
    c.kind = spec.kind;
    c.hypothesis = spec.hypothesis;
    for (const char* e : spec.extra) c.extra_hypotheses.push_back(parse_identity(e));
    for (const char* e : spec.conclusion) c.conclusion.push_back(parse_identity(e));
    if (c.name == "s.left-unit.five-terms") {
      const std::vector<const char*> terms = {kT1, kT2, kT3, kT4, kT5};
      for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j)
          c.conclusion.push_back(make_identity(
              "t" + std::to_string(i + 1) + " ≈ t" + std::to_string(j + 1),
              parse_term(terms[i]), parse_term(terms[j])));
    }
    std::string hyp = c.hypothesis;
    for (const auto& e : c.extra_hypotheses) hyp += ", " + render_identity(e);
    std::string concl;
    for (const auto& e : c.conclusion) {
      if (!concl.empty()) concl += c.kind == K::equivalent ? " ⇔ " : "; ";
      concl += render_identity(e);
    }
    c.statement = hyp + " ⊢ " + concl;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

const std::vector<LemmaClause>& lemma_clauses() {
  static const std::vector<LemmaClause> clauses = build();
  return clauses;
}

LemmaReport lemma_suite(const FiniteZroupoid& alg) {
  LemmaReport report{alg.name(), {}};
  for (const auto& clause : lemma_clauses()) {
    ClauseResult r{clause.name, ClauseResult::Status::pass, {}};
    bool in_hypothesis = member_of(alg, variety(clause.hypothesis)).holds;
    for (const auto& e : clause.extra_hypotheses)
      in_hypothesis = in_hypothesis && satisfies(alg, e).holds;
    if (!in_hypothesis) {
      r.status = ClauseResult::Status::vacuous;
    } else if (clause.kind == LemmaClause::Kind::implies) {
      for (const auto& e : clause.conclusion) {
        auto rep = satisfies(alg, e);
        if (!rep.holds) {
          r.status = ClauseResult::Status::fail;
          r.detail = std::move(rep);
          break;
        }
      }
    } else {
      std::size_t held = 0;
      SatisfactionReport first_failure;
      for (const auto& e : clause.conclusion) {
        auto rep = satisfies(alg, e);
        if (rep.holds)
          ++held;
        else if (first_failure.holds)
          first_failure = std::move(rep);
      }
      if (held != 0 && held != clause.conclusion.size()) {
        r.status = ClauseResult::Status::fail;
        r.detail = std::move(first_failure);
      }
    }
    report.clauses.push_back(std::move(r));
  }
  return report;
}

bool LemmaReport::all_pass_or_vacuous() const {
  return count(ClauseResult::Status::fail) == 0;
}

std::size_t LemmaReport::count(ClauseResult::Status s) const {
  return static_cast<std::size_t>(std::count_if(
      clauses.begin(), clauses.end(), [s](const ClauseResult& c) { return c.status == s; }));
}

const char* to_string(ClauseResult::Status s) {
  switch (s) {
    case ClauseResult::Status::pass:
      return "pass";
    case ClauseResult::Status::fail:
      return "fail";
    case ClauseResult::Status::vacuous:
      return "vacuous";
  }
  return "?";
}

}  // namespace zlab
