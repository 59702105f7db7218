#pragma once

#include <string>
#include <vector>

#include "zlab/algebra.hpp"
#include "zlab/identity.hpp"

namespace zlab {

/// One known consequence of the axioms, stated as data.
///
/// `implies`: every algebra in `hypothesis` (plus the extra hypothesis
/// identities) satisfies all `conclusion` identities.
/// `equivalent`: inside `hypothesis`, the `conclusion` identities are either
/// all satisfied or all violated.
struct LemmaClause {
  enum class Kind { implies, equivalent };

  std::string name;
  /// Human-readable statement, e.g. "S, 0 -> x ≈ x ⊢ x -> (x -> x) ≈ (x -> x) -> x".
  std::string statement;
  Kind kind = Kind::implies;
  std::string hypothesis;
  std::vector<Identity> extra_hypotheses;
  std::vector<Identity> conclusion;
};

const std::vector<LemmaClause>& lemma_clauses();

struct ClauseResult {
  enum class Status { pass, fail, vacuous };

  std::string name;
  Status status = Status::pass;
  /// For failures: which conclusion identity broke and where.
  SatisfactionReport detail;
};

struct LemmaReport {
  std::string algebra;
  std::vector<ClauseResult> clauses;

  bool all_pass_or_vacuous() const;
  std::size_t count(ClauseResult::Status s) const;
};

LemmaReport lemma_suite(const FiniteZroupoid& alg);

const char* to_string(ClauseResult::Status s);

}  // namespace zlab
