#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eiscomb/critical_engine.hpp"
#include "eiscomb/field_model.hpp"
#include "eiscomb/weight_algebra.hpp"

namespace eiscomb {

// Every dominant weight with entries in [lo, hi] that is strongly pure for
// all supplied conjugations, in a fixed order.
std::vector<Weight> strongly_pure_weights(const FieldModel& m, int n, int lo, int hi);

struct SweepOptions {
  int lo = -5;
  int hi = 5;
  int n_max = 2;         // exhaustive for 1 <= n, n' <= n_max
  int sampled_rank = 0;  // when > n_max, sample pairs with max(n, n') = sampled_rank
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  int jobs = 1;
  double budget = kDefaultBudget;
  bool mutant = false;   // fault injection: strict upper bound in condition (2)
};

struct LemmaOutcome {
  bool c1 = false;
  bool c2 = false;
  bool c3 = false;
  bool constructive_ok = true;  // constructive kappa lies in the brute-force set
  bool empty_critical = false;
  bool agree() const { return c1 == c2 && c2 == c3 && constructive_ok; }
};

LemmaOutcome check_lemma(const Weight& mu, const Weight& mup, const FieldModel& m, double budget, bool mutant = false);

struct SweepResult {
  std::size_t instances = 0;
  std::size_t satisfied = 0;        // all three conditions true
  std::size_t empty_critical = 0;
  std::size_t counterexamples = 0;
  std::vector<std::string> examples;  // first few, ordered by instance key
  std::size_t base_change_checked = 0;
  std::size_t base_change_failures = 0;
};

// Throws BudgetExceeded when any instance exceeds the enumeration budget.
SweepResult run_sweep(const FieldModel& m, const SweepOptions& opt);

// Strongly pure weights with n <= n_max in the box all come from the subfield.
void base_change_sweep(const FieldModel& m, int n_max, int lo, int hi, SweepResult& out);

std::string describe(const Weight& w);

}  // namespace eiscomb
