#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eiscomb/field_model.hpp"
#include "eiscomb/half.hpp"
#include "eiscomb/weight_algebra.hpp"
#include "eiscomb/weyl_kostant.hpp"

namespace eiscomb {

struct PlaceParams {
  std::vector<Half> alpha;
  std::vector<Half> beta;
};

struct CuspidalParams {
  int n = 0;
  std::int64_t purity = 0;
  std::vector<PlaceParams> places;  // ordered as places(model)
};

// Throws when mu is not pure for the distinguished conjugation.
CuspidalParams cuspidal_params(const Weight& mu, const FieldModel& m);

struct PlaceWidth {
  std::vector<std::vector<std::int64_t>> grid;  // grid[i-1][j-1] = l_{i,j}
  std::vector<int> r;        // r_1..r_{n'}
  std::vector<int> r_block;  // r^(1)..r^(p+1)
  std::vector<int> t;        // t_1..t_p
  std::vector<std::int64_t> L;  // the structured set, deletions applied
  int delta = 0;
  std::int64_t min_abs = 0;  // min |l_{i,j}| at this place
};

struct WidthData {
  int n = 0;
  int np = 0;
  std::int64_t pw = 0;
  std::int64_t pwp = 0;
  Half a;                 // abelian width
  std::int64_t ell = 0;   // cuspidal width
  std::vector<PlaceWidth> places;
};

// Requires both weights dominant and strongly pure; throws otherwise.
WidthData widths(const Weight& mu, const Weight& mup, const FieldModel& m);
// Structured data of one place from its grid.
PlaceWidth place_width_from_grid(std::vector<std::vector<std::int64_t>> grid);

struct CriticalSet {
  bool empty = true;
  Half lower;
  Half upper;

  bool contains(Half m) const;
  std::vector<Half> points() const;
};

CriticalSet critical_set(const WidthData& wd);
CriticalSet critical_set(const Weight& mu, const Weight& mup, const FieldModel& m);

struct GridIndex {
  int place;
  int i;
  int j;
};

// First (v,i,j) at which one of the two Gamma-finiteness inequalities fails at m.
std::optional<GridIndex> critical_violation(const WidthData& wd, Half m);
bool is_critical_pointwise(const WidthData& wd, Half m);

bool comb_condition_2(const WidthData& wd);
bool comb_condition_2(const Weight& mu, const Weight& mup, const FieldModel& m);
// {-N/2, 1-N/2} inside the critical set.
bool comb_condition_1(const WidthData& wd);

Kappa kappa_from_columns(const std::vector<int>& r, int n, int np);
std::optional<KostantRep> find_balanced_kostant(const Weight& mu, const Weight& mup, const FieldModel& m);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultBudget = 1e7;

// Every w in W^P, balanced for all supplied conjugations, with
// w^{-1}.(mu+mu') dominant. Throws BudgetExceeded when C(N,n)^d > budget.
std::vector<KostantRep> brute_force_balanced(const Weight& mu, const Weight& mup, const FieldModel& m,
                                             double budget = kDefaultBudget);

// w^{-1}.(mu+mu') per embedding.
Weight dot_acted(const KostantRep& w, const Weight& mu, const Weight& mup);

}  // namespace eiscomb
