#include "eiscomb/critical_engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace eiscomb {

CuspidalParams cuspidal_params(const Weight& mu, const FieldModel& m) {
  auto pw = purity_weight(mu, m.c0());
  if (!pw) throw std::invalid_argument("weight is not pure for the distinguished conjugation");
  const int n = mu.n;
  CuspidalParams cp{n, *pw, {}};
  for (const auto& v : places(m)) {
    const auto& b = mu.comp[v.distinguished];
    const auto& c = mu.comp[v.conjugate];
    PlaceParams pp;
    for (int i = 1; i <= n; ++i) {
      const Half shift = half_of(n - 2 * i + 1);
      pp.alpha.push_back(Half(-b[n - i]) + shift);
      pp.beta.push_back(Half(-c[i - 1]) - shift);
    }
    cp.places.push_back(std::move(pp));
  }
  return cp;
}

PlaceWidth place_width_from_grid(std::vector<std::vector<std::int64_t>> grid) {
  PlaceWidth pw;
  pw.grid = std::move(grid);
  const int n = static_cast<int>(pw.grid.size());
  const int np = n ? static_cast<int>(pw.grid.front().size()) : 0;
  auto l = [&](int i, int j) { return pw.grid[i - 1][j - 1]; };
  pw.min_abs = std::numeric_limits<std::int64_t>::max();
  for (const auto& row : pw.grid)
    for (auto x : row) pw.min_abs = std::min(pw.min_abs, x < 0 ? -x : x);
  for (int j = 1; j <= np; ++j) {
    int r = 0;
    for (int i = 1; i <= n; ++i)
      if (l(i, j) >= 0) ++r;
    pw.r.push_back(r);
  }
  if (np == 0 || n == 0) return pw;
  // blocks of equal r: block q spans columns [start_q, end_q]
  std::vector<std::pair<int, int>> blocks;
  for (int j = 1; j <= np; ++j) {
    if (j == 1 || pw.r[j - 1] != pw.r[j - 2]) {
      if (j > 1) pw.t.push_back(j - 1);
      blocks.push_back({j, j});
      pw.r_block.push_back(pw.r[j - 1]);
    } else {
      blocks.back().second = j;
    }
  }
  for (std::size_t q = 0; q < blocks.size(); ++q) {
    const int rq = pw.r_block[q];
    if (rq >= 1) pw.L.push_back(l(rq, blocks[q].first));
    if (rq + 1 <= n) pw.L.push_back(-l(rq + 1, blocks[q].second));
  }
  const int p = static_cast<int>(blocks.size()) - 1;
  pw.delta = 2 * (p + 1) - (pw.r.front() == 0 ? 1 : 0) - (pw.r.back() == n ? 1 : 0);
  return pw;
}

WidthData widths(const Weight& mu, const Weight& mup, const FieldModel& m) {
  if (!is_dominant(mu) || !is_dominant(mup)) throw std::invalid_argument("weights must be dominant");
  auto pw = is_strongly_pure(mu, m);
  auto pwp = is_strongly_pure(mup, m);
  if (!pw) throw std::invalid_argument("mu is not strongly pure for the supplied conjugations");
  if (!pwp) throw std::invalid_argument("mu' is not strongly pure for the supplied conjugations");
  const auto cp = cuspidal_params(mu, m);
  const auto cpp = cuspidal_params(mup, m);
  WidthData wd;
  wd.n = mu.n;
  wd.np = mup.n;
  wd.pw = *pw;
  wd.pwp = *pwp;
  wd.a = half_of(*pw - *pwp);
  wd.ell = std::numeric_limits<std::int64_t>::max();
  for (std::size_t v = 0; v < cp.places.size(); ++v) {
    const auto& P = cp.places[v];
    const auto& Q = cpp.places[v];
    std::vector<std::vector<std::int64_t>> grid(wd.n, std::vector<std::int64_t>(wd.np));
    for (int i = 0; i < wd.n; ++i)
      for (int j = 0; j < wd.np; ++j)
        grid[i][j] = (P.alpha[i] - P.beta[i] - Q.alpha[j] + Q.beta[j]).as_integer();
    wd.places.push_back(place_width_from_grid(std::move(grid)));
    wd.ell = std::min(wd.ell, wd.places.back().min_abs);
  }
  return wd;
}

bool CriticalSet::contains(Half m) const { return !empty && lower <= m && m <= upper; }

std::vector<Half> CriticalSet::points() const {
  std::vector<Half> out;
  if (empty) return out;
  for (Half x = lower; x <= upper; x += Half(1)) out.push_back(x);
  return out;
}

CriticalSet critical_set(const WidthData& wd) {
  CriticalSet cs;
  cs.empty = wd.ell == 0;
  // 1 - l/2 + a <= m <= l/2 + a
  cs.lower = Half(1) - half_of(wd.ell) + wd.a;
  cs.upper = half_of(wd.ell) + wd.a;
  return cs;
}

CriticalSet critical_set(const Weight& mu, const Weight& mup, const FieldModel& m) {
  return critical_set(widths(mu, mup, m));
}

std::optional<GridIndex> critical_violation(const WidthData& wd, Half m) {
  for (std::size_t v = 0; v < wd.places.size(); ++v)
    for (int i = 0; i < wd.n; ++i)
      for (int j = 0; j < wd.np; ++j) {
        const auto l = wd.places[v].grid[i][j];
        const Half h = half_of(l < 0 ? -l : l);
        const bool left = m - wd.a + h >= Half(1);
        const bool right = Half(1) - m + wd.a + h >= Half(1);
        if (!left || !right) return GridIndex{static_cast<int>(v), i + 1, j + 1};
      }
  return std::nullopt;
}

bool is_critical_pointwise(const WidthData& wd, Half m) { return !critical_violation(wd, m).has_value(); }

bool comb_condition_2(const WidthData& wd) {
  // -N/2 + 1 - l/2 <= a <= -N/2 - 1 + l/2, doubled
  const std::int64_t N = wd.n + wd.np;
  const std::int64_t a2 = wd.a.twice();
  return -N + 2 - wd.ell <= a2 && a2 <= -N - 2 + wd.ell;
}

bool comb_condition_2(const Weight& mu, const Weight& mup, const FieldModel& m) {
  return comb_condition_2(widths(mu, mup, m));
}

bool comb_condition_1(const WidthData& wd) {
  const auto cs = critical_set(wd);
  const Half m0 = half_of(-(wd.n + wd.np));
  return cs.contains(m0) && cs.contains(m0 + Half(1));
}

Kappa kappa_from_columns(const std::vector<int>& r, int n, int np) {
  const int N = n + np;
  std::vector<bool> removed(N + 1, false);
  for (int j = 1; j <= np; ++j) removed[N - (r[j - 1] + j - 1)] = true;
  Kappa k{n, np, {}};
  for (int x = 1; x <= N; ++x)
    if (!removed[x]) k.k.push_back(x);
  if (!is_valid(k)) throw std::logic_error("column data do not give a Kostant representative");
  return k;
}

Weight dot_acted(const KostantRep& w, const Weight& mu, const Weight& mup) {
  const Weight t = concat(mu, mup);
  Weight out{t.n, {}};
  for (std::size_t e = 0; e < t.degree(); ++e) out.comp.push_back(dot_action_inverse(w.comp[e], t.comp[e]));
  return out;
}

std::optional<KostantRep> find_balanced_kostant(const Weight& mu, const Weight& mup, const FieldModel& m) {
  const auto wd = widths(mu, mup, m);
  const auto P = places(m);
  KostantRep w{wd.n, wd.np, std::vector<Kappa>(m.degree())};
  for (std::size_t v = 0; v < P.size(); ++v) {
    const Kappa k = kappa_from_columns(wd.places[v].r, wd.n, wd.np);
    w.comp[P[v].distinguished] = k;
    w.comp[P[v].conjugate] = kappa_dual(k);
  }
  if (!is_dominant(dot_acted(w, mu, mup)) || !is_balanced(w, m)) return std::nullopt;
  return w;
}

std::vector<KostantRep> brute_force_balanced(const Weight& mu, const Weight& mup, const FieldModel& m, double budget) {
  const int n = mu.n, np = mup.n;
  const auto all = all_kappas(n, np);
  const double size = std::pow(static_cast<double>(all.size()), static_cast<double>(m.degree()));
  if (size > budget)
    throw BudgetExceeded("enumeration of " + std::to_string(all.size()) + "^" + std::to_string(m.degree()) +
                         " representatives exceeds budget " + std::to_string(static_cast<long long>(budget)));
  const Weight t = concat(mu, mup);
  // dominance is componentwise, so filter each embedding first
  std::vector<std::vector<const Kappa*>> ok(m.degree());
  for (std::size_t e = 0; e < m.degree(); ++e)
    for (const auto& k : all)
      if (is_dominant(dot_action_inverse(k, t.comp[e]))) ok[e].push_back(&k);
  std::vector<KostantRep> out;
  KostantRep cur{n, np, std::vector<Kappa>(m.degree())};
  std::function<void(std::size_t)> rec = [&](std::size_t e) {
    if (e == m.degree()) {
      if (is_balanced(cur, m)) out.push_back(cur);
      return;
    }
    for (const Kappa* k : ok[e]) {
      cur.comp[e] = *k;
      rec(e + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace eiscomb
