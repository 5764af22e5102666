#include "eiscomb/sweep.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

namespace eiscomb {

namespace {

std::vector<Tuple> dominant_tuples(int n, int lo, int hi) {
  std::vector<Tuple> out;
  Tuple cur(n);
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t cap) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t x = cap; x >= lo; --x) {
      cur[i] = x;
      rec(i + 1, x);
    }
  };
  rec(0, hi);
  return out;
}

bool in_box(const Weight& w, int lo, int hi) {
  for (const auto& b : w.comp)
    for (auto x : b)
      if (x < lo || x > hi) return false;
  return true;
}

struct Key {
  int n, np;
  std::size_t i, j;
  auto operator<=>(const Key&) const = default;
};

}  // namespace

std::string describe(const Weight& w) {
  std::string s = "[";
  for (std::size_t e = 0; e < w.comp.size(); ++e) {
    s += e ? " | " : "";
    for (std::size_t i = 0; i < w.comp[e].size(); ++i) s += (i ? "," : "") + std::to_string(w.comp[e][i]);
  }
  return s + "]";
}

std::vector<Weight> strongly_pure_weights(const FieldModel& m, int n, int lo, int hi) {
  const auto P = places(m);
  const auto tuples = dominant_tuples(n, lo, hi);
  std::vector<Weight> out;
  std::vector<Tuple> at(P.size());
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == P.size()) {
      for (std::int64_t pw = 2 * lo; pw <= 2 * hi; ++pw) {
        Weight w = pure_from_distinguished(m, at, pw);
        if (in_box(w, lo, hi) && is_strongly_pure(w, m)) out.push_back(std::move(w));
      }
      return;
    }
    for (const auto& t : tuples) {
      at[v] = t;
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

LemmaOutcome check_lemma(const Weight& mu, const Weight& mup, const FieldModel& m, double budget, bool mutant) {
  const auto wd = widths(mu, mup, m);
  LemmaOutcome o;
  o.c1 = comb_condition_1(wd);
  if (mutant) {
    const std::int64_t N = wd.n + wd.np, a2 = wd.a.twice();
    o.c2 = -N + 2 - wd.ell <= a2 && a2 < -N - 2 + wd.ell;
  } else {
    o.c2 = comb_condition_2(wd);
  }
  const auto sols = brute_force_balanced(mu, mup, m, budget);
  o.c3 = !sols.empty();
  const auto cons = find_balanced_kostant(mu, mup, m);
  if (o.c3)
    o.constructive_ok = cons && std::find(sols.begin(), sols.end(), *cons) != sols.end();
  else
    o.constructive_ok = !cons;
  o.empty_critical = critical_set(wd).empty;
  return o;
}

SweepResult run_sweep(const FieldModel& m, const SweepOptions& opt) {
  std::vector<std::vector<Weight>> W(std::max(opt.n_max, opt.sampled_rank) + 1);
  for (int n = 1; n < static_cast<int>(W.size()); ++n) W[n] = strongly_pure_weights(m, n, opt.lo, opt.hi);

  std::vector<Key> keys;
  for (int n = 1; n <= opt.n_max; ++n)
    for (int np = 1; np <= opt.n_max; ++np)
      for (std::size_t i = 0; i < W[n].size(); ++i)
        for (std::size_t j = 0; j < W[np].size(); ++j) keys.push_back({n, np, i, j});
  if (opt.sampled_rank > opt.n_max && opt.samples > 0) {
    std::mt19937_64 rng(opt.seed);
    std::vector<std::pair<int, int>> ranks;
    for (int n = 1; n <= opt.sampled_rank; ++n)
      for (int np = 1; np <= opt.sampled_rank; ++np)
        if (std::max(n, np) == opt.sampled_rank && !W[n].empty() && !W[np].empty()) ranks.push_back({n, np});
    for (std::size_t s = 0; s < opt.samples && !ranks.empty(); ++s) {
      const auto [n, np] = ranks[s % ranks.size()];
      std::uniform_int_distribution<std::size_t> di(0, W[n].size() - 1), dj(0, W[np].size() - 1);
      keys.push_back({n, np, di(rng), dj(rng)});
    }
  }

  struct Partial {
    SweepResult r;
    std::vector<std::pair<Key, std::string>> bad;
    std::string error;
    bool budget = false;
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<Partial> parts(jobs);
  auto work = [&](int t) {
    Partial& p = parts[t];
    try {
      for (std::size_t x = t; x < keys.size(); x += jobs) {
        const Key& k = keys[x];
        const auto o = check_lemma(W[k.n][k.i], W[k.np][k.j], m, opt.budget, opt.mutant);
        ++p.r.instances;
        if (o.c1 && o.c2 && o.c3) ++p.r.satisfied;
        if (o.empty_critical) ++p.r.empty_critical;
        if (!o.agree()) {
          ++p.r.counterexamples;
          p.bad.push_back({k, "n=" + std::to_string(k.n) + " n'=" + std::to_string(k.np) + " mu=" + describe(W[k.n][k.i]) +
                                  " mu'=" + describe(W[k.np][k.j]) + " (1)=" + std::to_string(o.c1) + " (2)=" + std::to_string(o.c2) +
                                  " (3)=" + std::to_string(o.c3) + " constructive=" + std::to_string(o.constructive_ok)});
        }
      }
    } catch (const BudgetExceeded& e) {
      p.budget = true;
      p.error = e.what();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();

  SweepResult out;
  std::vector<std::pair<Key, std::string>> bad;
  for (auto& p : parts) {
    if (p.budget) throw BudgetExceeded(p.error);
    out.instances += p.r.instances;
    out.satisfied += p.r.satisfied;
    out.empty_critical += p.r.empty_critical;
    out.counterexamples += p.r.counterexamples;
    bad.insert(bad.end(), p.bad.begin(), p.bad.end());
  }
  std::sort(bad.begin(), bad.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < bad.size() && i < 10; ++i) out.examples.push_back(bad[i].second);
  return out;
}

void base_change_sweep(const FieldModel& m, int n_max, int lo, int hi, SweepResult& out) {
  if (!m.layer) return;
  for (int n = 1; n <= n_max; ++n)
    for (const auto& w : strongly_pure_weights(m, n, lo, hi)) {
      ++out.base_change_checked;
      if (!is_base_change(w, m)) {
        ++out.base_change_failures;
        if (out.examples.size() < 10) out.examples.push_back("not base change: n=" + std::to_string(n) + " " + describe(w));
      }
    }
}

}  // namespace eiscomb
