// One line per acceptance criterion: "PASS|FAIL <id> <summary> (<seconds>s)".
// Exit status is the number of failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "eiscomb/arch_gamma.hpp"
#include "eiscomb/critical_engine.hpp"
#include "eiscomb/models.hpp"
#include "eiscomb/signature_engine.hpp"
#include "eiscomb/sweep.hpp"
#include "support.hpp"

using namespace eiscomb;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      if (notes.size() < 8) notes.push_back(why);
    }
  }
};

int failures = 0;

void run(const char* id, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.summary = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) {
    o.pass = false;
    o.notes.push_back("time limit " + std::to_string(limit_s) + "s exceeded");
  }
  if (!o.pass) ++failures;
  std::printf("%s %-22s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, o.summary.c_str(), s);
  for (const auto& n : o.notes) std::printf("     %s\n", n.c_str());
  std::fflush(stdout);
}

Outcome gl2_integral() {
  Outcome o;
  double worst = 0, slowest = 0;
  for (int m = 1; m <= 6; ++m) {
    const auto t0 = std::chrono::steady_clock::now();
    const double v = gl2_intertwining_numeric(m, gl2_r_max_for(m, 1e-8));
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double rel = std::abs(v - gl2_exact(m)) / gl2_exact(m);
    worst = std::max(worst, rel);
    slowest = std::max(slowest, s);
    o.require(rel < 1e-6, "m=" + std::to_string(m) + " relative error " + std::to_string(rel));
    o.require(s < 1.0, "m=" + std::to_string(m) + " took " + std::to_string(s) + "s");
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "m=1..6 max rel err %.2e, slowest %.3fs", worst, slowest);
  o.summary = buf;
  return o;
}

Outcome gl2_ratio() {
  Outcome o;
  double worst = 0;
  for (int m = 1; m <= 6; ++m) {
    const auto r = successive_ratio({Half(m), Half(-m)}, Half(0));
    o.require(r == PiRational::two_pi_power(Rational(1, m), Half(1)), "m=" + std::to_string(m) + " ratio " + r.str());
    const double q = gl2_intertwining_numeric(m, gl2_r_max_for(m, 1e-8)) / r.to_double();
    const double target = static_cast<double>(m) / (2 * m - 1);
    worst = std::max(worst, std::abs(q - target));
    o.require(std::abs(q - target) < 1e-6, "m=" + std::to_string(m) + " quotient " + std::to_string(q));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "exact 2pi/m for m=1..6; |quotient - m/(2m-1)| <= %.2e", worst);
  o.summary = buf;
  return o;
}

Outcome comb_lemma() {
  Outcome o;
  SweepOptions opt;
  opt.lo = -5;
  opt.hi = 5;
  opt.n_max = 2;
  opt.sampled_rank = 3;
  opt.samples = 3000;
  opt.seed = 2024;
  opt.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const auto r = run_sweep(models::imaginary_quadratic(), opt);
  for (const auto& e : r.examples) o.require(false, e);
  o.require(r.counterexamples == 0, std::to_string(r.counterexamples) + " counterexamples");
  o.summary = std::to_string(r.instances) + " instances (" + std::to_string(r.satisfied) + " satisfy all), " +
              std::to_string(r.counterexamples) + " counterexamples";
  return o;
}

Outcome kostant_identities() {
  Outcome o;
  std::size_t reps = 0, pairs = 0;
  for (int N = 1; N <= 8; ++N)
    for (int n = 0; n <= N; ++n) {
      const int np = N - n;
      const auto all = all_kappas(n, np);
      for (const auto& k : all) {
        ++reps;
        const Perm w = kappa_to_perm(k);
        const Kappa v = kappa_dual(k);
        o.require(length(w) == kappa_length(k), "length " + to_string(k));
        o.require(kappa_length(k) + kappa_length(v) == n * np, "dual length " + to_string(k));
        o.require(kappa_to_perm(v) == levi_longest_element(n, np) * w * longest_element(N), "w_kv formula " + to_string(k));
        o.require(length(block_swap(n, np) * w) == n * np - kappa_length(k), "associate length " + to_string(k));
      }
      if (n == 0 || np == 0) continue;
      // balanced pairs on a conjugate pair of embeddings
      for (const auto& a : all)
        for (const auto& b : all) {
          if (kappa_length(a) + kappa_length(b) != n * np) continue;
          ++pairs;
          KostantRep w{n, np, {a, b}};
          const IndexMap c{1, 0};
          o.require(is_balanced(associate(w), c), "associate unbalanced " + to_string(a) + to_string(b));
          o.require(is_balanced(dual_rep(w), c), "dual unbalanced " + to_string(a) + to_string(b));
        }
    }
  o.summary = std::to_string(reps) + " representatives, " + std::to_string(pairs) + " balanced pairs, N<=8";
  return o;
}

std::vector<Tuple> dominant_box(int n, int lo, int hi) {
  std::vector<Tuple> out;
  Tuple cur(n);
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int x = cap; x >= lo; --x) {
      cur[i] = x;
      rec(i + 1, x);
    }
  };
  rec(0, hi);
  return out;
}

Outcome dominance_oracle() {
  Outcome o;
  std::size_t checks = 0;
  for (int N = 2; N <= 6; ++N)
    for (int n = 1; n < N; ++n) {
      const int np = N - n;
      const auto B = dominant_box(n, -4, 4), Bp = dominant_box(np, -4, 4);
      for (const auto& k : all_kappas(n, np)) {
        const Kappa kv = kappa_dual(k);
        for (const auto& b : B)
          for (const auto& bp : Bp) {
            Tuple t = b;
            t.insert(t.end(), bp.begin(), bp.end());
            ++checks;
            if (all_hold(dominance_inequalities(k, b, bp)) != is_dominant(dot_action_inverse(k, t)))
              o.require(false, "plain " + to_string(k));
            for (std::int64_t pw = b.front() + b.back() - 1; pw <= b.front() + b.back() + 1; ++pw)
              for (std::int64_t pwp = bp.front() + bp.back() - 1; pwp <= bp.front() + bp.back() + 1; ++pwp) {
                Tuple c(N);
                for (int j = 0; j < n; ++j) c[j] = pw - b[n - 1 - j];
                for (int j = 0; j < np; ++j) c[n + j] = pwp - bp[np - 1 - j];
                ++checks;
                if (all_hold(dominance_inequalities_vee(k, b, bp, pw, pwp)) != is_dominant(dot_action_inverse(kv, c)))
                  o.require(false, "vee " + to_string(k));
              }
          }
      }
    }
  o.summary = std::to_string(checks) + " (kappa, weight) checks, N<=6, entries in [-4,4]";
  return o;
}

Tuple shifted(Tuple t, std::int64_t s) {
  for (auto& x : t) x += s;
  return t;
}

Tuple cat(Tuple a, const Tuple& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Outcome weight_identities() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::size_t found = 0, tried = 0;
  while (found < 10000) {
    ++tried;
    const FieldModel m = tried % 3 ? models::imaginary_quadratic() : models::random_layered_cm(1 + tried % 2, 1 + tried % 3, rng);
    const int n = 1 + rng() % 3, np = 1 + rng() % 3;
    const auto mu = support::random_strongly_pure(m, n, -6, 6, rng);
    const auto mup = support::random_strongly_pure(m, np, -6, 6, rng);
    const auto w = find_balanced_kostant(mu, mup, m);
    if (!w) continue;
    ++found;
    const auto wp = associate(*w);
    const auto wv = dual_rep(*w);
    const auto wvp = associate(wv);
    for (std::size_t e = 0; e < m.degree(); ++e) {
      const Tuple lam = dot_action_inverse(w->comp[e], cat(mu.comp[e], mup.comp[e]));
      const Tuple lamv = dual(lam);
      const Tuple& b = mu.comp[e];
      const Tuple& bp = mup.comp[e];
      o.require(dot_action(kappa_to_perm(wp.comp[e]), lam) == cat(shifted(bp, -n), shifted(b, np)), "identity (1)");
      o.require(dot_action(kappa_to_perm(wv.comp[e]), lamv) == cat(shifted(dual(b), -np), shifted(dual(bp), n)), "identity (2)");
      o.require(dot_action(kappa_to_perm(wvp.comp[e]), lamv) == cat(dual(bp), dual(b)), "identity (3)");
    }
  }
  o.summary = std::to_string(found) + " instances passing the lemma (" + std::to_string(tried) + " drawn)";
  return o;
}

Outcome strong_purity() {
  Outcome o;
  const auto m = models::s3_model();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-5, 5);
  auto at = [&](const char* l) { return m.index_of(l); };
  int diag = 0;
  for (int t = 0; t < 20; ++t) {
    std::int64_t a = d(rng), b = d(rng), c = d(rng), pw = d(rng);
    if (t % 5 == 0) b = c = pw - a;
    Weight lam{1, std::vector<Tuple>(6)}, mu{1, std::vector<Tuple>(6)};
    lam.comp[at("e")] = {a};
    lam.comp[at("(12)")] = {b};
    lam.comp[at("(23)")] = {pw - a};
    lam.comp[at("(13)")] = {c};
    lam.comp[at("(123)")] = {pw - c};
    lam.comp[at("(132)")] = {pw - b};
    for (const char* l : {"e", "(123)", "(132)"}) mu.comp[at(l)] = {a};
    for (const char* l : {"(12)", "(23)", "(13)"}) mu.comp[at(l)] = {pw - a};
    const bool on_diag = pw - a == b && b == c;
    diag += on_diag;
    o.require(purity_weight(lam, m.c0()) == pw, "lambda not pure");
    o.require(is_strongly_pure(lam, m).has_value() == on_diag, "lambda strong purity");
    o.require(is_strongly_pure(mu, m) == pw, "mu strong purity");
  }
  SweepResult r;
  base_change_sweep(m, 2, -3, 3, r);
  o.require(r.base_change_failures == 0, std::to_string(r.base_change_failures) + " strongly pure weights not base change");
  o.summary = "20 parameter choices (" + std::to_string(diag) + " diagonal); base change on " + std::to_string(r.base_change_checked) +
              " strongly pure weights, " + std::to_string(r.base_change_failures) + " failures";
  return o;
}

Outcome critical_sets() {
  Outcome o;
  std::mt19937_64 rng(31);
  std::size_t probes = 0;
  for (int t = 0; t < 10000; ++t) {
    const FieldModel m = t % 2 ? models::imaginary_quadratic() : models::random_layered_cm(1 + t % 3, 1 + t % 2, rng);
    const int n = 1 + rng() % 3, np = 1 + rng() % 3;
    const auto wd = widths(support::random_strongly_pure(m, n, -6, 6, rng), support::random_strongly_pure(m, np, -6, 6, rng), m);
    const auto cs = critical_set(wd);
    for (int tw = -60; tw <= 60; ++tw) {
      const Half x = Half::from_twice(tw);
      if (!(x - half_of(n + np)).is_integer()) continue;
      ++probes;
      if (cs.contains(x) != is_critical_pointwise(wd, x)) o.require(false, "mismatch at m=" + x.str());
    }
  }
  // GL(1): {1-p, ..., -q}
  const auto iq = models::imaginary_quadratic();
  for (int p = -5; p <= 5; ++p)
    for (int q = -5; q < p; ++q) {
      const auto cs = critical_set(Weight{1, {{-q}, {-p}}}, Weight{1, {{0}, {0}}}, iq);
      o.require(!cs.empty && cs.lower == Half(1 - p) && cs.upper == Half(-q), "GL(1) p=" + std::to_string(p) + " q=" + std::to_string(q));
    }
  // TR with n, n' odd
  std::size_t tr = 0;
  for (int places = 1; places <= 3; ++places) {
    const auto m = models::tr_model(places, 2 + places % 2);
    for (int t = 0; t < 200; ++t) {
      const int n = 1 + 2 * (t % 2), np = 1 + 2 * ((t / 2) % 2);
      const std::int64_t pw = 2 * static_cast<int>(rng() % 7) - 6, pwp = 2 * static_cast<int>(rng() % 7) - 6;
      std::vector<Tuple> a, b;
      for (int j = 0; j < places; ++j) {
        a.push_back(support::random_self_dual(n, pw, 3, rng));
        b.push_back(support::random_self_dual(np, pwp, 3, rng));
      }
      const auto wd = widths(support::base_change_weight(m, a, pw), support::base_change_weight(m, b, pwp), m);
      ++tr;
      o.require(wd.ell == 0 && critical_set(wd).empty, "TR odd ranks gave l=" + std::to_string(wd.ell));
    }
  }
  // TR, n = n' = 1: every strongly pure pair in a box
  SweepOptions opt;
  opt.lo = -4;
  opt.hi = 4;
  opt.n_max = 1;
  const auto sw = run_sweep(models::tr_model(1, 2), opt);
  o.require(sw.instances > 0 && sw.empty_critical == sw.instances,
            "TR n=n'=1: " + std::to_string(sw.empty_critical) + " of " + std::to_string(sw.instances) + " empty");
  o.summary = "10000 pairs, " + std::to_string(probes) + " probes; GL(1) strings; " + std::to_string(tr) +
              " TR odd-rank pairs with l=0; TR n=n'=1 sweep " + std::to_string(sw.empty_critical) + "/" + std::to_string(sw.instances) + " empty";
  return o;
}

Outcome signatures() {
  Outcome o;
  std::mt19937_64 rng(99);
  std::size_t checked = 0, tr_checked = 0, tr_not_one = 0;
  auto check = [&](const KostantRep& w, const GaloisElement& g, const FieldModel& m, const std::string& where) {
    const auto r = product_identity(w, g, m);
    ++checked;
    o.require(r.formula_ok(), where + ": direct " + std::to_string(r.eps_direct) + " formula " + std::to_string(r.eps_formula));
    o.require(r.product_ok(), where + ": product identity");
    return r;
  };
  const auto s3 = models::s3_model();
  for (int n = 1; n <= 3; ++n)
    for (int np = 1; np <= 3; ++np) {
      for (const auto& w : support::balanced_fiber_constant(s3, n, np, rng, 40))
        for (const auto& g : models::s3_galois()) check(w, g, s3, "S3 " + g.name);
      for (int t = 0; t < 40; ++t) {
        const auto w = find_balanced_kostant(support::random_strongly_pure(s3, n, -5, 5, rng), support::random_strongly_pure(s3, np, -5, 5, rng), s3);
        if (!w) continue;
        for (const auto& g : models::s3_galois()) check(*w, g, s3, "S3 constructive " + g.name);
      }
    }
  for (int k = 1; k <= 3; ++k)
    for (int r1 = 1; r1 <= 3; ++r1) {
      const auto m = models::random_layered_cm(r1, k, rng);
      auto G = models::fiber_compatible_permutations(m, 300);
      for (int t = 0; t < 100; ++t) G.push_back(models::random_fiber_compatible(m, rng));
      for (int n = 1; n <= 3; ++n)
        for (int np = 1; np <= 2; ++np)
          for (const auto& w : support::balanced_fiber_constant(m, n, np, rng, 4))
            for (const auto& g : G) check(w, g, m, "layered k=" + std::to_string(k) + " r1=" + std::to_string(r1));
    }
  std::string tr_example;
  for (int places = 1; places <= 3; ++places)
    for (int k1 = 2; k1 <= 3; ++k1) {
      const auto m = models::tr_model(places, k1);
      const auto G = models::fiber_compatible_permutations(m, 400);
      for (int n = 1; n <= 3; ++n)
        for (int np = 1; np <= 3; ++np) {
          if ((n * np) % 2) continue;
          for (const auto& w : support::balanced_fiber_constant(m, n, np, rng, 3))
            for (const auto& g : G) {
              const auto r = check(w, g, m, "TR");
              ++tr_checked;
              if (!r.all_ones()) {
                ++tr_not_one;
                if (tr_example.empty()) {
                  tr_example = "TR all-ones fails, e.g. places=" + std::to_string(places) + " k1=" + std::to_string(k1) + " n=" + std::to_string(n) +
                               " n'=" + std::to_string(np) + " eps_w=" + std::to_string(r.eps_direct) + " eps_w'=" + std::to_string(r.eps_associate);
                }
              }
            }
        }
    }
  o.require(tr_not_one == 0, tr_example);
  o.require(tr_not_one == 0, std::to_string(tr_not_one) + " of " + std::to_string(tr_checked) +
                                 " TR (w, gamma) give -1; each equals the closed form, whose place term (n n' k1 odd) or fiber term (n n'/2 odd) is nonzero");
  o.summary = std::to_string(checked) + " (w, gamma) checks: direct = formula and product identity; TR all-ones on " +
              std::to_string(tr_checked - tr_not_one) + "/" + std::to_string(tr_checked);
  return o;
}

Outcome factorization() {
  Outcome o;
  const auto s = factorization_schedule(3, 2);
  const int expect[6][3] = {{3, 3, 1}, {4, 3, 2}, {2, 2, 1}, {3, 2, 2}, {1, 1, 1}, {2, 1, 2}};
  o.require(s.size() == 6, "schedule length");
  for (std::size_t i = 0; i < s.size() && i < 6; ++i)
    o.require(s[i].reflection == expect[i][0] && s[i].i == expect[i][1] && s[i].j == expect[i][2], "step " + std::to_string(i + 1));
  std::mt19937_64 rng(41);
  std::size_t done = 0;
  while (done < 1000) {
    const FieldModel m = done % 2 ? models::imaginary_quadratic() : models::random_layered_cm(1 + done % 2, 1 + done % 3, rng);
    const int n = 1 + rng() % 3, np = 1 + rng() % 3;
    const auto mu = support::random_strongly_pure(m, n, -7, 7, rng), mup = support::random_strongly_pure(m, np, -7, 7, rng);
    const auto wd = widths(mu, mup, m);
    const auto pts = critical_set(wd).points();
    if (pts.size() < 2) continue;
    const Half x = pts[rng() % (pts.size() - 1)];
    const auto a = rankin_selberg_ratio(wd, x);
    const auto b = schedule_ratio_product(mu, mup, m, x);
    o.require(a == b, "m=" + x.str() + " " + a.str() + " vs " + b.str());
    ++done;
  }
  o.summary = "(3,2) schedule matches 6 steps; 1000 random critical instances agree symbolically";
  return o;
}

}  // namespace

int main() {
  run("gl2-integral", 6.0, gl2_integral);
  run("gl2-ratio", 10.0, gl2_ratio);
  run("comb-lemma", 600.0, comb_lemma);
  run("kostant-identities", 30.0, kostant_identities);
  run("dominance-oracle", 300.0, dominance_oracle);
  run("weight-identities", 120.0, weight_identities);
  run("strong-purity", 120.0, strong_purity);
  run("critical-sets", 120.0, critical_sets);
  run("signatures", 60.0, signatures);
  run("factorization", 120.0, factorization);
  std::printf("%d criteria failed\n", failures);
  return failures;
}
