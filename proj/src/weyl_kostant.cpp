#include "eiscomb/weyl_kostant.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eiscomb {

Perm Perm::identity(int N) {
  Perm p;
  p.img.resize(N);
  std::iota(p.img.begin(), p.img.end(), 1);
  return p;
}

Perm Perm::inverse() const {
  Perm q;
  q.img.resize(img.size());
  for (int i = 1; i <= size(); ++i) q.img[img[i - 1] - 1] = i;
  return q;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw std::invalid_argument("permutation sizes differ");
  Perm r;
  r.img.resize(q.img.size());
  for (int i = 1; i <= q.size(); ++i) r.img[i - 1] = p(q(i));
  return r;
}

bool is_valid(const Perm& p) {
  std::vector<bool> seen(p.img.size() + 1, false);
  for (int x : p.img) {
    if (x < 1 || x > p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

int length(const Perm& p) {
  int inv = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (p.img[i] > p.img[j]) ++inv;
  return inv;
}

bool is_valid(const Kappa& k) {
  if (k.n < 0 || k.np < 0 || static_cast<int>(k.k.size()) != k.n) return false;
  for (int i = 0; i < k.n; ++i) {
    if (k.k[i] < 1 || k.k[i] > k.N()) return false;
    if (i > 0 && k.k[i] <= k.k[i - 1]) return false;
  }
  return true;
}

std::string to_string(const Kappa& k) {
  std::string s = "(";
  for (int i = 0; i < k.n; ++i) s += (i ? "," : "") + std::to_string(k.k[i]);
  return s + ")";
}

std::vector<int> kappa_complement(const Kappa& k) {
  std::vector<int> c;
  std::size_t p = 0;
  for (int x = 1; x <= k.N(); ++x) {
    if (p < k.k.size() && k.k[p] == x) ++p;
    else c.push_back(x);
  }
  return c;
}

Perm kappa_to_perm(const Kappa& k) {
  if (!is_valid(k)) throw std::invalid_argument("invalid kappa " + to_string(k));
  Perm winv;
  winv.img = k.k;
  auto c = kappa_complement(k);
  winv.img.insert(winv.img.end(), c.begin(), c.end());
  return winv.inverse();
}

Kappa perm_to_kappa(const Perm& p, int n) {
  Perm winv = p.inverse();
  const int N = p.size();
  for (int i = 1; i < N; ++i)
    if (i != n && winv(i) > winv(i + 1)) throw std::invalid_argument("permutation is not a Kostant representative");
  return Kappa{n, N - n, std::vector<int>(winv.img.begin(), winv.img.begin() + n)};
}

int kappa_length(const Kappa& k) {
  int l = 0;
  for (int i = 0; i < k.n; ++i) l += k.k[i] - (i + 1);
  return l;
}

Kappa kappa_dual(const Kappa& k) {
  Kappa v{k.n, k.np, std::vector<int>(k.n)};
  for (int j = 1; j <= k.n; ++j) v.k[j - 1] = k.N() + 1 - k.k[k.n - j];
  return v;
}

std::vector<Kappa> all_kappas(int n, int np) {
  std::vector<Kappa> out;
  const int N = n + np;
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(Kappa{n, np, cur});
    int i = n - 1;
    while (i >= 0 && cur[i] == N - (n - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Perm longest_element(int N) {
  Perm p;
  for (int j = 1; j <= N; ++j) p.img.push_back(N + 1 - j);
  return p;
}

Perm levi_longest_element(int n, int np) {
  Perm p;
  for (int i = 1; i <= n; ++i) p.img.push_back(n + 1 - i);
  for (int i = n + 1; i <= n + np; ++i) p.img.push_back(2 * n + np + 1 - i);
  return p;
}

Perm block_swap(int n, int np) {
  Perm p;
  for (int i = 1; i <= n; ++i) p.img.push_back(i + np);
  for (int j = 1; j <= np; ++j) p.img.push_back(j);
  return p;
}

Tuple dot_action_inverse(const Kappa& k, const Tuple& t) {
  const Perm w = kappa_to_perm(k);
  if (static_cast<int>(t.size()) != w.size()) throw std::invalid_argument("tuple length differs from N");
  Tuple out(t.size());
  for (int i = 1; i <= w.size(); ++i) out[i - 1] = t[w(i) - 1] + i - w(i);
  return out;
}

Tuple dot_action(const Perm& w, const Tuple& t) {
  if (static_cast<int>(t.size()) != w.size()) throw std::invalid_argument("tuple length differs from N");
  const Perm winv = w.inverse();
  Tuple out(t.size());
  for (int i = 1; i <= w.size(); ++i) out[i - 1] = t[winv(i) - 1] + i - winv(i);
  return out;
}

namespace {

// b, bp are 1-based in the formulas below.
struct Terms {
  const Tuple& b;
  const Tuple& bp;
  std::int64_t B(int i) const { return b[i - 1]; }
  std::int64_t Bp(int j) const { return bp[j - 1]; }
};

void check_shapes(const Kappa& k, const Tuple& b, const Tuple& bp) {
  if (!is_valid(k) || static_cast<int>(b.size()) != k.n || static_cast<int>(bp.size()) != k.np)
    throw std::invalid_argument("kappa and weight shapes disagree");
}

}  // namespace

std::vector<Inequality> dominance_inequalities(const Kappa& kap, const Tuple& b, const Tuple& bp) {
  check_shapes(kap, b, bp);
  const Terms T{b, bp};
  const int n = kap.n, N = kap.N();
  auto k = [&](int i) { return kap.k[i - 1]; };
  std::vector<Inequality> out;
  if (n == 0) return out;
  if (k(1) >= 2) out.push_back({"(0)", T.Bp(k(1) - 1) - T.B(1) >= n + k(1) - 1});
  for (int l = 1; l <= n - 1; ++l) {
    if (k(l + 1) < k(l) + 2) continue;
    const std::string tag = "(" + std::to_string(l) + ")";
    out.push_back({tag + "(i)", T.B(l) - T.Bp(k(l) + 1 - l) >= -n - k(l) + 2 * l});
    out.push_back({tag + "(ii)", T.Bp(k(l + 1) - l - 1) - T.B(l + 1) >= n + k(l + 1) - 2 * l - 1});
  }
  if (k(n) <= N - 1) out.push_back({"(n)", T.B(n) - T.Bp(k(n) + 1 - n) >= n - k(n)});
  return out;
}

std::vector<Inequality> dominance_inequalities_vee(const Kappa& kap, const Tuple& b, const Tuple& bp, std::int64_t pw,
                                                   std::int64_t pwp) {
  check_shapes(kap, b, bp);
  const Terms T{b, bp};
  const int n = kap.n, N = kap.N();
  const std::int64_t S = N + (pw - pwp);
  auto k = [&](int i) { return kap.k[i - 1]; };
  std::vector<Inequality> out;
  if (n == 0) return out;
  // (0v) <-> k^v_1 >= 2 <-> k_n <= N-1
  if (k(n) <= N - 1) out.push_back({"(0v)", T.B(n) - T.Bp(k(n) + 1 - n) >= n - k(n) + S});
  for (int l = 1; l <= n - 1; ++l) {
    const int m = n - l;
    if (k(m + 1) < k(m) + 2) continue;
    const std::string tag = "(" + std::to_string(l) + "v)";
    out.push_back({tag + "(i)", T.Bp(k(m + 1) - m - 1) - T.B(m + 1) >= n + k(m + 1) - 2 * m - 1 - S});
    out.push_back({tag + "(ii)", T.B(m) - T.Bp(k(m) + 1 - m) >= -n - k(m) + 2 * m + S});
  }
  // (nv) <-> k^v_n <= N-1 <-> k_1 >= 2
  if (k(1) >= 2) out.push_back({"(nv)", T.Bp(k(1) - 1) - T.B(1) >= n + k(1) - 1 - S});
  return out;
}

bool all_hold(const std::vector<Inequality>& v) {
  return std::all_of(v.begin(), v.end(), [](const Inequality& q) { return q.holds; });
}

std::vector<int> lengths(const KostantRep& w) {
  std::vector<int> l;
  for (const auto& k : w.comp) l.push_back(kappa_length(k));
  return l;
}

bool is_balanced(const KostantRep& w, const IndexMap& c) {
  const auto l = lengths(w);
  if (c.size() != l.size()) return false;
  for (std::size_t t = 0; t < l.size(); ++t)
    if (l[t] + l[c[t]] != w.n * w.np) return false;
  return true;
}

bool is_balanced(const KostantRep& w, const FieldModel& m) {
  return std::all_of(m.conjugations.begin(), m.conjugations.end(), [&](const IndexMap& c) { return is_balanced(w, c); });
}

Kappa associate(const Kappa& k) {
  Perm w = block_swap(k.n, k.np) * kappa_to_perm(k);
  return perm_to_kappa(w, k.np);
}

KostantRep associate(const KostantRep& w) {
  KostantRep out{w.np, w.n, {}};
  for (const auto& k : w.comp) out.comp.push_back(associate(k));
  return out;
}

Kappa dual_rep(const Kappa& k) {
  Perm w = levi_longest_element(k.n, k.np) * kappa_to_perm(k) * longest_element(k.N());
  return perm_to_kappa(w, k.n);
}

KostantRep dual_rep(const KostantRep& w) {
  KostantRep out{w.n, w.np, {}};
  for (const auto& k : w.comp) out.comp.push_back(dual_rep(k));
  return out;
}

DegreeTable degree_table(int N, int n, int np, int r) {
  if (N != n + np || n < 0 || np < 0 || N < 1 || r < 1) throw std::invalid_argument("degree_table needs N = n + n' >= 1 and r >= 1");
  auto b = [&](std::int64_t k) { return r * k * (k - 1) / 2; };
  auto t = [&](std::int64_t k) { return r * k * (k + 1) / 2 - 1; };
  DegreeTable d{};
  d.N = N;
  d.n = n;
  d.np = np;
  d.r = r;
  d.bC = static_cast<std::int64_t>(N) * (N - 1) / 2;
  d.tC = static_cast<std::int64_t>(N) * N - 1 - d.bC;
  d.bF = r * d.bC;
  d.tF = static_cast<std::int64_t>(r) * N * N - 1 - d.bF;
  d.bn = b(n);
  d.bnp = b(np);
  d.tn = t(n);
  d.tnp = t(np);
  d.half_dim_UP = static_cast<std::int64_t>(r) * n * np;
  d.identity_bottom = d.bn + d.bnp + d.half_dim_UP == d.bF;
  d.identity_top = d.tn + d.tnp + d.half_dim_UP == d.tF - 1;
  return d;
}

}  // namespace eiscomb
