#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "eiscomb/critical_engine.hpp"
#include "eiscomb/field_model.hpp"
#include "eiscomb/models.hpp"
#include "eiscomb/weight_algebra.hpp"
#include "eiscomb/weyl_kostant.hpp"

namespace support {

using namespace eiscomb;

inline Tuple random_dominant(int n, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  Tuple t(n);
  for (auto& x : t) x = d(rng);
  std::sort(t.rbegin(), t.rend());
  return t;
}

// Dominant tuple with b_j + b_{n+1-j} = pw (pw must be even when n is odd).
inline Tuple random_self_dual(int n, std::int64_t pw, int spread, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, spread);
  std::vector<std::int64_t> off(n / 2);
  for (auto& x : off) x = d(rng);
  std::sort(off.rbegin(), off.rend());
  const std::int64_t hi = pw >= 0 ? (pw + 1) / 2 : -((-pw) / 2);  // ceil(pw/2)
  Tuple t(n, pw / 2);
  for (int j = 0; j < n / 2; ++j) {
    t[j] = hi + off[j];
    t[n - 1 - j] = pw - t[j];
  }
  return t;
}

// Weight constant on the fibers of the effective layer: fiber over a
// distinguished subfield label gets at[j], its conjugate fiber the pure partner.
inline Weight base_change_weight(const FieldModel& m, const std::vector<Tuple>& at, std::int64_t pw) {
  const auto L = effective_layer(m);
  const auto F = fibers(L, m.degree());
  const auto P = subfield_places(m);
  Weight w{static_cast<int>(at.front().size()), std::vector<Tuple>(m.degree())};
  for (std::size_t j = 0; j < P.size(); ++j) {
    Tuple c(at[j].size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = pw - at[j][c.size() - 1 - i];
    for (int e : F[P[j].distinguished]) w.comp[e] = at[j];
    for (int e : F[P[j].conjugate]) w.comp[e] = c;
  }
  return w;
}

// Strongly pure dominant weight on a CM-type model (or one without a layer).
inline Weight random_strongly_pure(const FieldModel& m, int n, int lo, int hi, std::mt19937_64& rng) {
  const auto P = subfield_places(m);
  std::uniform_int_distribution<int> dw(2 * lo, 2 * hi);
  const std::int64_t pw = dw(rng);
  std::vector<Tuple> at;
  for (std::size_t j = 0; j < P.size(); ++j) at.push_back(random_dominant(n, lo, hi, rng));
  return base_change_weight(m, at, pw);
}

// Fiber-constant balanced reps: kappa per subfield label with lengths summing
// to nn' over conjugate labels (TR: l = nn'/2 on every fiber).
inline std::vector<KostantRep> balanced_fiber_constant(const FieldModel& m, int n, int np, std::mt19937_64& rng, int count) {
  const auto L = effective_layer(m);
  const auto F = fibers(L, m.degree());
  const auto P = subfield_places(m);
  std::map<int, std::vector<Kappa>> by_len;
  for (const auto& k : all_kappas(n, np)) by_len[kappa_length(k)].push_back(k);
  auto pick = [&](int l) {
    const auto& v = by_len[l];
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  std::vector<KostantRep> out;
  for (int c = 0; c < count; ++c) {
    KostantRep w{n, np, std::vector<Kappa>(m.degree())};
    for (const auto& p : P) {
      int l = std::uniform_int_distribution<int>(0, n * np)(rng);
      if (p.conjugate == p.distinguished) {
        if ((n * np) % 2) return {};
        l = n * np / 2;
      }
      const Kappa a = pick(l);
      for (int e : F[p.distinguished]) w.comp[e] = a;
      if (p.conjugate != p.distinguished) {
        const Kappa b = pick(n * np - l);
        for (int e : F[p.conjugate]) w.comp[e] = b;
      }
    }
    if (is_balanced(w, m)) out.push_back(w);
  }
  return out;
}

}  // namespace support
