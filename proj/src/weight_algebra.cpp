#include "eiscomb/weight_algebra.hpp"

#include <stdexcept>

namespace eiscomb {

Weight constant_weight(std::size_t degree, const Tuple& b) {
  return Weight{static_cast<int>(b.size()), std::vector<Tuple>(degree, b)};
}

std::vector<ACoords> b_to_a(const Weight& w) {
  std::vector<ACoords> out;
  for (const auto& b : w.comp) {
    ACoords c;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      sum += b[i];
      if (i + 1 < b.size()) c.a.push_back(b[i] - b[i + 1] + 1);
    }
    c.d = Rational(sum, w.n);
    out.push_back(std::move(c));
  }
  return out;
}

Weight a_to_b(const std::vector<ACoords>& a, int n) {
  Weight w{n, {}};
  for (const auto& c : a) {
    if (static_cast<int>(c.a.size()) != n - 1) throw std::invalid_argument("a-coordinates have wrong length");
    // b_i = b_n + sum_{k>=i} (a_k - 1); sum b = n*d fixes b_n
    Rational shift = 0;
    for (int k = 1; k <= n - 1; ++k) shift += Rational(k) * (c.a[k - 1] - 1);
    Rational bn = (Rational(n) * c.d - shift) / n;
    if (denominator(bn) != 1) throw std::invalid_argument("a-coordinates do not give an integral weight");
    Tuple b(n);
    b[n - 1] = static_cast<std::int64_t>(numerator(bn));
    for (int i = n - 2; i >= 0; --i) b[i] = b[i + 1] + c.a[i] - 1;
    w.comp.push_back(std::move(b));
  }
  return w;
}

bool is_dominant(const Tuple& b) {
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (b[i] < b[i + 1]) return false;
  return true;
}

bool is_dominant(const Weight& w) {
  for (const auto& b : w.comp)
    if (!is_dominant(b)) return false;
  return true;
}

std::optional<std::int64_t> purity_weight(const Weight& w, const IndexMap& c) {
  if (c.size() != w.degree() || w.comp.empty()) return std::nullopt;
  const int n = w.n;
  std::optional<std::int64_t> pw;
  for (std::size_t eta = 0; eta < w.degree(); ++eta) {
    const auto& b = w.comp[eta];
    const auto& bc = w.comp[c[eta]];
    for (int j = 0; j < n; ++j) {
      std::int64_t s = b[j] + bc[n - 1 - j];
      if (!pw) pw = s;
      else if (*pw != s) return std::nullopt;
    }
  }
  return pw;
}

std::optional<std::int64_t> is_strongly_pure(const Weight& w, const FieldModel& m) {
  std::optional<std::int64_t> common;
  for (const auto& c : m.conjugations) {
    auto pw = purity_weight(w, c);
    if (!pw || (common && *common != *pw)) return std::nullopt;
    common = pw;
  }
  return common;
}

bool is_algebraic(const Weight& w, const FieldModel& m) {
  auto a = b_to_a(w);
  std::optional<Rational> k;
  for (const auto& c : m.conjugations)
    for (std::size_t t = 0; t < w.degree(); ++t) {
      Rational s = a[t].d + a[c[t]].d;
      if (!k) k = s;
      else if (*k != s) return false;
    }
  return true;
}

bool is_base_change(const Weight& w, const FieldModel& m) {
  if (!m.layer) throw std::invalid_argument("base-change test requires subfield layer");
  const auto F = fibers(*m.layer, m.degree());
  for (const auto& fib : F)
    for (int e : fib)
      if (w.comp[e] != w.comp[fib.front()]) return false;
  return true;
}

Tuple dual(const Tuple& b) {
  Tuple d(b.rbegin(), b.rend());
  for (auto& x : d) x = -x;
  return d;
}

Weight dual(const Weight& w) {
  Weight out{w.n, {}};
  for (const auto& b : w.comp) out.comp.push_back(dual(b));
  return out;
}

Weight tate_twist(const Weight& w, std::int64_t m) {
  Weight out = w;
  for (auto& b : out.comp)
    for (auto& x : b) x += m;
  return out;
}

Weight concat(const Weight& w, const Weight& wp) {
  if (w.degree() != wp.degree()) throw std::invalid_argument("model mismatch: weights have different embedding counts");
  Weight out{w.n + wp.n, {}};
  for (std::size_t t = 0; t < w.degree(); ++t) {
    Tuple b = w.comp[t];
    b.insert(b.end(), wp.comp[t].begin(), wp.comp[t].end());
    out.comp.push_back(std::move(b));
  }
  return out;
}

Weight pure_from_distinguished(const FieldModel& m, const std::vector<Tuple>& at_places, std::int64_t pw) {
  const auto P = places(m);
  if (at_places.size() != P.size()) throw std::invalid_argument("one tuple per place required");
  const int n = static_cast<int>(at_places.front().size());
  Weight w{n, std::vector<Tuple>(m.degree())};
  for (std::size_t v = 0; v < P.size(); ++v) {
    const auto& b = at_places[v];
    Tuple c(n);
    for (int j = 0; j < n; ++j) c[j] = pw - b[n - 1 - j];
    w.comp[P[v].distinguished] = b;
    w.comp[P[v].conjugate] = c;
  }
  return w;
}

}  // namespace eiscomb
