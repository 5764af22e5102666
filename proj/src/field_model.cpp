#include "eiscomb/field_model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace eiscomb {

bool is_bijection(const IndexMap& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

IndexMap inverse(const IndexMap& p) {
  IndexMap q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

IndexMap compose(const IndexMap& a, const IndexMap& b) {
  IndexMap c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

IndexMap identity_map(std::size_t d) {
  IndexMap p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = static_cast<int>(i);
  return p;
}

int sign(const IndexMap& p) {
  // parity via cycle decomposition
  std::vector<bool> seen(p.size(), false);
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

int FieldModel::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < embeddings.size(); ++i)
    if (embeddings[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown embedding label '" + std::string(label) + "'");
}

namespace {

bool is_identity(const IndexMap& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

bool fixed_point_free(const IndexMap& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == static_cast<int>(i)) return false;
  return true;
}

bool layer_shape_ok(const SubfieldLayer& L, std::size_t d) {
  if (L.restriction.size() != d || L.conjugation.size() != L.labels.size()) return false;
  for (int x : L.restriction)
    if (x < 0 || static_cast<std::size_t>(x) >= L.labels.size()) return false;
  return is_bijection(L.conjugation);
}

}  // namespace

void assign_default_flags(FieldModel& m) {
  if (!m.distinguished.empty()) return;
  const std::size_t d = m.degree();
  m.distinguished.assign(d, false);
  if (m.conjugations.empty() || m.distinguished_conjugation >= m.conjugations.size()) return;
  const auto& c = m.c0();
  if (c.size() != d) return;
  if (m.layer && layer_shape_ok(*m.layer, d) && fixed_point_free(m.layer->conjugation)) {
    const auto& L = *m.layer;
    std::vector<int> chosen(L.labels.size(), -1);  // 1 distinguished, 0 not
    for (std::size_t nu = 0; nu < L.labels.size(); ++nu) {
      if (chosen[nu] != -1) continue;
      chosen[nu] = 1;
      chosen[L.conjugation[nu]] = 0;
    }
    for (std::size_t i = 0; i < d; ++i) m.distinguished[i] = chosen[L.restriction[i]] == 1;
    return;
  }
  std::vector<bool> seen(d, false);
  for (std::size_t i = 0; i < d; ++i) {
    int j = c[i];
    if (seen[i] || j < 0 || static_cast<std::size_t>(j) >= d) continue;
    seen[i] = seen[j] = true;
    m.distinguished[i] = true;
  }
}

std::vector<Place> places(const FieldModel& m) {
  const auto& c = m.c0();
  std::vector<Place> out;
  std::vector<bool> seen(m.degree(), false);
  for (std::size_t i = 0; i < m.degree(); ++i) {
    if (seen[i]) continue;
    int j = c[i];
    seen[i] = seen[j] = true;
    bool di = !m.distinguished.empty() && m.distinguished[i];
    if (m.distinguished.empty() || di)
      out.push_back({static_cast<int>(i), j});
    else
      out.push_back({j, static_cast<int>(i)});
  }
  return out;
}

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const Check* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return &c;
  return nullptr;
}

ValidationReport validate(const FieldModel& m) {
  ValidationReport rep;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, ok ? std::string{} : std::move(detail)});
    return ok;
  };
  const std::size_t d = m.degree();
  const auto& E = m.embeddings;

  {
    std::set<std::string> s;
    std::string dup;
    for (const auto& e : E)
      if (!s.insert(e).second && dup.empty()) dup = e;
    add("labels distinct", dup.empty(), "duplicate label '" + dup + "'");
  }
  add("even degree", d > 0 && d % 2 == 0, "degree " + std::to_string(d) + " is not a positive even number");
  if (!add("conjugations present", !m.conjugations.empty(), "no conjugation supplied")) return rep;

  bool conj_ok = true;
  for (std::size_t k = 0; k < m.conjugations.size(); ++k) {
    const auto& c = m.conjugations[k];
    std::string tag = "conjugation " + std::to_string(k);
    if (!add(tag + " is a permutation", c.size() == d && is_bijection(c), tag + " is not a permutation of the labels")) {
      conj_ok = false;
      continue;
    }
    std::string bad;
    for (std::size_t i = 0; i < d && bad.empty(); ++i)
      if (c[c[i]] != static_cast<int>(i)) bad = E[i];
    conj_ok &= add(tag + " is an involution", bad.empty(), tag + " is not an involution at label '" + bad + "'");
    bad.clear();
    for (std::size_t i = 0; i < d && bad.empty(); ++i)
      if (c[i] == static_cast<int>(i)) bad = E[i];
    conj_ok &= add(tag + " fixed-point-free", bad.empty(), "fixed-point in conjugation " + std::to_string(k) + " at label '" + bad + "'");
  }
  if (!add("distinguished conjugation index", m.distinguished_conjugation < m.conjugations.size(),
           "index " + std::to_string(m.distinguished_conjugation) + " out of range"))
    return rep;
  if (!conj_ok) return rep;

  const auto& c0 = m.c0();
  {
    std::string bad;
    if (m.distinguished.size() != d) {
      bad = "flag count differs from embedding count";
    } else {
      for (std::size_t i = 0; i < d && bad.empty(); ++i)
        if (m.distinguished[i] == m.distinguished[c0[i]]) bad = "place of '" + E[i] + "' has " + (m.distinguished[i] ? "two" : "no") + " distinguished members";
    }
    add("distinguished flags", bad.empty(), bad);
  }

  if (!m.layer) return rep;
  const auto& L = *m.layer;
  if (!add("subfield layer shape", layer_shape_ok(L, d), "restriction or subfield conjugation has wrong size or range")) return rep;
  {
    std::vector<int> count(L.labels.size(), 0);
    for (int x : L.restriction) ++count[x];
    std::string bad;
    for (std::size_t nu = 0; nu < L.labels.size() && bad.empty(); ++nu)
      if (count[nu] == 0) bad = L.labels[nu];
    add("restriction surjective", bad.empty(), "subfield label '" + bad + "' has empty fiber");
    bad.clear();
    for (std::size_t nu = 1; nu < L.labels.size() && bad.empty(); ++nu)
      if (count[nu] != count[0]) bad = L.labels[nu];
    add("equal fiber sizes", bad.empty(), "fiber over '" + bad + "' differs in size from fiber over '" + L.labels[0] + "'");
  }
  {
    std::string bad;
    for (std::size_t nu = 0; nu < L.labels.size() && bad.empty(); ++nu)
      if (L.conjugation[L.conjugation[nu]] != static_cast<int>(nu)) bad = L.labels[nu];
    add("subfield conjugation is an involution", bad.empty(), "not an involution at '" + bad + "'");
  }
  const bool cm = fixed_point_free(L.conjugation);
  const bool tr = is_identity(L.conjugation);
  add("subfield conjugation fixed-point-free or identity", cm || tr, "subfield conjugation is neither fixed-point-free nor the identity");
  {
    std::string bad;
    for (std::size_t k = 0; k < m.conjugations.size() && bad.empty(); ++k)
      for (std::size_t i = 0; i < d && bad.empty(); ++i)
        if (L.restriction[m.conjugations[k][i]] != L.conjugation[L.restriction[i]])
          bad = "conjugation " + std::to_string(k) + " at label '" + E[i] + "'";
    add("conjugations descend to the subfield conjugation", bad.empty(), bad);
  }
  if (cm && m.distinguished.size() == d) {
    std::string bad;
    for (std::size_t i = 0; i < d && bad.empty(); ++i)
      for (std::size_t j = 0; j < d && bad.empty(); ++j)
        if (L.restriction[i] == L.restriction[j] && m.distinguished[i] != m.distinguished[j])
          bad = "labels '" + E[i] + "' and '" + E[j] + "' share a fiber but differ in flag";
    add("distinguished flags constant on fibers", bad.empty(), bad);
  }
  return rep;
}

const char* to_string(FieldCase c) { return c == FieldCase::CM ? "CM" : "TR"; }

FieldCase classify(const FieldModel& m) {
  if (!m.layer) throw std::invalid_argument("classification requires subfield layer");
  const auto& C = m.layer->conjugation;
  if (fixed_point_free(C)) return FieldCase::CM;
  if (is_identity(C)) return FieldCase::TR;
  throw std::invalid_argument("subfield conjugation is neither fixed-point-free nor the identity");
}

SubfieldLayer effective_layer(const FieldModel& m) {
  if (m.layer) return *m.layer;
  SubfieldLayer L;
  L.labels = m.embeddings;
  L.restriction = identity_map(m.degree());
  L.conjugation = m.c0();
  return L;
}

std::vector<std::vector<int>> fibers(const SubfieldLayer& layer, std::size_t degree) {
  std::vector<std::vector<int>> f(layer.labels.size());
  for (std::size_t i = 0; i < degree; ++i) f[layer.restriction[i]].push_back(static_cast<int>(i));
  return f;
}

namespace {

FieldCase effective_case(const FieldModel& m) { return m.layer ? classify(m) : FieldCase::CM; }

}  // namespace

std::vector<SubfieldPlace> subfield_places(const FieldModel& m) {
  const auto L = effective_layer(m);
  const auto F = fibers(L, m.degree());
  std::vector<SubfieldPlace> out;
  if (effective_case(m) == FieldCase::TR) {
    for (std::size_t nu = 0; nu < L.labels.size(); ++nu) out.push_back({static_cast<int>(nu), static_cast<int>(nu)});
    return out;
  }
  std::vector<bool> seen(L.labels.size(), false);
  for (std::size_t nu = 0; nu < L.labels.size(); ++nu) {
    if (seen[nu]) continue;
    int bar = L.conjugation[nu];
    seen[nu] = seen[bar] = true;
    bool dist = m.distinguished.empty() || m.distinguished[F[nu].front()];
    if (dist)
      out.push_back({static_cast<int>(nu), bar});
    else
      out.push_back({bar, static_cast<int>(nu)});
  }
  return out;
}

std::vector<int> compatible_ordering(const FieldModel& m) {
  const auto L = effective_layer(m);
  const auto F = fibers(L, m.degree());
  std::vector<int> order;
  for (const auto& p : subfield_places(m)) {
    order.insert(order.end(), F[p.distinguished].begin(), F[p.distinguished].end());
    if (p.conjugate != p.distinguished) order.insert(order.end(), F[p.conjugate].begin(), F[p.conjugate].end());
  }
  return order;
}

PlaceActionData galois_place_data(const FieldModel& m, const GaloisElement& g) {
  const std::size_t d = m.degree();
  const auto fail = [&](const std::string& why) -> PlaceActionData {
    throw std::invalid_argument("not a Galois element for this model: " + (g.name.empty() ? std::string("<unnamed>") : g.name) + " (" + why + ")");
  };
  if (g.perm.size() != d || !is_bijection(g.perm)) return fail("not a permutation of the embeddings");

  const auto L = effective_layer(m);
  const auto F = fibers(L, d);
  const std::size_t r = L.labels.size();
  PlaceActionData out;
  out.field_case = effective_case(m);
  out.pi_F = g.perm;
  out.pi_F1.assign(r, -1);
  for (std::size_t i = 0; i < d; ++i) {
    int src = L.restriction[i];
    int dst = L.restriction[g.perm[i]];
    if (out.pi_F1[src] == -1)
      out.pi_F1[src] = dst;
    else if (out.pi_F1[src] != dst)
      return fail("splits the fiber over '" + L.labels[src] + "'");
  }
  if (!is_bijection(out.pi_F1)) return fail("does not permute the subfield labels");
  if (compose(out.pi_F1, L.conjugation) != compose(L.conjugation, out.pi_F1))
    return fail("does not commute with the subfield conjugation");

  const auto P = subfield_places(m);
  std::vector<int> place_of(r, -1);
  std::vector<bool> is_dist(r, false);
  for (std::size_t j = 0; j < P.size(); ++j) {
    place_of[P[j].distinguished] = place_of[P[j].conjugate] = static_cast<int>(j);
    is_dist[P[j].distinguished] = true;
  }
  out.pi_1inf.assign(P.size(), -1);
  for (std::size_t j = 0; j < P.size(); ++j) {
    int img = out.pi_F1[P[j].distinguished];
    out.pi_1inf[j] = place_of[img];
    if (out.field_case == FieldCase::CM && !is_dist[img]) out.J.push_back(static_cast<int>(j));
  }

  out.pi_hat.assign(d, -1);
  for (std::size_t nu = 0; nu < r; ++nu) {
    const auto& src = F[nu];
    const auto& dst = F[out.pi_F1[nu]];
    for (std::size_t p = 0; p < src.size(); ++p) out.pi_hat[src[p]] = dst[p];
  }
  out.pi_prime = compose(out.pi_F, inverse(out.pi_hat));
  return out;
}

}  // namespace eiscomb
