#include "eiscomb/models.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace eiscomb::models {

FieldModel imaginary_quadratic(bool with_layer) {
  FieldModel m;
  m.embeddings = {"eta", "etabar"};
  m.conjugations = {{1, 0}};
  if (with_layer) m.layer = SubfieldLayer{{"eta", "etabar"}, {0, 1}, {1, 0}};
  assign_default_flags(m);
  return m;
}

namespace {

using S3 = std::array<int, 3>;

const std::array<std::pair<const char*, S3>, 6> kS3 = {{
    {"e", {0, 1, 2}},
    {"(12)", {1, 0, 2}},
    {"(23)", {0, 2, 1}},
    {"(13)", {2, 1, 0}},
    {"(123)", {1, 2, 0}},
    {"(132)", {2, 0, 1}},
}};

int s3_index(const S3& p) {
  for (std::size_t i = 0; i < kS3.size(); ++i)
    if (kS3[i].second == p) return static_cast<int>(i);
  throw std::logic_error("not an element of S3");
}

int s3_index(const std::string& name) {
  for (std::size_t i = 0; i < kS3.size(); ++i)
    if (name == kS3[i].first) return static_cast<int>(i);
  throw std::invalid_argument("unknown S3 label '" + name + "'");
}

S3 s3_mul(const S3& a, const S3& b) { return {a[b[0]], a[b[1]], a[b[2]]}; }

IndexMap left_multiplication(int s0) {
  IndexMap p(6);
  for (int s = 0; s < 6; ++s) p[s] = s3_index(s3_mul(kS3[s0].second, kS3[s].second));
  return p;
}

}  // namespace

std::string s3_multiply(const std::string& a, const std::string& b) {
  return kS3[s3_index(s3_mul(kS3[s3_index(a)].second, kS3[s3_index(b)].second))].first;
}

FieldModel s3_model(bool with_layer) {
  FieldModel m;
  for (const auto& [name, p] : kS3) m.embeddings.emplace_back(name);
  for (const char* t : {"(23)", "(12)", "(13)"}) m.conjugations.push_back(left_multiplication(s3_index(t)));
  if (with_layer) {
    SubfieldLayer L;
    L.labels = {"nu", "nubar"};
    for (const auto& [name, p] : kS3) {
      int parity = sign(IndexMap(p.begin(), p.end()));
      L.restriction.push_back(parity == 1 ? 0 : 1);
    }
    L.conjugation = {1, 0};
    m.layer = L;
  }
  assign_default_flags(m);
  return m;
}

std::vector<GaloisElement> s3_galois() {
  std::vector<GaloisElement> out;
  for (int s0 = 0; s0 < 6; ++s0) out.push_back({kS3[s0].first, left_multiplication(s0)});
  return out;
}

FieldModel tr_model(int places, int k1) {
  if (places < 1 || k1 < 1) throw std::invalid_argument("tr_model needs places >= 1 and k1 >= 1");
  FieldModel m;
  SubfieldLayer L;
  IndexMap c;
  for (int j = 1; j <= places; ++j) {
    L.labels.push_back("nu" + std::to_string(j));
    for (int i = 1; i <= k1; ++i) {
      int base = static_cast<int>(m.embeddings.size());
      m.embeddings.push_back("eta" + std::to_string(j) + "_" + std::to_string(i));
      m.embeddings.push_back("etabar" + std::to_string(j) + "_" + std::to_string(i));
      L.restriction.push_back(j - 1);
      L.restriction.push_back(j - 1);
      c.push_back(base + 1);
      c.push_back(base);
    }
  }
  L.conjugation = identity_map(L.labels.size());
  m.conjugations = {c};
  if (k1 >= 2) {
    // a realisable TR field has k1 >= 2 and further conjugations inside each
    // fiber: eta_i <-> etabar_{i+1}, and eta_1 <-> eta_2 with the rest as in c
    IndexMap ca(c.size()), cb = c;
    for (int j = 0; j < places; ++j) {
      const int base = 2 * k1 * j;
      for (int i = 0; i < k1; ++i) {
        const int a = base + 2 * i, b = base + 2 * ((i + 1) % k1) + 1;
        ca[a] = b;
        ca[b] = a;
      }
      cb[base] = base + 2;
      cb[base + 2] = base;
      cb[base + 1] = base + 3;
      cb[base + 3] = base + 1;
    }
    m.conjugations.push_back(ca);
    m.conjugations.push_back(cb);
  }
  m.layer = L;
  assign_default_flags(m);
  return m;
}

FieldModel random_layered_cm(int r1, int k, std::mt19937_64& rng) {
  if (r1 < 1 || k < 1) throw std::invalid_argument("random_layered_cm needs r1 >= 1 and k >= 1");
  SubfieldLayer L;
  for (int j = 1; j <= r1; ++j) L.labels.push_back("nu" + std::to_string(j));
  for (int j = 1; j <= r1; ++j) L.labels.push_back("nubar" + std::to_string(j));
  L.conjugation.resize(2 * r1);
  for (int j = 0; j < r1; ++j) {
    L.conjugation[j] = j + r1;
    L.conjugation[j + r1] = j;
  }
  // embeddings before shuffling: fiber f occupies [f*k, f*k+k)
  const int d = 2 * r1 * k;
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> pos(d);
  for (int p = 0; p < d; ++p) pos[order[p]] = p;

  FieldModel m;
  m.embeddings.resize(d);
  L.restriction.resize(d);
  for (int e = 0; e < d; ++e) {
    int f = e / k;
    m.embeddings[pos[e]] = "t" + L.labels[f] + "_" + std::to_string(e % k + 1);
    L.restriction[pos[e]] = f;
  }
  auto random_conjugation = [&] {
    IndexMap c(d);
    for (int j = 0; j < r1; ++j) {
      std::vector<int> sigma(k);
      std::iota(sigma.begin(), sigma.end(), 0);
      std::shuffle(sigma.begin(), sigma.end(), rng);
      for (int i = 0; i < k; ++i) {
        int a = pos[j * k + i];
        int b = pos[(j + r1) * k + sigma[i]];
        c[a] = b;
        c[b] = a;
      }
    }
    return c;
  };
  m.conjugations = {random_conjugation(), random_conjugation()};
  m.layer = L;
  assign_default_flags(m);
  return m;
}

namespace {

std::vector<IndexMap> subfield_candidates(const SubfieldLayer& L) {
  std::vector<IndexMap> out;
  IndexMap p = identity_map(L.labels.size());
  do {
    if (compose(p, L.conjugation) == compose(L.conjugation, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<GaloisElement> fiber_compatible_permutations(const FieldModel& m, std::size_t limit) {
  const auto L = effective_layer(m);
  const auto F = fibers(L, m.degree());
  std::vector<GaloisElement> out;
  for (const auto& p1 : subfield_candidates(L)) {
    IndexMap perm(m.degree(), -1);
    std::function<void(std::size_t)> rec = [&](std::size_t nu) {
      if (out.size() >= limit) return;
      if (nu == F.size()) {
        out.push_back({"g" + std::to_string(out.size()), perm});
        return;
      }
      std::vector<int> tgt = F[p1[nu]];
      std::sort(tgt.begin(), tgt.end());
      do {
        for (std::size_t i = 0; i < tgt.size(); ++i) perm[F[nu][i]] = tgt[i];
        rec(nu + 1);
      } while (out.size() < limit && std::next_permutation(tgt.begin(), tgt.end()));
    };
    rec(0);
    if (out.size() >= limit) break;
  }
  return out;
}

GaloisElement random_fiber_compatible(const FieldModel& m, std::mt19937_64& rng) {
  const auto L = effective_layer(m);
  const auto F = fibers(L, m.degree());
  auto cands = subfield_candidates(L);
  const auto& p1 = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
  IndexMap perm(m.degree(), -1);
  for (std::size_t nu = 0; nu < F.size(); ++nu) {
    std::vector<int> tgt = F[p1[nu]];
    std::shuffle(tgt.begin(), tgt.end(), rng);
    for (std::size_t i = 0; i < tgt.size(); ++i) perm[F[nu][i]] = tgt[i];
  }
  return {"random", perm};
}

}  // namespace eiscomb::models
