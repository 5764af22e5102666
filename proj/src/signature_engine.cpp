#include "eiscomb/signature_engine.hpp"

#include <stdexcept>

namespace eiscomb {

namespace {

int parity_sign(long long e) { return e % 2 == 0 ? 1 : -1; }

std::vector<int> positions(const std::vector<int>& order, std::size_t d) {
  if (order.size() != d) throw std::invalid_argument("ordering does not list every embedding");
  std::vector<int> pos(d, -1);
  for (std::size_t t = 0; t < d; ++t) {
    const int e = order[t];
    if (e < 0 || static_cast<std::size_t>(e) >= d || pos[e] != -1) throw std::invalid_argument("ordering is not a permutation of the embeddings");
    pos[e] = static_cast<int>(t);
  }
  return pos;
}

}  // namespace

std::vector<GradedBlock> graded_blocks(const KostantRep& w, const std::vector<int>& order) {
  std::vector<GradedBlock> out;
  for (int e : order) out.push_back({e, kappa_length(w.comp.at(e))});
  return out;
}

int graded_sign(const std::vector<int>& degrees, const Perm& perm) {
  if (static_cast<int>(degrees.size()) != perm.size()) throw std::invalid_argument("degree list and permutation sizes differ");
  long long e = 0;
  for (int i = 1; i <= perm.size(); ++i)
    for (int j = i + 1; j <= perm.size(); ++j)
      if (perm(i) > perm(j)) e += static_cast<long long>(degrees[i - 1]) * degrees[j - 1];
  return parity_sign(e);
}

void require_signature_input(const KostantRep& w, const FieldModel& m) {
  if (w.comp.size() != m.degree()) throw std::invalid_argument("representative has " + std::to_string(w.comp.size()) + " components, model has " + std::to_string(m.degree()) + " embeddings");
  if (!is_balanced(w, m)) throw std::invalid_argument("signature undefined: representative is not balanced");
  const auto L = effective_layer(m);
  for (const auto& fib : fibers(L, m.degree()))
    for (int e : fib)
      if (!(w.comp[e] == w.comp[fib.front()]))
        throw std::invalid_argument("signature undefined: representative not constant on the fiber over '" + L.labels[L.restriction[e]] + "'");
}

int epsilon_direct(const KostantRep& w, const GaloisElement& g, const FieldModel& m, const std::vector<int>& order) {
  require_signature_input(w, m);
  galois_place_data(m, g);  // validates g
  const auto pos = positions(order, m.degree());
  std::vector<int> deg;
  Perm p;
  for (const auto& b : graded_blocks(w, order)) {
    deg.push_back(b.degree);
    p.img.push_back(pos[g.perm[b.embedding]] + 1);
  }
  return graded_sign(deg, p);
}

int epsilon_direct(const KostantRep& w, const GaloisElement& g, const FieldModel& m) {
  return epsilon_direct(w, g, m, compatible_ordering(m));
}

namespace {

struct FormulaParts {
  PlaceActionData pd;
  int eps_1inf;
  std::vector<int> fiber_signs;
  int value;
};

FormulaParts formula_parts(const KostantRep& w, const GaloisElement& g, const FieldModel& m) {
  require_signature_input(w, m);
  FormulaParts out{galois_place_data(m, g), 1, {}, 1};
  const auto L = effective_layer(m);
  const auto F = fibers(L, m.degree());
  const auto P = subfield_places(m);
  const std::size_t k = F.front().size();
  auto l_at = [&](int label) { return static_cast<long long>(kappa_length(w.comp[F[label].front()])); };

  long long D = 0;
  for (int e : F[P.front().distinguished]) D += kappa_length(w.comp[e]);
  if (P.front().conjugate != P.front().distinguished)
    for (int e : F[P.front().conjugate]) D += kappa_length(w.comp[e]);

  out.eps_1inf = sign(out.pd.pi_1inf);
  long long e = out.eps_1inf == -1 ? D : 0;
  for (int j : out.pd.J) e += l_at(P[j].distinguished) * l_at(P[j].conjugate) * static_cast<long long>(k);

  const IndexMap pi2 = compose(inverse(out.pd.pi_hat), out.pd.pi_F);
  for (std::size_t nu = 0; nu < F.size(); ++nu) {
    // pi'' stabilises the fiber; read off its sign there
    IndexMap local(F[nu].size());
    for (std::size_t a = 0; a < F[nu].size(); ++a)
      for (std::size_t b = 0; b < F[nu].size(); ++b)
        if (pi2[F[nu][a]] == F[nu][b]) local[a] = static_cast<int>(b);
    const int s = sign(local);
    out.fiber_signs.push_back(s);
    if (s == -1) e += l_at(static_cast<int>(nu));
  }
  out.value = parity_sign(e);
  return out;
}

}  // namespace

int epsilon_formula(const KostantRep& w, const GaloisElement& g, const FieldModel& m) {
  return formula_parts(w, g, m).value;
}

KostantRep transport(const KostantRep& w, const GaloisElement& g) {
  KostantRep out = w;
  for (std::size_t t = 0; t < w.comp.size(); ++t) out.comp[g.perm[t]] = w.comp[t];
  return out;
}

SignatureReport product_identity(const KostantRep& w, const GaloisElement& g, const FieldModel& m) {
  const auto parts = formula_parts(w, g, m);
  SignatureReport r;
  r.gamma = g.name;
  r.field_case = parts.pd.field_case;
  r.eps_direct = epsilon_direct(w, g, m);
  r.eps_formula = parts.value;
  IndexMap input_order = identity_map(m.degree());
  r.eps_input_order = epsilon_direct(w, g, m, input_order);
  r.eps_1inf = parts.eps_1inf;
  for (int j : parts.pd.J) r.J.push_back(j + 1);
  r.fiber_signs = parts.fiber_signs;
  r.eps_associate = epsilon_direct(associate(w), g, m);
  r.product = r.eps_direct * r.eps_associate;
  r.pi_prime_power = sign(parts.pd.pi_prime) == -1 ? parity_sign(static_cast<long long>(w.n) * w.np) : 1;
  return r;
}

}  // namespace eiscomb
