#pragma once

#include <string>
#include <vector>

#include "eiscomb/field_model.hpp"
#include "eiscomb/weyl_kostant.hpp"

namespace eiscomb {

struct GradedBlock {
  int embedding;
  int degree;
};

// Blocks in the given embedding order, degree l(w^eta).
std::vector<GradedBlock> graded_blocks(const KostantRep& w, const std::vector<int>& order);

// Block i moves to position perm(i). Product over i < j with perm(i) > perm(j)
// of (-1)^{d_i d_j}.
int graded_sign(const std::vector<int>& degrees, const Perm& perm);

// Throws unless w is balanced for every supplied conjugation and constant on
// the fibers of the effective layer.
void require_signature_input(const KostantRep& w, const FieldModel& m);

// gamma_*(e_w) = eps * e_{gamma.w}, with both wedges taken in `order`.
int epsilon_direct(const KostantRep& w, const GaloisElement& g, const FieldModel& m, const std::vector<int>& order);
// Same, in compatible_ordering(m).
int epsilon_direct(const KostantRep& w, const GaloisElement& g, const FieldModel& m);

// eps(pi_1inf)^D * prod_{j in J} (-1)^{l_j l_j* k} * prod_nu eps(pi''_nu)^{l_nu}
// with D the total degree over one subfield place and pi''_nu = pi_hat^{-1} o pi_F
// restricted to the fiber over nu.
int epsilon_formula(const KostantRep& w, const GaloisElement& g, const FieldModel& m);

// (gamma.w)^{gamma o tau} = w^tau
KostantRep transport(const KostantRep& w, const GaloisElement& g);

struct SignatureReport {
  std::string gamma;
  FieldCase field_case = FieldCase::CM;
  int eps_direct = 1;
  int eps_formula = 1;
  int eps_input_order = 1;   // strict mode: embeddings in model input order
  int eps_1inf = 1;          // sign of pi_1inf on subfield places
  std::vector<int> J;        // 1-based subfield places
  std::vector<int> fiber_signs;  // eps(pi''_nu) per subfield label
  int eps_associate = 1;     // eps_{iota,w'}
  int product = 1;           // eps_direct * eps_associate
  int pi_prime_power = 1;    // eps(pi_F')^{nn'}

  bool formula_ok() const { return eps_direct == eps_formula; }
  bool product_ok() const { return product == pi_prime_power; }
  bool all_ones() const { return eps_direct == 1 && eps_associate == 1; }
};

SignatureReport product_identity(const KostantRep& w, const GaloisElement& g, const FieldModel& m);

}  // namespace eiscomb
