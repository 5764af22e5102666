#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eiscomb/field_model.hpp"
#include "eiscomb/weight_algebra.hpp"

namespace eiscomb {

// Permutation of {1..N} in one-line notation: img[i-1] = p(i).
struct Perm {
  std::vector<int> img;

  static Perm identity(int N);
  int size() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i - 1]; }
  Perm inverse() const;
  // (p*q)(i) = p(q(i))
  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm&, const Perm&) = default;
};

bool is_valid(const Perm& p);
int length(const Perm& p);  // inversion count

// Kostant representative of P_(n,n') in the increasing-tuple encoding.
struct Kappa {
  int n = 0;
  int np = 0;
  std::vector<int> k;  // 1-based, strictly increasing, size n

  int N() const { return n + np; }
  friend bool operator==(const Kappa&, const Kappa&) = default;
};

bool is_valid(const Kappa& k);
std::string to_string(const Kappa& k);

Perm kappa_to_perm(const Kappa& k);
// Throws unless p satisfies the Kostant criterion for the (n, N-n) parabolic.
Kappa perm_to_kappa(const Perm& p, int n);
int kappa_length(const Kappa& k);
Kappa kappa_dual(const Kappa& k);
std::vector<int> kappa_complement(const Kappa& k);
// Every Kappa of type (n, np), lexicographic.
std::vector<Kappa> all_kappas(int n, int np);

Perm longest_element(int N);                 // w_G
Perm levi_longest_element(int n, int np);    // w_{M_P}
Perm block_swap(int n, int np);              // w_P

// w^{-1} . t with entry i equal to t_{w(i)} + i - w(i).
Tuple dot_action_inverse(const Kappa& k, const Tuple& t);
// w . t = w(t + rho) - rho.
Tuple dot_action(const Perm& w, const Tuple& t);

struct Inequality {
  std::string label;
  bool holds;
};

// Adjacent-entry conditions equivalent to dominance of
// w_kappa^{-1} . (b ++ bp) for non-increasing b, bp.
std::vector<Inequality> dominance_inequalities(const Kappa& k, const Tuple& b, const Tuple& bp);
// Conditions for dominance of w_{kappa^v}^{-1} . (c ++ c'), where c, c' are
// the conjugate components forced by purity weights pw, pwp, written in the
// coordinates b, bp.
std::vector<Inequality> dominance_inequalities_vee(const Kappa& k, const Tuple& b, const Tuple& bp, std::int64_t pw,
                                                   std::int64_t pwp);
bool all_hold(const std::vector<Inequality>& v);

// Per-embedding Kostant representative.
struct KostantRep {
  int n = 0;
  int np = 0;
  std::vector<Kappa> comp;

  friend bool operator==(const KostantRep&, const KostantRep&) = default;
};

std::vector<int> lengths(const KostantRep& w);
bool is_balanced(const KostantRep& w, const IndexMap& c);
bool is_balanced(const KostantRep& w, const FieldModel& m);  // every supplied conjugation

// w' = w_P * w, a representative for the (np, n) parabolic.
Kappa associate(const Kappa& k);
KostantRep associate(const KostantRep& w);
// w^v = w_{M_P} * w * w_G.
Kappa dual_rep(const Kappa& k);
KostantRep dual_rep(const KostantRep& w);

struct DegreeTable {
  int N, n, np, r;
  std::int64_t bC, tC, bF, tF;  // bottom/top degrees for GL_N over C and over F
  std::int64_t bn, bnp, tn, tnp;  // the same for GL_n and GL_n' over F
  std::int64_t half_dim_UP;
  bool identity_bottom;  // bn + bnp + half_dim_UP == bF
  bool identity_top;     // tn + tnp + half_dim_UP == tF - 1
};

DegreeTable degree_table(int N, int n, int np, int r);

}  // namespace eiscomb
