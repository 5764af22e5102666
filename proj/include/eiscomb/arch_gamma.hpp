#pragma once

#include <complex>
#include <string>
#include <vector>

#include "eiscomb/critical_engine.hpp"
#include "eiscomb/half.hpp"
#include "eiscomb/weight_algebra.hpp"

namespace eiscomb {

// q * 2^t * pi^p with q rational and t, p half-integers, or a pole marker.
// q is kept with odd numerator and denominator; powers of two live in t.
class PiRational {
 public:
  static PiRational finite(const Rational& q, Half pi_exp = Half(0), Half two_exp = Half(0));
  // c * (2 pi)^p
  static PiRational two_pi_power(const Rational& c, Half p);
  static PiRational pole();

  bool is_pole() const { return pole_; }
  bool is_zero() const { return !pole_ && q_ == 0; }
  const Rational& odd_part() const { return q_; }
  Half two_exponent() const { return t_; }
  Half pi_exponent() const { return p_; }
  // c with value = c * (2 pi)^p; throws when 2^(t-p) is irrational.
  Rational two_pi_coefficient() const;
  double to_double() const;
  std::string str() const;

  friend PiRational operator*(const PiRational& a, const PiRational& b);
  friend PiRational operator/(const PiRational& a, const PiRational& b);
  friend bool operator==(const PiRational& a, const PiRational& b);

 private:
  bool pole_ = false;
  Rational q_ = 0;
  Half t_;
  Half p_;
  void normalize();
};

// Gamma(x) for x > 0 in (1/2)Z, Pole at non-positive integers; other
// arguments throw "gamma argument out of supported range".
PiRational gamma_value(Half x);

// The character z^alpha zbar^beta of C^x; alpha - beta must be integral.
struct AbelianFactor {
  Half alpha;
  Half beta;
  Half e() const;  // (alpha+beta)/2 + |alpha-beta|/2
};

AbelianFactor twist(const AbelianFactor& f, Half s);  // f |.|_C^s
AbelianFactor quotient(const AbelianFactor& f, const AbelianFactor& g);  // f g^{-1}

// 2 (2 pi)^{-(s+e)} Gamma(s+e)
PiRational local_value(const AbelianFactor& f, Half s);
// local_value(f, m) / local_value(f, m+1); throws when m + e < 1.
PiRational successive_ratio(const AbelianFactor& f, Half m);

// prod over (v,i,j) of 2 pi / (m - a + |l_ij|/2). Requires m and m+1 critical.
PiRational rankin_selberg_ratio(const WidthData& wd, Half m);
PiRational rankin_selberg_ratio(const Weight& mu, const Weight& mup, const FieldModel& model, Half m);

struct ScheduleStep {
  int reflection;  // k for s_k = (k, k+1)
  int i;           // chi_i
  int j;           // chi'_j
};

// T(s_n), ..., T(s_{N-1}), then T(s_{n-1}), ..., T(s_{N-2}), ... in the order applied.
std::vector<ScheduleStep> factorization_schedule(int n, int np);

// Product of the per-step ratios L(0, chi_i chi'_j^{-1}) / L(1, ...) along
// the schedule at every place, with chi_i = psi_i(m + n/2), chi'_j = psi'_j(n/2).
PiRational schedule_ratio_product(const Weight& mu, const Weight& mup, const FieldModel& model, Half m);

enum class Modulus {
  Real,     // |z/w|^{1/2}: gives Delta^{-(2m+1)}
  Complex,  // |z/w|_C^{1/2} = |z/w|: gives Delta^{-(2m+2)}
};

// f_mu on an arbitrary element of GL2(C) via its Iwasawa decomposition, for
// the representative weight b = c = (m-1, 0).
std::complex<double> gl2_f_mu(int m, const std::complex<double> g[2][2], Modulus mod = Modulus::Real);
// f_mu on (1 0; -r e^{i theta} 1).
double gl2_minimal_ktype_value(int m, double r, double theta, Modulus mod = Modulus::Real);
// f_mu on the rotation r(theta).
double gl2_rotation_value(int m, double theta);

struct QuadratureOptions {
  double rel_tol = 1e-11;    // adaptive Simpson tolerance per panel
  int theta_steps = 8;       // midpoint nodes in theta (slow path)
  bool fast_theta = true;    // integrand is theta-free: multiply by 2 pi
  Modulus modulus = Modulus::Real;
  int max_depth = 48;
};

// int_0^{2pi} int_0^{r_max} f_mu r dr dtheta
double gl2_intertwining_numeric(int m, double r_max, const QuadratureOptions& opt = {});
// int_{r_max}^inf r (1+r^2)^{-q/2} dr for the modulus convention.
double gl2_tail_bound(int m, double r_max, Modulus mod = Modulus::Real);
// Smallest r_max whose relative tail bound is below tail_rel.
double gl2_r_max_for(int m, double tail_rel, Modulus mod = Modulus::Real);
// Exact value of the untruncated integral: 2pi/(2m-1) or pi/m.
double gl2_exact(int m, Modulus mod = Modulus::Real);

}  // namespace eiscomb
