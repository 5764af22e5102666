#include "eiscomb/arch_gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eiscomb {

namespace {

using boost::multiprecision::cpp_int;

// strips factors of two from x, returning the count
std::int64_t strip_twos(cpp_int& x) {
  std::int64_t k = 0;
  if (x == 0) return 0;
  while ((x & 1) == 0) {
    x >>= 1;
    ++k;
  }
  return k;
}

Rational pow2(std::int64_t k) {
  cpp_int one = 1;
  return k >= 0 ? Rational(one << k) : Rational(cpp_int(1), one << -k);
}

cpp_int factorial(std::int64_t n) {
  cpp_int f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

void PiRational::normalize() {
  if (pole_) return;
  if (q_ == 0) {
    t_ = Half(0);
    p_ = Half(0);
    return;
  }
  cpp_int num = numerator(q_);
  cpp_int den = denominator(q_);
  std::int64_t k = strip_twos(num) - strip_twos(den);
  q_ = Rational(num, den);
  t_ += Half(k);
}

PiRational PiRational::finite(const Rational& q, Half pi_exp, Half two_exp) {
  PiRational r;
  r.q_ = q;
  r.p_ = pi_exp;
  r.t_ = two_exp;
  r.normalize();
  return r;
}

PiRational PiRational::two_pi_power(const Rational& c, Half p) { return finite(c, p, p); }

PiRational PiRational::pole() {
  PiRational r;
  r.pole_ = true;
  return r;
}

Rational PiRational::two_pi_coefficient() const {
  if (pole_) throw std::domain_error("pole has no coefficient");
  const Half diff = t_ - p_;
  if (!diff.is_integer()) throw std::domain_error("coefficient of (2 pi)^p is irrational");
  return q_ * pow2(diff.as_integer());
}

double PiRational::to_double() const {
  if (pole_) return std::numeric_limits<double>::infinity();
  return static_cast<double>(q_) * std::pow(2.0, t_.to_double()) * std::pow(std::numbers::pi, p_.to_double());
}

std::string PiRational::str() const {
  if (pole_) return "pole";
  if (q_ == 0) return "0";
  const Half diff = t_ - p_;
  if (diff.is_integer()) {
    std::string c = two_pi_coefficient().str();
    if (p_ == Half(0)) return c;
    return c + "*(2pi)^" + p_.str();
  }
  return q_.str() + "*2^" + t_.str() + "*pi^" + p_.str();
}

PiRational operator*(const PiRational& a, const PiRational& b) {
  if (a.pole_ || b.pole_) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("product of pole and zero");
    return PiRational::pole();
  }
  return PiRational::finite(a.q_ * b.q_, a.p_ + b.p_, a.t_ + b.t_);
}

PiRational operator/(const PiRational& a, const PiRational& b) {
  if (b.pole_) throw std::domain_error("division by pole");
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.pole_) return PiRational::pole();
  return PiRational::finite(a.q_ / b.q_, a.p_ - b.p_, a.t_ - b.t_);
}

bool operator==(const PiRational& a, const PiRational& b) {
  if (a.pole_ || b.pole_) return a.pole_ == b.pole_;
  return a.q_ == b.q_ && a.t_ == b.t_ && a.p_ == b.p_;
}

PiRational gamma_value(Half x) {
  if (x.is_integer()) {
    const auto k = x.as_integer();
    if (k <= 0) return PiRational::pole();
    return PiRational::finite(Rational(factorial(k - 1)));
  }
  if (x < Half(0)) throw std::domain_error("gamma argument out of supported range: " + x.str());
  // x = k + 1/2: (2k)! / (4^k k!) sqrt(pi)
  const std::int64_t k = (x.twice() - 1) / 2;
  return PiRational::finite(Rational(factorial(2 * k), factorial(k)), half_of(1), Half(-2 * k));
}

Half AbelianFactor::e() const {
  if (!(alpha - beta).is_integer()) throw std::invalid_argument("z^alpha zbar^beta needs alpha - beta integral");
  // (alpha+beta)/2 + |alpha-beta|/2 = max(alpha, beta)
  return alpha < beta ? beta : alpha;
}

AbelianFactor twist(const AbelianFactor& f, Half s) { return {f.alpha + s, f.beta + s}; }

AbelianFactor quotient(const AbelianFactor& f, const AbelianFactor& g) { return {f.alpha - g.alpha, f.beta - g.beta}; }

PiRational local_value(const AbelianFactor& f, Half s) {
  const Half x = s + f.e();
  const PiRational g = gamma_value(x);
  if (g.is_pole()) return g;
  return PiRational::finite(2) * PiRational::two_pi_power(1, -x) * g;
}

PiRational successive_ratio(const AbelianFactor& f, Half m) {
  if (m + f.e() < Half(1)) throw std::domain_error("ratio needs m + e >= 1, got " + (m + f.e()).str());
  return local_value(f, m) / local_value(f, m + Half(1));
}

namespace {

std::string triple(const GridIndex& g) {
  return "(v=" + std::to_string(g.place + 1) + ", i=" + std::to_string(g.i) + ", j=" + std::to_string(g.j) + ")";
}

void require_ratio_critical(const WidthData& wd, Half m) {
  const int N = wd.n + wd.np;
  if (!(m - half_of(N)).is_integer()) throw std::invalid_argument("m = " + m.str() + " is not in N/2 + Z");
  for (Half x : {m, m + Half(1)})
    if (auto v = critical_violation(wd, x))
      throw std::invalid_argument("m = " + x.str() + " is not critical: Gamma-finiteness fails at " + triple(*v));
}

}  // namespace

PiRational rankin_selberg_ratio(const WidthData& wd, Half m) {
  require_ratio_critical(wd, m);
  PiRational out = PiRational::finite(1);
  for (const auto& pl : wd.places)
    for (const auto& row : pl.grid)
      for (auto l : row) {
        const Half x = m - wd.a + half_of(l < 0 ? -l : l);
        out = out * PiRational::two_pi_power(Rational(2, x.twice()), Half(1));
      }
  return out;
}

PiRational rankin_selberg_ratio(const Weight& mu, const Weight& mup, const FieldModel& model, Half m) {
  return rankin_selberg_ratio(widths(mu, mup, model), m);
}

std::vector<ScheduleStep> factorization_schedule(int n, int np) {
  if (n < 1 || np < 1) throw std::invalid_argument("schedule needs n, n' >= 1");
  const int N = n + np;
  // arrangement[p] > 0: chi_i; < 0: chi'_{-x}
  std::vector<int> arr;
  for (int i = 1; i <= n; ++i) arr.push_back(i);
  for (int j = 1; j <= np; ++j) arr.push_back(-j);
  std::vector<ScheduleStep> out;
  for (int g = n; g >= 1; --g)
    for (int k = g; k <= g + np - 1; ++k) {
      int a = arr[k - 1], b = arr[k];
      if (a <= 0 || b >= 0 || k >= N) throw std::logic_error("schedule step does not swap chi_i past chi'_j");
      out.push_back({k, a, -b});
      std::swap(arr[k - 1], arr[k]);
    }
  return out;
}

PiRational schedule_ratio_product(const Weight& mu, const Weight& mup, const FieldModel& model, Half m) {
  const auto wd = widths(mu, mup, model);
  require_ratio_critical(wd, m);
  const auto cp = cuspidal_params(mu, model);
  const auto cpp = cuspidal_params(mup, model);
  const auto steps = factorization_schedule(mu.n, mup.n);
  const Half s_chi = m + half_of(mu.n);
  const Half s_chip = half_of(mu.n);
  PiRational out = PiRational::finite(1);
  for (std::size_t v = 0; v < cp.places.size(); ++v)
    for (const auto& st : steps) {
      const AbelianFactor chi = twist({cp.places[v].alpha[st.i - 1], cp.places[v].beta[st.i - 1]}, s_chi);
      const AbelianFactor chip = twist({cpp.places[v].alpha[st.j - 1], cpp.places[v].beta[st.j - 1]}, s_chip);
      out = out * successive_ratio(quotient(chi, chip), Half(0));
    }
  return out;
}

namespace {

using cd = std::complex<double>;

// z^p zbar^q with p - q integral
cd char_power(cd z, Half p, Half q) {
  const double mag = std::pow(std::abs(z), (p + q).to_double());
  const double ang = std::arg(z) * (p - q).to_double();
  return std::polar(mag, ang);
}

int modulus_exponent(int m, Modulus mod) { return mod == Modulus::Real ? 2 * m + 1 : 2 * m + 2; }

}  // namespace

cd gl2_f_mu(int m, const cd g[2][2], Modulus mod) {
  // b = c = (m-1, 0): purity weight m-1
  const Half b1(m - 1), b2(0), c1(m - 1), c2(0);
  const cd c = g[1][0], d = g[1][1];
  const double rho = std::sqrt(std::norm(c) + std::norm(d));
  const cd det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  const cd w = rho;
  const cd z = det / rho;
  const cd k11 = std::conj(d) / rho;
  const cd chi = char_power(z, -b2 + half_of(1), -c1 - half_of(1)) * char_power(w, -b1 - half_of(1), -c2 + half_of(1));
  const double zw = std::abs(z / w);
  const double modulus = mod == Modulus::Real ? std::sqrt(zw) : zw;
  return chi * modulus * std::pow(k11, 2 * m);
}

double gl2_minimal_ktype_value(int m, double r, double theta, Modulus mod) {
  const cd g[2][2] = {{1.0, 0.0}, {-r * std::polar(1.0, theta), 1.0}};
  return gl2_f_mu(m, g, mod).real();
}

double gl2_rotation_value(int m, double theta) {
  const cd g[2][2] = {{std::cos(theta), -std::sin(theta)}, {std::sin(theta), std::cos(theta)}};
  return gl2_f_mu(m, g).real();
}

namespace {

template <class F>
double simpson_rec(const F& f, double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) + simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol, int depth) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// fixed panels [0,1], [1,2], [2,4], ... summed in order
template <class F>
double integrate_r(const F& f, double r_max, const QuadratureOptions& opt) {
  double total = 0.0;
  double a = 0.0, b = std::min(1.0, r_max);
  while (a < r_max) {
    const double piece = adaptive_simpson(f, a, b, 0.0, 0);  // coarse estimate sets the scale
    const double tol = std::max(std::abs(piece), 1e-300) * opt.rel_tol;
    total += adaptive_simpson(f, a, b, tol, opt.max_depth);
    a = b;
    b = std::min(2.0 * b, r_max);
  }
  return total;
}

}  // namespace

double gl2_intertwining_numeric(int m, double r_max, const QuadratureOptions& opt) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (opt.fast_theta) {
    auto f = [&](double r) { return gl2_minimal_ktype_value(m, r, 0.0, opt.modulus) * r; };
    return 2.0 * std::numbers::pi * integrate_r(f, r_max, opt);
  }
  const double h = 2.0 * std::numbers::pi / opt.theta_steps;
  double total = 0.0;
  for (int s = 0; s < opt.theta_steps; ++s) {
    const double theta = (s + 0.5) * h;
    auto f = [&](double r) { return gl2_minimal_ktype_value(m, r, theta, opt.modulus) * r; };
    total += h * integrate_r(f, r_max, opt);
  }
  return total;
}

double gl2_tail_bound(int m, double r_max, Modulus mod) {
  const double q = modulus_exponent(m, mod);
  return std::pow(1.0 + r_max * r_max, -(q - 2.0) / 2.0) / (q - 2.0);
}

double gl2_r_max_for(int m, double tail_rel, Modulus mod) {
  const double q = modulus_exponent(m, mod);
  return std::sqrt(std::pow(tail_rel, -2.0 / (q - 2.0)) - 1.0);
}

double gl2_exact(int m, Modulus mod) {
  return 2.0 * std::numbers::pi / (modulus_exponent(m, mod) - 2.0);
}

}  // namespace eiscomb
