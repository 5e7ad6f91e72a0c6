#pragma once

// High-precision reference values for the gamma family, used only by tests.
//
// digamma and log-gamma come straight from MPFR. trigamma and tetragamma are
// Hurwitz zeta values, psi'(x) = zeta(2, x) and psi''(x) = -2 zeta(3, x),
// summed directly for 40 terms with an Euler-Maclaurin tail built from exact
// rational Bernoulli numbers. Everything runs at 200 bits.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstddef>
#include <vector>

namespace psicert::oracle {

inline constexpr mpfr_prec_t kPrecision = 200;

class Real {
 public:
  Real() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }
  explicit Real(double x) { mpfr_init2(v_, kPrecision); mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(const Real& o) { mpfr_init2(v_, kPrecision); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

// B_0 .. B_n by the Akiyama-Tanigawa recurrence.
inline std::vector<mpq_class> bernoulli_numbers(std::size_t n) {
  std::vector<mpq_class> out(n + 1);
  std::vector<mpq_class> a(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    a[m] = mpq_class(1, static_cast<unsigned long>(m + 1));
    for (std::size_t j = m; j >= 1; --j) {
      a[j - 1] = mpq_class(static_cast<unsigned long>(j)) * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out[m] = a[0];
  }
  return out;
}

inline const std::vector<mpq_class>& bernoulli_table() {
  static const std::vector<mpq_class> table = bernoulli_numbers(44);
  return table;
}

/// zeta(s, x) for integer s >= 2 and x > 0.
inline Real hurwitz_zeta(unsigned s, double x) {
  constexpr unsigned kDirect = 40;
  constexpr unsigned kTailTerms = 20;
  Real sum;
  Real term;
  Real base;
  for (unsigned j = 0; j < kDirect; ++j) {
    mpfr_set_d(base.get(), x, MPFR_RNDN);
    mpfr_add_ui(base.get(), base.get(), j, MPFR_RNDN);
    mpfr_pow_si(term.get(), base.get(), -static_cast<long>(s), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  Real y(x);
  mpfr_add_ui(y.get(), y.get(), kDirect, MPFR_RNDN);

  // y^(1-s) / (s-1) + y^(-s) / 2
  mpfr_pow_si(term.get(), y.get(), 1 - static_cast<long>(s), MPFR_RNDN);
  mpfr_div_ui(term.get(), term.get(), s - 1, MPFR_RNDN);
  mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  mpfr_pow_si(term.get(), y.get(), -static_cast<long>(s), MPFR_RNDN);
  mpfr_div_ui(term.get(), term.get(), 2, MPFR_RNDN);
  mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);

  // sum_k B_2k / (2k)! * s (s+1) ... (s+2k-2) * y^(-s-2k+1)
  const auto& bern = bernoulli_table();
  Real coeff;  // rising factorial / factorial, updated incrementally
  mpfr_set_ui(coeff.get(), s, MPFR_RNDN);
  mpfr_div_ui(coeff.get(), coeff.get(), 2, MPFR_RNDN);
  Real bk;
  for (unsigned k = 1; k <= kTailTerms; ++k) {
    if (k > 1) {
      // multiply by (s+2k-3)(s+2k-2) / ((2k-1)(2k))
      mpfr_mul_ui(coeff.get(), coeff.get(), s + 2 * k - 3, MPFR_RNDN);
      mpfr_mul_ui(coeff.get(), coeff.get(), s + 2 * k - 2, MPFR_RNDN);
      mpfr_div_ui(coeff.get(), coeff.get(), (2 * k - 1) * (2 * k), MPFR_RNDN);
    }
    mpfr_set_q(bk.get(), bern[2 * k].get_mpq_t(), MPFR_RNDN);
    mpfr_pow_si(term.get(), y.get(), -static_cast<long>(s + 2 * k - 1), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), bk.get(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), coeff.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  return sum;
}

inline double digamma(double x) {
  Real r(x);
  mpfr_digamma(r.get(), r.get(), MPFR_RNDN);
  return r.to_double();
}

inline double trigamma(double x) { return hurwitz_zeta(2, x).to_double(); }

inline double tetragamma(double x) {
  Real z = hurwitz_zeta(3, x);
  mpfr_mul_si(z.get(), z.get(), -2, MPFR_RNDN);
  return z.to_double();
}

inline double log_gamma(double x) {
  Real r(x);
  mpfr_lngamma(r.get(), r.get(), MPFR_RNDN);
  return r.to_double();
}

/// ln|Gamma(x)| for any non-pole x.
inline double log_abs_gamma(double x) {
  Real r(x);
  int sign = 0;
  mpfr_lgamma(r.get(), &sign, r.get(), MPFR_RNDN);
  return r.to_double();
}

inline double euler_gamma() {
  Real r;
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r.to_double();
}

/// Positive digamma root by bisection on the MPFR digamma down to 1e-17 width.
inline double psi_root() {
  Real lo(1.4);
  Real hi(1.5);
  Real mid;
  Real value;
  for (int i = 0; i < 120; ++i) {
    mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_ui(mid.get(), mid.get(), 2, MPFR_RNDN);
    mpfr_digamma(value.get(), mid.get(), MPFR_RNDN);
    if (mpfr_sgn(value.get()) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid.to_double();
}

}  // namespace psicert::oracle
