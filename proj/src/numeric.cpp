#include "flatcover/numeric.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace flatcover {
namespace {

constexpr mpfr_prec_t kPrecision = 256;
constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

// RAII wrapper over one MPFR variable.
class Mpfr {
 public:
  Mpfr() { mpfr_init2(value_, kPrecision); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// Applies a monotone increasing function to each end with the matching
// rounding direction.
Interval apply_increasing(UnaryFn fn, const Interval& x) {
  Mpfr lo;
  Mpfr hi;
  mpfr_set_d(lo.get(), x.lo, MPFR_RNDD);
  mpfr_set_d(hi.get(), x.hi, MPFR_RNDU);
  fn(lo.get(), lo.get(), MPFR_RNDD);
  fn(hi.get(), hi.get(), MPFR_RNDU);
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

Interval apply_increasing_z(UnaryFn fn, const mpz_class& x) {
  Mpfr lo;
  Mpfr hi;
  mpfr_set_z(lo.get(), x.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.get(), x.get_mpz_t(), MPFR_RNDU);
  fn(lo.get(), lo.get(), MPFR_RNDD);
  fn(hi.get(), hi.get(), MPFR_RNDU);
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }

Interval operator-(const Interval& a, const Interval& b) { return {down(a.lo - b.hi), up(a.hi - b.lo)}; }

Interval operator*(const Interval& a, const Interval& b) {
  const double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {down(*std::min_element(std::begin(p), std::end(p))), up(*std::max_element(std::begin(p), std::end(p)))};
}

Interval enclose(const mpq_class& q) {
  Mpfr lo;
  Mpfr hi;
  mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

Interval log2(const mpz_class& x) { return apply_increasing_z(mpfr_log2, x); }

Interval log2(const mpq_class& x) {
  return log2(mpz_class(x.get_num())) - log2(mpz_class(x.get_den()));
}

Interval log2(const Interval& x) { return apply_increasing(mpfr_log2, x); }

Interval ln(const mpz_class& x) { return apply_increasing_z(mpfr_log, x); }

Interval ln(const Interval& x) { return apply_increasing(mpfr_log, x); }

Interval log2_e() {
  // log2(e) = 1 / ln(2).
  Mpfr lo;
  Mpfr hi;
  mpfr_const_log2(lo.get(), MPFR_RNDU);
  mpfr_const_log2(hi.get(), MPFR_RNDD);
  mpfr_ui_div(lo.get(), 1, lo.get(), MPFR_RNDD);
  mpfr_ui_div(hi.get(), 1, hi.get(), MPFR_RNDU);
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

Interval pi() {
  Mpfr lo;
  Mpfr hi;
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

Interval sqrt(const Interval& x) { return apply_increasing(mpfr_sqrt, x); }

mpz_class ceil_ln_times(const mpz_class& x, const mpq_class& scale) {
  Mpfr value;
  Mpfr factor;
  mpfr_set_z(value.get(), x.get_mpz_t(), MPFR_RNDU);
  mpfr_log(value.get(), value.get(), MPFR_RNDU);
  mpfr_set_q(factor.get(), scale.get_mpq_t(), MPFR_RNDU);
  mpfr_mul(value.get(), value.get(), factor.get(), MPFR_RNDU);
  mpfr_ceil(value.get(), value.get());
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), value.get(), MPFR_RNDU);
  return out;
}

Interval nats_to_bits(const Interval& nats) { return nats * log2_e(); }

std::int64_t ceil_upper(const Interval& x) { return static_cast<std::int64_t>(std::ceil(x.hi)); }

mpz_class floor_of(const mpq_class& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

mpz_class binomial_big(unsigned long n, unsigned long k) {
  mpz_class out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class binomial_big(const mpz_class& n, unsigned long k) {
  mpz_class out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

mpz_class binomial_prefix_sum(unsigned long n, unsigned long k) {
  mpz_class total = 0;
  mpz_class term = 1;
  const unsigned long last = std::min(n, k);
  for (unsigned long i = 0; i <= last; ++i) {
    total += term;
    // C(n, i+1) = C(n, i) * (n - i) / (i + 1), exact at every step.
    term = term * (n - i) / (i + 1);
  }
  return total;
}

std::string to_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace flatcover
