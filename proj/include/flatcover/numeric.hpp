#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace flatcover {

/**
 * Closed interval [lo, hi] of doubles that is guaranteed to contain the
 * true real value. Every operation rounds outward, so a comparison
 * `a.certainly_le(b)` is a proof that the underlying reals satisfy a <= b.
 */
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double x) { return {x, x}; }

  double mid() const { return lo + (hi - lo) / 2; }
  double width() const { return hi - lo; }

  bool certainly_le(const Interval& other) const { return hi <= other.lo; }
  bool certainly_lt(const Interval& other) const { return hi < other.lo; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);

/// Enclosure of an exact rational.
Interval enclose(const mpq_class& q);
inline Interval enclose(const mpz_class& z) { return enclose(mpq_class(z)); }
inline Interval enclose(std::int64_t v) { return enclose(mpq_class(mpz_class(static_cast<long>(v)))); }

// Logarithms. Base 2 is the reporting base everywhere; `ln` appears only
// where a formula is stated with the natural log.
Interval log2(const mpz_class& x);
Interval log2(const mpq_class& x);
Interval log2(const Interval& x);
Interval ln(const mpz_class& x);
Interval ln(const Interval& x);

/// log2(e).
Interval log2_e();
Interval pi();
Interval sqrt(const Interval& x);

/// Natural-log value expressed in bits: ln(x) * log2(e).
Interval nats_to_bits(const Interval& nats);

/// Ceiling of a real known only by its enclosure. When the enclosure
/// straddles an integer, the larger ceiling is returned.
std::int64_t ceil_upper(const Interval& x);

/// ceil(ln(x) * scale) for x >= 1 and scale > 0, evaluated at 256 bits with
/// upward rounding. Never below the true ceiling.
mpz_class ceil_ln_times(const mpz_class& x, const mpq_class& scale);

/// Floor of an exact rational.
mpz_class floor_of(const mpq_class& q);

mpz_class binomial_big(unsigned long n, unsigned long k);
mpz_class binomial_big(const mpz_class& n, unsigned long k);

/// sum_{i=0}^{k} C(n, i).
mpz_class binomial_prefix_sum(unsigned long n, unsigned long k);

std::string to_string(const mpq_class& q);

}  // namespace flatcover
