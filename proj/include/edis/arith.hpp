#ifndef EDIS_ARITH_HPP_
#define EDIS_ARITH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace edis {

//! R_{a,b} R_{c,d}^-1 in normal form (a > b, c > d), or the zero (empty map).
//! As a partial map on the non-negative integers:
//!   n == b (mod a)  ->  ((n - b) / a) * c + d.
struct ArithElement {
  bool          zero = true;
  std::int64_t  a = 0, b = 0, c = 0, d = 0;

  static ArithElement make(std::int64_t a, std::int64_t b, std::int64_t c,
                           std::int64_t d);
  static ArithElement make_zero() { return ArithElement{}; }
  static ArithElement one() { return make(1, 0, 1, 0); }

  bool is_idempotent() const { return zero || (a == c && b == d); }
  bool operator==(ArithElement const& o) const {
    return zero == o.zero
           && (zero || (a == o.a && b == o.b && c == o.c && d == o.d));
  }
  std::string to_string() const;
};

//! Closed-form product; r is the minimal CRT solution. Throws
//! ArithOverflowError when a resulting parameter exceeds max_param.
ArithElement arith_mul(ArithElement const& x, ArithElement const& y,
                       std::int64_t max_param = std::int64_t(1) << 40);

//! (a,b,c,d) -> (c,d,a,b); zero is self-inverse.
ArithElement arith_inverse(ArithElement const& x);

//! The underlying partial map restricted to inputs {0..bound}; pairs are
//! (n, image), where the image itself may exceed bound.
std::vector<std::pair<std::int64_t, std::int64_t>>
arith_as_map(ArithElement const& x, std::int64_t bound);

//! A separating witness for two non-zero idempotents (a,b) != (a2,b2):
//! a pair e > f with gcd(a,e) | (b-f) XOR gcd(a2,e) | (b2-f).
struct ArithWitness {
  std::int64_t e, f;
};
std::optional<ArithWitness> arith_separate(std::int64_t a, std::int64_t b,
                                           std::int64_t a2, std::int64_t b2,
                                           std::int64_t radius = 8000);

//! Separates every pair of distinct non-zero idempotents with a, a2 <= bound;
//! throws NoWitnessError if the search radius is exhausted.
struct ArithSeparationReport {
  std::int64_t bound;
  std::int64_t pairs_checked;
  std::int64_t max_witness_e;
};
ArithSeparationReport arith_readout_separation(std::int64_t bound,
                                               std::int64_t radius = 8000);

//! Checks arith_mul against composition of the underlying partial maps on
//! {0..truncate}, over every ordered pair of elements with parameters
//! <= max_param. The two sides are computed independently: composition walks
//! the maps, the product comes from the closed form.
struct ArithVerifyReport {
  std::int64_t max_param;
  std::int64_t truncate;
  std::int64_t pairs;
  std::int64_t zero_products;
  std::int64_t mismatches;
};
ArithVerifyReport arith_verify(std::int64_t max_param, std::int64_t truncate,
                               int jobs = 1);

}  // namespace edis
#endif  // EDIS_ARITH_HPP_
